#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace gixsat {

// Resource limits (memory, oracle cap) distinct from UNSAT.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TimeoutError : public ResourceError {
 public:
  TimeoutError() : ResourceError("time limit exceeded") {}
};

class Deadline {
 public:
  Deadline() = default;
  static Deadline after(double seconds) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(seconds));
    return d;
  }
  bool expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }
  void check() const {
    if (expired()) throw TimeoutError();
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace gixsat
