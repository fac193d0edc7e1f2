#pragma once

#include <chrono>
#include <optional>

namespace clubplex {

/// Optional wall-clock cutoff, checked cooperatively by the solvers.
class Deadline {
public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline none() { return {}; }
  static Deadline after(double seconds) {
    Deadline d;
    d.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(seconds));
    return d;
  }

  bool bounded() const noexcept { return at_.has_value(); }
  bool expired() const { return at_ && Clock::now() >= *at_; }

private:
  std::optional<Clock::time_point> at_;
};

} // namespace clubplex
