#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace hgkit {

/// Node and wall-clock limits for the exhaustive searches. A default-built
/// budget is unlimited.
class SearchBudget {
 public:
  using Clock = std::chrono::steady_clock;

  SearchBudget() = default;

  static SearchBudget unlimited() { return {}; }
  SearchBudget& with_max_nodes(std::uint64_t nodes) {
    max_nodes_ = nodes;
    return *this;
  }
  SearchBudget& with_time_limit(std::chrono::duration<double> limit) {
    deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(limit);
    return *this;
  }

  /// Records one search node; throws LimitExceeded when a limit is passed.
  void charge() {
    ++nodes_;
    if (max_nodes_ && nodes_ > *max_nodes_) fail_nodes();
    if (deadline_ && (nodes_ & 0x3FF) == 0 && Clock::now() > *deadline_) fail_time();
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  [[noreturn]] void fail_nodes() const;
  [[noreturn]] void fail_time() const;

  std::optional<std::uint64_t> max_nodes_;
  std::optional<Clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
};

}  // namespace hgkit
