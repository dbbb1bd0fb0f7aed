#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace grpx {

/// Outcome of an exhaustive search. `Exhausted` is a proof of non-existence;
/// `BudgetExceeded` means the answer is unknown.
enum class SearchStatus { Found, Exhausted, BudgetExceeded };

inline std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget";
  }
  return "?";
}

template <class T>
struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<T> value;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::Found; }
  bool exhausted() const { return status == SearchStatus::Exhausted; }
  bool budget_exceeded() const { return status == SearchStatus::BudgetExceeded; }
};

/// Node counter shared by a single search.
class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  /// Charges one node; returns false once the limit is reached.
  bool charge() { return ++used_ <= limit_; }
  bool exceeded() const { return used_ > limit_; }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Default node budget: 1e8, overridable with GRPX_BUDGET.
std::uint64_t default_budget();

}  // namespace grpx
