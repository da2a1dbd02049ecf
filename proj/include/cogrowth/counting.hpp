#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cogrowth/marked_group.hpp"
#include "cogrowth/numeric.hpp"

namespace cogrowth {

inline constexpr std::size_t kDefaultBallBudget = 4'000'000;
inline constexpr std::size_t kDefaultEnumBudget = 10'000'000;

// Exact count sequences for one marked group:
//   gamma[n] = number of freely reduced words of length n evaluating to the
//              identity (cogrowth coefficients),
//   walk[n]  = number of all words of length n over the 2r letters
//              evaluating to the identity (return counts; the random-walk
//              value is walk[n] / (2 sqrt q)^n).
// When a ball budget interrupts the computation, entries are valid for
// n < *truncated_at and absent beyond.
struct CountTable {
  std::string group_id;
  int rank = 0;
  int q = 0;
  int n_max = -1;
  std::vector<Int> gamma;
  std::vector<Int> walk;
  std::optional<int> truncated_at;

  bool complete() const { return !truncated_at.has_value(); }
};

// Full table via the transfer dynamic programs (parallel kernels when built
// with OpenMP; exact integer arithmetic makes results scheduling-independent).
// On budget exhaustion returns the partial table with truncated_at set.
CountTable count_table(const MarkedGroup &g, int n_max,
                       std::size_t ball_budget = kDefaultBallBudget);

// gamma_0..gamma_{n_max} by DP; throws BallBudgetExceeded instead of
// truncating.
std::vector<Int> gamma_dp(const MarkedGroup &g, int n_max,
                          std::size_t ball_budget = kDefaultBallBudget);

// walk_0..walk_{n_max} by DP; throws BallBudgetExceeded instead of
// truncating.
std::vector<Int> walk_counts(const MarkedGroup &g, int n_max,
                             std::size_t ball_budget = kDefaultBallBudget);

// Oracle: direct enumeration of all reduced words of length n.  Guarded by
// an enumeration budget (number of words visited).
Int gamma_bruteforce(const MarkedGroup &g, int n,
                     std::size_t enum_budget = kDefaultEnumBudget);

// Oracle: direct enumeration of all (2r)^n unreduced words of length n.
Int walk_bruteforce(const MarkedGroup &g, int n,
                    std::size_t enum_budget = kDefaultEnumBudget);

namespace serial {
// Reference single-threaded implementations with identical contracts;
// kept for differential testing and benchmarking of the parallel kernels.
CountTable count_table(const MarkedGroup &g, int n_max,
                       std::size_t ball_budget = kDefaultBallBudget);
std::vector<Int> gamma_dp(const MarkedGroup &g, int n_max,
                          std::size_t ball_budget = kDefaultBallBudget);
std::vector<Int> walk_counts(const MarkedGroup &g, int n_max,
                             std::size_t ball_budget = kDefaultBallBudget);
}  // namespace serial

}  // namespace cogrowth
