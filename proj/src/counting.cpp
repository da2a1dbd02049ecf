#include "cogrowth/counting.hpp"

#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cogrowth {

namespace {

// Layer maps of the two transfer dynamic programs.
//   RMap: element -> per-last-letter counts of reduced words reaching it.
//   WMap: element -> count of all words reaching it.
using RMap = std::unordered_map<Element, std::vector<Int>, ElementHash>;
using WMap = std::unordered_map<Element, Int, ElementHash>;

// One non-backtracking expansion step for a single state.  Appending letter d
// is allowed after every last letter except d's inverse, so the count arriving
// with last letter d is (total - counts[inverse(d)]).
void expand_reduced_state(const MarkedGroup &g, const Element &y, const std::vector<Int> &counts,
                          RMap &out) {
  const int m = 2 * g.rank();
  Int total = 0;
  for (const Int &c : counts) total += c;
  for (int d = 0; d < m; ++d) {
    Int contrib = total - counts[static_cast<std::size_t>(inverse_code(d))];
    if (sgn(contrib) == 0) continue;
    Element dest = g.multiply(y, g.image_of(d));
    auto it = out.find(dest);
    if (it == out.end()) it = out.emplace(std::move(dest), std::vector<Int>(m)).first;
    it->second[static_cast<std::size_t>(d)] += contrib;
  }
}

void expand_walk_state(const MarkedGroup &g, const Element &y, const Int &count, WMap &out) {
  const int m = 2 * g.rank();
  for (int d = 0; d < m; ++d) {
    Element dest = g.multiply(y, g.image_of(d));
    out[std::move(dest)] += count;
  }
}

void merge_into(RMap &dst, RMap &src) {
  for (auto it = src.begin(); it != src.end();) {
    auto node = src.extract(it++);
    auto found = dst.find(node.key());
    if (found == dst.end()) {
      dst.insert(std::move(node));
    } else {
      for (std::size_t c = 0; c < found->second.size(); ++c)
        found->second[c] += node.mapped()[c];
    }
  }
}

void merge_into(WMap &dst, WMap &src) {
  for (auto it = src.begin(); it != src.end();) {
    auto node = src.extract(it++);
    auto found = dst.find(node.key());
    if (found == dst.end()) {
      dst.insert(std::move(node));
    } else {
      found->second += node.mapped();
    }
  }
}

RMap expand_reduced(const MarkedGroup &g, const RMap &cur, bool parallel) {
  RMap out;
#ifdef _OPENMP
  if (parallel && cur.size() >= 256) {
    std::vector<const std::pair<const Element, std::vector<Int>> *> entries;
    entries.reserve(cur.size());
    for (const auto &e : cur) entries.push_back(&e);
#pragma omp parallel
    {
      RMap local;
#pragma omp for schedule(dynamic, 64) nowait
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(entries.size()); ++i) {
        expand_reduced_state(g, entries[static_cast<std::size_t>(i)]->first,
                             entries[static_cast<std::size_t>(i)]->second, local);
      }
#pragma omp critical
      merge_into(out, local);
    }
    return out;
  }
#endif
  (void)parallel;
  for (const auto &kv : cur) expand_reduced_state(g, kv.first, kv.second, out);
  return out;
}

WMap expand_walk(const MarkedGroup &g, const WMap &cur, bool parallel) {
  WMap out;
#ifdef _OPENMP
  if (parallel && cur.size() >= 256) {
    std::vector<const std::pair<const Element, Int> *> entries;
    entries.reserve(cur.size());
    for (const auto &e : cur) entries.push_back(&e);
#pragma omp parallel
    {
      WMap local;
#pragma omp for schedule(dynamic, 64) nowait
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(entries.size()); ++i) {
        expand_walk_state(g, entries[static_cast<std::size_t>(i)]->first,
                          entries[static_cast<std::size_t>(i)]->second, local);
      }
#pragma omp critical
      merge_into(out, local);
    }
    return out;
  }
#endif
  (void)parallel;
  for (const auto &kv : cur) expand_walk_state(g, kv.first, kv.second, out);
  return out;
}

// Pairing readout.  A reduced identity word of length a+b splits uniquely as
// u (length a) followed by v (length b); with x := v^{-1} (also reduced, same
// evaluation as u) the reducedness of the junction is exactly "last letter of
// x differs from last letter of u".  Summing over the meeting element y:
//   gamma_{a+b} = sum_y [ S_a(y) S_b(y) - sum_c g_a(y,c) g_b(y,c) ].
Int gamma_pair(const RMap &a, const RMap &b) {
  const RMap &small = a.size() <= b.size() ? a : b;
  const RMap &large = a.size() <= b.size() ? b : a;
  Int total = 0;
  for (const auto &kv : small) {
    auto it = large.find(kv.first);
    if (it == large.end()) continue;
    const auto &av = kv.second;
    const auto &bv = it->second;
    Int sa = 0, sb = 0, dot = 0;
    for (std::size_t c = 0; c < av.size(); ++c) {
      sa += av[c];
      sb += bv[c];
      dot += av[c] * bv[c];
    }
    total += sa * sb - dot;
  }
  return total;
}

// walk_{a+b} = sum_y c_a(y) c_b(y), using that reversal-inversion gives
// c_b(y^{-1}) = c_b(y).
Int walk_pair(const WMap &a, const WMap &b) {
  const WMap &small = a.size() <= b.size() ? a : b;
  const WMap &large = a.size() <= b.size() ? b : a;
  Int total = 0;
  for (const auto &kv : small) {
    auto it = large.find(kv.first);
    if (it == large.end()) continue;
    total += kv.second * it->second;
  }
  return total;
}

CountTable run_counts(const MarkedGroup &g, int n_max, std::size_t ball_budget, bool parallel) {
  if (n_max < 0) throw GroupSpecError("n_max must be nonnegative");
  CountTable t;
  t.group_id = g.id();
  t.rank = g.rank();
  t.q = g.q();
  t.n_max = n_max;
  t.gamma.assign(static_cast<std::size_t>(n_max) + 1, Int(0));
  t.walk.assign(static_cast<std::size_t>(n_max) + 1, Int(0));
  t.gamma[0] = 1;
  t.walk[0] = 1;
  if (n_max == 0) return t;

  const int m = 2 * g.rank();
  const Element e = g.identity_element();

  std::unordered_set<Element, ElementHash> seen;
  auto note_layer = [&](auto const &layer) {
    for (const auto &kv : layer) seen.insert(kv.first);
    return seen.size() <= ball_budget;
  };

  // Layer 1 of both programs.
  RMap curR;
  for (int c = 0; c < m; ++c) {
    Element dest = g.image_of(c);
    auto it = curR.find(dest);
    if (it == curR.end()) it = curR.emplace(std::move(dest), std::vector<Int>(m)).first;
    it->second[static_cast<std::size_t>(c)] += 1;
  }
  WMap prevW;
  prevW.emplace(e, Int(1));
  WMap curW = expand_walk(g, prevW, parallel);
  seen.insert(e);
  RMap prevR;

  auto truncate_at = [&](int first_missing) {
    t.truncated_at = first_missing;
    t.gamma.resize(static_cast<std::size_t>(first_missing));
    t.walk.resize(static_cast<std::size_t>(first_missing));
    return t;
  };

  if (!note_layer(curR) || !note_layer(curW)) return truncate_at(1);

  if (auto it = curR.find(e); it != curR.end()) {
    for (const Int &c : it->second) t.gamma[1] += c;
  }
  t.walk[1] = walk_pair(prevW, curW);
  if (n_max >= 2) {
    t.gamma[2] = gamma_pair(curR, curR);
    t.walk[2] = walk_pair(curW, curW);
  }

  const int layers = (n_max + 1) / 2;
  for (int k = 2; k <= layers; ++k) {
    RMap nextR = expand_reduced(g, curR, parallel);
    WMap nextW = expand_walk(g, curW, parallel);
    if (!note_layer(nextR) || !note_layer(nextW)) return truncate_at(2 * k - 1);
    prevR = std::move(curR);
    curR = std::move(nextR);
    prevW = std::move(curW);
    curW = std::move(nextW);
    const int odd = 2 * k - 1;
    if (odd <= n_max) {
      t.gamma[static_cast<std::size_t>(odd)] = gamma_pair(prevR, curR);
      t.walk[static_cast<std::size_t>(odd)] = walk_pair(prevW, curW);
    }
    if (2 * k <= n_max) {
      t.gamma[static_cast<std::size_t>(2 * k)] = gamma_pair(curR, curR);
      t.walk[static_cast<std::size_t>(2 * k)] = walk_pair(curW, curW);
    }
  }
  return t;
}

bool default_parallel() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace

CountTable count_table(const MarkedGroup &g, int n_max, std::size_t ball_budget) {
  return run_counts(g, n_max, ball_budget, default_parallel());
}

std::vector<Int> gamma_dp(const MarkedGroup &g, int n_max, std::size_t ball_budget) {
  CountTable t = run_counts(g, n_max, ball_budget, default_parallel());
  if (!t.complete()) throw BallBudgetExceeded(ball_budget);
  return t.gamma;
}

std::vector<Int> walk_counts(const MarkedGroup &g, int n_max, std::size_t ball_budget) {
  CountTable t = run_counts(g, n_max, ball_budget, default_parallel());
  if (!t.complete()) throw BallBudgetExceeded(ball_budget);
  return t.walk;
}

namespace serial {

CountTable count_table(const MarkedGroup &g, int n_max, std::size_t ball_budget) {
  return run_counts(g, n_max, ball_budget, false);
}

std::vector<Int> gamma_dp(const MarkedGroup &g, int n_max, std::size_t ball_budget) {
  CountTable t = run_counts(g, n_max, ball_budget, false);
  if (!t.complete()) throw BallBudgetExceeded(ball_budget);
  return t.gamma;
}

std::vector<Int> walk_counts(const MarkedGroup &g, int n_max, std::size_t ball_budget) {
  CountTable t = run_counts(g, n_max, ball_budget, false);
  if (!t.complete()) throw BallBudgetExceeded(ball_budget);
  return t.walk;
}

}  // namespace serial

Int gamma_bruteforce(const MarkedGroup &g, int n, std::size_t enum_budget) {
  if (n < 0) throw GroupSpecError("word length must be nonnegative");
  if (count_reduced(g.rank(), n) > Int(static_cast<unsigned long>(enum_budget)))
    throw EnumerationBudgetExceeded(enum_budget);
  if (n == 0) return 1;
  const int m = 2 * g.rank();
  Int hits = 0;
  std::vector<Element> partial(static_cast<std::size_t>(n) + 1);
  partial[0] = g.identity_element();
  Word w(static_cast<std::size_t>(n));
  auto rec = [&](auto &&self, int pos) -> void {
    if (pos == n) {
      if (g.is_identity(partial[static_cast<std::size_t>(n)])) ++hits;
      return;
    }
    for (int c = 0; c < m; ++c) {
      if (pos > 0 && c == inverse_code(w[static_cast<std::size_t>(pos - 1)])) continue;
      w[static_cast<std::size_t>(pos)] = c;
      partial[static_cast<std::size_t>(pos) + 1] =
          g.multiply(partial[static_cast<std::size_t>(pos)], g.image_of(c));
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return hits;
}

Int walk_bruteforce(const MarkedGroup &g, int n, std::size_t enum_budget) {
  if (n < 0) throw GroupSpecError("word length must be nonnegative");
  Int words = int_pow(Int(2 * g.rank()), static_cast<unsigned long>(n));
  if (words > Int(static_cast<unsigned long>(enum_budget)))
    throw EnumerationBudgetExceeded(enum_budget);
  if (n == 0) return 1;
  const int m = 2 * g.rank();
  Int hits = 0;
  std::vector<Element> partial(static_cast<std::size_t>(n) + 1);
  partial[0] = g.identity_element();
  auto rec = [&](auto &&self, int pos) -> void {
    if (pos == n) {
      if (g.is_identity(partial[static_cast<std::size_t>(n)])) ++hits;
      return;
    }
    for (int c = 0; c < m; ++c) {
      partial[static_cast<std::size_t>(pos) + 1] =
          g.multiply(partial[static_cast<std::size_t>(pos)], g.image_of(c));
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return hits;
}

}  // namespace cogrowth
