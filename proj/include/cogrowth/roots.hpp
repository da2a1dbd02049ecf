#pragma once

#include <vector>

#include "cogrowth/polynomial.hpp"

namespace cogrowth {

// A half-open certificate for a single real root: either an exact rational
// root (lo == hi) or an open interval (lo, hi) containing exactly one root.
struct RootInterval {
  Rat lo;
  Rat hi;
  bool exact() const { return lo == hi; }
  double midpoint_double() const { return to_double((lo + hi) / 2); }
};

// Sturm chain of p (p must be nonzero).
std::vector<Poly> sturm_sequence(const Poly &p);

// Number of sign variations of the chain at x / at -inf / at +inf.
int sign_variations_at(const std::vector<Poly> &chain, const Rat &x);
int sign_variations_neg_inf(const std::vector<Poly> &chain);
int sign_variations_pos_inf(const std::vector<Poly> &chain);

// Number of distinct real roots of p (counted without multiplicity).
int count_real_roots(const Poly &p);

// Number of distinct real roots in the open interval (a, b); requires
// p(a) != 0 and p(b) != 0.
int count_roots_in(const Poly &p, const Rat &a, const Rat &b);

// Cauchy bound: all complex roots have |z| <= bound.
Rat cauchy_root_bound(const Poly &p);

// Isolating intervals for every distinct real root of p (any multiplicity),
// sorted ascending, each refined until narrower than `width` or exact.
std::vector<RootInterval> isolate_real_roots(const Poly &p, const Rat &width);

// All integer roots of p in [lo, hi], ascending, found by direct evaluation.
std::vector<long> integer_roots_in(const Poly &p, long lo, long hi);

// Yun square-free decomposition: returns f_1, f_2, ..., f_k (monic) with
// p ~ prod f_i^i and the f_i pairwise coprime and square-free.  Trailing
// entries may be 1 (constant).
std::vector<Poly> squarefree_decomposition(const Poly &p);

// Square-free part of p (product of the f_i), monic.
Poly squarefree_part(const Poly &p);

}  // namespace cogrowth
