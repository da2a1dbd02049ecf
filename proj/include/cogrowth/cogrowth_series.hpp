#pragma once

#include <cstddef>
#include <vector>

#include "cogrowth/marked_group.hpp"
#include "cogrowth/polynomial.hpp"
#include "cogrowth/rational_function.hpp"
#include "cogrowth/roots.hpp"

namespace cogrowth {

// Enumerating a group larger than this is almost certainly a mistake for the
// exact-series pipeline (the characteristic polynomial is quartic-cost), so
// it is the default guard; callers may raise it explicitly.
inline constexpr std::size_t kDefaultStructureBudget = 4096;

// Multiplication structure of the finite group generated by the marked
// images, with the adjacency operator of its Cayley multigraph (one edge per
// letter, so the graph is (2r)-regular with multiplicities).
class FiniteStructure {
 public:
  explicit FiniteStructure(const MarkedGroup &g,
                           std::size_t budget = kDefaultStructureBudget);

  int size() const { return static_cast<int>(elements_.size()); }
  int rank() const { return rank_; }
  int q() const { return 2 * rank_ - 1; }
  const std::vector<Element> &elements() const { return elements_; }

  // Entry (i, j) counts the letters c with element_i * image(c) = element_j;
  // symmetric because the letter set is closed under inversion.
  const std::vector<std::vector<Int>> &adjacency() const { return adj_; }

  // Monic characteristic polynomial of the adjacency matrix, computed
  // exactly over the integers.
  const Poly &charpoly() const { return charpoly_; }

 private:
  int rank_ = 0;
  std::vector<Element> elements_;
  std::vector<std::vector<Int>> adj_;
  Poly charpoly_;
};

// One adjacency eigenvalue with multiplicity: exact rational value, or an
// isolating interval when irrational.
struct EigenAtom {
  bool exact = true;
  Rat value;             // meaningful when exact
  RootInterval bracket;  // meaningful when !exact
  int multiplicity = 1;

  double as_double() const {
    return exact ? to_double(value) : bracket.midpoint_double();
  }
};

// All eigenvalues of the adjacency operator (real, since the matrix is
// symmetric), sorted descending; multiplicities sum to |G|.
std::vector<EigenAtom> adjacency_spectrum(const FiniteStructure &fs);

// Exact rational cogrowth generating function gamma(z) of a finite quotient:
// with p the characteristic polynomial of the adjacency operator and
// u = (q z^2 + 1)/z, gamma(z) = (1 - z^2)/(|G| z) * p'(u)/p(u), cleared of
// the u-substitution so that no algebraic numbers ever appear.
RationalFunction cogrowth_series(const FiniteStructure &fs);
RationalFunction cogrowth_series_finite(const MarkedGroup &g,
                                        std::size_t budget = kDefaultStructureBudget);

}  // namespace cogrowth
