#include "cogrowth/cogrowth_series.hpp"

#include <algorithm>
#include <unordered_map>

#include "cogrowth/errors.hpp"

namespace cogrowth {

namespace {

using Matrix = std::vector<std::vector<Int>>;

Int trace(const Matrix &m) {
  Int t(0);
  for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

Matrix mat_mul(const Matrix &a, const Matrix &b) {
  const size_t n = a.size();
  Matrix c(n, std::vector<Int>(n, Int(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// Faddeev-LeVerrier: exact integer characteristic polynomial of an integer
// matrix.  Every division below is exact by construction.
Poly charpoly_of(const Matrix &a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rat> coeffs(static_cast<size_t>(n) + 1, Rat(0));
  coeffs[static_cast<size_t>(n)] = 1;
  if (n == 0) return Poly(coeffs);
  Matrix m = a;
  Int c = -trace(m);
  coeffs[static_cast<size_t>(n - 1)] = Rat(c);
  for (int j = 2; j <= n; ++j) {
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] += c;
    m = mat_mul(a, m);
    c = -trace(m) / j;
    coeffs[static_cast<size_t>(n - j)] = Rat(c);
  }
  return Poly(coeffs);
}

}  // namespace

FiniteStructure::FiniteStructure(const MarkedGroup &g, std::size_t budget)
    : rank_(g.rank()) {
  elements_ = g.generated_subgroup(budget);
  const int n = static_cast<int>(elements_.size());
  std::unordered_map<Element, int, ElementHash> index;
  index.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) index.emplace(elements_[static_cast<size_t>(i)], i);
  adj_.assign(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), Int(0)));
  for (int i = 0; i < n; ++i) {
    for (int code = 0; code < 2 * rank_; ++code) {
      const Element y = g.multiply(elements_[static_cast<size_t>(i)], g.image_of(code));
      const int j = index.at(y);
      adj_[static_cast<size_t>(i)][static_cast<size_t>(j)] += 1;
    }
  }
  charpoly_ = charpoly_of(adj_);
}

std::vector<EigenAtom> adjacency_spectrum(const FiniteStructure &fs) {
  std::vector<EigenAtom> atoms;
  const long bound = 2L * fs.rank();  // all eigenvalues lie in [-2r, 2r]
  const auto factors = squarefree_decomposition(fs.charpoly());
  for (size_t i = 0; i < factors.size(); ++i) {
    const int mult = static_cast<int>(i) + 1;
    Poly f = factors[i];
    if (f.degree() <= 0) continue;
    for (long root : integer_roots_in(f, -bound, bound)) {
      EigenAtom atom;
      atom.exact = true;
      atom.value = Rat(root);
      atom.multiplicity = mult;
      atoms.push_back(atom);
      f = f / (Poly::monomial(1, Rat(1)) - Poly(Rat(root)));
    }
    if (f.degree() > 0) {
      // Monic integer factor with no integer roots: its real roots are
      // irrational, so isolate them.  Width keeps midpoints at double
      // precision.
      const Rat width(1, int_pow(Int(10), 18));
      const auto brackets = isolate_real_roots(f, width);
      if (static_cast<int>(brackets.size()) != f.degree())
        throw CogrowthError("adjacency spectrum: complex eigenvalue of a symmetric matrix");
      for (const auto &br : brackets) {
        EigenAtom atom;
        atom.exact = br.exact();
        if (atom.exact)
          atom.value = br.lo;
        else
          atom.bracket = br;
        atom.multiplicity = mult;
        atoms.push_back(atom);
      }
    }
  }
  int total = 0;
  for (const auto &a : atoms) total += a.multiplicity;
  if (total != fs.size())
    throw CogrowthError("adjacency spectrum: multiplicities do not sum to the group order");
  std::sort(atoms.begin(), atoms.end(),
            [](const EigenAtom &a, const EigenAtom &b) { return a.as_double() > b.as_double(); });
  return atoms;
}

RationalFunction cogrowth_series(const FiniteStructure &fs) {
  const Poly &p = fs.charpoly();
  const Int q(fs.q());
  // gamma(z) = (1-z^2)/(|G| z) * p'(u)/p(u) at u = (q z^2 + 1)/z.  Clearing
  // powers of z turns p(u) into P(z)/z^k and p'(u) into Q(z)/z^(k-1) with
  // polynomial P, Q, leaving gamma = (1-z^2) Q / (|G| P).
  const Poly p_tilde = kernel_lift(p, Rat(q));
  const Poly q_tilde = kernel_lift(p.derivative(), Rat(q));
  const Poly one_minus_z2 = Poly(Rat(1)) - Poly::monomial(2, Rat(1));
  return RationalFunction(one_minus_z2 * q_tilde, p_tilde * Rat(fs.size()));
}

RationalFunction cogrowth_series_finite(const MarkedGroup &g, std::size_t budget) {
  return cogrowth_series(FiniteStructure(g, budget));
}

}  // namespace cogrowth
