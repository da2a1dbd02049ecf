#include "cogrowth/singularity.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "cogrowth/errors.hpp"
#include "cogrowth/roots.hpp"

namespace cogrowth {

namespace {

// Inverse of kernel_lift for H with H(0) = 1 and even degree 2m: the unique
// monic p of degree m with H = kernel_lift(p, q), if it exists.  The peel
// walks ascending powers of z: the z^i coefficient of the running remainder
// is exactly c_(m-i), because the term c_j (qz^2+1)^j z^(m-j) starts at
// z^(m-j) with unit coefficient.
std::optional<Poly> kernel_peel(const Poly &h, const Int &q) {
  const int m = h.degree() / 2;
  const Poly kernel = Poly::monomial(2, Rat(q)) + Poly(Rat(1));
  std::vector<Poly> kernel_pow(static_cast<size_t>(m) + 1);
  kernel_pow[0] = Poly(Rat(1));
  for (int j = 1; j <= m; ++j)
    kernel_pow[static_cast<size_t>(j)] = kernel_pow[static_cast<size_t>(j - 1)] * kernel;
  std::vector<Rat> c(static_cast<size_t>(m) + 1, Rat(0));
  Poly r = h;
  for (int i = 0; i <= m; ++i) {
    const int j = m - i;
    c[static_cast<size_t>(j)] = r[i];
    if (r[i] != 0)
      r = r - kernel_pow[static_cast<size_t>(j)] * Poly::monomial(i, r[i]);
  }
  if (!r.is_zero()) return std::nullopt;
  return Poly(std::move(c));
}

bool has_integer_coeffs(const Poly &p) {
  for (const Rat &c : p.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

struct Candidate {
  int a = 0;
  int b = 0;
  Poly p;
};

// An isolated irrational root of the remainder polynomial, refined until its
// side of +-2 sqrt(q) and its sign are certain.
struct IrrationalRoot {
  RootInterval bracket;
  bool circle = false;  // lambda^2 < 4q
};

// Shrink the isolating interval of the unique root of f in (lo, hi) by one
// bisection step.  f has no rational roots, so midpoints are never roots.
void bisect_bracket(const Poly &f, const std::vector<Poly> &chain, RootInterval &br) {
  const Rat mid = (br.lo + br.hi) / 2;
  if (sign_variations_at(chain, br.lo) - sign_variations_at(chain, mid) == 1)
    br.hi = mid;
  else
    br.lo = mid;
}

// Refine until the bracket lies strictly on one side of zero and of the two
// points +-2 sqrt(q) (tested exactly through the sign of x^2 - 4q), with
// width at most 1/2 so the interval cannot straddle both square roots.
void refine_for_classification(const Poly &f, const std::vector<Poly> &chain,
                               RootInterval &br, const Int &four_q) {
  auto side = [&](const Rat &x) { return sgn(Rat(x * x) - Rat(four_q)); };
  while (br.hi - br.lo > Rat(1, 2) || sgn(br.lo) != sgn(br.hi) ||
         side(br.lo) != side(br.hi) || side(br.lo) == 0) {
    bisect_bracket(f, chain, br);
  }
}

// Resolve the order of a rational point against a bracketed root (the point
// is never the root itself).  Returns true when the root is below pt.
bool bracket_below(const Poly &f, const std::vector<Poly> &chain, RootInterval &br,
                   const Rat &pt) {
  if (br.hi <= pt) return true;
  if (br.lo >= pt) return false;
  if (sign_variations_at(chain, br.lo) - sign_variations_at(chain, pt) == 1) {
    br.hi = pt;
    return true;
  }
  br.lo = pt;
  return false;
}

double pole_double(double lambda, double q, bool plus) {
  const double disc = std::sqrt(lambda * lambda - 4.0 * q);
  return (lambda + (plus ? disc : -disc)) / (2.0 * q);
}

}  // namespace

SingularityReport singularity_analysis(const RationalFunction &gamma, const Int &q) {
  SingularityReport rep;
  rep.q = q;
  rep.split.reason = "analysis failed";
  if (q < 3 || q % 2 == 0) {
    rep.failure = "q must be an odd integer >= 3";
    return rep;
  }
  const Poly &den = gamma.den();
  if (den.degree() == 0) {
    rep.ok = true;
    rep.spectral_poly = Poly(Rat(1));
    rep.split.reason = "no poles";
    return rep;
  }
  if (den[0] == 0) {
    rep.failure = "pole at z = 0";
    return rep;
  }

  const Poly z = Poly::monomial(1, Rat(1));
  const Poly one_minus_z = Poly(Rat(1)) - z;
  const Poly one_plus_z = Poly(Rat(1)) + z;
  const Rat qp1 = Rat(q) + 1;
  const Int four_q = 4 * q;

  // ---- reconstruct the square-free spectral polynomial -------------------
  std::vector<Candidate> hits;
  for (int a = 0; a <= 1; ++a) {
    for (int b = 0; b <= 1; ++b) {
      Poly h = den;
      if (a) h = h * one_minus_z;
      if (b) h = h * one_plus_z;
      if (h.degree() % 2 != 0) continue;
      const Poly hn = h * (Rat(1) / h[0]);
      auto peeled = kernel_peel(hn, q);
      if (!peeled) continue;
      const Poly &p = *peeled;
      if (!has_integer_coeffs(p) || p.leading() != 1) continue;
      if (Poly::gcd(p, p.derivative()).degree() != 0) continue;  // square-free
      if (count_real_roots(p) != p.degree()) continue;
      // Boundary coupling: p must vanish at q+1 exactly when (1-z) was
      // multiplied in, and at -(q+1) exactly when (1+z) was, because those
      // spectral values are the ones whose quadratic splits off (1 -+ z).
      Poly pr = p;
      int na = 0, nb = 0;
      while (pr.degree() > 0 && pr.eval(qp1) == 0) {
        pr = pr / (z - Poly(qp1));
        ++na;
      }
      while (pr.degree() > 0 && pr.eval(-qp1) == 0) {
        pr = pr / (z + Poly(qp1));
        ++nb;
      }
      if (na != a || nb != b) continue;
      if (pr.degree() > 0) {
        const Rat bound = cauchy_root_bound(pr) + 1;
        if (bound > qp1) {
          if (count_roots_in(pr, qp1, bound) > 0) continue;
          if (count_roots_in(pr, -bound, -qp1) > 0) continue;
        }
      }
      hits.push_back(Candidate{a, b, p});
    }
  }
  if (hits.size() != 1) {
    rep.failure = hits.empty()
                      ? "denominator is not a product of spectral kernels"
                      : "ambiguous spectral reconstruction";
    PoleRecord all;
    all.kind = PoleClass::Unexplained;
    all.multiplicity = den.degree();
    rep.unexplained_poles.push_back(all);
    return rep;
  }
  rep.a = hits[0].a;
  rep.b = hits[0].b;
  const Poly p_red = hits[0].p;
  rep.spectral_poly = p_red;

  // Safety: the peel is exact, so the lift must reproduce the denominator.
  {
    Poly h = den;
    if (rep.a) h = h * one_minus_z;
    if (rep.b) h = h * one_plus_z;
    if (kernel_lift(p_red, Rat(q)) * h[0] != h) {
      rep.failure = "internal reconstruction mismatch";
      return rep;
    }
  }

  // ---- roots of p_red ----------------------------------------------------
  if (!q.fits_slong_p()) {
    rep.failure = "q out of supported range";
    return rep;
  }
  const long lbound = mpz_get_si(Int(q + 1).get_mpz_t());
  const std::vector<long> iroots = integer_roots_in(p_red, -lbound, lbound);
  Poly p_rem = p_red;
  for (long r : iroots) p_rem = p_rem / (z - Poly(Rat(r)));

  bool boundary_pair = false;
  const Poly u2m4q = Poly::monomial(2, Rat(1)) - Poly(Rat(four_q));
  if (p_rem.degree() >= 2) {
    const Poly g = Poly::gcd(p_rem, u2m4q);
    if (g.degree() == 2) {
      boundary_pair = true;
      p_rem = p_rem / g;
    } else if (g.degree() == 1) {
      rep.failure = "internal: rational boundary root escaped integer search";
      return rep;
    }
  }

  std::vector<IrrationalRoot> irr;
  std::vector<Poly> rem_chain;
  if (p_rem.degree() > 0) {
    rem_chain = sturm_sequence(p_rem);
    const Rat width(1, int_pow(Int(2), 80));
    for (RootInterval br : isolate_real_roots(p_rem, width)) {
      if (br.exact()) {
        // monic integer polynomial: a rational root would be an integer and
        // integer roots were already divided out
        rep.failure = "internal: unexpected rational root";
        return rep;
      }
      refine_for_classification(p_rem, rem_chain, br, four_q);
      IrrationalRoot ir;
      ir.bracket = br;
      ir.circle = sgn(Rat(br.lo * br.lo) - Rat(four_q)) < 0;
      irr.push_back(ir);
    }
  }

  // ---- dominant spectral value and the cogrowth exponent ------------------
  // The real class (lambda^2 > 4q) always contains the value of largest
  // absolute size when it is nonempty, so the exponent comes from it;
  // otherwise every pole sits on the circle and the exponent is sqrt(q).
  std::optional<Rat> lam_exact;  // largest |lambda| over integer real-class roots
  for (long r : iroots) {
    if (Int(r) * Int(r) <= four_q) continue;
    Rat av(r < 0 ? -r : r);
    if (!lam_exact || av > *lam_exact) lam_exact = av;
  }
  // Largest |lambda| over irrational real-class roots, as a tight interval.
  // Brackets are pushed past +-lam_exact first, so the exact candidate can
  // never fall strictly inside the winning bracket; abs-value brackets that
  // still overlap each other bound the same value and are merged.
  std::optional<RootInterval> lam_br;
  for (auto &ir : irr) {
    if (ir.circle) continue;
    while (ir.bracket.hi - ir.bracket.lo > Rat(1, int_pow(Int(2), 120)))
      bisect_bracket(p_rem, rem_chain, ir.bracket);
    if (lam_exact) {
      (void)bracket_below(p_rem, rem_chain, ir.bracket, *lam_exact);
      (void)bracket_below(p_rem, rem_chain, ir.bracket, -*lam_exact);
    }
    RootInterval abs_br = ir.bracket;
    if (sgn(abs_br.lo) < 0)
      abs_br = RootInterval{Rat(-ir.bracket.hi), Rat(-ir.bracket.lo)};
    if (!lam_br)
      lam_br = abs_br;
    else if (abs_br.lo >= lam_br->hi)
      lam_br = abs_br;
    else if (abs_br.hi > lam_br->lo)
      lam_br = RootInterval{std::min(abs_br.lo, lam_br->lo), std::max(abs_br.hi, lam_br->hi)};
  }
  GammaExponent &ge = rep.gamma_exponent;
  const double qd = to_double(q);
  if (lam_exact || lam_br) {
    const bool use_exact = lam_exact && (!lam_br || *lam_exact >= lam_br->hi);
    if (use_exact) {
      const Rat lam_val = *lam_exact;
      ge.lambda_exact = true;
      ge.lambda_max = lam_val;
      ge.lambda_max_approx = to_double(lam_val);
      const Rat disc = lam_val * lam_val - Rat(four_q);
      Int disc_num = disc.get_num();  // disc is a positive integer here
      if (disc.get_den() == 1 && mpz_perfect_square_p(disc_num.get_mpz_t())) {
        Int s;
        mpz_sqrt(s.get_mpz_t(), disc_num.get_mpz_t());
        ge.exact = true;
        ge.value = (lam_val + Rat(s)) / 2;
        ge.approx = to_double(ge.value);
      } else {
        ge.exact = false;
        const double l = to_double(lam_val);
        ge.approx = (l + std::sqrt(l * l - 4.0 * qd)) / 2.0;
      }
    } else {
      ge.lambda_exact = false;
      ge.lambda_max_approx = lam_br->midpoint_double();
      const double l = ge.lambda_max_approx;
      ge.exact = false;
      ge.approx = (l + std::sqrt(l * l - 4.0 * qd)) / 2.0;
    }
  } else {
    // all poles on the circle: coefficient growth is sqrt(q)^n
    ge.exact = false;
    ge.approx = std::sqrt(qd);
    ge.lambda_exact = false;
    ge.lambda_max_approx = boundary_pair ? 2.0 * std::sqrt(qd) : 0.0;
    if (!boundary_pair) {
      double best = 0.0;
      for (long r : iroots) best = std::max(best, std::abs(static_cast<double>(r)));
      for (const auto &ir : irr) best = std::max(best, std::abs(ir.bracket.midpoint_double()));
      ge.lambda_max_approx = best;
    }
  }

  // ---- pole records --------------------------------------------------------
  const Rat inv_q = Rat(1) / Rat(q);
  auto push_circle_pair = [&](const Rat &lambda) {
    // conjugate pair: roots of q z^2 - lambda z + 1 with lambda^2 < 4q
    const double l = to_double(lambda);
    const double re = l / (2.0 * qd);
    const double im = std::sqrt(4.0 * qd - l * l) / (2.0 * qd);
    for (int s = -1; s <= 1; s += 2) {
      PoleRecord pr;
      pr.kind = PoleClass::Circle;
      pr.exact = false;
      pr.re = re;
      pr.im = s * im;
      pr.modulus_sq = inv_q;
      pr.lambda_exact = true;
      pr.lambda = lambda;
      pr.lambda_approx = l;
      rep.circle_poles.push_back(pr);
    }
  };
  auto push_real_exact = [&](const Rat &value, const Rat &lambda) {
    PoleRecord pr;
    pr.kind = PoleClass::RealInterval;
    pr.exact = true;
    pr.value = value;
    pr.re = to_double(value);
    pr.lambda_exact = true;
    pr.lambda = lambda;
    pr.lambda_approx = to_double(lambda);
    rep.real_poles.push_back(pr);
  };

  for (long r : iroots) {
    const Rat lambda(r);
    const Int r2 = Int(r) * Int(r);
    if (lambda == qp1) {
      push_real_exact(inv_q, lambda);  // the companion root z = 1 is cancelled
    } else if (lambda == -qp1) {
      push_real_exact(-inv_q, lambda);
    } else if (r2 < four_q) {
      push_circle_pair(lambda);
    } else if (r2 == four_q) {
      // double real pole at lambda/(2q), modulus exactly q^(-1/2): circle class
      PoleRecord pr;
      pr.kind = PoleClass::Circle;
      pr.exact = true;
      pr.value = lambda / (2 * Rat(q));
      pr.re = to_double(pr.value);
      pr.modulus_sq = inv_q;
      pr.multiplicity = 2;
      pr.lambda_exact = true;
      pr.lambda = lambda;
      pr.lambda_approx = to_double(lambda);
      rep.circle_poles.push_back(pr);
    } else {
      const Int disc = r2 - four_q;
      if (mpz_perfect_square_p(disc.get_mpz_t())) {
        Int s;
        mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
        push_real_exact((lambda + Rat(s)) / (2 * Rat(q)), lambda);
        push_real_exact((lambda - Rat(s)) / (2 * Rat(q)), lambda);
      } else {
        for (int s = -1; s <= 1; s += 2) {
          PoleRecord pr;
          pr.kind = PoleClass::RealInterval;
          pr.exact = false;
          pr.re = pole_double(to_double(lambda), qd, s > 0);
          pr.lambda_exact = true;
          pr.lambda = lambda;
          pr.lambda_approx = to_double(lambda);
          rep.real_poles.push_back(pr);
        }
      }
    }
  }
  if (boundary_pair) {
    // lambda = +-2 sqrt(q): each gives a double real pole at +-q^(-1/2),
    // modulus exactly q^(-1/2): circle class
    for (int s = -1; s <= 1; s += 2) {
      PoleRecord pr;
      pr.kind = PoleClass::Circle;
      pr.exact = false;
      pr.re = s / std::sqrt(qd);
      pr.modulus_sq = inv_q;
      pr.multiplicity = 2;
      pr.lambda_exact = false;
      pr.lambda_approx = s * 2.0 * std::sqrt(qd);
      rep.circle_poles.push_back(pr);
    }
  }
  for (const auto &ir : irr) {
    const double l = ir.bracket.midpoint_double();
    if (ir.circle) {
      const double re = l / (2.0 * qd);
      const double im = std::sqrt(4.0 * qd - l * l) / (2.0 * qd);
      for (int s = -1; s <= 1; s += 2) {
        PoleRecord pr;
        pr.kind = PoleClass::Circle;
        pr.re = re;
        pr.im = s * im;
        pr.modulus_sq = inv_q;
        pr.lambda_approx = l;
        rep.circle_poles.push_back(pr);
      }
    } else {
      for (int s = -1; s <= 1; s += 2) {
        PoleRecord pr;
        pr.kind = PoleClass::RealInterval;
        pr.re = pole_double(l, qd, s > 0);
        pr.lambda_approx = l;
        rep.real_poles.push_back(pr);
      }
    }
  }

  // Exact interval membership check for exact real poles when the exponent
  // is rational: |z| must lie in [1/gamma, gamma/q].  (For inexact data the
  // membership follows from |lambda| <= lambda_max by monotonicity.)
  if (ge.exact) {
    const Rat lo = Rat(1) / ge.value;
    const Rat hi = ge.value / Rat(q);
    std::vector<PoleRecord> keep;
    for (auto &pr : rep.real_poles) {
      if (pr.exact) {
        Rat av = pr.value < 0 ? Rat(-pr.value) : pr.value;
        if (av < lo || av > hi) {
          pr.kind = PoleClass::Unexplained;
          rep.unexplained_poles.push_back(pr);
          continue;
        }
      }
      keep.push_back(pr);
    }
    rep.real_poles = std::move(keep);
  }

  std::sort(rep.circle_poles.begin(), rep.circle_poles.end(),
            [](const PoleRecord &x, const PoleRecord &y) {
              return x.re != y.re ? x.re < y.re : x.im < y.im;
            });
  std::sort(rep.real_poles.begin(), rep.real_poles.end(),
            [](const PoleRecord &x, const PoleRecord &y) { return x.re < y.re; });

  // ---- gamma0 / gamma1 splitting ------------------------------------------
  rep.ok = rep.unexplained_poles.empty();
  if (!rep.ok && rep.failure.empty()) rep.failure = "real pole outside the admissible intervals";

  bool mixed = false;
  bool rem_circle = false;
  if (!irr.empty()) {
    rem_circle = irr.front().circle;
    for (const auto &ir : irr)
      if (ir.circle != rem_circle) mixed = true;
  }
  if (mixed) {
    rep.split.available = false;
    rep.split.reason = "an irreducible spectral factor mixes circle and interval values";
    return rep;
  }

  Poly d0(Rat(1)), d1(Rat(1));
  const Poly qz_minus_1 = Poly::monomial(1, Rat(q)) - Poly(Rat(1));
  const Poly qz_plus_1 = Poly::monomial(1, Rat(q)) + Poly(Rat(1));
  for (long r : iroots) {
    const Rat lambda(r);
    if (lambda == qp1)
      d1 = d1 * qz_minus_1;
    else if (lambda == -qp1)
      d1 = d1 * qz_plus_1;
    else {
      const Poly block = kernel_lift(z - Poly(lambda), Rat(q));
      if (Int(r) * Int(r) <= four_q)
        d0 = d0 * block;
      else
        d1 = d1 * block;
    }
  }
  if (boundary_pair) d0 = d0 * kernel_lift(u2m4q, Rat(q));
  if (p_rem.degree() > 0) {
    const Poly block = kernel_lift(p_rem, Rat(q));
    if (rem_circle)
      d0 = d0 * block;
    else
      d1 = d1 * block;
  }

  const Poly prod = d0 * d1;
  const Rat scale = prod.leading() / den.leading();
  if (den * scale != prod) {
    rep.split.available = false;
    rep.split.reason = "internal: block product does not match the denominator";
    return rep;
  }
  const Poly n_scaled = gamma.num() * scale;
  auto [poly_part, n_proper] = n_scaled.divmod(prod);
  auto [g, u, v] = Poly::xgcd(d0, d1);
  if (g != Poly(Rat(1))) {
    rep.split.available = false;
    rep.split.reason = "internal: circle and interval blocks share a factor";
    return rep;
  }
  const auto [s0, a0] = (n_proper * v).divmod(d0);
  const auto [s1, b1] = (n_proper * u).divmod(d1);
  if (!(s0 + s1).is_zero()) {
    rep.split.available = false;
    rep.split.reason = "internal: partial fractions left a polynomial remainder";
    return rep;
  }
  if (poly_part.degree() > 0) {
    rep.split.available = false;
    rep.split.reason = "gamma is not of the spectral-measure form";
    return rep;
  }
  const Rat x0 = a0[0] / d0[0];
  const Rat x1 = b1[0] / d1[0];
  const Rat c0 = -x0 / (Rat(q) + 1);
  const Rat c1 = -x1 / (Rat(q) + 1);
  const Rat pp = poly_part.is_zero() ? Rat(0) : poly_part[0];
  if (c0 + c1 != pp) {
    rep.split.available = false;
    rep.split.reason = "gamma is not of the spectral-measure form";
    return rep;
  }
  SeriesSplit &sp = rep.split;
  sp.gamma0 = RationalFunction(Poly(c0)) + RationalFunction(a0, d0);
  sp.gamma1 = RationalFunction(Poly(c1)) + RationalFunction(b1, d1);
  sp.mass0 = Rat(q) * x0 / (Rat(q) + 1);
  sp.mass1 = Rat(q) * x1 / (Rat(q) + 1);
  if (!(sp.gamma0 + sp.gamma1 == gamma)) {
    sp = SeriesSplit{};
    sp.available = false;
    sp.reason = "internal: split does not recompose";
    return rep;
  }
  sp.available = true;
  sp.reason.clear();
  return rep;
}

}  // namespace cogrowth
