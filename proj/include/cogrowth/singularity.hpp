#pragma once

#include <string>
#include <vector>

#include "cogrowth/numeric.hpp"
#include "cogrowth/polynomial.hpp"
#include "cogrowth/rational_function.hpp"

namespace cogrowth {

enum class PoleClass { Circle, RealInterval, Unexplained };

// One pole of gamma(z); a conjugate pair yields two records.
struct PoleRecord {
  PoleClass kind = PoleClass::Unexplained;
  bool exact = false;  // position known as an exact rational (real poles only)
  Rat value;           // exact position when exact
  double re = 0.0;
  double im = 0.0;
  Rat modulus_sq;      // exact |z|^2 for circle-class poles (always 1/q)
  int multiplicity = 1;
  bool lambda_exact = false;  // originating spectral value lambda is rational
  Rat lambda;                 // exact lambda when lambda_exact
  double lambda_approx = 0.0;
};

// The cogrowth exponent gamma = sqrt(q) (rho + sqrt(rho^2 - 1)) derived from
// the dominant spectral value; rational exactly when the discriminant
// lambda^2 - 4q is a perfect square (finite quotients: lambda = q+1, gamma = q).
struct GammaExponent {
  bool exact = false;
  Rat value;  // when exact
  double approx = 0.0;
  bool lambda_exact = false;
  Rat lambda_max;  // when lambda_exact
  double lambda_max_approx = 0.0;
};

// The decomposition gamma = gamma0 + gamma1 into the part with poles on the
// circle |z| = q^(-1/2) and the part with poles on the real intervals.
struct SeriesSplit {
  bool available = false;
  std::string reason;  // why unavailable; empty otherwise
  RationalFunction gamma0;
  RationalFunction gamma1;
  Rat mass0;  // spectral mass carried by the circle part
  Rat mass1;  // spectral mass carried by the interval part
};

struct SingularityReport {
  bool ok = false;
  std::string failure;  // non-empty when !ok
  Int q;
  int a = 0;            // multiplicity of the cancelled (1 - z) factor
  int b = 0;            // multiplicity of the cancelled (1 + z) factor
  Poly spectral_poly;   // reconstructed monic square-free p(u)
  GammaExponent gamma_exponent;
  std::vector<PoleRecord> circle_poles;
  std::vector<PoleRecord> real_poles;
  std::vector<PoleRecord> unexplained_poles;
  SeriesSplit split;

  bool all_explained() const { return ok && unexplained_poles.empty(); }
};

// Classifies every pole of gamma(z) by reconstructing the square-free
// spectral polynomial p(u) from the denominator via the substitution
// u = (q z^2 + 1)/z, then reading each root lambda of p as either a
// conjugate pole pair of modulus exactly q^(-1/2) (lambda^2 <= 4q) or a real
// pole pair multiplying to 1/q (lambda^2 > 4q).  Reports the exact
// gamma^(0)/gamma^(1) splitting when the two classes separate over Q.
SingularityReport singularity_analysis(const RationalFunction &gamma, const Int &q);

}  // namespace cogrowth
