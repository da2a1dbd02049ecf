#pragma once

#include <string>
#include <vector>

#include "cogrowth/cogrowth_series.hpp"
#include "cogrowth/counting.hpp"

namespace cogrowth {

// One atom of the folded spectral measure: a point x = |lambda| / (2 sqrt q)
// carrying the weight of both +lambda and -lambda (the x = 0 atom keeps its
// own weight; there is nothing to fold onto it).
struct SpectralAtom {
  double x = 0.0;
  double weight = 0.0;
  bool x_exactly_one = false;  // |lambda|^2 == 4q: singular for the surrogate
};

// Floating-point view of the spectral data of the normalized random walk.
// Everything here is double precision by design; exactness lives upstream.
struct SpectralData {
  int q = 0;
  double two_sqrt_q = 0.0;
  std::vector<double> moments;  // m_n = W_n / (2 sqrt q)^n for n = 0..n_max
  double rho = 0.0;             // spectral radius (estimate, or top atom)
  double rho0 = 0.0;            // (1 + rho) / 2
  int n_used = 0;               // largest index behind the rho estimate
  bool has_atoms = false;
  std::vector<SpectralAtom> atoms;  // folded, ascending in x; finite case only
  double weight_at_one = 0.0;       // total folded weight at x == 1 exactly
};

// Walk-data view: rho from the even-ratio estimator (root fallback).
SpectralData spectral_data(const CountTable &t);
// Finite-structure view: atoms from the adjacency spectrum; rho is the top
// atom (q + 1) / (2 sqrt q) rather than an estimate.
SpectralData spectral_data(const CountTable &t, const std::vector<EigenAtom> &spectrum);

enum class EstimateMethod { Root, EvenRatio };
std::string to_string(EstimateMethod m);

struct EstimateResult {
  bool ok = false;
  std::string note;  // set when !ok ("insufficient data", "trivial kernel")
  double value = 0.0;
  int n_used = 0;  // even coefficient index the estimate was read from
};

// rho estimators from walk counts: Root = W_{2n}^(1/2n) / (2 sqrt q) at the
// largest available n, EvenRatio = sqrt(W_{2n+2}/W_{2n}) / (2 sqrt q).
// Requires n_max >= 4.
EstimateResult spectral_radius_estimate(const CountTable &t, EstimateMethod m);

// gamma estimators from cogrowth counts: Root = gamma_{2n}^(1/2n), EvenRatio
// = sqrt(gamma_{2n+2}/gamma_{2n}), each at the largest n with positive
// entries.  All even entries zero beyond index 0 means the kernel is trivial
// and no estimate exists.
EstimateResult cogrowth_exponent_estimate(const CountTable &t, EstimateMethod m);

struct RatioRow {
  int n = 0;         // ratio gamma_{2n+2} / gamma_{2n}
  double ratio = 0.0;
  double deviation = 0.0;  // |ratio - prediction|
};

struct RatioLimitResult {
  bool ok = false;
  std::string note;
  double rho = 0.0;
  double prediction = 0.0;  // q (rho + sqrt(rho^2 - 1))^2
  std::vector<RatioRow> rows;
  int window = 0;
  double max_deviation_window = 0.0;  // over the trailing `window` rows
};

// Tabulates the even-coefficient ratios against the predicted limit.
RatioLimitResult ratio_limit_experiment(const CountTable &t, double rho, int window = 5);

enum class Verdict { ConsistentWithAmenable, NonamenableIndicated, Inconclusive, TrivialKernel };
std::string to_string(Verdict v);

struct AmenabilityOptions {
  // |q - gamma_hat| below this counts as converged to q outright.
  double equality_tol = 1e-3;
  // Richardson-extrapolated limit within this of q: consistent with amenable.
  double amen_margin = 0.10;
  // Extrapolated limit below q by more than this: nonamenability indicated.
  double nonamen_margin = 0.20;
  int window = 5;  // trailing extrapolation window
};

struct AmenabilityDiagnostic {
  Verdict verdict = Verdict::Inconclusive;
  double q = 0.0;
  double gamma_hat = 0.0;  // even-ratio cogrowth estimate at largest n
  double gap = 0.0;        // q - gamma_hat
  double rho_hat = 0.0;    // even-ratio spectral radius estimate
  double grigorchuk_value = 0.0;  // sqrt(q) (rho_hat + sqrt(rho_hat^2 - 1))
  double cross_check_gap = 0.0;   // |gamma_hat - grigorchuk_value|
  double extrapolated = 0.0;      // trailing-window Richardson limit of gamma_hat(n)
  int n_used = 0;
  std::string note;  // always flags the finite-n nature of the evidence
};

// Heuristic verdict from finite-n data; never a proof.  The gamma estimates
// converge polynomially for amenable quotients and settle strictly below q
// for nonamenable ones, so the verdict extrapolates the even-ratio sequence
// with a first-order Richardson step before comparing against q.
AmenabilityDiagnostic amenability_diagnostic(const CountTable &t,
                                             const AmenabilityOptions &opts = {});

struct IntegralSplitRow {
  int n = 0;
  double I = 0.0;             // full atomic sum: gamma_{2n} = q^n * I
  double I1 = 0.0;            // atoms with x <= rho0
  double I2 = 0.0;            // atoms with x > rho0
  double I2_surrogate = 0.0;  // same atoms through the surrogate integrand
  double surrogate_deviation = 0.0;  // |I2/I2_surrogate - 1| (quad precision)
  double majorant1 = 0.0;     // 2 (2n+1) (rho0 + sqrt(rho0^2-1))^(2n)
  double excluded_weight = 0.0;  // x == 1 atoms excluded from the surrogate
};

// Atomic evaluation of the split integral representation of gamma_{2n}:
// I = sum_x w(x) [U_{2n}(x) - U_{2n-2}(x)/q], cut at rho0, with the
// surrogate integrand t^{2n} (t^2 - 1/q) / (t^2 - 1), t = x + sqrt(x^2-1),
// replacing the Chebyshev combination above the cut.  Internally evaluated
// in 256-bit floating point: the surrogate agrees with the exact sum to
// relative t^{-4n}, far below double precision at moderate n.
// Requires s.has_atoms and n >= 1.
IntegralSplitRow integral_split_diagnostics(const SpectralData &s, int n);

struct RatioLemmaResult {
  bool pass = false;
  double limit = 0.0;        // max of f on the atoms
  double final_ratio = 0.0;  // ratio at n_max
  double final_gap = 0.0;    // |final_ratio - limit|
  int n_used = 0;
  std::vector<double> ratios;  // ratio_n for n = 0..n_max
};

// Discrete form of the ratio lemma: for a purely atomic measure with weights
// w_i > 0 and a positive function f, sum w f^{n+1} / sum w f^n increases to
// max f.  Values are normalized by max f before powering, so a single atom
// reproduces the limit bit-for-bit at every n.
RatioLemmaResult discrete_ratio_lemma_check(const std::vector<double> &f_values,
                                            const std::vector<double> &weights, int n_max,
                                            double tol = 1e-6);

struct RemarkRow {
  int n = 0;
  double L = 0.0;  // L_n = (gamma_{2n}/W_{2n}) (2 rho / (rho + sqrt(rho^2-1)))^{2n}
};

struct RemarkProbe {
  bool ok = false;
  std::string note;
  bool exact = false;  // L_n evaluated in exact rationals (finite case)
  double rho = 0.0;
  double h_rho0 = 0.0;
  std::vector<RemarkRow> rows;  // n = 1 .. n_max (coefficient index 2n)
  double inf_L = 0.0;
  int inf_at = 0;
  double max_L = 0.0;
  int max_at = 0;
  bool bound_holds = false;  // max_L <= h_rho0 + tol
};

// Observational probe of the normalized ratio L_n against its upper bound
// h(rho0), plus the running infimum (the open lower-bound conjecture).  When
// the data carries exact atoms (finite case: rho = (q+1)/(2 sqrt q)), L_n
// reduces to the exact rational (gamma_{2n}/W_{2n}) ((q+1)/q)^{2n}.
RemarkProbe remark_bound_probe(const CountTable &t, const SpectralData &s, int n_max,
                               double tol = 1e-9);

struct AsymptoticsReport {
  std::string group_id;
  int q = 0;
  int n_max = -1;
  EstimateResult rho_root, rho_ratio;
  EstimateResult gamma_root, gamma_ratio;
  RatioLimitResult ratio_limit;
  AmenabilityDiagnostic amenability;
  bool finite = false;  // atoms available: the finite-only blocks below are set
  std::vector<IntegralSplitRow> integral_rows;
  RatioLemmaResult lemma;
  RemarkProbe remark;
};

// Full diagnostic bundle over one count table.  `spectrum` (from a finite
// structure) unlocks the atom-based blocks; pass nullptr for infinite
// backends.
AsymptoticsReport asymptotics_report(const CountTable &t,
                                     const std::vector<EigenAtom> *spectrum = nullptr,
                                     const AmenabilityOptions &opts = {});

}  // namespace cogrowth
