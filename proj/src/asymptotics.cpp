#include "cogrowth/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cogrowth {

namespace {

constexpr mp_bitcnt_t kQuadBits = 256;

double log_ratio(const Int &num, const Int &den) { return log2_of(num) - log2_of(den); }

// U_m(x) in extended precision.  For x > 1 the closed form through
// t = x + sqrt(x^2 - 1) is exact and cheap at any m; on [0, 1] the closed
// form would need complex arithmetic, and the three-term recurrence is
// stable there.
mpf_class cheb_u_quad(long m, const mpf_class &x) {
  if (m < 0) return mpf_class(0, kQuadBits);
  if (x > 1) {
    const mpf_class s = sqrt(mpf_class(x * x - 1, kQuadBits));
    const mpf_class t = x + s;
    mpf_class tp(0, kQuadBits);
    mpf_pow_ui(tp.get_mpf_t(), t.get_mpf_t(), static_cast<unsigned long>(m) + 1);
    const mpf_class tn = 1 / tp;
    return (tp - tn) / (t - 1 / t);
  }
  mpf_class prev(1, kQuadBits);  // U_0
  if (m == 0) return prev;
  mpf_class cur(2 * x, kQuadBits);  // U_1
  for (long k = 2; k <= m; ++k) {
    mpf_class next(2 * x * cur - prev, kQuadBits);
    prev = cur;
    cur = next;
  }
  return cur;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

// Largest n with 2n + 2 <= limit and gamma_{2n}, gamma_{2n+2} > 0, together
// with the full list of usable even-ratio sample points.
struct EvenRatioSamples {
  std::vector<int> n;        // ratio gamma_{2n+2}/gamma_{2n} exists
  std::vector<double> value; // sqrt of that ratio
};

// Truncated tables carry fewer entries than n_max + 1; never index past them.
int top_index(const std::vector<Int> &c, int n_max) {
  return std::min(n_max, static_cast<int>(c.size()) - 1);
}

EvenRatioSamples even_ratio_samples(const std::vector<Int> &c, int n_max) {
  EvenRatioSamples s;
  n_max = top_index(c, n_max);
  for (int n = 1; 2 * n + 2 <= n_max; ++n) {
    if (sgn(c[static_cast<size_t>(2 * n)]) <= 0 ||
        sgn(c[static_cast<size_t>(2 * n + 2)]) <= 0)
      continue;
    s.n.push_back(n);
    s.value.push_back(std::exp2(
        log_ratio(c[static_cast<size_t>(2 * n + 2)], c[static_cast<size_t>(2 * n)]) / 2.0));
  }
  return s;
}

}  // namespace

std::string to_string(EstimateMethod m) {
  return m == EstimateMethod::Root ? "root" : "even_ratio";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ConsistentWithAmenable: return "consistent-with-amenable";
    case Verdict::NonamenableIndicated: return "nonamenable-indicated";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::TrivialKernel: return "trivial-kernel";
  }
  return "inconclusive";
}

SpectralData spectral_data(const CountTable &t) {
  SpectralData s;
  s.q = t.q;
  s.two_sqrt_q = 2.0 * std::sqrt(static_cast<double>(t.q));
  const double lg = std::log2(s.two_sqrt_q);
  s.moments.reserve(t.walk.size());
  for (size_t n = 0; n < t.walk.size(); ++n)
    s.moments.push_back(sgn(t.walk[n]) == 0
                            ? 0.0
                            : std::exp2(log2_of(t.walk[n]) - static_cast<double>(n) * lg));
  EstimateResult est = spectral_radius_estimate(t, EstimateMethod::EvenRatio);
  if (!est.ok) est = spectral_radius_estimate(t, EstimateMethod::Root);
  if (est.ok) {
    s.rho = est.value;
    s.n_used = est.n_used;
  }
  s.rho0 = (1.0 + s.rho) / 2.0;
  return s;
}

SpectralData spectral_data(const CountTable &t, const std::vector<EigenAtom> &spectrum) {
  SpectralData s = spectral_data(t);
  Int order(0);
  for (const auto &a : spectrum) order += a.multiplicity;
  if (sgn(order) <= 0) throw std::invalid_argument("spectral_data: empty spectrum");
  const Rat four_q(4 * t.q);
  struct Folded {
    double x;
    double w;
    bool at_one;
  };
  std::vector<Folded> folded;
  for (const auto &a : spectrum) {
    const double x = std::fabs(a.as_double()) / s.two_sqrt_q;
    const double w = to_double(Rat(Int(a.multiplicity), order));
    const bool at_one =
        (a.exact && Rat(a.value * a.value) == four_q) || std::fabs(x - 1.0) < 1e-15;
    folded.push_back(Folded{x, w, at_one});
  }
  std::sort(folded.begin(), folded.end(),
            [](const Folded &l, const Folded &r) { return l.x < r.x; });
  s.atoms.clear();
  for (const auto &f : folded) {
    if (!s.atoms.empty() && f.x - s.atoms.back().x <= 1e-9) {
      s.atoms.back().weight += f.w;
      s.atoms.back().x_exactly_one = s.atoms.back().x_exactly_one || f.at_one;
    } else {
      s.atoms.push_back(SpectralAtom{f.x, f.w, f.at_one});
    }
  }
  s.has_atoms = true;
  s.weight_at_one = 0.0;
  for (const auto &a : s.atoms)
    if (a.x_exactly_one) s.weight_at_one += a.weight;
  s.rho = s.atoms.back().x;  // exact top atom (q+1)/(2 sqrt q)
  s.rho0 = (1.0 + s.rho) / 2.0;
  s.n_used = 0;
  return s;
}

EstimateResult spectral_radius_estimate(const CountTable &t, EstimateMethod m) {
  EstimateResult r;
  if (t.n_max < 4 || t.walk.size() < 5) {
    r.note = "insufficient data";
    return r;
  }
  const double scale = 2.0 * std::sqrt(static_cast<double>(t.q));
  if (m == EstimateMethod::Root) {
    const int limit = top_index(t.walk, t.n_max);
    int n = limit - limit % 2;
    while (n >= 2 && sgn(t.walk[static_cast<size_t>(n)]) <= 0) n -= 2;
    if (n < 2) {
      r.note = "insufficient data";
      return r;
    }
    r.ok = true;
    r.value = root_as_double(t.walk[static_cast<size_t>(n)], static_cast<unsigned>(n)) / scale;
    r.n_used = n;
    return r;
  }
  const EvenRatioSamples s = even_ratio_samples(t.walk, t.n_max);
  if (s.n.empty()) {
    r.note = "insufficient data";
    return r;
  }
  r.ok = true;
  r.value = s.value.back() / scale;
  r.n_used = 2 * s.n.back() + 2;
  return r;
}

EstimateResult cogrowth_exponent_estimate(const CountTable &t, EstimateMethod m) {
  EstimateResult r;
  if (t.n_max < 4 || t.gamma.size() < 5) {
    r.note = "insufficient data";
    return r;
  }
  const int limit = top_index(t.gamma, t.n_max);
  bool any = false;
  for (int n = 2; n <= limit; n += 2)
    if (sgn(t.gamma[static_cast<size_t>(n)]) > 0) any = true;
  if (!any) {
    r.note = "trivial kernel";
    return r;
  }
  if (m == EstimateMethod::Root) {
    int n = limit - limit % 2;
    while (n >= 2 && sgn(t.gamma[static_cast<size_t>(n)]) <= 0) n -= 2;
    r.ok = true;
    r.value = root_as_double(t.gamma[static_cast<size_t>(n)], static_cast<unsigned>(n));
    r.n_used = n;
    return r;
  }
  const EvenRatioSamples s = even_ratio_samples(t.gamma, t.n_max);
  if (s.n.empty()) {
    r.note = "insufficient data";
    return r;
  }
  r.ok = true;
  r.value = s.value.back();
  r.n_used = 2 * s.n.back() + 2;
  return r;
}

RatioLimitResult ratio_limit_experiment(const CountTable &t, double rho, int window) {
  RatioLimitResult res;
  res.rho = rho;
  res.window = window;
  const double s = std::sqrt(std::max(rho * rho - 1.0, 0.0));
  res.prediction = static_cast<double>(t.q) * (rho + s) * (rho + s);
  if (rho < 1.0) {
    res.note = "rho estimate below 1; prediction clamped";
  }
  const int limit = top_index(t.gamma, t.n_max);
  for (int n = 1; 2 * n + 2 <= limit; ++n) {
    const Int &a = t.gamma[static_cast<size_t>(2 * n)];
    const Int &b = t.gamma[static_cast<size_t>(2 * n + 2)];
    if (sgn(a) <= 0 || sgn(b) <= 0) continue;
    RatioRow row;
    row.n = n;
    row.ratio = std::exp2(log_ratio(b, a));
    row.deviation = std::fabs(row.ratio - res.prediction);
    res.rows.push_back(row);
  }
  if (res.rows.empty()) {
    res.note = res.note.empty() ? "no usable even coefficients" : res.note;
    return res;
  }
  res.ok = true;
  const size_t take = std::min(res.rows.size(), static_cast<size_t>(std::max(window, 1)));
  for (size_t i = res.rows.size() - take; i < res.rows.size(); ++i)
    res.max_deviation_window = std::max(res.max_deviation_window, res.rows[i].deviation);
  return res;
}

AmenabilityDiagnostic amenability_diagnostic(const CountTable &t,
                                             const AmenabilityOptions &opts) {
  AmenabilityDiagnostic d;
  d.q = static_cast<double>(t.q);
  d.note = "finite-n evidence only; never a proof";
  bool any = false;
  for (int n = 2; n <= top_index(t.gamma, t.n_max); n += 2)
    if (sgn(t.gamma[static_cast<size_t>(n)]) > 0) any = true;
  if (!any) {
    d.verdict = Verdict::TrivialKernel;
    d.gap = d.q;
    d.note = "all even cogrowth coefficients vanish: the kernel is trivial";
    return d;
  }

  const EstimateResult rho = spectral_radius_estimate(t, EstimateMethod::EvenRatio);
  if (rho.ok) {
    d.rho_hat = rho.value;
    const double s = std::sqrt(std::max(d.rho_hat * d.rho_hat - 1.0, 0.0));
    d.grigorchuk_value = std::sqrt(d.q) * (d.rho_hat + s);
  }

  const EvenRatioSamples g = even_ratio_samples(t.gamma, t.n_max);
  if (g.n.empty()) {
    d.verdict = Verdict::Inconclusive;
    d.note = "insufficient data for an estimate; " + d.note;
    return d;
  }
  d.gamma_hat = g.value.back();
  d.n_used = 2 * g.n.back() + 2;
  d.gap = d.q - d.gamma_hat;
  d.cross_check_gap = std::fabs(d.gamma_hat - d.grigorchuk_value);

  if (std::fabs(d.gap) <= opts.equality_tol) {
    d.verdict = Verdict::ConsistentWithAmenable;
    d.extrapolated = d.gamma_hat;
    return d;
  }

  // Richardson step g*_n = n g_n - (n-1) g_{n-1} removes a c/n error term
  // exactly and shrinks a geometric one, so amenable quotients (polynomial
  // approach to q) and nonamenable ones (limit strictly below q) separate.
  std::vector<double> richardson;
  for (size_t i = 1; i < g.n.size(); ++i) {
    if (g.n[i] != g.n[i - 1] + 1) continue;
    const double n = static_cast<double>(g.n[i]);
    richardson.push_back(n * g.value[i] - (n - 1.0) * g.value[i - 1]);
  }
  if (richardson.size() < 3) {
    d.verdict = Verdict::Inconclusive;
    d.note = "insufficient data for trend extrapolation; " + d.note;
    return d;
  }
  const size_t take = std::min(richardson.size(),
                               static_cast<size_t>(std::max(opts.window, 1)));
  d.extrapolated = median(std::vector<double>(richardson.end() - static_cast<long>(take),
                                              richardson.end()));
  if (d.extrapolated >= d.q - opts.amen_margin)
    d.verdict = Verdict::ConsistentWithAmenable;
  else if (d.extrapolated <= d.q - opts.nonamen_margin)
    d.verdict = Verdict::NonamenableIndicated;
  else
    d.verdict = Verdict::Inconclusive;
  return d;
}

IntegralSplitRow integral_split_diagnostics(const SpectralData &s, int n) {
  if (!s.has_atoms) throw std::invalid_argument("integral_split_diagnostics: no atoms");
  if (n < 1) throw std::invalid_argument("integral_split_diagnostics: n must be >= 1");
  IntegralSplitRow row;
  row.n = n;
  const unsigned long uq = static_cast<unsigned long>(s.q);
  mpf_class I1(0, kQuadBits), I2(0, kQuadBits), It2(0, kQuadBits);
  for (const auto &atom : s.atoms) {
    const mpf_class x(atom.x, kQuadBits);
    const mpf_class w(atom.weight, kQuadBits);
    const mpf_class comb =
        cheb_u_quad(2L * n, x) - cheb_u_quad(2L * n - 2, x) / uq;
    if (atom.x <= s.rho0) {
      I1 += w * comb;
      continue;
    }
    I2 += w * comb;
    if (atom.x_exactly_one || atom.x <= 1.0) {
      row.excluded_weight += atom.weight;
      continue;
    }
    const mpf_class t = x + sqrt(mpf_class(x * x - 1, kQuadBits));
    mpf_class tp(0, kQuadBits);
    mpf_pow_ui(tp.get_mpf_t(), t.get_mpf_t(), 2 * static_cast<unsigned long>(n));
    It2 += w * tp * (t * t - mpf_class(1, kQuadBits) / uq) / (t * t - 1);
  }
  row.I1 = I1.get_d();
  row.I2 = I2.get_d();
  row.I = row.I1 + row.I2;
  row.I2_surrogate = It2.get_d();
  if (sgn(It2) != 0) {
    const mpf_class dev = abs(I2 / It2 - 1);
    row.surrogate_deviation = dev.get_d();
  } else {
    row.surrogate_deviation = std::numeric_limits<double>::quiet_NaN();
  }
  const double t0 = s.rho0 + std::sqrt(std::max(s.rho0 * s.rho0 - 1.0, 0.0));
  row.majorant1 = 2.0 * (2.0 * n + 1.0) * std::pow(t0, 2.0 * n);
  return row;
}

RatioLemmaResult discrete_ratio_lemma_check(const std::vector<double> &f_values,
                                            const std::vector<double> &weights, int n_max,
                                            double tol) {
  if (f_values.empty() || f_values.size() != weights.size())
    throw std::invalid_argument("discrete_ratio_lemma_check: bad atom lists");
  for (size_t i = 0; i < f_values.size(); ++i)
    if (!(f_values[i] > 0.0) || !(weights[i] > 0.0))
      throw std::invalid_argument("discrete_ratio_lemma_check: atoms must be positive");
  if (n_max < 0) throw std::invalid_argument("discrete_ratio_lemma_check: n_max < 0");
  RatioLemmaResult res;
  res.limit = *std::max_element(f_values.begin(), f_values.end());
  res.n_used = n_max;
  std::vector<double> fhat(f_values.size());
  for (size_t i = 0; i < f_values.size(); ++i) fhat[i] = f_values[i] / res.limit;
  std::vector<double> p(f_values.size(), 1.0);  // fhat^n
  res.ratios.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    double den = 0.0, num = 0.0;
    for (size_t i = 0; i < fhat.size(); ++i) {
      den += weights[i] * p[i];
      num += weights[i] * p[i] * fhat[i];
      p[i] *= fhat[i];
    }
    res.ratios.push_back(res.limit * num / den);
  }
  res.final_ratio = res.ratios.back();
  res.final_gap = std::fabs(res.final_ratio - res.limit);
  res.pass = res.final_gap <= tol;
  return res;
}

RemarkProbe remark_bound_probe(const CountTable &t, const SpectralData &s, int n_max,
                               double tol) {
  RemarkProbe p;
  p.rho = s.rho;
  const double s0 = std::sqrt(std::max(s.rho0 * s.rho0 - 1.0, 0.0));
  const double t0 = s.rho0 + s0;
  if (s0 > 0.0)
    p.h_rho0 = (t0 * t0 - 1.0 / static_cast<double>(s.q)) / (2.0 * s0 * t0);
  else
    p.h_rho0 = std::numeric_limits<double>::infinity();
  p.exact = s.has_atoms;

  const Rat exact_step = p.exact ? rat_pow(Rat(Int(t.q) + 1, Int(t.q)), 2) : Rat(0);
  Rat exact_factor(1);
  const double sr = std::sqrt(std::max(s.rho * s.rho - 1.0, 0.0));
  const double lg_step = 2.0 * std::log2(2.0 * s.rho / (s.rho + sr));
  double lg_factor = 0.0;

  const int limit = std::min(top_index(t.gamma, t.n_max), top_index(t.walk, t.n_max));
  const int last = std::min(n_max, limit / 2);
  for (int n = 1; n <= last; ++n) {
    exact_factor *= exact_step;
    lg_factor += lg_step;
    const Int &g = t.gamma[static_cast<size_t>(2 * n)];
    const Int &w = t.walk[static_cast<size_t>(2 * n)];
    RemarkRow row;
    row.n = n;
    if (sgn(g) == 0 || sgn(w) == 0) {
      row.L = 0.0;
    } else if (p.exact) {
      row.L = to_double(Rat(g, w) * exact_factor);
    } else {
      row.L = std::exp2(log_ratio(g, w) + lg_factor);
    }
    p.rows.push_back(row);
  }
  if (p.rows.empty()) {
    p.note = "no even coefficients available";
    return p;
  }
  p.ok = true;
  p.inf_L = p.rows.front().L;
  p.max_L = p.rows.front().L;
  p.inf_at = p.max_at = p.rows.front().n;
  for (const auto &row : p.rows) {
    if (row.L < p.inf_L) {
      p.inf_L = row.L;
      p.inf_at = row.n;
    }
    if (row.L > p.max_L) {
      p.max_L = row.L;
      p.max_at = row.n;
    }
  }
  p.bound_holds = p.max_L <= p.h_rho0 + tol;
  p.note = "observational probe; compared in floating point";
  return p;
}

AsymptoticsReport asymptotics_report(const CountTable &t,
                                     const std::vector<EigenAtom> *spectrum,
                                     const AmenabilityOptions &opts) {
  AsymptoticsReport rep;
  rep.group_id = t.group_id;
  rep.q = t.q;
  rep.n_max = t.n_max;
  rep.rho_root = spectral_radius_estimate(t, EstimateMethod::Root);
  rep.rho_ratio = spectral_radius_estimate(t, EstimateMethod::EvenRatio);
  rep.gamma_root = cogrowth_exponent_estimate(t, EstimateMethod::Root);
  rep.gamma_ratio = cogrowth_exponent_estimate(t, EstimateMethod::EvenRatio);

  SpectralData sd = spectrum != nullptr ? spectral_data(t, *spectrum) : spectral_data(t);
  rep.ratio_limit = ratio_limit_experiment(t, sd.rho, opts.window);
  rep.amenability = amenability_diagnostic(t, opts);

  if (spectrum != nullptr) {
    rep.finite = true;
    const int split_last = std::min(t.n_max / 2, 20);
    for (int n = 1; n <= split_last; ++n)
      rep.integral_rows.push_back(integral_split_diagnostics(sd, n));
    std::vector<double> f, w;
    for (const auto &a : sd.atoms) {
      if (a.x > 0.0) {
        f.push_back(a.x);
        w.push_back(a.weight);
      }
    }
    if (!f.empty()) rep.lemma = discrete_ratio_lemma_check(f, w, 40);
    rep.remark = remark_bound_probe(t, sd, t.n_max / 2);
  }
  return rep;
}

}  // namespace cogrowth
