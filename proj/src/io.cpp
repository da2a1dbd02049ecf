#include "cogrowth/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "cogrowth/errors.hpp"

namespace cogrowth {

namespace {

using nlohmann::json;

// Shortest round-trip decimal form; deterministic across runs and platforms
// with IEEE doubles, which keeps artifact bytes reproducible.
std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json counts_to_json(const std::vector<Int> &c) {
  json arr = json::array();
  for (const Int &v : c) arr.push_back(v.get_str());
  return arr;
}

std::vector<Int> counts_from_json(const json &arr, const std::string &what) {
  if (!arr.is_array()) throw IoError("count table: '" + what + "' must be an array");
  std::vector<Int> out;
  out.reserve(arr.size());
  for (const auto &v : arr) {
    try {
      if (v.is_string())
        out.emplace_back(v.get<std::string>(), 10);
      else if (v.is_number_integer())
        out.emplace_back(std::to_string(v.get<long long>()), 10);
      else
        throw std::invalid_argument("not a decimal string");
    } catch (const std::invalid_argument &) {
      throw IoError("count table: bad integer literal in '" + what + "'");
    }
  }
  return out;
}

json poly_to_json(const Poly &p) {
  json arr = json::array();
  for (const Rat &c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

json rational_function_to_json(const RationalFunction &f) {
  return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

const char *pole_class_name(PoleClass k) {
  switch (k) {
    case PoleClass::Circle: return "circle";
    case PoleClass::RealInterval: return "real-interval";
    case PoleClass::Unexplained: return "unexplained";
  }
  return "unexplained";
}

json pole_to_json(const PoleRecord &p) {
  json j{{"kind", pole_class_name(p.kind)},
         {"exact", p.exact},
         {"re", p.re},
         {"im", p.im},
         {"multiplicity", p.multiplicity},
         {"lambda_exact", p.lambda_exact},
         {"lambda_approx", p.lambda_approx}};
  if (p.exact) j["value"] = p.value.get_str();
  if (p.kind == PoleClass::Circle) j["modulus_sq"] = p.modulus_sq.get_str();
  if (p.lambda_exact) j["lambda"] = p.lambda.get_str();
  return j;
}

json estimate_to_json(const EstimateResult &e) {
  json j{{"ok", e.ok}, {"value", e.value}, {"n_used", e.n_used}};
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

}  // namespace

std::string write_count_table_json(const CountTable &t, const Provenance &prov) {
  json j;
  j["format"] = kCountTableFormat;
  j["group"] = json{{"id", t.group_id}, {"rank", t.rank}, {"q", t.q}};
  j["n_max"] = t.n_max;
  if (t.truncated_at.has_value())
    j["truncated_at"] = *t.truncated_at;
  else
    j["truncated_at"] = nullptr;
  j["gamma"] = counts_to_json(t.gamma);
  j["walk"] = counts_to_json(t.walk);
  j["provenance"] = json{{"tool", "cogrowth"},
                         {"version", kToolVersion},
                         {"source", prov.source},
                         {"ball_budget", prov.ball_budget}};
  return j.dump(2) + "\n";
}

CountTable read_count_table_json(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception &e) {
    throw IoError(std::string("count table: invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || j.at("format").get<std::string>() != kCountTableFormat)
      throw IoError(std::string("count table: expected format ") + kCountTableFormat);
    CountTable t;
    const json &g = j.at("group");
    t.group_id = g.at("id").get<std::string>();
    t.rank = g.at("rank").get<int>();
    t.q = g.at("q").get<int>();
    t.n_max = j.at("n_max").get<int>();
    if (j.contains("truncated_at") && !j.at("truncated_at").is_null())
      t.truncated_at = j.at("truncated_at").get<int>();
    t.gamma = counts_from_json(j.at("gamma"), "gamma");
    t.walk = counts_from_json(j.at("walk"), "walk");
    return t;
  } catch (const json::exception &e) {
    throw IoError(std::string("count table: missing or malformed field: ") + e.what());
  }
}

std::string write_count_table_csv(const CountTable &t) {
  std::ostringstream out;
  out << "# cogrowth.count_table.csv v1\n";
  if (t.truncated_at.has_value())
    out << "# truncated_at " << *t.truncated_at << "\n";
  out << "n,gamma_n,walk_n\n";
  const size_t rows = std::max(t.gamma.size(), t.walk.size());
  for (size_t n = 0; n < rows; ++n) {
    out << n << ',';
    if (n < t.gamma.size()) out << t.gamma[n].get_str();
    out << ',';
    if (n < t.walk.size()) out << t.walk[n].get_str();
    out << '\n';
  }
  return out.str();
}

std::string write_count_table_text(const CountTable &t) {
  std::ostringstream out;
  out << "count table: " << t.group_id << " (rank " << t.rank << ", q = " << t.q
      << "), n_max = " << t.n_max << "\n";
  if (t.truncated_at.has_value())
    out << "TRUNCATED: entries valid for n < " << *t.truncated_at
        << " (ball budget exhausted)\n";
  size_t wn = 1, wg = 7, ww = 6;
  for (const Int &v : t.gamma) wg = std::max(wg, v.get_str().size());
  for (const Int &v : t.walk) ww = std::max(ww, v.get_str().size());
  wn = std::max<size_t>(std::to_string(std::max(t.gamma.size(), t.walk.size())).size(), 1);
  auto pad = [](const std::string &s, size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  out << pad("n", wn) << "  " << pad("gamma_n", wg) << "  " << pad("walk_n", ww) << "\n";
  const size_t rows = std::max(t.gamma.size(), t.walk.size());
  for (size_t n = 0; n < rows; ++n) {
    out << pad(std::to_string(n), wn) << "  "
        << pad(n < t.gamma.size() ? t.gamma[n].get_str() : "-", wg) << "  "
        << pad(n < t.walk.size() ? t.walk[n].get_str() : "-", ww) << "\n";
  }
  return out.str();
}

std::string write_verify_report_json(const VerifyReport &r) {
  json checks = json::array();
  for (const auto &c : r.checks) {
    json jc{{"name", c.name},
            {"tag", c.tag},
            {"applicable", c.applicable},
            {"pass", c.pass}};
    if (!c.applicable) jc["skip_reason"] = c.skip_reason;
    if (c.failed_at.has_value())
      jc["failed_at"] = *c.failed_at;
    else
      jc["failed_at"] = nullptr;
    if (!c.residual.empty()) jc["residual"] = c.residual;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(jc);
  }
  json j{{"format", kVerifyReportFormat},
         {"group", r.group_id},
         {"q", r.q},
         {"order", r.order},
         {"pass", r.all_pass()},
         {"checks", checks}};
  return j.dump(2) + "\n";
}

std::string write_verify_report_text(const VerifyReport &r) {
  std::ostringstream out;
  out << "verify report: " << r.group_id << " (q = " << r.q << "), order " << r.order
      << "\n";
  size_t wname = 4, wtag = 3;
  for (const auto &c : r.checks) {
    wname = std::max(wname, c.name.size());
    wtag = std::max(wtag, c.tag.size());
  }
  auto pad = [](const std::string &s, size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  for (const auto &c : r.checks) {
    const char *mark = !c.applicable ? "SKIP" : (c.pass ? "PASS" : "FAIL");
    out << "  [" << mark << "] " << pad(c.name, wname) << "  " << pad(c.tag, wtag);
    if (!c.applicable) {
      out << "  " << c.skip_reason;
    } else if (!c.pass) {
      if (c.failed_at.has_value()) out << "  first failure at order " << *c.failed_at;
      if (!c.residual.empty()) out << "; residual " << c.residual;
      if (!c.detail.empty()) out << "; " << c.detail;
    } else if (!c.detail.empty()) {
      out << "  " << c.detail;
    }
    out << "\n";
  }
  out << "overall: " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string write_singularity_json(const SingularityReport &r, const std::string &group_id) {
  json j;
  j["format"] = kSingularityReportFormat;
  j["group"] = group_id;
  j["q"] = r.q.get_str();
  j["ok"] = r.ok;
  if (!r.failure.empty()) j["failure"] = r.failure;
  j["cancelled_one_minus_z"] = r.a;
  j["cancelled_one_plus_z"] = r.b;
  j["spectral_poly"] = poly_to_json(r.spectral_poly);
  json ge{{"exact", r.gamma_exponent.exact},
          {"approx", r.gamma_exponent.approx},
          {"lambda_exact", r.gamma_exponent.lambda_exact},
          {"lambda_max_approx", r.gamma_exponent.lambda_max_approx}};
  if (r.gamma_exponent.exact) ge["value"] = r.gamma_exponent.value.get_str();
  if (r.gamma_exponent.lambda_exact) ge["lambda_max"] = r.gamma_exponent.lambda_max.get_str();
  j["gamma_exponent"] = ge;
  json circle = json::array(), real = json::array(), unexplained = json::array();
  for (const auto &p : r.circle_poles) circle.push_back(pole_to_json(p));
  for (const auto &p : r.real_poles) real.push_back(pole_to_json(p));
  for (const auto &p : r.unexplained_poles) unexplained.push_back(pole_to_json(p));
  j["circle_poles"] = circle;
  j["real_poles"] = real;
  j["unexplained_poles"] = unexplained;
  json sp{{"available", r.split.available}};
  if (r.split.available) {
    sp["gamma0"] = rational_function_to_json(r.split.gamma0);
    sp["gamma1"] = rational_function_to_json(r.split.gamma1);
    sp["mass0"] = r.split.mass0.get_str();
    sp["mass1"] = r.split.mass1.get_str();
  } else {
    sp["reason"] = r.split.reason;
  }
  j["split"] = sp;
  return j.dump(2) + "\n";
}

std::string write_singularity_text(const SingularityReport &r, const std::string &group_id) {
  std::ostringstream out;
  out << "singularity report: " << group_id << " (q = " << r.q.get_str() << ")\n";
  out << "status: " << (r.ok ? "ok" : ("FAILED: " + r.failure)) << "\n";
  out << "spectral polynomial p(u) = " << r.spectral_poly.to_string("u")
      << "   (cancelled factors: (1-z)^" << r.a << " (1+z)^" << r.b << ")\n";
  out << "cogrowth exponent: ";
  if (r.gamma_exponent.exact)
    out << r.gamma_exponent.value.get_str() << " (exact)";
  else
    out << fmt_double(r.gamma_exponent.approx) << " (approx)";
  if (r.gamma_exponent.lambda_exact)
    out << ", dominant lambda = " << r.gamma_exponent.lambda_max.get_str();
  else
    out << ", dominant lambda ~ " << fmt_double(r.gamma_exponent.lambda_max_approx);
  out << "\n";
  out << "circle poles (|z| = q^{-1/2}): " << r.circle_poles.size() << "\n";
  for (const auto &p : r.circle_poles) {
    out << "  z ~ " << fmt_double(p.re) << (p.im >= 0 ? " + " : " - ")
        << fmt_double(std::abs(p.im)) << "i";
    if (p.multiplicity > 1) out << "  (multiplicity " << p.multiplicity << ")";
    if (p.lambda_exact) out << "  [lambda = " << p.lambda.get_str() << "]";
    out << "\n";
  }
  out << "real poles: " << r.real_poles.size() << "\n";
  for (const auto &p : r.real_poles) {
    if (p.exact)
      out << "  z = " << p.value.get_str() << " (exact)";
    else
      out << "  z ~ " << fmt_double(p.re);
    if (p.lambda_exact) out << "  [lambda = " << p.lambda.get_str() << "]";
    out << "\n";
  }
  if (!r.unexplained_poles.empty())
    out << "UNEXPLAINED poles: " << r.unexplained_poles.size() << "\n";
  if (r.split.available) {
    out << "split: gamma = gamma0 + gamma1 with masses " << r.split.mass0.get_str()
        << " / " << r.split.mass1.get_str() << "\n";
    out << "  gamma0(z) = " << r.split.gamma0.to_string() << "\n";
    out << "  gamma1(z) = " << r.split.gamma1.to_string() << "\n";
  } else {
    out << "split: unavailable (" << r.split.reason << ")\n";
  }
  return out.str();
}

std::string write_asymptotics_json(const AsymptoticsReport &r) {
  json j;
  j["format"] = kAsymptoticsReportFormat;
  j["group"] = r.group_id;
  j["q"] = r.q;
  j["n_max"] = r.n_max;
  j["rho"] = json{{"root", estimate_to_json(r.rho_root)},
                  {"even_ratio", estimate_to_json(r.rho_ratio)}};
  j["gamma"] = json{{"root", estimate_to_json(r.gamma_root)},
                    {"even_ratio", estimate_to_json(r.gamma_ratio)}};
  json rl{{"ok", r.ratio_limit.ok},
          {"rho", r.ratio_limit.rho},
          {"prediction", r.ratio_limit.prediction},
          {"window", r.ratio_limit.window},
          {"max_deviation_window", r.ratio_limit.max_deviation_window}};
  if (!r.ratio_limit.note.empty()) rl["note"] = r.ratio_limit.note;
  json rows = json::array();
  for (const auto &row : r.ratio_limit.rows)
    rows.push_back(json{{"n", row.n}, {"ratio", row.ratio}, {"deviation", row.deviation}});
  rl["rows"] = rows;
  j["ratio_limit"] = rl;
  const auto &am = r.amenability;
  j["amenability"] = json{{"verdict", to_string(am.verdict)},
                          {"q", am.q},
                          {"gamma_hat", am.gamma_hat},
                          {"gap", am.gap},
                          {"rho_hat", am.rho_hat},
                          {"grigorchuk_value", am.grigorchuk_value},
                          {"cross_check_gap", am.cross_check_gap},
                          {"extrapolated", am.extrapolated},
                          {"n_used", am.n_used},
                          {"note", am.note}};
  j["finite"] = r.finite;
  if (r.finite) {
    json irows = json::array();
    for (const auto &row : r.integral_rows)
      irows.push_back(json{{"n", row.n},
                           {"I", row.I},
                           {"I1", row.I1},
                           {"I2", row.I2},
                           {"I2_surrogate", row.I2_surrogate},
                           {"surrogate_deviation", row.surrogate_deviation},
                           {"majorant1", row.majorant1},
                           {"excluded_weight", row.excluded_weight}});
    j["integral_split"] = irows;
    j["lemma"] = json{{"pass", r.lemma.pass},
                      {"limit", r.lemma.limit},
                      {"final_ratio", r.lemma.final_ratio},
                      {"final_gap", r.lemma.final_gap},
                      {"n_used", r.lemma.n_used}};
    json rrows = json::array();
    for (const auto &row : r.remark.rows)
      rrows.push_back(json{{"n", row.n}, {"L", row.L}});
    j["remark"] = json{{"ok", r.remark.ok},
                       {"exact", r.remark.exact},
                       {"rho", r.remark.rho},
                       {"h_rho0", r.remark.h_rho0},
                       {"rows", rrows},
                       {"inf_L", r.remark.inf_L},
                       {"inf_at", r.remark.inf_at},
                       {"max_L", r.remark.max_L},
                       {"max_at", r.remark.max_at},
                       {"bound_holds", r.remark.bound_holds},
                       {"note", r.remark.note}};
  }
  return j.dump(2) + "\n";
}

std::string write_asymptotics_text(const AsymptoticsReport &r) {
  std::ostringstream out;
  out << "asymptotics report: " << r.group_id << " (q = " << r.q << ", n_max = " << r.n_max
      << ")\n";
  auto est_line = [&](const char *label, const EstimateResult &root,
                      const EstimateResult &ratio) {
    out << label << ": ";
    if (root.ok)
      out << "root " << fmt_double(root.value) << " (n=" << root.n_used << ")";
    else
      out << "root unavailable (" << root.note << ")";
    out << "; ";
    if (ratio.ok)
      out << "even-ratio " << fmt_double(ratio.value) << " (n=" << ratio.n_used << ")";
    else
      out << "even-ratio unavailable (" << ratio.note << ")";
    out << "\n";
  };
  est_line("rho estimates  ", r.rho_root, r.rho_ratio);
  est_line("gamma estimates", r.gamma_root, r.gamma_ratio);
  const auto &rl = r.ratio_limit;
  if (rl.ok) {
    out << "ratio limit: prediction q(rho+sqrt(rho^2-1))^2 = " << fmt_double(rl.prediction)
        << "; max deviation over trailing " << rl.window << " rows "
        << fmt_double(rl.max_deviation_window) << "\n";
    const size_t show = std::min<size_t>(rl.rows.size(), 8);
    for (size_t i = rl.rows.size() - show; i < rl.rows.size(); ++i)
      out << "  n=" << rl.rows[i].n << "  gamma_{2n+2}/gamma_{2n} = "
          << fmt_double(rl.rows[i].ratio) << "  deviation " << fmt_double(rl.rows[i].deviation)
          << "\n";
  } else {
    out << "ratio limit: unavailable (" << rl.note << ")\n";
  }
  const auto &am = r.amenability;
  out << "amenability verdict: " << to_string(am.verdict) << "\n";
  out << "  gamma_hat " << fmt_double(am.gamma_hat) << ", gap q - gamma_hat = "
      << fmt_double(am.gap) << ", extrapolated " << fmt_double(am.extrapolated) << " (n="
      << am.n_used << ")\n";
  out << "  rho_hat " << fmt_double(am.rho_hat) << ", Grigorchuk cross-check sqrt(q)(rho+"
      << "sqrt(rho^2-1)) = " << fmt_double(am.grigorchuk_value) << ", gap "
      << fmt_double(am.cross_check_gap) << "\n";
  out << "  note: " << am.note << "\n";
  if (r.finite) {
    out << "integral split (atomic measure): " << r.integral_rows.size() << " rows\n";
    const size_t show = std::min<size_t>(r.integral_rows.size(), 6);
    for (size_t i = r.integral_rows.size() - show; i < r.integral_rows.size(); ++i) {
      const auto &row = r.integral_rows[i];
      out << "  n=" << row.n << "  I=" << fmt_double(row.I) << "  I1=" << fmt_double(row.I1)
          << "  I2=" << fmt_double(row.I2) << "  surrogate dev "
          << fmt_double(row.surrogate_deviation) << "\n";
    }
    out << "ratio lemma: limit " << fmt_double(r.lemma.limit) << ", final ratio "
        << fmt_double(r.lemma.final_ratio) << " at n=" << r.lemma.n_used << " ("
        << (r.lemma.pass ? "converged" : "not converged") << ")\n";
    if (r.remark.ok) {
      out << "remark probe: h(rho0) = " << fmt_double(r.remark.h_rho0) << "; max L_n "
          << fmt_double(r.remark.max_L) << " at n=" << r.remark.max_at << " (bound "
          << (r.remark.bound_holds ? "holds" : "VIOLATED") << "); inf L_n "
          << fmt_double(r.remark.inf_L) << " at n=" << r.remark.inf_at << "\n";
    }
  }
  return out.str();
}

std::string write_asymptotics_csv(const CountTable &t, const AsymptoticsReport &r) {
  std::map<int, const RatioRow *> ratio_by_n;
  for (const auto &row : r.ratio_limit.rows) ratio_by_n[row.n] = &row;
  std::map<int, const IntegralSplitRow *> integral_by_n;
  for (const auto &row : r.integral_rows) integral_by_n[row.n] = &row;
  std::map<int, const RemarkRow *> remark_by_n;
  for (const auto &row : r.remark.rows) remark_by_n[row.n] = &row;

  int last = std::min<int>(t.n_max, static_cast<int>(t.gamma.size()) - 1) / 2;
  std::ostringstream out;
  out << "# cogrowth.asymptotics.csv v1\n";
  out << "n,gamma_2n,ratio,prediction,deviation,I,I1,I2,I2_surrogate,surrogate_deviation,"
         "majorant1,L_n\n";
  for (int n = 1; n <= last; ++n) {
    out << n << ',';
    out << t.gamma[static_cast<size_t>(2 * n)].get_str() << ',';
    if (auto it = ratio_by_n.find(n); it != ratio_by_n.end())
      out << fmt_double(it->second->ratio) << ',' << fmt_double(r.ratio_limit.prediction)
          << ',' << fmt_double(it->second->deviation);
    else
      out << ",,";
    out << ',';
    if (auto it = integral_by_n.find(n); it != integral_by_n.end()) {
      const auto &row = *it->second;
      out << fmt_double(row.I) << ',' << fmt_double(row.I1) << ',' << fmt_double(row.I2)
          << ',' << fmt_double(row.I2_surrogate) << ','
          << fmt_double(row.surrogate_deviation) << ',' << fmt_double(row.majorant1);
    } else {
      out << ",,,,,";
    }
    out << ',';
    if (auto it = remark_by_n.find(n); it != remark_by_n.end())
      out << fmt_double(it->second->L);
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failure: " + path);
  return ss.str();
}

void write_text_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("write failure: " + path);
}

}  // namespace cogrowth
