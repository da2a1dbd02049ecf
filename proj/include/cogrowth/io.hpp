#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cogrowth/asymptotics.hpp"
#include "cogrowth/counting.hpp"
#include "cogrowth/singularity.hpp"

namespace cogrowth {

inline constexpr const char kToolVersion[] = "0.1.0";
inline constexpr const char kCountTableFormat[] = "cogrowth.count_table.v1";
inline constexpr const char kVerifyReportFormat[] = "cogrowth.verify_report.v1";
inline constexpr const char kSingularityReportFormat[] = "cogrowth.singularity_report.v1";
inline constexpr const char kAsymptoticsReportFormat[] = "cogrowth.asymptotics_report.v1";

// Recorded alongside a count table so a reader can tell how it was produced.
struct Provenance {
  std::string source;  // preset id or spec-file path
  std::size_t ball_budget = 0;
};

// Count-table artifact: counts are decimal strings (arbitrary precision),
// truncation is explicit.  The reader checks structure only; values are
// deliberately not re-validated, so downstream identity checks see exactly
// what the file says.
std::string write_count_table_json(const CountTable &t, const Provenance &prov);
CountTable read_count_table_json(const std::string &text);
std::string write_count_table_csv(const CountTable &t);
std::string write_count_table_text(const CountTable &t);

// One verification check as run by the verify pipeline.
struct VerifyCheck {
  std::string name;  // grigorchuk | chebyshev | functional | singularities
  std::string tag;   // display tag of the identity the check exercises
  bool applicable = true;
  std::string skip_reason;  // when !applicable
  bool pass = false;
  std::optional<int> failed_at;
  std::string residual;  // exact rational residual, when meaningful
  std::string detail;
};

struct VerifyReport {
  std::string group_id;
  int q = 0;
  int order = 0;  // series order the checks ran to
  std::vector<VerifyCheck> checks;

  bool all_pass() const {
    for (const auto &c : checks)
      if (c.applicable && !c.pass) return false;
    return true;
  }
};

std::string write_verify_report_json(const VerifyReport &r);
std::string write_verify_report_text(const VerifyReport &r);

// Singularity reports serialize rational functions as exact coefficient
// string lists (numerator, denominator) plus the classified pole records.
std::string write_singularity_json(const SingularityReport &r, const std::string &group_id);
std::string write_singularity_text(const SingularityReport &r, const std::string &group_id);

std::string write_asymptotics_json(const AsymptoticsReport &r);
std::string write_asymptotics_text(const AsymptoticsReport &r);
// Plot-ready CSV: one row per even index 2n, joining the ratio table with
// the finite-only diagnostics where they exist (empty cells otherwise).
std::string write_asymptotics_csv(const CountTable &t, const AsymptoticsReport &r);

// Whole-file helpers; throw IoError on failure.
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &content);

}  // namespace cogrowth
