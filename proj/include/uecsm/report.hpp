#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "uecsm/constructors.hpp"
#include "uecsm/document.hpp"
#include "uecsm/nilpotent4.hpp"
#include "uecsm/oracle.hpp"
#include "uecsm/verdict.hpp"

namespace uecsm {

struct Tolerances {
  double trace = kDefaultTol;
  double angle = kDefaultTol;
  double witness = kDefaultWitnessTol;

  /// Uniform tolerance for the criteria; the witness threshold keeps its default.
  static Tolerances uniform(double tol) { return {tol, tol, kDefaultWitnessTol}; }
};

/// Reads UECSM_TOL; falls back to kDefaultTol when unset or unparsable.
double default_tolerance_from_env();

struct TestOptions {
  Tolerances tol;
  bool oracle = false;
  OracleOptions oracle_options;
};

struct OracleSummary {
  std::string status;  // "witness" | "inconclusive"
  double residual = 0.0;
  int iterations = 0;
  int restarts_used = 0;
};

struct Report {
  std::string label;
  std::size_t dimension = 0;
  std::map<std::string, Verdict> verdicts;
  std::string spectral_status = "not_run";  // "ok" | "degenerate" | "not_run"
  std::optional<OracleSummary> oracle;
  std::vector<std::pair<std::string, std::string>> conflicts;
  std::optional<bool> uecsm;
  std::vector<std::string> errors;
};

/// Runs every criterion applicable to the matrix and records where the
/// criteria that decide UECSM disagree. Conflicts are never resolved.
Report run_test(const MatrixDocument& doc, const TestOptions& options = {});

/// 0 = UECSM, 1 = not UECSM, 2 = undecided or conflicting.
int exit_code(const Report& report);

nlohmann::ordered_json to_json(const Report& report);
Report report_from_json(const nlohmann::ordered_json& j);
std::string format_report(const Report& report);

struct ClassifyReport {
  NilpotentParams params;
  NilpotentClassification classification;
  PsiClosedForms closed_forms;
  Verdict psi;
  bool agrees = false;
};

ClassifyReport run_classify(const NilpotentParams& p, double tol = kDefaultTol);
nlohmann::ordered_json to_json(const ClassifyReport& report);
std::string format_classify(const ClassifyReport& report);

struct ConstructReport {
  Construction construction;
  std::vector<TripleProduct> triples;
  bool wat_not_sat = false;  // true when generated with SAT rejection
  MatrixDocument document;
};

/// WAT-not-SAT generator when both cones have dimension >= 2, otherwise a
/// plain LSAT construction (always UECSM for signature (n-1, 1)).
ConstructReport run_construct(const Signature& sig, std::span<const Complex> diag, std::uint64_t seed);
nlohmann::ordered_json to_json(const ConstructReport& report);

struct BatchEntry {
  std::string file;
  std::optional<Report> report;
  std::string error;
  double runtime_ms = 0.0;
};

struct BatchSummary {
  std::vector<BatchEntry> entries;  // sorted by file name
  int uecsm = 0;
  int not_uecsm = 0;
  int undecided = 0;
  int errors = 0;
  int conflicts = 0;
};

/// Processes every *.json file in dir concurrently; results are ordered by
/// file name regardless of completion order.
BatchSummary run_batch(const std::filesystem::path& dir, const TestOptions& options = {});

/// Nonzero iff some file produced a conflict.
int exit_code(const BatchSummary& summary);

nlohmann::ordered_json to_json(const BatchSummary& summary);
std::string format_batch(const BatchSummary& summary);

}  // namespace uecsm
