#include "uecsm/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <thread>

#include "uecsm/angletests.hpp"
#include "uecsm/errors.hpp"
#include "uecsm/tracetests.hpp"

namespace uecsm {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["criterion"] = v.criterion;
  j["pass"] = v.pass;
  j["tol"] = v.tol;
  j["max_residual"] = v.max_residual();
  ordered_json res = ordered_json::object();
  for (const auto& r : v.residuals) res[r.name] = r.value;
  j["residuals"] = res;
  return j;
}

Verdict verdict_from_json(const nlohmann::ordered_json& j) {
  Verdict v;
  v.criterion = j.at("criterion").get<std::string>();
  v.pass = j.at("pass").get<bool>();
  v.tol = j.at("tol").get<double>();
  for (const auto& [name, value] : j.at("residuals").items()) {
    v.residuals.push_back({name, value.get<double>()});
  }
  return v;
}

ordered_json complex_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << x;
  return os.str();
}

std::string fmt_complex(Complex z) {
  std::ostringstream os;
  os << std::setprecision(10) << z.real() + 0.0 << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

double default_tolerance_from_env() {
  if (const char* env = std::getenv("UECSM_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0 && std::isfinite(v)) return v;
  }
  return kDefaultTol;
}

Report run_test(const MatrixDocument& doc, const TestOptions& options) {
  const CMatrix& t = doc.matrix;
  Report rep;
  rep.label = doc.label.value_or("");
  rep.dimension = t.dim();
  const std::size_t n = t.dim();

  // criterion -> UECSM claim, only for criteria that decide it
  std::vector<std::pair<std::string, bool>> claims;

  try {
    Verdict v = uecsm_verdict(t, options.tol.trace);
    claims.emplace_back("uecsm_verdict", v.pass);
    rep.verdicts["uecsm_verdict"] = std::move(v);
  } catch (const Error& e) {
    rep.errors.push_back(e.what());
  }
  try {
    Verdict v = transpose_equivalence(t, options.tol.trace);
    claims.emplace_back("transpose_equivalence", v.pass);
    rep.verdicts["transpose_equivalence"] = std::move(v);
  } catch (const Error& e) {
    rep.errors.push_back(e.what());
  }

  if (n >= 2) {
    try {
      const AngleSuite suite = angle_suite(t, options.tol.angle);
      rep.spectral_status = "ok";
      rep.verdicts["wat"] = suite.wat.verdict;
      rep.verdicts["sat"] = suite.sat.verdict;
      rep.verdicts["lsat"] = suite.lsat.verdict;
      claims.emplace_back("sat", suite.sat.verdict.pass);
      // WAT is necessary in every dimension and sufficient for n <= 3;
      // LSAT implies UECSM for n <= 3.
      if (n <= 3 || !suite.wat.verdict.pass) claims.emplace_back("wat", suite.wat.verdict.pass);
      if (n <= 3 && suite.lsat.verdict.pass) claims.emplace_back("lsat", true);
      if (suite.det3) {
        rep.verdicts["det_criterion_3"] = *suite.det3;
        claims.emplace_back("det_criterion_3", suite.det3->pass);
      }
    } catch (const DegenerateSpectrum&) {
      rep.spectral_status = "degenerate";
    } catch (const Error& e) {
      rep.errors.push_back(e.what());
    }
  }

  if (options.oracle) {
    try {
      OracleOptions o = options.oracle_options;
      o.witness_tol = options.tol.witness;
      const OracleResult r = find_symmetrizer(t, o);
      rep.oracle = OracleSummary{r.status == OracleStatus::Witness ? "witness" : "inconclusive",
                                 r.residual, r.iterations, r.restarts_used};
      if (r.status == OracleStatus::Witness) claims.emplace_back("oracle", true);
    } catch (const Error& e) {
      rep.errors.push_back(e.what());
    }
  }

  for (std::size_t i = 0; i < claims.size(); ++i) {
    for (std::size_t j = i + 1; j < claims.size(); ++j) {
      if (claims[i].second != claims[j].second) rep.conflicts.emplace_back(claims[i].first, claims[j].first);
    }
  }
  for (const char* decisive : {"uecsm_verdict", "sat", "transpose_equivalence"}) {
    const auto it = std::find_if(claims.begin(), claims.end(),
                                 [decisive](const auto& c) { return c.first == decisive; });
    if (it != claims.end()) {
      rep.uecsm = it->second;
      break;
    }
  }
  return rep;
}

int exit_code(const Report& report) {
  if (!report.conflicts.empty() || !report.uecsm) return 2;
  return *report.uecsm ? 0 : 1;
}

nlohmann::ordered_json to_json(const Report& report) {
  ordered_json j;
  j["label"] = report.label;
  j["dimension"] = report.dimension;
  ordered_json verdicts = ordered_json::object();
  for (const auto& [name, v] : report.verdicts) verdicts[name] = verdict_json(v);
  j["verdicts"] = verdicts;
  j["spectral_status"] = report.spectral_status;
  if (report.oracle) {
    j["oracle"] = {{"status", report.oracle->status},
                   {"residual", report.oracle->residual},
                   {"iterations", report.oracle->iterations},
                   {"restarts_used", report.oracle->restarts_used}};
  } else {
    j["oracle"] = nullptr;
  }
  ordered_json conflicts = ordered_json::array();
  for (const auto& [a, b] : report.conflicts) conflicts.push_back({a, b});
  j["conflicts"] = conflicts;
  j["uecsm"] = report.uecsm ? ordered_json(*report.uecsm) : ordered_json(nullptr);
  j["errors"] = report.errors;
  j["exit_code"] = exit_code(report);
  return j;
}

Report report_from_json(const nlohmann::ordered_json& j) {
  Report r;
  r.label = j.at("label").get<std::string>();
  r.dimension = j.at("dimension").get<std::size_t>();
  for (const auto& [name, v] : j.at("verdicts").items()) r.verdicts[name] = verdict_from_json(v);
  r.spectral_status = j.at("spectral_status").get<std::string>();
  if (!j.at("oracle").is_null()) {
    const auto& o = j.at("oracle");
    r.oracle = OracleSummary{o.at("status").get<std::string>(), o.at("residual").get<double>(),
                             o.at("iterations").get<int>(), o.at("restarts_used").get<int>()};
  }
  for (const auto& c : j.at("conflicts")) r.conflicts.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
  if (!j.at("uecsm").is_null()) r.uecsm = j.at("uecsm").get<bool>();
  r.errors = j.at("errors").get<std::vector<std::string>>();
  return r;
}

std::string format_report(const Report& report) {
  std::ostringstream os;
  os << (report.label.empty() ? "<unlabeled>" : report.label) << " (n = " << report.dimension << ")\n";
  for (const auto& [name, v] : report.verdicts) {
    os << "  " << std::left << std::setw(22) << name << (v.pass ? "pass" : "FAIL")
       << "  max residual " << fmt(v.max_residual()) << "  tol " << fmt(v.tol) << "\n";
  }
  os << "  spectrum: " << report.spectral_status << "\n";
  if (report.oracle) {
    os << "  oracle: " << report.oracle->status << " (residual " << fmt(report.oracle->residual)
       << ", restarts " << report.oracle->restarts_used << ")\n";
  }
  for (const auto& e : report.errors) os << "  error: " << e << "\n";
  for (const auto& [a, b] : report.conflicts) os << "  CONFLICT: " << a << " vs " << b << "\n";
  os << "  UECSM: " << (report.uecsm ? (*report.uecsm ? "yes" : "no") : "undecided") << "\n";
  return os.str();
}

ClassifyReport run_classify(const NilpotentParams& p, double tol) {
  ClassifyReport r{p, classify(p, tol), psi_closed_forms(p), uecsm_verdict(build_matrix(p), tol), false};
  r.agrees = r.classification.uecsm == r.psi.pass;
  return r;
}

nlohmann::ordered_json to_json(const ClassifyReport& report) {
  ordered_json j;
  const auto& p = report.params;
  j["params"] = {{"a", complex_json(p.a)}, {"b", complex_json(p.b)}, {"c", complex_json(p.c)},
                 {"d", complex_json(p.d)}, {"e", complex_json(p.e)}, {"f", complex_json(p.f)}};
  j["satisfied"] = report.classification.satisfied;
  j["literal_condition6"] = report.classification.literal_condition6;
  j["uecsm"] = report.classification.uecsm;
  const auto& cf = report.closed_forms;
  j["closed_forms"] = {{"psi4", complex_json(cf.psi4)},       {"psi7", complex_json(cf.psi7)},
                       {"psi1_d0", complex_json(cf.psi1_d0)}, {"psi6_d0", complex_json(cf.psi6_d0)},
                       {"psi1_a0", complex_json(cf.psi1_a0)}, {"psi6_a0", complex_json(cf.psi6_a0)}};
  j["psi_test"] = verdict_json(report.psi);
  j["agrees"] = report.agrees;
  return j;
}

std::string format_classify(const ClassifyReport& report) {
  std::ostringstream os;
  os << "conditions satisfied:";
  if (report.classification.satisfied.empty()) os << " none";
  for (int c : report.classification.satisfied) os << " (" << c << ")";
  os << "\n";
  if (report.classification.literal_condition6 &&
      std::find(report.classification.satisfied.begin(), report.classification.satisfied.end(), 6) ==
          report.classification.satisfied.end()) {
    os << "note: |a| = |f| and |b| = |e| hold but ae != bf\n";
  }
  const auto& cf = report.closed_forms;
  os << "closed forms:\n"
     << "  psi4    = " << fmt_complex(cf.psi4) << "\n"
     << "  psi7    = " << fmt_complex(cf.psi7) << "\n"
     << "  psi1_d0 = " << fmt_complex(cf.psi1_d0) << "\n"
     << "  psi6_d0 = " << fmt_complex(cf.psi6_d0) << "\n"
     << "  psi1_a0 = " << fmt_complex(cf.psi1_a0) << "\n"
     << "  psi6_a0 = " << fmt_complex(cf.psi6_a0) << "\n";
  os << "psi test: " << (report.psi.pass ? "pass" : "FAIL") << " (max residual "
     << fmt(report.psi.max_residual()) << ")\n";
  os << "UECSM: " << (report.classification.uecsm ? "yes" : "no") << "\n";
  if (!report.agrees) os << "CONFLICT: classification disagrees with the psi test\n";
  return os.str();
}

ConstructReport run_construct(const Signature& sig, std::span<const Complex> diag, std::uint64_t seed) {
  ConstructReport r;
  r.wat_not_sat = std::min(sig.k, sig.negative()) >= 2;
  r.construction = r.wat_not_sat ? generate_wat_not_sat(seed, sig, diag) : construct_lsat(seed, sig, diag);
  r.triples = sat_obstruction(r.construction.q);
  r.document.label = "construct sig(" + std::to_string(sig.k) + "," + std::to_string(sig.negative()) +
                     ") seed " + std::to_string(seed);
  r.document.matrix = r.construction.t;
  return r;
}

nlohmann::ordered_json to_json(const ConstructReport& report) {
  ordered_json j;
  const auto& c = report.construction;
  j["signature"] = {c.sig.k, c.sig.negative()};
  ordered_json d = ordered_json::array();
  for (const auto& z : c.d) d.push_back(complex_json(z));
  j["diagonal"] = d;
  j["wat_not_sat"] = report.wat_not_sat;
  j["attempts"] = c.attempts;
  j["isotropic_restarts"] = c.isotropic_restarts;
  j["sat_rejections"] = c.sat_rejections;
  j["conditioning_rejections"] = c.conditioning_rejections;
  ordered_json triples = ordered_json::array();
  for (const auto& tp : report.triples) {
    triples.push_back({{"triple", tp.ijk}, {"value", complex_json(tp.value)}, {"real", tp.real}});
  }
  j["sat_obstruction"] = triples;
  return j;
}

BatchSummary run_batch(const std::filesystem::path& dir, const TestOptions& options) {
  if (!std::filesystem::is_directory(dir)) throw InvalidArgument("batch: not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  BatchSummary summary;
  summary.entries.resize(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      BatchEntry& e = summary.entries[i];
      e.file = files[i].filename().string();
      const auto start = std::chrono::steady_clock::now();
      try {
        e.report = run_test(read_document(files[i]), options);
      } catch (const std::exception& ex) {
        e.error = ex.what();
      }
      e.runtime_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(files.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  for (const auto& e : summary.entries) {
    if (!e.report) {
      ++summary.errors;
      continue;
    }
    if (!e.report->conflicts.empty()) ++summary.conflicts;
    switch (exit_code(*e.report)) {
      case 0:
        ++summary.uecsm;
        break;
      case 1:
        ++summary.not_uecsm;
        break;
      default:
        ++summary.undecided;
    }
  }
  return summary;
}

int exit_code(const BatchSummary& summary) { return summary.conflicts > 0 ? 1 : 0; }

nlohmann::ordered_json to_json(const BatchSummary& summary) {
  ordered_json j;
  ordered_json files = ordered_json::array();
  for (const auto& e : summary.entries) {
    ordered_json f;
    f["file"] = e.file;
    f["runtime_ms"] = e.runtime_ms;
    if (e.report) {
      f["report"] = to_json(*e.report);
    } else {
      f["error"] = e.error;
    }
    files.push_back(f);
  }
  j["files"] = files;
  j["counts"] = {{"uecsm", summary.uecsm},
                 {"not_uecsm", summary.not_uecsm},
                 {"undecided", summary.undecided},
                 {"errors", summary.errors},
                 {"conflicts", summary.conflicts}};
  return j;
}

std::string format_batch(const BatchSummary& summary) {
  std::ostringstream os;
  os << std::left << std::setw(28) << "file" << std::setw(4) << "n" << std::setw(11) << "UECSM"
     << std::setw(11) << "conflicts" << "ms\n";
  for (const auto& e : summary.entries) {
    os << std::setw(28) << e.file;
    if (e.report) {
      const int code = exit_code(*e.report);
      os << std::setw(4) << e.report->dimension << std::setw(11)
         << (code == 0 ? "yes" : code == 1 ? "no" : "undecided") << std::setw(11)
         << e.report->conflicts.size();
    } else {
      os << std::setw(4) << "-" << std::setw(11) << "error" << std::setw(11) << "-";
    }
    os << std::fixed << std::setprecision(1) << e.runtime_ms << "\n";
    os.unsetf(std::ios::fixed);
    if (!e.report) os << "  error: " << e.error << "\n";
  }
  os << "total " << summary.entries.size() << ": " << summary.uecsm << " UECSM, " << summary.not_uecsm
     << " not UECSM, " << summary.undecided << " undecided, " << summary.errors << " errors, "
     << summary.conflicts << " with conflicts\n";
  return os.str();
}

}  // namespace uecsm
