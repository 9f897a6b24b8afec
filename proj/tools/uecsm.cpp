#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "uecsm/errors.hpp"
#include "uecsm/report.hpp"

namespace {

using uecsm::Complex;

// "re" or "re:im"
Complex parse_complex(const std::string& s) {
  const auto colon = s.find(':');
  std::size_t used = 0;
  try {
    const std::string re = s.substr(0, colon);
    const double x = std::stod(re, &used);
    if (used != re.size()) throw uecsm::ParseError("bad number: " + s);
    if (colon == std::string::npos) return {x, 0.0};
    const std::string im = s.substr(colon + 1);
    const double y = std::stod(im, &used);
    if (used != im.size()) throw uecsm::ParseError("bad number: " + s);
    return {x, y};
  } catch (const std::logic_error&) {
    throw uecsm::ParseError("bad number: " + s);
  }
}

std::vector<Complex> parse_list(const std::string& s) {
  std::vector<Complex> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
  return out;
}

struct Common {
  std::optional<double> tol;
  std::optional<double> tol_trace;
  std::optional<double> tol_angle;
  std::optional<double> tol_witness;
  bool json = false;
  bool oracle = false;
  std::uint64_t seed = uecsm::OracleOptions{}.seed;

  uecsm::TestOptions options() const {
    auto t = uecsm::Tolerances::uniform(tol.value_or(uecsm::default_tolerance_from_env()));
    if (tol_trace) t.trace = *tol_trace;
    if (tol_angle) t.angle = *tol_angle;
    if (tol_witness) t.witness = *tol_witness;
    uecsm::TestOptions o;
    o.tol = t;
    o.oracle = oracle;
    o.oracle_options.seed = seed;
    return o;
  }
};

void add_tolerance_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--tol", c.tol, "tolerance for every criterion (default 1e-8 or $UECSM_TOL)");
  cmd->add_option("--tol-trace", c.tol_trace, "tolerance for the trace criteria");
  cmd->add_option("--tol-angle", c.tol_angle, "tolerance for WAT, SAT, LSAT and the det criterion");
  cmd->add_option("--tol-witness", c.tol_witness, "oracle witness threshold (default 1e-6)");
  cmd->add_flag("--json", c.json, "machine-readable output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether a complex matrix is unitarily equivalent to a complex symmetric matrix"};
  app.require_subcommand(1);

  Common common;
  int code = 2;

  std::string file;
  auto* test = app.add_subcommand("test", "run every applicable criterion on a matrix file");
  test->add_option("file", file, "matrix document")->required();
  add_tolerance_flags(test, common);
  test->add_flag("--oracle", common.oracle, "also search for a symmetrizing unitary");
  test->add_option("--seed", common.seed, "oracle seed");

  std::string params;
  auto* classify = app.add_subcommand("classify-nilpotent", "classify a 4x4 nilpotent upper-triangular matrix");
  classify->add_option("--params", params, "a,b,c,d,e,f with entries re or re:im")->required();
  add_tolerance_flags(classify, common);

  std::string sig_text;
  std::string diag_text;
  std::string out;
  std::uint64_t construct_seed = 0;
  auto* construct = app.add_subcommand("construct", "build T = Q D Q^-1 from an indefinite Gram-Schmidt Q");
  construct->add_option("--sig", sig_text, "k,n-k")->required();
  construct->add_option("--diag", diag_text, "n distinct eigenvalues (default -1,0,1,...)");
  construct->add_option("--seed", construct_seed, "random seed");
  construct->add_option("--out", out, "write the matrix document here");
  construct->add_flag("--json", common.json, "machine-readable output");

  std::string dir;
  auto* batch = app.add_subcommand("batch", "test every *.json document in a directory");
  batch->add_option("dir", dir, "directory")->required();
  add_tolerance_flags(batch, common);
  batch->add_flag("--oracle", common.oracle, "also run the oracle on every file");
  batch->add_option("--seed", common.seed, "oracle seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*test) {
      uecsm::Report rep;
      try {
        rep = uecsm::run_test(uecsm::read_document(file), common.options());
      } catch (const uecsm::ParseError& e) {
        if (common.json) {
          nlohmann::ordered_json j{{"file", file}, {"error", e.what()}, {"exit_code", 2}};
          std::cout << j.dump(2) << "\n";
        }
        std::cerr << "ParseError: " << e.what() << "\n";
        return 2;
      }
      if (common.json) {
        std::cout << uecsm::to_json(rep).dump(2) << "\n";
      } else {
        std::cout << uecsm::format_report(rep);
      }
      code = uecsm::exit_code(rep);
    } else if (*classify) {
      const auto values = parse_list(params);
      if (values.size() != 6) throw uecsm::ParseError("--params needs six values a,b,c,d,e,f");
      const uecsm::NilpotentParams p{values[0], values[1], values[2], values[3], values[4], values[5]};
      const auto rep = uecsm::run_classify(p, common.options().tol.trace);
      if (common.json) {
        std::cout << uecsm::to_json(rep).dump(2) << "\n";
      } else {
        std::cout << uecsm::format_classify(rep);
      }
      code = !rep.agrees ? 2 : rep.classification.uecsm ? 0 : 1;
    } else if (*construct) {
      const auto sv = parse_list(sig_text);
      if (sv.size() != 2 || sv[0].imag() != 0 || sv[1].imag() != 0) throw uecsm::ParseError("--sig expects k,n-k");
      const int k = static_cast<int>(sv[0].real());
      const int neg = static_cast<int>(sv[1].real());
      if (k != sv[0].real() || neg != sv[1].real() || k < 0 || neg < 0) throw uecsm::ParseError("--sig expects integers");
      const uecsm::Signature sig(k, k + neg);
      std::vector<Complex> diag;
      if (diag_text.empty()) {
        for (int i = 0; i < sig.n; ++i) diag.emplace_back(i - 1.0, 0.0);
      } else {
        diag = parse_list(diag_text);
      }
      const auto rep = uecsm::run_construct(sig, diag, construct_seed);
      if (!out.empty()) uecsm::save_document(out, rep.document);
      if (common.json) {
        auto j = uecsm::to_json(rep);
        j["out"] = out.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(out);
        std::cout << j.dump(2) << "\n";
      } else {
        if (out.empty()) std::cout << uecsm::write_document(rep.document);
        std::cout << "triple products <qi,qj><qj,qk><qk,qi>:\n";
        for (const auto& tp : rep.triples) {
          std::cout << "  (" << tp.ijk[0] << "," << tp.ijk[1] << "," << tp.ijk[2] << ")  " << tp.value.real()
                    << (tp.value.imag() < 0 ? " - " : " + ") << std::abs(tp.value.imag()) << "i"
                    << (tp.real ? "  real" : "") << "\n";
        }
        std::cout << "draws " << rep.construction.attempts << ", isotropic restarts "
                  << rep.construction.isotropic_restarts << ", SAT rejections " << rep.construction.sat_rejections
                  << "\n";
      }
      code = 0;
    } else if (*batch) {
      const auto summary = uecsm::run_batch(dir, common.options());
      if (common.json) {
        std::cout << uecsm::to_json(summary).dump(2) << "\n";
      } else {
        std::cout << uecsm::format_batch(summary);
      }
      code = uecsm::exit_code(summary);
    }
  } catch (const uecsm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
