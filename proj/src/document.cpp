#include "uecsm/document.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "uecsm/errors.hpp"

namespace uecsm {

namespace {

double finite_number(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ParseError(std::string(what) + " is not finite");
  return x;
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

MatrixDocument parse_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer field \"n\"");
  const auto n = j["n"].get<long long>();
  if (n < 1) throw ParseError("\"n\" must be >= 1");
  if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError("missing array \"entries\"");
  const auto& rows = j["entries"];
  if (rows.size() != static_cast<std::size_t>(n)) throw ParseError("\"entries\" must have n rows");

  const auto dim = static_cast<std::size_t>(n);
  std::vector<Complex> data;
  data.reserve(dim * dim);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != dim) throw ParseError("each row must have n entries");
    for (const auto& z : row) {
      if (!z.is_array() || z.size() != 2) throw ParseError("each entry must be a [re, im] pair");
      data.emplace_back(finite_number(z[0], "real part"), finite_number(z[1], "imaginary part"));
    }
  }
  MatrixDocument doc{std::nullopt, CMatrix(dim, std::move(data))};
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError("\"label\" must be a string");
    doc.label = j["label"].get<std::string>();
  }
  return doc;
}

MatrixDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string write_document(const MatrixDocument& doc) {
  const CMatrix& m = doc.matrix;
  std::ostringstream os;
  os << "{\n";
  if (doc.label) os << "  \"label\": " << nlohmann::json(*doc.label).dump() << ",\n";
  os << "  \"n\": " << m.dim() << ",\n";
  os << "  \"entries\": [\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << "    [";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j > 0) os << ", ";
      os << "[" << format_number(m(i, j).real()) << ", " << format_number(m(i, j).imag()) << "]";
    }
    os << "]" << (i + 1 < m.dim() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

void save_document(const std::filesystem::path& path, const MatrixDocument& doc) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << write_document(doc);
}

}  // namespace uecsm
