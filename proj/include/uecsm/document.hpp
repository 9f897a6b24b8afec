#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "uecsm/matcore.hpp"

namespace uecsm {

/// On-disk matrix: {"label": str?, "n": int, "entries": [[[re, im], ...], ...]}.
struct MatrixDocument {
  std::optional<std::string> label;
  CMatrix matrix;
};

/// Throws ParseError on malformed JSON, wrong shape or non-finite numbers.
MatrixDocument parse_document(std::string_view text);
MatrixDocument read_document(const std::filesystem::path& path);

/// Canonical text: two-space indent, one matrix row per line, shortest
/// round-trip decimal numbers, trailing newline.
std::string write_document(const MatrixDocument& doc);
void save_document(const std::filesystem::path& path, const MatrixDocument& doc);

/// Shortest decimal that parses back to the same double ("-0" becomes "0").
std::string format_number(double x);

}  // namespace uecsm
