// JSON arrangement files.
//
//   {"ring": "Z" | {"prime": p},
//    "space": {"kind": "affine" | "projective", "n": n},
//    "subspaces": [[[c0, a1, ..., an], ...], ...],
//    "name": "optional"}
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "arrangements/arrangement.hpp"

namespace arr {

/// Malformed or invalid arrangement file. The message names the offending
/// line/column (syntax) or JSON path (structure).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Arrangement parse_arrangement_file(std::string_view text);
Arrangement load_arrangement_file(const std::filesystem::path& path);

nlohmann::ordered_json arrangement_to_json(const Arrangement& a);
/// Pretty-printed file contents, newline-terminated.
std::string serialize_arrangement(const Arrangement& a);

}  // namespace arr
