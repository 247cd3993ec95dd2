// Scheme text format:
//
//   FMMA a b c r
//   name: <string>
//   provenance: <string>
//   product 1
//   alpha
//   <a x b matrix of Laurent literals>
//   beta
//   <b x c matrix>
//   gamma
//   <a x c matrix>
//   product 2
//   ...
//
// Matrices use the matrix text format.  `#` starts a comment.

#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "fmm/scheme.hpp"

namespace fmm {

/// Canonical text: products in stored order, entries row-major, Laurent
/// terms by ascending exponent.  Byte-stable across runs.
std::string serialize_scheme(const BilinearScheme& scheme);

/// Throws ParseError (with line/column) or SchemeError.
BilinearScheme parse_scheme(std::istream& in);
BilinearScheme parse_scheme(std::string_view text);

BilinearScheme read_scheme_file(const std::filesystem::path& path);
void write_scheme_file(const std::filesystem::path& path, const BilinearScheme& scheme);

}  // namespace fmm
