#include "fmm/matrix.hpp"

#include <cctype>
#include <charconv>

namespace fmm::detail {

std::vector<Token> split_tokens(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t parse_dimension(const Token& tok, std::size_t line) {
  std::size_t v = 0;
  auto [end, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
  if (ec != std::errc() || end != tok.text.data() + tok.text.size() || v == 0) {
    throw ParseError("expected a positive integer, got '" + tok.text + "'", line, tok.column);
  }
  return v;
}

}  // namespace fmm::detail
