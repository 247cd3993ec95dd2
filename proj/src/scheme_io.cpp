#include "fmm/scheme_io.hpp"

#include <fstream>
#include <sstream>

namespace fmm {
namespace {

std::string strip(std::string s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::string labelled_value(detail::LineReader& reader, const std::string& label) {
  std::string line;
  if (!reader.next(line)) throw ParseError("expected '" + label + ":' line", reader.line_number() + 1, 1);
  std::string s = strip(line);
  if (s.rfind(label + ":", 0) != 0) {
    throw ParseError("expected '" + label + ":' line", reader.line_number(), line.find_first_not_of(" \t") + 1);
  }
  return strip(s.substr(label.size() + 1));
}

void expect_keyword(detail::LineReader& reader, const std::string& keyword) {
  std::string line;
  if (!reader.next(line)) throw ParseError("expected '" + keyword + "'", reader.line_number() + 1, 1);
  if (strip(line) != keyword) {
    throw ParseError("expected '" + keyword + "', got '" + strip(line) + "'", reader.line_number(),
                     line.find_first_not_of(" \t") + 1);
  }
}

CoeffMatrix read_section(detail::LineReader& reader, const std::string& label, std::size_t rows, std::size_t cols) {
  expect_keyword(reader, label);
  std::size_t header_line = reader.line_number() + 1;
  auto m = read_matrix(reader, LaurentRing{});
  if (m.rows() != rows || m.cols() != cols) {
    throw ParseError(label + " must be " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " + m.shape(),
                     header_line, 1);
  }
  return m;
}

}  // namespace

std::string serialize_scheme(const BilinearScheme& scheme) {
  std::ostringstream out;
  const auto& s = scheme.signature();
  LaurentRing ring;
  out << "FMMA " << s.a << ' ' << s.b << ' ' << s.c << ' ' << s.r << '\n';
  out << "name: " << scheme.name() << '\n';
  out << "provenance: " << scheme.provenance() << '\n';
  for (std::size_t rho = 0; rho < scheme.rank(); ++rho) {
    const auto& p = scheme.products()[rho];
    out << "product " << rho + 1 << '\n';
    out << "alpha\n";
    write_matrix(out, ring, p.alpha);
    out << "beta\n";
    write_matrix(out, ring, p.beta);
    out << "gamma\n";
    write_matrix(out, ring, p.gamma);
  }
  return out.str();
}

BilinearScheme parse_scheme(std::istream& in) {
  detail::LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError("empty scheme file", 1, 1);
  auto toks = detail::split_tokens(line);
  if (toks.size() != 5 || toks[0].text != "FMMA") {
    throw ParseError("header must be 'FMMA a b c r'", reader.line_number(), toks.empty() ? 1 : toks[0].column);
  }
  FmmaSignature sig;
  sig.a = detail::parse_dimension(toks[1], reader.line_number());
  sig.b = detail::parse_dimension(toks[2], reader.line_number());
  sig.c = detail::parse_dimension(toks[3], reader.line_number());
  sig.r = detail::parse_dimension(toks[4], reader.line_number());
  std::string name = labelled_value(reader, "name");
  std::string provenance = labelled_value(reader, "provenance");

  std::vector<BilinearProduct> products;
  while (reader.next(line)) {
    auto head = detail::split_tokens(line);
    if (head.size() != 2 || head[0].text != "product") {
      throw ParseError("expected 'product <index>'", reader.line_number(), head.empty() ? 1 : head[0].column);
    }
    std::size_t index = detail::parse_dimension(head[1], reader.line_number());
    if (index != products.size() + 1) {
      throw ParseError("expected product " + std::to_string(products.size() + 1) + ", got " + head[1].text,
                       reader.line_number(), head[1].column);
    }
    BilinearProduct p;
    p.alpha = read_section(reader, "alpha", sig.a, sig.b);
    p.beta = read_section(reader, "beta", sig.b, sig.c);
    p.gamma = read_section(reader, "gamma", sig.a, sig.c);
    products.push_back(std::move(p));
  }
  if (products.size() != sig.r) {
    throw ParseError("expected " + std::to_string(sig.r) + " products, found " + std::to_string(products.size()),
                     reader.line_number() + 1, 1);
  }
  return BilinearScheme(sig, std::move(products), std::move(name), std::move(provenance));
}

BilinearScheme parse_scheme(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_scheme(in);
}

BilinearScheme read_scheme_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open scheme file '" + path.string() + "'");
  return parse_scheme(in);
}

void write_scheme_file(const std::filesystem::path& path, const BilinearScheme& scheme) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write scheme file '" + path.string() + "'");
  out << serialize_scheme(scheme);
  if (!out) throw std::ios_base::failure("write to '" + path.string() + "' failed");
}

}  // namespace fmm
