#include "fmm/trilinear.hpp"

#include <sstream>

namespace fmm {

BiPoly::BiPoly(long value) : BiPoly(mpq_class(value)) {}

BiPoly::BiPoly(const mpq_class& value) {
  if (value != 0) terms_[{0, 0}] = value;
}

BiPoly BiPoly::monomial(const mpq_class& coeff, int ell_exp, int jay_exp) {
  BiPoly p;
  p.add_term({ell_exp, jay_exp}, coeff);
  return p;
}

BiPoly BiPoly::from_laurent(const LaurentCoeff& c) {
  BiPoly p;
  for (const auto& [e, v] : c.terms()) p.add_term({e, 0}, mpq_class(v));
  return p;
}

void BiPoly::add_term(const Key& k, const mpq_class& v) {
  if (v == 0) return;
  auto [it, inserted] = terms_.emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, v] : o.terms_) add_term(k, v);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, v] : o.terms_) add_term(k, -v);
  return *this;
}

BiPoly operator*(const BiPoly& x, const BiPoly& y) {
  BiPoly out;
  for (const auto& [kx, vx] : x.terms_) {
    for (const auto& [ky, vy] : y.terms_) out.add_term({kx.first + ky.first, kx.second + ky.second}, vx * vy);
  }
  return out;
}

BiPoly BiPoly::operator-() const {
  BiPoly out;
  for (const auto& [k, v] : terms_) out.terms_[k] = -v;
  return out;
}

BiPoly BiPoly::substitute_jay(const mpq_class& value) const {
  BiPoly out;
  for (const auto& [k, v] : terms_) {
    mpq_class w = v;
    for (int e = 0; e < k.second; ++e) w *= value;
    out.add_term({k.first, 0}, w);
  }
  return out;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, v] : terms_) {
    mpq_class mag = abs(v);
    out += v < 0 ? "-" : (out.empty() ? "" : "+");
    std::string factors;
    auto append = [&](const char* name, int e) {
      if (e == 0) return;
      if (!factors.empty()) factors += "*";
      factors += name;
      if (e != 1) factors += "^" + std::to_string(e);
    };
    append("L", k.first);
    append("J", k.second);
    if (factors.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += factors;
    }
  }
  return out;
}

LinearForm::LinearForm(std::initializer_list<std::pair<Index, BiPoly>> terms) {
  for (const auto& [idx, c] : terms) add(idx, c);
}

LinearForm LinearForm::from_matrix(const CoeffMatrix& m) {
  LinearForm f;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) f.add({i + 1, j + 1}, BiPoly::from_laurent(m(i, j)));
    }
  }
  return f;
}

void LinearForm::add(const Index& idx, const BiPoly& coeff) {
  auto& slot = terms_[idx];
  slot += coeff;
  if (slot.is_zero()) terms_.erase(idx);
}

LinearForm LinearForm::scaled(const BiPoly& s) const {
  LinearForm out;
  for (const auto& [idx, c] : terms_) out.add(idx, c * s);
  return out;
}

LinearForm operator+(const LinearForm& x, const LinearForm& y) {
  LinearForm out = x;
  for (const auto& [idx, c] : y.terms_) out.add(idx, c);
  return out;
}

BiPoly TrilinearForm::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? BiPoly() : it->second;
}

void TrilinearForm::add_term(const Key& k, const BiPoly& coeff) {
  if (coeff.is_zero()) return;
  auto& slot = terms_[k];
  slot += coeff;
  if (slot.is_zero()) terms_.erase(k);
}

void TrilinearForm::add_product(const LinearForm& x, const LinearForm& y, const LinearForm& z) {
  for (const auto& [ix, cx] : x.terms()) {
    for (const auto& [iy, cy] : y.terms()) {
      const BiPoly cxy = cx * cy;
      for (const auto& [iz, cz] : z.terms()) {
        add_term({ix.first, ix.second, iy.first, iy.second, iz.first, iz.second}, cxy * cz);
      }
    }
  }
}

TrilinearForm& TrilinearForm::operator+=(const TrilinearForm& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TrilinearForm& TrilinearForm::operator-=(const TrilinearForm& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

TrilinearForm TrilinearForm::substitute_jay(const mpq_class& value) const {
  TrilinearForm out;
  for (const auto& [k, c] : terms_) out.add_term(k, c.substitute_jay(value));
  return out;
}

namespace {

std::string monomial_text(const TrilinearForm::Key& k) {
  std::ostringstream s;
  s << "a(" << k[0] << ',' << k[1] << ")*b(" << k[2] << ',' << k[3] << ")*c(" << k[4] << ',' << k[5] << ')';
  return s.str();
}

LinearForm var(std::size_t i, std::size_t j, const BiPoly& coeff = 1) { return LinearForm{{{i, j}, coeff}}; }

}  // namespace

std::string TrilinearForm::to_string() const {
  std::string out;
  for (const auto& [k, c] : terms_) out += c.to_string() + " * " + monomial_text(k) + "\n";
  return out;
}

TrilinearForm scheme_to_trilinear(const BilinearScheme& scheme) {
  TrilinearForm out;
  for (const auto& p : scheme.products()) {
    out.add_product(LinearForm::from_matrix(p.alpha), LinearForm::from_matrix(p.beta),
                    LinearForm::from_matrix(p.gamma));
  }
  return out;
}

TrilinearForm target_tensor(std::size_t a, std::size_t b, std::size_t c) {
  TrilinearForm out;
  for (std::size_t i = 1; i <= a; ++i) {
    for (std::size_t j = 1; j <= b; ++j) {
      for (std::size_t k = 1; k <= c; ++k) out.add_term({i, j, j, k, i, k}, 1);
    }
  }
  return out;
}

TrilinearForm hopcroft_kerr_four_terms() {
  const BiPoly J = BiPoly::jay();
  const BiPoly one_minus_j = BiPoly(1) - J;
  const LinearForm b54 = var(5, 4), b52_b54 = var(5, 2) + var(5, 4);
  const LinearForm c54_c52 = var(5, 4) + var(5, 2, -1), c52 = var(5, 2);
  TrilinearForm out;
  out.add_product((var(5, 5) + var(5, 1, -1) + var(5, 2, -1) + var(3, 5, -1)).scaled(J), b54, c54_c52);
  out.add_product((var(5, 5) + var(5, 3, -1) + var(5, 4, -1) + var(1, 5, -1)).scaled(J), b52_b54, c52);
  out.add_product((var(5, 2) + var(4, 5, -1)).scaled(one_minus_j), b54, c54_c52);
  out.add_product((var(5, 4) + var(2, 5, -1)).scaled(one_minus_j), b52_b54, c52);
  return out;
}

TrilinearForm hopcroft_kerr_two_terms() { return hopcroft_kerr_two_terms(BiPoly(1) - BiPoly(2) * BiPoly::jay()); }

TrilinearForm hopcroft_kerr_two_terms(const BiPoly& a52_weight) {
  const BiPoly J = BiPoly::jay();
  const BiPoly one_minus_j = BiPoly(1) - J;
  TrilinearForm out;
  out.add_product((var(5, 5) + var(5, 1, -1) + var(3, 5, -1)).scaled(J) + var(5, 2, a52_weight) +
                      var(4, 5, -one_minus_j),
                  var(5, 4), var(5, 4) + var(5, 2, -1));
  // The second term's a54 weight is fixed at 1 - 2J; only a52's is varied.
  out.add_product((var(5, 5) + var(5, 3, -1) + var(1, 5, -1)).scaled(J) + var(5, 4, BiPoly(1) - BiPoly(2) * J) +
                      var(2, 5, -one_minus_j),
                  var(5, 2) + var(5, 4), var(5, 2));
  return out;
}

VerificationReport compare_trilinear(const TrilinearForm& lhs, const TrilinearForm& rhs, std::string method) {
  TrilinearForm diff = lhs - rhs;
  std::map<TrilinearForm::Key, bool> keys;
  for (const auto& [k, c] : lhs.terms()) keys[k] = true;
  for (const auto& [k, c] : rhs.terms()) keys[k] = true;
  VerificationReport report(std::move(method), keys.size());
  for (const auto& [k, c] : diff.terms()) {
    report.add_failure({{k.begin(), k.end()}, c.to_string() + " * " + monomial_text(k)});
  }
  report.sort_failures();
  return report;
}

VerificationReport verify_factorization_identity() {
  return compare_trilinear(hopcroft_kerr_four_terms(), hopcroft_kerr_two_terms(), "FACTORIZATION");
}

}  // namespace fmm
