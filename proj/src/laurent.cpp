#include "fmm/laurent.hpp"

#include <cctype>

namespace fmm {
namespace {

void check_exponent(int e) {
  if (e < LaurentCoeff::kMinExponent || e > LaurentCoeff::kMaxExponent) {
    throw LaurentRangeError("L exponent " + std::to_string(e) + " outside [" +
                            std::to_string(LaurentCoeff::kMinExponent) + ", " +
                            std::to_string(LaurentCoeff::kMaxExponent) + "]");
  }
}

class TermScanner {
 public:
  explicit TermScanner(std::string_view text) : s_(text) {}

  LaurentCoeff parse() {
    LaurentCoeff result;
    skip_space();
    if (pos_ == s_.size()) fail("empty Laurent literal");
    bool first = true;
    while (true) {
      skip_space();
      int sign = 1;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      result += parse_term() * LaurentCoeff(sign);
      first = false;
      skip_space();
      if (pos_ == s_.size()) break;
    }
    return result;
  }

 private:
  LaurentCoeff parse_term() {
    mpz_class coefficient = 1;
    int exponent = 0;
    bool any = false;
    while (true) {
      skip_space();
      if (pos_ >= s_.size()) fail("expected a factor");
      char ch = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        coefficient *= mpz_class(std::string(s_.substr(start, pos_ - start)));
      } else if (ch == 'L') {
        ++pos_;
        int e = 1;
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip_space();
          e = parse_small_int();
        }
        exponent += e;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      any = true;
      skip_space();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return LaurentCoeff::monomial(coefficient, exponent);
  }

  int parse_small_int() {
    bool paren = pos_ < s_.size() && s_[pos_] == '(';
    if (paren) ++pos_;
    int sign = 1;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    std::size_t start = pos_;
    int value = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      value = value * 10 + (s_[pos_] - '0');
      if (value > 1000) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an exponent after '^'");
    if (paren) {
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
    }
    return sign * value;
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw LiteralError(why + " in Laurent literal '" + std::string(s_) + "'", pos_ + 1);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentCoeff::LaurentCoeff(long constant) {
  if (constant != 0) terms_.emplace(0, mpz_class(constant));
}

LaurentCoeff::LaurentCoeff(const mpz_class& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentCoeff LaurentCoeff::monomial(const mpz_class& coefficient, int exponent) {
  check_exponent(exponent);
  LaurentCoeff c;
  if (coefficient != 0) c.terms_.emplace(exponent, coefficient);
  return c;
}

LaurentCoeff LaurentCoeff::parse(std::string_view text) { return TermScanner(text).parse(); }

bool LaurentCoeff::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

mpz_class LaurentCoeff::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentCoeff::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentCoeff::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void LaurentCoeff::add_term(int exponent, const mpz_class& coefficient) {
  if (coefficient == 0) return;
  check_exponent(exponent);
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentCoeff LaurentCoeff::operator-() const {
  LaurentCoeff r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentCoeff& LaurentCoeff::operator+=(const LaurentCoeff& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentCoeff& LaurentCoeff::operator-=(const LaurentCoeff& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentCoeff operator*(const LaurentCoeff& a, const LaurentCoeff& b) {
  LaurentCoeff r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

mpq_class LaurentCoeff::evaluate(const mpq_class& value) const {
  if (sgn(value) == 0 && !terms_.empty() && terms_.begin()->first < 0) {
    throw NotInvertibleError("negative power of L at L = 0");
  }
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class power = 1;
    for (int k = 0; k < (e < 0 ? -e : e); ++k) power *= value;
    if (e < 0) power = 1 / power;
    sum += c * power;
  }
  return sum;
}

std::string LaurentCoeff::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    if (sgn(c) < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'L';
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentCoeff LaurentRing::inverse(const LaurentCoeff& x) const {
  if (x.terms().size() == 1) {
    const auto& [e, c] = *x.terms().begin();
    if (c == 1 || c == -1) return LaurentCoeff::monomial(c, -e);
  }
  throw NotInvertibleError(x.to_string() + " is not a unit in Z[L, 1/L]");
}

LaurentCoeff LaurentRing::from_rational(const mpq_class& q) const {
  if (q.get_den() != 1) throw NotInvertibleError("non-integer " + format_rational(q) + " in a Laurent coefficient");
  return LaurentCoeff(q.get_num());
}

}  // namespace fmm
