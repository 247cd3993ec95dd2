#include "fmm/ring.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace fmm {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Optional sign followed by decimal digits; returns the number of chars used.
std::size_t scan_integer(std::string_view s, std::size_t pos, bool allow_sign) {
  std::size_t i = pos;
  if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits) return 0;
  return i - pos;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

mpq_class parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  std::size_t num_len = scan_integer(s, 0, true);
  if (num_len == 0) throw LiteralError("expected an integer or p/q literal, got '" + std::string(text) + "'", 1);
  mpz_class num(std::string(s.substr(0, num_len)[0] == '+' ? s.substr(1, num_len - 1) : s.substr(0, num_len)));
  if (num_len == s.size()) return mpq_class(num);
  if (s[num_len] != '/') {
    throw LiteralError("unexpected character '" + std::string(1, s[num_len]) + "' in rational literal", num_len + 1);
  }
  std::size_t den_len = scan_integer(s, num_len + 1, false);
  if (den_len == 0 || num_len + 1 + den_len != s.size()) {
    throw LiteralError("malformed denominator in rational literal '" + std::string(text) + "'", num_len + 2);
  }
  mpz_class den(std::string(s.substr(num_len + 1, den_len)));
  if (den == 0) throw LiteralError("zero denominator in rational literal", num_len + 2);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------------------

mpq_class Rationals::inverse(const mpq_class& x) const {
  if (sgn(x) == 0) throw NotInvertibleError("0 is not invertible over the rationals");
  return 1 / x;
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
  if (modulus >= kModulusBound) {
    throw std::invalid_argument("prime field modulus " + std::to_string(modulus) + " is not below 2^62");
  }
  if (!is_prime_u64(modulus)) {
    throw std::invalid_argument("prime field modulus " + std::to_string(modulus) + " is not prime");
  }
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t e) const { return powmod(base, e, p_); }

std::uint64_t PrimeField::inverse(std::uint64_t x) const {
  if (x % p_ == 0) {
    throw NotInvertibleError(std::to_string(x) + " is not invertible modulo " + std::to_string(p_));
  }
  return powmod(x, p_ - 2, p_);
}

std::uint64_t PrimeField::from_integer(const mpz_class& z) const {
  mpz_class r = z % mpz_class(std::to_string(p_));
  if (r < 0) r += mpz_class(std::to_string(p_));
  return std::stoull(r.get_str());
}

std::uint64_t PrimeField::from_rational(const mpq_class& q) const {
  std::uint64_t den = from_integer(q.get_den());
  if (den == 0) {
    throw NotInvertibleError("denominator of " + format_rational(q) + " vanishes modulo " + std::to_string(p_));
  }
  return mul(from_integer(q.get_num()), inverse(den));
}

std::int64_t MachineInt64::inverse(std::int64_t x) const {
  if (x == 1 || x == -1) return x;
  throw NotInvertibleError(std::to_string(x) + " has no inverse over the integers");
}

std::int64_t MachineInt64::from_integer(const mpz_class& z) const {
  // Reduce mod 2^64 first so that wrapping matches the arithmetic.
  mpz_class two64 = mpz_class(1) << 64;
  mpz_class r = z % two64;
  if (r < 0) r += two64;
  std::uint64_t u = std::stoull(r.get_str());
  return static_cast<std::int64_t>(u);
}

std::int64_t MachineInt64::from_rational(const mpq_class& q) const {
  if (q.get_den() != 1) {
    throw NotInvertibleError("non-integer " + format_rational(q) + " has no machine-integer value");
  }
  return from_integer(q.get_num());
}

std::int64_t MachineInt64::parse(std::string_view s) const {
  return from_rational(parse_rational(s));
}

double Float64::inverse(double x) const {
  if (x == 0.0) throw NotInvertibleError("0 is not invertible");
  return 1.0 / x;
}

std::string Float64::format(double x) const {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

double Float64::parse(std::string_view s) const {
  s = trim(s);
  double v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw LiteralError("malformed floating-point literal '" + std::string(s) + "'", 1);
  }
  return v;
}

// ---------------------------------------------------------------------------

RingSpec::RingSpec(Kind kind, std::uint64_t modulus, mpq_class ell)
    : kind_(kind), modulus_(modulus), ell_(std::move(ell)) {
  ell_.canonicalize();
  if (sgn(ell_) == 0) throw NotInvertibleError("L must be nonzero");
  switch (kind_) {
    case Kind::Rationals:
    case Kind::Float64:
      break;
    case Kind::PrimeField: {
      PrimeField field(modulus_);
      if (field.from_rational(ell_) == 0) {
        throw NotInvertibleError("L = " + format_rational(ell_) + " vanishes modulo " + std::to_string(modulus_));
      }
      break;
    }
    case Kind::MachineInt64:
      if (ell_ != 1 && ell_ != -1) {
        throw NotInvertibleError("L = " + format_rational(ell_) +
                                 " is not invertible over the integers; int64 needs L = 1 or -1");
      }
      break;
  }
}

RingSpec RingSpec::rationals(mpq_class ell) { return RingSpec(Kind::Rationals, 0, std::move(ell)); }
RingSpec RingSpec::prime_field(std::uint64_t modulus, mpq_class ell) {
  return RingSpec(Kind::PrimeField, modulus, std::move(ell));
}
RingSpec RingSpec::machine_int64(mpq_class ell) { return RingSpec(Kind::MachineInt64, 0, std::move(ell)); }
RingSpec RingSpec::float64(mpq_class ell) { return RingSpec(Kind::Float64, 0, std::move(ell)); }

RingSpec RingSpec::parse(std::string_view ring, mpq_class ell) {
  ring = trim(ring);
  if (ring == "rat") return rationals(std::move(ell));
  if (ring == "int64") return machine_int64(std::move(ell));
  if (ring == "f64") return float64(std::move(ell));
  if (ring.substr(0, 3) == "fp:") {
    std::string_view digits = ring.substr(3);
    std::uint64_t p = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || end != digits.data() + digits.size()) {
      throw std::invalid_argument("malformed prime in ring '" + std::string(ring) + "'");
    }
    return prime_field(p, std::move(ell));
  }
  throw std::invalid_argument("unknown ring '" + std::string(ring) + "' (expected rat, fp:<p>, int64 or f64)");
}

std::string RingSpec::name() const {
  switch (kind_) {
    case Kind::Rationals: return "rat";
    case Kind::PrimeField: return "fp:" + std::to_string(modulus_);
    case Kind::MachineInt64: return "int64";
    case Kind::Float64: return "f64";
  }
  return "?";
}

}  // namespace fmm
