// Coefficient rings used by the evaluators and verifiers.
//
// Every ring is a small value type exposing the same member functions
// (zero/one/add/sub/mul/neg/equal/inverse/from_integer/from_rational/
// format/parse).  Algorithms are templates over the ring type and take the
// ring object by const reference, so a prime field carries its modulus and
// nothing else needs global state.
//
// Rationals and PrimeField are exact and are the only rings accepted by the
// verifiers.  MachineInt64 wraps modulo 2^64 and Float64 rounds; both exist
// for the benchmark path only.

#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace fmm {

/// Raised when an element has no inverse in the ring it was asked of.
class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed ring literal.  `column` is 1-based within the literal.
class LiteralError : public std::invalid_argument {
 public:
  LiteralError(const std::string& what, std::size_t column)
      : std::invalid_argument(what), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Parses `p/q` or `p` (optional sign) into a reduced rational.
mpq_class parse_rational(std::string_view text);
std::string format_rational(const mpq_class& q);

template <class R>
concept CoefficientRing = requires(const R& r, const typename R::value_type& x,
                                   const mpz_class& z, const mpq_class& q,
                                   std::string_view s) {
  typename R::value_type;
  { R::is_exact } -> std::convertible_to<bool>;
  { r.zero() } -> std::same_as<typename R::value_type>;
  { r.one() } -> std::same_as<typename R::value_type>;
  { r.add(x, x) } -> std::same_as<typename R::value_type>;
  { r.sub(x, x) } -> std::same_as<typename R::value_type>;
  { r.mul(x, x) } -> std::same_as<typename R::value_type>;
  { r.neg(x) } -> std::same_as<typename R::value_type>;
  { r.equal(x, x) } -> std::same_as<bool>;
  { r.is_zero(x) } -> std::same_as<bool>;
  { r.inverse(x) } -> std::same_as<typename R::value_type>;
  { r.from_integer(z) } -> std::same_as<typename R::value_type>;
  { r.from_rational(q) } -> std::same_as<typename R::value_type>;
  { r.format(x) } -> std::same_as<std::string>;
  { r.parse(s) } -> std::same_as<typename R::value_type>;
  { r.name() } -> std::same_as<std::string>;
};

class Rationals {
 public:
  using value_type = mpq_class;
  static constexpr bool is_exact = true;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type add(const value_type& x, const value_type& y) const { return x + y; }
  value_type sub(const value_type& x, const value_type& y) const { return x - y; }
  value_type mul(const value_type& x, const value_type& y) const { return x * y; }
  value_type neg(const value_type& x) const { return -x; }
  bool equal(const value_type& x, const value_type& y) const { return x == y; }
  bool is_zero(const value_type& x) const { return sgn(x) == 0; }
  value_type inverse(const value_type& x) const;
  value_type from_integer(const mpz_class& z) const { return value_type(z); }
  value_type from_rational(const mpq_class& q) const { return q; }
  std::string format(const value_type& x) const { return format_rational(x); }
  value_type parse(std::string_view s) const { return parse_rational(s); }
  std::string name() const { return "rat"; }
};

/// Integers modulo a prime p < 2^62; elements are kept in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;
  static constexpr bool is_exact = true;
  static constexpr std::uint64_t kModulusBound = std::uint64_t{1} << 62;

  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type x, value_type y) const {
    value_type s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type x, value_type y) const { return x >= y ? x - y : x + (p_ - y); }
  value_type mul(value_type x, value_type y) const {
    return static_cast<value_type>((static_cast<unsigned __int128>(x) * y) % p_);
  }
  value_type neg(value_type x) const { return x == 0 ? 0 : p_ - x; }
  bool equal(value_type x, value_type y) const { return x == y; }
  bool is_zero(value_type x) const { return x == 0; }
  value_type pow(value_type base, std::uint64_t e) const;
  value_type inverse(value_type x) const;
  value_type from_integer(const mpz_class& z) const;
  value_type from_rational(const mpq_class& q) const;
  std::string format(value_type x) const { return std::to_string(x); }
  value_type parse(std::string_view s) const { return from_rational(parse_rational(s)); }
  std::string name() const { return "fp:" + std::to_string(p_); }

 private:
  std::uint64_t p_;
};

/// Two's-complement integers with wrap-around on overflow.  Benchmark only.
class MachineInt64 {
 public:
  using value_type = std::int64_t;
  static constexpr bool is_exact = false;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type x, value_type y) const { return wrap(u(x) + u(y)); }
  value_type sub(value_type x, value_type y) const { return wrap(u(x) - u(y)); }
  value_type mul(value_type x, value_type y) const { return wrap(u(x) * u(y)); }
  value_type neg(value_type x) const { return wrap(0 - u(x)); }
  bool equal(value_type x, value_type y) const { return x == y; }
  bool is_zero(value_type x) const { return x == 0; }
  value_type inverse(value_type x) const;
  value_type from_integer(const mpz_class& z) const;
  value_type from_rational(const mpq_class& q) const;
  std::string format(value_type x) const { return std::to_string(x); }
  value_type parse(std::string_view s) const;
  std::string name() const { return "int64"; }

 private:
  static std::uint64_t u(value_type x) { return static_cast<std::uint64_t>(x); }
  static value_type wrap(std::uint64_t x) { return static_cast<value_type>(x); }
};

/// IEEE double.  Benchmark only; rejected by every verification path.
class Float64 {
 public:
  using value_type = double;
  static constexpr bool is_exact = false;

  value_type zero() const { return 0.0; }
  value_type one() const { return 1.0; }
  value_type add(value_type x, value_type y) const { return x + y; }
  value_type sub(value_type x, value_type y) const { return x - y; }
  value_type mul(value_type x, value_type y) const { return x * y; }
  value_type neg(value_type x) const { return -x; }
  bool equal(value_type x, value_type y) const { return x == y; }
  bool is_zero(value_type x) const { return x == 0.0; }
  value_type inverse(value_type x) const;
  value_type from_integer(const mpz_class& z) const { return z.get_d(); }
  value_type from_rational(const mpq_class& q) const { return q.get_d(); }
  std::string format(value_type x) const;
  value_type parse(std::string_view s) const;
  std::string name() const { return "f64"; }
};

/// Which ring to evaluate in, and what value the scheme parameter L takes.
class RingSpec {
 public:
  enum class Kind { Rationals, PrimeField, MachineInt64, Float64 };

  static RingSpec rationals(mpq_class ell = 1);
  static RingSpec prime_field(std::uint64_t modulus, mpq_class ell = 1);
  static RingSpec machine_int64(mpq_class ell = 1);
  static RingSpec float64(mpq_class ell = 1);

  /// `rat`, `fp:<p>`, `int64` or `f64`.
  static RingSpec parse(std::string_view ring, mpq_class ell = 1);

  Kind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  const mpq_class& ell() const noexcept { return ell_; }
  bool is_exact() const noexcept {
    return kind_ == Kind::Rationals || kind_ == Kind::PrimeField;
  }
  std::string name() const;

 private:
  RingSpec(Kind kind, std::uint64_t modulus, mpq_class ell);

  Kind kind_;
  std::uint64_t modulus_;
  mpq_class ell_;
};

class LaurentCoeff;

/// A ring plus the powers L^-4 .. L^4 of the chosen parameter value.
template <CoefficientRing R>
class RingContext {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;
  static constexpr int kMaxPower = 4;

  RingContext(R ring, const mpq_class& ell) : ring_(std::move(ring)) {
    value_type l = ring_.from_rational(ell);
    value_type inv = ring_.inverse(l);
    powers_[kMaxPower] = ring_.one();
    for (int e = 1; e <= kMaxPower; ++e) {
      powers_[kMaxPower + e] = ring_.mul(powers_[kMaxPower + e - 1], l);
      powers_[kMaxPower - e] = ring_.mul(powers_[kMaxPower - e + 1], inv);
    }
  }

  const R& ring() const noexcept { return ring_; }
  const value_type& ell_power(int e) const {
    if (e < -kMaxPower || e > kMaxPower) throw std::out_of_range("L exponent out of range");
    return powers_[static_cast<std::size_t>(e + kMaxPower)];
  }

  /// Substitutes the parameter value into a Laurent coefficient.
  value_type instantiate(const LaurentCoeff& c) const;

 private:
  R ring_;
  std::array<value_type, 2 * kMaxPower + 1> powers_{};
};

/// Builds the concrete ring for `spec` and calls `f(const RingContext<R>&)`.
template <class F>
decltype(auto) with_ring(const RingSpec& spec, F&& f) {
  switch (spec.kind()) {
    case RingSpec::Kind::Rationals:
      return f(RingContext<Rationals>(Rationals{}, spec.ell()));
    case RingSpec::Kind::PrimeField:
      return f(RingContext<PrimeField>(PrimeField(spec.modulus()), spec.ell()));
    case RingSpec::Kind::MachineInt64:
      return f(RingContext<MachineInt64>(MachineInt64{}, spec.ell()));
    case RingSpec::Kind::Float64:
      return f(RingContext<Float64>(Float64{}, spec.ell()));
  }
  throw std::logic_error("unreachable ring kind");
}

/// Same as with_ring, but only for exact rings; others are refused.
template <class F>
decltype(auto) with_exact_ring(const RingSpec& spec, F&& f) {
  switch (spec.kind()) {
    case RingSpec::Kind::Rationals:
      return f(RingContext<Rationals>(Rationals{}, spec.ell()));
    case RingSpec::Kind::PrimeField:
      return f(RingContext<PrimeField>(PrimeField(spec.modulus()), spec.ell()));
    default:
      throw std::invalid_argument("ring " + spec.name() +
                                  " is not exact; verification needs rat or fp:<p>");
  }
}

}  // namespace fmm
