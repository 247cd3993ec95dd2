#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "fmm/ring.hpp"

namespace fmm {

/// Exponent outside the supported window [-4, 4].
class LaurentRangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Integer Laurent polynomial in the single scheme parameter L.
///
/// Canonical form: only nonzero coefficients are stored, exponents lie in
/// [kMinExponent, kMaxExponent].  Every operation that would leave the window
/// throws LaurentRangeError.
class LaurentCoeff {
 public:
  static constexpr int kMinExponent = -4;
  static constexpr int kMaxExponent = 4;
  using Terms = std::map<int, mpz_class>;

  LaurentCoeff() = default;
  LaurentCoeff(long constant);  // NOLINT(google-explicit-constructor)
  LaurentCoeff(const mpz_class& constant);  // NOLINT(google-explicit-constructor)

  /// coefficient * L^exponent
  static LaurentCoeff monomial(const mpz_class& coefficient, int exponent);

  /// Parses e.g. `2*L^2 - 1 + 3*L^-1`; whitespace and term order are free.
  static LaurentCoeff parse(std::string_view text);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// True iff this is an L-free integer.
  bool is_constant() const noexcept;
  mpz_class coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentCoeff operator-() const;
  LaurentCoeff& operator+=(const LaurentCoeff& other);
  LaurentCoeff& operator-=(const LaurentCoeff& other);
  friend LaurentCoeff operator+(LaurentCoeff a, const LaurentCoeff& b) { return a += b; }
  friend LaurentCoeff operator-(LaurentCoeff a, const LaurentCoeff& b) { return a -= b; }
  friend LaurentCoeff operator*(const LaurentCoeff& a, const LaurentCoeff& b);
  friend bool operator==(const LaurentCoeff& a, const LaurentCoeff& b) { return a.terms_ == b.terms_; }

  /// Replaces L by `value`; exact over the rationals.
  mpq_class evaluate(const mpq_class& value) const;

  /// Canonical text, ascending exponent, no spaces: `3*L^-1-1+2*L^2`.
  std::string to_string() const;

 private:
  void add_term(int exponent, const mpz_class& coefficient);

  Terms terms_;
};

/// Adapter so Laurent matrices share the matrix text format.  Not a field:
/// inverse() is only defined for units (+-L^e).
class LaurentRing {
 public:
  using value_type = LaurentCoeff;
  static constexpr bool is_exact = true;

  value_type zero() const { return {}; }
  value_type one() const { return LaurentCoeff(1); }
  value_type add(const value_type& x, const value_type& y) const { return x + y; }
  value_type sub(const value_type& x, const value_type& y) const { return x - y; }
  value_type mul(const value_type& x, const value_type& y) const { return x * y; }
  value_type neg(const value_type& x) const { return -x; }
  bool equal(const value_type& x, const value_type& y) const { return x == y; }
  bool is_zero(const value_type& x) const { return x.is_zero(); }
  value_type inverse(const value_type& x) const;
  value_type from_integer(const mpz_class& z) const { return LaurentCoeff(z); }
  value_type from_rational(const mpq_class& q) const;
  std::string format(const value_type& x) const { return x.to_string(); }
  value_type parse(std::string_view s) const { return LaurentCoeff::parse(s); }
  std::string name() const { return "laurent"; }
};

template <CoefficientRing R>
typename RingContext<R>::value_type RingContext<R>::instantiate(const LaurentCoeff& c) const {
  value_type sum = ring_.zero();
  for (const auto& [exponent, coefficient] : c.terms()) {
    sum = ring_.add(sum, ring_.mul(ring_.from_integer(coefficient), ell_power(exponent)));
  }
  return sum;
}

}  // namespace fmm
