// Sparse trilinear forms in a(i,j), b(k,l), c(m,n) with coefficients that
// are polynomials in the parameters L (Laurent) and J (ordinary), over Q.

#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "fmm/scheme.hpp"

namespace fmm {

/// Rational polynomial in L^(+-1) and J; keys are (L exponent, J exponent).
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  BiPoly(long value);  // NOLINT(google-explicit-constructor)
  BiPoly(const mpq_class& value);  // NOLINT(google-explicit-constructor)
  static BiPoly monomial(const mpq_class& coeff, int ell_exp, int jay_exp);
  static BiPoly ell() { return monomial(1, 1, 0); }
  static BiPoly jay() { return monomial(1, 0, 1); }
  static BiPoly from_laurent(const LaurentCoeff& c);

  const std::map<Key, mpq_class>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly x, const BiPoly& y) { return x += y; }
  friend BiPoly operator-(BiPoly x, const BiPoly& y) { return x -= y; }
  friend BiPoly operator*(const BiPoly& x, const BiPoly& y);
  BiPoly operator-() const;
  friend bool operator==(const BiPoly& x, const BiPoly& y) { return x.terms_ == y.terms_; }

  /// Replaces J by a rational value.
  BiPoly substitute_jay(const mpq_class& value) const;

  /// e.g. "1-2*J", "-L^-1", "3/2*L*J^2"
  std::string to_string() const;

 private:
  void add_term(const Key& k, const mpq_class& v);
  std::map<Key, mpq_class> terms_;
};

/// sum over entries of coefficient * x(i,j); indices are 1-based.
class LinearForm {
 public:
  using Index = std::pair<std::size_t, std::size_t>;

  LinearForm() = default;
  LinearForm(std::initializer_list<std::pair<Index, BiPoly>> terms);
  static LinearForm from_matrix(const CoeffMatrix& m);

  const std::map<Index, BiPoly>& terms() const noexcept { return terms_; }
  void add(const Index& idx, const BiPoly& coeff);
  LinearForm scaled(const BiPoly& s) const;
  friend LinearForm operator+(const LinearForm& x, const LinearForm& y);

 private:
  std::map<Index, BiPoly> terms_;
};

class TrilinearForm {
 public:
  /// (i, j, k, l, m, n) for a(i,j) * b(k,l) * c(m,n), 1-based.
  using Key = std::array<std::size_t, 6>;

  const std::map<Key, BiPoly>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Zero when the monomial is absent.
  BiPoly coefficient(const Key& k) const;

  void add_term(const Key& k, const BiPoly& coeff);
  /// Adds the expansion of x * y * z.
  void add_product(const LinearForm& x, const LinearForm& y, const LinearForm& z);

  TrilinearForm& operator+=(const TrilinearForm& o);
  TrilinearForm& operator-=(const TrilinearForm& o);
  friend TrilinearForm operator+(TrilinearForm x, const TrilinearForm& y) { return x += y; }
  friend TrilinearForm operator-(TrilinearForm x, const TrilinearForm& y) { return x -= y; }
  friend bool operator==(const TrilinearForm& x, const TrilinearForm& y) { return x.terms_ == y.terms_; }

  TrilinearForm substitute_jay(const mpq_class& value) const;

  /// One line per monomial in key order: "coeff * a(i,j)*b(k,l)*c(m,n)".
  std::string to_string() const;

 private:
  std::map<Key, BiPoly> terms_;
};

/// sum_rho <alpha_rho, a> <beta_rho, b> <gamma_rho, c>, expanded.
TrilinearForm scheme_to_trilinear(const BilinearScheme& scheme);

/// sum_{i,j,k} a(i,j) b(j,k) c(i,k): the a x b by b x c product tensor.
TrilinearForm target_tensor(std::size_t a, std::size_t b, std::size_t c);

/// The four Hopcroft-Kerr terms that the 5x5 merge starts from:
///   J (a55 - a51 - a52 - a35) b54 (c54 - c52)
///   J (a55 - a53 - a54 - a15) (b52 + b54) c52
///   (1 - J) (a52 - a45) b54 (c54 - c52)
///   (1 - J) (a54 - a25) (b52 + b54) c52
TrilinearForm hopcroft_kerr_four_terms();

/// The two merged terms
///   ((a55 - a51 - a35) J + w a52 - (1 - J) a45) b54 (c54 - c52)
///   ((a55 - a53 - a15) J + w a54 - (1 - J) a25) (b52 + b54) c52
/// with w = 1 - 2J unless another weight is given.
TrilinearForm hopcroft_kerr_two_terms();
TrilinearForm hopcroft_kerr_two_terms(const BiPoly& a52_weight);

inline constexpr int kHopcroftKerrProductsBefore = 4;
inline constexpr int kHopcroftKerrProductsAfter = 2;

/// Compares two forms monomial by monomial; failures carry the monomial
/// (1-based a, b, c indices) and the coefficient of lhs - rhs.
VerificationReport compare_trilinear(const TrilinearForm& lhs, const TrilinearForm& rhs,
                                     std::string method = "TRILINEAR");

/// hopcroft_kerr_four_terms() == hopcroft_kerr_two_terms() identically in J.
VerificationReport verify_factorization_identity();

}  // namespace fmm
