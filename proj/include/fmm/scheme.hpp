// Bilinear matrix-multiplication schemes: data model, evaluation, exact
// verification and operation counts.
//
// A scheme of signature a x b x c : r computes C = A B for A (a x b) and
// B (b x c) as
//
//     C = sum_rho gamma_rho * (<alpha_rho, A> * <beta_rho, B>)
//
// where <M, X> = sum_ij M[i][j] X[i][j].  Coefficients are integer Laurent
// polynomials in a free parameter L and are only turned into ring elements
// when a RingContext is supplied.

#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fmm/laurent.hpp"
#include "fmm/matrix.hpp"
#include "fmm/ring.hpp"

namespace fmm {

struct FmmaSignature {
  std::size_t a = 1;
  std::size_t b = 1;
  std::size_t c = 1;
  std::size_t r = 1;

  /// "a×b×c : r"
  std::string to_string() const;
  friend bool operator==(const FmmaSignature&, const FmmaSignature&) = default;
};

using CoeffMatrix = Matrix<LaurentCoeff>;

struct BilinearProduct {
  CoeffMatrix alpha;  // a x b, applied to A
  CoeffMatrix beta;   // b x c, applied to B
  CoeffMatrix gamma;  // a x c, where the product lands in C

  friend bool operator==(const BilinearProduct& x, const BilinearProduct& y) {
    LaurentRing ring;
    return equal(ring, x.alpha, y.alpha) && equal(ring, x.beta, y.beta) && equal(ring, x.gamma, y.gamma);
  }
};

/// Rejected scheme construction (shape, rank or zero-factor violations).
class SchemeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BilinearScheme {
 public:
  /// Validates shapes, that products.size() == r, and that no product has a
  /// zero alpha or beta factor.
  BilinearScheme(FmmaSignature signature, std::vector<BilinearProduct> products, std::string name,
                 std::string provenance);

  const FmmaSignature& signature() const noexcept { return signature_; }
  const std::vector<BilinearProduct>& products() const noexcept { return products_; }
  const std::string& name() const noexcept { return name_; }
  const std::string& provenance() const noexcept { return provenance_; }
  std::size_t rank() const noexcept { return products_.size(); }

  /// Smallest and largest L exponent used by any coefficient.
  std::pair<int, int> exponent_range() const;

  friend bool operator==(const BilinearScheme& x, const BilinearScheme& y) {
    return x.signature_ == y.signature_ && x.name_ == y.name_ && x.provenance_ == y.provenance_ &&
           x.products_ == y.products_;
  }

 private:
  FmmaSignature signature_;
  std::vector<BilinearProduct> products_;
  std::string name_;
  std::string provenance_;
};

/// Thread-safe tally of bilinear (input-by-input) multiplications.
class MulCounter {
 public:
  void add(std::uint64_t n) noexcept { count_.fetch_add(n, std::memory_order_relaxed); }
  std::uint64_t value() const noexcept { return count_.load(std::memory_order_relaxed); }
  void reset() noexcept { count_.store(0, std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> count_{0};
};

/// A scheme with L substituted, stored as sparse (flat index, value) lists.
template <CoefficientRing R>
struct InstantiatedScheme {
  using value_type = typename R::value_type;
  using SparseForm = std::vector<std::pair<std::size_t, value_type>>;

  FmmaSignature signature;
  std::vector<SparseForm> alpha;  // flat index i*b + j
  std::vector<SparseForm> beta;   // flat index k*c + l
  std::vector<SparseForm> gamma;  // flat index m*c + n
};

template <CoefficientRing R>
InstantiatedScheme<R> instantiate_scheme(const BilinearScheme& scheme, const RingContext<R>& ctx) {
  InstantiatedScheme<R> out;
  out.signature = scheme.signature();
  const auto& ring = ctx.ring();
  auto sparse = [&](const CoeffMatrix& m) {
    typename InstantiatedScheme<R>::SparseForm form;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m.data()[k].is_zero()) continue;
      auto v = ctx.instantiate(m.data()[k]);
      if (!ring.is_zero(v)) form.emplace_back(k, std::move(v));
    }
    return form;
  };
  for (const auto& p : scheme.products()) {
    out.alpha.push_back(sparse(p.alpha));
    out.beta.push_back(sparse(p.beta));
    out.gamma.push_back(sparse(p.gamma));
  }
  return out;
}

/// Runs the instantiated scheme on scalar matrices: exactly r counted
/// multiplications between linear forms; coefficient scalings are free.
template <CoefficientRing R>
MatrixOf<R> evaluate(const InstantiatedScheme<R>& scheme, const R& ring, const MatrixOf<R>& a,
                     const MatrixOf<R>& b, MulCounter* counter = nullptr) {
  const auto& sig = scheme.signature;
  if (a.rows() != sig.a || a.cols() != sig.b || b.rows() != sig.b || b.cols() != sig.c) {
    throw DimensionError("scheme " + sig.to_string() + " cannot multiply " + a.shape() + " by " + b.shape());
  }
  auto c = zeros(ring, sig.a, sig.c);
  auto one = ring.one();
  auto linear = [&](const auto& form, const auto& x) {
    auto s = ring.zero();
    for (const auto& [k, coeff] : form) {
      s = ring.equal(coeff, one) ? ring.add(s, x.data()[k]) : ring.add(s, ring.mul(coeff, x.data()[k]));
    }
    return s;
  };
  for (std::size_t rho = 0; rho < scheme.alpha.size(); ++rho) {
    auto p = ring.mul(linear(scheme.alpha[rho], a), linear(scheme.beta[rho], b));
    for (const auto& [k, coeff] : scheme.gamma[rho]) {
      c.data()[k] = ring.add(c.data()[k], ring.mul(coeff, p));
    }
  }
  if (counter != nullptr) counter->add(scheme.alpha.size());
  return c;
}

template <CoefficientRing R>
MatrixOf<R> evaluate(const BilinearScheme& scheme, const RingContext<R>& ctx, const MatrixOf<R>& a,
                     const MatrixOf<R>& b, MulCounter* counter = nullptr) {
  return evaluate(instantiate_scheme(scheme, ctx), ctx.ring(), a, b, counter);
}

// ---------------------------------------------------------------------------

struct VerificationFailure {
  std::vector<std::size_t> index;  // 1-based
  std::string residual;

  friend bool operator<(const VerificationFailure& x, const VerificationFailure& y) { return x.index < y.index; }
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string method = {}, std::uint64_t total = 0)
      : method_(std::move(method)), total_(total) {}

  void add_checked(std::uint64_t n) { total_ += n; }
  void add_failure(VerificationFailure f) { failures_.push_back(std::move(f)); }
  /// Sums totals and unions failures; the result does not depend on merge order.
  void merge(VerificationReport other);

  const std::string& method() const noexcept { return method_; }
  bool passed() const noexcept { return failures_.empty(); }
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t passed_count() const noexcept { return total_ - failures_.size(); }
  /// Sorted by index tuple.
  const std::vector<VerificationFailure>& failures() const noexcept { return failures_; }

  /// e.g. "BRENT PASS 15625/15625"
  std::string summary() const;
  /// summary() followed by one line per failing tuple.
  std::string detail(std::size_t max_failures = SIZE_MAX) const;

  void sort_failures();

 private:
  std::string method_;
  std::uint64_t total_ = 0;
  std::vector<VerificationFailure> failures_;
};

/// Evaluates the scheme on every pair (e_ij, e_kl) of standard basis
/// matrices and compares with delta_jk e_il; a*b*b*c cases.
template <CoefficientRing R>
VerificationReport verify_basis_oracle(const BilinearScheme& scheme, const RingContext<R>& ctx,
                                       Execution exec = Execution::Parallel) {
  static_assert(R::is_exact, "basis verification needs an exact ring");
  const auto& ring = ctx.ring();
  const auto& sig = scheme.signature();
  const auto inst = instantiate_scheme(scheme, ctx);
  const std::size_t na = sig.a * sig.b, nb = sig.b * sig.c;
  std::vector<std::vector<VerificationFailure>> per_a(na);
  auto check_row = [&](std::size_t x) {
    const std::size_t i = x / sig.b, j = x % sig.b;
    auto a = basis_unit(ring, sig.a, sig.b, i, j);
    for (std::size_t y = 0; y < nb; ++y) {
      const std::size_t k = y / sig.c, l = y % sig.c;
      auto b = basis_unit(ring, sig.b, sig.c, k, l);
      auto got = evaluate(inst, ring, a, b);
      auto want = zeros(ring, sig.a, sig.c);
      if (j == k) want(i, l) = ring.one();
      auto residual = sub(ring, got, want);
      if (!is_zero(ring, residual)) {
        per_a[x].push_back({{i + 1, j + 1, k + 1, l + 1}, format_matrix(ring, residual)});
      }
    }
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t x = 0; x < na; ++x) check_row(x);
  } else {
    for (std::size_t x = 0; x < na; ++x) check_row(x);
  }
  VerificationReport report("BASIS", na * nb);
  for (auto& fs : per_a) {
    for (auto& f : fs) report.add_failure(std::move(f));
  }
  report.sort_failures();
  return report;
}

/// Basis oracle for a runtime RingSpec; refuses inexact rings.
VerificationReport verify_basis_oracle(const BilinearScheme& scheme, const RingSpec& spec,
                                       Execution exec = Execution::Parallel);

/// Checks the Brent equations
///     sum_rho alpha[i,j] beta[k,l] gamma[m,n] = delta_jk delta_im delta_ln
/// for all (a*b)(b*c)(a*c) index tuples as identities of Laurent polynomials
/// in L.  Reports every failing tuple with its residual polynomial.
VerificationReport verify_brent(const BilinearScheme& scheme, Execution exec = Execution::Parallel);

/// Brent equations checked numerically over the rationals at each given L.
/// A residual of exponent span s vanishing at s + 1 distinct nonzero points
/// is identically zero, so enough points certify the symbolic identity.
VerificationReport verify_brent_sampled(const BilinearScheme& scheme, const std::vector<mpq_class>& ell_values,
                                        Execution exec = Execution::Parallel);

/// The number of distinct points verify_brent_sampled needs for `scheme`.
std::size_t brent_sample_points_needed(const BilinearScheme& scheme);

/// Number of bilinear products, i.e. the rank r.
std::uint64_t count_multiplications(const BilinearScheme& scheme);

/// Additions with every linear form evaluated independently: per alpha and
/// beta form (nonzero terms - 1), plus per output entry (contributing
/// products - 1).  Coefficients that vanish at the chosen L are dropped.
std::uint64_t count_additions(const BilinearScheme& scheme, const RingSpec& spec);

/// The L-free scheme obtained by substituting L = +1 or L = -1.
BilinearScheme specialize_ell(const BilinearScheme& scheme, int sign);

}  // namespace fmm
