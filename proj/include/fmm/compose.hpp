// Tensor composition of schemes and the recursive multiplier built on it.

#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "fmm/matrix.hpp"
#include "fmm/scheme.hpp"

namespace fmm {

/// Kronecker product of two schemes.  For outer (a,b,c):r1 and inner
/// (d,e,f):r2 the result is (ad,be,cf):r1*r2 with
///     alpha[(i*d+i'), (j*e+j')] = alpha1[i,j] * alpha2[i',j']
/// (likewise beta and gamma) and product index rho1*r2 + rho2.
/// Throws LaurentRangeError when a coefficient leaves L^-4..L^4.
BilinearScheme compose(const BilinearScheme& outer, const BilinearScheme& inner);

struct RecursionPlan {
  static constexpr std::size_t kDefaultCutoff = 8;
  static constexpr std::size_t kNoCutoff = std::numeric_limits<std::size_t>::max();

  /// Applied outermost first.
  std::vector<BilinearScheme> levels;
  /// A level is applied only while some current dimension exceeds this.
  std::size_t cutoff = kDefaultCutoff;

  /// "makarov99,strassen,cutoff=4"
  std::string to_string() const;
};

/// Parses `name[,name...][,cutoff=N]` with catalog aliases or full names,
/// or the single word `naive`.  When `cutoff=` is absent every listed level
/// is applied (cutoff 1).
RecursionPlan parse_plan(std::string_view text);

/// How a plan applies to an m x k by k x p product.
struct PlanShape {
  std::vector<std::size_t> used_levels;  // indices into plan.levels
  std::size_t leaf_m = 0, leaf_k = 0, leaf_p = 0;
  std::size_t padded_m = 0, padded_k = 0, padded_p = 0;
};

/// Walks the levels outermost first: while max(m, k, p) > cutoff the next
/// level (a,b,c) divides the dimensions by a, b, c, rounding up.  Whatever
/// remains is multiplied naively.  Throws std::invalid_argument for an empty
/// plan whose dimensions exceed the cutoff.
PlanShape plan_shape(const RecursionPlan& plan, std::size_t m, std::size_t k, std::size_t p);

/// Bilinear multiplications recursive_multiply performs: the product of the
/// used ranks times leaf_m * leaf_k * leaf_p.
std::uint64_t multiplication_count(const RecursionPlan& plan, std::size_t m, std::size_t k, std::size_t p);
std::uint64_t multiplication_count(const RecursionPlan& plan, std::size_t n);

namespace detail {

template <CoefficientRing R>
struct RecursionState {
  const R& ring;
  std::vector<InstantiatedScheme<R>> levels;
  MulCounter* counter;
};

template <CoefficientRing R>
MatrixOf<R> linear_block_sum(const R& ring, const MatrixOf<R>& x, std::size_t block_rows, std::size_t block_cols,
                             std::size_t grid_cols, const typename InstantiatedScheme<R>::SparseForm& form) {
  auto out = zeros(ring, block_rows, block_cols);
  for (const auto& [flat, coeff] : form) {
    const std::size_t bi = flat / grid_cols, bj = flat % grid_cols;
    const auto one = ring.one();
    for (std::size_t i = 0; i < block_rows; ++i) {
      const auto* src = &x(bi * block_rows + i, bj * block_cols);
      auto* dst = &out(i, 0);
      if (ring.equal(coeff, one)) {
        for (std::size_t j = 0; j < block_cols; ++j) dst[j] = ring.add(dst[j], src[j]);
      } else if (ring.equal(coeff, ring.neg(one))) {
        for (std::size_t j = 0; j < block_cols; ++j) dst[j] = ring.sub(dst[j], src[j]);
      } else {
        for (std::size_t j = 0; j < block_cols; ++j) dst[j] = ring.add(dst[j], ring.mul(coeff, src[j]));
      }
    }
  }
  return out;
}

template <CoefficientRing R>
void scatter_product(const R& ring, const MatrixOf<R>& prod, std::size_t grid_cols,
                     const typename InstantiatedScheme<R>::SparseForm& form, MatrixOf<R>& c) {
  const std::size_t br = prod.rows(), bc = prod.cols();
  const auto one = ring.one();
  for (const auto& [flat, coeff] : form) {
    const std::size_t bi = flat / grid_cols, bj = flat % grid_cols;
    const bool plus = ring.equal(coeff, one), minus = ring.equal(coeff, ring.neg(one));
    for (std::size_t i = 0; i < br; ++i) {
      const auto* src = &prod(i, 0);
      auto* dst = &c(bi * br + i, bj * bc);
      for (std::size_t j = 0; j < bc; ++j) {
        dst[j] = plus ? ring.add(dst[j], src[j])
                      : minus ? ring.sub(dst[j], src[j]) : ring.add(dst[j], ring.mul(coeff, src[j]));
      }
    }
  }
}

template <CoefficientRing R>
MatrixOf<R> recurse(const RecursionState<R>& st, const MatrixOf<R>& a, const MatrixOf<R>& b, std::size_t depth,
                    Execution exec) {
  const auto& ring = st.ring;
  if (depth == st.levels.size()) {
    if (st.counter != nullptr) st.counter->add(std::uint64_t(a.rows()) * a.cols() * b.cols());
    return naive_multiply(ring, a, b, exec);
  }
  const auto& s = st.levels[depth];
  const auto& sig = s.signature;
  const std::size_t bm = a.rows() / sig.a, bk = a.cols() / sig.b, bp = b.cols() / sig.c;
  const std::size_t r = s.alpha.size();
  auto product = [&](std::size_t rho, Execution inner) {
    auto left = linear_block_sum(ring, a, bm, bk, sig.b, s.alpha[rho]);
    auto right = linear_block_sum(ring, b, bk, bp, sig.c, s.beta[rho]);
    return recurse(st, left, right, depth + 1, inner);
  };
  auto c = zeros(ring, a.rows(), b.cols());
  if (exec == Execution::Parallel && r > 1) {
    // Products are independent; the sum is assembled in product order.
    std::vector<MatrixOf<R>> parts(r);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t rho = 0; rho < r; ++rho) parts[rho] = product(rho, Execution::Serial);
    for (std::size_t rho = 0; rho < r; ++rho) scatter_product(ring, parts[rho], sig.c, s.gamma[rho], c);
  } else {
    for (std::size_t rho = 0; rho < r; ++rho) scatter_product(ring, product(rho, exec), sig.c, s.gamma[rho], c);
  }
  return c;
}

}  // namespace detail

/// C = A B through the plan: A and B are zero-padded to the plan shape, each
/// used level splits into its scheme's blocks, leaves are multiplied
/// naively, and the unpadded block of the result is returned.  Exact rings
/// give naive_multiply's result.  With Execution::Parallel the products of
/// the outermost level run concurrently.
template <CoefficientRing R>
MatrixOf<R> recursive_multiply(const MatrixOf<R>& a, const MatrixOf<R>& b, const RecursionPlan& plan,
                               const RingContext<R>& ctx, MulCounter* counter = nullptr,
                               Execution exec = Execution::Parallel) {
  if (a.cols() != b.rows()) throw DimensionError("cannot multiply " + a.shape() + " by " + b.shape());
  const auto& ring = ctx.ring();
  const auto shape = plan_shape(plan, a.rows(), a.cols(), b.cols());
  detail::RecursionState<R> st{ring, {}, counter};
  for (auto idx : shape.used_levels) st.levels.push_back(instantiate_scheme(plan.levels[idx], ctx));
  if (st.levels.empty()) return detail::recurse(st, a, b, 0, exec);
  auto pa = embed(ring, a, shape.padded_m, shape.padded_k);
  auto pb = embed(ring, b, shape.padded_k, shape.padded_p);
  auto pc = detail::recurse(st, pa, pb, 0, exec);
  return submatrix(pc, 0, 0, a.rows(), b.cols());
}

}  // namespace fmm
