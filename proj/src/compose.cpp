#include "fmm/compose.hpp"

#include <algorithm>
#include <stdexcept>

#include "fmm/catalog.hpp"

namespace fmm {
namespace {

CoeffMatrix kron(const CoeffMatrix& x, const CoeffMatrix& y) {
  CoeffMatrix out(x.rows() * y.rows(), x.cols() * y.cols(), LaurentCoeff());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const auto& xij = x(i, j);
      if (xij.is_zero()) continue;
      for (std::size_t k = 0; k < y.rows(); ++k) {
        for (std::size_t l = 0; l < y.cols(); ++l) {
          if (!y(k, l).is_zero()) out(i * y.rows() + k, j * y.cols() + l) = xij * y(k, l);
        }
      }
    }
  }
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

BilinearScheme compose(const BilinearScheme& outer, const BilinearScheme& inner) {
  const auto& s1 = outer.signature();
  const auto& s2 = inner.signature();
  FmmaSignature sig{s1.a * s2.a, s1.b * s2.b, s1.c * s2.c, s1.r * s2.r};
  std::vector<BilinearProduct> products;
  products.reserve(sig.r);
  try {
    for (const auto& p : outer.products()) {
      for (const auto& q : inner.products()) {
        products.push_back({kron(p.alpha, q.alpha), kron(p.beta, q.beta), kron(p.gamma, q.gamma)});
      }
    }
  } catch (const LaurentRangeError& e) {
    throw LaurentRangeError(std::string("composing ") + outer.name() + " with " + inner.name() + ": " + e.what() +
                            "; substitute a value for L first (specialize_ell)");
  }
  return BilinearScheme(sig, std::move(products), outer.name() + "*" + inner.name(),
                        "Kronecker composition of " + outer.name() + " (outer) and " + inner.name() + " (inner)");
}

std::string RecursionPlan::to_string() const {
  if (levels.empty() && cutoff == kNoCutoff) return "naive";
  std::string out;
  for (const auto& s : levels) {
    std::string name = s.name();
    for (const auto& e : catalog()) {
      if (e.scheme.name() == name) name = e.alias;
    }
    out += name + ",";
  }
  return out + "cutoff=" + std::to_string(cutoff);
}

RecursionPlan parse_plan(std::string_view text) {
  RecursionPlan plan;
  if (trim(text) == "naive") {
    plan.cutoff = RecursionPlan::kNoCutoff;
    return plan;
  }
  plan.cutoff = 1;
  bool have_cutoff = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = std::min(text.find(',', start), text.size());
    std::string item = trim(text.substr(start, end - start));
    start = end + 1;
    if (item.empty()) throw std::invalid_argument("empty item in plan '" + std::string(text) + "'");
    if (item.rfind("cutoff=", 0) == 0) {
      if (have_cutoff) throw std::invalid_argument("cutoff given twice in plan");
      std::string value = item.substr(7);
      if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos || std::stoull(value) == 0) {
        throw std::invalid_argument("cutoff must be a positive integer, got '" + value + "'");
      }
      plan.cutoff = std::stoull(value);
      have_cutoff = true;
    } else if (have_cutoff) {
      throw std::invalid_argument("cutoff must come last in plan");
    } else {
      auto s = find_catalog_scheme(item);
      if (!s) throw std::invalid_argument("unknown scheme '" + item + "' in plan");
      plan.levels.push_back(std::move(*s));
    }
  }
  if (plan.levels.empty()) throw std::invalid_argument("plan names no schemes (use 'naive' for none)");
  return plan;
}

PlanShape plan_shape(const RecursionPlan& plan, std::size_t m, std::size_t k, std::size_t p) {
  if (m == 0 || k == 0 || p == 0) throw DimensionError("matrix dimensions must be positive");
  if (plan.levels.empty() && std::max({m, k, p}) > plan.cutoff) {
    throw std::invalid_argument("empty plan cannot reduce " + std::to_string(m) + "x" + std::to_string(k) + "x" +
                                std::to_string(p) + " below cutoff " + std::to_string(plan.cutoff));
  }
  PlanShape shape;
  std::size_t mult_m = 1, mult_k = 1, mult_p = 1;
  for (std::size_t idx = 0; idx < plan.levels.size() && std::max({m, k, p}) > plan.cutoff; ++idx) {
    const auto& sig = plan.levels[idx].signature();
    m = (m + sig.a - 1) / sig.a;
    k = (k + sig.b - 1) / sig.b;
    p = (p + sig.c - 1) / sig.c;
    mult_m *= sig.a;
    mult_k *= sig.b;
    mult_p *= sig.c;
    shape.used_levels.push_back(idx);
  }
  shape.leaf_m = m;
  shape.leaf_k = k;
  shape.leaf_p = p;
  shape.padded_m = m * mult_m;
  shape.padded_k = k * mult_k;
  shape.padded_p = p * mult_p;
  return shape;
}

std::uint64_t multiplication_count(const RecursionPlan& plan, std::size_t m, std::size_t k, std::size_t p) {
  const auto shape = plan_shape(plan, m, k, p);
  std::uint64_t count = std::uint64_t(shape.leaf_m) * shape.leaf_k * shape.leaf_p;
  for (auto idx : shape.used_levels) count *= plan.levels[idx].rank();
  return count;
}

std::uint64_t multiplication_count(const RecursionPlan& plan, std::size_t n) {
  return multiplication_count(plan, n, n, n);
}

}  // namespace fmm
