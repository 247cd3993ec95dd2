#include "fmm/scheme.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace fmm {
namespace {

// Brent residuals multiply three coefficients, so their exponents span
// three times the coefficient window.
constexpr int kResidualMin = 3 * LaurentCoeff::kMinExponent;
constexpr int kResidualMax = 3 * LaurentCoeff::kMaxExponent;
constexpr std::size_t kResidualWidth = kResidualMax - kResidualMin + 1;

using SmallPoly = std::vector<std::pair<int, std::int64_t>>;
using DensePoly = std::array<std::int64_t, kResidualWidth>;

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("Brent accumulator overflow");
  return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("Brent accumulator overflow");
  return r;
}

SmallPoly to_small(const LaurentCoeff& c) {
  SmallPoly p;
  for (const auto& [e, v] : c.terms()) {
    if (!v.fits_slong_p()) throw std::overflow_error("coefficient " + v.get_str() + " too large for Brent check");
    p.emplace_back(e, v.get_si());
  }
  return p;
}

SmallPoly multiply(const SmallPoly& x, const SmallPoly& y) {
  SmallPoly out;
  for (const auto& [ex, cx] : x) {
    for (const auto& [ey, cy] : y) {
      int e = ex + ey;
      auto v = checked_mul(cx, cy);
      auto it = std::find_if(out.begin(), out.end(), [e](const auto& t) { return t.first == e; });
      if (it == out.end()) {
        out.emplace_back(e, v);
      } else {
        it->second = checked_add(it->second, v);
      }
    }
  }
  return out;
}

std::string format_dense(const DensePoly& p) {
  std::string out;
  for (std::size_t k = 0; k < kResidualWidth; ++k) {
    std::int64_t c = p[k];
    if (c == 0) continue;
    int e = static_cast<int>(k) + kResidualMin;
    std::int64_t mag = c < 0 ? -c : c;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += 'L';
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

struct SparseCoeffs {
  std::vector<std::vector<std::pair<std::size_t, SmallPoly>>> beta, gamma;
  // alpha inverted: for each flat A-index, the products using it.
  std::vector<std::vector<std::pair<std::size_t, SmallPoly>>> alpha_by_index;
};

SparseCoeffs sparse_coeffs(const BilinearScheme& scheme) {
  const auto& sig = scheme.signature();
  SparseCoeffs s;
  s.alpha_by_index.resize(sig.a * sig.b);
  for (std::size_t rho = 0; rho < scheme.rank(); ++rho) {
    const auto& p = scheme.products()[rho];
    for (std::size_t k = 0; k < p.alpha.size(); ++k) {
      if (!p.alpha.data()[k].is_zero()) s.alpha_by_index[k].emplace_back(rho, to_small(p.alpha.data()[k]));
    }
    auto& beta = s.beta.emplace_back();
    for (std::size_t k = 0; k < p.beta.size(); ++k) {
      if (!p.beta.data()[k].is_zero()) beta.emplace_back(k, to_small(p.beta.data()[k]));
    }
    auto& gamma = s.gamma.emplace_back();
    for (std::size_t k = 0; k < p.gamma.size(); ++k) {
      if (!p.gamma.data()[k].is_zero()) gamma.emplace_back(k, to_small(p.gamma.data()[k]));
    }
  }
  return s;
}

// Numeric Brent check in an exact ring for an already-instantiated scheme.
template <CoefficientRing R>
void brent_numeric(const InstantiatedScheme<R>& inst, const R& ring, const std::string& tag, Execution exec,
                   VerificationReport& report) {
  const auto& sig = inst.signature;
  const std::size_t na = sig.a * sig.b, nb = sig.b * sig.c, nc = sig.a * sig.c;
  std::vector<std::vector<std::pair<std::size_t, typename R::value_type>>> alpha_by_index(na);
  for (std::size_t rho = 0; rho < inst.alpha.size(); ++rho) {
    for (const auto& [k, v] : inst.alpha[rho]) alpha_by_index[k].emplace_back(rho, v);
  }
  std::vector<std::vector<VerificationFailure>> per_x(na);
  auto check_x = [&](std::size_t x) {
    std::vector<typename R::value_type> acc(nb * nc, ring.zero());
    for (const auto& [rho, av] : alpha_by_index[x]) {
      for (const auto& [y, bv] : inst.beta[rho]) {
        auto ab = ring.mul(av, bv);
        for (const auto& [z, gv] : inst.gamma[rho]) acc[y * nc + z] = ring.add(acc[y * nc + z], ring.mul(ab, gv));
      }
    }
    const std::size_t i = x / sig.b, j = x % sig.b;
    for (std::size_t y = 0; y < nb; ++y) {
      const std::size_t k = y / sig.c, l = y % sig.c;
      for (std::size_t z = 0; z < nc; ++z) {
        const std::size_t m = z / sig.c, n = z % sig.c;
        auto v = acc[y * nc + z];
        if (j == k && i == m && l == n) v = ring.sub(v, ring.one());
        if (!ring.is_zero(v)) {
          per_x[x].push_back({{i + 1, j + 1, k + 1, l + 1, m + 1, n + 1}, tag + ring.format(v)});
        }
      }
    }
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t x = 0; x < na; ++x) check_x(x);
  } else {
    for (std::size_t x = 0; x < na; ++x) check_x(x);
  }
  report.add_checked(na * nb * nc);
  for (auto& fs : per_x) {
    for (auto& f : fs) report.add_failure(std::move(f));
  }
}

}  // namespace

std::string FmmaSignature::to_string() const {
  return std::to_string(a) + "×" + std::to_string(b) + "×" + std::to_string(c) + " : " + std::to_string(r);
}

BilinearScheme::BilinearScheme(FmmaSignature signature, std::vector<BilinearProduct> products, std::string name,
                               std::string provenance)
    : signature_(signature), products_(std::move(products)), name_(std::move(name)),
      provenance_(std::move(provenance)) {
  const auto& s = signature_;
  if (s.a == 0 || s.b == 0 || s.c == 0) throw SchemeError("scheme dimensions must be positive");
  if (products_.size() != s.r) {
    throw SchemeError("expected " + std::to_string(s.r) + " products, found " + std::to_string(products_.size()));
  }
  for (std::size_t rho = 0; rho < products_.size(); ++rho) {
    const auto& p = products_[rho];
    const std::string which = "product " + std::to_string(rho + 1);
    if (p.alpha.rows() != s.a || p.alpha.cols() != s.b) throw SchemeError(which + ": alpha is " + p.alpha.shape());
    if (p.beta.rows() != s.b || p.beta.cols() != s.c) throw SchemeError(which + ": beta is " + p.beta.shape());
    if (p.gamma.rows() != s.a || p.gamma.cols() != s.c) throw SchemeError(which + ": gamma is " + p.gamma.shape());
    LaurentRing ring;
    if (is_zero(ring, p.alpha)) throw SchemeError(which + ": alpha is zero");
    if (is_zero(ring, p.beta)) throw SchemeError(which + ": beta is zero");
  }
}

std::pair<int, int> BilinearScheme::exponent_range() const {
  int lo = 0, hi = 0;
  for (const auto& p : products_) {
    for (const auto* m : {&p.alpha, &p.beta, &p.gamma}) {
      for (const auto& c : m->data()) {
        if (c.is_zero()) continue;
        lo = std::min(lo, c.min_exponent());
        hi = std::max(hi, c.max_exponent());
      }
    }
  }
  return {lo, hi};
}

void VerificationReport::merge(VerificationReport other) {
  total_ += other.total_;
  for (auto& f : other.failures_) failures_.push_back(std::move(f));
  sort_failures();
}

void VerificationReport::sort_failures() {
  std::stable_sort(failures_.begin(), failures_.end(), [](const auto& x, const auto& y) {
    return x.index != y.index ? x.index < y.index : x.residual < y.residual;
  });
}

std::string VerificationReport::summary() const {
  return method_ + (passed() ? " PASS " : " FAIL ") + std::to_string(passed_count()) + "/" + std::to_string(total_);
}

std::string VerificationReport::detail(std::size_t max_failures) const {
  std::ostringstream out;
  out << summary() << '\n';
  std::size_t shown = 0;
  for (const auto& f : failures_) {
    if (shown++ == max_failures) {
      out << "  ... " << (failures_.size() - max_failures) << " more\n";
      break;
    }
    out << "  (";
    for (std::size_t k = 0; k < f.index.size(); ++k) out << (k ? "," : "") << f.index[k];
    out << ") residual:";
    if (f.residual.find('\n') != std::string::npos) {
      out << '\n';
      std::istringstream lines(f.residual);
      for (std::string line; std::getline(lines, line);) out << "    " << line << '\n';
    } else {
      out << ' ' << f.residual << '\n';
    }
  }
  return out.str();
}

VerificationReport verify_basis_oracle(const BilinearScheme& scheme, const RingSpec& spec, Execution exec) {
  return with_exact_ring(spec, [&](const auto& ctx) {
    using Ring = typename std::decay_t<decltype(ctx)>::ring_type;
    if constexpr (Ring::is_exact) {
      return verify_basis_oracle(scheme, ctx, exec);
    } else {
      return VerificationReport{};
    }
  });
}

VerificationReport verify_brent(const BilinearScheme& scheme, Execution exec) {
  const auto& sig = scheme.signature();
  const std::size_t na = sig.a * sig.b, nb = sig.b * sig.c, nc = sig.a * sig.c;
  const SparseCoeffs coeffs = sparse_coeffs(scheme);
  std::vector<std::vector<VerificationFailure>> per_x(na);
  auto check_x = [&](std::size_t x) {
    std::vector<DensePoly> acc(nb * nc, DensePoly{});
    for (const auto& [rho, av] : coeffs.alpha_by_index[x]) {
      for (const auto& [y, bv] : coeffs.beta[rho]) {
        SmallPoly ab = multiply(av, bv);
        for (const auto& [z, gv] : coeffs.gamma[rho]) {
          auto& cell = acc[y * nc + z];
          for (const auto& [e, v] : multiply(ab, gv)) {
            auto& slot = cell[static_cast<std::size_t>(e - kResidualMin)];
            slot = checked_add(slot, v);
          }
        }
      }
    }
    const std::size_t i = x / sig.b, j = x % sig.b;
    for (std::size_t y = 0; y < nb; ++y) {
      const std::size_t k = y / sig.c, l = y % sig.c;
      for (std::size_t z = 0; z < nc; ++z) {
        const std::size_t m = z / sig.c, n = z % sig.c;
        auto& cell = acc[y * nc + z];
        if (j == k && i == m && l == n) cell[static_cast<std::size_t>(-kResidualMin)] -= 1;
        bool zero = std::all_of(cell.begin(), cell.end(), [](std::int64_t v) { return v == 0; });
        if (!zero) per_x[x].push_back({{i + 1, j + 1, k + 1, l + 1, m + 1, n + 1}, format_dense(cell)});
      }
    }
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t x = 0; x < na; ++x) check_x(x);
  } else {
    for (std::size_t x = 0; x < na; ++x) check_x(x);
  }
  VerificationReport report("BRENT", na * nb * nc);
  for (auto& fs : per_x) {
    for (auto& f : fs) report.add_failure(std::move(f));
  }
  report.sort_failures();
  return report;
}

std::size_t brent_sample_points_needed(const BilinearScheme& scheme) {
  auto [lo, hi] = scheme.exponent_range();
  return static_cast<std::size_t>(3 * (hi - lo)) + 1;
}

VerificationReport verify_brent_sampled(const BilinearScheme& scheme, const std::vector<mpq_class>& ell_values,
                                        Execution exec) {
  VerificationReport report("BRENT@" + std::to_string(ell_values.size()) + "pts");
  Rationals q;
  for (const auto& ell : ell_values) {
    RingContext<Rationals> ctx(q, ell);
    brent_numeric(instantiate_scheme(scheme, ctx), q, "L=" + format_rational(ell) + ": ", exec, report);
  }
  report.sort_failures();
  return report;
}

std::uint64_t count_multiplications(const BilinearScheme& scheme) { return scheme.rank(); }

std::uint64_t count_additions(const BilinearScheme& scheme, const RingSpec& spec) {
  return with_ring(spec, [&](const auto& ctx) -> std::uint64_t {
    const auto inst = instantiate_scheme(scheme, ctx);
    std::uint64_t adds = 0;
    auto form_adds = [](std::size_t terms) -> std::uint64_t { return terms == 0 ? 0 : terms - 1; };
    std::vector<std::size_t> contributions(scheme.signature().a * scheme.signature().c, 0);
    for (std::size_t rho = 0; rho < inst.alpha.size(); ++rho) {
      adds += form_adds(inst.alpha[rho].size()) + form_adds(inst.beta[rho].size());
      for (const auto& [k, v] : inst.gamma[rho]) ++contributions[k];
    }
    for (auto n : contributions) adds += form_adds(n);
    return adds;
  });
}

BilinearScheme specialize_ell(const BilinearScheme& scheme, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("specialize_ell needs L = 1 or L = -1");
  auto fix = [sign](const CoeffMatrix& m) {
    std::vector<LaurentCoeff> data;
    data.reserve(m.size());
    for (const auto& c : m.data()) data.emplace_back(c.evaluate(mpq_class(sign)).get_num());
    return CoeffMatrix(m.rows(), m.cols(), std::move(data));
  };
  std::vector<BilinearProduct> products;
  for (const auto& p : scheme.products()) products.push_back({fix(p.alpha), fix(p.beta), fix(p.gamma)});
  return BilinearScheme(scheme.signature(), std::move(products), scheme.name() + (sign == 1 ? "_L1" : "_Lm1"),
                        scheme.provenance() + "; specialized at L = " + std::to_string(sign));
}

}  // namespace fmm
