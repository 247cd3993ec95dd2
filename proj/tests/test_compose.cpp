#include <gtest/gtest.h>

#include <random>

#include "fmm/catalog.hpp"
#include "fmm/compose.hpp"
#include "oracle.hpp"

using namespace fmm;

namespace {

MatrixOf<PrimeField> random_fp(std::mt19937_64& rng, std::size_t r, std::size_t c, std::uint64_t p) {
  return MatrixOf<PrimeField>(r, c, oracle::random_flat(rng, r * c, p));
}

std::vector<mpq_class> sample_points(std::size_t n) {
  std::vector<mpq_class> pts;
  for (std::size_t k = 1; k <= n; ++k) pts.emplace_back(k % 2 ? static_cast<long>(k) : -static_cast<long>(k), 1);
  return pts;
}

}  // namespace

TEST(Compose, PaperRanks) {
  auto c = compose(makarov_sedoglavic_5x5x5_99(), strassen_2x2x2());
  EXPECT_EQ(c.signature(), (FmmaSignature{10, 10, 10, 693}));
  auto s = compose(strassen_2x2x2(), strassen_2x2x2());
  EXPECT_EQ(s.signature(), (FmmaSignature{4, 4, 4, 49}));
  EXPECT_TRUE(verify_brent(s).passed());
}

TEST(Compose, Makarov693VerifiesSymbolicallyAndSampled) {
  auto c = compose(makarov_sedoglavic_5x5x5_99(), strassen_2x2x2());
  EXPECT_EQ(verify_brent(c).summary(), "BRENT PASS 1000000/1000000");
  ASSERT_EQ(brent_sample_points_needed(c), 13u);
  EXPECT_TRUE(verify_brent_sampled(c, sample_points(13)).passed());
}

TEST(Compose, TrivialIsTheUnit) {
  for (const auto& e : catalog()) {
    auto left = compose(trivial_1x1x1(), e.scheme);
    auto right = compose(e.scheme, trivial_1x1x1());
    EXPECT_EQ(left.products(), e.scheme.products());
    EXPECT_EQ(right.products(), e.scheme.products());
    EXPECT_EQ(left.signature(), e.scheme.signature());
  }
}

TEST(Compose, BlockIndexMapping) {
  const auto strassen = strassen_2x2x2(), hk = hopcroft_kerr_2x2x3();
  auto c = compose(strassen, hk);
  const auto& s = strassen.products();
  const auto& h = hk.products();
  // product 3*11 + 4 = strassen m4 with hk m5; entry ((1,0),(0,1)) -> (2, 1)
  const auto& p = c.products()[3 * 11 + 4];
  EXPECT_EQ(p.alpha(1 * 2 + 0, 0 * 2 + 1), s[3].alpha(1, 0) * h[4].alpha(0, 1));
  EXPECT_EQ(p.beta(1 * 2 + 1, 1 * 3 + 2), s[3].beta(1, 1) * h[4].beta(1, 2));
  EXPECT_EQ(p.gamma(0 * 2 + 1, 1 * 3 + 0), s[3].gamma(0, 1) * h[4].gamma(1, 0));
}

// All catalog pairs with composite rank at most 1100 stay exact.
TEST(Compose, PreservesVerification) {
  int checked = 0;
  for (const auto& x : catalog()) {
    for (const auto& y : catalog()) {
      if (x.scheme.rank() * y.scheme.rank() > 1100) continue;
      auto c = compose(x.scheme, y.scheme);
      EXPECT_EQ(c.rank(), x.scheme.rank() * y.scheme.rank());
      EXPECT_TRUE(verify_brent(c).passed()) << c.name();
      ++checked;
    }
  }
  EXPECT_GE(checked, 40);
}

TEST(Compose, BrokenFactorBreaksComposite) {
  auto s = strassen_2x2x2();
  auto p = s.products();
  p[2].gamma(0, 1) = LaurentCoeff(-1);
  BilinearScheme broken(s.signature(), p, "broken", "");
  EXPECT_FALSE(verify_brent(compose(broken, laderman_3x3x3())).passed());
  EXPECT_FALSE(verify_brent(compose(laderman_3x3x3(), broken)).passed());
}

TEST(Compose, ExponentOverflowAsksForSpecialization) {
  auto cube = [](const char* t) { return CoeffMatrix(1, 1, std::vector<LaurentCoeff>{LaurentCoeff::parse(t)}); };
  BilinearScheme s(FmmaSignature{1, 1, 1, 1}, {{cube("L^3"), cube("1"), cube("L^-3")}}, "cube", "");
  ASSERT_TRUE(verify_brent(s).passed());
  try {
    compose(s, s);
    FAIL();
  } catch (const LaurentRangeError& e) {
    EXPECT_NE(std::string(e.what()).find("specialize_ell"), std::string::npos);
  }
  auto flat = specialize_ell(s, 1);
  EXPECT_TRUE(verify_brent(compose(flat, flat)).passed());
}

TEST(Plan, Parsing) {
  auto p = parse_plan("makarov99,strassen,cutoff=4");
  ASSERT_EQ(p.levels.size(), 2u);
  EXPECT_EQ(p.levels[1].name(), "strassen_2x2x2_7");
  EXPECT_EQ(p.cutoff, 4u);
  EXPECT_EQ(p.to_string(), "makarov99,strassen,cutoff=4");
  EXPECT_EQ(parse_plan("makarov99").cutoff, 1u);
  EXPECT_EQ(parse_plan("naive").to_string(), "naive");
  EXPECT_TRUE(parse_plan("naive").levels.empty());
  EXPECT_EQ(RecursionPlan{}.cutoff, 8u);
  EXPECT_THROW(parse_plan("pan"), std::invalid_argument);
  EXPECT_THROW(parse_plan("strassen,,laderman"), std::invalid_argument);
  EXPECT_THROW(parse_plan("cutoff=3"), std::invalid_argument);
  EXPECT_THROW(parse_plan("strassen,cutoff=0"), std::invalid_argument);
  EXPECT_THROW(parse_plan("strassen,cutoff=2,laderman"), std::invalid_argument);
}

TEST(Plan, ShapesAndPadding) {
  auto p = parse_plan("makarov99,cutoff=2");
  auto s = plan_shape(p, 7, 7, 7);
  EXPECT_EQ(s.used_levels.size(), 1u);
  EXPECT_EQ(s.padded_m, 10u);
  EXPECT_EQ(s.leaf_m, 2u);
  auto five = plan_shape(parse_plan("makarov99,cutoff=5"), 5, 5, 5);
  EXPECT_TRUE(five.used_levels.empty());
  RecursionPlan empty;
  empty.cutoff = 4;
  EXPECT_THROW(plan_shape(empty, 5, 5, 5), std::invalid_argument);
  EXPECT_NO_THROW(plan_shape(empty, 4, 4, 4));
}

TEST(Plan, MultiplicationCounts) {
  EXPECT_EQ(multiplication_count(parse_plan("makarov99"), 5), 99u);
  EXPECT_EQ(multiplication_count(parse_plan("makarov99,strassen"), 10), 693u);
  EXPECT_EQ(multiplication_count(parse_plan("makarov99,makarov99"), 25), 9801u);
  EXPECT_EQ(multiplication_count(parse_plan("naive"), 25), 15625u);
  RecursionPlan strassens;
  strassens.cutoff = 1;
  std::uint64_t seven = 1;
  for (int k = 1; k <= 6; ++k) {
    strassens.levels.push_back(strassen_2x2x2());
    seven *= 7;
    EXPECT_EQ(multiplication_count(strassens, std::size_t{1} << k), seven);
  }
  EXPECT_EQ(multiplication_count(parse_plan("makarov99,cutoff=5"), 5), 125u);
  EXPECT_EQ(multiplication_count(parse_plan("hk223"), 2, 2, 3), 11u);
}

TEST(Recursive, CountsMatchInstrumentation) {
  std::mt19937_64 rng(31);
  PrimeField f(101);
  RingContext<PrimeField> ctx(f, 2);
  for (auto [plan, n] : {std::pair<const char*, std::size_t>{"makarov99", 5}, {"makarov99,strassen", 10},
                         {"makarov99,makarov99", 25}, {"makarov99,cutoff=2", 7}, {"strassen,laderman", 6}}) {
    auto p = parse_plan(plan);
    auto a = random_fp(rng, n, n, 101), b = random_fp(rng, n, n, 101);
    MulCounter counter;
    auto c = recursive_multiply(a, b, p, ctx, &counter);
    EXPECT_EQ(counter.value(), multiplication_count(p, n)) << plan;
    EXPECT_EQ(c.data(), oracle::multiply_mod(a.data(), b.data(), n, n, n, 101)) << plan;
  }
}

TEST(Recursive, AllSizesUpTo30) {
  std::mt19937_64 rng(32);
  PrimeField f(101);
  RingContext<PrimeField> ctx(f, 3);
  for (const char* levels : {"makarov99", "makarov99,strassen", "strassen"}) {
    for (int cutoff : {1, 2, 3}) {
      auto p = parse_plan(std::string(levels) + ",cutoff=" + std::to_string(cutoff));
      for (std::size_t n = 1; n <= 30; ++n) {
        for (int t = 0; t < 10; ++t) {
          auto a = random_fp(rng, n, n, 101), b = random_fp(rng, n, n, 101);
          ASSERT_EQ(recursive_multiply(a, b, p, ctx).data(), oracle::multiply_mod(a.data(), b.data(), n, n, n, 101))
              << p.to_string() << " n=" << n;
        }
      }
    }
  }
}

TEST(Recursive, RectangularAndRationals) {
  std::mt19937_64 rng(33);
  Rationals q;
  RingContext<Rationals> ctx(q, mpq_class(1, 2));
  for (auto [m, k, n] : {std::array<std::size_t, 3>{7, 7, 7}, {3, 11, 4}, {12, 5, 9}, {1, 13, 1}}) {
    auto a = oracle::random_rat(rng, m * k), b = oracle::random_rat(rng, k * n);
    auto c = recursive_multiply(MatrixOf<Rationals>(m, k, a), MatrixOf<Rationals>(k, n, b),
                                parse_plan("makarov99,hk332,cutoff=2"), ctx);
    EXPECT_EQ(c.data(), oracle::multiply_rat(a, b, m, k, n));
  }
  EXPECT_THROW(recursive_multiply(zeros(q, 2, 3), zeros(q, 2, 3), parse_plan("strassen"), ctx), DimensionError);
}

TEST(Recursive, PaddingNeutrality) {
  std::mt19937_64 rng(34);
  PrimeField f(1000003);
  RingContext<PrimeField> ctx(f, 5);
  auto p = parse_plan("strassen,makarov99,cutoff=1");
  auto a = random_fp(rng, 9, 9, 1000003), b = random_fp(rng, 9, 9, 1000003);
  auto base = recursive_multiply(a, b, p, ctx);
  for (std::size_t extra : {1, 4, 11}) {
    auto pa = embed(f, a, 9 + extra, 9 + extra), pb = embed(f, b, 9 + extra, 9 + extra);
    auto padded = recursive_multiply(pa, pb, p, ctx);
    EXPECT_EQ(submatrix(padded, 0, 0, 9, 9).data(), base.data());
  }
}

TEST(Recursive, SerialMatchesParallel) {
  std::mt19937_64 rng(35);
  PrimeField f(101);
  RingContext<PrimeField> ctx(f, 1);
  auto p = parse_plan("makarov99,strassen,cutoff=2");
  auto a = random_fp(rng, 23, 23, 101), b = random_fp(rng, 23, 23, 101);
  MulCounter s, par;
  auto x = recursive_multiply(a, b, p, ctx, &s, Execution::Serial);
  auto y = recursive_multiply(a, b, p, ctx, &par, Execution::Parallel);
  EXPECT_EQ(x.data(), y.data());
  EXPECT_EQ(s.value(), par.value());
}

TEST(Recursive, CutoffFallsThroughToNaive) {
  Rationals q;
  RingContext<Rationals> ctx(q, 1);
  std::mt19937_64 rng(36);
  auto a = oracle::random_rat(rng, 25), b = oracle::random_rat(rng, 25);
  MulCounter counter;
  auto c = recursive_multiply(MatrixOf<Rationals>(5, 5, a), MatrixOf<Rationals>(5, 5, b),
                              parse_plan("makarov99,cutoff=5"), ctx, &counter);
  EXPECT_EQ(c.data(), oracle::multiply_rat(a, b, 5, 5, 5));
  EXPECT_EQ(counter.value(), 125u);
}

TEST(Recursive, MachineIntegersAgreeWithF101AfterReduction) {
  std::mt19937_64 rng(37);
  MachineInt64 z;
  RingContext<MachineInt64> ctx(z, -1);
  auto p = parse_plan("makarov99,strassen");
  auto a = zeros(z, 10, 10), b = zeros(z, 10, 10);
  for (auto& x : a.data()) x = static_cast<std::int64_t>(rng() % 201) - 100;
  for (auto& x : b.data()) x = static_cast<std::int64_t>(rng() % 201) - 100;
  EXPECT_TRUE(equal(z, recursive_multiply(a, b, p, ctx), naive_multiply(z, a, b)));
}
