#include <gtest/gtest.h>

#include <random>

#include "fmm/laurent.hpp"
#include "fmm/ring.hpp"

using namespace fmm;

namespace {

LaurentCoeff L(const char* text) { return LaurentCoeff::parse(text); }

}  // namespace

TEST(Instantiate, RationalsInversePowers) {
  RingContext<Rationals> ctx(Rationals{}, 2);
  EXPECT_EQ(ctx.instantiate(L("L^-2")), mpq_class(1, 4));
  RingContext<Rationals> three(Rationals{}, 3);
  EXPECT_EQ(three.instantiate(L("L^-1")), mpq_class(1, 3));
}

TEST(Instantiate, PrimeFieldInverse) {
  RingContext<PrimeField> ctx(PrimeField(101), 2);
  EXPECT_EQ(ctx.instantiate(L("L^-1")), 51u);
  EXPECT_EQ((2 * 51) % 101, 1);
}

TEST(Instantiate, CancelsAtOne) {
  RingContext<Rationals> ctx(Rationals{}, 1);
  EXPECT_EQ(ctx.instantiate(L("L^2 - 1")), 0);
}

TEST(Instantiate, F7MatchesBruteForceTable) {
  // 2L - L^-2 at L = 2 over F_7, with the inverse of 4 found by search:
  // 4 - 2 = 2.
  const std::uint64_t p = 7;
  std::uint64_t inv4 = 0;
  for (std::uint64_t x = 1; x < p; ++x) {
    if ((4 * x) % p == 1) inv4 = x;
  }
  const std::uint64_t expected = ((2 * 2) % p + p - inv4) % p;
  EXPECT_EQ(expected, 2u);
  RingContext<PrimeField> ctx(PrimeField(p), 2);
  EXPECT_EQ(ctx.instantiate(L("2*L - L^-2")), expected);
  // Every nonzero L of F_7 against a table built from repeated addition.
  for (std::uint64_t ell = 1; ell < p; ++ell) {
    std::uint64_t inv = 0;
    for (std::uint64_t x = 1; x < p; ++x) {
      if ((ell * x) % p == 1) inv = x;
    }
    const std::uint64_t want = (2 * ell + p - (inv * inv) % p) % p;
    RingContext<PrimeField> c(PrimeField(p), mpq_class(static_cast<long>(ell)));
    EXPECT_EQ(c.instantiate(L("2*L - L^-2")), want) << "L = " << ell;
  }
}

TEST(RingSpec, Validation) {
  EXPECT_THROW(RingSpec::machine_int64(3), NotInvertibleError);
  EXPECT_NO_THROW(RingSpec::machine_int64(-1));
  EXPECT_THROW(RingSpec::prime_field(100), std::invalid_argument);
  EXPECT_THROW(RingSpec::prime_field(std::uint64_t{1} << 62), std::invalid_argument);
  EXPECT_NO_THROW(RingSpec::prime_field((std::uint64_t{1} << 61) - 1));
  EXPECT_THROW(RingSpec::rationals(0), NotInvertibleError);
  EXPECT_THROW(RingSpec::prime_field(101, 202), NotInvertibleError);
  EXPECT_EQ(RingSpec::parse("fp:101").modulus(), 101u);
  EXPECT_EQ(RingSpec::parse("fp:101").name(), "fp:101");
  EXPECT_THROW(RingSpec::parse("fp:x"), std::invalid_argument);
  EXPECT_THROW(RingSpec::parse("complex"), std::invalid_argument);
  EXPECT_FALSE(RingSpec::parse("f64").is_exact());
  EXPECT_TRUE(RingSpec::parse("rat").is_exact());
}

TEST(RingSpec, InexactRingsRefusedForVerification) {
  EXPECT_THROW(with_exact_ring(RingSpec::float64(), [](const auto&) { return 0; }), std::invalid_argument);
  EXPECT_THROW(with_exact_ring(RingSpec::machine_int64(), [](const auto&) { return 0; }), std::invalid_argument);
}

TEST(Primality, AgreesWithTrialDivision) {
  auto trial = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime_u64(n), trial(n)) << n;
  EXPECT_TRUE(is_prime_u64((std::uint64_t{1} << 61) - 1));
  EXPECT_FALSE(is_prime_u64(std::uint64_t{3215031751}));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Inverse, ErrorsNameTheElement) {
  try {
    PrimeField(101).inverse(0);
    FAIL();
  } catch (const NotInvertibleError& e) {
    EXPECT_NE(std::string(e.what()).find("0 is not invertible modulo 101"), std::string::npos);
  }
  EXPECT_THROW(MachineInt64{}.inverse(2), NotInvertibleError);
  EXPECT_EQ(MachineInt64{}.inverse(-1), -1);
}

TEST(RationalLiteral, ParsesAndReduces) {
  EXPECT_EQ(parse_rational("6/4"), mpq_class(3, 2));
  EXPECT_EQ(parse_rational("-6/4"), mpq_class(-3, 2));
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_EQ(format_rational(mpq_class(-3, 2)), "-3/2");
  EXPECT_EQ(format_rational(mpq_class(4)), "4");
  EXPECT_THROW(parse_rational("1/0"), LiteralError);
  EXPECT_THROW(parse_rational("1/-2"), LiteralError);
  EXPECT_THROW(parse_rational("x"), LiteralError);
  EXPECT_THROW(parse_rational("1.5"), LiteralError);
}

TEST(Laurent, ParseIsCanonical) {
  auto c = L("2*L^2 - 1 + 3*L^-1");
  EXPECT_EQ(c.to_string(), "3*L^-1-1+2*L^2");
  EXPECT_EQ(L("3*L^-1-1+2*L^2"), c);
  EXPECT_EQ(L("L - L"), LaurentCoeff());
  EXPECT_TRUE(L("L - L").terms().empty());
  EXPECT_EQ(L("-L^-2").to_string(), "-L^-2");
  EXPECT_EQ(L("L").to_string(), "L");
  EXPECT_EQ(L("0").to_string(), "0");
  EXPECT_EQ(L("L^(-1)"), L("L^-1"));
  EXPECT_THROW(L("L^5"), LaurentRangeError);
  EXPECT_THROW(L("2 3"), LiteralError);
  EXPECT_THROW(L("a11"), LiteralError);
  EXPECT_THROW(L("L^3") * L("L^2"), LaurentRangeError);
}

TEST(Laurent, RoundTripsRandomElements) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    LaurentCoeff c;
    for (int e = -4; e <= 4; ++e) c += LaurentCoeff::monomial(coef(rng) * (rng() % 3 == 0), e);
    EXPECT_EQ(L(c.to_string().c_str()), c);
    for (const auto& [e, v] : c.terms()) EXPECT_NE(v, 0);
  }
}

namespace {

template <class R, class Gen>
void check_ring_axioms(const R& ring, Gen gen, int cases) {
  for (int t = 0; t < cases; ++t) {
    auto x = gen(), y = gen(), z = gen();
    ASSERT_TRUE(ring.equal(ring.add(ring.add(x, y), z), ring.add(x, ring.add(y, z))));
    ASSERT_TRUE(ring.equal(ring.mul(ring.mul(x, y), z), ring.mul(x, ring.mul(y, z))));
    ASSERT_TRUE(ring.equal(ring.mul(x, ring.add(y, z)), ring.add(ring.mul(x, y), ring.mul(x, z))));
    ASSERT_TRUE(ring.equal(ring.add(x, ring.zero()), x));
    ASSERT_TRUE(ring.equal(ring.mul(x, ring.one()), x));
    ASSERT_TRUE(ring.is_zero(ring.add(x, ring.neg(x))));
    ASSERT_TRUE(ring.equal(ring.sub(x, y), ring.add(x, ring.neg(y))));
    ASSERT_TRUE(ring.equal(ring.add(x, y), ring.add(y, x)));
    if (!ring.is_zero(x)) ASSERT_TRUE(ring.equal(ring.mul(x, ring.inverse(x)), ring.one()));
  }
}

}  // namespace

TEST(RingAxioms, Rationals) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  check_ring_axioms(Rationals{}, [&] { mpq_class q(num(rng), den(rng)); q.canonicalize(); return q; }, 10000);
}

TEST(RingAxioms, PrimeFields) {
  std::mt19937_64 rng(2);
  for (std::uint64_t p : {std::uint64_t{2}, std::uint64_t{101}, (std::uint64_t{1} << 61) - 1, std::uint64_t{4611686018427387847}}) {
    PrimeField f(p);
    check_ring_axioms(f, [&] { return rng() % p; }, 10000);
  }
}

TEST(Instantiate, IsAHomomorphism) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-9, 9);
  auto random_coeff = [&](int lo, int hi) {
    LaurentCoeff c;
    for (int e = lo; e <= hi; ++e) c += LaurentCoeff::monomial(coef(rng), e);
    return c;
  };
  RingContext<Rationals> q(Rationals{}, mpq_class(-2, 3));
  RingContext<PrimeField> f(PrimeField((std::uint64_t{1} << 61) - 1), 12345);
  for (int t = 0; t < 10000; ++t) {
    auto x = random_coeff(-2, 2), y = random_coeff(-2, 2);
    ASSERT_EQ(q.instantiate(x + y), q.instantiate(x) + q.instantiate(y));
    ASSERT_EQ(q.instantiate(x * y), q.instantiate(x) * q.instantiate(y));
    const auto& fr = f.ring();
    ASSERT_EQ(f.instantiate(x + y), fr.add(f.instantiate(x), f.instantiate(y)));
    ASSERT_EQ(f.instantiate(x * y), fr.mul(f.instantiate(x), f.instantiate(y)));
  }
}

TEST(Instantiate, AgreesWithDirectEvaluation) {
  auto c = L("3*L^-2 - L + 5*L^4");
  mpq_class ell(2, 5);
  RingContext<Rationals> ctx(Rationals{}, ell);
  EXPECT_EQ(ctx.instantiate(c), c.evaluate(ell));
  EXPECT_EQ(ctx.instantiate(c), 3 / (ell * ell) - ell + 5 * ell * ell * ell * ell);
}

TEST(MachineInt64, WrapsOnOverflow) {
  MachineInt64 r;
  EXPECT_EQ(r.add(INT64_MAX, 1), INT64_MIN);
  EXPECT_EQ(r.mul(std::int64_t{1} << 62, 4), 0);
}
