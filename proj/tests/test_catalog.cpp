#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "fmm/catalog.hpp"
#include "fmm/scheme_io.hpp"
#include "oracle.hpp"

using namespace fmm;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

LaurentCoeff L(const char* text) { return LaurentCoeff::parse(text); }

}  // namespace

TEST(Catalog, RanksSignaturesAndBrent) {
  const std::vector<std::pair<std::string, FmmaSignature>> expected{
      {"makarov99", {5, 5, 5, 99}}, {"strassen", {2, 2, 2, 7}}, {"winograd", {2, 2, 2, 7}},
      {"laderman", {3, 3, 3, 23}},  {"hk223", {2, 2, 3, 11}},   {"hk332", {3, 3, 2, 15}},
      {"trivial", {1, 1, 1, 1}}};
  ASSERT_EQ(catalog().size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const auto& e = catalog()[k];
    EXPECT_EQ(e.alias, expected[k].first);
    EXPECT_EQ(e.scheme.signature(), expected[k].second);
    EXPECT_EQ(count_multiplications(e.scheme), e.expected_rank);
    EXPECT_TRUE(verify_brent(e.scheme).passed()) << e.scheme.name();
    EXPECT_FALSE(e.scheme.provenance().empty());
  }
}

TEST(Catalog, Lookup) {
  EXPECT_EQ(find_catalog_scheme("strassen")->name(), "strassen_2x2x2_7");
  EXPECT_EQ(find_catalog_scheme("laderman_3x3x3_23")->rank(), 23u);
  EXPECT_FALSE(find_catalog_scheme("pan").has_value());
}

TEST(Makarov, ProductM78) {
  const auto s = makarov_sedoglavic_5x5x5_99();
  const auto& p = s.products()[77];
  LaurentRing ring;
  EXPECT_TRUE(equal(ring, p.alpha, basis_unit(ring, 5, 5, 0, 0)));
  EXPECT_TRUE(equal(ring, p.beta, basis_unit(ring, 5, 5, 0, 0)));
  EXPECT_TRUE(equal(ring, p.gamma, basis_unit(ring, 5, 5, 0, 0)));
}

TEST(Makarov, EllFactorsTranscribed) {
  const auto s = makarov_sedoglavic_5x5x5_99();
  // m8 = a53 b35 L, with L kept on the left operand.
  EXPECT_EQ(s.products()[7].alpha(4, 2), L("L"));
  EXPECT_EQ(s.products()[7].beta(2, 4), L("1"));
  // c55 = m8/L + m9/L + m91 - m35 - m31.
  std::map<std::size_t, LaurentCoeff> c55;
  for (std::size_t r = 0; r < s.rank(); ++r) {
    if (!s.products()[r].gamma(4, 4).is_zero()) c55[r + 1] = s.products()[r].gamma(4, 4);
  }
  std::map<std::size_t, LaurentCoeff> want{{8, L("L^-1")}, {9, L("L^-1")}, {91, L("1")}, {35, L("-1")}, {31, L("-1")}};
  EXPECT_EQ(c55, want);
  // m32 = (L a31 + a51 - L^2 a35) ...
  EXPECT_EQ(s.products()[31].alpha(2, 0), L("L"));
  EXPECT_EQ(s.products()[31].alpha(4, 0), L("1"));
  EXPECT_EQ(s.products()[31].alpha(2, 4), L("-L^2"));
}

TEST(Makarov, EllDependenceCancels) {
  std::mt19937_64 rng(21);
  const auto s = makarov_sedoglavic_5x5x5_99();
  for (int t = 0; t < 10; ++t) {
    auto a = oracle::random_rat(rng, 25), b = oracle::random_rat(rng, 25);
    EXPECT_EQ(oracle::run_scheme(s, 2, a, b), oracle::run_scheme(s, mpq_class(-5, 7), a, b));
  }
}

// The printed m38 left factor "a21 + a41 a43" is not a linear form.  Among
// all 26 nonzero forms c1 a21 + c2 a41 + c3 a43 with c in {-1, 0, 1} exactly
// one gives an exact scheme.
TEST(Makarov, M38ResolvedByTheOracle) {
  EXPECT_THROW(makarov_sedoglavic_5x5x5_99_with_m38(kM38PublishedAlpha), ParseError);
  std::vector<std::string> passing;
  for (int c1 = -1; c1 <= 1; ++c1)
    for (int c2 = -1; c2 <= 1; ++c2)
      for (int c3 = -1; c3 <= 1; ++c3) {
        if (c1 == 0 && c2 == 0 && c3 == 0) continue;
        std::string form;
        auto term = [&](int c, const char* var) {
          if (c == 0) return;
          form += std::string(c < 0 ? " - " : (form.empty() ? "" : " + ")) + var;
        };
        term(c1, "a21");
        term(c2, "a41");
        term(c3, "a43");
        if (verify_brent(makarov_sedoglavic_5x5x5_99_with_m38(form)).passed()) passing.push_back(form);
      }
  ASSERT_EQ(passing.size(), 1u);
  EXPECT_EQ(passing[0], std::string(kM38VerifiedAlpha));
  for (const char* wrong : {"a21 + a41 - a43", "a21 - a41 + a43"}) {
    EXPECT_EQ(verify_brent(makarov_sedoglavic_5x5x5_99_with_m38(wrong)).failures().size(), 24u) << wrong;
  }
}

TEST(Makarov, M38RegressionPin) {
  const auto s = makarov_sedoglavic_5x5x5_99();
  const auto& alpha = s.products()[37].alpha;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      const bool on = (i == 1 && j == 0) || (i == 3 && j == 0) || (i == 3 && j == 2);
      EXPECT_EQ(alpha(i, j), LaurentCoeff(on ? 1 : 0)) << i << j;
    }
  EXPECT_NE(s.provenance().find(std::string(kM38PublishedAlpha)), std::string::npos);
  EXPECT_NE(s.provenance().find(std::string(kM38VerifiedAlpha)), std::string::npos);
}

TEST(SubAlgorithms, BasisOracleCounts) {
  EXPECT_EQ(verify_basis_oracle(hopcroft_kerr_3x3x2(), RingSpec::rationals()).summary(), "BASIS PASS 54/54");
  EXPECT_EQ(verify_basis_oracle(hopcroft_kerr_2x2x3(), RingSpec::rationals()).summary(), "BASIS PASS 24/24");
  EXPECT_EQ(verify_basis_oracle(laderman_3x3x3(), RingSpec::rationals()).summary(), "BASIS PASS 81/81");
  EXPECT_EQ(verify_basis_oracle(winograd_2x2x2(), RingSpec::prime_field(2)).summary(), "BASIS PASS 16/16");
}

TEST(SubAlgorithms, StrassenOnIdentity) {
  Rationals q;
  RingContext<Rationals> ctx(q, 1);
  EXPECT_TRUE(equal(q, evaluate(strassen_2x2x2(), ctx, identity(q, 2), identity(q, 2)), identity(q, 2)));
}

TEST(Rotate, SignaturesAndVerification) {
  auto r = rotate_scheme(strassen_2x2x2());
  EXPECT_EQ(r.signature(), (FmmaSignature{2, 2, 2, 7}));
  EXPECT_TRUE(verify_brent(r).passed());
  auto h = rotate_scheme(hopcroft_kerr_2x2x3());
  EXPECT_EQ(h.signature(), (FmmaSignature{2, 3, 2, 11}));
  EXPECT_TRUE(verify_brent(h).passed());
  auto hh = rotate_scheme(h);
  EXPECT_EQ(hh.signature(), (FmmaSignature{3, 2, 2, 11}));
  EXPECT_TRUE(verify_brent(hh).passed());
  EXPECT_TRUE(verify_basis_oracle(hh, RingSpec::rationals()).passed());
}

TEST(Rotate, ThreeTimesIsIdentity) {
  for (const auto& e : catalog()) {
    auto s = e.scheme;
    auto r3 = rotate_scheme(rotate_scheme(rotate_scheme(s)));
    EXPECT_EQ(r3.signature(), s.signature());
    EXPECT_EQ(r3.products(), s.products()) << s.name();
    EXPECT_TRUE(verify_brent(rotate_scheme(s)).passed()) << s.name();
  }
}

TEST(Rotate, BrokenStaysBroken) {
  auto s = laderman_3x3x3();
  auto p = s.products();
  p[5].beta(1, 1) += LaurentCoeff(1);
  BilinearScheme broken(s.signature(), p, "x", "");
  EXPECT_EQ(verify_brent(rotate_scheme(broken)).failures().size(), verify_brent(broken).failures().size());
}

TEST(ShippedFiles, ByteIdenticalToSerialization) {
  for (const auto& e : catalog()) {
    const std::string path = std::string(FMM_SOURCE_DIR) + "/schemes/" + e.scheme.name() + ".scheme";
    const auto text = read_file(path);
    ASSERT_FALSE(text.empty()) << path;
    EXPECT_EQ(text, serialize_scheme(e.scheme)) << path;
    EXPECT_EQ(read_scheme_file(path), e.scheme);
  }
}

TEST(Formulas, Errors) {
  auto build = [](const char* text) { return scheme_from_formulas(1, 1, 1, "t", "", text); };
  EXPECT_NO_THROW(build("m1 = (a11) * (b11)\nc11 = m1\n"));
  EXPECT_THROW(build("m1 = (a11 a11) * (b11)\n"), ParseError);
  EXPECT_THROW(build("m1 = (a12) * (b11)\n"), ParseError);
  EXPECT_THROW(build("m1 = (a11) * (b11)\nc11 = m2\n"), ParseError);
  EXPECT_THROW(build("m2 = (a11) * (b11)\n"), SchemeError);
  EXPECT_THROW(build("x1 = (a11) * (b11)\n"), ParseError);
  auto s = build("m1 = (2*L^-1*a11) * (-L*b11)\nc11 = -1*m1\n");
  EXPECT_EQ(s.products()[0].alpha(0, 0), L("2*L^-1"));
  EXPECT_EQ(s.products()[0].beta(0, 0), L("-L"));
  EXPECT_EQ(s.products()[0].gamma(0, 0), L("-1"));
}
