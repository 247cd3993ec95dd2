// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fmm/catalog.hpp"
#include "fmm/cli.hpp"
#include "fmm/compose.hpp"
#include "fmm/scheme_io.hpp"
#include "fmm/trilinear.hpp"
#include "oracle.hpp"

using namespace fmm;

namespace {

struct Outcome {
  bool pass;
  std::string note;
};

int failures = 0;

void criterion(int number, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
  std::printf("%s %d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", number, title, o.note.c_str(), secs.count());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

Outcome rank_claim() {
  const auto s = makarov_sedoglavic_5x5x5_99();
  const auto r = verify_brent(s);
  return {s.rank() == 99 && count_multiplications(s) == 99 && r.passed() && r.total() == 15625,
          "rank " + std::to_string(s.rank()) + ", " + r.summary()};
}

Outcome basis_oracle() {
  const auto s = makarov_sedoglavic_5x5x5_99();
  bool ok = true;
  std::size_t runs = 0;
  for (const mpq_class& ell : {mpq_class(1), mpq_class(-1), mpq_class(2), mpq_class(3), mpq_class(1, 2)}) {
    const auto r = verify_basis_oracle(s, RingSpec::rationals(ell));
    ok = ok && r.passed() && r.total() == 625;
    ++runs;
  }
  const std::uint64_t p = (std::uint64_t{1} << 61) - 1;
  std::mt19937_64 rng(2017);
  for (int t = 0; t < 20; ++t) {
    const auto ell = mpz_class(std::to_string(1 + rng() % (p - 1)));
    const auto r = verify_basis_oracle(s, RingSpec::prime_field(p, mpq_class(ell)));
    ok = ok && r.passed() && r.total() == 625;
    ++runs;
  }
  return {ok, "625/625 in " + std::to_string(runs) + " runs (Q at 5 values of L, F_(2^61-1) at 20)"};
}

Outcome sub_algorithms() {
  const std::vector<std::pair<BilinearScheme, std::size_t>> subs{
      {strassen_2x2x2(), 7}, {winograd_2x2x2(), 7}, {laderman_3x3x3(), 23},
      {hopcroft_kerr_2x2x3(), 11}, {hopcroft_kerr_3x3x2(), 15}};
  bool ok = true;
  std::string note;
  for (const auto& [s, rank] : subs) {
    ok = ok && count_multiplications(s) == rank && verify_brent(s).passed();
    note += (note.empty() ? "" : ", ") + s.signature().to_string();
  }
  return {ok, note};
}

Outcome composition() {
  const auto big = compose(makarov_sedoglavic_5x5x5_99(), strassen_2x2x2());
  std::vector<mpq_class> pts;
  for (long k = 1; k <= 13; ++k) pts.emplace_back(k % 2 ? k : -k);
  const auto sampled = verify_brent_sampled(big, pts);
  const auto symbolic = verify_brent(big);
  const auto small = compose(strassen_2x2x2(), strassen_2x2x2());
  const bool ok = big.signature() == FmmaSignature{10, 10, 10, 693} && sampled.passed() && symbolic.passed() &&
                  small.signature() == FmmaSignature{4, 4, 4, 49} && verify_brent(small).passed();
  return {ok, big.signature().to_string() + " " + symbolic.summary() + ", " + sampled.summary() + "; " +
                  small.signature().to_string()};
}

Outcome factorization() {
  const auto r = verify_factorization_identity();
  const int saved = kHopcroftKerrProductsBefore - kHopcroftKerrProductsAfter;
  const bool ok = r.passed() && kHopcroftKerrProductsBefore == 4 && kHopcroftKerrProductsAfter == 2 &&
                  2 * 15 - saved == 28 && 101 - saved == 99;
  return {ok, r.summary() + "; 4 -> 2 products, 30 -> 28"};
}

Outcome recursion() {
  std::mt19937_64 rng(6);
  const std::uint64_t p = 101;
  PrimeField f(p);
  RingContext<PrimeField> ctx(f, 1);
  std::size_t cases = 0, bad = 0;
  for (const char* levels : {"makarov99", "makarov99,strassen", "strassen"}) {
    for (int cutoff : {1, 2, 3}) {
      const auto plan = parse_plan(std::string(levels) + ",cutoff=" + std::to_string(cutoff));
      for (std::size_t n = 1; n <= 30; ++n) {
        for (int t = 0; t < 10; ++t) {
          auto a = oracle::random_flat(rng, n * n, p), b = oracle::random_flat(rng, n * n, p);
          auto c = recursive_multiply(MatrixOf<PrimeField>(n, n, a), MatrixOf<PrimeField>(n, n, b), plan, ctx);
          bad += c.data() != oracle::multiply_mod(a, b, n, n, n, p);
          ++cases;
        }
      }
    }
  }
  return {bad == 0, std::to_string(cases - bad) + "/" + std::to_string(cases) + " products equal the naive oracle"};
}

Outcome accounting() {
  PrimeField f(101);
  RingContext<PrimeField> ctx(f, 1);
  std::mt19937_64 rng(7);
  bool ok = true;
  std::string note;
  for (auto [plan_text, n, expected] : {std::tuple<const char*, std::size_t, std::uint64_t>{"makarov99", 5, 99},
                                        {"makarov99,strassen", 10, 693},
                                        {"makarov99,makarov99", 25, 9801}}) {
    const auto plan = parse_plan(plan_text);
    MulCounter counter;
    MatrixOf<PrimeField> a(n, n, oracle::random_flat(rng, n * n, 101)), b(n, n, oracle::random_flat(rng, n * n, 101));
    recursive_multiply(a, b, plan, ctx, &counter);
    ok = ok && counter.value() == expected && multiplication_count(plan, n) == expected;
    note += (note.empty() ? "" : ", ") + std::to_string(counter.value());
  }
  std::ostringstream out, err;
  const int code = run_cli({"bench", "--sizes", "125", "--plan", "makarov99,makarov99,makarov99", "--no-naive"}, out, err);
  const auto csv = out.str();
  const bool bench_ok = code == 0 && csv.find(",970299\n") != std::string::npos;
  return {ok && bench_ok, note + " (instrumented = predicted); bench row 970299"};
}

Outcome typo_resolution() {
  bool published_rejected = false;
  try {
    makarov_sedoglavic_5x5x5_99_with_m38(kM38PublishedAlpha);
  } catch (const ParseError&) {
    published_rejected = true;
  }
  std::vector<std::string> passing;
  for (const char* c : {"a21 + a41 + a43", "a21 + a41 - a43", "a21 - a41 + a43"}) {
    if (verify_brent(makarov_sedoglavic_5x5x5_99_with_m38(c)).passed()) passing.emplace_back(c);
  }
  const auto s = makarov_sedoglavic_5x5x5_99();
  const auto& alpha = s.products()[37].alpha;
  const bool pinned = alpha(1, 0) == LaurentCoeff(1) && alpha(3, 0) == LaurentCoeff(1) &&
                      alpha(3, 2) == LaurentCoeff(1);
  const bool recorded = s.provenance().find(std::string(kM38PublishedAlpha)) != std::string::npos &&
                        s.provenance().find(std::string(kM38VerifiedAlpha)) != std::string::npos;
  const bool ok = published_rejected && passing.size() == 1 && passing[0] == kM38VerifiedAlpha && pinned && recorded;
  return {ok, "m38 = (" + (passing.empty() ? std::string("none") : passing[0]) + ") is the only passing candidate"};
}

Outcome round_trip() {
  bool ok = true;
  for (const auto& e : catalog()) {
    const auto text = serialize_scheme(e.scheme);
    const auto back = parse_scheme(text);
    ok = ok && back == e.scheme && serialize_scheme(back) == text && verify_brent(back).passed();
  }
  return {ok, std::to_string(catalog().size()) + " catalog entries"};
}

}  // namespace

int main() {
  criterion(1, "rank claim", rank_claim);
  criterion(2, "basis oracle", basis_oracle);
  criterion(3, "sub-algorithm ranks", sub_algorithms);
  criterion(4, "composition", composition);
  criterion(5, "factorization identity", factorization);
  criterion(6, "recursive correctness", recursion);
  criterion(7, "multiplication accounting", accounting);
  criterion(8, "m38 typo resolution", typo_resolution);
  criterion(9, "round trip", round_trip);
  return failures == 0 ? 0 : 1;
}
