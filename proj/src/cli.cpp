#include "fmm/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fmm/catalog.hpp"
#include "fmm/compose.hpp"
#include "fmm/scheme_io.hpp"

namespace fmm {
namespace {

struct CliFailure {
  int code;
  std::string message;
};

[[noreturn]] void usage_error(const std::string& message) { throw CliFailure{kExitUsage, message}; }

struct RingFlags {
  std::string ring = "rat";
  std::string ell = "1";

  RingSpec spec() const {
    mpq_class l;
    try {
      l = parse_rational(ell);
    } catch (const std::exception& e) {
      usage_error("bad --ell '" + ell + "': " + e.what());
    }
    try {
      return RingSpec::parse(ring, l);
    } catch (const std::exception& e) {
      usage_error(e.what());
    }
  }
};

void add_ring_flags(CLI::App* cmd, RingFlags& flags) {
  cmd->add_option("--ring", flags.ring, "rat | fp:<p> | int64 | f64")->capture_default_str();
  cmd->add_option("--ell", flags.ell, "value of the scheme parameter L (rational)")->capture_default_str();
}

BilinearScheme load_scheme(const std::string& ref) {
  if (auto s = find_catalog_scheme(ref)) return *s;
  if (!std::filesystem::exists(ref)) usage_error("unknown scheme '" + ref + "' (not a catalog name or a file)");
  return read_scheme_file(ref);
}

RecursionPlan load_plan(const std::string& text) {
  try {
    return parse_plan(text);
  } catch (const std::invalid_argument& e) {
    usage_error(std::string("bad plan: ") + e.what());
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot write '" + path + "'");
  f << text;
  if (!f) throw std::ios_base::failure("write to '" + path + "' failed");
}

int cmd_verify(const std::string& ref, const RingFlags& flags, std::size_t max_failures, std::ostream& out) {
  const auto spec = flags.spec();
  if (!spec.is_exact()) usage_error("ring " + spec.name() + " is not exact; verify needs rat or fp:<p>");
  const auto scheme = load_scheme(ref);
  const auto brent = verify_brent(scheme);
  VerificationReport basis;
  try {
    basis = verify_basis_oracle(scheme, spec);
  } catch (const NotInvertibleError& e) {
    usage_error(e.what());
  }
  for (const VerificationReport* report : {&brent, static_cast<const VerificationReport*>(&basis)}) {
    if (!report->passed()) out << report->detail(max_failures);
  }
  out << brent.summary() << "; " << basis.summary() << "; rank " << count_multiplications(scheme) << '\n';
  return brent.passed() && basis.passed() ? kExitOk : kExitVerificationFailed;
}

struct MulArgs {
  std::string a_path, b_path, out_path;
  std::string plan = "naive";
  bool count = false;
  bool check = false;
  RingFlags ring;
};

template <class R>
MatrixOf<R> read_matrix_file(const std::string& path, const R& ring) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open matrix file '" + path + "'");
  try {
    return read_matrix(in, ring);
  } catch (const ParseError& e) {
    throw CliFailure{kExitInput, path + ": " + e.what()};
  }
}

int cmd_mul(const MulArgs& args, std::ostream& out) {
  const auto spec = args.ring.spec();
  const auto plan = load_plan(args.plan);
  return with_ring(spec, [&](const auto& ctx) {
    const auto& ring = ctx.ring();
    auto a = read_matrix_file(args.a_path, ring);
    auto b = read_matrix_file(args.b_path, ring);
    MulCounter counter;
    auto c = recursive_multiply(a, b, plan, ctx, &counter);
    int code = kExitOk;
    if (args.check) {
      if (!std::decay_t<decltype(ring)>::is_exact) usage_error("--check needs an exact ring");
      if (!equal(ring, c, naive_multiply(ring, a, b))) code = kExitVerificationFailed;
    }
    std::ostringstream text;
    write_matrix(text, ring, c);
    emit(text.str(), args.out_path, out);
    if (args.count) out << "# bilinear multiplications: " << counter.value() << '\n';
    if (args.check) out << (code == kExitOk ? "# check PASS" : "# check FAIL") << '\n';
    return code;
  });
}

int cmd_compose(const std::string& outer, const std::string& inner, const std::string& path, std::ostream& out) {
  const auto a = load_scheme(outer);
  const auto b = load_scheme(inner);
  BilinearScheme c = [&] {
    try {
      return compose(a, b);
    } catch (const LaurentRangeError& e) {
      usage_error(e.what());
    }
  }();
  emit(serialize_scheme(c), path, out);
  if (!path.empty() && path != "-") out << "wrote " << c.signature().to_string() << " to " << path << '\n';
  return kExitOk;
}

int cmd_count(const std::string& plan_text, std::size_t n, std::ostream& out) {
  const auto plan = load_plan(plan_text);
  try {
    out << multiplication_count(plan, n) << '\n';
  } catch (const std::invalid_argument& e) {
    usage_error(e.what());
  }
  return kExitOk;
}

int cmd_export(const std::string& name, const std::string& path, const std::string& dir, std::ostream& out) {
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    for (const auto& e : catalog()) {
      const auto file = std::filesystem::path(dir) / (e.scheme.name() + ".scheme");
      write_scheme_file(file, e.scheme);
      out << file.string() << '\n';
    }
    return kExitOk;
  }
  if (name.empty()) usage_error("export needs a catalog name or --all-to <dir>");
  auto s = find_catalog_scheme(name);
  if (!s) usage_error("unknown catalog scheme '" + name + "'");
  emit(serialize_scheme(*s), path, out);
  return kExitOk;
}

struct BenchArgs {
  std::vector<std::size_t> sizes{64};
  std::vector<std::string> plans;
  std::string ring = "f64";
  std::uint64_t seed = 0;
  bool serial = false;
  bool skip_naive = false;
};

constexpr std::size_t kLargestRationalBench = 64;

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  RingFlags flags;
  flags.ring = args.ring;
  const auto spec = flags.spec();
  std::vector<std::pair<std::string, RecursionPlan>> plans;
  if (!args.skip_naive) plans.emplace_back("naive", parse_plan("naive"));
  for (const auto& p : args.plans) plans.emplace_back(p, load_plan(p));
  if (plans.empty()) usage_error("nothing to benchmark");
  for (auto n : args.sizes) {
    if (n == 0) usage_error("sizes must be positive");
    if (spec.kind() == RingSpec::Kind::Rationals && n > kLargestRationalBench) {
      usage_error("bench over rat is limited to n <= " + std::to_string(kLargestRationalBench) +
                  "; use --ring f64, int64 or fp:<p> for larger sizes");
    }
  }
  const Execution exec = args.serial ? Execution::Serial : Execution::Parallel;
  out << "n,plan,ring,wall_seconds,mult_count\n";
  with_ring(spec, [&](const auto& ctx) {
    const auto& ring = ctx.ring();
    std::mt19937_64 rng(args.seed);
    std::uniform_int_distribution<long> digit(-9, 9);
    for (auto n : args.sizes) {
      auto random_matrix = [&] {
        auto m = zeros(ring, n, n);
        for (auto& x : m.data()) x = ring.from_integer(mpz_class(digit(rng)));
        return m;
      };
      const auto a = random_matrix();
      const auto b = random_matrix();
      for (const auto& [label, plan] : plans) {
        MulCounter counter;
        const auto start = std::chrono::steady_clock::now();
        auto c = recursive_multiply(a, b, plan, ctx, &counter, exec);
        const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
        out << n << ",\"" << label << "\"," << spec.name() << ',' << wall.count() << ',' << counter.value() << '\n';
      }
    }
  });
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verified fast matrix multiplication schemes", "fmm"};
  app.require_subcommand(1);

  std::string ref;
  RingFlags verify_ring;
  std::size_t max_failures = 20;
  auto* verify = app.add_subcommand("verify", "Brent and basis-oracle verification of a scheme");
  verify->add_option("scheme", ref, "catalog name or scheme file")->required();
  add_ring_flags(verify, verify_ring);
  verify->add_option("--max-failures", max_failures, "failing tuples to list per check")->capture_default_str();

  MulArgs mul_args;
  auto* mul = app.add_subcommand("mul", "Multiply two matrix files");
  mul->add_option("A", mul_args.a_path, "left matrix file")->required();
  mul->add_option("B", mul_args.b_path, "right matrix file")->required();
  mul->add_option("--plan", mul_args.plan, "names,cutoff=N or naive")->capture_default_str();
  mul->add_option("-o,--output", mul_args.out_path, "result file (default stdout)");
  mul->add_flag("--count", mul_args.count, "print the bilinear multiplications performed");
  mul->add_flag("--check", mul_args.check, "compare with the naive product");
  add_ring_flags(mul, mul_args.ring);

  std::string outer, inner, compose_out;
  auto* comp = app.add_subcommand("compose", "Kronecker composition of two schemes");
  comp->add_option("outer", outer)->required();
  comp->add_option("inner", inner)->required();
  comp->add_option("-o,--output", compose_out, "scheme file (default stdout)");

  std::string count_plan;
  std::size_t count_n = 0;
  auto* count = app.add_subcommand("count", "Predicted bilinear multiplications of a plan at size n");
  count->add_option("plan", count_plan)->required();
  count->add_option("n", count_n)->required()->check(CLI::PositiveNumber);

  std::string export_name, export_out, export_dir;
  auto* exp = app.add_subcommand("export", "Write a catalog scheme in the scheme text format");
  exp->add_option("name", export_name, "catalog name");
  exp->add_option("-o,--output", export_out, "scheme file (default stdout)");
  exp->add_option("--all-to", export_dir, "write every catalog entry into this directory");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time recursive plans against naive; CSV on stdout");
  bench->add_option("--sizes", bench_args.sizes, "comma-separated sizes")->delimiter(',')->capture_default_str();
  bench->add_option("--plan", bench_args.plans, "plan to time (repeatable)");
  bench->add_option("--ring", bench_args.ring, "f64 | int64 | fp:<p> | rat")->capture_default_str();
  bench->add_option("--seed", bench_args.seed, "random seed")->capture_default_str();
  bench->add_flag("--serial", bench_args.serial, "use the serial kernels");
  bench->add_flag("--no-naive", bench_args.skip_naive, "omit the naive baseline row");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(ref, verify_ring, max_failures, out);
    if (mul->parsed()) return cmd_mul(mul_args, out);
    if (comp->parsed()) return cmd_compose(outer, inner, compose_out, out);
    if (count->parsed()) return cmd_count(count_plan, count_n, out);
    if (exp->parsed()) return cmd_export(export_name, export_out, export_dir, out);
    if (bench->parsed()) return cmd_bench(bench_args, out);
  } catch (const CliFailure& f) {
    err << "fmm: " << f.message << '\n';
    return f.code;
  } catch (const ParseError& e) {
    err << "fmm: parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SchemeError& e) {
    err << "fmm: invalid scheme: " << e.what() << '\n';
    return kExitInput;
  } catch (const DimensionError& e) {
    err << "fmm: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::ios_base::failure& e) {
    err << "fmm: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "fmm: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "fmm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "fmm: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fmm
