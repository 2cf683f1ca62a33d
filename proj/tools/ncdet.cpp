// ncdet: command-line front end for symmetric, right and left determinants
// of matrices over integer, free associative and Grassmann rings.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include <CLI11/CLI11.hpp>
#include <nlohmann/json.hpp>

#include <ncdet/ncdet.hpp>

namespace {

using namespace ncdet;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

enum class OutputMode { text, machine };

struct Options {
  std::string input;
  std::optional<std::size_t> generic;
  OutputMode output = OutputMode::text;
};

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

class Emitter {
 public:
  explicit Emitter(OutputMode mode) : mode_(mode) {}

  void emit(const std::string& operation, const std::string& canonical_input, const std::string& result,
            double elapsed_ms) const {
    if (mode_ == OutputMode::text) {
      std::cout << result;
      if (result.empty() || result.back() != '\n') std::cout << "\n";
      return;
    }
    nlohmann::json rec = {{"operation", operation},
                          {"input_digest", hex64(fnv1a64(canonical_input))},
                          {"result_canonical_text", result},
                          {"elapsed_ms", elapsed_ms}};
    std::cout << rec.dump() << "\n";
  }

 private:
  OutputMode mode_;
};

struct LoadedInput {
  AnyMatrix matrix;
  std::string canonical;
};

std::string canonical_input(const AnyMatrix& m) {
  return std::visit(
      [](const auto& a) {
        using R = typename std::decay_t<decltype(a)>::value_type;
        std::string ring;
        if constexpr (std::is_same_v<R, IntElem>)
          ring = "integer";
        else if constexpr (std::is_same_v<R, FreePoly>)
          ring = "free";
        else
          ring = "grassmann";
        return ring + "\n" + to_string(a);
      },
      m);
}

LoadedInput load_input(const Options& opt, std::optional<std::size_t> fallback_generic = std::nullopt) {
  if (!opt.input.empty() && opt.generic) throw InputError("--input and --generic are mutually exclusive");
  AnyMatrix m;
  if (!opt.input.empty()) {
    m = load_matrix(opt.input, true);
  } else if (opt.generic || fallback_generic) {
    const std::size_t n = opt.generic ? *opt.generic : *fallback_generic;
    if (n < 1 || n > kMaxDimension)
      throw CapExceeded("--generic must lie in [1, " + std::to_string(kMaxDimension) + "]");
    m = generic_matrix(n);
  } else {
    throw InputError("a matrix is required: pass --input PATH or --generic N");
  }
  std::string canonical = canonical_input(m);
  return {std::move(m), std::move(canonical)};
}

template <class F>
int timed(const Emitter& out, const std::string& operation, const LoadedInput& in, F&& compute) {
  const auto start = std::chrono::steady_clock::now();
  const std::string result = std::visit(compute, in.matrix);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out.emit(operation, in.canonical, result, ms);
  return kExitOk;
}

Side parse_side(const std::string& s) {
  if (s == "right") return Side::right;
  if (s == "left") return Side::left;
  throw InputError("--side must be left or right");
}

std::string verify_canonical_input(const std::string& suite, const VerifyConfig& cfg) {
  nlohmann::json j = {{"suite", suite}, {"k", cfg.k}, {"trials", cfg.trials}, {"seed", cfg.seed}};
  if (cfg.n) j["n"] = *cfg.n;
  if (cfg.t) j["t"] = *cfg.t;
  if (cfg.rank) j["rank"] = *cfg.rank;
  return j.dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric, right and left determinants over noncommutative rings"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string output = "text";
  app.add_option("--input", opt.input, "Matrix document (JSON)");
  app.add_option("--generic", opt.generic, "Use the generic N x N free-algebra matrix");
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "machine"}));

  std::size_t k = 1;
  std::string side = "right";
  std::size_t newton_n = 2;

  auto* sdet_cmd = app.add_subcommand("sdet", "Symmetric determinant");
  auto* preadj_cmd = app.add_subcommand("preadj", "Preadjoint matrix A*");
  auto* rdet_cmd = app.add_subcommand("rdet", "k-th right determinant");
  rdet_cmd->add_option("--k", k, "Order k")->check(CLI::Range(1, 4));
  auto* ldet_cmd = app.add_subcommand("ldet", "k-th left determinant");
  ldet_cmd->add_option("--k", k, "Order k")->check(CLI::Range(1, 4));
  auto* charpoly_cmd = app.add_subcommand("charpoly", "k-th right/left characteristic polynomial");
  charpoly_cmd->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
  charpoly_cmd->add_option("--k", k, "Order k")->check(CLI::Range(1, 4));
  auto* newton_cmd = app.add_subcommand("newton", "Trace formula for sdet (n = 2 or 3)");
  newton_cmd->add_option("--n", newton_n, "Dimension")->check(CLI::IsMember({2, 3}));
  auto* s4_cmd = app.add_subcommand("s4", "Standard polynomial S4 of the four entries of a 2x2 matrix");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  VerifyConfig cfg;
  std::size_t vn = 0, vt = 0;
  int vrank = -1;
  verify_cmd->add_option("--suite", suite, "Suite name or 'all'")->required();
  verify_cmd->add_option("--n", vn, "Dimension");
  verify_cmd->add_option("--k", cfg.k, "Largest k");
  verify_cmd->add_option("--t", vt, "Supermatrix split");
  verify_cmd->add_option("--rank", vrank, "Grassmann rank");
  verify_cmd->add_option("--trials", cfg.trials, "Random trials per check");
  verify_cmd->add_option("--seed", cfg.seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  opt.output = output == "machine" ? OutputMode::machine : OutputMode::text;
  const Emitter out(opt.output);

  try {
    if (*sdet_cmd)
      return timed(out, "sdet", load_input(opt), [](const auto& a) { return to_string(symmetric_determinant(a)); });
    if (*preadj_cmd)
      return timed(out, "preadj", load_input(opt), [](const auto& a) { return to_string(preadjoint(a)); });
    if (*rdet_cmd)
      return timed(out, "rdet", load_input(opt), [&](const auto& a) { return to_string(rdet(a, k)); });
    if (*ldet_cmd)
      return timed(out, "ldet", load_input(opt), [&](const auto& a) { return to_string(ldet(a, k)); });
    if (*charpoly_cmd) {
      const Side s = parse_side(side);
      return timed(out, "charpoly", load_input(opt), [&](const auto& a) { return to_string(charpoly(a, s, k)); });
    }
    if (*newton_cmd) {
      return timed(out, "newton", load_input(opt, newton_n), [&](const auto& a) -> std::string {
        if (a.dim() != newton_n) throw DimensionError("matrix dimension does not match --n");
        return to_string(newton_n == 2 ? newton_sdet_2(a) : newton_sdet_3(a));
      });
    }
    if (*s4_cmd) {
      return timed(out, "s4", load_input(opt, 2), [](const auto& a) -> std::string {
        if (a.dim() != 2) throw DimensionError("s4 needs a 2x2 matrix");
        return to_string(standard_polynomial_4(a(0, 0), a(0, 1), a(1, 0), a(1, 1)));
      });
    }
    if (*verify_cmd) {
      if (verify_cmd->count("--n")) cfg.n = vn;
      if (verify_cmd->count("--t")) cfg.t = vt;
      if (verify_cmd->count("--rank")) cfg.rank = vrank;
      const SuiteReport report = run_verify(suite, cfg);
      if (opt.output == OutputMode::text) {
        print_report(std::cout, report);
      } else {
        const std::string input = verify_canonical_input(suite, cfg);
        for (const auto& c : report.checks)
          out.emit("verify:" + c.suite, input, std::string(c.passed ? "PASS " : "FAIL ") + c.name, c.elapsed_ms);
      }
      return report.passed() ? kExitOk : kExitFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
