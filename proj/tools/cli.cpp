#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "minroots/brink.hpp"
#include "minroots/error.hpp"
#include "minroots/naive.hpp"
#include "minroots/table.hpp"
#include "minroots/verify.hpp"
#include "minroots/wordeng.hpp"

namespace minroots::cli {

namespace {

struct Options {
  std::string matrix, algo = "brink", out_path, w1, w2;
  std::size_t max_roots = 5'000'000, max_ball = 4'000'000;
  unsigned max_len = 10;
  int ball = -1;
};

MinimalRootTable build(const CoxeterSystem& sys, const Options& o) {
  BuildOptions bo;
  bo.max_roots = o.max_roots;
  return o.algo == "naive" ? build_table_naive(sys, bo) : build_table_brink(sys, bo);
}

int cmd_build(const CoxeterSystem& sys, const Options& o, std::ostream& out, std::ostream& err) {
  const MinimalRootTable table = canonicalize(build(sys, o));
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path);
    f << serialize(table);
    if (!f) {
      err << "cannot write '" << o.out_path << "'\n";
      return kUsage;
    }
  }
  out << "N=" << table.size() << "\n";
  return kOk;
}

int cmd_stats(const CoxeterSystem& sys, const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const MinimalRootTable table = build(sys, o);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::map<unsigned, std::size_t> by_depth;
  for (std::uint32_t i = 0; i < table.size(); ++i) ++by_depth[table.depth(i)];
  out << "N=" << table.size() << "\n";
  out << "max_depth=" << (by_depth.empty() ? 0 : by_depth.rbegin()->first) << "\n";
  for (const auto& [d, n] : by_depth) out << "depth " << d << ": " << n << "\n";
  out << "algo=" << o.algo << " build_ms=" << ms << "\n";
  return kOk;
}

int cmd_verify(const CoxeterSystem& sys, const Options& o, std::ostream& out) {
  const unsigned radius = o.ball >= 0 ? static_cast<unsigned>(o.ball) : default_ball_radius(sys);
  const CrossCheckReport report = cross_check(sys, radius, o.max_ball);
  for (const auto& line : report.lines) out << line << "\n";
  out << (report.passed ? "PASS" : "FAIL") << "\n";
  return report.passed ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal roots, reflection tables and normal forms for Coxeter groups", "minroots"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-roots", o.max_roots, "Abort once the table exceeds this many roots");
  app.add_option("--max-ball", o.max_ball, "Cap on oracle ball elements");

  auto matrix = [&](CLI::App* sub) { sub->add_option("matrix", o.matrix, "Coxeter matrix file")->required(); };
  auto algo = [&](CLI::App* sub) {
    sub->add_option("--algo", o.algo, "naive or brink")->check(CLI::IsMember({"naive", "brink"}));
  };

  auto* build_cmd = app.add_subcommand("build", "Build and serialize the reflection table");
  matrix(build_cmd);
  algo(build_cmd);
  build_cmd->add_option("--out", o.out_path, "Write the canonical table here");

  auto* stats_cmd = app.add_subcommand("stats", "Root count and depth histogram");
  matrix(stats_cmd);
  algo(stats_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "Normal form of a word");
  matrix(reduce_cmd);
  reduce_cmd->add_option("word", o.w1)->required();

  auto* mult_cmd = app.add_subcommand("mult", "Normal form of a product");
  matrix(mult_cmd);
  mult_cmd->add_option("w1", o.w1)->required();
  mult_cmd->add_option("w2", o.w2)->required();

  auto* growth_cmd = app.add_subcommand("growth", "Elements per length");
  matrix(growth_cmd);
  growth_cmd->add_option("--max-len", o.max_len)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check builders and multiplication against the oracle");
  matrix(verify_cmd);
  verify_cmd->add_option("--ball", o.ball, "Oracle ball radius");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::optional<CoxeterSystem> sys;
  try {
    sys.emplace(load_system(o.matrix));
  } catch (const ParseError& e) {
    err << "invalid matrix: " << e.what() << "\n";
    return kInvalidMatrix;
  }

  try {
    if (*build_cmd) return cmd_build(*sys, o, out, err);
    if (*stats_cmd) return cmd_stats(*sys, o, out);
    if (*verify_cmd) return cmd_verify(*sys, o, out);
    const MinimalRootTable table = build(*sys, o);
    if (*reduce_cmd) {
      out << format_word(normalize(table, parse_word(o.w1, sys->rank()))) << "\n";
    } else if (*mult_cmd) {
      const Word a = normalize(table, parse_word(o.w1, sys->rank()));
      const Word b = normalize(table, parse_word(o.w2, sys->rank()));
      out << format_word(multiply(table, a, b)) << "\n";
    } else if (*growth_cmd) {
      const auto counts = growth(table, o.max_len, o.max_ball);
      for (std::size_t l = 0; l < counts.size(); ++l) out << (l ? " " : "") << counts[l];
      out << "\n";
    }
    return kOk;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << "\n";
    return kResource;
  }
}

}  // namespace minroots::cli
