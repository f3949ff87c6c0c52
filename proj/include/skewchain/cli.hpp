#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes the report to `out` (or --out). Exit codes:
//   0 all checks passed    1 verification failure
//   2 usage / input error  3 budget exceeded without --force

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "skewchain/ideal.hpp"
#include "skewchain/poly_io.hpp"
#include "skewchain/verifier.hpp"

namespace skewchain::cli {

using nlohmann::json;

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

inline constexpr const char* kCacheDirEnv = "SKEWCHAIN_CACHE_DIR";

struct RunConfig {
  int n = 2;
  int n_min = 2;
  int n_max = 4;
  std::optional<int> vertices;
  std::vector<std::string> degrees;
  std::string poly_path;
  std::size_t samples = 5000;
  std::size_t lemma_count = 24;
  double budget = 1e8;
  bool force = false;
  std::uint64_t seed = 20240601;
  std::string out_path;
  std::string format;  // json | csv | text; empty = per-command default
  std::string cache_dir;
  int jobs = 1;
};

namespace detail {

inline std::string fmt_ms(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << ms;
  return s.str();
}

inline std::string params_text(const json& params) {
  std::string s;
  for (const auto& [k, v] : params.items()) {
    if (!s.empty()) s += ' ';
    s += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return s;
}

inline void report_text(const verify::Report& r, std::ostream& out, bool header = true) {
  if (header) out << std::left << std::setw(11) << "suite" << std::setw(8) << "verdict" << std::setw(12) << "elapsed_ms"
                  << "params\n";
  const auto line = [&](const verify::Report& x) {
    out << std::left << std::setw(11) << x.suite << std::setw(8) << (x.passed ? "pass" : "FAIL") << std::setw(12)
        << fmt_ms(x.elapsed_ms) << params_text(x.params) << "\n";
    for (const auto& w : x.witnesses) {
      if (!x.passed || x.suite == "dkk" || x.suite == "phi") out << "    " << w.element << ": " << w.verdict << "\n";
    }
  };
  for (const auto& c : r.children) line(c);
  line(r);
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--n", "expected a comma-separated list of integers, got '" + text + "'");
    }
    if (used != item.size()) throw CLI::ValidationError("--n", "bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact GF(2) verification of the GL-stable ideal chain I_2 < I_3 < ... in the exterior algebra "
               "on skew-symmetric matrices",
               "skewchain"};
  app.require_subcommand(1);
  app.add_option("--budget", cfg.budget, "Bit-cell budget per graded component")->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_flag("--force", cfg.force, "Ignore the budget");
  app.add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--out", cfg.out_path, "Write the report to this file");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", cfg.cache_dir, std::string("On-disk basis cache (or $") + kCacheDirEnv + ")");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1, 1024));

  auto* verify = app.add_subcommand("verify", "Run a verification suite")->require_subcommand(1);
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Cycle bound n")->capture_default_str()->check(CLI::Range(2, 64));
    sub->add_option("--vertices", cfg.vertices, "Truncation N (default depends on the suite)");
  };
  auto* dkk = verify->add_subcommand("dkk", "w_{n+1} is not in I_n, and is in I_{n+1}");
  add_n(dkk);
  auto* stability = verify->add_subcommand("stability", "I_n is stable under transvections and transpositions");
  add_n(stability);
  auto* tail = verify->add_subcommand("tail", "w_{n+1} x_{n+2,n+3} is in I_n");
  add_n(tail);
  auto* square = verify->add_subcommand("square", "products of generators of I_{n+1} are in I_n");
  add_n(square);
  square->add_option("--samples", cfg.samples, "Check a seeded sample of this many pairs above this count")
      ->capture_default_str()->check(CLI::PositiveNumber);
  auto* lemma = verify->add_subcommand("lemma", "trivalent-vertex identity for the derivation e_{4,5}");
  lemma->add_option("--count", cfg.lemma_count, "Number of cofactors")->capture_default_str()->check(CLI::Range(1, 121));
  auto* phi = verify->add_subcommand("phi", "Plucker elements and cycles lie in ker(phi); I_2 is strictly smaller");
  phi->add_option("--vertices", cfg.vertices, "Truncation N (default max(6, n-max))");
  phi->add_option("--n-max", cfg.n_max, "Longest cycle checked")->check(CLI::Range(3, 64));
  auto* all = verify->add_subcommand("all", "Every suite for n = n-min..n-max");
  all->add_option("--n-min", cfg.n_min, "Smallest n")->capture_default_str()->check(CLI::Range(2, 64));
  all->add_option("--n-max", cfg.n_max, "Largest n")->capture_default_str()->check(CLI::Range(2, 64));

  auto* member = app.add_subcommand("member", "Decide membership of a polynomial in I_n");
  member->add_option("--ideal", cfg.n, "Cycle bound n")->required()->check(CLI::Range(2, 64));
  member->add_option("--vertices", cfg.vertices, "Truncation N (default: the polynomial's N)");
  member->add_option("--poly", cfg.poly_path, "Polynomial JSON file ('-' for stdin)")->required();

  auto* stats = app.add_subcommand("stats", "Dimension table of R_d, (I_n)_d and the quotient");
  std::string n_list_text = "2,3";
  stats->add_option("--n", n_list_text, "Comma-separated list of n")->capture_default_str();
  stats->add_option("--degree", cfg.degrees, "Multidegree like 2,2,2,2 (repeatable)")->required();

  auto* dump = app.add_subcommand("dump-basis", "Print the echelonized basis of (I_n)_d");
  dump->add_option("--ideal", cfg.n, "Cycle bound n")->required()->check(CLI::Range(2, 64));
  dump->add_option("--vertices", cfg.vertices, "Truncation N");
  dump->add_option("--degree", cfg.degrees, "Multidegree like 2,2,2,2")->required()->expected(1);

  for (auto* sub : {verify, dkk, stability, tail, square, lemma, phi, all, member, stats, dump}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (cfg.cache_dir.empty()) {
    if (const char* env = std::getenv(kCacheDirEnv)) cfg.cache_dir = env;
  }
  ideal::Budget budget{static_cast<std::uint64_t>(cfg.budget), cfg.force};
  ideal::Engine engine(budget, cfg.cache_dir.empty() ? std::nullopt
                                                     : std::optional<std::filesystem::path>(cfg.cache_dir));
  verify::Context ctx{engine, cfg.jobs, cfg.seed, cfg.samples};

  try {
    std::optional<detail::Output> sink;
    auto stream = [&]() -> std::ostream& {
      if (!sink) sink.emplace(cfg.out_path, out);
      return sink->stream();
    };

    if (verify->parsed()) {
      if (cfg.format == "csv") {
        err << "error: csv output is only available for stats\n";
        return kUsage;
      }
      verify::Report report;
      if (dkk->parsed()) report = verify::verify_dkk(ctx, cfg.n, cfg.vertices);
      if (stability->parsed()) report = verify::verify_stability(ctx, cfg.n, cfg.vertices);
      if (tail->parsed()) report = verify::verify_tail_containment(ctx, cfg.n, cfg.vertices);
      if (square->parsed()) report = verify::verify_square_containment(ctx, cfg.n, cfg.vertices);
      if (lemma->parsed()) report = verify::verify_trivalent_lemma(ctx, verify::default_lemma_cofactors(cfg.lemma_count));
      if (phi->parsed()) {
        const int N = cfg.vertices.value_or(std::max(6, cfg.n_max));
        report = verify::verify_phi_kernel(ctx, N, phi->count("--n-max") ? cfg.n_max : std::min(N, 6));
      }
      if (all->parsed()) report = verify::verify_all(ctx, {cfg.n_min, cfg.n_max, 24});
      if (cfg.format == "text") {
        detail::report_text(report, stream());
      } else {
        stream() << verify::to_json(report).dump(2) << "\n";
      }
      return report.passed ? kPass : kFail;
    }

    if (member->parsed()) {
      if (cfg.format == "csv") {
        err << "error: csv output is only available for stats\n";
        return kUsage;
      }
      std::string text;
      if (cfg.poly_path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
      } else {
        std::ifstream in(cfg.poly_path);
        if (!in) {
          err << "error: cannot read '" << cfg.poly_path << "'\n";
          return kUsage;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      }
      const auto f = io::polynomial_from_json<EdgeAlphabet>(io::parse_document(text));
      const int N = cfg.vertices.value_or(std::max({4, cfg.n, f.universe()}));
      const auto spec = ideal::IdealSpec::make(cfg.n, N);
      verify::detail::Stopwatch clock;
      const auto result = engine.member(f, spec);
      if (cfg.format == "text") {
        stream() << "member: " << (result.member ? "true" : "false") << " ("
                 << (result.certified ? "certified" : "not certified") << ")\n";
        for (const auto& c : result.components) {
          stream() << "  degree (" << c.degree.to_string() << "): " << (c.member ? "in" : "not in") << " I" << cfg.n
                   << ", dim R_d=" << c.dim_R << ", dim (I_n)_d=" << c.dim_I << "\n";
        }
      } else {
        json doc{{"command", "member"},
                 {"ideal", {{"n", spec.n}, {"N", spec.N}}},
                 {"polynomial", io::to_json(f)},
                 {"member", result.member},
                 {"certified", result.certified},
                 {"components", verify::detail::membership_detail(result)["components"]},
                 {"elapsed_ms", clock.elapsed_ms()}};
        stream() << doc.dump(2) << "\n";
      }
      return kPass;
    }

    if (stats->parsed()) {
      std::vector<Multidegree> degrees;
      for (const auto& d : cfg.degrees) degrees.push_back(Multidegree::parse(d));
      const auto ns = detail::parse_int_list(n_list_text);
      for (int n : ns) {
        if (n < 2) throw CLI::ValidationError("--n", "each n must be at least 2");
      }
      const auto rows = verify::dimension_stats(engine, ns, degrees);
      if (cfg.format == "json") {
        stream() << verify::stats_json(rows).dump(2) << "\n";
      } else if (cfg.format == "text") {
        stream() << std::left << std::setw(4) << "n" << std::setw(24) << "degree" << std::setw(10) << "dim_R"
                 << std::setw(10) << "dim_I" << "dim_quotient\n";
        for (const auto& r : rows) {
          stream() << std::left << std::setw(4) << r.n << std::setw(24) << r.degree.to_string() << std::setw(10)
                   << r.dim_R << std::setw(10) << r.dim_I << r.dim_quotient() << "\n";
        }
      } else {
        stream() << verify::stats_csv(rows);
      }
      return kPass;
    }

    if (dump->parsed()) {
      if (cfg.format == "csv") {
        err << "error: csv output is only available for stats\n";
        return kUsage;
      }
      const auto d = Multidegree::parse(cfg.degrees.front());
      const int N = cfg.vertices.value_or(std::max({4, cfg.n, d.max_vertex()}));
      const auto basis = ideal::compute_graded_basis(ideal::IdealSpec::make(cfg.n, N), d, budget);
      if (cfg.format == "text") {
        stream() << "dim R_d = " << basis.dim_R() << ", rank = " << basis.rank() << "\n";
        for (const auto& r : basis.basis.rows()) stream() << r.to_string() << "\n";
      } else {
        stream() << ideal::basis_to_json(basis).dump(2) << "\n";
      }
      return kPass;
    }
  } catch (const ideal::BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const io::ParseError& e) {
    err << "error: malformed polynomial at " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace skewchain::cli
