#include "permdist/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

#include "permdist/bench.hpp"
#include "permdist/code.hpp"
#include "permdist/constructions.hpp"
#include "permdist/error.hpp"
#include "permdist/evolve.hpp"
#include "permdist/matrix_file.hpp"

namespace permdist {

namespace {

struct GaFlags {
  std::string input;
  std::size_t pop = 5;
  std::size_t arity = 2;
  double pc = 0.7;
  double pm = 1.0;
  std::uint64_t gens = 1000;
  double time = 0;
  std::uint64_t seed = 0;
  std::size_t target = 0;
};

void add_ga_flags(CLI::App& cmd, GaFlags& f, bool with_time) {
  cmd.add_option("--in", f.input, "Generator matrix file")->required();
  cmd.add_option("--pop", f.pop, "Population size")->capture_default_str();
  cmd.add_option("--r", f.arity, "Crossover arity")->capture_default_str();
  cmd.add_option("--pc", f.pc, "Crossover probability")->capture_default_str();
  cmd.add_option("--pm", f.pm, "Mutation probability")->capture_default_str();
  cmd.add_option("--gens", f.gens, "Maximum number of generations")->capture_default_str();
  if (with_time) cmd.add_option("--time", f.time, "Wall-clock budget in seconds");
  cmd.add_option("--seed", f.seed, "Random seed")->capture_default_str();
}

GaConfig to_config(const CLI::App& cmd, const GaFlags& f) {
  GaConfig c;
  c.population_size = f.pop;
  c.arity = f.arity;
  c.crossover_probability = f.pc;
  c.mutation_probability = f.pm;
  c.seed = f.seed;
  const bool has_time = cmd.get_option_no_throw("--time") && cmd.count("--time") > 0;
  if (has_time) {
    c.time_budget_seconds = f.time;
    c.max_generations = cmd.count("--gens") > 0 ? std::optional<std::uint64_t>(f.gens) : std::nullopt;
  } else {
    c.max_generations = f.gens;
  }
  if (cmd.get_option_no_throw("--target") && cmd.count("--target") > 0) c.target = f.target;
  c.validate();
  return c;
}

std::string join(const std::vector<Element>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string code_id_of(const std::string& path) { return std::filesystem::path(path).stem().string(); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Upper bounds on the minimum distance of linear codes by permutation-encoded genetic search",
               "permdist"};
  app.require_subcommand(1);

  GaFlags bound_flags;
  bool bound_json = false;
  auto* bound = app.add_subcommand("bound", "Genetic-algorithm upper bound on the minimum distance");
  add_ga_flags(*bound, bound_flags, true);
  bound->add_option("--target", bound_flags.target, "Stop once this distance is reached");
  bound->add_flag("--json", bound_json, "Machine-readable report");

  std::string exact_in;
  std::uint64_t exact_budget = kDefaultCodewordBudget;
  auto* exact = app.add_subcommand("exact", "Exact minimum distance by codeword enumeration");
  exact->add_option("--in", exact_in, "Generator matrix file")->required();
  exact->add_option("--budget", exact_budget, "Maximum number of codewords to enumerate")->capture_default_str();

  std::string random_in;
  std::uint64_t random_count = 5000;
  std::uint64_t random_seed = 0;
  auto* random = app.add_subcommand("random", "Best fitness over uniformly random permutations");
  random->add_option("--in", random_in, "Generator matrix file")->required();
  random->add_option("--count", random_count, "Number of permutations")->capture_default_str();
  random->add_option("--seed", random_seed, "Random seed")->capture_default_str();

  std::uint64_t qr_p = 0;
  auto* qr = app.add_subcommand("qr", "Emit the binary quadratic-residue code of prime length p");
  qr->add_option("--p", qr_p, "Prime length, p = +-1 mod 8")->required();

  GaFlags bench_flags;
  std::size_t reps = 100;
  bool random_baseline = false;
  bool no_timing = false;
  std::string histogram;
  auto* bench = app.add_subcommand("bench", "Repeated seeded runs summarised as one CSV row");
  add_ga_flags(*bench, bench_flags, false);
  bench->add_option("--reps", reps, "Number of repetitions (seeds seed, seed+1, ...)")->capture_default_str();
  bench->add_flag("--random-baseline", random_baseline, "Also search 1000*pop random permutations per repetition");
  bench->add_option("--histogram", histogram, "Write per-repetition bounds as CSV to this file");
  bench->add_flag("--no-timing", no_timing, "Leave the avg_time column empty");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bound->parsed()) {
      const LinearCode code = read_code_file(bound_flags.input);
      const RunStats s = run(code, to_config(*bound, bound_flags));
      if (bound_json) {
        nlohmann::ordered_json j;
        j["bound"] = s.best_value;
        j["witness"] = s.best_witness;
        j["permutation"] = s.best_permutation.images();
        j["generation_of_best"] = s.generation_of_best;
        j["generations"] = s.generations_run;
        j["evaluations"] = s.fitness_evaluations;
        out << j.dump() << "\n";
      } else {
        out << "bound " << s.best_value << "\n"
            << "witness " << join(s.best_witness) << "\n"
            << "generation_of_best " << s.generation_of_best << "\n"
            << "generations " << s.generations_run << "\n"
            << "evaluations " << s.fitness_evaluations << "\n";
      }
      err << "wall_time " << fixed2(s.wall_time_seconds) << " s\n";
    } else if (exact->parsed()) {
      const LinearCode code = read_code_file(exact_in);
      out << "distance " << exact_distance(code, exact_budget) << "\n";
    } else if (random->parsed()) {
      const LinearCode code = read_code_file(random_in);
      if (random_count == 0) throw Error("--count must be positive");
      Rng rng(random_seed);
      const auto start = std::chrono::steady_clock::now();
      const FitnessResult r = random_search(code, random_count, rng);
      out << "bound " << r.value << "\n"
          << "witness " << join(r.witness) << "\n";
      err << "wall_time " << fixed2(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count())
          << " s\n";
    } else if (qr->parsed()) {
      out << emit_matrix_file(qr_code(qr_p).generator());
    } else if (bench->parsed()) {
      const LinearCode code = read_code_file(bench_flags.input);
      BenchOptions opts;
      opts.ga = to_config(*bench, bench_flags);
      opts.repetitions = reps;
      opts.random_baseline = random_baseline;
      opts.threads = threads_from_env();
      const BenchResult result = run_bench(code, code_id_of(bench_flags.input), opts);
      out << bench_csv_header() << bench_csv_row(result.record, !no_timing);
      if (!histogram.empty()) {
        std::ofstream h(histogram, std::ios::binary);
        if (!h) throw Error("cannot write " + histogram);
        h << histogram_csv(result);
      }
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace permdist
