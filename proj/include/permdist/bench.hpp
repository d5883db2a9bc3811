#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permdist/code.hpp"
#include "permdist/evolve.hpp"

namespace permdist {

struct BenchOptions {
  GaConfig ga;  // ga.seed is the base seed; repetition i uses seed + i
  std::size_t repetitions = 100;
  bool random_baseline = false;  // also draw 1000 * pop random permutations per repetition
  std::size_t threads = 0;       // 0 = sequential
};

// One row of the summary table.
struct BenchRecord {
  std::string code_id;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t q = 0;
  std::size_t bound = 0;  // best bound over all repetitions
  std::size_t hits = 0;   // repetitions reaching it
  std::size_t pop = 0;
  double avg_loop = 0;    // mean generation of best over the hitting repetitions
  double avg_time = 0;    // mean seconds to best over the hitting repetitions
  std::optional<std::size_t> random_bound;
  std::optional<std::size_t> random_hits;
};

struct RepetitionOutcome {
  std::uint64_t seed = 0;
  std::size_t ga_bound = 0;
  std::uint64_t generation_of_best = 0;
  double time_of_best_seconds = 0;
  double wall_time_seconds = 0;
  std::optional<std::size_t> random_bound;
  std::vector<std::size_t> best_history;  // population best per generation
};

struct BenchResult {
  BenchRecord record;
  std::vector<RepetitionOutcome> repetitions;  // in seed order
};

/// Runs the repetitions, in parallel when options.threads > 1, and reduces
/// them in seed order so the result does not depend on the thread count.
BenchResult run_bench(const LinearCode& code, std::string code_id, const BenchOptions& options);

std::string bench_csv_header();
/// With timing off the avg_time field is left empty.
std::string bench_csv_row(const BenchRecord& record, bool timing = true);
/// method,rep,bound rows; random rows only when the baseline ran.
std::string histogram_csv(const BenchResult& result);

/// PERMDIST_THREADS, 0 when unset or unparsable.
std::size_t threads_from_env();

}  // namespace permdist
