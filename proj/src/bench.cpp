#include "permdist/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "permdist/error.hpp"
#include "permdist/random.hpp"

namespace permdist {

namespace {

RepetitionOutcome run_repetition(const LinearCode& code, const BenchOptions& options, std::size_t index) {
  GaConfig config = options.ga;
  config.seed = options.ga.seed + index;
  RunStats stats = run(code, config);
  RepetitionOutcome out;
  out.seed = config.seed;
  out.ga_bound = stats.best_value;
  out.generation_of_best = stats.generation_of_best;
  out.time_of_best_seconds = stats.time_of_best_seconds;
  out.wall_time_seconds = stats.wall_time_seconds;
  out.best_history = std::move(stats.best_history);
  if (options.random_baseline) {
    Rng rng(config.seed);
    out.random_bound = random_search(code, 1000 * std::uint64_t{config.population_size}, rng).value;
  }
  return out;
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

BenchResult run_bench(const LinearCode& code, std::string code_id, const BenchOptions& options) {
  options.ga.validate();
  if (options.repetitions == 0) throw Error("benchmark needs at least one repetition");

  BenchResult result;
  result.repetitions.resize(options.repetitions);
  const std::size_t workers = std::min(options.threads, options.repetitions);
  if (workers <= 1) {
    for (std::size_t i = 0; i < options.repetitions; ++i) result.repetitions[i] = run_repetition(code, options, i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < options.repetitions; i = next++) {
          try {
            result.repetitions[i] = run_repetition(code, options, i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  BenchRecord& rec = result.record;
  rec.code_id = std::move(code_id);
  rec.n = code.length();
  rec.k = code.dimension();
  rec.q = code.field_order();
  rec.pop = options.ga.population_size;
  rec.bound = code.length();
  for (const auto& r : result.repetitions) rec.bound = std::min(rec.bound, r.ga_bound);
  double loops = 0, seconds = 0;
  for (const auto& r : result.repetitions) {
    if (r.ga_bound != rec.bound) continue;
    ++rec.hits;
    loops += static_cast<double>(r.generation_of_best);
    seconds += r.time_of_best_seconds;
  }
  rec.avg_loop = loops / static_cast<double>(rec.hits);
  rec.avg_time = seconds / static_cast<double>(rec.hits);
  if (options.random_baseline) {
    std::size_t best = code.length();
    for (const auto& r : result.repetitions) best = std::min(best, *r.random_bound);
    rec.random_bound = best;
    rec.random_hits = static_cast<std::size_t>(std::count_if(
        result.repetitions.begin(), result.repetitions.end(), [&](const auto& r) { return *r.random_bound == best; }));
  }
  return result;
}

std::string bench_csv_header() { return "code,n,k,q,bound,hits,pop,avg_loop,avg_time,random,random_hits\n"; }

std::string bench_csv_row(const BenchRecord& r, bool timing) {
  std::string id = r.code_id;
  if (id.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : id) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    id = quoted + "\"";
  }
  std::ostringstream os;
  os << id << ',' << r.n << ',' << r.k << ',' << r.q << ',' << r.bound << ',' << r.hits << ',' << r.pop << ','
     << fixed2(r.avg_loop) << ',' << (timing ? fixed2(r.avg_time) : std::string{}) << ',';
  if (r.random_bound) os << *r.random_bound;
  os << ',';
  if (r.random_hits) os << *r.random_hits;
  os << '\n';
  return os.str();
}

std::string histogram_csv(const BenchResult& result) {
  std::ostringstream os;
  os << "method,rep,bound\n";
  for (std::size_t i = 0; i < result.repetitions.size(); ++i) os << "ga," << i << ',' << result.repetitions[i].ga_bound << '\n';
  for (std::size_t i = 0; i < result.repetitions.size(); ++i) {
    if (result.repetitions[i].random_bound) os << "random," << i << ',' << *result.repetitions[i].random_bound << '\n';
  }
  return os.str();
}

std::size_t threads_from_env() {
  const char* v = std::getenv("PERMDIST_THREADS");
  if (!v) return 0;
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(v, v + std::strlen(v), n);
  if (ec != std::errc{} || *ptr != '\0') return 0;
  return n;
}

}  // namespace permdist
