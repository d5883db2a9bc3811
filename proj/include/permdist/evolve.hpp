#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "permdist/code.hpp"
#include "permdist/matgf.hpp"
#include "permdist/random.hpp"

namespace permdist {

/// Hyperparameters of one generational run.
struct GaConfig {
  std::size_t population_size = 5;
  std::size_t arity = 2;  // r of the algebraic crossover
  double crossover_probability = 0.7;
  double mutation_probability = 1.0;
  std::optional<std::uint64_t> max_generations = 1000;
  std::optional<double> time_budget_seconds;
  std::uint64_t seed = 0;
  // Stop as soon as the best fitness reaches this value. Off by default.
  std::optional<std::size_t> target;
  // Largest r accepted by the crossover (r! compositions per group).
  std::size_t max_arity = 5;

  /// Throws Error on an inconsistent configuration.
  void validate() const;
};

struct Individual {
  Permutation chromosome;
  std::optional<std::size_t> fitness;
  std::vector<Element> witness;
};

using Population = std::vector<Individual>;

/// Fills the fitness cache when it is empty.
void evaluate(FitnessEvaluator& eval, Individual& ind);

/// Algebraic crossover AX_r. Evaluates the r! compositions
/// chi_tau(1) o ... o chi_tau(r), tau in S_r in lexicographic order, and returns
/// the r fittest (a multiset; ties keep enumeration order). The originals are
/// always replaced. Throws Error when the group is larger than max_arity.
Population ax_crossover(FitnessEvaluator& eval, std::span<const Individual> group, std::size_t max_arity = 5);

/// Draws one coin with probability p_m; on success composes the chromosome
/// with random_cross_transposition(n, k) and clears the cache.
Individual mutate(Rng& rng, const LinearCode& code, Individual ind, double mutation_probability);

/// One generation. Groups of r are drawn without replacement (one bounded
/// draw per member from the remaining pool); each group draws a crossover coin
/// and is either crossed or has every member pass through mutate; leftovers
/// are appended untouched; the previous best chromosome replaces the worst
/// member (highest fitness, last index on ties) unless it survived. Every
/// member of the result has a cached fitness.
Population next_generation(Rng& rng, FitnessEvaluator& eval, Population population, const GaConfig& config);

struct RunStats {
  std::size_t best_value = 0;
  Permutation best_permutation;
  std::vector<Element> best_witness;
  std::uint64_t generation_of_best = 0;
  std::uint64_t generations_run = 0;
  std::uint64_t fitness_evaluations = 0;
  double wall_time_seconds = 0;
  double time_of_best_seconds = 0;
  // Best fitness of the population after each generation, generation 0 first.
  std::vector<std::size_t> best_history;
  std::vector<Permutation> final_population;
};

using GenerationObserver = std::function<void(std::uint64_t generation, const Population&)>;

/// Runs the genetic algorithm from a random initial population until the
/// generation limit, the time budget, or the target is reached. Throws
/// std::logic_error if the best fitness ever increases between generations.
RunStats run(const LinearCode& code, const GaConfig& config, const GenerationObserver& observer = {});

}  // namespace permdist
