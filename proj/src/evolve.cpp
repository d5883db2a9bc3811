#include "permdist/evolve.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>

#include "permdist/error.hpp"

namespace permdist {

void GaConfig::validate() const {
  if (population_size < 2) throw Error("population size must be at least 2");
  if (arity < 2) throw Error("crossover arity must be at least 2");
  if (arity > population_size) throw Error("crossover arity exceeds population size");
  if (arity > max_arity) {
    throw Error("crossover arity " + std::to_string(arity) + " exceeds the limit " + std::to_string(max_arity));
  }
  if (!(crossover_probability >= 0 && crossover_probability <= 1)) throw Error("crossover probability not in [0, 1]");
  if (!(mutation_probability >= 0 && mutation_probability <= 1)) throw Error("mutation probability not in [0, 1]");
  if (!max_generations && !time_budget_seconds) throw Error("need a generation limit or a time budget");
  if (time_budget_seconds && !(*time_budget_seconds >= 0)) throw Error("time budget must be non-negative");
}

void evaluate(FitnessEvaluator& eval, Individual& ind) {
  if (ind.fitness) return;
  FitnessResult r = eval(ind.chromosome);
  ind.fitness = r.value;
  ind.witness = std::move(r.witness);
}

Population ax_crossover(FitnessEvaluator& eval, std::span<const Individual> group, std::size_t max_arity) {
  const std::size_t r = group.size();
  if (r > max_arity) {
    throw Error("crossover of " + std::to_string(r) + " chromosomes exceeds the limit " + std::to_string(max_arity));
  }
  if (r == 0) return {};
  std::vector<std::size_t> tau(r);
  std::iota(tau.begin(), tau.end(), 0);
  Population offspring;
  do {
    Permutation acc = group[tau[0]].chromosome;
    for (std::size_t i = 1; i < r; ++i) acc = compose(acc, group[tau[i]].chromosome);
    Individual child{std::move(acc), std::nullopt, {}};
    evaluate(eval, child);
    offspring.push_back(std::move(child));
  } while (std::next_permutation(tau.begin(), tau.end()));
  std::stable_sort(offspring.begin(), offspring.end(),
                   [](const Individual& a, const Individual& b) { return *a.fitness < *b.fitness; });
  offspring.resize(r);
  return offspring;
}

Individual mutate(Rng& rng, const LinearCode& code, Individual ind, double mutation_probability) {
  if (!rng.bernoulli(mutation_probability)) return ind;
  const Permutation t = random_cross_transposition(rng, code.length(), code.dimension());
  ind.chromosome = compose(ind.chromosome, t);
  ind.fitness.reset();
  ind.witness.clear();
  return ind;
}

namespace {

std::size_t index_of_best(const Population& pop) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pop.size(); ++i) {
    if (*pop[i].fitness < *pop[best].fitness) best = i;
  }
  return best;
}

std::size_t index_of_worst(const Population& pop) {
  std::size_t worst = 0;
  for (std::size_t i = 1; i < pop.size(); ++i) {
    if (*pop[i].fitness >= *pop[worst].fitness) worst = i;
  }
  return worst;
}

}  // namespace

Population next_generation(Rng& rng, FitnessEvaluator& eval, Population population, const GaConfig& config) {
  config.validate();
  if (population.size() != config.population_size) throw Error("population size does not match configuration");
  for (auto& ind : population) evaluate(eval, ind);

  const Individual best = population[index_of_best(population)];
  const std::size_t r = config.arity;

  Population next;
  next.reserve(population.size());
  while (population.size() >= r) {
    Population group;
    group.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
      const auto pick = static_cast<std::ptrdiff_t>(rng.below(population.size()));
      group.push_back(std::move(population[static_cast<std::size_t>(pick)]));
      population.erase(population.begin() + pick);
    }
    if (rng.bernoulli(config.crossover_probability)) {
      group = ax_crossover(eval, group, config.max_arity);
    } else {
      for (auto& s : group) {
        s = mutate(rng, eval.code(), std::move(s), config.mutation_probability);
        evaluate(eval, s);
      }
    }
    for (auto& s : group) next.push_back(std::move(s));
  }
  for (auto& s : population) next.push_back(std::move(s));

  const bool survived = std::any_of(next.begin(), next.end(),
                                    [&](const Individual& s) { return s.chromosome == best.chromosome; });
  if (!survived) next[index_of_worst(next)] = best;
  return next;
}

RunStats run(const LinearCode& code, const GaConfig& config, const GenerationObserver& observer) {
  config.validate();
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  Rng rng(config.seed);
  FitnessEvaluator eval(code);
  Population pop;
  pop.reserve(config.population_size);
  for (std::size_t i = 0; i < config.population_size; ++i) {
    Individual ind{random_permutation(rng, code.length()), std::nullopt, {}};
    evaluate(eval, ind);
    pop.push_back(std::move(ind));
  }

  RunStats stats;
  const auto record_best = [&](std::uint64_t generation) {
    const Individual& b = pop[index_of_best(pop)];
    stats.best_value = *b.fitness;
    stats.best_permutation = b.chromosome;
    stats.best_witness = b.witness;
    stats.generation_of_best = generation;
    stats.time_of_best_seconds = elapsed();
  };
  record_best(0);
  stats.best_history.push_back(stats.best_value);
  if (observer) observer(0, pop);

  std::uint64_t generation = 0;
  while (true) {
    if (config.target && stats.best_value <= *config.target) break;
    if (config.max_generations && generation >= *config.max_generations) break;
    if (config.time_budget_seconds && elapsed() >= *config.time_budget_seconds) break;

    pop = next_generation(rng, eval, std::move(pop), config);
    ++generation;
    const std::size_t current = *pop[index_of_best(pop)].fitness;
    if (current > stats.best_value) {
      throw std::logic_error("best fitness increased from " + std::to_string(stats.best_value) + " to " +
                             std::to_string(current) + " at generation " + std::to_string(generation));
    }
    if (current < stats.best_value) record_best(generation);
    stats.best_history.push_back(current);
    if (observer) observer(generation, pop);
  }

  stats.generations_run = generation;
  stats.fitness_evaluations = eval.evaluations();
  stats.wall_time_seconds = elapsed();
  stats.final_population.reserve(pop.size());
  for (const auto& ind : pop) stats.final_population.push_back(ind.chromosome);
  return stats;
}

}  // namespace permdist
