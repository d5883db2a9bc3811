#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "permdist/matgf.hpp"
#include "permdist/random.hpp"

namespace permdist {

inline constexpr std::uint64_t kDefaultCodewordBudget = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kDefaultPermutationBudget = 40320;  // 8!

/// [n, k]_q linear code given by a full-rank k x n generator matrix.
class LinearCode {
 public:
  /// Throws Error when G is empty, k >= n, or rank(G) < k.
  explicit LinearCode(Matrix generator);

  const Field& field() const noexcept { return generator_.field(); }
  const FieldPtr& field_ptr() const noexcept { return generator_.field_ptr(); }
  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.rows(); }
  std::uint64_t field_order() const noexcept { return generator_.field().order(); }
  const Matrix& generator() const noexcept { return generator_; }
  /// rref of G, kept for codeword membership checks.
  const RrefResult& reduced() const noexcept { return reduced_; }

  bool contains(std::span<const Element> word) const { return in_row_space(reduced_, word); }

 private:
  Matrix generator_;
  RrefResult reduced_;
};

struct FitnessResult {
  std::size_t value = 0;        // minimum row weight of rref(G M_P)
  std::size_t row = 0;          // first row attaining it
  std::vector<Element> witness; // that row with the column pull undone: a codeword of C
};

/// Evaluates the permutation fitness of one code, reusing scratch buffers
/// between calls. Binary codes use bit-packed rows unless the generic backend
/// is requested. Not thread-safe; use one evaluator per thread.
class FitnessEvaluator {
 public:
  enum class Backend { automatic, generic };

  explicit FitnessEvaluator(const LinearCode& code, Backend backend = Backend::automatic);

  FitnessResult operator()(const Permutation& p);

  const LinearCode& code() const noexcept { return *code_; }
  std::uint64_t evaluations() const noexcept { return evaluations_; }

 private:
  FitnessResult evaluate_generic(const Permutation& p);
  FitnessResult evaluate_binary(const Permutation& p);

  const LinearCode* code_;
  bool binary_;
  std::uint64_t evaluations_ = 0;

  Matrix work_;
  std::vector<std::size_t> pivots_;

  std::size_t row_words_ = 0;
  std::size_t col_words_ = 0;
  std::vector<std::uint64_t> columns_;  // packed columns of G
  std::vector<std::uint64_t> rows_;     // packed rows of G M_P
};

/// Fitness of P: min over the rows b of rref(G M_P) of w(b). Throws Error on
/// degree mismatch.
FitnessResult fitness(const LinearCode& code, const Permutation& p);

/// Minimum weight over all q^k - 1 nonzero codewords. Throws BudgetExceeded
/// when q^k - 1 > budget.
std::size_t exact_distance(const LinearCode& code, std::uint64_t budget = kDefaultCodewordBudget);

/// Minimum fitness over all of S_n. Throws BudgetExceeded when n! > budget.
std::size_t min_fitness_exhaustive(const LinearCode& code, std::uint64_t budget = kDefaultPermutationBudget);

/// Best of `count` uniform random permutations; the first one found wins ties.
FitnessResult random_search(const LinearCode& code, std::uint64_t count, Rng& rng);

}  // namespace permdist
