#include "permdist/code.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "permdist/error.hpp"

namespace permdist {

namespace {

RrefResult validated_rref(const Matrix& g) {
  if (g.rows() == 0 || g.cols() == 0) throw Error("generator matrix is empty");
  if (g.rows() >= g.cols()) {
    throw Error("code dimension k = " + std::to_string(g.rows()) + " must be below length n = " +
                std::to_string(g.cols()));
  }
  RrefResult r = rref(g);
  if (r.rank < g.rows()) {
    throw Error("not a generating matrix: rank " + std::to_string(r.rank) + " < k = " + std::to_string(g.rows()));
  }
  return r;
}

}  // namespace

LinearCode::LinearCode(Matrix generator)
    : generator_(std::move(generator)), reduced_(validated_rref(generator_)) {}

FitnessEvaluator::FitnessEvaluator(const LinearCode& code, Backend backend)
    : code_(&code),
      binary_(backend == Backend::automatic && code.field_order() == 2),
      work_(code.field_ptr(), code.dimension(), code.length()) {
  if (!binary_) return;
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  row_words_ = (n + 63) / 64;
  col_words_ = (k + 63) / 64;
  columns_.assign(n * col_words_, 0);
  rows_.assign(k * row_words_, 0);
  const Matrix& g = code.generator();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g(i, j)) columns_[j * col_words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
}

FitnessResult FitnessEvaluator::operator()(const Permutation& p) {
  if (p.size() != code_->length()) throw Error("permutation degree does not match code length");
  ++evaluations_;
  return binary_ ? evaluate_binary(p) : evaluate_generic(p);
}

FitnessResult FitnessEvaluator::evaluate_generic(const Permutation& p) {
  const Matrix& g = code_->generator();
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) work_(i, j) = g(i, p[j]);
  }
  reduce_in_place(work_, pivots_);

  FitnessResult best{n + 1, 0, {}};
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t w = row_weight(work_, i);
    if (w < best.value) {
      best.value = w;
      best.row = i;
    }
  }
  best.witness.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) best.witness[p[j]] = work_(best.row, j);
  return best;
}

FitnessResult FitnessEvaluator::evaluate_binary(const Permutation& p) {
  const std::size_t k = code_->dimension();
  const std::size_t n = code_->length();
  const std::size_t words = row_words_;
  std::fill(rows_.begin(), rows_.end(), 0);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t* col = &columns_[std::size_t{p[j]} * col_words_];
    const std::uint64_t bit = std::uint64_t{1} << (j % 64);
    for (std::size_t cw = 0; cw < col_words_; ++cw) {
      std::uint64_t bits = col[cw];
      while (bits) {
        const std::size_t i = cw * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        rows_[i * words + j / 64] |= bit;
        bits &= bits - 1;
      }
    }
  }

  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < k; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t piv = rank;
    while (piv < k && !(rows_[piv * words + w] & bit)) ++piv;
    if (piv == k) continue;
    // Rows at or below the current rank are zero left of column c.
    std::uint64_t* prow = &rows_[rank * words];
    if (piv != rank) std::swap_ranges(prow + w, prow + words, &rows_[piv * words + w]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == rank) continue;
      std::uint64_t* row = &rows_[i * words];
      if (row[w] & bit) {
        for (std::size_t x = w; x < words; ++x) row[x] ^= prow[x];
      }
    }
    ++rank;
  }

  FitnessResult best{n + 1, 0, {}};
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t wt = 0;
    for (std::size_t x = 0; x < words; ++x) wt += static_cast<std::size_t>(std::popcount(rows_[i * words + x]));
    if (wt < best.value) {
      best.value = wt;
      best.row = i;
    }
  }
  best.witness.assign(n, 0);
  const std::uint64_t* row = &rows_[best.row * words];
  for (std::size_t j = 0; j < n; ++j) {
    if ((row[j / 64] >> (j % 64)) & 1) best.witness[p[j]] = 1;
  }
  return best;
}

FitnessResult fitness(const LinearCode& code, const Permutation& p) {
  FitnessEvaluator eval(code);
  return eval(p);
}

std::size_t exact_distance(const LinearCode& code, std::uint64_t budget) {
  const Field& f = code.field();
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  const std::uint64_t q = f.order();

  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < k && total <= static_cast<unsigned __int128>(budget) + 1; ++i) total *= q;
  if (total - 1 > budget) {
    throw BudgetExceeded("exact distance needs q^k - 1 = " + std::to_string(q) + "^" + std::to_string(k) +
                         " - 1 codewords, above budget " + std::to_string(budget) +
                         "; use the genetic search instead");
  }

  const Matrix& g = code.generator();
  std::vector<Element> message(k, 0);
  std::vector<Element> word(n, 0);
  std::size_t best = n;
  // Odometer over GF(q)^k in encoding order; each step adds (new - old) * G_i
  // for every digit that changes.
  for (std::uint64_t step = 1; step < total; ++step) {
    for (std::size_t i = 0; i < k; ++i) {
      const Element old = message[i];
      const Element next = old + 1 == q ? 0 : old + 1;
      message[i] = next;
      f.sub_scaled(word, g.row(i), f.sub(old, next));
      if (next != 0) break;
    }
    best = std::min(best, hamming_weight(word));
  }
  return best;
}

std::size_t min_fitness_exhaustive(const LinearCode& code, std::uint64_t budget) {
  const std::size_t n = code.length();
  std::uint64_t factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (factorial > budget / i) {
      throw BudgetExceeded("n! permutations exceed budget " + std::to_string(budget));
    }
    factorial *= i;
  }
  if (factorial > budget) throw BudgetExceeded("n! permutations exceed budget " + std::to_string(budget));

  FitnessEvaluator eval(code);
  std::vector<Permutation::Index> images = Permutation::identity(n).images();
  std::size_t best = n;
  do {
    best = std::min(best, eval(Permutation(images)).value);
  } while (std::next_permutation(images.begin(), images.end()));
  return best;
}

FitnessResult random_search(const LinearCode& code, std::uint64_t count, Rng& rng) {
  if (count == 0) throw Error("random search needs at least one permutation");
  FitnessEvaluator eval(code);
  FitnessResult best = eval(random_permutation(rng, code.length()));
  for (std::uint64_t i = 1; i < count; ++i) {
    FitnessResult r = eval(random_permutation(rng, code.length()));
    if (r.value < best.value) best = std::move(r);
  }
  return best;
}

}  // namespace permdist
