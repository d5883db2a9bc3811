#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "permdist/galois.hpp"
#include "permdist/random.hpp"

namespace permdist {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  /// Zero matrix.
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  /// Throws Error when the entry count mismatches or an entry lies outside the field.
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> entries);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Element>>& rows);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Element& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  std::span<const Element> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<Element> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Element>& entries() const noexcept { return data_; }

  void swap_rows(std::size_t a, std::size_t b) noexcept;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && *a.field_ == *b.field_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// Element of S_n. images()[j] = P(j), 0-based.
///
/// Acting on a matrix, P pulls columns: column j of apply_permutation(M, P)
/// is column P(j) of M. With (P o Q)(j) = P(Q(j)) this gives
/// apply(apply(M, P), Q) == apply(M, compose(P, Q)).
class Permutation {
 public:
  using Index = std::uint32_t;

  Permutation() = default;
  /// Throws Error unless images is a bijection on [0, n).
  explicit Permutation(std::vector<Index> images);
  static Permutation identity(std::size_t n);
  /// The transposition (a b) in S_n.
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);

  std::size_t size() const noexcept { return images_.size(); }
  Index operator[](std::size_t j) const noexcept { return images_[j]; }
  const std::vector<Index>& images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Index> images_;
};

/// (P o Q)(j) = P(Q(j)). Throws Error on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation invert(const Permutation& p);

/// Uniform over S_n by Fisher-Yates; consumes n-1 bounded draws.
Permutation random_permutation(Rng& rng, std::size_t n);
/// Transposition (t1 t2) with t1 uniform in [0, k) and t2 uniform in [k, n),
/// drawn in that order. Throws Error unless 1 <= k < n.
Permutation random_cross_transposition(Rng& rng, std::size_t n, std::size_t k);

/// Throws Error when P's degree differs from the column count.
Matrix apply_permutation(const Matrix& m, const Permutation& p);

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivot search takes the topmost unprocessed row
/// with a nonzero entry; zero rows end up at the bottom.
RrefResult rref(const Matrix& m);
/// Same reduction performed in place; returns the rank and fills pivots.
std::size_t reduce_in_place(Matrix& m, std::vector<std::size_t>& pivots);

std::size_t row_weight(const Matrix& m, std::size_t r);
std::size_t hamming_weight(std::span<const Element> v) noexcept;

/// True iff v lies in the row space of the reduced matrix (v reduces to zero).
bool in_row_space(const RrefResult& reduced, std::span<const Element> v);

}  // namespace permdist
