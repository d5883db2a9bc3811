#include "permdist/matgf.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "permdist/error.hpp"

namespace permdist {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error("matrix needs " + std::to_string(rows_ * cols_) + " entries, got " + std::to_string(data_.size()));
  }
  for (auto x : data_) {
    if (!field_->contains(x)) {
      throw Error("entry " + std::to_string(x) + " outside GF(" + std::to_string(field_->order()) + ")");
    }
  }
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Element>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Element> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(std::move(field), rows.size(), cols, std::move(entries));
}

void Matrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

Permutation::Permutation(std::vector<Index> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw Error("not a permutation of [0, n)");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images_.resize(n);
  for (std::size_t j = 0; j < n; ++j) p.images_[j] = static_cast<Index>(j);
  return p;
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
  if (a >= n || b >= n) throw Error("transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (images_[j] != j) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw Error("composing permutations of different degree");
  std::vector<Permutation::Index> out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out[j] = p[q[j]];
  return Permutation(std::move(out));
}

Permutation invert(const Permutation& p) {
  std::vector<Permutation::Index> out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out[p[j]] = static_cast<Permutation::Index>(j);
  return Permutation(std::move(out));
}

Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<Permutation::Index> images = Permutation::identity(n).images();
  for (std::size_t i = n; i-- > 1;) {
    std::swap(images[i], images[rng.below(i + 1)]);
  }
  return Permutation(std::move(images));
}

Permutation random_cross_transposition(Rng& rng, std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) throw Error("cross transposition needs 1 <= k < n");
  const std::size_t a = rng.below(k);
  const std::size_t b = k + rng.below(n - k);
  return Permutation::transposition(n, a, b);
}

Matrix apply_permutation(const Matrix& m, const Permutation& p) {
  if (p.size() != m.cols()) throw Error("permutation degree does not match column count");
  Matrix out(m.field_ptr(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(r, j) = m(r, p[j]);
  }
  return out;
}

std::size_t reduce_in_place(Matrix& r, std::vector<std::size_t>& pivots) {
  const Field& f = r.field();
  pivots.clear();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < r.cols() && rank < r.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < r.rows() && r(piv, c) == 0) ++piv;
    if (piv == r.rows()) continue;
    r.swap_rows(rank, piv);
    if (r(rank, c) != 1) f.scale(r.row(rank), f.inv(r(rank, c)));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i != rank && r(i, c) != 0) f.sub_scaled(r.row(i), r.row(rank), r(i, c));
    }
    pivots.push_back(c);
    ++rank;
  }
  return rank;
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  out.rank = reduce_in_place(out.reduced, out.pivots);
  return out;
}

std::size_t hamming_weight(std::span<const Element> v) noexcept {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Element x) { return x != 0; }));
}

std::size_t row_weight(const Matrix& m, std::size_t r) { return hamming_weight(m.row(r)); }

bool in_row_space(const RrefResult& reduced, std::span<const Element> v) {
  const Matrix& r = reduced.reduced;
  if (v.size() != r.cols()) throw Error("vector length does not match matrix");
  std::vector<Element> w(v.begin(), v.end());
  for (std::size_t i = 0; i < reduced.rank; ++i) {
    const Element c = w[reduced.pivots[i]];
    if (c != 0) r.field().sub_scaled(w, r.row(i), c);
  }
  return hamming_weight(w) == 0;
}

}  // namespace permdist
