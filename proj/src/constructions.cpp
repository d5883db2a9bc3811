#include "permdist/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "permdist/error.hpp"

namespace permdist {

LinearCode example_code_gf8() {
  auto f = make_field(2, 3, Coefficients{1, 1, 0, 1});
  constexpr int kZero = -1;
  const int exponents[3][6] = {
      {5, kZero, 5, 6, 1, kZero},
      {4, 1, 0, kZero, 1, 2},
      {5, 4, 6, 4, 2, 0},
  };
  Matrix g(f, 3, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      const int e = exponents[i][j];
      g(i, j) = e == kZero ? 0 : f->pow(2, static_cast<std::uint64_t>(e));
    }
  }
  return LinearCode(std::move(g));
}

LinearCode repetition_code(FieldPtr field, std::size_t n) {
  return LinearCode(Matrix(std::move(field), 1, n, std::vector<Element>(n, 1)));
}

LinearCode random_code(Rng& rng, FieldPtr field, std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) throw Error("random code needs 1 <= k < n");
  const std::uint64_t q = field->order();
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Element> entries(k * n);
    for (auto& e : entries) e = rng.below(q);
    Matrix g(field, k, n, std::move(entries));
    if (rref(g).rank == k) return LinearCode(std::move(g));
  }
  throw Error("random code: 100 consecutive rank-deficient draws");
}

LinearCode cyclic_code(const std::vector<std::uint64_t>& generator, std::size_t n) {
  std::vector<std::uint64_t> g = generator;
  while (!g.empty() && g.back() == 0) g.pop_back();
  if (g.empty() || g.size() > n) throw Error("generator polynomial degree must be below the length");
  const std::size_t k = n - (g.size() - 1);
  Matrix m(make_field(2, 1), k, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t d = 0; d < g.size(); ++d) m(i, i + d) = g[d];
  }
  return LinearCode(std::move(m));
}

std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t p, std::uint64_t base) {
  if (p < 2) throw Error("cyclotomic cosets need a modulus of at least 2");
  if (std::gcd(base % p, p) != 1) throw Error("base must be coprime to the modulus");
  std::vector<std::vector<std::uint64_t>> cosets;
  std::vector<bool> seen(p, false);
  for (std::uint64_t r = 1; r < p; ++r) {
    if (seen[r]) continue;
    std::vector<std::uint64_t> orbit;
    std::uint64_t x = r;
    do {
      seen[x] = true;
      orbit.push_back(x);
      x = x * base % p;
    } while (x != r);
    cosets.push_back(std::move(orbit));
  }
  return cosets;
}

std::vector<std::uint64_t> quadratic_residues(std::uint64_t p) {
  std::vector<bool> is_residue(p, false);
  for (std::uint64_t x = 1; x < p; ++x) is_residue[x * x % p] = true;
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 1; r < p; ++r) {
    if (is_residue[r]) out.push_back(r);
  }
  return out;
}

namespace {

// Remainder of x^n - 1 divided by g over GF(2); g has a nonzero leading term.
bool divides_xn_minus_1(const std::vector<std::uint64_t>& g, std::uint64_t n) {
  std::vector<std::uint64_t> r(n + 1, 0);
  r[0] = 1;
  r[n] = 1;
  const std::size_t dg = g.size() - 1;
  for (std::size_t d = n + 1; d-- > dg;) {
    if (r[d]) {
      for (std::size_t i = 0; i <= dg; ++i) r[d - dg + i] ^= g[i];
    }
  }
  return std::all_of(r.begin(), r.end(), [](std::uint64_t c) { return c == 0; });
}

}  // namespace

CyclicCodeSpec qr_generator(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw Error("quadratic-residue length must be an odd prime");
  if (p % 8 != 1 && p % 8 != 7) {
    throw Error("2 is not a quadratic residue mod " + std::to_string(p));
  }
  CyclicCodeSpec spec;
  spec.length = p;
  spec.root_field_degree = static_cast<unsigned>(multiplicative_order(2, p));
  spec.residues = quadratic_residues(p);

  const Field f(2, spec.root_field_degree);
  const Element beta = primitive_element(f);
  const Element alpha = f.pow(beta, (f.order() - 1) / p);
  if (alpha == 1 || f.pow(alpha, p) != 1) throw std::logic_error("alpha is not a primitive p-th root of unity");

  std::vector<Element> g{1};
  for (std::uint64_t i : spec.residues) {
    const Element root = f.pow(alpha, i);
    std::vector<Element> next(g.size() + 1, 0);
    for (std::size_t d = 0; d < g.size(); ++d) {
      next[d + 1] = f.add(next[d + 1], g[d]);
      next[d] = f.sub(next[d], f.mul(root, g[d]));
    }
    g = std::move(next);
  }
  for (Element c : g) {
    if (c > 1) throw std::logic_error("quadratic-residue generator has a coefficient outside GF(2)");
  }
  if (g.size() - 1 != (p - 1) / 2) throw std::logic_error("quadratic-residue generator has wrong degree");
  if (!divides_xn_minus_1(g, p)) throw std::logic_error("quadratic-residue generator does not divide x^p - 1");

  const std::vector<bool> residue_mask = [&] {
    std::vector<bool> mask(p, false);
    for (auto r : spec.residues) mask[r] = true;
    return mask;
  }();
  for (const auto& coset : cyclotomic_cosets(p, 2)) {
    for (auto e : coset) {
      if (residue_mask[e] != residue_mask[coset.front()]) {
        throw std::logic_error("quadratic residues are not a union of 2-cyclotomic cosets");
      }
    }
  }

  spec.generator.assign(g.begin(), g.end());
  return spec;
}

LinearCode qr_code(std::uint64_t p) { return cyclic_code(qr_generator(p).generator, p); }

}  // namespace permdist
