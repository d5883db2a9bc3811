#include <doctest.h>

#include <cstdint>
#include <vector>

#include "permdist/error.hpp"
#include "permdist/galois.hpp"
#include "permdist/random.hpp"

using namespace permdist;

namespace {

// Schoolbook product in GF(p)[a]/(modulus) on digit vectors; shares nothing
// with the library's multiplication paths.
std::uint64_t reference_mul(std::uint64_t p, const Coefficients& modulus, std::uint64_t x, std::uint64_t y) {
  const std::size_t m = modulus.size() - 1;
  std::vector<std::uint64_t> a(m), b(m), c(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i, x /= p, y /= p) {
    a[i] = x % p;
    b[i] = y % p;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = 2 * m - 1; d >= m; --d) {
    const auto t = c[d];
    for (std::size_t i = 0; i <= m; ++i) c[d - m + i] = (c[d - m + i] + (p - t) * modulus[i]) % p;
  }
  std::uint64_t r = 0;
  for (std::size_t i = m; i-- > 0;) r = r * p + c[i];
  return r;
}

// GF(2) polynomials as bitmasks.
unsigned degree_of(std::uint64_t f) { return 63U - static_cast<unsigned>(__builtin_clzll(f)); }

std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t f) {
  const unsigned df = degree_of(f);
  while (a && degree_of(a) >= df) a ^= f << (degree_of(a) - df);
  return a;
}

bool gf2_irreducible_brute(std::uint64_t f) {
  const unsigned m = degree_of(f);
  for (std::uint64_t g = 2; degree_of(g) <= m / 2; ++g) {
    if (gf2_mod(f, g) == 0) return false;
  }
  return true;
}

// Over GF(p): does some monic polynomial of degree in [1, deg/2] divide f?
bool brute_irreducible(std::uint64_t p, const Coefficients& f) {
  const std::size_t m = f.size() - 1;
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint64_t> g(d + 1, 0), r(f);
      for (std::size_t i = 0, c = code; i < d; ++i, c /= p) g[i] = c % p;
      g[d] = 1;
      for (std::size_t top = m; top >= d; --top) {
        const auto t = r[top];
        for (std::size_t i = 0; i <= d; ++i) r[top - d + i] = (r[top - d + i] + (p - t) * g[i]) % p;
        if (top == d) break;
      }
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

std::uint64_t mask_of(const Coefficients& c) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) v |= c[i] << i;
  return v;
}

}  // namespace

TEST_CASE("field construction") {
  SUBCASE("GF(8) with x^3+x+1") {
    const Field f(2, 3, Coefficients{1, 1, 0, 1});
    CHECK(f.order() == 8);
    CHECK(f.has_tables());
  }
  SUBCASE("prime field") {
    const Field f(7, 1);
    CHECK(f.order() == 7);
    CHECK(f.modulus() == Coefficients{0, 1});
  }
  SUBCASE("reducible modulus x^2+x") { CHECK_THROWS_AS(Field(2, 2, Coefficients{0, 1, 1}), Error); }
  SUBCASE("non-prime characteristic") { CHECK_THROWS_AS(Field(6, 1), Error); }
  SUBCASE("non-monic modulus") { CHECK_THROWS_AS(Field(3, 2, Coefficients{1, 0, 2}), Error); }
  SUBCASE("wrong modulus length") { CHECK_THROWS_AS(Field(2, 3, Coefficients{1, 1, 1}), Error); }
  SUBCASE("coefficient out of range") { CHECK_THROWS_AS(Field(2, 2, Coefficients{1, 2, 1}), Error); }
  SUBCASE("missing default") { CHECK_THROWS_AS(Field(11, 2), Error); }
  SUBCASE("order overflow") {
    CHECK_THROWS_AS(Field(2, 64), Error);
    CHECK_THROWS_AS(Field(3, 40), Error);
    CHECK_NOTHROW(Field(2, 63));
  }
  SUBCASE("m = 0") { CHECK_THROWS_AS(Field(2, 0), Error); }
}

TEST_CASE("default moduli are the smallest-encoding irreducibles") {
  CHECK(default_modulus(2, 2) == Coefficients{1, 1, 1});
  CHECK(default_modulus(2, 3) == Coefficients{1, 1, 0, 1});
  CHECK(default_modulus(2, 4) == Coefficients{1, 1, 0, 0, 1});
  CHECK(mask_of(default_modulus(2, 8)) == 0x11B);
  CHECK(default_modulus(3, 2) == Coefficients{1, 0, 1});
  CHECK(default_modulus(7, 1) == Coefficients{0, 1});

  // Every smaller candidate is reducible, the chosen one is irreducible.
  for (unsigned m : {5U, 11U, 16U, 37U}) {
    CAPTURE(m);
    const std::uint64_t f = mask_of(default_modulus(2, m));
    CHECK(degree_of(f) == m);
    CHECK(gf2_irreducible_brute(f));
    for (std::uint64_t g = (std::uint64_t{1} << m) | 1; g < f; g += 2) CHECK_FALSE(gf2_irreducible_brute(g));
  }
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
    for (unsigned m = 2; m <= 4; ++m) CHECK(brute_irreducible(p, default_modulus(p, m)));
  }
}

TEST_CASE("irreducibility test agrees with trial division") {
  SUBCASE("all monic polynomials of degree <= 8 over GF(2)") {
    for (std::uint64_t f = 2; f < 512; ++f) {
      Coefficients c;
      for (unsigned i = 0; i <= degree_of(f); ++i) c.push_back((f >> i) & 1);
      CHECK(is_irreducible(2, c) == gf2_irreducible_brute(f));
    }
  }
  SUBCASE("monic polynomials of degree <= 4 over GF(3) and GF(5)") {
    for (std::uint64_t p : {3ULL, 5ULL}) {
      for (std::size_t m = 1; m <= 4; ++m) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < m; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
          Coefficients c(m + 1, 0);
          for (std::size_t i = 0, v = code; i < m; ++i, v /= p) c[i] = v % p;
          c[m] = 1;
          CHECK(is_irreducible(p, c) == brute_irreducible(p, c));
        }
      }
    }
  }
  SUBCASE("Rabin range: random degree 34..40 binary polynomials") {
    Rng rng(99);
    int irreducible = 0;
    for (int t = 0; t < 40; ++t) {
      const unsigned m = 34 + static_cast<unsigned>(rng.below(7));
      const std::uint64_t f = (std::uint64_t{1} << m) | (rng.next() & ((std::uint64_t{1} << m) - 1)) | 1;
      Coefficients c;
      for (unsigned i = 0; i <= m; ++i) c.push_back((f >> i) & 1);
      const bool expected = gf2_irreducible_brute(f);
      irreducible += expected;
      CHECK(is_irreducible(2, c) == expected);
    }
    CHECK(irreducible > 0);
  }
  SUBCASE("Rabin range over GF(3): degree 22") {
    Rng rng(4);
    int irreducible = 0, reducible = 0;
    while (irreducible < 2 || reducible < 2) {
      Coefficients c(23, 0);
      c[22] = 1;
      for (std::size_t i = 0; i < 22; ++i) c[i] = rng.below(3);
      c[0] = 1 + rng.below(2);
      const bool got = is_irreducible(3, c);
      if ((got && irreducible >= 2) || (!got && reducible >= 2)) continue;
      CHECK(got == brute_irreducible(3, c));
      (got ? irreducible : reducible)++;
    }
  }
}

TEST_CASE("GF(8) and GF(7) arithmetic examples") {
  const Field f(2, 3, Coefficients{1, 1, 0, 1});
  CHECK(f.add(2, 3) == 1);
  for (Element x = 0; x < 8; ++x) CHECK(f.add(x, 0) == x);
  CHECK(f.mul(2, 2) == 4);
  CHECK(f.mul(4, 2) == 3);
  CHECK(f.mul(2, 5) == 1);
  CHECK(f.inv(1) == 1);
  CHECK(f.inv(2) == 5);
  CHECK_THROWS_AS(f.inv(0), Error);
  CHECK_THROWS_AS(f.div(3, 0), Error);

  const Field g(7, 1);
  CHECK(g.add(5, 4) == 2);
  CHECK(g.inv(3) == 5);
  CHECK(g.sub(2, 5) == 4);
  CHECK(g.neg(3) == 4);
}

TEST_CASE("exhaustive field axioms for small fields") {
  const std::vector<std::pair<std::uint64_t, unsigned>> fields = {{2, 1}, {3, 1}, {2, 2}, {7, 1},
                                                                   {2, 3}, {3, 2}, {2, 4}, {2, 6}};
  for (auto [p, m] : fields) {
    const Field f(p, m);
    const std::uint64_t q = f.order();
    CAPTURE(q);
    bool ok = true;
    for (Element x = 0; x < q; ++x) {
      Element sum = 0;
      for (std::uint64_t i = 0; i < p; ++i) sum = f.add(sum, x);
      ok = ok && sum == 0;
      ok = ok && f.add(x, f.neg(x)) == 0 && f.mul(x, 1) == x && f.add(x, 0) == x;
      if (x) ok = ok && f.mul(x, f.inv(x)) == 1 && f.pow(x, q - 1) == 1;
      for (Element y = 0; y < q; ++y) {
        ok = ok && f.add(x, y) == f.add(y, x) && f.mul(x, y) == f.mul(y, x);
        ok = ok && f.sub(f.add(x, y), y) == x;
        ok = ok && f.mul(x, y) == reference_mul(p, f.modulus(), x, y);
        for (Element z = 0; z < q; ++z) {
          ok = ok && f.add(f.add(x, y), z) == f.add(x, f.add(y, z));
          ok = ok && f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z));
          ok = ok && f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("untabled multiplication matches the reference") {
  Rng rng(5);
  const auto first_irreducible = [](std::uint64_t p, std::size_t m) {
    Coefficients c(m + 1, 0);
    c[m] = 1;
    for (std::uint64_t code = 1;; ++code) {
      for (std::size_t i = 0, v = code; i < m; ++i, v /= p) c[i] = v % p;
      if (c[0] && brute_irreducible(p, c)) return c;
    }
  };
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 17}, {2, 37}, {2, 63}, {3, 11}, {5, 4}}) {
    const Field f = p == 3 ? Field(p, m, first_irreducible(p, m)) : Field(p, m);
    CAPTURE(f.order());
    CHECK_FALSE((f.order() <= 65536) != f.has_tables());
    for (int t = 0; t < 500; ++t) {
      const Element x = rng.below(f.order()), y = rng.below(f.order());
      if (m < 40) CHECK(f.mul(x, y) == reference_mul(p, f.modulus(), x, y));
      if (x) CHECK(f.mul(x, f.inv(x)) == 1);
      CHECK(f.mul(x, f.add(y, 1)) == f.add(f.mul(x, y), x));
    }
  }
  const Field big_prime(1000000007, 1);
  CHECK(big_prime.mul(big_prime.inv(123456789), 123456789) == 1);
}

TEST_CASE("coefficient encoding round trip") {
  const Field f(3, 3);
  for (Element x = 0; x < f.order(); ++x) CHECK(f.from_coefficients(f.to_coefficients(x)) == x);
  const std::vector<std::uint64_t> bad{1, 3};
  CHECK_THROWS_AS(f.from_coefficients(bad), Error);
  const std::vector<std::uint64_t> too_long{1, 0, 0, 1};
  CHECK_THROWS_AS(f.from_coefficients(too_long), Error);
  // a = 3 in base-3 packing
  CHECK(f.to_coefficients(3) == Coefficients{0, 1, 0});
}

TEST_CASE("number theory helpers") {
  std::vector<bool> composite(100000, false);
  for (std::uint64_t i = 2; i < composite.size(); ++i) {
    if (!composite[i])
      for (std::uint64_t j = i * i; j < composite.size(); j += i) composite[j] = true;
    CHECK(is_prime(i) == !composite[i]);
  }
  CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
  CHECK_FALSE(is_prime(3215031751ULL));     // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(prime_factors((std::uint64_t{1} << 37) - 1) == std::vector<std::uint64_t>{223, 616318177});
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_factors(1).empty());
  CHECK(multiplicative_order(2, 223) == 37);
  CHECK(multiplicative_order(2, 23) == 11);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK_THROWS_AS(multiplicative_order(2, 8), Error);
  const Field f(2, 4);
  CHECK(primitive_element(f) == 2);
}
