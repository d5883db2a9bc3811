#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace permdist {

// A field element is the base-p digit packing of its polynomial
// representative: value = sum c_i p^i encodes sum c_i a^i modulo the field's
// defining polynomial. 0 and 1 are the additive and multiplicative identities.
using Element = std::uint64_t;

// Coefficients of a polynomial over GF(p), lowest degree first.
using Coefficients = std::vector<std::uint64_t>;

/// Finite field GF(p^m) defined by an explicit monic irreducible modulus.
///
/// Immutable after construction. Fields with q <= 2^16 carry discrete
/// log/antilog tables; larger binary fields use shift-and-reduce products and
/// larger odd-characteristic fields multiply digit vectors.
class Field {
 public:
  /// Builds GF(p^m). Without a modulus the built-in default is used (see
  /// default_modulus). Throws Error on a non-prime p, m == 0, q > 2^63, or a
  /// modulus that is not monic irreducible of degree m with digits in [0, p).
  Field(std::uint64_t p, unsigned m, std::optional<Coefficients> modulus = std::nullopt);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  std::uint64_t order() const noexcept { return q_; }
  const Coefficients& modulus() const noexcept { return modulus_; }
  bool has_tables() const noexcept { return !log_.empty(); }

  bool contains(Element x) const noexcept { return x < q_; }

  Element add(Element x, Element y) const noexcept;
  Element neg(Element x) const noexcept;
  Element sub(Element x, Element y) const noexcept;
  Element mul(Element x, Element y) const noexcept;
  Element pow(Element x, std::uint64_t e) const noexcept;
  /// Throws Error for x == 0.
  Element inv(Element x) const;
  Element div(Element x, Element y) const;

  // dst[i] <- dst[i] - factor * src[i]
  void sub_scaled(std::span<Element> dst, std::span<const Element> src, Element factor) const noexcept;
  void scale(std::span<Element> v, Element factor) const noexcept;

  Coefficients to_coefficients(Element x) const;
  /// Throws Error when there are more than m digits or a digit is >= p.
  Element from_coefficients(std::span<const std::uint64_t> digits) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  Element mul_untabled(Element x, Element y) const noexcept;
  void build_tables();

  std::uint64_t p_;
  unsigned m_;
  std::uint64_t q_;
  Coefficients modulus_;
  std::uint64_t reduction_bits_ = 0;  // binary fields: modulus minus x^m, as a bitmask
  std::vector<Element> exp_;          // size 2(q-1): exp_[i] = g^i
  std::vector<std::uint32_t> log_;    // log_[0] unused
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(std::uint64_t p, unsigned m, std::optional<Coefficients> modulus = std::nullopt);

/// Monic irreducible of degree m with the smallest base-p encoding sum c_i p^i.
/// Available for m == 1 (the placeholder x), p == 2 with q <= 2^63, and
/// p in {3, 5, 7} with m <= 4. Throws Error otherwise.
Coefficients default_modulus(std::uint64_t p, unsigned m);

/// Irreducibility of a polynomial over GF(p) (coefficients lowest degree
/// first, leading coefficient nonzero). Uses trial division by monic
/// polynomials up to half the degree when that is cheap, otherwise Rabin's
/// test.
bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> poly);

bool is_prime(std::uint64_t n) noexcept;
/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Smallest e >= 1 with base^e = 1 mod n; gcd(base, n) must be 1.
std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t n);

/// Smallest-encoding generator of the multiplicative group of f.
Element primitive_element(const Field& f);

}  // namespace permdist
