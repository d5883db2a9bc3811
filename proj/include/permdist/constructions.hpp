#pragma once

#include <cstdint>
#include <vector>

#include "permdist/code.hpp"
#include "permdist/galois.hpp"
#include "permdist/random.hpp"

namespace permdist {

/// The [6,3]_8 code over GF(8) = GF(2)(a), a^3 = a + 1, a encoded as 2, with
/// generator rows
///   a^5 0   a^5 a^6 a   0
///   a^4 a   1   0   a   a^2
///   a^5 a^4 a^6 a^4 a^2 1
LinearCode example_code_gf8();

/// 1 x n all-ones generator.
LinearCode repetition_code(FieldPtr field, std::size_t n);

/// Uniform k x n entries, resampled until the rank is k. Throws Error when
/// 1 <= k < n fails or 100 draws are all rank deficient.
LinearCode random_code(Rng& rng, FieldPtr field, std::size_t n, std::size_t k);

/// Cyclic code of length n generated by g(x) (GF(2) coefficients, lowest degree
/// first): the n - deg g cyclic shifts of g.
LinearCode cyclic_code(const std::vector<std::uint64_t>& generator, std::size_t n);

/// Orbits of {1, ..., p-1} under multiplication by base mod p, ordered by
/// smallest element, each listed in orbit order from that representative.
std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t p, std::uint64_t base);

/// Nonzero squares mod p, ascending.
std::vector<std::uint64_t> quadratic_residues(std::uint64_t p);

struct CyclicCodeSpec {
  std::uint64_t length = 0;                // prime p
  unsigned root_field_degree = 0;          // m = ord_p(2); roots live in GF(2^m)
  std::vector<std::uint64_t> residues;     // QR(p)
  std::vector<std::uint64_t> generator;    // g(x) over GF(2), lowest degree first
};

/// Generator polynomial of the binary quadratic-residue code of prime length
/// p: g(x) = prod over i in QR(p) of (x - alpha^i), alpha = beta^((2^m-1)/p)
/// for the smallest-encoding generator beta of GF(2^m)*. Throws Error when p
/// is not an odd prime with p = +-1 mod 8; throws std::logic_error if the
/// product fails its GF(2) or divisibility checks.
CyclicCodeSpec qr_generator(std::uint64_t p);

/// [p, (p+1)/2]_2 quadratic-residue code as a cyclic code.
LinearCode qr_code(std::uint64_t p);

}  // namespace permdist
