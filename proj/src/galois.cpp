#include "permdist/galois.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "permdist/error.hpp"

namespace permdist {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 63;
constexpr std::uint64_t kTableMaxOrder = std::uint64_t{1} << 16;
constexpr std::uint64_t kTrialDivisionBudget = std::uint64_t{1} << 16;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

// --- polynomials over GF(p), lowest degree first, no trailing zeros --------

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic.
Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  const std::size_t df = f.size() - 1;
  trim(a);
  while (a.size() > df) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i < df; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(c, f[i], p)) % p;
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly make_monic(Poly a, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = powmod(a.back(), p - 2, p);
  for (auto& c : a) c = mulmod(c, lead_inv, p);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    b = make_monic(std::move(b), p);
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^i) mod f for i = count, by repeated p-th powering.
Poly frobenius_power(const Poly& f, std::uint64_t p, unsigned count) {
  Poly h = poly_mod(Poly{0, 1}, f, p);
  for (unsigned i = 0; i < count; ++i) h = poly_powmod(h, p, f, p);
  return h;
}

bool rabin_irreducible(const Poly& f, std::uint64_t p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  Poly x = poly_mod(Poly{0, 1}, f, p);
  if (frobenius_power(f, p, m) != x) return false;
  for (std::uint64_t r : prime_factors(m)) {
    Poly h = frobenius_power(f, p, m / static_cast<unsigned>(r));
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (poly_gcd(f, h, p).size() != 1) return false;
  }
  return true;
}

bool trial_division_irreducible(const Poly& f, std::uint64_t p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < d; ++i, c /= p) g[i] = c % p;
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::uint64_t trial_division_cost(std::uint64_t p, unsigned m) {
  std::uint64_t total = 0, term = 1;
  for (unsigned d = 1; d <= m / 2; ++d) {
    if (term > kTrialDivisionBudget / p) return kTrialDivisionBudget + 1;
    term *= p;
    total += term;
    if (total > kTrialDivisionBudget) return total;
  }
  return total;
}

// --- integer factorization ------------------------------------------------

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto step = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t sp : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  if (n == 0) throw Error("cannot factor zero");
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d < 1024 && d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t n) {
  if (n < 2 || std::gcd(base, n) != 1) {
    throw Error("multiplicative order undefined for " + std::to_string(base) + " mod " + std::to_string(n));
  }
  std::uint64_t x = base % n;
  std::uint64_t e = 1;
  while (x != 1) {
    x = mulmod(x, base, n);
    ++e;
  }
  return e;
}

bool is_irreducible(std::uint64_t p, std::span<const std::uint64_t> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  for (auto c : f) {
    if (c >= p) return false;
  }
  f = make_monic(std::move(f), p);
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  if (m == 1) return true;
  if (f[0] == 0) return false;
  if (trial_division_cost(p, m) <= kTrialDivisionBudget) return trial_division_irreducible(f, p);
  return rabin_irreducible(f, p);
}

Coefficients default_modulus(std::uint64_t p, unsigned m) {
  if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw Error("extension degree must be at least 1");
  if (m == 1) return {0, 1};
  const bool available = (p == 2 && m <= 63) || ((p == 3 || p == 5 || p == 7) && m <= 4);
  if (!available) {
    throw Error("no default modulus for GF(" + std::to_string(p) + "^" + std::to_string(m) +
                "); supply one explicitly");
  }
  std::uint64_t count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  Coefficients f(m + 1, 0);
  f[m] = 1;
  for (std::uint64_t code = 1; code < count; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < m; ++i, c /= p) f[i] = c % p;
    if (f[0] != 0 && is_irreducible(p, f)) return f;
  }
  // Irreducible polynomials of every degree exist.
  throw std::logic_error("default modulus search exhausted");
}

Field::Field(std::uint64_t p, unsigned m, std::optional<Coefficients> modulus) : p_(p), m_(m), q_(1) {
  if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw Error("extension degree must be at least 1");
  for (unsigned i = 0; i < m; ++i) {
    if (q_ > kMaxOrder / p) {
      throw Error("field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^63");
    }
    q_ *= p;
  }
  if (modulus) {
    const Coefficients& f = *modulus;
    if (f.size() != m + 1) throw Error("modulus must have m+1 = " + std::to_string(m + 1) + " coefficients");
    for (auto c : f) {
      if (c >= p) throw Error("modulus coefficient " + std::to_string(c) + " not in [0, p)");
    }
    if (f[m] != 1) throw Error("modulus is not monic");
    if (m > 1 && !is_irreducible(p, f)) throw Error("modulus is reducible over GF(" + std::to_string(p) + ")");
    modulus_ = f;
  } else {
    modulus_ = default_modulus(p, m);
  }
  if (p_ == 2) {
    for (unsigned i = 0; i < m_; ++i) reduction_bits_ |= modulus_[i] << i;
  }
  if (q_ <= kTableMaxOrder) build_tables();
}

void Field::build_tables() {
  const Element g = primitive_element(*this);
  const std::uint64_t group = q_ - 1;
  exp_.assign(2 * group, 0);
  log_.assign(q_, 0);
  Element x = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = x;
    exp_[i + group] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_untabled(x, g);
  }
}

Element Field::add(Element x, Element y) const noexcept {
  if (p_ == 2) return x ^ y;
  if (m_ == 1) {
    const Element s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  Element r = 0, place = 1;
  for (unsigned i = 0; i < m_; ++i, x /= p_, y /= p_, place *= p_) {
    r += ((x % p_ + y % p_) % p_) * place;
  }
  return r;
}

Element Field::neg(Element x) const noexcept {
  if (p_ == 2) return x;
  if (m_ == 1) return x == 0 ? 0 : p_ - x;
  Element r = 0, place = 1;
  for (unsigned i = 0; i < m_; ++i, x /= p_, place *= p_) {
    const Element d = x % p_;
    r += (d == 0 ? 0 : p_ - d) * place;
  }
  return r;
}

Element Field::sub(Element x, Element y) const noexcept {
  if (p_ == 2) return x ^ y;
  if (m_ == 1) return x >= y ? x - y : x + (p_ - y);
  Element r = 0, place = 1;
  for (unsigned i = 0; i < m_; ++i, x /= p_, y /= p_, place *= p_) {
    r += ((x % p_ + p_ - y % p_) % p_) * place;
  }
  return r;
}

Element Field::mul(Element x, Element y) const noexcept {
  if (x == 0 || y == 0) return 0;
  if (!log_.empty()) return exp_[log_[x] + log_[y]];
  return mul_untabled(x, y);
}

Element Field::mul_untabled(Element x, Element y) const noexcept {
  if (p_ == 2) {
    const Element top = Element{1} << m_;
    Element r = 0;
    for (int i = static_cast<int>(m_) - 1; i >= 0; --i) {
      r <<= 1;
      if (r & top) r ^= top | reduction_bits_;
      if ((y >> i) & 1) r ^= x;
    }
    return r;
  }
  if (m_ == 1) return mulmod(x, y, p_);
  std::vector<std::uint64_t> a(m_), b(m_), prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i, x /= p_, y /= p_) {
    a[i] = x % p_;
    b[i] = y % p_;
  }
  for (unsigned i = 0; i < m_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p_)) % p_;
  }
  for (unsigned d = 2 * m_ - 2; d >= m_; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (unsigned i = 0; i < m_; ++i) {
      prod[d - m_ + i] = (prod[d - m_ + i] + p_ - mulmod(c, modulus_[i], p_)) % p_;
    }
    prod[d] = 0;
  }
  Element r = 0;
  for (unsigned i = m_; i-- > 0;) r = r * p_ + prod[i];
  return r;
}

Element Field::pow(Element x, std::uint64_t e) const noexcept {
  Element r = 1;
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Element Field::inv(Element x) const {
  if (x == 0) throw Error("inversion of zero");
  if (!log_.empty()) return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
  return pow(x, q_ - 2);
}

Element Field::div(Element x, Element y) const { return mul(x, inv(y)); }

void Field::sub_scaled(std::span<Element> dst, std::span<const Element> src, Element factor) const noexcept {
  if (factor == 0) return;
  const std::size_t n = std::min(dst.size(), src.size());
  if (!log_.empty()) {
    const std::uint32_t lf = log_[factor];
    if (p_ == 2) {
      for (std::size_t i = 0; i < n; ++i) {
        if (src[i]) dst[i] ^= exp_[lf + log_[src[i]]];
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (src[i]) dst[i] = sub(dst[i], exp_[lf + log_[src[i]]]);
      }
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) dst[i] = sub(dst[i], mul(factor, src[i]));
}

void Field::scale(std::span<Element> v, Element factor) const noexcept {
  for (auto& x : v) x = mul(x, factor);
}

Coefficients Field::to_coefficients(Element x) const {
  Coefficients c(m_);
  for (unsigned i = 0; i < m_; ++i, x /= p_) c[i] = x % p_;
  return c;
}

Element Field::from_coefficients(std::span<const std::uint64_t> digits) const {
  if (digits.size() > m_) throw Error("too many coefficients for GF(p^m) element");
  Element r = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p_) throw Error("coefficient " + std::to_string(digits[i]) + " not in [0, p)");
    r = r * p_ + digits[i];
  }
  return r;
}

FieldPtr make_field(std::uint64_t p, unsigned m, std::optional<Coefficients> modulus) {
  return std::make_shared<const Field>(p, m, std::move(modulus));
}

Element primitive_element(const Field& f) {
  const std::uint64_t group = f.order() - 1;
  const auto primes = prime_factors(group);
  for (Element g = 1; g < f.order(); ++g) {
    bool generator = true;
    for (auto l : primes) {
      if (f.pow(g, group / l) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw std::logic_error("multiplicative group has no generator");
}

}  // namespace permdist
