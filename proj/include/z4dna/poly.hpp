#pragma once

#include "z4dna/ring.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace z4dna {

/// Dense univariate polynomial over Z4, R or S with ascending coefficients.
/// Canonical form has no trailing zero coefficient; the zero polynomial is empty.
template <class T>
class Polynomial {
public:
  using coefficient_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(T value) { return Polynomial(std::vector<T>{value}); }
  static Polynomial monomial(T value, std::size_t k) {
    std::vector<T> c(k + 1, T::zero());
    c[k] = value;
    return Polynomial(std::move(c));
  }
  /// x^n − 1.
  static Polynomial xn_minus_1(std::size_t n) {
    std::vector<T> c(n + 1, T::zero());
    c[0] = -T::one();
    c[n] = c[n] + T::one();
    return Polynomial(std::move(c));
  }
  /// 1 + x + ... + x^{n−1}.
  static Polynomial all_ones(std::size_t n) { return Polynomial(std::vector<T>(n, T::one())); }

  const std::vector<T>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// −1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : T::zero(); }
  T lead() const { return c_.empty() ? T::zero() : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == T::one(); }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    std::vector<T> out(std::max(f.c_.size(), g.c_.size()), T::zero());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = f[k] + g[k];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    std::vector<T> out(std::max(f.c_.size(), g.c_.size()), T::zero());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = f[k] - g[k];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<T> out(f.c_.size() + g.c_.size() - 1, T::zero());
    for (std::size_t i = 0; i < f.c_.size(); ++i)
      for (std::size_t j = 0; j < g.c_.size(); ++j) out[i + j] += f.c_[i] * g.c_[j];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(T s, const Polynomial& f) {
    std::vector<T> out = f.c_;
    for (T& x : out) x = s * x;
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend auto operator<=>(const Polynomial& f, const Polynomial& g) {
    // Canonical order: by degree, then coefficients from the top down.
    if (auto cmp = f.degree() <=> g.degree(); cmp != 0) return cmp;
    return std::lexicographical_compare_three_way(f.c_.rbegin(), f.c_.rend(), g.c_.rbegin(),
                                                  g.c_.rend());
  }

  /// Multiplication by x^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> out(k, T::zero());
    out.insert(out.end(), c_.begin(), c_.end());
    return Polynomial(std::move(out));
  }

  /// Reduction modulo x^n − 1: x^{n+k} ↦ x^k. Throws std::invalid_argument for n = 0.
  Polynomial mod_xn_minus_1(std::size_t n) const {
    if (n == 0) throw std::invalid_argument("mod_xn_minus_1: n must be positive");
    std::vector<T> out(n, T::zero());
    for (std::size_t k = 0; k < c_.size(); ++k) out[k % n] += c_[k];
    return Polynomial(std::move(out));
  }

  /// Coefficient vector of length n (after reduction modulo x^n − 1).
  std::vector<T> to_vector(std::size_t n) const {
    const Polynomial r = mod_xn_minus_1(n);
    std::vector<T> v(n, T::zero());
    std::copy(r.c_.begin(), r.c_.end(), v.begin());
    return v;
  }

  T evaluate(T x) const {
    T acc = T::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  template <class U>
  Polynomial<U> embed() const {
    std::vector<U> out;
    out.reserve(c_.size());
    for (const T& x : c_) out.push_back(U(x));
    return Polynomial<U>(std::move(out));
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<T> c_;
};

using Z4Poly = Polynomial<Z4>;
using RPoly = Polynomial<RElement>;
using SPoly = Polynomial<SElement>;

/// f*(x) = x^{deg f} f(1/x). Throws std::invalid_argument for f = 0.
template <class T>
Polynomial<T> reciprocal(const Polynomial<T>& f) {
  if (f.is_zero()) throw std::invalid_argument("reciprocal: zero polynomial");
  std::vector<T> c = f.coeffs();
  std::reverse(c.begin(), c.end());
  return Polynomial<T>(std::move(c));
}

/// The unit m with f* = m·f, or nullopt. Throws std::invalid_argument for f = 0.
template <class T>
std::optional<T> is_self_reciprocal(const Polynomial<T>& f) {
  const Polynomial<T> r = reciprocal(f);
  for (std::size_t i = 0; i < T::order(); ++i) {
    const T m = T::from_index(i);
    if (m.is_unit() && r == m * f) return m;
  }
  return std::nullopt;
}

/// Quotient q with f = q·d if the remainder vanishes. Requires a unit leading
/// coefficient of d (std::invalid_argument otherwise).
template <class T>
std::optional<Polynomial<T>> divides_monic(const Polynomial<T>& d, const Polynomial<T>& f) {
  if (d.is_zero() || !d.lead().is_unit())
    throw std::invalid_argument("divides_monic: divisor needs a unit leading coefficient");
  const T lead_inv = *d.lead().inverse();
  std::vector<T> rem = f.coeffs();
  const std::size_t dd = static_cast<std::size_t>(d.degree());
  if (rem.size() < dd + 1) {
    if (f.is_zero()) return Polynomial<T>{};
    return std::nullopt;
  }
  std::vector<T> q(rem.size() - dd, T::zero());
  for (std::size_t top = rem.size(); top-- > dd;) {
    const T factor = rem[top] * lead_inv;
    if (factor.is_zero()) continue;
    const std::size_t shift = top - dd;
    q[shift] = factor;
    for (std::size_t k = 0; k <= dd; ++k) rem[shift + k] -= factor * d[k];
  }
  for (const T& r : rem)
    if (!r.is_zero()) return std::nullopt;
  return Polynomial<T>(std::move(q));
}

/// Monic divisors of x^n − 1 over Z4 with 1 ≤ degree ≤ max_deg, canonically
/// sorted. Throws std::invalid_argument for even n or a bad degree bound.
std::vector<Z4Poly> divisor_search(std::size_t n, std::size_t max_deg);

/// Same scan with coefficients ranging over R.
std::vector<RPoly> divisor_search_r(std::size_t n, std::size_t max_deg);

/// Polynomial over R[x, θ] with coefficients on the left: Σ a_k x^k.
class SkewPolynomial {
public:
  SkewPolynomial() = default;
  explicit SkewPolynomial(RPoly p) : p_(std::move(p)) {}
  SkewPolynomial(std::initializer_list<RElement> coeffs) : p_(coeffs) {}

  const RPoly& poly() const { return p_; }
  const std::vector<RElement>& coeffs() const { return p_.coeffs(); }
  long degree() const { return p_.degree(); }
  RElement lead() const { return p_.lead(); }
  bool is_monic() const { return p_.is_monic(); }
  bool is_zero() const { return p_.is_zero(); }
  RElement operator[](std::size_t k) const { return p_[k]; }

  friend SkewPolynomial operator+(const SkewPolynomial& f, const SkewPolynomial& g) {
    return SkewPolynomial(f.p_ + g.p_);
  }
  friend SkewPolynomial operator-(const SkewPolynomial& f, const SkewPolynomial& g) {
    return SkewPolynomial(f.p_ - g.p_);
  }
  /// (a x^i)(b x^j) = a θ^i(b) x^{i+j}.
  friend SkewPolynomial operator*(const SkewPolynomial& f, const SkewPolynomial& g);
  friend bool operator==(const SkewPolynomial&, const SkewPolynomial&) = default;
  friend auto operator<=>(const SkewPolynomial& f, const SkewPolynomial& g) { return f.p_ <=> g.p_; }

  static SkewPolynomial xn_minus_1(std::size_t n) { return SkewPolynomial(RPoly::xn_minus_1(n)); }

private:
  RPoly p_;
};

inline SkewPolynomial skew_mul(const SkewPolynomial& f, const SkewPolynomial& g) { return f * g; }

/// θ^k.
constexpr RElement theta_pow(RElement x, std::size_t k) { return k % 2 == 0 ? x : theta(x); }

/// q with f = q·d in R[x, θ], or nullopt. Requires a unit leading coefficient of d.
std::optional<SkewPolynomial> skew_right_divides(const SkewPolynomial& d, const SkewPolynomial& f);

/// Monic right divisors of x^n − 1 of degree ≤ max_deg (degree 0 included).
std::vector<SkewPolynomial> skew_divisor_search(std::size_t n, std::size_t max_deg);

// Text forms. Human form is a sum of monomials in w, v, x (e.g. "3+x",
// "x^2+(1+w)x+3"); bracket form lists ascending coefficients ("[3,1]").
using AnyPoly = std::variant<Z4Poly, RPoly, SPoly>;

std::string to_string(const Z4Poly& f);
std::string to_string(const RPoly& f);
std::string to_string(const SPoly& f);
std::string to_string(const SkewPolynomial& f);
std::string to_bracket_string(const Z4Poly& f);
std::string to_bracket_string(const RPoly& f);
std::string to_bracket_string(const SPoly& f);

/// Ring tag follows the element syntax: S if v or a 4-tuple appears, R if w
/// appears, Z4 otherwise. Throws std::invalid_argument on malformed input.
AnyPoly parse_polynomial(std::string_view text);
/// Parses and embeds into the requested ring; fails if the text needs a larger ring.
Z4Poly parse_z4_poly(std::string_view text);
RPoly parse_r_poly(std::string_view text);
SPoly parse_s_poly(std::string_view text);

} // namespace z4dna
