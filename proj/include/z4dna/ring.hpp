#pragma once

#include "z4dna/z4.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace z4dna {

/// Element a + b·w of R = Z4[w]/(w² − 2).
struct RElement {
  Z4 a; // coefficient of 1
  Z4 b; // coefficient of w

  static constexpr std::size_t order() { return 16; }
  static constexpr RElement zero() { return {}; }
  static constexpr RElement one() { return {Z4{1}, Z4{0}}; }
  static constexpr RElement w() { return {Z4{0}, Z4{1}}; }
  static constexpr RElement from_index(std::size_t i) {
    return {Z4{static_cast<int>(i & 3U)}, Z4{static_cast<int>((i >> 2) & 3U)}};
  }
  constexpr std::size_t index() const { return a.value() + 4U * b.value(); }
  constexpr RElement(Z4 a_ = {}, Z4 b_ = {}) : a(a_), b(b_) {}
  constexpr RElement(int a_) : a(a_), b(0) {}

  constexpr bool is_zero() const { return a.is_zero() && b.is_zero(); }
  // a + bw is a unit exactly when a is odd (w is nilpotent).
  constexpr bool is_unit() const { return a.is_unit(); }
  std::optional<RElement> inverse() const;

  friend constexpr RElement operator+(RElement x, RElement y) { return {x.a + y.a, x.b + y.b}; }
  friend constexpr RElement operator-(RElement x, RElement y) { return {x.a - y.a, x.b - y.b}; }
  friend constexpr RElement operator*(RElement x, RElement y) {
    return {x.a * y.a + Z4{2} * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  constexpr RElement operator-() const { return {-a, -b}; }
  constexpr RElement& operator+=(RElement y) { return *this = *this + y; }
  constexpr RElement& operator-=(RElement y) { return *this = *this - y; }
  constexpr RElement& operator*=(RElement y) { return *this = *this * y; }
  friend constexpr bool operator==(RElement, RElement) = default;
  friend constexpr auto operator<=>(RElement, RElement) = default;
};

/// Element a0 + a1·w + a2·v + a3·wv of S = R[v]/(v² − v).
struct SElement {
  std::array<Z4, 4> c{};

  static constexpr std::size_t order() { return 256; }
  static constexpr SElement zero() { return {}; }
  static constexpr SElement one() { return SElement{1, 0, 0, 0}; }
  static constexpr SElement w() { return SElement{0, 1, 0, 0}; }
  static constexpr SElement v() { return SElement{0, 0, 1, 0}; }
  static constexpr SElement wv() { return SElement{0, 0, 0, 1}; }
  static constexpr SElement from_index(std::size_t i) {
    return SElement{static_cast<int>(i & 3U), static_cast<int>((i >> 2) & 3U),
                    static_cast<int>((i >> 4) & 3U), static_cast<int>((i >> 6) & 3U)};
  }
  constexpr std::size_t index() const {
    return c[0].value() + 4U * c[1].value() + 16U * c[2].value() + 64U * c[3].value();
  }

  constexpr SElement() = default;
  constexpr SElement(int a0, int a1, int a2, int a3) : c{Z4{a0}, Z4{a1}, Z4{a2}, Z4{a3}} {}
  constexpr SElement(int a0) : c{Z4{a0}, Z4{}, Z4{}, Z4{}} {}
  constexpr SElement(Z4 a0) : c{a0, Z4{}, Z4{}, Z4{}} {}
  /// Embeds R into S.
  constexpr SElement(RElement r) : c{r.a, r.b, Z4{}, Z4{}} {}
  /// Builds x + v·y.
  static constexpr SElement from_parts(RElement x, RElement y) {
    SElement s;
    s.c = {x.a, x.b, y.a, y.b};
    return s;
  }

  constexpr bool is_zero() const { return index() == 0; }
  // Unit iff both idempotent components are units of R.
  constexpr bool is_unit() const { return c[0].is_unit() && (c[0] + c[2]).is_unit(); }
  std::optional<SElement> inverse() const;

  friend constexpr SElement operator+(SElement x, SElement y) {
    SElement r;
    for (int k = 0; k < 4; ++k) r.c[k] = x.c[k] + y.c[k];
    return r;
  }
  friend constexpr SElement operator-(SElement x, SElement y) {
    SElement r;
    for (int k = 0; k < 4; ++k) r.c[k] = x.c[k] - y.c[k];
    return r;
  }
  friend constexpr SElement operator*(SElement x, SElement y) {
    // (p + vq)(r + vs) = pr + v(ps + qr + qs), computed over R.
    const RElement p{x.c[0], x.c[1]}, q{x.c[2], x.c[3]};
    const RElement r{y.c[0], y.c[1]}, s{y.c[2], y.c[3]};
    return from_parts(p * r, p * s + q * r + q * s);
  }
  constexpr SElement operator-() const { return SElement{} - *this; }
  constexpr SElement& operator+=(SElement y) { return *this = *this + y; }
  constexpr SElement& operator-=(SElement y) { return *this = *this - y; }
  constexpr SElement& operator*=(SElement y) { return *this = *this * y; }
  friend constexpr bool operator==(SElement, SElement) = default;
  friend constexpr auto operator<=>(SElement, SElement) = default;
};

/// Every element of a finite ring type, in index order.
template <class T>
std::vector<T> all_elements() {
  std::vector<T> out;
  out.reserve(T::order());
  for (std::size_t i = 0; i < T::order(); ++i) out.push_back(T::from_index(i));
  return out;
}

// Watson-Crick complements: x̄ = (3+3w) − x on R, x̄ = 3(1+w)(1+v) − x on S.
inline constexpr RElement kComplementR{Z4{3}, Z4{3}};
inline constexpr SElement kComplementS{3, 3, 3, 3};

constexpr RElement complement(RElement x) { return kComplementR - x; }
constexpr SElement complement(SElement x) { return kComplementS - x; }

/// θ(a + wb) = a − wb.
constexpr RElement theta(RElement x) { return {x.a, -x.b}; }

/// Automorphism of S induced by v ↦ 1 − v.
constexpr SElement gamma(SElement x) {
  return SElement{x.c[0].value() + x.c[2].value(), x.c[1].value() + x.c[3].value(),
                  (-x.c[2]).value(), (-x.c[3]).value()};
}

/// The map a + wb + vc + wvd ↦ a + b + w(b + d) − vc − wv·dc read verbatim.
/// Not a ring map; kept for the audit.
constexpr SElement gamma_literal(SElement x) {
  const Z4 a = x.c[0], b = x.c[1], c = x.c[2], d = x.c[3];
  SElement r;
  r.c = {a + b, b + d, -c, -(d * c)};
  return r;
}

/// Idempotent (CRT) components: x = v·first + (1 − v)·second.
constexpr std::pair<RElement, RElement> idempotent_split(SElement x) {
  const RElement a{x.c[0], x.c[1]}, b{x.c[2], x.c[3]};
  return {a + b, a};
}
constexpr SElement idempotent_join(RElement on_v, RElement on_one_minus_v) {
  return SElement::from_parts(on_one_minus_v, on_v - on_one_minus_v);
}
/// Literal projection x = a + v·b ↦ (a, b).
constexpr std::pair<RElement, RElement> phi1_parts(SElement x) {
  return {RElement{x.c[0], x.c[1]}, RElement{x.c[2], x.c[3]}};
}

std::string to_string(RElement x);
std::string to_string(SElement x);
std::optional<RElement> parse_r(std::string_view text);
std::optional<SElement> parse_s(std::string_view text);

/// A total map on a finite ring given by its image table.
template <class T>
struct RingMap {
  std::string name;
  std::vector<T> image; // indexed by T::index()

  T operator()(T x) const { return image[x.index()]; }

  static RingMap tabulate(std::string name, const std::function<T(T)>& f) {
    RingMap m{std::move(name), {}};
    m.image.reserve(T::order());
    for (std::size_t i = 0; i < T::order(); ++i) m.image.push_back(f(T::from_index(i)));
    return m;
  }
};

struct MapAudit {
  std::string name;
  std::size_t domain_size = 0;
  bool additive = true;
  bool multiplicative = true;
  bool unital = true;
  bool bijective = true;
  std::vector<std::string> counterexamples; // first per failed axiom

  bool is_automorphism() const { return additive && multiplicative && unital && bijective; }
};

template <class T>
MapAudit validate_ring_map(const RingMap<T>& m) {
  MapAudit audit;
  audit.name = m.name;
  audit.domain_size = T::order();
  const auto elems = all_elements<T>();
  for (const T& x : elems) {
    for (const T& y : elems) {
      if (audit.additive && m(x + y) != m(x) + m(y)) {
        audit.additive = false;
        audit.counterexamples.push_back("additive: f(" + to_string(x) + " + " + to_string(y) +
                                        ") = " + to_string(m(x + y)) + " but f(x) + f(y) = " +
                                        to_string(m(x) + m(y)));
      }
      if (audit.multiplicative && m(x * y) != m(x) * m(y)) {
        audit.multiplicative = false;
        audit.counterexamples.push_back("multiplicative: f(" + to_string(x) + " * " +
                                        to_string(y) + ") = " + to_string(m(x * y)) +
                                        " but f(x) * f(y) = " + to_string(m(x) * m(y)));
      }
    }
  }
  if (m(T::one()) != T::one()) {
    audit.unital = false;
    audit.counterexamples.push_back("unital: f(1) = " + to_string(m(T::one())));
  }
  std::vector<bool> hit(T::order(), false);
  for (const T& x : elems) {
    const std::size_t i = m(x).index();
    if (hit[i] && audit.bijective) {
      audit.bijective = false;
      audit.counterexamples.push_back("bijective: image " + to_string(m(x)) + " repeated at " +
                                      to_string(x));
    }
    hit[i] = true;
  }
  return audit;
}

RingMap<RElement> theta_map();
RingMap<SElement> gamma_map();
RingMap<SElement> gamma_literal_map();

struct RingTables {
  std::vector<RElement> units;
  std::vector<RElement> non_units;
  /// Each ideal listed with its elements sorted by index; ordered by size.
  std::vector<std::vector<RElement>> ideals;
  bool is_chain = false;
};

/// Units by invertibility search, ideals as sums of principal ideals.
RingTables ring_tables();

/// The principal ideal x·R, sorted by index.
std::vector<RElement> principal_ideal(RElement x);

} // namespace z4dna
