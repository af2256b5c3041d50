#include "z4dna/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace z4dna {

std::string to_string(Z4 x) { return std::to_string(x.value()); }

std::optional<RElement> RElement::inverse() const {
  for (std::size_t i = 0; i < order(); ++i) {
    const RElement y = from_index(i);
    if (*this * y == one()) return y;
  }
  return std::nullopt;
}

std::optional<SElement> SElement::inverse() const {
  if (!is_unit()) return std::nullopt;
  const auto [p, q] = idempotent_split(*this);
  return idempotent_join(*p.inverse(), *q.inverse());
}

std::string to_string(RElement x) {
  const int a = x.a.value(), b = x.b.value();
  if (b == 0) return std::to_string(a);
  const std::string wpart = (b == 1 ? "" : std::to_string(b)) + "w";
  if (a == 0) return wpart;
  return std::to_string(a) + "+" + wpart;
}

std::string to_string(SElement x) {
  return "(" + std::to_string(x.c[0].value()) + "," + std::to_string(x.c[1].value()) + "," +
         std::to_string(x.c[2].value()) + "," + std::to_string(x.c[3].value()) + ")";
}

namespace {

// Sum of signed monomials `k`, `kw`, `kv`, `kwv` (k optional); returns S coordinates.
std::optional<SElement> parse_monomial_sum(std::string_view text) {
  SElement acc;
  std::size_t i = 0;
  if (text.empty()) return std::nullopt;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      return std::nullopt;
    }
    if (i >= text.size()) return std::nullopt;
    long coef = 1;
    bool have_digits = false;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      coef = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        coef = (coef * 10 + (text[i] - '0')) % 4;
        ++i;
      }
      have_digits = true;
    }
    bool has_w = false, has_v = false;
    while (i < text.size() && (text[i] == 'w' || text[i] == 'v')) {
      bool& flag = text[i] == 'w' ? has_w : has_v;
      if (flag) return std::nullopt;
      flag = true;
      ++i;
    }
    if (!have_digits && !has_w && !has_v) return std::nullopt;
    const int slot = (has_w ? 1 : 0) + (has_v ? 2 : 0);
    acc.c[slot] += Z4{static_cast<int>(sign * coef)};
  }
  return acc;
}

} // namespace

std::optional<RElement> parse_r(std::string_view text) {
  auto s = parse_monomial_sum(text);
  if (!s || !s->c[2].is_zero() || !s->c[3].is_zero()) return std::nullopt;
  return RElement{s->c[0], s->c[1]};
}

std::optional<SElement> parse_s(std::string_view text) {
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') return std::nullopt;
    SElement out;
    std::size_t slot = 0, i = 1;
    while (i < text.size() - 1) {
      std::size_t j = text.find(',', i);
      if (j == std::string_view::npos || j > text.size() - 1) j = text.size() - 1;
      auto field = text.substr(i, j - i);
      if (field.empty() || slot >= 4) return std::nullopt;
      int value = 0;
      for (char ch : field) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
        value = (value * 10 + (ch - '0')) % 4;
      }
      out.c[slot++] = Z4{value};
      i = j + 1;
    }
    if (slot != 4) return std::nullopt;
    return out;
  }
  return parse_monomial_sum(text);
}

RingMap<RElement> theta_map() { return RingMap<RElement>::tabulate("theta", theta); }

RingMap<SElement> gamma_map() { return RingMap<SElement>::tabulate("gamma", gamma); }

RingMap<SElement> gamma_literal_map() {
  return RingMap<SElement>::tabulate("gamma-literal", gamma_literal);
}

std::vector<RElement> principal_ideal(RElement x) {
  std::set<std::size_t> seen;
  for (const RElement& r : all_elements<RElement>()) seen.insert((x * r).index());
  std::vector<RElement> out;
  for (std::size_t i : seen) out.push_back(RElement::from_index(i));
  return out;
}

RingTables ring_tables() {
  RingTables t;
  for (const RElement& x : all_elements<RElement>()) {
    bool invertible = false;
    for (const RElement& y : all_elements<RElement>()) invertible = invertible || x * y == RElement::one();
    (invertible ? t.units : t.non_units).push_back(x);
  }

  using Ideal = std::set<std::size_t>;
  std::set<Ideal> ideals;
  for (const RElement& x : all_elements<RElement>()) {
    Ideal id;
    for (const RElement& e : principal_ideal(x)) id.insert(e.index());
    ideals.insert(id);
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Ideal> current(ideals.begin(), ideals.end());
    for (const Ideal& p : current) {
      for (const Ideal& q : current) {
        Ideal sum;
        for (std::size_t i : p)
          for (std::size_t j : q)
            sum.insert((RElement::from_index(i) + RElement::from_index(j)).index());
        grew = ideals.insert(sum).second || grew;
      }
    }
  }

  std::vector<Ideal> ordered(ideals.begin(), ideals.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const Ideal& p, const Ideal& q) { return p.size() < q.size(); });
  t.is_chain = true;
  for (std::size_t k = 0; k + 1 < ordered.size(); ++k) {
    t.is_chain = t.is_chain && std::includes(ordered[k + 1].begin(), ordered[k + 1].end(),
                                             ordered[k].begin(), ordered[k].end());
  }
  for (const Ideal& id : ordered) {
    std::vector<RElement> elems;
    for (std::size_t i : id) elems.push_back(RElement::from_index(i));
    t.ideals.push_back(std::move(elems));
  }
  return t;
}

} // namespace z4dna
