#include "z4dna/audits.hpp"

#include <random>
#include <stdexcept>

namespace z4dna {

namespace {

template <class T>
std::vector<T> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, T::order() - 1);
  std::vector<T> v(n);
  for (T& x : v) x = T::from_index(pick(rng));
  return v;
}

template <class T, class Pred>
void exhaustive(PropertyReport& r, const std::string& name, Pred pred) {
  std::optional<std::string> witness;
  for (const T& x : all_elements<T>())
    if (!pred(x)) {
      witness = to_string(x);
      break;
    }
  r.add(name, !witness, true, witness);
}

std::string show(const std::vector<RElement>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + "]";
}
std::string show(const std::vector<SElement>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + "]";
}

} // namespace

PropertyReport audit_complement_identities() {
  PropertyReport r;
  r.descriptor = "complement identities over R (16) and S (256)";
  const RElement k_r{3, 3};
  const SElement k_s = kComplementS;
  exhaustive<RElement>(r, "a + abar = 3+3w", [&](RElement a) { return a + complement(a) == k_r; });
  exhaustive<Z4>(r, "(3+3w) - bar(wa) = wa, a in Z4", [&](Z4 a) {
    const RElement wa = RElement::w() * RElement(a);
    return k_r - complement(wa) == wa;
  });
  exhaustive<RElement>(r, "theta(x) + theta(xbar) = 3-3w",
                       [](RElement x) { return theta(x) + theta(complement(x)) == RElement{3, 1}; });
  exhaustive<SElement>(r, "c + cbar = (3+3w)+v(3+3w)", [&](SElement c) { return c + complement(c) == k_s; });
  exhaustive<SElement>(r, "abar + 3*0bar = 3a", [](SElement a) {
    return complement(a) + SElement(3) * complement(SElement::zero()) == SElement(3) * a;
  });

  const SElement shift = SElement(3) * SElement{1, 1, 0, 0} * SElement{1, 0, 1, 0};
  std::optional<std::string> witness;
  for (const SElement& a : all_elements<SElement>()) {
    for (const SElement& b : all_elements<SElement>())
      if (complement(a + b) != complement(a) + complement(b) - shift) {
        witness = to_string(a) + ", " + to_string(b);
        break;
      }
    if (witness) break;
  }
  r.add("bar(a+b) = abar + bbar - 3(1+w)(1+v)", !witness, true, witness, "all 65536 pairs");
  return r;
}

PropertyReport audit_gray_intertwining(std::uint64_t seed, std::size_t per_length, std::size_t max_n) {
  PropertyReport r;
  r.descriptor = "Gray intertwining, seed=" + std::to_string(seed) + ", " + std::to_string(per_length) +
                 " vectors per length, n in [1," + std::to_string(max_n) + "]";
  std::mt19937_64 rng(seed);
  std::optional<std::string> bad_r, bad_s;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (std::size_t t = 0; t < per_length; ++t) {
      const auto c = random_vector<RElement>(rng, n);
      if (!bad_r && breve_o(std::span<const RElement>(cyclic_shift<RElement>(c))) != quasi_shift(breve_o(c), 4))
        bad_r = show(c);
      const auto s = random_vector<SElement>(rng, n);
      if (!bad_s && theta_big(std::span<const SElement>(cyclic_shift<SElement>(s))) != quasi_shift(theta_big(s), 8))
        bad_s = show(s);
    }
  r.add("O sigma = upsilon O (block 4)", !bad_r, true, bad_r);
  r.add("Theta sigma = upsilon' Theta (block 8)", !bad_s, true, bad_s);
  return r;
}

PropertyReport audit_distance_preservation(std::uint64_t seed, std::size_t pairs, std::size_t max_n) {
  PropertyReport r;
  r.descriptor = "Lee/Hamming distance preservation, seed=" + std::to_string(seed) + ", " + std::to_string(pairs) +
                 " pairs per ring, n in [1," + std::to_string(max_n) + "]";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(1, max_n);
  std::optional<std::string> bad_r, bad_s;
  for (std::size_t t = 0; t < pairs; ++t) {
    const std::size_t n = len(rng);
    const auto x = random_vector<RElement>(rng, n), y = random_vector<RElement>(rng, n);
    const int dl = lee_distance<RElement>(x, y);
    if (!bad_r && static_cast<std::size_t>(dl) != hamming_distance(breve_o(x), breve_o(y)))
      bad_r = show(x) + " vs " + show(y);
    const auto a = random_vector<SElement>(rng, n), b = random_vector<SElement>(rng, n);
    const int ds = lee_distance<SElement>(a, b);
    if (!bad_s && static_cast<std::size_t>(ds) != hamming_distance(theta_big(a), theta_big(b)))
      bad_s = show(a) + " vs " + show(b);
  }
  r.add("d_L = d_H o O over R^n", !bad_r, true, bad_r);
  r.add("d_L = d_H o Theta over S^n", !bad_s, true, bad_s);
  return r;
}

PropertyReport audit_gray_linearity() {
  PropertyReport r;
  r.descriptor = "Z2-linearity of the Gray maps (expected discrepancy)";
  std::optional<std::string> psi_cx;
  for (Z4 x : all_elements<Z4>()) {
    for (Z4 y : all_elements<Z4>()) {
      const auto px = psi(x), py = psi(y), pxy = psi(x + y);
      if ((px[0] ^ py[0]) != pxy[0] || (px[1] ^ py[1]) != pxy[1]) {
        psi_cx = "Psi(" + to_string(x) + ") + Psi(" + to_string(y) + ") = " + std::to_string(px[0] ^ py[0]) +
                 std::to_string(px[1] ^ py[1]) + " but Psi(" + to_string(x + y) + ") = " + std::to_string(pxy[0]) +
                 std::to_string(pxy[1]);
        break;
      }
    }
    if (psi_cx) break;
  }
  r.add("Psi additive", !psi_cx, false, psi_cx, "claimed Z2-linear; false for the tabulated map");

  std::optional<std::string> o_cx;
  for (RElement x : all_elements<RElement>()) {
    for (RElement y : all_elements<RElement>())
      if ((breve_o(x) ^ breve_o(y)) != breve_o(x + y)) {
        o_cx = "O(" + to_string(x) + ") xor O(" + to_string(y) + ") = " + (breve_o(x) ^ breve_o(y)).str() +
               " but O(" + to_string(x + y) + ") = " + breve_o(x + y).str();
        break;
      }
    if (o_cx) break;
  }
  r.add("O additive", !o_cx, false, o_cx);

  std::optional<std::string> t_cx;
  for (SElement x : all_elements<SElement>()) {
    for (SElement y : all_elements<SElement>())
      if ((theta_big(x) ^ theta_big(y)) != theta_big(x + y)) {
        t_cx = "Theta(" + to_string(x) + ") xor Theta(" + to_string(y) + ") != Theta(" + to_string(x + y) + ")";
        break;
      }
    if (t_cx) break;
  }
  r.add("Theta additive", !t_cx, false, t_cx);
  r.add("counterexample found", psi_cx.has_value() && o_cx.has_value() && t_cx.has_value(), true);
  return r;
}

namespace {

PropertyReport from_audit(const MapAudit& a, bool expect_automorphism) {
  PropertyReport r;
  r.descriptor = "map " + a.name + " on " + std::to_string(a.domain_size) + " elements";
  auto witness_for = [&](const std::string& axiom) -> std::optional<std::string> {
    for (const auto& c : a.counterexamples)
      if (c.rfind(axiom + ":", 0) == 0) return c;
    return std::nullopt;
  };
  r.add("additive", a.additive, expect_automorphism, witness_for("additive"));
  r.add("multiplicative", a.multiplicative, expect_automorphism, witness_for("multiplicative"));
  r.add("unital", a.unital, expect_automorphism, witness_for("unital"));
  r.add("bijective", a.bijective, expect_automorphism, witness_for("bijective"));
  if (!expect_automorphism)
    r.add("counterexample found", !a.additive, true, std::nullopt, "expected discrepancy: literal formula is not additive");
  return r;
}

} // namespace

PropertyReport audit_map(const std::string& name) {
  if (name == "theta") return from_audit(validate_ring_map(theta_map()), true);
  if (name == "gamma") return from_audit(validate_ring_map(gamma_map()), true);
  if (name == "gamma-literal") return from_audit(validate_ring_map(gamma_literal_map()), false);
  throw std::invalid_argument("unknown map '" + name + "' (expected theta, gamma or gamma-literal)");
}

PropertyReport audit_ring_tables() {
  const RingTables t = ring_tables();
  PropertyReport r;
  r.descriptor = "units and ideals of R";
  std::string units;
  for (const auto& u : t.units) units += (units.empty() ? "" : ",") + to_string(u);
  r.add("8 units", t.units.size() == 8, true, std::nullopt, units);
  r.add("5 ideals", t.ideals.size() == 5, true);
  r.add("chain ring", t.is_chain, true);
  const auto i2w = principal_ideal(RElement{0, 2});
  r.add("<2w> = {0, 2w}", i2w == std::vector<RElement>{RElement::zero(), RElement{0, 2}}, true, std::nullopt,
        "{0, w} is not an ideal: w*w = 2");
  const auto iw = principal_ideal(RElement::w());
  r.add("|<w>| = 8", iw.size() == 8, true);
  return r;
}

} // namespace z4dna
