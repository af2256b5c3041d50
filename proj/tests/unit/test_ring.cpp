#include "../oracles.hpp"

#include "z4dna/ring.hpp"

#include <doctest.h>

#include <algorithm>

#include <random>

using namespace z4dna;

namespace {
std::array<int, 2> ints(RElement x) { return {x.a.value(), x.b.value()}; }
std::array<int, 4> ints(SElement x) { return {x.c[0].value(), x.c[1].value(), x.c[2].value(), x.c[3].value()}; }
} // namespace

TEST_CASE("Z4 arithmetic matches integers mod 4") {
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      CHECK((Z4(x) + Z4(y)).value() == (x + y) % 4);
      CHECK((Z4(x) * Z4(y)).value() == (x * y) % 4);
      CHECK((Z4(x) - Z4(y)).value() == (x - y + 4) % 4);
    }
  CHECK(Z4(-1) == Z4(3));
  CHECK(Z4(3).inverse() == Z4(3));
  CHECK_FALSE(Z4(2).inverse());
}

TEST_CASE("R multiplication agrees with the regular representation") {
  for (RElement x : all_elements<RElement>())
    for (RElement y : all_elements<RElement>()) {
      CHECK(ints(x * y) == oracle::r_mul(ints(x), ints(y)));
      CHECK(x * y == y * x);
    }
  CHECK(RElement{1, 1} * RElement{1, 1} == RElement{3, 2});
  CHECK(RElement{0, 2} * RElement{0, 2} == RElement::zero());
  for (RElement x : all_elements<RElement>()) {
    CHECK(RElement::one() * x == x);
    CHECK(x + x + x + x == RElement::zero());
  }
}

TEST_CASE("R ring axioms, exhaustive") {
  const auto all = all_elements<RElement>();
  CHECK(all.size() == 16);
  for (RElement x : all)
    for (RElement y : all)
      for (RElement z : all) {
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
}

TEST_CASE("S multiplication agrees with monomial reduction") {
  const auto all = all_elements<SElement>();
  CHECK(all.size() == 256);
  for (SElement x : all)
    for (SElement y : all) REQUIRE(ints(x * y) == oracle::s_mul(ints(x), ints(y)));
  CHECK(SElement::v() * SElement::v() == SElement::v());
  CHECK(SElement::wv() * SElement::wv() == SElement{0, 0, 2, 0});
  CHECK(SElement{1, 0, 1, 0} * SElement{1, 0, 3, 0} == SElement{1, 0, 3, 0});
}

TEST_CASE("S associativity and distributivity on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, 255);
  for (int t = 0; t < 10000; ++t) {
    const SElement x = SElement::from_index(pick(rng)), y = SElement::from_index(pick(rng)),
                   z = SElement::from_index(pick(rng));
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE(x * y == y * x);
  }
}

TEST_CASE("complements") {
  CHECK(complement(RElement::zero()) == RElement{3, 3});
  CHECK(complement(RElement::one()) == RElement{2, 3});
  CHECK(complement(SElement::zero()) == SElement{3, 3, 3, 3});
  for (RElement x : all_elements<RElement>()) CHECK(complement(complement(x)) == x);
  for (SElement x : all_elements<SElement>()) CHECK(complement(complement(x)) == x);
}

TEST_CASE("theta") {
  CHECK(theta(RElement::w()) == RElement{0, 3});
  for (RElement x : all_elements<RElement>()) {
    CHECK(theta(theta(x)) == x);
    CHECK(theta(x) + theta(complement(x)) == RElement{3, 1});
  }
  const MapAudit a = validate_ring_map(theta_map());
  CHECK(a.is_automorphism());
}

TEST_CASE("gamma is the v -> 1-v automorphism") {
  CHECK(gamma(SElement::v()) == SElement{1, 0, 3, 0});
  CHECK(gamma(SElement::w()) == SElement::w());
  for (SElement x : all_elements<SElement>()) {
    CHECK(gamma(gamma(x)) == x);
    const auto [p, q] = idempotent_split(x);
    const auto [gp, gq] = idempotent_split(gamma(x));
    CHECK(gp == q);
    CHECK(gq == p);
  }
  CHECK(validate_ring_map(gamma_map()).is_automorphism());
}

TEST_CASE("the literal gamma formula is not additive") {
  const MapAudit a = validate_ring_map(gamma_literal_map());
  CHECK_FALSE(a.additive);
  REQUIRE_FALSE(a.counterexamples.empty());
  CHECK(std::any_of(a.counterexamples.begin(), a.counterexamples.end(),
                    [](const std::string& c) { return c.rfind("additive:", 0) == 0; }));
}

TEST_CASE("identity map passes every audit flag") {
  const auto id = RingMap<RElement>::tabulate("id", [](RElement x) { return x; });
  CHECK(validate_ring_map(id).is_automorphism());
}

TEST_CASE("idempotent split and join") {
  CHECK(idempotent_split(SElement{1, 0, 0, 1}) == std::pair{RElement{1, 1}, RElement{1, 0}});
  for (RElement c : all_elements<RElement>()) CHECK(idempotent_join(c, c) == SElement(c));
  for (RElement p : all_elements<RElement>())
    for (RElement q : all_elements<RElement>()) CHECK(idempotent_split(idempotent_join(p, q)) == std::pair{p, q});
  CHECK(phi1_parts(SElement{1, 0, 3, 3}) == std::pair{RElement{1, 0}, RElement{3, 3}});
}

TEST_CASE("units and ideals of R") {
  const RingTables t = ring_tables();
  CHECK(t.units.size() == 8);
  for (RElement u : {RElement{1, 0}, RElement{3, 0}, RElement{1, 1}, RElement{3, 1}, RElement{1, 2}, RElement{1, 3},
                     RElement{3, 3}, RElement{3, 2}})
    CHECK(std::find(t.units.begin(), t.units.end(), u) != t.units.end());
  CHECK(t.is_chain);
  REQUIRE(t.ideals.size() == 5);
  CHECK(principal_ideal(RElement{0, 2}) == std::vector<RElement>{RElement::zero(), RElement{0, 2}});
  auto w_ideal = principal_ideal(RElement::w());
  std::vector<RElement> expected{RElement{0}, RElement{2}, RElement{0, 1}, RElement{0, 2},
                                 RElement{0, 3}, RElement{2, 1}, RElement{2, 2}, RElement{2, 3}};
  std::sort(expected.begin(), expected.end(), [](RElement x, RElement y) { return x.index() < y.index(); });
  CHECK(w_ideal == expected);
}

TEST_CASE("element text round-trips") {
  for (RElement x : all_elements<RElement>()) CHECK(parse_r(to_string(x)) == x);
  for (SElement x : all_elements<SElement>()) CHECK(parse_s(to_string(x)) == x);
  CHECK(to_string(RElement{1, 2}) == "1+2w");
  CHECK(parse_r("3+3w") == RElement{3, 3});
  CHECK(parse_s("1+3v+3wv") == SElement{1, 0, 3, 3});
  CHECK_FALSE(parse_r("1+q"));
}

TEST_CASE("inverses") {
  for (RElement x : all_elements<RElement>()) {
    const auto inv = x.inverse();
    CHECK(inv.has_value() == x.is_unit());
    if (inv) CHECK(x * *inv == RElement::one());
  }
  for (SElement x : all_elements<SElement>()) {
    const auto inv = x.inverse();
    CHECK(inv.has_value() == x.is_unit());
    if (inv) CHECK(x * *inv == SElement::one());
  }
}
