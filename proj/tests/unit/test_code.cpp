#include "../oracles.hpp"

#include "z4dna/code.hpp"

#include <doctest.h>

#include <random>

using namespace z4dna;

namespace {
Z4Poly z4(std::initializer_list<int> c) {
  std::vector<Z4> v;
  for (int x : c) v.emplace_back(x);
  return Z4Poly(std::move(v));
}

/// Closure of the generators under σ and multiplication by w, then Z4-span: the cyclic
/// R-code generated by g and wa, computed without the library's builder.
std::set<oracle::Vec> brute_cyclic(std::size_t n, const Z4Poly& g, const Z4Poly& a) {
  std::vector<oracle::Vec> gens;
  auto push_shifts = [&](const std::vector<RElement>& base) {
    std::vector<RElement> v = base;
    for (std::size_t s = 0; s < n; ++s) {
      for (RElement u : {RElement::one(), RElement::w()}) {
        oracle::Vec flat;
        for (const RElement& x : v) {
          const auto p = oracle::r_mul({u.a.value(), u.b.value()}, {x.a.value(), x.b.value()});
          flat.push_back(p[0]);
          flat.push_back(p[1]);
        }
        gens.push_back(flat);
      }
      std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
    }
  };
  push_shifts(g.embed<RElement>().to_vector(n));
  auto wa = a.embed<RElement>().to_vector(n);
  for (auto& x : wa) x = RElement::w() * x;
  push_shifts(wa);
  return oracle::span(gens, 2 * n);
}

bool rc_definitional(const std::set<oracle::Vec>& code, std::size_t block) {
  for (const auto& x : code) {
    const auto rc = reverse_complement_blocks(oracle::to_z4(x), block);
    if (!code.count(oracle::to_ints(rc))) return false;
  }
  return true;
}
} // namespace

TEST_CASE("flat layout") {
  const std::vector<RElement> v{RElement{1, 2}, RElement{3, 0}};
  CHECK(oracle::to_ints(flatten(v)) == oracle::Vec{1, 2, 3, 0});
  CHECK(r_vector(flatten(v)) == v);
  CHECK(oracle::to_ints(shift_blocks(flatten(v), 2)) == oracle::Vec{3, 0, 1, 2});
  CHECK(oracle::to_ints(reverse_blocks(flatten(v), 2)) == oracle::Vec{3, 0, 1, 2});
  CHECK(oracle::to_ints(reverse_complement_blocks(flatten(v), 2)) == oracle::Vec{0, 3, 2, 1});
}

TEST_CASE("build_cyclic_r") {
  for (std::size_t n : {1, 3, 5}) CHECK(build_cyclic_r(n, z4({1}), z4({1})).log2_cardinality() == 4 * n);
  const auto c = build_cyclic_r(7, z4({3, 1}), z4({1}));
  CHECK(is_cyclic(c));
  CHECK(is_ring_submodule(c));
  for (std::size_t i = 0; i < 7; ++i) {
    std::vector<RElement> e(7);
    e[i] = RElement::w();
    CHECK(c.contains(std::span<const RElement>(e)));
  }
  CHECK_THROWS_AS(build_cyclic_r(4, z4({1}), z4({1})), BuildError);
  CHECK_THROWS_AS(build_cyclic_r(7, z4({1, 0, 1}), z4({1})), BuildError);
  CHECK_THROWS_AS(build_cyclic_r(7, z4({3, 1}), z4({1, 1, 1})), BuildError);
  CHECK_THROWS_AS(build_cyclic_r(7, z4({3, 2}), z4({1})), BuildError);
}

TEST_CASE("builder agrees with brute-force closure for every pair at n = 3") {
  for (const auto& [g, a] : cyclic_generator_pairs(3)) {
    const auto c = build_cyclic_r(3, g, a);
    const auto brute = brute_cyclic(3, g, a);
    REQUIRE(c.basis.cardinality() == brute.size());
    for (const auto& x : c.basis.enumerate(kDefaultCap)) CHECK(brute.count(oracle::to_ints(x)));
    CHECK(is_rc_closed(c) == rc_definitional(brute, 2));
    CHECK(!find_rc_violation(c) == rc_definitional(brute, 2));
  }
}

TEST_CASE("cyclic, reversible, rc flags") {
  const auto full = full_code(RingTag::R, 3);
  CHECK(is_cyclic(full));
  CHECK(is_reversible(full));
  CHECK(is_rc_closed(full));
  const auto zero = zero_code(RingTag::R, 3);
  CHECK(is_cyclic(zero));
  CHECK(is_reversible(zero));
  CHECK_FALSE(is_rc_closed(zero));
  CHECK(find_rc_violation(zero) == Z4Vector(6));

  const RElement k{3, 3};
  const auto ones = code_from_r_rows(3, {{k, k, k}});
  CHECK(is_rc_closed(ones));
  CHECK(rc_closed_by_enumeration(ones, kDefinitionalCap) == true);
  CHECK(min_distance(ones, Metric::Hamming) == 3);
  CHECK(min_distance(full, Metric::Hamming) == 1);

  const auto not_cyclic = code_from_r_rows(3, {{RElement::one(), RElement::zero(), RElement::zero()}});
  CHECK_FALSE(is_cyclic(not_cyclic));
  CHECK(find_non_cyclic(not_cyclic).has_value());
}

TEST_CASE("rc reduction matches definition on small codes") {
  for (std::size_t n : {1, 3, 5})
    for (const auto& [g, a] : cyclic_generator_pairs(n)) {
      const auto c = build_cyclic_r(n, g, a);
      const auto by_enum = rc_closed_by_enumeration(c, kDefinitionalCap);
      if (by_enum) {
        CHECK(*by_enum == is_rc_closed(c));
        CHECK(*by_enum == !find_rc_violation(c));
      }
    }
}

TEST_CASE("principalize") {
  const auto full = full_code(RingTag::R, 3);
  const auto p = principalize(full);
  REQUIRE(p.generator);
  CHECK(principal_code(3, *p.generator).basis == full.basis);

  const Z4Poly g = z4({1, 1, 1});
  const auto c = build_cyclic_r(3, g, g);
  const auto q = principalize(c);
  REQUIRE(q.generator);
  CHECK(principal_code(3, *q.generator).basis == c.basis);
  CHECK(principal_code(3, g.embed<RElement>()).basis == c.basis);

  const auto d = build_cyclic_r(7, z4({3, 1}), z4({1}));
  const auto s = principalize(d);
  REQUIRE(s.generator);
  CHECK(*s.generator == RPoly{RElement{3, 1}, RElement{1}});
  CHECK(s.candidates_tried == 1);
}

TEST_CASE("every cyclic code at n = 7 is principal") {
  for (const auto& [g, a] : cyclic_generator_pairs(7)) {
    const auto c = build_cyclic_r(7, g, a);
    const auto p = principalize(c);
    CHECK_MESSAGE(p.generator.has_value(), "g=", to_string(g), " a=", to_string(a));
  }
}

TEST_CASE("rc-closure criterion for cyclic R codes") {
  const auto unit = verify_theorem_7_8(5, z4({1}), z4({1}));
  CHECK(unit.value("rc_closed"));
  CHECK(unit.value("criterion"));
  CHECK(unit.find("g self-reciprocal")->note == "e=1");
  CHECK(unit.holds());

  const auto cubic = divisor_search(7, 3)[1];
  REQUIRE_FALSE(is_self_reciprocal(cubic));
  const auto r = verify_theorem_7_8(7, cubic, cubic);
  CHECK_FALSE(r.value("rc_closed"));
  CHECK(r.find("rc_closed")->witness.has_value());
  CHECK(r.holds());
  for (const auto& rep : [] {
         std::vector<PropertyReport> out;
         for (const auto& [g, a] : cyclic_generator_pairs(7)) out.push_back(verify_theorem_7_8(7, g, a));
         return out;
       }())
    CHECK(rep.holds());
}

TEST_CASE("split and join") {
  const auto full_r = full_code(RingTag::R, 4);
  const auto joined = join_r_codes(full_r, full_r);
  CHECK(joined.basis == full_code(RingTag::S, 4).basis);
  CHECK(joined.log2_cardinality() == 32);

  std::mt19937_64 rng(1);
  const auto pairs = cyclic_generator_pairs(7);
  for (int t = 0; t < 50; ++t) {
    const auto& [g1, a1] = pairs[rng() % pairs.size()];
    const auto& [g2, a2] = pairs[rng() % pairs.size()];
    const auto c1 = build_cyclic_r(7, g1, a1), c2 = build_cyclic_r(7, g2, a2);
    const auto r = verify_split_join(c1, c2);
    CHECK(r.holds());
    const auto [s1, s2] = split_s_code(join_r_codes(c1, c2));
    CHECK(s1.basis == c1.basis);
    CHECK(s2.basis == c2.basis);
  }
  CHECK_THROWS_AS(join_r_codes(full_code(RingTag::R, 3), full_code(RingTag::R, 4)), BuildError);
}

TEST_CASE("split/join on non-cyclic components") {
  const auto c1 = code_from_r_rows(3, {{RElement::one(), RElement::zero(), RElement::zero()}});
  const auto c2 = full_code(RingTag::R, 3);
  const auto r = verify_split_join(c1, c2);
  CHECK(r.holds());
  CHECK_FALSE(is_cyclic(join_r_codes(c1, c2)));
}

TEST_CASE("rc-closure criterion for S codes") {
  const auto full = verify_theorem_16(full_code(RingTag::S, 3));
  CHECK(full.value("rc_closed"));
  CHECK(full.holds());
  const auto zero = verify_theorem_16(zero_code(RingTag::S, 3));
  CHECK(zero.value("reversible"));
  CHECK_FALSE(zero.value("(0bar,...,0bar) in C"));
  CHECK_FALSE(zero.value("rc_closed"));
  CHECK(zero.holds());
}

TEST_CASE("sum and intersection") {
  const auto c = build_cyclic_r(7, z4({3, 1}), z4({1}));
  CHECK(code_sum(c, c).basis == c.basis);
  CHECK(code_intersect(c, c).basis == c.basis);
  const auto d = build_cyclic_r(7, z4({1}), z4({1}));
  CHECK(audit_sum_intersection(join_r_codes(d, d), join_r_codes(d, d)).holds());
  CHECK_THROWS_AS(code_sum(c, full_code(RingTag::R, 5)), BuildError);
}

TEST_CASE("Gray images of cyclic codes are quasi-cyclic") {
  for (std::size_t n : {1, 3, 5})
    for (const auto& [g, a] : cyclic_generator_pairs(n)) {
      const auto c = build_cyclic_r(n, g, a);
      CHECK(verify_gray_quasi_cyclic(c).holds());
      CHECK(verify_gray_quasi_cyclic(join_r_codes(c, c)).holds());
    }
  const auto nc = code_from_r_rows(3, {{RElement::one(), RElement::zero(), RElement::zero()}});
  CHECK_FALSE(verify_gray_quasi_cyclic(nc).value("Gray image closed under 4-quasi-shift"));
}

TEST_CASE("DNA book export") {
  const auto book = export_dna_book(zero_code(RingTag::R, 2));
  REQUIRE(book.size() == 1);
  CHECK(book[0].str() == "AAAA");
  const auto full = export_dna_book(full_code(RingTag::R, 1));
  CHECK(full.size() == 16);
  CHECK(std::is_sorted(full.begin(), full.end()));
  CHECK_THROWS_AS(export_dna_book(full_code(RingTag::S, 4), 1000), TooLarge);
  CHECK_THROWS_AS(min_distance(full_code(RingTag::S, 4), Metric::Lee, 1000), TooLarge);
}
