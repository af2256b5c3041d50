#include "../oracles.hpp"

#include "z4dna/skew.hpp"

#include <doctest.h>

using namespace z4dna;

namespace {
SkewPolynomial skew(std::initializer_list<RElement> c) { return SkewPolynomial(c); }
} // namespace

TEST_CASE("sigma_theta") {
  const std::vector<RElement> v{RElement::one(), RElement::w()};
  CHECK(sigma_theta(v) == std::vector<RElement>{RElement{0, 3}, RElement::one()});
  CHECK(sigma_theta(sigma_theta(v)) == v);
  const std::vector<RElement> z4{RElement{1}, RElement{2}, RElement{3}};
  CHECK(sigma_theta(z4) == std::vector<RElement>{RElement{3}, RElement{1}, RElement{2}});
}

TEST_CASE("left multiplication by x is sigma_theta") {
  const auto f = skew({RElement{1, 1}, RElement{0, 1}, RElement{2, 3}});
  for (std::size_t n : {3, 4})
    for (std::size_t i = 0; i + 1 < 2 * n; ++i) CHECK(skew_row(n, i + 1, f) == sigma_theta(skew_row(n, i, f)));
}

TEST_CASE("build_skew") {
  const auto full = build_skew(3, skew({1}));
  CHECK(full.code.log2_cardinality() == 12);
  CHECK(full.code.basis == build_cyclic_r(3, Z4Poly{Z4(1)}, Z4Poly{Z4(1)}).basis);
  CHECK(build_skew(2, skew({3, 1})).code.log2_cardinality() == 4);
  CHECK(build_skew(4, SkewPolynomial::xn_minus_1(4)).code.basis.is_zero());
  CHECK_THROWS_AS(build_skew(2, skew({1, 2})), BuildError);
  CHECK_THROWS_AS(build_skew(3, skew({1, 0, 1})), BuildError);
  CHECK_THROWS_AS(build_skew(1, skew({1})), BuildError);
}

TEST_CASE("built skew codes are sigma_theta-closed") {
  for (std::size_t n : {2, 3, 4})
    for (const auto& f : skew_divisor_search(n, 3)) {
      const auto s = build_skew(n, f);
      CHECK_FALSE(find_non_skew_cyclic(s.code));
      CHECK(is_ring_submodule(s.code));
      if (const auto e = skew_cyclic_by_enumeration(s.code, kDefinitionalCap)) CHECK(*e);
    }
}

TEST_CASE("rc-closure criterion for skew cyclic codes") {
  const auto unit = verify_theorem_29_30(3, skew({1}));
  CHECK(unit.value("rc_closed"));
  CHECK(unit.value("criterion"));
  CHECK(unit.holds());

  bool saw_failure_witness = false;
  for (std::size_t n : {2, 3, 4})
    for (const auto& f : skew_divisor_search(n, 3)) {
      const auto r = verify_theorem_29_30(n, f);
      CHECK(r.holds());
      if (!r.value("f self-reciprocal")) {
        CHECK_FALSE(r.value("rc_closed"));
        CHECK(r.find("rc_closed")->witness.has_value());
        saw_failure_witness = true;
      }
    }
  CHECK(saw_failure_witness);
}
