#include "z4dna/gamma.hpp"
#include "z4dna/suites.hpp"

#include <doctest.h>

using namespace z4dna;

namespace {
const RPoly kXm1{RElement{3}, RElement{1}};
}

TEST_CASE("Gamma set shape") {
  const GammaSet l = build_gamma_set(7, kXm1, kXm1);
  CHECK(l.m == 6);
  REQUIRE(l.rows.size() == 6);
  CHECK(l.rows[0] == std::vector<SElement>{SElement(3), SElement(1), {}, {}, {}, {}, {}});
  CHECK(l.rows[1] == std::vector<SElement>{{}, SElement(3), SElement(1), {}, {}, {}, {}});
  CHECK(gamma_poly(l.f) == l.f);

  const GammaSet u = build_gamma_set(3, RPoly{RElement{1}}, RPoly{RElement{1}});
  CHECK(u.m == 3);
  CHECK(gamma_code(u).basis == full_code(RingTag::S, 3).basis);
}

TEST_CASE("odd rows carry Gamma(f) when f depends on v") {
  const RPoly f2{RElement{1}, RElement{1}, RElement{1}};
  const GammaSet l = build_gamma_set(3, kXm1, f2);
  CHECK(l.m == 1);
  const GammaSet k = build_gamma_set(7, kXm1, RPoly{RElement{1}});
  CHECK(k.m == 6);
  const SPoly gf = gamma_poly(k.f);
  CHECK(gf != k.f);
  for (std::size_t i = 0; i < k.m; ++i) {
    const SPoly expected = (i % 2 == 0 ? k.f : gf).shifted(i);
    CHECK(k.rows[i] == expected.to_vector(7));
  }
  CHECK(render_gamma_matrix(k).find("(3,0,2,0) (1,0,3,0)") != std::string::npos);
}

TEST_CASE("Gamma set errors") {
  CHECK_THROWS_AS(build_gamma_set(4, kXm1, kXm1), BuildError);
  CHECK_THROWS_AS(build_gamma_set(7, RPoly{RElement{1}, RElement{0}, RElement{1}}, kXm1), BuildError);
  CHECK_THROWS_AS(build_gamma_set(7, RPoly{RElement{3}, RElement{2}}, kXm1), BuildError);
}

TEST_CASE("empty Gamma set gives the zero code") {
  GammaSet l;
  l.n = 3;
  CHECK(gamma_code(l).basis.is_zero());
}

TEST_CASE("self-reciprocal Gamma sets give reversible codes of size 256^m") {
  const auto r = verify_theorem_32(7, kXm1, kXm1, 1, 1000);
  CHECK(r.holds());
  CHECK(r.value("|C| = 256^m"));
  CHECK(r.value("letter-level reversible"));
  CHECK(verify_theorem_32(3, RPoly{RElement{1}}, RPoly{RElement{1}}).holds());
  for (std::size_t n : {3, 5, 7})
    for (const auto& f : divisor_search(n, 2)) {
      const RPoly fr = f.embed<RElement>();
      if (!is_self_reciprocal(fr)) continue;
      CHECK(verify_theorem_32(n, fr, fr, 3, 200).holds());
    }
}

TEST_CASE("non-self-reciprocal Gamma generator is flagged as a hypothesis violation") {
  const RPoly cubic = divisor_search(7, 3)[1].embed<RElement>();
  const auto r = verify_theorem_32(7, cubic, cubic);
  CHECK_FALSE(r.value("hypothesis: f1 self-reciprocal"));
  CHECK(r.failures().empty()); // checks become informational
}

TEST_CASE("reverse-complement closure needs the all-ones word") {
  const auto full = verify_corollary_33(3, RPoly{RElement{1}}, RPoly{RElement{1}});
  CHECK(full.value("(x^n-1)/(x-1) in C"));
  CHECK(full.value("letter-level reverse-complement closed"));
  CHECK(full.holds());
  const auto e = verify_corollary_33(7, kXm1, kXm1);
  CHECK_FALSE(e.value("(x^n-1)/(x-1) in C"));
  CHECK(e.find("(x^n-1)/(x-1) in C")->witness.has_value());
}

TEST_CASE("letter operations") {
  const Z4Vector v{Z4(0), Z4(1), Z4(2), Z4(3)};
  CHECK(letter_reverse(v) == Z4Vector{Z4(3), Z4(2), Z4(1), Z4(0)});
  CHECK(letter_reverse_complement(v) == v);
}

TEST_CASE("the <x-1>_Gamma code at n = 7") {
  const auto r = example_34(kDefaultSeed, 100);
  CHECK(r.value("|C| = 256^6"));
  CHECK(r.value("24 pivots"));
  CHECK(r.value("all pivots 1"));
}
