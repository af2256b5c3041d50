#pragma once

#include "z4dna/code.hpp"
#include "z4dna/poly.hpp"
#include "z4dna/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace z4dna {

/// L(f) for f = v·f1 + (1 − v)·f2: E_i = x^i f (i even), x^i Γ(f) (i odd), i < m.
struct GammaSet {
  std::size_t n = 0;
  RPoly f1, f2;
  SPoly f;
  std::size_t m = 0; // min(n − deg f1, n − deg f2)
  std::vector<std::vector<SElement>> rows;
};

/// Γ applied to every coefficient.
SPoly gamma_poly(const SPoly& f);

/// Throws BuildError for even n, non-monic inputs, or f_i ∤ x^n − 1 over R.
GammaSet build_gamma_set(std::size_t n, const RPoly& f1, const RPoly& f2);
/// S-span of the rows (each multiplied by 1, w, v, wv).
CodeHandle gamma_code(const GammaSet& l);
/// Staircase rendering of L(f), one row per line.
std::string render_gamma_matrix(const GammaSet& l);

// Letter-level operations on the 4n-letter word of an S-vector.
Z4Vector letter_reverse(std::span<const Z4> flat);
Z4Vector letter_reverse_complement(std::span<const Z4> flat);

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr std::size_t kDefaultSamples = 1000;

/// Cardinality 256^m and letter-level reversibility over `samples` seeded
/// codewords plus every basis row. Hypothesis findings carry the prefix
/// "hypothesis:"; when one fails the remaining checks are informational.
PropertyReport verify_theorem_32(std::size_t n, const RPoly& f1, const RPoly& f2,
                                 std::uint64_t seed = kDefaultSeed, std::size_t samples = kDefaultSamples);
/// Adds (x^n − 1)/(x − 1) ∈ C and letter-level reverse-complement closure on the same samples.
PropertyReport verify_corollary_33(std::size_t n, const RPoly& f1, const RPoly& f2,
                                   std::uint64_t seed = kDefaultSeed, std::size_t samples = kDefaultSamples);

} // namespace z4dna
