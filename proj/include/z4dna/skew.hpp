#pragma once

#include "z4dna/code.hpp"
#include "z4dna/poly.hpp"
#include "z4dna/report.hpp"

#include <span>
#include <vector>

namespace z4dna {

/// (c_0, ..., c_{n-1}) ↦ (θ(c_{n-1}), θ(c_0), ..., θ(c_{n-2})).
std::vector<RElement> sigma_theta(std::span<const RElement> c);
/// Same action on the flat Z4 coordinates (a, b per element).
Z4Vector sigma_theta_flat(std::span<const Z4> flat);

/// Left R[x,θ]-submodule ⟨f⟩ of R[x,θ]/(x^n − 1); left multiplication by x is σ_θ.
struct SkewCyclicCode {
  std::size_t n = 0;
  SkewPolynomial f;
  CodeHandle code;
};

/// Coefficient vector of x^i ⋆ f with exponents folded modulo n.
std::vector<RElement> skew_row(std::size_t n, std::size_t i, const SkewPolynomial& f);

/// Spans u·(x^i ⋆ f) for u ∈ {1, w}, 0 ≤ i < n. σ_θ-closure is not forced
/// here; verify_theorem_29_30 asserts it. Throws BuildError for n < 2,
/// non-monic f, or f not a right divisor of x^n − 1.
SkewCyclicCode build_skew(std::size_t n, const SkewPolynomial& f);

std::optional<Z4Vector> find_non_skew_cyclic(const CodeHandle& c);
/// Definitional σ_θ closure over every codeword; nullopt above cap.
std::optional<bool> skew_cyclic_by_enumeration(const CodeHandle& c, std::uint64_t cap);

/// rc-closed ⟺ f self-reciprocal and (3+3w)(1 + x + ... + x^{n-1}) ∈ C;
/// each direction is reported as its own finding.
PropertyReport verify_theorem_29_30(std::size_t n, const SkewPolynomial& f);

} // namespace z4dna
