#pragma once

#include "z4dna/gray.hpp"
#include "z4dna/report.hpp"
#include "z4dna/ring.hpp"

#include <cstdint>
#include <string>

namespace z4dna {

/// Complement identities, exhaustively: a + ā = 3+3w and (3+3w) − \overline{wa} = wa
/// over R; c + c̄ = K, ā + 3·0̄ = 3a and \overline{a+b} = ā + b̄ − 3(1+w)(1+v) over S
/// (the last over all 256² pairs); θ(x) + θ(x̄) = 3 − 3w over R.
PropertyReport audit_complement_identities();

/// Ŏσ = υŎ (block 4) and Θσ = υ′Θ (block 8) on random vectors of every length in [1, max_n].
PropertyReport audit_gray_intertwining(std::uint64_t seed, std::size_t per_length = 200, std::size_t max_n = 8);

/// d_L(x, y) = d_H(Gray(x), Gray(y)) on random pairs over R^n and S^n, 1 ≤ n ≤ max_n.
PropertyReport audit_distance_preservation(std::uint64_t seed, std::size_t pairs = 1000, std::size_t max_n = 16);

/// Expected discrepancy: Ψ, Ŏ and Θ are not additive. The finding "counterexample found"
/// is asserted; the report holds when the non-linearity is exhibited.
PropertyReport audit_gray_linearity();

/// Map audit (theta | gamma | gamma-literal). For gamma-literal the failure of
/// additivity is the expected finding.
PropertyReport audit_map(const std::string& name);

/// Units and ideal lattice of R, including ⟨2w⟩ = {0, 2w}.
PropertyReport audit_ring_tables();

} // namespace z4dna
