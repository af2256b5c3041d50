#pragma once

#include "z4dna/code.hpp"
#include "z4dna/gamma.hpp"
#include "z4dna/report.hpp"
#include "z4dna/skew.hpp"

#include <cstdint>
#include <vector>

namespace z4dna {

// Batch audits. Each returns one report per code examined, in a deterministic order.

/// Every ⟨g, wa⟩ with a | g | x^n − 1 (odd n).
std::vector<PropertyReport> suite_theorem_7_8(std::size_t n);

/// `count` seeded pairs (C1, C2) of cyclic codes over R; every second pair is drawn from the rc-closed ones.
std::vector<std::pair<CodeHandle, CodeHandle>> random_cyclic_pairs(std::size_t n, std::size_t count, std::uint64_t seed);
/// Split/join identities and the S-side rc criterion on each random pair.
std::vector<PropertyReport> suite_split_join(std::size_t n, std::size_t count, std::uint64_t seed);
/// Sum and intersection of seeded pairs of rc-closed cyclic S-codes.
std::vector<PropertyReport> suite_sum_intersection(std::size_t n, std::size_t count, std::uint64_t seed);

/// Every monic right divisor of x^n − 1 with degree ≤ max_deg, for each n.
std::vector<PropertyReport> suite_skew(const std::vector<std::size_t>& lengths, std::size_t max_deg);

/// Quasi-cyclicity of the Gray images of every cyclic code over R at odd n ≤ max_n,
/// and of every vC1 ⊕ (1 − v)C2 over S.
std::vector<PropertyReport> suite_gray_quasi_cyclic(std::size_t max_n);

/// ⟨x − 1⟩_Γ at n = 7: exact size 4^24 with 24 unit pivots, (x^7 − 1)/(x − 1) ∈ C,
/// letter-level reverse-complement closure of seeded samples and basis rows.
PropertyReport example_34(std::uint64_t seed = kDefaultSeed, std::size_t samples = kDefaultSamples);

} // namespace z4dna
