#pragma once

#include "z4dna/error.hpp"
#include "z4dna/gray.hpp"
#include "z4dna/howell.hpp"
#include "z4dna/poly.hpp"
#include "z4dna/report.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace z4dna {

enum class RingTag { R, S };

/// Z4 coordinates per ring element: 2 over R (basis 1, w), 4 over S (1, w, v, wv).
constexpr std::size_t block_size(RingTag ring) { return ring == RingTag::R ? 2 : 4; }

// Codewords are stored flat and interleaved: element i occupies coordinates
// [i·block, (i+1)·block). Under the letter code the flat vector is exactly the
// DNA word.
Z4Vector flatten(std::span<const RElement> xs);
Z4Vector flatten(std::span<const SElement> xs);
std::vector<RElement> r_vector(std::span<const Z4> flat);
std::vector<SElement> s_vector(std::span<const Z4> flat);

Z4Vector shift_blocks(std::span<const Z4> flat, std::size_t block);   // σ
Z4Vector reverse_blocks(std::span<const Z4> flat, std::size_t block); // x^r
/// x^{rc}: reverse the elements, complement each (coordinatewise d ↦ 3 − d on both rings).
Z4Vector reverse_complement_blocks(std::span<const Z4> flat, std::size_t block);
/// The all-complement vector (0̄, ..., 0̄).
Z4Vector complement_of_zero(RingTag ring, std::size_t n);

std::string describe(std::span<const Z4> flat, RingTag ring);

/// A linear code over R or S held as a Z4-submodule of width 2n or 4n.
struct CodeHandle {
  RingTag ring = RingTag::R;
  std::size_t n = 0;
  std::string provenance;
  HowellBasis basis;
  /// Set when built from a generator pair ⟨g, wa⟩.
  std::optional<std::pair<Z4Poly, Z4Poly>> cyclic_generators;

  std::size_t block() const { return block_size(ring); }
  std::size_t width() const { return n * block(); }
  bool contains(std::span<const Z4> flat) const { return basis.contains(flat); }
  bool contains(std::span<const RElement> xs) const;
  bool contains(std::span<const SElement> xs) const;
  std::size_t log2_cardinality() const { return basis.log2_cardinality(); }
  std::string summary() const;
};

/// R-span (resp. S-span) of explicit rows: each row is multiplied by 1, w
/// (and v, wv) before the Howell form. Any length n ≥ 1.
CodeHandle code_from_r_rows(std::size_t n, const std::vector<std::vector<RElement>>& rows,
                            std::string provenance = "explicit rows");
CodeHandle code_from_s_rows(std::size_t n, const std::vector<std::vector<SElement>>& rows,
                            std::string provenance = "explicit rows");
CodeHandle zero_code(RingTag ring, std::size_t n);
CodeHandle full_code(RingTag ring, std::size_t n);

/// True iff the basis is closed under multiplication by w (and v, wv over S).
bool is_ring_submodule(const CodeHandle& c);

/// C = ⟨g, wa⟩ over R. Throws BuildError for even n or unless a | g | x^n − 1
/// with g, a monic.
CodeHandle build_cyclic_r(std::size_t n, const Z4Poly& g, const Z4Poly& a);

/// The cyclic code ⟨s⟩ ⊂ R[x]/(x^n − 1).
CodeHandle principal_code(std::size_t n, const RPoly& s);

struct PrincipalizeResult {
  std::optional<RPoly> generator;
  std::size_t candidates_tried = 0;
  std::string bound;
};
/// Finds s with ⟨s⟩ = C: first s = g + wa, then s = d1 + w·d2 over monic
/// divisors d1, d2 of x^n − 1 (and 0).
PrincipalizeResult principalize(const CodeHandle& c);

/// Components through x = v·first + (1 − v)·second, coordinatewise.
std::pair<CodeHandle, CodeHandle> split_s_code(const CodeHandle& c);
/// vC1 ⊕ (1 − v)C2. Throws BuildError on length mismatch or non-R inputs.
CodeHandle join_r_codes(const CodeHandle& c1, const CodeHandle& c2);

/// Basis-level checks; each witness is a codeword whose image leaves C.
std::optional<Z4Vector> find_non_cyclic(const CodeHandle& c);
std::optional<Z4Vector> find_non_reversible(const CodeHandle& c);
bool is_cyclic(const CodeHandle& c);
bool is_reversible(const CodeHandle& c);
/// rc-closure via rc(x) = 3·x^r + (0̄, ..., 0̄): reversible and 0̄ ∈ C.
bool is_rc_closed(const CodeHandle& c);
/// rc-closure by applying rc to 0 and to every basis row (rc is affine, so
/// these images lie in C iff all of rc(C) does). Returns a codeword x with
/// rc(x) ∉ C, or nullopt when closed.
std::optional<Z4Vector> find_rc_violation(const CodeHandle& c);
/// Definitional check over every codeword; nullopt if |C| > cap.
std::optional<bool> rc_closed_by_enumeration(const CodeHandle& c, std::uint64_t cap);

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefinitionalCap = std::uint64_t{1} << 14;

PropertyReport verify_theorem_7_8(std::size_t n, const Z4Poly& g, const Z4Poly& a);
PropertyReport verify_theorem_16(const CodeHandle& c);
/// Split/join on one pair: cardinality product, cyclic and reversible iff.
PropertyReport verify_split_join(const CodeHandle& c1, const CodeHandle& c2);

CodeHandle code_sum(const CodeHandle& c1, const CodeHandle& c2);
CodeHandle code_intersect(const CodeHandle& c1, const CodeHandle& c2);
/// rc-closed cyclic inputs must give rc-closed cyclic sum and intersection.
PropertyReport audit_sum_intersection(const CodeHandle& d1, const CodeHandle& d2);

/// Gray image of every basis row, quasi-shifted by 4 (R) or 8 (S), decodes to a codeword.
PropertyReport verify_gray_quasi_cyclic(const CodeHandle& c);

enum class Metric { Hamming, Lee };
/// Exact minimum nonzero weight; throws TooLarge above cap. Returns 0 for the zero code.
std::size_t min_distance(const CodeHandle& c, Metric metric, std::uint64_t cap = kDefaultCap);
/// Codon strings of all codewords, sorted. Throws TooLarge above cap.
std::vector<CodonString> export_dna_book(const CodeHandle& c, std::uint64_t cap = kDefaultCap);

/// Every cyclic code ⟨g, wa⟩ with a | g | x^n − 1 over monic divisors (1 included).
std::vector<std::pair<Z4Poly, Z4Poly>> cyclic_generator_pairs(std::size_t n);

} // namespace z4dna
