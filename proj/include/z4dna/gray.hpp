#pragma once

#include "z4dna/ring.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace z4dna {

/// A word over {A, C, G, T}.
class CodonString {
public:
  CodonString() = default;
  /// Throws std::invalid_argument on letters outside the alphabet.
  explicit CodonString(std::string letters);

  const std::string& str() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  friend bool operator==(const CodonString&, const CodonString&) = default;
  friend auto operator<=>(const CodonString&, const CodonString&) = default;

private:
  std::string letters_;
};

/// Letter code 0→A, 1→C, 2→G, 3→T.
char letter_of(Z4 digit);
Z4 digit_of(char letter); // throws std::invalid_argument

CodonString dna_reverse(const CodonString& s);
CodonString dna_complement(const CodonString& s);
CodonString dna_reverse_complement(const CodonString& s);
std::size_t gc_content(const CodonString& s);

/// Bits stored one per byte; text form is a string of '0'/'1'.
class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::vector<std::uint8_t> bits);
  static BitVector parse(std::string_view text); // throws std::invalid_argument

  std::size_t size() const { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::string str() const;
  std::size_t weight() const;

  friend BitVector operator^(const BitVector& x, const BitVector& y);
  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

private:
  std::vector<std::uint8_t> bits_;
};

std::size_t hamming_distance(const BitVector& x, const BitVector& y);

/// One row of the 2-adic table c = α(c) + 2β(c), γ(c) = α(c) + β(c) mod 2.
struct GrayRow {
  Z4 c;
  std::uint8_t alpha, beta, gamma;
};
const std::array<GrayRow, 4>& gray_table();

/// Ψ(c) = (β(c), γ(c)).
std::array<std::uint8_t, 2> psi(Z4 c);
Z4 psi_inverse(std::uint8_t beta, std::uint8_t gamma);

/// φ(a + wb) = (a, b).
std::pair<Z4, Z4> phi(RElement x);
/// (a_1..a_n, b_1..b_n).
std::vector<Z4> phi(std::span<const RElement> xs);

CodonString r_to_codon(RElement x);
RElement codon_to_r(std::string_view codon); // length 2, throws std::invalid_argument

std::pair<RElement, RElement> phi1(SElement x);
CodonString s_to_codon(SElement x);
SElement codon_to_s(std::string_view codon); // length 4

CodonString to_codons(std::span<const RElement> xs);
CodonString to_codons(std::span<const SElement> xs);
std::vector<RElement> r_vector_from_codons(std::string_view word);
std::vector<SElement> s_vector_from_codons(std::string_view word);

/// Ŏ(a + wb) = (β(a), γ(a), β(b), γ(b)), extended blockwise.
BitVector breve_o(RElement x);
BitVector breve_o(std::span<const RElement> xs);
std::vector<RElement> breve_o_inverse(const BitVector& bits);

/// Θ(a0 + wa1 + va2 + wva3) = Ψ(a0)Ψ(a1)Ψ(a2)Ψ(a3), extended blockwise.
BitVector theta_big(SElement x);
BitVector theta_big(std::span<const SElement> xs);
std::vector<SElement> theta_big_inverse(const BitVector& bits);

int lee_weight(Z4 x);
int lee_weight(RElement x);
int lee_weight(SElement x);
template <class T>
int lee_weight(std::span<const T> xs) {
  int w = 0;
  for (const T& x : xs) w += lee_weight(x);
  return w;
}

/// Lee distance over equal-length vectors; throws std::invalid_argument on length mismatch.
template <class T>
int lee_distance(std::span<const T> x, std::span<const T> y);
template <class T>
int hamming_distance(std::span<const T> x, std::span<const T> y);

/// Cyclic shift σ(c0..c_{n−1}) = (c_{n−1}, c0, ..., c_{n−2}).
template <class T>
std::vector<T> cyclic_shift(std::span<const T> xs) {
  std::vector<T> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[(i + 1) % xs.size()] = xs[i];
  return out;
}

/// Rotates the blocks of `block` bits right by one. Throws std::invalid_argument
/// unless block divides the length.
BitVector quasi_shift(const BitVector& b, std::size_t block);

/// True iff the set is closed under quasi_shift.
bool is_quasi_cyclic(std::span<const BitVector> words, std::size_t block);

} // namespace z4dna
