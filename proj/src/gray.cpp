#include "z4dna/gray.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace z4dna {

namespace {

constexpr std::array<char, 4> kLetters{'A', 'C', 'G', 'T'};

std::uint8_t check_bit(char ch) {
  if (ch != '0' && ch != '1') throw std::invalid_argument("bit vector: unexpected character");
  return static_cast<std::uint8_t>(ch - '0');
}

} // namespace

char letter_of(Z4 digit) { return kLetters[digit.value()]; }

Z4 digit_of(char letter) {
  switch (letter) {
  case 'A': return Z4{0};
  case 'C': return Z4{1};
  case 'G': return Z4{2};
  case 'T': return Z4{3};
  default: throw std::invalid_argument(std::string("not a DNA letter: '") + letter + "'");
  }
}

CodonString::CodonString(std::string letters) : letters_(std::move(letters)) {
  for (char ch : letters_) (void)digit_of(ch);
}

CodonString dna_reverse(const CodonString& s) {
  return CodonString(std::string(s.str().rbegin(), s.str().rend()));
}

CodonString dna_complement(const CodonString& s) {
  std::string out = s.str();
  // A↔T and C↔G is d ↦ 3 − d under the letter code.
  for (char& ch : out) ch = letter_of(Z4{3} - digit_of(ch));
  return CodonString(std::move(out));
}

CodonString dna_reverse_complement(const CodonString& s) { return dna_reverse(dna_complement(s)); }

std::size_t gc_content(const CodonString& s) {
  return static_cast<std::size_t>(
      std::count_if(s.str().begin(), s.str().end(), [](char ch) { return ch == 'G' || ch == 'C'; }));
}

BitVector::BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw std::invalid_argument("bit vector: entries must be 0 or 1");
}

BitVector BitVector::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char ch : text) bits.push_back(check_bit(ch));
  return BitVector(std::move(bits));
}

std::string BitVector::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

std::size_t BitVector::weight() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BitVector operator^(const BitVector& x, const BitVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("bit vector: length mismatch");
  std::vector<std::uint8_t> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] ^ y[i];
  return BitVector(std::move(out));
}

std::size_t hamming_distance(const BitVector& x, const BitVector& y) { return (x ^ y).weight(); }

const std::array<GrayRow, 4>& gray_table() {
  static const std::array<GrayRow, 4> table{{
      {Z4{0}, 0, 0, 0},
      {Z4{1}, 1, 0, 1},
      {Z4{2}, 0, 1, 1},
      {Z4{3}, 1, 1, 0},
  }};
  return table;
}

std::array<std::uint8_t, 2> psi(Z4 c) {
  const GrayRow& row = gray_table()[c.value()];
  return {row.beta, row.gamma};
}

Z4 psi_inverse(std::uint8_t beta, std::uint8_t gamma) {
  for (const GrayRow& row : gray_table())
    if (row.beta == beta && row.gamma == gamma) return row.c;
  throw std::invalid_argument("psi_inverse: bits must be 0 or 1");
}

std::pair<Z4, Z4> phi(RElement x) { return {x.a, x.b}; }

std::vector<Z4> phi(std::span<const RElement> xs) {
  std::vector<Z4> out(2 * xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out[i] = xs[i].a;
    out[xs.size() + i] = xs[i].b;
  }
  return out;
}

CodonString r_to_codon(RElement x) { return CodonString({letter_of(x.a), letter_of(x.b)}); }

RElement codon_to_r(std::string_view codon) {
  if (codon.size() != 2) throw std::invalid_argument("codon over R must have 2 letters");
  return {digit_of(codon[0]), digit_of(codon[1])};
}

std::pair<RElement, RElement> phi1(SElement x) { return phi1_parts(x); }

CodonString s_to_codon(SElement x) {
  const auto [a, b] = phi1(x);
  return CodonString(r_to_codon(a).str() + r_to_codon(b).str());
}

SElement codon_to_s(std::string_view codon) {
  if (codon.size() != 4) throw std::invalid_argument("codon over S must have 4 letters");
  return SElement::from_parts(codon_to_r(codon.substr(0, 2)), codon_to_r(codon.substr(2, 2)));
}

CodonString to_codons(std::span<const RElement> xs) {
  std::string out;
  for (const RElement& x : xs) out += r_to_codon(x).str();
  return CodonString(std::move(out));
}

CodonString to_codons(std::span<const SElement> xs) {
  std::string out;
  for (const SElement& x : xs) out += s_to_codon(x).str();
  return CodonString(std::move(out));
}

std::vector<RElement> r_vector_from_codons(std::string_view word) {
  if (word.size() % 2 != 0) throw std::invalid_argument("codon word length must be even");
  std::vector<RElement> out;
  for (std::size_t i = 0; i < word.size(); i += 2) out.push_back(codon_to_r(word.substr(i, 2)));
  return out;
}

std::vector<SElement> s_vector_from_codons(std::string_view word) {
  if (word.size() % 4 != 0) throw std::invalid_argument("codon word length must be a multiple of 4");
  std::vector<SElement> out;
  for (std::size_t i = 0; i < word.size(); i += 4) out.push_back(codon_to_s(word.substr(i, 4)));
  return out;
}

BitVector breve_o(RElement x) { return breve_o(std::span<const RElement>(&x, 1)); }

BitVector breve_o(std::span<const RElement> xs) {
  std::vector<std::uint8_t> bits;
  bits.reserve(4 * xs.size());
  for (const RElement& x : xs) {
    for (Z4 digit : {x.a, x.b}) {
      const auto p = psi(digit);
      bits.insert(bits.end(), p.begin(), p.end());
    }
  }
  return BitVector(std::move(bits));
}

std::vector<RElement> breve_o_inverse(const BitVector& bits) {
  if (bits.size() % 4 != 0) throw std::invalid_argument("breve_o_inverse: length must be a multiple of 4");
  std::vector<RElement> out;
  for (std::size_t i = 0; i < bits.size(); i += 4)
    out.emplace_back(psi_inverse(bits[i], bits[i + 1]), psi_inverse(bits[i + 2], bits[i + 3]));
  return out;
}

BitVector theta_big(SElement x) { return theta_big(std::span<const SElement>(&x, 1)); }

BitVector theta_big(std::span<const SElement> xs) {
  std::vector<std::uint8_t> bits;
  bits.reserve(8 * xs.size());
  for (const SElement& x : xs) {
    for (Z4 digit : x.c) {
      const auto p = psi(digit);
      bits.insert(bits.end(), p.begin(), p.end());
    }
  }
  return BitVector(std::move(bits));
}

std::vector<SElement> theta_big_inverse(const BitVector& bits) {
  if (bits.size() % 8 != 0) throw std::invalid_argument("theta_big_inverse: length must be a multiple of 8");
  std::vector<SElement> out;
  for (std::size_t i = 0; i < bits.size(); i += 8) {
    SElement s;
    for (std::size_t k = 0; k < 4; ++k) s.c[k] = psi_inverse(bits[i + 2 * k], bits[i + 2 * k + 1]);
    out.push_back(s);
  }
  return out;
}

int lee_weight(Z4 x) { return x.lee_weight(); }
int lee_weight(RElement x) { return x.a.lee_weight() + x.b.lee_weight(); }
int lee_weight(SElement x) {
  int w = 0;
  for (Z4 d : x.c) w += d.lee_weight();
  return w;
}

template <class T>
int lee_distance(std::span<const T> x, std::span<const T> y) {
  if (x.size() != y.size()) throw std::invalid_argument("lee_distance: length mismatch");
  int d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += lee_weight(x[i] - y[i]);
  return d;
}

template <class T>
int hamming_distance(std::span<const T> x, std::span<const T> y) {
  if (x.size() != y.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  int d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i] ? 1 : 0;
  return d;
}

template int lee_distance<Z4>(std::span<const Z4>, std::span<const Z4>);
template int lee_distance<RElement>(std::span<const RElement>, std::span<const RElement>);
template int lee_distance<SElement>(std::span<const SElement>, std::span<const SElement>);
template int hamming_distance<Z4>(std::span<const Z4>, std::span<const Z4>);
template int hamming_distance<RElement>(std::span<const RElement>, std::span<const RElement>);
template int hamming_distance<SElement>(std::span<const SElement>, std::span<const SElement>);

BitVector quasi_shift(const BitVector& b, std::size_t block) {
  if (block == 0 || b.size() % block != 0)
    throw std::invalid_argument("quasi_shift: block must divide the length");
  const std::size_t len = b.size();
  std::vector<std::uint8_t> out(len);
  for (std::size_t i = 0; i < len; ++i) out[(i + block) % len] = b[i];
  return BitVector(std::move(out));
}

bool is_quasi_cyclic(std::span<const BitVector> words, std::size_t block) {
  const std::set<BitVector> members(words.begin(), words.end());
  return std::all_of(words.begin(), words.end(),
                     [&](const BitVector& b) { return members.contains(quasi_shift(b, block)); });
}

} // namespace z4dna
