#pragma once

#include "z4dna/error.hpp"
#include "z4dna/z4.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace z4dna {

using Z4Vector = std::vector<Z4>;

/// Rectangular matrix over Z4, stored by rows.
struct Z4Matrix {
  std::size_t width = 0;
  std::vector<Z4Vector> rows;

  Z4Matrix() = default;
  explicit Z4Matrix(std::size_t w) : width(w) {}
  Z4Matrix(std::size_t w, std::vector<Z4Vector> r);

  void push_row(Z4Vector row);
  /// Row-major integer text: one row per line, entries separated by spaces.
  std::string str() const;
  static Z4Matrix parse(std::size_t width, const std::string& text);
};

/// Howell normal form of a Z4-submodule of Z4^width: echelon rows with
/// strictly increasing pivot columns, pivots in {1, 2}, entries above a
/// pivot reduced (to 0 over a 1, to {0, 1} over a 2), and 2·row in the span
/// of the later rows whenever the pivot is 2. Two generating sets of the same
/// module yield identical bases.
class HowellBasis {
public:
  HowellBasis() = default;
  explicit HowellBasis(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  const std::vector<Z4Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivot_cols_; }
  std::vector<int> pivot_values() const;
  std::size_t rank() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }

  /// log2 of the module size: 2 per unit pivot, 1 per pivot 2.
  std::size_t log2_cardinality() const;
  /// Throws TooLarge when the size does not fit in 64 bits.
  std::uint64_t cardinality() const;

  /// Throws std::invalid_argument on width mismatch.
  bool contains(std::span<const Z4> v) const;

  /// All codewords in coefficient order. Throws TooLarge above cap.
  std::vector<Z4Vector> enumerate(std::uint64_t cap) const;
  /// Uniform samples, deterministic for a given seed.
  std::vector<Z4Vector> sample(std::uint64_t seed, std::size_t count) const;
  /// The codeword with the given per-row coefficients (row i takes coeffs[i] < 4 / pivot_i).
  Z4Vector combine(std::span<const Z4> coeffs) const;

  std::string str() const;

  friend bool operator==(const HowellBasis&, const HowellBasis&) = default;

private:
  friend HowellBasis howell(const Z4Matrix& m);
  std::size_t width_ = 0;
  std::vector<Z4Vector> rows_;
  std::vector<std::size_t> pivot_cols_;
};

HowellBasis howell(const Z4Matrix& m);

inline bool equal(const HowellBasis& a, const HowellBasis& b) { return a == b; }
/// Throws std::invalid_argument on width mismatch.
HowellBasis sum(const HowellBasis& a, const HowellBasis& b);
/// Kernel construction: Howell form of [A A; B 0], rows vanishing on the left half.
HowellBasis intersect(const HowellBasis& a, const HowellBasis& b);

} // namespace z4dna
