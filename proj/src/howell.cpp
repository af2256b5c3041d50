#include "z4dna/howell.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace z4dna {

namespace {

bool is_zero_row(const Z4Vector& r) {
  return std::all_of(r.begin(), r.end(), [](Z4 x) { return x.is_zero(); });
}

// r -= k·p
void axpy(Z4Vector& r, Z4 k, const Z4Vector& p) {
  if (k.is_zero()) return;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= k * p[i];
}

void check_width(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) throw std::invalid_argument(std::string(what) + ": width mismatch");
}

} // namespace

Z4Matrix::Z4Matrix(std::size_t w, std::vector<Z4Vector> r) : width(w) {
  for (auto& row : r) push_row(std::move(row));
}

void Z4Matrix::push_row(Z4Vector row) {
  check_width(width, row.size(), "Z4Matrix::push_row");
  rows.push_back(std::move(row));
}

std::string Z4Matrix::str() const {
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << int(r[i].value());
    os << '\n';
  }
  return os.str();
}

Z4Matrix Z4Matrix::parse(std::size_t width, const std::string& text) {
  Z4Matrix m(width);
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    Z4Vector row;
    int v = 0;
    while (ls >> v) row.push_back(Z4{v});
    if (!row.empty()) m.push_row(std::move(row));
  }
  return m;
}

HowellBasis howell(const Z4Matrix& m) {
  HowellBasis h(m.width);
  std::vector<Z4Vector> pool;
  for (const auto& r : m.rows) {
    check_width(m.width, r.size(), "howell");
    if (!is_zero_row(r)) pool.push_back(r);
  }

  for (std::size_t col = 0; col < m.width && !pool.empty(); ++col) {
    auto unit = std::find_if(pool.begin(), pool.end(), [col](const Z4Vector& r) { return r[col].is_unit(); });
    if (unit != pool.end()) {
      Z4Vector p = std::move(*unit);
      pool.erase(unit);
      if (p[col] == Z4{3})
        for (Z4& x : p) x = -x;
      for (auto& r : pool) axpy(r, r[col], p);
      h.rows_.push_back(std::move(p));
      h.pivot_cols_.push_back(col);
    } else {
      auto two = std::find_if(pool.begin(), pool.end(), [col](const Z4Vector& r) { return !r[col].is_zero(); });
      if (two == pool.end()) continue;
      Z4Vector p = std::move(*two);
      pool.erase(two);
      for (auto& r : pool)
        if (!r[col].is_zero()) axpy(r, Z4{1}, p);
      // 2·p vanishes at col; keep it so the later rows span it.
      Z4Vector doubled = p;
      for (Z4& x : doubled) x = Z4{2} * x;
      if (!is_zero_row(doubled)) pool.push_back(std::move(doubled));
      h.rows_.push_back(std::move(p));
      h.pivot_cols_.push_back(col);
    }
    std::erase_if(pool, is_zero_row);
  }

  // Reduce entries above each pivot.
  for (std::size_t k = 0; k < h.rows_.size(); ++k) {
    const std::size_t col = h.pivot_cols_[k];
    const bool unit_pivot = h.rows_[k][col] == Z4{1};
    for (std::size_t j = 0; j < k; ++j) {
      const Z4 e = h.rows_[j][col];
      if (unit_pivot) {
        axpy(h.rows_[j], e, h.rows_[k]);
      } else if (e.value() >= 2) {
        axpy(h.rows_[j], Z4{1}, h.rows_[k]);
      }
    }
  }
  return h;
}

std::vector<int> HowellBasis::pivot_values() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < rows_.size(); ++k) out.push_back(rows_[k][pivot_cols_[k]].value());
  return out;
}

std::size_t HowellBasis::log2_cardinality() const {
  std::size_t bits = 0;
  for (std::size_t k = 0; k < rows_.size(); ++k) bits += rows_[k][pivot_cols_[k]] == Z4{1} ? 2 : 1;
  return bits;
}

std::uint64_t HowellBasis::cardinality() const {
  const std::size_t bits = log2_cardinality();
  if (bits >= 64) throw TooLarge("module has 2^" + std::to_string(bits) + " elements");
  return std::uint64_t{1} << bits;
}

bool HowellBasis::contains(std::span<const Z4> v) const {
  check_width(width_, v.size(), "HowellBasis::contains");
  Z4Vector r(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t col = pivot_cols_[k];
    for (std::size_t c = (k == 0 ? 0 : pivot_cols_[k - 1] + 1); c < col; ++c)
      if (!r[c].is_zero()) return false;
    const Z4 e = r[col];
    if (rows_[k][col] == Z4{1}) {
      axpy(r, e, rows_[k]);
    } else {
      if (e.is_unit()) return false;
      axpy(r, Z4{e.value() / 2}, rows_[k]);
    }
  }
  return is_zero_row(r);
}

Z4Vector HowellBasis::combine(std::span<const Z4> coeffs) const {
  Z4Vector out(width_);
  for (std::size_t k = 0; k < rows_.size(); ++k)
    for (std::size_t i = 0; i < width_; ++i) out[i] += coeffs[k] * rows_[k][i];
  return out;
}

std::vector<Z4Vector> HowellBasis::enumerate(std::uint64_t cap) const {
  if (log2_cardinality() >= 63 || cardinality() > cap)
    throw TooLarge("enumeration of 2^" + std::to_string(log2_cardinality()) + " codewords exceeds cap " +
                   std::to_string(cap));
  const auto pivots = pivot_values();
  std::vector<Z4Vector> out;
  out.reserve(cardinality());
  Z4Vector coeffs(rows_.size());
  // Odometer over coefficient ranges [0, 4 / pivot).
  for (;;) {
    out.push_back(combine(coeffs));
    std::size_t k = 0;
    for (; k < coeffs.size(); ++k) {
      const int limit = 4 / pivots[k];
      if (coeffs[k].value() + 1 < limit) {
        coeffs[k] += Z4{1};
        break;
      }
      coeffs[k] = Z4{0};
    }
    if (k == coeffs.size()) break;
  }
  return out;
}

std::vector<Z4Vector> HowellBasis::sample(std::uint64_t seed, std::size_t count) const {
  std::mt19937_64 rng(seed);
  const auto pivots = pivot_values();
  std::vector<Z4Vector> out;
  out.reserve(count);
  Z4Vector coeffs(rows_.size());
  for (std::size_t s = 0; s < count; ++s) {
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      // Unique representation with coefficient < 4 / pivot makes this uniform.
      const std::uint64_t limit = pivots[k] == 1 ? 4 : 2;
      coeffs[k] = Z4{static_cast<int>(rng() % limit)};
    }
    out.push_back(combine(coeffs));
  }
  return out;
}

std::string HowellBasis::str() const {
  Z4Matrix m(width_, rows_);
  return m.str();
}

HowellBasis sum(const HowellBasis& a, const HowellBasis& b) {
  check_width(a.width(), b.width(), "sum");
  Z4Matrix m(a.width());
  for (const auto& r : a.rows()) m.push_row(r);
  for (const auto& r : b.rows()) m.push_row(r);
  return howell(m);
}

HowellBasis intersect(const HowellBasis& a, const HowellBasis& b) {
  check_width(a.width(), b.width(), "intersect");
  const std::size_t w = a.width();
  Z4Matrix m(2 * w);
  for (const auto& r : a.rows()) {
    Z4Vector row(r);
    row.insert(row.end(), r.begin(), r.end());
    m.push_row(std::move(row));
  }
  for (const auto& r : b.rows()) {
    Z4Vector row(r);
    row.resize(2 * w);
    m.push_row(std::move(row));
  }
  const HowellBasis joint = howell(m);
  Z4Matrix kernel(w);
  for (std::size_t k = 0; k < joint.rank(); ++k) {
    if (joint.pivot_columns()[k] < w) continue;
    const auto& r = joint.rows()[k];
    kernel.push_row(Z4Vector(r.begin() + static_cast<std::ptrdiff_t>(w), r.end()));
  }
  return howell(kernel);
}

} // namespace z4dna
