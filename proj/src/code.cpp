#include "z4dna/code.hpp"

#include <algorithm>
#include <sstream>

namespace z4dna {

Z4Vector flatten(std::span<const RElement> xs) {
  Z4Vector out;
  out.reserve(2 * xs.size());
  for (const RElement& x : xs) {
    out.push_back(x.a);
    out.push_back(x.b);
  }
  return out;
}

Z4Vector flatten(std::span<const SElement> xs) {
  Z4Vector out;
  out.reserve(4 * xs.size());
  for (const SElement& x : xs) out.insert(out.end(), x.c.begin(), x.c.end());
  return out;
}

std::vector<RElement> r_vector(std::span<const Z4> flat) {
  std::vector<RElement> out;
  for (std::size_t i = 0; i + 1 < flat.size(); i += 2) out.emplace_back(flat[i], flat[i + 1]);
  return out;
}

std::vector<SElement> s_vector(std::span<const Z4> flat) {
  std::vector<SElement> out;
  for (std::size_t i = 0; i + 3 < flat.size(); i += 4) {
    SElement s;
    std::copy(flat.begin() + static_cast<std::ptrdiff_t>(i), flat.begin() + static_cast<std::ptrdiff_t>(i + 4),
              s.c.begin());
    out.push_back(s);
  }
  return out;
}

Z4Vector shift_blocks(std::span<const Z4> flat, std::size_t block) {
  Z4Vector out(flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) out[(i + block) % flat.size()] = flat[i];
  return out;
}

Z4Vector reverse_blocks(std::span<const Z4> flat, std::size_t block) {
  const std::size_t n = flat.size() / block;
  Z4Vector out(flat.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < block; ++k) out[(n - 1 - i) * block + k] = flat[i * block + k];
  return out;
}

Z4Vector reverse_complement_blocks(std::span<const Z4> flat, std::size_t block) {
  Z4Vector out = reverse_blocks(flat, block);
  for (Z4& d : out) d = Z4{3} - d;
  return out;
}

Z4Vector complement_of_zero(RingTag ring, std::size_t n) { return Z4Vector(n * block_size(ring), Z4{3}); }

std::string describe(std::span<const Z4> flat, RingTag ring) {
  std::string out = "[";
  if (ring == RingTag::R) {
    const auto v = r_vector(flat);
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  } else {
    const auto v = s_vector(flat);
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  }
  return out + "]";
}

bool CodeHandle::contains(std::span<const RElement> xs) const {
  if (ring != RingTag::R) return contains(std::span<const Z4>(flatten(std::vector<SElement>(xs.begin(), xs.end()))));
  return basis.contains(flatten(xs));
}

bool CodeHandle::contains(std::span<const SElement> xs) const {
  if (ring != RingTag::S) throw std::invalid_argument("S vector tested against a code over R");
  return basis.contains(flatten(xs));
}

std::string CodeHandle::summary() const {
  std::ostringstream os;
  os << (ring == RingTag::R ? "R" : "S") << "-code n=" << n << " |C|=2^" << log2_cardinality() << " ("
     << provenance << ")";
  return os.str();
}

namespace {

template <class T>
CodeHandle code_from_rows(RingTag ring, std::size_t n, const std::vector<std::vector<T>>& rows,
                          const std::vector<T>& multipliers, std::string provenance) {
  Z4Matrix m(n * block_size(ring));
  for (const auto& row : rows) {
    if (row.size() != n) throw BuildError("generator row has length " + std::to_string(row.size()) + ", expected " + std::to_string(n));
    for (const T& u : multipliers) {
      std::vector<T> scaled(row);
      for (T& x : scaled) x = u * x;
      m.push_row(flatten(scaled));
    }
  }
  CodeHandle c;
  c.ring = ring;
  c.n = n;
  c.provenance = std::move(provenance);
  c.basis = howell(m);
  return c;
}

std::vector<std::vector<RElement>> shifts_of(std::size_t n, const RPoly& f) {
  std::vector<std::vector<RElement>> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(f.shifted(i).to_vector(n));
  return rows;
}

} // namespace

CodeHandle code_from_r_rows(std::size_t n, const std::vector<std::vector<RElement>>& rows, std::string provenance) {
  return code_from_rows<RElement>(RingTag::R, n, rows, {RElement::one(), RElement::w()}, std::move(provenance));
}

CodeHandle code_from_s_rows(std::size_t n, const std::vector<std::vector<SElement>>& rows, std::string provenance) {
  return code_from_rows<SElement>(RingTag::S, n, rows, {SElement::one(), SElement::w(), SElement::v(), SElement::wv()},
                                  std::move(provenance));
}

CodeHandle zero_code(RingTag ring, std::size_t n) {
  CodeHandle c;
  c.ring = ring;
  c.n = n;
  c.provenance = "zero code";
  c.basis = HowellBasis(n * block_size(ring));
  return c;
}

CodeHandle full_code(RingTag ring, std::size_t n) {
  Z4Matrix m(n * block_size(ring));
  for (std::size_t i = 0; i < m.width; ++i) {
    Z4Vector e(m.width);
    e[i] = Z4{1};
    m.push_row(std::move(e));
  }
  CodeHandle c;
  c.ring = ring;
  c.n = n;
  c.provenance = "full code";
  c.basis = howell(m);
  return c;
}

bool is_ring_submodule(const CodeHandle& c) {
  for (const auto& row : c.basis.rows()) {
    if (c.ring == RingTag::R) {
      auto v = r_vector(row);
      for (auto& x : v) x = RElement::w() * x;
      if (!c.basis.contains(flatten(v))) return false;
    } else {
      for (SElement u : {SElement::w(), SElement::v(), SElement::wv()}) {
        auto v = s_vector(row);
        for (auto& x : v) x = u * x;
        if (!c.basis.contains(flatten(v))) return false;
      }
    }
  }
  return true;
}

CodeHandle build_cyclic_r(std::size_t n, const Z4Poly& g, const Z4Poly& a) {
  if (n == 0 || n % 2 == 0) throw BuildError("cyclic codes over R are built for odd n only (n=" + std::to_string(n) + ")");
  if (!g.is_monic() || !a.is_monic()) throw BuildError("generators g and a must be monic");
  const auto xn1 = Z4Poly::xn_minus_1(n);
  if (!divides_monic(g, xn1)) throw BuildError("g = " + to_string(g) + " does not divide x^" + std::to_string(n) + "-1");
  if (!divides_monic(a, g)) throw BuildError("a = " + to_string(a) + " does not divide g = " + to_string(g));

  const RPoly gr = g.embed<RElement>();
  const RPoly wa = RElement::w() * a.embed<RElement>();
  auto rows = shifts_of(n, gr);
  for (auto& r : shifts_of(n, wa)) rows.push_back(std::move(r));
  CodeHandle c = code_from_r_rows(n, rows, "<g, wa> g=" + to_string(g) + " a=" + to_string(a));
  c.cyclic_generators = std::make_pair(g, a);
  return c;
}

CodeHandle principal_code(std::size_t n, const RPoly& s) {
  return code_from_r_rows(n, shifts_of(n, s), "<" + to_string(s) + ">");
}

PrincipalizeResult principalize(const CodeHandle& c) {
  if (c.ring != RingTag::R) throw std::invalid_argument("principalize: code must be over R");
  PrincipalizeResult result;
  auto try_candidate = [&](const RPoly& s) {
    ++result.candidates_tried;
    if (principal_code(c.n, s).basis == c.basis) {
      result.generator = s;
      return true;
    }
    return false;
  };

  if (c.cyclic_generators) {
    const auto& [g, a] = *c.cyclic_generators;
    if (try_candidate(g.embed<RElement>() + RElement::w() * a.embed<RElement>())) return result;
  }
  std::vector<Z4Poly> pool{Z4Poly{}, Z4Poly{Z4{1}}};
  if (c.n % 2 == 1)
    for (auto& d : divisor_search(c.n, c.n)) pool.push_back(std::move(d));
  result.bound = "s = d1 + w*d2 over " + std::to_string(pool.size()) + " divisor candidates each";
  for (const auto& d1 : pool)
    for (const auto& d2 : pool)
      if (try_candidate(d1.embed<RElement>() + RElement::w() * d2.embed<RElement>())) return result;
  return result;
}

std::pair<CodeHandle, CodeHandle> split_s_code(const CodeHandle& c) {
  if (c.ring != RingTag::S) throw std::invalid_argument("split_s_code: code must be over S");
  std::vector<std::vector<RElement>> first, second;
  for (const auto& row : c.basis.rows()) {
    std::vector<RElement> p, q;
    for (const SElement& x : s_vector(row)) {
      const auto [on_v, on_rest] = idempotent_split(x);
      p.push_back(on_v);
      q.push_back(on_rest);
    }
    first.push_back(std::move(p));
    second.push_back(std::move(q));
  }
  return {code_from_r_rows(c.n, first, "v-component of " + c.provenance),
          code_from_r_rows(c.n, second, "(1-v)-component of " + c.provenance)};
}

CodeHandle join_r_codes(const CodeHandle& c1, const CodeHandle& c2) {
  if (c1.ring != RingTag::R || c2.ring != RingTag::R) throw BuildError("join_r_codes: both components must be over R");
  if (c1.n != c2.n) throw BuildError("join_r_codes: length mismatch");
  std::vector<std::vector<SElement>> rows;
  for (const auto& row : c1.basis.rows()) {
    std::vector<SElement> s;
    for (const RElement& x : r_vector(row)) s.push_back(idempotent_join(x, RElement::zero()));
    rows.push_back(std::move(s));
  }
  for (const auto& row : c2.basis.rows()) {
    std::vector<SElement> s;
    for (const RElement& x : r_vector(row)) s.push_back(idempotent_join(RElement::zero(), x));
    rows.push_back(std::move(s));
  }
  return code_from_s_rows(c1.n, rows, "v(" + c1.provenance + ") + (1-v)(" + c2.provenance + ")");
}

std::optional<Z4Vector> find_non_cyclic(const CodeHandle& c) {
  for (const auto& row : c.basis.rows())
    if (!c.basis.contains(shift_blocks(row, c.block()))) return row;
  return std::nullopt;
}

std::optional<Z4Vector> find_non_reversible(const CodeHandle& c) {
  for (const auto& row : c.basis.rows())
    if (!c.basis.contains(reverse_blocks(row, c.block()))) return row;
  return std::nullopt;
}

bool is_cyclic(const CodeHandle& c) { return !find_non_cyclic(c); }
bool is_reversible(const CodeHandle& c) { return !find_non_reversible(c); }

bool is_rc_closed(const CodeHandle& c) {
  return is_reversible(c) && c.basis.contains(complement_of_zero(c.ring, c.n));
}

std::optional<Z4Vector> find_rc_violation(const CodeHandle& c) {
  const Z4Vector zero(c.width());
  if (!c.basis.contains(reverse_complement_blocks(zero, c.block()))) return zero;
  for (const auto& row : c.basis.rows())
    if (!c.basis.contains(reverse_complement_blocks(row, c.block()))) return row;
  return std::nullopt;
}

std::optional<bool> rc_closed_by_enumeration(const CodeHandle& c, std::uint64_t cap) {
  if (c.log2_cardinality() >= 63 || c.basis.cardinality() > cap) return std::nullopt;
  for (const auto& x : c.basis.enumerate(cap))
    if (!c.basis.contains(reverse_complement_blocks(x, c.block()))) return false;
  return true;
}

PropertyReport verify_theorem_7_8(std::size_t n, const Z4Poly& g, const Z4Poly& a) {
  const CodeHandle c = build_cyclic_r(n, g, a);
  PropertyReport r;
  r.descriptor = c.summary();
  r.add("cyclic", is_cyclic(c), true);

  const auto violation = find_rc_violation(c);
  const bool lhs = !violation;
  r.add("rc_closed", lhs, false,
        violation ? std::optional<std::string>(describe(*violation, RingTag::R) + " has rc outside C") : std::nullopt);
  if (const auto by_enum = rc_closed_by_enumeration(c, kDefinitionalCap)) {
    r.add("rc_closed_definitional", *by_enum);
    r.add("rc_methods_agree", *by_enum == lhs, true);
  }

  const RPoly ones = RElement{1, 1} * RPoly::all_ones(n);
  const bool ones_member = c.contains(ones.to_vector(n));
  r.add("(1+w)(1+x+...+x^(n-1)) in C", ones_member);
  const auto e = is_self_reciprocal(g);
  const auto d = is_self_reciprocal(a);
  r.add("g self-reciprocal", e.has_value(), false, std::nullopt, e ? "e=" + to_string(*e) : "");
  r.add("a self-reciprocal", d.has_value(), false, std::nullopt, d ? "d=" + to_string(*d) : "");
  const bool rhs = ones_member && e && d;
  r.add("criterion", rhs);
  r.add("rc_closed implies criterion", !lhs || rhs, true);
  r.add("criterion implies rc_closed", !rhs || lhs, true);
  return r;
}

PropertyReport verify_theorem_16(const CodeHandle& c) {
  if (c.ring != RingTag::S) throw std::invalid_argument("verify_theorem_16: code must be over S");
  PropertyReport r;
  r.descriptor = c.summary();
  const auto not_cyclic = find_non_cyclic(c);
  r.add("cyclic", !not_cyclic, false,
        not_cyclic ? std::optional<std::string>(describe(*not_cyclic, RingTag::S)) : std::nullopt,
        not_cyclic ? "outside the theorem's hypothesis" : "");

  const auto not_rev = find_non_reversible(c);
  r.add("reversible", !not_rev, false,
        not_rev ? std::optional<std::string>(describe(*not_rev, RingTag::S) + " has reverse outside C") : std::nullopt);
  const Z4Vector zbar = complement_of_zero(RingTag::S, c.n);
  const bool zbar_member = c.contains(zbar);
  r.add("(0bar,...,0bar) in C", zbar_member, false,
        zbar_member ? std::nullopt : std::optional<std::string>(describe(zbar, RingTag::S)));

  const auto violation = find_rc_violation(c);
  const bool rc = !violation;
  r.add("rc_closed", rc, false,
        violation ? std::optional<std::string>(describe(*violation, RingTag::S) + " has rc outside C") : std::nullopt);
  if (const auto by_enum = rc_closed_by_enumeration(c, kDefinitionalCap)) r.add("rc_methods_agree", *by_enum == rc, true);
  r.add("rc_closed iff (reversible and 0bar in C)", rc == (!not_rev && zbar_member), !not_cyclic.has_value());
  return r;
}

PropertyReport verify_split_join(const CodeHandle& c1, const CodeHandle& c2) {
  const CodeHandle joined = join_r_codes(c1, c2);
  PropertyReport r;
  r.descriptor = joined.summary();
  r.add("|C| = |C1||C2|", joined.log2_cardinality() == c1.log2_cardinality() + c2.log2_cardinality(), true, std::nullopt,
        "2^" + std::to_string(joined.log2_cardinality()));
  const auto [s1, s2] = split_s_code(joined);
  r.add("split(join(C1,C2)) = (C1,C2)", s1.basis == c1.basis && s2.basis == c2.basis, true);
  r.add("S-submodule", is_ring_submodule(joined), true);
  const bool cyc = is_cyclic(joined), cyc1 = is_cyclic(c1), cyc2 = is_cyclic(c2);
  r.add("C cyclic iff C1, C2 cyclic", cyc == (cyc1 && cyc2), true, std::nullopt,
        std::string("C:") + (cyc ? "yes" : "no") + " C1:" + (cyc1 ? "yes" : "no") + " C2:" + (cyc2 ? "yes" : "no"));
  const bool rev = is_reversible(joined), rev1 = is_reversible(c1), rev2 = is_reversible(c2);
  r.add("C reversible iff C1, C2 reversible", rev == (rev1 && rev2), true, std::nullopt,
        std::string("C:") + (rev ? "yes" : "no") + " C1:" + (rev1 ? "yes" : "no") + " C2:" + (rev2 ? "yes" : "no"));
  return r;
}

CodeHandle code_sum(const CodeHandle& c1, const CodeHandle& c2) {
  if (c1.ring != c2.ring || c1.n != c2.n) throw BuildError("code_sum: ring or length mismatch");
  CodeHandle c{c1.ring, c1.n, "(" + c1.provenance + ") + (" + c2.provenance + ")", sum(c1.basis, c2.basis), std::nullopt};
  return c;
}

CodeHandle code_intersect(const CodeHandle& c1, const CodeHandle& c2) {
  if (c1.ring != c2.ring || c1.n != c2.n) throw BuildError("code_intersect: ring or length mismatch");
  CodeHandle c{c1.ring, c1.n, "(" + c1.provenance + ") & (" + c2.provenance + ")", intersect(c1.basis, c2.basis),
               std::nullopt};
  return c;
}

PropertyReport audit_sum_intersection(const CodeHandle& d1, const CodeHandle& d2) {
  const CodeHandle s = code_sum(d1, d2);
  const CodeHandle i = code_intersect(d1, d2);
  PropertyReport r;
  r.descriptor = "D1 = " + d1.summary() + "; D2 = " + d2.summary();
  auto good = [](const CodeHandle& c) { return is_cyclic(c) && !find_rc_violation(c); };
  const bool inputs = good(d1) && good(d2);
  r.add("inputs rc-closed cyclic", inputs);
  r.add("D1+D2 rc-closed cyclic", good(s), inputs);
  r.add("D1&D2 rc-closed cyclic", good(i), inputs);
  r.add("|D1+D2||D1&D2| = |D1||D2|",
        s.log2_cardinality() + i.log2_cardinality() == d1.log2_cardinality() + d2.log2_cardinality(), true);
  return r;
}

PropertyReport verify_gray_quasi_cyclic(const CodeHandle& c) {
  PropertyReport r;
  r.descriptor = c.summary();
  const std::size_t index = c.ring == RingTag::R ? 4 : 8;
  std::optional<std::string> witness;
  for (const auto& row : c.basis.rows()) {
    Z4Vector preimage;
    if (c.ring == RingTag::R) {
      const auto v = r_vector(row);
      preimage = flatten(breve_o_inverse(quasi_shift(breve_o(v), index)));
    } else {
      const auto v = s_vector(row);
      preimage = flatten(theta_big_inverse(quasi_shift(theta_big(v), index)));
    }
    if (!c.contains(preimage)) {
      witness = describe(row, c.ring);
      break;
    }
  }
  r.add("cyclic", is_cyclic(c));
  r.add("Gray image closed under " + std::to_string(index) + "-quasi-shift", !witness, is_cyclic(c), witness);
  return r;
}

std::size_t min_distance(const CodeHandle& c, Metric metric, std::uint64_t cap) {
  std::size_t best = 0;
  for (const auto& x : c.basis.enumerate(cap)) {
    std::size_t w = 0;
    if (metric == Metric::Lee) {
      for (Z4 d : x) w += static_cast<std::size_t>(d.lee_weight());
    } else {
      for (std::size_t i = 0; i < c.n; ++i) {
        bool nonzero = false;
        for (std::size_t k = 0; k < c.block(); ++k) nonzero = nonzero || !x[i * c.block() + k].is_zero();
        w += nonzero ? 1 : 0;
      }
    }
    if (w != 0 && (best == 0 || w < best)) best = w;
  }
  return best;
}

std::vector<CodonString> export_dna_book(const CodeHandle& c, std::uint64_t cap) {
  std::vector<CodonString> book;
  for (const auto& x : c.basis.enumerate(cap)) {
    std::string word;
    word.reserve(x.size());
    for (Z4 d : x) word.push_back(letter_of(d));
    book.emplace_back(std::move(word));
  }
  std::sort(book.begin(), book.end());
  return book;
}

std::vector<std::pair<Z4Poly, Z4Poly>> cyclic_generator_pairs(std::size_t n) {
  std::vector<Z4Poly> divisors{Z4Poly{Z4{1}}};
  for (auto& d : divisor_search(n, n)) divisors.push_back(std::move(d));
  std::vector<std::pair<Z4Poly, Z4Poly>> out;
  for (const auto& g : divisors)
    for (const auto& a : divisors)
      if (divides_monic(a, g)) out.emplace_back(g, a);
  return out;
}

} // namespace z4dna
