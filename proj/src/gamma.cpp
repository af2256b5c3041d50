#include "z4dna/gamma.hpp"

#include <algorithm>
#include <sstream>

namespace z4dna {

SPoly gamma_poly(const SPoly& f) {
  std::vector<SElement> c = f.coeffs();
  for (SElement& x : c) x = gamma(x);
  return SPoly(std::move(c));
}

GammaSet build_gamma_set(std::size_t n, const RPoly& f1, const RPoly& f2) {
  if (n == 0 || n % 2 == 0) throw BuildError("Gamma sets are built for odd n only (n=" + std::to_string(n) + ")");
  if (!f1.is_monic() || !f2.is_monic()) throw BuildError("f1 and f2 must be monic");
  const RPoly xn1 = RPoly::xn_minus_1(n);
  if (!divides_monic(f1, xn1)) throw BuildError("f1 = " + to_string(f1) + " does not divide x^" + std::to_string(n) + "-1");
  if (!divides_monic(f2, xn1)) throw BuildError("f2 = " + to_string(f2) + " does not divide x^" + std::to_string(n) + "-1");

  GammaSet l;
  l.n = n;
  l.f1 = f1;
  l.f2 = f2;
  const std::size_t len = static_cast<std::size_t>(std::max(f1.degree(), f2.degree())) + 1;
  std::vector<SElement> c(len);
  for (std::size_t k = 0; k < len; ++k) c[k] = SElement::from_parts(f2[k], f1[k] - f2[k]);
  l.f = SPoly(std::move(c));
  l.m = std::min(n - static_cast<std::size_t>(f1.degree()), n - static_cast<std::size_t>(f2.degree()));
  const SPoly gf = gamma_poly(l.f);
  for (std::size_t i = 0; i < l.m; ++i) l.rows.push_back((i % 2 == 0 ? l.f : gf).shifted(i).to_vector(n));
  return l;
}

CodeHandle gamma_code(const GammaSet& l) {
  CodeHandle c = code_from_s_rows(l.n, l.rows, "<" + to_string(l.f) + ">_Gamma");
  return c;
}

std::string render_gamma_matrix(const GammaSet& l) {
  std::vector<std::vector<std::string>> cells;
  std::size_t w = 1;
  for (const auto& row : l.rows) {
    auto& out = cells.emplace_back();
    for (const SElement& x : row) {
      out.push_back(x.is_zero() ? "0" : to_string(x));
      w = std::max(w, out.back().size());
    }
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j)
      os << (j ? " " : "") << std::string(w - row[j].size(), ' ') << row[j];
    os << '\n';
  }
  return os.str();
}

Z4Vector letter_reverse(std::span<const Z4> flat) { return Z4Vector(flat.rbegin(), flat.rend()); }

Z4Vector letter_reverse_complement(std::span<const Z4> flat) {
  Z4Vector out = letter_reverse(flat);
  for (Z4& d : out) d = Z4{3} - d;
  return out;
}

namespace {

struct Prepared {
  PropertyReport report;
  CodeHandle code;
  std::size_t m = 0;
  bool hypotheses = true;
  std::vector<Z4Vector> words; // samples followed by basis rows
};

Prepared prepare(std::size_t n, const RPoly& f1, const RPoly& f2, std::uint64_t seed, std::size_t samples) {
  Prepared p;
  const GammaSet l = build_gamma_set(n, f1, f2);
  p.code = gamma_code(l);
  p.m = l.m;
  p.report.descriptor = p.code.summary() + " seed=" + std::to_string(seed) + " samples=" + std::to_string(samples);

  const auto m1 = is_self_reciprocal(f1);
  const auto m2 = is_self_reciprocal(f2);
  p.report.add("hypothesis: f1 = f2", f1 == f2);
  p.report.add("hypothesis: f1 self-reciprocal", m1.has_value(), false, std::nullopt, m1 ? "m=" + to_string(*m1) : "");
  p.report.add("hypothesis: f2 self-reciprocal", m2.has_value(), false, std::nullopt, m2 ? "m=" + to_string(*m2) : "");
  p.hypotheses = f1 == f2 && m1 && m2;

  p.words = p.code.basis.sample(seed, samples);
  for (const auto& row : p.code.basis.rows()) p.words.push_back(row);
  return p;
}

std::optional<std::string> first_escape(const CodeHandle& c, const std::vector<Z4Vector>& words,
                                        Z4Vector (*op)(std::span<const Z4>)) {
  for (const auto& x : words)
    if (!c.contains(op(x))) { const auto v = s_vector(x); return to_codons(std::span<const SElement>(v)).str(); }
  return std::nullopt;
}

void add_theorem_32(Prepared& p) {
  const std::size_t log2 = p.code.log2_cardinality();
  p.report.add("|C| = 256^m", log2 == 8 * p.m, p.hypotheses, std::nullopt,
               "|C|=2^" + std::to_string(log2) + ", m=" + std::to_string(p.m));
  const auto escape = first_escape(p.code, p.words, &letter_reverse);
  p.report.add("letter-level reversible", !escape, p.hypotheses, escape ? std::optional<std::string>(*escape + " reversed leaves C") : std::nullopt,
               std::to_string(p.words.size()) + " words checked");
}

} // namespace

PropertyReport verify_theorem_32(std::size_t n, const RPoly& f1, const RPoly& f2, std::uint64_t seed,
                                 std::size_t samples) {
  Prepared p = prepare(n, f1, f2, seed, samples);
  add_theorem_32(p);
  return p.report;
}

PropertyReport verify_corollary_33(std::size_t n, const RPoly& f1, const RPoly& f2, std::uint64_t seed,
                                   std::size_t samples) {
  Prepared p = prepare(n, f1, f2, seed, samples);
  p.report.add("cyclic", is_cyclic(p.code));
  add_theorem_32(p);
  const auto ones = SPoly::all_ones(n).to_vector(n);
  const bool premise = p.code.contains(std::span<const SElement>(ones));
  p.report.add("(x^n-1)/(x-1) in C", premise, false, premise ? std::nullopt : std::optional<std::string>(describe(flatten(ones), RingTag::S)));
  const auto escape = first_escape(p.code, p.words, &letter_reverse_complement);
  p.report.add("letter-level reverse-complement closed", !escape, p.hypotheses && premise,
               escape ? std::optional<std::string>(*escape + " reverse-complemented leaves C") : std::nullopt,
               std::to_string(p.words.size()) + " words checked");
  return p.report;
}

} // namespace z4dna
