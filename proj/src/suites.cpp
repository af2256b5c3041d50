#include "z4dna/suites.hpp"

#include <random>

namespace z4dna {

std::vector<PropertyReport> suite_theorem_7_8(std::size_t n) {
  std::vector<PropertyReport> out;
  for (const auto& [g, a] : cyclic_generator_pairs(n)) out.push_back(verify_theorem_7_8(n, g, a));
  return out;
}

std::vector<std::pair<CodeHandle, CodeHandle>> random_cyclic_pairs(std::size_t n, std::size_t count, std::uint64_t seed) {
  // Odd draws come from the rc-closed codes only; uniform draws almost never
  // produce an rc-closed S-code, which would leave half of each biconditional idle.
  std::vector<CodeHandle> pool, rc_pool;
  for (const auto& [g, a] : cyclic_generator_pairs(n)) {
    pool.push_back(build_cyclic_r(n, g, a));
    if (!find_rc_violation(pool.back())) rc_pool.push_back(pool.back());
  }
  std::mt19937_64 rng(seed);
  std::vector<std::pair<CodeHandle, CodeHandle>> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& from = (i % 2 == 1 && !rc_pool.empty()) ? rc_pool : pool;
    std::uniform_int_distribution<std::size_t> pick(0, from.size() - 1);
    const std::size_t p = pick(rng);
    const std::size_t q = pick(rng);
    out.emplace_back(from[p], from[q]);
  }
  return out;
}

std::vector<PropertyReport> suite_split_join(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<PropertyReport> out;
  for (const auto& [c1, c2] : random_cyclic_pairs(n, count, seed)) {
    PropertyReport r = verify_split_join(c1, c2);
    const PropertyReport s = verify_theorem_16(join_r_codes(c1, c2));
    r.findings.insert(r.findings.end(), s.findings.begin(), s.findings.end());
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<PropertyReport> suite_sum_intersection(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<CodeHandle> good;
  for (const auto& [g1, a1] : cyclic_generator_pairs(n)) {
    const CodeHandle c1 = build_cyclic_r(n, g1, a1);
    if (find_rc_violation(c1)) continue;
    for (const auto& [g2, a2] : cyclic_generator_pairs(n)) {
      const CodeHandle c2 = build_cyclic_r(n, g2, a2);
      if (find_rc_violation(c2)) continue;
      good.push_back(join_r_codes(c1, c2));
    }
  }
  std::vector<PropertyReport> out;
  if (good.empty()) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, good.size() - 1);
  for (std::size_t i = 0; i < count; ++i) out.push_back(audit_sum_intersection(good[pick(rng)], good[pick(rng)]));
  return out;
}

std::vector<PropertyReport> suite_skew(const std::vector<std::size_t>& lengths, std::size_t max_deg) {
  std::vector<PropertyReport> out;
  for (std::size_t n : lengths)
    for (const auto& f : skew_divisor_search(n, max_deg)) out.push_back(verify_theorem_29_30(n, f));
  return out;
}

std::vector<PropertyReport> suite_gray_quasi_cyclic(std::size_t max_n) {
  std::vector<PropertyReport> out;
  for (std::size_t n = 1; n <= max_n; n += 2) {
    std::vector<CodeHandle> r_codes;
    for (const auto& [g, a] : cyclic_generator_pairs(n)) r_codes.push_back(build_cyclic_r(n, g, a));
    for (const auto& c : r_codes) out.push_back(verify_gray_quasi_cyclic(c));
    for (const auto& c1 : r_codes)
      for (const auto& c2 : r_codes) out.push_back(verify_gray_quasi_cyclic(join_r_codes(c1, c2)));
  }
  return out;
}

PropertyReport example_34(std::uint64_t seed, std::size_t samples) {
  const std::size_t n = 7;
  const RPoly f = RPoly{RElement{3}, RElement{1}};
  const CodeHandle c = gamma_code(build_gamma_set(n, f, f));
  PropertyReport r;
  r.descriptor = c.summary() + " seed=" + std::to_string(seed) + " samples=" + std::to_string(samples);

  const auto pivots = c.basis.pivot_values();
  r.add("|C| = 256^6", c.log2_cardinality() == 48, true, std::nullopt, "|C|=2^" + std::to_string(c.log2_cardinality()));
  r.add("24 pivots", pivots.size() == 24, true, std::nullopt, std::to_string(pivots.size()) + " pivots");
  bool all_one = true;
  for (int p : pivots) all_one = all_one && p == 1;
  r.add("all pivots 1", all_one, true);

  const auto ones = SPoly::all_ones(n).to_vector(n);
  const bool member = c.contains(std::span<const SElement>(ones));
  r.add("(x^7-1)/(x-1) in C", member, true,
        member ? std::nullopt : std::optional<std::string>(describe(flatten(ones), RingTag::S) + " not in C"),
        "every codeword of <x-1> sums to 0; the all-ones word sums to 7 = 3");

  std::vector<Z4Vector> words = c.basis.sample(seed, samples);
  for (const auto& row : c.basis.rows()) words.push_back(row);
  std::size_t failures = 0;
  std::optional<std::string> witness;
  for (const auto& x : words)
    if (!c.contains(letter_reverse_complement(x))) {
      ++failures;
      if (!witness) {
        const auto v = s_vector(x);
        witness = to_codons(std::span<const SElement>(v)).str();
      }
    }
  r.add("letter-level reverse-complement closed", failures == 0, true,
        witness ? std::optional<std::string>(*witness + " reverse-complemented leaves C") : std::nullopt,
        std::to_string(failures) + " of " + std::to_string(words.size()) + " words fail");
  return r;
}

} // namespace z4dna
