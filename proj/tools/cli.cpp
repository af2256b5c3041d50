#include "cli.hpp"

#include "z4dna/audits.hpp"
#include "z4dna/code.hpp"
#include "z4dna/gamma.hpp"
#include "z4dna/skew.hpp"
#include "z4dna/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace z4dna::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string target; // build kind, verify id, or map name
  std::string ring = "r";
  std::size_t n = 0; // 0: command default
  std::string g, a, f, f1, f2;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultSamples;
  std::uint64_t cap = kDefaultCap;
  std::size_t max_deg = 0;
  std::string over = "z4";
  std::optional<std::size_t> gc;
  std::string format = "text";
  std::string out;

  json to_json() const {
    json j{{"target", target}, {"ring", ring}, {"n", n}, {"cap", cap}, {"samples", samples}, {"format", format}};
    for (const auto& [k, v] : {std::pair{"g", g}, {"a", a}, {"f", f}, {"f1", f1}, {"f2", f2}})
      if (!v.empty()) j[k] = v;
    if (max_deg) j["max_deg"] = max_deg;
    if (command == "search-divisors") j["over"] = over;
    if (gc) j["gc"] = *gc;
    return j;
  }
};

/// Output sink honouring --out.
class Sink {
public:
  Sink(const RunConfig& cfg, std::ostream& fallback) : out_(&fallback) {
    if (!cfg.out.empty()) {
      file_.open(cfg.out);
      if (!file_) throw std::runtime_error("cannot open " + cfg.out + " for writing");
      out_ = &file_;
    }
  }
  std::ostream& operator*() { return *out_; }

private:
  std::ofstream file_;
  std::ostream* out_;
};

std::size_t length_or(const RunConfig& cfg, std::size_t fallback) { return cfg.n ? cfg.n : fallback; }

Z4Poly z4_or(const std::string& text, const char* fallback) { return parse_z4_poly(text.empty() ? fallback : text); }
RPoly r_or(const std::string& text, const char* fallback) { return parse_r_poly(text.empty() ? fallback : text); }

/// Exit code and output for a batch of reports.
int emit_reports(const RunConfig& cfg, const std::vector<PropertyReport>& reports, bool randomized, std::ostream& os) {
  bool hypothesis_failed = false;
  std::size_t failures = 0;
  for (const auto& r : reports) {
    failures += r.failures().size();
    for (const auto& f : r.findings)
      if (f.name.rfind("hypothesis:", 0) == 0 && !f.value) hypothesis_failed = true;
  }

  if (cfg.format == "json") {
    json j{{"command", cfg.command + " " + cfg.target},
           {"config", cfg.to_json()},
           {"seed", randomized ? json(cfg.seed) : json(nullptr)},
           {"findings", json::array()},
           {"witnesses", json::array()}};
    for (const auto& r : reports)
      for (const auto& f : r.findings) {
        json e{{"code", r.descriptor}, {"name", f.name}, {"value", f.value}, {"asserted", f.asserted}};
        if (!f.note.empty()) e["note"] = f.note;
        if (f.witness) {
          e["witness"] = *f.witness;
          j["witnesses"].push_back({{"code", r.descriptor}, {"name", f.name}, {"witness", *f.witness}});
        }
        j["findings"].push_back(std::move(e));
      }
    j["summary"] = {{"reports", reports.size()}, {"asserted_failures", failures}};
    os << j.dump(2) << '\n';
  } else {
    os << "# " << cfg.command << ' ' << cfg.target;
    if (randomized) os << "  seed=" << cfg.seed;
    os << '\n';
    for (const auto& r : reports) os << r.to_text();
    os << "summary: " << reports.size() << " report(s), " << failures << " asserted failure(s)\n";
  }
  if (hypothesis_failed) return kHypothesisViolation;
  return failures ? kFindingFailed : kOk;
}

// ---- tables ----------------------------------------------------------------

std::vector<RElement> table_order() {
  std::vector<RElement> out;
  for (int a = 0; a < 4; ++a) out.emplace_back(a, 0);
  for (int b = 1; b < 4; ++b) out.emplace_back(0, b);
  for (int a = 1; a < 4; ++a)
    for (int b = 1; b < 4; ++b) out.emplace_back(a, b);
  return out;
}

int cmd_tables(const RunConfig& cfg, std::ostream& os) {
  const RingTables t = ring_tables();
  json j;
  for (const auto& u : t.units) j["units"].push_back(to_string(u));
  for (const auto& ideal : t.ideals) {
    json members = json::array();
    for (const auto& x : ideal) members.push_back(to_string(x));
    j["ideals"].push_back(members);
  }
  j["chain"] = t.is_chain;
  for (const auto& row : gray_table())
    j["gray"].push_back({{"c", row.c.value()}, {"alpha", row.alpha}, {"beta", row.beta}, {"gamma", row.gamma}});
  for (const RElement& x : table_order()) {
    const auto [a, b] = phi(x);
    j["codons"].push_back({{"element", to_string(x)},
                           {"phi", "(" + to_string(a) + "," + to_string(b) + ")"},
                           {"codon", r_to_codon(x).str()},
                           {"bits", breve_o(x).str()}});
  }

  if (cfg.format == "json") {
    os << j.dump(2) << '\n';
    return kOk;
  }
  os << "units of R (" << t.units.size() << "): ";
  for (std::size_t i = 0; i < t.units.size(); ++i) os << (i ? ", " : "") << to_string(t.units[i]);
  os << "\nideals of R (" << (t.is_chain ? "chain" : "not a chain") << "):\n";
  for (const auto& ideal : t.ideals) {
    // Label by the first element (in index order) that generates the ideal.
    RElement gen = ideal.front();
    for (const RElement& x : ideal)
      if (principal_ideal(x) == ideal) {
        gen = x;
        break;
      }
    os << "  <" << to_string(gen) << "> = {";
    for (std::size_t i = 0; i < ideal.size(); ++i) os << (i ? "," : "") << to_string(ideal[i]);
    os << "}\n";
  }
  os << "\n2-adic table (c alpha beta gamma):\n";
  for (const auto& row : gray_table())
    os << "  " << int(row.c.value()) << ' ' << int(row.alpha) << ' ' << int(row.beta) << ' ' << int(row.gamma) << '\n';
  os << "\ncodon table (element phi codon):\n";
  for (const auto& e : j["codons"])
    os << "  " << e["element"].get<std::string>() << ' ' << e["phi"].get<std::string>() << ' '
       << e["codon"].get<std::string>() << '\n';
  os << "\nbit table (codon bits):\n";
  for (const auto& e : j["codons"]) os << "  " << e["codon"].get<std::string>() << ' ' << e["bits"].get<std::string>() << '\n';
  return kOk;
}

// ---- build / export ----------------------------------------------------------

RingTag ring_of(const RunConfig& cfg) {
  if (cfg.ring == "r") return RingTag::R;
  if (cfg.ring == "s") return RingTag::S;
  throw std::invalid_argument("--ring must be r or s");
}

CodeHandle build_code(const RunConfig& cfg, std::optional<std::string>& extra) {
  const std::string& kind = cfg.target;
  if (kind == "cyclic") {
    const std::size_t n = length_or(cfg, 7);
    const CodeHandle c = build_cyclic_r(n, z4_or(cfg.g, "x-1"), z4_or(cfg.a, "1"));
    if (ring_of(cfg) == RingTag::R) return c;
    return join_r_codes(c, c);
  }
  if (kind == "skew") {
    if (ring_of(cfg) != RingTag::R) throw BuildError("skew codes are defined over R only");
    return build_skew(length_or(cfg, 2), SkewPolynomial(r_or(cfg.f, "x-1"))).code;
  }
  if (kind == "gamma") {
    const GammaSet l = build_gamma_set(length_or(cfg, 7), r_or(cfg.f1, "x-1"), r_or(cfg.f2, "x-1"));
    extra = render_gamma_matrix(l);
    return gamma_code(l);
  }
  if (kind == "zero") return zero_code(ring_of(cfg), length_or(cfg, 1));
  if (kind == "full") return full_code(ring_of(cfg), length_or(cfg, 1));
  throw std::invalid_argument("unknown code kind '" + kind + "' (cyclic, skew, gamma, zero, full)");
}

int cmd_build(const RunConfig& cfg, std::ostream& os) {
  std::optional<std::string> matrix;
  const CodeHandle c = build_code(cfg, matrix);

  PropertyReport r;
  r.descriptor = c.summary();
  const auto nc = find_non_cyclic(c);
  const auto nr = find_non_reversible(c);
  const auto rc = find_rc_violation(c);
  r.add("cyclic", !nc, false, nc ? std::optional<std::string>(describe(*nc, c.ring)) : std::nullopt);
  r.add("reversible", !nr, false, nr ? std::optional<std::string>(describe(*nr, c.ring)) : std::nullopt);
  r.add("rc_closed", !rc, false, rc ? std::optional<std::string>(describe(*rc, c.ring)) : std::nullopt);
  if (c.ring == RingTag::R) {
    const auto s = find_non_skew_cyclic(c);
    r.add("sigma_theta closed", !s, false, s ? std::optional<std::string>(describe(*s, c.ring)) : std::nullopt);
  }

  json code{{"ring", c.ring == RingTag::R ? "R" : "S"},
            {"n", c.n},
            {"log2_cardinality", c.log2_cardinality()},
            {"pivots", c.basis.pivot_values()},
            {"provenance", c.provenance}};
  const bool small = c.log2_cardinality() < 63 && c.basis.cardinality() <= cfg.cap;
  if (small) {
    code["min_hamming"] = min_distance(c, Metric::Hamming, cfg.cap);
    code["min_lee"] = min_distance(c, Metric::Lee, cfg.cap);
  } else {
    code["min_hamming"] = nullptr;
    code["min_lee"] = nullptr;
  }

  if (cfg.format == "json") {
    json j{{"command", "build " + cfg.target}, {"config", cfg.to_json()}, {"seed", nullptr}, {"code", code},
           {"findings", json::array()}, {"witnesses", json::array()}};
    for (const auto& f : r.findings) {
      json e{{"code", r.descriptor}, {"name", f.name}, {"value", f.value}, {"asserted", f.asserted}};
      if (f.witness) {
        e["witness"] = *f.witness;
        j["witnesses"].push_back({{"code", r.descriptor}, {"name", f.name}, {"witness", *f.witness}});
      }
      j["findings"].push_back(std::move(e));
    }
    if (matrix) j["generator_matrix"] = *matrix;
    os << j.dump(2) << '\n';
    return kOk;
  }
  os << c.summary() << '\n';
  os << "  |C| = 2^" << c.log2_cardinality() << ", " << c.basis.rank() << " Howell rows\n";
  if (small)
    os << "  min Hamming distance " << code["min_hamming"].get<std::size_t>() << ", min Lee distance "
       << code["min_lee"].get<std::size_t>() << '\n';
  else
    os << "  distances skipped: |C| exceeds cap " << cfg.cap << '\n';
  for (const auto& f : r.findings) {
    os << "  " << f.name << " = " << (f.value ? "true" : "false") << '\n';
    if (f.witness) os << "    witness: " << *f.witness << '\n';
  }
  if (matrix) os << "generator matrix L(f):\n" << *matrix;
  return kOk;
}

int cmd_export_book(const RunConfig& cfg, std::ostream& os) {
  std::optional<std::string> unused;
  const CodeHandle c = build_code(cfg, unused);
  for (const auto& word : export_dna_book(c, cfg.cap))
    if (!cfg.gc || gc_content(word) == *cfg.gc) os << word.str() << '\n';
  return kOk;
}

// ---- verify ------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  const std::string& id = cfg.target;
  std::vector<PropertyReport> reports;
  bool randomized = false;
  if (id == "thm7-8") {
    const std::size_t n = length_or(cfg, 7);
    if (!cfg.g.empty() || !cfg.a.empty())
      reports.push_back(verify_theorem_7_8(n, z4_or(cfg.g, "1"), z4_or(cfg.a, "1")));
    else
      reports = suite_theorem_7_8(n);
  } else if (id == "thm11-13" || id == "thm16") {
    randomized = true;
    const std::size_t n = length_or(cfg, 7);
    if (n % 2 == 0) throw BuildError("cyclic codes are built for odd n only");
    reports = suite_split_join(n, cfg.samples == kDefaultSamples ? 50 : cfg.samples, cfg.seed);
  } else if (id == "thm18") {
    randomized = true;
    const std::size_t n = length_or(cfg, 7);
    if (n % 2 == 0) throw BuildError("cyclic codes are built for odd n only");
    reports = suite_sum_intersection(n, cfg.samples == kDefaultSamples ? 50 : cfg.samples, cfg.seed);
  } else if (id == "thm29-30") {
    if (!cfg.f.empty())
      reports.push_back(verify_theorem_29_30(length_or(cfg, 2), SkewPolynomial(parse_r_poly(cfg.f))));
    else if (cfg.n)
      reports = suite_skew({cfg.n}, cfg.max_deg ? cfg.max_deg : 3);
    else
      reports = suite_skew({2, 3, 4}, cfg.max_deg ? cfg.max_deg : 3);
  } else if (id == "thm32" || id == "cor33") {
    randomized = true;
    const std::size_t n = length_or(cfg, 7);
    const RPoly f1 = r_or(cfg.f1, "x-1"), f2 = r_or(cfg.f2, "x-1");
    reports.push_back(id == "thm32" ? verify_theorem_32(n, f1, f2, cfg.seed, cfg.samples)
                                    : verify_corollary_33(n, f1, f2, cfg.seed, cfg.samples));
  } else if (id == "example34") {
    randomized = true;
    reports.push_back(example_34(cfg.seed, cfg.samples));
  } else if (id == "gray-intertwining") {
    randomized = true;
    reports.push_back(audit_gray_intertwining(cfg.seed, 200, length_or(cfg, 8)));
  } else if (id == "gray-distance") {
    randomized = true;
    reports.push_back(audit_distance_preservation(cfg.seed, 1000, length_or(cfg, 16)));
  } else if (id == "gray-qc") {
    reports = suite_gray_quasi_cyclic(length_or(cfg, 7));
  } else if (id == "gray-linearity") {
    reports.push_back(audit_gray_linearity());
  } else if (id == "lemmas") {
    reports.push_back(audit_complement_identities());
  } else if (id == "ring") {
    reports.push_back(audit_ring_tables());
  } else {
    throw std::invalid_argument("unknown verification '" + id + "'");
  }
  return emit_reports(cfg, reports, randomized, os);
}

// ---- search / audit ------------------------------------------------------------

int cmd_search_divisors(const RunConfig& cfg, std::ostream& os) {
  const std::size_t n = length_or(cfg, 7);
  const std::size_t max_deg = cfg.max_deg ? cfg.max_deg : n;
  std::vector<std::string> found;
  if (cfg.over == "z4") {
    for (const auto& d : divisor_search(n, max_deg)) found.push_back(to_string(d));
  } else if (cfg.over == "r") {
    for (const auto& d : divisor_search_r(n, max_deg)) found.push_back(to_string(d));
  } else if (cfg.over == "skew") {
    for (const auto& d : skew_divisor_search(n, max_deg)) found.push_back(to_string(d));
  } else {
    throw std::invalid_argument("--over must be z4, r or skew");
  }
  if (cfg.format == "json") {
    os << json{{"command", "search-divisors"}, {"config", cfg.to_json()}, {"seed", nullptr}, {"divisors", found}}.dump(2)
       << '\n';
  } else {
    os << "# monic divisors of x^" << n << "-1 over " << cfg.over << ", degree <= " << max_deg << '\n';
    for (const auto& d : found) os << d << '\n';
  }
  return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Codes over Z4[w]/(w^2-2) and its v-extension: construction, verification and DNA export", "z4dna"};
  app.require_subcommand(1);

  auto add_code_flags = [&](CLI::App* sub) {
    sub->add_option("--ring", cfg.ring, "Ring: r or s")->check(CLI::IsMember({"r", "s"}));
    sub->add_option("--n", cfg.n, "Code length");
    sub->add_option("--g", cfg.g, "Generator g over Z4 (human or bracket syntax)");
    sub->add_option("--a", cfg.a, "Generator a over Z4, a | g");
    sub->add_option("--f", cfg.f, "Skew generator over R");
    sub->add_option("--f1", cfg.f1, "Gamma-set polynomial f1 over R");
    sub->add_option("--f2", cfg.f2, "Gamma-set polynomial f2 over R");
    sub->add_option("--cap", cfg.cap, "Enumeration cap in codewords");
  };
  auto add_output_flags = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "Write output to this file");
  };

  auto* tables = app.add_subcommand("tables", "Units, ideals, 2-adic, codon and bit tables");
  add_output_flags(tables);

  auto* build = app.add_subcommand("build", "Build a code and summarize it");
  build->add_option("kind", cfg.target, "cyclic | skew | gamma | zero | full")->required();
  add_code_flags(build);
  add_output_flags(build);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("id", cfg.target,
                     "thm7-8 | thm11-13 | thm16 | thm18 | thm29-30 | thm32 | cor33 | example34 | gray-intertwining | "
                     "gray-distance | gray-qc | gray-linearity | lemmas | ring")
      ->required();
  add_code_flags(verify);
  add_output_flags(verify);
  verify->add_option("--seed", cfg.seed, "Seed for sampled checks");
  verify->add_option("--samples", cfg.samples, "Sample count");
  verify->add_option("--max-deg", cfg.max_deg, "Degree bound for skew divisor search");

  auto* search = app.add_subcommand("search-divisors", "Monic divisors of x^n-1");
  search->add_option("--n", cfg.n, "Length (odd for z4 and r)");
  search->add_option("--max-deg", cfg.max_deg, "Degree bound (default n)");
  search->add_option("--over", cfg.over, "z4 | r | skew")->check(CLI::IsMember({"z4", "r", "skew"}));
  add_output_flags(search);

  auto* book = app.add_subcommand("export-book", "Write every codeword as a DNA string, sorted");
  book->add_option("kind", cfg.target, "cyclic | skew | gamma | zero | full")->required();
  add_code_flags(book);
  book->add_option("--out", cfg.out, "Output file (default stdout)");
  book->add_option("--gc", cfg.gc, "Keep only words with this GC content");

  auto* audit = app.add_subcommand("audit-map", "Ring-map audit");
  audit->add_option("name", cfg.target, "theta | gamma | gamma-literal")->required();
  add_output_flags(audit);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    Sink sink(cfg, out);
    if (cfg.command == "tables") return cmd_tables(cfg, *sink);
    if (cfg.command == "build") return cmd_build(cfg, *sink);
    if (cfg.command == "verify") return cmd_verify(cfg, *sink);
    if (cfg.command == "search-divisors") return cmd_search_divisors(cfg, *sink);
    if (cfg.command == "export-book") return cmd_export_book(cfg, *sink);
    if (cfg.command == "audit-map") return emit_reports(cfg, {audit_map(cfg.target)}, false, *sink);
  } catch (const BuildError& e) {
    err << "build error: " << e.what() << '\n';
    return kBuildError;
  } catch (const HypothesisViolation& e) {
    err << "hypothesis violation: " << e.what() << '\n';
    return kHypothesisViolation;
  } catch (const TooLarge& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kBuildError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBuildError;
  }
  return kOk;
}

} // namespace z4dna::cli
