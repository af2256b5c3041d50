#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {
struct Result {
  int code;
  std::string out, err;
};
Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = z4dna::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}
} // namespace

TEST_CASE("tables") {
  const auto r = run({"tables"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2+3w (2,3) GT") != std::string::npos);
  CHECK(r.out.find("TG 1011") != std::string::npos);
  CHECK(r.out.find("units of R (8): 1, 3, 1+w, 3+w, 1+2w, 3+2w, 1+3w, 3+3w") != std::string::npos);
  CHECK(r.out.find("<2w> = {0,2w}") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"tables", "--format", "json"}).out);
  CHECK(j["units"].size() == 8);
  CHECK(j["codons"].size() == 16);
}

TEST_CASE("build") {
  auto r = run({"build", "cyclic", "--n", "7", "--g", "x-1", "--a", "1", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["code"]["log2_cardinality"] == 27);
  CHECK(j.contains("findings"));
  CHECK(j.contains("witnesses"));

  r = run({"build", "gamma", "--n", "7", "--f1", "x-1", "--f2", "[3,1]", "--format", "json"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["code"]["log2_cardinality"] == 48);

  r = run({"build", "cyclic", "--n", "7", "--g", "x^2+1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("does not divide") != std::string::npos);
  CHECK(run({"build", "cyclic", "--n", "6"}).code == 2);
  CHECK(run({"build", "skew", "--n", "2", "--f", "x+3"}).code == 0);
  CHECK(run({"build", "full", "--ring", "r", "--n", "2"}).out.find("min Hamming distance 1") != std::string::npos);
}

TEST_CASE("verify") {
  auto r = run({"verify", "thm7-8", "--n", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("summary: 27 report(s), 0 asserted failure(s)") != std::string::npos);

  r = run({"verify", "gray-linearity"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Psi(1) + Psi(1) = 00 but Psi(2) = 11") != std::string::npos);

  r = run({"verify", "thm32", "--n", "7", "--seed", "5", "--samples", "50", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["seed"] == 5);
  CHECK(j["command"] == "verify thm32");

  r = run({"verify", "thm32", "--n", "7", "--f1", "x^3+2x^2+x+3", "--f2", "x^3+2x^2+x+3"});
  CHECK(r.code == 3);

  CHECK(run({"verify", "thm29-30", "--n", "2", "--f", "x-1"}).code == 0);
  CHECK(run({"verify", "nonsense"}).code == 2);

  r = run({"verify", "example34", "--samples", "20"});
  CHECK(r.out.find("|C| = 256^6 = true") != std::string::npos);
}

TEST_CASE("search, export, audit") {
  auto r = run({"search-divisors", "--n", "7", "--max-deg", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3+x\n") != std::string::npos);

  const std::string path = "z4dna_test_book.txt";
  r = run({"export-book", "zero", "--ring", "r", "--n", "2", "--out", path});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "AAAA");
  in.close();
  std::remove(path.c_str());

  CHECK(run({"export-book", "full", "--ring", "s", "--n", "4", "--cap", "100"}).code == 4);
  const auto gc = run({"export-book", "full", "--ring", "r", "--n", "1", "--gc", "2"});
  CHECK(gc.out == "CC\nCG\nGC\nGG\n");

  r = run({"audit-map", "gamma-literal"});
  CHECK(r.code == 0);
  CHECK(r.out.find("additive = false") != std::string::npos);
  CHECK(run({"audit-map", "theta"}).code == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code != 0);
  CHECK(run({"build"}).code != 0);
  CHECK(run({"--help"}).code == 0);
}
