#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "rzlab/store.hpp"

using namespace rzlab;
using namespace rzlab::zerolab;
namespace fs = std::filesystem;

namespace {

std::vector<ZeroRecord> synthetic(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> beta(-20.0, 300.0), gamma(-400.0, 700.0);
  std::vector<ZeroRecord> out;
  for (int k = 0; k < n; ++k) {
    ZeroRecord r;
    r.beta = beta(rng);
    r.gamma = gamma(rng);
    r.side = classify(r.beta);
    r.resid = std::ldexp(std::abs(beta(rng)), -60);
    out.push_back(r);
  }
  return out;
}

fs::path temp_file(const char* name) {
  const auto p = fs::temp_directory_path() / (std::string("rzlab_test_") + name);
  fs::remove(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void check_order(const ZeroStore& s) {
  for (std::size_t k = 0; k < s.upper().size(); ++k) {
    CHECK(s.upper()[k].index == static_cast<long>(k) + 1);
    if (k) CHECK(s.upper()[k - 1].gamma < s.upper()[k].gamma);
  }
  for (std::size_t k = 0; k < s.lower().size(); ++k) {
    CHECK(s.lower()[k].index == -static_cast<long>(k));
    if (k) CHECK(s.lower()[k - 1].gamma > s.lower()[k].gamma);
  }
}

}  // namespace

TEST_SUITE("store") {

TEST_CASE("round trip of 100 records") {
  ZeroStore s;
  s.add(synthetic(100, 7));
  s.add_coverage({Rectangle::make(-3, 4, 0.001, 700), 60});
  const auto p = temp_file("roundtrip.jsonl");
  s.save(p);
  const auto back = ZeroStore::load(p);
  CHECK(back.all() == s.all());
  CHECK(back.coverage() == s.coverage());
  CHECK(back.serialize() == s.serialize());
  check_order(back);
  fs::remove(p);
}

TEST_CASE("appending keeps the halves ordered") {
  const auto p = temp_file("append.jsonl");
  const auto recs = synthetic(60, 11);
  ZeroStore s;
  s.add({recs.begin(), recs.begin() + 30});
  s.save(p);
  auto t = ZeroStore::load(p);
  t.add({recs.begin() + 30, recs.end()});
  t.save(p);
  const auto u = ZeroStore::load(p);
  CHECK(u.upper().size() + u.lower().size() == 60);
  check_order(u);
  // Adding the same records again changes nothing.
  auto v = u;
  v.add(recs);
  CHECK(v.all() == u.all());
  fs::remove(p);
}

TEST_CASE("a pure append leaves the existing prefix untouched") {
  const auto p = temp_file("prefix.jsonl");
  ZeroStore s;
  s.add_coverage({Rectangle::make(-3, 4, 0.001, 10), 0});
  s.save(p);
  const auto before = slurp(p);
  s.add_coverage({Rectangle::make(-3, 4, 10, 20), 0});
  s.save(p);
  const auto after = slurp(p);
  CHECK(after.compare(0, before.size(), before) == 0);
  CHECK(after.size() > before.size());
  fs::remove(p);
}

TEST_CASE("corrupt lines are reported with their number") {
  const std::string good = ZeroStore{}.serialize();
  try {
    ZeroStore::parse(good + "{\"beta\":1.0,\"gamma\":\n");
    FAIL("no error");
  } catch (const FormatError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(ZeroStore::parse("{\"format\":\"other\",\"version\":1}\n"), FormatError);
  CHECK_THROWS_AS(ZeroStore::parse(good + "{\"beta\":\"x\",\"gamma\":1}\n"), FormatError);
  CHECK_THROWS_AS(parse_record("[1,2]", 5), FormatError);
}

TEST_CASE("missing file is an empty store") {
  const auto s = ZeroStore::load(temp_file("missing.jsonl"));
  CHECK(s.empty());
  CHECK(s.covered_above() == 0.0);
  CHECK(s.covered_below() == 0.0);
}

TEST_CASE("coverage is the connected part from zero") {
  ZeroStore s;
  s.add_coverage({Rectangle::make(-3, 4, 0.001, 100), 29});
  s.add_coverage({Rectangle::make(-3, 4, 150, 200), 10});
  CHECK(s.covered_above() == 100.0);
  s.add_coverage({Rectangle::make(-3, 4, 100, 150), 12});
  CHECK(s.covered_above() == 200.0);
  s.add_coverage({Rectangle::make(-1, 50, -40, 0), 12});
  CHECK(s.covered_below() == -40.0);
}

TEST_CASE("records keep 17 digits") {
  ZeroRecord r;
  r.beta = 0.1 + 0.2;
  r.gamma = std::nextafter(14.134725141734694, 20.0);
  r.side = classify(r.beta);
  const auto back = parse_record(record_line(r), 1);
  CHECK(back.beta == r.beta);
  CHECK(back.gamma == r.gamma);
}

}  // TEST_SUITE
