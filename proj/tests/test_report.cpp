#include <doctest.h>

#include <sstream>

#include "ffdyn/report.hpp"

using namespace ffdyn;

TEST_CASE("analysis JSON for q = 11, c = 1") {
  const QuadCtx ctx(Field::build(11, 1), Elt{7});
  const Json j = analysis_json(ctx, Elt{1}, analyze(ctx, Elt{1}));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"q", "p", "n", "modulus", "a", "c", "parity",
                                         "is_permutation", "fixed_points", "zero_component",
                                         "lines", "cycle_multiset", "max_cycle"});
  CHECK(j["q"] == 11);
  CHECK(j["a"] == 7);
  CHECK(j["parity"] == "odd");
  CHECK(j["is_permutation"] == false);
  CHECK(j["fixed_points"] == 21);
  CHECK(j["zero_component"]["kind"] == "C1_with_tree");
  CHECK(j["zero_component"]["tree_size"] == 10);
  REQUIRE(j["lines"].size() == 12);
  CHECK(j["lines"][0]["order"].is_null());
  CHECK(j["lines"][0]["cycles"].is_null());
  CHECK(j["lines"][1]["g"] == 4);
  CHECK(j["lines"][1]["order"] == 5);
  CHECK(j["cycle_multiset"] == Json::parse("[[1,20],[5,6],[10,6]]"));
  CHECK(j["max_cycle"]["witness"] == Json::parse("[2,1]"));
  CHECK(j["max_cycle"]["order"] == 10);

  const std::string text = dump(j);
  CHECK(dump(Json::parse(text)) == text);
}

TEST_CASE("analysis JSON for a permutation polynomial") {
  const QuadCtx ctx(Field::with_modulus(2, {1, 0, 1, 1}), Elt{2});
  const Json j = analysis_json(ctx, Elt{6}, analyze(ctx, Elt{6}));
  CHECK(j["parity"] == "even");
  CHECK(j["is_permutation"] == true);
  CHECK(j["fixed_points"] == 15);
  CHECK(j["zero_component"]["kind"] == "C1");
  CHECK(j["modulus"] == Json::parse("[1,0,1,1]"));
}

TEST_CASE("element_text") {
  const Field f16 = Field::with_modulus(2, {1, 1, 1, 1, 1});
  CHECK(element_text(f16, Elt{0}) == "0");
  CHECK(element_text(f16, Elt{1}) == "1");
  CHECK(element_text(f16, Elt{2}) == "t");
  CHECK(element_text(f16, Elt{6}) == "t^2+t");
  CHECK(element_text(f16, Elt{9}) == "t^3+1");
  const Field f9 = Field::build(3, 2);
  CHECK(element_text(f9, Elt{5}) == "t+2");
  CHECK(element_text(f9, Elt{6}) == "2t");
  CHECK(element_text(Field::build(11, 1), Elt{7}) == "7");
  CHECK(label_text(f16, {Elt{4}, Elt{1}}) == "[t^2:1]");
}

TEST_CASE("analysis text table") {
  const QuadCtx ctx(Field::build(11, 1), Elt{7});
  std::ostringstream os;
  write_analysis_text(os, ctx, Elt{1}, analyze(ctx, Elt{1}));
  const std::string s = os.str();
  CHECK(s.find("fixed points: 21\n") != std::string::npos);
  CHECK(s.find("[0:1],[4:1],[7:1]") != std::string::npos);
  CHECK(s.find("shape: (C1,T10) + 20xC1 + 6xC5 + 6xC10\n") != std::string::npos);
  CHECK(s.find("yes, line [2:1]") != std::string::npos);
}

TEST_CASE("scan and bounds JSON") {
  ScanReport report;
  ScanEntry e;
  e.q = 7;
  e.checked = 6;
  e.min_max_order = 3;
  MaxCycleReport fail;
  fail.q = 7;
  fail.c = Elt{2};
  fail.max_order_found = 3;
  e.failures.push_back(fail);
  report.entries.push_back(e);
  CHECK(report.failure_count() == 1);
  CHECK(scan_json(report) ==
        Json::parse(R"([{"q":7,"checked":6,"min_max_order":3,"failures":[{"c":2,"max_order":3}]}])"));
  std::ostringstream text;
  write_scan_text(text, report);
  CHECK(text.str().find("no maximal cycle: q=7 c=2") != std::string::npos);

  const auto at = compute_a_t(4.08);
  const Json b = bounds_json(at, std::nullopt, {});
  CHECK_FALSE(b.contains("w_sweep"));
  CHECK(b["primes"].size() == 6);
  const Json sweep = bounds_json(at, 100, {2, 3, 97});
  CHECK(sweep["w_sweep"]["failing_prime_powers"] == 3);
  CHECK(sweep["w_sweep"]["largest_failing"] == 97);
  CHECK(bounds_json(at, 1, {})["w_sweep"]["largest_failing"].is_null());
  CHECK(bounds_json(at, 1, {}, DivisorWeight::all)["w_sweep"]["divisors"] == "all");
}
