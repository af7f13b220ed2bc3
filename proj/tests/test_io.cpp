#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arr/analysis.hpp"
#include "arr/generators.hpp"
#include "arr/io.hpp"

#include <string>

using namespace arr;

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0, pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

}  // namespace

TEST_CASE("instance serialization round-trips canonically") {
  auto inst = spiral_pair(3);
  auto text = serialize_instance(inst);
  auto back = parse_instance(text);
  CHECK(serialize_instance(back) == text);
  REQUIRE(back.disks.size() == 2);
  for (int i = 0; i < 2; ++i)
    CHECK(back.disks[i].vertices() == inst.disks[i].vertices());
  CHECK(back.generator == "spiral");
  CHECK(back.params.at("delta") == 3);
  CHECK(*back.expected.delta == 3);
  CHECK(*back.expected.diameter == 6);
  REQUIRE(back.find_marker("blue_outer"));
  CHECK(back.find_marker("blue_outer")->location ==
        inst.find_marker("blue_outer")->location);
  // serialization is by value, repeatable
  CHECK(serialize_instance(spiral_pair(3)) == text);
}

TEST_CASE("non-canonical rationals normalize on the way in") {
  std::string text = R"({
    "format": "disk-arrangement-instance",
    "version": 1,
    "disks": [[["0", "0"], ["4/2", "0"], ["2", "6/3"], ["0", "-10/-5"]]]
  })";
  auto inst = parse_instance(text);
  auto out = serialize_instance(inst);
  CHECK(count_occurrences(out, "\"2\"") > 0);
  CHECK(count_occurrences(out, "4/2") == 0);
  CHECK(count_occurrences(out, "6/3") == 0);
  CHECK(count_occurrences(out, "-10/-5") == 0);
}

TEST_CASE("malformed input is rejected with located messages") {
  auto expect_reject = [](const std::string& text, const std::string& fragment) {
    try {
      parse_instance(text);
      FAIL_CHECK("accepted: ", text);
    } catch (const InstanceFormatError& e) {
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_reject("{", "syntax");
  expect_reject(R"({"format":"nope","version":1,"disks":[]})", "format");
  expect_reject(R"({"format":"disk-arrangement-instance","version":9,"disks":[]})",
                "version");
  expect_reject(R"({"format":"disk-arrangement-instance","version":1})", "disks");
  expect_reject(
      R"({"format":"disk-arrangement-instance","version":1,
          "disks":[[["0","0"],["3/0","0"],["0","1"]]]})",
      "disks[0][1]");
  expect_reject(
      R"({"format":"disk-arrangement-instance","version":1,
          "disks":[[["0","0"],["1","1"]]]})",
      "disks[0]");
  // self-intersecting polygon
  expect_reject(
      R"({"format":"disk-arrangement-instance","version":1,
          "disks":[[["0","0"],["2","2"],["2","0"],["0","2"]]]})",
      "disks[0]");
}

TEST_CASE("report serialization carries verdicts and expected comparisons") {
  auto inst = grid_instance(3, 2);
  auto a = Arrangement::build(inst.disks);
  auto rep = verify_bounds(a);
  auto text = serialize_report(rep, inst);
  CHECK(report_clean(rep, inst));
  CHECK(count_occurrences(text, "\"verdict\": \"PASS\"") >= 4);
  CHECK(count_occurrences(text, "\"FAIL\"") == 0);
  CHECK(count_occurrences(text, "\"slack\"") == rep.checks.size());
  CHECK(text.find("\"delta\": 8") != std::string::npos);
  CHECK(text.find("\"mu\": 24") != std::string::npos);

  // a wrong expectation flips the verdict
  Instance lied = inst;
  lied.expected.mu = 7;
  CHECK(!report_clean(rep, lied));
  auto bad = serialize_report(rep, lied);
  CHECK(bad.find("\"match\": false") != std::string::npos);
  CHECK(bad.find("\"verdict\": \"FAIL\"") != std::string::npos);
}

TEST_CASE("svg has one filled path per face and is deterministic") {
  for (auto inst : {spiral_pair(2), comb_pair(2), grid_instance(2, 1)}) {
    auto a = Arrangement::build(inst.disks);
    auto svg = render_svg(a);
    CHECK(count_occurrences(svg, "<path") == a.num_faces());
    CHECK(count_occurrences(svg, "<svg") == 1);
    CHECK(render_svg(a) == svg);
  }
  // dual overlay adds one circle per face
  auto a = Arrangement::build(comb_pair(1).disks);
  SvgOptions opts;
  opts.dual_overlay = true;
  auto svg = render_svg(a, opts);
  CHECK(count_occurrences(svg, "<circle") == a.num_faces());
  CHECK(count_occurrences(svg, "<line") > 0);
}
