#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dualbraid/verify.hpp"
#include "fan_svg.hpp"

using namespace dualbraid;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t p = hay.find(needle); p != std::string::npos;
       p = hay.find(needle, p + 1))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("group spec strings parse strictly") {
  CHECK(GroupSpec::parse("A3:1,2,3").str() == "A3:1,2,3");
  CHECK_THROWS_AS(GroupSpec::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("A3;1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("A3:1,2,x"), std::invalid_argument);
}

TEST_CASE("fan SVG: ray and sector counts in rank 2") {
  GroupContext a2(GroupSpec::parse("A2:1,2"));
  emit_fan_svg(a2, "/tmp/dualbraid_a2.svg");
  std::string svg = slurp("/tmp/dualbraid_a2.svg");
  CHECK(count_occurrences(svg, "<line") == 3);   // 3 positive roots
  CHECK(count_occurrences(svg, "<path") == 2);   // 2 facet sectors

  GroupContext b2(GroupSpec::parse("B2:1,2"));
  emit_fan_svg(b2, "/tmp/dualbraid_b2.svg");
  std::string svg2 = slurp("/tmp/dualbraid_b2.svg");
  CHECK(count_occurrences(svg2, "<line") == 4);
  CHECK(count_occurrences(svg2, "<path") == 3);

  GroupContext g2(GroupSpec::parse("G2:1,2"));
  emit_fan_svg(g2, "/tmp/dualbraid_g2.svg");
  std::string svg3 = slurp("/tmp/dualbraid_g2.svg");
  CHECK(count_occurrences(svg3, "<line") == 6);
  CHECK(count_occurrences(svg3, "<path") == 5);
}

TEST_CASE("fan SVG: degenerate rank 1 and projected rank 3") {
  GroupContext a1(GroupSpec::parse("A1:1"));
  emit_fan_svg(a1, "/tmp/dualbraid_a1.svg");
  std::string svg = slurp("/tmp/dualbraid_a1.svg");
  CHECK(count_occurrences(svg, "<line") == 1);
  CHECK(svg.find("</svg>") != std::string::npos);

  GroupContext a3(GroupSpec::parse("A3:1,2,3"));
  emit_fan_svg(a3, "/tmp/dualbraid_a3.svg");
  std::string svg3 = slurp("/tmp/dualbraid_a3.svg");
  CHECK(count_occurrences(svg3, "<path") == 5);    // 5 facet triangles
  CHECK(count_occurrences(svg3, "<circle cx") >= 6);  // root markers

  GroupContext d4(GroupSpec::parse("D4:1,2,3,4"));
  CHECK_THROWS_AS(emit_fan_svg(d4, "/tmp/dualbraid_d4.svg"),
                  std::invalid_argument);
}

TEST_CASE("SVG output is byte-deterministic") {
  GroupContext b3(GroupSpec::parse("B3:1,2,3"));
  emit_fan_svg(b3, "/tmp/dualbraid_b3_a.svg");
  emit_fan_svg(b3, "/tmp/dualbraid_b3_b.svg");
  CHECK(slurp("/tmp/dualbraid_b3_a.svg") == slurp("/tmp/dualbraid_b3_b.svg"));
}

TEST_CASE("group suite passes for a small group") {
  VerifyOptions opts;
  opts.threads = thread_count_from_env();
  auto results = run_group_suite(GroupSpec::parse("A2:1,2"), opts);
  CHECK(!results.empty());
  for (const auto& r : results) {
    INFO(r.name, ": ", r.details);
    CHECK(r.pass);
  }
}
