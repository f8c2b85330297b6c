#include <doctest.h>

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "phihex/render.hpp"

using namespace phihex;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

std::string render(const VertexRef& v, const Rational& side, const RenderOptions& opts = {}) {
  const Cluster c = build_cluster(v, side);
  return render_svg(make_report(c), c, opts);
}

// Tag balance check: every opened element is closed in order.
bool well_formed(const std::string& doc) {
  static const std::regex tag(R"(<(/?)([A-Za-z][\w:-]*)[^>]*?(/?)>)");
  std::vector<std::string> stack;
  std::size_t roots = 0;
  for (auto it = std::sregex_iterator(doc.begin(), doc.end(), tag); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m[1] == "/") {
      if (stack.empty() || stack.back() != m[2]) return false;
      stack.pop_back();
    } else if (m[3] != "/") {
      if (stack.empty()) ++roots;
      stack.push_back(m[2]);
    }
  }
  return stack.empty() && roots == 1 && doc.rfind("<?xml", 0) == 0;
}

// Numbers in every numeric attribute carry exactly `digits` fractional digits.
bool numeric_attributes_have_digits(const std::string& doc, int digits) {
  static const std::set<std::string> textual = {
      "xmlns", "version", "encoding", "standalone", "id", "class", "fill", "stroke",
      "transform", "font-family", "text-anchor", "dominant-baseline"};
  static const std::regex attr(R"(([A-Za-z][\w-]*)="([^"]*)\")");
  const std::regex number("-?[0-9]+\\.[0-9]{" + std::to_string(digits) + "}");
  std::size_t checked = 0;
  for (auto it = std::sregex_iterator(doc.begin(), doc.end(), attr); it != std::sregex_iterator(); ++it) {
    if (textual.count((*it)[1])) continue;
    std::string value = (*it)[2];
    for (char& ch : value) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream tokens(value);
    for (std::string tok; tokens >> tok;) {
      if (!std::regex_match(tok, number)) return false;
      ++checked;
    }
  }
  return checked > 0;
}

}  // namespace

TEST_CASE("element counts for the canonical cluster") {
  const std::string svg = render({{0, 0}, 0}, 1);
  CHECK(count(svg, "<polygon") == 3);
  CHECK(count(svg, "<circle") == 9);
  CHECK(count(svg, "class=\"segment\"") == 6);
  CHECK(count(svg, "class=\"tangent\"") == 3);
  CHECK(count(svg, "<rect") == 13);
  CHECK(count(svg, "<text") == 13);
  CHECK(svg.find("transform=\"scale(1,-1)\"") != std::string::npos);
}

TEST_CASE("the 13 marked points are distinct") {
  const Cluster c = build_cluster({{0, 0}, 0}, 1);
  const auto segs = construct_segments(c);
  std::vector<Point> pts{c.o};
  for (const auto& s : segs) pts.push_back(s.a);
  for (const auto& s : segs) pts.push_back(s.b);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) CHECK_FALSE(pts[i] == pts[j]);
  }
}

TEST_CASE("labels can be turned off") {
  RenderOptions opts;
  opts.show_labels = false;
  CHECK(count(render({{0, 0}, 0}, 1, opts), "<text") == 0);
}

TEST_CASE("output is deterministic and well formed") {
  const std::string a = render({{0, 0}, 0}, 1);
  const std::string b = render({{0, 0}, 0}, 1);
  CHECK(a == b);
  CHECK(well_formed(a));
  CHECK(numeric_attributes_have_digits(a, 12));

  RenderOptions opts;
  opts.frac_digits = 5;
  const std::string c = render({{2, -1}, 3}, Rational(3, 2), opts);
  CHECK(well_formed(c));
  CHECK(numeric_attributes_have_digits(c, 5));
}

TEST_CASE("counts hold for other clusters") {
  for (const auto& v : enumerate_vertices(1)) {
    const std::string svg = render(v, Rational(2, 3));
    CHECK(count(svg, "<polygon") == 3);
    CHECK(count(svg, "<circle") == 9);
    CHECK(count(svg, "class=\"segment\"") == 6);
    CHECK(count(svg, "<rect") == 13);
  }
}

TEST_CASE("golden file") {
  std::ifstream in(std::string(PHIHEX_GOLDEN_DIR) + "/cluster_0_0_0.svg", std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream golden;
  golden << in.rdbuf();
  CHECK(render({{0, 0}, 0}, 1) == golden.str());
}

TEST_CASE("invalid options") {
  const Cluster c = build_cluster({{0, 0}, 0}, 1);
  const PhiReport r = make_report(c);
  RenderOptions opts;
  opts.frac_digits = 0;
  CHECK_THROWS_AS(render_svg(r, c, opts), std::invalid_argument);
  opts.frac_digits = 12;
  opts.canvas_scale = 0;
  CHECK_THROWS_AS(render_svg(r, c, opts), std::invalid_argument);
}
