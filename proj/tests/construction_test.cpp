#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "float_oracle.hpp"
#include "phihex/construction.hpp"
#include "test_support.hpp"

using namespace phihex;
using phihex::testing::to_double;

namespace {

const QuadExt kPhi2 = QuadExt::phi() * QuadExt::phi();
const VertexRef kCanonical{{0, 0}, 0};

QuadExt root3(Rational k) { return {0, std::move(k), 0, 0}; }

Convergent nearest_brute(const Rational& v, int max_n) {
  Convergent best = convergent(2);
  Rational best_dist = abs(best.ratio - v);
  for (int n = 3; n <= max_n; ++n) {
    const Convergent c = convergent(n);
    const Rational d = abs(c.ratio - v);
    if (d < best_dist) best = c, best_dist = d;
  }
  return best;
}

}  // namespace

TEST_CASE("build_cluster") {
  const Cluster c = build_cluster(kCanonical, 1);
  CHECK(c.o == Point{1, 0});
  CHECK(c.triples[0].center() == Point{});
  CHECK(c.triples[1].center() == Point{Rational(3, 2), root3(Rational(-1, 2))});
  CHECK(c.triples[2].center() == Point{Rational(3, 2), root3(Rational(1, 2))});

  for (const auto& v : enumerate_vertices(1)) {
    const Cluster cl = build_cluster(v, 1);
    for (const auto& t : cl.triples) CHECK(squared_distance(cl.o, t.center()) == QuadExt(1));
  }

  const Cluster c2 = build_cluster(kCanonical, 2);
  for (const auto& t : c2.triples) {
    CHECK(t.small.radius() == QuadExt(1));
    CHECK(t.middle.radius() == QuadExt(2));
    CHECK(t.large.radius() == QuadExt(4));
  }
  CHECK(build_cluster({{1, 0}, 4}, 1).vertex == kCanonical);
  CHECK_THROWS_AS(build_cluster(kCanonical, 0), std::invalid_argument);
}

TEST_CASE("construct_segments closed forms") {
  const auto segs = construct_segments(build_cluster(kCanonical, 1));
  REQUIRE(segs.size() == 6);
  const QuadExt ob2(Rational(9, 2), 0, Rational(-3, 2), 0);
  const QuadExt ab2(Rational(9, 2), 0, Rational(3, 2), 0);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    CHECK(segs[i].k == static_cast<int>(i) + 1);
    CHECK(segs[i].ao2 == QuadExt(3));
    CHECK(segs[i].ob2 == ob2);
    CHECK(segs[i].ab2 == ab2);
    CHECK(std::abs(to_double(segs[i].ob2) - 1.0704662693192697 * 1.0704662693192697) < 1e-12);
    CHECK(std::abs(to_double(segs[i].ab2) - 2.8025170768881473 * 2.8025170768881473) < 1e-12);
    // Unit directions: parameters are signed lengths.
    CHECK(abs(segs[i].t_a) == QuadExt::sqrt3());
    CHECK(abs(segs[i].t_b) == QuadExt(0, Rational(-1, 2), 0, Rational(1, 2)));
  }
  // Ordered by hexagon, then direction angle.
  CHECK(segs[0].hex == HexIndex{0, 0});
  CHECK(segs[2].hex == HexIndex{1, -1});
  CHECK(segs[4].hex == HexIndex{1, 0});
  for (std::size_t i = 0; i < segs.size(); i += 2) CHECK(angle_less(segs[i].line.dir(), segs[i + 1].line.dir()));
}

TEST_CASE("construct_segments scales with the side") {
  const auto one = construct_segments(build_cluster(kCanonical, 1));
  const auto two = construct_segments(build_cluster(kCanonical, 2));
  const auto third = construct_segments(build_cluster({{2, -1}, 3}, Rational(1, 3)));
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(two[i].ao2 == one[i].ao2 * QuadExt(4));
    CHECK(two[i].ob2 == one[i].ob2 * QuadExt(4));
    CHECK(two[i].ab2 == one[i].ab2 * QuadExt(4));
    CHECK(third[i].ab2 * QuadExt(9) == one[i].ab2);
  }
}

TEST_CASE("different vertices give congruent segments") {
  auto lengths = [](const VertexRef& v) {
    std::vector<std::string> out;
    for (const auto& s : construct_segments(build_cluster(v, 1))) {
      out.push_back(to_decimal(s.ao2, 20) + "|" + to_decimal(s.ob2, 20) + "|" + to_decimal(s.ab2, 20));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto ref = lengths(kCanonical);
  CHECK(lengths({{0, 0}, 1}) == ref);
  CHECK(lengths({{-3, 2}, 5}) == ref);
}

TEST_CASE("verify_phi") {
  const Cluster c = build_cluster(kCanonical, 1);
  const auto segs = construct_segments(c);
  for (const auto& s : segs) {
    const PhiCheck check = verify_phi(s);
    CHECK(check.ratio1_ok);
    CHECK(check.ratio2_ok);
  }

  SUBCASE("B moved to half of |AO|") {
    PhiSegment s = segs.front();
    s.b = c.o + (c.o - s.a) * QuadExt(Rational(1, 2));
    s.ob2 = squared_distance(c.o, s.b);
    s.ab2 = squared_distance(s.a, s.b);
    CHECK(s.ob2 * QuadExt(4) == s.ao2);
    const PhiCheck check = verify_phi(s);
    CHECK_FALSE(check.ratio1_ok);
    CHECK_FALSE(check.ratio2_ok);
  }
  SUBCASE("homogeneous under rational scaling") {
    for (const Rational lambda : {Rational(2), Rational(7, 3), Rational(1, 10)}) {
      PhiSegment s = segs.front();
      const QuadExt l2(Rational(lambda * lambda));
      s.ao2 *= l2, s.ob2 *= l2, s.ab2 *= l2;
      CHECK(verify_phi(s).ok());
      s.ob2 *= QuadExt(2);
      CHECK_FALSE(verify_phi(s).ok());
    }
  }
}

TEST_CASE("make_report") {
  const Cluster c = build_cluster(kCanonical, 1);
  const PhiReport r = make_report(c, 10);
  CHECK(r.phi_exact_ok);
  CHECK(r.equal_lengths_ok);
  CHECK(r.ratio_decimal == "1.6180339887");
  REQUIRE(r.fib_assessment.has_value());
  const Convergent brute = nearest_brute(parse_decimal("1.6180339887"), 40);
  CHECK(r.fib_assessment->n == brute.n);
  CHECK(r.fib_assessment->n > 11);

  SUBCASE("large radius 2s + 1 leaves the field") {
    // B's discriminant becomes 35/4.
    Cluster bad = c;
    bad.triples[1].large = Circle(bad.triples[1].center(), QuadExt(3));
    CHECK_THROWS_AS(make_report(bad, 10), NotRepresentable);
  }
  SUBCASE("perturbed large radius") {
    // 7s/2 keeps B in the field (discriminant 12) but breaks the ratios.
    Cluster bad = c;
    bad.triples[1].large = Circle(bad.triples[1].center(), QuadExt(Rational(7, 2)));
    const PhiReport rb = make_report(bad, 10);
    CHECK_FALSE(rb.equal_lengths_ok);
    CHECK_FALSE(rb.phi_exact_ok);
    CHECK(rb.ratio_decimal.empty());
    CHECK_FALSE(rb.fib_assessment.has_value());
    CHECK(rb.checks[0].ok());
    CHECK_FALSE(rb.checks[2].ok());
  }
  CHECK_THROWS_AS(make_report(c, 0), std::invalid_argument);
}

TEST_CASE("construction invariants at every vertex of a radius-2 patch") {
  for (const Rational side : {Rational(1), Rational(3, 7)}) {
    for (const auto& v : enumerate_vertices(2)) {
      const Cluster c = build_cluster(v, side);
      const PhiReport r = make_report(c);
      CHECK(r.phi_exact_ok);
      CHECK(r.equal_lengths_ok);
      REQUIRE(r.segments.size() == 6);
      for (const auto& s : r.segments) {
        const CircleTriple& t = *std::find_if(c.triples.begin(), c.triples.end(),
                                              [&](const CircleTriple& tr) { return tr.hex == s.hex; });
        CHECK(is_tangent(s.line, t.small));
        CHECK(squared_distance(s.a, t.center()) == t.middle.radius() * t.middle.radius());
        CHECK(squared_distance(s.b, t.center()) == t.large.radius() * t.large.radius());
        CHECK(squared_distance(c.o, t.center()) == t.middle.radius() * t.middle.radius());
        CHECK(sign(s.t_a) == -sign(s.t_b));
        CHECK(s.ao2 == kPhi2 * s.ob2);
        CHECK(s.ab2 == kPhi2 * s.ao2);
        CHECK(s.ab2 == kPhi2 * kPhi2 * s.ob2);
        CHECK(s.ao2 == r.segments.front().ao2);
        CHECK(s.ob2 == r.segments.front().ob2);
      }
    }
  }
}

TEST_CASE("six tangent rays lie on three lines, each tangent to two small circles") {
  for (const auto& v : enumerate_vertices(1)) {
    const Cluster c = build_cluster(v, 1);
    const auto segs = construct_segments(c);
    std::vector<Vector> lines;
    for (const auto& s : segs) {
      const bool known = std::any_of(lines.begin(), lines.end(),
                                     [&](const Vector& d) { return cross(d, s.line.dir()).is_zero(); });
      if (!known) lines.push_back(s.line.dir());
    }
    REQUIRE(lines.size() == 3);
    for (const auto& d : lines) {
      const ParamLine l(c.o, d);
      int tangent_count = 0;
      for (const auto& t : c.triples) tangent_count += is_tangent(l, t.small) ? 1 : 0;
      CHECK(tangent_count == 2);
    }
  }
}

TEST_CASE("exact points match the float oracle") {
  for (const auto& v : enumerate_vertices(1)) {
    const auto segs = construct_segments(build_cluster(v, 1));
    const auto oracle = phihex::testing::float_construction(v.hex.q, v.hex.r, v.corner, 1.0);
    REQUIRE(oracle.size() == 6);
    for (const auto& s : segs) {
      const double ax = to_double(s.a.x), ay = to_double(s.a.y);
      const auto it = std::min_element(oracle.begin(), oracle.end(), [&](const auto& p, const auto& q) {
        return std::hypot(p.a.x - ax, p.a.y - ay) < std::hypot(q.a.x - ax, q.a.y - ay);
      });
      CHECK(std::abs(it->a.x - std::stod(to_decimal(s.a.x, 15))) < 1e-12);
      CHECK(std::abs(it->a.y - std::stod(to_decimal(s.a.y, 15))) < 1e-12);
      CHECK(std::abs(it->b.x - std::stod(to_decimal(s.b.x, 15))) < 1e-12);
      CHECK(std::abs(it->b.y - std::stod(to_decimal(s.b.y, 15))) < 1e-12);
    }
  }
}
