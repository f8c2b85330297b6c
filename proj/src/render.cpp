#include "phihex/render.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace phihex {
namespace {

class SvgWriter {
 public:
  SvgWriter(std::ostringstream& out, int digits) : out_(out), digits_(digits) {}

  std::string num(const QuadExt& v) const { return to_decimal(v, digits_); }
  std::string pt(const Point& p) const { return num(p.x) + "," + num(p.y); }

  void circle(const Circle& c) {
    out_ << "    <circle cx=\"" << num(c.center().x) << "\" cy=\"" << num(c.center().y) << "\" r=\""
         << num(c.radius()) << "\"/>\n";
  }

  void line(const Point& p, const Point& q, const char* cls) {
    out_ << "    <line class=\"" << cls << "\" x1=\"" << num(p.x) << "\" y1=\"" << num(p.y) << "\" x2=\""
         << num(q.x) << "\" y2=\"" << num(q.y) << "\"/>\n";
  }

  void marker(const Point& p, const QuadExt& half) {
    const QuadExt size = half * 2;
    out_ << "    <rect x=\"" << num(p.x - half) << "\" y=\"" << num(p.y - half) << "\" width=\"" << num(size)
         << "\" height=\"" << num(size) << "\"/>\n";
  }

  // Labels sit outside the flipped group, so y is negated here.
  void label(const Point& p, const std::string& text) {
    out_ << "    <text x=\"" << num(p.x) << "\" y=\"" << num(-p.y) << "\">" << text << "</text>\n";
  }

  void open_layer(const char* id, const QuadExt& stroke_width, const char* stroke) {
    out_ << "  <g id=\"" << id << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
         << num(stroke_width) << "\">\n";
  }
  void close_layer() { out_ << "  </g>\n"; }

 private:
  std::ostringstream& out_;
  int digits_;
};

const QuadExt& min_of(const QuadExt& x, const QuadExt& y) { return compare(x, y) <= 0 ? x : y; }
const QuadExt& max_of(const QuadExt& x, const QuadExt& y) { return compare(x, y) >= 0 ? x : y; }

// Rational approximation of sqrt(x) for x >= 0, accurate to about 2^-32.
Rational approx_sqrt(const QuadExt& x) {
  constexpr unsigned kBits = 32;
  const Rational lo = enclose(x, 64).lo;
  if (lo <= 0) return 0;
  const BigInt scaled = floor_rational(lo * Rational(BigInt(1) << (2 * kBits)));
  return Rational(boost::multiprecision::sqrt(scaled), BigInt(1) << kBits);
}

struct TangentLine {
  Point o;
  Vector dir;
  std::vector<Point> points;
};

// Groups the segments' endpoints by the line they lie on.
std::vector<TangentLine> tangent_lines(const PhiReport& report, const Point& o) {
  std::vector<TangentLine> lines;
  for (const auto& seg : report.segments) {
    TangentLine* found = nullptr;
    for (auto& l : lines) {
      if (cross(l.dir, seg.line.dir()).is_zero()) found = &l;
    }
    if (found == nullptr) found = &lines.emplace_back(TangentLine{o, seg.line.dir(), {}});
    found->points.push_back(seg.a);
    found->points.push_back(seg.b);
  }
  return lines;
}

}  // namespace

std::string render_svg(const PhiReport& report, const Cluster& cluster, const RenderOptions& opts) {
  if (opts.frac_digits < 1) throw std::invalid_argument("render_svg: frac_digits must be >= 1");
  if (opts.canvas_scale <= 0) throw std::invalid_argument("render_svg: canvas_scale must be positive");

  const QuadExt side(cluster.side);

  // Bounding box of the large circles, widened by 5% on every side.
  QuadExt min_x, max_x, min_y, max_y;
  bool first = true;
  for (const auto& t : cluster.triples) {
    const Circle& c = t.large;
    QuadExt x0 = c.center().x - c.radius(), x1 = c.center().x + c.radius();
    QuadExt y0 = c.center().y - c.radius(), y1 = c.center().y + c.radius();
    if (first) {
      min_x = x0, max_x = x1, min_y = y0, max_y = y1;
      first = false;
    } else {
      min_x = min_of(min_x, x0), max_x = max_of(max_x, x1);
      min_y = min_of(min_y, y0), max_y = max_of(max_y, y1);
    }
  }
  const QuadExt margin_x = (max_x - min_x) * QuadExt(Rational(1, 20));
  const QuadExt margin_y = (max_y - min_y) * QuadExt(Rational(1, 20));
  min_x -= margin_x, max_x += margin_x, min_y -= margin_y, max_y += margin_y;
  const QuadExt width = max_x - min_x;
  const QuadExt height = max_y - min_y;
  const QuadExt scale(opts.canvas_scale);

  std::ostringstream out;
  SvgWriter w(out, opts.frac_digits);

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w.num(width * scale)
      << "\" height=\"" << w.num(height * scale) << "\" viewBox=\"" << w.num(min_x) << " " << w.num(-max_y) << " "
      << w.num(width) << " " << w.num(height) << "\">\n";
  out << "  <title>Three-hexagon cluster at vertex " << to_string(cluster.vertex) << "</title>\n";
  out << "  <g transform=\"scale(1,-1)\">\n";

  w.open_layer("hexagons", side * QuadExt(opts.hexagon_stroke), "#444444");
  for (const auto& t : cluster.triples) {
    out << "    <polygon points=\"";
    for (int k = 0; k < 6; ++k) {
      if (k != 0) out << ' ';
      out << w.pt(vertex_point({t.hex, k}, cluster.side));
    }
    out << "\"/>\n";
  }
  w.close_layer();

  const QuadExt circle_stroke = side * QuadExt(opts.circle_stroke);
  w.open_layer("small-circles", circle_stroke, "#1f77b4");
  for (const auto& t : cluster.triples) w.circle(t.small);
  w.close_layer();
  w.open_layer("middle-circles", circle_stroke, "#2ca02c");
  for (const auto& t : cluster.triples) w.circle(t.middle);
  w.close_layer();
  w.open_layer("large-circles", circle_stroke, "#9467bd");
  for (const auto& t : cluster.triples) w.circle(t.large);
  w.close_layer();

  w.open_layer("tangents", side * QuadExt(opts.tangent_stroke), "#7f7f7f");
  for (const auto& l : tangent_lines(report, cluster.o)) {
    const Point* lo = &l.points.front();
    const Point* hi = &l.points.front();
    for (const auto& p : l.points) {
      if (compare(dot(p - l.o, l.dir), dot(*lo - l.o, l.dir)) < 0) lo = &p;
      if (compare(dot(p - l.o, l.dir), dot(*hi - l.o, l.dir)) > 0) hi = &p;
    }
    w.line(*lo, *hi, "tangent");
  }
  w.close_layer();

  w.open_layer("segments", side * QuadExt(opts.segment_stroke), "#d62728");
  for (const auto& seg : report.segments) w.line(seg.a, seg.b, "segment");
  w.close_layer();

  out << "  <g id=\"markers\" fill=\"#000000\" stroke=\"none\">\n";
  const QuadExt half = side * QuadExt(Rational(1, 40));
  w.marker(cluster.o, half);
  for (const auto& seg : report.segments) w.marker(seg.a, half);
  for (const auto& seg : report.segments) w.marker(seg.b, half);
  out << "  </g>\n";
  out << "  </g>\n";

  if (opts.show_labels) {
    const QuadExt offset(Rational(approx_sqrt(width * width + height * height) * Rational(3, 100)));
    out << "  <g id=\"labels\" font-family=\"sans-serif\" font-size=\"" << w.num(side * QuadExt(Rational(1, 5)))
        << "\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
    // O's label goes toward the first hexagon's center, clear of all tangents.
    const Vector into_first = (cluster.triples[0].center() - cluster.o) * QuadExt(Rational(1) / cluster.side);
    w.label(cluster.o + into_first * offset, "O");
    for (const auto& seg : report.segments) {
      const Vector unit = seg.line.dir();
      w.label(seg.a + unit * QuadExt(sign(seg.t_a)) * offset, "A" + std::to_string(seg.k));
      w.label(seg.b + unit * QuadExt(sign(seg.t_b)) * offset, "B" + std::to_string(seg.k));
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace phihex
