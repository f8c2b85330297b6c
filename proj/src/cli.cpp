#include "phihex/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <thread>

#include "phihex/construction.hpp"
#include "phihex/fibonacci.hpp"
#include "phihex/render.hpp"
#include "phihex/serialize.hpp"

namespace phihex::cli {
namespace {

struct Config {
  std::string vertex = "0,0,0";
  std::string side = "1";
  int digits = 10;
  bool json = false;
  int radius = 0;
  int max_n = 0;
  std::string ratio;
  std::string rounding = "truncate";
  std::string out_path;
  int render_digits = 12;
  bool no_labels = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_side(const std::string& text) {
  Rational side = parse_rational(text);
  if (side <= 0) throw UsageError("--side must be positive, got '" + text + "'");
  return side;
}

Rounding parse_rounding(const std::string& text) {
  return text == "half-even" ? Rounding::kHalfEven : Rounding::kTruncate;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const VertexRef v = parse_vertex(cfg.vertex);
  const Cluster cluster = build_cluster(v, parse_side(cfg.side));
  const PhiReport report = make_report(cluster, cfg.digits);
  const bool ok = report.phi_exact_ok && report.equal_lengths_ok;

  if (cfg.json) {
    out << to_json(report).dump(2) << "\n";
    return ok ? kOk : kVerificationFailed;
  }

  out << "vertex " << to_string(report.vertex) << " (side " << to_fraction_string(report.side) << "), O = ("
      << to_decimal(cluster.o.x, cfg.digits) << ", " << to_decimal(cluster.o.y, cfg.digits) << ")\n";
  out << "k\thex\t|AO|^2\t|OB|^2\t|AB|^2\tAB/AO\tAO/OB\n";
  for (std::size_t i = 0; i < report.segments.size(); ++i) {
    const PhiSegment& s = report.segments[i];
    const PhiCheck& c = report.checks[i];
    out << s.k << '\t' << to_string(s.hex) << '\t' << to_decimal(s.ao2, cfg.digits) << '\t'
        << to_decimal(s.ob2, cfg.digits) << '\t' << to_decimal(s.ab2, cfg.digits) << '\t'
        << (c.ratio1_ok ? "PHI" : "--") << '\t' << (c.ratio2_ok ? "PHI" : "--") << "\n";
  }
  for (std::size_t i = 0; i < report.segments.size(); ++i) {
    if (!report.checks[i].ratio1_ok) out << "segment " << report.segments[i].k << ": AB^2 != PHI^2 * AO^2\n";
    if (!report.checks[i].ratio2_ok) out << "segment " << report.segments[i].k << ": AO^2 != PHI^2 * OB^2\n";
  }
  out << "ratio = " << (report.phi_exact_ok ? report.ratio_decimal : "n/a") << "\n";
  out << "PHI-EXACT: " << (report.phi_exact_ok ? "PASS" : "FAIL") << "\n";
  out << "EQUAL-LENGTHS: " << (report.equal_lengths_ok ? "PASS" : "FAIL") << "\n";
  if (report.fib_assessment) {
    const Convergent& f = *report.fib_assessment;
    out << "fibonacci: nearest convergent n=" << f.n << " (" << f.fn << "/" << f.fn_1 << " = "
        << to_decimal(QuadExt(f.ratio), cfg.digits) << "), variance " << variance(f.n, cfg.digits) << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_scan(const Config& cfg, std::ostream& out) {
  const Rational side = parse_side(cfg.side);
  const std::vector<VertexRef> vertices = enumerate_vertices(cfg.radius);

  // Reports are independent; results are collected in vertex order.
  std::vector<PhiReport> reports(vertices.size());
  const std::size_t workers = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < vertices.size(); i += workers) {
        reports[i] = make_report(build_cluster(vertices[i], side), cfg.digits);
      }
    }));
  }
  for (auto& j : jobs) j.get();

  std::size_t passed = 0;
  Json rows = Json::array();
  for (const auto& r : reports) {
    const bool ok = r.phi_exact_ok && r.equal_lengths_ok;
    passed += ok ? 1 : 0;
    if (cfg.json) {
      rows.push_back(Json{{"vertex", to_string(r.vertex)},
                          {"phi_exact_ok", r.phi_exact_ok},
                          {"equal_lengths_ok", r.equal_lengths_ok},
                          {"ratio_decimal", r.ratio_decimal}});
    } else {
      out << to_string(r.vertex) << '\t' << (ok ? "PASS" : "FAIL") << "\n";
    }
  }
  const bool all_ok = passed == reports.size();
  if (cfg.json) {
    out << Json{{"radius", cfg.radius},
                {"side", to_fraction_string(side)},
                {"vertices", std::move(rows)},
                {"total", reports.size()},
                {"passed", passed},
                {"all_ok", all_ok}}
               .dump(2)
        << "\n";
  } else {
    out << "scanned " << reports.size() << " vertices (radius " << cfg.radius << ", side "
        << to_fraction_string(side) << "): " << passed << " passed, " << reports.size() - passed << " failed\n";
  }
  return all_ok ? kOk : kVerificationFailed;
}

int cmd_fib(const Config& cfg, std::ostream& out) {
  const Rounding mode = parse_rounding(cfg.rounding);
  if (cfg.json) {
    Json rows = Json::array();
    for (int n = 2; n <= cfg.max_n; ++n) rows.push_back(convergent_json(convergent(n), cfg.digits, mode));
    out << Json{{"rounding", cfg.rounding},
                {"digits", cfg.digits},
                {"note", kDecimalSeparatorNote},
                {"rows", std::move(rows)}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "n\tF_n\tF_n-1\tratio\tvariance\n";
  for (int n = 2; n <= cfg.max_n; ++n) {
    const Convergent c = convergent(n);
    out << n << '\t' << c.fn << '\t' << c.fn_1 << '\t' << to_decimal(QuadExt(c.ratio), cfg.digits, mode) << '\t'
        << variance(n, cfg.digits, mode) << "\n";
  }
  return kOk;
}

int cmd_assess(const Config& cfg, std::ostream& out) {
  const Rational v = parse_decimal(cfg.ratio);
  if (v <= 0) throw UsageError("--ratio must be positive");
  const Convergent c = assess_nearest(v);
  const QuadExt distance = abs(QuadExt(Rational(c.ratio - v)));
  if (cfg.json) {
    Json j = convergent_json(c, cfg.digits, Rounding::kHalfEven);
    j["input"] = cfg.ratio;
    j["distance"] = to_decimal(distance, cfg.digits);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "n = " << c.n << "\n";
  out << "ratio = " << c.fn << "/" << c.fn_1 << " = " << to_decimal(QuadExt(c.ratio), cfg.digits) << "\n";
  out << "distance = " << to_decimal(distance, cfg.digits) << "\n";
  out << "variance = " << variance(c.n, cfg.digits) << "\n";
  return kOk;
}

int cmd_render(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Cluster cluster = build_cluster(parse_vertex(cfg.vertex), parse_side(cfg.side));
  const PhiReport report = make_report(cluster);
  RenderOptions opts;
  opts.frac_digits = cfg.render_digits;
  opts.show_labels = !cfg.no_labels;
  const std::string svg = render_svg(report, cluster, opts);

  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file || !(file << svg) || !file.flush()) {
    err << "error: cannot write '" << cfg.out_path << "'\n";
    return kIoError;
  }
  out << "wrote " << cfg.out_path << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact golden-section verification on the hexagonal tiling", "phihex"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Verify the six golden-section segments at one vertex");
  verify->add_option("--vertex", cfg.vertex, "Vertex as q,r,c")->capture_default_str();
  verify->add_option("--side", cfg.side, "Hexagon side as P/Q")->capture_default_str();
  verify->add_option("--digits", cfg.digits, "Fractional digits")->check(CLI::Range(1, 1000))->capture_default_str();
  verify->add_flag("--json", cfg.json, "Emit the JSON report");

  auto* scan = app.add_subcommand("scan", "Verify every vertex of a hexagonal patch");
  scan->add_option("--radius", cfg.radius, "Patch radius in hexagons")->required()->check(CLI::NonNegativeNumber);
  scan->add_option("--side", cfg.side, "Hexagon side as P/Q")->capture_default_str();
  scan->add_flag("--json", cfg.json, "Emit JSON");

  auto* fib = app.add_subcommand("fib", "Fibonacci convergent table");
  fib->add_option("--max", cfg.max_n, "Largest n")->required()->check(CLI::Range(2, 100000));
  fib->add_option("--digits", cfg.digits, "Fractional digits")->check(CLI::Range(1, 1000))->capture_default_str();
  fib->add_option("--rounding", cfg.rounding, "truncate or half-even")
      ->check(CLI::IsMember({"truncate", "half-even"}))
      ->capture_default_str();
  fib->add_flag("--json", cfg.json, "Emit JSON");

  auto* assess = app.add_subcommand("assess", "Nearest Fibonacci convergent to a decimal ratio");
  assess->add_option("--ratio", cfg.ratio, "Decimal value, '.' or ',' separator")->required();
  assess->add_option("--digits", cfg.digits, "Fractional digits")->check(CLI::Range(1, 1000))->capture_default_str();
  assess->add_flag("--json", cfg.json, "Emit JSON");

  auto* render = app.add_subcommand("render", "Write the cluster drawing as SVG");
  render->add_option("--out", cfg.out_path, "Output file")->required();
  render->add_option("--vertex", cfg.vertex, "Vertex as q,r,c")->capture_default_str();
  render->add_option("--side", cfg.side, "Hexagon side as P/Q")->capture_default_str();
  render->add_option("--digits", cfg.render_digits, "Coordinate digits")->check(CLI::Range(1, 100))->capture_default_str();
  render->add_flag("--no-labels", cfg.no_labels, "Omit text labels");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (scan->parsed()) return cmd_scan(cfg, out);
    if (fib->parsed()) return cmd_fib(cfg, out);
    if (assess->parsed()) return cmd_assess(cfg, out);
    return cmd_render(cfg, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace phihex::cli
