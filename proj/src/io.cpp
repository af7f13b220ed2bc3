#include "arr/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace arr {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kFormat = "disk-arrangement-instance";
constexpr int kVersion = 1;

ordered_json point_json(const Point& p) {
  return ordered_json::array({to_string(p.x), to_string(p.y)});
}

Point parse_point(const ordered_json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw InstanceFormatError(where + ": expected [\"x\", \"y\"] rational strings");
  auto x = parse_rational(j[0].get<std::string>());
  auto y = parse_rational(j[1].get<std::string>());
  if (!x) throw InstanceFormatError(where + ": bad rational '" + j[0].get<std::string>() + "'");
  if (!y) throw InstanceFormatError(where + ": bad rational '" + j[1].get<std::string>() + "'");
  return Point{*x, *y};
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
  ordered_json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  if (!inst.generator.empty()) {
    ordered_json prov;
    prov["generator"] = inst.generator;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : inst.params) params[k] = v;
    prov["params"] = params;
    j["provenance"] = prov;
  }
  if (inst.expected.any()) {
    ordered_json e = ordered_json::object();
    if (inst.expected.delta) e["delta"] = *inst.expected.delta;
    if (inst.expected.mu) e["mu"] = *inst.expected.mu;
    if (inst.expected.diameter) e["diameter"] = *inst.expected.diameter;
    j["expected"] = e;
  }
  if (!inst.markers.empty()) {
    ordered_json ms = ordered_json::array();
    for (const auto& m : inst.markers) {
      ordered_json mj;
      mj["label"] = m.label;
      mj["location"] = point_json(m.location);
      ms.push_back(mj);
    }
    j["markers"] = ms;
  }
  ordered_json disks = ordered_json::array();
  for (const auto& d : inst.disks) {
    ordered_json poly = ordered_json::array();
    for (const auto& p : d.vertices()) poly.push_back(point_json(p));
    disks.push_back(poly);
  }
  j["disks"] = disks;
  return j.dump(2) + "\n";
}

Instance parse_instance(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw InstanceFormatError(std::string("JSON syntax: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != kFormat)
    throw InstanceFormatError("missing or wrong \"format\" field");
  if (j.value("version", -1) != kVersion)
    throw InstanceFormatError("unsupported \"version\"");
  if (!j.contains("disks") || !j["disks"].is_array())
    throw InstanceFormatError("missing \"disks\" array");

  Instance inst;
  if (j.contains("provenance")) {
    const auto& prov = j["provenance"];
    inst.generator = prov.value("generator", "");
    if (prov.contains("params"))
      for (auto it = prov["params"].begin(); it != prov["params"].end(); ++it)
        inst.params[it.key()] = it.value().get<long long>();
  }
  if (j.contains("expected")) {
    const auto& e = j["expected"];
    if (!e.is_object()) throw InstanceFormatError("\"expected\" must be an object");
    if (e.contains("delta")) inst.expected.delta = e["delta"].get<int>();
    if (e.contains("mu")) inst.expected.mu = e["mu"].get<int>();
    if (e.contains("diameter")) inst.expected.diameter = e["diameter"].get<int>();
  }
  if (j.contains("markers")) {
    for (std::size_t i = 0; i < j["markers"].size(); ++i) {
      const auto& mj = j["markers"][i];
      std::string where = "markers[" + std::to_string(i) + "]";
      if (!mj.is_object() || !mj.contains("label") || !mj.contains("location"))
        throw InstanceFormatError(where + ": need label and location");
      inst.markers.push_back(
          {mj["label"].get<std::string>(), parse_point(mj["location"], where)});
    }
  }
  for (std::size_t i = 0; i < j["disks"].size(); ++i) {
    const auto& poly = j["disks"][i];
    std::string where = "disks[" + std::to_string(i) + "]";
    if (!poly.is_array()) throw InstanceFormatError(where + ": expected vertex array");
    std::vector<Point> pts;
    for (std::size_t v = 0; v < poly.size(); ++v)
      pts.push_back(parse_point(poly[v], where + "[" + std::to_string(v) + "]"));
    std::string diag = Disk::check(pts);
    if (!diag.empty()) throw InstanceFormatError(where + ": " + diag);
    inst.disks.emplace_back(static_cast<int>(i), std::move(pts));
  }
  if (inst.disks.empty()) throw InstanceFormatError("instance has no disks");
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceFormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InstanceFormatError("cannot write " + path);
  out << serialize_instance(inst);
}

namespace {

struct ExpectedCompare {
  std::map<std::string, std::pair<int, int>> rows;  // name -> (expected, actual)

  bool all_match() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const auto& r) { return r.second.first == r.second.second; });
  }
};

ExpectedCompare compare_expected(const AnalysisReport& r, const Instance& inst) {
  ExpectedCompare c;
  if (inst.expected.delta) c.rows["delta"] = {*inst.expected.delta, r.delta};
  if (inst.expected.mu) c.rows["mu"] = {*inst.expected.mu, r.mu};
  if (inst.expected.diameter) c.rows["diameter"] = {*inst.expected.diameter, r.diam};
  return c;
}

}  // namespace

std::string serialize_report(const AnalysisReport& report, const Instance& inst) {
  ordered_json j;
  j["format"] = "disk-arrangement-report";
  j["n"] = report.n;
  j["delta"] = report.delta;
  j["delta_matrix"] = report.delta_matrix;
  j["p_max"] = report.p_max;
  j["mu"] = report.mu;
  j["diameter"] = report.diam;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["verdict"] = c.pass ? "PASS" : "FAIL";
    cj["value"] = c.value.str();
    cj["bound"] = c.bound.str();
    cj["slack"] = c.slack().str();
    checks.push_back(cj);
  }
  j["checks"] = checks;
  auto cmp = compare_expected(report, inst);
  if (!cmp.rows.empty()) {
    ordered_json e = ordered_json::object();
    for (const auto& [name, row] : cmp.rows) {
      ordered_json rj;
      rj["expected"] = row.first;
      rj["actual"] = row.second;
      rj["match"] = row.first == row.second;
      e[name] = rj;
    }
    j["expected"] = e;
  }
  j["verdict"] = (report.all_pass() && cmp.all_match()) ? "PASS" : "FAIL";
  j["timings_ms"] = {{"analysis", report.analysis_ms}};
  return j.dump(2) + "\n";
}

bool report_clean(const AnalysisReport& report, const Instance& inst) {
  return report.all_pass() && compare_expected(report, inst).all_match();
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string ply_color(int ply, int p_max) {
  // white at ply 0 shading toward deep blue at p_max
  double t = p_max == 0 ? 0.0 : static_cast<double>(ply) / p_max;
  int r = static_cast<int>(255 - 190 * t);
  int g = static_cast<int>(255 - 140 * t);
  int b = 255;
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

std::string render_svg(const Arrangement& arr, const SvgOptions& opts) {
  // exact bounds, then doubles only for output
  Rational minx = arr.vertices()[0].location.x, maxx = minx;
  Rational miny = arr.vertices()[0].location.y, maxy = miny;
  for (const auto& v : arr.vertices()) {
    minx = std::min(minx, v.location.x);
    maxx = std::max(maxx, v.location.x);
    miny = std::min(miny, v.location.y);
    maxy = std::max(maxy, v.location.y);
  }
  double x0 = to_double_approx(minx), x1 = to_double_approx(maxx);
  double y0 = to_double_approx(miny), y1 = to_double_approx(maxy);
  double w = x1 - x0, h = y1 - y0;
  double pad = 0.04 * std::max(w, h);
  x0 -= pad; y0 -= pad; w += 2 * pad; h += 2 * pad;
  double scale = opts.width / w;
  int height = static_cast<int>(h * scale + 0.5);
  auto X = [&](const Rational& x) { return (to_double_approx(x) - x0) * scale; };
  auto Y = [&](const Rational& y) { return (y0 + h - to_double_approx(y)) * scale; };

  int p_max = 0;
  for (const auto& f : arr.faces()) p_max = std::max(p_max, f.ply());
  std::vector<int> maximal = maximal_faces(arr);
  auto is_maximal = [&](int f) {
    return std::binary_search(maximal.begin(), maximal.end(), f);
  };

  auto cycle_path = [&](int he0) {
    std::string d;
    int he = he0;
    bool first = true;
    do {
      const Point& p = arr.vertices()[arr.half_edges()[he].origin].location;
      d += first ? "M " : "L ";
      d += fmt(X(p.x)) + " " + fmt(Y(p.y)) + " ";
      first = false;
      he = arr.half_edges()[he].next;
    } while (he != he0);
    d += "Z";
    return d;
  };

  // paint order: big outer cycles first so nested faces draw on top
  auto cycle_area_2 = [&](int he0) {
    Rational a = 0;
    int he = he0;
    do {
      const Point& p = arr.vertices()[arr.half_edges()[he].origin].location;
      const Point& q = arr.vertices()[arr.half_edges()[arr.half_edges()[he].twin].origin].location;
      a += p.x * q.y - q.x * p.y;
      he = arr.half_edges()[he].next;
    } while (he != he0);
    return a;
  };
  std::vector<int> order;
  for (const auto& f : arr.faces())
    if (!f.unbounded) order.push_back(f.id);
  std::vector<Rational> area(arr.num_faces());
  for (int f : order) area[f] = cycle_area_2(arr.face(f).outer_cycle);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return area[a] > area[b]; });

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << opts.width << " "
      << height << "\">\n";
  // unbounded face as a background path covering the viewport
  svg << "  <path d=\"M 0 0 L " << opts.width << " 0 L " << opts.width << " "
      << height << " L 0 " << height << " Z\" fill=\"" << ply_color(0, p_max)
      << "\"/>\n";
  for (int fid : order) {
    const Face& f = arr.face(fid);
    std::string d = cycle_path(f.outer_cycle);
    for (int hole : f.hole_cycles) d += " " + cycle_path(hole);
    svg << "  <path d=\"" << d << "\" fill=\"" << ply_color(f.ply(), p_max)
        << "\" fill-rule=\"evenodd\"";
    if (opts.outline_maximal && is_maximal(fid))
      svg << " stroke=\"#c03020\" stroke-width=\"2\"";
    else
      svg << " stroke=\"#404040\" stroke-width=\"0.5\"";
    svg << "/>\n";
  }
  if (opts.dual_overlay) {
    auto node = [&](int fid) -> std::pair<double, double> {
      if (arr.face(fid).unbounded) return {8.0, 8.0};
      const Point& p = arr.face(fid).representative;
      return {X(p.x), Y(p.y)};
    };
    for (std::size_t f = 0; f < arr.num_faces(); ++f)
      for (int g : arr.neighbor_faces(static_cast<int>(f)))
        if (static_cast<int>(f) < g) {
          auto [ax, ay] = node(static_cast<int>(f));
          auto [bx, by] = node(g);
          svg << "  <line x1=\"" << fmt(ax) << "\" y1=\"" << fmt(ay)
              << "\" x2=\"" << fmt(bx) << "\" y2=\"" << fmt(by)
              << "\" stroke=\"#208040\" stroke-width=\"1\"/>\n";
        }
    for (std::size_t f = 0; f < arr.num_faces(); ++f) {
      auto [cx, cy] = node(static_cast<int>(f));
      svg << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy)
          << "\" r=\"3\" fill=\"#208040\"/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace arr
