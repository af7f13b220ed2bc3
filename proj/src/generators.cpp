#include "arr/generators.hpp"

#include "arr/general_position.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

namespace arr {

namespace {

Point pt(const Rational& x, const Rational& y) { return Point{x, y}; }

Rational half() { return Rational(1, 2); }

// Thickens an open axis-aligned polyline (consecutive segments perpendicular)
// into a simple CCW polygon of half-width h with flush end caps.
std::vector<Point> thicken(const std::vector<Point>& line, const Rational& h) {
  const std::size_t m = line.size();
  if (m < 2) throw std::invalid_argument("thicken: need at least 2 points");

  auto normal = [&](std::size_t seg) {
    Point d = line[seg + 1] - line[seg];
    // left normal of an axis-aligned direction, scaled to length h
    Rational len = d.x != 0 ? (d.x > 0 ? d.x : -d.x) : (d.y > 0 ? d.y : -d.y);
    return pt(-d.y / len * h, d.x / len * h);
  };

  std::vector<Point> out;
  // right side, start to end
  out.push_back(line[0] - normal(0));
  for (std::size_t i = 1; i + 1 < m; ++i)
    out.push_back(line[i] - (normal(i - 1) + normal(i)));
  out.push_back(line[m - 1] - normal(m - 2));
  // left side, end back to start
  out.push_back(line[m - 1] + normal(m - 2));
  for (std::size_t i = m - 2; i >= 1; --i)
    out.push_back(line[i] + (normal(i - 1) + normal(i)));
  out.push_back(line[0] + normal(0));
  return out;
}

std::vector<Point> shifted(std::vector<Point> pts, const Point& by) {
  for (auto& p : pts) p = p + by;
  return pts;
}

}  // namespace

Instance spiral_pair(int delta) {
  if (delta < 2) throw std::invalid_argument("spiral_pair: delta must be >= 2");
  const bool even = delta % 2 == 0;
  const int k = (delta + 1) / 2;

  // Red winds counterclockwise: right wall x = 12m+6, top y = 12m+8,
  // left x = -(12m+12), bottom y = -(12m+14).
  std::vector<Point> red;
  red.push_back(pt(6, -2));
  for (int m = 0; m < k; ++m) {
    red.push_back(pt(12 * m + 6, 12 * m + 8));
    red.push_back(pt(-(12 * m + 12), 12 * m + 8));
    if (!even && m == k - 1) break;
    red.push_back(pt(-(12 * m + 12), -(12 * m + 14)));
    if (m == k - 1)
      red.push_back(pt(12 * k + 4, -(12 * m + 14)));
    else
      red.push_back(pt(12 * (m + 1) + 6, -(12 * m + 14)));
  }

  // Blue winds clockwise, offset by (1/2, 1/2): left wall x = -(12l+6),
  // top y = 12l+10, right x = 12l+12, bottom y = -(12l+16).
  std::vector<Point> blue;
  blue.push_back(pt(-6, -2));
  for (int l = 0; l < k; ++l) {
    blue.push_back(pt(-(12 * l + 6), 12 * l + 10));
    blue.push_back(pt(12 * l + 12, 12 * l + 10));
    if (!even && l == k - 1) break;
    blue.push_back(pt(12 * l + 12, -(12 * l + 16)));
    blue.push_back(pt(-(12 * (l + 1) + 6), -(12 * l + 16)));
  }

  Instance inst;
  inst.disks.emplace_back(0, thicken(red, half()));
  inst.disks.emplace_back(1, thicken(shifted(std::move(blue), pt(half(), half())), half()));
  inst.generator = "spiral";
  inst.params["delta"] = delta;
  inst.expected.delta = delta;
  inst.expected.mu = delta;
  inst.expected.diameter = 2 * delta;
  inst.markers.push_back({"red_inner", pt(6, 0)});
  inst.markers.push_back({"blue_inner", pt(Rational(-11, 2), 0)});
  if (even) {
    inst.markers.push_back({"red_outer", pt(12 * k + 3, -(12 * k + 2))});
    inst.markers.push_back(
        {"blue_outer", pt(-(12 * k + 4), Rational(-(24 * k + 7), 2))});
  } else {
    inst.markers.push_back({"red_outer", pt(-(12 * k) + 1, 12 * k - 4)});
    inst.markers.push_back({"blue_outer", pt(0, Rational(24 * k - 3, 2))});
  }
  return inst;
}

Instance grid_instance(int n, int k) {
  if (n < 2 || k < 1) throw std::invalid_argument("grid_instance: need n >= 2, k >= 1");

  Instance inst;
  const Rational q(1, 2 * (k + 1));      // body inset within the unit cell
  const Rational w(1, 8 * (k + 1));      // strain half-width
  for (int i = 0; i < n; ++i) {
    const Rational s(i);
    const Rational del(i + 1, 100);      // per-disk overhang past the grid
    auto c = [&](int t) { return s + Rational(t + 1, k + 1); };
    const Rational lo = s + q, hi = s + 1 - q;
    const Rational west = -del, east = Rational(n) + del;

    std::vector<Point> v;
    // bottom edge, west to east, with downward strain stubs
    v.push_back(pt(lo, lo));
    for (int t = 0; t < k; ++t) {
      v.push_back(pt(c(t) - w, lo));
      v.push_back(pt(c(t) - w, west));
      v.push_back(pt(c(t) + w, west));
      v.push_back(pt(c(t) + w, lo));
    }
    // right edge, south to north, with eastward stubs
    v.push_back(pt(hi, lo));
    for (int t = 0; t < k; ++t) {
      v.push_back(pt(hi, c(t) - w));
      v.push_back(pt(east, c(t) - w));
      v.push_back(pt(east, c(t) + w));
      v.push_back(pt(hi, c(t) + w));
    }
    // top edge, east to west, with upward stubs
    v.push_back(pt(hi, hi));
    for (int t = k - 1; t >= 0; --t) {
      v.push_back(pt(c(t) + w, hi));
      v.push_back(pt(c(t) + w, Rational(n) + del));
      v.push_back(pt(c(t) - w, Rational(n) + del));
      v.push_back(pt(c(t) - w, hi));
    }
    // left edge, north to south, with westward stubs
    v.push_back(pt(lo, hi));
    for (int t = k - 1; t >= 0; --t) {
      v.push_back(pt(lo, c(t) + w));
      v.push_back(pt(west, c(t) + w));
      v.push_back(pt(west, c(t) - w));
      v.push_back(pt(lo, c(t) - w));
    }
    inst.disks.emplace_back(i, std::move(v));
  }

  inst.generator = "grid";
  inst.params["n"] = n;
  inst.params["k"] = k;
  inst.expected.delta = 2 * k * k;
  inst.expected.mu = n * (n - 1) * k * k;
  return inst;
}

Instance comb_pair(int t) {
  if (t < 1) throw std::invalid_argument("comb_pair: t must be >= 1");

  // Comb 0: spine [0, 2t+1] x [0, 2] with t+1 teeth up to y = 8.
  std::vector<Point> a;
  a.push_back(pt(0, 0));
  a.push_back(pt(2 * t + 1, 0));
  a.push_back(pt(2 * t + 1, 8));
  a.push_back(pt(2 * t, 8));
  for (int i = t; i >= 1; --i) {
    a.push_back(pt(2 * i, 2));
    a.push_back(pt(2 * i - 1, 2));
    a.push_back(pt(2 * i - 1, 8));
    a.push_back(pt(2 * i - 2, 8));
  }
  // chain ends at (0, 8); closes back to (0, 0)

  // Comb 1: spine [-1/2, 2t+3/2] x [1/2, 5/2] with t teeth in comb 0's gaps
  // rising to y = 17/2.
  std::vector<Point> b;
  b.push_back(pt(Rational(-1, 2), half()));
  b.push_back(pt(Rational(4 * t + 3, 2), half()));
  b.push_back(pt(Rational(4 * t + 3, 2), Rational(5, 2)));
  for (int i = t - 1; i >= 0; --i) {
    b.push_back(pt(Rational(16 * i + 15, 8), Rational(5, 2)));
    b.push_back(pt(Rational(16 * i + 15, 8), Rational(17, 2)));
    b.push_back(pt(Rational(16 * i + 9, 8), Rational(17, 2)));
    b.push_back(pt(Rational(16 * i + 9, 8), Rational(5, 2)));
  }
  b.push_back(pt(Rational(-1, 2), Rational(5, 2)));

  Instance inst;
  inst.disks.emplace_back(0, std::move(a));
  inst.disks.emplace_back(1, std::move(b));
  inst.generator = "comb";
  inst.params["t"] = t;
  inst.expected.delta = 1;
  inst.expected.mu = 1;
  inst.expected.diameter = 2;
  return inst;
}

Instance random_instance(int n, int max_vertices, std::uint64_t seed) {
  if (n < 1 || max_vertices < 3)
    throw std::invalid_argument("random_instance: need n >= 1, max_vertices >= 3");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> center_coord(-15000, 15000);
  std::uniform_int_distribution<long long> offset_coord(-12000, 12000);
  std::uniform_int_distribution<int> vertex_count(3, max_vertices);

  // angle-around-origin comparator for nonzero integer offsets
  auto angle_less = [](const std::pair<long long, long long>& u,
                       const std::pair<long long, long long>& v) {
    auto hemi = [](const std::pair<long long, long long>& p) {
      return (p.second > 0 || (p.second == 0 && p.first > 0)) ? 0 : 1;
    };
    int hu = hemi(u), hv = hemi(v);
    if (hu != hv) return hu < hv;
    return u.first * v.second - u.second * v.first > 0;
  };

  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Disk> disks;
    bool bad = false;
    for (int i = 0; i < n && !bad; ++i) {
      long long cx = i == 0 ? 0 : center_coord(rng);
      long long cy = i == 0 ? 0 : center_coord(rng);
      int m = vertex_count(rng);
      std::vector<std::pair<long long, long long>> offs;
      while (static_cast<int>(offs.size()) < m) {
        long long dx = offset_coord(rng), dy = offset_coord(rng);
        if (dx * dx + dy * dy < 4000LL * 4000LL) continue;  // keep away from center
        offs.emplace_back(dx, dy);
      }
      std::sort(offs.begin(), offs.end(), angle_less);
      // drop repeated angles, keeping the first representative
      offs.erase(std::unique(offs.begin(), offs.end(),
                             [&](const auto& u, const auto& v) {
                               return !angle_less(u, v) && !angle_less(v, u);
                             }),
                 offs.end());
      if (static_cast<int>(offs.size()) < 3) { bad = true; break; }
      // simplicity of the angular chain needs every consecutive gap < pi
      for (std::size_t j = 0; j < offs.size(); ++j) {
        const auto& u = offs[j];
        const auto& v = offs[(j + 1) % offs.size()];
        if (u.first * v.second - u.second * v.first <= 0) { bad = true; break; }
      }
      if (bad) break;
      std::vector<Point> v;
      v.reserve(offs.size());
      for (const auto& o : offs)
        v.push_back(pt(Rational(cx + o.first), Rational(cy + o.second)));
      try {
        disks.emplace_back(i, std::move(v));
      } catch (const std::invalid_argument&) {
        bad = true;
      }
    }
    if (bad) continue;
    if (!validate_general_position(disks).ok()) continue;

    Instance inst;
    inst.disks = std::move(disks);
    inst.generator = "random";
    inst.params["n"] = n;
    inst.params["max_vertices"] = max_vertices;
    inst.params["seed"] = static_cast<long long>(seed);
    return inst;
  }
  throw std::runtime_error("random_instance: no valid configuration after 200 attempts");
}

}  // namespace arr
