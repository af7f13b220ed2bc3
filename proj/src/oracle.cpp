#include "arr/oracle.hpp"

#include "arr/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <vector>

namespace arr {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// One raster attempt at a fixed resolution. Throws Degenerate when a grid
// line meets the input non-transversally; the caller refines and retries.
struct Degenerate {
  std::string what;
};

struct Raster {
  int R;
  Rational x0, y0, cell_w, cell_h;
  std::vector<Rational> cx, cy;       // cell center coordinates
  // crossing counts: hcost[j][i] between (i,j) and (i+1,j); vcost likewise
  std::vector<std::vector<int>> hcost, vcost;
  std::vector<int> region_of;         // compacted region id per cell
  int num_regions = 0;

  int cell(int i, int j) const { return j * R + i; }
};

Raster build_raster(const Arrangement& arr, int R, int level) {
  Raster g;
  g.R = R;

  Rational minx = arr.vertices()[0].location.x, maxx = minx;
  Rational miny = arr.vertices()[0].location.y, maxy = miny;
  for (const auto& v : arr.vertices()) {
    minx = std::min(minx, v.location.x);
    maxx = std::max(maxx, v.location.x);
    miny = std::min(miny, v.location.y);
    maxy = std::max(maxy, v.location.y);
  }
  Rational span = std::max(maxx - minx, maxy - miny);
  // level-dependent, deliberately asymmetric margins so grid lines never stay
  // aligned with input symmetries across refinements
  g.x0 = minx - span * Rational(9 + 2 * level, 64);
  g.y0 = miny - span * Rational(10 + 3 * level, 71);
  Rational W = maxx + span * Rational(12 + 5 * level, 97) - g.x0;
  Rational H = maxy + span * Rational(14 + 7 * level, 113) - g.y0;
  g.cell_w = W / R;
  g.cell_h = H / R;
  for (int i = 0; i < R; ++i) {
    g.cx.push_back(g.x0 + g.cell_w * Rational(2 * i + 1, 2));
    g.cy.push_back(g.y0 + g.cell_h * Rational(2 * i + 1, 2));
  }

  std::vector<Segment> edges;
  for (const auto& d : arr.disks())
    for (std::size_t e = 0; e < d.size(); ++e) edges.push_back(d.edge(e));

  // crossings of every boundary edge with each horizontal line of centers
  g.hcost.assign(R, std::vector<int>(R - 1, 0));
  for (int j = 0; j < R; ++j) {
    const Rational& y = g.cy[j];
    std::vector<Rational> xs;
    for (const auto& e : edges) {
      if (e.a.y == y || e.b.y == y) throw Degenerate{"edge endpoint on a grid row"};
      if ((e.a.y < y) != (e.b.y < y))
        xs.push_back(e.a.x + (y - e.a.y) * (e.b.x - e.a.x) / (e.b.y - e.a.y));
    }
    std::sort(xs.begin(), xs.end());
    std::size_t p = 0;
    for (int i = 0; i + 1 < R; ++i) {
      while (p < xs.size() && xs[p] <= g.cx[i]) {
        if (xs[p] == g.cx[i]) throw Degenerate{"boundary through a cell center"};
        ++p;
      }
      std::size_t q = p;
      while (q < xs.size() && xs[q] < g.cx[i + 1]) ++q;
      if (q < xs.size() && xs[q] == g.cx[i + 1])
        throw Degenerate{"boundary through a cell center"};
      g.hcost[j][i] = static_cast<int>(q - p);
      p = q;
    }
  }
  // and with each vertical line of centers
  g.vcost.assign(R, std::vector<int>(R - 1, 0));
  for (int i = 0; i < R; ++i) {
    const Rational& x = g.cx[i];
    std::vector<Rational> ys;
    for (const auto& e : edges) {
      if (e.a.x == x || e.b.x == x) throw Degenerate{"edge endpoint on a grid column"};
      if ((e.a.x < x) != (e.b.x < x))
        ys.push_back(e.a.y + (x - e.a.x) * (e.b.y - e.a.y) / (e.b.x - e.a.x));
    }
    std::sort(ys.begin(), ys.end());
    std::size_t p = 0;
    for (int j = 0; j + 1 < R; ++j) {
      while (p < ys.size() && ys[p] <= g.cy[j]) {
        if (ys[p] == g.cy[j]) throw Degenerate{"boundary through a cell center"};
        ++p;
      }
      std::size_t q = p;
      while (q < ys.size() && ys[q] < g.cy[j + 1]) ++q;
      if (q < ys.size() && ys[q] == g.cy[j + 1])
        throw Degenerate{"boundary through a cell center"};
      g.vcost[i][j] = static_cast<int>(q - p);
      p = q;
    }
  }

  UnionFind uf(R * R);
  for (int j = 0; j < R; ++j)
    for (int i = 0; i + 1 < R; ++i)
      if (g.hcost[j][i] == 0) uf.unite(g.cell(i, j), g.cell(i + 1, j));
  for (int i = 0; i < R; ++i)
    for (int j = 0; j + 1 < R; ++j)
      if (g.vcost[i][j] == 0) uf.unite(g.cell(i, j), g.cell(i, j + 1));
  g.region_of.assign(R * R, -1);
  std::map<int, int> compact;
  for (int c = 0; c < R * R; ++c) {
    int root = uf.find(c);
    auto [it, fresh] = compact.emplace(root, g.num_regions);
    if (fresh) ++g.num_regions;
    g.region_of[c] = it->second;
  }
  return g;
}

// 0 iff segment pq meets no boundary edge at all; -1 for a non-transversal
// contact (endpoint touch or overlap), else the number of proper crossings.
int segment_crossings(const Arrangement& arr, const Point& p, const Point& q) {
  int count = 0;
  Segment s{p, q};
  for (const auto& d : arr.disks())
    for (std::size_t e = 0; e < d.size(); ++e) {
      auto isect = segment_intersection(s, d.edge(e));
      if (isect.kind == SegIntersectKind::proper) ++count;
      else if (isect.kind != SegIntersectKind::none) return -1;
    }
  return count;
}

// cell index of a point strictly inside the grid, or -1 on a cell border
int cell_index(const Rational& v, const Rational& origin, const Rational& step, int R) {
  Rational t = (v - origin) / step;
  BigInt idx = numerator(t) / denominator(t);  // t >= 0 inside the grid
  if (Rational(idx) == t) return -1;
  int i = static_cast<int>(idx);
  return (i >= 0 && i < R) ? i : -1;
}

struct StSample {
  Point s, t;
  int exact = -1;
  long long raster = -1;
};

long long dijkstra(const Raster& g, int si, int sj, int ti, int tj) {
  const int N = g.R * g.R;
  std::vector<long long> dist(N, -1);
  using Item = std::pair<long long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[g.cell(si, sj)] = 0;
  pq.push({0, g.cell(si, sj)});
  while (!pq.empty()) {
    auto [d, c] = pq.top();
    pq.pop();
    if (d != dist[c]) continue;
    int i = c % g.R, j = c / g.R;
    auto relax = [&](int ni, int nj, int w) {
      int nc = g.cell(ni, nj);
      if (dist[nc] == -1 || d + w < dist[nc]) {
        dist[nc] = d + w;
        pq.push({d + w, nc});
      }
    };
    if (i + 1 < g.R) relax(i + 1, j, g.hcost[j][i]);
    if (i > 0) relax(i - 1, j, g.hcost[j][i - 1]);
    if (j + 1 < g.R) relax(i, j + 1, g.vcost[i][j]);
    if (j > 0) relax(i, j - 1, g.vcost[i][j - 1]);
  }
  return dist[g.cell(ti, tj)];
}

// One full comparison pass; status inconclusive means "retry finer".
OracleResult attempt(const Arrangement& arr, int R, int level,
                     std::vector<StSample>& samples) {
  OracleResult res;
  res.resolution = R;
  res.faces = static_cast<int>(arr.num_faces());

  Raster g;
  try {
    g = build_raster(arr, R, level);
  } catch (const Degenerate& d) {
    res.status = OracleStatus::inconclusive;
    res.detail = d.what;
    return res;
  }
  res.regions = g.num_regions;

  // face -> region via representatives; must come out bijective
  std::vector<int> region_of_face(arr.num_faces(), -1);
  for (std::size_t f = 0; f < arr.num_faces(); ++f) {
    const Face& face = arr.face(static_cast<int>(f));
    int i, j;
    if (face.unbounded) {
      i = 0;
      j = 0;  // the margin ring keeps corner cells in the unbounded face
      for (const auto& d : arr.disks())
        if (point_in_disk(Point{g.cx[0], g.cy[0]}, d) != Containment::outside) {
          res.status = OracleStatus::inconclusive;
          res.detail = "corner cell not outside every disk";
          return res;
        }
    } else {
      i = cell_index(face.representative.x, g.x0, g.cell_w, g.R);
      j = cell_index(face.representative.y, g.y0, g.cell_h, g.R);
      if (i < 0 || j < 0) {
        res.status = OracleStatus::inconclusive;
        res.detail = "face representative on a cell border";
        return res;
      }
      int crossings =
          segment_crossings(arr, face.representative, Point{g.cx[i], g.cy[j]});
      if (crossings != 0) {
        res.status = OracleStatus::inconclusive;
        res.detail = "face " + std::to_string(f) + " thinner than a cell";
        return res;
      }
    }
    region_of_face[f] = g.region_of[g.cell(i, j)];
  }
  std::set<int> used(region_of_face.begin(), region_of_face.end());
  if (static_cast<int>(used.size()) != static_cast<int>(arr.num_faces()) ||
      g.num_regions != static_cast<int>(arr.num_faces())) {
    res.status = OracleStatus::inconclusive;
    res.detail = "raster found " + std::to_string(g.num_regions) + " regions for " +
                 std::to_string(arr.num_faces()) + " faces";
    return res;
  }

  // adjacency: region pairs joined by a grid edge with exactly one crossing
  std::set<std::pair<int, int>> raster_adj;
  auto note = [&](int c1, int c2) {
    int a = g.region_of[c1], b = g.region_of[c2];
    if (a != b) raster_adj.insert(std::minmax(a, b));
  };
  for (int j = 0; j < g.R; ++j)
    for (int i = 0; i + 1 < g.R; ++i)
      if (g.hcost[j][i] == 1) note(g.cell(i, j), g.cell(i + 1, j));
  for (int i = 0; i < g.R; ++i)
    for (int j = 0; j + 1 < g.R; ++j)
      if (g.vcost[i][j] == 1) note(g.cell(i, j), g.cell(i, j + 1));

  std::set<std::pair<int, int>> exact_adj;
  for (std::size_t f = 0; f < arr.num_faces(); ++f)
    for (int nb : arr.neighbor_faces(static_cast<int>(f)))
      exact_adj.insert(std::minmax(region_of_face[f], region_of_face[nb]));
  if (raster_adj != exact_adj) {
    res.status = OracleStatus::inconclusive;
    res.detail = "adjacency sets differ (" + std::to_string(raster_adj.size()) +
                 " raster vs " + std::to_string(exact_adj.size()) + " exact)";
    return res;
  }

  // sampled min-crossing distances
  for (auto& sm : samples) {
    int si = cell_index(sm.s.x, g.x0, g.cell_w, g.R);
    int sj = cell_index(sm.s.y, g.y0, g.cell_h, g.R);
    int ti = cell_index(sm.t.x, g.x0, g.cell_w, g.R);
    int tj = cell_index(sm.t.y, g.y0, g.cell_h, g.R);
    if (si < 0 || sj < 0 || ti < 0 || tj < 0 ||
        segment_crossings(arr, sm.s, Point{g.cx[si], g.cy[sj]}) != 0 ||
        segment_crossings(arr, sm.t, Point{g.cx[ti], g.cy[tj]}) != 0) {
      res.status = OracleStatus::inconclusive;
      res.detail = "sample point not cleanly rasterized";
      return res;
    }
    sm.raster = dijkstra(g, si, sj, ti, tj);
    if (sm.raster != sm.exact) {
      res.status = OracleStatus::inconclusive;
      res.detail = "distance mismatch: raster " + std::to_string(sm.raster) +
                   " vs exact " + std::to_string(sm.exact);
      return res;
    }
    ++res.st_checked;
  }

  res.status = OracleStatus::agree;
  return res;
}

}  // namespace

OracleResult oracle_check(const Arrangement& arr, const OracleOptions& opts) {
  // sample point pairs once (from face representatives, deterministically)
  std::mt19937_64 rng(opts.seed);
  std::vector<StSample> samples;
  std::vector<int> bounded;
  for (std::size_t f = 0; f < arr.num_faces(); ++f)
    if (!arr.face(static_cast<int>(f)).unbounded) bounded.push_back(static_cast<int>(f));
  if (bounded.size() >= 2) {
    std::uniform_int_distribution<std::size_t> pick(0, bounded.size() - 1);
    for (int s = 0; s < opts.st_samples; ++s) {
      int fa = bounded[pick(rng)], fb = bounded[pick(rng)];
      StSample sm;
      sm.s = arr.face(fa).representative;
      sm.t = arr.face(fb).representative;
      sm.exact = st_distance(arr, sm.s, sm.t).hops;
      samples.push_back(sm);
    }
  }

  OracleResult last;
  for (int level = 0; level <= opts.max_refinements; ++level) {
    int R = opts.base_resolution << level;
    last = attempt(arr, R, level, samples);
    if (last.status == OracleStatus::agree) return last;
  }
  // inconclusive at every resolution, including the finest: report honestly
  if (last.status == OracleStatus::inconclusive &&
      last.detail.rfind("distance mismatch", 0) == 0)
    last.status = OracleStatus::disagree;
  if (last.status == OracleStatus::inconclusive &&
      last.detail.rfind("adjacency sets differ", 0) == 0)
    last.status = OracleStatus::disagree;
  return last;
}

}  // namespace arr
