#include "arr/arrangement.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <tuple>

namespace arr {

namespace {

std::string summarize(const GeneralPositionReport& report) {
  std::string msg = "general position violated:";
  for (const auto& v : report.violations) {
    msg += "\n  " + describe(v);
  }
  return msg;
}

// CCW angular order starting at east.
int quadrant(const Point& d) {
  const int sx = sign(d.x), sy = sign(d.y);
  if (sx > 0 && sy >= 0) return 0;
  if (sx <= 0 && sy > 0) return 1;
  if (sx < 0 && sy <= 0) return 2;
  return 3;
}

bool angle_less(const Point& d1, const Point& d2) {
  const int q1 = quadrant(d1), q2 = quadrant(d2);
  if (q1 != q2) return q1 < q2;
  return sign(cross(d1, d2)) > 0;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

GeneralPositionError::GeneralPositionError(GeneralPositionReport report)
    : std::runtime_error(summarize(report)), report_(std::move(report)) {}

bool Face::contains_disk(int disk_id) const {
  return std::binary_search(label.begin(), label.end(), disk_id);
}

Arrangement Arrangement::build(std::vector<Disk> disks) {
  GeneralPositionReport gp = validate_general_position(disks);
  if (!gp.ok()) throw GeneralPositionError(std::move(gp));

  Arrangement arr;
  arr.disks_ = std::move(disks);
  const std::size_t n = arr.disks_.size();

  // Split points per (disk, edge): all proper crossings with other boundaries.
  std::vector<std::vector<std::vector<Point>>> splits(n);
  for (std::size_t i = 0; i < n; ++i) splits[i].resize(arr.disks_[i].size());

  UnionFind curve_uf(n == 0 ? 1 : n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t i = 0; i < arr.disks_[a].size(); ++i) {
        for (std::size_t j = 0; j < arr.disks_[b].size(); ++j) {
          const auto r = segment_intersection(arr.disks_[a].edge(i), arr.disks_[b].edge(j));
          if (r.kind == SegIntersectKind::proper) {
            splits[a][i].push_back(*r.point);
            splits[b][j].push_back(*r.point);
            curve_uf.unite(static_cast<int>(a), static_cast<int>(b));
          }
        }
      }
    }
  }
  {
    std::vector<int> roots;
    for (std::size_t i = 0; i < n; ++i) roots.push_back(curve_uf.find(static_cast<int>(i)));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    arr.boundary_components_ = static_cast<int>(roots.size());
  }

  // Canonical vertex ids: all corners and crossings sorted by coordinates.
  std::map<Point, int> vertex_id;
  std::map<Point, VertexKind> vertex_kind;
  for (std::size_t i = 0; i < n; ++i) {
    for (const Point& p : arr.disks_[i].vertices()) vertex_kind[p] = VertexKind::corner;
    for (const auto& edge_splits : splits[i])
      for (const Point& p : edge_splits) vertex_kind[p] = VertexKind::crossing;
  }
  for (const auto& [p, kind] : vertex_kind) {
    vertex_id[p] = static_cast<int>(arr.vertices_.size());
    arr.vertices_.push_back({p, kind, {}});
  }

  // Half-edges along each disk's CCW chain; twins created together.
  arr.boundary_chains_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Disk& d = arr.disks_[i];
    for (std::size_t e = 0; e < d.size(); ++e) {
      const Segment seg = d.edge(e);
      auto& pts = splits[i][e];
      const Point dir = seg.b - seg.a;
      std::sort(pts.begin(), pts.end(), [&](const Point& p, const Point& q) {
        return dot(p - seg.a, dir) < dot(q - seg.a, dir);
      });
      Point prev = seg.a;
      auto emit = [&](const Point& to) {
        const int fwd = static_cast<int>(arr.half_edges_.size());
        arr.half_edges_.push_back(
            {vertex_id.at(prev), fwd + 1, -1, -1, d.id(), true});
        arr.half_edges_.push_back(
            {vertex_id.at(to), fwd, -1, -1, d.id(), false});
        arr.boundary_chains_[i].push_back(fwd);
        prev = to;
      };
      for (const Point& p : pts) emit(p);
      emit(seg.b);
    }
  }

  // CCW angular order of outgoing half-edges around each vertex.
  for (std::size_t h = 0; h < arr.half_edges_.size(); ++h) {
    arr.vertices_[arr.half_edges_[h].origin].out.push_back(static_cast<int>(h));
  }
  auto he_dir = [&](int h) {
    return arr.vertices_[arr.destination(h)].location -
           arr.vertices_[arr.half_edges_[h].origin].location;
  };
  for (auto& v : arr.vertices_) {
    std::sort(v.out.begin(), v.out.end(),
              [&](int h1, int h2) { return angle_less(he_dir(h1), he_dir(h2)); });
    assert(v.out.size() == (v.kind == VertexKind::crossing ? 4u : 2u));
    // next(e) for e arriving at v is the clockwise successor of twin(e).
    const int deg = static_cast<int>(v.out.size());
    for (int k = 0; k < deg; ++k) {
      arr.half_edges_[arr.half_edges_[v.out[k]].twin].next = v.out[(k - 1 + deg) % deg];
    }
  }

  // Cycle extraction by next-pointer walking.
  struct Cycle {
    std::vector<int> halfedges;
    bool outer;    // positive signed area
    int lexmin_vertex;
  };
  std::vector<Cycle> cycles;
  std::vector<int> cycle_of(arr.half_edges_.size(), -1);
  for (std::size_t start = 0; start < arr.half_edges_.size(); ++start) {
    if (cycle_of[start] != -1) continue;
    Cycle c;
    Rational area2 = 0;
    int h = static_cast<int>(start);
    int lexmin = arr.half_edges_[h].origin;
    do {
      cycle_of[h] = static_cast<int>(cycles.size());
      c.halfedges.push_back(h);
      const Point& p = arr.vertices_[arr.half_edges_[h].origin].location;
      const Point& q = arr.vertices_[arr.destination(h)].location;
      area2 += cross(p, q);
      if (arr.vertices_[arr.half_edges_[h].origin].location <
          arr.vertices_[lexmin].location)
        lexmin = arr.half_edges_[h].origin;
      h = arr.half_edges_[h].next;
    } while (h != static_cast<int>(start));
    assert(area2 != 0);
    c.outer = area2 > 0;
    c.lexmin_vertex = lexmin;
    cycles.push_back(std::move(c));
  }

  // Faces: 0 is unbounded; one face per outer cycle, in discovery order.
  arr.faces_.push_back({});
  arr.faces_[0].id = 0;
  arr.faces_[0].unbounded = true;
  std::vector<int> face_of_cycle(cycles.size(), -1);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (!cycles[c].outer) continue;
    Face f;
    f.id = static_cast<int>(arr.faces_.size());
    f.outer_cycle = cycles[c].halfedges.front();
    face_of_cycle[c] = f.id;
    arr.faces_.push_back(std::move(f));
  }

  // Holes: union each hole cycle with the first boundary hit west of its
  // lexicographically smallest vertex; groups that escape bound the
  // unbounded face. Hits land on another cycle of the same face, and the
  // hit cycle's westmost vertex is strictly further west, so chains
  // terminate.
  const int escape = static_cast<int>(cycles.size());
  UnionFind hole_uf(cycles.size() + 1);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (cycles[c].outer) continue;
    const Point& v = arr.vertices_[cycles[c].lexmin_vertex].location;
    const auto hit = arr.first_hit_west(v);
    hole_uf.unite(static_cast<int>(c), hit ? cycle_of[*hit] : escape);
  }
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (cycles[c].outer) continue;
    const int root = hole_uf.find(static_cast<int>(c));
    int face_id = 0;
    if (root != hole_uf.find(escape)) {
      // The group's unique outer cycle owns the face.
      face_id = -1;
      for (std::size_t o = 0; o < cycles.size(); ++o) {
        if (cycles[o].outer && hole_uf.find(static_cast<int>(o)) == root) {
          assert(face_id == -1);
          face_id = face_of_cycle[o];
        }
      }
      assert(face_id != -1);
    }
    face_of_cycle[c] = face_id;
    arr.faces_[face_id].hole_cycles.push_back(cycles[c].halfedges.front());
  }
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (int h : cycles[c].halfedges) arr.half_edges_[h].face = face_of_cycle[c];
  }

  // Representative points: a thin slice left of the lexicographically
  // smallest edge midpoint of the outer cycle; for the unbounded face, a
  // point west of everything.
  for (Face& f : arr.faces_) {
    if (f.unbounded) continue;
    int best_he = -1;
    Point best_mid;
    int h = f.outer_cycle;
    do {
      const Point a = arr.vertices_[arr.half_edges_[h].origin].location;
      const Point b = arr.vertices_[arr.destination(h)].location;
      const Point mid = Rational(1, 2) * (a + b);
      if (best_he == -1 || mid < best_mid) {
        best_he = h;
        best_mid = mid;
      }
      h = arr.half_edges_[h].next;
    } while (h != f.outer_cycle);
    const Point a = arr.vertices_[arr.half_edges_[best_he].origin].location;
    const Point b = arr.vertices_[arr.destination(best_he)].location;
    const Point d = {a.y - b.y, b.x - a.x};  // left normal of a->b
    // First contact of the ray best_mid + t*d with any other edge.
    std::optional<Rational> tmin;
    for (std::size_t e = 0; e < arr.half_edges_.size(); e += 2) {
      if (static_cast<int>(e) == std::min(best_he, arr.half_edges_[best_he].twin))
        continue;
      const Point sa = arr.vertices_[arr.half_edges_[e].origin].location;
      const Point sb = arr.vertices_[arr.destination(e)].location;
      const Point sd = sb - sa;
      const Rational denom = cross(d, sd);
      if (denom != 0) {
        const Rational t = cross(sa - best_mid, sd) / denom;
        const Rational u = cross(sa - best_mid, d) / denom;
        if (t > 0 && u >= 0 && u <= 1 && (!tmin || t < *tmin)) tmin = t;
      } else if (orientation(best_mid, best_mid + d, sa) == 0) {
        for (const Point& ep : {sa, sb}) {
          const Rational t = dot(ep - best_mid, d) / dot(d, d);
          if (t > 0 && (!tmin || t < *tmin)) tmin = t;
        }
      }
    }
    assert(tmin);  // a bounded face's slice always exits through its boundary
    f.representative = best_mid + (*tmin / 2) * d;
  }
  {
    Point lo = arr.vertices_.empty() ? Point{0, 0} : arr.vertices_.front().location;
    for (const auto& v : arr.vertices_) {
      if (v.location.x < lo.x) lo.x = v.location.x;
      if (v.location.y < lo.y) lo.y = v.location.y;
    }
    arr.faces_[0].representative = {lo.x - 1, lo.y - 1};
  }

  // Labels by exact membership of the representative point.
  for (Face& f : arr.faces_) {
    for (const Disk& d : arr.disks_) {
      const Containment c = point_in_disk(f.representative, d);
      assert(c != Containment::boundary);
      if (c == Containment::inside) f.label.push_back(d.id());
    }
    std::sort(f.label.begin(), f.label.end());
  }
  assert(arr.faces_[0].label.empty());

  return arr;
}

std::optional<int> Arrangement::first_hit_west(const Point& p) const {
  // The ray runs west from (p.x, p.y + eps) for an infinitesimal eps: an
  // edge is crossed iff its endpoints straddle y = p.y half-openly, at
  // x-position xint + eps * dx/dy. Ties at equal xint are broken by slope.
  std::optional<std::pair<Rational, Rational>> best;  // (xint, dxdy)
  int best_edge = -1;
  for (std::size_t e = 0; e < half_edges_.size(); e += 2) {
    const Point& a = vertices_[half_edges_[e].origin].location;
    const Point& b = vertices_[destination(static_cast<int>(e))].location;
    if ((a.y > p.y) == (b.y > p.y)) continue;
    const Rational dxdy = (b.x - a.x) / (b.y - a.y);
    const Rational xint = a.x + (p.y - a.y) * dxdy;
    if (xint >= p.x) continue;
    const std::pair<Rational, Rational> cand{xint, dxdy};
    if (!best || *best < cand) {
      best = cand;
      best_edge = static_cast<int>(e);
    }
  }
  if (best_edge == -1) return std::nullopt;
  // The half-edge directed downward has the region east of the hit (where p
  // sits) on its left.
  const Point& a = vertices_[half_edges_[best_edge].origin].location;
  const Point& b = vertices_[destination(best_edge)].location;
  return a.y > b.y ? best_edge : half_edges_[best_edge].twin;
}

bool Arrangement::point_on_any_edge(const Point& p) const {
  for (std::size_t e = 0; e < half_edges_.size(); e += 2) {
    const Segment s{vertices_[half_edges_[e].origin].location,
                    vertices_[destination(static_cast<int>(e))].location};
    if (on_segment(p, s)) return true;
  }
  return false;
}

int Arrangement::locate_face(const Point& p) const {
  if (point_on_any_edge(p))
    throw std::invalid_argument("locate_face: point lies on a disk boundary");
  const auto hit = first_hit_west(p);
  return hit ? half_edges_[*hit].face : 0;
}

std::vector<int> Arrangement::neighbor_faces(int f) const {
  std::vector<int> result;
  for (const HalfEdge& he : half_edges_) {
    if (he.face == f) {
      const int other = half_edges_[he.twin].face;
      if (other != f) result.push_back(other);
    }
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

}  // namespace arr
