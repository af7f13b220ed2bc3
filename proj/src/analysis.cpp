#include "arr/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace arr {

namespace {

BigInt ipow(BigInt base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

DualGraph dual_graph(const Arrangement& arr) {
  DualGraph g;
  g.adj.resize(arr.num_faces());
  g.ply.resize(arr.num_faces());
  for (const Face& f : arr.faces()) {
    g.adj[f.id] = arr.neighbor_faces(f.id);
    g.ply[f.id] = f.ply();
  }
  return g;
}

std::vector<int> bfs_distances(const DualGraph& g, int source) {
  std::vector<int> dist(g.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.adj[u]) {
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

int diameter(const DualGraph& g) {
  int diam = 0;
  for (std::size_t s = 0; s < g.size(); ++s) {
    for (int d : bfs_distances(g, static_cast<int>(s))) {
      if (d < 0) throw std::invalid_argument("diameter: dual graph not connected");
      diam = std::max(diam, d);
    }
  }
  return diam;
}

ComponentDecomposition intersection_components(const Arrangement& arr, int i, int j) {
  if (i == j) throw std::invalid_argument("intersection_components: i == j");
  ComponentDecomposition dec;
  dec.disk_i = std::min(i, j);
  dec.disk_j = std::max(i, j);

  const auto qualifies = [&](int f) {
    return arr.face(f).contains_disk(i) && arr.face(f).contains_disk(j);
  };
  // Union-find over qualifying faces, merged across shared arrangement
  // edges whose both sides lie in the intersection. Under general position
  // this captures the point-set connectivity of the closed region: at a
  // crossing of the two boundaries exactly one quadrant is inside both
  // disks, and at a crossing with a third boundary the two inside quadrants
  // are edge-adjacent, so vertex contacts never join separate components.
  std::vector<int> parent(arr.num_faces());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const HalfEdge& he : arr.half_edges()) {
    const int f1 = he.face;
    const int f2 = arr.half_edges()[he.twin].face;
    if (qualifies(f1) && qualifies(f2)) parent[find(f1)] = find(f2);
  }
  std::map<int, std::vector<int>> groups;
  for (std::size_t f = 0; f < arr.num_faces(); ++f) {
    if (qualifies(static_cast<int>(f))) groups[find(static_cast<int>(f))].push_back(static_cast<int>(f));
  }
  for (auto& [root, faces] : groups) dec.components.push_back(std::move(faces));
  std::sort(dec.components.begin(), dec.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return dec;
}

AllComponents::AllComponents(const Arrangement& arr)
    : n_(static_cast<int>(arr.disks().size())) {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      auto dec = intersection_components(arr, i, j);
      auto& lookup = comp_of_face_[{i, j}];
      for (std::size_t c = 0; c < dec.components.size(); ++c) {
        for (int f : dec.components[c]) lookup[f] = static_cast<int>(c);
      }
      pairs_[{i, j}] = std::move(dec);
    }
  }
}

const ComponentDecomposition& AllComponents::pair(int i, int j) const {
  return pairs_.at({std::min(i, j), std::max(i, j)});
}

int AllComponents::component_of(int i, int j, int face) const {
  const auto& lookup = comp_of_face_.at({std::min(i, j), std::max(i, j)});
  const auto it = lookup.find(face);
  return it == lookup.end() ? -1 : it->second;
}

int AllComponents::delta() const {
  int d = 0;
  for (const auto& [key, dec] : pairs_) d = std::max(d, dec.count());
  return d;
}

std::vector<std::vector<int>> AllComponents::delta_matrix() const {
  std::vector<std::vector<int>> m(n_, std::vector<int>(n_, 0));
  for (const auto& [key, dec] : pairs_) {
    m[key.first][key.second] = m[key.second][key.first] = dec.count();
  }
  return m;
}

int overlap_number(const Arrangement& arr) { return AllComponents(arr).delta(); }

std::vector<int> maximal_faces(const Arrangement& arr) {
  std::vector<int> result;
  for (const Face& f : arr.faces()) {
    bool maximal = true;
    const auto neighbors = arr.neighbor_faces(f.id);
    if (neighbors.empty()) maximal = false;  // lone unbounded face of n = 0
    for (int g : neighbors) {
      if (arr.face(g).ply() >= f.ply()) maximal = false;
    }
    if (maximal) result.push_back(f.id);
  }
  return result;
}

StDistance st_distance(const Arrangement& arr, const Point& s, const Point& t) {
  const int fs = arr.locate_face(s);
  const int ft = arr.locate_face(t);
  const DualGraph g = dual_graph(arr);
  std::vector<int> parent(g.size(), -1);
  std::vector<int> dist(g.size(), -1);
  std::deque<int> queue{fs};
  dist[fs] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == ft) break;
    for (int v : g.adj[u]) {
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  StDistance result{dist[ft], {}};
  for (int f = ft; f != -1; f = parent[f]) result.face_path.push_back(f);
  std::reverse(result.face_path.begin(), result.face_path.end());
  assert(result.face_path.front() == fs && result.face_path.back() == ft);
  return result;
}

std::vector<FaceColor> two_disk_classification(const Arrangement& arr) {
  if (arr.disks().size() != 2)
    throw std::invalid_argument("two_disk_classification requires exactly 2 disks");
  std::vector<FaceColor> colors(arr.num_faces());
  for (const Face& f : arr.faces()) {
    const bool in0 = f.contains_disk(0);
    const bool in1 = f.contains_disk(1);
    colors[f.id] = in0 ? (in1 ? FaceColor::purple : FaceColor::red)
                       : (in1 ? FaceColor::blue : FaceColor::white);
  }
  return colors;
}

BoundaryIntervalReport boundary_interval_report(const Arrangement& arr, int disk_id,
                                                const AllComponents& comps) {
  BoundaryIntervalReport report;
  report.disk = disk_id;
  const auto& chain = arr.boundary_chain(disk_id);

  const auto is_crossing = [&](int vertex) {
    return arr.vertices()[vertex].kind == VertexKind::crossing;
  };
  // Rotate to start at a crossing vertex.
  std::size_t start = chain.size();
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (is_crossing(arr.half_edges()[chain[k]].origin)) {
      start = k;
      break;
    }
  }
  if (start == chain.size()) {
    report.trivial = true;
    return report;
  }

  const std::vector<int>& maximal = maximal_faces(arr);
  ElementaryInterval current;
  current.start_vertex = arr.half_edges()[chain[start]].origin;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const int he = chain[(start + k) % chain.size()];
    current.chain.push_back(he);
    const int dest = arr.destination(he);
    if (is_crossing(dest)) {
      current.end_vertex = dest;
      // f(I): the forward half-edge has the disk's interior on its left.
      current.inside_face = arr.half_edges()[current.chain.front()].face;
      for (int h : current.chain) assert(arr.half_edges()[h].face == current.inside_face);
      current.inside_face_maximal =
          std::binary_search(maximal.begin(), maximal.end(), current.inside_face);
      const auto& label = arr.face(current.inside_face).label;
      for (std::size_t a = 0; a < label.size(); ++a) {
        for (std::size_t b = a + 1; b < label.size(); ++b) {
          const int c = comps.component_of(label[a], label[b], current.inside_face);
          assert(c >= 0);
          current.component_set[{label[a], label[b]}] = c;
        }
      }
      report.intervals.push_back(std::move(current));
      current = {};
      current.start_vertex = dest;
    }
  }
  return report;
}

MonotonePartition monotone_partition(const Arrangement& arr) {
  MonotonePartition mp;
  mp.maximal = maximal_faces(arr);
  const std::size_t nf = arr.num_faces();
  const DualGraph g = dual_graph(arr);

  // Lowest-indexed maximal face reachable by a ply-increasing path, by
  // decreasing ply. Every non-maximal face has a ply+1 neighbor (labels
  // across an edge differ by one disk), so the greedy walk always reaches
  // a maximal face.
  std::vector<int> min_reach(nf, -1);
  std::vector<int> order(nf);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.ply[a] != g.ply[b]) return g.ply[a] > g.ply[b];
    return a < b;
  });
  const auto is_max = [&](int f) {
    return std::binary_search(mp.maximal.begin(), mp.maximal.end(), f);
  };
  for (int f : order) {
    if (is_max(f)) {
      min_reach[f] = f;
      continue;
    }
    for (int w : g.adj[f]) {
      if (g.ply[w] == g.ply[f] + 1 && min_reach[w] != -1) {
        if (min_reach[f] == -1 || min_reach[w] < min_reach[f]) min_reach[f] = min_reach[w];
      }
    }
    assert(min_reach[f] != -1);
  }
  mp.assigned_maximal = min_reach;

  mp.witness_paths.resize(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    int u = static_cast<int>(f);
    mp.witness_paths[f].push_back(u);
    while (!is_max(u)) {
      int next = -1;
      for (int w : g.adj[u]) {
        if (g.ply[w] == g.ply[u] + 1 && min_reach[w] == min_reach[u] &&
            (next == -1 || w < next))
          next = w;
      }
      assert(next != -1);
      mp.witness_paths[f].push_back(next);
      u = next;
    }
    assert(u == min_reach[f]);
  }

  std::map<int, int> part_index;
  for (std::size_t i = 0; i < mp.maximal.size(); ++i) part_index[mp.maximal[i]] = static_cast<int>(i);
  mp.parts.resize(mp.maximal.size());
  for (std::size_t f = 0; f < nf; ++f) mp.parts[part_index.at(min_reach[f])].push_back(static_cast<int>(f));

  mp.contracted_adj.resize(mp.maximal.size());
  std::set<std::pair<int, int>> seen;
  for (std::size_t f = 0; f < nf; ++f) {
    for (int w : g.adj[f]) {
      const int pa = part_index.at(min_reach[f]);
      const int pb = part_index.at(min_reach[w]);
      if (pa != pb && seen.insert({pa, pb}).second) mp.contracted_adj[pa].push_back(pb);
    }
  }
  for (auto& a : mp.contracted_adj) std::sort(a.begin(), a.end());
  return mp;
}

bool AnalysisReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

AnalysisReport verify_bounds(const Arrangement& arr) {
  const auto t0 = std::chrono::steady_clock::now();
  AnalysisReport rep;
  rep.n = static_cast<int>(arr.disks().size());
  const AllComponents comps(arr);
  rep.delta_matrix = comps.delta_matrix();
  rep.delta = comps.delta();
  rep.mu = static_cast<int>(maximal_faces(arr).size());
  const DualGraph g = dual_graph(arr);
  rep.diam = diameter(g);
  rep.p_max = *std::max_element(g.ply.begin(), g.ply.end());

  const auto check = [&](std::string name, BigInt value, BigInt bound) {
    rep.checks.push_back({std::move(name), value <= bound, std::move(value), std::move(bound)});
  };
  const int n = rep.n;
  const BigInt delta = rep.delta;
  if (n == 2) {
    check("two_disk_diameter_bound", rep.diam, std::max<BigInt>(2, 2 * delta));
    const BigInt expected_mu = rep.delta > 0 ? delta : BigInt(2);
    rep.checks.push_back({"two_disk_maximal_faces", rep.mu == expected_mu,
                          BigInt(rep.mu), expected_mu});
  } else if (n > 2) {
    const BigInt pow = ipow(delta + 1, n * (n - 1) / 2);
    check("maximal_faces_bound", rep.mu, n * pow);
    check("diameter_bound", rep.diam, 2 * n * std::min<BigInt>(n, delta + 1) * pow);
  }
  check("diameter_ply_mu_bound", rep.diam, 2 * BigInt(rep.p_max) * rep.mu);
  check("pmax_trivial", rep.p_max, n);
  rep.analysis_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return rep;
}

int max_purple_to_purple_colored_distance(const DualGraph& g,
                                          const std::vector<FaceColor>& colors) {
  int worst = 0;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (colors[s] != FaceColor::purple) continue;
    std::vector<int> dist(g.size(), -1);
    std::deque<int> queue{static_cast<int>(s)};
    dist[s] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : g.adj[u]) {
        if (colors[v] != FaceColor::white && dist[v] == -1) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (std::size_t t = 0; t < g.size(); ++t) {
      if (colors[t] == FaceColor::purple) {
        if (dist[t] < 0) return -1;  // no colored path: should not happen
        worst = std::max(worst, dist[t]);
      }
    }
  }
  return worst;
}

int min_purple_count_two_hops_from_white(const DualGraph& g,
                                         const std::vector<FaceColor>& colors) {
  int fewest = -1;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (colors[u] != FaceColor::white) continue;
    std::set<int> purple;
    for (int v : g.adj[u]) {
      for (int w : g.adj[v]) {
        if (colors[w] == FaceColor::purple) purple.insert(w);
      }
    }
    const int count = static_cast<int>(purple.size());
    if (fewest == -1 || count < fewest) fewest = count;
  }
  return fewest;  // -1 if there are no white nodes
}

std::string check_interval_uniqueness(const Arrangement& arr) {
  const AllComponents comps(arr);
  for (const Disk& d : arr.disks()) {
    const auto report = boundary_interval_report(arr, d.id(), comps);
    std::map<std::map<std::pair<int, int>, int>, int> face_for_lambda;
    for (const auto& interval : report.intervals) {
      if (!interval.inside_face_maximal) continue;
      const auto [it, inserted] =
          face_for_lambda.try_emplace(interval.component_set, interval.inside_face);
      if (!inserted && it->second != interval.inside_face) {
        return "disk " + std::to_string(d.id()) + ": equal component sets with maximal faces " +
               std::to_string(it->second) + " and " + std::to_string(interval.inside_face);
      }
    }
  }
  return {};
}

}  // namespace arr
