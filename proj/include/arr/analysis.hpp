#pragma once

#include "arr/arrangement.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace arr {

// One node per face (node id = face id), adjacency iff >= 1 shared edge.
struct DualGraph {
  std::vector<std::vector<int>> adj;
  std::vector<int> ply;

  std::size_t size() const { return adj.size(); }
};

DualGraph dual_graph(const Arrangement& arr);

std::vector<int> bfs_distances(const DualGraph& g, int source);

// Exact diameter via BFS from every node; requires g connected.
int diameter(const DualGraph& g);

// Connected components of the intersection of disks i and j, as sets of
// face ids of the full arrangement.
struct ComponentDecomposition {
  int disk_i = -1;
  int disk_j = -1;
  std::vector<std::vector<int>> components;  // each sorted; listed by smallest face id

  int count() const { return static_cast<int>(components.size()); }
};

ComponentDecomposition intersection_components(const Arrangement& arr, int i, int j);

// Decompositions for all unordered pairs, with a face -> component lookup.
class AllComponents {
 public:
  explicit AllComponents(const Arrangement& arr);

  const ComponentDecomposition& pair(int i, int j) const;
  // Component index of face f within pair (i,j), or -1 if f is not in both.
  int component_of(int i, int j, int face) const;

  int delta_ij(int i, int j) const { return pair(i, j).count(); }
  int delta() const;
  std::vector<std::vector<int>> delta_matrix() const;

 private:
  int n_;
  std::map<std::pair<int, int>, ComponentDecomposition> pairs_;
  std::map<std::pair<int, int>, std::map<int, int>> comp_of_face_;
};

// max over pairs of Delta_ij; 0 when all pairs are disjoint.
int overlap_number(const Arrangement& arr);

// Faces whose ply strictly exceeds every edge-neighbor's ply, ascending ids.
std::vector<int> maximal_faces(const Arrangement& arr);

struct StDistance {
  int hops;
  std::vector<int> face_path;
};

// BFS hop distance between the faces containing s and t.
// Throws std::invalid_argument if either point lies on a boundary.
StDistance st_distance(const Arrangement& arr, const Point& s, const Point& t);

enum class FaceColor { white, red, blue, purple };

// n = 2 only: white {} / red {0} / blue {1} / purple {0,1}, per face.
std::vector<FaceColor> two_disk_classification(const Arrangement& arr);

// A maximal arc of one disk's boundary free of crossings with other
// boundaries, with its component set and inside boundary face.
struct ElementaryInterval {
  int start_vertex;  // crossing vertex opening the interval (CCW order)
  int end_vertex;    // crossing vertex closing it
  std::vector<int> chain;  // forward half-edges covering the interval
  int inside_face;         // f(I): the face inside the fixed disk incident to I
  bool inside_face_maximal = false;
  // Lambda(I): unordered disk pair -> component index; absent pair means no
  // component of that pair covers the interval.
  std::map<std::pair<int, int>, int> component_set;
};

struct BoundaryIntervalReport {
  int disk = -1;
  bool trivial = false;  // boundary crossed by no other boundary
  std::vector<ElementaryInterval> intervals;
};

BoundaryIntervalReport boundary_interval_report(const Arrangement& arr, int disk_id,
                                                const AllComponents& comps);

// Assignment of every face to the lowest-indexed maximal face reachable by a
// strictly ply-increasing path, with witness paths and the contracted graph.
struct MonotonePartition {
  std::vector<int> maximal;                 // ascending face ids
  std::vector<int> assigned_maximal;        // per face: the owning maximal face
  std::vector<std::vector<int>> witness_paths;  // per face: face-id path, ply +1 per hop
  std::vector<std::vector<int>> parts;      // per maximal face: member faces
  std::vector<std::vector<int>> contracted_adj;  // over parts
};

MonotonePartition monotone_partition(const Arrangement& arr);

struct BoundCheck {
  std::string name;
  bool pass;
  BigInt value;
  BigInt bound;
  BigInt slack() const { return bound - value; }
};

struct AnalysisReport {
  int n = 0;
  std::vector<std::vector<int>> delta_matrix;
  int delta = 0;
  int p_max = 0;
  int mu = 0;
  int diam = 0;
  double analysis_ms = 0.0;
  std::vector<BoundCheck> checks;

  bool all_pass() const;
};

// Computes every studied quantity and checks the proven bounds
// (two-disk diameter/maximal-face counts, the general mu and diameter
// bounds, and diam <= 2 * p_max * mu).
AnalysisReport verify_bounds(const Arrangement& arr);

// Property helpers used by tests and the acceptance suite (n = 2).
// Max distance between purple nodes over paths avoiding white nodes.
int max_purple_to_purple_colored_distance(const DualGraph& g,
                                          const std::vector<FaceColor>& colors);
// Min over white nodes of the number of distinct purple nodes at distance 2.
int min_purple_count_two_hops_from_white(const DualGraph& g,
                                         const std::vector<FaceColor>& colors);

// Interval uniqueness: on every disk, any two elementary intervals with
// equal component sets whose boundary faces are both maximal reference the
// same face. Returns a description of a counterexample, or empty if none.
std::string check_interval_uniqueness(const Arrangement& arr);

}  // namespace arr
