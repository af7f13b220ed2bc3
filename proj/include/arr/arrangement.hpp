#pragma once

#include "arr/disk.hpp"
#include "arr/general_position.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace arr {

class GeneralPositionError : public std::runtime_error {
 public:
  explicit GeneralPositionError(GeneralPositionReport report);
  const GeneralPositionReport& report() const { return report_; }

 private:
  GeneralPositionReport report_;
};

enum class VertexKind { crossing, corner };

struct ArrangementVertex {
  Point location;
  VertexKind kind;
  std::vector<int> out;  // outgoing half-edge ids in CCW angular order
};

struct HalfEdge {
  int origin;       // vertex id
  int twin;         // half-edge id
  int next;         // next along face boundary (face interior on the left)
  int face;         // face id
  int source_disk;  // disk whose boundary carries this edge
  bool forward;     // directed along the disk polygon's CCW chain
};

struct Face {
  int id;
  int outer_cycle = -1;        // a half-edge on the outer cycle; -1 for unbounded
  std::vector<int> hole_cycles;  // one half-edge per hole cycle
  std::vector<int> label;      // sorted disk ids containing the face
  Point representative;        // exact point strictly interior to the face
  bool unbounded = false;

  int ply() const { return static_cast<int>(label.size()); }
  bool contains_disk(int disk_id) const;
};

// The planar arrangement induced by the disk boundaries, as an immutable
// half-edge structure with hole-aware faces. Face 0 is the unbounded face.
class Arrangement {
 public:
  // Throws GeneralPositionError if validate_general_position fails.
  static Arrangement build(std::vector<Disk> disks);

  const std::vector<Disk>& disks() const { return disks_; }
  const std::vector<ArrangementVertex>& vertices() const { return vertices_; }
  const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_[id]; }
  int unbounded_face() const { return 0; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return half_edges_.size() / 2; }
  std::size_t num_faces() const { return faces_.size(); }

  // Connected components of the union of the boundary curves.
  int num_boundary_components() const { return boundary_components_; }

  int destination(int he) const { return half_edges_[half_edges_[he].twin].origin; }

  // Forward half-edges along disk i's boundary, in CCW chain order.
  const std::vector<int>& boundary_chain(int disk_id) const {
    return boundary_chains_[disk_id];
  }

  // Face containing p. Throws std::invalid_argument if p lies on a boundary.
  int locate_face(const Point& p) const;

  // Faces sharing at least one edge with face f (never f itself).
  std::vector<int> neighbor_faces(int f) const;

  bool point_on_any_edge(const Point& p) const;

 private:
  Arrangement() = default;

  std::vector<Disk> disks_;
  std::vector<ArrangementVertex> vertices_;
  std::vector<HalfEdge> half_edges_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> boundary_chains_;
  int boundary_components_ = 0;

  // Westward ray shot from p (perturbed infinitesimally upward): returns the
  // first-hit half-edge whose left side faces p, or nullopt if the ray
  // escapes to infinity.
  std::optional<int> first_hit_west(const Point& p) const;
};

}  // namespace arr
