#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "oddakh/diagram.hpp"
#include "oddakh/sparse_matrix.hpp"

namespace oddakh {

/// A cube vertex: bit c set means crossing c takes its 1-smoothing.
using Vertex = std::uint32_t;

/// Hard limit on the cube dimension.
inline constexpr std::size_t kMaxCrossings = 16;

struct Circle {
  /// Edges in traversal order; the flag is set when the edge is traversed along the
  /// link orientation.
  std::vector<std::pair<EdgeId, bool>> arcs;
  int gamma_intersection = 0;          // algebraic intersection with the basepoint arc
  long first_gamma = -1;               // index of the first basepoint-arc crossing, or -1
  bool essential() const { return gamma_intersection != 0; }
};

/// Complete smoothing of a diagram at one cube vertex.
struct Resolution {
  Vertex vertex = 0;
  std::vector<Circle> circles;  // canonical order after resolve(); discovery order from trace_circles()
  std::size_t num_trivial = 0;
  std::vector<std::size_t> circle_of_edge;  // indexed by AnnularDiagram::edge_index

  std::size_t size() const { return circles.size(); }
  std::size_t num_essential() const { return circles.size() - num_trivial; }
  bool is_essential(std::size_t circle) const { return circles[circle].essential(); }
  std::size_t circle_of(const AnnularDiagram& d, EdgeId e) const { return circle_of_edge[d.edge_index(e)]; }
};

/// Smooths every crossing per `vertex` and traces the circles, in discovery order
/// (edges scanned by ascending id). Throws InputError if a circle meets the arc with
/// algebraic intersection other than 0 or +-1.
Resolution trace_circles(const AnnularDiagram& d, Vertex vertex);

/// Permutation `perm[new] = old` placing trivial circles first (in their current
/// order) followed by essential circles sorted by first basepoint-arc crossing.
std::vector<std::size_t> proximity_order(const Resolution& res);

/// trace_circles followed by reordering per proximity_order.
Resolution resolve(const AnnularDiagram& d, Vertex vertex);

enum class EdgeKind { merge, split };

struct CubeEdge {
  Vertex from = 0;
  Vertex to = 0;
  int crossing = 0;
  EdgeKind kind = EdgeKind::merge;
  /// merge: the two circles of `from` that merge (ascending); split: the children in
  /// `to` as (tail, head) of the split arrow.
  std::array<std::size_t, 2> pair{};
  /// merge: the resulting circle of `to`; split: the parent circle of `from`.
  std::size_t single = 0;
  /// Circle of `to` containing each circle of `from`. For a split the parent maps to
  /// the tail child.
  std::vector<std::size_t> circle_map;
};

/// A square face: edges (base -> base+a, base+a -> top, base -> base+b, base+b -> top), a < b.
struct Face {
  Vertex base = 0;
  int a = 0;
  int b = 0;
  std::array<std::size_t, 4> edges{};
};

class Cube {
 public:
  explicit Cube(AnnularDiagram d, unsigned threads = 1);

  const AnnularDiagram& diagram() const { return diagram_; }
  const DiagramStats& stats() const { return stats_; }
  int winding_parity() const { return winding_parity_; }
  std::size_t num_crossings() const { return diagram_.num_crossings(); }
  std::size_t num_vertices() const { return resolutions_.size(); }
  const Resolution& resolution(Vertex v) const { return resolutions_.at(v); }
  /// Sorted lexicographically by (from, crossing).
  const std::vector<CubeEdge>& edges() const { return edges_; }
  std::size_t edge_index(Vertex from, int crossing) const;
  std::vector<Face> faces() const;

 private:
  AnnularDiagram diagram_;
  DiagramStats stats_;
  int winding_parity_ = 0;
  std::vector<Resolution> resolutions_;
  std::vector<CubeEdge> edges_;
  std::vector<std::int64_t> edge_lookup_;
};

/// Ordered (tail, head) circles of the split arrow, read off the crossing's arrow in
/// the 1-smoothing (the 0-smoothing arrow rotated 90 degrees clockwise). Throws
/// std::invalid_argument on a merge.
std::pair<std::size_t, std::size_t> split_arrow(const AnnularDiagram& d, const Resolution& to, int crossing);

enum class FaceType { commuting, anticommuting, zero };

struct EdgeAssignment {
  std::vector<int> sign;            // per cube edge, +1 or -1
  std::vector<FaceType> face_types; // per face in Cube::faces() order
  std::size_t free_variables = 0;
};

/// Chooses edge signs making the signed cube anticommute on every face whose
/// composites are nonzero. `unsigned_maps[e]` is the map of cube edge e. Free
/// variables of the GF(2) system are set by `free_negative` (default: all +1).
/// Throws InvariantError if a face's composites are not equal up to sign or the
/// system is inconsistent.
EdgeAssignment edge_assignment(const Cube& cube, std::span<const Matrix> unsigned_maps,
                               const std::function<bool(std::size_t)>& free_negative = {});

}  // namespace oddakh
