#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "oddakh/cube.hpp"
#include "oddakh/exterior.hpp"
#include "oddakh/report.hpp"
#include "oddakh/sparse_matrix.hpp"

namespace oddakh {

struct TriDegree {
  int i = 0;
  int j = 0;
  int k = 0;
  friend auto operator<=>(const TriDegree&, const TriDegree&) = default;
};

/// `quantum`: (j - |L|)/2 mod 2. `kshift`: (k - m)/2 mod 2.
enum class Supergrading { quantum, kshift };

struct Generator {
  Vertex vertex = 0;
  exterior::Mask subset = 0;  // over the canonical circle order of the vertex
  TriDegree degree;
  int superdegree = 0;
};

/// Tri-degree of a_S at a resolution. Essential circles of S are those with index
/// >= res.num_trivial.
TriDegree trigrading(const Resolution& res, exterior::Mask subset, const DiagramStats& stats);
int superdegree(const TriDegree& deg, int num_components, int winding_parity, Supergrading mode);

/// F_M on the wedge basis (basis index = subset mask). `circle_map[c]` is the target
/// circle of source circle c; exactly two source circles share a target.
Matrix merge_map(std::span<const std::size_t> circle_map, std::size_t target_circles);
/// F_Δ: substitute the parent by `tail` (via circle_map) and left-wedge by a_tail - a_head.
Matrix split_map(std::span<const std::size_t> circle_map, std::size_t target_circles, std::size_t tail,
                 std::size_t head);
/// Unsigned map of a cube edge.
Matrix edge_map(const Cube& cube, const CubeEdge& edge);

struct BuildOptions {
  Supergrading supergrading = Supergrading::quantum;
  unsigned threads = 1;
  /// Free-variable choice for the edge-assignment solve (default all +1).
  std::function<bool(std::size_t)> free_negative;
};

class ChainComplex {
 public:
  ChainComplex(AnnularDiagram d, const BuildOptions& options = {});

  const Cube& cube() const { return cube_; }
  const AnnularDiagram& diagram() const { return cube_.diagram(); }
  Supergrading supergrading() const { return supergrading_; }
  int winding_parity() const { return cube_.winding_parity(); }

  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  std::size_t offset(Vertex v) const { return offsets_.at(v); }
  std::size_t index(Vertex v, exterior::Mask s) const { return offsets_.at(v) + s; }

  /// Unsigned edge maps, one per cube edge.
  const std::vector<Matrix>& edge_maps() const { return edge_maps_; }
  const EdgeAssignment& assignment() const { return assignment_; }

  const Matrix& d() const { return d_; }
  const Matrix& d0() const { return d0_; }
  const Matrix& dminus() const { return dminus_; }

  /// Generator ids grouped by tri-degree, each list ascending.
  std::map<TriDegree, std::vector<std::size_t>> blocks() const;

 private:
  Cube cube_;
  Supergrading supergrading_;
  std::vector<std::size_t> offsets_;
  std::vector<Generator> generators_;
  std::vector<Matrix> edge_maps_;
  EdgeAssignment assignment_;
  Matrix d_, d0_, dminus_;
};

/// ∂ = ∂₀ + ∂₋, the four square-zero identities, and the degree behavior of every entry.
CheckReport check_differential_identities(const ChainComplex& c);
/// Merge maps are surjective, split maps injective.
CheckReport check_edge_map_ranks(const ChainComplex& c);

}  // namespace oddakh
