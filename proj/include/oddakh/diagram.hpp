#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace oddakh {

using EdgeId = int;

/// Arrow decoration of a crossing. The direction is read with the crossing placed
/// so that the incoming under-strand end sits at the SW corner (so the over-strand
/// joins NW and SE): `up` points from the SW-SE arc to the NW-NE arc of the
/// 0-smoothing.
enum class Arrow { up, down };

/// One crossing in planar-diagram notation: edge ids listed counterclockwise,
/// starting at the incoming under-strand.
struct Crossing {
  std::array<EdgeId, 4> edges{};
  Arrow arrow = Arrow::up;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// A transverse intersection of the basepoint arc with an edge. `sign` is +1 when the
/// edge, traversed along the link orientation, crosses the arc counterclockwise
/// around the inner basepoint.
struct GammaCrossing {
  EdgeId edge = 0;
  int sign = 1;
  friend bool operator==(const GammaCrossing&, const GammaCrossing&) = default;
};

struct DiagramStats {
  int n_plus = 0;
  int n_minus = 0;
  int num_components = 0;
  friend bool operator==(const DiagramStats&, const DiagramStats&) = default;
};

/// Position of an edge end: crossing index and slot 0..3 in the crossing tuple.
struct Slot {
  int crossing = -1;
  int position = -1;
  friend bool operator==(const Slot&, const Slot&) = default;
};

/// A validated annular link diagram. Immutable once constructed.
class AnnularDiagram {
 public:
  /// Validates the raw data and derives edge orientations; throws InputError.
  AnnularDiagram(std::string name, std::vector<Crossing> crossings, std::vector<EdgeId> loops,
                 std::vector<GammaCrossing> gamma);

  const std::string& name() const { return name_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<EdgeId>& loops() const { return loops_; }
  const std::vector<GammaCrossing>& gamma() const { return gamma_; }
  std::size_t num_crossings() const { return crossings_.size(); }

  /// All edge ids, ascending.
  const std::vector<EdgeId>& edges() const { return edges_; }
  std::size_t edge_index(EdgeId e) const;
  bool is_loop(EdgeId e) const;
  /// Slot where the edge ends (enters a crossing) / starts. Not defined for loops.
  Slot head(EdgeId e) const;
  Slot tail(EdgeId e) const;
  /// True if the over-strand runs from slot 3 to slot 1.
  bool over_runs_forward(int crossing) const { return over_forward_.at(crossing); }
  /// +1 or -1.
  int crossing_sign(int crossing) const { return over_forward_.at(crossing) ? 1 : -1; }
  /// Link components, each as its edges in traversal order.
  const std::vector<std::vector<EdgeId>>& components() const { return components_; }

  friend bool operator==(const AnnularDiagram& a, const AnnularDiagram& b) {
    return a.name_ == b.name_ && a.crossings_ == b.crossings_ && a.loops_ == b.loops_ && a.gamma_ == b.gamma_;
  }

 private:
  void validate();

  std::string name_;
  std::vector<Crossing> crossings_;
  std::vector<EdgeId> loops_;
  std::vector<GammaCrossing> gamma_;

  std::vector<EdgeId> edges_;
  std::unordered_map<EdgeId, std::size_t> edge_pos_;
  std::vector<Slot> head_, tail_;  // indexed by edge_index
  std::vector<bool> loop_;
  std::vector<bool> over_forward_;
  std::vector<std::vector<EdgeId>> components_;
};

/// Reads the JSON diagram format (see README); throws InputError.
AnnularDiagram parse_diagram(std::string_view text);
/// Canonical text form; parse_diagram(serialize(d)) == d.
std::string serialize(const AnnularDiagram& d);
/// Loads `path`, or `path` + ".json" if the former does not exist.
AnnularDiagram load_diagram(const std::filesystem::path& path);

DiagramStats crossing_signs(const AnnularDiagram& d);
/// Parity of the algebraic intersection of the link with the basepoint arc.
int winding_parity(const AnnularDiagram& d);

/// Same diagram with crossings (and their arrows) listed in the order `order[new] = old`.
AnnularDiagram permute_crossings(const AnnularDiagram& d, const std::vector<int>& order);

}  // namespace oddakh
