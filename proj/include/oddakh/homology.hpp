#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddakh/algebra.hpp"
#include "oddakh/linear_algebra.hpp"

namespace oddakh {

enum class Differential { d0, full };

struct HomologyOptions {
  bool integral = false;
  unsigned threads = 1;
};

struct HomologyBlock {
  TriDegree degree;                     // k = 0 for the bigraded (full differential) case
  std::vector<std::size_t> generators;  // global generator ids, ascending
  std::vector<Vector> image_basis;      // block-local coordinates
  std::vector<Vector> representatives;  // cycles spanning a complement of the image
  std::vector<Integer> torsion;         // integral mode: invariant factors > 1

  std::size_t dim() const { return representatives.size(); }
  /// Coordinates of a cycle along the representatives, or std::nullopt if v is not
  /// in the cycle space spanned by image_basis and representatives.
  std::optional<Vector> decompose(const Vector& v) const;
  /// True if v lies in the span of image_basis.
  bool is_boundary(const Vector& v) const;
};

struct Homology {
  Differential which = Differential::d0;
  bool trigraded = true;
  bool integral = false;
  std::vector<HomologyBlock> blocks;  // every chain block, sorted by degree

  /// Nonzero dimensions only.
  std::map<TriDegree, std::size_t> dimensions() const;
  const HomologyBlock* find(const TriDegree& d) const;
};

Homology homology(const ChainComplex& c, Differential which = Differential::d0, const HomologyOptions& options = {});

/// Sum of dim t^i q^j s^k (the s factor omitted when not trigraded), in degree order.
std::string poincare_polynomial(const std::map<TriDegree, std::size_t>& dims, bool trigraded = true);

}  // namespace oddakh
