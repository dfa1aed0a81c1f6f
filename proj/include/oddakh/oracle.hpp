#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "oddakh/algebra.hpp"
#include "oddakh/diagram.hpp"
#include "oddakh/exterior.hpp"
#include "oddakh/report.hpp"

namespace oddakh {

/// Chain complex over GF(2). Generator g is labelled by (vertex, subset), the subset
/// marking the circles decorated v-.
struct Gf2Complex {
  std::vector<std::pair<Vertex, exterior::Mask>> label;
  std::vector<TriDegree> degree;
  std::set<std::pair<std::size_t, std::size_t>> d;  // nonzero (row, column) entries

  std::size_t size() const { return label.size(); }
};

/// Even annular Khovanov complex over GF(2), built without signs.
Gf2Complex even_complex(const AnnularDiagram& d);
/// Entrywise reduction of the odd differential.
Gf2Complex mod2_reduce(const ChainComplex& c);
/// The two complexes agree entrywise after matching generators by label.
CheckReport compare_mod2(const Gf2Complex& odd, const Gf2Complex& even);
/// Homology of the k-preserving part, nonzero dimensions only.
std::map<TriDegree, std::size_t> gf2_homology(const Gf2Complex& c);
std::map<TriDegree, std::size_t> even_akh_gf2(const AnnularDiagram& d);

}  // namespace oddakh
