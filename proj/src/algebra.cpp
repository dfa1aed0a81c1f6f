#include "oddakh/algebra.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "oddakh/errors.hpp"
#include "oddakh/linear_algebra.hpp"
#include "oddakh/parallel.hpp"

namespace oddakh {

namespace {

int floor_mod2(int x) { return ((x % 2) + 2) % 2; }

std::string degree_string(const TriDegree& d) {
  return "(" + std::to_string(d.i) + ", " + std::to_string(d.j) + ", " + std::to_string(d.k) + ")";
}

}  // namespace

TriDegree trigrading(const Resolution& res, exterior::Mask subset, const DiagramStats& stats) {
  const int n = static_cast<int>(res.size());
  const int n_e = static_cast<int>(res.num_essential());
  const int ell = exterior::degree(subset);
  const int ell_e = exterior::degree(subset >> res.num_trivial);
  const int size_i = std::popcount(res.vertex);
  return {size_i - stats.n_minus, n - 2 * ell + size_i + stats.n_plus - 2 * stats.n_minus, n_e - 2 * ell_e};
}

int superdegree(const TriDegree& deg, int num_components, int winding_parity, Supergrading mode) {
  const int base = mode == Supergrading::quantum ? deg.j - num_components : deg.k - winding_parity;
  if (base % 2 != 0) throw InvariantError("superdegree: grading parity mismatch");
  return floor_mod2(base / 2);
}

Matrix merge_map(std::span<const std::size_t> circle_map, std::size_t target_circles) {
  const std::size_t n0 = circle_map.size();
  if (n0 != target_circles + 1) throw InvariantError("merge_map: circle count mismatch");
  Matrix m(std::size_t{1} << target_circles, std::size_t{1} << n0);
  for (exterior::Mask s = 0; s < (exterior::Mask{1} << n0); ++s)
    if (auto img = exterior::substitute(s, circle_map)) m.add(img->second, s, img->first);
  return m;
}

Matrix split_map(std::span<const std::size_t> circle_map, std::size_t target_circles, std::size_t tail,
                 std::size_t head) {
  const std::size_t n0 = circle_map.size();
  if (target_circles != n0 + 1 || tail == head) throw InvariantError("split_map: circle count mismatch");
  Matrix m(std::size_t{1} << target_circles, std::size_t{1} << n0);
  for (exterior::Mask s = 0; s < (exterior::Mask{1} << n0); ++s) {
    auto img = exterior::substitute(s, circle_map);
    if (!img) throw InvariantError("split_map: substitution is not injective");
    const auto [sign, t] = *img;
    const exterior::Mask a_tail = exterior::Mask{1} << tail;
    const exterior::Mask a_head = exterior::Mask{1} << head;
    if (int w = exterior::wedge_sign(a_tail, t)) m.add(t | a_tail, s, sign * w);
    if (int w = exterior::wedge_sign(a_head, t)) m.add(t | a_head, s, -sign * w);
  }
  return m;
}

Matrix edge_map(const Cube& cube, const CubeEdge& edge) {
  const std::size_t n1 = cube.resolution(edge.to).size();
  if (edge.kind == EdgeKind::merge) return merge_map(edge.circle_map, n1);
  return split_map(edge.circle_map, n1, edge.pair[0], edge.pair[1]);
}

ChainComplex::ChainComplex(AnnularDiagram d, const BuildOptions& options)
    : cube_(std::move(d), options.threads), supergrading_(options.supergrading) {
  const std::size_t nv = cube_.num_vertices();
  const auto& stats = cube_.stats();
  offsets_.resize(nv + 1, 0);
  for (Vertex v = 0; v < nv; ++v) offsets_[v + 1] = offsets_[v] + (std::size_t{1} << cube_.resolution(v).size());
  generators_.resize(offsets_[nv]);
  for (Vertex v = 0; v < nv; ++v) {
    const Resolution& res = cube_.resolution(v);
    for (exterior::Mask s = 0; s < (exterior::Mask{1} << res.size()); ++s) {
      Generator& g = generators_[offsets_[v] + s];
      g.vertex = v;
      g.subset = s;
      g.degree = trigrading(res, s, stats);
      g.superdegree = superdegree(g.degree, stats.num_components, cube_.winding_parity(), supergrading_);
    }
  }

  const auto& edges = cube_.edges();
  edge_maps_.resize(edges.size());
  parallel_for(edges.size(), options.threads, [&](std::size_t e) { edge_maps_[e] = edge_map(cube_, edges[e]); });
  assignment_ = edge_assignment(cube_, edge_maps_, options.free_negative);

  const std::size_t n = generators_.size();
  d_ = Matrix(n, n);
  d0_ = Matrix(n, n);
  dminus_ = Matrix(n, n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::size_t from = offsets_[edges[e].from];
    const std::size_t to = offsets_[edges[e].to];
    const int sign = assignment_.sign[e];
    edge_maps_[e].for_each([&](std::size_t r, std::size_t c, const Rational& v) {
      const std::size_t row = to + r, col = from + c;
      const Rational value = sign * v;
      d_.add(row, col, value);
      const TriDegree& src = generators_[col].degree;
      const TriDegree& dst = generators_[row].degree;
      if (dst.i != src.i + 1 || dst.j != src.j)
        throw InvariantError("differential entry " + degree_string(src) + " -> " + degree_string(dst) +
                             " is not of degree (1, 0, *)");
      if (dst.k == src.k)
        d0_.add(row, col, value);
      else if (dst.k == src.k - 2)
        dminus_.add(row, col, value);
      else
        throw InvariantError("differential entry changes k by " + std::to_string(dst.k - src.k));
    });
  }
}

std::map<TriDegree, std::vector<std::size_t>> ChainComplex::blocks() const {
  std::map<TriDegree, std::vector<std::size_t>> out;
  for (std::size_t g = 0; g < generators_.size(); ++g) out[generators_[g].degree].push_back(g);
  return out;
}

CheckReport check_differential_identities(const ChainComplex& c) {
  CheckReport r;
  if (!(c.d() == c.d0() + c.dminus())) r.fail("d != d0 + d-");
  if (!(c.d() * c.d()).is_zero()) r.fail("d^2 != 0");
  if (!(c.d0() * c.d0()).is_zero()) r.fail("d0^2 != 0");
  if (!(c.dminus() * c.dminus()).is_zero()) r.fail("d-^2 != 0");
  if (!(c.d0() * c.dminus() + c.dminus() * c.d0()).is_zero()) r.fail("d0 d- + d- d0 != 0");
  const auto& gens = c.generators();
  c.d().for_each([&](std::size_t row, std::size_t col, const Rational&) {
    const TriDegree& s = gens[col].degree;
    const TriDegree& t = gens[row].degree;
    if (t.i != s.i + 1 || t.j != s.j || (t.k != s.k && t.k != s.k - 2))
      r.fail("entry " + degree_string(s) + " -> " + degree_string(t) + " has the wrong degree");
  });
  c.d0().for_each([&](std::size_t row, std::size_t col, const Rational&) {
    if (gens[row].degree.k != gens[col].degree.k) r.fail("d0 does not preserve k");
  });
  return r;
}

CheckReport check_edge_map_ranks(const ChainComplex& c) {
  CheckReport r;
  const auto& edges = c.cube().edges();
  for (std::size_t e = 0; e < edges.size() && r.ok; ++e) {
    const Matrix& m = c.edge_maps()[e];
    const std::size_t rk = rank(m);
    if (edges[e].kind == EdgeKind::merge && rk != m.rows())
      r.fail("merge edge " + std::to_string(e) + " is not surjective");
    if (edges[e].kind == EdgeKind::split && rk != m.cols())
      r.fail("split edge " + std::to_string(e) + " is not injective");
  }
  return r;
}

}  // namespace oddakh
