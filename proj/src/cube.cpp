#include "oddakh/cube.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "oddakh/errors.hpp"
#include "oddakh/linear_algebra.hpp"
#include "oddakh/parallel.hpp"

namespace oddakh {

namespace {

// Slot joined to `position` by the smoothing arc: 0-smoothing pairs (0,1),(2,3);
// 1-smoothing pairs (0,3),(1,2).
int smoothing_partner(int position, bool one_smoothing) {
  static constexpr int zero[4] = {1, 0, 3, 2};
  static constexpr int one[4] = {3, 2, 1, 0};
  return one_smoothing ? one[position] : zero[position];
}

}  // namespace

Resolution trace_circles(const AnnularDiagram& d, Vertex vertex) {
  const auto& edges = d.edges();
  const std::size_t ne = edges.size();
  std::vector<int> gamma_sum(ne, 0);
  std::vector<long> gamma_first(ne, -1);
  for (std::size_t g = 0; g < d.gamma().size(); ++g) {
    const std::size_t i = d.edge_index(d.gamma()[g].edge);
    gamma_sum[i] += d.gamma()[g].sign;
    if (gamma_first[i] < 0) gamma_first[i] = static_cast<long>(g);
  }

  Resolution res;
  res.vertex = vertex;
  res.circle_of_edge.assign(ne, std::numeric_limits<std::size_t>::max());
  std::vector<bool> visited(ne, false);

  for (std::size_t start = 0; start < ne; ++start) {
    if (visited[start]) continue;
    Circle circle;
    const std::size_t id = res.circles.size();
    std::size_t cur = start;
    bool forward = true;
    for (;;) {
      visited[cur] = true;
      res.circle_of_edge[cur] = id;
      circle.arcs.emplace_back(edges[cur], forward);
      if (d.is_loop(edges[cur])) break;
      const Slot arrive = forward ? d.head(edges[cur]) : d.tail(edges[cur]);
      const bool one = (vertex >> arrive.crossing) & 1u;
      const int q = smoothing_partner(arrive.position, one);
      const EdgeId next = d.crossings()[arrive.crossing].edges[q];
      const Slot leave{arrive.crossing, q};
      const bool next_forward = d.tail(next) == leave;
      const std::size_t ni = d.edge_index(next);
      if (ni == start) {
        if (!next_forward) throw InvariantError("circle tracing re-entered its first edge backwards");
        break;
      }
      if (visited[ni]) throw InvariantError("circle tracing revisited an edge");
      cur = ni;
      forward = next_forward;
    }
    for (const auto& [e, fwd] : circle.arcs) {
      const std::size_t i = d.edge_index(e);
      circle.gamma_intersection += fwd ? gamma_sum[i] : -gamma_sum[i];
      if (gamma_first[i] >= 0 && (circle.first_gamma < 0 || gamma_first[i] < circle.first_gamma))
        circle.first_gamma = gamma_first[i];
    }
    if (std::abs(circle.gamma_intersection) > 1)
      throw InputError("invalid diagram: a state circle meets the basepoint arc with algebraic intersection " +
                       std::to_string(circle.gamma_intersection));
    res.circles.push_back(std::move(circle));
  }
  res.num_trivial = static_cast<std::size_t>(
      std::count_if(res.circles.begin(), res.circles.end(), [](const Circle& c) { return !c.essential(); }));
  return res;
}

std::vector<std::size_t> proximity_order(const Resolution& res) {
  std::vector<std::size_t> trivial, essential;
  for (std::size_t i = 0; i < res.circles.size(); ++i) (res.circles[i].essential() ? essential : trivial).push_back(i);
  std::stable_sort(essential.begin(), essential.end(), [&](std::size_t a, std::size_t b) {
    return res.circles[a].first_gamma < res.circles[b].first_gamma;
  });
  trivial.insert(trivial.end(), essential.begin(), essential.end());
  return trivial;
}

Resolution resolve(const AnnularDiagram& d, Vertex vertex) {
  Resolution raw = trace_circles(d, vertex);
  const auto perm = proximity_order(raw);
  std::vector<std::size_t> new_index(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) new_index[perm[k]] = k;
  Resolution res;
  res.vertex = vertex;
  res.num_trivial = raw.num_trivial;
  for (auto old : perm) res.circles.push_back(std::move(raw.circles[old]));
  res.circle_of_edge = raw.circle_of_edge;
  for (auto& c : res.circle_of_edge) c = new_index[c];
  return res;
}

std::pair<std::size_t, std::size_t> split_arrow(const AnnularDiagram& d, const Resolution& to, int crossing) {
  if (!((to.vertex >> crossing) & 1u)) throw std::invalid_argument("split_arrow: crossing is 0-smoothed at target");
  const auto& x = d.crossings().at(crossing);
  const std::size_t left = to.circle_of(d, x.edges[0]);   // arc joining slots 0 and 3
  const std::size_t right = to.circle_of(d, x.edges[1]);  // arc joining slots 1 and 2
  if (left == right) throw std::invalid_argument("split_arrow: called on a merge edge");
  return x.arrow == Arrow::up ? std::pair{left, right} : std::pair{right, left};
}

Cube::Cube(AnnularDiagram d, unsigned threads) : diagram_(std::move(d)) {
  const std::size_t c = diagram_.num_crossings();
  if (c > kMaxCrossings)
    throw InputError("diagram has " + std::to_string(c) + " crossings; at most " + std::to_string(kMaxCrossings) +
                     " are supported");
  stats_ = crossing_signs(diagram_);
  winding_parity_ = oddakh::winding_parity(diagram_);
  const std::size_t nv = std::size_t{1} << c;
  resolutions_.resize(nv);
  parallel_for(nv, threads, [&](std::size_t v) { resolutions_[v] = resolve(diagram_, static_cast<Vertex>(v)); });

  edge_lookup_.assign(nv * std::max<std::size_t>(c, 1), -1);
  for (Vertex v = 0; v < nv; ++v) {
    for (int x = 0; x < static_cast<int>(c); ++x) {
      if ((v >> x) & 1u) continue;
      CubeEdge e;
      e.from = v;
      e.to = v | (Vertex{1} << x);
      e.crossing = x;
      const Resolution& r0 = resolutions_[e.from];
      const Resolution& r1 = resolutions_[e.to];
      const auto& xe = diagram_.crossings()[x].edges;
      e.circle_map.resize(r0.size());
      for (std::size_t k = 0; k < r0.size(); ++k) e.circle_map[k] = r1.circle_of(diagram_, r0.circles[k].arcs.front().first);
      const std::size_t p = r0.circle_of(diagram_, xe[0]);
      const std::size_t q = r0.circle_of(diagram_, xe[2]);
      if (p != q) {
        e.kind = EdgeKind::merge;
        e.pair = {std::min(p, q), std::max(p, q)};
        e.single = r1.circle_of(diagram_, xe[0]);
        if (r1.size() + 1 != r0.size()) throw InvariantError("merge edge does not reduce the circle count by one");
      } else {
        e.kind = EdgeKind::split;
        const auto [tail, head] = split_arrow(diagram_, r1, x);
        e.pair = {tail, head};
        e.single = p;
        e.circle_map[p] = tail;
        if (r1.size() != r0.size() + 1) throw InvariantError("split edge does not raise the circle count by one");
      }
      edge_lookup_[v * c + x] = static_cast<std::int64_t>(edges_.size());
      edges_.push_back(std::move(e));
    }
  }
}

std::size_t Cube::edge_index(Vertex from, int crossing) const {
  const std::size_t c = num_crossings();
  const std::int64_t idx = (crossing >= 0 && static_cast<std::size_t>(crossing) < c) ? edge_lookup_.at(from * c + crossing) : -1;
  if (idx < 0) throw std::out_of_range("Cube::edge_index: no such edge");
  return static_cast<std::size_t>(idx);
}

std::vector<Face> Cube::faces() const {
  std::vector<Face> out;
  const int c = static_cast<int>(num_crossings());
  for (Vertex v = 0; v < num_vertices(); ++v)
    for (int a = 0; a < c; ++a) {
      if ((v >> a) & 1u) continue;
      for (int b = a + 1; b < c; ++b) {
        if ((v >> b) & 1u) continue;
        const Vertex va = v | (Vertex{1} << a);
        const Vertex vb = v | (Vertex{1} << b);
        out.push_back({v, a, b, {edge_index(v, a), edge_index(va, b), edge_index(v, b), edge_index(vb, a)}});
      }
    }
  return out;
}

EdgeAssignment edge_assignment(const Cube& cube, std::span<const Matrix> unsigned_maps,
                               const std::function<bool(std::size_t)>& free_negative) {
  if (unsigned_maps.size() != cube.edges().size()) throw std::invalid_argument("edge_assignment: one map per edge");
  EdgeAssignment out;
  std::vector<Gf2Equation> eqs;
  for (const Face& f : cube.faces()) {
    const Matrix via_a = unsigned_maps[f.edges[1]] * unsigned_maps[f.edges[0]];
    const Matrix via_b = unsigned_maps[f.edges[3]] * unsigned_maps[f.edges[2]];
    FaceType t;
    if (via_a.is_zero() && via_b.is_zero())
      t = FaceType::zero;
    else if (via_a == via_b)
      t = FaceType::commuting;
    else if (via_a == -via_b)
      t = FaceType::anticommuting;
    else
      throw InvariantError("face at vertex " + std::to_string(f.base) + " (crossings " + std::to_string(f.a) + ", " +
                           std::to_string(f.b) + ") has composites that differ by more than a sign");
    out.face_types.push_back(t);
    // A commuting face needs an odd number of negative edges, an anticommuting one an even number.
    if (t != FaceType::zero) eqs.push_back({{f.edges.begin(), f.edges.end()}, t == FaceType::commuting});
  }
  const std::size_t nvars = cube.edges().size();
  auto solution = solve_gf2(nvars, eqs, [&](std::size_t e) { return free_negative ? free_negative(e) : false; });
  if (!solution) throw InvariantError("edge assignment system is inconsistent");
  Gf2Matrix system(eqs.size(), nvars);
  for (std::size_t i = 0; i < eqs.size(); ++i)
    for (auto v : eqs[i].vars) system.flip(i, v);
  out.free_variables = nvars - system.rank();
  out.sign.resize(nvars);
  for (std::size_t e = 0; e < nvars; ++e) out.sign[e] = (*solution)[e] ? -1 : 1;
  return out;
}

}  // namespace oddakh
