#include "oddakh/oracle.hpp"

#include <bit>
#include <string>

#include "oddakh/cube.hpp"
#include "oddakh/linear_algebra.hpp"

namespace oddakh {

Gf2Complex even_complex(const AnnularDiagram& d) {
  const std::size_t nc = d.num_crossings();
  const DiagramStats st = crossing_signs(d);
  const std::size_t nv = std::size_t{1} << nc;
  std::vector<Resolution> res(nv);
  for (Vertex v = 0; v < nv; ++v) res[v] = resolve(d, v);

  Gf2Complex c;
  std::vector<std::size_t> offset(nv + 1, 0);
  for (Vertex v = 0; v < nv; ++v) {
    offset[v + 1] = offset[v] + (std::size_t{1} << res[v].size());
    const int n = static_cast<int>(res[v].size());
    int n_e = 0;
    for (const auto& circle : res[v].circles) n_e += circle.gamma_intersection != 0;
    for (exterior::Mask s = 0; s < (exterior::Mask{1} << n); ++s) {
      int minus_e = 0;
      for (int q = 0; q < n; ++q)
        if (((s >> q) & 1u) && res[v].circles[q].gamma_intersection != 0) ++minus_e;
      const int h = std::popcount(v);
      c.label.emplace_back(v, s);
      c.degree.push_back({h - st.n_minus, n - 2 * std::popcount(s) + h + st.n_plus - 2 * st.n_minus, n_e - 2 * minus_e});
    }
  }

  for (Vertex v = 0; v < nv; ++v) {
    for (std::size_t x = 0; x < nc; ++x) {
      if ((v >> x) & 1u) continue;
      const Vertex w = v | (Vertex{1} << x);
      const Resolution& r0 = res[v];
      const Resolution& r1 = res[w];
      const auto& xe = d.crossings()[x].edges;
      // Where each old circle goes, read off any of its edges.
      std::vector<std::size_t> to(r0.size());
      for (std::size_t q = 0; q < r0.size(); ++q) to[q] = r1.circle_of(d, r0.circles[q].arcs.front().first);
      const std::size_t a = r0.circle_of(d, xe[0]), b = r0.circle_of(d, xe[2]);
      for (exterior::Mask s = 0; s < (exterior::Mask{1} << r0.size()); ++s) {
        const std::size_t col = offset[v] + s;
        exterior::Mask base = 0;
        for (std::size_t q = 0; q < r0.size(); ++q)
          if (q != a && q != b && ((s >> q) & 1u)) base |= exterior::Mask{1} << to[q];
        if (a != b) {
          // m: v+v+ -> v+, v+v- -> v-, v-v+ -> v-, v-v- -> 0.
          const bool ma = (s >> a) & 1u, mb = (s >> b) & 1u;
          if (ma && mb) continue;
          const exterior::Mask t = base | ((ma || mb) ? exterior::Mask{1} << r1.circle_of(d, xe[0]) : 0);
          c.d.emplace(offset[w] + t, col);
        } else {
          // Delta: v+ -> v+v- + v-v+, v- -> v-v-.
          const exterior::Mask c1 = exterior::Mask{1} << r1.circle_of(d, xe[0]);
          const exterior::Mask c2 = exterior::Mask{1} << r1.circle_of(d, xe[1]);
          if ((s >> a) & 1u) {
            c.d.emplace(offset[w] + (base | c1 | c2), col);
          } else {
            c.d.emplace(offset[w] + (base | c1), col);
            c.d.emplace(offset[w] + (base | c2), col);
          }
        }
      }
    }
  }
  return c;
}

Gf2Complex mod2_reduce(const ChainComplex& c) {
  Gf2Complex out;
  for (const auto& g : c.generators()) {
    out.label.emplace_back(g.vertex, g.subset);
    out.degree.push_back(g.degree);
  }
  c.d().for_each([&](std::size_t r, std::size_t col, const Rational& v) {
    if (v.get_den() != 1) return;
    if (mpz_odd_p(v.get_num_mpz_t())) out.d.emplace(r, col);
  });
  return out;
}

CheckReport compare_mod2(const Gf2Complex& odd, const Gf2Complex& even) {
  CheckReport r;
  using Label = std::pair<Vertex, exterior::Mask>;
  auto labelled = [](const Gf2Complex& c) {
    std::set<std::pair<Label, Label>> s;
    for (const auto& [row, col] : c.d) s.emplace(c.label[row], c.label[col]);
    return s;
  };
  if (std::set<Label>(odd.label.begin(), odd.label.end()) != std::set<Label>(even.label.begin(), even.label.end())) {
    r.fail("generator sets differ");
    return r;
  }
  if (labelled(odd) != labelled(even)) r.fail("mod-2 reduction differs from the even differential");
  return r;
}

std::map<TriDegree, std::size_t> gf2_homology(const Gf2Complex& c) {
  std::map<TriDegree, std::vector<std::size_t>> blocks;
  for (std::size_t g = 0; g < c.size(); ++g) blocks[c.degree[g]].push_back(g);
  std::vector<std::size_t> local(c.size());
  for (const auto& [deg, ids] : blocks)
    for (std::size_t l = 0; l < ids.size(); ++l) local[ids[l]] = l;

  // Rank of the k-preserving map out of each block.
  std::map<TriDegree, std::size_t> out_rank;
  std::map<TriDegree, Gf2Matrix> maps;
  for (const auto& [row, col] : c.d) {
    const TriDegree& s = c.degree[col];
    const TriDegree& t = c.degree[row];
    if (t.k != s.k) continue;
    auto it = maps.find(s);
    if (it == maps.end()) it = maps.emplace(s, Gf2Matrix(blocks.at(t).size(), blocks.at(s).size())).first;
    it->second.flip(local[row], local[col]);
  }
  for (const auto& [deg, m] : maps) out_rank[deg] = m.rank();

  std::map<TriDegree, std::size_t> dims;
  for (const auto& [deg, ids] : blocks) {
    TriDegree prev = deg;
    --prev.i;
    const std::size_t z = ids.size() - (out_rank.count(deg) ? out_rank[deg] : 0);
    const std::size_t b = out_rank.count(prev) ? out_rank[prev] : 0;
    if (z > b) dims[deg] = z - b;
  }
  return dims;
}

std::map<TriDegree, std::size_t> even_akh_gf2(const AnnularDiagram& d) { return gf2_homology(even_complex(d)); }

}  // namespace oddakh
