#include "oddakh/gl11.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "oddakh/errors.hpp"
#include "oddakh/exterior.hpp"
#include "oddakh/linear_algebra.hpp"

namespace oddakh {

namespace {

int parity_sign(int p) { return (p % 2) ? -1 : 1; }

Matrix diagonal(const std::vector<Rational>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.add(i, i, d[i]);
  return m;
}

SuperMap identity_map(std::size_t factors) { return {Matrix::identity(std::size_t{1} << factors), 0}; }

// id^(x)left (x) local (x) id^(x)right on V^(x)n with popcount parities.
Matrix insert_local(const SuperMap& local, std::size_t left, std::size_t local_in, std::size_t right) {
  const auto left_par = popcount_parities(left);
  SuperMap partial = tensor_maps(identity_map(left), left_par, local);
  const auto partial_par = popcount_parities(left + local_in);
  return tensor_maps(partial, partial_par, identity_map(right)).matrix;
}

struct EdgeFrame {
  std::vector<std::size_t> order0, order1;  // tensor position -> circle
  std::size_t position = 0;                 // first tensor position of the local factor
};

EdgeFrame edge_frame(const Cube& cube, const CubeEdge& edge) {
  const std::size_t n0 = cube.resolution(edge.from).size();
  EdgeFrame fr;
  if (edge.kind == EdgeKind::merge) {
    const auto [p, q] = edge.pair;
    for (std::size_t c = 0; c < n0; ++c) {
      if (c == q) continue;
      fr.order0.push_back(c);
      if (c == p) {
        fr.position = fr.order0.size() - 1;
        fr.order0.push_back(q);
      }
    }
    for (std::size_t pos = 0; pos < n0; ++pos)
      if (fr.order0[pos] != q) fr.order1.push_back(edge.circle_map[fr.order0[pos]]);
  } else {
    for (std::size_t c = 0; c < n0; ++c) {
      fr.order0.push_back(c);
      if (c == edge.single) {
        fr.position = c;
        fr.order1.push_back(edge.pair[0]);
        fr.order1.push_back(edge.pair[1]);
      } else {
        fr.order1.push_back(edge.circle_map[c]);
      }
    }
  }
  return fr;
}

Matrix to_tensor_coordinates(const Cube& cube, const CubeEdge& edge, const EdgeFrame& fr, const Matrix& map) {
  const Matrix a0 = alpha_iso(cube.resolution(edge.from).size(), fr.order0);
  const Matrix a1 = alpha_iso(cube.resolution(edge.to).size(), fr.order1);
  return a1 * map * a0.transpose();
}

SuperMap sparse_map(std::size_t rows, std::size_t cols, int degree,
                    std::initializer_list<std::tuple<std::size_t, std::size_t, int>> entries) {
  SuperMap m{Matrix(rows, cols), degree};
  for (const auto& [r, c, v] : entries) m.matrix.add(r, c, v);
  return m;
}

// V (x) V basis: 0 = v+v+, 1 = v-v+, 2 = v+v-, 3 = v-v-.
SuperMap m0_trivial_essential() { return sparse_map(2, 4, 0, {{0, 0, 1}, {1, 2, 1}}); }
SuperMap m0_essential_essential() { return sparse_map(2, 4, 0, {{1, 2, 1}, {1, 1, 1}}); }
SuperMap delta0_trivial_essential() { return sparse_map(4, 2, 1, {{1, 0, 1}, {3, 1, 1}}); }
SuperMap delta0_essential_essential() { return sparse_map(4, 2, 1, {{1, 0, 1}, {2, 0, -1}}); }

std::string degree_string(const TriDegree& d) {
  return "(" + std::to_string(d.i) + ", " + std::to_string(d.j) + ", " + std::to_string(d.k) + ")";
}

}  // namespace

Matrix SuperRep::h1() const {
  Matrix m = hplus + hminus;
  m *= Rational(1, 2);
  return m;
}

Matrix SuperRep::h2() const {
  Matrix m = hplus - hminus;
  m *= Rational(1, 2);
  return m;
}

const char* name(Gl11 x) {
  switch (x) {
    case Gl11::e: return "e";
    case Gl11::f: return "f";
    case Gl11::h1: return "h1";
    case Gl11::h2: return "h2";
  }
  return "?";
}

Matrix action(const SuperRep& rep, Gl11 x) {
  switch (x) {
    case Gl11::e: return rep.e;
    case Gl11::f: return rep.f;
    case Gl11::h1: return rep.h1();
    case Gl11::h2: return rep.h2();
  }
  throw std::invalid_argument("action: unknown generator");
}

Matrix supercommutator(const Matrix& a, int pa, const Matrix& b, int pb) {
  return (pa * pb) % 2 ? a * b + b * a : a * b - b * a;
}

bool is_homogeneous(const Matrix& m, std::span<const int> domain, std::span<const int> codomain, int degree) {
  bool ok = true;
  m.for_each([&](std::size_t r, std::size_t c, const Rational&) {
    if ((codomain[r] - domain[c] - degree) % 2 != 0) ok = false;
  });
  return ok;
}

std::vector<int> popcount_parities(std::size_t factors) {
  std::vector<int> p(std::size_t{1} << factors);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::popcount(i) % 2;
  return p;
}

SuperRep irreducible(int m, int n) {
  SuperRep r;
  if (m + n == 0) {
    r.parity = {0};
    r.e = r.f = Matrix(1, 1);
    r.hplus = Matrix(1, 1);
    r.hminus = diagonal({Rational(m - n)});
    return r;
  }
  const int pn = ((n % 2) + 2) % 2;
  r.parity = {pn, 1 - pn};
  r.e = Matrix(2, 2);
  r.e.add(0, 1, m + n);
  r.f = Matrix(2, 2);
  r.f.add(1, 0, 1);
  r.hplus = diagonal({Rational(m + n), Rational(m + n)});
  r.hminus = diagonal({Rational(m - n), Rational(m - n - 2)});
  return r;
}

SuperRep trivial_rep(std::vector<int> parity) {
  SuperRep r;
  const std::size_t d = parity.size();
  r.parity = std::move(parity);
  r.e = r.f = r.hplus = r.hminus = Matrix(d, d);
  return r;
}

CheckReport verify_superalgebra(const SuperRep& rep) {
  CheckReport r;
  const std::size_t d = rep.dim();
  for (const Matrix* m : {&rep.e, &rep.f, &rep.hplus, &rep.hminus})
    if (m->rows() != d || m->cols() != d) {
      r.fail("matrix shape does not match the basis");
      return r;
    }
  const auto& p = rep.parity;
  if (!is_homogeneous(rep.e, p, p, 1)) r.fail("e is not odd");
  if (!is_homogeneous(rep.f, p, p, 1)) r.fail("f is not odd");
  if (!is_homogeneous(rep.hplus, p, p, 0)) r.fail("h+ is not even");
  if (!is_homogeneous(rep.hminus, p, p, 0)) r.fail("h- is not even");

  const Matrix& e = rep.e;
  const Matrix& f = rep.f;
  const Matrix h1 = rep.h1(), h2 = rep.h2();
  auto expect = [&](const Matrix& got, const Matrix& want, const char* what) {
    if (!(got == want)) r.fail(what);
  };
  const Matrix zero(d, d);
  expect(supercommutator(e, 1, f, 1), rep.hplus, "[e,f]_s != h+");
  expect(supercommutator(e, 1, e, 1), zero, "[e,e]_s != 0");
  expect(supercommutator(f, 1, f, 1), zero, "[f,f]_s != 0");
  expect(supercommutator(e, 1, rep.hminus, 0), Rational(-2) * e, "[e,h-]_s != -2e");
  expect(supercommutator(f, 1, rep.hminus, 0), Rational(2) * f, "[f,h-]_s != 2f");
  expect(supercommutator(rep.hminus, 0, rep.hminus, 0), zero, "[h-,h-]_s != 0");
  expect(supercommutator(rep.hplus, 0, e, 1), zero, "h+ does not commute with e");
  expect(supercommutator(rep.hplus, 0, f, 1), zero, "h+ does not commute with f");
  expect(supercommutator(rep.hplus, 0, rep.hminus, 0), zero, "h+ does not commute with h-");
  expect(supercommutator(e, 1, h1, 0), -e, "[e,h1]_s != -e");
  expect(supercommutator(f, 1, h1, 0), f, "[f,h1]_s != f");
  expect(supercommutator(e, 1, h2, 0), e, "[e,h2]_s != e");
  expect(supercommutator(f, 1, h2, 0), -f, "[f,h2]_s != -f");
  expect(supercommutator(h1, 0, h2, 0), zero, "[h1,h2]_s != 0");
  expect(supercommutator(h1, 0, h1, 0), zero, "[h1,h1]_s != 0");
  expect(supercommutator(h2, 0, h2, 0), zero, "[h2,h2]_s != 0");
  return r;
}

SuperMap tensor_maps(const SuperMap& f, std::span<const int> f_domain, const SuperMap& g) {
  const std::size_t dv = f.matrix.cols(), dv2 = f.matrix.rows();
  const std::size_t dw = g.matrix.cols(), dw2 = g.matrix.rows();
  if (f_domain.size() != dv) throw std::invalid_argument("tensor_maps: parity list does not match the domain");
  SuperMap out{Matrix(dv2 * dw2, dv * dw), (f.degree + g.degree) % 2};
  f.matrix.for_each([&](std::size_t a2, std::size_t a, const Rational& x) {
    const int s = parity_sign(g.degree * f_domain[a]);
    g.matrix.for_each([&](std::size_t b2, std::size_t b, const Rational& y) {
      out.matrix.add(a2 + dv2 * b2, a + dv * b, s * x * y);
    });
  });
  return out;
}

Matrix twist(std::span<const int> v, std::span<const int> w) {
  const std::size_t dv = v.size(), dw = w.size();
  Matrix t(dv * dw, dv * dw);
  for (std::size_t a = 0; a < dv; ++a)
    for (std::size_t b = 0; b < dw; ++b) t.add(b + dw * a, a + dv * b, parity_sign(v[a] * w[b]));
  return t;
}

SuperRep tensor(const SuperRep& v, const SuperRep& w) {
  const std::size_t dv = v.dim(), dw = w.dim();
  SuperRep out;
  out.parity.resize(dv * dw);
  for (std::size_t b = 0; b < dw; ++b)
    for (std::size_t a = 0; a < dv; ++a) out.parity[a + dv * b] = (v.parity[a] + w.parity[b]) % 2;
  auto combine = [&](const Matrix& x, const Matrix& y, int degree) {
    Matrix m(dv * dw, dv * dw);
    x.for_each([&](std::size_t a2, std::size_t a, const Rational& val) {
      for (std::size_t b = 0; b < dw; ++b) m.add(a2 + dv * b, a + dv * b, parity_sign(degree * w.parity[b]) * val);
    });
    y.for_each([&](std::size_t b2, std::size_t b, const Rational& val) {
      for (std::size_t a = 0; a < dv; ++a) m.add(a + dv * b2, a + dv * b, val);
    });
    return m;
  };
  out.e = combine(v.e, w.e, 1);
  out.f = combine(v.f, w.f, 1);
  out.hplus = combine(v.hplus, w.hplus, 0);
  out.hminus = combine(v.hminus, w.hminus, 0);
  return out;
}

SuperRep dual(const SuperRep& v) {
  SuperRep out;
  out.parity = v.parity;
  auto dualize = [&](const Matrix& x, int degree) {
    Matrix m(x.cols(), x.rows());
    x.for_each([&](std::size_t r, std::size_t c, const Rational& val) {
      m.add(c, r, -parity_sign(degree * v.parity[r]) * val);
    });
    return m;
  };
  out.e = dualize(v.e, 1);
  out.f = dualize(v.f, 1);
  out.hplus = dualize(v.hplus, 0);
  out.hminus = dualize(v.hminus, 0);
  return out;
}

SuperRep shift(const SuperRep& v, int n) {
  SuperRep out = v;
  for (auto& p : out.parity) p = (((p + n) % 2) + 2) % 2;
  return out;
}

SuperRep change_basis(const SuperRep& v, const Matrix& p) {
  if (p.rows() != v.dim() || p.cols() != v.dim()) throw std::invalid_argument("change_basis: shape mismatch");
  SuperRep out;
  out.parity.assign(v.dim(), -1);
  p.for_each([&](std::size_t r, std::size_t c, const Rational& x) {
    if ((x != 1 && x != -1) || out.parity[c] != -1) throw std::invalid_argument("change_basis: not a signed permutation");
    out.parity[c] = v.parity[r];
  });
  const Matrix pt = p.transpose();
  out.e = pt * v.e * p;
  out.f = pt * v.f * p;
  out.hplus = pt * v.hplus * p;
  out.hminus = pt * v.hminus * p;
  return out;
}

SuperRep shifted_dual_fundamental() {
  // New v+ is the old dual vector v-^* (index 1); new v- is -v+^* (index 0).
  Matrix p(2, 2);
  p.add(1, 0, 1);
  p.add(0, 1, -1);
  return change_basis(shift(dual(fundamental()), 1), p);
}

SuperRep exterior_rep(const std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& n,
                      Handedness hand) {
  if (a.size() != b.size()) throw std::invalid_argument("exterior_rep: vector lengths differ");
  const std::size_t k = a.size();
  const std::size_t dim = std::size_t{1} << k;
  SuperRep r;
  r.parity = popcount_parities(k);
  Rational ab = 0;
  for (std::size_t c = 0; c < k; ++c) ab += a[c] * b[c];
  r.e = r.f = r.hplus = r.hminus = Matrix(dim, dim);
  for (exterior::Mask s = 0; s < dim; ++s) {
    const int ell = exterior::degree(s);
    r.hplus.add(s, s, ab);
    r.hminus.add(s, s, n - 2 * ell);
    for (unsigned c = 0; c < k; ++c) {
      const exterior::Mask bit = exterior::Mask{1} << c;
      if (s & bit) {
        const int sg = hand == Handedness::left ? exterior::interior_sign(s, c) : exterior::right_interior_sign(s, c);
        r.e.add(s & ~bit, s, sg * a[c]);
      } else {
        const int sg = hand == Handedness::left ? exterior::wedge_sign(bit, s) : exterior::wedge_sign(s, bit);
        r.f.add(s | bit, s, sg * b[c]);
      }
    }
  }
  return r;
}

SuperRep exterior_action(const Resolution& res, int shift_by, Supergrading mode) {
  const std::size_t nt = res.num_trivial, ne = res.num_essential();
  std::vector<Rational> a(ne, Rational(1)), b(ne);
  for (std::size_t q = 0; q < ne; ++q) b[q] = (q % 2) ? -1 : 1;
  const SuperRep ess = exterior_rep(a, b, Rational(static_cast<long>(ne)), Handedness::right);

  const std::size_t dim = std::size_t{1} << res.size();
  SuperRep r;
  r.parity.resize(dim);
  for (exterior::Mask s = 0; s < dim; ++s) {
    const int l = mode == Supergrading::quantum ? exterior::degree(s) : exterior::degree(s >> nt);
    r.parity[s] = (((l + shift_by) % 2) + 2) % 2;
  }
  auto lift = [&](const Matrix& m) {
    Matrix out(dim, dim);
    for (exterior::Mask t = 0; t < (exterior::Mask{1} << nt); ++t)
      m.for_each([&](std::size_t row, std::size_t col, const Rational& v) {
        out.add(t | (row << nt), t | (col << nt), v);
      });
    return out;
  };
  r.e = lift(ess.e);
  r.f = lift(ess.f);
  r.hplus = lift(ess.hplus);
  r.hminus = lift(ess.hminus);
  return r;
}

SuperRep tensor_action(const Resolution& res, int shift_by, Supergrading mode) {
  SuperRep r = trivial_rep({0});
  const SuperRep trivial_factor = trivial_rep(mode == Supergrading::quantum ? std::vector<int>{0, 1} : std::vector<int>{0, 0});
  const SuperRep even_factor = fundamental();
  const SuperRep odd_factor = shifted_dual_fundamental();
  for (std::size_t c = 0; c < res.size(); ++c) {
    if (c < res.num_trivial)
      r = tensor(r, trivial_factor);
    else
      r = tensor(r, ((c - res.num_trivial) % 2) ? odd_factor : even_factor);
  }
  return shift(r, shift_by);
}

Matrix alpha_iso(std::size_t circles, std::span<const std::size_t> order) {
  if (order.size() != circles) throw std::invalid_argument("alpha_iso: order must list every circle");
  std::vector<std::size_t> pos(circles, circles);
  for (std::size_t p = 0; p < circles; ++p) {
    if (order[p] >= circles || pos[order[p]] != circles) throw std::invalid_argument("alpha_iso: not a permutation");
    pos[order[p]] = p;
  }
  const std::size_t dim = std::size_t{1} << circles;
  Matrix m(dim, dim);
  for (exterior::Mask s = 0; s < dim; ++s) {
    const auto img = exterior::substitute(s, pos);
    m.add(img->second, s, img->first);
  }
  return m;
}

Matrix alpha_iso(std::size_t circles) {
  std::vector<std::size_t> order(circles);
  for (std::size_t i = 0; i < circles; ++i) order[i] = i;
  return alpha_iso(circles, order);
}

CheckReport check_alpha_intertwines(const Resolution& res) {
  CheckReport r;
  const SuperRep ext = exterior_action(res);
  const SuperRep ten = tensor_action(res);
  const Matrix a = alpha_iso(res.size());
  if (ext.parity != ten.parity) r.fail("alpha does not preserve superdegree");
  for (Gl11 x : kGl11Basis)
    if (!(a * action(ext, x) == action(ten, x) * a)) r.fail(std::string("alpha does not intertwine ") + name(x));
  return r;
}

SuperMap khovanov_m() { return sparse_map(2, 4, 0, {{0, 0, 1}, {1, 1, 1}, {1, 2, 1}}); }
SuperMap khovanov_delta() { return sparse_map(4, 2, 1, {{1, 0, 1}, {2, 0, -1}, {3, 1, 1}}); }

CheckReport check_edge_conjugation(const Cube& cube, const CubeEdge& edge) {
  CheckReport r;
  const EdgeFrame fr = edge_frame(cube, edge);
  const std::size_t n0 = cube.resolution(edge.from).size();
  const Matrix conj = to_tensor_coordinates(cube, edge, fr, edge_map(cube, edge));
  Matrix expected;
  if (edge.kind == EdgeKind::merge)
    expected = insert_local(khovanov_m(), fr.position, 2, n0 - fr.position - 2);
  else
    expected = insert_local(khovanov_delta(), fr.position, 1, n0 - fr.position - 1);
  if (!(conj == expected))
    r.fail(std::string(edge.kind == EdgeKind::merge ? "merge" : "split") + " edge at vertex " +
           std::to_string(edge.from) + ", crossing " + std::to_string(edge.crossing) +
           " is not conjugate to the local Khovanov map");
  return r;
}

KParts k_parts(const Cube& cube, const CubeEdge& edge, const Matrix& map) {
  const Resolution& r0 = cube.resolution(edge.from);
  const Resolution& r1 = cube.resolution(edge.to);
  auto k_of = [](const Resolution& res, std::size_t s) {
    return static_cast<int>(res.num_essential()) - 2 * exterior::degree(static_cast<exterior::Mask>(s) >> res.num_trivial);
  };
  KParts out{Matrix(map.rows(), map.cols()), Matrix(map.rows(), map.cols())};
  map.for_each([&](std::size_t row, std::size_t col, const Rational& v) {
    const int dk = k_of(r1, row) - k_of(r0, col);
    if (dk == 0)
      out.zero.add(row, col, v);
    else if (dk == -2)
      out.minus.add(row, col, v);
    else
      throw InvariantError("edge map changes k by " + std::to_string(dk));
  });
  return out;
}

CheckReport check_k_parts(const Cube& cube, const CubeEdge& edge) {
  CheckReport r;
  const Resolution& r0 = cube.resolution(edge.from);
  const Resolution& r1 = cube.resolution(edge.to);
  const EdgeFrame fr = edge_frame(cube, edge);
  const std::size_t n0 = r0.size();
  const Matrix map = edge_map(cube, edge);
  const KParts kp = k_parts(cube, edge, map);
  if (!(kp.zero + kp.minus == map)) r.fail("k parts do not sum to the edge map");
  const Matrix conj = to_tensor_coordinates(cube, edge, fr, kp.zero);
  const std::vector<int> v1 = popcount_parities(1);

  SuperMap local;
  std::string pattern;
  if (edge.kind == EdgeKind::merge) {
    const bool e1 = r0.is_essential(fr.order0[fr.position]);
    const bool e2 = r0.is_essential(fr.order0[fr.position + 1]);
    const bool et = r1.is_essential(edge.single);
    pattern = std::string(e1 ? "E" : "T") + (e2 ? "E" : "T") + "->" + (et ? "E" : "T");
    if (!e1 && !e2 && !et)
      local = khovanov_m();
    else if (!e1 && e2 && et)
      local = m0_trivial_essential();
    else if (e1 && !e2 && et)
      local = {m0_trivial_essential().matrix * twist(v1, v1), 0};
    else if (e1 && e2 && !et)
      local = m0_essential_essential();
    else {
      r.fail("impossible merge class pattern " + pattern);
      return r;
    }
    if (!(conj == insert_local(local, fr.position, 2, n0 - fr.position - 2)))
      r.fail("m0 differs from the local table for pattern " + pattern);
  } else {
    const bool ep = r0.is_essential(edge.single);
    const bool e1 = r1.is_essential(edge.pair[0]);
    const bool e2 = r1.is_essential(edge.pair[1]);
    pattern = std::string(ep ? "E" : "T") + "->" + (e1 ? "E" : "T") + (e2 ? "E" : "T");
    if (!ep && !e1 && !e2)
      local = khovanov_delta();
    else if (ep && !e1 && e2)
      local = delta0_trivial_essential();
    else if (ep && e1 && !e2)
      local = {Rational(-1) * (twist(v1, v1) * delta0_trivial_essential().matrix), 1};
    else if (!ep && e1 && e2)
      local = delta0_essential_essential();
    else {
      r.fail("impossible split class pattern " + pattern);
      return r;
    }
    if (!(conj == insert_local(local, fr.position, 1, n0 - fr.position - 1)))
      r.fail("Delta0 differs from the local table for pattern " + pattern);
  }
  return r;
}

SuperRep complex_action(const ChainComplex& c) {
  const std::size_t n = c.size();
  SuperRep rho;
  rho.parity.resize(n);
  for (std::size_t g = 0; g < n; ++g) rho.parity[g] = c.generators()[g].superdegree;
  rho.e = rho.f = rho.hplus = rho.hminus = Matrix(n, n);
  for (Vertex v = 0; v < c.cube().num_vertices(); ++v) {
    const SuperRep local = exterior_action(c.cube().resolution(v));
    const std::size_t off = c.offset(v);
    auto place = [&](Matrix& dst, const Matrix& src) {
      src.for_each([&](std::size_t r, std::size_t col, const Rational& x) { dst.add(off + r, off + col, x); });
    };
    place(rho.e, local.e);
    place(rho.f, local.f);
    place(rho.hplus, local.hplus);
    place(rho.hminus, local.hminus);
  }
  return rho;
}

CheckReport check_d0_intertwines(const ChainComplex& c, const SuperRep& rho) {
  CheckReport r;
  for (Gl11 x : kGl11Basis) {
    const Matrix m = action(rho, x);
    if (!(c.d0() * m == m * c.d0())) r.fail(std::string("d0 does not commute with ") + name(x));
  }
  return r;
}

CheckReport check_gradings(const ChainComplex& c, const SuperRep& rho) {
  CheckReport r;
  const auto& gens = c.generators();
  const int m = c.winding_parity();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (rho.hminus.at(g, g) != gens[g].degree.k) r.fail("h- eigenvalue differs from k at generator " + std::to_string(g));
    if (rho.hplus.at(g, g) != m) r.fail("h+ is not the winding parity at generator " + std::to_string(g));
    if (rho.hminus.row(g).size() > (rho.hminus.at(g, g) != 0 ? 1u : 0u) ||
        rho.hplus.row(g).size() > (rho.hplus.at(g, g) != 0 ? 1u : 0u))
      r.fail("h+ or h- is not diagonal");
  }
  auto shift_check = [&](const Matrix& x, int dj, int dk, const char* what) {
    x.for_each([&](std::size_t row, std::size_t col, const Rational&) {
      const TriDegree& s = gens[col].degree;
      const TriDegree& t = gens[row].degree;
      if (t.i != s.i || t.j != s.j + dj || t.k != s.k + dk)
        r.fail(std::string(what) + " maps " + degree_string(s) + " to " + degree_string(t));
      if ((gens[row].superdegree + gens[col].superdegree) % 2 != 1) r.fail(std::string(what) + " does not flip superdegree");
    });
  };
  shift_check(rho.e, 2, 2, "e");
  shift_check(rho.f, -2, -2, "f");
  for (const Gl11 x : {Gl11::h1, Gl11::h2}) {
    const Matrix h = action(rho, x);
    h.for_each([&](std::size_t row, std::size_t col, const Rational&) {
      if (!(gens[row].degree == gens[col].degree) || gens[row].superdegree != gens[col].superdegree)
        r.fail(std::string(name(x)) + " does not preserve the gradings");
    });
  }
  return r;
}

HomologyRep action_on_homology(const ChainComplex& c, const SuperRep& rho, const Homology& h) {
  if (h.which != Differential::d0) throw std::invalid_argument("action_on_homology: needs d0-homology");
  HomologyRep out;
  std::vector<std::size_t> base(h.blocks.size() + 1, 0);
  for (std::size_t b = 0; b < h.blocks.size(); ++b) base[b + 1] = base[b] + h.blocks[b].dim();
  const std::size_t dim = base.back();
  std::unordered_map<std::size_t, std::pair<std::size_t, std::size_t>> where;  // generator -> (block, local)
  for (std::size_t b = 0; b < h.blocks.size(); ++b) {
    const auto& blk = h.blocks[b];
    for (std::size_t l = 0; l < blk.generators.size(); ++l) where.emplace(blk.generators[l], std::pair{b, l});
    for (std::size_t q = 0; q < blk.dim(); ++q) {
      out.degree.push_back(blk.degree);
      out.block.push_back(b);
      out.rep.parity.push_back(c.generators()[blk.generators.front()].superdegree);
    }
  }

  auto induced = [&](const Matrix& x, int dj, int dk, const char* what) {
    const Matrix xt = x.transpose();
    Matrix result(dim, dim);
    for (std::size_t b = 0; b < h.blocks.size(); ++b) {
      const auto& blk = h.blocks[b];
      if (blk.generators.empty()) continue;
      TriDegree td = blk.degree;
      td.j += dj;
      td.k += dk;
      const HomologyBlock* target = h.find(td);
      const std::size_t tb = target ? static_cast<std::size_t>(target - h.blocks.data()) : 0;
      auto apply = [&](const Vector& v) {
        Vector y(target ? target->generators.size() : 0, Rational(0));
        for (std::size_t l = 0; l < v.size(); ++l) {
          if (v[l] == 0) continue;
          for (const auto& [row, val] : xt.row(blk.generators[l])) {
            auto it = where.find(row);
            if (!target || it->second.first != tb)
              throw InvariantError(std::string(what) + " leaves the expected degree from block " + degree_string(blk.degree));
            y[it->second.second] += val * v[l];
          }
        }
        return y;
      };
      for (const auto& z : blk.image_basis) {
        const Vector y = apply(z);
        if (target && !target->is_boundary(y))
          throw InvariantError(std::string(what) + " maps a boundary to a non-boundary in block " + degree_string(blk.degree));
      }
      for (std::size_t q = 0; q < blk.dim(); ++q) {
        const Vector y = apply(blk.representatives[q]);
        if (!target) continue;
        const auto coords = target->decompose(y);
        if (!coords)
          throw InvariantError(std::string(what) + " maps a cycle to a non-cycle in block " + degree_string(blk.degree));
        for (std::size_t t = 0; t < coords->size(); ++t) result.add(base[tb] + t, base[b] + q, (*coords)[t]);
      }
    }
    return result;
  };
  out.rep.e = induced(rho.e, 2, 2, "e");
  out.rep.f = induced(rho.f, -2, -2, "f");
  out.rep.hplus = induced(rho.hplus, 0, 0, "h+");
  out.rep.hminus = induced(rho.hminus, 0, 0, "h-");
  return out;
}

namespace {

RepFingerprint fingerprint(const SuperRep& rep, const std::vector<std::pair<int, int>>& sector,
                           const std::vector<int>& weight) {
  std::map<std::pair<int, int>, std::map<int, std::vector<std::size_t>>> groups;
  for (std::size_t b = 0; b < rep.dim(); ++b) groups[sector[b]][weight[b]].push_back(b);
  const Matrix ef = rep.e * rep.f;
  const Matrix fe = rep.f * rep.e;
  static const std::vector<std::size_t> none;
  RepFingerprint fp;
  for (const auto& [sec, weights] : groups) {
    auto at = [&](int k) -> const std::vector<std::size_t>& {
      auto it = weights.find(k);
      return it == weights.end() ? none : it->second;
    };
    for (const auto& [k, ids] : weights) {
      WeightData w;
      w.dim = ids.size();
      w.rank_e = rank(rep.e.submatrix(at(k + 2), ids));
      w.rank_f = rank(rep.f.submatrix(at(k - 2), ids));
      w.rank_ef = rank(ef.submatrix(ids, ids));
      w.rank_fe = rank(fe.submatrix(ids, ids));
      fp[sec][k] = w;
    }
  }
  return fp;
}

}  // namespace

RepFingerprint rep_fingerprint(const HomologyRep& rep) {
  std::vector<std::pair<int, int>> sector;
  std::vector<int> weight;
  for (const auto& d : rep.degree) {
    sector.emplace_back(d.i, d.j - d.k);
    weight.push_back(d.k);
  }
  return fingerprint(rep.rep, sector, weight);
}

RepFingerprint rep_fingerprint(const SuperRep& rep) {
  std::vector<int> weight;
  for (std::size_t b = 0; b < rep.dim(); ++b) {
    if (rep.hminus.row(b).size() > (rep.hminus.at(b, b) != 0 ? 1u : 0u))
      throw std::invalid_argument("rep_fingerprint: h- is not diagonal");
    const Rational k = rep.hminus.at(b, b);
    if (k.get_den() != 1) throw std::invalid_argument("rep_fingerprint: non-integral weight");
    weight.push_back(static_cast<int>(k.get_num().get_si()));
  }
  return fingerprint(rep, std::vector<std::pair<int, int>>(rep.dim(), {0, 0}), weight);
}

std::string to_string(const RepFingerprint& fp) {
  std::ostringstream os;
  for (const auto& [sec, weights] : fp) {
    os << "(i, j-k) = (" << sec.first << ", " << sec.second << "):";
    for (const auto& [k, w] : weights)
      os << " [k=" << k << " dim=" << w.dim << " e=" << w.rank_e << " f=" << w.rank_f << " ef=" << w.rank_ef
         << " fe=" << w.rank_fe << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace oddakh
