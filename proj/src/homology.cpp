#include "oddakh/homology.hpp"

#include <algorithm>
#include <sstream>

#include "oddakh/parallel.hpp"

namespace oddakh {

namespace {

Matrix columns_matrix(const std::vector<Vector>& cols, std::size_t dim) {
  Matrix m(dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m.add(i, j, cols[j][i]);
  return m;
}

Vector column(const Matrix& m, std::size_t c) {
  Vector v(m.rows(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m.at(r, c);
  return v;
}

std::string power(const char* var, int e) {
  if (e == 1) return var;
  return std::string(var) + "^" + (e < 0 ? "{" + std::to_string(e) + "}" : std::to_string(e));
}

}  // namespace

std::optional<Vector> HomologyBlock::decompose(const Vector& v) const {
  DenseMatrix cols = image_basis;
  cols.insert(cols.end(), representatives.begin(), representatives.end());
  auto sol = solve_full_column_rank(cols, {v}, generators.size());
  if (!sol) return std::nullopt;
  const Vector& x = sol->front();
  return Vector(x.begin() + static_cast<long>(image_basis.size()), x.end());
}

bool HomologyBlock::is_boundary(const Vector& v) const {
  return solve_full_column_rank(image_basis, {v}, generators.size()).has_value();
}

std::map<TriDegree, std::size_t> Homology::dimensions() const {
  std::map<TriDegree, std::size_t> out;
  for (const auto& b : blocks)
    if (b.dim()) out[b.degree] = b.dim();
  return out;
}

const HomologyBlock* Homology::find(const TriDegree& d) const {
  auto it = std::lower_bound(blocks.begin(), blocks.end(), d,
                             [](const HomologyBlock& b, const TriDegree& x) { return b.degree < x; });
  return (it != blocks.end() && it->degree == d) ? &*it : nullptr;
}

Homology homology(const ChainComplex& c, Differential which, const HomologyOptions& options) {
  Homology h;
  h.which = which;
  h.trigraded = which == Differential::d0;
  h.integral = options.integral;
  const Matrix& dm = which == Differential::d0 ? c.d0() : c.d();

  std::map<TriDegree, std::vector<std::size_t>> groups;
  for (std::size_t g = 0; g < c.size(); ++g) {
    TriDegree deg = c.generators()[g].degree;
    if (!h.trigraded) deg.k = 0;
    groups[deg].push_back(g);
  }
  h.blocks.reserve(groups.size());
  for (const auto& [deg, gens] : groups) {
    HomologyBlock b;
    b.degree = deg;
    b.generators = gens;
    h.blocks.push_back(std::move(b));
  }

  static const std::vector<std::size_t> none;
  auto gens_at = [&](TriDegree d) -> const std::vector<std::size_t>& {
    auto it = groups.find(d);
    return it == groups.end() ? none : it->second;
  };

  parallel_for(h.blocks.size(), options.threads, [&](std::size_t bi) {
    HomologyBlock& b = h.blocks[bi];
    const std::size_t dim = b.generators.size();
    TriDegree prev = b.degree, next = b.degree;
    --prev.i;
    ++next.i;
    const Matrix out = dm.submatrix(gens_at(next), b.generators);
    const Matrix in = dm.submatrix(b.generators, gens_at(prev));

    std::vector<Vector> cycles = kernel_basis(out);
    for (auto col : independent_columns(in)) b.image_basis.push_back(column(in, col));
    std::vector<Vector> stacked = b.image_basis;
    stacked.insert(stacked.end(), cycles.begin(), cycles.end());
    for (auto col : independent_columns(columns_matrix(stacked, dim)))
      if (col >= b.image_basis.size()) b.representatives.push_back(stacked[col]);

    if (options.integral)
      for (const auto& f : invariant_factors(in))
        if (f > 1) b.torsion.push_back(f);
  });
  return h;
}

std::string poincare_polynomial(const std::map<TriDegree, std::size_t>& dims, bool trigraded) {
  if (dims.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, n] : dims) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> factors;
    if (d.i) factors.push_back(power("t", d.i));
    if (d.j) factors.push_back(power("q", d.j));
    if (trigraded && d.k) factors.push_back(power("s", d.k));
    if (n != 1 || factors.empty()) factors.insert(factors.begin(), std::to_string(n));
    for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? " " : "") << factors[f];
  }
  return os.str();
}

}  // namespace oddakh
