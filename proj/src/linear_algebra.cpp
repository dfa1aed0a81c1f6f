#include "oddakh/linear_algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace oddakh {

Echelon row_reduce(DenseMatrix m, std::size_t cols) {
  Echelon out;
  out.cols = cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (m[r][j] != 0) m[i][j] -= factor * m[r][j];
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  m.resize(r);
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side.
  const Matrix& src = m;
  if (m.rows() <= m.cols()) return row_reduce(src.to_dense(), src.cols()).pivot_cols.size();
  const Matrix t = m.transpose();
  return row_reduce(t.to_dense(), t.cols()).pivot_cols.size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  const Echelon e = row_reduce(m.to_dense(), n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> independent_columns(const Matrix& m) {
  return row_reduce(m.to_dense(), m.cols()).pivot_cols;
}

std::optional<DenseMatrix> solve_full_column_rank(const DenseMatrix& a_cols, const DenseMatrix& rhs_cols,
                                                  std::size_t dim) {
  const std::size_t k = a_cols.size();
  const std::size_t q = rhs_cols.size();
  DenseMatrix aug(dim, Vector(k + q, Rational(0)));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < dim; ++i) aug[i][j] = a_cols[j][i];
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t i = 0; i < dim; ++i) aug[i][k + j] = rhs_cols[j][i];
  const Echelon e = row_reduce(std::move(aug), k + q);
  // Independence of A means the first k pivots are exactly 0..k-1; any further pivot
  // lies in the right-hand side block and signals an inconsistent column.
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    if (r < k && e.pivot_cols[r] != r) throw std::invalid_argument("solve_full_column_rank: dependent columns");
    if (r >= k) return std::nullopt;
  }
  if (e.pivot_cols.size() < k) throw std::invalid_argument("solve_full_column_rank: dependent columns");
  DenseMatrix sol(q, Vector(k, Rational(0)));
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t r = 0; r < k; ++r) sol[j][r] = e.reduced[r][k + j];
  return sol;
}

std::vector<Integer> invariant_factors(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols, Integer(0)));
  m.for_each([&](std::size_t r, std::size_t c, const Rational& v) {
    if (v.get_den() != 1) throw std::invalid_argument("invariant_factors: non-integral entry");
    a[r][c] = v.get_num();
  });

  auto find_min = [&](std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        Integer av = abs(a[i][j]);
        if (!found || av < best) {
          best = av;
          pr = i;
          pc = j;
          found = true;
        }
      }
    return found;
  };

  std::vector<Integer> factors;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    std::size_t pr = 0, pc = 0;
    if (!find_min(t, pr, pc)) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) dirty = true;
      }
      if (dirty) {
        // Move the smallest remaining entry of row/column t into the pivot slot.
        std::size_t br = t, bc = t;
        Integer best = abs(a[t][t]);
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a[i][t] != 0 && abs(a[i][t]) < best) best = abs(a[i][t]), br = i, bc = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[t][j] != 0 && abs(a[t][j]) < best) best = abs(a[t][j]), br = t, bc = j;
        std::swap(a[t], a[br]);
        for (auto& row : a) std::swap(row[t], row[bc]);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    factors.push_back(abs(a[t][t]));
    ++t;
  }
  return factors;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * ((cols + 63) / 64), 0) {}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  return (bits_[r * words() + c / 64] >> (c % 64)) & 1u;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
  auto& w = bits_[r * words() + c / 64];
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  w = v ? (w | mask) : (w & ~mask);
}

void Gf2Matrix::flip(std::size_t r, std::size_t c) { bits_[r * words() + c / 64] ^= std::uint64_t{1} << (c % 64); }

bool Gf2Matrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Gf2Matrix::rank() const {
  std::vector<std::uint64_t> b = bits_;
  const std::size_t w = words();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    const std::size_t word = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t p = r;
    while (p < rows_ && !(b[p * w + word] & mask)) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t k = 0; k < w; ++k) std::swap(b[p * w + k], b[r * w + k]);
    for (std::size_t i = r + 1; i < rows_; ++i)
      if (b[i * w + word] & mask)
        for (std::size_t k = word; k < w; ++k) b[i * w + k] ^= b[r * w + k];
    ++r;
  }
  return r;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& b) const {
  if (cols_ != b.rows_) throw std::invalid_argument("Gf2Matrix: dimension mismatch");
  Gf2Matrix out(rows_, b.cols_);
  const std::size_t bw = b.words();
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (get(i, k))
        for (std::size_t x = 0; x < bw; ++x) out.bits_[i * bw + x] ^= b.bits_[k * bw + x];
  return out;
}

Gf2Matrix Gf2Matrix::operator+(const Gf2Matrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Gf2Matrix: shape mismatch");
  Gf2Matrix out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] ^= b.bits_[i];
  return out;
}

std::optional<std::vector<bool>> solve_gf2_impl(std::size_t num_vars, const std::vector<Gf2Equation>& eqs,
                                                const std::vector<bool>& free_values) {
  // Bit num_vars of each packed row holds the right-hand side.
  const std::size_t w = (num_vars + 1 + 63) / 64;
  auto test = [](const std::vector<std::uint64_t>& row, std::size_t c) { return (row[c / 64] >> (c % 64)) & 1u; };
  std::vector<std::vector<std::uint64_t>> rows(eqs.size(), std::vector<std::uint64_t>(w, 0));
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (auto v : eqs[i].vars) rows[i][v / 64] ^= std::uint64_t{1} << (v % 64);
    if (eqs[i].rhs) rows[i][num_vars / 64] ^= std::uint64_t{1} << (num_vars % 64);
  }

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < num_vars && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !test(rows[p], c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && test(rows[i], c))
        for (std::size_t k = 0; k < w; ++k) rows[i][k] ^= rows[r][k];
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (test(rows[i], num_vars)) return std::nullopt;

  std::vector<bool> is_pivot(num_vars, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<bool> x(num_vars, false);
  for (std::size_t v = 0; v < num_vars; ++v)
    if (!is_pivot[v]) x[v] = free_values[v];
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    bool val = test(rows[i], num_vars);
    for (std::size_t v = 0; v < num_vars; ++v)
      if (v != pivots[i] && !is_pivot[v] && test(rows[i], v) && x[v]) val = !val;
    x[pivots[i]] = val;
  }
  return x;
}

}  // namespace oddakh
