#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "oddakh/scalar.hpp"
#include "oddakh/sparse_matrix.hpp"

namespace oddakh {

using Vector = std::vector<Rational>;
using DenseMatrix = std::vector<Vector>;  // row-major

/// Reduced row echelon form over Q.
struct Echelon {
  DenseMatrix reduced;                 // rows beyond rank are zero and dropped
  std::vector<std::size_t> pivot_cols; // pivot column of each nonzero row, increasing
  std::size_t cols = 0;
};

Echelon row_reduce(DenseMatrix m, std::size_t cols);
std::size_t rank(const Matrix& m);

/// Kernel basis; one vector per free column in increasing column order, with a 1
/// in that column.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Indices of a maximal independent subset of the columns, chosen greedily left to right.
std::vector<std::size_t> independent_columns(const Matrix& m);

/// Solves A x = b for each column b of `rhs` where A has independent columns.
/// Returns std::nullopt if some column of rhs is not in the column span of A.
std::optional<DenseMatrix> solve_full_column_rank(const DenseMatrix& a_cols, const DenseMatrix& rhs_cols,
                                                  std::size_t dim);

/// Smith normal form diagonal over Z: the nonzero invariant factors d_1 | d_2 | ...
std::vector<Integer> invariant_factors(const Matrix& m);

/// Dense matrix over GF(2) with packed rows.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool v);
  void flip(std::size_t r, std::size_t c);
  bool is_zero() const;
  std::size_t rank() const;
  Gf2Matrix operator*(const Gf2Matrix& b) const;
  Gf2Matrix operator+(const Gf2Matrix& b) const;
  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t words() const { return (cols_ + 63) / 64; }
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Solves A x = b over GF(2). Each equation is a list of variable indices plus a
/// right-hand side bit. Free variables take the value returned by `free_value`.
/// Returns std::nullopt if the system is inconsistent.
struct Gf2Equation {
  std::vector<std::size_t> vars;
  bool rhs = false;
};
template <class FreeValue>
std::optional<std::vector<bool>> solve_gf2(std::size_t num_vars, const std::vector<Gf2Equation>& eqs,
                                           FreeValue&& free_value);

std::optional<std::vector<bool>> solve_gf2_impl(std::size_t num_vars, const std::vector<Gf2Equation>& eqs,
                                                const std::vector<bool>& free_values);

template <class FreeValue>
std::optional<std::vector<bool>> solve_gf2(std::size_t num_vars, const std::vector<Gf2Equation>& eqs,
                                           FreeValue&& free_value) {
  std::vector<bool> fv(num_vars);
  for (std::size_t v = 0; v < num_vars; ++v) fv[v] = free_value(v);
  return solve_gf2_impl(num_vars, eqs, fv);
}

}  // namespace oddakh
