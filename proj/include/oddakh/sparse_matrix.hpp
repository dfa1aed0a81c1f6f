#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oddakh/scalar.hpp"

namespace oddakh {

/// Row-major sparse matrix over an exact ring. Stored entries are never zero.
///
/// Convention throughout the library: a linear map A: X -> Y is stored with
/// rows indexed by the basis of Y and columns by the basis of X, so that
/// composition is ordinary matrix product (B∘A = B * A).
template <class T>
class SparseMatrix {
 public:
  using Row = std::map<std::size_t, T>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace(i, T(1));
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t r) const { return rows_.at(r); }

  T at(std::size_t r, std::size_t c) const {
    const auto& rw = rows_.at(r);
    auto it = rw.find(c);
    return it == rw.end() ? T(0) : it->second;
  }

  void add(std::size_t r, std::size_t c, const T& v) {
    check_index(r, c);
    if (v == 0) return;
    auto& rw = rows_[r];
    auto [it, inserted] = rw.emplace(c, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) rw.erase(it);
    }
  }

  void set(std::size_t r, std::size_t c, const T& v) {
    check_index(r, c);
    if (v == 0)
      rows_[r].erase(c);
    else
      rows_[r][c] = v;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  bool is_zero() const {
    for (const auto& r : rows_)
      if (!r.empty()) return false;
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) f(r, c, v);
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_.size());
    for_each([&](std::size_t r, std::size_t c, const T& v) { t.rows_[c].emplace(r, v); });
    return t;
  }

  SparseMatrix operator*(const SparseMatrix& b) const {
    if (cols_ != b.rows()) throw std::invalid_argument("SparseMatrix: dimension mismatch in product");
    SparseMatrix out(rows(), b.cols());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto& acc = out.rows_[r];
      for (const auto& [k, a] : rows_[r])
        for (const auto& [c, v] : b.rows_[k]) acc[c] += a * v;
      std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    }
    return out;
  }

  SparseMatrix& operator+=(const SparseMatrix& b) {
    check_same_shape(b);
    b.for_each([&](std::size_t r, std::size_t c, const T& v) { add(r, c, v); });
    return *this;
  }
  SparseMatrix& operator-=(const SparseMatrix& b) {
    check_same_shape(b);
    b.for_each([&](std::size_t r, std::size_t c, const T& v) { add(r, c, -v); });
    return *this;
  }
  SparseMatrix& operator*=(const T& s) {
    if (s == 0) {
      for (auto& r : rows_) r.clear();
      return *this;
    }
    for (auto& r : rows_)
      for (auto& kv : r) kv.second *= s;
    return *this;
  }

  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator-(SparseMatrix a) { return a *= T(-1); }
  friend SparseMatrix operator*(const T& s, SparseMatrix a) { return a *= s; }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

  /// Restriction to the given row and column index lists (in that order).
  SparseMatrix submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const {
    std::unordered_map<std::size_t, std::size_t> col_pos;
    col_pos.reserve(col_ids.size());
    for (std::size_t j = 0; j < col_ids.size(); ++j) col_pos.emplace(col_ids[j], j);
    SparseMatrix out(row_ids.size(), col_ids.size());
    for (std::size_t i = 0; i < row_ids.size(); ++i)
      for (const auto& [c, v] : rows_.at(row_ids[i]))
        if (auto it = col_pos.find(c); it != col_pos.end()) out.rows_[i].emplace(it->second, v);
    return out;
  }

  std::vector<std::vector<T>> to_dense() const {
    std::vector<std::vector<T>> d(rows_.size(), std::vector<T>(cols_, T(0)));
    for_each([&](std::size_t r, std::size_t c, const T& v) { d[r][c] = v; });
    return d;
  }

 private:
  void check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_.size() || c >= cols_) throw std::out_of_range("SparseMatrix: index out of range");
  }
  void check_same_shape(const SparseMatrix& b) const {
    if (rows() != b.rows() || cols_ != b.cols_) throw std::invalid_argument("SparseMatrix: shape mismatch");
  }

  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

using Matrix = SparseMatrix<Rational>;

/// Plain (ungraded) commutator and anticommutator.
inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
inline Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

}  // namespace oddakh
