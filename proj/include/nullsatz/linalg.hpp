#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nullsatz/errors.hpp"
#include "nullsatz/field.hpp"
#include "nullsatz/upoly.hpp"

namespace nullsatz {

template <class F>
using Vec = std::vector<typename F::Elem>;

namespace vec {

template <class F>
Vec<F> zeros(const F& f, std::size_t n) {
  return Vec<F>(n, f.zero());
}

template <class F>
Vec<F> unit(const F& f, std::size_t n, std::size_t i) {
  Vec<F> v(n, f.zero());
  v[i] = f.one();
  return v;
}

template <class F>
bool is_zero(const F& f, const Vec<F>& v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

template <class F>
Vec<F> add(const F& f, const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

template <class F>
Vec<F> sub(const F& f, const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

template <class F>
Vec<F> scale(const F& f, const Vec<F>& a, const typename F::Elem& s) {
  Vec<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], s);
  return r;
}

// a += s * b
template <class F>
void axpy(const F& f, Vec<F>& a, const typename F::Elem& s, const Vec<F>& b) {
  if (f.is_zero(s)) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.is_zero(b[i])) a[i] = f.add(a[i], f.mul(s, b[i]));
}

template <class F>
std::optional<std::size_t> first_nonzero(const F& f, const Vec<F>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!f.is_zero(v[i])) return i;
  return std::nullopt;
}

template <class F>
std::string to_string(const F& f, const Vec<F>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + f.to_string(v[i]);
  return s + ")";
}

}  // namespace vec

template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix() = default;
  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }
  static Matrix from_rows(const F& f, std::size_t cols, const std::vector<Vec<F>>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) fail(ErrorKind::DimensionMismatch, "fieldcore::matrix", "row length mismatch");
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<F> row(std::size_t r) const { return Vec<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
  Vec<F> col(std::size_t c) const {
    Vec<F> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
  }
  std::vector<Vec<F>> row_list() const {
    std::vector<Vec<F>> out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }
  void append_row(const Vec<F>& v) {
    if (v.size() != cols_) fail(ErrorKind::DimensionMismatch, "fieldcore::matrix", "row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
  }
  bool is_zero() const { return vec::is_zero(field_, data_); }
  const std::vector<Elem>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t r = 0; r < rows_; ++r) s += (r ? ", " : "") + vec::to_string(field_, row(r));
    return s + "]";
  }

 private:
  F field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

template <class F>
struct RrefResult {
  Matrix<F> matrix;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

// Reduced row echelon form; zero rows are kept at the bottom.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  const F& f = m.field();
  RrefResult<F> res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && f.is_zero(m.at(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    auto inv = f.inv(m.at(r, c));
    for (std::size_t k = c; k < m.cols(); ++k) m.at(r, k) = f.mul(m.at(r, k), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      auto s = f.neg(m.at(i, c));
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!f.is_zero(m.at(r, k))) m.at(i, k) = f.add(m.at(i, k), f.mul(s, m.at(r, k)));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.matrix = std::move(m);
  return res;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

// Basis of the right null space.
template <class F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m) {
  const F& f = m.field();
  auto res = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : res.pivots) is_pivot[p] = true;
  std::vector<Vec<F>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < res.rank; ++r) v[res.pivots[r]] = f.neg(res.matrix.at(r, free));
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
Matrix<F> matmul(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::DimensionMismatch, "fieldcore::matmul", "inner dimensions differ");
  const F& f = a.field();
  Matrix<F> r(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a.at(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!f.is_zero(b.at(k, j))) r.at(i, j) = f.add(r.at(i, j), f.mul(aik, b.at(k, j)));
    }
  return r;
}

template <class F>
Vec<F> matvec(const Matrix<F>& a, const Vec<F>& v) {
  if (a.cols() != v.size()) fail(ErrorKind::DimensionMismatch, "fieldcore::matvec", "dimension mismatch");
  const F& f = a.field();
  Vec<F> r(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!f.is_zero(v[k]) && !f.is_zero(a.at(i, k))) r[i] = f.add(r[i], f.mul(a.at(i, k), v[k]));
  return r;
}

template <class F>
Matrix<F> matadd(const Matrix<F>& a, const Matrix<F>& b) {
  const F& f = a.field();
  Matrix<F> r(f, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = f.add(a.at(i, j), b.at(i, j));
  return r;
}

template <class F>
Matrix<F> matscale(const Matrix<F>& a, const typename F::Elem& s) {
  const F& f = a.field();
  Matrix<F> r(f, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = f.mul(a.at(i, j), s);
  return r;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& a) {
  Matrix<F> r(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

// A x = b
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& a, const Vec<F>& b) {
  const F& f = a.field();
  if (b.size() != a.rows()) fail(ErrorKind::DimensionMismatch, "fieldcore::solve", "right-hand side length mismatch");
  Matrix<F> aug(f, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto res = rref(std::move(aug));
  if (!res.pivots.empty() && res.pivots.back() == a.cols()) return std::nullopt;
  Vec<F> x(a.cols(), f.zero());
  for (std::size_t r = 0; r < res.rank; ++r) x[res.pivots[r]] = res.matrix.at(r, a.cols());
  return x;
}

// Subspace of F^n kept as a fully reduced echelon basis.
template <class F>
class Subspace {
 public:
  using Elem = typename F::Elem;

  Subspace() = default;
  Subspace(F field, std::size_t n) : field_(std::move(field)), n_(n) {}
  static Subspace span(const F& f, std::size_t n, const std::vector<Vec<F>>& vs) {
    Subspace s(f, n);
    for (const auto& v : vs) s.add(v);
    return s;
  }
  static Subspace full(const F& f, std::size_t n) {
    Subspace s(f, n);
    for (std::size_t i = 0; i < n; ++i) s.add(vec::unit(f, n, i));
    return s;
  }

  const F& field() const { return field_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec<F>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Vec<F> reduce(Vec<F> v) const {
    if (v.size() != n_) fail(ErrorKind::DimensionMismatch, "fieldcore::subspace", "vector length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& c = v[pivots_[i]];
      if (field_.is_zero(c)) continue;
      vec::axpy(field_, v, field_.neg(c), rows_[i]);
    }
    return v;
  }
  bool contains(const Vec<F>& v) const { return vec::is_zero(field_, reduce(v)); }
  // coefficients w.r.t. basis(); valid only for members
  Vec<F> coordinates(const Vec<F>& v) const {
    Vec<F> c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }
  bool add(const Vec<F>& v0) {
    Vec<F> v = reduce(v0);
    auto p = vec::first_nonzero(field_, v);
    if (!p) return false;
    v = vec::scale(field_, v, field_.inv(v[*p]));
    for (auto& r : rows_) {
      const auto c = r[*p];
      if (!field_.is_zero(c)) vec::axpy(field_, r, field_.neg(c), v);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), *p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, *p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }
  bool contains_space(const Subspace& o) const {
    for (const auto& r : o.rows_)
      if (!contains(r)) return false;
    return true;
  }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }
  Subspace sum(const Subspace& o) const {
    Subspace s = *this;
    for (const auto& r : o.rows_) s.add(r);
    return s;
  }
  std::vector<std::size_t> non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (k < pivots_.size() && pivots_[k] == i) {
        ++k;
        continue;
      }
      out.push_back(i);
    }
    return out;
  }
  // coordinates of v modulo the subspace, in the non-pivot positions
  Vec<F> quotient_coords(const Vec<F>& v) const {
    Vec<F> r = reduce(v);
    Vec<F> out;
    for (auto i : non_pivots()) out.push_back(r[i]);
    return out;
  }
  // vectors annihilating the subspace under the standard pairing
  std::vector<Vec<F>> annihilator() const {
    Matrix<F> m = Matrix<F>::from_rows(field_, n_, rows_);
    if (rows_.empty()) m = Matrix<F>(field_, 0, n_);
    return kernel_basis(m);
  }
  Subspace intersect(const Subspace& o) const {
    std::vector<Vec<F>> dual = annihilator();
    auto d2 = o.annihilator();
    dual.insert(dual.end(), d2.begin(), d2.end());
    Matrix<F> m(field_, 0, n_);
    for (auto& v : dual) m.append_row(v);
    return span(field_, n_, kernel_basis(m));
  }

 private:
  F field_;
  std::size_t n_ = 0;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

template <class F>
Matrix<F> intersect_rowspaces(const std::vector<Matrix<F>>& ms) {
  if (ms.empty()) fail(ErrorKind::InvalidArgument, "fieldcore::intersect_rowspaces", "empty input");
  const F& f = ms[0].field();
  std::size_t n = ms[0].cols();
  Matrix<F> dual(f, 0, n);
  for (const auto& m : ms) {
    if (m.cols() != n) fail(ErrorKind::DimensionMismatch, "fieldcore::intersect_rowspaces", "column counts differ");
    for (auto& v : kernel_basis(m)) dual.append_row(v);
  }
  auto ker = kernel_basis(dual);
  Matrix<F> out(f, 0, n);
  if (ker.empty()) return out;
  auto res = rref(Matrix<F>::from_rows(f, n, ker));
  for (std::size_t r = 0; r < res.rank; ++r) out.append_row(res.matrix.row(r));
  return out;
}

// Detects the first vector in a sequence that depends on its predecessors.
template <class F>
class DependencyTracker {
 public:
  using Elem = typename F::Elem;
  explicit DependencyTracker(F f) : f_(std::move(f)) {}

  // Returns c with v = sum_i c_i v_i over earlier vectors when dependent.
  std::optional<Vec<F>> add(Vec<F> v) {
    std::size_t k = count_++;
    Vec<F> combo(k + 1, f_.zero());
    combo[k] = f_.one();
    for (auto& row : rows_) {
      const auto c = v[row.pivot];
      if (f_.is_zero(c)) continue;
      auto nc = f_.neg(c);
      vec::axpy(f_, v, nc, row.v);
      for (std::size_t i = 0; i < row.combo.size(); ++i)
        if (!f_.is_zero(row.combo[i])) combo[i] = f_.add(combo[i], f_.mul(nc, row.combo[i]));
    }
    auto p = vec::first_nonzero(f_, v);
    if (!p) {
      Vec<F> out(k);
      for (std::size_t i = 0; i < k; ++i) out[i] = f_.neg(combo[i]);
      --count_;
      return out;
    }
    auto inv = f_.inv(v[*p]);
    rows_.push_back(Row{*p, vec::scale(f_, v, inv), vec::scale(f_, combo, inv)});
    return std::nullopt;
  }
  std::size_t size() const { return count_; }

 private:
  struct Row {
    std::size_t pivot;
    Vec<F> v;
    Vec<F> combo;
  };
  F f_;
  std::vector<Row> rows_;
  std::size_t count_ = 0;
};

// Coordinates of vectors with respect to a fixed (independent) list of vectors.
template <class F>
class SpanCoordinates {
 public:
  SpanCoordinates() = default;
  SpanCoordinates(F f, const std::vector<Vec<F>>& basis) : f_(std::move(f)), count_(basis.size()) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Vec<F> combo(count_, f_.zero());
      combo[k] = f_.one();
      Vec<F> v = basis[k];
      reduce(v, combo);
      auto p = vec::first_nonzero(f_, v);
      if (!p) fail(ErrorKind::InternalInconsistency, "fieldcore::span_coordinates", "basis vectors are dependent");
      auto inv = f_.inv(v[*p]);
      rows_.push_back(Row{*p, vec::scale(f_, v, inv), vec::scale(f_, combo, inv)});
    }
  }
  std::size_t size() const { return count_; }
  // nullopt when v is outside the span
  std::optional<Vec<F>> coords(Vec<F> v) const {
    Vec<F> acc(count_, f_.zero());
    for (const auto& row : rows_) {
      const auto c = v[row.pivot];
      if (f_.is_zero(c)) continue;
      vec::axpy(f_, v, f_.neg(c), row.v);
      vec::axpy(f_, acc, c, row.combo);
    }
    if (!vec::is_zero(f_, v)) return std::nullopt;
    return acc;
  }

 private:
  struct Row {
    std::size_t pivot;
    Vec<F> v;
    Vec<F> combo;
  };
  void reduce(Vec<F>& v, Vec<F>& combo) const {
    for (const auto& row : rows_) {
      const auto c = v[row.pivot];
      if (f_.is_zero(c)) continue;
      auto nc = f_.neg(c);
      vec::axpy(f_, v, nc, row.v);
      vec::axpy(f_, combo, nc, row.combo);
    }
  }
  F f_;
  std::size_t count_ = 0;
  std::vector<Row> rows_;
};

// Solves A x = b_i for several right-hand sides with one elimination.
template <class F>
std::vector<std::optional<Vec<F>>> solve_many(const Matrix<F>& a, const std::vector<Vec<F>>& rhs) {
  const F& f = a.field();
  std::size_t n = a.cols(), m = rhs.size();
  Matrix<F> aug(f, a.rows(), n + m);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    for (std::size_t k = 0; k < m; ++k) aug.at(i, n + k) = rhs[k].at(i);
  }
  auto res = rref(std::move(aug));
  std::size_t lhs_rank = 0;
  while (lhs_rank < res.rank && res.pivots[lhs_rank] < n) ++lhs_rank;
  std::vector<std::optional<Vec<F>>> out;
  for (std::size_t k = 0; k < m; ++k) {
    bool ok = true;
    for (std::size_t r = lhs_rank; r < a.rows(); ++r)
      if (!f.is_zero(res.matrix.at(r, n + k))) ok = false;
    if (!ok) {
      out.push_back(std::nullopt);
      continue;
    }
    Vec<F> x(n, f.zero());
    for (std::size_t r = 0; r < lhs_rank; ++r) x[res.pivots[r]] = res.matrix.at(r, n + k);
    out.push_back(std::move(x));
  }
  return out;
}

// Minimal polynomial (monic) of a square matrix.
template <class F>
UPoly<F> minimal_polynomial(const Matrix<F>& m) {
  const F& f = m.field();
  if (m.rows() != m.cols()) fail(ErrorKind::DimensionMismatch, "fieldcore::minimal_polynomial", "matrix not square");
  DependencyTracker<F> dep(f);
  Matrix<F> p = Matrix<F>::identity(f, m.rows());
  for (;;) {
    auto c = dep.add(p.data());
    if (c) {
      Vec<F> coeffs(c->size() + 1);
      for (std::size_t i = 0; i < c->size(); ++i) coeffs[i] = f.neg((*c)[i]);
      coeffs.back() = f.one();
      return UPoly<F>(f, coeffs);
    }
    p = matmul(p, m);
  }
}

}  // namespace nullsatz
