#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "lambdak/field.hpp"

namespace lambdak {

/// Dense row-major matrix over an exact field.
template <class Field>
class BasicMatrix {
 public:
  using field_type = Field;
  using value_type = typename Field::value_type;

  BasicMatrix() = default;
  BasicMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static BasicMatrix identity(const Field& field, std::size_t n) {
    BasicMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Builds a matrix from integer rows; all rows must have equal length.
  static BasicMatrix from_rows(const Field& field, const std::vector<std::vector<long long>>& rows,
                               std::size_t cols_if_empty = 0) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? cols_if_empty : rows.front().size();
    BasicMatrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  value_type* row_data(std::size_t i) { return data_.data() + i * cols_; }
  const value_type* row_data(std::size_t i) const { return data_.data() + i * cols_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [this](const value_type& v) { return field_.is_zero(v); });
  }

  bool operator==(const BasicMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const BasicMatrix& o) const { return !(*this == o); }

  BasicMatrix transpose() const {
    BasicMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  BasicMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    BasicMatrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const BasicMatrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  BasicMatrix column(std::size_t j) const { return block(0, j, rows_, 1); }

  BasicMatrix select_columns(const std::vector<std::size_t>& cs) const {
    BasicMatrix b(field_, rows_, cs.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) b(i, j) = (*this)(i, cs[j]);
    return b;
  }

  BasicMatrix select_rows(const std::vector<std::size_t>& rs) const {
    BasicMatrix b(field_, rs.size(), cols_);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(rs[i], j);
    return b;
  }

  BasicMatrix& operator+=(const BasicMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.add(data_[k], o.data_[k]);
    return *this;
  }
  BasicMatrix& operator-=(const BasicMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.sub(data_[k], o.data_[k]);
    return *this;
  }
  BasicMatrix operator+(const BasicMatrix& o) const { return BasicMatrix(*this) += o; }
  BasicMatrix operator-(const BasicMatrix& o) const { return BasicMatrix(*this) -= o; }

  BasicMatrix scaled(const value_type& c) const {
    BasicMatrix r(*this);
    for (auto& v : r.data_) v = field_.mul(v, c);
    return r;
  }

  /// this += c * o
  void add_scaled(const value_type& c, const BasicMatrix& o) {
    check_same_shape(o);
    if (field_.is_zero(c)) return;
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = field_.add(data_[k], field_.mul(c, o.data_[k]));
  }

  BasicMatrix operator*(const BasicMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
    BasicMatrix r(field_, rows_, o.cols_);
    if constexpr (std::is_same_v<Field, PrimeField>) {
      // Accumulate unreduced products; reduce before the sum can overflow.
      const std::uint64_t p = field_.characteristic();
      const std::uint64_t sq = (p - 1) * (p - 1);
      const std::uint64_t batch = sq == 0 ? ~std::uint64_t{0} : (~std::uint64_t{0} - p) / sq;
      std::vector<std::uint64_t> acc(o.cols_);
      for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        std::uint64_t pending = 0;
        for (std::size_t k = 0; k < cols_; ++k) {
          const std::uint64_t a = (*this)(i, k);
          if (a == 0) continue;
          if (pending == batch) {
            for (auto& x : acc) x %= p;
            pending = 0;
          }
          const value_type* orow = o.row_data(k);
          for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += a * orow[j];
          ++pending;
        }
        value_type* rrow = r.row_data(i);
        for (std::size_t j = 0; j < o.cols_; ++j) rrow[j] = static_cast<value_type>(acc[j] % p);
      }
      return r;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const value_type& a = (*this)(i, k);
        if (field_.is_zero(a)) continue;
        const value_type* orow = o.row_data(k);
        value_type* rrow = r.row_data(i);
        for (std::size_t j = 0; j < o.cols_; ++j) rrow[j] = field_.add(rrow[j], field_.mul(a, orow[j]));
      }
    }
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (i) os << "; ";
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << ']';
  }

 private:
  void check_same_shape(const BasicMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shapes differ");
  }

  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

using Matrix = BasicMatrix<PrimeField>;
using RationalMatrix = BasicMatrix<RationalField>;

template <class F>
BasicMatrix<F> hstack(const BasicMatrix<F>& a, const BasicMatrix<F>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row counts differ");
  BasicMatrix<F> r(a.field(), a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

template <class F>
BasicMatrix<F> vstack(const BasicMatrix<F>& a, const BasicMatrix<F>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column counts differ");
  BasicMatrix<F> r(a.field(), a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

template <class F>
BasicMatrix<F> direct_sum(const BasicMatrix<F>& a, const BasicMatrix<F>& b) {
  BasicMatrix<F> r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

template <class F>
BasicMatrix<F> kronecker(const BasicMatrix<F>& a, const BasicMatrix<F>& b) {
  const F& f = a.field();
  BasicMatrix<F> r(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (f.is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
    }
  return r;
}

template <class F>
typename F::value_type trace(const BasicMatrix<F>& m) {
  const F& f = m.field();
  auto t = f.zero();
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t = f.add(t, m(i, i));
  return t;
}

/// Reduced row echelon form together with the pivot columns.
template <class F>
struct RowEchelon {
  BasicMatrix<F> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination. Pivot columns are searched left to right.
template <class F>
RowEchelon<F> rref(BasicMatrix<F> m) {
  const F& f = m.field();
  RowEchelon<F> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && f.is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const auto inv = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const auto c = m(i, col);
      if (f.is_zero(c)) continue;
      auto* dst = m.row_data(i);
      const auto* src = m.row_data(row);
      for (std::size_t j = col; j < m.cols(); ++j) dst[j] = f.sub(dst[j], f.mul(c, src[j]));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const BasicMatrix<F>& m) {
  return rref(m).rank();
}

/// Kernel basis from an already reduced matrix; the basis vectors are the columns.
template <class F>
BasicMatrix<F> kernel_from_rref(const RowEchelon<F>& e) {
  const auto& r = e.reduced;
  const F& f = r.field();
  std::vector<bool> is_pivot(r.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < r.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  BasicMatrix<F> k(f, r.cols(), free_cols.size());
  for (std::size_t c = 0; c < free_cols.size(); ++c) {
    const std::size_t fc = free_cols[c];
    k(fc, c) = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) k(e.pivots[i], c) = f.neg(r(i, fc));
  }
  return k;
}

template <class F>
BasicMatrix<F> kernel_basis(const BasicMatrix<F>& m) {
  return kernel_from_rref(rref(m));
}

template <class F>
struct RankKernel {
  std::size_t rank = 0;
  BasicMatrix<F> kernel;  // columns span ker m
};

template <class F>
RankKernel<F> rref_rank_kernel(const BasicMatrix<F>& m) {
  auto e = rref(m);
  return {e.rank(), kernel_from_rref(e)};
}

/// Solution set {particular + span(kernel columns)} of a * x = b.
template <class F>
struct SolutionSet {
  BasicMatrix<F> particular;  // a.cols() x b.cols()
  BasicMatrix<F> kernel;      // columns span ker a
};

template <class F>
std::optional<SolutionSet<F>> solve_linear(const BasicMatrix<F>& a, const BasicMatrix<F>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: row counts differ");
  const F& f = a.field();
  auto e = rref(hstack(a, b));
  const std::size_t n = a.cols();
  // A pivot in the augmented block means the system is inconsistent.
  if (!e.pivots.empty() && e.pivots.back() >= n) return std::nullopt;
  BasicMatrix<F> x(f, n, b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, n + j);
  RowEchelon<F> ea{e.reduced.block(0, 0, e.reduced.rows(), n), e.pivots};
  return SolutionSet<F>{std::move(x), kernel_from_rref(ea)};
}

template <class F>
std::optional<BasicMatrix<F>> inverse(const BasicMatrix<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto s = solve_linear(m, BasicMatrix<F>::identity(m.field(), m.rows()));
  if (!s || s->kernel.cols() != 0) return std::nullopt;
  return s->particular;
}

/// Basis (as columns) of the column space, chosen among the columns of m.
template <class F>
BasicMatrix<F> column_space(const BasicMatrix<F>& m) {
  return m.select_columns(rref(m).pivots);
}

/// Columns of the identity completing the column space of m to the whole space.
template <class F>
std::vector<std::size_t> complement_coordinates(const BasicMatrix<F>& m) {
  // Pivot search on [m | I] picks standard vectors outside span(m).
  auto e = rref(hstack(m, BasicMatrix<F>::identity(m.field(), m.rows())));
  std::vector<std::size_t> out;
  for (auto p : e.pivots)
    if (p >= m.cols()) out.push_back(p - m.cols());
  return out;
}

/// Intersection of column spaces; basis returned as columns in the ambient space.
template <class F>
BasicMatrix<F> intersect_spaces(const BasicMatrix<F>& a, const BasicMatrix<F>& b) {
  auto k = kernel_basis(hstack(a, b));
  return column_space(a * k.block(0, 0, a.cols(), k.cols()));
}

}  // namespace lambdak
