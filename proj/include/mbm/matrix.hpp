#pragma once

// Dense matrices over GF(p). A Mat with r rows and c columns is a morphism
// from the c-dimensional to the r-dimensional space, acting on column vectors.
// Tensor products use the Kronecker basis order with the left factor most
// significant: basis vector (i, j) of a (x) b has index i * dim(b) + j.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mbm/errors.hpp"
#include "mbm/field.hpp"

namespace mbm {

class Mat {
 public:
  Mat(FieldSpec field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Rows of (possibly negative) integers, reduced mod p.
  Mat(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows)
      : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ShapeError("ragged matrix literal");
      for (long long v : row) data_.push_back(field.reduce(v));
    }
  }

  static Mat from_rows(FieldSpec field, const std::vector<std::vector<long long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Mat out(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ShapeError("ragged matrix literal");
      for (std::size_t j = 0; j < cols; ++j) out.set(i, j, field.reduce(rows[i][j]));
    }
    return out;
  }

  static Mat identity(FieldSpec field, std::size_t n) {
    Mat out(field, n, n);
    for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
    return out;
  }

  static Mat zero(FieldSpec field, std::size_t rows, std::size_t cols) { return Mat(field, rows, cols); }

  FieldSpec field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Scalar operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Scalar v) noexcept { data_[i * cols_ + j] = v % field_.p(); }
  void add_to(std::size_t i, std::size_t j, Scalar v) noexcept {
    auto& x = data_[i * cols_ + j];
    x = field_.add(x, v % field_.p());
  }

  const std::vector<Scalar>& entries() const noexcept { return data_; }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

namespace detail {

inline void require_same_field(const Mat& a, const Mat& b, std::string_view op) {
  if (!(a.field() == b.field())) {
    throw ShapeError(std::string(op) + ": matrices over GF(" + std::to_string(a.field().p()) + ") and GF(" +
                     std::to_string(b.field().p()) + ")");
  }
}

}  // namespace detail

/// g . f  (f applied first).
inline Mat compose(const Mat& g, const Mat& f) {
  detail::require_same_field(g, f, "compose");
  if (f.rows() != g.cols()) {
    throw ShapeError("compose: cannot apply " + g.shape() + " after " + f.shape());
  }
  const FieldSpec field = g.field();
  const std::size_t n = f.cols();
  Mat out(field, g.rows(), n);
  std::vector<std::uint64_t> acc(n);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < g.cols(); ++k) {
      const std::uint64_t gik = g(i, k);
      if (gik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar fkj = f(k, j);
        if (fkj != 0) acc[j] = (acc[j] + gik * fkj) % field.p();
      }
    }
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, static_cast<Scalar>(acc[j]));
  }
  return out;
}

/// Composite of a chain written in diagram-reading order right to left:
/// compose_chain({h, g, f}) = h . g . f.
inline Mat compose_chain(std::initializer_list<Mat> chain) {
  if (chain.size() == 0) throw PreconditionError("compose_chain: empty chain");
  auto it = std::rbegin(chain);
  Mat acc = *it++;
  for (; it != std::rend(chain); ++it) acc = compose(*it, acc);
  return acc;
}

inline Mat kron(const Mat& f, const Mat& g) {
  detail::require_same_field(f, g, "kron");
  Mat out(f.field(), f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const Scalar fij = f(i, j);
      if (fij == 0) continue;
      for (std::size_t k = 0; k < g.rows(); ++k)
        for (std::size_t l = 0; l < g.cols(); ++l) {
          const Scalar gkl = g(k, l);
          if (gkl != 0) out.set(i * g.rows() + k, j * g.cols() + l, f.field().mul(fij, gkl));
        }
    }
  return out;
}

inline Mat kron(std::initializer_list<Mat> factors) {
  if (factors.size() == 0) throw PreconditionError("kron: no factors");
  auto it = factors.begin();
  Mat acc = *it++;
  for (; it != factors.end(); ++it) acc = kron(acc, *it);
  return acc;
}

/// The symmetric braiding a (x) b -> b (x) a: basis (i, j) goes to (j, i).
inline Mat flip(FieldSpec field, std::size_t a, std::size_t b) {
  Mat out(field, a * b, a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) out.set(j * a + i, i * b + j, 1);
  return out;
}

inline Mat transpose(const Mat& m) {
  Mat out(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(j, i, m(i, j));
  return out;
}

/// Index of the first basis vector of the domain on which a and b differ.
inline std::optional<std::size_t> first_difference(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("cannot compare " + a.shape() + " with " + b.shape());
  }
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return j;
  return std::nullopt;
}

struct RowEchelon {
  Mat reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
inline RowEchelon row_reduce(Mat m) {
  const FieldSpec f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Scalar tmp = m(r, j);
        m.set(r, j, m(pr, j));
        m.set(pr, j, tmp);
      }
    const Scalar inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.set(r, j, f.mul(m(r, j), inv));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Scalar factor = m(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m.set(i, j, f.sub(m(i, j), f.mul(factor, m(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Mat& m) { return row_reduce(m).pivots.size(); }
inline bool is_surjective(const Mat& m) { return rank(m) == m.rows(); }
inline bool is_injective(const Mat& m) { return rank(m) == m.cols(); }

/// Columns form a basis of { x : m x = 0 }, ordered by free column.
inline Mat nullspace(const Mat& m) {
  const auto [reduced, pivots] = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const FieldSpec f = m.field();
  Mat basis(f, m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    basis.set(fc, k, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis.set(pivots[r], k, f.neg(reduced(r, fc)));
  }
  return basis;
}

/// The unique X with X . s = t, provided s is surjective and t vanishes on
/// ker s; nullopt when t does not factor through s.
inline std::optional<Mat> solve_right(const Mat& t, const Mat& s) {
  detail::require_same_field(t, s, "solve_right");
  if (t.cols() != s.cols()) {
    throw ShapeError("solve_right: target " + t.shape() + " and surjection " + s.shape() + " have different domains");
  }
  const std::size_t k = s.rows();
  // Row-reduce [s^T | t^T]; s^T has full column rank iff s is surjective.
  Mat aug(s.field(), s.cols(), k + t.rows());
  for (std::size_t i = 0; i < s.cols(); ++i) {
    for (std::size_t j = 0; j < k; ++j) aug.set(i, j, s(j, i));
    for (std::size_t j = 0; j < t.rows(); ++j) aug.set(i, k + j, t(j, i));
  }
  const auto [reduced, pivots] = row_reduce(std::move(aug));
  std::size_t s_pivots = 0;
  while (s_pivots < pivots.size() && pivots[s_pivots] < k) ++s_pivots;
  if (s_pivots != k) throw PreconditionError("solve_right: " + s.shape() + " is not surjective");
  if (pivots.size() != k) return std::nullopt;
  Mat x(s.field(), t.rows(), k);
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j) x.set(i, j, reduced(j, k + i));
  return x;
}

inline std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (!is_surjective(m)) return std::nullopt;
  return solve_right(Mat::identity(m.field(), m.rows()), m);
}

/// Matrix literal: integers separated by whitespace, rows separated by ';'.
inline Mat parse_matrix_literal(FieldSpec field, std::string_view text) {
  std::vector<std::vector<long long>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    std::istringstream in{std::string(text.substr(start, end - start))};
    std::vector<long long> row;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw PreconditionError("not an integer: '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
    start = end + 1;
  }
  return Mat::from_rows(field, rows);
}

inline std::string format_matrix_literal(const Mat& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
  }
  return out.str();
}

/// One row per line, entries separated by single spaces.
inline void write_matrix_rows(std::ostream& out, const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

}  // namespace mbm
