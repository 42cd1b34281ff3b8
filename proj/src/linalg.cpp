#include "gfnf/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace gfnf {

namespace {

void check_same_field(const Matrix& a, const Matrix& b, const char* what) {
  if (!a.field() || !b.field() || !same_field(*a.field(), *b.field())) {
    throw Error(ErrorKind::ContextMismatch, std::string(what) + ": matrices over different fields");
  }
}

constexpr std::size_t kParallelCellThreshold = 1u << 14;

bool run_parallel(ExecPolicy policy, std::size_t cells) {
#ifdef _OPENMP
  switch (policy) {
    case ExecPolicy::Serial: return false;
    case ExecPolicy::Parallel: return true;
    case ExecPolicy::Auto: return cells >= kParallelCellThreshold;
  }
  return false;
#else
  (void)policy;
  (void)cells;
  return false;
#endif
}

// Gauss-Jordan over the first pivot_cols columns, in place. Returns the pivot
// columns in increasing order. The per-row eliminations only read the (already
// normalized) pivot row and write their own row, so the parallel path produces
// exactly the serial result.
std::vector<std::size_t> rref_in_place(Matrix& m, std::size_t pivot_cols, bool parallel) {
  const Field& f = *m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m.at(pr, c).index == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r) {
      auto a = m.row(r);
      auto b = m.row(pr);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const FieldElement lead = m.at(r, c);
    if (lead.index != 1) {
      const FieldElement inv = f.inv(lead);
      for (std::size_t j = c; j < cols; ++j) m.at(r, j) = f.mul(inv, m.at(r, j));
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (std::int64_t i = 0; i < std::int64_t(rows); ++i) {
      if (std::size_t(i) == r) continue;
      const FieldElement factor = m.at(i, c);
      if (factor.index == 0) continue;
      m.at(i, c) = f.zero();
      for (std::size_t j = c + 1; j < cols; ++j) {
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  (void)parallel;
  return pivots;
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, FieldElement{0}) {}

Matrix Matrix::identity(FieldPtr field, std::size_t d) {
  Matrix m(std::move(field), d, d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = m.field()->one();
  return m;
}

Matrix Matrix::from_indices(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw Error(ErrorKind::LengthMismatch, "ragged row in matrix literal");
    }
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = field->element(rows[i][j]);
  }
  return m;
}

bool Matrix::operator==(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  if (field_ && other.field_ && !same_field(*field_, *other.field_)) return false;
  return data_ == other.data_;
}

RrefResult rref(const Matrix& m, ExecPolicy policy) {
  Matrix r = m;
  auto pivots = rref_in_place(r, r.cols(), run_parallel(policy, m.rows() * m.cols()));
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m, ExecPolicy policy) { return rref(m, policy).pivots.size(); }

Matrix nullspace_rref(const Matrix& m, ExecPolicy policy) {
  const Field& f = *m.field();
  auto [r, pivots] = rref(m, policy);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  // Standard free-variable basis from the rref, one row per free column.
  const std::size_t s = cols - pivots.size();
  Matrix basis(m.field(), s, cols);
  std::size_t row = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    basis.at(row, j) = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      basis.at(row, pivots[i]) = f.neg(r.at(i, j));
    }
    ++row;
  }

  // A second elimination pass puts the basis itself into reduced row echelon
  // form, the shape the kernel-basis consumers require.
  rref_in_place(basis, cols, run_parallel(policy, s * cols));
  return basis;
}

std::vector<FieldElement> solve_particular(const Matrix& a, std::span<const FieldElement> b,
                                           ExecPolicy policy) {
  if (b.size() != a.rows()) {
    throw Error(ErrorKind::LengthMismatch, "right-hand side length != row count");
  }
  const Field& f = *a.field();
  const std::size_t cols = a.cols();
  Matrix aug(a.field(), a.rows(), cols + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, cols) = b[i];
  }
  auto pivots = rref_in_place(aug, cols + 1, run_parallel(policy, aug.rows() * aug.cols()));
  if (!pivots.empty() && pivots.back() == cols) {
    throw Error(ErrorKind::NoSolution, "inconsistent linear system");
  }
  std::vector<FieldElement> z(cols, f.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) z[pivots[i]] = aug.at(i, cols);
  return z;
}

Matrix invert(const Matrix& m, ExecPolicy policy) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "invert: matrix not square");
  const std::size_t d = m.rows();
  Matrix aug(m.field(), d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, d + i) = m.field()->one();
  }
  auto pivots = rref_in_place(aug, d, run_parallel(policy, 2 * d * d));
  if (pivots.size() != d) throw Error(ErrorKind::Singular, "matrix is singular");
  Matrix out(m.field(), d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) out.at(i, j) = aug.at(i, d + j);
  }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, ExecPolicy policy) {
  check_same_field(a, b, "mat_mul");
  if (a.cols() != b.rows()) throw Error(ErrorKind::LengthMismatch, "mat_mul: inner dimensions");
  const Field& f = *a.field();
  Matrix out(a.field(), a.rows(), b.cols());
  const bool parallel = run_parallel(policy, a.rows() * a.cols() * b.cols());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (std::int64_t i = 0; i < std::int64_t(a.rows()); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement aik = a.at(i, k);
      if (aik.index == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) = f.add(out.at(i, j), f.mul(aik, b.at(k, j)));
      }
    }
  }
  (void)parallel;
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(j, i) = m.at(i, j);
  }
  return out;
}

std::vector<FieldElement> mat_vec(const Matrix& a, std::span<const FieldElement> x) {
  if (x.size() != a.cols()) throw Error(ErrorKind::LengthMismatch, "mat_vec: dimension mismatch");
  const Field& f = *a.field();
  std::vector<FieldElement> y(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    FieldElement acc = f.zero();
    for (std::size_t j = 0; j < a.cols(); ++j) acc = f.add(acc, f.mul(a.at(i, j), x[j]));
    y[i] = acc;
  }
  return y;
}

}  // namespace gfnf
