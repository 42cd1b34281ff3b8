#ifndef GFNF_LINALG_HPP
#define GFNF_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "gfnf/field.hpp"

namespace gfnf {

/// Dense row-major matrix over a fixed field context.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t d);
  static Matrix from_indices(FieldPtr field,
                             const std::vector<std::vector<std::uint32_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

/// Kernel selection for the elimination/product loops. Serial is the
/// reference implementation; Parallel uses OpenMP row partitioning and is
/// bit-identical to it (row updates are independent and arithmetic is exact).
/// Auto picks Parallel for matrices above an internal size threshold.
enum class ExecPolicy { Serial, Parallel, Auto };

struct RrefResult {
  Matrix r;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form. Pivots are chosen deterministically:
/// first nonzero entry scanning columns left-to-right, rows top-to-bottom.
RrefResult rref(const Matrix& m, ExecPolicy policy = ExecPolicy::Auto);

std::size_t rank(const Matrix& m, ExecPolicy policy = ExecPolicy::Auto);

/// Rows span ker(m) (as column vectors: m * y^t = 0) and the returned
/// (cols - rank) x cols matrix is itself in reduced row echelon form.
Matrix nullspace_rref(const Matrix& m, ExecPolicy policy = ExecPolicy::Auto);

/// One deterministic solution of a*z = b: free variables are set to zero in
/// the rref of the augmented matrix. Throws NoSolution if inconsistent.
std::vector<FieldElement> solve_particular(const Matrix& a, std::span<const FieldElement> b,
                                           ExecPolicy policy = ExecPolicy::Auto);

/// Inverse of a square matrix; throws Singular.
Matrix invert(const Matrix& m, ExecPolicy policy = ExecPolicy::Auto);

Matrix mat_mul(const Matrix& a, const Matrix& b, ExecPolicy policy = ExecPolicy::Auto);
Matrix transpose(const Matrix& m);
std::vector<FieldElement> mat_vec(const Matrix& a, std::span<const FieldElement> x);

}  // namespace gfnf

#endif
