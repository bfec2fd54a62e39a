#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace psh {

struct Echelon;

// Dense matrix over Q. Values are immutable in spirit: operations return new
// matrices. Row/column counts of zero are legal and show up routinely as zero
// stalks, so every routine must tolerate 0xN and Nx0 shapes.
class QMatrix {
public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols);

  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  bool operator==(const QMatrix& o) const = default;

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator-() const;
  QMatrix operator*(const Rat& s) const;

  QMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  QMatrix row_slice(int from, int to) const;  // rows [from, to)
  QMatrix col_slice(int from, int to) const;

  static QMatrix hstack(const QMatrix& a, const QMatrix& b);
  static QMatrix vstack(const QMatrix& a, const QMatrix& b);
  static QMatrix block_diag(const std::vector<QMatrix>& blocks);

  Echelon rref() const;
  int rank() const;

  // Columns form the canonical reduced basis of the null space (free variables
  // set to unit vectors, ordered by free column index).
  QMatrix kernel_basis() const;

  // Columns form the canonical basis of the column space: RREF of the
  // transpose, nonzero rows transposed back. Equal subspaces give equal
  // matrices, so subspace comparison is matrix comparison.
  QMatrix column_space_basis() const;

  // Solves (*this) * X = rhs. Returns the particular solution with all free
  // variables zero, or nullopt if inconsistent.
  std::optional<QMatrix> solve(const QMatrix& rhs) const;
  QMatrix solve_must(const QMatrix& rhs) const;  // throws Errc::solve_failed

  QMatrix inverse() const;  // throws Errc::solve_failed if singular
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

private:
  int rows_, cols_;
  std::vector<Rat> data_;  // row-major, canonicalized
};

struct Echelon {
  QMatrix reduced;          // reduced row echelon form
  std::vector<int> pivots;  // pivot column per nonzero row
};

// Canonical decomposition of the ambient space Q^n along a subspace. `basis`
// must have independent columns in canonical (column_space_basis) form.
// complement: standard basis vectors at the non-pivot coordinates.
// projection: Q^n -> Q^(n-r) with projection*basis = 0 and
// projection*complement = identity.
struct SubspaceSplit {
  QMatrix basis;
  QMatrix complement;
  QMatrix projection;
};
SubspaceSplit split_off_subspace(const QMatrix& basis, int ambient_dim);

// Coordinates of the columns of `vectors` in terms of the independent columns
// of `basis`; throws if any column lies outside the span.
QMatrix coords_in_basis(const QMatrix& basis, const QMatrix& vectors);

// Homogeneous linear system whose unknowns are a family of matrices X_b.
// Equations have the shape sum_i L_i X_{b_i} R_i = 0. Solutions come back as
// the canonical kernel basis, one column per solution, unpacked blockwise.
class BlockSystem {
public:
  int add_block(int rows, int cols);

  struct Term {
    int block;
    QMatrix left;
    QMatrix right;
  };
  void add_zero_equation(const std::vector<Term>& terms);

  QMatrix solution_basis() const;  // unknowns x solution count
  QMatrix unpack(const QMatrix& solutions, int col, int block) const;
  int block_rows(int b) const { return blocks_[b].rows; }
  int block_cols(int b) const { return blocks_[b].cols; }

private:
  struct Blk {
    int rows, cols, offset;
  };
  std::vector<Blk> blocks_;
  int total_ = 0;
  std::vector<std::vector<Rat>> eq_rows_;
};

}  // namespace psh
