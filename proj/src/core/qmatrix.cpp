#include "qmatrix.hpp"

#include <algorithm>

namespace psh {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require(rows >= 0 && cols >= 0, Errc::invalid_argument, "negative matrix shape");
  data_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    require(static_cast<int>(rows[i].size()) == c, Errc::wrong_size, "ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  require(cols_ == o.rows_, Errc::wrong_size, "matrix product shape mismatch");
  QMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        out.at(i, j) += a * o.at(k, j);
      }
    }
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, Errc::wrong_size, "matrix sum shape mismatch");
  QMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, Errc::wrong_size, "matrix diff shape mismatch");
  QMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

QMatrix QMatrix::operator-() const {
  QMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
  return out;
}

QMatrix QMatrix::operator*(const Rat& s) const {
  QMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& r) { return r == 0; });
}

bool QMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

QMatrix QMatrix::row_slice(int from, int to) const {
  require(0 <= from && from <= to && to <= rows_, Errc::index_out_of_range, "row slice");
  QMatrix out(to - from, cols_);
  for (int i = from; i < to; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i - from, j) = at(i, j);
  return out;
}

QMatrix QMatrix::col_slice(int from, int to) const {
  require(0 <= from && from <= to && to <= cols_, Errc::index_out_of_range, "col slice");
  QMatrix out(rows_, to - from);
  for (int i = 0; i < rows_; ++i)
    for (int j = from; j < to; ++j) out.at(i, j - from) = at(i, j);
  return out;
}

QMatrix QMatrix::hstack(const QMatrix& a, const QMatrix& b) {
  require(a.rows_ == b.rows_, Errc::wrong_size, "hstack row mismatch");
  QMatrix out(a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols_; ++j) out.at(i, a.cols_ + j) = b.at(i, j);
  }
  return out;
}

QMatrix QMatrix::vstack(const QMatrix& a, const QMatrix& b) {
  require(a.cols_ == b.cols_, Errc::wrong_size, "vstack col mismatch");
  QMatrix out(a.rows_ + b.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) out.at(a.rows_ + i, j) = b.at(i, j);
  return out;
}

QMatrix QMatrix::block_diag(const std::vector<QMatrix>& blocks) {
  int r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  QMatrix out(r, c);
  int ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) out.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return out;
}

Echelon QMatrix::rref() const {
  Echelon e{*this, {}};
  QMatrix& m = e.reduced;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int piv = -1;
    for (int i = row; i < rows_; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (int j = col; j < cols_; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

int QMatrix::rank() const { return static_cast<int>(rref().pivots.size()); }

QMatrix QMatrix::kernel_basis() const {
  Echelon e = rref();
  std::vector<bool> is_piv(cols_, false);
  for (int p : e.pivots) is_piv[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < cols_; ++j)
    if (!is_piv[j]) free_cols.push_back(j);
  QMatrix out(cols_, static_cast<int>(free_cols.size()));
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    int f = free_cols[k];
    out.at(f, k) = 1;
    for (int i = 0; i < static_cast<int>(e.pivots.size()); ++i)
      out.at(e.pivots[i], k) = -e.reduced.at(i, f);
  }
  return out;
}

QMatrix QMatrix::column_space_basis() const {
  Echelon e = transpose().rref();
  int r = static_cast<int>(e.pivots.size());
  return e.reduced.row_slice(0, r).transpose();
}

std::optional<QMatrix> QMatrix::solve(const QMatrix& rhs) const {
  require(rows_ == rhs.rows(), Errc::wrong_size, "solve shape mismatch");
  Echelon e = hstack(*this, rhs).rref();
  // A pivot in the rhs block means some rhs column is outside the column span.
  for (int p : e.pivots)
    if (p >= cols_) return std::nullopt;
  QMatrix x(cols_, rhs.cols());
  for (int i = 0; i < static_cast<int>(e.pivots.size()); ++i)
    for (int j = 0; j < rhs.cols(); ++j) x.at(e.pivots[i], j) = e.reduced.at(i, cols_ + j);
  return x;
}

QMatrix QMatrix::solve_must(const QMatrix& rhs) const {
  auto x = solve(rhs);
  require(x.has_value(), Errc::solve_failed, "inconsistent linear system");
  return *x;
}

QMatrix QMatrix::inverse() const {
  require(rows_ == cols_, Errc::solve_failed, "inverse of non-square matrix");
  Echelon e = hstack(*this, identity(rows_)).rref();
  require(static_cast<int>(e.pivots.size()) == rows_ &&
              (rows_ == 0 || e.pivots.back() < rows_),
          Errc::solve_failed, "singular matrix");
  return e.reduced.col_slice(rows_, 2 * rows_);
}

SubspaceSplit split_off_subspace(const QMatrix& basis, int ambient_dim) {
  require(basis.rows() == ambient_dim, Errc::wrong_size, "basis ambient mismatch");
  int r = basis.cols();
  Echelon e = basis.transpose().rref();
  require(static_cast<int>(e.pivots.size()) == r, Errc::invalid_argument,
          "dependent columns in subspace basis");
  std::vector<bool> is_piv(ambient_dim, false);
  for (int p : e.pivots) is_piv[p] = true;
  std::vector<int> rest;
  for (int j = 0; j < ambient_dim; ++j)
    if (!is_piv[j]) rest.push_back(j);
  QMatrix canon = e.reduced.row_slice(0, r).transpose();
  QMatrix comp(ambient_dim, static_cast<int>(rest.size()));
  QMatrix proj(static_cast<int>(rest.size()), ambient_dim);
  for (int a = 0; a < static_cast<int>(rest.size()); ++a) {
    comp.at(rest[a], a) = 1;
    proj.at(a, rest[a]) = 1;
    for (int i = 0; i < r; ++i) proj.at(a, e.pivots[i]) = -canon.at(rest[a], i);
  }
  return {canon, comp, proj};
}

QMatrix coords_in_basis(const QMatrix& basis, const QMatrix& vectors) {
  return basis.solve_must(vectors);
}

int BlockSystem::add_block(int rows, int cols) {
  require(rows >= 0 && cols >= 0, Errc::invalid_argument, "negative block shape");
  blocks_.push_back({rows, cols, total_});
  total_ += rows * cols;
  return static_cast<int>(blocks_.size()) - 1;
}

void BlockSystem::add_zero_equation(const std::vector<Term>& terms) {
  require(!terms.empty(), Errc::invalid_argument, "empty equation");
  int eq_rows = terms.front().left.rows();
  int eq_cols = terms.front().right.cols();
  for (const auto& t : terms) {
    const Blk& b = blocks_[t.block];
    require(t.left.cols() == b.rows && t.right.rows() == b.cols, Errc::wrong_size,
            "term shape does not match block");
    require(t.left.rows() == eq_rows && t.right.cols() == eq_cols, Errc::wrong_size,
            "terms of one equation must share a shape");
  }
  // entry (i,j) of sum L X R contributes coefficient L[i][a] R[b][j] to
  // unknown X[a][b]
  for (int i = 0; i < eq_rows; ++i) {
    for (int j = 0; j < eq_cols; ++j) {
      std::vector<Rat> row(total_);
      bool nonzero = false;
      for (const auto& t : terms) {
        const Blk& b = blocks_[t.block];
        for (int a = 0; a < b.rows; ++a) {
          if (t.left.at(i, a) == 0) continue;
          for (int c = 0; c < b.cols; ++c) {
            if (t.right.at(c, j) == 0) continue;
            Rat add = t.left.at(i, a) * t.right.at(c, j);
            row[b.offset + a * b.cols + c] += add;
            nonzero = true;
          }
        }
      }
      if (nonzero) eq_rows_.push_back(std::move(row));
    }
  }
}

QMatrix BlockSystem::solution_basis() const {
  QMatrix m(static_cast<int>(eq_rows_.size()), total_);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < total_; ++j) m.at(i, j) = eq_rows_[i][j];
  return m.kernel_basis();
}

QMatrix BlockSystem::unpack(const QMatrix& solutions, int col, int block) const {
  const Blk& b = blocks_[block];
  QMatrix out(b.rows, b.cols);
  for (int a = 0; a < b.rows; ++a)
    for (int c = 0; c < b.cols; ++c) out.at(a, c) = solutions.at(b.offset + a * b.cols + c, col);
  return out;
}

}  // namespace psh
