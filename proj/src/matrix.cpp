#include "lch/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace lch {

MatQ::MatQ(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("MatQ: negative dimension");
}

MatQ::MatQ(int rows, int cols, std::initializer_list<Rational> entries) : MatQ(rows, cols) {
  if (int(entries.size()) != rows * cols)
    throw std::invalid_argument("MatQ: entry count does not match dimensions");
  std::copy(entries.begin(), entries.end(), data_.begin());
}

MatQ MatQ::identity(int n) {
  MatQ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatQ MatQ::zero(int rows, int cols) { return MatQ(rows, cols); }

Rational& MatQ::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("MatQ::at");
  return data_[size_t(r) * cols_ + c];
}

const Rational& MatQ::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("MatQ::at");
  return data_[size_t(r) * cols_ + c];
}

MatQ MatQ::operator*(const MatQ& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("MatQ: shape mismatch in product");
  MatQ out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out.at(i, j) += v * other.at(k, j);
    }
  return out;
}

bool MatQ::isZero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

MatQ MatQ::columnRange(int first, int count) const {
  if (first < 0 || count < 0 || first + count > cols_)
    throw std::out_of_range("MatQ::columnRange");
  MatQ out(rows_, count);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < count; ++j) out.at(i, j) = at(i, first + j);
  return out;
}

MatQ MatQ::augmentedWith(const MatQ& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("MatQ: row mismatch in augmentation");
  MatQ out(rows_, cols_ + other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int j = 0; j < other.cols_; ++j) out.at(i, cols_ + j) = other.at(i, j);
  }
  return out;
}

Rational MatQ::det() const {
  if (rows_ != cols_) throw std::invalid_argument("MatQ::det: not square");
  MatQ work = *this;
  Rational result = 1;
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int r = col; r < rows_; ++r)
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < cols_; ++j) std::swap(work.at(pivot, j), work.at(col, j));
      result = -result;
    }
    const Rational p = work.at(col, col);
    result *= p;
    for (int r = col + 1; r < rows_; ++r) {
      if (work.at(r, col) == 0) continue;
      const Rational factor = work.at(r, col) / p;
      for (int j = col; j < cols_; ++j) work.at(r, j) -= factor * work.at(col, j);
    }
  }
  return result;
}

std::optional<Sign> MatQ::detSign() const {
  const Rational d = det();
  if (d == 0) return std::nullopt;
  return d > 0 ? Sign::plus() : Sign::minus();
}

int MatQ::rank() const {
  MatQ work = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < cols_; ++j) std::swap(work.at(pivot, j), work.at(rank, j));
    const Rational p = work.at(rank, col);
    for (int r = rank + 1; r < rows_; ++r) {
      if (work.at(r, col) == 0) continue;
      const Rational factor = work.at(r, col) / p;
      for (int j = col; j < cols_; ++j) work.at(r, j) -= factor * work.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::optional<MatQ> MatQ::solve(const MatQ& rhs) const {
  if (rhs.rows_ != rows_) throw std::invalid_argument("MatQ::solve: row mismatch");
  MatQ work = augmentedWith(rhs);
  std::vector<int> pivotCol;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pivot = -1;
    for (int r = row; r < rows_; ++r)
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < work.cols_; ++j) std::swap(work.at(pivot, j), work.at(row, j));
    const Rational p = work.at(row, col);
    for (int j = 0; j < work.cols_; ++j) work.at(row, j) /= p;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || work.at(r, col) == 0) continue;
      const Rational factor = work.at(r, col);
      for (int j = 0; j < work.cols_; ++j) work.at(r, j) -= factor * work.at(row, j);
    }
    pivotCol.push_back(col);
    ++row;
  }
  // Inconsistent when a zero row of the coefficient part has nonzero rhs.
  for (int r = row; r < rows_; ++r)
    for (int j = 0; j < rhs.cols_; ++j)
      if (work.at(r, cols_ + j) != 0) return std::nullopt;
  MatQ solution(cols_, rhs.cols_);
  for (int r = 0; r < int(pivotCol.size()); ++r)
    for (int j = 0; j < rhs.cols_; ++j) solution.at(pivotCol[r], j) = work.at(r, cols_ + j);
  return solution;
}

MatQ MatQ::extendToBasis(const MatQ& partial) {
  const int n = partial.rows();
  MatQ result = partial;
  int currentRank = partial.rank();
  if (currentRank != partial.cols())
    throw std::invalid_argument("MatQ::extendToBasis: columns are dependent");
  for (int i = 0; i < n && result.cols() < n; ++i) {
    MatQ unit(n, 1);
    unit.at(i, 0) = 1;
    MatQ candidate = result.augmentedWith(unit);
    if (candidate.rank() > currentRank) {
      result = candidate;
      ++currentRank;
    }
  }
  if (result.cols() != n) throw std::logic_error("MatQ::extendToBasis: extension failed");
  return result;
}

std::string MatQ::toString() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    os << (i + 1 == rows_ ? "]" : ";\n");
  }
  return os.str();
}

}  // namespace lch
