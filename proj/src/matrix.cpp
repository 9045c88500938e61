#include "dualbraid/matrix.hpp"

#include <algorithm>

#include "dualbraid/util.hpp"

namespace dualbraid {

std::string rat_to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  require(cols_ == o.rows_, "matrix product shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o.at(k, j) != 0) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

QMatrix QMatrix::rref(int* rank) const {
  QMatrix m = *this;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (int j = c; j < cols_; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  if (rank) *rank = r;
  return m;
}

int QMatrix::rank() const {
  int r = 0;
  rref(&r);
  return r;
}

Rat QMatrix::det() const {
  require(rows_ == cols_, "det of non-square matrix");
  QMatrix m = *this;
  Rat d = 1;
  for (int c = 0; c < cols_; ++c) {
    int piv = -1;
    for (int i = c; i < rows_; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Rat inv = 1 / m.at(c, c);
    for (int i = c + 1; i < rows_; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) * inv;
      for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

std::vector<std::vector<Rat>> QMatrix::kernel_basis() const {
  QMatrix m = rref();
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(cols_, false);
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c)
    if (m.at(r, c) != 0) {
      pivot_col.push_back(c);
      is_pivot[c] = true;
      ++r;
    }
  std::vector<std::vector<Rat>> basis;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(cols_, 0);
    v[c] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
      v[pivot_col[i]] = -m.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rat>> QMatrix::solve(const std::vector<Rat>& b) const {
  require(static_cast<int>(b.size()) == rows_, "solve: rhs length mismatch");
  QMatrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  QMatrix m = aug.rref();
  std::vector<Rat> x(cols_, 0);
  int r = 0;
  for (int c = 0; c <= cols_ && r < rows_; ++c) {
    if (m.at(r, c) == 0) continue;
    if (c == cols_) return std::nullopt;  // pivot in rhs column: inconsistent
    // columns must be independent for uniqueness
    x[c] = m.at(r, cols_);
    ++r;
  }
  // verify independence was actually present (pivot in every column)
  if (r != cols_) {
    int rk = 0;
    rref(&rk);
    require(rk == cols_, "solve: dependent columns");
  }
  return x;
}

QMatrix QMatrix::inverse() const {
  require(rows_ == cols_, "inverse of non-square matrix");
  QMatrix aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  int r = 0;
  QMatrix m = aug.rref(&r);
  require(r == rows_, "inverse of singular matrix");
  QMatrix inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = m.at(i, cols_ + j);
  return inv;
}

bool SparseRank::add_row(std::vector<std::pair<long, Rat>> row) {
  while (!row.empty()) {
    long lead = row.front().first;
    auto it = std::lower_bound(
        pivots_.begin(), pivots_.end(), lead,
        [](const auto& p, long col) { return p.front().first < col; });
    if (it == pivots_.end() || it->front().first != lead) {
      pivots_.insert(it, std::move(row));
      return true;
    }
    // eliminate leading entry against the stored pivot row
    Rat f = row.front().second / it->front().second;
    std::vector<std::pair<long, Rat>> out;
    out.reserve(row.size() + it->size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < it->size()) {
      if (j == it->size() || (i < row.size() && row[i].first < (*it)[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || (*it)[j].first < row[i].first) {
        out.emplace_back((*it)[j].first, -f * (*it)[j].second);
        ++j;
      } else {
        Rat v = row[i].second - f * (*it)[j].second;
        if (v != 0) out.emplace_back(row[i].first, v);
        ++i;
        ++j;
      }
    }
    row = std::move(out);
  }
  return false;
}

}  // namespace dualbraid
