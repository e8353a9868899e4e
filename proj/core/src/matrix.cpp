#include "polar/matrix.hpp"

#include <stdexcept>

namespace polar {

Mat mat_identity(const Field& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (!(x.field == y.field) || x.cols != y.rows)
    throw std::invalid_argument("matrix product shape/field mismatch");
  const Field& f = x.field;
  Mat r(f, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      felem v = x.at(i, k);
      if (!v) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) ^= f.mul(v, y.at(k, j));
    }
  return r;
}

Mat mat_add(const Mat& x, const Mat& y) {
  if (!(x.field == y.field) || x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("matrix sum shape/field mismatch");
  Mat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] ^= y.a[i];
  return r;
}

Mat mat_transpose(const Mat& x) {
  Mat r(x.field, x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

int mat_rank(Mat x) {
  const Field& f = x.field;
  int rank = 0;
  for (int col = 0; col < x.cols && rank < x.rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < x.rows; ++i)
      if (x.at(i, col)) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < x.cols; ++j) std::swap(x.at(rank, j), x.at(pivot, j));
    felem piv_inv = f.inv(x.at(rank, col));
    for (int j = 0; j < x.cols; ++j) x.at(rank, j) = f.mul(x.at(rank, j), piv_inv);
    for (int i = 0; i < x.rows; ++i) {
      if (i == rank || !x.at(i, col)) continue;
      felem c = x.at(i, col);
      for (int j = 0; j < x.cols; ++j) x.at(i, j) ^= f.mul(c, x.at(rank, j));
    }
    ++rank;
  }
  return rank;
}

std::optional<Mat> mat_inverse(const Mat& x) {
  if (x.rows != x.cols) throw std::invalid_argument("inverse of non-square matrix");
  const Field& f = x.field;
  int n = x.rows;
  Mat work = x;
  Mat inv = mat_identity(f, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (work.at(i, col)) {
        pivot = i;
        break;
      }
    if (pivot < 0) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      std::swap(work.at(col, j), work.at(pivot, j));
      std::swap(inv.at(col, j), inv.at(pivot, j));
    }
    felem piv_inv = f.inv(work.at(col, col));
    for (int j = 0; j < n; ++j) {
      work.at(col, j) = f.mul(work.at(col, j), piv_inv);
      inv.at(col, j) = f.mul(inv.at(col, j), piv_inv);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || !work.at(i, col)) continue;
      felem c = work.at(i, col);
      for (int j = 0; j < n; ++j) {
        work.at(i, j) ^= f.mul(c, work.at(col, j));
        inv.at(i, j) ^= f.mul(c, inv.at(col, j));
      }
    }
  }
  return inv;
}

std::vector<felem> mat_solve_left(const Mat& m, const std::vector<felem>& rhs) {
  if (int(rhs.size()) != m.cols) throw std::invalid_argument("solve shape mismatch");
  auto inv = mat_inverse(m);
  if (!inv) throw std::domain_error("singular system");
  // v = rhs * m^-1
  std::vector<felem> v(m.rows, 0);
  for (int j = 0; j < m.rows; ++j)
    for (int k = 0; k < m.cols; ++k) v[j] ^= m.field.mul(rhs[k], inv->at(k, j));
  return v;
}

}  // namespace polar
