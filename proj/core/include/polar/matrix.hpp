#pragma once

#include <optional>
#include <vector>

#include "polar/field.hpp"

namespace polar {

/// Dense matrix over a small GF(2^h). Row-major.
struct Mat {
  Field field;
  int rows = 0;
  int cols = 0;
  std::vector<felem> a;

  Mat(Field f, int r, int c) : field(f), rows(r), cols(c), a(std::size_t(r) * c, 0) {}

  felem& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
  felem at(int i, int j) const { return a[std::size_t(i) * cols + j]; }

  bool operator==(const Mat& o) const {
    return field == o.field && rows == o.rows && cols == o.cols && a == o.a;
  }
};

Mat mat_identity(const Field& f, int n);
Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_add(const Mat& x, const Mat& y);
Mat mat_transpose(const Mat& x);
int mat_rank(Mat x);
std::optional<Mat> mat_inverse(const Mat& x);

/// Solve row vector v with v * m = rhs (m square invertible).
std::vector<felem> mat_solve_left(const Mat& m, const std::vector<felem>& rhs);

}  // namespace polar
