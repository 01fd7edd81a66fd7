#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "formk1/ring.hpp"

namespace formk1 {

/// Dense row-major matrix of ring elements. Like Elem it carries no ring;
/// every operation below takes the ring explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Elem& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Elem>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix identity(const Ring& ring, std::size_t n);
Matrix zeros(const Ring& ring, std::size_t rows, std::size_t cols);
/// c * I_n.
Matrix scalar_matrix(const Ring& ring, std::size_t n, const Elem& c);
/// Matrix unit e_ij scaled by c (0-based indices).
Matrix unit_matrix(const Ring& ring, std::size_t n, std::size_t i, std::size_t j, const Elem& c);

Matrix mat_add(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix mat_neg(const Ring& ring, const Matrix& a);
Matrix mat_sub(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix mat_mul(const Ring& ring, const Matrix& a, const Matrix& b);
/// c * M (left scalar multiplication).
Matrix mat_scale(const Ring& ring, const Elem& c, const Matrix& m);
/// M * c.
Matrix mat_scale_right(const Ring& ring, const Matrix& m, const Elem& c);
/// Conjugate transpose.
Matrix mat_star(const Ring& ring, const Matrix& m);
Matrix mat_transpose(const Matrix& m);
Matrix mat_pow(const Ring& ring, const Matrix& m, unsigned k);

Matrix block(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc);
/// [[a, b], [c, d]] for square blocks of equal size.
Matrix from_blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

/// Determinant over a commutative ring (cofactor expansion with memoised
/// minors, so no division is needed).
Elem det(const Ring& ring, const Matrix& m);
/// Two-sided inverse via the adjugate, verified by multiplying back.
/// Returns nullopt when the determinant is not a unit or the ring is not
/// commutative (1x1 matrices over noncommutative rings use Ring::inverse).
std::optional<Matrix> mat_inverse(const Ring& ring, const Matrix& m);
/// True when `inv` is a two-sided inverse of `m`.
bool is_inverse_pair(const Ring& ring, const Matrix& m, const Matrix& inv);

bool is_identity(const Ring& ring, const Matrix& m);
bool is_zero_matrix(const Ring& ring, const Matrix& m);
bool is_square_of_dim(const Matrix& m, std::size_t n);

Matrix map_entries(const Matrix& m, const std::function<Elem(const Elem&)>& f);

std::string format_matrix(const Ring& ring, const Matrix& m);

}  // namespace formk1
