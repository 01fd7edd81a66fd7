#include "formk1/matrix.hpp"

#include <unordered_map>

namespace formk1 {

Matrix identity(const Ring& ring, std::size_t n) { return scalar_matrix(ring, n, ring.one()); }

Matrix zeros(const Ring& ring, std::size_t rows, std::size_t cols) { return Matrix(rows, cols, ring.zero()); }

Matrix scalar_matrix(const Ring& ring, std::size_t n, const Elem& c) {
  Matrix m(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix unit_matrix(const Ring& ring, std::size_t n, std::size_t i, std::size_t j, const Elem& c) {
  Matrix m(n, n, ring.zero());
  m(i, j) = c;
  return m;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorKind::DimensionMismatch, "matrix shapes " + std::to_string(a.rows()) + "x" +
                                           std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                           "x" + std::to_string(b.cols()) + " differ");
}

}  // namespace

Matrix mat_add(const Ring& ring, const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ring.add(a(i, j), b(i, j));
  return out;
}

Matrix mat_neg(const Ring& ring, const Matrix& a) {
  return map_entries(a, [&](const Elem& x) { return ring.neg(x); });
}

Matrix mat_sub(const Ring& ring, const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ring.sub(a(i, j), b(i, j));
  return out;
}

Matrix mat_mul(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    fail(ErrorKind::DimensionMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                           std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                           "x" + std::to_string(b.cols()));
  Matrix out(a.rows(), b.cols(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem& aik = a(i, k);
      if (ring.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (ring.is_zero(b(k, j))) continue;
        out(i, j) = ring.add(out(i, j), ring.mul(aik, b(k, j)));
      }
    }
  return out;
}

Matrix mat_scale(const Ring& ring, const Elem& c, const Matrix& m) {
  return map_entries(m, [&](const Elem& x) { return ring.mul(c, x); });
}

Matrix mat_scale_right(const Ring& ring, const Matrix& m, const Elem& c) {
  return map_entries(m, [&](const Elem& x) { return ring.mul(x, c); });
}

Matrix mat_star(const Ring& ring, const Matrix& m) {
  Matrix out(m.cols(), m.rows(), ring.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = ring.conj(m(i, j));
  return out;
}

Matrix mat_transpose(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return Matrix(m.cols(), m.rows(), Elem{});
  Matrix out(m.cols(), m.rows(), m(0, 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

Matrix mat_pow(const Ring& ring, const Matrix& m, unsigned k) {
  Matrix out = identity(ring, m.rows());
  for (unsigned e = 0; e < k; ++e) out = mat_mul(ring, out, m);
  return out;
}

Matrix block(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  if (r0 + nr > m.rows() || c0 + nc > m.cols()) fail(ErrorKind::DimensionMismatch, "block out of range");
  Matrix out(nr, nc, Elem{});
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = m(r0 + i, c0 + j);
  return out;
}

Matrix from_blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  std::size_t n = a.rows();
  for (const Matrix* x : {&a, &b, &c, &d})
    if (!is_square_of_dim(*x, n)) fail(ErrorKind::DimensionMismatch, "blocks must be square of equal size");
  Matrix out(2 * n, 2 * n, Elem{});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = a(i, j);
      out(i, n + j) = b(i, j);
      out(n + i, j) = c(i, j);
      out(n + i, n + j) = d(i, j);
    }
  return out;
}

namespace {

/// Determinant of the submatrix on rows [row, row + popcount(cols)) of
/// `rows` and the column set `cols`, memoised on the column mask.
class MinorDet {
 public:
  MinorDet(const Ring& ring, const Matrix& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols)
      : ring_(ring), m_(m), rows_(std::move(rows)), cols_(std::move(cols)) {}

  Elem full() { return eval(0, (std::uint64_t{1} << cols_.size()) - 1); }

 private:
  Elem eval(std::size_t depth, std::uint64_t mask) {
    if (mask == 0) return ring_.one();
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    Elem acc = ring_.zero();
    bool negative = false;
    for (std::size_t k = 0; k < cols_.size(); ++k) {
      if (!(mask & (std::uint64_t{1} << k))) continue;
      const Elem& entry = m_(rows_[depth], cols_[k]);
      if (!ring_.is_zero(entry)) {
        Elem term = ring_.mul(entry, eval(depth + 1, mask & ~(std::uint64_t{1} << k)));
        acc = negative ? ring_.sub(acc, term) : ring_.add(acc, term);
      }
      negative = !negative;
    }
    memo_.emplace(mask, acc);
    return acc;
  }

  const Ring& ring_;
  const Matrix& m_;
  std::vector<std::size_t> rows_, cols_;
  std::unordered_map<std::uint64_t, Elem> memo_;
};

std::vector<std::size_t> range_except(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k)
    if (k != skip) out.push_back(k);
  return out;
}

}  // namespace

Elem det(const Ring& ring, const Matrix& m) {
  if (!m.square()) fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  if (m.rows() > 20) fail(ErrorKind::DimensionMismatch, "determinant limited to size 20");
  std::size_t n = m.rows();
  return MinorDet(ring, m, range_except(n, n), range_except(n, n)).full();
}

std::optional<Matrix> mat_inverse(const Ring& ring, const Matrix& m) {
  if (!m.square()) fail(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return m;
  if (n == 1) {
    auto inv = ring.inverse(m(0, 0));
    if (!inv) return std::nullopt;
    return Matrix(1, 1, *inv);
  }
  if (!ring.is_commutative()) return std::nullopt;
  auto dinv = ring.inverse(det(ring, m));
  if (!dinv) return std::nullopt;
  Matrix adj(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // adj(i, j) = (-1)^{i+j} det(m without row j, column i)
      Elem minor = MinorDet(ring, m, range_except(n, j), range_except(n, i)).full();
      adj(i, j) = ((i + j) % 2 == 0) ? minor : ring.neg(minor);
    }
  Matrix inv = mat_scale(ring, *dinv, adj);
  if (!is_inverse_pair(ring, m, inv)) return std::nullopt;
  return inv;
}

bool is_inverse_pair(const Ring& ring, const Matrix& m, const Matrix& inv) {
  if (!m.square() || !is_square_of_dim(inv, m.rows())) return false;
  return is_identity(ring, mat_mul(ring, m, inv)) && is_identity(ring, mat_mul(ring, inv, m));
}

bool is_identity(const Ring& ring, const Matrix& m) {
  if (!m.square()) return false;
  Elem zero = ring.zero(), one = ring.one();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == (i == j ? one : zero))) return false;
  return true;
}

bool is_zero_matrix(const Ring& ring, const Matrix& m) {
  Elem zero = ring.zero();
  for (const auto& x : m.data())
    if (!(x == zero)) return false;
  return true;
}

bool is_square_of_dim(const Matrix& m, std::size_t n) { return m.rows() == n && m.cols() == n; }

Matrix map_entries(const Matrix& m, const std::function<Elem(const Elem&)>& f) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  return out;
}

std::string format_matrix(const Ring& ring, const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += ring.format(m(i, j));
    }
  }
  return out + "]";
}

}  // namespace formk1
