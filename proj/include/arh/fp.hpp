#pragma once

// Exact dense linear algebra over a prime field F_p.
//
// All bases produced here are canonical (reduced echelon form), so equal
// subspaces have equal data and every computation is reproducible bit for
// bit.  Matrices are immutable in practice: operations return new values.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "arh/error.hpp"

namespace arh {

bool is_prime(uint32_t n);

// The field F_p.  Cheap value type, carried inside every Mat.
class Fp {
public:
  Fp() : p_(0) {}
  explicit Fp(uint32_t p) : p_(p) {
    if (!is_prime(p)) throw Error(Errc::BadInput, "modulus must be prime");
  }
  uint32_t p() const { return p_; }
  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((uint64_t)a * b % p_);
  }
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t inv(uint32_t a) const;
  // Reduce a signed integer into [0, p).
  uint32_t reduce(int64_t x) const {
    int64_t r = x % (int64_t)p_;
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }
  bool operator==(const Fp& o) const { return p_ == o.p_; }
  bool operator!=(const Fp& o) const { return p_ != o.p_; }

private:
  uint32_t p_;
};

extern const uint32_t kDefaultPrime;  // 10007

// Dense row-major matrix over F_p.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(const Fp& F, int rows, int cols)
      : F_(F), rows_(rows), cols_(cols), a_((size_t)rows * cols, 0) {
    check(rows >= 0 && cols >= 0, "Mat: negative shape");
  }
  static Mat identity(const Fp& F, int n);
  static Mat from_rows(const Fp& F, std::initializer_list<std::initializer_list<int64_t>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Fp& field() const { return F_; }
  uint32_t operator()(int r, int c) const { return a_[(size_t)r * cols_ + c]; }
  uint32_t& operator()(int r, int c) { return a_[(size_t)r * cols_ + c]; }
  const std::vector<uint32_t>& data() const { return a_; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(uint32_t c) const;
  Mat transpose() const;
  Mat block(int r0, int c0, int nr, int nc) const;
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;

  static Mat hstack(const Mat& a, const Mat& b);
  static Mat vstack(const Mat& a, const Mat& b);

  // Column c as an n x 1 matrix.
  Mat col(int c) const { return block(0, c, rows_, 1); }

private:
  Fp F_;
  int rows_, cols_;
  std::vector<uint32_t> a_;
};

// In-place reduced row echelon form; returns the pivot column list.
std::vector<int> rref_inplace(Mat& A);
int rank(Mat A);
bool is_invertible(const Mat& A);

// Canonical basis of {x : Ax = 0} as columns.  The basis is the reduced
// echelon form of the solution space, so it only depends on the space.
class Subspace;
Subspace nullspace(const Mat& A);

// Unique solve A X = B for A of full column rank; throws on inconsistency.
Mat solve_exact(const Mat& A, const Mat& B);

// A subspace of F_p^n given by a canonical (column-reduced-echelon) basis.
// basis() is n x dim with basis()(pivot_rows()[j], i) == (i == j).
class Subspace {
public:
  Subspace() : ambient_(0) {}
  Subspace(const Fp& F, int ambient) : F_(F), ambient_(ambient), basis_(F, ambient, 0) {}
  // Canonicalize the span of the given columns.
  static Subspace span_of(const Mat& vectors_as_cols);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.cols(); }
  const Fp& field() const { return F_; }
  const Mat& basis() const { return basis_; }
  const std::vector<int>& pivot_rows() const { return pivot_rows_; }

  bool contains(const Mat& column) const;
  // Coordinates of a member column in the canonical basis (asserts membership).
  Mat coords_of(const Mat& column) const;
  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

private:
  Fp F_;
  int ambient_;
  Mat basis_;
  std::vector<int> pivot_rows_;
};

// Projection onto the echelon complement of U and its right inverse:
// projection * section = id, projection restricted to U = 0.
struct QuotientData {
  Mat projection;  // (n - k) x n
  Mat section;     // n x (n - k)
};
QuotientData quotient_data(const Subspace& U);

// Column span of A, canonical.
Subspace column_space(const Mat& A);

}  // namespace arh
