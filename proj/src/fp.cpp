#include "arh/fp.hpp"

namespace arh {

const uint32_t kDefaultPrime = 10007;

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint32_t d = 3; (uint64_t)d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

uint32_t Fp::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1 % p_;
  uint32_t b = a % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

uint32_t Fp::inv(uint32_t a) const {
  check(a % p_ != 0, "Fp::inv of zero");
  return pow(a, p_ - 2);
}

Mat Mat::identity(const Fp& F, int n) {
  Mat m(F, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1 % F.p();
  return m;
}

Mat Mat::from_rows(const Fp& F, std::initializer_list<std::initializer_list<int64_t>> rows) {
  int nr = (int)rows.size();
  int nc = nr == 0 ? 0 : (int)rows.begin()->size();
  Mat m(F, nr, nc);
  int r = 0;
  for (const auto& row : rows) {
    check((int)row.size() == nc, "from_rows: ragged rows");
    int c = 0;
    for (int64_t v : row) m(r, c++) = F.reduce(v);
    ++r;
  }
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  check(cols_ == o.rows_ && F_ == o.F_, "Mat product shape/field mismatch");
  Mat r(F_, rows_, o.cols_);
  const uint64_t p = F_.p();
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      uint64_t aik = (*this)(i, k);
      if (!aik) continue;
      for (int j = 0; j < o.cols_; ++j) {
        uint64_t v = r(i, j) + aik * o(k, j) % p;
        r(i, j) = (uint32_t)(v >= p ? v - p : v);
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  check(rows_ == o.rows_ && cols_ == o.cols_ && F_ == o.F_, "Mat sum mismatch");
  Mat r(F_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_.add(a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  check(rows_ == o.rows_ && cols_ == o.cols_ && F_ == o.F_, "Mat diff mismatch");
  Mat r(F_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_.sub(a_[i], o.a_[i]);
  return r;
}

Mat Mat::scaled(uint32_t c) const {
  Mat r(F_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_.mul(a_[i], c);
  return r;
}

Mat Mat::transpose() const {
  Mat r(F_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Mat Mat::block(int r0, int c0, int nr, int nc) const {
  check(r0 >= 0 && c0 >= 0 && r0 + nr <= rows_ && c0 + nc <= cols_, "Mat::block out of range");
  Mat r(F_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

bool Mat::is_zero() const {
  for (uint32_t v : a_)
    if (v) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (uint32_t)(i == j ? 1 % F_.p() : 0)) return false;
  return true;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  check(a.rows() == b.rows() && a.field() == b.field(), "hstack mismatch");
  Mat r(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  check(a.cols() == b.cols() && a.field() == b.field(), "vstack mismatch");
  Mat r(a.field(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

std::vector<int> rref_inplace(Mat& A) {
  const Fp F = A.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < A.cols() && r < A.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < A.rows(); ++i)
      if (A(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < A.cols(); ++j) std::swap(A(piv, j), A(r, j));
    uint32_t inv = F.inv(A(r, c));
    for (int j = c; j < A.cols(); ++j) A(r, j) = F.mul(A(r, j), inv);
    for (int i = 0; i < A.rows(); ++i) {
      if (i == r || !A(i, c)) continue;
      uint32_t f = A(i, c);
      for (int j = c; j < A.cols(); ++j) A(i, j) = F.sub(A(i, j), F.mul(f, A(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(Mat A) { return (int)rref_inplace(A).size(); }

bool is_invertible(const Mat& A) {
  return A.rows() == A.cols() && rank(A) == A.rows();
}

Subspace nullspace(const Mat& A) {
  Mat R = A;
  std::vector<int> pivots = rref_inplace(R);
  int n = A.cols();
  std::vector<bool> is_piv(n, false);
  for (int c : pivots) is_piv[c] = true;
  Mat vecs(A.field(), n, n - (int)pivots.size());
  int k = 0;
  for (int c = 0; c < n; ++c) {
    if (is_piv[c]) continue;
    vecs(c, k) = 1;
    for (int i = 0; i < (int)pivots.size(); ++i)
      vecs(pivots[i], k) = A.field().neg(R(i, c));
    ++k;
  }
  return Subspace::span_of(vecs);
}

Mat solve_exact(const Mat& A, const Mat& B) {
  check(A.rows() == B.rows(), "solve_exact shape mismatch");
  Mat aug = Mat::hstack(A, B);
  std::vector<int> pivots = rref_inplace(aug);
  for (int c : pivots)
    if (c >= A.cols()) throw Error(Errc::BadInput, "solve_exact: inconsistent system");
  if ((int)pivots.size() != A.cols())
    throw Error(Errc::BadInput, "solve_exact: matrix not of full column rank");
  Mat X(A.field(), A.cols(), B.cols());
  for (int i = 0; i < (int)pivots.size(); ++i)
    for (int j = 0; j < B.cols(); ++j) X(pivots[i], j) = aug(i, A.cols() + j);
  return X;
}

Subspace Subspace::span_of(const Mat& vectors_as_cols) {
  Mat R = vectors_as_cols.transpose();
  std::vector<int> pivots = rref_inplace(R);
  Subspace s(vectors_as_cols.field(), vectors_as_cols.rows());
  int k = (int)pivots.size();
  Mat basis(vectors_as_cols.field(), vectors_as_cols.rows(), k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < vectors_as_cols.rows(); ++i) basis(i, j) = R(j, i);
  s.basis_ = basis;
  s.pivot_rows_ = pivots;
  return s;
}

bool Subspace::contains(const Mat& column) const {
  check(column.rows() == ambient_ && column.cols() == 1, "contains: bad column");
  // Reduce the column against the echelon basis.
  Mat v = column;
  for (int j = 0; j < dim(); ++j) {
    uint32_t c = v(pivot_rows_[j], 0);
    if (!c) continue;
    for (int i = 0; i < ambient_; ++i) v(i, 0) = F_.sub(v(i, 0), F_.mul(c, basis_(i, j)));
  }
  return v.is_zero();
}

Mat Subspace::coords_of(const Mat& column) const {
  check(contains(column), "coords_of: vector not in subspace");
  Mat c(F_, dim(), column.cols());
  for (int j = 0; j < dim(); ++j)
    for (int t = 0; t < column.cols(); ++t) c(j, t) = column(pivot_rows_[j], t);
  return c;
}

QuotientData quotient_data(const Subspace& U) {
  const Fp F = U.field();
  int n = U.ambient_dim();
  int k = U.dim();
  std::vector<bool> is_piv(n, false);
  for (int r : U.pivot_rows()) is_piv[r] = true;
  QuotientData q{Mat(F, n - k, n), Mat(F, n, n - k)};
  int t = 0;
  for (int r = 0; r < n; ++r) {
    if (is_piv[r]) continue;
    // projection(x) = (x - U * x[pivot rows]) restricted to non-pivot rows
    q.projection(t, r) = 1 % F.p();
    for (int j = 0; j < k; ++j) q.projection(t, U.pivot_rows()[j]) = F.neg(U.basis()(r, j));
    q.section(r, t) = 1 % F.p();
    ++t;
  }
  return q;
}

Subspace column_space(const Mat& A) { return Subspace::span_of(A); }

}  // namespace arh
