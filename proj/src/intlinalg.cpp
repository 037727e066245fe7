#include "fanpoly/intlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "fanpoly/error.hpp"

namespace fanpoly {

// ---------------------------------------------------------------- Matrix<T>

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.row_span(i).begin());
  }
  return m;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
  auto s = row_span(i);
  return {s.begin(), s.end()};
}

template <class T>
std::vector<T> Matrix<T>::column(std::size_t j) const {
  std::vector<T> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

template <class T>
std::vector<std::vector<T>> Matrix<T>::row_vectors() const {
  std::vector<std::vector<T>> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

template <class T>
Matrix<T> Matrix<T>::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class T>
Matrix<T> Matrix<T>::take_rows(std::size_t begin, std::size_t end) const {
  Matrix m(end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    std::copy(row_span(i).begin(), row_span(i).end(), m.row_span(i - begin).begin());
  return m;
}

template <class T>
Matrix<T> Matrix<T>::take_cols(std::size_t begin, std::size_t end) const {
  Matrix m(rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = begin; j < end; ++j) m(i, j - begin) = (*this)(i, j);
  return m;
}

template <class T>
void Matrix<T>::append_row(std::span<const T> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "appended row has wrong length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

template <class T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <class T>
void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

template <class T>
bool Matrix<T>::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
}

template <class T>
std::vector<T> Matrix<T>::apply(std::span<const T> x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  std::vector<T> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    T acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

template <class T>
std::string Matrix<T>::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product size mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& top, const Matrix<T>& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw Error(ErrorKind::DimensionMismatch, "vstack column mismatch");
  Matrix<T> m = top;
  for (std::size_t i = 0; i < bottom.rows(); ++i) m.append_row(bottom.row_span(i));
  return m;
}

template class Matrix<Integer>;
template class Matrix<Rational>;
template IntMatrix operator*(const IntMatrix&, const IntMatrix&);
template RatMatrix operator*(const RatMatrix&, const RatMatrix&);
template IntMatrix vstack(const IntMatrix&, const IntMatrix&);
template RatMatrix vstack(const RatMatrix&, const RatMatrix&);

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

// ---------------------------------------------------------------- helpers

namespace {

struct Bezout {
  Integer g, s, t;  // s*a + t*b = g >= 0
};

Bezout xgcd(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Unimodular combination of rows r and i leaving gcd(m(r,c), m(i,c)) at
// (r,c) and zero at (i,c); the same operation is applied to u.
void row_eliminate(IntMatrix& m, IntMatrix& u, std::size_t r, std::size_t i, std::size_t c) {
  const Integer a = m(r, c);
  const Integer b = m(i, c);
  if (b == 0) return;
  auto apply = [](IntMatrix& x, std::size_t r, std::size_t i, const Integer& p, const Integer& q,
                  const Integer& pp, const Integer& qq) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      Integer xr = x(r, j), xi = x(i, j);
      x(r, j) = p * xr + q * xi;
      x(i, j) = pp * xr + qq * xi;
    }
  };
  if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    Integer q = b / a;
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= q * m(r, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) -= q * u(r, j);
    return;
  }
  Bezout bz = xgcd(a, b);
  Integer ag = a / bz.g, bg = b / bz.g;
  apply(m, r, i, bz.s, bz.t, -bg, ag);
  apply(u, r, i, bz.s, bz.t, -bg, ag);
}

void col_eliminate(IntMatrix& m, IntMatrix& v, std::size_t r, std::size_t j, std::size_t c) {
  // Column analogue: pivot column c, target column j, driven by row r.
  const Integer a = m(r, c);
  const Integer b = m(r, j);
  if (b == 0) return;
  auto apply = [](IntMatrix& x, std::size_t c, std::size_t j, const Integer& p, const Integer& q,
                  const Integer& pp, const Integer& qq) {
    for (std::size_t i = 0; i < x.rows(); ++i) {
      Integer xc = x(i, c), xj = x(i, j);
      x(i, c) = p * xc + q * xj;
      x(i, j) = pp * xc + qq * xj;
    }
  };
  if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    Integer q = b / a;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) -= q * m(i, c);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, j) -= q * v(i, c);
    return;
  }
  Bezout bz = xgcd(a, b);
  Integer ag = a / bz.g, bg = b / bz.g;
  apply(m, c, j, bz.s, bz.t, -bg, ag);
  apply(v, c, j, bz.s, bz.t, -bg, ag);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

// ---------------------------------------------------------------- SNF / HNF

std::vector<Integer> SNFResult::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

SNFResult snf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix s = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (s(i, j) != 0 && (pi == m || abs(s(i, j)) < abs(s(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    s.swap_rows(t, pi);
    u.swap_rows(t, pi);
    s.swap_cols(t, pj);
    v.swap_cols(t, pj);

    for (;;) {
      bool dirty = true;
      while (dirty) {
        for (std::size_t i = t + 1; i < m; ++i) row_eliminate(s, u, t, i, t);
        for (std::size_t j = t + 1; j < n; ++j) col_eliminate(s, v, t, j, t);
        dirty = false;
        for (std::size_t i = t + 1; i < m; ++i)
          if (s(i, t) != 0) dirty = true;
      }
      // Divisibility: fold an offending row into the pivot row and retry.
      bool fixed = true;
      for (std::size_t i = t + 1; i < m && fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            for (std::size_t k = 0; k < n; ++k) s(t, k) += s(i, k);
            for (std::size_t k = 0; k < m; ++k) u(t, k) += u(i, k);
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  }
  return {std::move(u), std::move(s), std::move(v)};
}

HNFResult hnf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) row_eliminate(h, u, r, i, c);
    if (h(r, c) == 0) continue;  // column is zero from row r down
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= q * h(r, j);
      for (std::size_t j = 0; j < m; ++j) u(i, j) -= q * u(r, j);
    }
    ++r;
  }
  return {std::move(h), std::move(u), r};
}

IntMatrix hnf_basis(const IntMatrix& a) {
  HNFResult res = hnf(a);
  IntMatrix out = res.H.take_rows(0, res.rank);
  if (res.rank == 0) out = IntMatrix(0, a.cols());
  return out;
}

IntMatrix kernel_lattice(const IntMatrix& a) {
  const std::size_t n = a.cols();
  HNFResult res = hnf(a.transposed());
  IntMatrix ker = res.U.take_rows(res.rank, n);
  if (ker.rows() == 0) return IntMatrix(0, n);
  return hnf_basis(ker);
}

IntMatrix saturate(const IntMatrix& l) {
  // (L^perp)^perp over Z is the saturation of the row lattice of L.
  return kernel_lattice(kernel_lattice(l));
}

std::size_t rank(const IntMatrix& a) { return hnf(a).rank; }

std::size_t rank(const RatMatrix& a) {
  RatMatrix m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) /= prev;  // exact by Sylvester's identity
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntVector reduce_modulo(const IntMatrix& hnf_rows, IntVector v) {
  for (std::size_t i = 0; i < hnf_rows.rows(); ++i) {
    std::size_t p = 0;
    while (p < hnf_rows.cols() && hnf_rows(i, p) == 0) ++p;
    if (p == hnf_rows.cols()) continue;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v[p].get_mpz_t(), hnf_rows(i, p).get_mpz_t());
    if (q == 0) continue;
    for (std::size_t j = p; j < hnf_rows.cols(); ++j) v[j] -= q * hnf_rows(i, j);
  }
  return v;
}

bool lattice_contains(const IntMatrix& hnf_rows, const IntVector& v) {
  IntVector r = reduce_modulo(hnf_rows, v);
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return hnf_basis(a) == hnf_basis(b);
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    m.swap_rows(c, p);
    inv.swap_rows(c, p);
    Rational piv = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::optional<RatMatrix> solve_left(const RatMatrix& a, const RatMatrix& b) {
  // X a = b  <=>  a^T X^T = b^T; reduce [a^T | b^T] to row echelon form.
  if (a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "solve_left column mismatch");
  const std::size_t unknowns = a.rows();
  RatMatrix at = a.transposed();
  RatMatrix bt = b.transposed();
  const std::size_t eqs = at.rows();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < eqs; ++c) {
    std::size_t p = r;
    while (p < eqs && at(p, c) == 0) ++p;
    if (p == eqs) continue;
    at.swap_rows(r, p);
    bt.swap_rows(r, p);
    Rational piv = at(r, c);
    for (std::size_t j = 0; j < unknowns; ++j) at(r, j) /= piv;
    for (std::size_t j = 0; j < bt.cols(); ++j) bt(r, j) /= piv;
    for (std::size_t i = 0; i < eqs; ++i) {
      if (i == r || at(i, c) == 0) continue;
      Rational f = at(i, c);
      for (std::size_t j = 0; j < unknowns; ++j) at(i, j) -= f * at(r, j);
      for (std::size_t j = 0; j < bt.cols(); ++j) bt(i, j) -= f * bt(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < eqs; ++i)
    for (std::size_t j = 0; j < bt.cols(); ++j)
      if (bt(i, j) != 0) return std::nullopt;
  RatMatrix xt(unknowns, bt.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < bt.cols(); ++j) xt(pivots[i], j) = bt(i, j);
  return xt.transposed();
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntVector primitive(IntVector v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product size mismatch");
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

std::string to_string(std::span<const Integer> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].get_str();
  }
  return s + "]";
}

}  // namespace fanpoly
