#include "carterlab/matrix.hpp"

#include <stdexcept>

namespace carterlab {

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::elementary(const FiniteField& f, std::size_t dim, std::size_t i, std::size_t j,
                          Elem t) {
  Matrix m = identity(dim);
  m(i, j) = f.add(m(i, j), t);
  return m;
}

Matrix Matrix::diagonal(const std::vector<Elem>& d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix mul(const FiniteField& f, const Matrix& x, const Matrix& y) {
  if (x.n != y.n) throw std::invalid_argument("matrix dimension mismatch");
  Matrix r(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      auto xik = x(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < x.n; ++j) r(i, j) = f.add(r(i, j), f.mul(xik, y(k, j)));
    }
  return r;
}

Matrix add(const FiniteField& f, const Matrix& x, const Matrix& y) {
  if (x.n != y.n) throw std::invalid_argument("matrix dimension mismatch");
  Matrix r(x.n);
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.add(x.a[i], y.a[i]);
  return r;
}

Matrix transpose(const Matrix& x) {
  Matrix r(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j) r(j, i) = x(i, j);
  return r;
}

Matrix inverse(const FiniteField& f, const Matrix& x) {
  const std::size_t n = x.n;
  Matrix m = x, r = Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(c, j), m(piv, j));
        std::swap(r(c, j), r(piv, j));
      }
    auto s = f.inv(m(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) = f.mul(m(c, j), s);
      r(c, j) = f.mul(r(c, j), s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      auto factor = f.neg(m(i, c));
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = f.add(m(i, j), f.mul(factor, m(c, j)));
        r(i, j) = f.add(r(i, j), f.mul(factor, r(c, j)));
      }
    }
  }
  return r;
}

FiniteField::Elem determinant(const FiniteField& f, const Matrix& x) {
  const std::size_t n = x.n;
  Matrix m = x;
  FiniteField::Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    auto s = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      auto factor = f.neg(f.mul(m(i, c), s));
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.add(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

Matrix entrywise_pow(const FiniteField& f, const Matrix& x, std::int64_t e) {
  Matrix r(x.n);
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.pow(x.a[i], e);
  return r;
}

bool is_scalar(const Matrix& x) {
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j)
      if (i != j ? x(i, j) != 0 : x(i, i) != x(0, 0)) return false;
  return true;
}

std::vector<FiniteField::Elem> row_times(const FiniteField& f, const std::vector<FiniteField::Elem>& v,
                                         const Matrix& m) {
  std::vector<FiniteField::Elem> r(m.n, 0);
  for (std::size_t i = 0; i < m.n; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.n; ++j) r[j] = f.add(r[j], f.mul(v[i], m(i, j)));
  }
  return r;
}

std::vector<FiniteField::Elem> times_column(const FiniteField& f, const Matrix& m,
                                            const std::vector<FiniteField::Elem>& v) {
  std::vector<FiniteField::Elem> r(m.n, 0);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) r[i] = f.add(r[i], f.mul(m(i, j), v[j]));
  return r;
}

std::string to_string(const FiniteField& f, const Matrix& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.n; ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < x.n; ++j) s += (j ? " " : "") + f.to_string(x(i, j));
  }
  return s + "]";
}

}  // namespace carterlab
