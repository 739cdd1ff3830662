#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "carterlab/finite_field.hpp"

namespace carterlab {

/// Square matrix over a FiniteField, row-major. Vectors are rows and act
/// on the right: v -> v * M.
struct Matrix {
  using Elem = FiniteField::Elem;

  std::size_t n = 0;
  std::vector<Elem> a;

  Matrix() = default;
  explicit Matrix(std::size_t dim) : n(dim), a(dim * dim, 0) {}

  static Matrix identity(std::size_t dim);
  /// I + t E_{ij}.
  static Matrix elementary(const FiniteField& f, std::size_t dim, std::size_t i, std::size_t j,
                           Elem t);
  static Matrix diagonal(const std::vector<Elem>& d);

  Elem& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix mul(const FiniteField& f, const Matrix& x, const Matrix& y);
Matrix add(const FiniteField& f, const Matrix& x, const Matrix& y);
Matrix transpose(const Matrix& x);
/// Throws std::domain_error if x is singular.
Matrix inverse(const FiniteField& f, const Matrix& x);
FiniteField::Elem determinant(const FiniteField& f, const Matrix& x);
/// Entrywise x -> x^e, e.g. e = p for the Frobenius or e = q for the
/// conjugation of GF(q^2).
Matrix entrywise_pow(const FiniteField& f, const Matrix& x, std::int64_t e);
bool is_scalar(const Matrix& x);
/// Row vector times matrix.
std::vector<FiniteField::Elem> row_times(const FiniteField& f, const std::vector<FiniteField::Elem>& v,
                                         const Matrix& m);
/// Matrix times column vector.
std::vector<FiniteField::Elem> times_column(const FiniteField& f, const Matrix& m,
                                            const std::vector<FiniteField::Elem>& v);
std::string to_string(const FiniteField& f, const Matrix& x);

}  // namespace carterlab
