#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "carterlab/matrix.hpp"

namespace carterlab {

enum class Family { SL, GL, Sp, SU, GU };

std::string to_string(Family f);

/// A classical matrix group. `n` is the matrix dimension (even for Sp).
/// SU and GU act on GF(q^2)^n and preserve the hermitian form with Gram
/// matrix the antidiagonal of ones.
///
/// Sp uses the ordered basis (e_1, ..., e_m, f_m, ..., f_1), m = n/2, with
/// Gram matrix J = [[0, A], [-A, 0]], A the m x m antidiagonal of ones; so
/// coordinate i (0-based) pairs with 2m - 1 - i.
struct ClassicalGroupSpec {
  Family family = Family::SL;
  unsigned n = 2;
  std::uint64_t q = 2;

  /// Throws std::invalid_argument for unsupported parameters.
  void validate() const;
  /// GF(q), or GF(q^2) for SU/GU.
  FiniteField field() const;
  /// Gram matrix of the preserved form; identity for SL/GL.
  Matrix form(const FiniteField& f) const;
  std::string to_string() const;
};

/// Root-subgroup generators: the elementary matrices I + b E_{i,i+1} and
/// I + b E_{i+1,i} with b running over an additive basis of the field, for
/// SL; the simple long and short root elements and their transposes for Sp;
/// the form-preserving upper unitriangular matrices needed to generate
/// the unipotent radical, and their transposes, for SU. GL and GU add one
/// diagonal matrix of generating determinant.
std::vector<Matrix> classical_group(const ClassicalGroupSpec& spec);

/// True iff g^T J g == J, with g^T replaced by the entrywise q-power of g
/// transposed for SU/GU; for SL/GL, true iff det g is 1 (SL) or nonzero.
bool preserves_form(const ClassicalGroupSpec& spec, const FiniteField& f, const Matrix& g);

/// |G| for the matrix group of `spec`.
std::uint64_t classical_order(const ClassicalGroupSpec& spec);
/// Number of scalar matrices in the matrix group of `spec`.
std::uint64_t scalar_count(const ClassicalGroupSpec& spec);

struct LieOrder {
  std::uint64_t full = 0;    // the simply connected group, e.g. SL, Sp, SU
  std::uint64_t center = 0;  // its center
  std::uint64_t simple = 0;  // full / center
};

/// q^N prod (q^{d_i} - e_i) over the degrees d_i of the Weyl group, with
/// e_i = 1 for split groups and -1 on the degrees moved by the graph
/// twist. Twisted forms supported: 2A_l, 2D_l, 2E6 (q is the size of the
/// fixed field). Throws std::invalid_argument for other types and
/// std::overflow_error past 64 bits.
LieOrder lie_order(char type, unsigned rank, std::uint64_t q, bool twisted = false);

/// The long root element x_{2e_i}(t) of Sp(2m, q): the identity plus t in
/// slot (i-1, 2m-i). 1 <= i <= m.
Matrix long_root_element(const FiniteField& f, unsigned m, unsigned i, FiniteField::Elem t);

}  // namespace carterlab
