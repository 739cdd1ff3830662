#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "carterlab/perm_group.hpp"

namespace carterlab {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row-major

/// A crystallographic root system in a standard integer realization,
/// scaled by 2 for F4 and E6-E8 so that all coordinates are integers.
///
/// Root order: positive roots by increasing height, ties broken by
/// decreasing coefficient vector (so the simple roots come first, in
/// order); then the negatives in the same order. Root i + N is -root i,
/// with N = positive_count().
class RootSystem {
 public:
  /// Supported: A1-A7, B2-B7, C2-C7, D3-D7, E6, E7, E8, F4, G2.
  /// Throws std::invalid_argument otherwise.
  RootSystem(char type, unsigned rank);

  char type() const { return type_; }
  unsigned rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }
  std::size_t dimension() const { return roots_.front().size(); }
  std::size_t size() const { return roots_.size(); }
  std::size_t positive_count() const { return roots_.size() / 2; }

  const IntVector& root(std::size_t i) const { return roots_.at(i); }
  /// Coefficients of root i in the simple roots.
  const IntVector& coefficients(std::size_t i) const { return coeffs_.at(i); }
  std::int64_t height(std::size_t i) const;
  bool is_positive(std::size_t i) const { return i < positive_count(); }
  std::size_t negative(std::size_t i) const;
  /// Index of a root given by ambient coordinates, or -1.
  std::int64_t find(const IntVector& v) const;
  /// Index of the root with these simple-root coefficients, or -1.
  std::int64_t find_by_coefficients(const IntVector& c) const;

  std::int64_t inner(std::size_t i, std::size_t j) const;
  bool is_long(std::size_t i) const { return inner(i, i) == max_norm_; }
  bool simply_laced() const { return min_norm_ == max_norm_; }
  /// The highest root: the last positive root.
  std::size_t highest_root() const { return positive_count() - 1; }
  /// Index of the root s_i(root j), i a simple root index.
  std::size_t reflect(std::size_t i, std::size_t j) const { return reflection_[i][j]; }

 private:
  char type_;
  unsigned rank_;
  std::vector<IntVector> roots_;
  std::vector<IntVector> coeffs_;
  std::int64_t max_norm_ = 0;
  std::int64_t min_norm_ = 0;
  std::vector<std::vector<std::size_t>> reflection_;
  std::map<IntVector, std::size_t> by_coords_;
  std::map<IntVector, std::size_t> by_coeffs_;
};

/// Cartan integer <s, r> = 2(s, r)/(r, r).
std::int64_t pairing(const RootSystem& phi, std::size_t s, std::size_t r);

/// Exponent of the torus action on root subgroups: h_s(l) multiplies the
/// parameter of x_r by l^{2(s,r)/(s,s)}. Equal to pairing(phi, r, s).
std::int64_t torus_exponent(const RootSystem& phi, std::size_t s, std::size_t r);

struct HighestRoot {
  std::size_t index;
  IntVector coefficients;
};
HighestRoot highest_root(const RootSystem& phi);

/// W as a permutation group on the root list, with lattice matrices taken
/// in simple-root coordinates: column j of matrix(w) holds the
/// coefficients of w(alpha_j).
class WeylGroupRep {
 public:
  explicit WeylGroupRep(const RootSystem& phi);

  const RootSystem& roots() const { return phi_; }
  const std::vector<Permutation>& simple_reflections() const { return simple_; }
  const PermGroup& group() const { return group_; }
  IntMatrix matrix(const Permutation& w) const;
  /// Indices i_1..i_k (1-based) with w = s_{i_1} ... s_{i_k} as linear maps
  /// (s_{i_k} applied first); of minimal length.
  std::vector<unsigned> reduced_word(const Permutation& w) const;
  /// Root permutation of a word in simple reflections (1-based indices).
  Permutation from_word(const std::vector<unsigned>& word) const;

 private:
  RootSystem phi_;
  std::vector<Permutation> simple_;
  PermGroup group_;
};

WeylGroupRep weyl_group(const RootSystem& phi);

/// A diagram symmetry rho of finite order acting on the roots.
struct Twist {
  std::string name;                  // "id", "flip" or "triality"
  std::vector<unsigned> simple_map;  // rho(alpha_i) = alpha_{simple_map[i]}
  Permutation root_perm;
  unsigned order = 1;
};

Twist identity_twist(const RootSystem& phi);
/// The order-2 symmetry of A_n (n >= 2), D_n or E6. Throws otherwise.
Twist diagram_flip(const RootSystem& phi);
/// alpha_1 -> alpha_3 -> alpha_4 -> alpha_1 on D4. Throws otherwise.
Twist triality(const RootSystem& phi);
/// By name: "id", "flip" or "triality".
Twist make_twist(const RootSystem& phi, const std::string& name);

/// Integer polynomial, coefficients low to high.
using IntPolynomial = std::vector<std::int64_t>;
std::int64_t evaluate(const IntPolynomial& p, std::int64_t x);
std::string to_string(const IntPolynomial& p, const std::string& var = "q");

struct TorusClass {
  Permutation representative;  // least W-rank element of the class
  std::vector<unsigned> rep_word;
  std::uint64_t size = 0;
  /// det(q M - I) for M the lattice matrix of w tau, sign fixed so that
  /// the value at q = 2 is positive.
  IntPolynomial order_poly;
};

/// Classes of w ~ x^{-1} w (tau x tau^{-1}). These are the W-classes of the
/// coset elements w tau. Throws std::invalid_argument unless tau normalizes
/// W, CapExceeded if |W| > cap.
std::vector<TorusClass> f_conjugacy_classes(const WeylGroupRep& w, const Twist& tau,
                                            std::uint64_t cap = 51840);

IntPolynomial torus_polynomial(const WeylGroupRep& w, const Permutation& x, const Twist& tau);
/// |det(q M(w tau) - I)|.
std::uint64_t torus_order(const WeylGroupRep& w, const Permutation& x, const Twist& tau,
                          std::int64_t q);

/// Exact integer determinant (fraction-free elimination).
std::int64_t determinant(const IntMatrix& m);

}  // namespace carterlab
