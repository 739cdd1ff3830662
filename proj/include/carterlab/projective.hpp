#pragma once

#include <cstdint>
#include <vector>

#include "carterlab/classical.hpp"
#include "carterlab/perm_group.hpp"

namespace carterlab {

enum class DomainMode {
  Vectors,               // nonzero vectors: faithful on the matrix group
  Points,                // projective points: kernel is the scalars
  PointsAndHyperplanes,  // points, then hyperplanes in the same order
};

/// A matrix group acting on a finite set built from GF(q)^n.
///
/// Points are row vectors with first nonzero coordinate 1, listed
/// lexicographically; a matrix g sends v to v g. A hyperplane is stored by
/// a normal vector w (normalized the same way) and is sent to g^{-1} w. Both
/// rules are right actions, so map() is a homomorphism for the library's
/// product convention.
class ProjectiveAction {
 public:
  using Elem = FiniteField::Elem;

  /// Throws CapExceeded if the domain would exceed `cap` points.
  ProjectiveAction(FiniteField field, unsigned n, DomainMode mode, std::size_t cap = 10000);

  const FiniteField& field() const { return field_; }
  unsigned dimension() const { return n_; }
  DomainMode mode() const { return mode_; }
  std::size_t degree() const { return domain_.size(); }
  /// For PointsAndHyperplanes, the number of points (= number of hyperplanes).
  std::size_t block_size() const { return block_; }
  const std::vector<std::vector<Elem>>& domain() const { return domain_; }

  Permutation map(const Matrix& g) const;
  /// Entrywise x -> x^p on coordinates.
  Permutation frobenius_perm() const;
  /// Point v <-> hyperplane with normal v^T. Conjugating map(g) by it gives
  /// map((g^T)^{-1}). Throws std::logic_error unless the mode is
  /// PointsAndHyperplanes and n >= 3.
  Permutation graph_auto_perm() const;

  /// Index of a (nonzero) vector's normalized form within a block.
  std::size_t point_index(const std::vector<Elem>& v) const;

 private:
  std::vector<Elem> normalize(std::vector<Elem> v) const;
  std::uint64_t code(const std::vector<Elem>& v) const;

  FiniteField field_;
  unsigned n_;
  DomainMode mode_;
  std::size_t block_ = 0;
  std::vector<std::vector<Elem>> domain_;
  std::vector<std::int32_t> lookup_;  // code(v) -> index within block
};

/// The permutation group generated by the images of `gens`.
PermGroup matrix_group_image(const ProjectiveAction& action, const std::vector<Matrix>& gens);

/// Image of a classical group acting on projective points (optionally with
/// hyperplanes). Its order is classical_order(spec) / scalar_count(spec).
struct ClassicalImage {
  ClassicalGroupSpec spec;
  ProjectiveAction action;
  std::vector<Matrix> matrices;
  PermGroup group;
};
ClassicalImage projective_rep(const ClassicalGroupSpec& spec, bool include_hyperplanes = false);

/// <G, autos>, where every auto normalizes G.
class AutomorphismExtension {
 public:
  /// Throws std::invalid_argument if some auto does not normalize G.
  AutomorphismExtension(PermGroup g, std::vector<Permutation> autos);

  const PermGroup& base() const { return base_; }
  const PermGroup& group() const { return group_; }
  const std::vector<Permutation>& autos() const { return autos_; }
  /// Least exponent tuple (j_1, ..., j_m), in lexicographic order, with
  /// x (a_1^{j_1} ... a_m^{j_m})^{-1} in G; exponents run below the order of
  /// each auto. Throws std::invalid_argument if x is not in the extension.
  std::vector<unsigned> coset_signature(const Permutation& x) const;

 private:
  PermGroup base_;
  std::vector<Permutation> autos_;
  PermGroup group_;
};

AutomorphismExtension extend_by_autos(const PermGroup& g, const std::vector<Permutation>& autos);

}  // namespace carterlab
