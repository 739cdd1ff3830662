#include "carterlab/projective.hpp"

#include <stdexcept>

namespace carterlab {

ProjectiveAction::ProjectiveAction(FiniteField field, unsigned n, DomainMode mode, std::size_t cap)
    : field_(std::move(field)), n_(n), mode_(mode) {
  if (n == 0) throw std::invalid_argument("ProjectiveAction: dimension must be positive");
  const std::uint64_t q = field_.size();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    total *= q;
    if (total > (1u << 26)) throw CapExceeded("ProjectiveAction: vector space too large");
  }
  const std::uint64_t count = mode == DomainMode::Vectors ? total - 1 : (total - 1) / (q - 1);
  const std::uint64_t size = mode == DomainMode::PointsAndHyperplanes ? 2 * count : count;
  if (size > cap) throw CapExceeded("ProjectiveAction: domain exceeds cap");

  lookup_.assign(total, -1);
  // Enumerate in lexicographic order: coordinate 0 most significant.
  for (std::uint64_t c = 1; c < total; ++c) {
    std::vector<Elem> v(n);
    std::uint64_t rest = c;
    for (unsigned i = n; i-- > 0;) {
      v[i] = static_cast<Elem>(rest % q);
      rest /= q;
    }
    if (mode != DomainMode::Vectors) {
      unsigned lead = 0;
      while (v[lead] == 0) ++lead;
      if (v[lead] != 1) continue;
    }
    lookup_[c] = static_cast<std::int32_t>(domain_.size());
    domain_.push_back(std::move(v));
  }
  block_ = domain_.size();
  if (mode == DomainMode::PointsAndHyperplanes)
    for (std::size_t i = 0; i < block_; ++i) domain_.push_back(domain_[i]);
}

std::uint64_t ProjectiveAction::code(const std::vector<Elem>& v) const {
  std::uint64_t c = 0;
  for (Elem x : v) c = c * field_.size() + x;
  return c;
}

std::vector<FiniteField::Elem> ProjectiveAction::normalize(std::vector<Elem> v) const {
  if (mode_ == DomainMode::Vectors) return v;
  unsigned lead = 0;
  while (lead < n_ && v[lead] == 0) ++lead;
  if (lead == n_) throw std::domain_error("zero vector has no projective point");
  Elem s = field_.inv(v[lead]);
  for (auto& x : v) x = field_.mul(x, s);
  return v;
}

std::size_t ProjectiveAction::point_index(const std::vector<Elem>& v) const {
  std::int32_t k = lookup_.at(code(normalize(v)));
  if (k < 0) throw std::domain_error("vector outside the domain");
  return static_cast<std::size_t>(k);
}

Permutation ProjectiveAction::map(const Matrix& g) const {
  if (g.n != n_) throw std::invalid_argument("ProjectiveAction::map: dimension mismatch");
  std::vector<Point> im(domain_.size());
  for (std::size_t i = 0; i < block_; ++i)
    im[i] = static_cast<Point>(point_index(row_times(field_, domain_[i], g)));
  if (mode_ == DomainMode::PointsAndHyperplanes) {
    Matrix ginv = inverse(field_, g);
    for (std::size_t i = 0; i < block_; ++i)
      im[block_ + i] =
          static_cast<Point>(block_ + point_index(times_column(field_, ginv, domain_[block_ + i])));
  }
  return Permutation(std::move(im));
}

Permutation ProjectiveAction::frobenius_perm() const {
  std::vector<Point> im(domain_.size());
  const std::size_t blocks = mode_ == DomainMode::PointsAndHyperplanes ? 2 : 1;
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t i = 0; i < block_; ++i) {
      std::vector<Elem> v = domain_[b * block_ + i];
      for (auto& x : v) x = field_.frobenius(x);
      im[b * block_ + i] = static_cast<Point>(b * block_ + point_index(v));
    }
  return Permutation(std::move(im));
}

Permutation ProjectiveAction::graph_auto_perm() const {
  if (mode_ != DomainMode::PointsAndHyperplanes)
    throw std::logic_error("graph_auto_perm: the domain has no hyperplanes");
  if (n_ < 3) throw std::logic_error("graph_auto_perm: needs dimension at least 3");
  std::vector<Point> im(domain_.size());
  for (std::size_t i = 0; i < block_; ++i) {
    im[i] = static_cast<Point>(block_ + i);
    im[block_ + i] = static_cast<Point>(i);
  }
  return Permutation(std::move(im));
}

PermGroup matrix_group_image(const ProjectiveAction& action, const std::vector<Matrix>& gens) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(action.map(g));
  return PermGroup(action.degree(), std::move(perms));
}

ClassicalImage projective_rep(const ClassicalGroupSpec& spec, bool include_hyperplanes) {
  auto matrices = classical_group(spec);
  ProjectiveAction action(spec.field(), spec.n,
                          include_hyperplanes ? DomainMode::PointsAndHyperplanes : DomainMode::Points);
  PermGroup g = matrix_group_image(action, matrices);
  return {spec, std::move(action), std::move(matrices), std::move(g)};
}

AutomorphismExtension::AutomorphismExtension(PermGroup g, std::vector<Permutation> autos)
    : base_(std::move(g)), autos_(std::move(autos)) {
  for (const auto& a : autos_) {
    if (a.degree() != base_.degree())
      throw std::invalid_argument("extend_by_autos: automorphism degree mismatch");
    for (const auto& s : base_.generators())
      if (!base_.contains(s.conjugate(a)))
        throw std::invalid_argument("extend_by_autos: automorphism does not normalize the group");
  }
  group_ = join(base_, autos_);
}

std::vector<unsigned> AutomorphismExtension::coset_signature(const Permutation& x) const {
  if (!group_.contains(x)) throw std::invalid_argument("coset_signature: element not in extension");
  std::vector<unsigned> j(autos_.size(), 0);
  std::vector<std::uint64_t> ord;
  for (const auto& a : autos_) ord.push_back(a.order());
  while (true) {
    Permutation prod(x.degree());
    for (std::size_t i = 0; i < autos_.size(); ++i) prod *= autos_[i].pow(j[i]);
    if (base_.contains(x * prod.inverse())) return j;
    std::size_t i = autos_.size();
    while (i-- > 0) {
      if (++j[i] < ord[i]) break;
      j[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1))
      throw std::logic_error("coset_signature: no exponent tuple found");
  }
}

AutomorphismExtension extend_by_autos(const PermGroup& g, const std::vector<Permutation>& autos) {
  return AutomorphismExtension(g, autos);
}

}  // namespace carterlab
