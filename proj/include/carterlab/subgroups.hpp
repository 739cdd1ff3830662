#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "carterlab/perm_group.hpp"

namespace carterlab {

/// Size caps and the seed for randomized internals. Results never depend
/// on the seed; only running times do.
struct SearchOptions {
  std::uint64_t seed = 0x5eedULL;
  /// Largest |G| accepted by carter_subgroups.
  std::uint64_t full_search_cap = 100000;
  /// Largest |G| accepted by element sweeps (class enumeration, scans).
  std::uint64_t sweep_cap = 1000000;
  /// Subgroups up to this order are compared through their element sets.
  std::uint64_t fingerprint_cap = 10000;
  std::uint64_t quotient_index_cap = 100000;
};

/// Sorted ranks (in an ambient group) of all elements of a subgroup; two
/// subgroups of the ambient group are equal iff their fingerprints are.
using Fingerprint = std::vector<std::uint64_t>;

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const noexcept;
};

Fingerprint fingerprint(const PermGroup& ambient, const std::vector<Permutation>& elements);
Fingerprint fingerprint(const PermGroup& ambient, const PermGroup& h);

/// N_G(H). Throws std::invalid_argument unless H ≤ G.
PermGroup subgroup_normalizer(const PermGroup& g, const PermGroup& h, const SearchOptions& opts = {});
/// C_G(H). Throws std::invalid_argument unless H ≤ G.
PermGroup subgroup_centralizer(const PermGroup& g, const PermGroup& h, const SearchOptions& opts = {});
/// C_G(x). Throws std::invalid_argument unless x ∈ G.
PermGroup subgroup_centralizer(const PermGroup& g, const Permutation& x, const SearchOptions& opts = {});
/// C_G(x) for any x of G's degree; x need not lie in G (e.g. an outer
/// automorphism acting on the same domain).
PermGroup element_centralizer(const PermGroup& g, const Permutation& x);

/// Some c ∈ G with x^c = y, or nullopt. Throws unless x, y ∈ G.
std::optional<Permutation> are_conjugate_elements(const PermGroup& g, const Permutation& x,
                                                  const Permutation& y);
/// Some c ∈ G with H1^c = H2, or nullopt. Throws unless H1, H2 ≤ G.
std::optional<Permutation> are_conjugate_subgroups(const PermGroup& g, const PermGroup& h1,
                                                   const PermGroup& h2,
                                                   const SearchOptions& opts = {});
/// As above, but conjugating by elements of `acting` while H1, H2 and
/// `acting` all lie in `ambient`.
std::optional<Permutation> are_conjugate_subgroups_under(const PermGroup& acting,
                                                         const PermGroup& ambient,
                                                         const PermGroup& h1, const PermGroup& h2,
                                                         const SearchOptions& opts = {});

/// A Sylow p-subgroup, grown one p-step at a time inside normalizers.
PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, const SearchOptions& opts = {});

bool is_normal(const PermGroup& g, const PermGroup& n);
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& gens);
std::vector<PermGroup> lower_central_series(const PermGroup& h);

/// Nilpotency through "every Sylow subgroup is normal". In debug builds the
/// lower-central-series test runs as well and the two must agree.
bool is_nilpotent(const PermGroup& h);
bool is_nilpotent_normal_sylow(const PermGroup& h);
bool is_nilpotent_lower_central(const PermGroup& h);
/// Normal-Sylow test on an explicit element list: for each prime p the
/// p-elements number exactly |H|_p.
bool nilpotent_by_element_orders(const std::vector<Permutation>& elements);

struct ConjugacyClass {
  Permutation representative;  // least-rank element of the class
  std::uint64_t size = 0;
};

/// All conjugacy classes, ordered by the rank of their representatives.
/// Throws CapExceeded if |G| > opts.sweep_cap.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g, const SearchOptions& opts = {});

/// G/N realized on the right cosets of N. Each coset is labelled by its
/// element with lexicographically least images of N's base points.
class QuotientGroup {
 public:
  QuotientGroup(PermGroup g, PermGroup n, const SearchOptions& opts);

  const PermGroup& group() const { return quotient_; }
  std::size_t index() const { return reps_.size(); }
  Permutation project(const Permutation& x) const;
  PermGroup project(const PermGroup& h) const;
  /// Canonical representative of the coset N x.
  Permutation coset_representative(const Permutation& x) const;

 private:
  PermGroup g_;
  PermGroup n_;
  std::vector<Permutation> reps_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  PermGroup quotient_;
};

/// Throws std::invalid_argument unless N ⊴ G, CapExceeded if |G:N| is too large.
QuotientGroup quotient_group(const PermGroup& g, const PermGroup& n, const SearchOptions& opts = {});

struct SymCentralizer {
  Permutation element;  // the canonical element of the cycle type
  std::vector<Permutation> generators;
  std::uint64_t order = 0;
};

/// C_{Sym_n}(y) for the element y with the given nontrivial cycle lengths
/// placed on consecutive points (longest cycles first). Order is
/// prod l^{m_l} m_l! over cycle lengths l with multiplicity m_l, times m_0!
/// for the m_0 fixed points.
SymCentralizer centralizer_in_sym(unsigned n, std::vector<unsigned> cycle_type);

/// N_G(S) = S C_G(S) for a Sylow 2-subgroup S of G.
bool check_syl2_criterion(const PermGroup& g, const SearchOptions& opts = {});

/// Named small groups used across tests and the catalog.
PermGroup symmetric_group(unsigned n);
PermGroup alternating_group(unsigned n);
PermGroup cyclic_group(unsigned n);
PermGroup dihedral_group(unsigned n);  // order 2n on n points
/// Direct product acting on the disjoint union of the two domains.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
/// Embeds x of degree k on points [offset, offset + k) of a larger domain.
Permutation shift_permutation(const Permutation& x, std::size_t degree, std::size_t offset);

}  // namespace carterlab
