#pragma once

#include <cstdint>
#include <vector>

#include "carterlab/subgroups.hpp"

namespace carterlab {

/// Conjugacy-class representatives of some family of subgroups of `parent`.
struct SubgroupClassSet {
  PermGroup parent;
  std::vector<PermGroup> representatives;
  /// |N_parent(rep)| for each representative.
  std::vector<std::uint64_t> normalizer_orders;

  std::size_t class_count() const { return representatives.size(); }
  /// Number of conjugates of representative i.
  std::uint64_t class_size(std::size_t i) const { return parent.order() / normalizer_orders.at(i); }
};

/// Every nilpotent subgroup up to conjugacy, found by breadth-first cyclic
/// extension from the trivial subgroup: H grows to H<x> for x in N(H) \ H
/// with x^p in H. Every nilpotent K has a chain of normal prime-index steps,
/// so each class is reached. Representatives come in discovery order.
/// Throws CapExceeded if |G| > opts.full_search_cap.
SubgroupClassSet nilpotent_subgroup_classes(const PermGroup& g, const SearchOptions& opts = {});

/// The self-normalizing members of nilpotent_subgroup_classes.
SubgroupClassSet carter_subgroups(const PermGroup& g, const SearchOptions& opts = {});

/// True iff K is nilpotent and N_G(K) = K. Throws unless K ≤ G.
bool is_carter_witness(const PermGroup& g, const PermGroup& k, const SearchOptions& opts = {});

}  // namespace carterlab
