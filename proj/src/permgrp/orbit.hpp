#pragma once

// Orbit-stabilizer machinery shared by the subgroup algorithms. An object in
// the orbit is identified by a hashable key computed from the transversal
// element that carries the starting object to it; the action must be a right
// action so that key_of(t * s) describes (object^t)^s.

#include <cstdint>
#include <optional>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "carterlab/perm_group.hpp"

namespace carterlab::detail {

template <class Key, class Hash = std::hash<Key>>
struct KeyedOrbit {
  std::vector<Permutation> transversal;
  std::unordered_map<Key, std::uint32_t, Hash> index;
  // edge[k * gens + s] = orbit index of transversal[k] * gens[s].
  std::vector<std::uint32_t> edge;
  std::size_t gen_count = 0;

  std::size_t size() const { return transversal.size(); }
};

/// Breadth-first orbit. Stops early and returns the index of `target` when it
/// is reached (edges are then incomplete). Throws CapExceeded past `cap`.
template <class Key, class Hash, class KeyFn>
std::optional<std::size_t> keyed_orbit(const std::vector<Permutation>& gens,
                                       const Permutation& identity, KeyFn&& key_of,
                                       KeyedOrbit<Key, Hash>& out, const std::type_identity_t<Key>* target = nullptr,
                                       std::size_t cap = SIZE_MAX) {
  out.transversal.assign(1, identity);
  out.index.clear();
  out.edge.clear();
  out.gen_count = gens.size();
  Key k0 = key_of(identity);
  if (target && k0 == *target) return 0;
  out.index.emplace(std::move(k0), 0);
  for (std::size_t k = 0; k < out.transversal.size(); ++k) {
    for (const auto& s : gens) {
      Permutation t = out.transversal[k] * s;
      Key key = key_of(t);
      auto [it, fresh] = out.index.emplace(std::move(key), out.transversal.size());
      if (fresh) {
        if (out.transversal.size() >= cap) throw CapExceeded("orbit exceeds size cap");
        if (target && it->first == *target) {
          out.transversal.push_back(std::move(t));
          return out.transversal.size() - 1;
        }
        out.transversal.push_back(std::move(t));
      }
      out.edge.push_back(it->second);
    }
  }
  return std::nullopt;
}

/// Stabilizer of the orbit's starting object: grows `start` (which must lie
/// in it) by Schreier generators until the order reaches `target_order`.
template <class Key, class Hash>
PermGroup orbit_stabilizer(const PermGroup& start, const std::vector<Permutation>& gens,
                           const KeyedOrbit<Key, Hash>& orb, std::uint64_t target_order) {
  PermGroup stab = start;
  const std::size_t ng = gens.size();
  for (std::size_t k = 0; k < orb.size() && stab.order() < target_order; ++k) {
    for (std::size_t s = 0; s < ng && stab.order() < target_order; ++s) {
      std::uint32_t j = orb.edge[k * ng + s];
      Permutation sg = orb.transversal[k] * gens[s];
      sg *= orb.transversal[j].inverse();
      if (!stab.contains(sg)) stab = join(stab, {sg});
    }
  }
  return stab;
}

struct ImagesHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Point p : v) h = (h ^ p) * 1099511628211ULL;
    return h;
  }
};

}  // namespace carterlab::detail
