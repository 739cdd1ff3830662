#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "carterlab/permutation.hpp"

namespace carterlab {

/// Raised when an operation would exceed a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
struct Bsgs;
}

/// A permutation group stored with a base and strong generating set.
///
/// Immutable once built; copies share the stabilizer chain, so passing
/// groups by value is cheap and safe across threads.
///
/// Base selection is deterministic: an optional caller-supplied prefix,
/// then the first point moved by the first generator, then the first point
/// moved by each residue that sifts through the current chain.
class PermGroup {
 public:
  PermGroup() : PermGroup(1, {}) {}
  /// Throws std::invalid_argument on a degree mismatch among `generators`.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Point> base_prefix = {});

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const;
  const std::vector<Permutation>& generators() const;
  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;
  std::size_t base_length() const;
  std::span<const Point> basic_orbit(std::size_t level) const;
  /// Transversal element u with u[base()[level]] == basic_orbit(level)[k].
  const Permutation& transversal(std::size_t level, std::size_t k) const;
  /// Product of the basic orbit lengths.
  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }

  /// True iff g sifts to the identity. Throws on a degree mismatch.
  bool contains(const Permutation& g) const;
  bool contains_all(const std::vector<Permutation>& gs) const;
  bool is_subgroup_of(const PermGroup& other) const;

  /// Mixed-radix index of g in [0, order()) read off the sift path.
  /// Throws std::invalid_argument if g is not a member.
  std::uint64_t rank(const Permutation& g) const;
  Permutation unrank(std::uint64_t r) const;
  Permutation random_element(std::mt19937_64& rng) const;
  /// Visits every element exactly once, in increasing rank order.
  void for_each_element(const std::function<void(const Permutation&)>& fn) const;
  std::vector<Permutation> elements() const;

  Permutation identity() const { return Permutation(degree()); }

  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  std::shared_ptr<const detail::Bsgs> bsgs_;
};

/// Builds ⟨gens⟩ on `degree` points. Throws std::invalid_argument if some
/// generator has a different degree.
PermGroup group_from_generators(const std::vector<Permutation>& gens, std::size_t degree);

inline std::uint64_t order(const PermGroup& g) { return g.order(); }
inline bool contains(const PermGroup& g, const Permutation& x) { return g.contains(x); }

/// The group generated by `base` together with extra elements.
PermGroup join(const PermGroup& base, const std::vector<Permutation>& extra);

/// Orbits of the group on points, each sorted, listed by least point.
std::vector<std::vector<Point>> orbits(const PermGroup& g);

}  // namespace carterlab
