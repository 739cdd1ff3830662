#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace carterlab {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as its image array.
///
/// Products follow the right-action convention used throughout the
/// library: `(a * b)[i] == b[a[i]]`, i.e. `a` is applied first.
class Permutation {
 public:
  struct Unchecked {};

  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  /// Builds a permutation from disjoint cycles; fixed points may be omitted.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);
  Permutation pow(std::int64_t e) const;
  /// g^{-1} * this * g
  Permutation conjugate(const Permutation& g) const;
  std::uint64_t order() const;

  /// Nontrivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;
  /// Lengths of the nontrivial cycles, sorted in decreasing order.
  std::vector<std::size_t> cycle_type() const;
  std::optional<Point> first_moved() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// The commutator a^{-1} b^{-1} a b.
Permutation commutator(const Permutation& a, const Permutation& b);

}  // namespace carterlab
