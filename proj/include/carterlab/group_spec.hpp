#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "carterlab/projective.hpp"

namespace carterlab {

/// Grammar:
///   group    := Sym(n) | Alt(n) | W(<type><rank>) | File(<path>)
///             | linear(n,q) | PGammaL(n,q) | Ext(<group>, <auto>)
///   linear   := SL | GL | Sp | SU | GU | PSL | PGL | PSp | PSU | PGU
///   auto     := frob | frob^j | graph
/// Matrix groups without a leading P act faithfully on nonzero vectors;
/// P-groups act on projective points. Ext needs a linear group inside and
/// switches to points plus hyperplanes when it adjoins `graph`.
class SpecError : public std::invalid_argument {
 public:
  SpecError(std::string production, const std::string& message)
      : std::invalid_argument(message + " (expected " + production + ")"),
        production_(std::move(production)) {}
  const std::string& production() const { return production_; }

 private:
  std::string production_;
};

struct RealizedGroup {
  std::string spec;
  PermGroup group;
  /// Set for linear groups and their extensions.
  std::optional<ClassicalGroupSpec> classical;
  std::optional<ProjectiveAction> action;
  std::vector<Matrix> matrices;
  /// The group before any Ext; equal to `group` otherwise.
  PermGroup base;
  std::vector<Permutation> autos;
};

/// Throws SpecError on malformed input; other exceptions (CapExceeded,
/// std::invalid_argument from the constructions) pass through.
RealizedGroup realize_group(const std::string& spec);

}  // namespace carterlab
