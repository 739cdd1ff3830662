#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "carterlab/root_system.hpp"
#include "carterlab/subgroups.hpp"

namespace carterlab {

/// A root subsystem of a fixed RootSystem, given by a basis of roots and
/// the full set of roots it spans (both as root indices, sorted).
struct SubsystemDescriptor {
  std::string label;  // e.g. "A2+A2+A2", "A1+~A1"; "trivial" when empty
  std::vector<std::size_t> basis;
  std::vector<std::size_t> roots;
};

/// Labels the subsystem with basis `basis`. Components are sorted; a
/// simply-laced component made of short roots of a non-simply-laced system
/// gets a "~" prefix; B2 = C2 is labelled "C2" and A3 = D3 is "A3".
std::string subsystem_label(const RootSystem& phi, const std::vector<std::size_t>& basis);
/// All roots of phi in the reflection closure of `basis`.
std::vector<std::size_t> subsystem_roots(const RootSystem& phi, const std::vector<std::size_t>& basis);

/// Every subsystem reachable from the simple roots by repeatedly either
/// dropping a basis root or, for one component, adjoining minus its highest
/// root and dropping one of its basis roots; one representative per
/// W-orbit of root sets. Includes phi itself and the empty subsystem.
std::vector<SubsystemDescriptor> borel_de_siebenthal(const RootSystem& phi);

/// Roots in the span of the simple roots indexed by J (0-based).
SubsystemDescriptor levi_subsystem(const RootSystem& phi, const std::vector<std::size_t>& j);

/// Positive roots r with torus_exponent(s, r) even for every root s: the
/// root subgroups centralized by every h_s(-1).
std::vector<std::size_t> omega_fixed_roots(const RootSystem& phi);

/// True iff r + s is not a root for all r, s in `roots` (indices into phi).
bool is_closed_abelian(const RootSystem& phi, const std::vector<std::size_t>& roots);

/// Long positive roots, in root order.
std::vector<std::size_t> long_positive_roots(const RootSystem& phi);

struct CentralizerScanRow {
  Permutation representative;
  std::uint64_t class_size = 0;
  std::uint64_t centralizer_order = 0;
  std::size_t order3_classes = 0;         // cyclic subgroups of order 3, up to C-conjugacy
  std::size_t self_normalizing = 0;       // those with N_C(<x>) = <x>
  bool pass() const { return self_normalizing == 0; }
};

/// For each conjugacy class representative y of G, takes C = C_G(y) and
/// counts the order-3 cyclic subgroups of C, up to C-conjugacy, that are
/// self-normalizing in C.
std::vector<CentralizerScanRow> centralizer_order3_scan(const PermGroup& g,
                                                        const SearchOptions& opts = {});
/// Counts classes of self-normalizing order-3 cyclic subgroups of C.
CentralizerScanRow order3_self_normalizing(const PermGroup& c, const SearchOptions& opts = {});

/// centralizer_order3_scan on W(E6).
std::vector<CentralizerScanRow> e6_centralizer_scan(const SearchOptions& opts = {});

/// {"type", "classes": [{"rep_word", "size", "order_poly"}]}, order_poly
/// coefficients low to high.
std::string torus_report_json(const RootSystem& phi, const std::vector<TorusClass>& classes);
/// {"type", "subsystems": [{"label", "basis", "roots"}]}.
std::string subsystems_report_json(const RootSystem& phi, const std::vector<SubsystemDescriptor>& subs);

}  // namespace carterlab
