#pragma once

// Groups shared by the property tests. Orders stay at most 2000 so the
// brute-force oracle can tabulate them.

#include <string>
#include <vector>

#include "carterlab/group_spec.hpp"
#include "carterlab/subgroups.hpp"

namespace corpus {

struct Entry {
  std::string name;
  carterlab::PermGroup group;
  bool solvable;
};

inline std::vector<Entry> small_groups() {
  using namespace carterlab;
  std::vector<Entry> out;
  auto spec = [&](const std::string& s, bool solvable) { out.push_back({s, realize_group(s).group, solvable}); };
  for (const char* s : {"Sym(3)", "Sym(4)", "Alt(4)", "SL(2,3)", "GL(2,3)", "PSU(3,2)", "PGU(3,2)", "W(A2)",
                        "W(B3)", "W(G2)", "W(D4)"})
    spec(s, true);
  for (const char* s : {"Sym(5)", "Sym(6)", "Alt(5)", "Alt(6)", "PSL(2,7)", "PSL(2,9)", "PSL(2,11)", "PSL(2,13)",
                        "PGL(2,7)", "PSL(3,2)", "Ext(PSL(3,2), graph)", "PGammaL(2,8)", "W(A4)"})
    spec(s, false);
  out.push_back({"D8", dihedral_group(4), true});
  out.push_back({"D12", dihedral_group(6), true});
  out.push_back({"C8", cyclic_group(8), true});
  out.push_back({"Sym(3)xC4", direct_product(symmetric_group(3), cyclic_group(4)), true});
  out.push_back({"Sym(4)xSym(3)", direct_product(symmetric_group(4), symmetric_group(3)), true});
  out.push_back({"C2xC2xC2", direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2))), true});
  return out;
}

}  // namespace corpus
