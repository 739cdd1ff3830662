#include "carterlab/subsystems.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace carterlab {

namespace {

std::size_t reflect_in(const RootSystem& phi, std::size_t b, std::size_t j) {
  const std::int64_t c = pairing(phi, j, b);
  IntVector y = phi.root(j);
  const auto& rb = phi.root(b);
  for (std::size_t d = 0; d < y.size(); ++d) y[d] -= c * rb[d];
  return static_cast<std::size_t>(phi.find(y));
}

// Roots of the closure of `basis`, each with its coefficients in `basis`.
std::vector<std::pair<std::size_t, IntVector>> closure_with_coeffs(
    const RootSystem& phi, const std::vector<std::size_t>& basis) {
  const std::size_t k = basis.size();
  std::vector<std::pair<std::size_t, IntVector>> out;
  std::map<std::size_t, std::size_t> seen;
  for (std::size_t i = 0; i < k; ++i) {
    IntVector c(k, 0);
    c[i] = 1;
    seen.emplace(basis[i], out.size());
    out.emplace_back(basis[i], std::move(c));
  }
  for (std::size_t n = 0; n < out.size(); ++n)
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t x = out[n].first;
      const std::int64_t c = pairing(phi, x, basis[i]);
      if (c == 0) continue;
      const std::size_t y = reflect_in(phi, basis[i], x);
      if (seen.count(y)) continue;
      IntVector yc = out[n].second;
      yc[i] -= c;
      seen.emplace(y, out.size());
      out.emplace_back(y, std::move(yc));
    }
  return out;
}

std::vector<std::vector<std::size_t>> components(const RootSystem& phi,
                                                 const std::vector<std::size_t>& basis) {
  std::vector<int> comp(basis.size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < basis.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t m = 0; m < members.size(); ++m)
      for (std::size_t t = 0; t < basis.size(); ++t)
        if (comp[t] < 0 && phi.inner(basis[members[m]], basis[t]) != 0) {
          comp[t] = comp[s];
          members.push_back(t);
        }
    std::vector<std::size_t> roots;
    for (auto m : members) roots.push_back(basis[m]);
    std::sort(roots.begin(), roots.end());
    out.push_back(std::move(roots));
  }
  return out;
}

std::int64_t max_norm(const RootSystem& phi) {
  std::int64_t m = 0;
  for (std::size_t i = 0; i < phi.rank(); ++i) m = std::max(m, phi.inner(i, i));
  return m;
}

std::string component_label(const RootSystem& phi, const std::vector<std::size_t>& comp) {
  const auto roots = closure_with_coeffs(phi, comp);
  const std::size_t n = comp.size(), count = roots.size();
  std::set<std::int64_t> norms;
  for (const auto& r : roots) norms.insert(phi.inner(r.first, r.first));
  const std::string rank = std::to_string(n);
  if (norms.size() == 1) {
    std::string prefix = (!phi.simply_laced() && *norms.begin() < max_norm(phi)) ? "~" : "";
    if (count == n * (n + 1)) return prefix + "A" + rank;
    if (count == 2 * n * (n - 1)) return prefix + "D" + rank;
    if (count == 72 || count == 126 || count == 240) return prefix + "E" + rank;
    throw std::logic_error("subsystem_label: unrecognized simply-laced component");
  }
  if (n == 2 && count == 12) return "G2";
  if (n == 2 && count == 8) return "C2";
  if (n == 4 && count == 48) return "F4";
  std::size_t long_count = 0;
  for (const auto& r : roots) long_count += phi.inner(r.first, r.first) == *norms.rbegin();
  if (long_count == 2 * n) return "C" + rank;
  if (long_count == 2 * n * (n - 1)) return "B" + rank;
  throw std::logic_error("subsystem_label: unrecognized component");
}

using RootSet = std::vector<std::uint64_t>;

RootSet to_bits(std::size_t size, const std::vector<std::size_t>& roots) {
  RootSet bits((size + 63) / 64, 0);
  for (auto r : roots) bits[r / 64] |= std::uint64_t{1} << (r % 64);
  return bits;
}

struct RootSetHash {
  std::size_t operator()(const RootSet& s) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : s) h = (h ^ w) * 1099511628211ULL;
    return h;
  }
};

RootSet image_of(const Permutation& w, const RootSet& s) {
  RootSet out(s.size(), 0);
  for (std::size_t k = 0; k < s.size(); ++k)
    for (std::uint64_t bits = s[k]; bits; bits &= bits - 1) {
      std::size_t r = k * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
      std::size_t im = w[r];
      out[im / 64] |= std::uint64_t{1} << (im % 64);
    }
  return out;
}

SubsystemDescriptor describe(const RootSystem& phi, std::vector<std::size_t> basis) {
  std::sort(basis.begin(), basis.end());
  SubsystemDescriptor d;
  d.label = subsystem_label(phi, basis);
  d.roots = subsystem_roots(phi, basis);
  d.basis = std::move(basis);
  return d;
}

}  // namespace

std::vector<std::size_t> subsystem_roots(const RootSystem& phi, const std::vector<std::size_t>& basis) {
  std::vector<std::size_t> out;
  for (const auto& r : closure_with_coeffs(phi, basis)) out.push_back(r.first);
  std::sort(out.begin(), out.end());
  return out;
}

std::string subsystem_label(const RootSystem& phi, const std::vector<std::size_t>& basis) {
  if (basis.empty()) return "trivial";
  std::vector<std::string> parts;
  for (const auto& c : components(phi, basis)) parts.push_back(component_label(phi, c));
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "+") + p;
  return s;
}

std::vector<SubsystemDescriptor> borel_de_siebenthal(const RootSystem& phi) {
  const WeylGroupRep w(phi);
  const auto& gens = w.simple_reflections();
  std::unordered_map<RootSet, std::size_t, RootSetHash> known;
  std::vector<SubsystemDescriptor> out;
  std::deque<std::vector<std::size_t>> queue;

  auto consider = [&](std::vector<std::size_t> basis) {
    std::sort(basis.begin(), basis.end());
    RootSet key = to_bits(phi.size(), subsystem_roots(phi, basis));
    if (known.count(key)) return;
    const std::size_t id = out.size();
    std::vector<RootSet> orbit{key};
    known.emplace(key, id);
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& s : gens) {
        RootSet img = image_of(s, orbit[k]);
        if (known.emplace(img, id).second) orbit.push_back(std::move(img));
      }
    out.push_back(describe(phi, basis));
    queue.push_back(std::move(basis));
  };

  std::vector<std::size_t> simple(phi.rank());
  std::iota(simple.begin(), simple.end(), std::size_t{0});
  consider(simple);
  while (!queue.empty()) {
    const std::vector<std::size_t> basis = std::move(queue.front());
    queue.pop_front();
    for (std::size_t v = 0; v < basis.size(); ++v) {
      auto smaller = basis;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(v));
      consider(std::move(smaller));
    }
    for (const auto& comp : components(phi, basis)) {
      const auto roots = closure_with_coeffs(phi, comp);
      std::size_t top = comp.front();
      std::int64_t best = 0;
      for (const auto& [r, c] : roots) {
        std::int64_t h = std::accumulate(c.begin(), c.end(), std::int64_t{0});
        if (h > best) {
          best = h;
          top = r;
        }
      }
      for (std::size_t v : comp) {
        std::vector<std::size_t> next;
        for (std::size_t b : basis)
          if (b != v) next.push_back(b);
        next.push_back(phi.negative(top));
        consider(std::move(next));
      }
    }
  }
  return out;
}

SubsystemDescriptor levi_subsystem(const RootSystem& phi, const std::vector<std::size_t>& j) {
  for (auto i : j)
    if (i >= phi.rank()) throw std::invalid_argument("levi_subsystem: not a simple root index");
  std::vector<std::size_t> basis(j.begin(), j.end());
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return describe(phi, basis);
}

std::vector<std::size_t> omega_fixed_roots(const RootSystem& phi) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < phi.positive_count(); ++r) {
    bool fixed = true;
    for (std::size_t s = 0; s < phi.size() && fixed; ++s) fixed = torus_exponent(phi, s, r) % 2 == 0;
    if (fixed) out.push_back(r);
  }
  return out;
}

bool is_closed_abelian(const RootSystem& phi, const std::vector<std::size_t>& roots) {
  for (auto r : roots)
    for (auto s : roots) {
      IntVector sum = phi.root(r);
      const auto& b = phi.root(s);
      for (std::size_t d = 0; d < sum.size(); ++d) sum[d] += b[d];
      if (phi.find(sum) >= 0) return false;
    }
  return true;
}

std::vector<std::size_t> long_positive_roots(const RootSystem& phi) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < phi.positive_count(); ++r)
    if (phi.is_long(r)) out.push_back(r);
  return out;
}

CentralizerScanRow order3_self_normalizing(const PermGroup& c, const SearchOptions& opts) {
  if (c.order() > opts.sweep_cap) throw CapExceeded("order-3 scan exceeds sweep cap");
  CentralizerScanRow row;
  row.centralizer_order = c.order();
  if (c.order() % 3 != 0) return row;
  std::vector<bool> seen(c.order(), false);
  std::vector<Permutation> queue;
  for (std::uint64_t r = 0; r < c.order(); ++r) {
    if (seen[r]) continue;
    Permutation x = c.unrank(r);
    if (x.order() != 3) continue;
    // Orbit of <x> under conjugation; each subgroup marks both generators.
    queue.assign(1, x);
    seen[r] = true;
    seen[c.rank(x.inverse())] = true;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& s : c.generators()) {
        Permutation z = queue[k].conjugate(s);
        std::uint64_t rz = c.rank(z);
        if (seen[rz]) continue;
        seen[rz] = true;
        seen[c.rank(z.inverse())] = true;
        queue.push_back(std::move(z));
      }
    ++row.order3_classes;
    if (c.order() / queue.size() == 3) ++row.self_normalizing;
  }
  return row;
}

std::vector<CentralizerScanRow> centralizer_order3_scan(const PermGroup& g, const SearchOptions& opts) {
  std::vector<CentralizerScanRow> rows;
  for (const auto& cls : conjugacy_classes(g, opts)) {
    PermGroup c = subgroup_centralizer(g, cls.representative, opts);
    CentralizerScanRow row = order3_self_normalizing(c, opts);
    row.representative = cls.representative;
    row.class_size = cls.size;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CentralizerScanRow> e6_centralizer_scan(const SearchOptions& opts) {
  const RootSystem e6('E', 6);
  return centralizer_order3_scan(WeylGroupRep(e6).group(), opts);
}

}  // namespace carterlab
