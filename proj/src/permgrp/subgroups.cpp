#include "carterlab/subgroups.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>
#include <stdexcept>

#include "carterlab/numtheory.hpp"
#include "orbit.hpp"

namespace carterlab {

namespace {

void require_subgroup(const PermGroup& g, const PermGroup& h, const char* what) {
  if (h.degree() != g.degree() || !g.contains_all(h.generators()))
    throw std::invalid_argument(std::string(what) + ": not a subgroup of the ambient group");
}

void require_member(const PermGroup& g, const Permutation& x, const char* what) {
  if (x.degree() != g.degree() || !g.contains(x))
    throw std::invalid_argument(std::string(what) + ": element not in the group");
}

Fingerprint conjugated_fingerprint(const PermGroup& ambient, const std::vector<Permutation>& elems,
                                   const Permutation& t) {
  Fingerprint f;
  f.reserve(elems.size());
  for (const auto& e : elems) f.push_back(ambient.rank(e.conjugate(t)));
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<std::size_t> orbit_signature(const PermGroup& h) {
  std::vector<std::size_t> sig;
  for (const auto& o : orbits(h)) sig.push_back(o.size());
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::vector<std::uint64_t> element_orders(const std::vector<Permutation>& elems) {
  std::vector<std::uint64_t> out;
  out.reserve(elems.size());
  for (const auto& e : elems) out.push_back(e.order());
  std::sort(out.begin(), out.end());
  return out;
}

bool normalizes(const PermGroup& h, const Permutation& x) {
  for (const auto& s : h.generators())
    if (!h.contains(s.conjugate(x))) return false;
  return true;
}

PermGroup normalizer_scan(const PermGroup& g, const PermGroup& h, const SearchOptions& opts) {
  if (g.order() > opts.sweep_cap) throw CapExceeded("normalizer scan exceeds sweep cap");
  PermGroup n = h;
  for (std::uint64_t r = 0; r < g.order(); ++r) {
    Permutation x = g.unrank(r);
    if (n.contains(x)) continue;
    if (normalizes(h, x)) n = join(n, {x});
  }
  return n;
}

// One step of the p-subgroup ascent: some x ∈ N \ H with x^p ∈ H.
std::optional<Permutation> p_step(const PermGroup& n, const PermGroup& h, std::uint64_t p,
                                  std::mt19937_64& rng) {
  auto lift = [&](const Permutation& y) -> std::optional<Permutation> {
    std::uint64_t o = y.order();
    std::uint64_t pp = p_part(o, p);
    if (pp == 1) return std::nullopt;
    Permutation x = y.pow(static_cast<std::int64_t>(o / pp));
    if (h.contains(x)) return std::nullopt;
    for (Permutation xp = x.pow(static_cast<std::int64_t>(p)); !h.contains(xp);
         xp = x.pow(static_cast<std::int64_t>(p)))
      x = xp;
    return x;
  };
  for (int attempt = 0; attempt < 64; ++attempt)
    if (auto x = lift(n.random_element(rng))) return x;
  for (std::uint64_t r = 0; r < n.order(); ++r)
    if (auto x = lift(n.unrank(r))) return x;
  return std::nullopt;
}

}  // namespace

std::size_t FingerprintHash::operator()(const Fingerprint& f) const noexcept {
  std::size_t h = 1469598103934665603ULL ^ f.size();
  for (auto v : f) h = (h ^ v) * 1099511628211ULL;
  return h;
}

Fingerprint fingerprint(const PermGroup& ambient, const std::vector<Permutation>& elements) {
  Fingerprint f;
  f.reserve(elements.size());
  for (const auto& e : elements) f.push_back(ambient.rank(e));
  std::sort(f.begin(), f.end());
  return f;
}

Fingerprint fingerprint(const PermGroup& ambient, const PermGroup& h) {
  Fingerprint f;
  f.reserve(h.order());
  h.for_each_element([&](const Permutation& e) { f.push_back(ambient.rank(e)); });
  std::sort(f.begin(), f.end());
  return f;
}

PermGroup subgroup_normalizer(const PermGroup& g, const PermGroup& h, const SearchOptions& opts) {
  require_subgroup(g, h, "subgroup_normalizer");
  if (h.is_trivial() || h.order() == g.order()) return g;
  if (h.order() > opts.fingerprint_cap) return normalizer_scan(g, h, opts);
  const auto elems = h.elements();
  const auto& gens = g.generators();
  detail::KeyedOrbit<Fingerprint, FingerprintHash> orb;
  detail::keyed_orbit(
      gens, g.identity(),
      [&](const Permutation& t) { return conjugated_fingerprint(g, elems, t); }, orb, nullptr,
      opts.sweep_cap);
  return detail::orbit_stabilizer(h, gens, orb, g.order() / orb.size());
}

PermGroup element_centralizer(const PermGroup& g, const Permutation& x) {
  if (x.degree() != g.degree()) throw std::invalid_argument("element_centralizer: degree mismatch");
  if (x.is_identity()) return g;
  const auto& gens = g.generators();
  if (g.contains(x)) {
    detail::KeyedOrbit<std::uint64_t> orb;
    detail::keyed_orbit(
        gens, g.identity(), [&](const Permutation& t) { return g.rank(x.conjugate(t)); }, orb);
    return detail::orbit_stabilizer(PermGroup(g.degree(), {x}), gens, orb,
                                    g.order() / orb.size());
  }
  detail::KeyedOrbit<std::vector<Point>, detail::ImagesHash> orb;
  detail::keyed_orbit(
      gens, g.identity(), [&](const Permutation& t) { return x.conjugate(t).images(); }, orb);
  return detail::orbit_stabilizer(PermGroup::trivial(g.degree()), gens, orb,
                                  g.order() / orb.size());
}

PermGroup subgroup_centralizer(const PermGroup& g, const Permutation& x, const SearchOptions&) {
  require_member(g, x, "subgroup_centralizer");
  return element_centralizer(g, x);
}

PermGroup subgroup_centralizer(const PermGroup& g, const PermGroup& h, const SearchOptions&) {
  require_subgroup(g, h, "subgroup_centralizer");
  PermGroup c = g;
  for (const auto& s : h.generators())
    if (!s.is_identity()) c = element_centralizer(c, s);
  return c;
}

std::optional<Permutation> are_conjugate_elements(const PermGroup& g, const Permutation& x,
                                                  const Permutation& y) {
  require_member(g, x, "are_conjugate_elements");
  require_member(g, y, "are_conjugate_elements");
  if (x == y) return g.identity();
  if (x.cycle_type() != y.cycle_type()) return std::nullopt;
  const std::uint64_t target = g.rank(y);
  detail::KeyedOrbit<std::uint64_t> orb;
  auto hit = detail::keyed_orbit(
      g.generators(), g.identity(), [&](const Permutation& t) { return g.rank(x.conjugate(t)); },
      orb, &target);
  if (!hit) return std::nullopt;
  return orb.transversal[*hit];
}

std::optional<Permutation> are_conjugate_subgroups_under(const PermGroup& acting,
                                                         const PermGroup& ambient,
                                                         const PermGroup& h1, const PermGroup& h2,
                                                         const SearchOptions& opts) {
  require_subgroup(ambient, acting, "are_conjugate_subgroups");
  require_subgroup(ambient, h1, "are_conjugate_subgroups");
  require_subgroup(ambient, h2, "are_conjugate_subgroups");
  if (h1.order() != h2.order()) return std::nullopt;
  if (h1 == h2) return acting.identity();
  if (orbit_signature(h1) != orbit_signature(h2)) return std::nullopt;

  if (h1.order() > opts.fingerprint_cap) {
    if (acting.order() > opts.sweep_cap) throw CapExceeded("subgroup conjugacy scan exceeds cap");
    for (std::uint64_t r = 0; r < acting.order(); ++r) {
      Permutation c = acting.unrank(r);
      bool ok = true;
      for (const auto& s : h1.generators())
        if (!h2.contains(s.conjugate(c))) {
          ok = false;
          break;
        }
      if (ok) return c;
    }
    return std::nullopt;
  }

  const auto e1 = h1.elements();
  const auto e2 = h2.elements();
  if (element_orders(e1) != element_orders(e2)) return std::nullopt;
  const Fingerprint target = fingerprint(ambient, e2);
  detail::KeyedOrbit<Fingerprint, FingerprintHash> orb;
  auto hit = detail::keyed_orbit(
      acting.generators(), acting.identity(),
      [&](const Permutation& t) { return conjugated_fingerprint(ambient, e1, t); }, orb, &target,
      opts.sweep_cap);
  if (!hit) return std::nullopt;
  return orb.transversal[*hit];
}

std::optional<Permutation> are_conjugate_subgroups(const PermGroup& g, const PermGroup& h1,
                                                   const PermGroup& h2,
                                                   const SearchOptions& opts) {
  return are_conjugate_subgroups_under(g, g, h1, h2, opts);
}

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, const SearchOptions& opts) {
  if (!is_prime(p)) throw std::invalid_argument("sylow_subgroup: p must be prime");
  const std::uint64_t target = p_part(g.order(), p);
  std::mt19937_64 rng(opts.seed ^ (p * 0x9e3779b97f4a7c15ULL));
  PermGroup h = PermGroup::trivial(g.degree());
  while (h.order() < target) {
    PermGroup n = h.is_trivial() ? g : subgroup_normalizer(g, h, opts);
    auto x = p_step(n, h, p, rng);
    // |N_G(H) : H| is divisible by p whenever H is a non-Sylow p-subgroup.
    assert(x.has_value());
    if (!x) throw std::logic_error("sylow_subgroup: p-subgroup ascent stalled");
    h = join(h, {*x});
  }
  return h;
}

bool is_normal(const PermGroup& g, const PermGroup& n) {
  for (const auto& x : g.generators())
    if (!normalizes(n, x)) return false;
  return true;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& gens) {
  PermGroup n(g.degree(), gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& a : n.generators()) {
      for (const auto& s : g.generators()) {
        Permutation c = a.conjugate(s);
        if (!n.contains(c)) {
          n = join(n, {c});
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
  }
  return n;
}

std::vector<PermGroup> lower_central_series(const PermGroup& h) {
  std::vector<PermGroup> series{h};
  while (!series.back().is_trivial()) {
    std::vector<Permutation> comms;
    for (const auto& a : series.back().generators())
      for (const auto& b : h.generators()) {
        Permutation c = commutator(a, b);
        if (!c.is_identity()) comms.push_back(std::move(c));
      }
    PermGroup next = normal_closure(h, comms);
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent_lower_central(const PermGroup& h) {
  return lower_central_series(h).back().is_trivial();
}

bool nilpotent_by_element_orders(const std::vector<Permutation>& elements) {
  const std::uint64_t n = elements.size();
  std::map<std::uint64_t, std::uint64_t> count;
  for (auto p : prime_divisors(n)) count[p] = 0;
  for (const auto& e : elements) {
    auto ps = prime_divisors(e.order());
    if (ps.size() == 1)
      ++count[ps[0]];
    else if (ps.empty())
      for (auto& [p, c] : count) ++c;
  }
  for (const auto& [p, c] : count)
    if (c != p_part(n, p)) return false;
  return true;
}

bool is_nilpotent_normal_sylow(const PermGroup& h) {
  if (h.order() <= 200000) return nilpotent_by_element_orders(h.elements());
  for (auto p : prime_divisors(h.order()))
    if (!is_normal(h, sylow_subgroup(h, p))) return false;
  return true;
}

bool is_nilpotent(const PermGroup& h) {
  bool result = is_nilpotent_normal_sylow(h);
  assert(result == is_nilpotent_lower_central(h));
  return result;
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g, const SearchOptions& opts) {
  if (g.order() > opts.sweep_cap) throw CapExceeded("conjugacy_classes: group exceeds sweep cap");
  const std::uint64_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<ConjugacyClass> out;
  std::vector<Permutation> queue;
  for (std::uint64_t r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    queue.assign(1, g.unrank(r));
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& s : g.generators()) {
        Permutation z = queue[k].conjugate(s);
        std::uint64_t rz = g.rank(z);
        if (!seen[rz]) {
          seen[rz] = true;
          queue.push_back(std::move(z));
        }
      }
    out.push_back({queue.front(), queue.size()});
  }
  return out;
}

QuotientGroup::QuotientGroup(PermGroup g, PermGroup n, const SearchOptions& opts)
    : g_(std::move(g)), n_(std::move(n)) {
  require_subgroup(g_, n_, "quotient_group");
  if (!is_normal(g_, n_)) throw std::invalid_argument("quotient_group: subgroup is not normal");
  if (g_.order() / n_.order() > opts.quotient_index_cap)
    throw CapExceeded("quotient_group: index exceeds cap");
  reps_.push_back(coset_representative(g_.identity()));
  index_.emplace(g_.rank(reps_[0]), 0);
  const auto& gens = g_.generators();
  std::vector<std::vector<Point>> images(gens.size());
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation c = coset_representative(reps_[k] * gens[s]);
      auto [it, fresh] = index_.emplace(g_.rank(c), reps_.size());
      if (fresh) reps_.push_back(std::move(c));
      images[s].push_back(static_cast<Point>(it->second));
    }
  }
  std::vector<Permutation> qgens;
  for (auto& im : images) qgens.emplace_back(std::move(im));
  quotient_ = PermGroup(reps_.size(), std::move(qgens));
}

Permutation QuotientGroup::coset_representative(const Permutation& x) const {
  Permutation c = x;
  for (std::size_t l = 0; l < n_.base_length(); ++l) {
    auto orbit = n_.basic_orbit(l);
    std::size_t best = 0;
    for (std::size_t k = 1; k < orbit.size(); ++k)
      if (c[orbit[k]] < c[orbit[best]]) best = k;
    c = n_.transversal(l, best) * c;
  }
  return c;
}

Permutation QuotientGroup::project(const Permutation& x) const {
  require_member(g_, x, "QuotientGroup::project");
  std::vector<Point> im(reps_.size());
  for (std::size_t k = 0; k < reps_.size(); ++k)
    im[k] = static_cast<Point>(index_.at(g_.rank(coset_representative(reps_[k] * x))));
  return Permutation(std::move(im), Permutation::Unchecked{});
}

PermGroup QuotientGroup::project(const PermGroup& h) const {
  std::vector<Permutation> gens;
  for (const auto& s : h.generators()) gens.push_back(project(s));
  return PermGroup(reps_.size(), std::move(gens));
}

QuotientGroup quotient_group(const PermGroup& g, const PermGroup& n, const SearchOptions& opts) {
  return QuotientGroup(g, n, opts);
}

SymCentralizer centralizer_in_sym(unsigned n, std::vector<unsigned> cycle_type) {
  unsigned used = 0;
  for (unsigned l : cycle_type) {
    if (l == 0) throw std::invalid_argument("centralizer_in_sym: zero cycle length");
    used += l;
  }
  if (used > n) throw std::invalid_argument("centralizer_in_sym: cycle lengths exceed n");
  std::erase(cycle_type, 1u);
  std::sort(cycle_type.rbegin(), cycle_type.rend());

  std::vector<std::vector<Point>> cycles;
  Point next = 0;
  for (unsigned l : cycle_type) {
    std::vector<Point> c;
    for (unsigned i = 0; i < l; ++i) c.push_back(next++);
    cycles.push_back(std::move(c));
  }
  SymCentralizer out;
  out.element = Permutation::from_cycles(n, cycles);
  out.order = 1;
  for (const auto& c : cycles) {
    out.generators.push_back(Permutation::from_cycles(n, {c}));
    out.order *= c.size();
  }
  // Swaps of adjacent equal-length cycles generate the block permutations.
  for (std::size_t i = 0; i < cycles.size();) {
    std::size_t j = i;
    while (j < cycles.size() && cycles[j].size() == cycles[i].size()) ++j;
    out.order *= factorial(static_cast<unsigned>(j - i));
    for (std::size_t a = i; a + 1 < j; ++a) {
      std::vector<std::vector<Point>> swaps;
      for (std::size_t k = 0; k < cycles[a].size(); ++k) swaps.push_back({cycles[a][k], cycles[a + 1][k]});
      out.generators.push_back(Permutation::from_cycles(n, swaps));
    }
    i = j;
  }
  for (Point p = next; p + 1 < n; ++p) out.generators.push_back(Permutation::from_cycles(n, {{p, p + 1}}));
  out.order *= factorial(n - next);
  return out;
}

bool check_syl2_criterion(const PermGroup& g, const SearchOptions& opts) {
  PermGroup s = sylow_subgroup(g, 2, opts);
  PermGroup n = subgroup_normalizer(g, s, opts);
  PermGroup c = subgroup_centralizer(g, s, opts);
  PermGroup sc = join(s, c.generators());
  return sc.order() == n.order();
}

PermGroup symmetric_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("symmetric_group: degree must be positive");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<Point> cyc(n);
  for (unsigned i = 0; i < n; ++i) cyc[i] = i;
  return PermGroup(n, {Permutation::from_cycles(n, {cyc}), Permutation::from_cycles(n, {{0, 1}})});
}

PermGroup alternating_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("alternating_group: degree must be positive");
  std::vector<Permutation> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclic_group: order must be positive");
  std::vector<Point> cyc(n);
  for (unsigned i = 0; i < n; ++i) cyc[i] = i;
  return PermGroup(n, {Permutation::from_cycles(n, {cyc})});
}

PermGroup dihedral_group(unsigned n) {
  if (n < 3) throw std::invalid_argument("dihedral_group: needs at least 3 points");
  std::vector<Point> rot(n), refl(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return PermGroup(n, {Permutation(rot), Permutation(refl)});
}

Permutation shift_permutation(const Permutation& x, std::size_t degree, std::size_t offset) {
  if (offset + x.degree() > degree) throw std::invalid_argument("shift_permutation: out of range");
  std::vector<Point> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < x.degree(); ++i) im[offset + i] = static_cast<Point>(offset + x[i]);
  return Permutation(std::move(im), Permutation::Unchecked{});
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& s : a.generators()) gens.push_back(shift_permutation(s, n, 0));
  for (const auto& s : b.generators()) gens.push_back(shift_permutation(s, n, a.degree()));
  return PermGroup(n, std::move(gens));
}

}  // namespace carterlab
