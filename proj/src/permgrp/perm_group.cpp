#include "carterlab/perm_group.hpp"

#include <algorithm>
#include <limits>

namespace carterlab {
namespace detail {

struct Level {
  Point base_point = 0;
  std::vector<Permutation> gens;
  std::vector<Point> orbit;
  std::vector<std::int32_t> position;
  std::vector<Permutation> transversal;
  std::vector<Permutation> inv_transversal;
};

struct Bsgs {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Level> levels;
  std::uint64_t order = 1;
  std::vector<std::uint64_t> stride;

  void rebuild_orbit(Level& level) const {
    level.orbit.assign(1, level.base_point);
    level.position.assign(degree, -1);
    level.position[level.base_point] = 0;
    level.transversal.assign(1, Permutation(degree));
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      for (const auto& s : level.gens) {
        Point img = s[level.orbit[k]];
        if (level.position[img] >= 0) continue;
        level.position[img] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(img);
        level.transversal.push_back(level.transversal[k] * s);
      }
    }
    level.inv_transversal.clear();
    level.inv_transversal.reserve(level.transversal.size());
    for (const auto& t : level.transversal) level.inv_transversal.push_back(t.inverse());
  }

  // Returns the residue and the level at which sifting stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const {
    for (std::size_t j = from; j < levels.size(); ++j) {
      const Level& lv = levels[j];
      std::int32_t k = lv.position[g[lv.base_point]];
      if (k < 0) return {std::move(g), j};
      g *= lv.inv_transversal[k];
    }
    return {std::move(g), levels.size()};
  }

  void add_level(Point p) {
    Level lv;
    lv.base_point = p;
    levels.push_back(std::move(lv));
  }

  void build(const std::vector<Point>& base_prefix) {
    std::vector<Permutation> gens;
    for (const auto& g : generators)
      if (!g.is_identity()) gens.push_back(g);
    if (gens.empty()) {
      finish();
      return;
    }
    for (Point p : base_prefix) {
      if (p >= degree) throw std::invalid_argument("base point out of range");
      bool dup = std::any_of(levels.begin(), levels.end(),
                             [p](const Level& l) { return l.base_point == p; });
      if (!dup) add_level(p);
    }
    for (const auto& g : gens) {
      bool fixes_base = std::all_of(levels.begin(), levels.end(),
                                    [&g](const Level& l) { return g[l.base_point] == l.base_point; });
      if (fixes_base) add_level(*g.first_moved());
    }
    for (std::size_t j = 0; j < levels.size(); ++j) {
      for (const auto& g : gens) {
        bool fixes = true;
        for (std::size_t i = 0; i < j && fixes; ++i)
          fixes = g[levels[i].base_point] == levels[i].base_point;
        if (fixes) levels[j].gens.push_back(g);
      }
      rebuild_orbit(levels[j]);
    }

    std::size_t i = levels.size() - 1;
    while (true) {
      bool extended = false;
      for (std::size_t k = 0; !extended && k < levels[i].orbit.size(); ++k) {
        for (std::size_t si = 0; si < levels[i].gens.size(); ++si) {
          const Level& lv = levels[i];
          const Permutation& s = lv.gens[si];
          Point img = s[lv.orbit[k]];
          Permutation h = lv.transversal[k] * s;
          h *= lv.inv_transversal[lv.position[img]];
          if (h.is_identity()) continue;
          auto [residue, j] = strip(std::move(h), i + 1);
          if (residue.is_identity()) continue;
          if (j == levels.size()) add_level(*residue.first_moved());
          for (std::size_t l = i + 1; l <= j; ++l) {
            levels[l].gens.push_back(residue);
            rebuild_orbit(levels[l]);
          }
          i = j;
          extended = true;
          break;
        }
      }
      if (extended) continue;
      if (i == 0) break;
      --i;
    }
    // Drop levels with trivial basic orbit (possible with a supplied prefix).
    std::erase_if(levels, [](const Level& l) { return l.orbit.size() == 1; });
    finish();
  }

  void finish() {
    order = 1;
    stride.assign(levels.size(), 1);
    for (std::size_t j = 0; j < levels.size(); ++j) {
      stride[j] = order;
      std::uint64_t len = levels[j].orbit.size();
      if (order > std::numeric_limits<std::uint64_t>::max() / len)
        throw CapExceeded("group order overflows 64 bits");
      order *= len;
    }
  }
};

}  // namespace detail

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Point> base_prefix) {
  if (degree == 0) throw std::invalid_argument("permutation group degree must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
  auto b = std::make_shared<detail::Bsgs>();
  b->degree = degree;
  b->generators = std::move(generators);
  b->build(base_prefix);
  bsgs_ = std::move(b);
}

std::size_t PermGroup::degree() const { return bsgs_->degree; }
const std::vector<Permutation>& PermGroup::generators() const { return bsgs_->generators; }

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (const auto& l : bsgs_->levels) out.push_back(l.base_point);
  return out;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& l : bsgs_->levels)
    for (const auto& g : l.gens)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

std::size_t PermGroup::base_length() const { return bsgs_->levels.size(); }
std::span<const Point> PermGroup::basic_orbit(std::size_t level) const {
  return bsgs_->levels.at(level).orbit;
}
const Permutation& PermGroup::transversal(std::size_t level, std::size_t k) const {
  return bsgs_->levels.at(level).transversal.at(k);
}
std::uint64_t PermGroup::order() const { return bsgs_->order; }

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree()) throw std::invalid_argument("degree mismatch in membership test");
  auto [residue, j] = bsgs_->strip(g, 0);
  return j == bsgs_->levels.size() && residue.is_identity();
}

bool PermGroup::contains_all(const std::vector<Permutation>& gs) const {
  return std::all_of(gs.begin(), gs.end(), [this](const Permutation& g) { return contains(g); });
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  return degree() == other.degree() && other.contains_all(generators());
}

std::uint64_t PermGroup::rank(const Permutation& g) const {
  if (g.degree() != degree()) throw std::invalid_argument("degree mismatch in rank");
  std::uint64_t r = 0;
  Permutation h = g;
  const auto& levels = bsgs_->levels;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    std::int32_t k = levels[j].position[h[levels[j].base_point]];
    if (k < 0) throw std::invalid_argument("element is not in the group");
    r += static_cast<std::uint64_t>(k) * bsgs_->stride[j];
    h *= levels[j].inv_transversal[k];
  }
  if (!h.is_identity()) throw std::invalid_argument("element is not in the group");
  return r;
}

Permutation PermGroup::unrank(std::uint64_t r) const {
  if (r >= order()) throw std::out_of_range("rank out of range");
  const auto& levels = bsgs_->levels;
  Permutation g(degree());
  for (std::size_t j = levels.size(); j-- > 0;) {
    std::uint64_t digit = (r / bsgs_->stride[j]) % levels[j].orbit.size();
    g *= levels[j].transversal[digit];
  }
  return g;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, order() - 1);
  return unrank(dist(rng));
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& fn) const {
  const auto& levels = bsgs_->levels;
  if (levels.empty()) {
    fn(identity());
    return;
  }
  std::vector<Permutation> prefix(levels.size() + 1, identity());
  auto rec = [&](auto&& self, std::size_t j) -> void {
    for (std::size_t d = 0; d < levels[j].orbit.size(); ++d) {
      prefix[j] = prefix[j + 1] * levels[j].transversal[d];
      if (j == 0)
        fn(prefix[0]);
      else
        self(self, j - 1);
    }
  };
  // stride_0 == 1, so level 0 varies fastest and ranks come out in order.
  rec(rec, levels.size() - 1);
}

std::vector<Permutation> PermGroup::elements() const {
  std::vector<Permutation> out;
  out.reserve(order());
  for_each_element([&out](const Permutation& g) { out.push_back(g); });
  return out;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() &&
         b.contains_all(a.generators());
}

PermGroup group_from_generators(const std::vector<Permutation>& gens, std::size_t degree) {
  return PermGroup(degree, gens);
}

PermGroup join(const PermGroup& base, const std::vector<Permutation>& extra) {
  std::vector<Permutation> gens = base.generators();
  for (const auto& x : extra)
    if (!base.contains(x)) gens.push_back(x);
  if (gens.size() == base.generators().size()) return base;
  return PermGroup(base.degree(), std::move(gens));
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(g.degree(), false);
  for (Point p = 0; p < g.degree(); ++p) {
    if (seen[p]) continue;
    std::vector<Point> orb{p};
    seen[p] = true;
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (const auto& s : g.generators()) {
        Point q = s[orb[k]];
        if (!seen[q]) {
          seen[q] = true;
          orb.push_back(q);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

}  // namespace carterlab
