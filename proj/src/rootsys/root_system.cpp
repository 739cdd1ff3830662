#include "carterlab/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "carterlab/subgroups.hpp"

namespace carterlab {

namespace {

IntVector unit(std::size_t dim, std::size_t i, std::int64_t v = 1) {
  IntVector e(dim, 0);
  e[i] = v;
  return e;
}

IntVector diff(std::size_t dim, std::size_t i, std::size_t j, std::int64_t scale = 1) {
  IntVector e(dim, 0);
  e[i] = scale;
  e[j] = -scale;
  return e;
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<IntVector> simple_roots(char type, unsigned n) {
  std::vector<IntVector> pi;
  auto range_ok = [&](unsigned lo, unsigned hi) {
    if (n < lo || n > hi)
      throw std::invalid_argument("root_system: unsupported rank " + std::to_string(n) +
                                  " for type " + std::string(1, type));
  };
  switch (type) {
    case 'A':
      range_ok(1, 7);
      for (unsigned i = 0; i < n; ++i) pi.push_back(diff(n + 1, i, i + 1));
      break;
    case 'B':
    case 'C':
    case 'D':
      range_ok(type == 'D' ? 3 : 2, 7);
      for (unsigned i = 0; i + 1 < n; ++i) pi.push_back(diff(n, i, i + 1));
      if (type == 'B') pi.push_back(unit(n, n - 1));
      if (type == 'C') pi.push_back(unit(n, n - 1, 2));
      if (type == 'D') {
        IntVector v(n, 0);
        v[n - 2] = v[n - 1] = 1;
        pi.push_back(v);
      }
      break;
    case 'G':
      range_ok(2, 2);
      pi = {{1, -1, 0}, {-2, 1, 1}};
      break;
    case 'F':
      range_ok(4, 4);
      pi = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      break;
    case 'E': {
      range_ok(6, 8);
      std::vector<IntVector> e8 = {{1, -1, -1, -1, -1, -1, -1, 1}, {2, 2, 0, 0, 0, 0, 0, 0}};
      for (std::size_t k = 0; k < 6; ++k) e8.push_back(diff(8, k + 1, k, 2));
      pi.assign(e8.begin(), e8.begin() + n);
      break;
    }
    default:
      throw std::invalid_argument("root_system: unsupported type " + std::string(1, type));
  }
  return pi;
}

}  // namespace

RootSystem::RootSystem(char type, unsigned rank) : type_(type), rank_(rank) {
  const auto pi = simple_roots(type, rank);
  std::vector<std::int64_t> norm;
  for (const auto& a : pi) norm.push_back(dot(a, a));

  std::vector<IntVector> found, found_coeffs;
  std::map<IntVector, std::size_t> seen;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    seen.emplace(pi[i], found.size());
    found.push_back(pi[i]);
    found_coeffs.push_back(unit(rank, i));
  }
  for (std::size_t k = 0; k < found.size(); ++k)
    for (std::size_t i = 0; i < pi.size(); ++i) {
      const std::int64_t c = 2 * dot(found[k], pi[i]) / norm[i];
      if (c == 0) continue;
      IntVector y = found[k], yc = found_coeffs[k];
      for (std::size_t d = 0; d < y.size(); ++d) y[d] -= c * pi[i][d];
      yc[i] -= c;
      if (seen.emplace(y, found.size()).second) {
        found.push_back(std::move(y));
        found_coeffs.push_back(std::move(yc));
      }
    }

  std::vector<std::size_t> pos;
  for (std::size_t k = 0; k < found.size(); ++k)
    if (std::all_of(found_coeffs[k].begin(), found_coeffs[k].end(), [](auto c) { return c >= 0; }))
      pos.push_back(k);
  auto height_of = [&](std::size_t k) {
    return std::accumulate(found_coeffs[k].begin(), found_coeffs[k].end(), std::int64_t{0});
  };
  std::sort(pos.begin(), pos.end(), [&](std::size_t a, std::size_t b) {
    auto ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return found_coeffs[a] > found_coeffs[b];
  });
  if (2 * pos.size() != found.size()) throw std::logic_error("root_system: closure is not symmetric");
  for (std::size_t k : pos) {
    roots_.push_back(found[k]);
    coeffs_.push_back(found_coeffs[k]);
  }
  for (std::size_t k : pos) {
    IntVector v = found[k], c = found_coeffs[k];
    for (auto& x : v) x = -x;
    for (auto& x : c) x = -x;
    roots_.push_back(std::move(v));
    coeffs_.push_back(std::move(c));
  }
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    by_coords_.emplace(roots_[k], k);
    by_coeffs_.emplace(coeffs_[k], k);
  }
  max_norm_ = *std::max_element(norm.begin(), norm.end());
  min_norm_ = *std::min_element(norm.begin(), norm.end());

  reflection_.assign(rank, std::vector<std::size_t>(roots_.size()));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < roots_.size(); ++j) {
      const std::int64_t c = 2 * inner(j, i) / inner(i, i);
      IntVector y = roots_[j];
      for (std::size_t d = 0; d < y.size(); ++d) y[d] -= c * roots_[i][d];
      reflection_[i][j] = by_coords_.at(y);
    }
}

std::int64_t RootSystem::height(std::size_t i) const {
  const auto& c = coefficients(i);
  return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

std::size_t RootSystem::negative(std::size_t i) const {
  const std::size_t n = positive_count();
  return i < n ? i + n : i - n;
}

std::int64_t RootSystem::find(const IntVector& v) const {
  auto it = by_coords_.find(v);
  return it == by_coords_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::int64_t RootSystem::find_by_coefficients(const IntVector& c) const {
  auto it = by_coeffs_.find(c);
  return it == by_coeffs_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::int64_t RootSystem::inner(std::size_t i, std::size_t j) const {
  return dot(roots_.at(i), roots_.at(j));
}

std::int64_t pairing(const RootSystem& phi, std::size_t s, std::size_t r) {
  return 2 * phi.inner(s, r) / phi.inner(r, r);
}

std::int64_t torus_exponent(const RootSystem& phi, std::size_t s, std::size_t r) {
  return pairing(phi, r, s);
}

HighestRoot highest_root(const RootSystem& phi) {
  return {phi.highest_root(), phi.coefficients(phi.highest_root())};
}

WeylGroupRep::WeylGroupRep(const RootSystem& phi) : phi_(phi) {
  for (std::size_t i = 0; i < phi.rank(); ++i) {
    std::vector<Point> im(phi.size());
    for (std::size_t j = 0; j < phi.size(); ++j) im[j] = static_cast<Point>(phi.reflect(i, j));
    simple_.emplace_back(std::move(im));
  }
  group_ = PermGroup(phi.size(), simple_);
}

IntMatrix WeylGroupRep::matrix(const Permutation& w) const {
  const std::size_t r = phi_.rank();
  IntMatrix m(r, IntVector(r, 0));
  for (std::size_t j = 0; j < r; ++j) {
    const auto& c = phi_.coefficients(w[j]);
    for (std::size_t i = 0; i < r; ++i) m[i][j] = c[i];
  }
  return m;
}

std::vector<unsigned> WeylGroupRep::reduced_word(const Permutation& w) const {
  std::vector<unsigned> rec;
  Permutation x = w;
  const std::size_t n = phi_.positive_count();
  while (!x.is_identity()) {
    std::size_t i = 0;
    while (x[i] < n) ++i;  // some simple root is sent to a negative root
    x = simple_[i] * x;
    rec.push_back(static_cast<unsigned>(i + 1));
  }
  std::reverse(rec.begin(), rec.end());
  return rec;
}

Permutation WeylGroupRep::from_word(const std::vector<unsigned>& word) const {
  Permutation x(phi_.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 1 || *it > simple_.size()) throw std::invalid_argument("from_word: bad index");
    x *= simple_[*it - 1];
  }
  return x;
}

WeylGroupRep weyl_group(const RootSystem& phi) { return WeylGroupRep(phi); }

namespace {

Twist twist_from_simple_map(const RootSystem& phi, std::string name, std::vector<unsigned> map) {
  const std::size_t r = phi.rank();
  std::vector<Point> im(phi.size());
  for (std::size_t k = 0; k < phi.size(); ++k) {
    IntVector c(r, 0);
    for (std::size_t i = 0; i < r; ++i) c[map[i]] = phi.coefficients(k)[i];
    std::int64_t j = phi.find_by_coefficients(c);
    if (j < 0) throw std::invalid_argument("twist: map is not a diagram symmetry");
    im[k] = static_cast<Point>(j);
  }
  Twist t{std::move(name), std::move(map), Permutation(std::move(im)), 1};
  t.order = static_cast<unsigned>(t.root_perm.order());
  // A diagram symmetry preserves the Cartan matrix.
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (pairing(phi, i, j) != pairing(phi, t.simple_map[i], t.simple_map[j]))
        throw std::invalid_argument("twist: map does not preserve the Cartan matrix");
  return t;
}

}  // namespace

Twist identity_twist(const RootSystem& phi) {
  std::vector<unsigned> map(phi.rank());
  std::iota(map.begin(), map.end(), 0u);
  return twist_from_simple_map(phi, "id", std::move(map));
}

Twist diagram_flip(const RootSystem& phi) {
  const unsigned r = phi.rank();
  std::vector<unsigned> map(r);
  std::iota(map.begin(), map.end(), 0u);
  if (phi.type() == 'A' && r >= 2) {
    for (unsigned i = 0; i < r; ++i) map[i] = r - 1 - i;
  } else if (phi.type() == 'D') {
    std::swap(map[r - 2], map[r - 1]);
  } else if (phi.type() == 'E' && r == 6) {
    map = {5, 1, 4, 3, 2, 0};
  } else {
    throw std::invalid_argument("diagram_flip: no order-2 symmetry for " + phi.label());
  }
  return twist_from_simple_map(phi, "flip", std::move(map));
}

Twist triality(const RootSystem& phi) {
  if (phi.type() != 'D' || phi.rank() != 4)
    throw std::invalid_argument("triality: only D4 has a triality symmetry");
  return twist_from_simple_map(phi, "triality", {2, 1, 3, 0});
}

Twist make_twist(const RootSystem& phi, const std::string& name) {
  if (name == "id") return identity_twist(phi);
  if (name == "flip") return diagram_flip(phi);
  if (name == "triality") return triality(phi);
  throw std::invalid_argument("unknown twist '" + name + "' (expected id, flip or triality)");
}

std::int64_t evaluate(const IntPolynomial& p, std::int64_t x) {
  std::int64_t r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

std::string to_string(const IntPolynomial& p, const std::string& var) {
  std::string s;
  for (std::size_t k = p.size(); k-- > 0;) {
    std::int64_t c = p[k];
    if (c == 0) continue;
    std::int64_t a = c < 0 ? -c : c;
    s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (a != 1 || k == 0) s += std::to_string(a);
    if (k >= 1) s += var;
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

std::int64_t determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  __int128 d = sign * a[n - 1][n - 1];
  if (d > INT64_MAX || d < INT64_MIN) throw std::overflow_error("determinant overflows 64 bits");
  return static_cast<std::int64_t>(d);
}

IntPolynomial torus_polynomial(const WeylGroupRep& w, const Permutation& x, const Twist& tau) {
  const IntMatrix m = w.matrix(x * tau.root_perm);
  const std::size_t r = m.size();
  // Values at q = 0..r, then Newton forward differences.
  std::vector<__int128> diffs(r + 1);
  for (std::size_t q = 0; q <= r; ++q) {
    IntMatrix a = m;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) a[i][j] = static_cast<std::int64_t>(q) * m[i][j] - (i == j);
    diffs[q] = determinant(a);
  }
  for (std::size_t k = 1; k <= r; ++k)
    for (std::size_t q = r; q >= k; --q) diffs[q] -= diffs[q - 1];
  // sum_k diffs[k] * C(q, k); C(q, k) = falling(q, k) / k!.
  std::vector<__int128> poly(r + 1, 0);
  std::vector<__int128> falling{1};  // coefficients of q(q-1)...(q-k+1)
  __int128 kfact = 1;
  for (std::size_t k = 0; k <= r; ++k) {
    if (k > 0) {
      std::vector<__int128> next(falling.size() + 1, 0);
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] -= falling[i] * static_cast<__int128>(k - 1);
      }
      falling = std::move(next);
      kfact *= static_cast<__int128>(k);
    }
    if (diffs[k] % kfact != 0) throw std::logic_error("torus_polynomial: non-integral coefficient");
    const __int128 c = diffs[k] / kfact;
    for (std::size_t i = 0; i < falling.size(); ++i) poly[i] += c * falling[i];
  }
  IntPolynomial out(poly.begin(), poly.end());
  if (evaluate(out, 2) < 0)
    for (auto& c : out) c = -c;
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::uint64_t torus_order(const WeylGroupRep& w, const Permutation& x, const Twist& tau,
                          std::int64_t q) {
  const IntMatrix m = w.matrix(x * tau.root_perm);
  IntMatrix a = m;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) a[i][j] = q * m[i][j] - (i == j);
  std::int64_t d = determinant(a);
  return static_cast<std::uint64_t>(d < 0 ? -d : d);
}

std::vector<TorusClass> f_conjugacy_classes(const WeylGroupRep& w, const Twist& tau,
                                            std::uint64_t cap) {
  const PermGroup& g = w.group();
  if (g.order() > cap) throw CapExceeded("f_conjugacy_classes: |W| exceeds cap");
  const Permutation& t = tau.root_perm;
  const Permutation tinv = t.inverse();
  for (const auto& s : w.simple_reflections())
    if (!g.contains(tinv * s * t))
      throw std::invalid_argument("f_conjugacy_classes: twist does not normalize W");

  // x^{-1} w (t x t^{-1}) for each generator x; the s are involutions.
  std::vector<Permutation> twisted;
  for (const auto& s : w.simple_reflections()) twisted.push_back(t * s * tinv);
  const auto& gens = w.simple_reflections();

  const std::uint64_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<TorusClass> out;
  std::vector<Permutation> queue;
  for (std::uint64_t r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    queue.assign(1, g.unrank(r));
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Permutation z = gens[i] * queue[k] * twisted[i];
        std::uint64_t rz = g.rank(z);
        if (!seen[rz]) {
          seen[rz] = true;
          queue.push_back(std::move(z));
        }
      }
    TorusClass c;
    c.representative = queue.front();
    c.rep_word = w.reduced_word(c.representative);
    c.size = queue.size();
    c.order_poly = torus_polynomial(w, c.representative, tau);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace carterlab
