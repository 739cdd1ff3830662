#include "carterlab/carter.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "carterlab/numtheory.hpp"
#include "orbit.hpp"

namespace carterlab {

namespace {

struct Node {
  PermGroup group;
  std::vector<Permutation> elements;
  Fingerprint fp;  // sorted, so membership is a binary search
};

class NilpotentSearch {
 public:
  NilpotentSearch(const PermGroup& g, const SearchOptions& opts) : g_(g), opts_(opts) {}

  SubgroupClassSet run(bool carter_only) {
    SubgroupClassSet out{g_, {}, {}};
    std::deque<Node> queue;
    Node root{PermGroup::trivial(g_.degree()), {g_.identity()}, {g_.rank(g_.identity())}};
    queue.push_back(std::move(root));
    register_class(queue.back());
    while (!queue.empty()) {
      Node h = std::move(queue.front());
      queue.pop_front();
      PermGroup n = normalizer_of(h);
      if (!carter_only || n.order() == h.group.order()) {
        out.representatives.push_back(h.group);
        out.normalizer_orders.push_back(n.order());
      }
      if (n.order() > h.group.order()) extend(h, n, queue);
    }
    return out;
  }

 private:
  Fingerprint conjugated(const std::vector<Permutation>& elems, const Permutation& t) const {
    Fingerprint f;
    f.reserve(elems.size());
    for (const auto& e : elems) f.push_back(g_.rank(e.conjugate(t)));
    std::sort(f.begin(), f.end());
    return f;
  }

  // Records every conjugate of h so later candidates are deduplicated exactly.
  void register_class(const Node& h) {
    detail::KeyedOrbit<Fingerprint, FingerprintHash> orb;
    detail::keyed_orbit(
        g_.generators(), g_.identity(),
        [&](const Permutation& t) { return conjugated(h.elements, t); }, orb);
    const std::size_t id = class_count_++;
    for (auto it = orb.index.begin(); it != orb.index.end();) {
      auto node = orb.index.extract(it++);
      known_.emplace(std::move(node.key()), id);
    }
    normalizer_order_.push_back(g_.order() / orb.size());
  }

  PermGroup normalizer_of(const Node& h) {
    // The orbit is recomputed here rather than kept from registration to
    // bound memory by one class at a time.
    const std::uint64_t target = normalizer_order_[known_.at(h.fp)];
    if (target == h.group.order()) return h.group;
    if (target == g_.order()) return g_;
    detail::KeyedOrbit<Fingerprint, FingerprintHash> orb;
    detail::keyed_orbit(
        g_.generators(), g_.identity(),
        [&](const Permutation& t) { return conjugated(h.elements, t); }, orb);
    return detail::orbit_stabilizer(h.group, g_.generators(), orb, target);
  }

  bool in_fp(const Fingerprint& fp, std::uint64_t r) const {
    return std::binary_search(fp.begin(), fp.end(), r);
  }

  void extend(const Node& h, const PermGroup& n, std::deque<Node>& queue) {
    std::unordered_set<std::uint64_t> covered;
    n.for_each_element([&](const Permutation& x) {
      const std::uint64_t rx = g_.rank(x);
      if (in_fp(h.fp, rx) || covered.count(rx)) return;
      std::uint64_t p = 0;
      for (auto q : prime_divisors(x.order()))
        if (in_fp(h.fp, g_.rank(x.pow(static_cast<std::int64_t>(q))))) {
          p = q;
          break;
        }
      if (p == 0) return;

      Node k;
      k.elements = h.elements;
      k.elements.reserve(h.elements.size() * p);
      Permutation xi = x;
      for (std::uint64_t i = 1; i < p; ++i, xi *= x)
        for (const auto& e : h.elements) k.elements.push_back(e * xi);
      k.fp.reserve(k.elements.size());
      for (std::size_t i = 0; i < k.elements.size(); ++i) {
        std::uint64_t r = g_.rank(k.elements[i]);
        k.fp.push_back(r);
        if (i >= h.elements.size()) covered.insert(r);
      }
      std::sort(k.fp.begin(), k.fp.end());
      if (known_.count(k.fp) || rejected_.count(k.fp)) return;
      if (k.elements.size() > opts_.fingerprint_cap)
        throw CapExceeded("nilpotent subgroup exceeds fingerprint cap");
      if (!nilpotent_by_element_orders(k.elements)) {
        rejected_.insert(std::move(k.fp));
        return;
      }
      k.group = join(h.group, {x});
      register_class(k);
      queue.push_back(std::move(k));
    });
  }

  const PermGroup& g_;
  const SearchOptions& opts_;
  std::unordered_map<Fingerprint, std::size_t, FingerprintHash> known_;
  std::unordered_set<Fingerprint, FingerprintHash> rejected_;
  std::vector<std::uint64_t> normalizer_order_;
  std::size_t class_count_ = 0;
};

}  // namespace

SubgroupClassSet nilpotent_subgroup_classes(const PermGroup& g, const SearchOptions& opts) {
  if (g.order() > opts.full_search_cap)
    throw CapExceeded("group order exceeds the full-search cap; use is_carter_witness");
  return NilpotentSearch(g, opts).run(false);
}

SubgroupClassSet carter_subgroups(const PermGroup& g, const SearchOptions& opts) {
  if (g.order() > opts.full_search_cap)
    throw CapExceeded("group order exceeds the full-search cap; use is_carter_witness");
  return NilpotentSearch(g, opts).run(true);
}

bool is_carter_witness(const PermGroup& g, const PermGroup& k, const SearchOptions& opts) {
  if (k.degree() != g.degree() || !g.contains_all(k.generators()))
    throw std::invalid_argument("is_carter_witness: not a subgroup");
  if (!is_nilpotent(k)) return false;
  return subgroup_normalizer(g, k, opts).order() == k.order();
}

}  // namespace carterlab
