#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace carterlab {

/// GF(p^k). An element is the integer sum c_i p^i of its coordinates in the
/// power basis 1, w, ..., w^{k-1}, where w is a root of the modulus; so 0 and
/// 1 encode themselves and the prime field is {0, ..., p-1}.
///
/// The modulus is the monic degree-k polynomial whose coefficient tuple
/// (c_0, c_1, ..., c_{k-1}), constant term first, is lexicographically least
/// among those whose root w has multiplicative order p^k - 1.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  /// Throws std::invalid_argument unless p is prime, k >= 1 and p^k <= 2^16.
  FiniteField(std::uint32_t p, unsigned k);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  /// Coefficients c_0..c_{k-1} of the modulus below the leading 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// The root w of the modulus; generates the multiplicative group.
  Elem primitive() const { return exp_[1]; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;
  /// Discrete log to base primitive(); a must be nonzero.
  std::uint32_t log(Elem a) const { return log_[a]; }
  Elem exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }
  /// x -> x^p.
  Elem frobenius(Elem a) const { return pow(a, p_); }
  /// Embeds an integer through the prime field.
  Elem from_int(std::int64_t v) const;

  std::string to_string(Elem a) const;

 private:
  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;  // length 2(q-1) so mul needs no reduction
  std::vector<std::uint32_t> log_;
  std::vector<std::uint16_t> add_table_;  // q*q entries when q <= 1024
};

}  // namespace carterlab
