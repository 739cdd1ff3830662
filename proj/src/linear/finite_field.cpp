#include "carterlab/finite_field.hpp"

#include <stdexcept>

#include "carterlab/numtheory.hpp"

namespace carterlab {

namespace {

std::vector<std::uint32_t> digits(std::uint32_t a, std::uint32_t p, unsigned k) {
  std::vector<std::uint32_t> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

std::uint32_t encode(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t a = 0;
  for (unsigned i = static_cast<unsigned>(d.size()); i-- > 0;) a = a * p + d[i];
  return a;
}

// Multiplies the encoded polynomial a by w modulo the monic modulus.
std::uint32_t times_root(std::uint32_t a, const std::vector<std::uint32_t>& mod, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(mod.size());
  auto d = digits(a, p, k);
  std::uint32_t top = d[k - 1];
  for (unsigned i = k - 1; i > 0; --i) d[i] = d[i - 1];
  d[0] = 0;
  for (unsigned i = 0; i < k; ++i) d[i] = (d[i] + (p - mod[i]) * top) % p;
  return encode(d, p);
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("field_make: characteristic must be prime");
  if (k == 0) throw std::invalid_argument("field_make: degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > (1u << 16)) throw std::invalid_argument("field_make: field size exceeds 2^16");
  }
  q_ = static_cast<std::uint32_t>(q);

  // Lexicographic order with c_0 most significant: c_0 is the top digit of m.
  bool found = false;
  for (std::uint32_t m = 0; m < q_ && !found; ++m) {
    std::vector<std::uint32_t> mod(k);
    std::uint32_t rest = m;
    for (unsigned i = k; i-- > 0;) {
      mod[i] = rest % p;
      rest /= p;
    }
    if (mod[0] == 0) continue;
    std::uint32_t x = 1, ord = 0;
    do {
      x = times_root(x, mod, p);
      ++ord;
    } while (x != 1 && ord < q_ - 1);
    if (x == 1 && ord == q_ - 1) {
      modulus_ = std::move(mod);
      found = true;
    }
  }
  if (!found) throw std::logic_error("field_make: no primitive modulus found");

  exp_.resize(2 * (q_ - 1));
  log_.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = exp_[i + q_ - 1] = x;
    log_[x] = i;
    x = times_root(x, modulus_, p);
  }

  if (q_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      auto da = digits(a, p, k);
      for (std::uint32_t b = 0; b < q_; ++b) {
        auto db = digits(b, p, k);
        for (unsigned i = 0; i < k; ++i) db[i] = (da[i] + db[i]) % p;
        add_table_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(encode(db, p));
      }
    }
  }
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  Elem r = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t n = q_ - 1;
  std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (((e % n) + n) % n)) % n;
  return exp_[r];
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::string FiniteField::to_string(Elem a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  return "w^" + std::to_string(log_[a]);
}

}  // namespace carterlab
