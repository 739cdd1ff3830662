#include "carterlab/classical.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "carterlab/numtheory.hpp"

namespace carterlab {

namespace {

using Elem = FiniteField::Elem;

// An additive basis of GF(p^k) over GF(p): 1, w, ..., w^{k-1}.
std::vector<Elem> additive_basis(const FiniteField& f) {
  std::vector<Elem> b;
  Elem e = 1;
  for (unsigned i = 0; i < f.degree(); ++i, e *= f.characteristic()) b.push_back(e);
  return b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  if (r >> 64) throw std::overflow_error("group order overflows 64 bits");
  return static_cast<std::uint64_t>(r);
}

// Closure of a set of matrices under multiplication (finite group).
std::set<std::vector<Elem>> closure(const FiniteField& f, const std::vector<Matrix>& gens,
                                    std::size_t n) {
  std::set<std::vector<Elem>> seen{Matrix::identity(n).a};
  std::vector<Matrix> queue{Matrix::identity(n)};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& g : gens) {
      Matrix h = mul(f, queue[k], g);
      if (seen.insert(h.a).second) queue.push_back(std::move(h));
    }
  return seen;
}

std::vector<Matrix> sl_generators(const FiniteField& f, unsigned n) {
  std::vector<Matrix> gens;
  for (unsigned i = 0; i + 1 < n; ++i)
    for (Elem b : additive_basis(f)) {
      gens.push_back(Matrix::elementary(f, n, i, i + 1, b));
      gens.push_back(Matrix::elementary(f, n, i + 1, i, b));
    }
  return gens;
}

std::vector<Matrix> sp_generators(const FiniteField& f, unsigned n) {
  const unsigned m = n / 2;
  std::vector<Matrix> gens;
  for (Elem t : additive_basis(f)) {
    for (unsigned i = 0; i + 1 < m; ++i) {
      // x_{e_i - e_{i+1}}(t) = I + t(E_{i,i+1} - E_{(i+1)',i'}).
      Matrix x = Matrix::elementary(f, n, i, i + 1, t);
      x(n - 2 - i, n - 1 - i) = f.neg(t);
      gens.push_back(x);
      gens.push_back(transpose(x));
    }
    Matrix x = long_root_element(f, m, m, t);
    gens.push_back(x);
    gens.push_back(transpose(x));
  }
  return gens;
}

std::vector<Matrix> su_generators(const ClassicalGroupSpec& spec, const FiniteField& f) {
  if (spec.n != 3) throw std::invalid_argument("SU/GU: only dimension 3 is supported");
  const std::uint32_t qq = f.size();
  std::vector<Matrix> unip;
  for (Elem a = 0; a < qq; ++a)
    for (Elem b = 0; b < qq; ++b)
      for (Elem c = 0; c < qq; ++c) {
        Matrix u = Matrix::identity(3);
        u(0, 1) = a;
        u(0, 2) = b;
        u(1, 2) = c;
        if (!(a == 0 && b == 0 && c == 0) && preserves_form(spec, f, u))
          unip.push_back(u);
      }
  std::vector<Matrix> chosen;
  std::set<std::vector<Elem>> span{Matrix::identity(3).a};
  for (const auto& u : unip) {
    if (span.count(u.a)) continue;
    chosen.push_back(u);
    span = closure(f, chosen, 3);
  }
  std::vector<Matrix> gens;
  for (const auto& u : chosen) {
    gens.push_back(u);
    gens.push_back(transpose(u));
  }
  return gens;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::SL: return "SL";
    case Family::GL: return "GL";
    case Family::Sp: return "Sp";
    case Family::SU: return "SU";
    case Family::GU: return "GU";
  }
  return "?";
}

void ClassicalGroupSpec::validate() const {
  std::uint64_t p = 0;
  unsigned k = 0;
  if (!prime_power(q, p, k)) throw std::invalid_argument("classical group: q must be a prime power");
  if (n < 2) throw std::invalid_argument("classical group: dimension must be at least 2");
  if (family == Family::Sp && n % 2 != 0)
    throw std::invalid_argument("classical group: Sp needs even dimension");
  if ((family == Family::SU || family == Family::GU) && n != 3)
    throw std::invalid_argument("classical group: unitary groups are supported in dimension 3");
  const std::uint64_t fsize = (family == Family::SU || family == Family::GU) ? q * q : q;
  if (fsize > (1u << 16)) throw std::invalid_argument("classical group: field exceeds 2^16");
}

FiniteField ClassicalGroupSpec::field() const {
  validate();
  std::uint64_t p = 0;
  unsigned k = 0;
  prime_power(q, p, k);
  const bool unitary = family == Family::SU || family == Family::GU;
  return FiniteField(static_cast<std::uint32_t>(p), unitary ? 2 * k : k);
}

Matrix ClassicalGroupSpec::form(const FiniteField& f) const {
  Matrix j(n);
  switch (family) {
    case Family::SL:
    case Family::GL:
      return Matrix::identity(n);
    case Family::Sp:
      for (unsigned i = 0; i < n; ++i) j(i, n - 1 - i) = i < n / 2 ? 1 : f.neg(1);
      return j;
    case Family::SU:
    case Family::GU:
      for (unsigned i = 0; i < n; ++i) j(i, n - 1 - i) = 1;
      return j;
  }
  return j;
}

std::string ClassicalGroupSpec::to_string() const {
  return carterlab::to_string(family) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
}

bool preserves_form(const ClassicalGroupSpec& spec, const FiniteField& f, const Matrix& g) {
  switch (spec.family) {
    case Family::SL:
      return determinant(f, g) == 1;
    case Family::GL:
      return determinant(f, g) != 0;
    case Family::Sp: {
      Matrix j = spec.form(f);
      return mul(f, mul(f, transpose(g), j), g) == j;
    }
    case Family::SU:
    case Family::GU: {
      Matrix j = spec.form(f);
      Matrix bar = entrywise_pow(f, g, static_cast<std::int64_t>(spec.q));
      bool ok = mul(f, mul(f, transpose(bar), j), g) == j;
      if (spec.family == Family::SU) ok = ok && determinant(f, g) == 1;
      return ok;
    }
  }
  return false;
}

std::vector<Matrix> classical_group(const ClassicalGroupSpec& spec) {
  FiniteField f = spec.field();
  switch (spec.family) {
    case Family::SL:
      return sl_generators(f, spec.n);
    case Family::GL: {
      auto gens = sl_generators(f, spec.n);
      std::vector<Elem> d(spec.n, 1);
      d[0] = f.primitive();
      if (f.size() > 2) gens.push_back(Matrix::diagonal(d));
      return gens;
    }
    case Family::Sp:
      return sp_generators(f, spec.n);
    case Family::SU:
      return su_generators(spec, f);
    case Family::GU: {
      auto gens = su_generators(spec, f);
      Elem w = f.primitive();
      gens.push_back(Matrix::diagonal({w, 1, f.pow(w, -static_cast<std::int64_t>(spec.q))}));
      return gens;
    }
  }
  return {};
}

std::uint64_t classical_order(const ClassicalGroupSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::SL:
      return lie_order('A', spec.n - 1, spec.q).full;
    case Family::GL:
      return checked_mul(lie_order('A', spec.n - 1, spec.q).full, spec.q - 1);
    case Family::Sp:
      return lie_order('C', spec.n / 2, spec.q).full;
    case Family::SU:
      return lie_order('A', spec.n - 1, spec.q, true).full;
    case Family::GU:
      return checked_mul(lie_order('A', spec.n - 1, spec.q, true).full, spec.q + 1);
  }
  return 0;
}

std::uint64_t scalar_count(const ClassicalGroupSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::SL: return std::gcd<std::uint64_t>(spec.n, spec.q - 1);
    case Family::GL: return spec.q - 1;
    case Family::Sp: return std::gcd<std::uint64_t>(2, spec.q - 1);
    case Family::SU: return std::gcd<std::uint64_t>(spec.n, spec.q + 1);
    case Family::GU: return spec.q + 1;
  }
  return 1;
}

LieOrder lie_order(char type, unsigned rank, std::uint64_t q, bool twisted) {
  std::uint64_t p = 0;
  unsigned k = 0;
  if (!prime_power(q, p, k)) throw std::invalid_argument("lie_order: q must be a prime power");
  if (rank == 0) throw std::invalid_argument("lie_order: rank must be positive");
  std::vector<unsigned> degrees;
  // sign[i] = +1 when the factor is q^d - 1, -1 when it is q^d + 1.
  std::vector<int> sign;
  auto push = [&](unsigned d, int s = 1) {
    degrees.push_back(d);
    sign.push_back(s);
  };
  std::uint64_t center = 1;
  const std::uint64_t l = rank;
  switch (type) {
    case 'A':
      for (unsigned d = 2; d <= rank + 1; ++d) push(d, twisted && d % 2 == 1 ? -1 : 1);
      center = std::gcd(l + 1, twisted ? q + 1 : q - 1);
      break;
    case 'B':
    case 'C':
      if (twisted) throw std::invalid_argument("lie_order: no twisted form of B/C in scope");
      for (unsigned i = 1; i <= rank; ++i) push(2 * i);
      center = std::gcd<std::uint64_t>(2, q - 1);
      break;
    case 'D': {
      if (rank < 3) throw std::invalid_argument("lie_order: D needs rank >= 3");
      for (unsigned i = 1; i < rank; ++i) push(2 * i);
      push(rank, twisted ? -1 : 1);
      std::uint64_t ql = ipow(q, rank);
      center = std::gcd<std::uint64_t>(4, twisted ? ql + 1 : ql - 1);
      break;
    }
    case 'E':
      if (rank == 6) {
        for (unsigned d : {2u, 5u, 6u, 8u, 9u, 12u}) push(d, twisted && d % 2 == 1 ? -1 : 1);
        center = std::gcd<std::uint64_t>(3, twisted ? q + 1 : q - 1);
      } else if (rank == 7 && !twisted) {
        for (unsigned d : {2u, 6u, 8u, 10u, 12u, 14u, 18u}) push(d);
        center = std::gcd<std::uint64_t>(2, q - 1);
      } else if (rank == 8 && !twisted) {
        for (unsigned d : {2u, 8u, 12u, 14u, 18u, 20u, 24u, 30u}) push(d);
      } else {
        throw std::invalid_argument("lie_order: unsupported E type");
      }
      break;
    case 'F':
      if (rank != 4 || twisted) throw std::invalid_argument("lie_order: unsupported F type");
      for (unsigned d : {2u, 6u, 8u, 12u}) push(d);
      break;
    case 'G':
      if (rank != 2 || twisted) throw std::invalid_argument("lie_order: unsupported G type");
      for (unsigned d : {2u, 6u}) push(d);
      break;
    default:
      throw std::invalid_argument(std::string("lie_order: unsupported type ") + type);
  }
  if (twisted && type != 'A' && type != 'D' && type != 'E')
    throw std::invalid_argument("lie_order: unsupported twisted type");
  unsigned positive_roots = 0;
  for (unsigned d : degrees) positive_roots += d - 1;
  std::uint64_t order = ipow(q, positive_roots);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    std::uint64_t qd = ipow(q, degrees[i]);
    order = checked_mul(order, sign[i] > 0 ? qd - 1 : qd + 1);
  }
  return {order, center, order / center};
}

Matrix long_root_element(const FiniteField& f, unsigned m, unsigned i, FiniteField::Elem t) {
  if (m == 0 || i < 1 || i > m) throw std::invalid_argument("long_root_element: index out of range");
  const unsigned n = 2 * m;
  return Matrix::elementary(f, n, i - 1, n - i, t);
}

}  // namespace carterlab
