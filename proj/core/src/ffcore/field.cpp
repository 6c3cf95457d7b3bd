#include "gfl/ffcore/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace gfl::ff {

namespace detail {

struct FieldImpl {
  std::uint32_t p = 0;
  unsigned e = 1;
  std::uint32_t q = 0;
  std::vector<Elem> modulus;  // monic, size e + 1
  std::vector<std::uint32_t> pw;  // p^i, i < e
  // Tables, filled for small extension fields only.
  std::vector<Elem> add_table;
  std::vector<Elem> mul_table;
  std::vector<Elem> inv_table;

  Elem add_raw(Elem a, Elem b) const {
    if (e == 1) {
      Elem s = a + b;
      return s >= p ? s - p : s;
    }
    Elem r = 0;
    for (unsigned i = 0; i < e; ++i) {
      const Elem da = a % p, db = b % p;
      a /= p;
      b /= p;
      r += ((da + db) % p) * pw[i];
    }
    return r;
  }

  Elem neg_raw(Elem a) const {
    if (e == 1) return a == 0 ? 0 : p - a;
    Elem r = 0;
    for (unsigned i = 0; i < e; ++i) {
      const Elem d = a % p;
      a /= p;
      r += ((p - d) % p) * pw[i];
    }
    return r;
  }

  Elem mul_raw(Elem a, Elem b) const {
    if (e == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p);
    std::vector<std::uint64_t> da(e), db(e), prod(2 * e - 1, 0);
    for (unsigned i = 0; i < e; ++i) {
      da[i] = a % p;
      a /= p;
      db[i] = b % p;
      b /= p;
    }
    for (unsigned i = 0; i < e; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    // Reduce by the monic modulus from the top.
    for (unsigned k = 2 * e - 2; k >= e; --k) {
      const std::uint64_t c = prod[k];
      if (c != 0) {
        prod[k] = 0;
        for (unsigned i = 0; i < e; ++i) {
          prod[k - e + i] = (prod[k - e + i] + (p - c) * modulus[i]) % p;
        }
      }
      if (k == e) break;
    }
    Elem r = 0;
    for (unsigned i = 0; i < e; ++i) r += static_cast<Elem>(prod[i]) * pw[i];
    return r;
  }

  Elem pow_raw(Elem a, std::uint64_t n) const {
    Elem r = 1;
    while (n > 0) {
      if (n & 1U) r = mul_raw(r, a);
      a = mul_raw(a, a);
      n >>= 1U;
    }
    return r;
  }
};

}  // namespace detail

namespace {

constexpr std::uint32_t kTableLimit = 343;

std::shared_ptr<const detail::FieldImpl> build(std::uint32_t p, std::vector<Elem> modulus) {
  if (!is_prime_number(p)) throw std::invalid_argument("field characteristic must be prime");
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw std::invalid_argument("field modulus must be monic of degree >= 1");
  }
  auto impl = std::make_shared<detail::FieldImpl>();
  impl->p = p;
  impl->e = static_cast<unsigned>(modulus.size() - 1);
  impl->modulus = std::move(modulus);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < impl->e; ++i) {
    impl->pw.push_back(static_cast<std::uint32_t>(q));
    q *= p;
    if (q > (1ULL << 31)) throw std::invalid_argument("field too large");
  }
  impl->q = static_cast<std::uint32_t>(q);
  if (impl->e > 1 && impl->q <= kTableLimit) {
    const std::uint32_t n = impl->q;
    impl->add_table.resize(static_cast<std::size_t>(n) * n);
    impl->mul_table.resize(static_cast<std::size_t>(n) * n);
    impl->inv_table.assign(n, 0);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        impl->add_table[a * n + b] = impl->add_raw(a, b);
        const Elem m = impl->mul_raw(a, b);
        impl->mul_table[a * n + b] = m;
        if (m == 1) impl->inv_table[a] = b;
      }
    }
  }
  return impl;
}

using CacheKey = std::tuple<std::uint32_t, std::vector<Elem>>;

std::shared_ptr<const detail::FieldImpl> cached(std::uint32_t p, std::vector<Elem> modulus) {
  static std::mutex mu;
  static std::map<CacheKey, std::shared_ptr<const detail::FieldImpl>> cache;
  CacheKey key{p, modulus};
  std::lock_guard lock(mu);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto impl = build(p, std::move(modulus));
  cache.emplace(std::move(key), impl);
  return impl;
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<Elem> conway_polynomial(std::uint32_t p, unsigned e) {
  if (e == 1) {
    return {0, 1};
  }
  static const std::map<std::pair<std::uint32_t, unsigned>, std::vector<Elem>> table = {
      {{2, 2}, {1, 1, 1}}, {{2, 3}, {1, 1, 0, 1}}, {{3, 2}, {2, 2, 1}}, {{3, 3}, {1, 2, 0, 1}},
      {{5, 2}, {2, 4, 1}}, {{5, 3}, {3, 3, 0, 1}}, {{7, 2}, {3, 6, 1}}, {{7, 3}, {4, 0, 6, 1}},
  };
  auto it = table.find({p, e});
  return it == table.end() ? std::vector<Elem>{} : it->second;
}

Field::Field() : impl_(cached(3, {0, 1})) {}

Field Field::prime(std::uint32_t p) { return Field(cached(p, {0, 1})); }

Field Field::galois(std::uint32_t p, unsigned e) {
  if (e == 0) throw std::invalid_argument("extension degree must be >= 1");
  if (e == 1) return prime(p);
  auto mod = conway_polynomial(p, e);
  if (mod.empty()) throw std::invalid_argument("no Conway polynomial stored for this (p, e)");
  return Field(cached(p, std::move(mod)));
}

Field Field::quotient(std::uint32_t p, std::vector<Elem> modulus) {
  if (modulus.size() == 2) return prime(p);
  for (auto& c : modulus) c %= p;
  return Field(cached(p, std::move(modulus)));
}

std::uint32_t Field::characteristic() const { return impl_->p; }
unsigned Field::degree() const { return impl_->e; }
std::uint32_t Field::order() const { return impl_->q; }
const std::vector<Elem>& Field::modulus() const { return impl_->modulus; }

std::string Field::name() const {
  if (impl_->e == 1) return "GF(" + std::to_string(impl_->p) + ")";
  return "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->e) + ")";
}

Elem Field::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(impl_->p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

Elem Field::generator() const { return impl_->e == 1 ? 0 : impl_->p; }

Elem Field::add(Elem a, Elem b) const {
  if (!impl_->add_table.empty()) return impl_->add_table[a * impl_->q + b];
  return impl_->add_raw(a, b);
}

Elem Field::neg(Elem a) const { return impl_->neg_raw(a); }

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (!impl_->mul_table.empty()) return impl_->mul_table[a * impl_->q + b];
  return impl_->mul_raw(a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  if (!impl_->inv_table.empty()) return impl_->inv_table[a];
  return impl_->pow_raw(a, impl_->q - 2);
}

Elem Field::pow(Elem a, std::uint64_t n) const {
  Elem r = 1;
  while (n > 0) {
    if (n & 1U) r = mul(r, a);
    a = mul(a, a);
    n >>= 1U;
  }
  return r;
}

std::vector<Elem> Field::digits(Elem a) const {
  std::vector<Elem> d(impl_->e);
  for (unsigned i = 0; i < impl_->e; ++i) {
    d[i] = a % impl_->p;
    a /= impl_->p;
  }
  return d;
}

Elem Field::from_digits(std::span<const Elem> d) const {
  Elem r = 0;
  for (unsigned i = 0; i < impl_->e && i < d.size(); ++i) r += (d[i] % impl_->p) * impl_->pw[i];
  return r;
}

bool Field::operator==(const Field& o) const {
  return impl_ == o.impl_ || (impl_->p == o.impl_->p && impl_->modulus == o.impl_->modulus);
}

}  // namespace gfl::ff
