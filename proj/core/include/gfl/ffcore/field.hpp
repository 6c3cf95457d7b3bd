#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace gfl::ff {

/// Raw field element. For GF(p) this is the residue in [0, p); for GF(p^e)
/// it is the base-p encoding sum c_i p^i of the coefficient vector of the
/// polynomial residue c_0 + c_1 a + ... + c_{e-1} a^{e-1}.
using Elem = std::uint32_t;

namespace detail {
struct FieldImpl;
}

/// A finite field GF(p^e). Cheap to copy; all copies share immutable tables.
///
/// Extension fields built with galois() use the Conway polynomial table for
/// p <= 7, e <= 3. quotient() builds GF(p)[u]/(pi) for an arbitrary monic
/// irreducible pi (used for residue fields of vertical plane curves).
class Field {
 public:
  /// GF(3). A default-constructed field is valid so that value types holding
  /// a Field stay regular.
  Field();

  static Field prime(std::uint32_t p);
  static Field galois(std::uint32_t p, unsigned e);
  /// `modulus` is monic, low-to-high coefficients over GF(p), degree >= 1.
  /// Irreducibility is the caller's responsibility (see residue_field).
  static Field quotient(std::uint32_t p, std::vector<Elem> modulus);

  std::uint32_t characteristic() const;
  unsigned degree() const;
  std::uint32_t order() const;
  bool is_prime() const { return degree() == 1; }
  /// Monic defining polynomial, low-to-high; {0, 1} for prime fields.
  const std::vector<Elem>& modulus() const;
  std::string name() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const;
  /// The element a (class of u) generating GF(p^e) over GF(p); 0 when e = 1.
  Elem generator() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t n) const;

  std::vector<Elem> digits(Elem a) const;
  Elem from_digits(std::span<const Elem> d) const;

  bool operator==(const Field& o) const;
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::FieldImpl> impl_;
};

bool is_prime_number(std::uint64_t n);

/// Conway polynomial for GF(p^e), low-to-high, or empty if outside the table.
std::vector<Elem> conway_polynomial(std::uint32_t p, unsigned e);

/// Value-semantic element bundled with its field; convenient in tests and at
/// API boundaries. Hot loops use Field + Elem directly.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(Field f, Elem v) : field_(std::move(f)), v_(v) {}
  static FieldElem from_int(const Field& f, std::int64_t v) { return {f, f.from_int(v)}; }

  const Field& field() const { return field_; }
  Elem value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FieldElem operator+(const FieldElem& o) const { return {field_, field_.add(v_, o.v_)}; }
  FieldElem operator-(const FieldElem& o) const { return {field_, field_.sub(v_, o.v_)}; }
  FieldElem operator-() const { return {field_, field_.neg(v_)}; }
  FieldElem operator*(const FieldElem& o) const { return {field_, field_.mul(v_, o.v_)}; }
  FieldElem operator/(const FieldElem& o) const { return {field_, field_.div(v_, o.v_)}; }
  FieldElem inverse() const { return {field_, field_.inv(v_)}; }
  FieldElem pow(std::uint64_t n) const { return {field_, field_.pow(v_, n)}; }

  bool operator==(const FieldElem& o) const { return v_ == o.v_ && field_ == o.field_; }

 private:
  Field field_;
  Elem v_ = 0;
};

}  // namespace gfl::ff
