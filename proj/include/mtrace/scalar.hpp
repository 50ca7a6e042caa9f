#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mtrace/errors.hpp"

namespace mtrace {

enum class FieldKind : std::uint8_t { Rationals, PrimeField, Cyclotomic };

// One of Q, GF(p), or Q(zeta_n).  Cheap value type; the cyclotomic modulus
// Phi_n is computed once and cached process-wide.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  unsigned long p = 0;  // PrimeField modulus
  unsigned long n = 0;  // Cyclotomic conductor

  static FieldSpec rationals() { return {FieldKind::Rationals, 0, 0}; }
  static FieldSpec prime_field(unsigned long p);
  static FieldSpec cyclotomic(unsigned long n);

  bool operator==(const FieldSpec&) const = default;

  bool characteristic_zero() const { return kind != FieldKind::PrimeField; }
  // Degree of the field as a vector space over its prime field / over Q.
  unsigned long degree() const;
  std::string str() const;
};

// Coefficients of Phi_n, ascending degree, monic.  Computed by dividing
// x^n - 1 by Phi_d for all proper divisors d | n.
const std::vector<mpq_class>& cyclotomic_polynomial(unsigned long n);

// An element of one of the supported fields, in canonical form:
//   Rationals   -- one reduced fraction
//   PrimeField  -- one residue in [0, p)
//   Cyclotomic  -- phi(n) rational coefficients, reduced mod Phi_n
// Canonical means: equal values have equal representations.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), c_(1, mpq_class(0)) {}
  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  // The image of the integer m under the unique ring map Z -> field.
  static Scalar from_int(const FieldSpec& f, long m);
  static Scalar from_mpq(const FieldSpec& f, const mpq_class& q);
  // Coefficient vector c[0] + c[1] z + ... for Cyclotomic (reduced here),
  // or a singleton for the other kinds.
  static Scalar from_coeffs(const FieldSpec& f, std::vector<mpq_class> c);
  // zeta, the distinguished root of Phi_n.  Cyclotomic fields only.
  static Scalar zeta(const FieldSpec& f);

  const FieldSpec& field() const { return field_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  // The rational value of a Rationals scalar (or of a constant cyclotomic).
  mpq_class rational() const;

  std::string str() const;

 private:
  Scalar(FieldSpec f, std::vector<mpq_class> c)
      : field_(f), c_(std::move(c)) {}
  void check_same_field(const Scalar& o) const;
  void reduce();

  FieldSpec field_;
  std::vector<mpq_class> c_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace mtrace
