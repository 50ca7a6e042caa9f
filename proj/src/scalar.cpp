#include "mtrace/scalar.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace mtrace {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n, m = n;
  for (unsigned long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      result -= result / d;
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// Quotient of exact polynomial division (remainder must be zero).
std::vector<mpq_class> poly_exact_div(std::vector<mpq_class> num,
                                      const std::vector<mpq_class>& den) {
  std::vector<mpq_class> q(num.size() >= den.size()
                               ? num.size() - den.size() + 1
                               : 0,
                           mpq_class(0));
  while (num.size() >= den.size()) {
    mpq_class lead = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    q[shift] = lead;
    for (std::size_t i = 0; i < den.size(); ++i)
      num[shift + i] -= lead * den[i];
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (num.empty()) break;
  }
  return q;
}

std::map<unsigned long, std::vector<mpq_class>>& phi_cache() {
  static std::map<unsigned long, std::vector<mpq_class>> cache;
  return cache;
}
std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

const std::vector<mpq_class>& phi_locked(unsigned long n) {
  auto it = phi_cache().find(n);
  if (it != phi_cache().end()) return it->second;
  std::vector<mpq_class> phi;
  if (n == 1) {
    phi = {mpq_class(-1), mpq_class(1)};  // x - 1
  } else {
    // (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<mpq_class> xn1(n + 1, mpq_class(0));
    xn1[0] = -1;
    xn1[n] = 1;
    for (unsigned long d = 1; d < n; ++d)
      if (n % d == 0) xn1 = poly_exact_div(std::move(xn1), phi_locked(d));
    phi = std::move(xn1);
  }
  return phi_cache().emplace(n, std::move(phi)).first->second;
}

}  // namespace

const std::vector<mpq_class>& cyclotomic_polynomial(unsigned long n) {
  std::lock_guard<std::mutex> lock(phi_mutex());
  return phi_locked(n);
}

FieldSpec FieldSpec::prime_field(unsigned long p) {
  if (!is_prime(p)) throw SchemaError("GF(p): " + std::to_string(p) + " is not prime");
  return {FieldKind::PrimeField, p, 0};
}

FieldSpec FieldSpec::cyclotomic(unsigned long n) {
  if (n < 1) throw SchemaError("Cyclotomic(n) requires n >= 1");
  return {FieldKind::Cyclotomic, 0, n};
}

unsigned long FieldSpec::degree() const {
  return kind == FieldKind::Cyclotomic ? euler_phi(n) : 1;
}

std::string FieldSpec::str() const {
  switch (kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::PrimeField: return "GF(" + std::to_string(p) + ")";
    case FieldKind::Cyclotomic: return "Q(zeta_" + std::to_string(n) + ")";
  }
  return "?";
}

Scalar Scalar::zero(const FieldSpec& f) {
  return Scalar(f, std::vector<mpq_class>(f.degree(), mpq_class(0)));
}

Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, long m) {
  return from_mpq(f, mpq_class(m));
}

Scalar Scalar::from_mpq(const FieldSpec& f, const mpq_class& q) {
  std::vector<mpq_class> c(f.degree(), mpq_class(0));
  c[0] = q;
  Scalar s(f, std::move(c));
  s.reduce();
  return s;
}

Scalar Scalar::from_coeffs(const FieldSpec& f, std::vector<mpq_class> c) {
  Scalar s(f, std::move(c));
  s.reduce();
  return s;
}

Scalar Scalar::zeta(const FieldSpec& f) {
  if (f.kind != FieldKind::Cyclotomic)
    throw FieldMismatch("zeta only exists in cyclotomic fields");
  std::vector<mpq_class> c(f.degree() > 1 ? f.degree() : 1, mpq_class(0));
  if (f.degree() > 1) {
    c[1] = 1;
    return Scalar(f, std::move(c));
  }
  // phi(n) = 1: n is 1 or 2, zeta is 1 or -1.
  c[0] = (f.n == 1) ? 1 : -1;
  return Scalar(f, std::move(c));
}

void Scalar::reduce() {
  switch (field_.kind) {
    case FieldKind::Rationals:
      c_.resize(1, mpq_class(0));
      break;
    case FieldKind::PrimeField: {
      c_.resize(1, mpq_class(0));
      // Residue of a/b is a * b^{-1} mod p; b is coprime to p by exactness.
      mpz_class p(static_cast<unsigned long>(field_.p));
      mpz_class num = c_[0].get_num() % p;
      if (num < 0) num += p;
      mpz_class den = c_[0].get_den() % p;
      if (den == 0)
        throw DivisionByZero("denominator divisible by the characteristic");
      mpz_class dinv;
      if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw DivisionByZero("denominator divisible by the characteristic");
      mpz_class r = (num * dinv) % p;
      if (r < 0) r += p;
      c_[0] = mpq_class(r);
      break;
    }
    case FieldKind::Cyclotomic: {
      const auto& phi = cyclotomic_polynomial(field_.n);
      std::size_t deg = phi.size() - 1;  // = euler_phi(n)
      // Reduce mod Phi_n (monic), then fix the length at deg.
      while (c_.size() > deg) {
        mpq_class lead = c_.back();
        c_.pop_back();
        if (lead == 0) continue;
        std::size_t shift = c_.size() - deg;
        for (std::size_t i = 0; i < deg; ++i) c_[shift + i] -= lead * phi[i];
      }
      c_.resize(deg, mpq_class(0));
      break;
    }
  }
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatch("operands live in " + field_.str() + " and " +
                        o.field_.str());
}

bool Scalar::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool Scalar::is_one() const { return *this == one(field_); }

bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ && c_ == o.c_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  std::vector<mpq_class> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
  Scalar s(field_, std::move(c));
  if (field_.kind == FieldKind::PrimeField) s.reduce();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  std::vector<mpq_class> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  Scalar s(field_, std::move(c));
  if (field_.kind == FieldKind::PrimeField) s.reduce();
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (field_.kind != FieldKind::Cyclotomic) {
    Scalar s(field_, {c_[0] * o.c_[0]});
    s.reduce();
    return s;
  }
  std::vector<mpq_class> prod(2 * c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  Scalar s(field_, std::move(prod));
  s.reduce();
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + field_.str());
  switch (field_.kind) {
    case FieldKind::Rationals:
      return Scalar(field_, {1 / c_[0]});
    case FieldKind::PrimeField: {
      mpz_class p(static_cast<unsigned long>(field_.p));
      mpz_class r;
      mpz_invert(r.get_mpz_t(), c_[0].get_num().get_mpz_t(), p.get_mpz_t());
      if (r < 0) r += p;
      return Scalar(field_, {mpq_class(r)});
    }
    case FieldKind::Cyclotomic: {
      // Extended Euclid in Q[x]: u * this + v * Phi_n = 1, so u is the
      // inverse (Phi_n is irreducible over Q, so the gcd is 1).
      const auto& phi = cyclotomic_polynomial(field_.n);
      std::vector<mpq_class> r0 = phi, r1 = c_;
      while (!r1.empty() && r1.back() == 0) r1.pop_back();
      std::vector<mpq_class> u0 = {mpq_class(0)}, u1 = {mpq_class(1)};
      auto trim = [](std::vector<mpq_class>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
      };
      while (!(r1.size() == 1)) {
        // r0 = q * r1 + r2
        std::vector<mpq_class> q(r0.size() - r1.size() + 1, mpq_class(0));
        std::vector<mpq_class> r2 = r0;
        while (r2.size() >= r1.size()) {
          mpq_class lead = r2.back() / r1.back();
          std::size_t shift = r2.size() - r1.size();
          q[shift] += lead;
          for (std::size_t i = 0; i < r1.size(); ++i)
            r2[shift + i] -= lead * r1[i];
          trim(r2);
          if (r2.empty()) break;
        }
        // u2 = u0 - q * u1
        std::vector<mpq_class> u2 = u0;
        u2.resize(std::max(u2.size(), q.size() + u1.size()), mpq_class(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
          if (q[i] == 0) continue;
          for (std::size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
        }
        trim(u2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        if (r1.empty())
          throw Error("cyclotomic inverse: unexpected zero remainder");
      }
      // r1 is a nonzero constant c; inverse = u1 / c.
      mpq_class cst = r1[0];
      for (auto& q : u1) q /= cst;
      Scalar s(field_, std::move(u1));
      s.reduce();
      return s;
    }
  }
  throw Error("unreachable");
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

mpq_class Scalar::rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) throw Error("scalar is not rational: " + str());
  return c_[0];
}

std::string Scalar::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  if (s.field().kind != FieldKind::Cyclotomic) return os << s.coeffs()[0];
  bool first = true;
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    const auto& q = s.coeffs()[i];
    if (q == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0)
      os << q;
    else if (i == 1)
      os << q << "*z";
    else
      os << q << "*z^" << i;
  }
  if (first) os << "0";
  return os;
}

}  // namespace mtrace
