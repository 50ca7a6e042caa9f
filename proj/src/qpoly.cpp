#include "mtrace/qpoly.hpp"

#include <algorithm>
#include <cstdlib>

#include "mtrace/errors.hpp"

namespace mtrace {
namespace qpoly {

QPoly trim(QPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

std::size_t degree(const QPoly& f) { return f.empty() ? 0 : f.size() - 1; }

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  r.resize(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trim(std::move(r));
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  r.resize(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return trim(std::move(r));
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return trim(std::move(r));
}

QPoly scale(const QPoly& a, const mpq_class& c) {
  if (c == 0) return {};
  QPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

DivMod divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  QPoly rem = a;
  QPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  while (rem.size() >= b.size()) {
    mpq_class lead = rem.back() / b.back();
    std::size_t shift = rem.size() - b.size();
    quot[shift] += lead;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= lead * b[i];
    rem = trim(std::move(rem));
    if (rem.empty()) break;
  }
  return {trim(std::move(quot)), std::move(rem)};
}

QPoly monic(QPoly f) {
  f = trim(std::move(f));
  if (f.empty()) return f;
  mpq_class lead = f.back();
  for (auto& c : f) c /= lead;
  return f;
}

QPoly gcd(QPoly a, QPoly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    QPoly r = divmod(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

QPoly derivative(const QPoly& f) {
  QPoly r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * mpq_class(i));
  return trim(std::move(r));
}

mpq_class eval(const QPoly& f, const mpq_class& x) {
  mpq_class r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
  return r;
}

Bezout ext_gcd(QPoly a, QPoly b) {
  QPoly r0 = trim(std::move(a)), r1 = trim(std::move(b));
  QPoly u0 = {mpq_class(1)}, u1 = {};
  QPoly v0 = {}, v1 = {mpq_class(1)};
  while (!r1.empty()) {
    auto dm = divmod(r0, r1);
    QPoly r2 = dm.rem;
    QPoly u2 = sub(u0, mul(dm.quot, u1));
    QPoly v2 = sub(v0, mul(dm.quot, v1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.empty()) return {{}, {}, {}};
  mpq_class lead = r0.back();
  return {monic(std::move(r0)), scale(u0, 1 / lead), scale(v0, 1 / lead)};
}

std::vector<QPoly> squarefree_decomposition(QPoly f) {
  f = monic(trim(std::move(f)));
  std::vector<QPoly> out;
  if (degree(f) == 0) return out;
  QPoly fp = derivative(f);
  QPoly a = gcd(f, fp);
  QPoly b = divmod(f, a).quot;        // product of squarefree parts
  QPoly c = divmod(fp, a).quot;
  QPoly d = sub(c, derivative(b));
  while (degree(b) > 0) {
    QPoly g = gcd(b, d);
    out.push_back(g);
    b = divmod(b, g).quot;
    c = divmod(d, g).quot;
    d = sub(c, derivative(b));
  }
  return out;
}

namespace {

// ---- GF(p) polynomial helpers (small prime, coefficients in [0, p)) ----

using ZpPoly = std::vector<long>;

std::size_t degree_of(const ZpPoly& f) { return f.empty() ? 0 : f.size() - 1; }

ZpPoly zp_trim(ZpPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

long zp_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return ((t % p) + p) % p;
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return zp_trim(std::move(r));
}

// Remainder mod a monic-after-normalization divisor.
ZpPoly zp_mod(ZpPoly a, const ZpPoly& b, long p) {
  long binv = zp_inv(b.back(), p);
  while (a.size() >= b.size()) {
    long lead = (a.back() * binv) % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    a = zp_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

ZpPoly zp_divexact(ZpPoly a, const ZpPoly& b, long p) {
  ZpPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  long binv = zp_inv(b.back(), p);
  while (a.size() >= b.size()) {
    long lead = (a.back() * binv) % p;
    std::size_t shift = a.size() - b.size();
    q[shift] = lead;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    a = zp_trim(std::move(a));
    if (a.empty()) break;
  }
  return zp_trim(std::move(q));
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, long p) {
  a = zp_trim(std::move(a));
  b = zp_trim(std::move(b));
  while (!b.empty()) {
    ZpPoly r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    long inv = zp_inv(a.back(), p);
    for (auto& c : a) c = (c * inv) % p;
  }
  return a;
}

ZpPoly zp_derivative(const ZpPoly& f, long p) {
  ZpPoly r;
  for (std::size_t i = 1; i < f.size(); ++i)
    r.push_back(static_cast<long>((f[i] * static_cast<long>(i)) % p));
  return zp_trim(std::move(r));
}

// x^e mod f over GF(p), by square and multiply.
ZpPoly zp_xpow_mod(unsigned long e, const ZpPoly& f, long p) {
  ZpPoly result = {1};
  ZpPoly base = zp_mod({0, 1}, f, p);
  while (e > 0) {
    if (e & 1) result = zp_mod(zp_mul(result, base, p), f, p);
    base = zp_mod(zp_mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

// Berlekamp factorization of a monic squarefree f over GF(p), p small.
std::vector<ZpPoly> berlekamp(const ZpPoly& f, long p) {
  std::size_t n = degree_of(f);
  std::vector<ZpPoly> factors = {f};
  if (n <= 1) return factors;

  // Frobenius matrix: column i holds x^{i p} mod f.
  FieldSpec gf = FieldSpec::prime_field(static_cast<unsigned long>(p));
  Matrix q(gf, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    ZpPoly xi = zp_xpow_mod(static_cast<unsigned long>(i) * p, f, p);
    for (std::size_t j = 0; j < xi.size(); ++j)
      q.at(j, i) = Scalar::from_int(gf, xi[j]);
  }
  Matrix qmi = q - Matrix::identity(gf, n);
  auto null_vs = kernel_basis(qmi);
  std::size_t r = null_vs.size();  // number of irreducible factors
  if (r <= 1) return factors;

  // Split with gcd(g, v - s) over all Berlekamp subalgebra basis vectors.
  for (const auto& nv : null_vs) {
    if (factors.size() == r) break;
    ZpPoly v(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      v[j] = static_cast<long>(nv.at(j, 0).coeffs()[0].get_num().get_si());
    v = zp_trim(std::move(v));
    if (v.size() <= 1) continue;  // constant vector cannot split
    std::vector<ZpPoly> next;
    for (auto& g : factors) {
      if (g.size() <= 2) {  // linear factor, done
        next.push_back(std::move(g));
        continue;
      }
      std::vector<ZpPoly> pieces;
      ZpPoly rest = g;
      for (long s = 0; s < p && rest.size() > 1; ++s) {
        ZpPoly vs = v;
        vs[0] = ((vs[0] - s) % p + p) % p;
        ZpPoly d = zp_gcd(rest, vs, p);
        if (d.size() > 1 && d.size() < rest.size()) {
          pieces.push_back(d);
          rest = zp_divexact(std::move(rest), d, p);
        }
      }
      if (rest.size() > 1) pieces.push_back(rest);
      for (auto& piece : pieces) next.push_back(std::move(piece));
    }
    factors = std::move(next);
  }
  return factors;
}

// ---- Z/p^k polynomial helpers for Hensel lifting ----

using ZPoly = std::vector<mpz_class>;  // integer coefficients

ZPoly z_trim(ZPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

ZPoly add_z(ZPoly a, const ZPoly& b) {
  a.resize(std::max(a.size(), b.size()), mpz_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return z_trim(std::move(a));
}

ZPoly z_mod(ZPoly f, const mpz_class& m) {
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
  }
  return z_trim(std::move(f));
}

ZPoly z_mul_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return z_mod(std::move(r), m);
}

ZPoly z_sub_mod(ZPoly a, const ZPoly& b, const mpz_class& m) {
  a.resize(std::max(a.size(), b.size()), mpz_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return z_mod(std::move(a), m);
}

// Remainder mod a monic divisor, coefficients mod m.
ZPoly z_rem_monic(ZPoly a, const ZPoly& b, const mpz_class& m) {
  while (a.size() >= b.size()) {
    mpz_class lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    a = z_mod(std::move(a), m);
  }
  return a;
}

ZPoly z_quot_monic(ZPoly a, const ZPoly& b, const mpz_class& m) {
  ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
  while (a.size() >= b.size()) {
    mpz_class lead = a.back() % m;
    if (lead < 0) lead += m;
    std::size_t shift = a.size() - b.size();
    q[shift] = lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    a = z_mod(std::move(a), m);
  }
  return z_trim(std::move(q));
}

struct HenselPair {
  ZPoly g, h;
};

// One linear Hensel step: from f = g h (mod M) with Bezout u g + v h = 1
// (mod p), to f = g' h' (mod M p).  All factors monic.
HenselPair hensel_step(const ZPoly& f, const ZPoly& g, const ZPoly& h,
                       const ZPoly& u, const ZPoly& v, const mpz_class& M,
                       const mpz_class& p) {
  // t = (f - g h) / M  (mod p)
  ZPoly gh = z_mul_mod(g, h, M * p);
  ZPoly diff(std::max(f.size(), gh.size()), mpz_class(0));
  for (std::size_t i = 0; i < f.size(); ++i) diff[i] += f[i];
  for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
  ZPoly t;
  for (auto& c : diff) {
    mpz_class q = c / M;  // exact by construction mod Mp
    t.push_back(q);
  }
  t = z_mod(std::move(t), p);
  // dg = (t v) mod g;  dh = t u + quot(t v, g) * h  (mod p)
  ZPoly tv = z_mul_mod(t, v, p);
  ZPoly dg = z_rem_monic(tv, g, p);
  ZPoly quot = z_quot_monic(z_mul_mod(t, v, p), g, p);
  ZPoly dh = z_mod(add_z(z_mul_mod(t, u, p), z_mul_mod(quot, h, p)), p);
  HenselPair out;
  out.g = g;
  out.g.resize(std::max(out.g.size(), dg.size()), mpz_class(0));
  for (std::size_t i = 0; i < dg.size(); ++i) out.g[i] += M * dg[i];
  out.h = h;
  out.h.resize(std::max(out.h.size(), dh.size()), mpz_class(0));
  for (std::size_t i = 0; i < dh.size(); ++i) out.h[i] += M * dh[i];
  out.g = z_mod(std::move(out.g), M * p);
  out.h = z_mod(std::move(out.h), M * p);
  return out;
}

// Lift the factorization f = prod(factors) from mod p to mod p^k, monic
// factors, by a balanced two-way split at each level.
std::vector<ZPoly> hensel_lift(const ZPoly& f, std::vector<ZPoly> factors,
                               long p, unsigned k) {
  if (factors.size() == 1) {
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), k);
    return {z_mod(f, pk)};
  }
  std::size_t half = factors.size() / 2;
  mpz_class pz(p);
  ZPoly g = {mpz_class(1)}, h = {mpz_class(1)};
  for (std::size_t i = 0; i < half; ++i) g = z_mul_mod(g, factors[i], pz);
  for (std::size_t i = half; i < factors.size(); ++i)
    h = z_mul_mod(h, factors[i], pz);

  // Bezout of g, h mod p via the GF(p) extended Euclid.
  ZpPoly gp(g.size()), hp(h.size());
  for (std::size_t i = 0; i < g.size(); ++i) gp[i] = g[i].get_si();
  for (std::size_t i = 0; i < h.size(); ++i) hp[i] = h[i].get_si();
  ZpPoly r0 = gp, r1 = hp, u0 = {1}, u1 = {}, v0 = {}, v1 = {1};
  auto zp_submul = [&](const ZpPoly& a, const ZpPoly& q, const ZpPoly& b) {
    ZpPoly prod = zp_mul(q, b, p);
    ZpPoly r = a;
    r.resize(std::max(r.size(), prod.size()), 0);
    for (std::size_t i = 0; i < prod.size(); ++i)
      r[i] = ((r[i] - prod[i]) % p + p) % p;
    return zp_trim(std::move(r));
  };
  while (!r1.empty()) {
    ZpPoly q = zp_divexact(r0, r1, p);
    ZpPoly r2 = zp_submul(r0, q, r1);
    ZpPoly u2 = zp_submul(u0, q, u1);
    ZpPoly v2 = zp_submul(v0, q, v1);
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  // r0 = gcd = constant (g, h coprime mod p); normalize so u g + v h = 1.
  long inv = zp_inv(r0[0], p);
  for (auto& c : u0) c = (c * inv) % p;
  for (auto& c : v0) c = (c * inv) % p;
  ZPoly u(u0.size()), v(v0.size());
  for (std::size_t i = 0; i < u0.size(); ++i) u[i] = u0[i];
  for (std::size_t i = 0; i < v0.size(); ++i) v[i] = v0[i];

  mpz_class M(p);
  ZPoly gl = g, hl = h;
  for (unsigned lvl = 1; lvl < k; ++lvl) {
    auto pair = hensel_step(f, gl, hl, u, v, M, pz);
    gl = std::move(pair.g);
    hl = std::move(pair.h);
    M *= p;
  }

  std::vector<ZPoly> left(factors.begin(), factors.begin() + half);
  std::vector<ZPoly> right(factors.begin() + half, factors.end());
  auto lifted_left = hensel_lift(gl, std::move(left), p, k);
  auto lifted_right = hensel_lift(hl, std::move(right), p, k);
  lifted_left.insert(lifted_left.end(), lifted_right.begin(),
                     lifted_right.end());
  return lifted_left;
}

// Factor a monic squarefree integer polynomial into monic irreducible
// integer factors (Zassenhaus).
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
  std::size_t n = f.size() - 1;
  if (n <= 1) return {f};

  // Prime with f squarefree mod p.
  static const long kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                 37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
  long p = 0;
  ZpPoly fp;
  for (long cand : kPrimes) {
    fp.assign(f.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      mpz_class c = f[i] % cand;
      if (c < 0) c += cand;
      fp[i] = c.get_si();
    }
    fp = zp_trim(std::move(fp));
    if (fp.size() != f.size()) continue;  // degree dropped: p | lc impossible
    ZpPoly d = zp_gcd(fp, zp_derivative(fp, cand), cand);
    if (d.size() == 1) {
      p = cand;
      break;
    }
  }
  if (p == 0) throw Error("factorization: no good small prime found");

  auto modular = berlekamp(fp, p);
  if (modular.size() == 1) return {f};

  // Coefficient bound (Mignotte) for monic factors: 2^n * ||f||_2.
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class bound = 1;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  bound = (root + 1) << static_cast<unsigned long>(n);
  mpz_class need = 2 * bound + 1;
  unsigned k = 1;
  mpz_class pk(p);
  while (pk < need) {
    pk *= p;
    ++k;
  }

  std::vector<ZPoly> zmods;
  for (const auto& g : modular) {
    ZPoly zg(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) zg[i] = g[i];
    zmods.push_back(std::move(zg));
  }
  auto lifted = hensel_lift(f, std::move(zmods), p, k);

  // Subset recombination over the lifted modular factors.
  auto symmetric = [&](ZPoly g) {
    for (auto& c : g) {
      c %= pk;
      if (c < 0) c += pk;
      if (2 * c > pk) c -= pk;
    }
    return z_trim(std::move(g));
  };
  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<ZPoly> pool = lifted;
  bool progress = true;
  while (pool.size() > 0) {
    if (pool.size() == 1 || !progress) {
      // Whatever remains is irreducible.
      result.push_back(rest);
      break;
    }
    progress = false;
    std::size_t m = pool.size();
    bool found = false;
    for (std::size_t sz = 1; sz <= m / 2 && !found; ++sz) {
      // Enumerate subsets of the pool of size sz.
      std::vector<std::size_t> idx(sz);
      for (std::size_t i = 0; i < sz; ++i) idx[i] = i;
      while (true) {
        ZPoly cand = {mpz_class(1)};
        for (auto i : idx) cand = z_mul_mod(cand, pool[i], pk);
        cand = symmetric(std::move(cand));
        // Trial division over Z.
        if (!cand.empty() && cand.back() == 1) {
          ZPoly q = z_quot_monic(rest, cand, pk);
          q = symmetric(std::move(q));
          ZPoly prod = z_mul_mod(q, cand, pk);
          ZPoly check = symmetric(z_sub_mod(rest, prod, pk));
          // Exact integer check: rest == q * cand without modular wrap.
          bool exact = check.empty();
          if (exact) {
            ZPoly full(rest.size(), mpz_class(0));
            for (std::size_t i = 0; i < q.size(); ++i)
              for (std::size_t j = 0; j < cand.size(); ++j)
                full[i + j] += q[i] * cand[j];
            exact = true;
            for (std::size_t i = 0; i < rest.size(); ++i)
              if (full[i] != rest[i]) {
                exact = false;
                break;
              }
          }
          if (exact) {
            result.push_back(cand);
            rest = q;
            std::vector<ZPoly> remaining;
            for (std::size_t i = 0, t = 0; i < pool.size(); ++i) {
              if (t < idx.size() && idx[t] == i) {
                ++t;
                continue;
              }
              remaining.push_back(pool[i]);
            }
            pool = std::move(remaining);
            found = progress = true;
            break;
          }
        }
        // Next subset.
        long pos = static_cast<long>(sz) - 1;
        while (pos >= 0 && idx[pos] == m - sz + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (std::size_t i = pos + 1; i < sz; ++i) idx[i] = idx[i - 1] + 1;
      }
    }
    if (!progress) {
      result.push_back(rest);
      break;
    }
    if (pool.empty()) break;
    if (rest.size() <= 1) break;
  }
  return result;
}

}  // namespace

std::vector<QPoly> factor_rational(const QPoly& f_in) {
  QPoly f = trim(f_in);
  if (f.empty()) throw Error("cannot factor the zero polynomial");
  std::vector<QPoly> result;
  if (degree(f) == 0) return result;

  auto sq = squarefree_decomposition(f);
  for (std::size_t mult_idx = 0; mult_idx < sq.size(); ++mult_idx) {
    QPoly part = sq[mult_idx];
    if (degree(part) == 0) continue;
    // Make monic integer by x -> x / L with L = lcm of denominators.
    part = monic(std::move(part));
    mpz_class lcm_den = 1;
    for (const auto& c : part)
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
              c.get_den().get_mpz_t());
    std::size_t n = degree(part);
    ZPoly zf(n + 1);
    mpz_class power = 1;  // L^(n - i) multiplier
    for (std::size_t i = 0; i <= n; ++i) {
      mpq_class c = part[n - i] * mpq_class(power);
      if (c.get_den() != 1) throw Error("monic integer scaling failed");
      zf[n - i] = c.get_num();
      power *= lcm_den;
    }
    auto zfactors = factor_monic_squarefree(zf);
    for (const auto& zg : zfactors) {
      // Map back: g(x) -> g(L x) / L^deg, monic rational.
      QPoly g(zg.size());
      mpq_class scale_back = 1;
      std::size_t d = zg.size() - 1;
      for (std::size_t i = 0; i <= d; ++i) {
        g[d - i] = mpq_class(zg[d - i]) / mpq_class(scale_back);
        scale_back *= lcm_den;
      }
      g = monic(std::move(g));
      for (std::size_t rep = 0; rep <= mult_idx; ++rep) result.push_back(g);
    }
  }
  return result;
}

QPoly minimal_polynomial(const Matrix& a) {
  if (a.field().kind != FieldKind::Rationals)
    throw FieldMismatch("minimal_polynomial expects a rational matrix");
  if (a.rows() != a.cols())
    throw DimensionMismatch("minimal_polynomial of non-square matrix");
  std::size_t n = a.rows();
  // Rows of powers vec(I), vec(A), ...; first linear dependence gives the
  // minimal polynomial.
  Matrix pow = Matrix::identity(a.field(), n);
  std::vector<Matrix> pows = {pow};
  for (std::size_t d = 1; d <= n; ++d) {
    pow = pow * a;
    pows.push_back(pow);
    Matrix sys(a.field(), n * n, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < n * n; ++k)
        sys.at(k, j) = pows[j].entries()[k];
    Matrix rhs = pows[d].vec();
    auto sol = solve_all(sys, rhs);
    if (sol.particular) {
      QPoly p(d + 1, mpq_class(0));
      p[d] = 1;
      for (std::size_t j = 0; j < d; ++j)
        p[j] = -sol.particular->at(j, 0).coeffs()[0];
      return p;
    }
  }
  throw Error("minimal polynomial not found (unreachable)");
}

Matrix flatten_to_rationals(const Matrix& a) {
  if (a.field().kind == FieldKind::Rationals) return a;
  if (a.field().kind != FieldKind::Cyclotomic)
    throw FieldMismatch("flatten_to_rationals: GF(p) not supported");
  unsigned long deg = a.field().degree();
  FieldSpec q = FieldSpec::rationals();
  const FieldSpec cyc = a.field();
  Scalar zeta = Scalar::zeta(cyc);
  Matrix out(q, a.rows() * deg, a.cols() * deg);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& s = a.at(i, j);
      if (s.is_zero()) continue;
      // Column c of the block: coefficients of s * zeta^c.
      Scalar power = s;
      for (unsigned long c = 0; c < deg; ++c) {
        for (unsigned long r = 0; r < deg; ++r)
          out.at(i * deg + r, j * deg + c) =
              Scalar::from_mpq(q, power.coeffs()[r]);
        if (c + 1 < deg) power = power * zeta;
      }
    }
  return out;
}

Matrix eval_on_matrix(const QPoly& p, const Matrix& a) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("eval_on_matrix: non-square matrix");
  Matrix r = Matrix::zero(a.field(), a.rows(), a.rows());
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    r = r * a;
    if (*it != 0) {
      Matrix c = Matrix::identity(a.field(), a.rows()) *
                 Scalar::from_mpq(a.field(), *it);
      r = r + c;
    }
  }
  return r;
}

}  // namespace qpoly
}  // namespace mtrace
