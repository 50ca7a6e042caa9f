#pragma once

#include <random>

#include "mtrace/module.hpp"

namespace mtrace {

// Deterministic sampler (fixed engine, no library distributions, so that
// identical seeds give identical streams on every platform).
class Sampler {
 public:
  explicit Sampler(unsigned long seed) : eng_(seed) {}

  long small_int(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(eng_() % static_cast<unsigned long>(
                                              hi - lo + 1));
  }

  // Small integer combinations of powers of zeta for cyclotomic fields,
  // small integers otherwise.
  Scalar small_scalar(const FieldSpec& f) {
    unsigned long deg = f.degree();
    std::vector<mpq_class> c(deg);
    for (unsigned long i = 0; i < deg; ++i) c[i] = small_int(-3, 3);
    return Scalar::from_coeffs(f, std::move(c));
  }

  // Random combination of a hom-space basis; nonzero whenever the basis is
  // nonempty (retry a few times, then fall back to the first basis element).
  Morphism random_hom(const std::vector<Morphism>& basis) {
    if (basis.empty()) throw Error("random_hom: empty hom space");
    const FieldSpec f = basis[0].mat.field();
    for (int attempt = 0; attempt < 8; ++attempt) {
      Matrix acc(f, basis[0].mat.rows(), basis[0].mat.cols());
      for (const auto& b : basis) {
        long c = small_int(-3, 3);
        if (c != 0) acc = acc + b.mat * Scalar::from_int(f, c);
      }
      if (!acc.is_zero()) return {basis[0].dom, basis[0].cod, std::move(acc)};
    }
    return basis[0];
  }

  Morphism random_hom(const ModulePtr& m, const ModulePtr& n) {
    return random_hom(hom_space(m, n));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace mtrace
