#pragma once

/**
 * @file random.hpp
 * @brief Seeded generators for random classes.
 *
 * Draws use mt19937_64 with plain modular reduction so that a seed gives the
 * same stream on every standard library.
 */

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hhcross/hhalgebra.hpp"
#include "hhcross/symplectic.hpp"

namespace hhcross {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }

  Fp nonzero(std::uint32_t p) { return Fp(p, 1 + static_cast<std::int64_t>(below(p - 1))); }
  Fp scalar(std::uint32_t p) { return Fp(p, static_cast<std::int64_t>(below(p))); }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 engine_;
};

struct RandomClassOptions {
  unsigned max_poly_degree = 3;
  std::size_t max_terms = 3;
  std::size_t max_monomials = 3;
};

inline Polynomial random_polynomial(Rng& rng, std::size_t num_vars, std::uint32_t p, unsigned max_degree,
                                    std::size_t max_monomials) {
  Polynomial f(num_vars, p);
  const std::size_t count = 1 + rng.below(max_monomials);
  for (std::size_t k = 0; k < count; ++k) {
    const auto monos = monomials_of_degree(num_vars, static_cast<unsigned>(rng.below(max_degree + 1)));
    if (monos.empty()) continue;
    f.add(rng.pick(monos), rng.nonzero(p));
  }
  if (f.is_zero()) f.add(Monomial{}, rng.nonzero(p));
  return f;
}

/// Cohomological degrees in which some group element admits a term.
inline std::vector<std::size_t> admissible_degrees(const GroupData& grp) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= grp.dim(); ++i)
    for (std::size_t g = 0; g < grp.size(); ++g)
      if (grp.codim(g) <= i && i - grp.codim(g) <= grp.frame(g).fixed_dim()) {
        out.push_back(i);
        break;
      }
  return out;
}

/// A nonzero homogeneous class of the given degree (which must be admissible).
inline HHClass random_class(Rng& rng, const GroupPtr& group, std::size_t degree,
                            const RandomClassOptions& opt = {}) {
  std::vector<std::size_t> elems;
  for (std::size_t g = 0; g < group->size(); ++g)
    if (group->codim(g) <= degree && degree - group->codim(g) <= group->frame(g).fixed_dim())
      elems.push_back(g);
  if (elems.empty()) throw Error(ErrorKind::DegreeInhomogeneous, "no element admits this degree");
  HHClass c(group, degree);
  while (c.is_zero()) {
    const std::size_t count = 1 + rng.below(opt.max_terms);
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t g = rng.pick(elems);
      const auto& fr = group->frame(g);
      const Mask m = rng.pick(masks_of_size(fr.fixed_dim(), degree - fr.codim));
      c.add(g, m, random_polynomial(rng, fr.fixed_dim(), group->p(), opt.max_poly_degree, opt.max_monomials));
    }
  }
  return c;
}

inline SymplecticHHClass random_symplectic_class(Rng& rng, const GroupPtr& group, std::size_t degree,
                                                 const RandomClassOptions& opt = {}) {
  const HHClass c = random_class(rng, group, degree, opt);
  SymplecticHHClass out(group, degree);
  for (const auto& [key, f] : c.components()) out.add(key.g, key.tangent, f);
  return out;
}

}  // namespace hhcross
