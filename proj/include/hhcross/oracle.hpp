#pragma once

/**
 * @file oracle.hpp
 * @brief Independent checks: Koszul cohomology and the cochain-level product.
 *
 * Nothing here calls hhcross::product. The Koszul engine computes
 * H^q(k[V], k[V]g) by Gaussian elimination, and the cochain pipeline
 * evaluates read_off(mu(hkr(xi), hkr(nu))) on linear arguments.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "hhcross/error.hpp"
#include "hhcross/hhalgebra.hpp"

namespace hhcross {

// ---------------------------------------------------------------------------
// Koszul complex  Lambda^* V (x) k[V] g

/**
 * The complex with d(xi (x) a) = sum_i v_i ^ xi (x) (x_i - x_i^g) a, written
 * against a chosen frame {v_i} of V and its dual coordinates {x_i}.
 * Bidegree (q, D) = exterior degree q, polynomial degree D; d raises both by 1.
 */
class KoszulComplex {
 public:
  struct BasisElement {
    Mask wedge = 0;
    Monomial mono;
  };

  /// Standard frame.
  KoszulComplex(const GroupData& grp, std::size_t g)
      : KoszulComplex(grp, g, Matrix::identity(grp.dim(), grp.p())) {}

  /// `frame` columns are v_1..v_n.
  KoszulComplex(const GroupData& grp, std::size_t g, const Matrix& frame)
      : n_(grp.dim()), p_(grp.p()), g_(g) {
    const Matrix coords = inverse(frame);
    // In frame coordinates, x_i o g = sum_k (R G F)_{ik} x_k.
    twisted_ = Matrix::identity(n_, p_) - coords * grp.element(g) * frame;
  }

  std::size_t dim() const noexcept { return n_; }
  std::size_t element() const noexcept { return g_; }

  /// The linear forms x_i - x_i^g as rows, in frame coordinates.
  const Matrix& koszul_forms() const noexcept { return twisted_; }

  /// Bitmask-major, then monomials in grlex order.
  std::vector<BasisElement> basis(std::size_t q, unsigned d) const {
    std::vector<BasisElement> out;
    if (q > n_) return out;
    const auto monos = monomials_of_degree(n_, d);
    for (Mask m : masks_of_size(n_, q))
      for (const auto& mono : monos) out.push_back({m, mono});
    return out;
  }

  /// Matrix of d from bidegree (q, D) to (q+1, D+1); columns index the source basis.
  Matrix differential(std::size_t q, unsigned d) const {
    const auto src = basis(q, d);
    const auto dst = basis(q + 1, d + 1);
    std::map<std::pair<Mask, Monomial>, std::size_t, PairLess> index;
    for (std::size_t r = 0; r < dst.size(); ++r) index.emplace(std::make_pair(dst[r].wedge, dst[r].mono), r);
    Matrix out(dst.size(), src.size(), p_);
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (std::size_t i = 0; i < n_; ++i) {
        const Mask vi = Mask{1} << i;
        const int s = merge_sign(vi, src[c].wedge);
        if (s == 0) continue;
        for (std::size_t k = 0; k < n_; ++k) {
          const Fp coef = twisted_(i, k);
          if (coef.is_zero()) continue;
          const std::size_t r =
              index.at(std::make_pair(vi | src[c].wedge, src[c].mono * Monomial::variable(k)));
          out(r, c) += s > 0 ? coef : -coef;
        }
      }
    }
    return out;
  }

  /// dim ker d_{q,D} - rank d_{q-1,D-1}.
  std::size_t cohomology_dim(std::size_t q, unsigned d) const {
    if (q > n_) throw Error(ErrorKind::OutOfRange, "exterior degree exceeds dim V");
    const std::size_t cochains = basis(q, d).size();
    const std::size_t rank_out = q < n_ ? rank(differential(q, d)) : 0;
    const std::size_t rank_in = (q > 0 && d > 0) ? rank(differential(q - 1, d - 1)) : 0;
    return cochains - rank_out - rank_in;
  }

 private:
  struct PairLess {
    bool operator()(const std::pair<Mask, Monomial>& a, const std::pair<Mask, Monomial>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return GrlexLess{}(a.second, b.second);
    }
  };

  std::size_t n_;
  std::uint32_t p_;
  std::size_t g_;
  Matrix twisted_;
};

inline std::size_t koszul_cohomology_dim(const GroupData& grp, std::size_t g, std::size_t q, unsigned d) {
  return KoszulComplex(grp, g).cohomology_dim(q, d);
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// dim of Lambda^{q-d} V^g (x) Lambda^d (V^g)^vee (x) k[V^g]_D.
inline std::size_t closed_form_dim(const GroupData& grp, std::size_t g, std::size_t q, unsigned d) {
  const std::size_t codim = grp.codim(g);
  const std::size_t fixed = grp.dim() - codim;
  if (q < codim) return 0;
  return binomial(fixed, q - codim) * count_monomials(fixed, d);
}

// ---------------------------------------------------------------------------
// Cochains on linear arguments

using ArgTuple = std::vector<std::uint8_t>;

/**
 * A cochain C^i(k[V], k[V]g) recorded by its values on tuples of linear
 * functions y_{t_1}, ..., y_{t_i} drawn from `frame` (row t is y_t). Values
 * are the k[V]-part of elements of k[V]g, in standard coordinates.
 */
struct Cochain {
  std::size_t arity = 0;
  std::size_t target = 0;
  Matrix frame;
  std::map<ArgTuple, Polynomial> table;

  const Polynomial& at(const ArgTuple& t) const {
    auto it = table.find(t);
    if (it == table.end()) throw Error(ErrorKind::IncompleteTable, "cochain not evaluated on requested tuple");
    return it->second;
  }
};

namespace detail {

inline std::vector<ArgTuple> all_tuples(std::size_t n, std::size_t arity) {
  std::vector<ArgTuple> out;
  ArgTuple t(arity, 0);
  while (true) {
    out.push_back(t);
    std::size_t pos = arity;
    while (pos > 0) {
      --pos;
      if (++t[pos] < n) break;
      t[pos] = 0;
      if (pos == 0) return out;
    }
    if (arity == 0) return out;
  }
}

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  std::size_t inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

/// Base tuples (tangent subset of u, then every normal coordinate) for an arity.
inline std::vector<std::pair<Mask, ArgTuple>> read_off_bases(const GroupData& grp, std::size_t u,
                                                             std::size_t arity) {
  std::vector<std::pair<Mask, ArgTuple>> out;
  const auto& fr = grp.frame(u);
  if (arity < fr.codim || arity - fr.codim > fr.fixed_dim()) return out;
  for (Mask s : masks_of_size(fr.fixed_dim(), arity - fr.codim)) {
    ArgTuple base;
    for (auto i : mask_indices(s)) base.push_back(static_cast<std::uint8_t>(i));
    for (std::size_t k = 0; k < fr.codim; ++k) base.push_back(static_cast<std::uint8_t>(fr.fixed_dim() + k));
    out.emplace_back(s, std::move(base));
  }
  return out;
}

}  // namespace detail

/**
 * phi(xi (x) f)(y_1, ..., y_i) = (1/i!) sum_sigma sign(sigma) prod_k <xi_k, y_sigma(k)> f g,
 * evaluated on every i-tuple from `frame`. xi is an ambient multivector of
 * degree i, f a polynomial on V^g lifted to k[V].
 */
inline Cochain hkr_cochain(const GroupData& grp, std::size_t g, const Multivector& xi, const Polynomial& f,
                           const Matrix& frame) {
  const std::uint32_t p = grp.p();
  const std::size_t n = grp.dim();
  const std::size_t i = xi.degree();
  if (xi.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "xi must be an ambient multivector");
  const Fp scale = inverse_factorial(p, static_cast<unsigned>(i));
  const Polynomial lifted = detail::lift_from_fixed(grp, g, f);

  Cochain c{i, g, frame, {}};
  for (const auto& t : detail::all_tuples(n, i)) {
    Fp value = Fp::zero(p);
    for (auto [mask, coef] : xi.terms()) {
      const auto idx = mask_indices(mask);
      Matrix pairing(i, i, p);  // <xi_k, y_{t_l}>
      for (std::size_t k = 0; k < i; ++k)
        for (std::size_t l = 0; l < i; ++l) pairing(k, l) = frame(t[l], idx[k]);
      value += coef * determinant(pairing);
    }
    c.table.emplace(t, lifted * (value * scale));
  }
  return c;
}

/**
 * mu(Phi g, Psi h)(a_1..a_{i+j}) = Phi(a_1..a_i) * (Psi(a_{i+1}..a_{i+j}))^g  gh,
 * with the action on values f^g = f o g. Only `requested` tuples are filled
 * when given.
 */
inline Cochain mu_product(const GroupData& grp, const Cochain& phi, const Cochain& psi,
                          const std::optional<std::vector<ArgTuple>>& requested = std::nullopt) {
  if (!(phi.frame == psi.frame)) throw Error(ErrorKind::ContextMismatch, "cochains over different argument frames");
  const std::size_t i = phi.arity, j = psi.arity;
  Cochain out{i + j, grp.multiply(phi.target, psi.target), phi.frame, {}};
  const Matrix& gm = grp.element(phi.target);
  std::map<ArgTuple, Polynomial> psi_acted;
  const auto tuples = requested ? *requested : detail::all_tuples(grp.dim(), i + j);
  for (const auto& t : tuples) {
    if (t.size() != i + j) throw Error(ErrorKind::ArityMismatch, "requested tuple has wrong length");
    const ArgTuple left(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
    const ArgTuple right(t.begin() + static_cast<std::ptrdiff_t>(i), t.end());
    const Polynomial& a = phi.at(left);
    auto it = psi_acted.find(right);
    if (it == psi_acted.end()) it = psi_acted.emplace(right, substitute_linear(psi.at(right), gm)).first;
    out.table.emplace(t, a.is_zero() ? a : a * it->second);
  }
  return out;
}

/// Tuples read_off needs from a cochain of this arity at u.
inline std::vector<ArgTuple> read_off_tuples(const GroupData& grp, std::size_t u, std::size_t arity) {
  std::vector<ArgTuple> out;
  for (const auto& [mask, base] : detail::read_off_bases(grp, u, arity)) {
    std::vector<std::size_t> perm(arity);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      ArgTuple t(arity);
      for (std::size_t k = 0; k < arity; ++k) t[k] = base[perm[k]];
      out.push_back(std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

/**
 * The class component of a cochain at u: for each increasing tangent subset S
 * of the u-frame, the alternating sum of its values on the arguments
 * (x_S, x_{normal of u}), restricted to V^u. The alternation inverts the
 * 1/i! of hkr_cochain, so read_off(hkr_cochain(xi, f)) = (xi, f).
 */
inline std::vector<HHTerm> read_off(const GroupData& grp, const Cochain& c) {
  const std::size_t u = c.target;
  const auto& fu = grp.frame(u);
  const std::uint32_t p = grp.p();
  if (!(c.frame == fu.coords))
    throw Error(ErrorKind::ContextMismatch, "cochain arguments are not the coordinates of its target frame");
  std::vector<HHTerm> out;
  for (const auto& [mask, base] : detail::read_off_bases(grp, u, c.arity)) {
    Polynomial acc(grp.dim(), p);
    std::vector<std::size_t> perm(c.arity);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      ArgTuple t(c.arity);
      for (std::size_t k = 0; k < c.arity; ++k) t[k] = base[perm[k]];
      const Polynomial& v = c.at(t);
      acc += detail::permutation_sign(perm) > 0 ? v : v * Fp(p, -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    Polynomial restricted = detail::restrict_to_fixed(grp, u, acc);
    if (restricted.is_zero()) continue;
    out.push_back({u, Multivector::basis(fu.fixed_dim(), mask, Fp::one(p)),
                   Multivector::basis(fu.codim, full_mask(fu.codim), Fp::one(p)), std::move(restricted)});
  }
  return out;
}

/// xi^1 ^ xi^2 as an ambient multivector (the inclusion into Lambda^i V).
inline Multivector include_term(const GroupData& grp, const HHTerm& t) {
  const auto& fr = grp.frame(t.g);
  return wedge(map_components(fr.tangent_basis(), t.tangent), map_components(fr.normal_basis(), t.normal));
}

struct OracleStats {
  std::size_t pairs = 0;
  std::size_t overlapping_pairs = 0;           // complements meet nontrivially
  std::size_t overlapping_pairs_nonzero = 0;   // ... yet the cochain product survived
};

/// psi_{i+j,gh} mu (phi_{i,g} (x) phi_{j,h}), summed over term pairs.
inline HHClass oracle_product(const HHClass& a, const HHClass& b, OracleStats* stats = nullptr) {
  if (a.group() != b.group()) throw Error(ErrorKind::ContextMismatch, "classes over different groups");
  const GroupData& grp = *a.group();
  const std::size_t total = a.degree() + b.degree();
  if (total >= grp.p())
    throw Error(ErrorKind::FactorialNotInvertible, "oracle needs p > i + j");
  HHClass out(a.group(), total);
  const auto ta = a.terms();
  const auto tb = b.terms();
  for (const auto& x : ta) {
    const Multivector xi = include_term(grp, x);
    for (const auto& y : tb) {
      const std::size_t u = grp.multiply(x.g, y.g);
      const Matrix& args = grp.frame(u).coords;
      const Cochain phi = hkr_cochain(grp, x.g, xi, x.coeff, args);
      const Cochain psi = hkr_cochain(grp, y.g, include_term(grp, y), y.coeff, args);
      const Cochain prod = mu_product(grp, phi, psi, read_off_tuples(grp, u, total));
      const auto terms = read_off(grp, prod);
      if (stats) {
        ++stats->pairs;
        if (!grp.complements_trivial(x.g, y.g)) {
          ++stats->overlapping_pairs;
          if (!terms.empty()) ++stats->overlapping_pairs_nonzero;
        }
      }
      for (const auto& t : terms) out.add_term(t);
    }
  }
  return out;
}

}  // namespace hhcross
