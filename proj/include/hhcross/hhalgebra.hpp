#pragma once

/**
 * @file hhalgebra.hpp
 * @brief Classes of HH^*(k[G] x k[V]) in fixed-locus form and their product.
 *
 * A class of degree i is a sum over group elements g of terms
 *
 *     xi^1 (x) xi^2 (x) f,   xi^1 in Lambda^{i-d_g} V^g,
 *                            xi^2 in Lambda^{d_g} (V^g)^vee,
 *                            f    in k[V^g],
 *
 * each written in the deterministic eigenframe of g. Since Lambda^{d_g}(V^g)^vee
 * is one-dimensional, the normal form stores, per (g, tangent basis subset), one
 * polynomial coefficient against the frame's top normal wedge.
 */

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "hhcross/error.hpp"
#include "hhcross/groups.hpp"
#include "hhcross/multilinear.hpp"
#include "hhcross/polyring.hpp"

namespace hhcross {

using GroupPtr = std::shared_ptr<const GroupData>;

/// One summand at a group element, in that element's eigenframe.
struct HHTerm {
  std::size_t g = 0;
  Multivector tangent;  // over the V^g frame, degree i - d_g
  Multivector normal;   // over the (V^g)^vee frame, degree d_g
  Polynomial coeff;     // in dim V^g variables
};

struct TermKey {
  std::size_t g = 0;
  Mask tangent = 0;
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

class HHClass {
 public:
  using ComponentMap = std::map<TermKey, Polynomial>;

  HHClass() = default;
  HHClass(GroupPtr group, std::size_t degree) : group_(std::move(group)), degree_(degree) {
    if (!group_) throw Error(ErrorKind::ContextMismatch, "class without a group");
  }

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t degree() const noexcept { return degree_; }
  const ComponentMap& components() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Whether a term at g can occur in this degree.
  bool admits(std::size_t g) const {
    const auto& fr = group_->frame(g);
    return fr.codim <= degree_ && degree_ - fr.codim <= fr.fixed_dim();
  }

  /// Add c * e_tangent (x) top normal (x) coeff at g.
  void add(std::size_t g, Mask tangent, const Polynomial& coeff) {
    if (g >= group_->size()) throw Error(ErrorKind::OutOfRange, "group element index");
    const auto& fr = group_->frame(g);
    if (popcount(tangent) + fr.codim != degree_ || (tangent & ~full_mask(fr.fixed_dim())) != 0)
      throw Error(ErrorKind::DegreeInhomogeneous, "tangent subset inconsistent with class degree");
    if (coeff.num_vars() != fr.fixed_dim())
      throw Error(ErrorKind::ArityMismatch, "coefficient must be a polynomial on V^g");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(TermKey{g, tangent}, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_term(const HHTerm& t) {
    if (t.g >= group_->size()) throw Error(ErrorKind::OutOfRange, "group element index");
    const auto& fr = group_->frame(t.g);
    if (t.tangent.ambient_dim() != fr.fixed_dim() || t.normal.ambient_dim() != fr.codim ||
        t.normal.degree() != fr.codim)
      throw Error(ErrorKind::DimensionMismatch, "term does not match the frame of its element");
    if (t.tangent.degree() + fr.codim != degree_)
      throw Error(ErrorKind::DegreeInhomogeneous, "term degree differs from class degree");
    const Fp c = t.normal.coeff(full_mask(fr.codim));
    for (auto [mask, tc] : t.tangent.terms()) add(t.g, mask, t.coeff * (tc * c));
  }

  /// Terms in normal form: one per (g, tangent subset), normal = top wedge.
  std::vector<HHTerm> terms() const {
    std::vector<HHTerm> out;
    const std::uint32_t p = group_->p();
    for (const auto& [key, poly] : terms_) {
      const auto& fr = group_->frame(key.g);
      out.push_back({key.g, Multivector::basis(fr.fixed_dim(), key.tangent, Fp::one(p)),
                     Multivector::basis(fr.codim, full_mask(fr.codim), Fp::one(p)), poly});
    }
    return out;
  }

  HHClass operator+(const HHClass& o) const {
    check_compatible(o);
    HHClass r = *this;
    for (const auto& [key, poly] : o.terms_) r.add(key.g, key.tangent, poly);
    return r;
  }

  HHClass operator-(const HHClass& o) const { return *this + o * Fp(group_->p(), -1); }

  HHClass operator*(Fp s) const {
    HHClass r(group_, degree_);
    for (const auto& [key, poly] : terms_) r.add(key.g, key.tangent, poly * s);
    return r;
  }

  friend bool operator==(const HHClass& a, const HHClass& b) {
    return a.group_ == b.group_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  void check_compatible(const HHClass& o) const {
    if (group_ != o.group_) throw Error(ErrorKind::ContextMismatch, "classes over different groups");
    if (degree_ != o.degree_) throw Error(ErrorKind::DegreeInhomogeneous, "degrees differ");
  }

 private:
  GroupPtr group_;
  std::size_t degree_ = 0;
  ComponentMap terms_;
};

/// Term-pair bookkeeping for the support condition.
struct ProductStats {
  std::size_t pairs = 0;
  std::size_t vanished_by_support = 0;  // complements overlap
};

inline HHClass unit(const GroupPtr& group) {
  HHClass u(group, 0);
  u.add(0, 0, Polynomial::constant(group->dim(), Fp::one(group->p())));
  return u;
}

namespace detail {

/// f in V^g coordinates, viewed as a function on V through the splitting V = V^g + (V^g)^vee.
inline Polynomial lift_from_fixed(const GroupData& grp, std::size_t g, const Polynomial& f) {
  return pullback(f, grp.frame(g).tangent_coords());
}

inline Polynomial restrict_to_fixed(const GroupData& grp, std::size_t u, const Polynomial& f) {
  return restrict_to_subspace(f, grp.frame(u).tangent_basis());
}

inline Multivector top_normal(const GroupData& grp, std::size_t g) {
  const std::size_t d = grp.codim(g);
  return Multivector::basis(d, full_mask(d), Fp::one(grp.p()));
}

}  // namespace detail

/**
 * The closed-form product. A term pair at (g, h) contributes only when
 * (V^g)^vee and (V^h)^vee meet trivially; it then lands at u = gh as
 *
 *   (-1)^{d_g (j - d_h)} pi^u xi^1 ^ pi^u nu^1 (x) xi^2 ^ nu^2 (x) (f e)|_{V^u},
 *
 * with the sign taken per pair.
 */
inline HHClass product(const HHClass& a, const HHClass& b, ProductStats* stats = nullptr) {
  if (a.group() != b.group()) throw Error(ErrorKind::ContextMismatch, "classes over different groups");
  const GroupData& grp = *a.group();
  const std::uint32_t p = grp.p();
  const std::size_t n = grp.dim();
  const std::size_t j = b.degree();
  const Matrix id = Matrix::identity(n, p);
  HHClass out(a.group(), a.degree() + b.degree());
  if (out.degree() > n) {
    if (stats) stats->pairs += a.components().size() * b.components().size();
    return out;  // Lambda^{>n} V = 0
  }

  for (const auto& [ka, fa] : a.components()) {
    const std::size_t g = ka.g;
    const auto& fg = grp.frame(g);
    const Polynomial f_lift = detail::lift_from_fixed(grp, g, fa);
    for (const auto& [kb, fb] : b.components()) {
      const std::size_t h = kb.g;
      const auto& fh = grp.frame(h);
      if (stats) ++stats->pairs;
      if (!grp.complements_trivial(g, h)) {
        if (stats) ++stats->vanished_by_support;
        continue;
      }
      const std::size_t u = grp.multiply(g, h);
      const auto& fu = grp.frame(u);

      const Multivector xi1 = map_components(fu.symmetrizer * fg.tangent_basis(),
                                             Multivector::basis(fg.fixed_dim(), ka.tangent, Fp::one(p)));
      const Multivector nu1 = map_components(fu.symmetrizer * fh.tangent_basis(),
                                             Multivector::basis(fh.fixed_dim(), kb.tangent, Fp::one(p)));
      const Multivector tangent = reframe(wedge(xi1, nu1), id, fu.tangent_basis());
      if (tangent.is_zero()) continue;

      const Multivector normal_ambient =
          wedge(map_components(fg.normal_basis(), detail::top_normal(grp, g)),
                map_components(fh.normal_basis(), detail::top_normal(grp, h)));
      if (normal_ambient.degree() != fu.codim)
        throw Error(ErrorKind::NotInSpan, "normal wedge is not top degree in (V^gh)^vee");
      const Fp normal = reframe(normal_ambient, id, fu.normal_basis()).coeff(full_mask(fu.codim));

      const bool negative = (fg.codim * (j - fh.codim)) % 2 == 1;
      const Fp scale = negative ? -normal : normal;
      const Polynomial coeff =
          detail::restrict_to_fixed(grp, u, f_lift * detail::lift_from_fixed(grp, h, fb));
      for (auto [mask, c] : tangent.terms()) out.add(u, mask, coeff * (c * scale));
    }
  }
  return out;
}

/**
 * Push a class forward along h: the term at g moves to h g h^{-1}, its
 * multivectors are mapped by h and its coefficient becomes f o h^{-1}.
 */
inline HHClass conjugation_action(std::size_t h, const HHClass& a) {
  const GroupData& grp = *a.group();
  const std::uint32_t p = grp.p();
  const Matrix& hm = grp.element(h);
  const Matrix& hinv = grp.element(grp.inverse(h));
  HHClass out(a.group(), a.degree());
  for (const auto& [key, f] : a.components()) {
    const std::size_t g = key.g;
    const std::size_t gc = grp.conjugate(h, g);
    const auto& fg = grp.frame(g);
    const auto& fc = grp.frame(gc);
    const Multivector tangent =
        reframe(Multivector::basis(fg.fixed_dim(), key.tangent, Fp::one(p)), hm * fg.tangent_basis(),
                fc.tangent_basis());
    const Fp normal = reframe(detail::top_normal(grp, g), hm * fg.normal_basis(), fc.normal_basis())
                          .coeff(full_mask(fc.codim));
    const Polynomial coeff = pullback(f, fg.tangent_coords() * hinv * fc.tangent_basis());
    for (auto [mask, c] : tangent.terms()) out.add(gc, mask, coeff * (c * normal));
  }
  return out;
}

/// Average of the conjugation action over G; projects onto the invariants.
inline HHClass invariant_project(const HHClass& a) {
  const GroupData& grp = *a.group();
  HHClass sum(a.group(), a.degree());
  for (std::size_t h = 0; h < grp.size(); ++h) sum = sum + conjugation_action(h, a);
  return sum * Fp(grp.p(), static_cast<std::int64_t>(grp.size())).inverse();
}

/// Basis of the degree-i, polynomial-degree-D part of the sum over g of H^i(A, Ag).
inline std::vector<HHClass> hh_basis(const GroupPtr& group, std::size_t degree, unsigned poly_degree) {
  std::vector<HHClass> out;
  const std::uint32_t p = group->p();
  for (std::size_t g = 0; g < group->size(); ++g) {
    const auto& fr = group->frame(g);
    if (fr.codim > degree || degree - fr.codim > fr.fixed_dim()) continue;
    for (Mask m : masks_of_size(fr.fixed_dim(), degree - fr.codim))
      for (const auto& mono : monomials_of_degree(fr.fixed_dim(), poly_degree)) {
        HHClass c(group, degree);
        Polynomial f(fr.fixed_dim(), p);
        f.add(mono, Fp::one(p));
        c.add(g, m, f);
        out.push_back(std::move(c));
      }
  }
  return out;
}

}  // namespace hhcross
