#pragma once

/**
 * @file symplectic.hpp
 * @brief Symplectic actions: trivialized normal factors and the reduced product.
 *
 * For a symplectic action, s_g in Lambda^{d_g}(V^g)^vee is the element dual to
 * the top power of omega restricted to (V^g)^vee. The pairing between
 * Lambda^d W and Lambda^d W* is the determinant pairing. Powers of omega are
 * divided powers, omega^{^k} / k!, which makes s multiplicative:
 * s_{gh} = s_g ^ s_h on commuting pairs whose complements meet trivially.
 */

#include <cstddef>
#include <map>
#include <vector>

#include "hhcross/error.hpp"
#include "hhcross/hhalgebra.hpp"

namespace hhcross {

enum class PowerNormalization {
  Divided,    // pair against omega^k / k!
  Undivided,  // pair against omega^k
};

/// (omega|_W)^{^k} in Lambda^{2k} W*, in the dual basis of the columns of `w`.
inline Multivector restricted_form_power(const Matrix& omega, const Matrix& w, std::size_t k,
                                         PowerNormalization norm) {
  const std::uint32_t p = omega.modulus();
  const std::size_t d = w.cols();
  const Matrix gram = w.transpose() * omega * w;
  Multivector form(d, 2, p);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) form.add((Mask{1} << a) | (Mask{1} << b), gram(a, b));
  Multivector acc = Multivector::scalar(d, Fp::one(p));
  for (std::size_t i = 0; i < k; ++i) acc = wedge(acc, form);
  if (norm == PowerNormalization::Divided) acc = acc * inverse_factorial(p, static_cast<unsigned>(k));
  return acc;
}

class SymplecticCtx {
 public:
  SymplecticCtx(GroupPtr group, Matrix omega,
                PowerNormalization norm = PowerNormalization::Divided)
      : group_(std::move(group)), omega_(std::move(omega)), norm_(norm) {
    const std::size_t n = group_->dim();
    const std::uint32_t p = group_->p();
    if (omega_.rows() != n || omega_.cols() != n || omega_.modulus() != p)
      throw Error(ErrorKind::DimensionMismatch, "omega must be n x n over the group's field");
    if (n % 2 != 0) throw Error(ErrorKind::NotSymplectic, "odd dimension");
    if (!(omega_.transpose() == omega_ * Fp(p, -1)))
      throw Error(ErrorKind::NotSymplectic, "omega is not antisymmetric");
    if (determinant(omega_).is_zero()) throw Error(ErrorKind::NotSymplectic, "omega is degenerate");
    for (std::size_t g = 0; g < group_->size(); ++g) {
      const Matrix& m = group_->element(g);
      if (!(m.transpose() * omega_ * m == omega_))
        throw Error(ErrorKind::NotSymplectic, "group element " + std::to_string(g) + " does not preserve omega");
    }
    for (std::size_t g = 0; g < group_->size(); ++g) s_cache_.push_back(compute_volume(g));
  }

  const GroupPtr& group() const noexcept { return group_; }
  const Matrix& omega() const noexcept { return omega_; }
  PowerNormalization normalization() const noexcept { return norm_; }

  /// s_g over the (V^g)^vee frame.
  const Multivector& normal_volume(std::size_t g) const { return s_cache_.at(g); }

  /// Standard form [[0, I], [-I, 0]].
  static Matrix standard_omega(std::size_t n, std::uint32_t p) {
    Matrix w(n, n, p);
    const std::size_t h = n / 2;
    for (std::size_t i = 0; i < h; ++i) {
      w(i, h + i) = Fp::one(p);
      w(h + i, i) = Fp(p, -1);
    }
    return w;
  }

 private:
  Multivector compute_volume(std::size_t g) const {
    const auto& fr = group_->frame(g);
    const std::size_t d = fr.codim;
    if (d % 2 != 0)
      throw Error(ErrorKind::NotSymplecticOnComplement, "odd codimension for element " + std::to_string(g));
    const Multivector power = restricted_form_power(omega_, fr.normal_basis(), d / 2, norm_);
    const Fp c = power.coeff(full_mask(d));  // <w_1^...^w_d, power> = c
    if (c.is_zero())
      throw Error(ErrorKind::NotSymplecticOnComplement,
                  "omega degenerate on (V^g)^vee for element " + std::to_string(g));
    return Multivector::basis(d, full_mask(d), c.inverse());
  }

  GroupPtr group_;
  Matrix omega_;
  PowerNormalization norm_;
  std::vector<Multivector> s_cache_;
};

inline const Multivector& normal_volume(std::size_t g, const SymplecticCtx& ctx) {
  return ctx.normal_volume(g);
}

/// Classes with the normal factor trivialized: per g, tangent multivector and coefficient.
class SymplecticHHClass {
 public:
  using ComponentMap = std::map<TermKey, Polynomial>;

  SymplecticHHClass(GroupPtr group, std::size_t degree) : group_(std::move(group)), degree_(degree) {}

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t degree() const noexcept { return degree_; }
  const ComponentMap& components() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(std::size_t g, Mask tangent, const Polynomial& coeff) {
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

  friend bool operator==(const SymplecticHHClass& a, const SymplecticHHClass& b) {
    return a.group_ == b.group_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  GroupPtr group_;
  std::size_t degree_ = 0;
  ComponentMap terms_;
};

/// The tangent-only product: zero unless complements meet trivially, sign (-1)^{d_g (j - d_h)}.
inline SymplecticHHClass sympl_product(const SymplecticHHClass& a, const SymplecticHHClass& b) {
  if (a.group() != b.group()) throw Error(ErrorKind::ContextMismatch, "classes over different groups");
  const GroupData& grp = *a.group();
  const std::uint32_t p = grp.p();
  const Matrix id = Matrix::identity(grp.dim(), p);
  SymplecticHHClass out(a.group(), a.degree() + b.degree());
  if (out.degree() > grp.dim()) return out;
  for (const auto& [ka, fa] : a.components()) {
    const auto& fg = grp.frame(ka.g);
    for (const auto& [kb, fb] : b.components()) {
      if (!grp.complements_trivial(ka.g, kb.g)) continue;
      const auto& fh = grp.frame(kb.g);
      const std::size_t u = grp.multiply(ka.g, kb.g);
      const auto& fu = grp.frame(u);
      const Multivector xi = map_components(fu.symmetrizer * fg.tangent_basis(),
                                            Multivector::basis(fg.fixed_dim(), ka.tangent, Fp::one(p)));
      const Multivector nu = map_components(fu.symmetrizer * fh.tangent_basis(),
                                            Multivector::basis(fh.fixed_dim(), kb.tangent, Fp::one(p)));
      const Multivector tangent = reframe(wedge(xi, nu), id, fu.tangent_basis());
      const bool negative = (fg.codim * (b.degree() - fh.codim)) % 2 == 1;
      const Polynomial coeff =
          detail::restrict_to_fixed(grp, u, detail::lift_from_fixed(grp, ka.g, fa) *
                                                detail::lift_from_fixed(grp, kb.g, fb));
      for (auto [mask, c] : tangent.terms()) out.add(u, mask, coeff * (negative ? -c : c));
    }
  }
  return out;
}

/// xi (x) f at g  |->  xi (x) s_g (x) f at g.
inline HHClass trivialize(const SymplecticHHClass& a, const SymplecticCtx& ctx) {
  HHClass out(a.group(), a.degree());
  for (const auto& [key, f] : a.components()) {
    const Fp s = ctx.normal_volume(key.g).coeff(full_mask(a.group()->codim(key.g)));
    out.add(key.g, key.tangent, f * s);
  }
  return out;
}

}  // namespace hhcross
