#pragma once

/**
 * @file multilinear.hpp
 * @brief Homogeneous elements of the exterior algebra of a based space.
 *
 * Basis monomials e_{i1} ^ ... ^ e_{ik} (i1 < ... < ik) are encoded as the
 * bitmask with bits i1..ik set.
 */

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hhcross/error.hpp"
#include "hhcross/linalg.hpp"
#include "hhcross/scalars.hpp"

namespace hhcross {

using Mask = std::uint32_t;

inline constexpr std::size_t kMaxDim = 16;

inline std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

inline std::vector<std::size_t> mask_indices(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1U)
    if (m & 1U) out.push_back(i);
  return out;
}

inline Mask indices_mask(const std::vector<std::size_t>& idx) {
  Mask m = 0;
  for (auto i : idx) m |= Mask{1} << i;
  return m;
}

/// Mask with the low n bits set.
inline Mask full_mask(std::size_t n) { return n == 0 ? 0 : (Mask{1} << n) - 1; }

/// All masks with k bits among the low n, in increasing numeric order.
inline std::vector<Mask> masks_of_size(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  for (Mask m = 0; m <= full_mask(n); ++m)
    if (popcount(m) == k) out.push_back(m);
  return out;
}

/// Sign of e_A ^ e_B relative to e_{A|B}; zero when A and B overlap.
inline int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  std::size_t inversions = 0;
  for (Mask rest = b; rest != 0; rest &= rest - 1) {
    const Mask low = rest & (~rest + 1);
    inversions += popcount(a & ~(low | (low - 1)));  // bits of a above this bit of b
  }
  return inversions % 2 == 0 ? 1 : -1;
}

class Multivector {
 public:
  Multivector() = default;
  Multivector(std::size_t ambient_dim, std::size_t degree, std::uint32_t p)
      : n_(ambient_dim), degree_(degree), p_(p) {
    if (ambient_dim > kMaxDim) throw Error(ErrorKind::OutOfRange, "ambient dimension too large");
  }

  /// The scalar c in degree 0.
  static Multivector scalar(std::size_t ambient_dim, Fp c) {
    Multivector m(ambient_dim, 0, c.modulus());
    m.add(0, c);
    return m;
  }

  /// c * e_mask.
  static Multivector basis(std::size_t ambient_dim, Mask mask, Fp c) {
    Multivector m(ambient_dim, popcount(mask), c.modulus());
    m.add(mask, c);
    return m;
  }

  /// A degree-1 element from its coordinate vector.
  static Multivector vector(const std::vector<Fp>& v, std::uint32_t p) {
    Multivector m(v.size(), 1, p);
    for (std::size_t i = 0; i < v.size(); ++i) m.add(Mask{1} << i, v[i]);
    return m;
  }

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t degree() const noexcept { return degree_; }
  std::uint32_t modulus() const noexcept { return p_; }
  const std::map<Mask, Fp>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Fp coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Fp::zero(p_) : it->second;
  }

  void add(Mask m, Fp c) {
    if (popcount(m) != degree_ || (m & ~full_mask(n_)) != 0)
      throw Error(ErrorKind::DimensionMismatch, "basis subset does not match degree/ambient");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Multivector operator+(const Multivector& o) const {
    check_same_space(o);
    Multivector r = *this;
    for (auto [m, c] : o.terms_) r.add(m, c);
    return r;
  }

  Multivector operator-(const Multivector& o) const { return *this + o * Fp(p_, -1); }

  Multivector operator*(Fp s) const {
    Multivector r(n_, degree_, p_);
    for (auto [m, c] : terms_) r.add(m, c * s);
    return r;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_space(const Multivector& o) const {
    if (n_ != o.n_ || degree_ != o.degree_)
      throw Error(ErrorKind::DimensionMismatch, "multivectors of different shape");
  }

  std::size_t n_ = 0;
  std::size_t degree_ = 0;
  std::uint32_t p_ = 2;
  std::map<Mask, Fp> terms_;
};

inline Multivector wedge(const Multivector& a, const Multivector& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "wedge of multivectors over different spaces");
  const std::uint32_t p = a.modulus();
  Multivector r(a.ambient_dim(), a.degree() + b.degree(), p);
  if (r.degree() > r.ambient_dim()) return r;
  for (auto [ma, ca] : a.terms())
    for (auto [mb, cb] : b.terms()) {
      const int s = merge_sign(ma, mb);
      if (s == 0) continue;
      r.add(ma | mb, s > 0 ? ca * cb : -(ca * cb));
    }
  return r;
}

/**
 * Apply Lambda^l M: e_S maps to the wedge of the columns M e_s, s in S.
 * M may be rectangular (m x n); the result lives over the m-dimensional space.
 */
inline Multivector map_components(const Matrix& m, const Multivector& a) {
  if (m.cols() != a.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "matrix does not act on the multivector's space");
  const std::uint32_t p = a.modulus();
  const std::size_t deg = a.degree();
  Multivector r(m.rows(), deg, p);
  if (deg > m.rows()) return r;
  const auto targets = masks_of_size(m.rows(), deg);
  for (auto [src, c] : a.terms()) {
    const auto cols = mask_indices(src);
    for (Mask t : targets) {
      const auto rows = mask_indices(t);
      Matrix minor(deg, deg, p);
      for (std::size_t i = 0; i < deg; ++i)
        for (std::size_t j = 0; j < deg; ++j) minor(i, j) = m(rows[i], cols[j]);
      r.add(t, c * determinant(minor));
    }
  }
  return r;
}

/**
 * Re-express `a`, given in coordinates against the columns of `old_frame`,
 * in coordinates against the columns of `new_frame`. Throws NotInSpan when
 * `a` has a component outside the span of the new frame.
 */
inline Multivector reframe(const Multivector& a, const Matrix& old_frame, const Matrix& new_frame) {
  if (old_frame.cols() != a.ambient_dim() || old_frame.rows() != new_frame.rows())
    throw Error(ErrorKind::DimensionMismatch, "frames do not match the multivector");
  const Multivector ambient = map_components(old_frame, a);
  if (a.degree() > new_frame.cols()) {
    if (!ambient.is_zero()) throw Error(ErrorKind::NotInSpan, "degree exceeds target frame");
    return Multivector(new_frame.cols(), a.degree(), a.modulus());
  }
  const Multivector coords = map_components(left_inverse(new_frame), ambient);
  if (!(map_components(new_frame, coords) == ambient))
    throw Error(ErrorKind::NotInSpan, "multivector not in the span of the target frame");
  return coords;
}

}  // namespace hhcross
