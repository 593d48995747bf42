#pragma once

/**
 * @file groups.hpp
 * @brief Finite matrix groups over F_p with cached eigenstructure.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hhcross/error.hpp"
#include "hhcross/linalg.hpp"
#include "hhcross/scalars.hpp"

namespace hhcross {

inline constexpr std::size_t kDefaultGroupBound = 256;

/// Per-element data: eigenframe (fixed vectors first), dual coordinates, pi^g.
struct ElementFrame {
  Eigenframe eigen;
  Matrix coords;        // inverse of eigen.basis; row i is the coordinate x_i
  Matrix symmetrizer;   // pi^g
  Subspace fixed;       // V^g
  Subspace semi;        // (V^g)^vee
  std::size_t codim = 0;  // d_g

  std::size_t dim() const { return eigen.basis.rows(); }
  std::size_t fixed_dim() const { return eigen.fixed_dim; }
  /// n x (n - d_g): the V^g frame as columns.
  Matrix tangent_basis() const { return eigen.basis.column_block(0, fixed_dim()); }
  /// n x d_g: the (V^g)^vee frame as columns.
  Matrix normal_basis() const { return eigen.basis.column_block(fixed_dim(), codim); }
  /// (n - d_g) x n: coordinates along V^g (the embedding k[V^g] -> k[V]).
  Matrix tangent_coords() const { return coords.row_block(0, fixed_dim()); }
  Matrix normal_coords() const { return coords.row_block(fixed_dim(), codim); }
};

/**
 * A finite subgroup of GL_n(F_p) with complete tables.
 *
 * Element 0 is the identity. Immutable once generated.
 */
class GroupData {
 public:
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const FieldCtx& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_.p(); }

  const Matrix& element(std::size_t g) const { return elements_.at(g); }
  const std::vector<Matrix>& elements() const noexcept { return elements_; }
  std::size_t multiply(std::size_t g, std::size_t h) const { return mult_[g * size() + h]; }
  std::size_t inverse(std::size_t g) const { return inverse_.at(g); }
  std::uint64_t order_of(std::size_t g) const { return order_.at(g); }
  const ElementFrame& frame(std::size_t g) const { return frames_.at(g); }
  std::size_t codim(std::size_t g) const { return frames_.at(g).codim; }
  const std::vector<Matrix>& generators() const noexcept { return generators_; }

  /// Index of h g h^{-1}.
  std::size_t conjugate(std::size_t h, std::size_t g) const {
    return multiply(multiply(h, g), inverse(h));
  }

  /// Index of an element given by its matrix, or size() if absent.
  std::size_t index_of(const Matrix& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? size() : it->second;
  }

  /// Whether (V^g)^vee and (V^h)^vee intersect trivially.
  bool complements_trivial(std::size_t g, std::size_t h) const {
    return complements_intersect_trivially(frames_.at(g).semi, frames_.at(h).semi);
  }

  friend GroupData generate_group(const std::vector<Matrix>& generators, std::size_t bound);

 private:
  std::size_t dim_ = 0;
  FieldCtx field_;
  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
  std::map<Matrix, std::size_t> index_;
  std::vector<std::size_t> mult_;
  std::vector<std::size_t> inverse_;
  std::vector<std::uint64_t> order_;
  std::vector<ElementFrame> frames_;
};

namespace detail {

/**
 * Breadth-first closure of the generators. Each layer of new elements is
 * sorted by entries before being appended, so the order is reproducible.
 */
inline std::vector<Matrix> close_under_multiplication(const std::vector<Matrix>& generators,
                                                      std::size_t n, std::uint32_t p,
                                                      std::size_t bound) {
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n)
      throw Error(ErrorKind::DimensionMismatch, "generator is not " + std::to_string(n) + "x" +
                                                    std::to_string(n));
    if (determinant(g).is_zero())
      throw Error(ErrorKind::NotInvertible, "generator is singular mod " + std::to_string(p));
  }
  std::vector<Matrix> elements{Matrix::identity(n, p)};
  std::map<Matrix, std::size_t> seen{{elements.front(), 0}};
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<Matrix> layer;
    for (auto idx : frontier) {
      for (const auto& gen : generators) {
        Matrix m = elements[idx] * gen;
        if (seen.count(m)) continue;
        seen.emplace(m, 0);
        layer.push_back(std::move(m));
      }
    }
    std::sort(layer.begin(), layer.end());
    frontier.clear();
    for (auto& m : layer) {
      if (elements.size() >= bound)
        throw Error(ErrorKind::BoundExceeded, "group has more than " + std::to_string(bound) +
                                                  " elements");
      frontier.push_back(elements.size());
      elements.push_back(std::move(m));
    }
  }
  return elements;
}

}  // namespace detail

/**
 * Generate the group, its tables, the field context (N = lcm of orders) and
 * the per-element frames. Requires p > |G| and p > n.
 */
inline GroupData generate_group(const std::vector<Matrix>& generators,
                                std::size_t bound = kDefaultGroupBound) {
  if (generators.empty()) throw Error(ErrorKind::InvalidInput, "no generators");
  const std::size_t n = generators.front().rows();
  const std::uint32_t p = generators.front().modulus();
  for (const auto& g : generators)
    if (g.modulus() != p) throw Error(ErrorKind::ContextMismatch, "generators over different fields");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");

  GroupData gd;
  gd.dim_ = n;
  gd.generators_ = generators;
  gd.elements_ = detail::close_under_multiplication(generators, n, p, bound);
  const std::size_t size = gd.elements_.size();
  if (p <= size || p <= n)
    throw Error(ErrorKind::CharacteristicTooSmall,
                "need p > |G| = " + std::to_string(size) + " and p > dim V = " + std::to_string(n) +
                    ", got p = " + std::to_string(p));

  for (std::size_t i = 0; i < size; ++i) gd.index_.emplace(gd.elements_[i], i);
  gd.mult_.resize(size * size);
  gd.inverse_.resize(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      const std::size_t k = gd.index_.at(gd.elements_[i] * gd.elements_[j]);
      gd.mult_[i * size + j] = k;
      if (k == 0) gd.inverse_[i] = j;
    }

  gd.order_.resize(size);
  std::uint64_t exponent = 1;
  for (std::size_t i = 0; i < size; ++i) {
    std::uint64_t k = 1;
    for (std::size_t cur = i; cur != 0; cur = gd.mult_[cur * size + i]) ++k;
    gd.order_[i] = k;
    exponent = std::lcm(exponent, gd.order_[i]);
  }
  gd.field_ = make_field_ctx(p, static_cast<std::uint32_t>(exponent));

  gd.frames_.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    ElementFrame f;
    f.eigen = eigenframe(gd.elements_[i], gd.field_);
    f.coords = hhcross::inverse(f.eigen.basis);
    f.symmetrizer = symmetrizer(gd.elements_[i], gd.order_[i]);
    f.fixed = fixed_space(gd.elements_[i]);
    f.semi = kernel(f.symmetrizer);
    f.codim = n - f.eigen.fixed_dim;
    gd.frames_.push_back(std::move(f));
  }
  return gd;
}

/// Generators given as integer matrices, reduced mod p.
inline GroupData generate_group(const std::vector<std::vector<std::vector<std::int64_t>>>& generators,
                                std::uint32_t p, std::size_t bound = kDefaultGroupBound) {
  std::vector<Matrix> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(Matrix::from_rows(g, p));
  return generate_group(gens, bound);
}

struct PrimeSuggestion {
  std::uint32_t p = 0;
  std::size_t group_order = 0;
  std::uint64_t exponent = 0;
};

/**
 * Smallest prime p > max(floor, dim V) for which the reduced generators
 * generate a group G with p > |G| and exponent dividing p - 1.
 */
inline PrimeSuggestion suggest_prime(const std::vector<std::vector<std::vector<std::int64_t>>>& generators,
                                     std::size_t dim, std::uint32_t floor = 0,
                                     std::size_t bound = kDefaultGroupBound,
                                     std::uint32_t search_limit = 100000) {
  for (std::uint32_t p = std::max<std::uint32_t>(floor, static_cast<std::uint32_t>(dim)) + 1;
       p < search_limit; ++p) {
    if (!is_prime(p)) continue;
    try {
      std::vector<Matrix> gens;
      for (const auto& g : generators) gens.push_back(Matrix::from_rows(g, p));
      for (const auto& g : gens)
        if (g.rows() != dim || g.cols() != dim)
          throw Error(ErrorKind::DimensionMismatch, "generator has wrong shape");
      auto elements = detail::close_under_multiplication(gens, dim, p, bound);
      if (elements.size() >= p) continue;
      std::uint64_t exponent = 1;
      for (const auto& e : elements) {
        auto k = multiplicative_order(e, elements.size());
        exponent = std::lcm(exponent, *k);
      }
      if ((p - 1) % exponent != 0) continue;
      return {p, elements.size(), exponent};
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DimensionMismatch) throw;
      continue;  // singular or too large mod this p
    }
  }
  throw Error(ErrorKind::RootUnavailable, "no admissible prime below search limit");
}

}  // namespace hhcross
