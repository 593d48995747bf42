#pragma once

#include <memory>

#include "hhcross/groups.hpp"
#include "hhcross/hhalgebra.hpp"

namespace hhcross::testing {

using IntRows = std::vector<std::vector<std::int64_t>>;

inline constexpr std::uint32_t kP = 7;

inline Matrix mat(const IntRows& rows, std::uint32_t p = kP) { return Matrix::from_rows(rows, p); }

inline GroupPtr make_group(const std::vector<IntRows>& gens, std::uint32_t p = kP) {
  return std::make_shared<const GroupData>(generate_group(gens, p));
}

inline GroupPtr swap_group() { return make_group({{{0, 1}, {1, 0}}}); }
inline GroupPtr minus_id_group() { return make_group({{{-1, 0}, {0, -1}}}); }
inline GroupPtr z3_group() { return make_group({{{2, 0}, {0, 4}}}); }
inline GroupPtr s3_group() {
  return make_group({{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}});
}
inline GroupPtr trivial_group(std::size_t n) {
  return std::make_shared<const GroupData>(generate_group({Matrix::identity(n, kP)}));
}

/// Index of the non-identity element of a group of order 2.
inline std::size_t other(const GroupPtr& g) { return g->size() == 2 ? 1 : 0; }

inline Polynomial one(std::size_t vars) { return Polynomial::constant(vars, Fp::one(kP)); }

}  // namespace hhcross::testing
