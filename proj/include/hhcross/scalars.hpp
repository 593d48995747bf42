#pragma once

/**
 * @file scalars.hpp
 * @brief Prime field arithmetic with a designated root of unity.
 *
 * Every element carries its modulus, so values from different fields can be
 * detected instead of silently mixed. The modulus is bounded by 2^31 so that
 * products fit in 64 bits.
 */

#include <cstdint>
#include <numeric>
#include <ostream>
#include <vector>

#include "hhcross/error.hpp"

namespace hhcross {

class Fp {
 public:
  Fp() = default;
  Fp(std::uint32_t p, std::int64_t value) : p_(p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  static Fp zero(std::uint32_t p) { return Fp(p, 0); }
  static Fp one(std::uint32_t p) { return Fp(p, 1); }

  std::uint32_t value() const noexcept { return v_; }
  std::uint32_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }

  Fp operator+(Fp o) const {
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    return raw(s >= p_ ? s - p_ : s);
  }
  Fp operator-(Fp o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_); }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_); }
  Fp operator*(Fp o) const { return raw(std::uint64_t{v_} * o.v_ % p_); }
  Fp operator/(Fp o) const { return *this * o.inverse(); }

  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  Fp pow(std::uint64_t e) const {
    Fp base = *this;
    Fp acc = one(p_);
    while (e > 0) {
      if (e & 1U) acc *= base;
      base *= base;
      e >>= 1U;
    }
    return acc;
  }

  /// Extended Euclid; throws on zero.
  Fp inverse() const {
    if (v_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 mod " + std::to_string(p_));
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return Fp(p_, x0);
  }

  /// Representative in (-p/2, p/2], used only for display.
  std::int64_t centered() const {
    return v_ > p_ / 2 ? static_cast<std::int64_t>(v_) - p_ : static_cast<std::int64_t>(v_);
  }

  friend bool operator==(Fp a, Fp b) noexcept { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator!=(Fp a, Fp b) noexcept { return !(a == b); }
  friend bool operator<(Fp a, Fp b) noexcept { return a.v_ < b.v_; }

  friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

 private:
  Fp raw(std::uint64_t v) const {
    Fp r;
    r.p_ = p_;
    r.v_ = static_cast<std::uint32_t>(v);
    return r;
  }

  std::uint32_t p_ = 2;
  std::uint32_t v_ = 0;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Smallest generator of the multiplicative group mod p.
inline std::uint32_t smallest_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  const auto qs = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : qs) {
      if (Fp(p, g).pow((p - 1) / q).value() == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error(ErrorKind::NotPrime, std::to_string(p) + " has no primitive root");
}

/**
 * The ground field F_p together with a primitive N-th root of unity zeta.
 *
 * zeta = g0^((p-1)/N) where g0 is the smallest primitive root mod p, so every
 * run picks the same root and the same eigenframes.
 */
class FieldCtx {
 public:
  FieldCtx() = default;

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t exponent() const noexcept { return n_; }
  Fp zeta() const noexcept { return zeta_; }

  Fp operator()(std::int64_t v) const { return Fp(p_, v); }
  Fp zero() const { return Fp::zero(p_); }
  Fp one() const { return Fp::one(p_); }

  /// zeta^j for any integer j (reduced modulo N).
  Fp root(std::int64_t j) const {
    std::int64_t r = j % static_cast<std::int64_t>(n_);
    if (r < 0) r += n_;
    return zeta_.pow(static_cast<std::uint64_t>(r));
  }

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept {
    return a.p_ == b.p_ && a.n_ == b.n_;
  }

  friend FieldCtx make_field_ctx(std::uint32_t p, std::uint32_t n);

 private:
  std::uint32_t p_ = 2;
  std::uint32_t n_ = 1;
  Fp zeta_ = Fp::one(2);
};

inline FieldCtx make_field_ctx(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (1U << 31)) throw Error(ErrorKind::OutOfRange, "modulus must be below 2^31");
  if (n == 0 || (p - 1) % n != 0) {
    throw Error(ErrorKind::RootUnavailable,
                "no primitive " + std::to_string(n) + "-th root of unity mod " + std::to_string(p));
  }
  FieldCtx ctx;
  ctx.p_ = p;
  ctx.n_ = n;
  ctx.zeta_ = Fp(p, smallest_primitive_root(p)).pow((p - 1) / n);
  return ctx;
}

inline Fp scalar_inverse(Fp a) { return a.inverse(); }

/// 1/k! in F_p; requires p > k.
inline Fp inverse_factorial(std::uint32_t p, unsigned k) {
  if (k >= p) {
    throw Error(ErrorKind::FactorialNotInvertible,
                std::to_string(k) + "! is not invertible mod " + std::to_string(p));
  }
  Fp f = Fp::one(p);
  for (unsigned i = 2; i <= k; ++i) f *= Fp(p, i);
  return f.inverse();
}

}  // namespace hhcross
