#pragma once

/**
 * @file polyring.hpp
 * @brief Sparse multivariate polynomials over F_p and linear substitutions.
 *
 * The group acts on functions by precomposition, f^g = f o g. For a
 * coordinate x_i dual to a lambda_i-eigenvector this gives x_i^g = lambda_i x_i.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hhcross/error.hpp"
#include "hhcross/linalg.hpp"
#include "hhcross/scalars.hpp"

namespace hhcross {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector; unused trailing slots are zero.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};

  unsigned degree() const {
    return std::accumulate(exp.begin(), exp.end(), 0U);
  }

  static Monomial variable(std::size_t i) {
    Monomial m;
    m.exp[i] = 1;
    return m;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const unsigned e = unsigned{exp[i]} + o.exp[i];
      if (e > 255) throw Error(ErrorKind::OutOfRange, "exponent overflow");
      r.exp[i] = static_cast<std::uint8_t>(e);
    }
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

/// Graded lexicographic order.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exp < b.exp;  // x1 > x2 > ... within a degree
  }
};

/// All monomials of total degree d in m variables, in increasing grlex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t m, unsigned d) {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == m) {
      cur.exp[var] = static_cast<std::uint8_t>(left);
      out.push_back(cur);
      cur.exp[var] = 0;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur.exp[var] = static_cast<std::uint8_t>(e);
      self(self, var + 1, left - e);
    }
    cur.exp[var] = 0;
  };
  if (m == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

inline std::size_t count_monomials(std::size_t m, unsigned d) {
  if (m == 0) return d == 0 ? 1 : 0;
  // C(d + m - 1, m - 1)
  std::size_t r = 1;
  for (std::size_t i = 1; i < m; ++i) r = r * (d + i) / i;
  return r;
}

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Fp, GrlexLess>;

  Polynomial() = default;
  Polynomial(std::size_t num_vars, std::uint32_t p) : m_(num_vars), p_(p) {
    if (num_vars > kMaxVars) throw Error(ErrorKind::OutOfRange, "too many variables");
  }

  static Polynomial constant(std::size_t num_vars, Fp c) {
    Polynomial f(num_vars, c.modulus());
    f.add(Monomial{}, c);
    return f;
  }

  static Polynomial variable(std::size_t num_vars, std::size_t i, std::uint32_t p) {
    Polynomial f(num_vars, p);
    f.add(Monomial::variable(i), Fp::one(p));
    return f;
  }

  /// sum_i coeffs[i] * x_i.
  static Polynomial linear_form(const std::vector<Fp>& coeffs, std::uint32_t p) {
    Polynomial f(coeffs.size(), p);
    for (std::size_t i = 0; i < coeffs.size(); ++i) f.add(Monomial::variable(i), coeffs[i]);
    return f;
  }

  std::size_t num_vars() const noexcept { return m_; }
  std::uint32_t modulus() const noexcept { return p_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Largest total degree of a term; 0 for the zero polynomial.
  unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

  Fp coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Fp::zero(p_) : it->second;
  }

  void add(const Monomial& mono, Fp c) {
    for (std::size_t i = m_; i < kMaxVars; ++i)
      if (mono.exp[i] != 0) throw Error(ErrorKind::ArityMismatch, "monomial uses too many variables");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial operator+(const Polynomial& o) const {
    check_arity(o);
    Polynomial r = *this;
    for (const auto& [mono, c] : o.terms_) r.add(mono, c);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const { return *this + o * Fp(p_, -1); }

  Polynomial operator*(Fp s) const {
    Polynomial r(m_, p_);
    if (s.is_zero()) return r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mono, c * s);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_arity(o);
    Polynomial r(m_, p_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) r.add(ma * mb, ca * cb);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  /// Text form, e.g. "3*x1^2*x2 + 5"; highest terms first.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      const auto& [mono, c] = *it;
      std::vector<std::string> factors;
      for (std::size_t i = 0; i < m_; ++i) {
        if (mono.exp[i] == 0) continue;
        std::string v = "x" + std::to_string(i + 1);
        if (mono.exp[i] > 1) v += "^" + std::to_string(mono.exp[i]);
        factors.push_back(v);
      }
      if (factors.empty() || c.value() != 1) factors.insert(factors.begin(), std::to_string(c.value()));
      for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
    }
    return os.str();
  }

 private:
  void check_arity(const Polynomial& o) const {
    if (m_ != o.m_) throw Error(ErrorKind::ArityMismatch, "polynomials in different numbers of variables");
  }

  std::size_t m_ = 0;
  std::uint32_t p_ = 2;
  TermMap terms_;
};

inline Polynomial poly_multiply(const Polynomial& f, const Polynomial& e) { return f * e; }

/**
 * Substitute x_i -> sum_k m(i, k) y_k for an (num_vars x k) matrix; the result
 * is a polynomial in k variables y_1..y_k.
 */
inline Polynomial pullback(const Polynomial& f, const Matrix& m) {
  if (m.rows() != f.num_vars())
    throw Error(ErrorKind::ArityMismatch, "substitution matrix has wrong number of rows");
  const std::uint32_t p = f.modulus();
  const std::size_t k = m.cols();
  Polynomial out(k, p);
  if (f.is_zero()) return out;

  // powers[i][e] = (row i of m as a linear form)^e
  std::vector<std::vector<Polynomial>> powers(f.num_vars());
  for (std::size_t i = 0; i < f.num_vars(); ++i) {
    std::vector<Fp> row(m.row(i).begin(), m.row(i).end());
    powers[i].push_back(Polynomial::constant(k, Fp::one(p)));
    powers[i].push_back(Polynomial::linear_form(row, p));
  }
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
    return powers[i][e];
  };
  for (const auto& [mono, c] : f.terms()) {
    Polynomial term = Polynomial::constant(k, c);
    for (std::size_t i = 0; i < f.num_vars(); ++i)
      if (mono.exp[i] != 0) term = term * power(i, mono.exp[i]);
    out += term;
  }
  return out;
}

/// f o M for a square M: each x_i becomes the linear form (x o M)_i.
inline Polynomial substitute_linear(const Polynomial& f, const Matrix& m) {
  if (!m.is_square() || m.rows() != f.num_vars())
    throw Error(ErrorKind::ArityMismatch, "substitution matrix must be num_vars x num_vars");
  return pullback(f, m);
}

/**
 * Pull f back along t -> sum_b t_b s_b, where s_b are the columns of
 * `basis_columns` (n x r). The result is a polynomial in r variables.
 */
inline Polynomial restrict_to_subspace(const Polynomial& f, const Matrix& basis_columns) {
  return pullback(f, basis_columns);
}

inline Polynomial restrict_to_subspace(const Polynomial& f, const Subspace& s) {
  return pullback(f, s.basis_columns());
}

}  // namespace hhcross
