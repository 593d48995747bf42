#pragma once

/**
 * @file verify.hpp
 * @brief Seeded property checks and the JSON report behind `hhcross verify`.
 *
 * Every property draws from its own Rng seeded with the run seed, so the
 * outcome of one property does not depend on which others were selected.
 * Reports contain no timings or addresses and are byte-stable for a seed.
 */

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "hhcross/hhalgebra.hpp"
#include "hhcross/io.hpp"
#include "hhcross/oracle.hpp"
#include "hhcross/random.hpp"
#include "hhcross/symplectic.hpp"

namespace hhcross {

struct VerifyOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  unsigned max_poly_degree = 3;
  std::size_t max_koszul_degree = 4;
  std::size_t max_counterexamples = 3;
};

struct PropertyResult {
  std::string name;
  bool pass = true;
  bool informational = false;  // never affects all_pass
  std::size_t checked = 0;
  std::size_t failures = 0;
  nlohmann::json counterexamples = nlohmann::json::array();
  nlohmann::json details = nlohmann::json::object();

  void record(bool ok, const std::function<nlohmann::json()>& witness, std::size_t cap) {
    ++checked;
    if (ok) return;
    ++failures;
    pass = false;
    if (counterexamples.size() < cap) counterexamples.push_back(witness());
  }

  nlohmann::json to_json() const {
    return {{"name", name},       {"pass", pass},         {"informational", informational},
            {"checked", checked}, {"failures", failures}, {"counterexamples", counterexamples},
            {"details", details}};
  }
};

namespace detail {

inline RandomClassOptions class_options(const VerifyOptions& opt) {
  RandomClassOptions r;
  r.max_poly_degree = opt.max_poly_degree;
  return r;
}

inline nlohmann::json pair_witness(std::size_t trial, const HHClass& a, const HHClass& b) {
  return {{"trial", trial}, {"a", class_json(a)}, {"b", class_json(b)}};
}

inline HHClass random_invariant(Rng& rng, const GroupPtr& grp, std::size_t degree, const RandomClassOptions& o) {
  // Projection can annihilate a class; redraw until it survives.
  for (;;) {
    HHClass c = invariant_project(random_class(rng, grp, degree, o));
    if (!c.is_zero()) return c;
  }
}

inline Fp sign_of(std::uint32_t p, std::size_t parity) { return Fp(p, parity % 2 == 0 ? 1 : -1); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Group-level properties (exhaustive, trials ignored)

inline PropertyResult check_group_axioms(const GroupData& grp, const VerifyOptions& opt) {
  PropertyResult r{"group-axioms"};
  const std::size_t n = grp.size();
  const Matrix id = Matrix::identity(grp.dim(), grp.p());
  r.record(grp.element(0) == id, [] { return nlohmann::json("element 0 is not the identity"); },
           opt.max_counterexamples);
  for (std::size_t g = 0; g < n; ++g) {
    r.record(grp.multiply(g, grp.inverse(g)) == 0 && grp.multiply(grp.inverse(g), g) == 0,
             [g] { return nlohmann::json({{"inverse", g}}); }, opt.max_counterexamples);
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t gh = grp.multiply(g, h);
      r.record(grp.element(g) * grp.element(h) == grp.element(gh),
               [g, h] { return nlohmann::json({{"table", {g, h}}}); }, opt.max_counterexamples);
    }
    r.record(grp.element(g).pow(grp.order_of(g)) == id, [g] { return nlohmann::json({{"order", g}}); },
             opt.max_counterexamples);
  }
  return r;
}

inline PropertyResult check_fixed_space_intersection(const GroupData& grp, const VerifyOptions& opt) {
  PropertyResult r{"fixed-space-intersection"};
  std::size_t applicable = 0;
  for (std::size_t g = 0; g < grp.size(); ++g)
    for (std::size_t h = 0; h < grp.size(); ++h) {
      if (!grp.complements_trivial(g, h)) continue;
      ++applicable;
      const Subspace meet = grp.frame(g).fixed.intersect(grp.frame(h).fixed);
      r.record(grp.frame(grp.multiply(g, h)).fixed == meet,
               [g, h] { return nlohmann::json({{"g", g}, {"h", h}}); }, opt.max_counterexamples);
    }
  r.details["pairs_with_trivial_complement_intersection"] = applicable;
  return r;
}

inline PropertyResult check_koszul_dims(const GroupData& grp, const VerifyOptions& opt) {
  PropertyResult r{"koszul-dims"};
  for (std::size_t g = 0; g < grp.size(); ++g) {
    const KoszulComplex kc(grp, g);
    for (std::size_t q = 0; q <= grp.dim(); ++q)
      for (unsigned d = 0; d <= opt.max_koszul_degree; ++d) {
        const std::size_t got = kc.cohomology_dim(q, d);
        const std::size_t want = closed_form_dim(grp, g, q, d);
        r.record(got == want,
                 [&] { return nlohmann::json({{"g", g}, {"q", q}, {"D", d}, {"got", got}, {"expected", want}}); },
                 opt.max_counterexamples);
      }
  }
  return r;
}

inline PropertyResult check_d_squared(const GroupData& grp, const VerifyOptions& opt) {
  PropertyResult r{"d-squared"};
  for (std::size_t g = 0; g < grp.size(); ++g) {
    const KoszulComplex kc(grp, g);
    for (std::size_t q = 0; q + 2 <= grp.dim(); ++q)
      for (unsigned d = 0; d + 2 <= opt.max_koszul_degree + 1; ++d) {
        const Matrix dd = kc.differential(q + 1, d + 1) * kc.differential(q, d);
        r.record(dd == Matrix(dd.rows(), dd.cols(), grp.p()),
                 [&] { return nlohmann::json({{"g", g}, {"q", q}, {"D", d}}); }, opt.max_counterexamples);
      }
  }
  return r;
}

/// Against the eigenframe the Koszul forms are diagonal with entries 1 - lambda_i.
inline PropertyResult check_koszul_eigenframe(const GroupData& grp, const VerifyOptions& opt) {
  PropertyResult r{"koszul-eigenframe"};
  const std::uint32_t p = grp.p();
  for (std::size_t g = 0; g < grp.size(); ++g) {
    const auto& eig = grp.frame(g).eigen;
    const KoszulComplex kc(grp, g, eig.basis);
    std::vector<Fp> diag;
    for (const Fp& l : eig.eigenvalues) diag.push_back(Fp::one(p) - l);
    r.record(kc.koszul_forms() == Matrix::diagonal(diag, p), [g] { return nlohmann::json({{"g", g}}); },
             opt.max_counterexamples);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Randomized algebra properties

inline PropertyResult check_oracle_equivalence(const GroupPtr& grp, const VerifyOptions& opt) {
  PropertyResult r{"oracle-equivalence"};
  Rng rng(opt.seed);
  const auto o = detail::class_options(opt);
  std::vector<std::size_t> degs = admissible_degrees(*grp);
  OracleStats ostats;
  ProductStats pstats;
  std::size_t skipped = 0;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const std::size_t i = rng.pick(degs), j = rng.pick(degs);
    const HHClass a = random_class(rng, grp, i, o), b = random_class(rng, grp, j, o);
    if (i + j >= grp->p()) {
      ++skipped;
      continue;
    }
    const HHClass fast = product(a, b, &pstats);
    const HHClass slow = oracle_product(a, b, &ostats);
    r.record(fast == slow, [&] { return detail::pair_witness(t, a, b); }, opt.max_counterexamples);
  }
  // Term pairs with overlapping complements must contribute nothing to the oracle either.
  if (ostats.overlapping_pairs_nonzero != 0) r.pass = false;
  r.details = {{"term_pairs", ostats.pairs},
               {"overlapping_pairs", ostats.overlapping_pairs},
               {"overlapping_pairs_nonzero", ostats.overlapping_pairs_nonzero},
               {"closed_form_vanished_by_support", pstats.vanished_by_support},
               {"skipped_p_too_small", skipped}};
  return r;
}

inline PropertyResult check_unit_law(const GroupPtr& grp, const VerifyOptions& opt) {
  PropertyResult r{"unit-law"};
  Rng rng(opt.seed);
  const auto o = detail::class_options(opt);
  const auto degs = admissible_degrees(*grp);
  const HHClass one = unit(grp);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const HHClass a = detail::random_invariant(rng, grp, rng.pick(degs), o);
    r.record(product(one, a) == a && product(a, one) == a, [&] { return detail::pair_witness(t, one, a); },
             opt.max_counterexamples);
  }
  return r;
}

inline PropertyResult check_graded_commutativity(const GroupPtr& grp, const VerifyOptions& opt) {
  PropertyResult r{"graded-commutativity"};
  Rng rng(opt.seed);
  const auto o = detail::class_options(opt);
  const auto degs = admissible_degrees(*grp);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const std::size_t i = rng.pick(degs), j = rng.pick(degs);
    const HHClass a = detail::random_invariant(rng, grp, i, o), b = detail::random_invariant(rng, grp, j, o);
    r.record(product(a, b) == product(b, a) * detail::sign_of(grp->p(), i * j),
             [&] { return detail::pair_witness(t, a, b); }, opt.max_counterexamples);
  }
  return r;
}

inline PropertyResult check_associativity(const GroupPtr& grp, const VerifyOptions& opt, bool invariant_only) {
  PropertyResult r{invariant_only ? "associativity" : "associativity-full"};
  r.informational = !invariant_only;
  Rng rng(opt.seed);
  const auto o = detail::class_options(opt);
  const auto degs = admissible_degrees(*grp);
  auto draw = [&](std::size_t deg) {
    return invariant_only ? detail::random_invariant(rng, grp, deg, o) : random_class(rng, grp, deg, o);
  };
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const std::size_t i = rng.pick(degs), j = rng.pick(degs), k = rng.pick(degs);
    const HHClass a = draw(i), b = draw(j), c = draw(k);
    r.record(product(product(a, b), c) == product(a, product(b, c)),
             [&] {
               auto w = detail::pair_witness(t, a, b);
               w["c"] = class_json(c);
               return w;
             },
             opt.max_counterexamples);
  }
  return r;
}

inline PropertyResult check_equivariance(const GroupPtr& grp, const VerifyOptions& opt) {
  PropertyResult r{"equivariance"};
  Rng rng(opt.seed);
  const auto o = detail::class_options(opt);
  const auto degs = admissible_degrees(*grp);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const HHClass a = random_class(rng, grp, rng.pick(degs), o);
    const HHClass b = random_class(rng, grp, rng.pick(degs), o);
    const std::size_t h = rng.below(grp->size());
    r.record(conjugation_action(h, product(a, b)) ==
                 product(conjugation_action(h, a), conjugation_action(h, b)),
             [&] {
               auto w = detail::pair_witness(t, a, b);
               w["h"] = h;
               return w;
             },
             opt.max_counterexamples);
  }
  return r;
}

inline PropertyResult check_projection_idempotent(const GroupPtr& grp, const VerifyOptions& opt) {
  PropertyResult r{"projection-idempotent"};
  Rng rng(opt.seed);
  const auto o = detail::class_options(opt);
  const auto degs = admissible_degrees(*grp);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const HHClass a = random_class(rng, grp, rng.pick(degs), o);
    const HHClass pa = invariant_project(a);
    bool ok = invariant_project(pa) == pa;
    for (std::size_t h = 0; ok && h < grp->size(); ++h) ok = conjugation_action(h, pa) == pa;
    r.record(ok, [&] { return nlohmann::json({{"trial", t}, {"a", class_json(a)}}); }, opt.max_counterexamples);
  }
  return r;
}

// ---------------------------------------------------------------------------
// HKR cochains

inline PropertyResult check_hkr_inclusion(const GroupPtr& grp, const VerifyOptions& opt) {
  PropertyResult r{"hkr-inclusion"};
  Rng rng(opt.seed);
  const auto o = detail::class_options(opt);
  const auto degs = admissible_degrees(*grp);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const std::size_t deg = rng.pick(degs);
    if (deg >= grp->p()) continue;
    // A single-component class, so the round trip is term by term.
    HHClass a = random_class(rng, grp, deg, o);
    const auto first = a.terms().front();
    HHClass one_term(grp, deg);
    one_term.add_term(first);
    const Cochain c = hkr_cochain(*grp, first.g, include_term(*grp, first), first.coeff, grp->frame(first.g).coords);
    HHClass back(grp, deg);
    for (const auto& term : read_off(*grp, c)) back.add_term(term);
    r.record(back == one_term, [&] { return nlohmann::json({{"trial", t}, {"a", class_json(one_term)}}); },
             opt.max_counterexamples);
  }
  return r;
}

inline PropertyResult check_hkr_antisymmetry(const GroupPtr& grp, const VerifyOptions& opt) {
  PropertyResult r{"hkr-antisymmetry"};
  Rng rng(opt.seed);
  const auto o = detail::class_options(opt);
  const auto degs = admissible_degrees(*grp);
  const std::uint32_t p = grp->p();
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const std::size_t deg = rng.pick(degs);
    if (deg < 2 || deg >= p) continue;
    const auto term = random_class(rng, grp, deg, o).terms().front();
    const Cochain c = hkr_cochain(*grp, term.g, include_term(*grp, term), term.coeff, grp->frame(term.g).coords);
    bool ok = true;
    for (const auto& [args, value] : c.table) {
      for (std::size_t k = 0; ok && k + 1 < args.size(); ++k) {
        ArgTuple swapped = args;
        std::swap(swapped[k], swapped[k + 1]);
        ok = c.at(swapped) == value * Fp(p, -1);
      }
      if (!ok) break;
    }
    r.record(ok, [&] { return nlohmann::json({{"trial", t}, {"g", term.g}}); }, opt.max_counterexamples);
  }
  return r;
}

/// With G trivial the product is the wedge of multivector fields.
inline PropertyResult check_hkr_degeneration(const GroupData& grp, const VerifyOptions& opt) {
  PropertyResult r{"hkr-degeneration"};
  const std::size_t n = grp.dim();
  const std::uint32_t p = grp.p();
  auto trivial = std::make_shared<const GroupData>(generate_group({Matrix::identity(n, p)}));
  Rng rng(opt.seed);
  const auto o = detail::class_options(opt);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const std::size_t i = rng.below(n + 1), j = rng.below(n + 1);
    const HHClass a = random_class(rng, trivial, i, o), b = random_class(rng, trivial, j, o);
    HHClass expected(trivial, i + j);
    if (i + j <= n)
      for (const auto& [ka, fa] : a.components())
        for (const auto& [kb, fb] : b.components()) {
          const Multivector w = wedge(Multivector::basis(n, ka.tangent, Fp::one(p)),
                                      Multivector::basis(n, kb.tangent, Fp::one(p)));
          for (auto [mask, c] : w.terms()) expected.add(0, mask, fa * fb * c);
        }
    r.record(product(a, b) == expected, [&] { return detail::pair_witness(t, a, b); }, opt.max_counterexamples);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Symplectic layer

inline Multivector ambient_volume(const SymplecticCtx& ctx, std::size_t g) {
  return map_components(ctx.group()->frame(g).normal_basis(), ctx.normal_volume(g));
}

inline PropertyResult check_symplectic_volume(const SymplecticCtx& ctx, const VerifyOptions& opt) {
  PropertyResult r{"symplectic-volume-multiplicativity"};
  const GroupData& grp = *ctx.group();
  for (std::size_t g = 0; g < grp.size(); ++g)
    for (std::size_t h = 0; h < grp.size(); ++h) {
      if (!grp.complements_trivial(g, h)) continue;
      const Multivector lhs = ambient_volume(ctx, grp.multiply(g, h));
      const Multivector rhs = wedge(ambient_volume(ctx, g), ambient_volume(ctx, h));
      r.record(lhs == rhs, [g, h] { return nlohmann::json({{"g", g}, {"h", h}}); }, opt.max_counterexamples);
    }
  return r;
}

inline PropertyResult check_symplectic_intertwining(const SymplecticCtx& ctx, const VerifyOptions& opt) {
  PropertyResult r{"symplectic-intertwining"};
  const GroupPtr& grp = ctx.group();
  Rng rng(opt.seed);
  const auto o = detail::class_options(opt);
  const auto degs = admissible_degrees(*grp);
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const auto a = random_symplectic_class(rng, grp, rng.pick(degs), o);
    const auto b = random_symplectic_class(rng, grp, rng.pick(degs), o);
    const HHClass ta = trivialize(a, ctx), tb = trivialize(b, ctx);
    r.record(trivialize(sympl_product(a, b), ctx) == product(ta, tb),
             [&] { return detail::pair_witness(t, ta, tb); }, opt.max_counterexamples);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Driver

inline const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {
      "group-axioms",         "fixed-space-intersection",        "koszul-dims",           "d-squared",
      "koszul-eigenframe",    "oracle-equivalence", "unit-law",         "graded-commutativity",
      "associativity",        "associativity-full", "equivariance",     "projection-idempotent",
      "hkr-inclusion",        "hkr-antisymmetry",   "hkr-degeneration", "symplectic-volume-multiplicativity",
      "symplectic-intertwining"};
  return names;
}

inline bool needs_symplectic(const std::string& name) { return name.rfind("symplectic-", 0) == 0; }

inline PropertyResult run_property(const std::string& name, const GroupPtr& grp, const SymplecticCtx* ctx,
                                   const VerifyOptions& opt) {
  if (name == "group-axioms") return check_group_axioms(*grp, opt);
  if (name == "fixed-space-intersection") return check_fixed_space_intersection(*grp, opt);
  if (name == "koszul-dims") return check_koszul_dims(*grp, opt);
  if (name == "d-squared") return check_d_squared(*grp, opt);
  if (name == "koszul-eigenframe") return check_koszul_eigenframe(*grp, opt);
  if (name == "oracle-equivalence") return check_oracle_equivalence(grp, opt);
  if (name == "unit-law") return check_unit_law(grp, opt);
  if (name == "graded-commutativity") return check_graded_commutativity(grp, opt);
  if (name == "associativity") return check_associativity(grp, opt, true);
  if (name == "associativity-full") return check_associativity(grp, opt, false);
  if (name == "equivariance") return check_equivariance(grp, opt);
  if (name == "projection-idempotent") return check_projection_idempotent(grp, opt);
  if (name == "hkr-inclusion") return check_hkr_inclusion(grp, opt);
  if (name == "hkr-antisymmetry") return check_hkr_antisymmetry(grp, opt);
  if (name == "hkr-degeneration") return check_hkr_degeneration(*grp, opt);
  if (needs_symplectic(name)) {
    if (ctx == nullptr) throw Error(ErrorKind::InvalidInput, "property '" + name + "' needs omega in the problem file");
    if (name == "symplectic-volume-multiplicativity") return check_symplectic_volume(*ctx, opt);
    if (name == "symplectic-intertwining") return check_symplectic_intertwining(*ctx, opt);
  }
  throw Error(ErrorKind::InvalidInput, "unknown property '" + name + "'");
}

/// Runs `names` ("all" expands to every applicable property) and assembles the report.
inline nlohmann::json verify_report(const GroupPtr& grp, const SymplecticCtx* ctx, std::vector<std::string> names,
                                    const VerifyOptions& opt) {
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    names.clear();
    for (const auto& n : property_names())
      if (ctx != nullptr || !needs_symplectic(n)) names.push_back(n);
  }
  nlohmann::json props = nlohmann::json::array();
  bool all_pass = true;
  for (const auto& n : names) {
    const PropertyResult r = run_property(n, grp, ctx, opt);
    if (!r.pass && !r.informational) all_pass = false;
    props.push_back(r.to_json());
  }
  return {{"schema_version", kSchemaVersion},
          {"kind", "verify_report"},
          {"seed", opt.seed},
          {"trials", opt.trials},
          {"max_poly_degree", opt.max_poly_degree},
          {"p", grp->p()},
          {"group_order", grp->size()},
          {"properties", props},
          {"all_pass", all_pass}};
}

}  // namespace hhcross
