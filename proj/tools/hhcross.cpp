// hhcross: command-line front end.
//
// Exit codes: 0 success / all properties pass, 1 validation error, 2 property failure.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hhcross/hhalgebra.hpp"
#include "hhcross/io.hpp"
#include "hhcross/oracle.hpp"
#include "hhcross/verify.hpp"

using namespace hhcross;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitPropertyFailure = 2;

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write '" + out + "'");
  f << j.dump(2) << "\n";
}

json eigenvalues_json(const Eigenframe& e) {
  json out = json::array();
  for (const Fp& l : e.eigenvalues) out.push_back(l.value());
  return out;
}

json group_info(const Problem& pr) {
  const GroupData& grp = *pr.group;
  json elements = json::array();
  for (std::size_t g = 0; g < grp.size(); ++g) {
    const auto& fr = grp.frame(g);
    json e = {{"index", g},
              {"matrix", matrix_json(grp.element(g))},
              {"order", grp.order_of(g)},
              {"codim", fr.codim},
              {"fixed_basis", columns_json(fr.tangent_basis())},
              {"semiinvariant_basis", columns_json(fr.normal_basis())},
              {"eigenvalues", eigenvalues_json(fr.eigen)}};
    if (pr.symplectic) {
      e["s_g"] = multivector_json(pr.symplectic->normal_volume(g));
    }
    elements.push_back(std::move(e));
  }
  json table = json::array();
  for (std::size_t g = 0; g < grp.size(); ++g) {
    json row = json::array();
    for (std::size_t h = 0; h < grp.size(); ++h) row.push_back(grp.complements_trivial(g, h));
    table.push_back(std::move(row));
  }
  return {{"schema_version", kSchemaVersion},
          {"kind", "group_info"},
          {"p", grp.p()},
          {"p_suggested", pr.p_suggested},
          {"dim", grp.dim()},
          {"group_order", grp.size()},
          {"exponent", grp.field().exponent()},
          {"zeta", grp.field().zeta().value()},
          {"elements", elements},
          {"intersection_condition", table}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology of k[G] x k[V] over F_p"};
  app.require_subcommand(1);
  std::string spec_path;
  app.add_option("--spec", spec_path, "problem file")->required();

  auto* info = app.add_subcommand("group-info", "group elements, eigenframes and the intersection table");

  std::size_t degree = 0;
  unsigned poly_degree = 0;
  auto* basis = app.add_subcommand("hh-basis", "basis of the degree-i, polynomial-degree-D graded piece");
  basis->add_option("--degree", degree, "cohomological degree i")->required();
  basis->add_option("--poly-degree", poly_degree, "polynomial degree D")->required();

  std::string class_a, class_b, out;
  bool use_oracle = false;
  auto* mult = app.add_subcommand("multiply", "product of two class files");
  mult->add_option("A", class_a, "left factor")->required()->check(CLI::ExistingFile);
  mult->add_option("B", class_b, "right factor")->required()->check(CLI::ExistingFile);
  mult->add_flag("--oracle", use_oracle, "also compute the cochain-level product and compare");
  mult->add_option("--out", out, "write the product class here instead of stdout");

  auto* proj = app.add_subcommand("invariant-project", "average a class over the group");
  proj->add_option("A", class_a, "class file")->required()->check(CLI::ExistingFile);
  proj->add_option("--out", out, "write the projected class here instead of stdout");

  std::vector<std::string> properties;
  VerifyOptions vopt;
  std::uint64_t seed = 0;
  unsigned max_poly = 0;
  auto* verify = app.add_subcommand("verify", "run seeded property checks");
  verify->add_option("--property", properties, "property name (repeatable; default all)");
  verify->add_option("--trials", vopt.trials, "random trials per property");
  auto* seed_opt = verify->add_option("--seed", seed, "random seed (default from problem file)");
  auto* maxpoly_opt = verify->add_option("--max-poly-degree", max_poly, "polynomial degree bound");
  verify->add_option("--out", out, "write the report here instead of stdout");

  auto* suggest = app.add_subcommand("suggest-prime", "smallest admissible prime for the generators");

  CLI11_PARSE(app, argc, argv);

  try {
    const ProblemSpec spec = load_problem(spec_path);

    if (suggest->parsed()) {
      const auto s = suggest_prime(spec);
      const auto minimal = suggest_prime(spec.generators, spec.dim, 0, spec.options.max_group_size);
      emit({{"schema_version", kSchemaVersion},
            {"kind", "prime_suggestion"},
            {"p", s.p},
            {"group_order", s.group_order},
            {"exponent", s.exponent},
            {"minimal_p", minimal.p}},
           out);
      return kExitOk;
    }

    const Problem pr = make_problem(spec);

    if (info->parsed()) {
      emit(group_info(pr), out);
      return kExitOk;
    }

    if (basis->parsed()) {
      json classes = json::array();
      for (const auto& c : hh_basis(pr.group, degree, poly_degree)) classes.push_back(class_json(c));
      emit({{"schema_version", kSchemaVersion},
            {"kind", "hh_basis"},
            {"degree", degree},
            {"poly_degree", poly_degree},
            {"size", classes.size()},
            {"classes", classes}},
           out);
      return kExitOk;
    }

    if (mult->parsed()) {
      const HHClass a = load_class(class_a, pr.group);
      const HHClass b = load_class(class_b, pr.group);
      const HHClass c = product(a, b);
      if (!use_oracle) {
        emit(class_json(c), out);
        return kExitOk;
      }
      const HHClass o = oracle_product(a, b);
      const bool equal = c == o;
      if (!out.empty()) emit(class_json(c), out);
      std::cout << json{{"schema_version", kSchemaVersion},
                        {"kind", "multiply_report"},
                        {"product", class_json(c)},
                        {"oracle_product", class_json(o)},
                        {"equal", equal}}
                       .dump(2)
                << "\n";
      return equal ? kExitOk : kExitPropertyFailure;
    }

    if (proj->parsed()) {
      emit(class_json(invariant_project(load_class(class_a, pr.group))), out);
      return kExitOk;
    }

    if (verify->parsed()) {
      vopt.seed = seed_opt->count() ? seed : spec.options.seed;
      vopt.max_poly_degree = maxpoly_opt->count() ? max_poly : spec.options.max_poly_degree;
      const json report = verify_report(pr.group, pr.symplectic.get(), properties, vopt);
      emit(report, out);
      return report["all_pass"].get<bool>() ? kExitOk : kExitPropertyFailure;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
