#pragma once

/**
 * @file io.hpp
 * @brief Problem files and JSON class files.
 *
 * Problem file format (TOML-like):
 *
 *     # swap on F_p^2
 *     p = 7                       # optional; suggested when absent
 *     dim = 2
 *     generators = [ [[0,1],[1,0]] ]
 *     omega = [[0,1],[-1,0]]      # optional
 *
 *     [options]
 *     max_group_size = 256
 *     max_poly_degree = 3
 *     seed = 42
 *
 * Array values may span several lines and may carry trailing commas.
 */

#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hhcross/error.hpp"
#include "hhcross/groups.hpp"
#include "hhcross/hhalgebra.hpp"
#include "hhcross/symplectic.hpp"

namespace hhcross {

inline constexpr int kSchemaVersion = 1;

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct ProblemOptions {
  std::size_t max_group_size = kDefaultGroupBound;
  unsigned max_poly_degree = 3;
  std::uint64_t seed = 42;
};

struct ProblemSpec {
  std::string name;
  std::optional<std::uint32_t> p;
  std::size_t dim = 0;
  std::vector<IntMatrix> generators;
  std::optional<IntMatrix> omega;
  ProblemOptions options;
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline int bracket_balance(const std::string& s) {
  int depth = 0;
  bool in_string = false;
  for (char c : s) {
    if (c == '"') in_string = !in_string;
    if (in_string) continue;
    if (c == '[') ++depth;
    if (c == ']') --depth;
  }
  return depth;
}

/// Remove commas directly followed (modulo whitespace) by a closing bracket.
inline std::string drop_trailing_commas(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == ',') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == ']') continue;
    }
    out.push_back(s[i]);
  }
  return out;
}

inline IntMatrix to_int_matrix(const nlohmann::json& v, const std::string& where) {
  if (!v.is_array()) throw Error(ErrorKind::InvalidInput, where + ": expected a matrix (list of rows)");
  IntMatrix m;
  for (const auto& row : v) {
    if (!row.is_array()) throw Error(ErrorKind::InvalidInput, where + ": matrix row is not a list");
    std::vector<std::int64_t> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw Error(ErrorKind::InvalidInput, where + ": entries must be integers");
      r.push_back(x.get<std::int64_t>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

inline void check_square(const IntMatrix& m, std::size_t n, const std::string& where) {
  if (m.size() != n) throw Error(ErrorKind::InvalidInput, where + ": expected " + std::to_string(n) + " rows");
  for (const auto& r : m)
    if (r.size() != n)
      throw Error(ErrorKind::InvalidInput, where + ": expected " + std::to_string(n) + " columns");
}

}  // namespace detail

inline ProblemSpec parse_problem(std::istream& in) {
  ProblemSpec spec;
  std::string section;
  std::string line;
  std::size_t lineno = 0;
  bool have_dim = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t start_line = lineno;
    std::string text = detail::trim(detail::strip_comment(line));
    if (text.empty()) continue;
    const std::string where = "line " + std::to_string(start_line);
    if (text.front() == '[' && text.back() == ']' && text.find('=') == std::string::npos) {
      section = detail::trim(text.substr(1, text.size() - 2));
      if (section != "options") throw Error(ErrorKind::InvalidInput, where + ": unknown table [" + section + "]");
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidInput, where + ": expected key = value");
    const std::string key = detail::trim(text.substr(0, eq));
    std::string value = detail::trim(text.substr(eq + 1));
    while (detail::bracket_balance(value) > 0) {
      if (!std::getline(in, line))
        throw Error(ErrorKind::InvalidInput, where + ": unterminated list for '" + key + "'");
      ++lineno;
      value += " " + detail::trim(detail::strip_comment(line));
    }
    nlohmann::json v;
    try {
      v = nlohmann::json::parse(detail::drop_trailing_commas(value));
    } catch (const nlohmann::json::exception&) {
      throw Error(ErrorKind::InvalidInput, where + ": cannot parse value of '" + key + "'");
    }
    const std::string field = (section.empty() ? "" : section + ".") + key;
    auto need_uint = [&](const nlohmann::json& x) {
      if (!x.is_number_unsigned()) throw Error(ErrorKind::InvalidInput, where + ": '" + field + "' must be a non-negative integer");
      return x.get<std::uint64_t>();
    };
    if (field == "name") {
      if (!v.is_string()) throw Error(ErrorKind::InvalidInput, where + ": 'name' must be a string");
      spec.name = v.get<std::string>();
    } else if (field == "p") {
      spec.p = static_cast<std::uint32_t>(need_uint(v));
    } else if (field == "dim") {
      spec.dim = need_uint(v);
      have_dim = true;
    } else if (field == "generators") {
      if (!v.is_array()) throw Error(ErrorKind::InvalidInput, where + ": 'generators' must be a list of matrices");
      for (std::size_t k = 0; k < v.size(); ++k)
        spec.generators.push_back(detail::to_int_matrix(v[k], where + ", generator " + std::to_string(k)));
    } else if (field == "omega") {
      spec.omega = detail::to_int_matrix(v, where + ", omega");
    } else if (field == "options.max_group_size") {
      spec.options.max_group_size = need_uint(v);
    } else if (field == "options.max_poly_degree") {
      spec.options.max_poly_degree = static_cast<unsigned>(need_uint(v));
    } else if (field == "options.seed") {
      spec.options.seed = need_uint(v);
    } else {
      throw Error(ErrorKind::InvalidInput, where + ": unknown key '" + field + "'");
    }
  }
  if (!have_dim || spec.dim == 0) throw Error(ErrorKind::InvalidInput, "missing positive 'dim'");
  if (spec.dim > 8) throw Error(ErrorKind::InvalidInput, "'dim' larger than 8 is not supported");
  if (spec.generators.empty()) throw Error(ErrorKind::InvalidInput, "missing 'generators'");
  for (std::size_t k = 0; k < spec.generators.size(); ++k)
    detail::check_square(spec.generators[k], spec.dim, "generator " + std::to_string(k));
  if (spec.omega) detail::check_square(*spec.omega, spec.dim, "omega");
  return spec;
}

inline ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open problem file '" + path + "'");
  return parse_problem(in);
}

/// A loaded problem: field, group and (optionally) the symplectic context.
struct Problem {
  ProblemSpec spec;
  std::uint32_t p = 0;
  bool p_suggested = false;
  GroupPtr group;
  std::shared_ptr<const SymplecticCtx> symplectic;
};

/// Prime with p > 2 dim V, so that the cochain oracle applies in all degrees.
inline PrimeSuggestion suggest_prime(const ProblemSpec& spec) {
  return suggest_prime(spec.generators, spec.dim, static_cast<std::uint32_t>(2 * spec.dim),
                       spec.options.max_group_size);
}

inline Problem make_problem(const ProblemSpec& spec) {
  Problem pr;
  pr.spec = spec;
  if (spec.p) {
    pr.p = *spec.p;
  } else {
    pr.p = suggest_prime(spec).p;
    pr.p_suggested = true;
  }
  pr.group = std::make_shared<const GroupData>(generate_group(spec.generators, pr.p, spec.options.max_group_size));
  if (spec.omega)
    pr.symplectic = std::make_shared<const SymplecticCtx>(pr.group, Matrix::from_rows(*spec.omega, pr.p));
  return pr;
}

// ---------------------------------------------------------------------------
// JSON encodings

inline nlohmann::json matrix_json(const Matrix& m) { return m.to_rows(); }

/// Columns of a frame as a list of vectors.
inline nlohmann::json columns_json(const Matrix& m) { return m.transpose().to_rows(); }

inline nlohmann::json multivector_json(const Multivector& mv) {
  nlohmann::json out = nlohmann::json::array();
  for (auto [mask, c] : mv.terms()) out.push_back({mask_indices(mask), c.value()});
  return out;
}

inline nlohmann::json polynomial_json(const Polynomial& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [mono, c] : f.terms()) {
    std::vector<unsigned> e(mono.exp.begin(), mono.exp.begin() + static_cast<std::ptrdiff_t>(f.num_vars()));
    out.push_back({e, c.value()});
  }
  return out;
}

inline nlohmann::json frame_json(const GroupData& grp, std::size_t g) {
  const auto& fr = grp.frame(g);
  return {{"g_index", g},
          {"tangent_basis", columns_json(fr.tangent_basis())},
          {"normal_basis", columns_json(fr.normal_basis())}};
}

inline nlohmann::json class_json(const HHClass& c) {
  const GroupData& grp = *c.group();
  nlohmann::json terms = nlohmann::json::array();
  std::vector<std::size_t> used;
  for (const auto& t : c.terms()) {
    terms.push_back({{"g_index", t.g},
                     {"tangent", multivector_json(t.tangent)},
                     {"normal", multivector_json(t.normal)},
                     {"poly", polynomial_json(t.coeff)},
                     {"poly_text", t.coeff.to_string()}});
    if (used.empty() || used.back() != t.g) used.push_back(t.g);
  }
  nlohmann::json frames = nlohmann::json::array();
  for (auto g : used) frames.push_back(frame_json(grp, g));
  return {{"schema_version", kSchemaVersion},
          {"kind", "hh_class"},
          {"p", grp.p()},
          {"dim", grp.dim()},
          {"group_order", grp.size()},
          {"degree", c.degree()},
          {"terms", terms},
          {"frames", frames}};
}

namespace detail {

inline Multivector multivector_from_json(const nlohmann::json& v, std::size_t ambient, std::size_t degree,
                                         std::uint32_t p, const std::string& where) {
  Multivector mv(ambient, degree, p);
  if (!v.is_array()) throw Error(ErrorKind::InvalidInput, where + ": expected [[subset, coeff], ...]");
  for (const auto& entry : v) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() || !entry[1].is_number_integer())
      throw Error(ErrorKind::InvalidInput, where + ": expected [subset, coeff]");
    std::vector<std::size_t> idx;
    for (const auto& i : entry[0]) {
      if (!i.is_number_unsigned() || i.get<std::size_t>() >= ambient)
        throw Error(ErrorKind::InvalidInput, where + ": subset index out of range");
      idx.push_back(i.get<std::size_t>());
    }
    const Mask m = indices_mask(idx);
    if (popcount(m) != idx.size()) throw Error(ErrorKind::InvalidInput, where + ": repeated subset index");
    if (idx.size() != degree)
      throw Error(ErrorKind::DegreeInhomogeneous, where + ": subset size differs from the term's degree");
    // The listed order may be unsorted; fold the permutation sign into the coefficient.
    const int sign = [&] {
      std::size_t inv = 0;
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
          if (idx[a] > idx[b]) ++inv;
      return inv % 2 == 0 ? 1 : -1;
    }();
    mv.add(m, Fp(p, entry[1].get<std::int64_t>() * sign));
  }
  return mv;
}

inline Polynomial polynomial_from_json(const nlohmann::json& v, std::size_t num_vars, std::uint32_t p,
                                       const std::string& where) {
  Polynomial f(num_vars, p);
  if (!v.is_array()) throw Error(ErrorKind::InvalidInput, where + ": expected [[exponents, coeff], ...]");
  for (const auto& entry : v) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() || !entry[1].is_number_integer())
      throw Error(ErrorKind::InvalidInput, where + ": expected [exponents, coeff]");
    if (entry[0].size() != num_vars)
      throw Error(ErrorKind::ArityMismatch, where + ": exponent vector must have length dim V^g = " +
                                                std::to_string(num_vars));
    Monomial mono;
    for (std::size_t i = 0; i < num_vars; ++i) {
      if (!entry[0][i].is_number_unsigned() || entry[0][i].get<unsigned>() > 255)
        throw Error(ErrorKind::InvalidInput, where + ": bad exponent");
      mono.exp[i] = static_cast<std::uint8_t>(entry[0][i].get<unsigned>());
    }
    f.add(mono, Fp(p, entry[1].get<std::int64_t>()));
  }
  return f;
}

}  // namespace detail

inline HHClass class_from_json(const nlohmann::json& j, const GroupPtr& group) {
  const GroupData& grp = *group;
  if (!j.is_object() || !j.contains("degree") || !j.contains("terms"))
    throw Error(ErrorKind::InvalidInput, "class file needs 'degree' and 'terms'");
  if (j.contains("schema_version") && j["schema_version"] != kSchemaVersion)
    throw Error(ErrorKind::InvalidInput, "unsupported schema_version");
  if (j.contains("p") && j["p"] != grp.p())
    throw Error(ErrorKind::ContextMismatch, "class file was written for p = " + j["p"].dump());
  if (j.contains("group_order") && j["group_order"] != grp.size())
    throw Error(ErrorKind::ContextMismatch, "class file was written for a group of order " + j["group_order"].dump());
  if (j.contains("frames")) {
    for (const auto& fr : j["frames"]) {
      const std::size_t g = fr.at("g_index").get<std::size_t>();
      if (g >= grp.size() || frame_json(grp, g) != fr)
        throw Error(ErrorKind::ContextMismatch, "recorded frame of element " + std::to_string(g) + " differs");
    }
  }
  const std::size_t degree = j["degree"].get<std::size_t>();
  HHClass c(group, degree);
  std::size_t k = 0;
  for (const auto& t : j["terms"]) {
    const std::string where = "term " + std::to_string(k++);
    const std::size_t g = t.at("g_index").get<std::size_t>();
    if (g >= grp.size()) throw Error(ErrorKind::OutOfRange, where + ": g_index out of range");
    const auto& fr = grp.frame(g);
    if (fr.codim > degree || degree - fr.codim > fr.fixed_dim())
      throw Error(ErrorKind::DegreeInhomogeneous, where + ": element " + std::to_string(g) +
                                                     " admits no term of degree " + std::to_string(degree));
    HHTerm term{g,
                detail::multivector_from_json(t.at("tangent"), fr.fixed_dim(), degree - fr.codim, grp.p(),
                                              where + " tangent"),
                detail::multivector_from_json(t.at("normal"), fr.codim, fr.codim, grp.p(), where + " normal"),
                detail::polynomial_from_json(t.at("poly"), fr.fixed_dim(), grp.p(), where + " poly")};
    c.add_term(term);
  }
  return c;
}

inline HHClass load_class(const std::string& path, const GroupPtr& group) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open class file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, "class file '" + path + "' is not valid JSON");
  }
  return class_from_json(j, group);
}

}  // namespace hhcross
