#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: matrix, verify, decompose, tableaux.
 *
 * Every command produces an OutputDocument (command echo, scalar domain,
 * payload). It is printed either as a key/value text document or, with
 * --json, as a single JSON object. Output is deterministic.
 */

#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hecke/combinat.hpp"
#include "hecke/roots.hpp"
#include "hecke/scalar.hpp"
#include "hecke/specht.hpp"

namespace hecke::cli {

using Json = nlohmann::ordered_json;

struct OutputDocument {
  std::string command;
  std::string domain;
  Json payload = Json::object();

  Json to_json() const { return Json{{"command", command}, {"domain", domain}, {"payload", payload}}; }

  static OutputDocument from_json(const Json& j) {
    return {j.at("command").get<std::string>(), j.at("domain").get<std::string>(), j.at("payload")};
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    os << "domain: " << domain << "\n";
    for (const auto& [key, value] : payload.items()) write_text(os, key, value, 0);
    return os.str();
  }

  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;

 private:
  static std::string inline_value(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string out = "[";
      for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + inline_value(v[k]);
      return out + "]";
    }
    if (v.is_object()) {
      std::string out;
      for (const auto& [k, x] : v.items()) out += (out.empty() ? "" : ", ") + k + "=" + inline_value(x);
      return out;
    }
    return v.dump();
  }

  static void write_text(std::ostream& os, const std::string& key, const Json& value, int depth) {
    const std::string pad(2 * depth, ' ');
    if (value.is_array()) {
      os << pad << key << ":\n";
      for (const auto& item : value) os << pad << "  " << inline_value(item) << "\n";
    } else if (value.is_object()) {
      os << pad << key << ":\n";
      for (const auto& [k, v] : value.items()) write_text(os, k, v, depth + 1);
    } else {
      os << pad << key << ": " << inline_value(value) << "\n";
    }
  }
};

/// Thrown for invalid user input; reported with a nonzero exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Partition parse_shape(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline ScalarDomain parse_domain(const std::optional<int>& p) {
  if (!p) return ScalarDomain::generic();
  if (*p < 3) throw UsageError("p must be >= 3 (got " + std::to_string(*p) + ")");
  return ScalarDomain::root_of_unity(*p);
}

inline std::string echo(const std::string& name, const std::vector<std::pair<std::string, std::string>>& flags) {
  std::string out = name;
  for (const auto& [flag, value] : flags) {
    out += " --" + flag;
    if (!value.empty()) out += " " + value;
  }
  return out;
}

template <class S>
Json sparse_vector_json(const SpechtVector<S>& v, const std::vector<Tableau>& basis) {
  Json out = Json::object();
  for (int k = 0; k < v.coords.rows(); ++k)
    if (!v.coords(k, 0).is_zero()) out[basis[k].to_string()] = v.coords(k, 0).to_string();
  return out;
}

inline Json strip_json(const BoundaryStrip& strip) {
  Json boxes = Json::array();
  for (const auto& [r, c] : strip.boxes) boxes.push_back(std::to_string(r + 1) + "," + std::to_string(c + 1));
  return Json{{"start_row", strip.start_row + 1},
              {"length", strip.length()},
              {"second_row_boxes", strip.second_row_boxes()},
              {"boxes", boxes}};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

inline OutputDocument cmd_matrix(const Partition& shape, int generator, const ScalarDomain& domain) {
  if (generator < 1 || generator >= shape.size())
    throw UsageError("generator out of range: h_" + std::to_string(generator) + " needs 1 <= i <= n-1 = " +
                     std::to_string(shape.size() - 1));
  std::vector<std::pair<std::string, std::string>> flags{{"shape", shape.to_string()}, {"gen", std::to_string(generator)}};
  if (!domain.is_generic()) flags.emplace_back("p", std::to_string(domain.order()));
  OutputDocument doc{detail::echo("matrix", flags), domain.describe()};
  domain.visit([&](const auto& ring) {
    using Ring = std::decay_t<decltype(ring)>;
    SpechtModule<Ring> module(shape, ring);
    Json basis = Json::array();
    for (const auto& t : module.basis()) basis.push_back(t.to_string());
    doc.payload["shape"] = shape.to_string();
    doc.payload["generator"] = generator;
    doc.payload["dimension"] = module.dimension();
    doc.payload["basis"] = basis;
    doc.payload["matrix"] = module.generator_matrix(generator).to_strings();
  });
  return doc;
}

inline OutputDocument cmd_verify(const Partition& shape, const ScalarDomain& domain) {
  std::vector<std::pair<std::string, std::string>> flags{{"shape", shape.to_string()}};
  if (!domain.is_generic()) flags.emplace_back("p", std::to_string(domain.order()));
  OutputDocument doc{detail::echo("verify", flags), domain.describe()};
  domain.visit([&](const auto& ring) {
    using Ring = std::decay_t<decltype(ring)>;
    SpechtModule<Ring> module(shape, ring);
    auto checks = check_defining_relations(module);
    for (auto& c : check_annihilators(module)) checks.push_back(std::move(c));
    Json list = Json::array();
    bool all = true;
    for (const auto& c : checks) {
      list.push_back(Json{{"check", c.name}, {"result", c.passed ? "pass" : "FAIL"}});
      all = all && c.passed;
    }
    doc.payload["shape"] = shape.to_string();
    doc.payload["dimension"] = module.dimension();
    doc.payload["checks"] = list;
    doc.payload["all_passed"] = all;
  });
  return doc;
}

inline OutputDocument cmd_decompose(const Partition& shape, int p, bool oracle) {
  if (shape.num_rows() > 2) throw UsageError("decompose needs a partition with at most two parts, got " + shape.to_string());
  const auto domain = detail::parse_domain(p);
  std::vector<std::pair<std::string, std::string>> flags{{"shape", shape.to_string()}, {"p", std::to_string(p)}};
  if (oracle) flags.emplace_back("oracle", "");
  OutputDocument doc{detail::echo("decompose", flags), domain.describe()};
  const auto rep = analyze(shape, p);
  auto& out = doc.payload;
  out["shape"] = shape.to_string();
  out["p"] = p;
  out["reducible"] = rep.reducible;
  if (rep.reducible) {
    out["k"] = *rep.k;
    out["mu"] = rep.mu->to_string();
    out["strip"] = detail::strip_json(*rep.strip);
    out["composition"] = "S^(" + shape.to_string() + ") = D^(" + rep.mu->to_string() + ") + D^(" + shape.to_string() + ")";
  } else {
    out["composition"] = "S^(" + shape.to_string() + ") = D^(" + shape.to_string() + ")";
  }
  out["dim_S"] = rep.dim_S;
  out["dim_D_lambda"] = rep.dim_D_lambda;
  if (rep.dim_D_mu) out["dim_D_mu"] = *rep.dim_D_mu;
  if (oracle) {
    const RootModule module(shape, CyclotomicRing(p));
    Json found = Json::array();
    std::vector<Partition> candidates;
    if (rep.reducible) {
      candidates.push_back(*rep.mu);
    } else {
      for (const auto& mu : partitions_of(shape.size()))
        if (mu.num_rows() <= 2 && mu != shape && is_p_regular(mu, p)) candidates.push_back(mu);
    }
    for (const auto& mu : candidates) {
      const auto gens = find_submodule_generators(module, mu);
      Json vectors = Json::array();
      for (const auto& g : gens) vectors.push_back(detail::sparse_vector_json(g, module.basis()));
      found.push_back(Json{{"mu", mu.to_string()},
                           {"kernel_dimension", gens.size()},
                           {"kernel", vectors},
                           {"generated_dimension", submodule_dimension(module, gens)}});
    }
    out["oracle"] = found;
  }
  return doc;
}

inline OutputDocument cmd_tableaux(const Partition& shape, std::optional<int> p, const std::string& filter) {
  if (filter != "standard" && filter != "p-root") throw UsageError("--filter must be 'standard' or 'p-root'");
  if (filter == "p-root" && !p) throw UsageError("--filter p-root requires --p");
  if (filter == "p-root" && shape.num_rows() > 2)
    throw UsageError("p-root standard tableaux need a partition with at most two parts");
  const auto domain = detail::parse_domain(p);
  std::vector<std::pair<std::string, std::string>> flags{{"shape", shape.to_string()}};
  if (p) flags.emplace_back("p", std::to_string(*p));
  flags.emplace_back("filter", filter);
  OutputDocument doc{detail::echo("tableaux", flags), domain.describe()};
  const auto list = filter == "standard" ? enumerate_standard(shape) : enumerate_p_root_standard(shape, *p);
  Json items = Json::array();
  for (const auto& t : list) items.push_back(t.to_string());
  doc.payload["shape"] = shape.to_string();
  doc.payload["filter"] = filter;
  doc.payload["count"] = list.size();
  doc.payload["tableaux"] = items;
  return doc;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

/// Runs the CLI. Exit code: 0 on success, 1 if `verify` found a failing
/// check, 2 on usage or domain errors.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Specht modules of Hecke algebras: generator matrices, relation checks, roots of unity"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit one JSON object instead of the text document");

  std::string shape_text;
  std::optional<int> p;
  int generator = 0;
  bool oracle = false;
  std::string filter = "standard";

  auto* matrix = app.add_subcommand("matrix", "print the matrix of a generator h_i in S^lambda");
  matrix->add_option("--shape", shape_text, "partition, e.g. 3,2")->required();
  matrix->add_option("--gen", generator, "generator index i")->required();
  matrix->add_option("--p", p, "order of the root of unity (omit for generic q)");
  matrix->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "check the defining relations and the annihilators of v_t_minus");
  verify->add_option("--shape", shape_text, "partition")->required();
  verify->add_option("--p", p, "order of the root of unity (omit for generic q)");
  verify->add_flag("--json", json);

  auto* decompose = app.add_subcommand("decompose", "composition series of a two-row S^lambda at a root of unity");
  decompose->add_option("--shape", shape_text, "partition with at most two parts")->required();
  decompose->add_option("--p", p, "order of the root of unity")->required();
  decompose->add_flag("--oracle", oracle, "also search for submodule generators by exact linear algebra");
  decompose->add_flag("--json", json);

  auto* tableaux = app.add_subcommand("tableaux", "list standard or p-root standard tableaux");
  tableaux->add_option("--shape", shape_text, "partition")->required();
  tableaux->add_option("--p", p, "order of the root of unity");
  tableaux->add_option("--filter", filter, "standard | p-root");
  tableaux->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Partition shape = detail::parse_shape(shape_text);
    OutputDocument doc;
    if (matrix->parsed()) {
      doc = cmd_matrix(shape, generator, detail::parse_domain(p));
    } else if (verify->parsed()) {
      doc = cmd_verify(shape, detail::parse_domain(p));
    } else if (decompose->parsed()) {
      doc = cmd_decompose(shape, *p, oracle);
    } else {
      doc = cmd_tableaux(shape, p, filter);
    }
    if (json) {
      out << doc.to_json().dump() << "\n";
    } else {
      out << doc.to_text();
    }
    if (verify->parsed() && !doc.payload.at("all_passed").get<bool>()) return 1;
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace hecke::cli
