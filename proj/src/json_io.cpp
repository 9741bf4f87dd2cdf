#include "massey/json_io.hpp"

#include <stdexcept>

namespace massey {

namespace {

Json sparse_to_json(const SparseVector& v) {
  Json out = Json::array();
  for (const auto& [k, c] : v) out.push_back(Json::array({k, c.to_string()}));
  return out;
}

FieldElement scalar_from_json(const Json& j, const Field& field) {
  if (j.is_number_integer()) return FieldElement(Rational(j.get<long>()), 0, field);
  if (!j.is_string()) throw std::invalid_argument("scalar must be a string or an integer");
  return FieldElement::parse(j.get<std::string>(), field);
}

SparseVector sparse_from_json(const Json& j, const Field& field) {
  if (!j.is_array()) throw std::invalid_argument("sparse vector must be an array");
  SparseVector out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned())
      throw std::invalid_argument("sparse entry must be [index, scalar]");
    out.emplace_back(e[0].get<std::size_t>(), scalar_from_json(e[1], field));
  }
  return out;
}

Json scalars_to_json(const std::vector<FieldElement>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solution: return "solution";
    case SolveStatus::NoSolution: return "no_solution";
    case SolveStatus::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(Refutation::Kind k) {
  switch (k) {
    case Refutation::Kind::Inconsistent: return "inconsistent";
    case Refutation::Kind::NoRoot: return "no_root";
    case Refutation::Kind::Branch: return "branch";
  }
  return "?";
}

}  // namespace

Json field_to_json(const Field& field) {
  Json out;
  out["base"] = "Q";
  out["adjoin_sqrt"] = field.is_rationals() ? Json(nullptr) : Json(rational_to_string(field.theta()));
  return out;
}

Field field_from_json(const Json& j) {
  if (!j.is_object() || j.value("base", "") != "Q") throw std::invalid_argument("field must be {\"base\": \"Q\", ...}");
  if (!j.contains("adjoin_sqrt") || j["adjoin_sqrt"].is_null()) return Field::rationals();
  auto theta = scalar_from_json(j["adjoin_sqrt"], Field::rationals());
  return Field::adjoin_sqrt(theta.rational_part());
}

Json table_to_json(const TableAlgebra& alg) {
  const auto& d = alg.data();
  Json out;
  out["format"] = "massey-table";
  out["version"] = 1;
  out["description"] = d.description;
  out["field"] = field_to_json(d.field);
  Json degrees = Json::array();
  for (std::size_t p = 0; p < d.labels.size(); ++p) {
    Json deg;
    deg["labels"] = d.labels[p];
    Json diff = Json::array();
    for (const auto& v : d.differential[p]) diff.push_back(sparse_to_json(v));
    deg["differential"] = std::move(diff);
    degrees.push_back(std::move(deg));
  }
  out["degrees"] = std::move(degrees);
  Json products = Json::array();
  for (const auto& [pq, table] : d.products) {
    auto [p, q] = pq;
    const std::size_t dq = alg.dimension(q);
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
      if (table[idx].empty()) continue;
      Json e;
      e["p"] = p;
      e["q"] = q;
      e["i"] = idx / dq;
      e["j"] = idx % dq;
      e["value"] = sparse_to_json(table[idx]);
      products.push_back(std::move(e));
    }
  }
  out["products"] = std::move(products);
  Json atoms = Json::array();
  for (const auto& [name, c] : d.atoms) {
    Json a;
    a["name"] = name;
    a["degree"] = c.degree;
    a["coords"] = scalars_to_json(c.coords);
    atoms.push_back(std::move(a));
  }
  out["atoms"] = std::move(atoms);
  return out;
}

TableAlgebraPtr table_from_json(const Json& j) {
  try {
    if (!j.is_object() || j.value("format", "") != "massey-table") throw std::invalid_argument("not a massey-table document");
    if (j.value("version", 0) != 1) throw std::invalid_argument("unsupported massey-table version");
    TableData d;
    d.field = field_from_json(j.at("field"));
    d.description = j.value("description", "table algebra");
    for (const auto& deg : j.at("degrees")) {
      d.labels.push_back(deg.at("labels").get<std::vector<std::string>>());
      std::vector<SparseVector> diff;
      for (const auto& v : deg.at("differential")) diff.push_back(sparse_from_json(v, d.field));
      d.differential.push_back(std::move(diff));
    }
    auto dim = [&](int p) -> std::size_t {
      if (p < 0 || p >= static_cast<int>(d.labels.size())) throw std::invalid_argument("product degree out of range");
      return d.labels[p].size();
    };
    for (const auto& e : j.at("products")) {
      int p = e.at("p").get<int>();
      int q = e.at("q").get<int>();
      auto i = e.at("i").get<std::size_t>();
      auto jj = e.at("j").get<std::size_t>();
      if (i >= dim(p) || jj >= dim(q)) throw std::invalid_argument("product index out of range");
      auto& table = d.products[{p, q}];
      table.resize(dim(p) * dim(q));
      table[i * dim(q) + jj] = sparse_from_json(e.at("value"), d.field);
    }
    for (const auto& a : j.value("atoms", Json::array())) {
      Cochain c;
      c.degree = a.at("degree").get<int>();
      for (const auto& s : a.at("coords")) c.coords.push_back(scalar_from_json(s, d.field));
      d.atoms.emplace_back(a.at("name").get<std::string>(), std::move(c));
    }
    return TableAlgebra::create(std::move(d));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed table: ") + e.what());
  }
}

Json cochain_to_json(const CochainAlgebra& alg, const Cochain& x) {
  Json out;
  out["degree"] = x.degree;
  out["text"] = to_string(alg, x);
  out["coords"] = scalars_to_json(x.coords);
  return out;
}

Json system_to_json(const PolySystem& system, const std::vector<std::string>& labels) {
  Json out;
  out["field"] = system.field.to_string();
  out["variables"] = system.variables;
  Json eqs = Json::array();
  for (std::size_t k = 0; k < system.equations.size(); ++k) {
    Json e;
    e["index"] = k;
    if (k < labels.size()) e["label"] = labels[k];
    e["equation"] = system.equation_string(k);
    eqs.push_back(std::move(e));
  }
  out["equations"] = std::move(eqs);
  return out;
}

Json refutation_to_json(const PolySystem& system, const Refutation& r) {
  Json out;
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json st;
    st["equation"] = s.equation;
    st["variable"] = system.variables.at(s.variable);
    st["value"] = s.value.to_string(system.variables);
    steps.push_back(std::move(st));
  }
  out["steps"] = std::move(steps);
  out["kind"] = to_string(r.kind);
  auto reduced = apply_steps(system, r.steps);
  switch (r.kind) {
    case Refutation::Kind::Inconsistent: {
      Json combo = Json::array();
      for (std::size_t k = 0; k < r.multipliers.size(); ++k) {
        if (r.multipliers[k].is_zero()) continue;
        combo.push_back({{"equation", k}, {"multiplier", r.multipliers[k].to_string()},
                         {"polynomial", reduced.equations.at(k).to_string(reduced.variables)}});
      }
      out["combination"] = std::move(combo);
      break;
    }
    case Refutation::Kind::NoRoot:
    case Refutation::Kind::Branch:
      out["equation"] = r.equation;
      out["variable"] = system.variables.at(r.variable);
      out["polynomial"] = reduced.equations.at(r.equation).to_string(reduced.variables);
      if (r.kind == Refutation::Kind::Branch) {
        out["roots"] = scalars_to_json(r.roots);
        Json children = Json::array();
        for (std::size_t k = 0; k < r.children.size(); ++k) {
          auto branch = reduced;
          for (auto& e : branch.equations) e = e.substitute(r.variable, Polynomial(r.roots[k]));
          children.push_back(refutation_to_json(branch, r.children[k]));
        }
        out["children"] = std::move(children);
      }
      break;
  }
  return out;
}

Json solve_outcome_to_json(const PolySystem& system, const SolveOutcome& outcome) {
  Json out;
  out["status"] = to_string(outcome.status);
  out["method"] = outcome.method;
  if (outcome.status == SolveStatus::Solution) {
    Json a = Json::object();
    for (std::size_t k = 0; k < outcome.assignment.size(); ++k)
      a[system.variables[k]] = outcome.assignment[k].to_string();
    out["assignment"] = std::move(a);
  }
  if (outcome.refutation) out["certificate"] = refutation_to_json(system, *outcome.refutation);
  if (outcome.reduced) {
    Json eqs = Json::array();
    for (std::size_t k = 0; k < outcome.reduced->equations.size(); ++k)
      if (!outcome.reduced->equations[k].is_zero()) eqs.push_back(outcome.reduced->equation_string(k));
    out["residual"] = std::move(eqs);
  }
  return out;
}

Json massey_outcome_to_json(const MasseyOutcome& o, const std::vector<std::string>& classes) {
  const auto& g = o.generic;
  Json out;
  out["well_defined"] = o.well_defined;
  out["well_defined_decided"] = o.well_defined_decided;
  out["trivial"] = to_string(o.trivial);
  out["field"] = o.field.to_string();
  out["algebra"] = o.algebra->describe();
  out["classes"] = classes;
  out["degrees"] = g.degrees;
  out["representative_degree"] = g.representative.degree;
  Json params = Json::array();
  for (const auto& p : g.parameters)
    params.push_back({{"name", p.name},
                      {"slot", Json::array({p.slot.first, p.slot.second})},
                      {"kind", to_string(p.kind)},
                      {"element", p.element}});
  out["parameters"] = std::move(params);
  out["trivial_system"] = system_to_json(g.trivial, g.trivial_labels);
  if (o.witness) {
    Json w;
    Json values = Json::object();
    for (std::size_t k = 0; k < o.witness->size(); ++k) values[g.parameters[k].name] = (*o.witness)[k].to_string();
    w["parameters"] = std::move(values);
    Json entries = Json::array();
    for (const auto& [slot, x] : o.witness_system->entries) {
      Json e = cochain_to_json(*o.algebra, x);
      e["slot"] = Json::array({slot.first, slot.second});
      entries.push_back(std::move(e));
    }
    w["entries"] = std::move(entries);
    w["representative"] = cochain_to_json(*o.algebra, massey_representative(*o.algebra, *o.witness_system));
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  if (o.obstruction) {
    const auto& sys = o.obstruction->system == "trivial" ? g.trivial : g.well_defined;
    Json ob = solve_outcome_to_json(sys, o.obstruction->outcome);
    ob["system"] = o.obstruction->system;
    out["obstruction"] = std::move(ob);
  } else {
    out["obstruction"] = nullptr;
  }
  return out;
}

}  // namespace massey
