#include "massey/engine.hpp"

#include <stdexcept>

namespace massey {

int slot_degree(const std::vector<int>& degs, std::size_t i, std::size_t j) {
  int d = 0;
  for (std::size_t k = i; k <= j; ++k) d += degs.at(k - 1);
  return d - static_cast<int>(j - i);
}

std::vector<int> DefiningSystem::degrees() const {
  std::vector<int> degs;
  for (std::size_t i = 1; i <= n; ++i) degs.push_back(at(i, i).degree);
  return degs;
}

std::string to_string(ParameterInfo::Kind kind) {
  switch (kind) {
    case ParameterInfo::Kind::Image: return "image";
    case ParameterInfo::Kind::Complement: return "complement";
    case ParameterInfo::Kind::Diagonal: return "diagonal";
  }
  return "?";
}

std::string to_string(Triviality t) {
  switch (t) {
    case Triviality::Yes: return "yes";
    case Triviality::No: return "no";
    case Triviality::Unknown: return "unknown";
  }
  return "?";
}

namespace {

std::string slot_name(std::size_t i, std::size_t j) { return "a" + std::to_string(i) + "_" + std::to_string(j); }

}  // namespace

void validate(const CochainAlgebra& alg, const DefiningSystem& ds) {
  if (ds.n < 3) throw InvalidDefiningSystem("a defining system needs n >= 3");
  for (std::size_t i = 1; i <= ds.n; ++i)
    for (std::size_t j = i; j <= ds.n; ++j) {
      if (i == 1 && j == ds.n) continue;
      if (!ds.entries.count({i, j})) throw InvalidDefiningSystem("missing entry " + slot_name(i, j));
    }
  const auto degs = ds.degrees();
  for (std::size_t i = 1; i <= ds.n; ++i)
    if (!is_closed(alg, ds.at(i, i))) throw InvalidDefiningSystem("diagonal entry " + slot_name(i, i) + " is not closed");
  auto get = [&](std::size_t i, std::size_t j) -> const Cochain& { return ds.at(i, j); };
  for (std::size_t len = 1; len + 1 < ds.n + 1; ++len)
    for (std::size_t i = 1; i + len <= ds.n; ++i) {
      std::size_t j = i + len;
      if (i == 1 && j == ds.n) continue;
      const auto& a = ds.at(i, j);
      if (!a.is_zero() && a.degree != slot_degree(degs, i, j))
        throw InvalidDefiningSystem("entry " + slot_name(i, j) + " has the wrong degree");
      if (!(differential(alg, a) == slot_rhs<FieldElement>(alg, degs, i, j, get)))
        throw InvalidDefiningSystem("d " + slot_name(i, j) + " does not match its defining equation");
    }
}

Cochain massey_representative(const CochainAlgebra& alg, const DefiningSystem& ds) {
  validate(alg, ds);
  auto get = [&](std::size_t i, std::size_t j) -> const Cochain& { return ds.at(i, j); };
  return slot_rhs<FieldElement>(alg, ds.degrees(), 1, ds.n, get);
}

DefiningSystem GenericDefiningSystem::specialize(const std::vector<FieldElement>& assignment) const {
  DefiningSystem ds;
  ds.n = n;
  for (const auto& [slot, entry] : entries) ds.entries.emplace(slot, massey::specialize(entry, assignment));
  return ds;
}

GenericDefiningSystem generic_defining_system(const CochainAlgebra& alg, const std::vector<CohomologyClass>& classes,
                                              const GenericOptions& options) {
  const std::size_t n = classes.size();
  if (n < 3) throw std::invalid_argument("Massey products need at least three classes");
  const Field& f = alg.field();
  GenericDefiningSystem g;
  g.n = n;
  for (const auto& c : classes) g.degrees.push_back(c.degree);

  auto add_parameter = [&](std::size_t i, std::size_t j, ParameterInfo::Kind kind, char tag, std::size_t k,
                           int degree) {
    ParameterInfo p;
    p.name = slot_name(i, j) + "_" + tag + std::to_string(k);
    p.slot = {i, j};
    p.kind = kind;
    p.element = to_string(alg, kind == ParameterInfo::Kind::Complement
                                   ? compute_splitting(alg, degree)->c_element(k)
                                   : compute_splitting(alg, degree)->im_element(k));
    g.parameters.push_back(std::move(p));
    return Polynomial::variable(static_cast<VarId>(g.parameters.size() - 1), f);
  };
  auto add_along = [](ParametricCochain& x, const Vector& direction, const Polynomial& coeff) {
    for (std::size_t t = 0; t < direction.size(); ++t)
      if (!direction[t].is_zero()) x.coords[t] += coeff * direction[t];
  };
  auto constrain = [&](const Decomposition<Polynomial>& parts, const std::string& where, std::vector<Polynomial>& eqs,
                       std::vector<std::string>& labels) {
    for (std::size_t k = 0; k < parts.c.size(); ++k)
      if (!parts.c[k].is_zero()) {
        eqs.push_back(parts.c[k]);
        labels.push_back(where + " C[" + std::to_string(k) + "]");
      }
    for (std::size_t k = 0; k < parts.i.size(); ++k)
      if (!parts.i[k].is_zero()) {
        eqs.push_back(parts.i[k]);
        labels.push_back(where + " I[" + std::to_string(k) + "]");
      }
  };

  for (std::size_t i = 1; i <= n; ++i) {
    auto entry = to_parametric(representative(alg, classes[i - 1]));
    if (options.vary_diagonal) {
      auto s = compute_splitting(alg, classes[i - 1].degree);
      for (std::size_t k = 0; k < s->basis_im.size(); ++k)
        add_along(entry, s->basis_im[k],
                  add_parameter(i, i, ParameterInfo::Kind::Diagonal, 'd', k, classes[i - 1].degree));
    }
    g.entries.emplace(Slot{i, i}, std::move(entry));
  }

  auto get = [&](std::size_t i, std::size_t j) -> const ParametricCochain& { return g.entries.at({i, j}); };
  std::vector<Polynomial> wd;
  for (std::size_t len = 1; len + 1 < n; ++len)
    for (std::size_t i = 1; i + len <= n; ++i) {
      std::size_t j = i + len;
      int deg = slot_degree(g.degrees, i, j);
      if (deg < 0) throw std::invalid_argument("slot " + slot_name(i, j) + " would have negative degree");
      auto rhs = slot_rhs<Polynomial>(alg, g.degrees, i, j, get);
      auto above = compute_splitting(alg, deg + 1);
      auto parts = decompose(*above, rhs);
      constrain(parts, "d " + slot_name(i, j), wd, g.well_defined_labels);
      auto entry = apply_delta(alg, *above, parts.im);
      auto here = compute_splitting(alg, deg);
      for (std::size_t k = 0; k < here->basis_im.size(); ++k)
        add_along(entry, here->basis_im[k], add_parameter(i, j, ParameterInfo::Kind::Image, 'u', k, deg));
      for (std::size_t k = 0; k < here->basis_c.size(); ++k)
        add_along(entry, here->basis_c[k], add_parameter(i, j, ParameterInfo::Kind::Complement, 'v', k, deg));
      g.entries.emplace(Slot{i, j}, std::move(entry));
    }

  g.representative = slot_rhs<Polynomial>(alg, g.degrees, 1, n, get);
  std::vector<Polynomial> tv = wd;
  g.trivial_labels = g.well_defined_labels;
  auto final_split = compute_splitting(alg, g.representative.degree);
  constrain(decompose(*final_split, g.representative), "product", tv, g.trivial_labels);

  std::vector<std::string> names;
  for (const auto& p : g.parameters) names.push_back(p.name);
  g.well_defined = PolySystem{f, names, std::move(wd)};
  g.trivial = PolySystem{f, names, std::move(tv)};
  if (!options.vary_diagonal && g.trivial.total_degree() > (n + 1) / 2)
    throw std::logic_error("generic system exceeds the expected polynomial degree");
  return g;
}

namespace {

SolveOutcome solve_system(const PolySystem& s, const SolverOptions& options) {
  if (s.total_degree() <= 1) return solve_linear(s);
  return eliminate_and_decide(s, options);
}

}  // namespace

MasseyOutcome decide(const AlgebraPtr& alg, const std::vector<CohomologyClass>& classes, const Field& field,
                     const DecideOptions& options) {
  MasseyOutcome out;
  out.field = field;
  AlgebraPtr work = alg;
  std::vector<CohomologyClass> cls = classes;
  if (field != alg->field()) {
    if (!field.extends(alg->field()))
      throw FieldMismatch("cannot decide over " + field.to_string() + " for an algebra over " + alg->field().to_string());
    work = alg->extend_scalars(field);
    for (auto& c : cls) c = class_of(*work, embed(representative(*alg, c), field));
  }
  out.algebra = work;
  out.generic = generic_defining_system(*work, cls, options.generic);
  const auto& g = out.generic;

  auto triv = solve_system(g.trivial, options.solver);
  if (triv.status == SolveStatus::Solution) {
    out.well_defined = true;
    out.trivial = Triviality::Yes;
    auto ds = g.specialize(triv.assignment);
    auto rep = massey_representative(*work, ds);
    if (!is_exact(*work, rep)) throw std::logic_error("witness does not give an exact representative");
    out.witness = std::move(triv.assignment);
    out.witness_system = std::move(ds);
    return out;
  }
  out.trivial = triv.status == SolveStatus::NoSolution ? Triviality::No : Triviality::Unknown;
  out.obstruction = Obstruction{"trivial", std::move(triv)};

  auto wd = solve_system(g.well_defined, options.solver);
  switch (wd.status) {
    case SolveStatus::Solution:
      out.well_defined = true;
      break;
    case SolveStatus::NoSolution:
      out.well_defined = false;
      out.trivial = Triviality::No;
      out.obstruction = Obstruction{"well_defined", std::move(wd)};
      break;
    case SolveStatus::Unknown:
      out.well_defined = false;
      out.well_defined_decided = false;
      break;
  }
  return out;
}

bool IndeterminacySpace::contains(const CohomologyClass& x) const {
  if (x.is_zero()) return true;
  if (x.degree != degree || basis.empty()) return false;
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(b.coords);
  const std::size_t r = rank(Matrix::from_columns(cols, x.coords.size(), x.coords.front().field()));
  cols.push_back(x.coords);
  return rank(Matrix::from_columns(cols, x.coords.size(), x.coords.front().field())) == r;
}

namespace {

// Independent subset of the given classes (all of one degree).
std::vector<CohomologyClass> independent_classes(const CochainAlgebra& alg, int degree,
                                                 const std::vector<CohomologyClass>& classes) {
  std::vector<CohomologyClass> out;
  std::vector<Vector> cols;
  const std::size_t dim = cohomology_dimension(alg, degree);
  std::size_t r = 0;
  for (const auto& c : classes) {
    if (c.is_zero()) continue;
    cols.push_back(c.coords);
    std::size_t r2 = rank(Matrix::from_columns(cols, dim, alg.field()));
    if (r2 > r) {
      out.push_back(c);
      r = r2;
    } else {
      cols.pop_back();
    }
  }
  return out;
}

}  // namespace

TripleValue triple_value(const CochainAlgebra& alg, const CohomologyClass& z1, const CohomologyClass& z2,
                         const CohomologyClass& z3) {
  if (!cup(alg, z1, z2).is_zero() || !cup(alg, z2, z3).is_zero())
    throw NotDefined("triple product is not defined: a consecutive cup product is nonzero");
  const std::vector<int> degs{z1.degree, z2.degree, z3.degree};
  DefiningSystem ds;
  ds.n = 3;
  ds.entries[{1, 1}] = representative(alg, z1);
  ds.entries[{2, 2}] = representative(alg, z2);
  ds.entries[{3, 3}] = representative(alg, z3);
  auto get = [&](std::size_t i, std::size_t j) -> const Cochain& { return ds.entries.at({i, j}); };
  for (Slot s : {Slot{1, 2}, Slot{2, 3}}) {
    auto rhs = slot_rhs<FieldElement>(alg, degs, s.first, s.second, get);
    ds.entries[s] = primitive(alg, rhs);
  }
  TripleValue tv;
  tv.value = class_of(alg, massey_representative(alg, ds));
  tv.system = std::move(ds);
  const int target = tv.value.degree;
  tv.indeterminacy.degree = target;
  std::vector<CohomologyClass> spanning;
  for (const auto& h : cohomology_basis(alg, target - z1.degree)) spanning.push_back(cup(alg, z1, h));
  for (const auto& h : cohomology_basis(alg, target - z3.degree)) spanning.push_back(cup(alg, h, z3));
  tv.indeterminacy.basis = independent_classes(alg, target, spanning);
  tv.trivial = tv.indeterminacy.contains(tv.value);
  return tv;
}

std::vector<CohomologyClass> annihilator_basis(const CochainAlgebra& alg, const CohomologyClass& z1,
                                               const CohomologyClass& z3, int degree) {
  auto basis = cohomology_basis(alg, degree);
  const std::size_t rows = cohomology_dimension(alg, z1.degree + degree) + cohomology_dimension(alg, degree + z3.degree);
  std::vector<Vector> cols;
  for (const auto& h : basis) {
    Vector col = cup(alg, z1, h).coords;
    auto right = cup(alg, h, z3).coords;
    col.insert(col.end(), right.begin(), right.end());
    cols.push_back(std::move(col));
  }
  std::vector<CohomologyClass> out;
  if (basis.empty()) return out;
  for (auto& v : nullspace(Matrix::from_columns(cols, rows, alg.field()))) out.push_back({degree, std::move(v)});
  return out;
}

CohomologyClass taylor_product(const CochainAlgebra& alg, const CohomologyClass& z0, const CohomologyClass& z1,
                               const CohomologyClass& z2, const CohomologyClass& z3) {
  if (!cup(alg, z1, z0).is_zero() || !cup(alg, z0, z3).is_zero())
    throw NotDefined("z0 does not annihilate z1 and z3");
  auto tv = triple_value(alg, z1, z2, z3);
  auto first = cup(alg, z0, tv.value);

  // A second defining system: shift both primitives by every complement basis element.
  DefiningSystem other = tv.system;
  for (Slot s : {Slot{1, 2}, Slot{2, 3}}) {
    int deg = slot_degree({z1.degree, z2.degree, z3.degree}, s.first, s.second);
    auto split = compute_splitting(alg, deg);
    for (std::size_t k = 0; k < split->basis_c.size(); ++k) other.entries[s] = other.entries[s] + split->c_element(k);
  }
  auto second = cup(alg, z0, class_of(alg, massey_representative(alg, other)));
  if (!(first == second)) throw std::logic_error("z0 <z1, z2, z3> depends on the defining system");
  return first;
}

}  // namespace massey
