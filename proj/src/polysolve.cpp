#include "massey/polysolve.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "massey/linalg.hpp"

namespace massey {

unsigned PolySystem::total_degree() const {
  unsigned d = 0;
  for (const auto& e : equations) d = std::max(d, e.total_degree());
  return d;
}

void PolySystem::validate() const {
  for (std::size_t k = 0; k < equations.size(); ++k)
    for (VarId v : equations[k].variables())
      if (v >= variables.size())
        throw std::invalid_argument("equation " + std::to_string(k) + " uses an undeclared variable");
}

SolverOptions SolverOptions::from_environment() {
  SolverOptions o;
  if (const char* env = std::getenv("MASSEY_SEARCH_HEIGHT")) {
    char* end = nullptr;
    long h = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && h >= 0 && h <= 1000) o.search_height = static_cast<unsigned>(h);
  }
  return o;
}

bool satisfies(const PolySystem& system, const std::vector<FieldElement>& assignment) {
  if (assignment.size() != system.variables.size()) return false;
  for (const auto& e : system.equations)
    if (!e.evaluate(assignment).is_zero()) return false;
  return true;
}

namespace {

Polynomial substitute_step(const Polynomial& p, VarId v, const Polynomial& value) { return p.substitute(v, value); }

void substitute_all(std::vector<Polynomial>& eqs, VarId v, const Polynomial& value) {
  for (auto& e : eqs) e = substitute_step(e, v, value);
}

FieldElement in_field(const FieldElement& x, const Field& f) { return x.field() == f ? x : embed(x, f); }

}  // namespace

PolySystem apply_steps(const PolySystem& system, const std::vector<EliminationStep>& steps) {
  PolySystem out = system;
  for (const auto& s : steps) substitute_all(out.equations, s.variable, s.value);
  return out;
}

std::vector<FieldElement> roots_of_quadratic(const std::vector<FieldElement>& coeffs, const Field& field) {
  std::vector<FieldElement> c = coeffs;
  while (c.size() > 1 && c.back().is_zero()) c.pop_back();
  std::vector<FieldElement> roots;
  if (c.size() == 2) {
    roots.push_back(in_field(-c[0] / c[1], field));
  } else if (c.size() == 3) {
    FieldElement disc = c[1] * c[1] - FieldElement(4) * c[2] * c[0];
    auto r = sqrt_in_field(disc, field);
    if (!r) return roots;
    FieldElement two_a = FieldElement(2) * c[2];
    roots.push_back(in_field((-c[1] + *r) / two_a, field));
    if (!r->is_zero()) roots.push_back(in_field((-c[1] - *r) / two_a, field));
    // Zero first, then the larger root (by rational, then irrational part).
    std::stable_sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
      if (x.is_zero() != y.is_zero()) return x.is_zero();
      if (x.rational_part() != y.rational_part()) return x.rational_part() > y.rational_part();
      return x.irrational_part() > y.irrational_part();
    });
  } else if (c.size() > 3) {
    throw std::invalid_argument("roots_of_quadratic: degree above 2");
  }
  return roots;
}

SolveOutcome solve_linear(const PolySystem& system) {
  system.validate();
  if (system.total_degree() > 1) throw std::invalid_argument("solve_linear: nonlinear equation");
  const std::size_t m = system.equations.size();
  const std::size_t n = system.variables.size();
  const Field& f = system.field;
  // [A | b | I] with A x = b row by row.
  Matrix aug(m, n + 1 + m, f);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& e = system.equations[r];
    for (const auto& [pp, c] : e.terms()) {
      if (pp.is_one())
        aug(r, n) = in_field(-c, f);
      else
        aug(r, pp.factors()[0].first) = in_field(c, f);
    }
    aug(r, n + 1 + r) = FieldElement::one(f);
  }
  auto ef = row_reduce(std::move(aug));
  SolveOutcome out;
  out.method = "linear";
  std::size_t rank_a = 0;
  for (std::size_t i = 0; i < ef.pivots.size(); ++i) {
    std::size_t p = ef.pivots[i];
    if (p < n) {
      ++rank_a;
      continue;
    }
    if (p == n) {
      Refutation ref;
      ref.kind = Refutation::Kind::Inconsistent;
      for (std::size_t k = 0; k < m; ++k) ref.multipliers.push_back(ef.reduced(i, n + 1 + k));
      if (!replay(system, ref)) throw std::logic_error("solve_linear: certificate does not replay");
      out.status = SolveStatus::NoSolution;
      out.refutation = std::move(ref);
      return out;
    }
  }
  out.assignment.assign(n, FieldElement::zero(f));
  for (std::size_t i = 0; i < ef.pivots.size() && ef.pivots[i] < n; ++i) out.assignment[ef.pivots[i]] = ef.reduced(i, n);
  if (!satisfies(system, out.assignment)) throw std::logic_error("solve_linear: solution does not satisfy the system");
  out.status = SolveStatus::Solution;
  out.solution_dimension = n - rank_a;
  return out;
}

namespace {

// Candidates ordered by height, the irrational ones after rationals of equal height.
std::vector<FieldElement> search_candidates(const Field& f, unsigned height) {
  struct Cand {
    unsigned h;
    bool irrational;
    FieldElement x;
  };
  std::vector<Cand> cs;
  for (unsigned q = 1; q <= height; ++q)
    for (unsigned p = 0; p <= height; ++p) {
      if (std::gcd(p, q) != 1) continue;
      if (p == 0 && q != 1) continue;
      Rational r(p, q);
      r.canonicalize();
      unsigned h = std::max(p, q);
      cs.push_back({h, false, FieldElement(r, 0, f)});
      if (p != 0) cs.push_back({h, false, FieldElement(-r, 0, f)});
    }
  if (!f.is_rationals()) {
    const int small = std::min<int>(2, static_cast<int>(height));
    for (int a = -small; a <= small; ++a)
      for (int b = -small; b <= small; ++b) {
        if (b == 0) continue;
        unsigned h = static_cast<unsigned>(std::max(std::abs(a), std::abs(b)));
        cs.push_back({h, true, FieldElement(a, b, f)});
      }
  }
  std::stable_sort(cs.begin(), cs.end(), [](const Cand& x, const Cand& y) {
    return x.h != y.h ? x.h < y.h : (!x.irrational && y.irrational);
  });
  std::vector<FieldElement> out;
  for (auto& c : cs) out.push_back(std::move(c.x));
  return out;
}

struct LadderResult {
  SolveStatus status = SolveStatus::Unknown;
  std::vector<FieldElement> assignment;
  Refutation refutation;
  PolySystem reduced;
  std::string method = "elimination";
};

class Ladder {
 public:
  Ladder(const PolySystem& system, const SolverOptions& options) : system_(system), options_(options) {
    order_.resize(system.variables.size());
    std::iota(order_.begin(), order_.end(), VarId{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](VarId x, VarId y) { return system.variables[x] > system.variables[y]; });
  }

  LadderResult run(std::vector<Polynomial> eqs, std::vector<std::pair<VarId, Polynomial>> chain) {
    LadderResult res;
    std::vector<EliminationStep> steps;
    const Field& f = system_.field;
    for (;;) {
      for (std::size_t k = 0; k < eqs.size(); ++k)
        if (eqs[k].is_constant() && !eqs[k].is_zero()) {
          res.status = SolveStatus::NoSolution;
          res.refutation.steps = std::move(steps);
          res.refutation.kind = Refutation::Kind::Inconsistent;
          res.refutation.multipliers.assign(eqs.size(), FieldElement::zero(f));
          res.refutation.multipliers[k] = FieldElement::one(f);
          return res;
        }
      if (std::all_of(eqs.begin(), eqs.end(), [](const Polynomial& e) { return e.is_zero(); })) {
        res.status = SolveStatus::Solution;
        res.assignment = back_substitute(std::vector<FieldElement>(system_.variables.size(), FieldElement::zero(f)), chain);
        return res;
      }
      if (auto step = find_elimination(eqs)) {
        substitute_all(eqs, step->variable, step->value);
        chain.emplace_back(step->variable, step->value);
        steps.push_back(std::move(*step));
        continue;
      }
      break;
    }

    for (std::size_t k = 0; k < eqs.size(); ++k) {
      auto vars = eqs[k].variables();
      if (vars.size() != 1 || eqs[k].total_degree() > 2) continue;
      VarId v = *vars.begin();
      auto roots = roots_of_quadratic(eqs[k].univariate_coefficients(v), f);
      res.refutation.steps = steps;
      res.refutation.equation = k;
      res.refutation.variable = v;
      if (roots.empty()) {
        res.status = SolveStatus::NoSolution;
        res.refutation.kind = Refutation::Kind::NoRoot;
        return res;
      }
      res.refutation.kind = Refutation::Kind::Branch;
      bool unknown = false;
      for (const auto& r : roots) {
        auto child_eqs = eqs;
        substitute_all(child_eqs, v, Polynomial(r));
        auto child_chain = chain;
        child_chain.emplace_back(v, Polynomial(r));
        auto child = run(std::move(child_eqs), std::move(child_chain));
        if (child.status == SolveStatus::Solution) return child;
        if (child.status == SolveStatus::Unknown) {
          unknown = true;
          if (res.reduced.equations.empty()) res.reduced = child.reduced;
          continue;
        }
        res.refutation.roots.push_back(r);
        res.refutation.children.push_back(std::move(child.refutation));
      }
      if (!unknown) {
        res.status = SolveStatus::NoSolution;
        return res;
      }
      res.status = SolveStatus::Unknown;
      return res;
    }

    if (auto found = search(eqs, chain)) {
      res.status = SolveStatus::Solution;
      res.assignment = std::move(*found);
      res.method = "search";
      return res;
    }
    res.status = SolveStatus::Unknown;
    res.reduced = PolySystem{f, system_.variables, eqs};
    return res;
  }

 private:
  std::optional<EliminationStep> find_elimination(const std::vector<Polynomial>& eqs) const {
    for (VarId v : order_)
      for (std::size_t k = 0; k < eqs.size(); ++k) {
        auto c = eqs[k].linear_constant_coefficient(v);
        if (!c || c->is_zero()) continue;
        // c v + rest = 0  =>  v = -rest / c
        Polynomial rest = eqs[k] - Polynomial::variable(v, system_.field) * (*c);
        return EliminationStep{k, v, rest * (-c->inverse())};
      }
    return std::nullopt;
  }

  std::vector<FieldElement> back_substitute(std::vector<FieldElement> base,
                                            const std::vector<std::pair<VarId, Polynomial>>& chain) const {
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) base[it->first] = in_field(it->second.evaluate(base), system_.field);
    return base;
  }

  std::optional<std::vector<FieldElement>> search(const std::vector<Polynomial>& eqs,
                                                  const std::vector<std::pair<VarId, Polynomial>>& chain) const {
    std::set<VarId> present;
    for (const auto& e : eqs)
      for (VarId v : e.variables()) present.insert(v);
    std::vector<VarId> vars(present.begin(), present.end());
    const auto cands = search_candidates(system_.field, options_.search_height);
    const std::size_t m = vars.size();
    std::size_t budget = options_.search_budget;
    std::vector<FieldElement> point(system_.variables.size(), FieldElement::zero(system_.field));
    for (std::size_t bound = 0; bound < cands.size() && budget > 0; ++bound) {
      std::vector<std::size_t> idx(m, 0);
      for (;;) {
        if (budget == 0) break;
        --budget;
        if (std::find(idx.begin(), idx.end(), bound) != idx.end() || m == 0) {
          for (std::size_t k = 0; k < m; ++k) point[vars[k]] = cands[idx[k]];
          bool ok = true;
          for (const auto& e : eqs)
            if (!e.evaluate(point).is_zero()) {
              ok = false;
              break;
            }
          if (ok) return back_substitute(point, chain);
        }
        std::size_t k = 0;
        while (k < m && idx[k] == bound) idx[k++] = 0;
        if (k == m) break;
        ++idx[k];
      }
      if (m == 0) break;
    }
    return std::nullopt;
  }

  const PolySystem& system_;
  SolverOptions options_;
  std::vector<VarId> order_;
};

}  // namespace

SolveOutcome eliminate_and_decide(const PolySystem& system, const SolverOptions& options) {
  system.validate();
  Ladder ladder(system, options);
  auto res = ladder.run(system.equations, {});
  SolveOutcome out;
  out.status = res.status;
  out.method = res.method;
  switch (res.status) {
    case SolveStatus::Solution:
      if (!satisfies(system, res.assignment)) throw std::logic_error("solver produced an assignment that is not a zero");
      out.assignment = std::move(res.assignment);
      break;
    case SolveStatus::NoSolution:
      if (!replay(system, res.refutation)) throw std::logic_error("solver produced a certificate that does not replay");
      out.refutation = std::move(res.refutation);
      break;
    case SolveStatus::Unknown:
      out.reduced = std::move(res.reduced);
      break;
  }
  return out;
}

namespace {

bool replay_node(std::vector<Polynomial> eqs, const Refutation& r, const Field& f) {
  for (const auto& s : r.steps) {
    if (s.equation >= eqs.size()) return false;
    if (s.value.degree_in(s.variable) != 0) return false;
    auto c = eqs[s.equation].linear_constant_coefficient(s.variable);
    if (!c || c->is_zero()) return false;
    Polynomial expect = (Polynomial::variable(s.variable, f) - s.value) * (*c);
    if (!(eqs[s.equation] - expect).is_zero()) return false;
    substitute_all(eqs, s.variable, s.value);
  }
  switch (r.kind) {
    case Refutation::Kind::Inconsistent: {
      if (r.multipliers.size() != eqs.size()) return false;
      Polynomial sum;
      for (std::size_t k = 0; k < eqs.size(); ++k) sum += eqs[k] * r.multipliers[k];
      return sum.is_constant() && !sum.is_zero();
    }
    case Refutation::Kind::NoRoot: {
      if (r.equation >= eqs.size()) return false;
      const auto& e = eqs[r.equation];
      auto vars = e.variables();
      if (vars != std::set<VarId>{r.variable} || e.degree_in(r.variable) != 2) return false;
      auto c = e.univariate_coefficients(r.variable);
      FieldElement disc = c[1] * c[1] - FieldElement(4) * c[2] * c[0];
      if (f.is_rationals()) return disc.is_rational() && !is_square_in_rationals(disc.rational_part());
      return !sqrt_in_field(disc, f).has_value();
    }
    case Refutation::Kind::Branch: {
      if (r.equation >= eqs.size() || r.roots.empty() || r.roots.size() != r.children.size()) return false;
      const auto& e = eqs[r.equation];
      if (e.variables() != std::set<VarId>{r.variable}) return false;
      for (std::size_t a = 0; a < r.roots.size(); ++a)
        for (std::size_t b = a + 1; b < r.roots.size(); ++b)
          if (r.roots[a] == r.roots[b]) return false;
      // e must be c * prod (t - root): every zero of e is one of the roots.
      Polynomial prod(FieldElement::one(f));
      for (const auto& root : r.roots) prod = prod * (Polynomial::variable(r.variable, f) - Polynomial(root));
      unsigned deg = e.degree_in(r.variable);
      if (deg == 2 && r.roots.size() == 1) prod = prod * prod;
      if (deg != prod.degree_in(r.variable)) return false;
      FieldElement lead = e.univariate_coefficients(r.variable)[deg];
      if (!(e - prod * lead).is_zero()) return false;
      for (std::size_t k = 0; k < r.roots.size(); ++k) {
        auto child = eqs;
        substitute_all(child, r.variable, Polynomial(r.roots[k]));
        if (!replay_node(std::move(child), r.children[k], f)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool replay(const PolySystem& system, const Refutation& refutation) {
  return replay_node(system.equations, refutation, system.field);
}

}  // namespace massey
