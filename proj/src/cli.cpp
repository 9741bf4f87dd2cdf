#include "massey/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "massey/constructions.hpp"
#include "massey/corpus.hpp"
#include "massey/dsl.hpp"
#include "massey/engine.hpp"
#include "massey/json_io.hpp"

namespace massey {

namespace {

/// A rejected input; carries its own message and maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

/// The serialized form: a document for free algebras, a JSON table otherwise.
std::string serialize(const AlgebraPtr& alg) {
  if (auto free = std::dynamic_pointer_cast<const FreeCdga>(alg)) return serialize_document(*free);
  if (auto table = std::dynamic_pointer_cast<const TableAlgebra>(alg)) return table_to_json(*table).dump(1) + "\n";
  throw std::logic_error("unknown algebra implementation");
}

Field parse_theta(const std::string& text) {
  Rational theta;
  try {
    theta = FieldElement::parse(text, Field::rationals()).rational_part();
  } catch (const std::exception&) {
    throw UsageError("--adjoin-sqrt expects a rational, got '" + text + "'");
  }
  if (sgn(theta) == 0 || is_square_in_rationals(theta))
    throw UsageError("--adjoin-sqrt " + text + ": need a nonzero non-square rational");
  return Field::adjoin_sqrt(theta);
}

AlgebraPtr with_field(const AlgebraPtr& alg, const std::string& theta) {
  if (theta.empty()) return alg;
  Field f = parse_theta(theta);
  if (alg->field() == f) return alg;
  if (!alg->field().is_rationals())
    throw UsageError("algebra is already over " + alg->field().to_string() + "; cannot adjoin another root");
  return extend_scalars(alg, f);
}

struct ParsedClass {
  std::string text;
  CohomologyClass cls;
};

std::vector<ParsedClass> parse_classes(const CochainAlgebra& alg, const std::string& list) {
  std::vector<ParsedClass> out;
  std::vector<std::string> items;
  try {
    items = split_bracketed_list(list);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--classes: ") + e.what());
  }
  for (const auto& item : items) {
    Cochain x;
    try {
      x = parse_cochain(alg, item);
    } catch (const ParseError& e) {
      throw UsageError("class [" + item + "]: " + e.what());
    }
    if (x.is_zero()) throw UsageError("class [" + item + "] is zero; Massey products need nonzero inputs");
    try {
      out.push_back({"[" + item + "]", class_of(alg, x)});
    } catch (const NotClosed&) {
      throw UsageError("[" + item + "] is not closed: d(" + item + ") = " + to_string(alg, differential(alg, x)));
    }
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---- subcommands -----------------------------------------------------------

int cmd_cohomology(const std::string& source, int degree, const std::string& theta, bool json, std::ostream& out) {
  auto alg = with_field(load_algebra(source), theta);
  auto basis = cohomology_basis(*alg, degree);
  if (json) {
    Json j;
    j["algebra"] = alg->describe();
    j["field"] = alg->field().to_string();
    j["degree"] = degree;
    j["dimension"] = basis.size();
    Json classes = Json::array();
    for (const auto& c : basis) classes.push_back(cochain_to_json(*alg, representative(*alg, c)));
    j["classes"] = std::move(classes);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "H^" << degree << " of " << alg->describe() << "\n";
  out << "dimension: " << basis.size() << "\n";
  for (const auto& c : basis) out << "  [" << to_string(*alg, representative(*alg, c)) << "]\n";
  return kExitOk;
}

void print_refutation(const PolySystem& sys, const Refutation& r, std::ostream& out, const std::string& indent) {
  for (const auto& s : r.steps)
    out << indent << sys.variables[s.variable] << " := " << s.value.to_string(sys.variables) << "   (equation "
        << s.equation << ")\n";
  auto reduced = apply_steps(sys, r.steps);
  switch (r.kind) {
    case Refutation::Kind::Inconsistent: {
      out << indent << "inconsistent combination:";
      for (std::size_t k = 0; k < r.multipliers.size(); ++k)
        if (!r.multipliers[k].is_zero()) out << " (" << r.multipliers[k].to_string() << ")*E" << k;
      out << "\n";
      break;
    }
    case Refutation::Kind::NoRoot:
      out << indent << "no root in " << sys.field.to_string() << ": " << reduced.equation_string(r.equation) << "\n";
      break;
    case Refutation::Kind::Branch:
      out << indent << "branch on " << reduced.equation_string(r.equation) << "\n";
      for (std::size_t k = 0; k < r.roots.size(); ++k) {
        out << indent << "  " << sys.variables[r.variable] << " = " << r.roots[k].to_string() << ":\n";
        auto branch = reduced;
        for (auto& e : branch.equations) e = e.substitute(r.variable, Polynomial(r.roots[k]));
        print_refutation(branch, r.children[k], out, indent + "    ");
      }
      break;
  }
}

int cmd_massey(const std::string& source, const std::string& classes_text, const std::string& theta, bool vary_diagonal,
               bool json, std::ostream& out) {
  auto alg = with_field(load_algebra(source), theta);
  auto parsed = parse_classes(*alg, classes_text);
  if (parsed.size() < 3) throw UsageError("--classes needs at least three classes");
  std::vector<CohomologyClass> classes;
  std::vector<std::string> texts;
  for (auto& p : parsed) {
    classes.push_back(p.cls);
    texts.push_back(p.text);
  }
  DecideOptions options;
  options.generic.vary_diagonal = vary_diagonal;
  auto outcome = decide(alg, classes, alg->field(), options);
  if (json) {
    out << massey_outcome_to_json(outcome, texts).dump(2) << "\n";
    return kExitOk;
  }
  const auto& g = outcome.generic;
  out << "algebra: " << alg->describe() << "\n";
  out << "field: " << outcome.field.to_string() << "\n";
  out << "product: <";
  for (std::size_t k = 0; k < texts.size(); ++k) out << (k ? ", " : "") << texts[k];
  out << ">  (degree " << g.representative.degree << ")\n";
  out << "parameters: " << g.parameters.size() << ", equations: " << g.trivial.equations.size() << "\n";
  out << "well-defined: " << (outcome.well_defined_decided ? yes_no(outcome.well_defined) : "unknown") << "\n";
  out << "trivial: " << to_string(outcome.trivial) << "\n";
  if (outcome.witness) {
    out << "witness:\n";
    for (std::size_t k = 0; k < outcome.witness->size(); ++k)
      if (!(*outcome.witness)[k].is_zero())
        out << "  " << g.parameters[k].name << " = " << (*outcome.witness)[k].to_string() << "\n";
    for (const auto& [slot, x] : outcome.witness_system->entries)
      out << "  a" << slot.first << "_" << slot.second << " = " << (x.is_zero() ? "0" : to_string(*alg, x)) << "\n";
  }
  if (outcome.obstruction) {
    const auto& ob = *outcome.obstruction;
    const auto& sys = ob.system == "trivial" ? g.trivial : g.well_defined;
    out << "obstruction (" << ob.system << " system, " << ob.outcome.method << "):\n";
    if (ob.outcome.refutation) print_refutation(sys, *ob.outcome.refutation, out, "  ");
    if (ob.outcome.reduced)
      for (std::size_t k = 0; k < ob.outcome.reduced->equations.size(); ++k)
        if (!ob.outcome.reduced->equations[k].is_zero()) out << "  " << ob.outcome.reduced->equation_string(k) << "\n";
  }
  return kExitOk;
}

int cmd_check(const std::string& source, int max_degree, bool json, std::ostream& out) {
  auto alg = load_algebra(source);
  int upto = max_degree >= 0 ? max_degree : alg->top_degree().value_or(8);
  auto rep = check_structure(*alg, upto, true);
  bool connected = alg->dimension(0) == 1;
  bool ok = rep.ok() && connected;
  if (json) {
    Json j;
    j["algebra"] = alg->describe();
    j["field"] = alg->field().to_string();
    j["top_degree"] = alg->top_degree() ? Json(*alg->top_degree()) : Json(nullptr);
    j["checked_up_to"] = upto;
    j["d_squared_zero"] = rep.d_squared_zero;
    j["leibniz"] = rep.leibniz;
    j["graded_commutative"] = rep.graded_commutative;
    j["associative"] = rep.associative;
    j["connected"] = connected;
    j["ok"] = ok;
    j["failures"] = rep.failures;
    out << j.dump(2) << "\n";
  } else {
    out << "algebra: " << alg->describe() << "\n";
    out << "checked degrees 0.." << upto << "\n";
    out << "d^2 = 0: " << yes_no(rep.d_squared_zero) << "\n";
    out << "leibniz: " << yes_no(rep.leibniz) << "\n";
    out << "graded-commutative: " << yes_no(rep.graded_commutative) << "\n";
    out << "associative: " << yes_no(rep.associative) << "\n";
    out << "connected: " << yes_no(connected) << "\n";
    for (const auto& f : rep.failures) out << "  " << f << "\n";
    out << (ok ? "OK" : "FAILED") << "\n";
  }
  return ok ? kExitOk : kExitUsage;
}

int cmd_corpus_list(std::ostream& out) {
  for (const auto& e : corpus_entries()) out << e.id << e.parameters << "\t" << e.provenance << "\n";
  return kExitOk;
}

}  // namespace

AlgebraPtr load_algebra(const std::string& source) {
  if (is_corpus_id(source)) {
    try {
      return build(source);
    } catch (const UnknownCorpusId&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  std::string text = read_file(source);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return table_from_json(Json::parse(text));
    } catch (const Json::parse_error& e) {
      throw UsageError(source + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(source + ": " + e.what());
    }
  }
  try {
    return parse_document(text);
  } catch (const ParseError& e) {
    throw UsageError(source + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message());
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cdga cohomology and Massey products"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string source, classes, theta, output;
  int degree = 0;
  int n = -1;
  int max_degree = -1;
  bool json = false;
  bool vary_diagonal = false;

  auto* coh = app.add_subcommand("cohomology", "Basis of H^K");
  coh->add_option("source", source, "corpus id or file")->required();
  coh->add_option("--degree", degree, "degree K")->required();
  coh->add_option("--adjoin-sqrt", theta, "extend scalars by sqrt(Q) first");
  coh->add_flag("--json", json);

  auto* mas = app.add_subcommand("massey", "Decide well-definedness and triviality of a Massey product");
  mas->add_option("source", source, "corpus id or file")->required();
  mas->add_option("--classes", classes, "\"[e1],[e2],...\" closed representatives")->required();
  mas->add_option("--adjoin-sqrt", theta, "decide over Q(sqrt(Q))");
  mas->add_flag("--vary-diagonal", vary_diagonal, "also vary the representatives of the input classes");
  mas->add_flag("--json", json);

  auto* tru = app.add_subcommand("truncate", "A / A^{>=N} as a table");
  tru->add_option("source", source, "corpus id or file")->required();
  tru->add_option("N", n, "truncation degree")->required()->check(CLI::PositiveNumber);
  tru->add_option("-o,--output", output, "output file, - for stdout")->required();

  auto* dua = app.add_subcommand("dualize", "Poincare dualization P_n A as a table");
  dua->add_option("source", source, "corpus id or file")->required();
  dua->add_option("--n", n, "formal dimension (default 2*top+1)");
  dua->add_option("-o,--output", output, "output file, - for stdout")->required();

  auto* ext = app.add_subcommand("extend", "Extension of scalars");
  ext->add_option("source", source, "corpus id or file")->required();
  ext->add_option("--adjoin-sqrt", theta, "rational to adjoin the square root of")->required();
  ext->add_option("-o,--output", output, "output file, - for stdout")->required();

  auto* chk = app.add_subcommand("check", "Structure checks: d^2, Leibniz, commutativity, connectivity");
  chk->add_option("source", source, "corpus id or file")->required();
  chk->add_option("--max-degree", max_degree, "check products up to this degree (default: top or 8)");
  chk->add_flag("--json", json);

  auto* cor = app.add_subcommand("corpus", "Built-in algebras");
  cor->require_subcommand(1);
  auto* cor_list = cor->add_subcommand("list", "List corpus ids");
  std::string show_id;
  auto* cor_show = cor->add_subcommand("show", "Print the document of a corpus algebra");
  cor_show->add_option("id", show_id)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (coh->parsed()) return cmd_cohomology(source, degree, theta, json, out);
    if (mas->parsed()) return cmd_massey(source, classes, theta, vary_diagonal, json, out);
    if (tru->parsed()) {
      auto t = truncate(load_algebra(source), n);
      write_output(output, serialize(t.algebra), out);
      return kExitOk;
    }
    if (dua->parsed()) {
      auto alg = load_algebra(source);
      if (!alg->top_degree()) throw UsageError("dualize needs a finite-dimensional algebra; truncate it first");
      int dim = n >= 0 ? n : default_dualization_degree(*alg);
      auto p = poincare_dualize(alg, dim);
      write_output(output, serialize(p.algebra), out);
      return kExitOk;
    }
    if (ext->parsed()) {
      write_output(output, serialize(with_field(load_algebra(source), theta)), out);
      return kExitOk;
    }
    if (chk->parsed()) return cmd_check(source, max_degree, json, out);
    if (cor_list->parsed()) return cmd_corpus_list(out);
    if (cor_show->parsed()) {
      out << corpus_document(show_id);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace massey
