#include "massey/corpus.hpp"

#include "massey/constructions.hpp"
#include "massey/dsl.hpp"

namespace massey {

namespace {

constexpr const char* kIwasawaReal = R"(# Left-invariant forms on the real Iwasawa manifold.
[field]
base: Q

[generators]
eta1: 1
eta2: 1
eta3: 1
eta4: 1
eta5: 1
eta6: 1

[differential]
d eta5 = eta1*eta3 - eta2*eta4
d eta6 = eta2*eta3 + eta1*eta4
)";

constexpr const char* kIwasawaComplex = R"(# Complex invariant forms on the Iwasawa manifold; s = sqrt(-1).
[field]
base: Q
adjoin_sqrt: -1

[generators]
phi1: 1
phibar1: 1
phi2: 1
phibar2: 1
phi3: 1
phibar3: 1

[differential]
d phi3 = phi1*phi2
d phibar3 = phibar1*phibar2
)";

constexpr const char* kHeisenbergSquared = R"(# Product of two Heisenberg nilmanifold models.
[field]
base: Q

[generators]
x1: 1
x2: 1
x3: 1
y1: 1
y2: 1
y3: 1

[differential]
d x3 = x1*x2
d y3 = y1*y2
)";

std::string quadruple_document(const Rational& theta) {
  std::string b_term = sgn(theta) < 0 ? " - " + rational_to_string(-theta) : " + " + rational_to_string(theta);
  b_term += "*b^2";
  return "# Quadruple-product family with parameter theta = " + rational_to_string(theta) +
         ".\n"
         "[field]\n"
         "base: Q\n"
         "\n"
         "[generators]\n"
         "x: 2\n"
         "y: 3\n"
         "a: 4\n"
         "b: 4\n"
         "u: 6\n"
         "v: 6\n"
         "w: 7\n"
         "\n"
         "[differential]\n"
         "d a = x*y\n"
         "d u = a*y\n"
         "d v = b*y\n"
         "d w = 2*x*u - a^2" +
         b_term + "\n";
}

}  // namespace

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = {
      {"iwasawa_real", "", "minimal model of the real Iwasawa manifold, six degree-1 generators"},
      {"iwasawa_complex", "", "the Iwasawa model in complex coordinates phi_j = eta_{2j-1} + i eta_{2j}, over Q(sqrt(-1))"},
      {"heisenberg_squared", "", "model of the product of two Heisenberg nilmanifolds"},
      {"quadruple", "@THETA",
       "seven-generator family with dw = 2xu - a^2 + theta b^2; theta = -1 is the default"},
      {"iwasawa_truncated", "", "iwasawa_real modulo the ideal of elements of degree >= 3"},
  };
  return entries;
}

CorpusSpec parse_corpus_spec(std::string_view spec) {
  CorpusSpec out;
  auto at = spec.find('@');
  out.id = std::string(spec.substr(0, at));
  if (at != std::string_view::npos) out.parameter = std::string(spec.substr(at + 1));
  return out;
}

bool is_corpus_id(std::string_view spec) {
  auto id = parse_corpus_spec(spec).id;
  for (const auto& e : corpus_entries())
    if (e.id == id) return true;
  return false;
}

Rational quadruple_theta(const CorpusSpec& spec) {
  if (!spec.parameter) return Rational(-1);
  Rational theta;
  try {
    theta = FieldElement::parse(*spec.parameter, Field::rationals()).rational_part();
  } catch (const std::exception&) {
    throw std::invalid_argument("quadruple: theta must be a rational, got '" + *spec.parameter + "'");
  }
  if (sgn(theta) == 0 || is_square_in_rationals(theta))
    throw std::invalid_argument("quadruple: theta = " + rational_to_string(theta) +
                                " must be a nonzero non-square rational");
  return theta;
}

std::string corpus_document(std::string_view spec) {
  auto s = parse_corpus_spec(spec);
  if (s.id != "quadruple" && s.parameter)
    throw std::invalid_argument("corpus entry '" + s.id + "' takes no parameter");
  if (s.id == "iwasawa_real") return kIwasawaReal;
  if (s.id == "iwasawa_complex") return kIwasawaComplex;
  if (s.id == "heisenberg_squared") return kHeisenbergSquared;
  if (s.id == "quadruple") return quadruple_document(quadruple_theta(s));
  if (s.id == "iwasawa_truncated")
    throw std::invalid_argument("iwasawa_truncated is not a free algebra and has no document");
  throw UnknownCorpusId("unknown corpus id '" + s.id + "'");
}

std::shared_ptr<const FreeCdga> build_free(std::string_view spec) { return parse_document(corpus_document(spec)); }

AlgebraPtr build(std::string_view spec) {
  auto s = parse_corpus_spec(spec);
  if (s.id == "iwasawa_truncated") {
    if (s.parameter) throw std::invalid_argument("corpus entry 'iwasawa_truncated' takes no parameter");
    return truncate(build_free("iwasawa_real"), 3).algebra;
  }
  return build_free(spec);
}

}  // namespace massey
