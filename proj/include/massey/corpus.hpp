#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "massey/cochain.hpp"
#include "massey/field.hpp"
#include "massey/gca.hpp"

namespace massey {

class UnknownCorpusId : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CorpusEntry {
  std::string id;
  /// Parameter syntax, e.g. "@THETA"; empty when the entry takes none.
  std::string parameters;
  std::string provenance;
};

const std::vector<CorpusEntry>& corpus_entries();

/// "quadruple@-1" -> ("quadruple", "-1").
struct CorpusSpec {
  std::string id;
  std::optional<std::string> parameter;
};
CorpusSpec parse_corpus_spec(std::string_view spec);
bool is_corpus_id(std::string_view spec);

/// The theta of "quadruple@theta" (default -1); rejects 0 and rational squares.
Rational quadruple_theta(const CorpusSpec& spec);

/// DSL text of a free corpus algebra; throws for iwasawa_truncated.
std::string corpus_document(std::string_view spec);
std::shared_ptr<const FreeCdga> build_free(std::string_view spec);
/// Any corpus algebra, including the truncation.
AlgebraPtr build(std::string_view spec);

}  // namespace massey
