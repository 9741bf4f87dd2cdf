#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "massey/cohomology.hpp"
#include "massey/engine.hpp"
#include "massey/polysolve.hpp"
#include "massey/table_algebra.hpp"

namespace massey {

using Json = nlohmann::ordered_json;

Json field_to_json(const Field& field);
Field field_from_json(const Json& j);

/*
 * Table algebras on disk:
 *   {"format": "massey-table", "version": 1, "description", "field",
 *    "degrees": [{"labels": [...], "differential": [[[k, "c"], ...], ...]}],
 *    "products": [{"p", "q", "i", "j", "value": [[k, "c"], ...]}],
 *    "atoms": [{"name", "degree", "coords": ["c", ...]}]}
 * Only nonzero products are listed. Scalars are strings in field syntax.
 */
Json table_to_json(const TableAlgebra& alg);
/// Throws std::invalid_argument on malformed input.
TableAlgebraPtr table_from_json(const Json& j);

Json cochain_to_json(const CochainAlgebra& alg, const Cochain& x);
Json system_to_json(const PolySystem& system, const std::vector<std::string>& labels);
/// Certificate for `system`; equations are printed after the steps are applied.
Json refutation_to_json(const PolySystem& system, const Refutation& r);
Json solve_outcome_to_json(const PolySystem& system, const SolveOutcome& outcome);

/// `classes` are the textual inputs, echoed back.
Json massey_outcome_to_json(const MasseyOutcome& outcome, const std::vector<std::string>& classes);

}  // namespace massey
