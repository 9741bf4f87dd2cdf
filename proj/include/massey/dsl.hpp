#pragma once

#include <string>
#include <string_view>

#include "massey/gca.hpp"

namespace massey {

/*
 * Definition documents for free cdgas:
 *
 *   # comment
 *   [field]
 *   base: Q
 *   adjoin_sqrt: -1        # optional
 *
 *   [generators]
 *   x: 2
 *   y: 3
 *
 *   [differential]
 *   d a = x*y              # "a = x*y" is accepted too; omitted generators are closed
 *
 * Errors are ParseError with the 1-based line and column.
 */
std::shared_ptr<const FreeCdga> parse_document(std::string_view text);

/// Inverse of parse_document (up to comments and whitespace).
std::string serialize_document(const FreeCdga& alg);

}  // namespace massey
