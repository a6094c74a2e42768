#pragma once

#include <string>
#include <string_view>

#include "mgk/multispace.hpp"

namespace mgk {

/// Reads the line-oriented `.mgs` instance format:
///
///     elements: 0 1 2
///     group +:
///       carrier: 0 1 2
///       identity: 0
///       table:
///         0: 0 1 2
///         1: 1 2 0
///         2: 2 0 1
///
/// `#` starts a comment; indentation is free. Table rows are labelled by the
/// left operand and columns follow the carrier line. Element and operation
/// names are whitespace-free tokens without `:`, `,` or `#`.
///
/// Throws ParseError (1-based line and column) for anything that cannot form a
/// space: missing universe, unknown or duplicate elements, duplicate operation
/// ids, missing or malformed table rows, orphan elements. Axiom failures are
/// left to `validate_multigroup`.
MultiGroupSpace parse_instance(std::string_view text);

/// Canonical text form; `parse_instance(serialize_instance(ms)) == ms`.
std::string serialize_instance(const MultiGroupSpace& ms);

}  // namespace mgk
