#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mgk/element_set.hpp"

namespace mgk {

enum class ViolationKind {
  // structural
  entry_outside_universe,
  orphan_element,
  carrier_outside_universe,
  duplicate_op,
  // axioms
  closure,
  associativity,
  identity,
  inverse,
  distribution,
};

std::string_view to_string(ViolationKind kind);
bool is_structural(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string op;                  // operation the witness refers to, if any
  std::vector<ElementId> witness;  // pair or triple, depending on the kind
  std::string detail;
};

/// Outcome of an axiom scan. Structural problems are kept apart from axiom
/// failures; each kind keeps at most `kWitnessCap` witnesses and counts the rest.
struct ValidationReport {
  static constexpr std::size_t kWitnessCap = 10;

  std::vector<Violation> structural;
  std::vector<Violation> axioms;
  std::size_t suppressed = 0;

  bool ok() const { return structural.empty() && axioms.empty(); }
  std::size_t count(ViolationKind kind) const;

  /// Records `v` unless the cap for its kind (and op) is already reached.
  void add(Violation v);
  void merge(const ValidationReport& other);
};

}  // namespace mgk
