#include "mgk/validation.hpp"

#include <algorithm>

namespace mgk {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::entry_outside_universe: return "entry_outside_universe";
    case ViolationKind::orphan_element: return "orphan_element";
    case ViolationKind::carrier_outside_universe: return "carrier_outside_universe";
    case ViolationKind::duplicate_op: return "duplicate_op";
    case ViolationKind::closure: return "closure";
    case ViolationKind::associativity: return "associativity";
    case ViolationKind::identity: return "identity";
    case ViolationKind::inverse: return "inverse";
    case ViolationKind::distribution: return "distribution";
  }
  return "unknown";
}

bool is_structural(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::entry_outside_universe:
    case ViolationKind::orphan_element:
    case ViolationKind::carrier_outside_universe:
    case ViolationKind::duplicate_op:
      return true;
    default:
      return false;
  }
}

std::size_t ValidationReport::count(ViolationKind kind) const {
  auto match = [kind](const Violation& v) { return v.kind == kind; };
  return static_cast<std::size_t>(std::count_if(structural.begin(), structural.end(), match) +
                                  std::count_if(axioms.begin(), axioms.end(), match));
}

void ValidationReport::add(Violation v) {
  auto& list = is_structural(v.kind) ? structural : axioms;
  auto same = std::count_if(list.begin(), list.end(), [&](const Violation& w) {
    return w.kind == v.kind && w.op == v.op;
  });
  if (static_cast<std::size_t>(same) >= kWitnessCap) {
    ++suppressed;
    return;
  }
  list.push_back(std::move(v));
}

void ValidationReport::merge(const ValidationReport& other) {
  for (const auto& v : other.structural) add(v);
  for (const auto& v : other.axioms) add(v);
  suppressed += other.suppressed;
}

}  // namespace mgk
