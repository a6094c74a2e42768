#include "mgk/multispace.hpp"

#include <set>

#include "mgk/errors.hpp"

namespace mgk {

MultiGroupSpace::MultiGroupSpace(std::vector<std::string> names, std::vector<FiniteGroup> groups)
    : MultiGroupSpace(names, ElementSet::full(names.size()), std::move(groups)) {}

MultiGroupSpace::MultiGroupSpace(std::vector<std::string> names, ElementSet universe,
                                 std::vector<FiniteGroup> groups)
    : names_(std::move(names)), universe_(std::move(universe)), groups_(std::move(groups)) {
  if (universe_.capacity() != names_.size())
    throw StructuralError("universe set does not match the element list");
  if (groups_.size() > OpMask::kMaxOps)
    throw StructuralError("more than " + std::to_string(OpMask::kMaxOps) + " operations");
  std::set<std::string_view> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw StructuralError("duplicate element name '" + n + "'");
  for (const auto& g : groups_)
    if (g.universe_size() != names_.size())
      throw StructuralError("group '" + g.op() + "' is defined over a different universe");
}

std::optional<ElementId> MultiGroupSpace::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) {
      ElementId id(static_cast<std::uint32_t>(i));
      if (universe_.contains(id)) return id;
    }
  return std::nullopt;
}

ElementId MultiGroupSpace::element(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw DomainError("unknown element '" + std::string(name) + "'");
}

OpIndex MultiGroupSpace::op_index(std::string_view op) const {
  for (std::size_t i = 0; i < groups_.size(); ++i)
    if (groups_[i].op() == op) return i;
  throw DomainError("unknown operation '" + std::string(op) + "'");
}

namespace {

// Scans "outer distributes over inner" on both sides; returns the number of
// fully defined instances and appends failures to `witnesses`.
std::size_t scan_distribution(const FiniteGroup& outer, const FiniteGroup& inner,
                              std::vector<Violation>& witnesses, bool& holds) {
  const auto& co = outer.carrier_set();
  const auto& ci = inner.carrier_set();
  const ElementSet yz = co & ci;  // y, z must be operands of both
  std::size_t defined = 0;
  std::size_t recorded = 0;
  auto fail = [&](ElementId x, ElementId y, ElementId z, const char* which) {
    holds = false;
    if (recorded++ < ValidationReport::kWitnessCap)
      witnesses.push_back({ViolationKind::distribution, outer.op() + " over " + inner.op(),
                           {x, y, z}, which});
  };

  co.for_each([&](ElementId x) {
    yz.for_each([&](ElementId y) {
      yz.for_each([&](ElementId z) {
        ElementId s = inner.multiply(y, z);
        if (!co.contains(s)) return;
        // x*(y o z) = (x*y) o (x*z)
        ElementId xy = outer.multiply(x, y);
        ElementId xz = outer.multiply(x, z);
        if (ci.contains(xy) && ci.contains(xz)) {
          ++defined;
          if (outer.multiply(x, s) != inner.multiply(xy, xz)) fail(x, y, z, "left law");
        }
        // (y o z)*x = (y*x) o (z*x)
        ElementId yx = outer.multiply(y, x);
        ElementId zx = outer.multiply(z, x);
        if (ci.contains(yx) && ci.contains(zx)) {
          ++defined;
          if (outer.multiply(s, x) != inner.multiply(yx, zx)) fail(x, y, z, "right law");
        }
      });
    });
  });
  return defined;
}

}  // namespace

DistributionReport check_distribution(const MultiGroupSpace& ms, OpIndex a, OpIndex b) {
  if (a >= ms.op_count() || b >= ms.op_count()) throw DomainError("unknown operation index");
  if (a == b) throw PreconditionError("distribution needs two distinct operations");
  const auto& ga = ms.group(a);
  const auto& gb = ms.group(b);
  DistributionReport r;
  r.op_a = ga.op();
  r.op_b = gb.op();
  r.defined_triples_a_over_b = scan_distribution(ga, gb, r.witnesses, r.a_over_b);
  r.defined_triples_b_over_a = scan_distribution(gb, ga, r.witnesses, r.b_over_a);
  return r;
}

DistributionReport check_distribution(const MultiGroupSpace& ms, std::string_view op_a,
                                      std::string_view op_b) {
  return check_distribution(ms, ms.op_index(op_a), ms.op_index(op_b));
}

MultiGroupValidation validate_multigroup(const MultiGroupSpace& ms) {
  MultiGroupValidation out;
  auto& report = out.report;

  ElementSet covered = ms.empty_set();
  for (const auto& g : ms.groups()) {
    covered |= g.carrier_set();
    if (!g.carrier_set().is_subset_of(ms.universe())) {
      (g.carrier_set() - ms.universe()).for_each([&](ElementId e) {
        report.add({ViolationKind::carrier_outside_universe, g.op(), {e},
                    "carrier element is not in the universe"});
      });
    }
  }
  (ms.universe() - covered).for_each([&](ElementId e) {
    report.add({ViolationKind::orphan_element, "", {e}, "element is in no carrier"});
  });
  for (std::size_t i = 0; i < ms.op_count(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (ms.op_name(i) == ms.op_name(j))
        report.add({ViolationKind::duplicate_op, ms.op_name(i), {}, "operation id is repeated"});

  bool groups_ok = true;
  for (const auto& g : ms.groups()) {
    auto gr = validate_group(g);
    groups_ok = groups_ok && gr.ok();
    report.merge(gr);
  }
  // Distribution is only meaningful once every table is closed.
  if (!groups_ok || !report.structural.empty()) return out;

  for (std::size_t i = 0; i < ms.op_count(); ++i) {
    for (std::size_t j = i + 1; j < ms.op_count(); ++j) {
      auto d = check_distribution(ms, i, j);
      if (!d.passed())
        for (const auto& w : d.witnesses) report.add(w);
      out.distribution.push_back(std::move(d));
    }
  }
  return out;
}

std::string_view to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::group: return "group";
    case SpecialCase::body: return "body";
    case SpecialCase::field: return "field";
    case SpecialCase::general: return "general";
  }
  return "general";
}

std::string_view to_string(CarrierReading r) {
  switch (r) {
    case CarrierReading::not_applicable: return "not_applicable";
    case CarrierReading::exact: return "exact";
    case CarrierReading::identity_excluded: return "identity_excluded";
  }
  return "not_applicable";
}

Classification classify_special_case(const MultiGroupSpace& ms) {
  if (!validate_multigroup(ms).ok())
    throw PreconditionError("classification requires a valid multi-group space");
  if (ms.op_count() == 1) return {SpecialCase::group, CarrierReading::not_applicable};
  if (ms.op_count() != 2) return {};

  const auto& g1 = ms.group(0);
  const auto& g2 = ms.group(1);
  const auto& u = ms.universe();
  auto without = [&](ElementId e) {
    ElementSet s = u;
    s.erase(e);
    return s;
  };

  CarrierReading reading = CarrierReading::not_applicable;
  if (g1.carrier_set() == u && g2.carrier_set() == u) {
    reading = CarrierReading::exact;
  } else if ((g1.carrier_set() == u && g2.carrier_set() == without(g1.identity())) ||
             (g2.carrier_set() == u && g1.carrier_set() == without(g2.identity()))) {
    reading = CarrierReading::identity_excluded;
  }
  if (reading == CarrierReading::not_applicable) return {};
  if (g1.is_abelian() && g2.is_abelian()) return {SpecialCase::field, reading};
  return {SpecialCase::body, reading};
}

OpMask ops_of_element(const MultiGroupSpace& ms, ElementId g) {
  if (!ms.universe().contains(g)) throw DomainError("element is not in the universe");
  OpMask out;
  for (std::size_t i = 0; i < ms.op_count(); ++i)
    if (ms.group(i).contains(g)) out.insert(i);
  return out;
}

bool is_complete(const MultiGroupSpace& ms, const ElementSet& s, OpIndex op) {
  if (op >= ms.op_count()) throw DomainError("unknown operation index");
  if (!s.is_subset_of(ms.universe())) throw DomainError("subset leaves the universe");
  const auto& g = ms.group(op);
  const ElementSet part = s & g.carrier_set();
  bool closed = true;
  part.for_each([&](ElementId a) {
    part.for_each([&](ElementId b) {
      if (closed && !s.contains(g.multiply(a, b))) closed = false;
    });
  });
  return closed;
}

bool is_complete(const MultiGroupSpace& ms, const ElementSet& s, std::string_view op) {
  return is_complete(ms, s, ms.op_index(op));
}

}  // namespace mgk
