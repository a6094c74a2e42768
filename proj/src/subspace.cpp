#include "mgk/subspace.hpp"

namespace mgk {

SubsetRef SubsetRef::create(const MultiGroupSpace& ms, ElementSet elements, OpMask ops) {
  if (elements.capacity() != ms.capacity() || !elements.is_subset_of(ms.universe()))
    throw DomainError("subset leaves the universe");
  if (!ops.is_subset_of(OpMask::all(ms.op_count()))) throw DomainError("unknown operation index");
  for (OpIndex op : ops.indices())
    if (!elements.intersects(ms.group(op).carrier_set()))
      throw StructuralError("kept operation '" + ms.op_name(op) +
                            "' acts on no element of the subset");
  return SubsetRef(std::move(elements), ops);
}

SubsetRef SubsetRef::touching(const MultiGroupSpace& ms, ElementSet elements) {
  OpMask ops;
  for (OpIndex i = 0; i < ms.op_count(); ++i)
    if (elements.intersects(ms.group(i).carrier_set())) ops.insert(i);
  return create(ms, std::move(elements), ops);
}

SubsetRef SubsetRef::whole(const MultiGroupSpace& ms) { return touching(ms, ms.universe()); }

namespace {

ElementSet covered_by(const MultiGroupSpace& ms, OpMask ops) {
  ElementSet c = ms.empty_set();
  for (OpIndex op : ops.indices()) c |= ms.group(op).carrier_set();
  return c;
}

}  // namespace

SubspaceEvidence is_subspace_by_intersection(const MultiGroupSpace& ms, const SubsetRef& s) {
  SubspaceEvidence ev;
  ev.uncovered = s.elements() - covered_by(ms, s.ops());
  bool all_ok = !s.ops().empty() && ev.uncovered.empty();
  for (OpIndex op : s.ops().indices()) {
    const auto& g = ms.group(op);
    ElementSet part = s.elements() & g.carrier_set();
    IntersectionVerdict v = IntersectionVerdict::empty;
    if (!part.empty())
      v = is_subgroup(g, part) ? IntersectionVerdict::subgroup : IntersectionVerdict::not_subgroup;
    all_ok = all_ok && v != IntersectionVerdict::not_subgroup;
    ev.per_op.push_back({op, std::move(part), v});
  }
  ev.verdict = all_ok;
  return ev;
}

bool is_subspace_by_completeness(const MultiGroupSpace& ms, const SubsetRef& s) {
  for (OpIndex op : s.ops().indices())
    if (!is_complete(ms, s.elements(), op)) return false;
  return true;
}

bool is_subspace(const MultiGroupSpace& ms, const SubsetRef& s) {
  if (s.ops().empty()) return false;
  if (!(s.elements() - covered_by(ms, s.ops())).empty()) return false;
  for (OpIndex op : s.ops().indices()) {
    ElementSet part = s.elements() & ms.group(op).carrier_set();
    if (!is_complete(ms, part, op)) return false;
  }
  return true;
}

MultiGroupSpace induced_space(const MultiGroupSpace& ms, const SubsetRef& s) {
  std::vector<FiniteGroup> groups;
  for (OpIndex op : s.ops().indices()) groups.push_back(ms.group(op).restricted_to(s.elements()));
  return MultiGroupSpace(ms.names(), s.elements(), std::move(groups));
}

namespace {

// Products g *_k h over kept ops; empty when none is defined.
ElementSet raw_coset(const MultiGroupSpace& ms, const SubsetRef& h, ElementId g) {
  ElementSet out = ms.empty_set();
  for (OpIndex op : h.ops().indices()) {
    const auto& grp = ms.group(op);
    if (!grp.contains(g)) continue;
    (h.elements() & grp.carrier_set()).for_each([&](ElementId x) { out.insert(grp.multiply(g, x)); });
  }
  return out;
}

void require_subspace(const MultiGroupSpace& ms, const SubsetRef& h) {
  if (!is_subspace(ms, h)) throw PreconditionError("subset is not a multi-group subspace");
}

}  // namespace

ElementSet coset(const MultiGroupSpace& ms, const SubsetRef& h, ElementId g) {
  if (!ms.universe().contains(g)) throw DomainError("element is not in the universe");
  require_subspace(ms, h);
  ElementSet out = raw_coset(ms, h, g);
  if (out.empty()) out.insert(g);
  return out;
}

bool coset_is_fallback(const MultiGroupSpace& ms, const SubsetRef& h, ElementId g) {
  if (!ms.universe().contains(g)) throw DomainError("element is not in the universe");
  return raw_coset(ms, h, g).empty();
}

CosetDecomposition coset_decomposition(const MultiGroupSpace& ms, const SubsetRef& h) {
  require_subspace(ms, h);
  CosetDecomposition d{h, {}, {}, {}};
  ElementSet covered = ms.empty_set();
  while (!(ms.universe() - covered).empty()) {
    ElementId x = (ms.universe() - covered).front();
    ElementSet c = raw_coset(ms, h, x);
    if (c.empty()) {
      c.insert(x);
      d.fallback.push_back(x);
    }
    for (std::size_t k = 0; k < d.cosets.size(); ++k)
      if (d.cosets[k].intersects(c)) throw DecompositionFailure(d.transversal[k], x, d.cosets[k], c);
    covered |= c;
    d.transversal.push_back(x);
    d.cosets.push_back(std::move(c));
  }
  return d;
}

LagrangeResult lagrange_check(const FiniteGroup& g, std::size_t bound) {
  for (const auto& h : subgroups(g, bound))
    if (g.order() % h.size() != 0) return {false, h};
  return {};
}

}  // namespace mgk
