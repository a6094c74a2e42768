#include "mgk/group.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace mgk {

namespace {

constexpr std::uint32_t kNoLocal = std::numeric_limits<std::uint32_t>::max();

void sort_canonical(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
}

void check_bound(const FiniteGroup& g, std::size_t bound, const char* what) {
  if (g.order() > bound) throw BoundExceeded(what, g.order(), bound);
}

bool normal_in(const FiniteGroup& g, const ElementSet& ambient, const ElementSet& k) {
  bool ok = true;
  ambient.for_each([&](ElementId x) {
    if (!ok) return;
    ElementId xi = g.inverse(x);
    k.for_each([&](ElementId h) {
      if (ok && !k.contains(g.multiply(g.multiply(x, h), xi))) ok = false;
    });
  });
  return ok;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string op, std::vector<ElementId> carrier, ElementId identity,
                         std::vector<ElementId> table, std::size_t universe_size)
    : op_(std::move(op)),
      carrier_(std::move(carrier)),
      carrier_set_(universe_size),
      identity_(identity),
      table_(std::move(table)),
      universe_size_(universe_size),
      local_(universe_size, kNoLocal) {
  const std::size_t n = carrier_.size();
  if (n == 0) throw StructuralError("group '" + op_ + "' has an empty carrier");
  if (table_.size() != n * n)
    throw StructuralError("group '" + op_ + "' table has " + std::to_string(table_.size()) +
                          " entries, expected " + std::to_string(n * n));
  for (std::size_t i = 0; i < n; ++i) {
    ElementId e = carrier_[i];
    if (e.index() >= universe_size_)
      throw StructuralError("group '" + op_ + "' carrier element outside the universe");
    if (carrier_set_.contains(e))
      throw StructuralError("group '" + op_ + "' carrier repeats an element");
    carrier_set_.insert(e);
    local_[e.index()] = static_cast<std::uint32_t>(i);
  }

  const ElementId missing(static_cast<std::uint32_t>(universe_size_));
  inverse_.assign(n, missing);
  if (!contains(identity_)) return;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table_[i * n + j] == identity_ && table_[j * n + i] == identity_) {
        inverse_[i] = carrier_[j];
        break;
      }
    }
  }
}

std::size_t FiniteGroup::local(ElementId e) const {
  if (e.index() >= universe_size_ || local_[e.index()] == kNoLocal)
    throw DomainError("element " + std::to_string(e.value) + " is not in the carrier of '" +
                      op_ + "'");
  return local_[e.index()];
}

ElementId FiniteGroup::multiply(ElementId a, ElementId b) const {
  return table_[local(a) * carrier_.size() + local(b)];
}

bool FiniteGroup::has_inverse(ElementId a) const {
  return inverse_[local(a)].index() < universe_size_;
}

ElementId FiniteGroup::inverse(ElementId a) const {
  ElementId inv = inverse_[local(a)];
  if (inv.index() >= universe_size_)
    throw DomainError("element " + std::to_string(a.value) + " has no inverse under '" + op_ +
                      "'");
  return inv;
}

bool FiniteGroup::is_abelian() const {
  const std::size_t n = carrier_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (table_[i * n + j] != table_[j * n + i]) return false;
  return true;
}

FiniteGroup FiniteGroup::restricted_to(const ElementSet& subset) const {
  const std::size_t n = carrier_.size();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (subset.contains(carrier_[i])) keep.push_back(i);
  if (keep.empty()) throw PreconditionError("restriction of '" + op_ + "' to an empty set");

  std::vector<ElementId> carrier;
  std::vector<ElementId> table;
  carrier.reserve(keep.size());
  table.reserve(keep.size() * keep.size());
  for (auto i : keep) carrier.push_back(carrier_[i]);
  for (auto i : keep)
    for (auto j : keep) table.push_back(table_[i * n + j]);
  return FiniteGroup(op_, std::move(carrier), identity_, std::move(table), universe_size_);
}

ValidationReport validate_group(const FiniteGroup& g) {
  ValidationReport report;
  const auto carrier = g.carrier();
  const std::size_t n = carrier.size();
  const auto table = g.table();
  const auto& op = g.op();

  bool closed = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ElementId v = table[i * n + j];
      if (v.index() >= g.universe_size()) {
        closed = false;
        report.add({ViolationKind::entry_outside_universe, op, {carrier[i], carrier[j]},
                    "table entry is not an element of the universe"});
      } else if (!g.contains(v)) {
        closed = false;
        report.add({ViolationKind::closure, op, {carrier[i], carrier[j], v},
                    "product lies outside the carrier"});
      }
    }
  }

  // Associativity over triples whose intermediate products stay in the carrier.
  for (ElementId a : carrier) {
    for (ElementId b : carrier) {
      ElementId ab = g.multiply(a, b);
      if (!closed && !g.contains(ab)) continue;
      for (ElementId c : carrier) {
        ElementId bc = g.multiply(b, c);
        if (!closed && !g.contains(bc)) continue;
        if (g.multiply(ab, c) != g.multiply(a, bc))
          report.add({ViolationKind::associativity, op, {a, b, c}, "(a*b)*c != a*(b*c)"});
      }
    }
  }

  ElementId e = g.identity();
  if (!g.contains(e)) {
    report.add({ViolationKind::identity, op, {e}, "declared identity is not in the carrier"});
    return report;
  }
  for (ElementId a : carrier) {
    if (g.multiply(e, a) != a || g.multiply(a, e) != a)
      report.add({ViolationKind::identity, op, {e, a}, "identity does not fix this element"});
  }
  for (ElementId a : carrier) {
    if (!g.has_inverse(a))
      report.add({ViolationKind::inverse, op, {a}, "element has no two-sided inverse"});
  }
  return report;
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!s.is_subset_of(g.carrier_set()))
    throw DomainError("subset is not contained in the carrier of '" + g.op() + "'");
  if (s.empty()) return false;
  bool ok = true;
  s.for_each([&](ElementId a) {
    if (!ok) return;
    if (!g.has_inverse(a) || !s.contains(g.inverse(a))) {
      ok = false;
      return;
    }
    s.for_each([&](ElementId b) {
      if (ok && !s.contains(g.multiply(a, b))) ok = false;
    });
  });
  return ok;
}

bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) throw PreconditionError("subset is not a subgroup of '" + g.op() + "'");
  return normal_in(g, g.carrier_set(), s);
}

ElementSet generated_subgroup(const FiniteGroup& g, const ElementSet& seeds) {
  ElementSet closure = seeds;
  closure.insert(g.identity());
  std::vector<ElementId> frontier = closure.elements();
  while (!frontier.empty()) {
    std::vector<ElementId> next;
    auto current = closure.elements();
    for (ElementId a : frontier) {
      for (ElementId b : current) {
        for (ElementId p : {g.multiply(a, b), g.multiply(b, a)}) {
          if (!closure.contains(p)) {
            closure.insert(p);
            next.push_back(p);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return closure;
}

std::vector<ElementSet> subgroups(const FiniteGroup& g, std::size_t bound) {
  check_bound(g, bound, "subgroup enumeration");
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> found;
  auto add = [&](ElementSet s) {
    if (seen.insert(s).second) found.push_back(std::move(s));
  };

  for (ElementId a : g.carrier()) add(generated_subgroup(g, ElementSet(g.universe_size(), {a})));

  // Every subgroup of a finite group is a join of cyclic ones.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (found[i].is_subset_of(found[j]) || found[j].is_subset_of(found[i])) continue;
      add(generated_subgroup(g, found[i] | found[j]));
    }
  }
  sort_canonical(found);
  return found;
}

namespace {

std::vector<ElementSet> maximal_normal_in(const FiniteGroup& g, const ElementSet& h,
                                          const std::vector<ElementSet>& all) {
  std::vector<ElementSet> normal;
  for (const auto& k : all)
    if (k.is_subset_of(h) && !(k == h) && normal_in(g, h, k)) normal.push_back(k);
  std::vector<ElementSet> maximal;
  for (const auto& k : normal) {
    bool dominated = std::any_of(normal.begin(), normal.end(), [&](const ElementSet& m) {
      return !(m == k) && k.is_subset_of(m);
    });
    if (!dominated) maximal.push_back(k);
  }
  std::sort(maximal.begin(), maximal.end(), lex_less);
  return maximal;
}

}  // namespace

std::vector<ElementSet> maximal_normal_subgroups(const FiniteGroup& g, std::size_t bound) {
  return maximal_normal_in(g, g.carrier_set(), subgroups(g, bound));
}

FiniteGroup quotient_group(const FiniteGroup& g, const ElementSet& n) {
  if (!is_normal_subgroup(g, n))
    throw PreconditionError("quotient by a subgroup that is not normal in '" + g.op() + "'");

  std::vector<ElementId> rep_of(g.universe_size());
  std::vector<ElementId> reps;
  ElementSet covered(g.universe_size());
  g.carrier_set().for_each([&](ElementId x) {
    if (covered.contains(x)) return;
    ElementSet coset(g.universe_size());
    n.for_each([&](ElementId h) { coset.insert(g.multiply(x, h)); });
    ElementId rep = coset.front();
    coset.for_each([&](ElementId y) { rep_of[y.index()] = rep; });
    covered |= coset;
    reps.push_back(rep);
  });

  std::vector<ElementId> table;
  table.reserve(reps.size() * reps.size());
  for (ElementId a : reps)
    for (ElementId b : reps) table.push_back(rep_of[g.multiply(a, b).index()]);
  return FiniteGroup(g.op(), reps, rep_of[g.identity().index()], std::move(table),
                     g.universe_size());
}

std::vector<CompositionChain> composition_series(const FiniteGroup& g, std::size_t bound) {
  check_bound(g, bound, "composition series enumeration");
  const auto all = subgroups(g, bound);
  std::unordered_map<ElementSet, std::vector<std::vector<ElementSet>>, ElementSetHash> memo;

  std::function<const std::vector<std::vector<ElementSet>>&(const ElementSet&)> tails =
      [&](const ElementSet& h) -> const std::vector<std::vector<ElementSet>>& {
    if (auto it = memo.find(h); it != memo.end()) return it->second;
    std::vector<std::vector<ElementSet>> result;
    if (h.size() == 1) {
      result.push_back({h});
    } else {
      for (const auto& k : maximal_normal_in(g, h, all)) {
        for (const auto& tail : tails(k)) {
          std::vector<ElementSet> chain{h};
          chain.insert(chain.end(), tail.begin(), tail.end());
          result.push_back(std::move(chain));
        }
      }
    }
    return memo.emplace(h, std::move(result)).first->second;
  };

  std::vector<CompositionChain> chains;
  for (const auto& links : tails(g.carrier_set())) chains.push_back({links});
  return chains;
}

}  // namespace mgk
