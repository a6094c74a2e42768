#include "mgk/normal_series.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

namespace mgk {

namespace {

void require_subspace(const MultiGroupSpace& ms, const SubsetRef& h) {
  if (!is_subspace(ms, h)) throw PreconditionError("subset is not a multi-group subspace");
}

}  // namespace

NormalityEvidence is_normal_subspace(const MultiGroupSpace& ms, const SubsetRef& h) {
  require_subspace(ms, h);
  NormalityEvidence ev;
  for (OpIndex op : h.ops().indices()) {
    const auto& g = ms.group(op);
    const ElementSet part = h.elements() & g.carrier_set();
    for (ElementId x : g.carrier()) {
      ElementId xi = g.inverse(x);
      for (ElementId y : part.elements()) {
        ElementId c = g.multiply(g.multiply(x, y), xi);
        if (!h.elements().contains(c)) {
          ev.verdict = false;
          ev.first_violation = NormalityEvidence::Escape{op, x, y, c};
          return ev;
        }
      }
    }
  }
  return ev;
}

bool normality_criterion(const MultiGroupSpace& ms, const SubsetRef& h) {
  require_subspace(ms, h);
  for (OpIndex op : h.ops().indices()) {
    const auto& g = ms.group(op);
    ElementSet part = h.elements() & g.carrier_set();
    if (!part.empty() && !is_normal_subgroup(g, part)) return false;
  }
  return true;
}

OrientedOperationSequence OrientedOperationSequence::create(const MultiGroupSpace& ms,
                                                            const std::vector<std::string>& ops) {
  std::vector<OpIndex> order;
  std::set<OpIndex> seen;
  for (const auto& name : ops) {
    OpIndex i = ms.op_index(name);
    if (!seen.insert(i).second)
      throw StructuralError("operation '" + name + "' appears twice in the sequence");
    order.push_back(i);
  }
  if (order.size() != ms.op_count())
    throw StructuralError("sequence must list all " + std::to_string(ms.op_count()) +
                          " operations");
  return OrientedOperationSequence(std::move(order));
}

OrientedOperationSequence OrientedOperationSequence::declared(const MultiGroupSpace& ms) {
  std::vector<OpIndex> order(ms.op_count());
  std::iota(order.begin(), order.end(), OpIndex{0});
  return OrientedOperationSequence(std::move(order));
}

std::vector<OrientedOperationSequence> OrientedOperationSequence::all(const MultiGroupSpace& ms) {
  std::vector<OpIndex> order(ms.op_count());
  std::iota(order.begin(), order.end(), OpIndex{0});
  std::vector<OrientedOperationSequence> out;
  do {
    out.push_back(OrientedOperationSequence(order));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::size_t OrientedOperationSequence::rank(OpIndex op) const {
  auto it = std::find(order_.begin(), order_.end(), op);
  if (it == order_.end()) throw DomainError("operation is not in the sequence");
  return static_cast<std::size_t>(it - order_.begin());
}

bool is_normal_link(const MultiGroupSpace& ms, const ElementSet& outer, const ElementSet& inner) {
  if (inner.empty() || !inner.is_subset_of(outer)) return false;
  const MultiGroupSpace ambient = induced_space(ms, SubsetRef::touching(ms, outer));
  const SubsetRef candidate = SubsetRef::touching(ambient, inner);
  return is_subspace(ambient, candidate) && is_normal_subspace(ambient, candidate).verdict;
}

namespace {

std::string seq_names(const MultiGroupSpace& ms, const OrientedOperationSequence& seq) {
  std::string s;
  for (OpIndex op : seq.order()) s += (s.empty() ? "" : ",") + ms.op_name(op);
  return s;
}

bool finished(const MultiGroupSpace& ms, const ElementSet& link, OpIndex op) {
  const auto& g = ms.group(op);
  ElementSet part = link & g.carrier_set();
  return part.empty() || (part.size() == 1 && part.contains(g.identity()));
}

// Earliest op in the sequence whose part of the link shrinks.
std::optional<OpIndex> step_label(const MultiGroupSpace& ms, const OrientedOperationSequence& seq,
                                  const ElementSet& from, const ElementSet& to) {
  for (OpIndex op : seq.order()) {
    const auto& c = ms.group(op).carrier_set();
    if (!((from & c) == (to & c))) return op;
  }
  return std::nullopt;
}

bool step_allowed(const MultiGroupSpace& ms, const OrientedOperationSequence& seq,
                  const ElementSet& from, OpIndex label) {
  for (OpIndex op : seq.order()) {
    if (op == label) return true;
    if (!finished(ms, from, op)) return false;
  }
  return false;
}

class NormalSubspaceCache {
 public:
  explicit NormalSubspaceCache(const MultiGroupSpace& ms) : ms_(ms) {}

  /// Proper nonempty normal subspaces of the space induced on `link`.
  const std::vector<ElementSet>& below(const ElementSet& link) {
    if (auto it = cache_.find(link); it != cache_.end()) return it->second;
    const MultiGroupSpace ambient = induced_space(ms_, SubsetRef::touching(ms_, link));
    const auto elems = link.elements();
    const std::uint64_t full = (std::uint64_t{1} << elems.size()) - 1;
    std::vector<ElementSet> out;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      ElementSet s = ms_.empty_set();
      for (std::size_t i = 0; i < elems.size(); ++i)
        if ((mask >> i) & 1u) s.insert(elems[i]);
      const SubsetRef candidate = SubsetRef::touching(ambient, s);
      if (is_subspace(ambient, candidate) && is_normal_subspace(ambient, candidate).verdict)
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return cache_.emplace(link, std::move(out)).first->second;
  }

  bool is_normal_below(const ElementSet& outer, const ElementSet& inner) {
    const auto& list = below(outer);
    return std::find(list.begin(), list.end(), inner) != list.end();
  }

 private:
  const MultiGroupSpace& ms_;
  std::unordered_map<ElementSet, std::vector<ElementSet>, ElementSetHash> cache_;
};

}  // namespace

BuiltSeries build_series(const MultiGroupSpace& ms, const OrientedOperationSequence& seq,
                         std::size_t bound) {
  if (ms.universe().size() > bound)
    throw BoundExceeded("series construction", ms.universe().size(), bound);

  BuiltSeries out;
  out.expected_terminal = ms.group(seq.last()).identity();
  ElementSet link = ms.universe();
  out.series.chain.push_back(SubsetRef::touching(ms, link));

  auto push = [&](ElementSet next, OpIndex op) {
    link = std::move(next);
    out.series.chain.push_back(SubsetRef::touching(ms, link));
    out.series.step_ops.push_back(ms.op_name(op));
  };

  for (OpIndex op : seq.order()) {
    const auto& g = ms.group(op);
    while (true) {
      ElementSet part = link & g.carrier_set();
      if (part.empty()) break;
      if (part.size() == 1) {
        if (op == seq.last()) break;
        ElementSet next = link - part;
        if (!next.empty() && is_normal_link(ms, link, next)) push(std::move(next), op);
        break;
      }
      bool stepped = false;
      for (const auto& n : maximal_normal_subgroups(g.restricted_to(part), bound)) {
        ElementSet next = link - (part - n);
        if (is_normal_link(ms, link, next)) {
          push(std::move(next), op);
          stepped = true;
          break;
        }
      }
      if (!stepped)
        throw ConsistencyError("no maximal normal subgroup of the '" + g.op() +
                               "' part gives a normal subspace (sequence " +
                               seq_names(ms, seq) + ")");
    }
  }

  out.terminal_mismatch = !(link.size() == 1 && link.contains(out.expected_terminal));
  return out;
}

std::vector<NormalSeries> enumerate_maximal_series(const MultiGroupSpace& ms,
                                                   const OrientedOperationSequence& seq,
                                                   std::size_t bound) {
  if (ms.universe().size() > bound)
    throw BoundExceeded("maximal series enumeration (use build_series for a single witness)",
                        ms.universe().size(), bound);

  NormalSubspaceCache cache(ms);
  std::vector<NormalSeries> result;
  std::vector<ElementSet> links{ms.universe()};
  std::vector<std::string> labels;

  std::function<void()> walk = [&]() {
    const ElementSet current = links.back();
    const auto candidates = cache.below(current);
    bool extended = false;
    for (const auto& next : candidates) {
      auto label = step_label(ms, seq, current, next);
      if (!label || !step_allowed(ms, seq, current, *label)) continue;
      bool interposed = std::any_of(candidates.begin(), candidates.end(), [&](const ElementSet& h) {
        return !(h == next) && next.is_subset_of(h) && cache.is_normal_below(h, next);
      });
      if (interposed) continue;
      extended = true;
      links.push_back(next);
      labels.push_back(ms.op_name(*label));
      walk();
      links.pop_back();
      labels.pop_back();
    }
    if (!extended) {
      NormalSeries s;
      for (const auto& l : links) s.chain.push_back(SubsetRef::touching(ms, l));
      s.step_ops = labels;
      result.push_back(std::move(s));
    }
  };
  walk();
  return result;
}

LengthInvariance length_invariance_check(const MultiGroupSpace& ms,
                                         const OrientedOperationSequence& seq, std::size_t bound) {
  LengthInvariance out{seq, 0, {}, std::nullopt, std::nullopt};
  const auto all = enumerate_maximal_series(ms, seq, bound);
  out.series_count = all.size();
  std::set<std::size_t> lengths;
  for (const auto& s : all) lengths.insert(s.length());
  out.lengths.assign(lengths.begin(), lengths.end());
  if (out.lengths.size() == 1) {
    out.constant = out.lengths.front();
  } else if (!all.empty()) {
    for (const auto& s : all) {
      if (s.length() != all.front().length()) {
        out.counterexample = std::make_pair(all.front(), s);
        break;
      }
    }
  }
  return out;
}

CrossSequenceInvariance cross_sequence_invariance(const MultiGroupSpace& ms, std::size_t bound) {
  CrossSequenceInvariance out;
  std::set<std::size_t> constants;
  bool all_hold = true;
  for (const auto& seq : OrientedOperationSequence::all(ms)) {
    auto li = length_invariance_check(ms, seq, bound);
    if (li.constant)
      constants.insert(*li.constant);
    else
      all_hold = false;
    out.per_sequence.push_back(std::move(li));
  }
  out.sequence_independent = all_hold && constants.size() == 1;
  return out;
}

}  // namespace mgk
