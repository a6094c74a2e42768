#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgk/multispace.hpp"
#include "mgk/subspace.hpp"

namespace mgk {

/// Default universe bound for exhaustive maximal-series enumeration.
inline constexpr std::size_t kDefaultSeriesBound = 12;

struct NormalityEvidence {
  bool verdict = true;
  // First conjugate g*h*g^-1 that escapes the subset, if any.
  struct Escape {
    OpIndex op;
    ElementId g;
    ElementId h;
    ElementId conjugate;
  };
  std::optional<Escape> first_violation;
};

/// Conjugation scan from the definition: for every kept op, every g in that
/// op's carrier and every h in the subset's part of it, g*h*g^-1 stays in the
/// subset. Throws PreconditionError if `h` is not a subspace.
NormalityEvidence is_normal_subspace(const MultiGroupSpace& ms, const SubsetRef& h);

/// Every nonempty intersection with a kept op's carrier is a normal subgroup of
/// that op's group. Throws PreconditionError if `h` is not a subspace.
bool normality_criterion(const MultiGroupSpace& ms, const SubsetRef& h);

/// Total order on the operations of one space.
class OrientedOperationSequence {
 public:
  /// Throws DomainError for unknown ops, StructuralError unless `ops` lists
  /// every operation exactly once.
  static OrientedOperationSequence create(const MultiGroupSpace& ms,
                                          const std::vector<std::string>& ops);
  /// Operations in declaration order.
  static OrientedOperationSequence declared(const MultiGroupSpace& ms);
  /// Every ordering of the operations, lexicographic in op index.
  static std::vector<OrientedOperationSequence> all(const MultiGroupSpace& ms);

  const std::vector<OpIndex>& order() const { return order_; }
  OpIndex last() const { return order_.back(); }
  std::size_t rank(OpIndex op) const;

  friend bool operator==(const OrientedOperationSequence&,
                         const OrientedOperationSequence&) = default;

 private:
  explicit OrientedOperationSequence(std::vector<OpIndex> order) : order_(std::move(order)) {}
  std::vector<OpIndex> order_;
};

/// A descending chain of subspaces. Each link keeps the operations that act on
/// it; `step_ops[k]` names the operation that drove the step from chain[k] to
/// chain[k+1].
struct NormalSeries {
  std::vector<SubsetRef> chain;
  std::vector<std::string> step_ops;

  std::size_t length() const { return chain.size() - 1; }
};

/// Whether `inner` (kept ops: those acting on it) is a normal subspace of the
/// space induced on `outer`.
bool is_normal_link(const MultiGroupSpace& ms, const ElementSet& outer, const ElementSet& inner);

struct BuiltSeries {
  NormalSeries series;
  ElementId expected_terminal;     // identity of the last operation in the sequence
  bool terminal_mismatch = false;  // final link differs from {expected_terminal}
};

/// Single-witness series. For each op in sequence order the op's part of the
/// current link is taken down a composition series (first maximal normal
/// subgroup in canonical order whose link stays normal); except for the last op
/// the remaining identity is then dropped when that is still a normal step.
/// Throws BoundExceeded if the universe is larger than `bound` and
/// ConsistencyError if no candidate link is a normal subspace.
BuiltSeries build_series(const MultiGroupSpace& ms, const OrientedOperationSequence& seq,
                         std::size_t bound = kDefaultGroupBound);

/// All maximal series consistent with `seq`: each step goes to a proper normal
/// subspace of the current link with no normal subspace strictly in between; a
/// step is labelled by the earliest op in the sequence whose part shrinks and is
/// only allowed when every earlier op's part is empty or trivial. A series ends
/// when no allowed step remains. Throws BoundExceeded above `bound`.
std::vector<NormalSeries> enumerate_maximal_series(const MultiGroupSpace& ms,
                                                   const OrientedOperationSequence& seq,
                                                   std::size_t bound = kDefaultSeriesBound);

struct LengthInvariance {
  OrientedOperationSequence sequence;
  std::size_t series_count = 0;
  std::vector<std::size_t> lengths;  // distinct lengths, ascending
  std::optional<std::size_t> constant;
  std::optional<std::pair<NormalSeries, NormalSeries>> counterexample;

  bool holds() const { return constant.has_value(); }
};

LengthInvariance length_invariance_check(const MultiGroupSpace& ms,
                                         const OrientedOperationSequence& seq,
                                         std::size_t bound = kDefaultSeriesBound);

struct CrossSequenceInvariance {
  std::vector<LengthInvariance> per_sequence;
  /// All sequences hold and share one constant.
  bool sequence_independent = false;
};

CrossSequenceInvariance cross_sequence_invariance(const MultiGroupSpace& ms,
                                                  std::size_t bound = kDefaultSeriesBound);

}  // namespace mgk
