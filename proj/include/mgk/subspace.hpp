#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgk/element_set.hpp"
#include "mgk/errors.hpp"
#include "mgk/group.hpp"
#include "mgk/multispace.hpp"

namespace mgk {

/// A subset of the universe together with the operations it keeps. Every kept
/// operation must act on at least one element of the subset.
class SubsetRef {
 public:
  /// Throws DomainError if `elements` leaves the universe or an op index is
  /// unknown, StructuralError if a kept op misses the subset entirely.
  static SubsetRef create(const MultiGroupSpace& ms, ElementSet elements, OpMask ops);
  /// Keeps exactly the operations whose carrier meets `elements`.
  static SubsetRef touching(const MultiGroupSpace& ms, ElementSet elements);
  static SubsetRef whole(const MultiGroupSpace& ms);

  const ElementSet& elements() const { return elements_; }
  OpMask ops() const { return ops_; }

  friend bool operator==(const SubsetRef&, const SubsetRef&) = default;

 private:
  SubsetRef(ElementSet elements, OpMask ops) : elements_(std::move(elements)), ops_(ops) {}

  ElementSet elements_;
  OpMask ops_;
};

enum class IntersectionVerdict { empty, subgroup, not_subgroup };

struct IntersectionEvidence {
  OpIndex op;
  ElementSet intersection;
  IntersectionVerdict verdict;
};

struct SubspaceEvidence {
  bool verdict = false;
  std::vector<IntersectionEvidence> per_op;  // one entry per kept op
  ElementSet uncovered;                      // elements no kept op acts on
};

/// Subgroup test on every intersection with a kept op's carrier. The subset
/// must also be covered by the kept ops' carriers.
SubspaceEvidence is_subspace_by_intersection(const MultiGroupSpace& ms, const SubsetRef& s);

/// Completeness on the raw subset: for every kept op, products of elements of
/// the subset lying in the op's carrier stay in the subset. Coverage is not
/// required, so this can accept subsets that are not multi-group spaces.
bool is_subspace_by_completeness(const MultiGroupSpace& ms, const SubsetRef& s);

/// The authoritative predicate: at least one kept op, every element covered by
/// a kept op, and every intersection with a kept op's carrier closed under that
/// op (a nonempty closed subset of a finite group is a subgroup).
bool is_subspace(const MultiGroupSpace& ms, const SubsetRef& s);

/// The space spanned by `s` on its own: universe `s.elements()` and, for each
/// kept op, that op's table restricted to the intersection. `s` is a subspace
/// iff the result validates as a multi-group space.
MultiGroupSpace induced_space(const MultiGroupSpace& ms, const SubsetRef& s);

/// All defined products g *_k h with h in the subset and *_k kept. When none is
/// defined the coset is {g}. Throws DomainError if g is outside the universe,
/// PreconditionError if `h` is not a subspace.
ElementSet coset(const MultiGroupSpace& ms, const SubsetRef& h, ElementId g);

/// Whether the coset of `g` had no defined product and fell back to {g}.
bool coset_is_fallback(const MultiGroupSpace& ms, const SubsetRef& h, ElementId g);

struct CosetDecomposition {
  SubsetRef subspace;
  std::vector<ElementId> transversal;
  std::vector<ElementSet> cosets;
  std::vector<ElementId> fallback;  // representatives whose coset is {g} by convention
};

/// Raised when the greedy cosets overlap without being equal.
class DecompositionFailure : public Error {
 public:
  DecompositionFailure(ElementId first, ElementId second, ElementSet first_coset,
                       ElementSet second_coset)
      : Error("cosets of two representatives overlap without being equal"),
        first_(first),
        second_(second),
        first_coset_(std::move(first_coset)),
        second_coset_(std::move(second_coset)) {}

  ElementId first() const { return first_; }
  ElementId second() const { return second_; }
  const ElementSet& first_coset() const { return first_coset_; }
  const ElementSet& second_coset() const { return second_coset_; }

 private:
  ElementId first_, second_;
  ElementSet first_coset_, second_coset_;
};

/// Picks representatives greedily in canonical order (the first element not yet
/// covered) until the cosets cover the universe. Throws PreconditionError if
/// `h` is not a subspace and DecompositionFailure if two cosets overlap.
CosetDecomposition coset_decomposition(const MultiGroupSpace& ms, const SubsetRef& h);

struct LagrangeResult {
  bool holds = true;
  std::optional<ElementSet> witness;  // a subgroup whose order does not divide |G|
};

LagrangeResult lagrange_check(const FiniteGroup& g, std::size_t bound = kDefaultGroupBound);

}  // namespace mgk
