#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mgk/element_set.hpp"
#include "mgk/errors.hpp"
#include "mgk/validation.hpp"

namespace mgk {

/// Default size bound for exhaustive subgroup work.
inline constexpr std::size_t kDefaultGroupBound = 24;

/// One operation of a multi-group space: a carrier inside a universe of
/// `universe_size` elements and its Cayley table. Row/column order of the
/// table follows the carrier order. Entries are universe ids, so a table that
/// escapes its carrier is representable and reported by `validate_group`.
///
/// The object is immutable. Construction only checks the shape of the data;
/// the group axioms are checked by `validate_group`.
class FiniteGroup {
 public:
  /// Throws StructuralError if the table is not |carrier|^2 long, the carrier
  /// is empty or repeats an element, or a carrier element is outside the universe.
  FiniteGroup(std::string op, std::vector<ElementId> carrier, ElementId identity,
              std::vector<ElementId> table, std::size_t universe_size);

  const std::string& op() const { return op_; }
  std::span<const ElementId> carrier() const { return carrier_; }
  const ElementSet& carrier_set() const { return carrier_set_; }
  std::size_t order() const { return carrier_.size(); }
  ElementId identity() const { return identity_; }
  std::size_t universe_size() const { return universe_size_; }
  std::span<const ElementId> table() const { return table_; }

  bool contains(ElementId e) const { return carrier_set_.contains(e); }

  /// Table lookup; throws DomainError if an operand is not in the carrier.
  ElementId multiply(ElementId a, ElementId b) const;
  /// Two-sided inverse with respect to the declared identity; throws
  /// DomainError if `a` has none.
  ElementId inverse(ElementId a) const;
  bool has_inverse(ElementId a) const;

  bool is_abelian() const;

  /// Same operation with the carrier cut down to `subset` (in carrier order).
  /// No closure is enforced; the result may fail validation.
  FiniteGroup restricted_to(const ElementSet& subset) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.op_ == b.op_ && a.carrier_ == b.carrier_ && a.identity_ == b.identity_ &&
           a.table_ == b.table_ && a.universe_size_ == b.universe_size_;
  }

 private:
  std::size_t local(ElementId e) const;

  std::string op_;
  std::vector<ElementId> carrier_;
  ElementSet carrier_set_;
  ElementId identity_;
  std::vector<ElementId> table_;
  std::size_t universe_size_;
  std::vector<std::uint32_t> local_;  // universe id -> carrier position
  std::vector<ElementId> inverse_;    // sentinel universe_size_ when missing
};

/// Scans closure, associativity, identity and inverses. Table entries outside
/// the universe are structural errors, not axiom failures.
ValidationReport validate_group(const FiniteGroup& g);

/// True iff `s` is nonempty and closed under the table and inverses.
/// Throws DomainError if `s` has an element outside the carrier.
bool is_subgroup(const FiniteGroup& g, const ElementSet& s);

/// Conjugation scan. Throws PreconditionError if `s` is not a subgroup.
bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s);

/// Smallest subgroup containing `seeds` (closure under products).
ElementSet generated_subgroup(const FiniteGroup& g, const ElementSet& seeds);

/// All subgroups in canonical order (by order, then lexicographic). Built by
/// joining cyclic subgroups until nothing new appears.
/// Throws BoundExceeded if the group order is above `bound`.
std::vector<ElementSet> subgroups(const FiniteGroup& g, std::size_t bound = kDefaultGroupBound);

/// Maximal proper normal subgroups of `g`, canonical order. Empty for the trivial group.
std::vector<ElementSet> maximal_normal_subgroups(const FiniteGroup& g,
                                                 std::size_t bound = kDefaultGroupBound);

/// Group on the cosets of `n`. Each coset is represented by its first element in
/// canonical order; the identity is the representative of `n` itself.
/// Throws PreconditionError if `n` is not normal.
FiniteGroup quotient_group(const FiniteGroup& g, const ElementSet& n);

struct CompositionChain {
  std::vector<ElementSet> links;  // links.front() is the group, links.back() the identity
  std::size_t length() const { return links.size() - 1; }
};

/// Every composition series of `g`, each step going to a maximal proper
/// normal subgroup of the previous link. Throws BoundExceeded above `bound`.
std::vector<CompositionChain> composition_series(const FiniteGroup& g,
                                                 std::size_t bound = kDefaultGroupBound);

}  // namespace mgk
