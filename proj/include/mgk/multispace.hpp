#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mgk/element_set.hpp"
#include "mgk/group.hpp"
#include "mgk/validation.hpp"

namespace mgk {

using OpIndex = std::size_t;

/// Set of operation indices of one space (at most 64 operations).
class OpMask {
 public:
  static constexpr std::size_t kMaxOps = 64;

  constexpr OpMask() = default;
  constexpr explicit OpMask(std::uint64_t bits) : bits_(bits) {}
  static OpMask all(std::size_t count) {
    return OpMask(count >= kMaxOps ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
  }

  bool contains(OpIndex i) const { return (bits_ >> i) & 1u; }
  void insert(OpIndex i) { bits_ |= std::uint64_t{1} << i; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  std::uint64_t bits() const { return bits_; }
  bool is_subset_of(OpMask o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<OpIndex> indices() const {
    std::vector<OpIndex> out;
    for (auto b = bits_; b; b &= b - 1) out.push_back(static_cast<OpIndex>(std::countr_zero(b)));
    return out;
  }

  friend constexpr bool operator==(OpMask, OpMask) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// The elements on which one operation is defined.
struct OpContext {
  std::string op;
  ElementSet carrier;
};

/// A universe of named elements and an ordered list of groups whose carriers
/// are subsets of it. Operation `i` is the table of `groups()[i]`; a product
/// `x *_i y` is defined iff both operands lie in that group's carrier.
///
/// Construction checks only that the pieces fit together (same universe size,
/// at most 64 operations, unique names). Orphan elements, duplicate operation
/// ids and the axioms are reported by `validate_multigroup`.
class MultiGroupSpace {
 public:
  MultiGroupSpace(std::vector<std::string> names, std::vector<FiniteGroup> groups);
  /// Space over the sub-universe `universe` of the named elements.
  MultiGroupSpace(std::vector<std::string> names, ElementSet universe,
                  std::vector<FiniteGroup> groups);

  std::size_t capacity() const { return names_.size(); }
  const ElementSet& universe() const { return universe_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(ElementId e) const { return names_.at(e.index()); }
  std::optional<ElementId> find(std::string_view name) const;
  /// Throws DomainError for unknown names.
  ElementId element(std::string_view name) const;

  std::span<const FiniteGroup> groups() const { return groups_; }
  std::size_t op_count() const { return groups_.size(); }
  const FiniteGroup& group(OpIndex i) const { return groups_.at(i); }
  const std::string& op_name(OpIndex i) const { return groups_.at(i).op(); }
  /// Throws DomainError for unknown operation ids.
  OpIndex op_index(std::string_view op) const;
  OpContext context(OpIndex i) const { return {op_name(i), group(i).carrier_set()}; }

  ElementSet empty_set() const { return ElementSet(capacity()); }

  friend bool operator==(const MultiGroupSpace&, const MultiGroupSpace&) = default;

 private:
  std::vector<std::string> names_;
  ElementSet universe_;
  std::vector<FiniteGroup> groups_;
};

/// Result of testing the distribution law for one pair of operations. The pair
/// passes when at least one of them distributes over the other (left and right
/// laws), checking only triples where every product involved is defined.
struct DistributionReport {
  std::string op_a;
  std::string op_b;
  bool a_over_b = true;
  bool b_over_a = true;
  std::size_t defined_triples_a_over_b = 0;
  std::size_t defined_triples_b_over_a = 0;
  std::vector<Violation> witnesses;  // at most kWitnessCap per direction

  bool passed() const { return a_over_b || b_over_a; }
  bool vacuous() const { return defined_triples_a_over_b == 0 && defined_triples_b_over_a == 0; }
};

/// Throws DomainError for unknown ops and PreconditionError if op_a == op_b.
DistributionReport check_distribution(const MultiGroupSpace& ms, std::string_view op_a,
                                      std::string_view op_b);
DistributionReport check_distribution(const MultiGroupSpace& ms, OpIndex a, OpIndex b);

struct MultiGroupValidation {
  ValidationReport report;  // structural problems, group axioms, failed distribution pairs
  std::vector<DistributionReport> distribution;

  bool ok() const { return report.ok(); }
};

/// Structural checks, `validate_group` per operation and the distribution law
/// for every unordered pair of operations.
MultiGroupValidation validate_multigroup(const MultiGroupSpace& ms);

enum class SpecialCase { group, body, field, general };

/// Which carrier condition made a two-operation space a body: both carriers
/// equal to the universe, or the second carrier missing exactly the first
/// operation's identity (the multiplicative group of a field).
enum class CarrierReading { not_applicable, exact, identity_excluded };

struct Classification {
  SpecialCase tag = SpecialCase::general;
  CarrierReading reading = CarrierReading::not_applicable;
};

std::string_view to_string(SpecialCase c);
std::string_view to_string(CarrierReading r);

/// Throws PreconditionError if the space does not validate.
Classification classify_special_case(const MultiGroupSpace& ms);

/// Operations whose carrier contains `g`. Throws DomainError outside the universe.
OpMask ops_of_element(const MultiGroupSpace& ms, ElementId g);

/// True iff `s` is closed under the partial operation restricted to s.
/// Throws DomainError if `s` leaves the universe.
bool is_complete(const MultiGroupSpace& ms, const ElementSet& s, OpIndex op);
bool is_complete(const MultiGroupSpace& ms, const ElementSet& s, std::string_view op);

}  // namespace mgk
