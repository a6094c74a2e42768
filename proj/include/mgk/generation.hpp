#pragma once

#include "mgk/element_set.hpp"
#include "mgk/multispace.hpp"

namespace mgk {

inline constexpr std::size_t kDefaultGeneratorBound = 16;

/// Nonempty subset of the universe used as seeds for spanning.
class GeneratingSet {
 public:
  /// Throws DomainError if `seeds` is empty or leaves the universe.
  static GeneratingSet create(const MultiGroupSpace& ms, ElementSet seeds);

  const ElementSet& seeds() const { return seeds_; }

 private:
  explicit GeneratingSet(ElementSet seeds) : seeds_(std::move(seeds)) {}
  ElementSet seeds_;
};

/// One product step: every defined a o b with a, b seeds and o any operation.
/// The seeds themselves are only included when some product yields them.
ElementSet span_once(const MultiGroupSpace& ms, const GeneratingSet& a);

/// Least fixed point of S -> S u span_once(S) starting from the seeds.
ElementSet span_closure(const MultiGroupSpace& ms, const GeneratingSet& a);

struct GenerationWitness {
  ElementSet seeds;
  bool minimal = true;  // false when the search was skipped because of the bound
};

/// Finite spaces are always finitely generated; this returns a smallest
/// generating set, searching subsets by increasing size in canonical order.
/// Above `bound` elements the universe itself is returned with minimal = false.
GenerationWitness is_finitely_generated(const MultiGroupSpace& ms,
                                        std::size_t bound = kDefaultGeneratorBound);

}  // namespace mgk
