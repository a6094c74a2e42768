#include "mgk/generation.hpp"

#include <functional>

#include "mgk/errors.hpp"

namespace mgk {

GeneratingSet GeneratingSet::create(const MultiGroupSpace& ms, ElementSet seeds) {
  if (seeds.empty()) throw DomainError("generating set is empty");
  if (seeds.capacity() != ms.capacity() || !seeds.is_subset_of(ms.universe()))
    throw DomainError("generating set leaves the universe");
  return GeneratingSet(std::move(seeds));
}

namespace {

ElementSet products(const MultiGroupSpace& ms, const ElementSet& s) {
  ElementSet out = ms.empty_set();
  for (const auto& g : ms.groups()) {
    const ElementSet part = s & g.carrier_set();
    part.for_each([&](ElementId a) {
      part.for_each([&](ElementId b) { out.insert(g.multiply(a, b)); });
    });
  }
  return out;
}

}  // namespace

ElementSet span_once(const MultiGroupSpace& ms, const GeneratingSet& a) {
  return products(ms, a.seeds());
}

ElementSet span_closure(const MultiGroupSpace& ms, const GeneratingSet& a) {
  ElementSet current = a.seeds();
  while (true) {
    ElementSet next = current | products(ms, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

GenerationWitness is_finitely_generated(const MultiGroupSpace& ms, std::size_t bound) {
  const auto elems = ms.universe().elements();
  if (elems.size() > bound) return {ms.universe(), false};

  // Subsets of size k in lexicographic order of element positions.
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start,
                                                             std::size_t left) -> bool {
    if (left == 0) {
      ElementSet seeds = ms.empty_set();
      for (auto i : pick) seeds.insert(elems[i]);
      return span_closure(ms, GeneratingSet::create(ms, seeds)) == ms.universe();
    }
    for (std::size_t i = start; i + left <= elems.size(); ++i) {
      pick.push_back(i);
      if (search(i + 1, left - 1)) return true;
      pick.pop_back();
    }
    return false;
  };

  for (std::size_t k = 1; k <= elems.size(); ++k) {
    pick.clear();
    if (search(0, k)) {
      ElementSet seeds = ms.empty_set();
      for (auto i : pick) seeds.insert(elems[i]);
      return {seeds, true};
    }
  }
  return {ms.universe(), true};
}

}  // namespace mgk
