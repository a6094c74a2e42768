#include "mgk/element_set.hpp"

namespace mgk {

bool lex_less(const ElementSet& a, const ElementSet& b) {
  auto xs = a.elements();
  auto ys = b.elements();
  return std::lexicographical_compare(xs.begin(), xs.end(), ys.begin(), ys.end());
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  auto na = a.size();
  auto nb = b.size();
  if (na != nb) return na < nb;
  return lex_less(a, b);
}

}  // namespace mgk
