#include "oracles.hpp"

#include <bit>
#include <functional>
#include <map>

namespace mgk::testing {

RawGroup raw(const FiniteGroup& g) {
  RawGroup r;
  r.n = g.order();
  r.universe = g.universe_size();
  r.ids.assign(g.carrier().begin(), g.carrier().end());
  std::map<ElementId, std::size_t> local;
  for (std::size_t i = 0; i < r.n; ++i) local[r.ids[i]] = i;
  r.identity = local.at(g.identity());
  for (auto v : g.table()) r.mul.push_back(local.at(v));
  return r;
}

std::vector<std::uint64_t> brute_force_subgroups(const RawGroup& g) {
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = std::uint64_t{1} << g.n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    if (!((mask >> g.identity) & 1u)) continue;
    bool closed = true;
    for (std::size_t a = 0; a < g.n && closed; ++a) {
      if (!((mask >> a) & 1u)) continue;
      for (std::size_t b = 0; b < g.n && closed; ++b)
        if (((mask >> b) & 1u) && !((mask >> g(a, b)) & 1u)) closed = false;
    }
    if (closed) out.push_back(mask);
  }
  return out;
}

namespace {

std::size_t inverse(const RawGroup& g, std::size_t a) {
  for (std::size_t b = 0; b < g.n; ++b)
    if (g(a, b) == g.identity) return b;
  return g.n;
}

bool normal_in(const RawGroup& g, std::uint64_t h, std::uint64_t k) {
  for (std::size_t x = 0; x < g.n; ++x) {
    if (!((h >> x) & 1u)) continue;
    std::size_t xi = inverse(g, x);
    for (std::size_t y = 0; y < g.n; ++y)
      if (((k >> y) & 1u) && !((k >> g(g(x, y), xi)) & 1u)) return false;
  }
  return true;
}

template <typename F>
void walk_chains(const RawGroup& g, F&& at_end) {
  const auto subs = brute_force_subgroups(g);
  std::function<void(std::uint64_t, std::size_t)> walk = [&](std::uint64_t h, std::size_t depth) {
    if (std::popcount(h) == 1) {
      at_end(depth);
      return;
    }
    std::vector<std::uint64_t> normal;
    for (auto k : subs)
      if ((k & ~h) == 0 && k != h && normal_in(g, h, k)) normal.push_back(k);
    for (auto k : normal) {
      bool maximal = true;
      for (auto m : normal)
        if (m != k && (k & ~m) == 0) maximal = false;
      if (maximal) walk(k, depth + 1);
    }
  };
  walk((std::uint64_t{1} << g.n) - 1, 0);
}

}  // namespace

std::set<std::size_t> brute_force_composition_lengths(const RawGroup& g) {
  std::set<std::size_t> lengths;
  walk_chains(g, [&](std::size_t d) { lengths.insert(d); });
  return lengths;
}

std::size_t brute_force_composition_count(const RawGroup& g) {
  std::size_t count = 0;
  walk_chains(g, [&](std::size_t) { ++count; });
  return count;
}

ElementSet to_set(const RawGroup& g, std::uint64_t mask) {
  ElementSet s(g.universe);
  for (std::size_t i = 0; i < g.n; ++i)
    if ((mask >> i) & 1u) s.insert(g.ids[i]);
  return s;
}

}  // namespace mgk::testing
