#pragma once

#include <functional>
#include <vector>

#include "cosetorder/order.hpp"

namespace cosetorder {

/// Reduced edge-path in a (never materialized) tree. vertices has one more
/// entry than edges; step i traverses edges[i] with orientations[i] in
/// {-1, +1}. Vertex and edge handles are opaque to this module; all
/// structure comes from the link comparator.
template <class V, class E>
struct TreePath {
  std::vector<V> vertices;
  std::vector<E> edges;
  std::vector<int> orientations;
};

/// Per-vertex comparator on the edges incident to that vertex.
template <class V, class E>
using LocalOrder = std::function<Sign(const V&, const E&, const E&)>;

/// Orientation-sum / turn-sum breakdown of one sign evaluation.
struct SignTrace {
  long long orientation_sum = 0;
  long long turn_sum = 0;
};

/// Sign of the associated order across a reduced path: orientation-sum plus
/// turn-sum. The empty path yields 0. A zero turn means the path repeats an
/// edge, i.e. is not reduced; callers own path construction, so that is an
/// error, never silently fixed.
template <class V, class E, class Link>
Sign associated_sign(const TreePath<V, E>& path, Link&& link_compare,
                     SignTrace* trace = nullptr) {
  const std::size_t n = path.edges.size();
  if (path.vertices.size() != n + 1 || path.orientations.size() != n)
    throw word_error("associated_sign: malformed path");
  if (trace) *trace = {};
  if (n == 0) return 0;
  long long orient = 0, turns = 0;
  for (int eps : path.orientations) {
    if (eps != 1 && eps != -1)
      throw word_error("associated_sign: bad orientation");
    orient += eps;
  }
  for (std::size_t i = 1; i < n; ++i) {
    Sign turn = link_compare(path.vertices[i], path.edges[i - 1], path.edges[i]);
    if (turn == 0) throw word_error("associated_sign: path is not reduced");
    turns += turn;
  }
  if (trace) *trace = {orient, turns};
  return sign_of(orient + turns);
}

/// Builds a G-invariant local order from per-orbit data: classify maps
/// (vertex, incident edge) to the edge-orbit index at that vertex plus the
/// stabilizer-coset coordinate of the edge within the orbit. Edges in
/// earlier-listed orbits compare below later ones (ordinal sum); within an
/// orbit the supplied stabilizer-coset order decides.
template <class V, class E>
LocalOrder<V, E> local_order_from_orbits(
    std::function<std::pair<int, ReducedWord>(const V&, const E&)> classify,
    std::vector<OrderedCosetSpace> orbit_orders) {
  return [classify = std::move(classify), orbit_orders = std::move(orbit_orders)](
             const V& v, const E& e1, const E& e2) -> Sign {
    auto [o1, c1] = classify(v, e1);
    auto [o2, c2] = classify(v, e2);
    if (o1 < 0 || o2 < 0 || o1 >= static_cast<int>(orbit_orders.size()) ||
        o2 >= static_cast<int>(orbit_orders.size()))
      throw config_error("local order: edge matches no declared orbit");
    if (o1 != o2) return o1 < o2 ? 1 : -1;
    return orbit_orders[static_cast<std::size_t>(o1)].compare(c1, c2);
  };
}

}  // namespace cosetorder
