#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "cosetorder/cayley.hpp"
#include "cosetorder/order.hpp"
#include "cosetorder/tree.hpp"

namespace cosetorder {

/// Pluggable vertex group with a marked edge subgroup C. All elements live
/// in one shared ambient alphabet; an engine's words use only its own
/// generators. canonical must be a bijective normal form (equal elements,
/// equal words).
struct VertexGroupEngine {
  ReducedWord identity;
  std::function<ReducedWord(const ReducedWord&, const ReducedWord&)> mul;
  std::function<ReducedWord(const ReducedWord&)> inv;
  std::function<ReducedWord(const ReducedWord&)> canonical;
  std::function<bool(const ReducedWord&)> c_member;
  /// g = rep * c with c in C; rep depends only on gC and is its own rep.
  std::function<std::pair<ReducedWord, ReducedWord>(const ReducedWord&)>
      transversal;
  OrderedCosetSpace relative_order;  // vertex group / C
  OrderedCosetSpace full_order;      // left order on the vertex group
};

/// Free vertex group on the side_mask generators with C the free factor on
/// the edge_mask generators (edge_mask subset of side_mask). Transversals
/// strip the maximal trailing run of edge letters, which is the unique
/// shortest coset representative.
VertexGroupEngine free_vertex_engine(AlphabetPtr alphabet,
                                     std::vector<bool> side_mask,
                                     std::vector<bool> edge_mask);

enum class Side { A, B };

/// Free product with amalgamation over a shared edge subgroup. side_of
/// assigns every ambient generator to a factor; to_b / to_a realize the
/// edge identification on C-elements (A-coordinates <-> B-coordinates).
struct AmalgamSpec {
  AlphabetPtr alphabet;
  std::vector<Side> side_of;
  VertexGroupEngine a, b;
  std::function<ReducedWord(const ReducedWord&)> to_b;
  std::function<ReducedWord(const ReducedWord&)> to_a;

  const VertexGroupEngine& engine(Side s) const { return s == Side::A ? a : b; }
};

/// Alternating canonical form: nonempty transversal representatives of
/// alternating sides, then a trailing C-part stored in A-coordinates.
struct AmalgamNormalForm {
  std::vector<std::pair<Side, ReducedWord>> syllables;
  ReducedWord c_part;
};

AmalgamNormalForm amalgam_normal_form(const AmalgamSpec& spec,
                                      const ReducedWord& g);
/// Canonical word: syllable reps concatenated, then the C-part; a bijective
/// normal form for the whole group.
ReducedWord amalgam_canonical(const AmalgamSpec& spec, const ReducedWord& g);
bool amalgam_in_vertex(const AmalgamSpec& spec, Side side,
                       const ReducedWord& g);
/// A-coordinates of a g known to lie in the A factor.
ReducedWord amalgam_project_a(const AmalgamSpec& spec, const ReducedWord& g);

/// Order on G/A: the closed-form turn-sum over the alternating form
/// (skip the leading and trailing A-syllables, sum each remaining
/// syllable's relative-order sign against C).
Sign amalgam_vertex_compare(const AmalgamSpec& spec, const ReducedWord& u,
                            const ReducedWord& v, SignTrace* trace = nullptr);
/// Same order evaluated on the explicit tree path between the vertex cosets
/// u A and v A; independent oracle for the closed form.
Sign amalgam_vertex_compare_tree(const AmalgamSpec& spec, const ReducedWord& u,
                                 const ReducedWord& v);

OrderedCosetSpace amalgam_vertex_order(const AmalgamSpec& spec);
/// Left order on the whole amalgam with the A factor convex:
/// vertex-coset order on top, A's own left order at the bottom.
OrderedCosetSpace left_order_on_amalgam(const AmalgamSpec& spec);

/// HNN extension of a vertex group by a stable letter, with marked
/// subgroups C and D = x^-1 C x and the edge map between them.
struct MarkedSubgroup {
  std::function<bool(const ReducedWord&)> member;
  std::function<std::pair<ReducedWord, ReducedWord>(const ReducedWord&)>
      transversal;
  OrderedCosetSpace relative_order;  // vertex group / subgroup
};

struct HnnSpec {
  AlphabetPtr alphabet;
  int stable;                     // generator index of the stable letter
  std::vector<bool> vertex_mask;  // vertex-group generators
  ReducedWord identity;
  std::function<ReducedWord(const ReducedWord&, const ReducedWord&)> mul_a;
  std::function<ReducedWord(const ReducedWord&)> inv_a;
  std::function<ReducedWord(const ReducedWord&)> canonical_a;
  MarkedSubgroup c, d;
  std::function<ReducedWord(const ReducedWord&)> edge_map;      // C -> D
  std::function<ReducedWord(const ReducedWord&)> edge_map_inv;  // D -> C
  OrderedCosetSpace vertex_full_order;
  /// Orbit choice at a vertex link: initial-side edge copy (vertex / C)
  /// below the terminal-side copy (vertex / D) when true.
  bool iota_below_tau = true;
};

/// Pinch-free form head x^{e1} a1 ... x^{en} an; all but the last vertex
/// element are transversal representatives (w.r.t. C before x^{+1}, D
/// before x^{-1}), so the form is canonical.
struct BrittonNormalForm {
  ReducedWord head;
  std::vector<std::pair<int, ReducedWord>> tail;  // (orientation, element)
};

BrittonNormalForm britton_normal_form(const HnnSpec& spec,
                                      const ReducedWord& g);
ReducedWord hnn_canonical(const HnnSpec& spec, const ReducedWord& g);
bool hnn_in_vertex(const HnnSpec& spec, const ReducedWord& g);
ReducedWord hnn_project_vertex(const HnnSpec& spec, const ReducedWord& g);

/// Order on G/A evaluated on the tree path read off the pinch-free form.
Sign hnn_vertex_compare(const HnnSpec& spec, const ReducedWord& u,
                        const ReducedWord& v, SignTrace* trace = nullptr);

OrderedCosetSpace hnn_vertex_order(const HnnSpec& spec);
/// Left order on the whole extension with the vertex group convex.
OrderedCosetSpace left_order_on_hnn(const HnnSpec& spec);

/// One-relator surface-style group <x, y, Z | x^-1 y^eps x y w> as an HNN
/// extension of the free group on {y} + Z: C = <y>, D = <(yw)^-eps> with
/// edge map y^k -> (yw)^{-eps k}. The D-side machinery is the C-side
/// machinery transported along the basis change sending y w to y.
/// w must be a word over Z only.
HnnSpec surface_hnn_spec(AlphabetPtr alphabet, int stable, int y_gen, int eps,
                         const ReducedWord& w);

}  // namespace cosetorder
