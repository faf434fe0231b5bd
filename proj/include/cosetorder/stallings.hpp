#pragma once

#include <optional>
#include <vector>

#include "cosetorder/order.hpp"
#include "json.hpp"

namespace cosetorder {

/// Folded core graph of a finitely generated subgroup H of a free group.
/// Reduced base loops spell exactly the reduced words of H.
class StallingsGraph {
 public:
  static StallingsGraph build(AlphabetPtr alphabet,
                              std::vector<ReducedWord> generators);

  bool contains(const ReducedWord& g) const;
  /// Free basis read off a spanning tree; size = |E| - |V| + 1.
  const std::vector<ReducedWord>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  /// Signed basis-edge counts along the base loop spelling g, i.e. the
  /// image of g in the abelianization Z^rank of H. nullopt when g is not
  /// in H.
  std::optional<std::vector<long long>> abelian_coords(
      const ReducedWord& g) const;

  std::size_t vertex_count() const { return out_.size(); }

 private:
  StallingsGraph() = default;
  AlphabetPtr alphabet_;
  int base_ = 0;
  std::vector<std::vector<int>> out_, in_;         // [vertex][gen] -> vertex
  std::vector<std::vector<int>> edge_basis_;       // [vertex][gen] -> idx | -1
  std::vector<ReducedWord> basis_;
};

/// Homomorphism from Z^rank onto Z, one integer per basis coordinate.
struct ZLinearMap {
  std::vector<long long> row;
};

/// Surjection H -> Z vanishing on every kill word, when the quotient of
/// the abelianization by the kill relations has free rank >= 1; nullopt
/// otherwise. Deterministic: smallest-magnitude pivot, leftmost on ties,
/// and the first nonzero value on the ordered basis is positive.
std::optional<ZLinearMap> quotient_onto_Z(const StallingsGraph& subgroup,
                                          const std::vector<ReducedWord>& kill);

struct ZChainStage {
  std::vector<ReducedWord> x;  // residual set feeding this stage
  StallingsGraph graph;        // of <x union {c_root}>
  std::vector<long long> phi;  // surjection onto Z killing c_root
};

/// Lexicographic chain of integer homomorphisms: the Burns-Hale semigroup
/// certificate for a finite X inside F - <c_root>.
struct ZChainOrder {
  AlphabetPtr alphabet;
  ReducedWord c_root;
  std::vector<ReducedWord> x;
  std::vector<ZChainStage> stages;

  nlohmann::json to_json() const;
};

/// Preconditions: c_root generates a maximal cyclic subgroup (not a proper
/// power) and no element of x lies in <c_root>; both are enforced.
ZChainOrder burns_hale_chain(const std::vector<ReducedWord>& x,
                             const ReducedWord& c_root);

/// Sign of the first stage homomorphism that does not vanish on g; 0 for
/// <c_root> members; universe_error when g escapes every stage subgroup.
Sign chain_sign(const ZChainOrder& chain, const ReducedWord& g);

struct LocalCosetOrder {
  ZChainOrder chain;
  std::vector<ReducedWord> universe;  // coset representatives {1} + x
  OrderedCosetSpace space;            // refuses out-of-universe queries
};

/// Order certificate on the finite universe {C} + {xC | x in X}; pairwise
/// quotients are adjoined before chain construction so every comparison is
/// evaluable.
LocalCosetOrder local_coset_order(const ReducedWord& c_root,
                                  const std::vector<ReducedWord>& x);

}  // namespace cosetorder
