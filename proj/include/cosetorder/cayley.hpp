#pragma once

#include <vector>

#include "cosetorder/order.hpp"
#include "cosetorder/tree.hpp"

namespace cosetorder {

/// Base order on the signed letters X^{+-1} of (a subset of) an alphabet.
/// Default layout interleaves x1 < x1^-1 < x2 < x2^-1 < ... so outputs are
/// reproducible; any permutation is accepted.
struct CayleyOrderConfig {
  AlphabetPtr alphabet;
  std::vector<bool> active;
  std::vector<Letter> base_order;

  static CayleyOrderConfig standard(AlphabetPtr alphabet,
                                    std::vector<bool> active);
  static CayleyOrderConfig standard(AlphabetPtr alphabet);

  /// Position of a signed letter in base_order; throws when absent.
  int position(const Letter& l) const;
  void validate() const;
};

/// True iff every letter of w lies in the masked generator set.
bool uses_only(const ReducedWord& w, const std::vector<bool>& mask);

/// Left order on the free group over the active generators, evaluated as
/// the associated order of the Cayley-tree local order: orientation-sum of
/// u^-1 v plus turn-sum under the base order. Left-invariant by
/// construction.
Sign cayley_compare(const CayleyOrderConfig& cfg, const ReducedWord& u,
                    const ReducedWord& v, SignTrace* trace = nullptr);

/// The same order packaged as a coset space for G0 = {1}.
OrderedCosetSpace cayley_order(const CayleyOrderConfig& cfg);

/// Free-factor decomposition F = <Y> * <X-Y> with per-factor Cayley
/// configurations. Y = X and Y = {} degenerate cases are allowed.
struct FreeFactorSpec {
  AlphabetPtr alphabet;
  std::vector<bool> factor;  // Y
  CayleyOrderConfig factor_order;
  CayleyOrderConfig cofactor_order;

  static FreeFactorSpec standard(AlphabetPtr alphabet,
                                 std::vector<bool> factor);
};

/// G-order on F/<Y>: the one-edge tree formula with trivial edge group,
/// a turn-sum over the alternating syllables of u^-1 v.
Sign free_factor_compare(const FreeFactorSpec& spec, const ReducedWord& u,
                         const ReducedWord& v, SignTrace* trace = nullptr);

OrderedCosetSpace free_factor_order(const FreeFactorSpec& spec);

/// Left order on F with <Y> convex: free-factor order on top, Cayley order
/// on <Y> at the bottom.
OrderedCosetSpace free_group_order_via_factor(const FreeFactorSpec& spec);

}  // namespace cosetorder
