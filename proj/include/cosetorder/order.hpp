#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

#include "cosetorder/words.hpp"

namespace cosetorder {

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A query left the finite universe a local order certificate covers.
struct universe_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Three-way comparison value in {-1, 0, +1}.
using Sign = int;

inline Sign sign_of(long long s) { return s > 0 ? 1 : (s < 0 ? -1 : 0); }

/// Comparator certificate for a G-invariant order on a coset space G/G0.
/// compare(x, y) is sign(xG0 < yG0); it must depend only on the cosets.
/// Elements are words over one alphabet; mul/inv give the group operation
/// (which may be stronger than free reduction when the group has relations).
struct OrderedCosetSpace {
  ReducedWord identity;
  std::function<ReducedWord(const ReducedWord&, const ReducedWord&)> mul;
  std::function<ReducedWord(const ReducedWord&)> inv;
  std::function<bool(const ReducedWord&)> in_subgroup;
  std::function<Sign(const ReducedWord&, const ReducedWord&)> compare;
};

/// Positive-cone membership view: g in G+ iff G0 < gG0.
struct PositiveConeView {
  std::function<bool(const ReducedWord&)> member;
};

PositiveConeView cone_from_order(const OrderedCosetSpace& space);

OrderedCosetSpace order_from_cone(
    PositiveConeView cone, std::function<bool(const ReducedWord&)> in_subgroup,
    ReducedWord identity,
    std::function<ReducedWord(const ReducedWord&, const ReducedWord&)> mul,
    std::function<ReducedWord(const ReducedWord&)> inv);

/// Chain K <= H <= G: an H-order on H/K plus a G-order on G/H.
/// to_subgroup maps a G-word known to lie in H to a word in H's letters
/// (identity map when H-elements are already literal subwords).
struct SubgroupChainOrder {
  OrderedCosetSpace bottom;  // H/K
  OrderedCosetSpace top;     // G/H
  std::function<bool(const ReducedWord&)> k_member;
  std::function<bool(const ReducedWord&)> h_member;
  std::function<ReducedWord(const ReducedWord&)> to_subgroup;
};

/// The composed G-order on G/K: top order first, bottom order inside a
/// common H-coset. H/K is convex in G/K under the result.
OrderedCosetSpace compose(const SubgroupChainOrder& chain);

/// G/H order read off a G/K order under which H/K is convex.
OrderedCosetSpace extract_top(const OrderedCosetSpace& space,
                              std::function<bool(const ReducedWord&)> h_member);

/// Restriction of a G/K order to H/K. Querying a non-H element throws.
OrderedCosetSpace extract_bottom(
    const OrderedCosetSpace& space,
    std::function<bool(const ReducedWord&)> h_member);

/// Constant-zero comparator on G/G. Lawful but trivial.
OrderedCosetSpace trivial_space(ReducedWord identity);

}  // namespace cosetorder
