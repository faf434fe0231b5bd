#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cosetorder/amalgam.hpp"
#include "cosetorder/order.hpp"

namespace cosetorder {

/// Right-angled Artin group on the active generators: the declared pairs
/// commute, everything else is free.
struct RaagSpec {
  AlphabetPtr alphabet;
  std::vector<bool> active;
  std::vector<std::vector<bool>> commutes;  // symmetric, false on diagonal

  static RaagSpec make(
      AlphabetPtr alphabet,
      const std::vector<std::pair<std::string, std::string>>& pairs);
  /// Parabolic subgroup on a generator subset, as a raag in its own right.
  RaagSpec induced(std::vector<bool> sub) const;
};

/// Left-greedy canonical form: each letter is cancelled against the nearest
/// same-generator letter reachable across commuting neighbors, else slid
/// left past commuting larger generators. Equal elements, equal words.
ReducedWord raag_normal_form(const RaagSpec& spec, const ReducedWord& w);

ReducedWord raag_mul(const RaagSpec& spec, const ReducedWord& u,
                     const ReducedWord& v);

/// Retraction onto the parabolic on y_mask: drop the other letters, then
/// normalize. A group homomorphism.
ReducedWord raag_project(const RaagSpec& spec, const std::vector<bool>& y_mask,
                         const ReducedWord& w);

bool raag_parabolic_member(const RaagSpec& spec,
                           const std::vector<bool>& y_mask,
                           const ReducedWord& w);

/// HNN splitting at a generator x: vertex group the parabolic on the rest,
/// edge subgroup the parabolic on the neighbors of x, identity edge map.
HnnSpec raag_hnn_decomposition(const RaagSpec& spec, int x);

/// Invariant order on G/<y_mask>, built by iterated HNN splittings at the
/// largest generator outside the target parabolic.
OrderedCosetSpace raag_parabolic_order(const RaagSpec& spec,
                                       std::vector<bool> y_mask);

OrderedCosetSpace raag_left_order(const RaagSpec& spec);

}  // namespace cosetorder
