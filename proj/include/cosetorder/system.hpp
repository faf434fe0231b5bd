#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cosetorder/order.hpp"
#include "cosetorder/tree.hpp"
#include "json.hpp"

namespace cosetorder {

/// A fully constructed group + order, loaded from a JSON description.
/// canonical is a bijective normal form used to deduplicate ball elements;
/// subgroup_member tests the construction's designated subgroup.
struct GroupSystem {
  std::string type;
  AlphabetPtr alphabet;
  std::vector<bool> active;
  OrderedCosetSpace order;
  std::function<ReducedWord(const ReducedWord&)> canonical;
  std::function<bool(const ReducedWord&)> subgroup_member;
  /// Orientation/turn breakdown of the top-level tree comparison; null for
  /// constructions without a single governing tree.
  std::function<Sign(const ReducedWord&, const ReducedWord&, SignTrace&)>
      traced_compare;
  /// Finite evaluable universe; empty means "the whole group".
  std::vector<ReducedWord> universe;
  int ball_cap = 6;
};

/// Accepted documents: {"type": "free" | "free-factor" | "amalgam" | "hnn"
/// | "raag" | "surface" | "burns-hale", ...}.
GroupSystem load_group_system(const nlohmann::json& doc);
GroupSystem load_group_system_file(const std::string& path);

/// All distinct elements expressible as products of at most radius
/// generators, one canonical representative each, in discovery order.
std::vector<ReducedWord> enumerate_ball(const GroupSystem& sys, int radius);

}  // namespace cosetorder
