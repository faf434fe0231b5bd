#include "cosetorder/order.hpp"

namespace cosetorder {

PositiveConeView cone_from_order(const OrderedCosetSpace& space) {
  return {[space](const ReducedWord& g) {
    return space.compare(space.identity, g) > 0;
  }};
}

OrderedCosetSpace order_from_cone(
    PositiveConeView cone, std::function<bool(const ReducedWord&)> in_subgroup,
    ReducedWord identity,
    std::function<ReducedWord(const ReducedWord&, const ReducedWord&)> mul,
    std::function<ReducedWord(const ReducedWord&)> inv) {
  OrderedCosetSpace space;
  space.identity = std::move(identity);
  space.mul = mul;
  space.inv = inv;
  space.in_subgroup = std::move(in_subgroup);
  space.compare = [cone = std::move(cone), mul, inv,
                   sub = space.in_subgroup](const ReducedWord& x,
                                            const ReducedWord& y) -> Sign {
    ReducedWord d = mul(inv(x), y);
    if (cone.member(d)) return 1;
    if (sub(d)) return 0;
    return -1;
  };
  return space;
}

OrderedCosetSpace compose(const SubgroupChainOrder& chain) {
  OrderedCosetSpace space;
  space.identity = chain.top.identity;
  space.mul = chain.top.mul;
  space.inv = chain.top.inv;
  space.in_subgroup = chain.k_member;
  space.compare = [chain](const ReducedWord& x, const ReducedWord& y) -> Sign {
    Sign t = chain.top.compare(x, y);
    if (t != 0) return t;
    ReducedWord h = chain.to_subgroup(chain.top.mul(chain.top.inv(x), y));
    return chain.bottom.compare(chain.bottom.identity, h);
  };
  return space;
}

OrderedCosetSpace extract_top(
    const OrderedCosetSpace& space,
    std::function<bool(const ReducedWord&)> h_member) {
  OrderedCosetSpace top = space;
  top.in_subgroup = h_member;
  top.compare = [space, h_member = std::move(h_member)](
                    const ReducedWord& x, const ReducedWord& y) -> Sign {
    if (h_member(space.mul(space.inv(x), y))) return 0;
    return space.compare(x, y);
  };
  return top;
}

OrderedCosetSpace extract_bottom(
    const OrderedCosetSpace& space,
    std::function<bool(const ReducedWord&)> h_member) {
  OrderedCosetSpace bottom = space;
  bottom.compare = [space, h_member = std::move(h_member)](
                       const ReducedWord& x, const ReducedWord& y) -> Sign {
    if (!h_member(x) || !h_member(y))
      throw word_error("extract_bottom: element outside the subgroup");
    return space.compare(x, y);
  };
  return bottom;
}

OrderedCosetSpace trivial_space(ReducedWord identity) {
  OrderedCosetSpace space;
  space.identity = std::move(identity);
  space.mul = [](const ReducedWord& u, const ReducedWord& v) {
    return multiply(u, v);
  };
  space.inv = [](const ReducedWord& u) { return inverse(u); };
  space.in_subgroup = [](const ReducedWord&) { return true; };
  space.compare = [](const ReducedWord&, const ReducedWord&) -> Sign {
    return 0;
  };
  return space;
}

}  // namespace cosetorder
