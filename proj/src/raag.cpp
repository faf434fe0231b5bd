#include "cosetorder/raag.hpp"

#include <algorithm>

namespace cosetorder {

RaagSpec RaagSpec::make(
    AlphabetPtr alphabet,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  RaagSpec spec;
  spec.alphabet = alphabet;
  const std::size_t k = static_cast<std::size_t>(alphabet->size());
  spec.active.assign(k, true);
  spec.commutes.assign(k, std::vector<bool>(k, false));
  for (const auto& [x, y] : pairs) {
    int i = alphabet->index(x), j = alphabet->index(y);
    if (i < 0 || j < 0)
      throw config_error("commuting pair names an unknown generator");
    if (i == j) throw config_error("a generator cannot be paired with itself");
    if (spec.commutes[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
      throw config_error("duplicate commuting pair");
    spec.commutes[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
        true;
    spec.commutes[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
        true;
  }
  return spec;
}

RaagSpec RaagSpec::induced(std::vector<bool> sub) const {
  RaagSpec out = *this;
  sub.resize(active.size(), false);
  for (std::size_t i = 0; i < active.size(); ++i)
    out.active[i] = active[i] && sub[i];
  return out;
}

ReducedWord raag_normal_form(const RaagSpec& spec, const ReducedWord& w) {
  auto commutes = [&spec](int g, int h) {
    return spec.commutes[static_cast<std::size_t>(g)]
                        [static_cast<std::size_t>(h)];
  };
  std::vector<Letter> out;
  // Letters still to insert, front first. A cancellation re-queues the
  // letters that sat behind the removed one: its removal can unblock
  // further slides or cancellations among them.
  std::vector<Letter> todo(w.letters().rbegin(), w.letters().rend());
  while (!todo.empty()) {
    Letter l = todo.back();
    todo.pop_back();
    if (!spec.active[static_cast<std::size_t>(l.gen)])
      throw word_error("letter outside this group's generators: " +
                       w.alphabet()->id(l.gen));
    // Cancel against the nearest same-generator letter reachable across
    // commuting neighbors; a same-generator letter blocks further travel.
    bool cancelled = false;
    for (std::size_t j = out.size(); j > 0; --j) {
      const Letter& p = out[j - 1];
      if (p.gen == l.gen) {
        if (p.exp == -l.exp) {
          for (std::size_t k = out.size(); k > j; --k) todo.push_back(out[k - 1]);
          out.erase(out.begin() + static_cast<long>(j) - 1, out.end());
          cancelled = true;
        }
        break;
      }
      if (!commutes(p.gen, l.gen)) break;
    }
    if (cancelled) continue;
    // Slide left past commuting strictly larger generators.
    std::size_t pos = out.size();
    while (pos > 0) {
      const Letter& p = out[pos - 1];
      if (p.gen == l.gen || !commutes(p.gen, l.gen) || p.gen < l.gen) break;
      --pos;
    }
    out.insert(out.begin() + static_cast<long>(pos), l);
  }
  return ReducedWord::reduce(w.alphabet(), out);
}

ReducedWord raag_mul(const RaagSpec& spec, const ReducedWord& u,
                     const ReducedWord& v) {
  return raag_normal_form(spec, multiply(u, v));
}

ReducedWord raag_project(const RaagSpec& spec, const std::vector<bool>& y_mask,
                         const ReducedWord& w) {
  for (std::size_t i = 0; i < y_mask.size(); ++i)
    if (y_mask[i] && !spec.active[i])
      throw config_error("parabolic subset outside the active generators");
  std::vector<Letter> kept;
  for (const Letter& l : w.letters())
    if (static_cast<std::size_t>(l.gen) < y_mask.size() &&
        y_mask[static_cast<std::size_t>(l.gen)])
      kept.push_back(l);
  return raag_normal_form(spec, ReducedWord::reduce(w.alphabet(), kept));
}

bool raag_parabolic_member(const RaagSpec& spec,
                           const std::vector<bool>& y_mask,
                           const ReducedWord& w) {
  return uses_only(raag_normal_form(spec, w), y_mask);
}

HnnSpec raag_hnn_decomposition(const RaagSpec& spec, int x) {
  if (x < 0 || static_cast<std::size_t>(x) >= spec.active.size() ||
      !spec.active[static_cast<std::size_t>(x)])
    throw config_error("splitting generator is not active");

  std::vector<bool> vertex_mask = spec.active;
  vertex_mask[static_cast<std::size_t>(x)] = false;
  std::vector<bool> link_mask(spec.active.size(), false);
  for (std::size_t i = 0; i < spec.active.size(); ++i)
    link_mask[i] =
        vertex_mask[i] && spec.commutes[static_cast<std::size_t>(x)][i];

  RaagSpec sub = spec.induced(vertex_mask);

  HnnSpec h;
  h.alphabet = spec.alphabet;
  h.stable = x;
  h.vertex_mask = vertex_mask;
  h.identity = ReducedWord::identity(spec.alphabet);
  h.mul_a = [sub](const ReducedWord& u, const ReducedWord& v) {
    return raag_mul(sub, u, v);
  };
  h.inv_a = [sub](const ReducedWord& u) {
    return raag_normal_form(sub, inverse(u));
  };
  h.canonical_a = [sub](const ReducedWord& u) {
    return raag_normal_form(sub, u);
  };

  MarkedSubgroup link;
  link.member = [sub, link_mask](const ReducedWord& g) {
    return raag_parabolic_member(sub, link_mask, g);
  };
  link.transversal = [sub, link_mask](const ReducedWord& g) {
    ReducedWord c = raag_project(sub, link_mask, g);
    ReducedWord rep = raag_mul(sub, g, raag_normal_form(sub, inverse(c)));
    return std::make_pair(rep, c);
  };
  link.relative_order = raag_parabolic_order(sub, link_mask);
  h.c = link;
  h.d = link;  // the stable letter centralizes the link, so C = D

  h.edge_map = [](const ReducedWord& c) { return c; };
  h.edge_map_inv = h.edge_map;
  h.vertex_full_order = raag_left_order(sub);
  h.iota_below_tau = true;
  return h;
}

OrderedCosetSpace raag_parabolic_order(const RaagSpec& spec,
                                       std::vector<bool> y_mask) {
  y_mask.resize(spec.active.size(), false);
  for (std::size_t i = 0; i < y_mask.size(); ++i)
    if (y_mask[i] && !spec.active[i])
      throw config_error("parabolic subset outside the active generators");

  int pivot = -1;
  for (int i = static_cast<int>(spec.active.size()) - 1; i >= 0; --i)
    if (spec.active[static_cast<std::size_t>(i)] &&
        !y_mask[static_cast<std::size_t>(i)]) {
      pivot = i;
      break;
    }

  if (pivot < 0) {  // target parabolic is the whole group
    OrderedCosetSpace space;
    space.identity = ReducedWord::identity(spec.alphabet);
    space.mul = [spec](const ReducedWord& u, const ReducedWord& v) {
      return raag_mul(spec, u, v);
    };
    space.inv = [spec](const ReducedWord& u) {
      return raag_normal_form(spec, inverse(u));
    };
    space.in_subgroup = [](const ReducedWord&) { return true; };
    space.compare = [](const ReducedWord&, const ReducedWord&) -> Sign {
      return 0;
    };
    return space;
  }

  HnnSpec h = raag_hnn_decomposition(spec, pivot);
  std::vector<bool> vertex_mask = h.vertex_mask;

  SubgroupChainOrder chain;
  chain.top = hnn_vertex_order(h);
  chain.bottom = raag_parabolic_order(spec.induced(vertex_mask), y_mask);
  chain.k_member = [spec, y_mask](const ReducedWord& g) {
    return raag_parabolic_member(spec, y_mask, g);
  };
  chain.h_member = chain.top.in_subgroup;
  chain.to_subgroup = [h](const ReducedWord& g) {
    return hnn_project_vertex(h, g);
  };
  return compose(chain);
}

OrderedCosetSpace raag_left_order(const RaagSpec& spec) {
  return raag_parabolic_order(spec,
                              std::vector<bool>(spec.active.size(), false));
}

}  // namespace cosetorder
