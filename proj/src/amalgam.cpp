#include "cosetorder/amalgam.hpp"

#include <algorithm>
#include <span>

namespace cosetorder {

namespace {

std::pair<ReducedWord, ReducedWord> split_trailing_run(
    const ReducedWord& g, const std::vector<bool>& edge_mask) {
  const auto& ls = g.letters();
  std::size_t k = ls.size();
  while (k > 0 && edge_mask[static_cast<std::size_t>(ls[k - 1].gen)]) --k;
  return {ReducedWord::reduce(g.alphabet(), std::span(ls.data(), k)),
          ReducedWord::reduce(g.alphabet(),
                              std::span(ls.data() + k, ls.size() - k))};
}

FreeFactorSpec factor_in_side(AlphabetPtr alphabet,
                              const std::vector<bool>& side_mask,
                              const std::vector<bool>& edge_mask) {
  FreeFactorSpec spec;
  spec.alphabet = alphabet;
  spec.factor = edge_mask;
  std::vector<bool> cofactor(side_mask.size());
  for (std::size_t i = 0; i < side_mask.size(); ++i)
    cofactor[i] = side_mask[i] && !edge_mask[i];
  spec.factor_order = CayleyOrderConfig::standard(alphabet, edge_mask);
  spec.cofactor_order = CayleyOrderConfig::standard(alphabet, cofactor);
  return spec;
}

}  // namespace

VertexGroupEngine free_vertex_engine(AlphabetPtr alphabet,
                                     std::vector<bool> side_mask,
                                     std::vector<bool> edge_mask) {
  side_mask.resize(static_cast<std::size_t>(alphabet->size()), false);
  edge_mask.resize(static_cast<std::size_t>(alphabet->size()), false);
  for (std::size_t i = 0; i < edge_mask.size(); ++i)
    if (edge_mask[i] && !side_mask[i])
      throw config_error("edge subgroup generator outside the vertex group");

  VertexGroupEngine e;
  e.identity = ReducedWord::identity(alphabet);
  e.mul = [](const ReducedWord& u, const ReducedWord& v) {
    return multiply(u, v);
  };
  e.inv = [](const ReducedWord& u) { return inverse(u); };
  e.canonical = [](const ReducedWord& u) { return u; };
  e.c_member = [edge_mask](const ReducedWord& g) {
    return uses_only(g, edge_mask);
  };
  e.transversal = [edge_mask](const ReducedWord& g) {
    return split_trailing_run(g, edge_mask);
  };
  FreeFactorSpec ff = factor_in_side(alphabet, side_mask, edge_mask);
  e.relative_order = free_factor_order(ff);
  e.full_order = free_group_order_via_factor(ff);
  return e;
}

AmalgamNormalForm amalgam_normal_form(const AmalgamSpec& spec,
                                      const ReducedWord& g) {
  AmalgamNormalForm nf;
  nf.c_part = spec.a.identity;
  const auto& ls = g.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    Side s = spec.side_of[static_cast<std::size_t>(ls[i].gen)];
    std::size_t j = i;
    while (j < ls.size() &&
           spec.side_of[static_cast<std::size_t>(ls[j].gen)] == s)
      ++j;
    ReducedWord run =
        ReducedWord::reduce(g.alphabet(), std::span(ls.data() + i, j - i));
    i = j;

    const VertexGroupEngine& eng = spec.engine(s);
    ReducedWord carry_in = s == Side::A ? nf.c_part : spec.to_b(nf.c_part);
    ReducedWord x = eng.mul(carry_in, run);
    if (!nf.syllables.empty() && nf.syllables.back().first == s) {
      x = eng.mul(nf.syllables.back().second, x);
      nf.syllables.pop_back();
    }
    auto [rep, c] = eng.transversal(x);
    if (!eng.canonical(rep).empty()) nf.syllables.emplace_back(s, rep);
    nf.c_part = s == Side::A ? c : spec.to_a(c);
  }
  return nf;
}

ReducedWord amalgam_canonical(const AmalgamSpec& spec, const ReducedWord& g) {
  AmalgamNormalForm nf = amalgam_normal_form(spec, g);
  ReducedWord out = ReducedWord::identity(spec.alphabet);
  for (const auto& [s, rep] : nf.syllables) out = multiply(out, rep);
  return multiply(out, nf.c_part);
}

bool amalgam_in_vertex(const AmalgamSpec& spec, Side side,
                       const ReducedWord& g) {
  AmalgamNormalForm nf = amalgam_normal_form(spec, g);
  if (nf.syllables.empty()) return true;
  return nf.syllables.size() == 1 && nf.syllables.front().first == side;
}

ReducedWord amalgam_project_a(const AmalgamSpec& spec, const ReducedWord& g) {
  AmalgamNormalForm nf = amalgam_normal_form(spec, g);
  if (nf.syllables.empty()) return nf.c_part;
  if (nf.syllables.size() == 1 && nf.syllables.front().first == Side::A)
    return spec.a.mul(nf.syllables.front().second, nf.c_part);
  throw word_error("element is not in the A factor");
}

namespace {

/// Coset form of gA: the alternating syllables with the trailing A-syllable
/// absorbed into the coset.
std::vector<std::pair<Side, ReducedWord>> vertex_coset_form(
    const AmalgamSpec& spec, const ReducedWord& g) {
  auto syls = amalgam_normal_form(spec, g).syllables;
  if (!syls.empty() && syls.back().first == Side::A) syls.pop_back();
  return syls;
}

}  // namespace

Sign amalgam_vertex_compare(const AmalgamSpec& spec, const ReducedWord& u,
                            const ReducedWord& v, SignTrace* trace) {
  if (trace) *trace = {};
  auto syls = vertex_coset_form(spec, multiply(inverse(u), v));
  long long total = 0;
  for (std::size_t i = 0; i < syls.size(); ++i) {
    const auto& [s, rep] = syls[i];
    if (i == 0 && s == Side::A) continue;  // leading A-part moves the base
    const VertexGroupEngine& eng = spec.engine(s);
    total += eng.relative_order.compare(eng.identity, rep);
  }
  // Sides alternate along the path, so the orientation-sum vanishes.
  if (trace) *trace = {0, total};
  return sign_of(total);
}

Sign amalgam_vertex_compare_tree(const AmalgamSpec& spec, const ReducedWord& u,
                                 const ReducedWord& v) {
  auto syls = vertex_coset_form(spec, multiply(inverse(u), v));
  if (syls.empty()) return 0;
  if (syls.front().first == Side::B)
    syls.insert(syls.begin(), {Side::A, spec.a.identity});
  // Now syllables s1(A), s2(B), ..., s2n(B); vertex i carries side A when i
  // is even, B when odd; edge i joins vertices i-1 and i.
  const std::size_t n = syls.size();
  TreePath<std::size_t, std::size_t> path;
  for (std::size_t i = 0; i <= n; ++i) path.vertices.push_back(i);
  for (std::size_t i = 1; i <= n; ++i) {
    path.edges.push_back(i);
    path.orientations.push_back(i % 2 == 1 ? 1 : -1);
  }
  auto classify = [&spec, &syls](const std::size_t& vertex,
                                 const std::size_t& edge) {
    int orbit = vertex % 2 == 0 ? 0 : 1;
    if (edge == vertex)  // incoming: the edge subgroup coset itself
      return std::make_pair(orbit, spec.a.identity);
    return std::make_pair(orbit, syls[vertex].second);  // outgoing
  };
  auto link = local_order_from_orbits<std::size_t, std::size_t>(
      classify, {spec.a.relative_order, spec.b.relative_order});
  return associated_sign(path, link);
}

OrderedCosetSpace amalgam_vertex_order(const AmalgamSpec& spec) {
  OrderedCosetSpace space;
  space.identity = ReducedWord::identity(spec.alphabet);
  space.mul = [spec](const ReducedWord& u, const ReducedWord& v) {
    return amalgam_canonical(spec, multiply(u, v));
  };
  space.inv = [spec](const ReducedWord& u) {
    return amalgam_canonical(spec, inverse(u));
  };
  space.in_subgroup = [spec](const ReducedWord& g) {
    return amalgam_in_vertex(spec, Side::A, g);
  };
  space.compare = [spec](const ReducedWord& u, const ReducedWord& v) {
    return amalgam_vertex_compare(spec, u, v);
  };
  return space;
}

OrderedCosetSpace left_order_on_amalgam(const AmalgamSpec& spec) {
  SubgroupChainOrder chain;
  chain.bottom = spec.a.full_order;
  chain.top = amalgam_vertex_order(spec);
  chain.k_member = [spec](const ReducedWord& g) {
    return amalgam_canonical(spec, g).empty();
  };
  chain.h_member = chain.top.in_subgroup;
  chain.to_subgroup = [spec](const ReducedWord& g) {
    return amalgam_project_a(spec, g);
  };
  return compose(chain);
}

BrittonNormalForm britton_normal_form(const HnnSpec& spec,
                                      const ReducedWord& g) {
  BrittonNormalForm nf;
  nf.head = spec.identity;

  auto append_vertex = [&](const ReducedWord& a) {
    ReducedWord& slot = nf.tail.empty() ? nf.head : nf.tail.back().second;
    slot = spec.mul_a(slot, a);
  };
  auto append_stable = [&](int eps) {
    if (!nf.tail.empty() && nf.tail.back().first == -eps) {
      const ReducedWord& last = nf.tail.back().second;
      if (eps > 0 ? spec.c.member(last) : spec.d.member(last)) {
        ReducedWord mapped =
            eps > 0 ? spec.edge_map(last) : spec.edge_map_inv(last);
        nf.tail.pop_back();
        append_vertex(mapped);  // x^-1 c x or x d x^-1 collapses
        return;
      }
    }
    nf.tail.emplace_back(eps, spec.identity);
  };

  for (const Letter& l : g.letters()) {
    if (l.gen == spec.stable) {
      append_stable(l.exp);
    } else {
      std::vector<Letter> one{l};
      append_vertex(ReducedWord::reduce(g.alphabet(), one));
    }
  }

  // Push subgroup parts rightward through the stable letters so every
  // element before an x^eps is a transversal representative.
  for (std::size_t i = 0; i < nf.tail.size(); ++i) {
    ReducedWord& prev = i == 0 ? nf.head : nf.tail[i - 1].second;
    int eps = nf.tail[i].first;
    auto [rep, part] =
        eps > 0 ? spec.c.transversal(prev) : spec.d.transversal(prev);
    prev = rep;
    ReducedWord pushed =
        eps > 0 ? spec.edge_map(part) : spec.edge_map_inv(part);
    nf.tail[i].second = spec.mul_a(pushed, nf.tail[i].second);
  }
  ReducedWord& last = nf.tail.empty() ? nf.head : nf.tail.back().second;
  last = spec.canonical_a(last);
  return nf;
}

ReducedWord hnn_canonical(const HnnSpec& spec, const ReducedWord& g) {
  BrittonNormalForm nf = britton_normal_form(spec, g);
  ReducedWord out = nf.head;
  std::vector<Letter> x{{spec.stable, 1}};
  ReducedWord stable_pos = ReducedWord::reduce(spec.alphabet, x);
  for (auto& [eps, a] : nf.tail) {
    out = multiply(out, eps > 0 ? stable_pos : inverse(stable_pos));
    out = multiply(out, a);
  }
  return out;
}

bool hnn_in_vertex(const HnnSpec& spec, const ReducedWord& g) {
  return britton_normal_form(spec, g).tail.empty();
}

ReducedWord hnn_project_vertex(const HnnSpec& spec, const ReducedWord& g) {
  BrittonNormalForm nf = britton_normal_form(spec, g);
  if (!nf.tail.empty()) throw word_error("element is not in the vertex group");
  return nf.head;
}

Sign hnn_vertex_compare(const HnnSpec& spec, const ReducedWord& u,
                        const ReducedWord& v, SignTrace* trace) {
  if (trace) *trace = {};
  BrittonNormalForm nf = britton_normal_form(spec, multiply(inverse(u), v));
  const std::size_t n = nf.tail.size();
  if (n == 0) return 0;

  TreePath<std::size_t, std::size_t> path;
  for (std::size_t i = 0; i <= n; ++i) path.vertices.push_back(i);
  for (std::size_t i = 1; i <= n; ++i) {
    path.edges.push_back(i);
    path.orientations.push_back(nf.tail[i - 1].first);
  }

  // Link of a vertex coset: initial-side edges form a vertex/C copy,
  // terminal-side edges a vertex/D copy.
  const int iota_orbit = spec.iota_below_tau ? 0 : 1;
  const int tau_orbit = 1 - iota_orbit;
  auto classify = [&](const std::size_t& vertex, const std::size_t& edge) {
    int eps = nf.tail[edge - 1].first;
    if (edge == vertex)  // incoming at its far endpoint
      return std::make_pair(eps > 0 ? tau_orbit : iota_orbit, spec.identity);
    // outgoing: shifted by the vertex element sitting at this vertex
    return std::make_pair(eps > 0 ? iota_orbit : tau_orbit,
                          nf.tail[vertex - 1].second);
  };
  std::vector<OrderedCosetSpace> orbit_orders(2);
  orbit_orders[static_cast<std::size_t>(iota_orbit)] = spec.c.relative_order;
  orbit_orders[static_cast<std::size_t>(tau_orbit)] = spec.d.relative_order;
  auto link = local_order_from_orbits<std::size_t, std::size_t>(
      classify, std::move(orbit_orders));
  return associated_sign(path, link, trace);
}

OrderedCosetSpace hnn_vertex_order(const HnnSpec& spec) {
  OrderedCosetSpace space;
  space.identity = spec.identity;
  space.mul = [spec](const ReducedWord& u, const ReducedWord& v) {
    return hnn_canonical(spec, multiply(u, v));
  };
  space.inv = [spec](const ReducedWord& u) {
    return hnn_canonical(spec, inverse(u));
  };
  space.in_subgroup = [spec](const ReducedWord& g) {
    return hnn_in_vertex(spec, g);
  };
  space.compare = [spec](const ReducedWord& u, const ReducedWord& v) {
    return hnn_vertex_compare(spec, u, v);
  };
  return space;
}

OrderedCosetSpace left_order_on_hnn(const HnnSpec& spec) {
  SubgroupChainOrder chain;
  chain.bottom = spec.vertex_full_order;
  chain.top = hnn_vertex_order(spec);
  chain.k_member = [spec](const ReducedWord& g) {
    return hnn_canonical(spec, g).empty();
  };
  chain.h_member = chain.top.in_subgroup;
  chain.to_subgroup = [spec](const ReducedWord& g) {
    return hnn_project_vertex(spec, g);
  };
  return compose(chain);
}

HnnSpec surface_hnn_spec(AlphabetPtr alphabet, int stable, int y_gen, int eps,
                         const ReducedWord& w) {
  if (eps != 1 && eps != -1) throw config_error("epsilon must be +1 or -1");
  if (stable == y_gen) throw config_error("stable letter equals y");
  for (const Letter& l : w.letters())
    if (l.gen == stable || l.gen == y_gen)
      throw config_error("the relator tail w must be a word over Z only");

  const std::size_t k = static_cast<std::size_t>(alphabet->size());
  std::vector<bool> vertex_mask(k, true);
  vertex_mask[static_cast<std::size_t>(stable)] = false;
  std::vector<bool> y_mask(k, false);
  y_mask[static_cast<std::size_t>(y_gen)] = true;

  auto one_letter = [&alphabet](int gen, int exp) {
    std::vector<Letter> l{{gen, exp}};
    return ReducedWord::reduce(alphabet, l);
  };
  ReducedWord y = one_letter(y_gen, 1);
  ReducedWord yw = multiply(y, w);

  // Basis change of the vertex group carrying y w to y; transports the
  // <y>-side machinery to the <yw> side.
  std::vector<ReducedWord> psi_images, psi_inv_images;
  for (int i = 0; i < alphabet->size(); ++i) {
    psi_images.push_back(i == y_gen ? multiply(y, inverse(w))
                                    : one_letter(i, 1));
    psi_inv_images.push_back(i == y_gen ? yw : one_letter(i, 1));
  }
  auto psi = [psi_images](const ReducedWord& g) {
    return substitute(g, psi_images);
  };
  auto psi_inv = [psi_inv_images](const ReducedWord& g) {
    return substitute(g, psi_inv_images);
  };

  auto y_exponent = [y_gen](const ReducedWord& c) {
    long long k = 0;
    for (const Letter& l : c.letters()) {
      if (l.gen != y_gen) throw word_error("edge map fed a non-C element");
      k += l.exp;
    }
    return k;
  };

  FreeFactorSpec ff = factor_in_side(alphabet, vertex_mask, y_mask);

  HnnSpec spec;
  spec.alphabet = alphabet;
  spec.stable = stable;
  spec.vertex_mask = vertex_mask;
  spec.identity = ReducedWord::identity(alphabet);
  spec.mul_a = [](const ReducedWord& u, const ReducedWord& v) {
    return multiply(u, v);
  };
  spec.inv_a = [](const ReducedWord& u) { return inverse(u); };
  spec.canonical_a = [](const ReducedWord& u) { return u; };

  spec.c.member = [y_mask](const ReducedWord& g) {
    return uses_only(g, y_mask);
  };
  spec.c.transversal = [y_mask](const ReducedWord& g) {
    return split_trailing_run(g, y_mask);
  };
  spec.c.relative_order = free_factor_order(ff);

  spec.d.member = [psi, y_mask](const ReducedWord& g) {
    return uses_only(psi(g), y_mask);
  };
  spec.d.transversal = [psi, psi_inv, y_mask](const ReducedWord& g) {
    auto [rep, part] = split_trailing_run(psi(g), y_mask);
    return std::make_pair(psi_inv(rep), psi_inv(part));
  };
  spec.d.relative_order = free_factor_order(ff);
  spec.d.relative_order.in_subgroup = spec.d.member;
  spec.d.relative_order.compare = [psi, ff](const ReducedWord& u,
                                            const ReducedWord& v) {
    return free_factor_compare(ff, psi(u), psi(v));
  };

  // Relator x^-1 y^eps x y w = 1, i.e. x^-1 y x = (y w)^-eps.
  spec.edge_map = [y_exponent, yw, eps](const ReducedWord& c) {
    return power(yw, -eps * y_exponent(c));
  };
  spec.edge_map_inv = [psi, y_exponent, y, eps](const ReducedWord& d) {
    return power(y, -eps * y_exponent(psi(d)));
  };

  spec.vertex_full_order = free_group_order_via_factor(ff);
  spec.iota_below_tau = true;
  return spec;
}

}  // namespace cosetorder
