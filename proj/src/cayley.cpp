#include "cosetorder/cayley.hpp"

#include <algorithm>

#include "cosetorder/tree.hpp"

namespace cosetorder {

CayleyOrderConfig CayleyOrderConfig::standard(AlphabetPtr alphabet,
                                              std::vector<bool> active) {
  CayleyOrderConfig cfg;
  cfg.alphabet = std::move(alphabet);
  cfg.active = std::move(active);
  cfg.active.resize(static_cast<std::size_t>(cfg.alphabet->size()), false);
  for (int g = 0; g < cfg.alphabet->size(); ++g)
    if (cfg.active[static_cast<std::size_t>(g)]) {
      cfg.base_order.push_back({g, 1});
      cfg.base_order.push_back({g, -1});
    }
  return cfg;
}

CayleyOrderConfig CayleyOrderConfig::standard(AlphabetPtr alphabet) {
  std::vector<bool> all(static_cast<std::size_t>(alphabet->size()), true);
  return standard(std::move(alphabet), std::move(all));
}

int CayleyOrderConfig::position(const Letter& l) const {
  for (int i = 0; i < static_cast<int>(base_order.size()); ++i)
    if (base_order[static_cast<std::size_t>(i)] == l) return i;
  throw word_error("letter outside the configured base order");
}

void CayleyOrderConfig::validate() const {
  std::size_t expected = 0;
  for (int g = 0; g < alphabet->size(); ++g)
    if (active[static_cast<std::size_t>(g)]) expected += 2;
  if (base_order.size() != expected)
    throw config_error("base order must cover every signed letter once");
  for (std::size_t i = 0; i < base_order.size(); ++i)
    for (std::size_t j = i + 1; j < base_order.size(); ++j)
      if (base_order[i] == base_order[j])
        throw config_error("base order repeats a letter");
  for (const Letter& l : base_order)
    if (l.gen < 0 || l.gen >= alphabet->size() ||
        !active[static_cast<std::size_t>(l.gen)])
      throw config_error("base order names an inactive generator");
}

bool uses_only(const ReducedWord& w, const std::vector<bool>& mask) {
  for (const Letter& l : w.letters())
    if (static_cast<std::size_t>(l.gen) >= mask.size() ||
        !mask[static_cast<std::size_t>(l.gen)])
      return false;
  return true;
}

Sign cayley_compare(const CayleyOrderConfig& cfg, const ReducedWord& u,
                    const ReducedWord& v, SignTrace* trace) {
  require_same_alphabet(u, v);
  if (trace) *trace = {};
  ReducedWord w = multiply(inverse(u), v);
  if (!uses_only(w, cfg.active))
    throw word_error("word uses a generator outside this Cayley order");
  const std::size_t n = w.size();
  if (n == 0) return 0;
  TreePath<std::size_t, std::size_t> path;
  path.vertices.resize(n + 1);
  path.edges.resize(n);
  path.orientations.resize(n);
  for (std::size_t i = 0; i <= n; ++i) path.vertices[i] = i;
  for (std::size_t i = 0; i < n; ++i) {
    path.edges[i] = i;
    path.orientations[i] = w.letters()[i].exp;
  }
  // Edge e joins prefixes e and e+1; at vertex v its link symbol is the
  // letter spelled away from v.
  auto link = [&cfg, &w](std::size_t v, std::size_t e1, std::size_t e2) -> Sign {
    auto symbol = [&](std::size_t e) {
      const Letter& l = w.letters()[e];
      return e + 1 == v ? l.inverse() : l;
    };
    return sign_of(cfg.position(symbol(e2)) - cfg.position(symbol(e1)));
  };
  return associated_sign(path, link, trace);
}

OrderedCosetSpace cayley_order(const CayleyOrderConfig& cfg) {
  cfg.validate();
  OrderedCosetSpace space;
  space.identity = ReducedWord::identity(cfg.alphabet);
  space.mul = [](const ReducedWord& u, const ReducedWord& v) {
    return multiply(u, v);
  };
  space.inv = [](const ReducedWord& u) { return inverse(u); };
  space.in_subgroup = [](const ReducedWord& g) { return g.empty(); };
  space.compare = [cfg](const ReducedWord& u, const ReducedWord& v) {
    return cayley_compare(cfg, u, v);
  };
  return space;
}

FreeFactorSpec FreeFactorSpec::standard(AlphabetPtr alphabet,
                                        std::vector<bool> factor) {
  FreeFactorSpec spec;
  spec.alphabet = alphabet;
  factor.resize(static_cast<std::size_t>(alphabet->size()), false);
  spec.factor = factor;
  std::vector<bool> cofactor;
  for (bool b : factor) cofactor.push_back(!b);
  spec.factor_order = CayleyOrderConfig::standard(alphabet, factor);
  spec.cofactor_order = CayleyOrderConfig::standard(alphabet, cofactor);
  return spec;
}

Sign free_factor_compare(const FreeFactorSpec& spec, const ReducedWord& u,
                         const ReducedWord& v, SignTrace* trace) {
  require_same_alphabet(u, v);
  if (trace) *trace = {};
  ReducedWord g = multiply(inverse(u), v);
  // Split into maximal runs of factor letters / cofactor letters.
  std::vector<std::pair<bool, ReducedWord>> runs;
  std::size_t i = 0;
  const auto& ls = g.letters();
  while (i < ls.size()) {
    bool in_y = spec.factor[static_cast<std::size_t>(ls[i].gen)];
    std::size_t j = i;
    while (j < ls.size() &&
           spec.factor[static_cast<std::size_t>(ls[j].gen)] == in_y)
      ++j;
    runs.emplace_back(in_y, ReducedWord::reduce(
                                g.alphabet(),
                                std::span(ls.data() + i, j - i)));
    i = j;
  }
  if (!runs.empty() && runs.back().first) runs.pop_back();  // gA coset
  if (runs.empty()) return 0;
  ReducedWord one = ReducedWord::identity(g.alphabet());
  long long total = 0;
  for (std::size_t idx = 0; idx < runs.size(); ++idx) {
    const auto& [in_y, run] = runs[idx];
    if (!in_y)
      total += cayley_compare(spec.cofactor_order, one, run);
    else if (idx > 0)
      total += cayley_compare(spec.factor_order, one, run);
  }
  // The tree path alternates vertex sides, so the orientation-sum is zero
  // and the whole sign is a turn-sum.
  if (trace) *trace = {0, total};
  return sign_of(total);
}

OrderedCosetSpace free_factor_order(const FreeFactorSpec& spec) {
  OrderedCosetSpace space;
  space.identity = ReducedWord::identity(spec.alphabet);
  space.mul = [](const ReducedWord& u, const ReducedWord& v) {
    return multiply(u, v);
  };
  space.inv = [](const ReducedWord& u) { return inverse(u); };
  space.in_subgroup = [factor = spec.factor](const ReducedWord& g) {
    return uses_only(g, factor);
  };
  space.compare = [spec](const ReducedWord& u, const ReducedWord& v) {
    return free_factor_compare(spec, u, v);
  };
  return space;
}

OrderedCosetSpace free_group_order_via_factor(const FreeFactorSpec& spec) {
  SubgroupChainOrder chain;
  chain.bottom = cayley_order(spec.factor_order);
  chain.top = free_factor_order(spec);
  chain.k_member = [](const ReducedWord& g) { return g.empty(); };
  chain.h_member = chain.top.in_subgroup;
  chain.to_subgroup = [](const ReducedWord& g) { return g; };
  return compose(chain);
}

}  // namespace cosetorder
