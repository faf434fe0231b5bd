#include "cosetorder/stallings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace cosetorder {

namespace {

struct RawEdge {
  int from, to, gen;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

StallingsGraph StallingsGraph::build(AlphabetPtr alphabet,
                                     std::vector<ReducedWord> generators) {
  StallingsGraph g;
  g.alphabet_ = alphabet;
  std::vector<RawEdge> edges;
  int next_vertex = 1;  // 0 is the base
  for (const ReducedWord& w : generators) {
    require_same_alphabet(w, ReducedWord::identity(alphabet));
    const auto& ls = w.letters();
    int cur = 0;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      int target = i + 1 == ls.size() ? 0 : next_vertex++;
      if (ls[i].exp > 0)
        edges.push_back({cur, target, ls[i].gen});
      else
        edges.push_back({target, cur, ls[i].gen});
      cur = target;
    }
  }

  // Fold: merge far endpoints of same-labeled edges sharing a vertex.
  UnionFind uf(next_vertex);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> out_seen, in_seen;
    for (const RawEdge& e : edges) {
      int u = uf.find(e.from), v = uf.find(e.to);
      auto [ito, fresh_o] = out_seen.try_emplace({u, e.gen}, v);
      if (!fresh_o && uf.find(ito->second) != v) {
        uf.unite(ito->second, v);
        changed = true;
        break;
      }
      auto [iti, fresh_i] = in_seen.try_emplace({v, e.gen}, u);
      if (!fresh_i && uf.find(iti->second) != u) {
        uf.unite(iti->second, u);
        changed = true;
        break;
      }
    }
  }

  // Deduplicate edges and compact vertices; keep the graph core by pruning
  // non-base vertices of degree <= 1.
  std::set<std::tuple<int, int, int>> folded;
  for (const RawEdge& e : edges)
    folded.insert({uf.find(e.from), uf.find(e.to), e.gen});
  std::set<int> alive;
  alive.insert(uf.find(0));
  for (const auto& [u, v, gen] : folded) {
    alive.insert(u);
    alive.insert(v);
  }
  bool pruned = true;
  while (pruned) {
    pruned = false;
    std::map<int, int> degree;
    for (const auto& [u, v, gen] : folded) {
      ++degree[u];
      ++degree[v];
    }
    for (int v : alive) {
      if (v == uf.find(0) || degree[v] > 1) continue;
      alive.erase(v);
      for (auto it = folded.begin(); it != folded.end();)
        if (std::get<0>(*it) == v || std::get<1>(*it) == v)
          it = folded.erase(it);
        else
          ++it;
      pruned = true;
      break;
    }
  }

  std::map<int, int> compact;
  compact[uf.find(0)] = 0;
  for (int v : alive) compact.try_emplace(v, static_cast<int>(compact.size()));
  const int n = static_cast<int>(compact.size());
  const int k = alphabet->size();
  g.base_ = 0;
  g.out_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k), -1));
  g.in_ = g.out_;
  g.edge_basis_ = g.out_;
  for (const auto& [u, v, gen] : folded) {
    g.out_[static_cast<std::size_t>(compact[u])][static_cast<std::size_t>(gen)] = compact[v];
    g.in_[static_cast<std::size_t>(compact[v])][static_cast<std::size_t>(gen)] = compact[u];
  }

  // Spanning tree by BFS in deterministic generator order, then one basis
  // element per non-tree edge.
  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  std::vector<Letter> parent_letter(static_cast<std::size_t>(n), Letter{0, 1});
  std::vector<std::pair<int, int>> tree_edges;  // (vertex, gen) positive edges
  parent[0] = -1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int gen = 0; gen < k; ++gen) {
      int t = g.out_[static_cast<std::size_t>(v)][static_cast<std::size_t>(gen)];
      if (t >= 0 && parent[static_cast<std::size_t>(t)] == -2) {
        parent[static_cast<std::size_t>(t)] = v;
        parent_letter[static_cast<std::size_t>(t)] = {gen, 1};
        tree_edges.emplace_back(v, gen);
        queue.push_back(t);
      }
      int s = g.in_[static_cast<std::size_t>(v)][static_cast<std::size_t>(gen)];
      if (s >= 0 && parent[static_cast<std::size_t>(s)] == -2) {
        parent[static_cast<std::size_t>(s)] = v;
        parent_letter[static_cast<std::size_t>(s)] = {gen, -1};
        tree_edges.emplace_back(s, gen);
        queue.push_back(s);
      }
    }
  }

  auto path_from_base = [&](int v) {
    std::vector<Letter> rev;
    while (parent[static_cast<std::size_t>(v)] >= 0 || v != 0) {
      rev.push_back(parent_letter[static_cast<std::size_t>(v)]);
      v = parent[static_cast<std::size_t>(v)];
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
  };

  std::set<std::pair<int, int>> in_tree(tree_edges.begin(), tree_edges.end());
  for (int v = 0; v < n; ++v)
    for (int gen = 0; gen < k; ++gen) {
      int t = g.out_[static_cast<std::size_t>(v)][static_cast<std::size_t>(gen)];
      if (t < 0 || in_tree.count({v, gen})) continue;
      std::vector<Letter> word = path_from_base(v);
      word.push_back({gen, 1});
      std::vector<Letter> back = path_from_base(t);
      for (auto it = back.rbegin(); it != back.rend(); ++it)
        word.push_back(it->inverse());
      g.edge_basis_[static_cast<std::size_t>(v)][static_cast<std::size_t>(gen)] =
          static_cast<int>(g.basis_.size());
      g.basis_.push_back(ReducedWord::reduce(alphabet, word));
    }
  return g;
}

bool StallingsGraph::contains(const ReducedWord& g) const {
  return abelian_coords(g).has_value();
}

std::optional<std::vector<long long>> StallingsGraph::abelian_coords(
    const ReducedWord& g) const {
  require_same_alphabet(g, ReducedWord::identity(alphabet_));
  std::vector<long long> coords(basis_.size(), 0);
  int cur = base_;
  for (const Letter& l : g.letters()) {
    int next;
    if (l.exp > 0) {
      next = out_[static_cast<std::size_t>(cur)][static_cast<std::size_t>(l.gen)];
      if (next < 0) return std::nullopt;
      int b = edge_basis_[static_cast<std::size_t>(cur)][static_cast<std::size_t>(l.gen)];
      if (b >= 0) coords[static_cast<std::size_t>(b)] += 1;
    } else {
      next = in_[static_cast<std::size_t>(cur)][static_cast<std::size_t>(l.gen)];
      if (next < 0) return std::nullopt;
      int b = edge_basis_[static_cast<std::size_t>(next)][static_cast<std::size_t>(l.gen)];
      if (b >= 0) coords[static_cast<std::size_t>(b)] -= 1;
    }
    cur = next;
  }
  if (cur != base_) return std::nullopt;
  return coords;
}

namespace {

/// Primitive integer vector in the kernel of the relation matrix, found by
/// unimodular column reduction with the deterministic pivot rule.
std::optional<std::vector<long long>> primitive_kernel_vector(
    std::vector<std::vector<long long>> a, std::size_t rank) {
  std::vector<std::vector<long long>> c(rank,
                                        std::vector<long long>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) c[i][i] = 1;  // c[j] = column j
  auto col_axpy = [&](std::size_t dst, std::size_t src, long long q) {
    for (auto& row : a) row[dst] -= q * row[src];
    for (std::size_t i = 0; i < rank; ++i) c[dst][i] -= q * c[src][i];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
    std::swap(c[x], c[y]);
  };

  std::size_t c0 = 0;
  for (std::size_t i = 0; i < a.size() && c0 < rank; ++i) {
    while (true) {
      std::size_t pivot = rank;
      long long best = 0;
      for (std::size_t j = c0; j < rank; ++j) {
        long long v = a[i][j] < 0 ? -a[i][j] : a[i][j];
        if (v != 0 && (pivot == rank || v < best)) {
          pivot = j;
          best = v;
        }
      }
      if (pivot == rank) break;  // row clear in the remaining columns
      bool single = true;
      for (std::size_t j = c0; j < rank; ++j) {
        if (j == pivot || a[i][j] == 0) continue;
        col_axpy(j, pivot, a[i][j] / a[i][pivot]);
        if (a[i][j] != 0) single = false;
      }
      if (single) {
        col_swap(c0, pivot);
        ++c0;
        break;
      }
    }
  }
  if (c0 == rank) return std::nullopt;
  std::vector<long long> f = c[c0];
  for (long long v : f) {
    if (v == 0) continue;
    if (v < 0)
      for (long long& x : f) x = -x;
    break;
  }
  return f;
}

bool in_cyclic(const ReducedWord& g, const ReducedWord& c_root) {
  if (g.empty()) return true;
  if (c_root.empty() || g.size() % c_root.size() != 0) return false;
  long long k = static_cast<long long>(g.size() / c_root.size());
  return g == power(c_root, k) || g == power(c_root, -k);
}

}  // namespace

std::optional<ZLinearMap> quotient_onto_Z(
    const StallingsGraph& subgroup, const std::vector<ReducedWord>& kill) {
  std::vector<std::vector<long long>> relations;
  for (const ReducedWord& w : kill) {
    auto coords = subgroup.abelian_coords(w);
    if (!coords) throw word_error("kill word outside the subgroup");
    relations.push_back(std::move(*coords));
  }
  auto f = primitive_kernel_vector(std::move(relations), subgroup.rank());
  if (!f) return std::nullopt;
  return ZLinearMap{std::move(*f)};
}

nlohmann::json ZChainOrder::to_json() const {
  nlohmann::json j;
  j["C"] = format_word(c_root);
  j["universe"] = nlohmann::json::array();
  for (const ReducedWord& w : x) j["universe"].push_back(format_word(w));
  j["chain"] = nlohmann::json::array();
  for (const ZChainStage& s : stages) {
    nlohmann::json stage;
    stage["basis"] = nlohmann::json::array();
    for (const ReducedWord& w : s.graph.basis())
      stage["basis"].push_back(format_word(w));
    stage["phi"] = s.phi;
    j["chain"].push_back(std::move(stage));
  }
  return j;
}

ZChainOrder burns_hale_chain(const std::vector<ReducedWord>& x,
                             const ReducedWord& c_root) {
  if (!is_maximal_cyclic_generator(c_root))
    throw word_error("subgroup generator is a proper power; "
                     "the cyclic subgroup is not maximal");
  AlphabetPtr alphabet = c_root.alphabet();
  StallingsGraph c_graph = StallingsGraph::build(alphabet, {c_root});
  std::vector<ReducedWord> cur;
  for (const ReducedWord& w : x) {
    if (c_graph.contains(w))
      throw word_error("element of X lies in the cyclic subgroup");
    if (std::find(cur.begin(), cur.end(), w) == cur.end()) cur.push_back(w);
  }

  ZChainOrder chain{alphabet, c_root, cur, {}};
  while (!cur.empty()) {
    std::vector<ReducedWord> gens = cur;
    gens.push_back(c_root);
    StallingsGraph graph = StallingsGraph::build(alphabet, gens);
    auto phi = quotient_onto_Z(graph, {c_root});
    if (!phi)
      throw word_error("no surjection onto Z; maximal-cyclicity broken");
    auto value = [&](const ReducedWord& w) {
      auto coords = graph.abelian_coords(w);
      long long s = 0;
      for (std::size_t i = 0; i < coords->size(); ++i)
        s += (*coords)[i] * phi->row[i];
      return s;
    };
    std::vector<ReducedWord> residual;
    for (const ReducedWord& w : cur)
      if (value(w) == 0) residual.push_back(w);
    if (residual.size() >= cur.size())
      throw word_error("chain stage failed to shrink the residual set");
    chain.stages.push_back({cur, std::move(graph), std::move(phi->row)});
    cur = std::move(residual);
  }
  return chain;
}

Sign chain_sign(const ZChainOrder& chain, const ReducedWord& g) {
  for (const ZChainStage& stage : chain.stages) {
    auto coords = stage.graph.abelian_coords(g);
    if (!coords) break;
    long long s = 0;
    for (std::size_t i = 0; i < coords->size(); ++i)
      s += (*coords)[i] * stage.phi[i];
    if (s != 0) return sign_of(s);
  }
  if (in_cyclic(g, chain.c_root)) return 0;
  throw universe_error("element outside the certificate's universe: " +
                       format_word(g));
}

LocalCosetOrder local_coset_order(const ReducedWord& c_root,
                                  const std::vector<ReducedWord>& x) {
  AlphabetPtr alphabet = c_root.alphabet();
  std::vector<ReducedWord> universe{ReducedWord::identity(alphabet)};
  for (const ReducedWord& w : x)
    if (std::find(universe.begin(), universe.end(), w) == universe.end())
      universe.push_back(w);

  // Close under pairwise quotients so all comparisons are evaluable.
  std::vector<ReducedWord> extended;
  auto add = [&](const ReducedWord& w) {
    if (w.empty() || in_cyclic(w, c_root)) return;
    if (std::find(extended.begin(), extended.end(), w) == extended.end())
      extended.push_back(w);
  };
  for (const ReducedWord& w : x) add(w);
  for (const ReducedWord& u : universe)
    for (const ReducedWord& v : universe) add(multiply(inverse(u), v));

  LocalCosetOrder out{burns_hale_chain(extended, c_root), universe, {}};
  const ZChainOrder& chain = out.chain;
  auto in_universe = [universe, c_root](const ReducedWord& g) {
    for (const ReducedWord& u : universe)
      if (in_cyclic(multiply(inverse(u), g), c_root)) return true;
    return false;
  };
  out.space.identity = ReducedWord::identity(alphabet);
  out.space.mul = [](const ReducedWord& u, const ReducedWord& v) {
    return multiply(u, v);
  };
  out.space.inv = [](const ReducedWord& u) { return inverse(u); };
  out.space.in_subgroup = [c_root](const ReducedWord& g) {
    return in_cyclic(g, c_root);
  };
  out.space.compare = [chain, in_universe](const ReducedWord& u,
                                           const ReducedWord& v) -> Sign {
    if (!in_universe(u) || !in_universe(v))
      throw universe_error("query outside the declared universe");
    return chain_sign(chain, multiply(inverse(u), v));
  };
  return out;
}

}  // namespace cosetorder
