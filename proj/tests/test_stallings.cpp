#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "cosetorder/stallings.hpp"
#include "doctest.h"

using namespace cosetorder;

namespace {

AlphabetPtr ab() { return Alphabet::make({"a", "b"}); }

ReducedWord w(const std::string& text) { return parse_word(text, ab()); }

std::vector<ReducedWord> free_ball(AlphabetPtr alpha, int radius) {
  std::vector<ReducedWord> out{ReducedWord::identity(alpha)};
  std::size_t level_begin = 0;
  for (int r = 0; r < radius; ++r) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (int gen = 0; gen < alpha->size(); ++gen)
        for (int exp : {1, -1}) {
          std::vector<Letter> l{{gen, exp}};
          ReducedWord next = multiply(out[i], ReducedWord::reduce(alpha, l));
          if (next.size() == out[i].size() + 1) out.push_back(next);
        }
    level_begin = level_end;
  }
  return out;
}

/// All products of at most max_factors generators or inverse generators.
std::set<std::string> generator_products(const std::vector<ReducedWord>& gens,
                                         int max_factors) {
  std::set<std::string> seen;
  std::vector<ReducedWord> frontier{ReducedWord::identity(gens[0].alphabet())};
  seen.insert(format_word(frontier[0]));
  for (int step = 0; step < max_factors; ++step) {
    std::vector<ReducedWord> next;
    for (const ReducedWord& u : frontier)
      for (const ReducedWord& h : gens)
        for (const ReducedWord& f : {h, inverse(h)}) {
          ReducedWord p = multiply(u, f);
          if (seen.insert(format_word(p)).second) next.push_back(p);
        }
    frontier = std::move(next);
  }
  return seen;
}

long long exp_sum(const ReducedWord& g, int gen) {
  long long s = 0;
  for (const Letter& l : g.letters())
    if (gen < 0 || l.gen == gen) s += l.exp;
  return s;
}

}  // namespace

TEST_CASE("folded graphs of hand-picked subgroups") {
  StallingsGraph whole = StallingsGraph::build(ab(), {w("a"), w("b")});
  CHECK(whole.vertex_count() == 1);
  CHECK(whole.rank() == 2);
  CHECK(whole.contains(w("b a^-1 b")));

  StallingsGraph za = StallingsGraph::build(ab(), {w("a")});
  CHECK(za.vertex_count() == 1);
  CHECK(za.rank() == 1);
  CHECK(za.basis()[0] == w("a"));
  CHECK(za.contains(w("a^7")));
  CHECK_FALSE(za.contains(w("b")));
  CHECK_FALSE(za.contains(w("a b a^-1")));

  StallingsGraph h = StallingsGraph::build(ab(), {w("a^2"), w("a b")});
  CHECK(h.vertex_count() == 2);
  CHECK(h.rank() == 2);
  CHECK(h.contains(w("a b a b")));
  CHECK(h.contains(w("b^-1 a")));
  CHECK_FALSE(h.contains(w("a")));
  CHECK_FALSE(h.contains(w("b a")));

  // Redundant generating set folds down to the full free group.
  StallingsGraph red = StallingsGraph::build(ab(), {w("a b"), w("a"), w("b")});
  CHECK(red.vertex_count() == 1);
  CHECK(red.rank() == 2);
}

TEST_CASE("membership matches index-2 kernels exactly") {
  // Kernel of the b-exponent mod 2, with its Schreier generating set.
  StallingsGraph kb =
      StallingsGraph::build(ab(), {w("a"), w("b^2"), w("b a b^-1")});
  // Kernel of the total exponent mod 2.
  StallingsGraph kt =
      StallingsGraph::build(ab(), {w("a^2"), w("a b"), w("b a^-1")});
  for (const ReducedWord& g : free_ball(ab(), 5)) {
    CHECK(kb.contains(g) == (exp_sum(g, 1) % 2 == 0));
    CHECK(kt.contains(g) == (exp_sum(g, -1) % 2 == 0));
  }
}

TEST_CASE("membership accepts every short generator product") {
  std::mt19937_64 rng(2026);
  std::vector<ReducedWord> ball = free_ball(ab(), 4);
  for (int trial = 0; trial < 50; ++trial) {
    ReducedWord h1 = ball[1 + rng() % (ball.size() - 1)];
    ReducedWord h2 = ball[1 + rng() % (ball.size() - 1)];
    StallingsGraph graph = StallingsGraph::build(ab(), {h1, h2});
    for (const std::string& text : generator_products({h1, h2}, 6))
      CHECK(graph.contains(parse_word(text, ab())));
  }
}

TEST_CASE("abelian coordinates are additive basis exponents") {
  StallingsGraph h = StallingsGraph::build(ab(), {w("a^2"), w("a b")});
  const auto& basis = h.basis();
  REQUIRE(basis.size() == 2);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto coords = h.abelian_coords(basis[i]);
    REQUIRE(coords.has_value());
    for (std::size_t j = 0; j < basis.size(); ++j)
      CHECK((*coords)[j] == (i == j ? 1 : 0));
  }
  std::mt19937_64 rng(3);
  std::vector<ReducedWord> ball = free_ball(ab(), 4);
  for (int t = 0; t < 500; ++t) {
    const ReducedWord& u = ball[rng() % ball.size()];
    const ReducedWord& v = ball[rng() % ball.size()];
    auto cu = h.abelian_coords(u);
    auto cv = h.abelian_coords(v);
    if (!cu || !cv) continue;
    auto cp = h.abelian_coords(multiply(u, v));
    REQUIRE(cp.has_value());
    for (std::size_t j = 0; j < basis.size(); ++j)
      CHECK((*cp)[j] == (*cu)[j] + (*cv)[j]);
  }
  CHECK_FALSE(h.abelian_coords(w("a")).has_value());
}

TEST_CASE("integer quotients killing chosen words") {
  StallingsGraph whole = StallingsGraph::build(ab(), {w("a"), w("b")});
  auto phi = quotient_onto_Z(whole, {w("a b")});
  REQUIRE(phi.has_value());
  CHECK(phi->row == std::vector<long long>{1, -1});

  auto none = quotient_onto_Z(whole, {});
  REQUIRE(none.has_value());
  CHECK(none->row == std::vector<long long>{1, 0});

  auto alpha = Alphabet::make({"a"});
  StallingsGraph za = StallingsGraph::build(alpha, {parse_word("a", alpha)});
  CHECK_FALSE(quotient_onto_Z(za, {parse_word("a", alpha)}).has_value());

  CHECK_FALSE(quotient_onto_Z(za, {parse_word("a^3", alpha)}).has_value());

  StallingsGraph h = StallingsGraph::build(ab(), {w("a^2"), w("a b")});
  CHECK_THROWS_AS(quotient_onto_Z(h, {w("a")}), word_error);
}

TEST_CASE("single-stage chain certificates") {
  ZChainOrder chain = burns_hale_chain({w("a")}, w("a b"));
  REQUIRE(chain.stages.size() == 1);
  CHECK(chain_sign(chain, w("a")) == 1);
  CHECK(chain_sign(chain, w("a^-1")) == -1);
  CHECK(chain_sign(chain, w("a^2")) == 1);
  CHECK(chain_sign(chain, w("a b a b")) == 0);
  CHECK(chain_sign(chain, w("b^-1 a^-1")) == 0);
  // Conjugates of X elements by the root stay strictly positive.
  CHECK(chain_sign(chain, w("a b a b^-1 a^-1")) == 1);

  ZChainOrder narrow = burns_hale_chain({w("a^2")}, w("a b"));
  CHECK(chain_sign(narrow, w("a^2")) == 1);
  CHECK_THROWS_AS(chain_sign(narrow, w("a")), universe_error);
  CHECK_THROWS_AS(chain_sign(narrow, w("b a b")), universe_error);
}

TEST_CASE("commutators force a second chain stage") {
  ReducedWord x1 = commutator(w("b"), w("a"));
  ZChainOrder chain = burns_hale_chain({x1, w("b")}, w("a"));
  REQUIRE(chain.stages.size() == 2);
  CHECK(chain.stages[1].x == std::vector<ReducedWord>{x1});
  CHECK(chain_sign(chain, w("b")) == 1);
  Sign s = chain_sign(chain, x1);
  CHECK(s != 0);
  CHECK(chain_sign(chain, inverse(x1)) == -s);
  CHECK(chain_sign(chain, w("a^-3")) == 0);
}

TEST_CASE("chain preconditions are enforced") {
  CHECK_THROWS_AS(burns_hale_chain({w("a")}, w("a b a b")), word_error);
  CHECK_THROWS_AS(burns_hale_chain({w("b^2")}, w("b")), word_error);
  CHECK_THROWS_AS(burns_hale_chain({w("a b a b")}, w("a b")), word_error);
  // Duplicates in X are tolerated.
  ZChainOrder chain = burns_hale_chain({w("a"), w("a")}, w("b"));
  CHECK(chain.x.size() == 1);
}

TEST_CASE("chain serialization names every stage") {
  ZChainOrder chain = burns_hale_chain({w("a")}, w("a b"));
  nlohmann::json j = chain.to_json();
  CHECK(j["C"] == "a b");
  CHECK(j["universe"] == nlohmann::json::array({"a"}));
  REQUIRE(j["chain"].size() == 1);
  CHECK(j["chain"][0]["basis"].size() == 2);
  CHECK(j["chain"][0]["phi"].size() == 2);
}

TEST_CASE("local coset order on a finite universe") {
  LocalCosetOrder lco = local_coset_order(w("a b"), {w("a"), w("b")});
  REQUIRE(lco.universe.size() == 3);
  const OrderedCosetSpace& s = lco.space;
  CHECK(s.compare(w("1"), w("a")) == 1);
  CHECK(s.compare(w("a"), multiply(w("a"), power(w("a b"), 3))) == 0);
  CHECK_THROWS_AS(s.compare(w("1"), w("a^2")), universe_error);

  // Exhaustive law check on the universe, including translates by the root.
  std::vector<ReducedWord> pts;
  for (const ReducedWord& u : lco.universe) {
    pts.push_back(u);
    pts.push_back(multiply(u, w("a b")));
  }
  for (const ReducedWord& u : pts)
    for (const ReducedWord& v : pts) {
      Sign uv = s.compare(u, v);
      CHECK(uv == -s.compare(v, u));
      for (const ReducedWord& t : pts) {
        if (s.compare(u, t) == 1 && s.compare(t, v) == 1) CHECK(uv == 1);
      }
    }
}
