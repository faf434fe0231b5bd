#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "cosetorder/audit.hpp"
#include "cosetorder/cayley.hpp"
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

}  // namespace

TEST_CASE("base order configuration") {
  CayleyOrderConfig cfg = CayleyOrderConfig::standard(ab());
  CHECK(cfg.base_order.size() == 4);
  CHECK(cfg.position({0, 1}) == 0);
  CHECK(cfg.position({0, -1}) == 1);
  CHECK(cfg.position({1, 1}) == 2);
  CHECK_THROWS_AS(cfg.position({5, 1}), word_error);

  CayleyOrderConfig bad = cfg;
  bad.base_order.pop_back();
  CHECK_THROWS_AS(bad.validate(), config_error);
  bad = cfg;
  bad.base_order.push_back({0, 1});
  CHECK_THROWS_AS(bad.validate(), config_error);
}

TEST_CASE("cayley compare on hand examples") {
  CayleyOrderConfig cfg = CayleyOrderConfig::standard(ab());
  SignTrace tr;
  CHECK(cayley_compare(cfg, w("1"), w("a b"), &tr) == 1);
  CHECK(tr.orientation_sum == 2);
  CHECK(cayley_compare(cfg, w("1"), w("b a^-1"), &tr) == -1);
  CHECK(tr.orientation_sum == 0);
  CHECK(tr.turn_sum == -1);
  CHECK(cayley_compare(cfg, w("a"), w("a")) == 0);
  CHECK(cayley_compare(cfg, w("1"), w("a")) == 1);
  CHECK(cayley_compare(cfg, w("1"), w("a^-1")) == -1);
  // Left-invariance by hand: both sides reduce to comparing 1 vs b.
  CHECK(cayley_compare(cfg, w("a"), w("a b")) ==
        cayley_compare(cfg, w("1"), w("b")));
}

TEST_CASE("cayley order is total and left-invariant on a ball") {
  CayleyOrderConfig cfg = CayleyOrderConfig::standard(ab());
  std::vector<ReducedWord> ball = free_ball(ab(), 3);
  for (const ReducedWord& u : ball)
    for (const ReducedWord& v : ball) {
      Sign s = cayley_compare(cfg, u, v);
      CHECK(s == -cayley_compare(cfg, v, u));
      CHECK((s == 0) == (u == v));
    }
  std::mt19937_64 rng(7);
  for (int t = 0; t < 3000; ++t) {
    const ReducedWord& g = ball[rng() % ball.size()];
    const ReducedWord& u = ball[rng() % ball.size()];
    const ReducedWord& v = ball[rng() % ball.size()];
    CHECK(cayley_compare(cfg, multiply(g, u), multiply(g, v)) ==
          cayley_compare(cfg, u, v));
  }
}

TEST_CASE("non-default base order is honored") {
  CayleyOrderConfig cfg = CayleyOrderConfig::standard(ab());
  // Reverse the layout: b^-1 < b < a^-1 < a.
  std::reverse(cfg.base_order.begin(), cfg.base_order.end());
  cfg.validate();
  CHECK(cayley_compare(cfg, w("1"), w("a")) == 1);
  CHECK(cayley_compare(cfg, w("1"), w("b a^-1")) == 1);
  AuditConfig acfg;
  acfg.universe = free_ball(ab(), 3);
  acfg.triple_samples = 10000;
  acfg.invariance_samples = 2000;
  CHECK(audit(cayley_order(cfg), acfg).ok());
}

TEST_CASE("free-factor compare on hand examples") {
  FreeFactorSpec spec = FreeFactorSpec::standard(ab(), {true, false});
  CHECK(free_factor_compare(spec, w("1"), w("a^5")) == 0);
  CHECK(free_factor_compare(spec, w("1"), w("b")) == 1);
  CHECK(free_factor_compare(spec, w("1"), w("b^-1")) == -1);
  CHECK(free_factor_compare(spec, w("1"), w("b^-1 a b")) == 1);
  SignTrace tr;
  // Turn-sum b, a, b^-1 against the edge coset: +1 +1 -1.
  CHECK(free_factor_compare(spec, w("1"), w("b a b^-1"), &tr) == 1);
  CHECK(tr.orientation_sum == 0);  // the one-edge tree has no net drift
  CHECK(free_factor_compare(spec, w("1"), w("b^-1 a b^2")) == 1);
}

TEST_CASE("free-factor order is well defined on cosets") {
  FreeFactorSpec spec = FreeFactorSpec::standard(ab(), {true, false});
  std::vector<ReducedWord> ball = free_ball(ab(), 3);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 3000; ++t) {
    const ReducedWord& u = ball[rng() % ball.size()];
    const ReducedWord& v = ball[rng() % ball.size()];
    int i = static_cast<int>(rng() % 7) - 3;
    int j = static_cast<int>(rng() % 7) - 3;
    CHECK(free_factor_compare(spec, u, v) ==
          free_factor_compare(spec, multiply(u, power(w("a"), i)),
                              multiply(v, power(w("a"), j))));
  }
}

TEST_CASE("free-factor order audits clean with <a> convex") {
  FreeFactorSpec spec = FreeFactorSpec::standard(ab(), {true, false});
  AuditConfig cfg;
  cfg.universe = free_ball(ab(), 4);
  cfg.triple_samples = 30000;
  cfg.invariance_samples = 3000;
  cfg.subgroup_elements = {w("1"), w("a"), w("a^-1"), w("a^2")};
  AuditReport vertex = audit(free_factor_order(spec), cfg);
  CHECK(vertex.ok());

  OrderedCosetSpace full = free_group_order_via_factor(spec);
  cfg.subgroup_elements = {w("1")};
  cfg.convex_subgroup = [](const ReducedWord& g) {
    return uses_only(g, {true, false});
  };
  AuditReport composed = audit(full, cfg);
  CHECK(composed.ok());
}

TEST_CASE("degenerate factor masks still work") {
  FreeFactorSpec all = FreeFactorSpec::standard(ab(), {true, true});
  CHECK(free_factor_compare(all, w("1"), w("a b a")) == 0);
  FreeFactorSpec none = FreeFactorSpec::standard(ab(), {false, false});
  CHECK(free_factor_compare(none, w("1"), w("a")) == 1);
  // With Y trivial the vertex order is a left order on all of F.
  std::vector<ReducedWord> ball = free_ball(ab(), 2);
  for (const ReducedWord& u : ball)
    for (const ReducedWord& v : ball)
      CHECK((free_factor_compare(none, u, v) == 0) == (u == v));
}

TEST_CASE("serial and parallel audits agree on cayley and factor orders") {
  AuditConfig cfg;
  cfg.universe = free_ball(ab(), 3);
  cfg.triple_samples = 20000;
  cfg.invariance_samples = 2000;
  cfg.seed = 99;
  cfg.subgroup_elements = {w("1"), w("a")};
  for (OrderedCosetSpace space :
       {cayley_order(CayleyOrderConfig::standard(ab())),
        free_factor_order(FreeFactorSpec::standard(ab(), {true, false}))}) {
    AuditReport par = audit(space, cfg);
    AuditReport ser = audit_serial(space, cfg);
    CHECK(par.violations == ser.violations);
    CHECK(par.checked == ser.checked);
  }
}
