#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <deque>
#include <random>
#include <set>

#include "cosetorder/audit.hpp"
#include "cosetorder/raag.hpp"
#include "doctest.h"

using namespace cosetorder;

namespace {

AlphabetPtr abc() { return Alphabet::make({"a", "b", "c"}); }

RaagSpec z2_spec() {
  return RaagSpec::make(Alphabet::make({"a", "b"}), {{"a", "b"}});
}

RaagSpec f2_spec() { return RaagSpec::make(Alphabet::make({"a", "b"}), {}); }

/// Path graph a - b - c: a,b and b,c commute, a,c are free.
RaagSpec path3_spec() {
  return RaagSpec::make(abc(), {{"a", "b"}, {"b", "c"}});
}

/// Independent word-problem oracle: breadth-first closure of the letter
/// sequence under adjacent commuting swaps and inverse-pair cancellation.
/// Both moves preserve the element and never grow the word, so the search
/// is finite; the word is trivial iff the empty sequence is reachable.
bool oracle_identity(const RaagSpec& spec, const ReducedWord& w) {
  using Seq = std::vector<std::pair<int, int>>;
  Seq start;
  for (const Letter& l : w.letters()) start.emplace_back(l.gen, l.exp);
  if (start.empty()) return true;
  std::set<Seq> seen{start};
  std::deque<Seq> queue{start};
  while (!queue.empty()) {
    Seq cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      auto [g1, e1] = cur[i];
      auto [g2, e2] = cur[i + 1];
      if (g1 == g2 && e1 == -e2) {
        Seq next;
        next.insert(next.end(), cur.begin(), cur.begin() + i);
        next.insert(next.end(), cur.begin() + i + 2, cur.end());
        if (next.empty()) return true;
        if (seen.insert(next).second) queue.push_back(next);
      }
      if (g1 != g2 && spec.commutes[g1][g2]) {
        Seq next = cur;
        std::swap(next[i], next[i + 1]);
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return false;
}

std::vector<ReducedWord> raag_ball(const RaagSpec& spec, int radius) {
  std::vector<ReducedWord> out{
      raag_normal_form(spec, ReducedWord::identity(spec.alphabet))};
  std::set<std::string> seen{format_word(out.front())};
  std::size_t level_begin = 0;
  for (int r = 0; r < radius; ++r) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (int gen = 0; gen < spec.alphabet->size(); ++gen) {
        if (!spec.active[static_cast<std::size_t>(gen)]) continue;
        for (int exp : {1, -1}) {
          std::vector<Letter> l{{gen, exp}};
          ReducedWord next = raag_mul(
              spec, out[i], ReducedWord::reduce(spec.alphabet, l));
          if (seen.insert(format_word(next)).second) out.push_back(next);
        }
      }
    level_begin = level_end;
  }
  return out;
}

ReducedWord random_word(AlphabetPtr alpha, std::mt19937_64& rng,
                        std::size_t max_len) {
  std::vector<Letter> ls;
  std::size_t n = rng() % (max_len + 1);
  for (std::size_t i = 0; i < n; ++i)
    ls.push_back({static_cast<int>(rng() % alpha->size()),
                  rng() % 2 ? 1 : -1});
  return ReducedWord::reduce(alpha, ls);
}

}  // namespace

TEST_CASE("spec construction validates the commuting pairs") {
  CHECK_THROWS_AS(RaagSpec::make(abc(), {{"a", "q"}}), config_error);
  CHECK_THROWS_AS(RaagSpec::make(abc(), {{"a", "a"}}), config_error);
  CHECK_THROWS_AS(RaagSpec::make(abc(), {{"a", "b"}, {"b", "a"}}),
                  config_error);
  RaagSpec spec = path3_spec();
  CHECK(spec.commutes[0][1]);
  CHECK(spec.commutes[1][0]);
  CHECK_FALSE(spec.commutes[0][2]);
}

TEST_CASE("left-greedy normal form on hand examples") {
  RaagSpec z2 = z2_spec();
  auto wz = [&](const std::string& t) { return parse_word(t, z2.alphabet); };
  CHECK(raag_normal_form(z2, wz("b a")) == wz("a b"));
  CHECK(raag_normal_form(z2, wz("a b a^-1")) == wz("b"));
  CHECK(raag_normal_form(z2, wz("b a b^-1 a^-1")).empty());

  RaagSpec f2 = f2_spec();
  CHECK(raag_normal_form(f2, parse_word("b a", f2.alphabet)) ==
        parse_word("b a", f2.alphabet));

  RaagSpec p3 = path3_spec();
  auto wp = [&](const std::string& t) { return parse_word(t, p3.alphabet); };
  CHECK(raag_normal_form(p3, wp("b a")) == wp("a b"));
  CHECK(raag_normal_form(p3, wp("c b")) == wp("b c"));
  CHECK(raag_normal_form(p3, wp("c a")) == wp("c a"));
  // b slides past c; a cannot cross the non-commuting c.
  CHECK(raag_normal_form(p3, wp("c b a")) == wp("b c a"));
  // Inactive letters are rejected.
  RaagSpec sub = p3.induced({true, false, true});
  CHECK_THROWS_AS(raag_normal_form(sub, wp("b")), word_error);
}

TEST_CASE("normal form decides equality exactly (brute-force oracle)") {
  std::mt19937_64 rng(61);
  for (const RaagSpec& spec : {z2_spec(), f2_spec(), path3_spec()}) {
    for (int t = 0; t < 250; ++t) {
      ReducedWord u = random_word(spec.alphabet, rng, 6);
      ReducedWord v = random_word(spec.alphabet, rng, 6);
      ReducedWord nu = raag_normal_form(spec, u);
      CHECK(oracle_identity(spec, multiply(u, inverse(nu))));
      CHECK(raag_normal_form(spec, nu) == nu);
      CHECK((raag_normal_form(spec, u) == raag_normal_form(spec, v)) ==
            oracle_identity(spec, multiply(u, inverse(v))));
    }
  }
}

TEST_CASE("ball sizes match the group structure") {
  CHECK(raag_ball(z2_spec(), 3).size() == 25);   // L1 ball in Z^2
  CHECK(raag_ball(f2_spec(), 3).size() == 53);   // free group of rank 2
}

TEST_CASE("parabolic projection is a retracting homomorphism") {
  RaagSpec p3 = path3_spec();
  auto wp = [&](const std::string& t) { return parse_word(t, p3.alphabet); };
  std::vector<bool> y{true, false, true};  // <a, c>
  std::mt19937_64 rng(67);
  for (int t = 0; t < 1000; ++t) {
    ReducedWord u = random_word(p3.alphabet, rng, 6);
    ReducedWord v = random_word(p3.alphabet, rng, 6);
    ReducedWord pu = raag_project(p3, y, u);
    CHECK(raag_project(p3, y, pu) == pu);
    CHECK(raag_project(p3, y, raag_mul(p3, u, v)) ==
          raag_mul(p3, pu, raag_project(p3, y, v)));
    CHECK(uses_only(pu, y));
  }
  RaagSpec free3 = RaagSpec::make(abc(), {{"a", "c"}});
  CHECK_FALSE(raag_parabolic_member(free3, y, wp("b a b^-1")));
  CHECK(raag_parabolic_member(free3, y, wp("c a c^-1")));
  // a and b commute along the path, so this collapses to a.
  CHECK(raag_parabolic_member(p3, y, wp("b a b^-1 a^-1 a")));
}

TEST_CASE("hnn splitting at a generator has the link as edge subgroup") {
  RaagSpec z2 = z2_spec();
  HnnSpec hz = raag_hnn_decomposition(z2, 1);
  CHECK(hz.stable == 1);
  CHECK(hz.vertex_mask == std::vector<bool>{true, false});
  CHECK(hz.c.member(parse_word("a^2", z2.alphabet)));

  RaagSpec p3 = path3_spec();
  HnnSpec hp = raag_hnn_decomposition(p3, 2);
  CHECK(hp.stable == 2);
  CHECK(hp.c.member(parse_word("b^3", p3.alphabet)));
  CHECK_FALSE(hp.c.member(parse_word("a", p3.alphabet)));
}

TEST_CASE("left orders on raags audit clean") {
  for (const RaagSpec& spec : {z2_spec(), f2_spec(), path3_spec()}) {
    OrderedCosetSpace space = raag_left_order(spec);
    AuditConfig cfg;
    cfg.universe = raag_ball(spec, 3);
    cfg.triple_samples = 15000;
    cfg.invariance_samples = 1500;
    cfg.subgroup_elements = {space.identity};
    AuditReport report = audit(space, cfg);
    CHECK(report.ok());
    CHECK_FALSE(report.trivial);
  }
}

TEST_CASE("parabolic orders audit clean with the parabolic convex") {
  struct Case {
    RaagSpec spec;
    std::vector<bool> y;
    std::vector<std::string> subgroup_words;
  };
  std::vector<Case> cases{
      {z2_spec(), {true, false}, {"1", "a", "a^-2"}},
      {path3_spec(), {true, false, true}, {"1", "a", "c^-1", "a c"}},
  };
  for (const Case& c : cases) {
    OrderedCosetSpace space = raag_parabolic_order(c.spec, c.y);
    AuditConfig cfg;
    cfg.universe = raag_ball(c.spec, 3);
    cfg.triple_samples = 15000;
    cfg.invariance_samples = 1500;
    for (const std::string& s : c.subgroup_words)
      cfg.subgroup_elements.push_back(parse_word(s, c.spec.alphabet));
    const RaagSpec& spec = c.spec;
    const std::vector<bool>& y = c.y;
    cfg.convex_subgroup = [&spec, &y](const ReducedWord& g) {
      return raag_parabolic_member(spec, y, g);
    };
    CHECK(audit(space, cfg).ok());
  }
}
