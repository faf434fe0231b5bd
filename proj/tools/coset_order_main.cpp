#include <algorithm>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cosetorder/audit.hpp"
#include "cosetorder/cayley.hpp"
#include "cosetorder/stallings.hpp"
#include "cosetorder/system.hpp"

using namespace cosetorder;

namespace {

// Exit-code contract: 0 pass, 1 violation, 2 usage/spec error, 3 domain
// error (out-of-universe query).
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

/// Debug fixture: flip the single comparison (identity, first generator) so
/// audits have a planted antisymmetry violation to find.
void corrupt_order(GroupSystem& sys) {
  int first = -1;
  for (std::size_t i = 0; i < sys.active.size(); ++i)
    if (sys.active[i]) {
      first = static_cast<int>(i);
      break;
    }
  if (first < 0) return;
  std::vector<Letter> l{{first, 1}};
  ReducedWord g0 = sys.canonical(ReducedWord::reduce(sys.alphabet, l));
  ReducedWord id = sys.canonical(ReducedWord::identity(sys.alphabet));
  auto orig = sys.order.compare;
  auto canon = sys.canonical;
  sys.order.compare = [orig, canon, g0, id](const ReducedWord& u,
                                            const ReducedWord& v) -> Sign {
    Sign s = orig(u, v);
    if (canon(u) == id && canon(v) == g0) return -s;
    return s;
  };
}

std::vector<ReducedWord> check_universe(const GroupSystem& sys, int radius) {
  if (!sys.universe.empty()) return sys.universe;
  if (radius > sys.ball_cap)
    throw config_error("radius exceeds the configured cap of " +
                       std::to_string(sys.ball_cap));
  return enumerate_ball(sys, radius);
}

int cmd_compare(const GroupSystem& sys, const std::string& u_text,
                const std::string& v_text, bool trace) {
  ReducedWord u = parse_word(u_text, sys.alphabet);
  ReducedWord v = parse_word(v_text, sys.alphabet);
  Sign s = sys.order.compare(u, v);
  // compare(u, v) = +1 means uG0 precedes vG0.
  std::cout << (s > 0 ? "<" : s < 0 ? ">" : "=") << "\n";
  if (trace) {
    if (sys.traced_compare) {
      SignTrace tr;
      sys.traced_compare(u, v, tr);
      std::cout << "orientation-sum=" << tr.orientation_sum
                << " turn-sum=" << tr.turn_sum << "\n";
    } else {
      std::cout << "trace: not a single-tree construction\n";
    }
  }
  return 0;
}

int cmd_sort(const GroupSystem& sys, const std::vector<std::string>& texts) {
  std::vector<ReducedWord> words;
  for (const std::string& t : texts)
    words.push_back(parse_word(t, sys.alphabet));
  std::vector<std::size_t> idx(words.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return sys.order.compare(words[a], words[b]) > 0;
  });
  for (std::size_t i : idx) std::cout << format_word(words[i]) << "\n";
  return 0;
}

int cmd_ball(const GroupSystem& sys, int radius) {
  if (sys.type == "burns-hale")
    throw config_error(
        "ball enumeration is not available for local certificates");
  if (radius < 0 || radius > sys.ball_cap)
    throw config_error("radius exceeds the configured cap of " +
                       std::to_string(sys.ball_cap));
  std::vector<ReducedWord> ball = enumerate_ball(sys, radius);
  std::sort(ball.begin(), ball.end(),
            [&sys](const ReducedWord& a, const ReducedWord& b) {
              return sys.order.compare(a, b) > 0;
            });
  for (const ReducedWord& w : ball) std::cout << format_word(w) << "\n";
  std::cerr << "count=" << ball.size() << "\n";
  return 0;
}

int cmd_check(const GroupSystem& sys, const std::string& law, int radius,
              long long samples, std::uint64_t seed) {
  AuditConfig cfg;
  cfg.universe = check_universe(sys, radius);
  cfg.triple_samples = samples;
  cfg.invariance_samples = std::min<long long>(samples, 10000);
  cfg.seed = seed;
  cfg.laws = law;
  cfg.convex_subgroup = sys.subgroup_member;
  for (const ReducedWord& w : cfg.universe)
    if (sys.order.in_subgroup(w)) cfg.subgroup_elements.push_back(w);
  AuditReport report = audit(sys.order, cfg);
  std::cout << report.to_json().dump(2) << "\n";
  return report.ok() ? 0 : kExitViolation;
}

int cmd_convexity(const GroupSystem& sys, const std::string& subgroup,
                  int radius) {
  std::function<bool(const ReducedWord&)> member;
  if (subgroup == "default" || subgroup.empty()) {
    member = sys.subgroup_member;
  } else {
    std::vector<std::string> names;
    std::string cur;
    for (char ch : subgroup + ",") {
      if (ch == ',') {
        if (!cur.empty()) names.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    std::vector<bool> mask(static_cast<std::size_t>(sys.alphabet->size()),
                           false);
    for (const std::string& n : names) {
      int g = sys.alphabet->index(n);
      if (g < 0) throw config_error("unknown generator \"" + n + "\"");
      mask[static_cast<std::size_t>(g)] = true;
    }
    auto canon = sys.canonical;
    member = [canon, mask](const ReducedWord& g) {
      return uses_only(canon(g), mask);
    };
  }
  AuditConfig cfg;
  cfg.universe = check_universe(sys, radius);
  cfg.laws = "convexity";
  cfg.convex_subgroup = member;
  AuditReport report = audit(sys.order, cfg);
  std::cout << report.to_json().dump(2) << "\n";
  return report.ok() ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariant orders on coset spaces of free-group constructions"};
  app.require_subcommand(1);

  std::string spec_path, u_text, v_text, law = "all", subgroup = "default";
  std::vector<std::string> sort_words;
  int radius = 4;
  long long samples = 100000;
  std::uint64_t seed = 1;
  bool trace = false, corrupt = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("spec", spec_path, "group spec JSON file")->required();
    cmd->add_flag("--corrupt", corrupt,
                  "flip one comparison (planted-violation fixture)");
  };

  CLI::App* compare = app.add_subcommand("compare", "compare two words");
  add_common(compare);
  compare->add_option("u", u_text)->required();
  compare->add_option("v", v_text)->required();
  compare->add_flag("--trace", trace,
                    "print the orientation-sum and turn-sum");

  CLI::App* sort_cmd = app.add_subcommand("sort", "sort words ascending");
  add_common(sort_cmd);
  sort_cmd->add_option("words", sort_words)->required();

  CLI::App* ball = app.add_subcommand("ball", "list an ordered word ball");
  add_common(ball);
  ball->add_option("--radius", radius);

  CLI::App* check = app.add_subcommand("check", "audit the order laws");
  add_common(check);
  check->add_option("--law", law);
  check->add_option("--radius", radius);
  check->add_option("--samples", samples);
  check->add_option("--seed", seed);

  CLI::App* convexity =
      app.add_subcommand("convexity", "scan for betweenness violations");
  add_common(convexity);
  convexity->add_option("--subgroup", subgroup,
                        "comma-separated generators, or \"default\"");
  convexity->add_option("--radius", radius);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    GroupSystem sys = load_group_system_file(spec_path);
    if (corrupt) corrupt_order(sys);
    if (compare->parsed()) return cmd_compare(sys, u_text, v_text, trace);
    if (sort_cmd->parsed()) return cmd_sort(sys, sort_words);
    if (ball->parsed()) return cmd_ball(sys, radius);
    if (check->parsed()) return cmd_check(sys, law, radius, samples, seed);
    if (convexity->parsed()) return cmd_convexity(sys, subgroup, radius);
  } catch (const universe_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
