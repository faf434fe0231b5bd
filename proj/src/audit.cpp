#include "cosetorder/audit.hpp"

#include <algorithm>
#include <random>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cosetorder {

namespace {

struct Finding {
  std::size_t length = 0;  // total letter count of the witness words
  Violation violation;
};

class Collector {
 public:
  explicit Collector(std::size_t cap) : cap_(cap) {}

  void add(const std::string& law,
           std::initializer_list<const ReducedWord*> words) {
    Finding f;
    f.violation.law = law;
    for (const ReducedWord* w : words) {
      f.length += w->size();
      f.violation.witness.push_back(format_word(*w));
    }
    findings_.push_back(std::move(f));
  }

  void merge(Collector&& other) {
    findings_.insert(findings_.end(),
                     std::make_move_iterator(other.findings_.begin()),
                     std::make_move_iterator(other.findings_.end()));
  }

  std::vector<Violation> finish() {
    std::stable_sort(findings_.begin(), findings_.end(),
                     [](const Finding& a, const Finding& b) {
                       if (a.length != b.length) return a.length < b.length;
                       if (a.violation.law != b.violation.law)
                         return a.violation.law < b.violation.law;
                       return a.violation.witness < b.violation.witness;
                     });
    std::map<std::string, std::size_t> per_law;
    std::vector<Violation> out;
    for (Finding& f : findings_)
      if (per_law[f.violation.law]++ < cap_)
        out.push_back(std::move(f.violation));
    return out;
  }

  bool empty() const { return findings_.empty(); }

 private:
  std::size_t cap_;
  std::vector<Finding> findings_;
};

AuditReport run_audit(const OrderedCosetSpace& space, const AuditConfig& cfg,
                      bool parallel) {
  const auto& u = cfg.universe;
  const long long n = static_cast<long long>(u.size());
  AuditReport report;
  report.seed = cfg.seed;
  auto wants = [&cfg](const char* law) {
    return cfg.laws == "all" || cfg.laws == law;
  };

  // Sign matrix, reused by every law below.
  std::vector<Sign> sig(static_cast<std::size_t>(n) * n);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      sig[static_cast<std::size_t>(i) * n + j] = space.compare(u[i], u[j]);
  auto at = [&sig, n](long long i, long long j) {
    return sig[static_cast<std::size_t>(i) * n + j];
  };

  Collector collector(cfg.max_witnesses_per_law);

  if (wants("trichotomy") || wants("antisymmetry")) {
    std::vector<Collector> locals;
#pragma omp parallel if (parallel)
    {
#ifdef _OPENMP
      const int tid = omp_get_thread_num();
#pragma omp single
      locals.assign(omp_get_num_threads(), Collector(cfg.max_witnesses_per_law));
#else
      const int tid = 0;
      locals.assign(1, Collector(cfg.max_witnesses_per_law));
#endif
#pragma omp for schedule(dynamic, 8)
      for (long long i = 0; i < n; ++i) {
        for (long long j = 0; j < n; ++j) {
          Sign c = at(i, j);
          if (wants("antisymmetry") && c != -at(j, i))
            locals[tid].add("antisymmetry", {&u[i], &u[j]});
          if (wants("trichotomy")) {
            bool same = space.in_subgroup(space.mul(space.inv(u[i]), u[j]));
            if ((c == 0) != same)
              locals[tid].add("trichotomy", {&u[i], &u[j]});
          }
        }
      }
    }
    for (Collector& c : locals) collector.merge(std::move(c));
    report.checked["pairs"] = n * n;
  }

  std::mt19937_64 rng(cfg.seed);
  auto pick = [&rng, n]() {
    return static_cast<long long>(rng() % static_cast<std::uint64_t>(n));
  };

  if (wants("transitivity") && n > 0) {
    long long checked = 0;
    for (long long s = 0; s < cfg.triple_samples; ++s) {
      long long i = pick(), j = pick(), k = pick();
      ++checked;
      if (at(i, j) > 0 && at(j, k) > 0 && at(i, k) <= 0)
        collector.add("transitivity", {&u[i], &u[j], &u[k]});
    }
    report.checked["triples"] = checked;
  }

  if (wants("left-invariance") && n > 0) {
    // Triples drawn serially so parallel and serial runs agree bit for bit.
    std::vector<std::tuple<long long, long long, long long>> triples;
    triples.reserve(static_cast<std::size_t>(cfg.invariance_samples));
    long long guard = 0;
    while (static_cast<long long>(triples.size()) < cfg.invariance_samples &&
           guard < cfg.invariance_samples * 1000) {
      ++guard;
      long long g = pick(), i = pick(), j = pick();
      if (cfg.invariance_length_cap > 0 &&
          u[g].size() + u[i].size() + u[j].size() > cfg.invariance_length_cap)
        continue;
      triples.emplace_back(g, i, j);
    }
    std::vector<Collector> locals;
#pragma omp parallel if (parallel)
    {
#ifdef _OPENMP
      const int tid = omp_get_thread_num();
#pragma omp single
      locals.assign(omp_get_num_threads(), Collector(cfg.max_witnesses_per_law));
#else
      const int tid = 0;
      locals.assign(1, Collector(cfg.max_witnesses_per_law));
#endif
#pragma omp for schedule(dynamic, 64)
      for (long long s = 0; s < static_cast<long long>(triples.size()); ++s) {
        auto [g, i, j] = triples[s];
        try {
          Sign moved =
              space.compare(space.mul(u[g], u[i]), space.mul(u[g], u[j]));
          if (moved != at(i, j))
            locals[tid].add("left-invariance", {&u[g], &u[i], &u[j]});
        } catch (const universe_error&) {
          // The translated pair escapes a finite-universe certificate;
          // there is nothing to check for this sample.
        }
      }
    }
    for (Collector& c : locals) collector.merge(std::move(c));
    report.checked["invariance"] = static_cast<long long>(triples.size());
  }

  if (wants("coset-well-definedness") && n > 0 &&
      !cfg.subgroup_elements.empty()) {
    long long checked = 0;
    const long long m = static_cast<long long>(cfg.subgroup_elements.size());
    for (long long s = 0; s < cfg.invariance_samples; ++s) {
      long long i = pick(), j = pick();
      const ReducedWord& h =
          cfg.subgroup_elements[static_cast<std::size_t>(rng() % m)];
      ++checked;
      try {
        if (space.compare(space.mul(u[i], h), u[j]) != at(i, j) ||
            space.compare(u[i], space.mul(u[j], h)) != at(i, j))
          collector.add("coset-well-definedness", {&u[i], &u[j], &h});
      } catch (const universe_error&) {
        // see left-invariance: skip samples a local certificate cannot see
      }
    }
    report.checked["well-definedness"] = checked;
  }

  if (wants("convexity") && cfg.convex_subgroup) {
    std::vector<long long> members, outside;
    for (long long i = 0; i < n; ++i)
      (cfg.convex_subgroup(u[i]) ? members : outside).push_back(i);
    std::vector<Collector> locals;
#pragma omp parallel if (parallel)
    {
#ifdef _OPENMP
      const int tid = omp_get_thread_num();
#pragma omp single
      locals.assign(omp_get_num_threads(), Collector(cfg.max_witnesses_per_law));
#else
      const int tid = 0;
      locals.assign(1, Collector(cfg.max_witnesses_per_law));
#endif
#pragma omp for schedule(dynamic, 4)
      for (std::size_t gi = 0; gi < outside.size(); ++gi) {
        long long g = outside[gi];
        for (long long h1 : members)
          for (long long h2 : members)
            if (at(h1, g) > 0 && at(g, h2) > 0)
              locals[tid].add("convexity", {&u[h1], &u[g], &u[h2]});
      }
    }
    for (Collector& c : locals) collector.merge(std::move(c));
    report.checked["convexity"] =
        static_cast<long long>(members.size() * members.size() * outside.size());
  }

  report.violations = collector.finish();

  if (report.violations.empty() && n > 0) {
    bool all_zero = true, all_member = true;
    for (long long i = 0; i < n && (all_zero || all_member); ++i) {
      for (long long j = 0; j < n; ++j)
        if (at(i, j) != 0) all_zero = false;
      if (!space.in_subgroup(u[i])) all_member = false;
    }
    report.trivial = all_zero && all_member;
  }
  return report;
}

}  // namespace

nlohmann::json AuditReport::to_json() const {
  nlohmann::json j;
  j["violations"] = nlohmann::json::array();
  for (const Violation& v : violations)
    j["violations"].push_back({{"law", v.law}, {"witness", v.witness}});
  j["checked"] = checked;
  j["seed"] = seed;
  if (trivial) j["trivial"] = true;
  return j;
}

AuditReport audit(const OrderedCosetSpace& space, const AuditConfig& cfg) {
  return run_audit(space, cfg, true);
}

AuditReport audit_serial(const OrderedCosetSpace& space,
                         const AuditConfig& cfg) {
  return run_audit(space, cfg, false);
}

}  // namespace cosetorder
