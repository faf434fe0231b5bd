#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cosetorder/order.hpp"
#include "json.hpp"

namespace cosetorder {

struct Violation {
  std::string law;
  std::vector<std::string> witness;  // formatted words
  bool operator==(const Violation&) const = default;
};

struct AuditReport {
  std::vector<Violation> violations;
  std::map<std::string, long long> checked;
  std::uint64_t seed = 0;
  bool trivial = false;  // G0 = G degenerate case: lawful but constant 0

  bool ok() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

struct AuditConfig {
  std::vector<ReducedWord> universe;
  long long triple_samples = 100000;
  long long invariance_samples = 10000;
  std::uint64_t seed = 1;
  /// Elements of G0 used for coset-well-definedness checks; empty skips.
  std::vector<ReducedWord> subgroup_elements;
  /// When set, also scan for betweenness violations of this subgroup.
  std::function<bool(const ReducedWord&)> convex_subgroup;
  /// 0 = unrestricted; otherwise invariance triples keep total length <= cap.
  std::size_t invariance_length_cap = 0;
  std::size_t max_witnesses_per_law = 50;
  std::string laws = "all";  // or one of the law names below
};

/// Law names: "trichotomy", "antisymmetry", "transitivity",
/// "left-invariance", "coset-well-definedness", "convexity".
/// Exhaustive over universe pairs; sampled (seeded, deterministic) triples.
/// Witnesses are sorted smallest-first by total word length, then text.
AuditReport audit(const OrderedCosetSpace& space, const AuditConfig& cfg);

/// Single-threaded reference implementation with identical output.
AuditReport audit_serial(const OrderedCosetSpace& space,
                         const AuditConfig& cfg);

}  // namespace cosetorder
