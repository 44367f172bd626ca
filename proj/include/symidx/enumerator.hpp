#pragma once

#include <set>
#include <string>
#include <vector>

#include "symidx/catalog.hpp"
#include "symidx/invariants.hpp"

namespace symidx {

enum class RuleId {
  R1_LambdaBound,
  R2_HyperbolicFactor,
  R3_RootEmbedding,
  R4_Hypersurface,
  R5_MaximalRankList
};

std::string rule_name(RuleId r);
RuleId rule_from_name(const std::string& s);
std::string rule_citation(RuleId r);

enum class Outcome { Eliminated, Survives, Skipped };

std::string outcome_name(Outcome o);
Outcome outcome_from_name(const std::string& s);

struct Verdict {
  RuleId rule = RuleId::R1_LambdaBound;
  Outcome outcome = Outcome::Skipped;
  std::string detail;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Candidate {
  ProductSpace product;
  int codim = 0;
  int lambda = 0;
  std::vector<Verdict> verdicts;

  bool eliminated() const;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Every semisimple product (no Euclidean factor) built from catalog entries
// whose dimension lands in the window induced by codim_values, whose rank
// does not exceed rank(M), and whose Lambda stays within lambda_max(M).
// Multisets are canonical, the output order is (codim, dim, factor labels).
std::vector<Candidate> generate_candidates(const SpaceRecord& m,
                                           const std::set<int>& codim_values);

// Pure predicate of (rule, ambient, candidate); Skipped means the rule does
// not apply to this candidate, which is recorded but never eliminates.
Verdict apply_rule(RuleId rule, const SpaceRecord& m, const Candidate& c);

// The classified maximal-rank totally geodesic submanifolds of E6^6/Sp4
// (Chen-Nagano 1978; Ikawa-Tasaki 2000), with their codimensions.
struct MaximalRankEntry {
  ProductSpace product;
  int codim = 0;
  bool reflective = false;
};
std::vector<MaximalRankEntry> e6_sp4_maximal_rank_list();

struct PipelineReport {
  SpaceRecord ambient;
  std::vector<int> window;  // codimension values, ascending
  std::vector<std::string> preamble;
  std::vector<Candidate> candidates;  // with full verdict trails
  std::vector<Candidate> survivors;

  friend bool operator==(const PipelineReport&, const PipelineReport&) = default;
};

// Generates candidates and runs the given rules in order over each of them.
// The surviving set is independent of rule order (each rule is a pure
// predicate); the verdict trail follows the given order.
PipelineReport survivors(const SpaceRecord& m, const std::set<int>& codim_values,
                         const std::vector<RuleId>& rules);

}  // namespace symidx
