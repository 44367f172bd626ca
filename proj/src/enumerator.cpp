#include "symidx/enumerator.hpp"

#include <algorithm>

#include "symidx/rootsys.hpp"

namespace symidx {

std::string rule_name(RuleId r) {
  switch (r) {
    case RuleId::R1_LambdaBound: return "R1_LambdaBound";
    case RuleId::R2_HyperbolicFactor: return "R2_HyperbolicFactor";
    case RuleId::R3_RootEmbedding: return "R3_RootEmbedding";
    case RuleId::R4_Hypersurface: return "R4_Hypersurface";
    case RuleId::R5_MaximalRankList: return "R5_MaximalRankList";
  }
  throw Error("bad rule id");
}

RuleId rule_from_name(const std::string& s) {
  for (RuleId r : {RuleId::R1_LambdaBound, RuleId::R2_HyperbolicFactor,
                   RuleId::R3_RootEmbedding, RuleId::R4_Hypersurface,
                   RuleId::R5_MaximalRankList}) {
    std::string full = rule_name(r);
    if (s == full || s == full.substr(0, 2)) return r;  // accept "R1".."R5"
  }
  throw ParseError("unknown rule: " + s);
}

std::string rule_citation(RuleId r) {
  switch (r) {
    case RuleId::R1_LambdaBound:
      return "codimension lower bound codim >= (Omega + Lambda)/2 from the "
             "glide-group dimension count";
    case RuleId::R2_HyperbolicFactor:
      return "a reducible maximal candidate with an RH^k, CH^k, SL3(R)/SO3 or "
             "SO(2,2+k) (k odd) de Rham factor is either RH^k1 x RH^k2 or admits a "
             "reflective enlargement, contradicting codim < i_r(M)";
    case RuleId::R3_RootEmbedding:
      return "equal-rank totally geodesic inclusion forces a root-to-root linear "
             "embedding with multiplicity domination (necessary condition)";
    case RuleId::R4_Hypersurface:
      return "totally geodesic hypersurfaces exist only in constant-curvature "
             "factors (Iwahori 1966)";
    case RuleId::R5_MaximalRankList:
      return "maximal-rank totally geodesic submanifolds of E6^6/Sp4 classified by "
             "Chen-Nagano 1978 and Ikawa-Tasaki 2000";
  }
  throw Error("bad rule id");
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Eliminated: return "eliminated";
    case Outcome::Survives: return "survives";
    case Outcome::Skipped: return "skipped";
  }
  throw Error("bad outcome");
}

Outcome outcome_from_name(const std::string& s) {
  if (s == "eliminated") return Outcome::Eliminated;
  if (s == "survives") return Outcome::Survives;
  if (s == "skipped") return Outcome::Skipped;
  throw ParseError("unknown outcome: " + s);
}

bool Candidate::eliminated() const {
  for (const auto& v : verdicts)
    if (v.outcome == Outcome::Eliminated) return true;
  return false;
}

std::vector<Candidate> generate_candidates(const SpaceRecord& m,
                                           const std::set<int>& codim_values) {
  if (codim_values.empty()) throw ParameterOutOfRange("empty codimension window");
  for (int c : codim_values)
    if (c < 1 || c >= m.dim)
      throw ParameterOutOfRange("codimension " + std::to_string(c) +
                                " outside 1 <= c < dim(M) = " + std::to_string(m.dim));
  if (!m.reflective_index)
    throw MissingReflectiveIndex("candidate generation needs i_r(" + m.label + ")");

  const int lmax = lambda_max(m);
  std::vector<Candidate> out;
  if (lmax < 0) return out;

  std::set<int> dims;
  int dim_max = 0;
  for (int c : codim_values) {
    dims.insert(m.dim - c);
    dim_max = std::max(dim_max, m.dim - c);
  }

  // Factor pool: every catalog entry that could fit (ell <= lmax because
  // Lambda >= sum of factor ells; rank and dim bounded by the product's).
  std::vector<SpaceRecord> pool = scan(2, dim_max, std::nullopt, lmax);
  pool.erase(std::remove_if(pool.begin(), pool.end(),
                            [&](const SpaceRecord& s) { return s.rank > m.rank; }),
             pool.end());

  std::vector<SpaceRecord> chosen;
  auto emit = [&](int dim_sum, int rank_sum, int ell_sum) {
    if (!dims.count(dim_sum)) return;
    int lam = (m.rank - rank_sum) + ell_sum;
    if (lam > lmax) return;
    Candidate c;
    c.product = make_product(chosen, 0);
    c.codim = m.dim - dim_sum;
    c.lambda = lam;
    out.push_back(std::move(c));
  };
  // Multisets via non-decreasing pool index.
  auto rec = [&](auto&& self, size_t start, int dim_sum, int rank_sum,
                 int ell_sum) -> void {
    if (!chosen.empty()) emit(dim_sum, rank_sum, ell_sum);
    for (size_t i = start; i < pool.size(); ++i) {
      const SpaceRecord& f = pool[i];
      if (dim_sum + f.dim > dim_max) continue;
      if (rank_sum + f.rank > m.rank) continue;
      if (ell_sum + f.ell > lmax) continue;
      chosen.push_back(f);
      self(self, i, dim_sum + f.dim, rank_sum + f.rank, ell_sum + f.ell);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0, 0, 0);

  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.codim != b.codim) return a.codim < b.codim;
    if (a.product.dim() != b.product.dim()) return a.product.dim() < b.product.dim();
    return a.product.label() < b.product.label();
  });
  return out;
}

namespace {

Verdict r1_lambda_bound(const SpaceRecord& m, const Candidate& c) {
  BoundBreakdown b = codim_bound(m, &c.product);
  if (c.codim < b.bound_int)
    return {RuleId::R1_LambdaBound, Outcome::Eliminated,
            std::to_string(c.codim) + " < " + std::to_string(b.bound_int) +
                " = ceil((" + std::to_string(b.omega) + " + " +
                std::to_string(*b.lambda) + ")/2)"};
  return {RuleId::R1_LambdaBound, Outcome::Survives,
          std::to_string(c.codim) + " >= " + std::to_string(b.bound_int) +
              " = ceil((" + std::to_string(b.omega) + " + " +
              std::to_string(*b.lambda) + ")/2)"};
}

Verdict r2_hyperbolic_factor(const SpaceRecord& m, const Candidate& c) {
  if (c.product.de_rham_factor_count() < 2)
    return {RuleId::R2_HyperbolicFactor, Outcome::Skipped,
            "applies only to reducible candidates"};
  if (!m.reflective_index || c.codim >= *m.reflective_index)
    return {RuleId::R2_HyperbolicFactor, Outcome::Skipped,
            "needs codim < i_r(M) to force a contradiction"};
  const SpaceRecord* listed = nullptr;
  for (const auto& f : c.product.factors) {
    if (is_real_hyperbolic(f) || is_complex_hyperbolic(f) || is_sl3r(f) ||
        is_so2_odd(f)) {
      listed = &f;
      break;
    }
  }
  if (!listed)
    return {RuleId::R2_HyperbolicFactor, Outcome::Survives, "no listed de Rham factor"};
  bool two_real_hyperbolic = c.product.euclidean_dim == 0 &&
                             c.product.factors.size() == 2 &&
                             is_real_hyperbolic(c.product.factors[0]) &&
                             is_real_hyperbolic(c.product.factors[1]);
  if (two_real_hyperbolic)
    return {RuleId::R2_HyperbolicFactor, Outcome::Survives,
            "RH^k1 x RH^k2 is the excluded shape"};
  return {RuleId::R2_HyperbolicFactor, Outcome::Eliminated,
          "factor " + listed->label + " forces a reflective submanifold of dimension >= " +
              std::to_string(c.product.dim()) + ", impossible below i_r = " +
              std::to_string(*m.reflective_index)};
}

Verdict r3_root_embedding(const SpaceRecord& m, const Candidate& c) {
  if (!c.product.irreducible())
    return {RuleId::R3_RootEmbedding, Outcome::Skipped,
            "restricted to irreducible candidates"};
  const SpaceRecord& f = c.product.factors[0];
  if (f.rank != m.rank)
    return {RuleId::R3_RootEmbedding, Outcome::Skipped,
            "applies only at equal rank"};
  if (!f.root_system || !m.root_system)
    return {RuleId::R3_RootEmbedding, Outcome::Skipped, "missing root data"};
  if (m.rank > 4)
    return {RuleId::R3_RootEmbedding, Outcome::Skipped,
            "exhaustive search capped at rank 4"};
  EmbeddingResult r = embedding_exists(*f.root_system, *m.root_system);
  if (r.exists) {
    return {RuleId::R3_RootEmbedding, Outcome::Survives,
            "root system embeds with admissible multiplicities"};
  }
  return {RuleId::R3_RootEmbedding, Outcome::Eliminated, r.obstruction};
}

Verdict r4_hypersurface(const SpaceRecord& m, const Candidate& c) {
  if (c.codim != 1)
    return {RuleId::R4_Hypersurface, Outcome::Skipped, "applies only at codimension 1"};
  if (has_constant_curvature(m))
    return {RuleId::R4_Hypersurface, Outcome::Survives,
            "ambient space has constant curvature"};
  return {RuleId::R4_Hypersurface, Outcome::Eliminated,
          m.label + " has non-constant curvature, so it admits no totally geodesic "
          "hypersurface"};
}

Verdict r5_maximal_rank_list(const SpaceRecord& m, const Candidate& c) {
  if (m.id != "E6p6")
    return {RuleId::R5_MaximalRankList, Outcome::Skipped,
            "classified list available only for E6^6/Sp4"};
  if (c.product.rank() != m.rank)
    return {RuleId::R5_MaximalRankList, Outcome::Skipped,
            "list covers maximal-rank candidates only"};
  for (const auto& e : e6_sp4_maximal_rank_list()) {
    if (e.product == c.product)
      return {RuleId::R5_MaximalRankList, Outcome::Survives,
              "classified entry of codimension " + std::to_string(e.codim)};
  }
  return {RuleId::R5_MaximalRankList, Outcome::Eliminated,
          "not among the classified maximal-rank totally geodesic submanifolds"};
}

}  // namespace

Verdict apply_rule(RuleId rule, const SpaceRecord& m, const Candidate& c) {
  switch (rule) {
    case RuleId::R1_LambdaBound: return r1_lambda_bound(m, c);
    case RuleId::R2_HyperbolicFactor: return r2_hyperbolic_factor(m, c);
    case RuleId::R3_RootEmbedding: return r3_root_embedding(m, c);
    case RuleId::R4_Hypersurface: return r4_hypersurface(m, c);
    case RuleId::R5_MaximalRankList: return r5_maximal_rank_list(m, c);
  }
  throw Error("bad rule id");
}

std::vector<MaximalRankEntry> e6_sp4_maximal_rank_list() {
  std::vector<MaximalRankEntry> out;
  out.push_back({make_product({instantiate(Family::BDI, {5, 0})}, 1), 16, true});
  out.push_back({make_product({instantiate(Family::BDI, {1, 1}),
                               instantiate(Family::AI, {5})}, 0), 20, true});
  out.push_back({make_product({instantiate(Family::AI, {2}), instantiate(Family::AI, {2}),
                               instantiate(Family::AI, {2})}, 0), 27, false});
  return out;
}

PipelineReport survivors(const SpaceRecord& m, const std::set<int>& codim_values,
                         const std::vector<RuleId>& rules) {
  PipelineReport rep;
  rep.ambient = m;
  rep.window.assign(codim_values.begin(), codim_values.end());
  rep.preamble = {
      "candidates are semisimple products of irreducible factors; non-semisimple "
      "candidates are excluded up front (Berndt-Olmos 2016)",
      "generation enforces rank(Sigma) <= rank(M) and Lambda <= " +
          std::to_string(lambda_max(m)) + " = 2 (i_r - 1) - Omega, the cap implied by "
          "codim < i_r(M) = " + std::to_string(*m.reflective_index),
      "rules address maximal candidates; a non-maximal candidate sits inside a "
      "maximal one of smaller codimension",
      "the root-embedding filter is a necessary condition only and is restricted to "
      "irreducible equal-rank candidates",
  };
  rep.candidates = generate_candidates(m, codim_values);
  for (auto& c : rep.candidates) {
    for (RuleId r : rules) c.verdicts.push_back(apply_rule(r, m, c));
    if (!c.eliminated()) rep.survivors.push_back(c);
  }
  return rep;
}

}  // namespace symidx
