#pragma once

#include <optional>

#include "symidx/catalog.hpp"
#include "symidx/rational.hpp"

namespace symidx {

// Index i(G*) of a compact simple Lie group, viewed as a symmetric space.
// Core entries (E6, E7, E8, Sp_n) back the replayed proofs; the remaining
// entries are imported from the literature (Berndt-Olmos 2017) and are
// flagged so reports can say so.
struct GroupIndexEntry {
  int value = 0;
  bool imported = false;
};

std::optional<GroupIndexEntry> group_index(const GroupRef& g);

// Omega_M = i(G*) + dim(M) - rk(M) - dim(K). Throws UnknownGroupIndex when
// the isometry group's index is not tabulated.
int omega(const SpaceRecord& m);

// Lambda^M_Sigma = (rk(M) - rk(Sigma)) + ell(Sigma). Throws RankExceeded when
// the candidate's rank exceeds the ambient rank.
int lambda(const SpaceRecord& m, const ProductSpace& sigma);

// Largest Lambda compatible with codim < i_r(M): 2 (i_r(M) - 1) - Omega_M.
// May be negative, which means no candidate below the reflective index can
// exist at all. Throws MissingReflectiveIndex.
int lambda_max(const SpaceRecord& m);

enum class HField { R, C, H, O };

// ell-number of a hyperbolic space F H^k. Closed forms independent of the
// catalog's family formulas.
int ell_hyperbolic(HField field, int k);

// dim(G') = 2 (n - d) - rank_s + ell_s for a totally geodesic submanifold of
// codimension d in an n-dimensional space, where rank_s counts a Euclidean
// factor's contribution.
long long dim_glide_group(int n, int d, int rank_s, int ell_s);

struct BoundBreakdown {
  int group_index = 0;
  int dim_m = 0;
  int rank_m = 0;
  int dim_k = 0;
  int omega = 0;
  std::optional<int> lambda;
  Rational bound_exact;  // (omega + lambda)/2, or omega/2 without a candidate
  int bound_int = 0;     // ceiling

  friend bool operator==(const BoundBreakdown&, const BoundBreakdown&) = default;
};

// codim(Sigma) >= (Omega_M + Lambda^M_Sigma)/2 >= Omega_M/2.
BoundBreakdown codim_bound(const SpaceRecord& m, const ProductSpace* sigma = nullptr);

}  // namespace symidx
