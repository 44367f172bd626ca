#include "symidx/invariants.hpp"

namespace symidx {

std::optional<GroupIndexEntry> group_index(const GroupRef& g) {
  using K = GroupRef::Kind;
  switch (g.kind) {
    case K::E6: return GroupIndexEntry{26, false};
    case K::E7: return GroupIndexEntry{54, false};
    case K::E8: return GroupIndexEntry{112, false};
    case K::F4: return GroupIndexEntry{16, true};
    case K::G2: return GroupIndexEntry{6, true};
    case K::Sp:
      if (g.n >= 2) return GroupIndexEntry{4 * (g.n - 1), false};
      if (g.n == 1) return GroupIndexEntry{1, true};  // Sp1 = S^3
      return std::nullopt;
    case K::SU:
      if (g.n >= 5) return GroupIndexEntry{2 * (g.n - 1), true};
      if (g.n == 4) return GroupIndexEntry{5, true};  // Sp2 inside SU4
      if (g.n == 3) return GroupIndexEntry{3, true};  // Cartan-embedded SU3/SO3
      if (g.n == 2) return GroupIndexEntry{1, true};  // S^3
      return std::nullopt;
    case K::SO:
      if (g.n >= 5) return GroupIndexEntry{g.n - 1, true};
      if (g.n == 4 || g.n == 3) return GroupIndexEntry{1, true};  // constant curvature
      return std::nullopt;
  }
  return std::nullopt;
}

int omega(const SpaceRecord& m) {
  if (m.family == Family::EUCLIDEAN)
    throw UnknownGroupIndex("omega is undefined for Euclidean factors");
  auto gi = group_index(m.isometry_group);
  if (!gi)
    throw UnknownGroupIndex("no group index tabulated for " + m.isometry_group.name());
  return gi->value + m.dim - m.rank - m.dim_isotropy;
}

int lambda(const SpaceRecord& m, const ProductSpace& sigma) {
  if (sigma.rank() > m.rank)
    throw RankExceeded("candidate rank " + std::to_string(sigma.rank()) +
                       " exceeds ambient rank " + std::to_string(m.rank));
  return (m.rank - sigma.rank()) + sigma.ell();
}

int lambda_max(const SpaceRecord& m) {
  if (!m.reflective_index)
    throw MissingReflectiveIndex("no reflective index stored for " + m.label);
  return 2 * (*m.reflective_index - 1) - omega(m);
}

int ell_hyperbolic(HField field, int k) {
  switch (field) {
    case HField::R:
      if (k < 2) throw ParameterOutOfRange("RH^k requires k >= 2");
      return (k - 2) * (k - 1) / 2;
    case HField::C:
      if (k < 2) throw ParameterOutOfRange("CH^k requires k >= 2");
      return (k - 1) * (k - 1);
    case HField::H:
      if (k < 2) throw ParameterOutOfRange("HH^k requires k >= 2");
      return (k - 1) * (2 * k - 1) + 3;
    case HField::O:
      if (k != 2) throw ParameterOutOfRange("OH^k exists only for k = 2");
      return 21;
  }
  throw Error("bad hyperbolic field");
}

long long dim_glide_group(int n, int d, int rank_s, int ell_s) {
  if (d < 1 || d > n) throw ParameterOutOfRange("codimension d must satisfy 1 <= d <= n");
  if (rank_s < 0 || ell_s < 0)
    throw ParameterOutOfRange("rank and ell must be non-negative");
  return 2LL * (n - d) - rank_s + ell_s;
}

BoundBreakdown codim_bound(const SpaceRecord& m, const ProductSpace* sigma) {
  BoundBreakdown b;
  b.omega = omega(m);  // throws UnknownGroupIndex when no table entry exists
  b.group_index = group_index(m.isometry_group)->value;
  b.dim_m = m.dim;
  b.rank_m = m.rank;
  b.dim_k = m.dim_isotropy;
  int total = b.omega;
  if (sigma) {
    b.lambda = lambda(m, *sigma);
    total += *b.lambda;
  }
  b.bound_exact = Rational(total, 2);
  b.bound_int = static_cast<int>(b.bound_exact.ceil());
  return b;
}

}  // namespace symidx
