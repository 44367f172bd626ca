#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symidx/errors.hpp"
#include "symidx/rootsys.hpp"

namespace symidx {

// Parametrized families of irreducible Riemannian symmetric spaces of
// non-compact type, plus the Euclidean tag. Classical families follow the
// Cartan labels; AC..G2C are the complexified (type IV) series.
enum class Family {
  AI, AII, AIII, BDI, CI, CII, DIII,
  EI, EII, EIII, EIV, EV, EVI, EVII, EVIII, EIX, FI, FII, G,
  AC, BC, CC, DC, E6C, E7C, E8C, F4C, G2C,
  EUCLIDEAN
};

std::string family_name(Family f);
Family family_from_name(const std::string& s);
int family_arity(Family f);

// The compact dual of the isometry group, which is where the group index
// i(G*) is evaluated. For complexified spaces the dual is G_u x G_u and the
// index equals that of the simple factor.
struct GroupRef {
  enum class Kind { SU, SO, Sp, E6, E7, E8, F4, G2 } kind = Kind::SU;
  int n = 0;                 // SU_n / SO_n / Sp_n parameter; 0 for exceptional
  bool complexified = false;
  std::string name() const;
  friend bool operator==(const GroupRef&, const GroupRef&) = default;
};

struct SpaceRecord {
  Family family = Family::EUCLIDEAN;
  std::vector<int> params;
  std::string id;     // canonical ASCII id, e.g. "E7m25", "AIII(3,3)", "RH2"
  std::string label;  // display name, e.g. "E7^-25/E6U1", "SU(3,6)/S(U3U6)"
  int dim = 0;
  int rank = 0;
  int dim_isotropy = 0;
  int ell = 0;
  std::optional<RestrictedRootSystem> root_system;  // absent only for EUCLIDEAN
  std::optional<int> reflective_index;
  std::optional<int> known_index;
  GroupRef isometry_group;

  friend bool operator==(const SpaceRecord&, const SpaceRecord&) = default;
};

// Evaluates the closed-form invariants for (family, params). Overlapping
// parametrizations are normalized first, so isometric inputs yield the same
// record (e.g. CI(1), AI(1) and BDI(1,1) all come back as RH2).
// Throws ParameterOutOfRange when the validity predicate fails.
SpaceRecord instantiate(Family f, const std::vector<int>& params);

// Canonical (family, params) for a valid parameter tuple.
std::pair<Family, std::vector<int>> canonical_form(Family f, const std::vector<int>& params);

// All irreducible non-Euclidean catalog entries with dim in [dim_min, dim_max],
// rank in rank_allowed (if given) and ell <= ell_max (if given), sorted by
// (dim, label). Exhaustive over every family and valid parameter choice.
// Throws WindowTooLarge when dim_max exceeds 10000.
std::vector<SpaceRecord> scan(int dim_min, int dim_max,
                              const std::optional<std::set<int>>& rank_allowed = std::nullopt,
                              std::optional<int> ell_max = std::nullopt);

struct ProductSpace {
  std::vector<SpaceRecord> factors;  // canonical order (sorted by label)
  int euclidean_dim = 0;

  int dim() const;
  int rank() const;
  int ell() const;
  // Number of de Rham factors, counting a non-trivial Euclidean part as one.
  int de_rham_factor_count() const;
  bool irreducible() const { return euclidean_dim == 0 && factors.size() == 1; }
  std::string id() const;     // e.g. "R1 x AI(2) x AI(2)"
  std::string label() const;  // display form

  friend bool operator==(const ProductSpace&, const ProductSpace&) = default;
};

// Canonicalizes the factor multiset (Euclidean-family factors are folded into
// euclidean_dim). Throws EmptyProduct when there is nothing at all.
ProductSpace make_product(std::vector<SpaceRecord> factors, int euclidean_dim);

// Label/id/alias lookup: canonical ids, Cartan symbols (EI..EIX, FI, FII, G),
// hyperbolic shorthands (RH2/CH3/HH2/OH2), Euclidean "Rn", and family
// expressions like "AIII(3,3)". Throws UnknownSpace.
SpaceRecord resolve_space(const std::string& name);

// Product expressions: factors joined by "x", each a space name as accepted
// by resolve_space; "Rn" tokens contribute a Euclidean factor of dimension n.
ProductSpace parse_product(const std::string& expr);

// Hyperbolic-space predicates keyed on canonical family/params.
bool is_real_hyperbolic(const SpaceRecord& s);     // RH^k, k >= 2
bool is_complex_hyperbolic(const SpaceRecord& s);  // CH^k, k >= 2
bool is_sl3r(const SpaceRecord& s);                // SL3(R)/SO3
bool is_so2_odd(const SpaceRecord& s);             // SO(2,2+k), k >= 1 odd
bool has_constant_curvature(const SpaceRecord& s); // RH^k

// Optional external catalog override used by scan() (CLI --catalog-file).
void set_catalog_override(std::optional<std::vector<SpaceRecord>> records);
bool catalog_override_active();

}  // namespace symidx
