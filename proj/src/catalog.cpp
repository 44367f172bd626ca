#include "symidx/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace symidx {

namespace {

const std::map<std::string, Family>& family_names() {
  static const std::map<std::string, Family> m = {
      {"AI", Family::AI},       {"AII", Family::AII},   {"AIII", Family::AIII},
      {"BDI", Family::BDI},     {"CI", Family::CI},     {"CII", Family::CII},
      {"DIII", Family::DIII},   {"EI", Family::EI},     {"EII", Family::EII},
      {"EIII", Family::EIII},   {"EIV", Family::EIV},   {"EV", Family::EV},
      {"EVI", Family::EVI},     {"EVII", Family::EVII}, {"EVIII", Family::EVIII},
      {"EIX", Family::EIX},     {"FI", Family::FI},     {"FII", Family::FII},
      {"G", Family::G},         {"AC", Family::AC},     {"BC", Family::BC},
      {"CC", Family::CC},       {"DC", Family::DC},     {"E6C", Family::E6C},
      {"E7C", Family::E7C},     {"E8C", Family::E8C},   {"F4C", Family::F4C},
      {"G2C", Family::G2C},     {"EUCLIDEAN", Family::EUCLIDEAN},
  };
  return m;
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& [name, fam] : family_names())
    if (fam == f) return name;
  throw Error("bad family");
}

Family family_from_name(const std::string& s) {
  auto it = family_names().find(s);
  if (it == family_names().end()) throw ParseError("unknown family: " + s);
  return it->second;
}

int family_arity(Family f) {
  switch (f) {
    case Family::AI:
    case Family::AII:
    case Family::CI:
    case Family::DIII:
    case Family::AC:
    case Family::BC:
    case Family::CC:
    case Family::DC:
    case Family::EUCLIDEAN:
      return 1;
    case Family::AIII:
    case Family::BDI:
    case Family::CII:
      return 2;
    default:
      return 0;
  }
}

std::string GroupRef::name() const {
  std::string base;
  switch (kind) {
    case Kind::SU: base = "SU" + std::to_string(n); break;
    case Kind::SO: base = "SO" + std::to_string(n); break;
    case Kind::Sp: base = "Sp" + std::to_string(n); break;
    case Kind::E6: base = "E6"; break;
    case Kind::E7: base = "E7"; break;
    case Kind::E8: base = "E8"; break;
    case Kind::F4: base = "F4"; break;
    case Kind::G2: base = "G2"; break;
  }
  if (complexified) base += " x " + base;
  return base;
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParameterOutOfRange(msg);
}

void check_params(Family f, const std::vector<int>& p) {
  if (static_cast<int>(p.size()) != family_arity(f))
    throw ParameterOutOfRange(family_name(f) + " takes " +
                              std::to_string(family_arity(f)) + " parameter(s), got " +
                              std::to_string(p.size()));
  switch (f) {
    case Family::AI:
    case Family::AII:
    case Family::CI:
    case Family::AC:
    case Family::BC:
    case Family::CC:
      require(p[0] >= 1, family_name(f) + " requires r >= 1");
      break;
    case Family::DC:
      require(p[0] >= 3, "DC requires r >= 3 (SO2(C) is abelian, SO4(C) splits)");
      break;
    case Family::DIII:
      require(p[0] >= 3, "DIII requires n >= 3 (SO*(4) has no simple isometry group)");
      break;
    case Family::AIII:
    case Family::CII:
      require(p[0] >= 1 && p[1] >= 0, family_name(f) + " requires r >= 1, k >= 0");
      break;
    case Family::BDI:
      require(p[0] >= 1 && p[1] >= 0, "BDI requires r >= 1, k >= 0");
      require(!(p[0] == 1 && p[1] == 0), "BDI(1,0) is a flat line, not semisimple");
      require(!(p[0] == 2 && p[1] == 0), "BDI(2,0) is reducible (RH^2 x RH^2)");
      break;
    case Family::EUCLIDEAN:
      require(p[0] >= 1, "EUCLIDEAN requires n >= 1");
      break;
    default:
      break;  // arity 0
  }
}

RestrictedRootSystem rrs(RootType t, int rank,
                         std::initializer_list<std::pair<LengthClass, int>> mult) {
  RestrictedRootSystem r{t, rank, {}};
  for (auto& [c, m] : mult) r.multiplicities[c] = m;
  r.validate();
  return r;
}

struct ExceptionalData {
  Family family;
  const char* id;
  const char* label;
  int dim, rank, dim_k;
  GroupRef group;
  RestrictedRootSystem roots;
  std::optional<int> reflective_index;
  std::optional<int> known_index;
};

const std::vector<ExceptionalData>& exceptional_table() {
  using K = GroupRef::Kind;
  using L = LengthClass;
  static const std::vector<ExceptionalData> t = {
      {Family::EI, "E6p6", "E6^6/Sp4", 42, 6, 36, {K::E6, 0, false},
       rrs(RootType::E6, 6, {{L::Single, 1}}), 14, 14},
      {Family::EII, "E6p2", "E6^2/SU6Sp1", 40, 4, 38, {K::E6, 0, false},
       rrs(RootType::F4, 4, {{L::Short, 2}, {L::Long, 1}}), 12, 12},
      {Family::EIII, "E6m14", "E6^-14/Spin10U1", 32, 2, 46, {K::E6, 0, false},
       rrs(RootType::BC, 2, {{L::Short, 8}, {L::Long, 6}, {L::ExtraLong, 1}}),
       std::nullopt, 12},
      {Family::EIV, "E6m26", "E6^-26/F4", 26, 2, 52, {K::E6, 0, false},
       rrs(RootType::A, 2, {{L::Single, 8}}), std::nullopt, 10},
      {Family::EV, "E7p7", "E7^7/SU8", 70, 7, 63, {K::E7, 0, false},
       rrs(RootType::E7, 7, {{L::Single, 1}}), 27, 27},
      {Family::EVI, "E7m5", "E7^-5/SO12Sp1", 64, 4, 69, {K::E7, 0, false},
       rrs(RootType::F4, 4, {{L::Short, 4}, {L::Long, 1}}), 24, 24},
      {Family::EVII, "E7m25", "E7^-25/E6U1", 54, 3, 79, {K::E7, 0, false},
       rrs(RootType::C, 3, {{L::Short, 8}, {L::Long, 1}}), 22, 22},
      {Family::EVIII, "E8p8", "E8^8/SO16", 128, 8, 120, {K::E8, 0, false},
       rrs(RootType::E8, 8, {{L::Single, 1}}), 56, 56},
      {Family::EIX, "E8m24", "E8^-24/E7Sp1", 112, 4, 136, {K::E8, 0, false},
       rrs(RootType::F4, 4, {{L::Short, 8}, {L::Long, 1}}), 48, 48},
      {Family::FI, "F4p4", "F4^4/Sp3Sp1", 28, 4, 24, {K::F4, 0, false},
       rrs(RootType::F4, 4, {{L::Short, 1}, {L::Long, 1}}), std::nullopt, 8},
      {Family::FII, "F4m20", "F4^-20/Spin9", 16, 1, 36, {K::F4, 0, false},
       rrs(RootType::BC, 1, {{L::Short, 8}, {L::ExtraLong, 7}}), std::nullopt, 8},
      {Family::G, "G2p2", "G2^2/SO4", 8, 2, 6, {K::G2, 0, false},
       rrs(RootType::G2, 2, {{L::Short, 1}, {L::Long, 1}}), std::nullopt, 3},
      {Family::E6C, "E6C", "E6(C)/E6", 78, 6, 78, {K::E6, 0, true},
       rrs(RootType::E6, 6, {{L::Single, 2}}), std::nullopt, std::nullopt},
      {Family::E7C, "E7C", "E7(C)/E7", 133, 7, 133, {K::E7, 0, true},
       rrs(RootType::E7, 7, {{L::Single, 2}}), std::nullopt, std::nullopt},
      {Family::E8C, "E8C", "E8(C)/E8", 248, 8, 248, {K::E8, 0, true},
       rrs(RootType::E8, 8, {{L::Single, 2}}), std::nullopt, std::nullopt},
      {Family::F4C, "F4C", "F4(C)/F4", 52, 4, 52, {K::F4, 0, true},
       rrs(RootType::F4, 4, {{L::Short, 2}, {L::Long, 2}}), std::nullopt, std::nullopt},
      {Family::G2C, "G2C", "G2(C)/G2", 14, 2, 14, {K::G2, 0, true},
       rrs(RootType::G2, 2, {{L::Short, 2}, {L::Long, 2}}), std::nullopt, std::nullopt},
  };
  return t;
}

std::string num(int n) { return std::to_string(n); }

// Builds the record for an already-canonical (family, params) pair.
SpaceRecord build_canonical(Family f, const std::vector<int>& p) {
  using K = GroupRef::Kind;
  using L = LengthClass;
  SpaceRecord s;
  s.family = f;
  s.params = p;

  auto finish = [&](int dim, int rank, int dim_k, int ell,
                    std::optional<RestrictedRootSystem> roots, GroupRef g,
                    std::string id, std::string label) {
    s.dim = dim;
    s.rank = rank;
    s.dim_isotropy = dim_k;
    s.ell = ell;
    if (ell != dim_k - dim + rank)
      throw Error("internal: ell identity violated for " + id);
    if (roots) {
      roots->validate();
      if (roots->rank != rank) throw Error("internal: root rank mismatch for " + id);
    }
    s.root_system = std::move(roots);
    s.isometry_group = g;
    s.id = std::move(id);
    s.label = std::move(label);
  };

  switch (f) {
    case Family::AI: {
      int r = p[0];
      finish(r * (r + 3) / 2, r, r * (r + 1) / 2, 0,
             rrs(RootType::A, r, {{L::Single, 1}}), {K::SU, r + 1, false},
             "AI(" + num(r) + ")", "SL" + num(r + 1) + "(R)/SO" + num(r + 1));
      break;
    }
    case Family::AII: {
      int r = p[0];
      finish(r * (2 * r + 3), r, (r + 1) * (2 * r + 3), 3 * (r + 1),
             rrs(RootType::A, r, {{L::Single, 4}}), {K::SU, 2 * r + 2, false},
             "AII(" + num(r) + ")", "SU*(" + num(2 * r + 2) + ")/Sp" + num(r + 1));
      break;
    }
    case Family::AIII: {
      int r = p[0], k = p[1];
      int q = r + k;
      std::optional<RestrictedRootSystem> roots;
      if (r == 1)
        roots = rrs(RootType::BC, 1, {{L::Short, 2 * k}, {L::ExtraLong, 1}});
      else if (k == 0)
        roots = rrs(RootType::C, r, {{L::Short, 2}, {L::Long, 1}});
      else
        roots = rrs(RootType::BC, r, {{L::Short, 2 * k}, {L::Long, 2}, {L::ExtraLong, 1}});
      std::string id, label;
      if (r == 1) {
        id = "CH" + num(k + 1);
        label = "CH^" + num(k + 1);
      } else {
        id = "AIII(" + num(r) + "," + num(k) + ")";
        label = "SU(" + num(r) + "," + num(q) + ")/S(U" + num(r) + "U" + num(q) + ")";
      }
      finish(2 * r * q, r, r * r + q * q - 1, k * k + r - 1, std::move(roots),
             {K::SU, 2 * r + k, false}, id, label);
      break;
    }
    case Family::BDI: {
      int r = p[0], k = p[1];
      int q = r + k;
      std::optional<RestrictedRootSystem> roots;
      if (r == 1)
        roots = rrs(RootType::A, 1, {{L::Single, k}});
      else if (k == 0)
        roots = rrs(RootType::D, r, {{L::Single, 1}});
      else
        roots = rrs(RootType::B, r, {{L::Short, k}, {L::Long, 1}});
      std::string id, label;
      if (r == 1) {
        id = "RH" + num(k + 1);
        label = "RH^" + num(k + 1);
      } else {
        id = "BDI(" + num(r) + "," + num(k) + ")";
        label = "SO(" + num(r) + "," + num(q) + ")/SO" + num(r) + "SO" + num(q);
      }
      finish(r * q, r, (r * (r - 1) + q * (q - 1)) / 2, k * (k - 1) / 2, std::move(roots),
             {K::SO, 2 * r + k, false}, id, label);
      break;
    }
    case Family::CI: {
      int r = p[0];
      finish(r * (r + 1), r, r * r, 0,
             rrs(RootType::C, r, {{L::Short, 1}, {L::Long, 1}}), {K::Sp, r, false},
             "CI(" + num(r) + ")", "Sp" + num(r) + "(R)/U" + num(r));
      break;
    }
    case Family::CII: {
      int r = p[0], k = p[1];
      int q = r + k;
      std::optional<RestrictedRootSystem> roots;
      if (r == 1)
        roots = rrs(RootType::BC, 1, {{L::Short, 4 * k}, {L::ExtraLong, 3}});
      else if (k == 0)
        roots = rrs(RootType::C, r, {{L::Short, 4}, {L::Long, 3}});
      else
        roots = rrs(RootType::BC, r, {{L::Short, 4 * k}, {L::Long, 4}, {L::ExtraLong, 3}});
      std::string id, label;
      if (r == 1) {
        id = "HH" + num(k + 1);
        label = "HH^" + num(k + 1);
      } else {
        id = "CII(" + num(r) + "," + num(k) + ")";
        label = "Sp(" + num(r) + "," + num(q) + ")/Sp" + num(r) + "Sp" + num(q);
      }
      finish(4 * r * q, r, r * (2 * r + 1) + q * (2 * q + 1), k * (2 * k + 1) + 3 * r,
             std::move(roots), {K::Sp, 2 * r + k, false}, id, label);
      break;
    }
    case Family::DIII: {
      int n = p[0];
      int r = n / 2;
      std::optional<RestrictedRootSystem> roots;
      int ell;
      if (n % 2 == 0) {
        roots = rrs(RootType::C, r, {{L::Short, 4}, {L::Long, 1}});
        ell = 3 * r;
      } else {
        roots = r == 1 ? rrs(RootType::BC, 1, {{L::Short, 4}, {L::ExtraLong, 1}})
                       : rrs(RootType::BC, r,
                             {{L::Short, 4}, {L::Long, 4}, {L::ExtraLong, 1}});
        ell = 3 * r + 1;
      }
      finish(n * (n - 1), r, n * n, ell, std::move(roots), {K::SO, 2 * n, false},
             "DIII(" + num(n) + ")", "SO*(" + num(2 * n) + ")/U" + num(n));
      break;
    }
    case Family::AC: {
      int r = p[0];
      finish(r * (r + 2), r, r * (r + 2), r, rrs(RootType::A, r, {{L::Single, 2}}),
             {K::SU, r + 1, true}, "AC(" + num(r) + ")",
             "SL" + num(r + 1) + "(C)/SU" + num(r + 1));
      break;
    }
    case Family::BC: {
      int r = p[0];
      finish(r * (2 * r + 1), r, r * (2 * r + 1), r,
             rrs(RootType::B, r, {{L::Short, 2}, {L::Long, 2}}), {K::SO, 2 * r + 1, true},
             "BC(" + num(r) + ")", "SO" + num(2 * r + 1) + "(C)/SO" + num(2 * r + 1));
      break;
    }
    case Family::CC: {
      int r = p[0];
      finish(r * (2 * r + 1), r, r * (2 * r + 1), r,
             rrs(RootType::C, r, {{L::Short, 2}, {L::Long, 2}}), {K::Sp, r, true},
             "CC(" + num(r) + ")", "Sp" + num(r) + "(C)/Sp" + num(r));
      break;
    }
    case Family::DC: {
      int r = p[0];
      finish(r * (2 * r - 1), r, r * (2 * r - 1), r,
             rrs(RootType::D, r, {{L::Single, 2}}), {K::SO, 2 * r, true},
             "DC(" + num(r) + ")", "SO" + num(2 * r) + "(C)/SO" + num(2 * r));
      break;
    }
    case Family::EUCLIDEAN: {
      int n = p[0];
      finish(n, n, 0, 0, std::nullopt, {}, "R" + num(n), "R^" + num(n));
      s.isometry_group = {};  // no simple isometry group
      break;
    }
    default: {
      for (const auto& e : exceptional_table()) {
        if (e.family == f) {
          finish(e.dim, e.rank, e.dim_k, e.dim_k - e.dim + e.rank, e.roots, e.group,
                 e.id, e.label);
          s.reflective_index = e.reflective_index;
          s.known_index = e.known_index;
          return s;
        }
      }
      throw Error("bad family");
    }
  }

  // Reflective indexes of the classical series: Sp_r(R)/U_r carries
  // i_r = 2(r-1) for r >= 3 (Berndt-Olmos 2016); other classical entries
  // have no stored value.
  if (f == Family::CI && p[0] >= 3) {
    s.reflective_index = 2 * (p[0] - 1);
    s.known_index = 2 * (p[0] - 1);
  }
  return s;
}

}  // namespace

std::pair<Family, std::vector<int>> canonical_form(Family f, const std::vector<int>& p) {
  check_params(f, p);
  using P = std::pair<Family, std::vector<int>>;
  switch (f) {
    case Family::AI:
      if (p[0] == 1) return P{Family::BDI, {1, 1}};  // SL2(R)/SO2 = RH^2
      break;
    case Family::AII:
      if (p[0] == 1) return P{Family::BDI, {1, 4}};  // SU*(4)/Sp2 = RH^5
      break;
    case Family::AIII:
      if (p[0] == 1 && p[1] == 0) return P{Family::BDI, {1, 1}};  // SU(1,1) = RH^2
      if (p[0] == 2 && p[1] == 0) return P{Family::BDI, {2, 2}};  // SU(2,2) = SO(2,4)
      break;
    case Family::BDI:
      if (p[0] == 3 && p[1] == 0) return P{Family::AI, {3}};  // SO(3,3) = SL4(R)
      break;
    case Family::CI:
      if (p[0] == 1) return P{Family::BDI, {1, 1}};  // Sp1(R)/U1 = RH^2
      if (p[0] == 2) return P{Family::BDI, {2, 1}};  // Sp2(R)/U2 = SO(2,3)
      break;
    case Family::CII:
      if (p[0] == 1 && p[1] == 0) return P{Family::BDI, {1, 3}};  // Sp(1,1) = RH^4
      break;
    case Family::DIII:
      if (p[0] == 3) return P{Family::AIII, {1, 2}};  // SO*(6)/U3 = CH^3
      if (p[0] == 4) return P{Family::BDI, {2, 4}};   // SO*(8)/U4 = SO(2,6)
      break;
    case Family::AC:
      if (p[0] == 1) return P{Family::BDI, {1, 2}};  // SL2(C)/SU2 = RH^3
      break;
    case Family::BC:
      if (p[0] == 1) return P{Family::BDI, {1, 2}};  // SO3(C)/SO3 = RH^3
      break;
    case Family::CC:
      if (p[0] == 1) return P{Family::BDI, {1, 2}};  // Sp1(C)/Sp1 = RH^3
      if (p[0] == 2) return P{Family::BC, {2}};      // Sp2(C) = SO5(C)
      break;
    case Family::DC:
      if (p[0] == 3) return P{Family::AC, {3}};  // SO6(C) = SL4(C)
      break;
    default:
      break;
  }
  return P{f, p};
}

SpaceRecord instantiate(Family f, const std::vector<int>& params) {
  auto [cf, cp] = canonical_form(f, params);
  return build_canonical(cf, cp);
}

int ProductSpace::dim() const {
  int d = euclidean_dim;
  for (const auto& f : factors) d += f.dim;
  return d;
}

int ProductSpace::rank() const {
  int r = euclidean_dim;
  for (const auto& f : factors) r += f.rank;
  return r;
}

int ProductSpace::ell() const {
  int e = 0;
  for (const auto& f : factors) e += f.ell;
  return e;
}

int ProductSpace::de_rham_factor_count() const {
  return static_cast<int>(factors.size()) + (euclidean_dim > 0 ? 1 : 0);
}

std::string ProductSpace::id() const {
  std::string out;
  if (euclidean_dim > 0) out = "R" + std::to_string(euclidean_dim);
  for (const auto& f : factors) {
    if (!out.empty()) out += " x ";
    out += f.id;
  }
  return out;
}

std::string ProductSpace::label() const {
  std::string out;
  if (euclidean_dim > 0) out = "R^" + std::to_string(euclidean_dim);
  for (const auto& f : factors) {
    if (!out.empty()) out += " x ";
    out += f.label;
  }
  return out;
}

ProductSpace make_product(std::vector<SpaceRecord> factors, int euclidean_dim) {
  if (euclidean_dim < 0) throw ParameterOutOfRange("euclidean dimension must be >= 0");
  ProductSpace p;
  p.euclidean_dim = euclidean_dim;
  for (auto& f : factors) {
    if (f.family == Family::EUCLIDEAN)
      p.euclidean_dim += f.dim;
    else
      p.factors.push_back(std::move(f));
  }
  if (p.factors.empty() && p.euclidean_dim == 0)
    throw EmptyProduct("product must have a factor or a Euclidean part");
  std::sort(p.factors.begin(), p.factors.end(),
            [](const SpaceRecord& a, const SpaceRecord& b) { return a.label < b.label; });
  return p;
}

namespace {

std::optional<std::vector<SpaceRecord>> g_override;

bool in_window(const SpaceRecord& s, int dmin, int dmax,
               const std::optional<std::set<int>>& ranks, std::optional<int> ell_max) {
  if (s.dim < dmin || s.dim > dmax) return false;
  if (ranks && !ranks->count(s.rank)) return false;
  if (ell_max && s.ell > *ell_max) return false;
  return true;
}

}  // namespace

void set_catalog_override(std::optional<std::vector<SpaceRecord>> records) {
  g_override = std::move(records);
}

bool catalog_override_active() { return g_override.has_value(); }

std::vector<SpaceRecord> scan(int dim_min, int dim_max,
                              const std::optional<std::set<int>>& rank_allowed,
                              std::optional<int> ell_max) {
  if (dim_min > dim_max) throw ParameterOutOfRange("scan: dim_min > dim_max");
  if (dim_max > 10000)
    throw WindowTooLarge("scan: dim_max exceeds the exhaustion bound 10000");

  std::map<std::string, SpaceRecord> found;
  auto consider = [&](Family f, std::vector<int> p) {
    SpaceRecord s = instantiate(f, std::move(p));
    if (in_window(s, dim_min, dim_max, rank_allowed, ell_max)) found.emplace(s.id, s);
  };

  if (g_override) {
    for (const auto& s : *g_override)
      if (in_window(s, dim_min, dim_max, rank_allowed, ell_max)) found.emplace(s.id, s);
  } else {
    const int D = dim_max;
    for (int r = 1; r * (r + 3) / 2 <= D; ++r) consider(Family::AI, {r});
    for (int r = 1; r * (2 * r + 3) <= D; ++r) consider(Family::AII, {r});
    for (int r = 1; 2 * r * r <= D; ++r)
      for (int k = 0; 2 * r * (r + k) <= D; ++k) consider(Family::AIII, {r, k});
    for (int r = 1; r * r <= D; ++r) {
      for (int k = 0; r * (r + k) <= D; ++k) {
        if ((r == 1 && k == 0) || (r == 2 && k == 0)) continue;
        consider(Family::BDI, {r, k});
      }
    }
    for (int r = 1; r * (r + 1) <= D; ++r) consider(Family::CI, {r});
    for (int r = 1; 4 * r * r <= D; ++r)
      for (int k = 0; 4 * r * (r + k) <= D; ++k) consider(Family::CII, {r, k});
    for (int n = 3; n * (n - 1) <= D; ++n) consider(Family::DIII, {n});
    for (int r = 1; r * (r + 2) <= D; ++r) consider(Family::AC, {r});
    for (int r = 1; r * (2 * r + 1) <= D; ++r) consider(Family::BC, {r});
    for (int r = 1; r * (2 * r + 1) <= D; ++r) consider(Family::CC, {r});
    for (int r = 3; r * (2 * r - 1) <= D; ++r) consider(Family::DC, {r});
    for (const auto& e : exceptional_table()) consider(e.family, {});
  }

  std::vector<SpaceRecord> out;
  out.reserve(found.size());
  for (auto& [id, s] : found) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(), [](const SpaceRecord& a, const SpaceRecord& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.label < b.label;
  });
  return out;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

const std::map<std::string, std::string>& exceptional_aliases() {
  // Cartan symbols and signature ids, all upper-case.
  static const std::map<std::string, std::string> m = {
      {"EI", "E6P6"},    {"EII", "E6P2"},   {"EIII", "E6M14"}, {"EIV", "E6M26"},
      {"EV", "E7P7"},    {"EVI", "E7M5"},   {"EVII", "E7M25"}, {"EVIII", "E8P8"},
      {"EIX", "E8M24"},  {"FI", "F4P4"},    {"FII", "F4M20"},  {"G", "G2P2"},
      {"OH2", "F4M20"},
  };
  return m;
}

std::optional<std::pair<std::string, int>> match_prefixed_int(const std::string& s,
                                                              const std::string& prefix) {
  if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0)
    return std::nullopt;
  for (size_t i = prefix.size(); i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  return std::make_pair(prefix, std::stoi(s.substr(prefix.size())));
}

}  // namespace

SpaceRecord resolve_space(const std::string& name) {
  std::string s = trim(name);
  if (s.empty()) throw UnknownSpace("empty space name");

  // Family expression "NAME(p1[,p2])"
  auto open = s.find('(');
  if (open != std::string::npos && s.back() == ')') {
    std::string fam = upper(trim(s.substr(0, open)));
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    std::vector<int> params;
    std::stringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok = trim(tok);
      if (tok.empty()) throw ParseError("bad parameter list in " + name);
      try {
        params.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ParseError("bad parameter '" + tok + "' in " + name);
      }
    }
    auto it = family_names().find(fam);
    if (it == family_names().end()) throw UnknownSpace("unknown family: " + fam);
    return instantiate(it->second, params);
  }

  std::string u = upper(s);
  if (auto a = exceptional_aliases().find(u); a != exceptional_aliases().end()) u = a->second;
  for (const auto& e : exceptional_table())
    if (upper(e.id) == u) return instantiate(e.family, {});

  if (auto m = match_prefixed_int(u, "RH")) {
    if (m->second < 2) throw ParameterOutOfRange("RH^k requires k >= 2");
    return instantiate(Family::BDI, {1, m->second - 1});
  }
  if (auto m = match_prefixed_int(u, "CH")) {
    if (m->second < 2) throw ParameterOutOfRange("CH^k requires k >= 2");
    return instantiate(Family::AIII, {1, m->second - 1});
  }
  if (auto m = match_prefixed_int(u, "HH")) {
    if (m->second < 2) throw ParameterOutOfRange("HH^k requires k >= 2");
    return instantiate(Family::CII, {1, m->second - 1});
  }
  if (auto m = match_prefixed_int(u, "OH")) {
    if (m->second != 2) throw ParameterOutOfRange("OH^k exists only for k = 2");
    return instantiate(Family::FII, {});
  }
  if (auto m = match_prefixed_int(u, "R")) return instantiate(Family::EUCLIDEAN, {m->second});

  // Display labels and override entries.
  if (g_override) {
    for (const auto& rec : *g_override)
      if (rec.id == s || rec.label == s) return rec;
  }
  for (const auto& e : exceptional_table())
    if (e.label == s) return instantiate(e.family, {});

  throw UnknownSpace("unknown space: " + name);
}

ProductSpace parse_product(const std::string& expr) {
  std::vector<SpaceRecord> factors;
  int euclid = 0;
  std::string cur;
  auto flush = [&]() {
    std::string tok = trim(cur);
    cur.clear();
    if (tok.empty()) throw ParseError("empty factor in product expression: " + expr);
    SpaceRecord rec = resolve_space(tok);
    if (rec.family == Family::EUCLIDEAN)
      euclid += rec.dim;
    else
      factors.push_back(std::move(rec));
  };
  // No space name contains an 'x', so every 'x' separates factors.
  for (char c : expr) {
    if (c == 'x' || c == 'X')
      flush();
    else
      cur += c;
  }
  flush();
  return make_product(std::move(factors), euclid);
}

bool is_real_hyperbolic(const SpaceRecord& s) {
  return s.family == Family::BDI && s.params.size() == 2 && s.params[0] == 1;
}

bool is_complex_hyperbolic(const SpaceRecord& s) {
  return s.family == Family::AIII && s.params.size() == 2 && s.params[0] == 1;
}

bool is_sl3r(const SpaceRecord& s) {
  return s.family == Family::AI && s.params.size() == 1 && s.params[0] == 2;
}

bool is_so2_odd(const SpaceRecord& s) {
  return s.family == Family::BDI && s.params.size() == 2 && s.params[0] == 2 &&
         s.params[1] >= 1 && s.params[1] % 2 == 1;
}

bool has_constant_curvature(const SpaceRecord& s) { return is_real_hyperbolic(s); }

}  // namespace symidx
