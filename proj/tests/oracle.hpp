#pragma once

// Brute-force reference implementations used by the tests only. They share no
// iteration logic with the library: the scanner walks fixed parameter boxes
// and filters afterwards, the candidate generator runs plain nested loops
// over the factor pool with nothing but a dimension budget.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "symidx/catalog.hpp"
#include "symidx/invariants.hpp"

namespace oracle {

inline std::vector<symidx::SpaceRecord> brute_scan(
    int dim_min, int dim_max,
    const std::optional<std::set<int>>& ranks = std::nullopt,
    std::optional<int> ell_max = std::nullopt) {
  using namespace symidx;
  std::map<std::string, SpaceRecord> found;
  auto keep = [&](const SpaceRecord& s) {
    if (s.dim < dim_min || s.dim > dim_max) return;
    if (ranks && !ranks->count(s.rank)) return;
    if (ell_max && s.ell > *ell_max) return;
    found.emplace(s.id, s);
  };
  auto attempt = [&](Family f, std::vector<int> p) {
    try {
      keep(instantiate(f, p));
    } catch (const ParameterOutOfRange&) {
    }
  };
  // Fixed boxes, generous for any window with dim_max <= 150: every family's
  // dimension exceeds 150 well before r or k reaches these caps.
  for (Family f : {Family::AI, Family::AII, Family::CI, Family::DIII, Family::AC,
                   Family::BC, Family::CC, Family::DC})
    for (int r = 1; r <= 200; ++r) attempt(f, {r});
  for (Family f : {Family::AIII, Family::BDI, Family::CII})
    for (int r = 1; r <= 160; ++r)
      for (int k = 0; k <= 400; ++k) attempt(f, {r, k});
  for (Family f : {Family::EI, Family::EII, Family::EIII, Family::EIV, Family::EV,
                   Family::EVI, Family::EVII, Family::EVIII, Family::EIX, Family::FI,
                   Family::FII, Family::G, Family::E6C, Family::E7C, Family::E8C,
                   Family::F4C, Family::G2C})
    attempt(f, {});

  std::vector<SpaceRecord> out;
  for (auto& [id, s] : found) out.push_back(s);
  std::sort(out.begin(), out.end(), [](const SpaceRecord& a, const SpaceRecord& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.label < b.label;
  });
  return out;
}

// Every semisimple product with dim in the window, rank <= rank(M) and
// Lambda <= lambda_max(M): nested non-decreasing index loops over the pool,
// cut only by the dimension budget.
inline std::vector<std::string> brute_candidate_ids(const symidx::SpaceRecord& m,
                                                    const std::set<int>& codims) {
  using namespace symidx;
  const int lmax = lambda_max(m);
  std::vector<std::string> ids;
  if (lmax < 0) return ids;
  std::set<int> dims;
  int dim_max = 0;
  for (int c : codims) {
    dims.insert(m.dim - c);
    dim_max = std::max(dim_max, m.dim - c);
  }
  std::vector<SpaceRecord> pool = brute_scan(2, dim_max);
  std::vector<size_t> pick;
  auto leaf = [&]() {
    int d = 0, r = 0, e = 0;
    for (size_t i : pick) {
      d += pool[i].dim;
      r += pool[i].rank;
      e += pool[i].ell;
    }
    if (!dims.count(d) || r > m.rank) return;
    if ((m.rank - r) + e > lmax) return;
    std::vector<SpaceRecord> factors;
    for (size_t i : pick) factors.push_back(pool[i]);
    ids.push_back(make_product(factors, 0).id());
  };
  auto loops = [&](auto&& self, size_t start, int dim_sum) -> void {
    if (!pick.empty()) leaf();
    if (static_cast<int>(pick.size()) >= m.rank) return;  // each factor has rank >= 1
    for (size_t i = start; i < pool.size(); ++i) {
      if (dim_sum + pool[i].dim > dim_max) break;  // pool sorted by dim
      pick.push_back(i);
      self(self, i, dim_sum + pool[i].dim);
      pick.pop_back();
    }
  };
  loops(loops, 0, 0);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace oracle
