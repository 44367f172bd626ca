#include "symidx/rootsys.hpp"

#include <algorithm>
#include <map>

#include "symidx/rational.hpp"

namespace symidx {

std::string root_type_name(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::BC: return "BC";
    case RootType::E6: return "E6";
    case RootType::E7: return "E7";
    case RootType::E8: return "E8";
    case RootType::F4: return "F4";
    case RootType::G2: return "G2";
  }
  throw Error("bad root type");
}

RootType root_type_from_name(const std::string& s) {
  if (s == "A") return RootType::A;
  if (s == "B") return RootType::B;
  if (s == "C") return RootType::C;
  if (s == "D") return RootType::D;
  if (s == "BC") return RootType::BC;
  if (s == "E6") return RootType::E6;
  if (s == "E7") return RootType::E7;
  if (s == "E8") return RootType::E8;
  if (s == "F4") return RootType::F4;
  if (s == "G2") return RootType::G2;
  throw ParseError("unknown root system type: " + s);
}

std::string length_class_name(LengthClass c) {
  switch (c) {
    case LengthClass::Single: return "single";
    case LengthClass::Short: return "short";
    case LengthClass::Long: return "long";
    case LengthClass::ExtraLong: return "extra_long";
  }
  throw Error("bad length class");
}

LengthClass length_class_from_name(const std::string& s) {
  if (s == "single") return LengthClass::Single;
  if (s == "short") return LengthClass::Short;
  if (s == "long") return LengthClass::Long;
  if (s == "extra_long") return LengthClass::ExtraLong;
  throw ParseError("unknown length class: " + s);
}

std::vector<LengthClass> length_classes_of(RootType t, int rank) {
  switch (t) {
    case RootType::A:
    case RootType::D:
    case RootType::E6:
    case RootType::E7:
    case RootType::E8:
      return {LengthClass::Single};
    case RootType::B:
      return rank == 1 ? std::vector<LengthClass>{LengthClass::Short}
                       : std::vector<LengthClass>{LengthClass::Short, LengthClass::Long};
    case RootType::C:
      return rank == 1 ? std::vector<LengthClass>{LengthClass::Long}
                       : std::vector<LengthClass>{LengthClass::Short, LengthClass::Long};
    case RootType::F4:
    case RootType::G2:
      return {LengthClass::Short, LengthClass::Long};
    case RootType::BC:
      return rank == 1
                 ? std::vector<LengthClass>{LengthClass::Short, LengthClass::ExtraLong}
                 : std::vector<LengthClass>{LengthClass::Short, LengthClass::Long,
                                            LengthClass::ExtraLong};
  }
  throw Error("bad root type");
}

int RestrictedRootSystem::multiplicity(LengthClass c) const {
  auto it = multiplicities.find(c);
  if (it == multiplicities.end())
    throw Error("root system " + root_type_name(type) + std::to_string(rank) +
                " has no class " + length_class_name(c));
  return it->second;
}

void RestrictedRootSystem::validate() const {
  if (rank < 1) throw Error("root system rank must be >= 1");
  auto fixed = [&](int r) {
    if (rank != r)
      throw Error("root system " + root_type_name(type) + " has fixed rank " +
                  std::to_string(r));
  };
  switch (type) {
    case RootType::E6: fixed(6); break;
    case RootType::E7: fixed(7); break;
    case RootType::E8: fixed(8); break;
    case RootType::F4: fixed(4); break;
    case RootType::G2: fixed(2); break;
    default: break;
  }
  auto classes = length_classes_of(type, rank);
  if (multiplicities.size() != classes.size())
    throw Error("root system multiplicity table has wrong class set");
  for (auto c : classes) {
    auto it = multiplicities.find(c);
    if (it == multiplicities.end() || it->second < 1)
      throw Error("missing or non-positive multiplicity for class " + length_class_name(c));
  }
}

int RootVectorSet::find(const RootVec& v) const {
  auto it = std::lower_bound(
      roots.begin(), roots.end(), v, [](const RootVec& a, const RootVec& b) {
        long long na = 0, nb = 0;
        for (int x : a) na += static_cast<long long>(x) * x;
        for (int x : b) nb += static_cast<long long>(x) * x;
        if (na != nb) return na < nb;
        return a < b;
      });
  if (it != roots.end() && *it == v) return static_cast<int>(it - roots.begin());
  return -1;
}

long long root_count(RootType type, int rank) {
  long long r = rank;
  switch (type) {
    case RootType::A: return r * (r + 1);
    case RootType::B: return 2 * r * r;
    case RootType::C: return 2 * r * r;
    case RootType::D: return 2 * r * (r - 1);
    case RootType::BC: return 2 * r * r + 2 * r;
    case RootType::G2: return 12;
    case RootType::F4: return 48;
    case RootType::E6: return 72;
    case RootType::E7: return 126;
    case RootType::E8: return 240;
  }
  throw Error("bad root type");
}

namespace {

long long norm2(const RootVec& v) {
  long long s = 0;
  for (int x : v) s += static_cast<long long>(x) * x;
  return s;
}

RootVec unit(int dim, int i, int c = 1) {
  RootVec v(dim, 0);
  v[i] = c;
  return v;
}

void push_pm_pairs(std::vector<RootVec>& out, int dim, int scale) {
  // +-s e_i +- s e_j for i < j
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          RootVec v(dim, 0);
          v[i] = si * scale;
          v[j] = sj * scale;
          out.push_back(v);
        }
}

LengthClass classify(RootType t, long long n2) {
  switch (t) {
    case RootType::A:
    case RootType::D:
    case RootType::E6:
    case RootType::E7:
    case RootType::E8:
      return LengthClass::Single;
    case RootType::B:
      return n2 == 1 ? LengthClass::Short : LengthClass::Long;
    case RootType::C:
      return n2 == 2 ? LengthClass::Short : LengthClass::Long;
    case RootType::BC:
      return n2 == 1 ? LengthClass::Short
                     : (n2 == 2 ? LengthClass::Long : LengthClass::ExtraLong);
    case RootType::F4:  // realization scaled by 2
      return n2 == 4 ? LengthClass::Short : LengthClass::Long;
    case RootType::G2:
      return n2 == 2 ? LengthClass::Short : LengthClass::Long;
  }
  throw Error("bad root type");
}

}  // namespace

RootVectorSet generate_roots(RootType type, int rank) {
  RootVectorSet out;
  out.type = type;
  out.rank = rank;

  auto need = [&](bool ok) {
    if (!ok)
      throw UnsupportedRank("unsupported rank " + std::to_string(rank) + " for type " +
                            root_type_name(type));
  };

  std::vector<RootVec>& R = out.roots;
  switch (type) {
    case RootType::A: {
      need(rank >= 1 && rank <= 8);
      int d = rank + 1;
      out.ambient_dim = d;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) {
            RootVec v(d, 0);
            v[i] = 1;
            v[j] = -1;
            R.push_back(v);
          }
      for (int i = 0; i < rank; ++i) {
        RootVec v(d, 0);
        v[i] = 1;
        v[i + 1] = -1;
        out.simple_roots.push_back(v);
      }
      break;
    }
    case RootType::B: {
      need(rank >= 1 && rank <= 8);
      int d = rank;
      out.ambient_dim = d;
      for (int i = 0; i < d; ++i)
        for (int s : {1, -1}) R.push_back(unit(d, i, s));
      push_pm_pairs(R, d, 1);
      for (int i = 0; i + 1 < rank; ++i) {
        RootVec v(d, 0);
        v[i] = 1;
        v[i + 1] = -1;
        out.simple_roots.push_back(v);
      }
      out.simple_roots.push_back(unit(d, rank - 1));
      break;
    }
    case RootType::C: {
      need(rank >= 1 && rank <= 8);
      int d = rank;
      out.ambient_dim = d;
      for (int i = 0; i < d; ++i)
        for (int s : {2, -2}) R.push_back(unit(d, i, s));
      push_pm_pairs(R, d, 1);
      for (int i = 0; i + 1 < rank; ++i) {
        RootVec v(d, 0);
        v[i] = 1;
        v[i + 1] = -1;
        out.simple_roots.push_back(v);
      }
      out.simple_roots.push_back(unit(d, rank - 1, 2));
      break;
    }
    case RootType::D: {
      need(rank >= 2 && rank <= 8);
      int d = rank;
      out.ambient_dim = d;
      push_pm_pairs(R, d, 1);
      for (int i = 0; i + 1 < rank; ++i) {
        RootVec v(d, 0);
        v[i] = 1;
        v[i + 1] = -1;
        out.simple_roots.push_back(v);
      }
      RootVec v(d, 0);
      v[rank - 2] = 1;
      v[rank - 1] = 1;
      out.simple_roots.push_back(v);
      break;
    }
    case RootType::BC: {
      need(rank >= 1 && rank <= 8);
      int d = rank;
      out.ambient_dim = d;
      for (int i = 0; i < d; ++i)
        for (int s : {1, -1, 2, -2}) R.push_back(unit(d, i, s));
      push_pm_pairs(R, d, 1);
      for (int i = 0; i + 1 < rank; ++i) {
        RootVec v(d, 0);
        v[i] = 1;
        v[i + 1] = -1;
        out.simple_roots.push_back(v);
      }
      out.simple_roots.push_back(unit(d, rank - 1));
      break;
    }
    case RootType::G2: {
      need(rank == 2);
      out.ambient_dim = 3;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) {
            RootVec v(3, 0);
            v[i] = 1;
            v[j] = -1;
            R.push_back(v);
          }
      for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
          RootVec v(3, -s);
          v[i] = 2 * s;
          R.push_back(v);
        }
      out.simple_roots.push_back({1, -1, 0});
      out.simple_roots.push_back({-2, 1, 1});
      break;
    }
    case RootType::F4: {
      // Scaled by 2 so half-integer roots become integral.
      need(rank == 4);
      out.ambient_dim = 4;
      for (int i = 0; i < 4; ++i)
        for (int s : {2, -2}) R.push_back(unit(4, i, s));
      push_pm_pairs(R, 4, 2);
      for (int m = 0; m < 16; ++m) {
        RootVec v(4);
        for (int i = 0; i < 4; ++i) v[i] = (m >> i) & 1 ? -1 : 1;
        R.push_back(v);
      }
      out.simple_roots.push_back({0, 2, -2, 0});
      out.simple_roots.push_back({0, 0, 2, -2});
      out.simple_roots.push_back({0, 0, 0, 2});
      out.simple_roots.push_back({1, -1, -1, -1});
      break;
    }
    case RootType::E8: {
      need(rank == 8);
      out.ambient_dim = 8;
      push_pm_pairs(R, 8, 2);
      for (int m = 0; m < 256; ++m) {
        RootVec v(8);
        int minus = 0;
        for (int i = 0; i < 8; ++i) {
          v[i] = (m >> i) & 1 ? -1 : 1;
          if (v[i] < 0) ++minus;
        }
        if (minus % 2 == 0) R.push_back(v);
      }
      out.simple_roots.push_back({1, -1, -1, -1, -1, -1, -1, 1});
      out.simple_roots.push_back({2, 2, 0, 0, 0, 0, 0, 0});
      for (int i = 0; i < 6; ++i) {
        RootVec v(8, 0);
        v[i] = -2;
        v[i + 1] = 2;
        out.simple_roots.push_back(v);
      }
      break;
    }
    case RootType::E7: {
      need(rank == 7);
      out.ambient_dim = 8;
      std::vector<RootVec> tmp;
      push_pm_pairs(tmp, 6, 2);
      for (auto& v : tmp) {
        v.resize(8, 0);
        R.push_back(v);
      }
      R.push_back({0, 0, 0, 0, 0, 0, 2, -2});
      R.push_back({0, 0, 0, 0, 0, 0, -2, 2});
      for (int m = 0; m < 64; ++m) {
        RootVec v(8);
        int minus = 0;
        for (int i = 0; i < 6; ++i) {
          v[i] = (m >> i) & 1 ? -1 : 1;
          if (v[i] < 0) ++minus;
        }
        v[6] = -1;
        v[7] = 1;
        if (minus % 2 == 1) {
          R.push_back(v);
          RootVec w(8);
          for (int i = 0; i < 8; ++i) w[i] = -v[i];
          R.push_back(w);
        }
      }
      out.simple_roots.push_back({1, -1, -1, -1, -1, -1, -1, 1});
      out.simple_roots.push_back({2, 2, 0, 0, 0, 0, 0, 0});
      for (int i = 0; i < 5; ++i) {
        RootVec v(8, 0);
        v[i] = -2;
        v[i + 1] = 2;
        out.simple_roots.push_back(v);
      }
      break;
    }
    case RootType::E6: {
      need(rank == 6);
      out.ambient_dim = 8;
      std::vector<RootVec> tmp;
      push_pm_pairs(tmp, 5, 2);
      for (auto& v : tmp) {
        v.resize(8, 0);
        R.push_back(v);
      }
      for (int m = 0; m < 32; ++m) {
        RootVec v(8);
        int minus = 0;
        for (int i = 0; i < 5; ++i) {
          v[i] = (m >> i) & 1 ? -1 : 1;
          if (v[i] < 0) ++minus;
        }
        v[5] = -1;
        v[6] = -1;
        v[7] = 1;
        if (minus % 2 == 0) {
          R.push_back(v);
          RootVec w(8);
          for (int i = 0; i < 8; ++i) w[i] = -v[i];
          R.push_back(w);
        }
      }
      out.simple_roots.push_back({1, -1, -1, -1, -1, -1, -1, 1});
      out.simple_roots.push_back({2, 2, 0, 0, 0, 0, 0, 0});
      for (int i = 0; i < 4; ++i) {
        RootVec v(8, 0);
        v[i] = -2;
        v[i + 1] = 2;
        out.simple_roots.push_back(v);
      }
      break;
    }
  }

  std::sort(R.begin(), R.end(), [](const RootVec& a, const RootVec& b) {
    long long na = norm2(a), nb = norm2(b);
    if (na != nb) return na < nb;
    return a < b;
  });
  R.erase(std::unique(R.begin(), R.end()), R.end());
  if (static_cast<long long>(R.size()) != root_count(type, rank))
    throw Error("internal: root count mismatch for " + root_type_name(type) +
                std::to_string(rank));

  out.length_class.reserve(R.size());
  for (const auto& v : R) out.length_class.push_back(classify(type, norm2(v)));
  return out;
}

namespace {

// Coefficients of v in the (independent) simple-root basis, solved exactly
// via the Gram matrix. Returns false if v is outside the span or the
// coefficients are not integral.
bool coefficients_in_basis(const std::vector<RootVec>& basis, const RootVec& v,
                           std::vector<long long>& out) {
  int r = static_cast<int>(basis.size());
  int d = static_cast<int>(v.size());
  // G c = b with G = gram(basis), b_i = <basis_i, v>
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r + 1));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      long long s = 0;
      for (int k = 0; k < d; ++k)
        s += static_cast<long long>(basis[i][k]) * basis[j][k];
      m[i][j] = Rational(s);
    }
    long long s = 0;
    for (int k = 0; k < d; ++k) s += static_cast<long long>(basis[i][k]) * v[k];
    m[i][r] = Rational(s);
  }
  for (int col = 0; col < r; ++col) {
    int piv = -1;
    for (int row = col; row < r; ++row)
      if (m[row][col].num != 0) { piv = row; break; }
    if (piv < 0) return false;
    std::swap(m[col], m[piv]);
    for (int row = 0; row < r; ++row) {
      if (row == col || m[row][col].num == 0) continue;
      // row -= (m[row][col]/m[col][col]) * colrow
      Rational f(m[row][col].num * m[col][col].den, m[row][col].den * m[col][col].num);
      for (int j = col; j <= r; ++j) {
        Rational sub(f.num * m[col][j].num, f.den * m[col][j].den);
        m[row][j] = Rational(m[row][j].num * sub.den - sub.num * m[row][j].den,
                             m[row][j].den * sub.den);
      }
    }
  }
  out.assign(r, 0);
  RootVec rebuilt(d, 0);
  for (int i = 0; i < r; ++i) {
    Rational c(m[i][r].num * m[i][i].den, m[i][r].den * m[i][i].num);
    if (c.den != 1) return false;
    out[i] = c.num;
    for (int k = 0; k < d; ++k) rebuilt[k] += static_cast<int>(c.num) * basis[i][k];
  }
  return rebuilt == v;  // rejects vectors outside the span
}

bool independent_with(const std::vector<RootVec>& chosen, const RootVec& next) {
  // Exact rank test over the rationals via Gaussian elimination (long long is
  // ample: entries stay tiny at these sizes).
  std::vector<std::vector<Rational>> m;
  for (const auto& v : chosen) {
    std::vector<Rational> row;
    for (int x : v) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  {
    std::vector<Rational> row;
    for (int x : next) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  size_t rank = 0;
  size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t col = 0; col < cols && rank < m.size(); ++col) {
    size_t piv = rank;
    while (piv < m.size() && m[piv][col].num == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    for (size_t row = rank + 1; row < m.size(); ++row) {
      if (m[row][col].num == 0) continue;
      Rational f(m[row][col].num * m[rank][col].den, m[row][col].den * m[rank][col].num);
      for (size_t j = col; j < cols; ++j) {
        Rational sub(f.num * m[rank][j].num, f.den * m[rank][j].den);
        m[row][j] = Rational(m[row][j].num * sub.den - sub.num * m[row][j].den,
                             m[row][j].den * sub.den);
      }
    }
    ++rank;
  }
  return rank == m.size();
}

struct Search {
  const RootVectorSet& src_roots;
  const RootVectorSet& dst_roots;
  const RestrictedRootSystem& src;
  const RestrictedRootSystem& dst;
  bool use_mult;

  std::vector<std::vector<long long>> coeff;       // per src root
  std::vector<std::vector<int>> roots_at_level;    // src root indices decided at level
  std::vector<RootVec> images;                     // simple-root images so far
  long long tried = 0;
  std::optional<EmbeddingWitness> found;

  bool admissible(int src_idx, const RootVec& image) const {
    int j = dst_roots.find(image);
    if (j < 0) return false;
    if (!use_mult) return true;
    return src.multiplicity(src_roots.length_class[src_idx]) <=
           dst.multiplicity(dst_roots.length_class[j]);
  }

  bool run(int level) {
    if (level == src_roots.rank) {
      found = EmbeddingWitness{images};
      return true;
    }
    int d = dst_roots.ambient_dim;
    for (const auto& cand : dst_roots.roots) {
      ++tried;
      (void)d;
      if (!independent_with(images, cand)) continue;
      images.push_back(cand);
      bool ok = true;
      for (int idx : roots_at_level[level]) {
        RootVec img(dst_roots.ambient_dim, 0);
        for (int k = 0; k <= level; ++k)
          for (int c = 0; c < dst_roots.ambient_dim; ++c)
            img[c] += static_cast<int>(coeff[idx][k]) * images[k][c];
        if (!admissible(idx, img)) { ok = false; break; }
      }
      if (ok && run(level + 1)) return true;
      images.pop_back();
    }
    return false;
  }
};

Search make_search(const RootVectorSet& S, const RootVectorSet& D,
                   const RestrictedRootSystem& src, const RestrictedRootSystem& dst,
                   bool use_mult) {
  Search s{S, D, src, dst, use_mult, {}, {}, {}, 0, std::nullopt};
  s.coeff.resize(S.roots.size());
  s.roots_at_level.assign(S.rank, {});
  for (size_t i = 0; i < S.roots.size(); ++i) {
    if (!coefficients_in_basis(S.simple_roots, S.roots[i], s.coeff[i]))
      throw Error("internal: src root outside simple-root span");
    int level = 0;
    for (int k = 0; k < S.rank; ++k)
      if (s.coeff[i][k] != 0) level = k;
    s.roots_at_level[level].push_back(static_cast<int>(i));
  }
  return s;
}

}  // namespace

EmbeddingResult embedding_exists(const RestrictedRootSystem& src,
                                 const RestrictedRootSystem& dst) {
  src.validate();
  dst.validate();
  if (src.rank != dst.rank)
    throw RankMismatch("embedding test requires equal ranks (" + std::to_string(src.rank) +
                       " vs " + std::to_string(dst.rank) + ")");
  if (src.rank > 4)
    throw UnsupportedRank("embedding search capped at rank 4, got rank " +
                          std::to_string(src.rank));

  RootVectorSet S = generate_roots(src.type, src.rank);
  RootVectorSet D = generate_roots(dst.type, dst.rank);

  EmbeddingResult res;

  Search with_mult = make_search(S, D, src, dst, true);
  if (with_mult.run(0)) {
    res.exists = true;
    res.witness = with_mult.found;
    res.assignments_tried = with_mult.tried;
    return res;
  }
  res.assignments_tried = with_mult.tried;

  // No admissible embedding. Distinguish a pure multiplicity obstruction from
  // the absence of any root-level linear embedding.
  Search roots_only = make_search(S, D, src, dst, false);
  if (roots_only.run(0)) {
    res.assignments_tried += roots_only.tried;
    const auto& w = *roots_only.found;
    for (size_t i = 0; i < S.roots.size(); ++i) {
      RootVec img(D.ambient_dim, 0);
      for (int k = 0; k < S.rank; ++k)
        for (int c = 0; c < D.ambient_dim; ++c)
          img[c] += static_cast<int>(roots_only.coeff[i][k]) * w.simple_images[k][c];
      int j = D.find(img);
      int ms = src.multiplicity(S.length_class[i]);
      int md = dst.multiplicity(D.length_class[j]);
      if (ms > md) {
        auto vec_str = [](const RootVec& v) {
          std::string s = "(";
          for (size_t t = 0; t < v.size(); ++t)
            s += (t ? "," : "") + std::to_string(v[t]);
          return s + ")";
        };
        res.obstruction = "multiplicity obstruction: roots can be matched but "
                          "multiplicities cannot; source root " + vec_str(S.roots[i]) +
                          " of multiplicity " + std::to_string(ms) +
                          " would land on " + vec_str(img) + " of multiplicity " +
                          std::to_string(md);
        return res;
      }
    }
    throw Error("internal: roots-only witness has no multiplicity violation");
  }
  res.assignments_tried += roots_only.tried;
  res.obstruction = "no injective linear map sends every source root to a destination "
                    "root (exhausted " + std::to_string(res.assignments_tried) +
                    " assignments)";
  return res;
}

bool check_embedding_witness(const RestrictedRootSystem& src,
                             const RestrictedRootSystem& dst,
                             const EmbeddingWitness& w) {
  RootVectorSet S = generate_roots(src.type, src.rank);
  RootVectorSet D = generate_roots(dst.type, dst.rank);
  if (static_cast<int>(w.simple_images.size()) != S.rank) return false;
  std::vector<RootVec> chosen;
  for (const auto& v : w.simple_images) {
    if (!independent_with(chosen, v)) return false;
    chosen.push_back(v);
  }
  for (size_t i = 0; i < S.roots.size(); ++i) {
    std::vector<long long> c;
    if (!coefficients_in_basis(S.simple_roots, S.roots[i], c)) return false;
    RootVec img(D.ambient_dim, 0);
    for (int k = 0; k < S.rank; ++k)
      for (int t = 0; t < D.ambient_dim; ++t)
        img[t] += static_cast<int>(c[k]) * w.simple_images[k][t];
    int j = D.find(img);
    if (j < 0) return false;
    if (src.multiplicity(S.length_class[i]) > dst.multiplicity(D.length_class[j]))
      return false;
  }
  return true;
}

}  // namespace symidx
