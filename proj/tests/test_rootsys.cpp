#include <doctest.h>

#include <algorithm>
#include <random>

#include "symidx/rootsys.hpp"

using namespace symidx;

namespace {

RestrictedRootSystem c3(int short_m, int long_m) {
  RestrictedRootSystem r{RootType::C, 3, {}};
  r.multiplicities[LengthClass::Short] = short_m;
  r.multiplicities[LengthClass::Long] = long_m;
  return r;
}

}  // namespace

TEST_CASE("root counts match the classical formulas") {
  for (int r = 1; r <= 8; ++r) {
    CHECK(generate_roots(RootType::A, r).count() == r * (r + 1));
    CHECK(generate_roots(RootType::B, r).count() == 2 * r * r);
    CHECK(generate_roots(RootType::C, r).count() == 2 * r * r);
    CHECK(generate_roots(RootType::BC, r).count() == 2 * r * r + 2 * r);
    if (r >= 2) CHECK(generate_roots(RootType::D, r).count() == 2 * r * (r - 1));
  }
  CHECK(generate_roots(RootType::G2, 2).count() == 12);
  CHECK(generate_roots(RootType::F4, 4).count() == 48);
  CHECK(generate_roots(RootType::E6, 6).count() == 72);
  CHECK(generate_roots(RootType::E7, 7).count() == 126);
  CHECK(generate_roots(RootType::E8, 8).count() == 240);
}

TEST_CASE("C3 realization has 12 short and 6 long roots, closed under negation") {
  RootVectorSet c = generate_roots(RootType::C, 3);
  REQUIRE(c.count() == 18);
  int short_n = 0, long_n = 0;
  for (size_t i = 0; i < c.roots.size(); ++i) {
    if (c.length_class[i] == LengthClass::Short) ++short_n;
    if (c.length_class[i] == LengthClass::Long) ++long_n;
    RootVec neg = c.roots[i];
    for (int& x : neg) x = -x;
    CHECK(c.find(neg) >= 0);
  }
  CHECK(short_n == 12);
  CHECK(long_n == 6);
  CHECK(c.find({0, 0, 2}) >= 0);
  CHECK(c.find({1, -1, 0}) >= 0);
  CHECK(c.find({1, 1, 1}) == -1);
}

TEST_CASE("A1 has exactly one root pair") {
  RootVectorSet a = generate_roots(RootType::A, 1);
  REQUIRE(a.count() == 2);
  CHECK(a.find({1, -1}) >= 0);
  CHECK(a.find({-1, 1}) >= 0);
}

TEST_CASE("unsupported ranks are rejected") {
  CHECK_THROWS_AS(generate_roots(RootType::A, 9), UnsupportedRank);
  CHECK_THROWS_AS(generate_roots(RootType::G2, 3), UnsupportedRank);
  CHECK_THROWS_AS(generate_roots(RootType::D, 1), UnsupportedRank);
}

TEST_CASE("the C3(4,3) -> C3(8,1) embedding fails on long-root multiplicities") {
  EmbeddingResult r = embedding_exists(c3(4, 3), c3(8, 1));
  CHECK_FALSE(r.exists);
  CHECK(r.obstruction.find("multiplicity") != std::string::npos);
  CHECK(r.assignments_tried > 0);
}

TEST_CASE("C3(4,1) embeds into C3(8,1) and the witness replays") {
  EmbeddingResult r = embedding_exists(c3(4, 1), c3(8, 1));
  REQUIRE(r.exists);
  REQUIRE(r.witness.has_value());
  CHECK(check_embedding_witness(c3(4, 1), c3(8, 1), *r.witness));
}

TEST_CASE("embedding is reflexive for all supported systems up to rank 4") {
  std::vector<RestrictedRootSystem> systems;
  auto with_mults = [](RootType t, int rank, int m) {
    RestrictedRootSystem r{t, rank, {}};
    for (LengthClass c : length_classes_of(t, rank)) r.multiplicities[c] = m;
    return r;
  };
  for (int rank = 1; rank <= 4; ++rank) {
    systems.push_back(with_mults(RootType::A, rank, 2));
    systems.push_back(with_mults(RootType::B, rank, 1));
    systems.push_back(with_mults(RootType::C, rank, 3));
    systems.push_back(with_mults(RootType::BC, rank, 4));
    if (rank >= 2) systems.push_back(with_mults(RootType::D, rank, 1));
  }
  systems.push_back(with_mults(RootType::G2, 2, 1));
  systems.push_back(with_mults(RootType::F4, 4, 2));
  for (const auto& s : systems) {
    CAPTURE(root_type_name(s.type));
    CAPTURE(s.rank);
    EmbeddingResult r = embedding_exists(s, s);
    CHECK(r.exists);
    REQUIRE(r.witness.has_value());
    CHECK(check_embedding_witness(s, s, *r.witness));
  }
}

TEST_CASE("embedding is monotone in destination multiplicities") {
  // If src embeds in dst and dst' dominates dst pointwise, src embeds in dst'.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> mult(1, 6), bump(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    RestrictedRootSystem src = c3(mult(rng), mult(rng));
    RestrictedRootSystem dst = c3(mult(rng), mult(rng));
    RestrictedRootSystem bigger =
        c3(dst.multiplicity(LengthClass::Short) + bump(rng),
           dst.multiplicity(LengthClass::Long) + bump(rng));
    if (embedding_exists(src, dst).exists) CHECK(embedding_exists(src, bigger).exists);
  }
}

TEST_CASE("BC3 cannot map into C3: too many roots for an injection") {
  RestrictedRootSystem bc3{RootType::BC, 3,
                           {{LengthClass::Short, 6},
                            {LengthClass::Long, 2},
                            {LengthClass::ExtraLong, 1}}};
  EmbeddingResult r = embedding_exists(bc3, c3(8, 1));
  CHECK_FALSE(r.exists);
  CHECK(r.obstruction.find("no injective linear map") != std::string::npos);
}

TEST_CASE("rank preconditions of the embedding test") {
  RestrictedRootSystem a2{RootType::A, 2, {{LengthClass::Single, 1}}};
  CHECK_THROWS_AS(embedding_exists(a2, c3(4, 3)), RankMismatch);
  RestrictedRootSystem e6{RootType::E6, 6, {{LengthClass::Single, 1}}};
  CHECK_THROWS_AS(embedding_exists(e6, e6), UnsupportedRank);
}

TEST_CASE("root system validation") {
  RestrictedRootSystem bad{RootType::F4, 3,
                           {{LengthClass::Short, 1}, {LengthClass::Long, 1}}};
  CHECK_THROWS_AS(bad.validate(), Error);
  RestrictedRootSystem missing{RootType::C, 3, {{LengthClass::Short, 1}}};
  CHECK_THROWS_AS(missing.validate(), Error);
}
