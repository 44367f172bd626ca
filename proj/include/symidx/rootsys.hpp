#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symidx/errors.hpp"

namespace symidx {

enum class RootType { A, B, C, D, BC, E6, E7, E8, F4, G2 };

std::string root_type_name(RootType t);
RootType root_type_from_name(const std::string& s);

// Length classes of a restricted root system. Simply-laced systems have the
// Single class; B/C/F4/G2 split into Short/Long; non-reduced BC systems carry
// Short (e_i), Long (e_i +- e_j) and ExtraLong (2 e_i).
enum class LengthClass { Single, Short, Long, ExtraLong };

std::string length_class_name(LengthClass c);
LengthClass length_class_from_name(const std::string& s);

// Which length classes the abstract system of this type and rank possesses.
std::vector<LengthClass> length_classes_of(RootType t, int rank);

// Abstract restricted root system: type, rank, multiplicity per length class.
struct RestrictedRootSystem {
  RootType type = RootType::A;
  int rank = 0;
  std::map<LengthClass, int> multiplicities;

  int multiplicity(LengthClass c) const;
  void validate() const;  // throws Error on malformed data

  friend bool operator==(const RestrictedRootSystem&, const RestrictedRootSystem&) = default;
};

using RootVec = std::vector<int>;

// Concrete realization with integer coordinates (F4/E6/E7/E8 are scaled by 2
// so that all coordinates stay integral). Roots are sorted by
// (squared length, lexicographic) and are closed under negation.
struct RootVectorSet {
  RootType type = RootType::A;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<RootVec> roots;
  std::vector<LengthClass> length_class;  // parallel to roots
  std::vector<RootVec> simple_roots;      // a root basis, size == rank

  int find(const RootVec& v) const;       // index or -1
  long long count() const { return static_cast<long long>(roots.size()); }
};

// Full root set in the standard realization; deterministic order.
// Supported: A/B/C/BC rank 1..8, D rank 2..8, G2, F4, E6, E7, E8.
RootVectorSet generate_roots(RootType type, int rank);

// Number of roots of the abstract system (classical closed forms).
long long root_count(RootType type, int rank);

struct EmbeddingWitness {
  // Images of the source system's simple roots inside the destination
  // realization, in simple-root order.
  std::vector<RootVec> simple_images;
};

struct EmbeddingResult {
  bool exists = false;
  std::optional<EmbeddingWitness> witness;
  std::string obstruction;         // empty when exists
  long long assignments_tried = 0; // leaves visited across both search passes
};

// Decides whether there is an injective linear map sending every src root to
// a dst root with mult_src(alpha) <= mult_dst(image of alpha). Exhaustive
// backtracking over images of the src simple roots; first witness in
// (squared length, lexicographic) order is returned. Equal ranks only, and
// ranks are capped at 4 so exhaustion stays cheap.
EmbeddingResult embedding_exists(const RestrictedRootSystem& src,
                                 const RestrictedRootSystem& dst);

// Replays a witness independently of the search: checks injectivity and that
// every src root lands on a dst root with admissible multiplicity.
bool check_embedding_witness(const RestrictedRootSystem& src,
                             const RestrictedRootSystem& dst,
                             const EmbeddingWitness& w);

}  // namespace symidx
