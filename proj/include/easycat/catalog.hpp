#pragma once

// Named partitions and named categories of partitions, with exact membership
// predicates wherever a block-structure description exists.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "easycat/partition.hpp"

namespace easycat {

enum class NamedKind {
  Unit,             // {u1,l1} in P(1,1)
  Pair,             // {l1,l2} in P(0,2)
  Singleton,        // {l1} in P(0,1)
  DoubleSingleton,  // {l1}{l2} in P(0,2)
  Block,            // one block on P(0,s)
  FourBlock,        // Block(4)
  Positioner,       // {l1}{l2,l4}{l3}
  Crossing,         // {u1,l2}{u2,l1}
  HalfLib,          // {u1,l3}{u2,l2}{u3,l1}
  H,                // h_s: {l1,l3,...}{l2,l4,...} in P(0,2s)
  K,                // k_l in P(l+2,l+2)
  FatCrossing,      // {u1,u2,l3,l4}{u3,u4,l1,l2}
};

struct NamedPartition {
  NamedKind kind = NamedKind::Unit;
  int param = 0;  // s for Block and H, l for K
};

Partition named_partition(NamedKind kind, int param = 0);
inline Partition named_partition(NamedPartition np) {
  return named_partition(np.kind, np.param);
}

// Accepts "unit", "pair", "singleton", "double-singleton", "block:<s>",
// "fourblock", "positioner", "crossing", "halflib", "h:<s>", "k:<l>",
// "fatcross".
NamedPartition parse_named_partition(std::string_view name);
std::string to_string(NamedPartition np);

enum class CategoryId {
  // noncrossing ("free") world
  OFree, HFree, SPrimeFree, SFree, BSharpFree, BPrimeFree, BFree,
  // classical world (crossing adjoined)
  O, H, SPrime, S, BPrime, B,
  // half-liberated world
  OStar, HStar, BSharpStar,
  // generator-only categories
  HSeries, FatCross,
};

enum class World { Noncrossing, Classical, HalfLiberated, HyperoctahedralSeries };

// Stable text identifiers: "O+", "H+", "S'+", "S+", "B#+", "B'+", "B+", "O",
// "H", "S'", "S", "B'", "B", "O*", "H*", "B#*", "H^(s)", "fatcross".
std::string_view category_name(CategoryId id);
CategoryId parse_category(std::string_view name);

using Predicate = std::function<bool(const Partition&)>;

bool has_predicate(CategoryId id);
// Throws NoPredicate for HSeries and FatCross.
Predicate category_predicate(CategoryId id);
bool in_category(CategoryId id, const Partition& p);

struct CatalogEntry {
  CategoryId id;
  std::string_view name;
  World world;
  std::vector<NamedPartition> generators;  // H^(s) lists h_s with param 0
  bool has_predicate;
};

// Every named category, in declaration order of CategoryId.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(CategoryId id);

// Generators of a catalog category as partitions; `series_s` fills in s for
// H^(s) (must be >= 3).
std::vector<Partition> catalog_generators(CategoryId id, int series_s = 3);

// All p in P(0,total_points) satisfying the predicate, canonical order.
std::vector<Partition> enumerate_category(CategoryId id,
                                          std::size_t total_points);

// The seven noncrossing categories, the six classical ones, and the
// inclusion order inside each world.
const std::vector<CategoryId>& free_categories();
const std::vector<CategoryId>& classical_categories();
const std::vector<CategoryId>& halflib_categories();
// a is contained in b (same world only; reflexive)
bool category_included(CategoryId a, CategoryId b);

}  // namespace easycat
