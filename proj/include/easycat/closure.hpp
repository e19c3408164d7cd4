#pragma once

// Bounded categorial hulls and classification of generated categories.
//
// A closure is computed on the lower-row forms P(0,n): a partition of P(k,l)
// belongs to a category iff its redrawing in P(0,k+l) does, so the engine
// stores one linear sequence per class and expands to every shape at the end.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "easycat/catalog.hpp"
#include "easycat/partition.hpp"

namespace easycat {

inline constexpr std::size_t kDefaultPointBudget = 8;
inline constexpr std::size_t kDefaultIntermediateBudget = 16;
inline constexpr std::size_t kMaxPointBudget = 24;
inline constexpr std::size_t kMaxIntermediateBudget = 64;

struct ClosureOptions {
  std::size_t point_budget = kDefaultPointBudget;
  std::size_t intermediate_budget = kDefaultIntermediateBudget;
  // Stop at the end of the first round in which all of these are present.
  std::vector<Partition> stop_when_found;
  // 0 means one worker per hardware thread.
  unsigned threads = 0;
};

struct ClosureSet {
  std::vector<Partition> generators;
  std::size_t point_budget = 0;
  std::size_t intermediate_budget = 0;
  // Every shape P(k,l) with k+l <= point_budget, sorted.
  std::vector<Partition> elements;
  bool saturated = false;
  std::size_t rounds = 0;

  // Sorted lower-row forms of the stored elements.
  std::vector<Partition> linear_forms;
  // Lower-row forms of generators larger than point_budget (with rotations
  // and reflections). They take part in every round but are not elements.
  std::vector<Partition> seed_forms;
};

ClosureSet generate_closure(const std::vector<Partition>& generators,
                            const ClosureOptions& options);
ClosureSet generate_closure(const std::vector<Partition>& generators,
                            std::size_t point_budget = kDefaultPointBudget,
                            std::size_t intermediate_budget =
                                kDefaultIntermediateBudget);

enum class Membership { Confirmed, NotFoundWithinBudget };

std::string_view to_string(Membership m);

// Throws BudgetError when p has more than point_budget points.
Membership closure_contains(const ClosureSet& c, const Partition& p);

// Elements of shape P(0,k).
std::vector<Partition> closure_lower_row(const ClosureSet& c, std::size_t k);

enum class WorldKind { Free7, Classical6, HalfLib, Series, Undetermined };

struct Evidence {
  Partition witness;
  std::string reason;
};

struct Classification {
  WorldKind world = WorldKind::Undetermined;
  std::optional<CategoryId> category;
  int series = 0;  // s for WorldKind::Series
  std::vector<Evidence> evidence;
  // Zero for the exact (budget independent) classifiers.
  std::size_t point_budget = 0;
  std::size_t intermediate_budget = 0;
  bool saturated = false;
};

// "Free7", "Classical6", "HalfLib", "Series(s)", "Undetermined".
std::string world_text(const Classification& c);
// Catalog identifier, "H^(s)" with s filled in, or "?".
std::string name_text(const Classification& c);
// key=value lines; evidence lines are "evidence=<partition> | <reason>".
std::string to_record(const Classification& c);

Classification classify_noncrossing(const std::vector<Partition>& generators);
Classification classify_classical(const std::vector<Partition>& generators);

struct Budgets {
  std::size_t point_budget = kDefaultPointBudget;
  std::size_t intermediate_budget = kDefaultIntermediateBudget;
};

Classification classify_easy(const std::vector<Partition>& generators,
                             Budgets budgets = {});

}  // namespace easycat
