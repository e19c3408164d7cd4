#include <catch_amalgamated.hpp>

#include "easycat/catalog.hpp"
#include "easycat/category_ops.hpp"
#include "easycat/closure.hpp"
#include "easycat/error.hpp"

using namespace easycat;

namespace {

Partition named(NamedKind k, int param = 0) { return named_partition(k, param); }

const Partition kSingle = named(NamedKind::Singleton);
const Partition kDouble = named(NamedKind::DoubleSingleton);
const Partition kFour = named(NamedKind::FourBlock);
const Partition kPositioner = named(NamedKind::Positioner);
const Partition kCrossing = named(NamedKind::Crossing);
const Partition kHalfLib = named(NamedKind::HalfLib);

bool has_evidence(const Classification& c, const std::string& reason) {
  for (const auto& e : c.evidence)
    if (e.reason == reason) return true;
  return false;
}

}  // namespace

TEST_CASE("closure of the empty generator set is the noncrossing pairings") {
  const ClosureSet c = generate_closure({}, 6, 12);
  CHECK(c.saturated);
  const std::size_t catalan[] = {1, 0, 1, 0, 2, 0, 5};
  for (std::size_t k = 0; k <= 6; ++k) CHECK(closure_lower_row(c, k).size() == catalan[k]);
  CHECK(closure_contains(c, named(NamedKind::Unit)) == Membership::Confirmed);
  CHECK(closure_contains(c, kCrossing) == Membership::NotFoundWithinBudget);
  for (const auto& p : c.elements) CHECK(in_category(CategoryId::OFree, p));
}

TEST_CASE("closure examples") {
  CHECK(closure_contains(generate_closure({kSingle}, 4, 8), kPositioner) == Membership::Confirmed);
  CHECK(closure_contains(generate_closure({kPositioner}, 4, 8), kDouble) == Membership::Confirmed);
  // generators larger than the point budget still act as seeds
  CHECK(closure_contains(generate_closure({kPositioner}, 2, 8), kDouble) == Membership::Confirmed);
  CHECK(closure_contains(generate_closure({kDouble, kFour}, 8, 16), kSingle) ==
        Membership::NotFoundWithinBudget);
  CHECK(closure_contains(generate_closure({kFour}, 8, 16), named(NamedKind::Block, 6)) ==
        Membership::Confirmed);
}

TEST_CASE("closure budget errors") {
  CHECK_THROWS_AS(generate_closure({}, 25, 64), BudgetError);
  CHECK_THROWS_AS(generate_closure({}, 8, 65), BudgetError);
  CHECK_THROWS_AS(generate_closure({}, 8, 6), BudgetError);
  CHECK_THROWS_AS(generate_closure({named(NamedKind::Block, 10)}, 4, 8), BudgetError);
  const ClosureSet c = generate_closure({kFour}, 4, 8);
  CHECK_THROWS_AS(closure_contains(c, named(NamedKind::Block, 6)), BudgetError);
}

TEST_CASE("closure elements are sorted, contain every shape, and are deterministic") {
  ClosureOptions one;
  one.point_budget = 6;
  one.intermediate_budget = 12;
  one.threads = 1;
  ClosureOptions many = one;
  many.threads = 4;
  const ClosureSet a = generate_closure({kPositioner}, one);
  const ClosureSet b = generate_closure({kPositioner}, many);
  CHECK(a.elements == b.elements);
  CHECK(std::is_sorted(a.elements.begin(), a.elements.end()));
  for (const auto& p : a.elements) {
    REQUIRE(closure_contains(a, involute(p)) == Membership::Confirmed);
    REQUIRE(closure_contains(a, to_lower_row(p)) == Membership::Confirmed);
  }
  // one element per shape for each lower-row class
  std::size_t expect = 0;
  for (const auto& f : a.linear_forms) expect += f.size() + 1;
  CHECK(a.elements.size() == expect);
}

TEST_CASE("stop_when_found ends early") {
  ClosureOptions opt;
  opt.point_budget = 12;
  opt.intermediate_budget = 30;
  opt.stop_when_found = {named(NamedKind::H, 3)};
  const ClosureSet c = generate_closure({kHalfLib, kFour, named(NamedKind::H, 6),
                                         named(NamedKind::H, 9)}, opt);
  CHECK(closure_contains(c, named(NamedKind::H, 3)) == Membership::Confirmed);
  CHECK_FALSE(c.saturated);
}

TEST_CASE("containments among small generators, budget 10") {
  const Budgets b{10, 20};
  auto contains = [&](std::vector<Partition> gens, const Partition& target) {
    ClosureOptions opt;
    opt.point_budget = b.point_budget;
    opt.intermediate_budget = b.intermediate_budget;
    opt.stop_when_found = {target};
    return closure_contains(generate_closure(gens, opt), target) == Membership::Confirmed;
  };
  CHECK(contains({kSingle}, kPositioner));
  CHECK(contains({kPositioner}, kDouble));
  CHECK(contains({kDouble, kFour}, kPositioner));
  CHECK(contains({kSingle}, kDouble));
  CHECK(contains({kPositioner, kHalfLib}, kCrossing));
  CHECK(contains({kPositioner, named(NamedKind::H, 3)}, kCrossing));
  CHECK(contains({kFour, kCrossing}, named(NamedKind::H, 4)));
}

TEST_CASE("singletons can be moved freely once the positioner is present") {
  const ClosureSet c = generate_closure({kPositioner}, 7, 14);
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& p : closure_lower_row(c, n)) {
      const auto labels = p.labels();
      for (std::size_t i = 0; i < n; ++i) {
        bool singleton = std::count(labels.begin(), labels.end(), labels[i]) == 1;
        if (!singleton) continue;
        std::vector<std::uint8_t> rest(labels.begin(), labels.end());
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        for (std::size_t j = 0; j < n; ++j) {
          std::vector<std::uint8_t> moved = rest;
          moved.insert(moved.begin() + static_cast<std::ptrdiff_t>(j), std::uint8_t{200});
          const Partition q = Partition::from_labels(0, n, moved);
          REQUIRE(closure_contains(c, q) == Membership::Confirmed);
        }
      }
    }
}

TEST_CASE("single blocks extracted from a free category stay inside it") {
  for (CategoryId id : free_categories()) {
    CAPTURE(category_name(id));
    const ClosureSet c = generate_closure(catalog_generators(id), 8, 16);
    const bool has_single = closure_contains(c, kSingle) == Membership::Confirmed;
    for (const auto& p : c.linear_forms)
      for (const auto& blk : p.blocks()) {
        const int s = static_cast<int>(blk.size());
        const Partition alone = named(NamedKind::Block, s);
        if (has_single || s % 2 == 0)
          REQUIRE(in_category(id, alone));
        else
          REQUIRE(in_category(id, tensor(kSingle, alone)));
      }
  }
}

TEST_CASE("classify_noncrossing examples") {
  const auto h = classify_noncrossing({kFour});
  CHECK(h.world == WorldKind::Free7);
  CHECK(h.category == CategoryId::HFree);
  CHECK(classify_noncrossing({}).category == CategoryId::OFree);
  CHECK(classify_noncrossing({kDouble, kFour}).category == CategoryId::SPrimeFree);
  CHECK(classify_noncrossing({kSingle, kDouble}).category == CategoryId::BFree);
  CHECK(classify_noncrossing({kPositioner, kFour}).category == CategoryId::SPrimeFree);
  CHECK(classify_noncrossing({named(NamedKind::Block, 3)}).category == CategoryId::SFree);
  CHECK(classify_noncrossing({named(NamedKind::Block, 6)}).category == CategoryId::HFree);
  CHECK_THROWS_AS(classify_noncrossing({kCrossing}), NotNoncrossing);
}

TEST_CASE("classify_classical examples") {
  CHECK(classify_classical({kCrossing}).category == CategoryId::O);
  CHECK(classify_classical({kCrossing, kFour}).category == CategoryId::H);
  CHECK(classify_classical({kCrossing, kPositioner}).category == CategoryId::BPrime);
  CHECK(classify_classical({kSingle}).category == CategoryId::B);
  CHECK(classify_classical({kCrossing, kSingle, kFour}).world == WorldKind::Classical6);
}

TEST_CASE("classify_easy examples") {
  const auto h = classify_easy({kFour});
  CHECK(h.world == WorldKind::Free7);
  CHECK(name_text(h) == "H+");

  const auto o = classify_easy({kCrossing});
  CHECK(o.world == WorldKind::Classical6);
  CHECK(o.category == CategoryId::O);
  CHECK(has_evidence(o, "crossing Confirmed"));

  const auto hs = classify_easy({kHalfLib, kFour});
  CHECK(hs.world == WorldKind::HalfLib);
  CHECK(hs.category == CategoryId::HStar);
  CHECK(has_evidence(hs, "halflib Confirmed"));

  const auto os = classify_easy({kHalfLib});
  CHECK(os.category == CategoryId::OStar);
  const auto bs = classify_easy({kHalfLib, kDouble});
  CHECK(bs.category == CategoryId::BSharpStar);

  const auto series = classify_easy({kHalfLib, kFour, named(NamedKind::H, 3)});
  CHECK(series.world == WorldKind::Series);
  CHECK(series.series == 3);
  CHECK(world_text(series) == "Series(3)");
  CHECK(name_text(series) == "H^(3)");
  CHECK(has_evidence(series, "h_3 Confirmed"));

  const auto gcd = classify_easy({kHalfLib, kFour, named(NamedKind::H, 6), named(NamedKind::H, 9)},
                                 {8, 30});
  CHECK(gcd.world == WorldKind::Series);
  CHECK(gcd.series == 3);

  CHECK_THROWS_AS(classify_easy({}, {30, 64}), BudgetError);
}

TEST_CASE("classification record format") {
  const std::string exact = to_record(classify_easy({kFour}));
  CHECK(exact.find("world=Free7\nname=H+\nexact=") == 0);
  CHECK(exact.find("point_budget=") == std::string::npos);
  const std::string bounded = to_record(classify_easy({kCrossing}));
  CHECK(bounded.find("world=Classical6\nname=O\n") == 0);
  CHECK(bounded.find("point_budget=8\n") != std::string::npos);
  CHECK(bounded.find("intermediate_budget=16\n") != std::string::npos);
  CHECK(bounded.find("evidence=P(2,2): u1,l2; u2,l1 | crossing Confirmed\n") != std::string::npos);
}
