#include <catch_amalgamated.hpp>

#include "easycat/category_ops.hpp"
#include "easycat/error.hpp"
#include "easycat/partition.hpp"
#include "oracles.hpp"

using namespace easycat;

namespace {

void all_partitions_upto(std::size_t max_points, const std::function<void(const Partition&)>& f) {
  for (std::size_t n = 0; n <= max_points; ++n)
    for (std::size_t k = 0; k <= n; ++k) for_each_partition(k, n - k, false, f);
}

}  // namespace

TEST_CASE("make_partition builds canonical values") {
  const Partition pair = make_partition(0, 2, {{lower(1), lower(2)}});
  CHECK(pair.block_count() == 1);
  CHECK(canonical_text(pair) == "P(0,2): l1,l2");

  const Partition unit = make_partition(1, 1, {{upper(1), lower(1)}});
  CHECK(canonical_text(unit) == "P(1,1): u1,l1");

  const Partition positioner =
      make_partition(0, 4, {{lower(1)}, {lower(2), lower(4)}, {lower(3)}});
  CHECK(canonical_text(positioner) == "P(0,4): l1; l2,l4; l3");

  // block and point order inside the input do not matter
  CHECK(make_partition(0, 4, {{lower(3)}, {lower(4), lower(2)}, {lower(1)}}) == positioner);
}

TEST_CASE("make_partition rejects malformed input") {
  CHECK_THROWS_AS(make_partition(0, 2, {{lower(1), lower(2)}, {lower(2)}}), OverlapError);
  CHECK_THROWS_AS(make_partition(0, 2, {{lower(1)}}), CoverageError);
  CHECK_THROWS_AS(make_partition(0, 2, {{lower(1), lower(3)}}), RangeError);
  CHECK_THROWS_AS(make_partition(1, 1, {{upper(2), lower(1)}}), RangeError);
  CHECK_THROWS_AS(make_partition(0, 1, {{lower(1)}, {}}), CoverageError);
}

TEST_CASE("parse_partition examples") {
  CHECK(parse_partition("P(0,2): l1,l2") == make_partition(0, 2, {{lower(1), lower(2)}}));
  const Partition crossing = parse_partition("P(2,2): u1,l2; u2,l1");
  CHECK(crossing == make_partition(2, 2, {{upper(1), lower(2)}, {upper(2), lower(1)}}));
  CHECK(parse_partition("P(0,3): l1,l2,l3").block_count() == 1);
  CHECK(parse_partition("  P ( 0 , 3 ) :l1 , l2,l3 ") == parse_partition("P(0,3): l1,l2,l3"));
  CHECK(parse_partition("P(0,0):") == Partition{});
}

TEST_CASE("parse_partition errors") {
  CHECK_THROWS_AS(parse_partition("Q(0,2): l1,l2"), SyntaxError);
  CHECK_THROWS_AS(parse_partition("P(0,2) l1,l2"), SyntaxError);
  CHECK_THROWS_AS(parse_partition("P(0,2): l1,x2"), SyntaxError);
  CHECK_THROWS_AS(parse_partition("P(0,2): l1;"), SyntaxError);
  CHECK_THROWS_AS(parse_partition("P(0,2): l1,l1"), OverlapError);
  CHECK_THROWS_AS(parse_partition("P(0,2): l1"), CoverageError);
  CHECK_THROWS_AS(parse_partition("P(0,2): l1,l2,l3"), RangeError);
}

TEST_CASE("canonical text examples") {
  CHECK(canonical_text(parse_partition("P(1,1): l1,u1")) == "P(1,1): u1,l1");
  CHECK(canonical_text(parse_partition("P(0,4): l4,l3,l2,l1")) == "P(0,4): l1,l2,l3,l4");
  CHECK(canonical_text(Partition{}) == "P(0,0):");
}

TEST_CASE("canonical form and text round trip on every partition up to 8 points") {
  std::size_t count = 0;
  all_partitions_upto(8, [&](const Partition& p) {
    ++count;
    REQUIRE(make_partition(p.upper_count(), p.lower_count(), p.blocks()) == p);
    REQUIRE(parse_partition(canonical_text(p)) == p);
  });
  // sum over n <= 8 of (n+1) Bell(n)
  CHECK(count == 1 + 2 + 3 * 2 + 4 * 5 + 5 * 15 + 6 * 52 + 7 * 203 + 8 * 877 + 9 * 4140);
}

TEST_CASE("linearize examples") {
  const auto lin4 = linearize(parse_partition("P(0,4): l1,l2,l3,l4"));
  CHECK(lin4.points == std::vector<Point>{lower(1), lower(2), lower(3), lower(4)});
  CHECK(lin4.marks == std::vector<Mark>{Mark::Plus, Mark::Minus, Mark::Plus, Mark::Minus});

  const auto lin22 = linearize(parse_partition("P(2,2): u1,l2; u2,l1"));
  CHECK(lin22.points == std::vector<Point>{upper(2), upper(1), lower(1), lower(2)});
  CHECK(lin22.marks == std::vector<Mark>{Mark::Plus, Mark::Minus, Mark::Plus, Mark::Minus});

  const auto lin10 = linearize(parse_partition("P(1,0): u1"));
  CHECK(lin10.points == std::vector<Point>{upper(1)});
  CHECK(lin10.marks == std::vector<Mark>{Mark::Plus});
}

TEST_CASE("labels alternate with balance 0 or 1") {
  all_partitions_upto(6, [&](const Partition& p) {
    const auto lin = linearize(p);
    int balance = 0;
    for (std::size_t t = 0; t < lin.marks.size(); ++t) {
      if (t > 0) REQUIRE(lin.marks[t] != lin.marks[t - 1]);
      balance += lin.marks[t] == Mark::Plus ? 1 : -1;
    }
    REQUIRE(balance == static_cast<int>(p.size() % 2));
    for (std::size_t t = 0; t < lin.points.size(); ++t)
      REQUIRE(linear_position(p, lin.points[t]) == t);
  });
}

TEST_CASE("is_noncrossing examples") {
  CHECK_FALSE(is_noncrossing(parse_partition("P(2,2): u1,l2; u2,l1")));
  CHECK(is_noncrossing(parse_partition("P(2,2): u1,l1; u2,l2")));
  CHECK_FALSE(is_noncrossing(parse_partition("P(0,6): l1,l3,l5; l2,l4,l6")));
  CHECK(is_noncrossing(Partition{}));
}

TEST_CASE("is_noncrossing agrees with the four-point pattern search") {
  all_partitions_upto(7, [&](const Partition& p) {
    REQUIRE(is_noncrossing(p) == oracle::crossing_free(oracle::linear_ids(p)));
  });
}

TEST_CASE("is_noncrossing is invariant under every rotation") {
  const Rotation all[] = {Rotation::UpLeft,    Rotation::DownLeft,  Rotation::UpRight,
                          Rotation::DownRight, Rotation::CycleLeft, Rotation::CycleRight};
  all_partitions_upto(6, [&](const Partition& p) {
    for (Rotation r : all) {
      Partition q;
      try {
        q = rotate(p, r);
      } catch (const Error&) {
        continue;
      }
      REQUIRE(is_noncrossing(q) == is_noncrossing(p));
    }
  });
}

TEST_CASE("counts of P(0,k) are Bell and Catalan numbers") {
  const std::size_t bell[] = {1, 2, 5, 15, 52};
  const std::size_t catalan[] = {1, 2, 5, 14, 42};
  for (std::size_t k = 1; k <= 5; ++k) {
    std::size_t all = 0, nc = 0;
    oracle::set_partitions(k, [&](const std::vector<int>& ids) {
      ++all;
      nc += oracle::crossing_free(ids);
    });
    CHECK(all == bell[k - 1]);
    CHECK(nc == catalan[k - 1]);
    CHECK(enumerate_all(0, k, false).size() == all);
    CHECK(enumerate_all(0, k, true).size() == nc);
  }
}

TEST_CASE("block_profile examples") {
  const auto four = block_profile(parse_partition("P(0,4): l1,l2,l3,l4"));
  CHECK(four.sizes == std::vector<std::size_t>{4});
  CHECK(four.singleton_count == 0);
  CHECK(four.odd_block_count == 0);

  const auto pos = block_profile(parse_partition("P(0,4): l1; l2,l4; l3"));
  CHECK(pos.sizes == std::vector<std::size_t>{1, 1, 2});
  CHECK(pos.singleton_count == 2);
  CHECK(pos.odd_block_count == 2);

  const auto h3 = block_profile(parse_partition("P(0,6): l1,l3,l5; l2,l4,l6"));
  REQUIRE(h3.marks.size() == 2);
  CHECK(h3.marks[0] == std::pair<std::size_t, std::size_t>{3, 0});
  CHECK(h3.marks[1] == std::pair<std::size_t, std::size_t>{0, 3});
}

TEST_CASE("block_profile invariants") {
  all_partitions_upto(6, [&](const Partition& p) {
    const auto prof = block_profile(p);
    std::size_t sum = 0;
    for (auto s : prof.sizes) sum += s;
    REQUIRE(sum == p.size());
    REQUIRE(prof.odd_block_count % 2 == p.size() % 2);
    REQUIRE(std::is_sorted(prof.sizes.begin(), prof.sizes.end()));
  });
}
