#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "easycat/catalog.hpp"
#include "easycat/error.hpp"
#include "easycat/moments.hpp"
#include "oracles.hpp"

using namespace easycat;

namespace {

std::vector<std::size_t> block_sizes(const std::vector<int>& ids) {
  std::map<int, std::size_t> m;
  for (int b : ids) ++m[b];
  std::vector<std::size_t> out;
  for (auto [b, s] : m) out.push_back(s);
  return out;
}

// Number of set partitions of n points passing `keep`.
std::size_t brute_count(std::size_t n, bool noncrossing,
                        const std::function<bool(const std::vector<std::size_t>&)>& keep) {
  std::size_t c = 0;
  oracle::set_partitions(n, [&](const std::vector<int>& ids) {
    if (noncrossing && !oracle::crossing_free(ids)) return;
    c += keep(block_sizes(ids));
  });
  return c;
}

bool all_le2(const std::vector<std::size_t>& s) {
  return std::all_of(s.begin(), s.end(), [](std::size_t x) { return x <= 2; });
}
bool all_eq2(const std::vector<std::size_t>& s) {
  return std::all_of(s.begin(), s.end(), [](std::size_t x) { return x == 2; });
}
bool all_even(const std::vector<std::size_t>& s) {
  return std::all_of(s.begin(), s.end(), [](std::size_t x) { return x % 2 == 0; });
}
bool any(const std::vector<std::size_t>&) { return true; }

// Moment-cumulant sum by listing every partition of the word.
Rational brute_moment(const CumulantSpec& spec, const std::vector<Letter>& word) {
  Rational total = 0;
  oracle::set_partitions(word.size(), [&](const std::vector<int>& ids) {
    if (spec.kind == CumulantKind::Free && !oracle::crossing_free(ids)) return;
    std::map<int, std::pair<std::size_t, std::size_t>> counts;
    for (std::size_t i = 0; i < word.size(); ++i)
      (word[i] == Letter::A ? counts[ids[i]].first : counts[ids[i]].second) += 1;
    Rational prod = 1;
    for (auto& [b, key] : counts) {
      auto it = spec.values.find(key);
      if (it == spec.values.end()) return;
      prod *= it->second;
    }
    total += prod;
  });
  return total;
}

std::vector<Rational> ints(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("closed forms agree with brute-force counts") {
  for (std::size_t k = 1; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(closed_form(ClosedForm::Catalan, k) == brute_count(k, true, any));
    CHECK(closed_form(ClosedForm::Bell, k) == brute_count(k, false, any));
    CHECK(closed_form(ClosedForm::Motzkin, k) == brute_count(k, true, all_le2));
    CHECK(closed_form(ClosedForm::Involutions, k) == brute_count(k, false, all_le2));
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t perms = 0;
    do ++perms;
    while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(closed_form(ClosedForm::Factorial, k) == perms);
  }
  for (std::size_t k = 1; k <= 5; ++k) {
    CAPTURE(k);
    CHECK(closed_form(ClosedForm::DoubleFactorial, k) == brute_count(2 * k, false, all_eq2));
    CHECK(closed_form(ClosedForm::FussCatalan2, k) == brute_count(2 * k, true, all_even));
  }
  CHECK(closed_form(ClosedForm::DoubleFactorial, 0) == 1);
  CHECK(closed_form(ClosedForm::BFormula, 2) == 7);
  CHECK(closed_form(ClosedForm::FussCatalan2, 3) == 12);
  CHECK(closed_form(ClosedForm::Motzkin, 4) == 9);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
}

TEST_CASE("count_moments counts members of P(0,k)") {
  for (CategoryId id : {CategoryId::OFree, CategoryId::HFree, CategoryId::SFree,
                        CategoryId::BFree, CategoryId::BSharpFree, CategoryId::O,
                        CategoryId::S, CategoryId::B, CategoryId::OStar, CategoryId::HStar}) {
    const MomentSequence m = count_moments(id, 7);
    for (std::size_t k = 1; k <= 7; ++k) {
      std::size_t c = 0;
      oracle::set_partitions(k, [&](const std::vector<int>& ids) {
        std::vector<std::uint8_t> labels(ids.begin(), ids.end());
        c += in_category(id, Partition::from_labels(0, k, labels));
      });
      REQUIRE(m.at(k) == c);
    }
  }
  CHECK(count_moments(CategoryId::SFree, 4).values == ints({1, 2, 5, 14}));
  CHECK(count_moments(CategoryId::OFree, 6).values == ints({0, 1, 0, 2, 0, 5}));
  CHECK_THROWS_AS(count_moments(CategoryId::HSeries, 4), NoPredicate);
  CHECK_THROWS_AS(count_moments(CategoryId::SFree, 13), CapExceeded);
}

TEST_CASE("partitions in <pair (x) pair> biject with noncrossing even partitions") {
  // B#+ on 2k points against noncrossing even-block partitions of 2k+2
  // whose first and last point share a block
  const MomentSequence b = count_moments(CategoryId::BSharpFree, 8);
  for (std::size_t k = 1; k <= 4; ++k) {
    std::size_t c = 0;
    oracle::set_partitions(2 * k + 2, [&](const std::vector<int>& ids) {
      if (ids.front() != ids.back() || !oracle::crossing_free(ids)) return;
      c += all_even(block_sizes(ids));
    });
    CHECK(b.at(2 * k) == c);
    CHECK(b.at(2 * k) == closed_form(ClosedForm::BFormula, k));
  }
}

TEST_CASE("moment-cumulant examples") {
  const auto semi = named_law("semicircle");
  CHECK(moments_from_cumulants(semi.spec, semi.unit, 6).values == ints({0, 1, 0, 2, 0, 5}));
  const auto shifted = named_law("shifted-semicircle");
  CHECK(moments_from_cumulants(shifted.spec, shifted.unit, 4).values == ints({1, 2, 4, 9}));
  const auto gauss = named_law("gaussian");
  CHECK(moments_from_cumulants(gauss.spec, gauss.unit, 6).values == ints({0, 1, 0, 3, 0, 15}));
  const auto circ = named_law("shifted-circular");
  CHECK(moments_from_cumulants(circ.spec, circ.unit, 3).values == ints({2, 7, 30}));
  const auto plain = named_law("circular");
  CHECK(moments_from_cumulants(plain.spec, plain.unit, 4).values == ints({1, 2, 5, 14}));
  CHECK_THROWS_AS(named_law("cauchy"), UnknownName);
}

TEST_CASE("moment-cumulant sums agree with brute force over partitions") {
  CumulantSpec free_spec{CumulantKind::Free, {}, true};
  free_spec.values[{1, 0}] = Rational(1, 2);
  free_spec.values[{2, 0}] = 3;
  free_spec.values[{3, 0}] = -1;
  free_spec.values[{4, 0}] = Rational(2, 7);
  CumulantSpec classical_spec = free_spec;
  classical_spec.kind = CumulantKind::Classical;
  for (const auto* spec : {&free_spec, &classical_spec}) {
    const auto m = moments_from_cumulants(*spec, {Letter::A}, 8);
    for (std::size_t k = 1; k <= 8; ++k)
      REQUIRE(m.at(k) == brute_moment(*spec, std::vector<Letter>(k, Letter::A)));
  }

  CumulantSpec star{CumulantKind::Free, {}, true};
  star.values[{1, 0}] = 2;
  star.values[{0, 1}] = -1;
  star.values[{1, 1}] = Rational(3, 2);
  star.values[{2, 0}] = 1;
  star.values[{0, 2}] = 5;
  for (auto kind : {CumulantKind::Free, CumulantKind::Classical}) {
    star.kind = kind;
    for (const std::vector<Letter>& unit :
         {std::vector<Letter>{Letter::A, Letter::AStar},
          std::vector<Letter>{Letter::A, Letter::A, Letter::AStar}}) {
      const auto m = moments_from_cumulants(star, unit, 3);
      for (std::size_t k = 1; k <= 3; ++k) {
        std::vector<Letter> word;
        for (std::size_t r = 0; r < k; ++r) word.insert(word.end(), unit.begin(), unit.end());
        REQUIRE(m.at(k) == brute_moment(star, word));
      }
    }
  }
}

TEST_CASE("undefined block values") {
  CumulantSpec strict{CumulantKind::Free, {}, false};
  strict.values[{2, 0}] = 1;
  CHECK_THROWS_AS(moments_from_cumulants(strict, {Letter::A}, 3), UndefinedBlockValue);
  CumulantSpec big{CumulantKind::Free, {}, true};
  big.values[{2, 1}] = 1;
  CHECK_THROWS_AS(moments_from_cumulants(big, {Letter::A, Letter::AStar}, 2),
                  UndefinedBlockValue);
  CHECK_THROWS_AS(moments_from_cumulants(big, {}, 2), BadParam);
}

TEST_CASE("transforms") {
  MomentSequence s;
  s.values = ints({1, 2, 5});
  CHECK(transform(s, Transform::Squeeze).values == ints({0, 1, 0, 2, 0, 5}));
  CHECK(transform(s, Transform::Symmetrize).values == ints({0, 2, 0}));
  // squeezing the S+ counts gives the O+ counts
  CHECK(transform(count_moments(CategoryId::SFree, 4), Transform::Squeeze) ==
        count_moments(CategoryId::OFree, 8));
}

TEST_CASE("square of the Fuss-Catalan series") {
  std::vector<BigInt> fc;
  for (std::size_t k = 0; k <= 6; ++k) fc.push_back(closed_form(ClosedForm::FussCatalan2, k));
  const auto sq = square_series(fc, 6);
  for (std::size_t k = 0; k <= 6; ++k) {
    BigInt direct = 0;
    for (std::size_t i = 0; i <= k; ++i) direct += fc[i] * fc[k - i];
    CHECK(sq[k] == direct);
    CHECK(sq[k] == closed_form(ClosedForm::BFormula, k));
  }
}

TEST_CASE("csv output") {
  MomentSequence s;
  s.values = {Rational(1), Rational(1, 2)};
  std::ostringstream os;
  write_csv(os, "S+", s);
  CHECK(os.str() == "category,k,m_k\nS+,1,1\nS+,2,1/2\n");
}
