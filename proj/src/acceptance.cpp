#include "easycat/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <unordered_map>

#include "easycat/catalog.hpp"
#include "easycat/category_ops.hpp"
#include "easycat/closure.hpp"
#include "easycat/linmap.hpp"
#include "easycat/moments.hpp"

namespace easycat {

namespace {

using C = CategoryId;
using NK = NamedKind;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (passed) detail << what;
    else if (detail.tellp() < 400) detail << "; " << what;
    passed = false;
  }
};

std::string seq_text(const MomentSequence& s) {
  std::string out;
  for (std::size_t k = 1; k <= s.size(); ++k) {
    if (k > 1) out += ",";
    out += s.at(k).str();
  }
  return out;
}

// Closure of the catalog generators against the predicate on P(0,k).
void closure_matches(Outcome& o, CategoryId id, std::size_t budget,
                     std::size_t ibudget, std::size_t k_max) {
  const ClosureSet c = generate_closure(catalog_generators(id), budget, ibudget);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const auto got = closure_lower_row(c, k);
    const auto want = enumerate_category(id, k);
    if (got != want) {
      o.fail(std::string(category_name(id)) + " differs at k=" + std::to_string(k) +
             " (closure " + std::to_string(got.size()) + ", predicate " +
             std::to_string(want.size()) + ")");
    }
  }
}

void criterion_free_seven(Outcome& o) {
  for (CategoryId id : free_categories()) closure_matches(o, id, 8, 16, 8);
  if (o.passed) o.detail << "7 categories, k=0..8, closure 8/16 equals predicate";
}

std::vector<Partition> names_to_partitions(const std::vector<NamedKind>& names) {
  std::vector<Partition> out;
  for (NamedKind n : names) out.push_back(named_partition(n));
  return out;
}

void criterion_lattice(Outcome& o) {
  // Expected category per subset of {singleton, double singleton, fourblock,
  // positioner}, bit order as listed.
  const CategoryId expected[16] = {
      C::OFree,       C::BFree,  C::BSharpFree, C::BFree,       // -, s, d, sd
      C::HFree,       C::SFree,  C::SPrimeFree, C::SFree,       // f, sf, df, sdf
      C::BPrimeFree,  C::BFree,  C::BPrimeFree, C::BFree,       // p, sp, dp, sdp
      C::SPrimeFree,  C::SFree,  C::SPrimeFree, C::SFree,       // fp, sfp, dfp, sdfp
  };
  const NamedKind pool[4] = {NK::Singleton, NK::DoubleSingleton, NK::FourBlock,
                             NK::Positioner};
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<NamedKind> names;
    for (unsigned b = 0; b < 4; ++b)
      if (mask >> b & 1) names.push_back(pool[b]);
    const auto gens = names_to_partitions(names);
    const Classification cl = classify_noncrossing(gens);
    if (cl.category != expected[mask]) {
      o.fail("subset " + std::to_string(mask) + " classified as " + name_text(cl));
      continue;
    }
    // fingerprint: closure membership of the four probes vs the predicate
    const ClosureSet c = generate_closure(gens, 8, 16);
    for (NamedKind probe : pool) {
      const Partition p = named_partition(probe);
      const bool in_closure = closure_contains(c, p) == Membership::Confirmed;
      if (in_closure != in_category(expected[mask], p))
        o.fail("subset " + std::to_string(mask) + " fingerprint mismatch on " +
               to_string(NamedPartition{probe}));
    }
  }
  if (o.passed) o.detail << "16 subsets classified, closure fingerprints agree";
}

void criterion_classical_six(Outcome& o) {
  for (CategoryId id : classical_categories()) closure_matches(o, id, 6, 12, 6);
  if (o.passed) o.detail << "6 categories, k=0..6, closure 6/12 equals predicate";
}

void criterion_halflib(Outcome& o) {
  const Partition crossing = named_partition(NK::Crossing);
  const Partition halflib = named_partition(NK::HalfLib);
  for (CategoryId id : halflib_categories()) {
    closure_matches(o, id, 8, 16, 6);
    if (in_category(id, crossing))
      o.fail("crossing satisfies " + std::string(category_name(id)));
    const ClosureSet c = generate_closure(catalog_generators(id), 8, 16);
    if (closure_contains(c, halflib) != Membership::Confirmed)
      o.fail("halflib not in closure of " + std::string(category_name(id)));
  }
  if (o.passed)
    o.detail << "O*, H*, B#*: closure 8/16 equals predicate for k<=6; crossing "
                "excluded; halflib confirmed";
}

void criterion_thirteen(Outcome& o) {
  const std::vector<CategoryId> thirteen = {
      C::OFree, C::SPrimeFree, C::SFree, C::BSharpFree, C::BPrimeFree, C::BFree,
      C::O,     C::SPrime,     C::S,     C::BPrime,     C::B,
      C::OStar, C::BSharpStar};
  for (CategoryId id : thirteen) {
    const Classification cl = classify_easy(catalog_generators(id));
    if (cl.world == WorldKind::Series || cl.category != id) {
      o.fail(std::string(category_name(id)) + " classified as " + name_text(cl));
      continue;
    }
    // positive memberships the classification relied on
    std::string needed;
    if (catalog_entry(id).world == World::Classical) needed = "crossing Confirmed";
    if (catalog_entry(id).world == World::HalfLiberated) needed = "halflib Confirmed";
    const bool has = needed.empty() ||
                     std::any_of(cl.evidence.begin(), cl.evidence.end(),
                                 [&](const Evidence& e) { return e.reason == needed; });
    if (!has) o.fail(std::string(category_name(id)) + ": missing " + needed);
  }

  auto series_ok = [&](const std::vector<Partition>& gens, Budgets b, const std::string& label) {
    const Classification cl = classify_easy(gens, b);
    if (cl.world != WorldKind::Series || cl.series != 3) {
      o.fail(label + " classified as " + world_text(cl));
      return;
    }
    const bool confirmed =
        std::any_of(cl.evidence.begin(), cl.evidence.end(),
                    [](const Evidence& e) { return e.reason == "h_3 Confirmed"; });
    if (!confirmed) o.fail(label + ": h_3 not confirmed");
  };
  series_ok({named_partition(NK::HalfLib), named_partition(NK::FourBlock),
             named_partition(NK::H, 3)},
            {8, 16}, "{halflib, fourblock, h_3}");
  const std::vector<Partition> gcd_gens = {
      named_partition(NK::HalfLib), named_partition(NK::FourBlock),
      named_partition(NK::H, 6), named_partition(NK::H, 9)};
  series_ok(gcd_gens, {8, 30}, "{halflib, fourblock, h_6, h_9}");

  ClosureOptions opt;
  opt.point_budget = 12;
  opt.intermediate_budget = 30;
  opt.stop_when_found = {named_partition(NK::H, 3)};
  const ClosureSet c = generate_closure(gcd_gens, opt);
  if (closure_contains(c, named_partition(NK::H, 3)) != Membership::Confirmed)
    o.fail("h_3 not confirmed in <halflib, fourblock, h_6, h_9> at 12/30");
  if (o.passed)
    o.detail << "13 catalog sets classified; Series(3) from h_3 and from h_6, h_9; "
                "h_3 confirmed at 12/30";
}

void expect_seq(Outcome& o, const std::string& label, const MomentSequence& got,
                const MomentSequence& want) {
  if (got != want) o.fail(label + ": got " + seq_text(got) + ", want " + seq_text(want));
}

MomentSequence formula_seq(std::size_t k_max, const std::function<BigInt(std::size_t)>& f) {
  MomentSequence s;
  for (std::size_t k = 1; k <= k_max; ++k) s.values.emplace_back(f(k));
  return s;
}

BigInt even_only(std::size_t k, ClosedForm form) {
  return k % 2 ? BigInt(0) : closed_form(form, k / 2);
}

void criterion_counts(Outcome& o) {
  const std::size_t K = 8;
  using F = ClosedForm;
  auto even = [&](F f) { return formula_seq(K, [f](std::size_t k) { return even_only(k, f); }); };
  auto all = [&](F f) { return formula_seq(K, [f](std::size_t k) { return closed_form(f, k); }); };
  expect_seq(o, "O+", count_moments(C::OFree, K), even(F::Catalan));
  expect_seq(o, "S+", count_moments(C::SFree, K), all(F::Catalan));
  expect_seq(o, "B+", count_moments(C::BFree, K), all(F::Motzkin));
  expect_seq(o, "B#+", count_moments(C::BSharpFree, K), even(F::BFormula));
  expect_seq(o, "O", count_moments(C::O, K), even(F::DoubleFactorial));
  expect_seq(o, "B", count_moments(C::B, K), all(F::Involutions));
  expect_seq(o, "S", count_moments(C::S, K), all(F::Bell));
  expect_seq(o, "O*", count_moments(C::OStar, K), even(F::Factorial));
  if (o.passed)
    o.detail << "k=1..8 for O+, S+, B+, B#+ (" << seq_text(count_moments(C::BSharpFree, K))
             << "), O, B, S, O*";
}

void criterion_fuss_catalan(Outcome& o) {
  const std::size_t D = 6;
  std::vector<BigInt> g;
  for (std::size_t k = 0; k <= D; ++k) g.push_back(closed_form(ClosedForm::FussCatalan2, k));
  const auto sq = square_series(g, D);
  for (std::size_t k = 0; k <= D; ++k)
    if (sq[k] != closed_form(ClosedForm::BFormula, k))
      o.fail("coefficient " + std::to_string(k) + ": " + sq[k].str());
  if (o.passed) o.detail << "g(x)^2 coefficients 0..6 equal b_k";
}

void criterion_moment_cumulant(Outcome& o) {
  const std::size_t K = 8;
  const auto b_plus = count_moments(C::BFree, K);
  expect_seq(o, "B+ vs shifted semicircle", b_plus,
             moments_from_cumulants(named_law("shifted-semicircle").spec, {Letter::A}, K));

  const auto b_sharp = count_moments(C::BSharpFree, K);
  const NamedLaw& sc = named_law("shifted-circular");
  expect_seq(o, "B#+ vs squeezed shifted circular", b_sharp,
             transform(moments_from_cumulants(sc.spec, sc.unit, K / 2), Transform::Squeeze));

  expect_seq(o, "B'+ vs symmetrized B+", count_moments(C::BPrimeFree, K),
             transform(b_plus, Transform::Symmetrize));

  expect_seq(o, "B vs shifted gaussian", count_moments(C::B, K),
             moments_from_cumulants(named_law("shifted-gaussian").spec, {Letter::A}, K));
  if (o.passed) o.detail << "four count/cumulant identities hold for k=1..8";
}

void for_each_small(std::size_t max_points, const std::function<void(const Partition&)>& f) {
  for (std::size_t total = 0; total <= max_points; ++total)
    for (std::size_t k = 0; k <= total; ++k) for_each_partition(k, total - k, false, f);
}

void criterion_dictionary(Outcome& o, std::uint64_t seed) {
  struct Pairing {
    RepKind kind;
    CategoryId category;
  };
  const Pairing pairs[] = {{RepKind::SymmetricGroup, C::S},
                           {RepKind::Hyperoctahedral, C::H},
                           {RepKind::OrthogonalSample, C::O},
                           {RepKind::Bistochastic, C::B}};
  std::size_t positive = 0, negative = 0;
  for (const auto& [kind, cat] : pairs) {
    const GroupRep rep = classical_rep(kind, 3, 20, seed);
    for_each_small(6, [&](const Partition& p) {
      if (!in_category(cat, p)) return;
      ++positive;
      if (!check_intertwiner(rep, p))
        o.fail(std::string(to_string(kind)) + " rejects " + canonical_text(p));
    });
  }
  for (const auto& [kind, cat] : pairs) {
    if (kind != RepKind::SymmetricGroup && kind != RepKind::Hyperoctahedral) continue;
    const GroupRep rep = classical_rep(kind, 4);
    for_each_small(4, [&](const Partition& p) {
      if (in_category(cat, p)) return;
      ++negative;
      if (check_intertwiner(rep, p))
        o.fail(std::string(to_string(kind)) + " accepts " + canonical_text(p));
    });
  }
  if (o.passed)
    o.detail << positive << " positive checks at n=3, " << negative
             << " negative checks at n=4, seed " << seed;
}

void criterion_functor(Outcome& o) {
  constexpr std::size_t kRow = 4;
  std::vector<std::vector<std::vector<Partition>>> by_shape(
      kRow + 1, std::vector<std::vector<Partition>>(kRow + 1));
  for (std::size_t k = 0; k <= kRow; ++k)
    for (std::size_t l = 0; l <= kRow; ++l) by_shape[k][l] = enumerate_all(k, l, false);

  std::size_t pairs = 0;
  for (std::size_t n : {2, 3}) {
    // T_p for every partition with rows of at most kRow points, keyed by
    // shape and position in enumeration order
    std::vector<std::vector<std::vector<SparseT>>> t(
        kRow + 1, std::vector<std::vector<SparseT>>(kRow + 1));
    std::unordered_map<Partition, const SparseT*, PartitionHash> lookup;
    for (std::size_t k = 0; k <= kRow; ++k)
      for (std::size_t l = 0; l <= kRow; ++l) {
        for (const auto& p : by_shape[k][l]) t[k][l].push_back(t_sparse(p, n));
        for (std::size_t i = 0; i < by_shape[k][l].size(); ++i)
          lookup.emplace(by_shape[k][l][i], &t[k][l][i]);
      }
    SparseProductCheck product;
    for (std::size_t l = 0; l <= kRow; ++l)
      for (std::size_t k = 0; k <= kRow; ++k)
        for (std::size_t m = 0; m <= kRow; ++m)
          for (std::size_t a = 0; a < by_shape[k][l].size(); ++a)
            for (std::size_t b = 0; b < by_shape[l][m].size(); ++b) {
              const Partition& p = by_shape[k][l][a];
              const Partition& q = by_shape[l][m][b];
              const ComposeResult pq = compose(p, q);
              std::int64_t scale = 1;
              for (std::size_t i = 0; i < pq.removed_loops; ++i)
                scale *= static_cast<std::int64_t>(n);
              ++pairs;
              if (!product(t[k][l][a], t[l][m][b], *lookup.at(pq.result), scale))
                o.fail("n=" + std::to_string(n) + ": " + canonical_text(p) + " then " +
                       canonical_text(q));
            }
  }
  if (o.passed)
    o.detail << pairs << " composable pairs with rows <= " << kRow << " at n=2,3";
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  struct Entry {
    int id;
    const char* title;
    std::function<void(Outcome&)> run;
  };
  const std::uint64_t seed = options.seed;
  const std::vector<Entry> entries = {
      {1, "seven noncrossing categories: closure equals predicate", criterion_free_seven},
      {2, "lattice classification of 16 generator subsets", criterion_lattice},
      {3, "six classical categories: closure equals predicate", criterion_classical_six},
      {4, "half-liberated categories and separations", criterion_halflib},
      {5, "13 nonhyperoctahedral categories and the h_s series", criterion_thirteen},
      {6, "character-law counts", criterion_counts},
      {7, "Fuss-Catalan square identity", criterion_fuss_catalan},
      {8, "moment-cumulant equivalences", criterion_moment_cumulant},
      {9, "intertwiner dictionary", [seed](Outcome& o) { criterion_dictionary(o, seed); }},
      {10, "functor law T_q T_p = n^loops T_qp", criterion_functor},
  };
  std::vector<CriterionResult> results;
  for (const auto& e : entries) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), e.id) == options.only.end())
      continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(o);
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    const auto stop = std::chrono::steady_clock::now();
    CriterionResult r{e.id, e.title, o.passed, o.detail.str(),
                      std::chrono::duration<double>(stop - start).count()};
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " +
         r.title + " (" + secs + " s): " + r.detail;
}

}  // namespace easycat
