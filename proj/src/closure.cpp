#include "easycat/closure.hpp"

#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <thread>

#include "easycat/category_ops.hpp"
#include "easycat/error.hpp"

namespace easycat {

namespace {

// A lower-row form as a restricted growth string.
struct Seq {
  std::uint8_t n = 0;
  std::uint8_t blocks = 0;
  std::array<std::uint8_t, kMaxIntermediateBudget> v{};
};

// Stored forms are packed at 5 bits per point with the length in the top
// byte, which is why the point budget is capped at 24.
struct Key {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  friend bool operator==(const Key&, const Key&) = default;
  friend auto operator<=>(const Key&, const Key&) = default;
  template <typename H>
  friend H AbslHashValue(H h, const Key& k) {
    return H::combine(std::move(h), k.lo, k.hi);
  }
};

using KeySet = absl::flat_hash_set<Key>;

Key pack(const Seq& s) {
  Key k;
  for (std::size_t i = 0; i < s.n; ++i) {
    const std::size_t bit = 5 * i;
    const std::uint64_t v = s.v[i];
    if (bit < 64) {
      k.lo |= v << bit;
      if (bit > 59) k.hi |= v >> (64 - bit);
    } else {
      k.hi |= v << (bit - 64);
    }
  }
  k.hi |= static_cast<std::uint64_t>(s.n) << 56;
  return k;
}

Seq unpack(const Key& k) {
  Seq s;
  s.n = static_cast<std::uint8_t>(k.hi >> 56);
  std::uint8_t top = 0;
  for (std::size_t i = 0; i < s.n; ++i) {
    const std::size_t bit = 5 * i;
    std::uint64_t v;
    if (bit < 64) {
      v = k.lo >> bit;
      if (bit > 59) v |= k.hi << (64 - bit);
    } else {
      v = k.hi >> (bit - 64);
    }
    s.v[i] = static_cast<std::uint8_t>(v & 31);
    top = std::max<std::uint8_t>(top, s.v[i] + 1);
  }
  s.blocks = top;
  return s;
}

// Renumbers block ids to first-occurrence order in place.
void relabel(Seq& s) {
  std::array<std::uint8_t, 2 * kMaxIntermediateBudget> map;
  map.fill(0xff);
  std::uint8_t next = 0;
  for (std::size_t i = 0; i < s.n; ++i) {
    auto& m = map[s.v[i]];
    if (m == 0xff) m = next++;
    s.v[i] = m;
  }
  s.blocks = next;
}

Seq from_partition(const Partition& p) {
  Seq s;
  const auto lin = p.linear_labels();
  s.n = static_cast<std::uint8_t>(lin.size());
  std::copy(lin.begin(), lin.end(), s.v.begin());
  relabel(s);
  return s;
}

Partition to_partition(const Seq& s, std::size_t k = 0) {
  return Partition::from_linear(k, s.n - k,
                                std::span<const std::uint8_t>(s.v.data(), s.n));
}

// All cyclic rotations and their reflections.
std::vector<Seq> orbit(const Seq& s) {
  std::vector<Seq> out;
  out.reserve(2 * std::max<std::size_t>(s.n, 1));
  if (s.n == 0) return {s};
  for (std::size_t r = 0; r < s.n; ++r) {
    Seq a;
    a.n = s.n;
    for (std::size_t i = 0; i < s.n; ++i) a.v[i] = s.v[(i + r) % s.n];
    Seq b = a;
    std::reverse(b.v.begin(), b.v.begin() + b.n);
    relabel(a);
    relabel(b);
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

// Tensor x with y, then cap the last c points of x against the first c
// points of y with nested pairs. With c = 0 this is the tensor product, and
// every composition is such a gluing of suitable rotations.
void glue(const Seq& x, const Seq& y, std::size_t c, Seq& out) {
  std::array<std::uint8_t, 2 * kMaxIntermediateBudget> parent;
  const std::size_t bx = x.blocks;
  const std::size_t total = bx + y.blocks;
  for (std::size_t i = 0; i < total; ++i) parent[i] = static_cast<std::uint8_t>(i);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < c; ++i) {
    std::size_t a = find(x.v[x.n - 1 - i]);
    std::size_t b = find(bx + y.v[i]);
    if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
  }
  out.n = static_cast<std::uint8_t>(x.n + y.n - 2 * c);
  std::size_t t = 0;
  for (std::size_t i = 0; i + c < x.n; ++i)
    out.v[t++] = static_cast<std::uint8_t>(find(x.v[i]));
  for (std::size_t i = c; i < y.n; ++i)
    out.v[t++] = static_cast<std::uint8_t>(find(bx + y.v[i]));
  relabel(out);
}

void check_budgets(const std::vector<Partition>& generators,
                   const ClosureOptions& o) {
  if (o.point_budget > kMaxPointBudget)
    throw BudgetError("point budget " + std::to_string(o.point_budget) +
                      " exceeds the maximum of " +
                      std::to_string(kMaxPointBudget));
  if (o.intermediate_budget > kMaxIntermediateBudget)
    throw BudgetError("intermediate budget " +
                      std::to_string(o.intermediate_budget) +
                      " exceeds the maximum of " +
                      std::to_string(kMaxIntermediateBudget));
  if (o.intermediate_budget < o.point_budget)
    throw BudgetError("intermediate budget is smaller than the point budget");
  if (o.point_budget < 2)
    throw BudgetError("point budget must be at least 2");
  for (const auto& g : generators)
    if (g.size() > o.intermediate_budget)
      throw BudgetError("generator " + canonical_text(g) +
                        " exceeds the intermediate budget");
  for (const auto& t : o.stop_when_found)
    if (t.size() > o.point_budget)
      throw BudgetError("stop target " + canonical_text(t) +
                        " exceeds the point budget");
}

class Engine {
 public:
  Engine(const ClosureOptions& o) : opt_(o) {
    threads_ = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  }

  void add_seed_generator(const Seq& s) {
    if (s.n <= opt_.point_budget) {
      insert_orbit(s, frontier_);
    } else {
      for (const Seq& r : orbit(s)) {
        const auto it = std::find_if(seeds_.begin(), seeds_.end(), [&](const Seq& q) {
          return q.n == r.n && std::equal(q.v.begin(), q.v.begin() + q.n, r.v.begin());
        });
        if (it == seeds_.end()) {
          seeds_.push_back(r);
          seed_frontier_.push_back(r);
        }
      }
    }
  }

  bool targets_present(const std::vector<Key>& targets) const {
    return std::all_of(targets.begin(), targets.end(),
                       [&](const Key& k) { return set_.contains(k); });
  }

  // Returns true when a round added nothing.
  bool round() {
    std::vector<const Seq*> left;
    for (const Seq& s : frontier_) left.push_back(&s);
    for (const Seq& s : seed_frontier_) left.push_back(&s);
    std::vector<const Seq*> right;
    for (const Seq& s : stored_) right.push_back(&s);
    for (const Seq& s : seeds_) right.push_back(&s);
    if (left.empty()) return true;

    const std::size_t workers = std::min<std::size_t>(threads_, left.size());
    std::vector<KeySet> found(workers);
    auto work = [&](std::size_t w) {
      Seq out;
      KeySet& mine = found[w];
      for (std::size_t i = w; i < left.size(); i += workers) {
        const Seq& x = *left[i];
        for (const Seq* yp : right) {
          const Seq& y = *yp;
          const std::size_t ab = x.n + y.n;
          if (ab > opt_.intermediate_budget) continue;
          const std::size_t lo =
              ab > opt_.point_budget ? (ab - opt_.point_budget + 1) / 2 : 0;
          const std::size_t hi = std::min(x.n, y.n);
          for (std::size_t c = lo; c <= hi; ++c) {
            glue(x, y, c, out);
            const Key k = pack(out);
            if (!set_.contains(k)) mine.insert(k);
          }
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }

    std::vector<Key> fresh;
    for (auto& f : found) fresh.insert(fresh.end(), f.begin(), f.end());
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());

    frontier_.clear();
    seed_frontier_.clear();
    for (const Key& k : fresh)
      if (!set_.contains(k)) insert_orbit(unpack(k), frontier_);
    std::sort(frontier_.begin(), frontier_.end(),
              [](const Seq& a, const Seq& b) { return pack(a) < pack(b); });
    return frontier_.empty();
  }

  const KeySet& set() const { return set_; }
  const std::vector<Seq>& stored() const { return stored_; }
  const std::vector<Seq>& seeds() const { return seeds_; }

 private:
  void insert_orbit(const Seq& s, std::vector<Seq>& frontier) {
    for (const Seq& r : orbit(s)) {
      const Key k = pack(r);
      if (set_.insert(k).second) {
        stored_.push_back(r);
        frontier.push_back(r);
      }
    }
  }

  ClosureOptions opt_;
  unsigned threads_ = 1;
  KeySet set_;
  std::vector<Seq> stored_;
  std::vector<Seq> frontier_;
  std::vector<Seq> seeds_;
  std::vector<Seq> seed_frontier_;
};

}  // namespace

ClosureSet generate_closure(const std::vector<Partition>& generators,
                            const ClosureOptions& options) {
  check_budgets(generators, options);
  Engine engine(options);
  Seq empty;
  engine.add_seed_generator(empty);
  engine.add_seed_generator(from_partition(named_partition(NamedKind::Pair)));
  for (const auto& g : generators) engine.add_seed_generator(from_partition(g));

  std::vector<Key> targets;
  for (const auto& t : options.stop_when_found) targets.push_back(pack(from_partition(t)));

  ClosureSet out;
  out.generators = generators;
  out.point_budget = options.point_budget;
  out.intermediate_budget = options.intermediate_budget;
  const bool have_targets = !targets.empty();
  while (true) {
    if (have_targets && engine.targets_present(targets)) break;
    ++out.rounds;
    if (engine.round()) {
      out.saturated = true;
      break;
    }
  }

  for (const Seq& s : engine.stored()) {
    out.linear_forms.push_back(to_partition(s));
    for (std::size_t k = 0; k <= s.n; ++k) out.elements.push_back(to_partition(s, k));
  }
  for (const Seq& s : engine.seeds()) out.seed_forms.push_back(to_partition(s));
  std::sort(out.linear_forms.begin(), out.linear_forms.end());
  std::sort(out.elements.begin(), out.elements.end());
  std::sort(out.seed_forms.begin(), out.seed_forms.end());
  return out;
}

ClosureSet generate_closure(const std::vector<Partition>& generators,
                            std::size_t point_budget,
                            std::size_t intermediate_budget) {
  ClosureOptions o;
  o.point_budget = point_budget;
  o.intermediate_budget = intermediate_budget;
  return generate_closure(generators, o);
}

std::string_view to_string(Membership m) {
  return m == Membership::Confirmed ? "Confirmed" : "NotFoundWithinBudget";
}

Membership closure_contains(const ClosureSet& c, const Partition& p) {
  if (p.size() > c.point_budget)
    throw BudgetError(canonical_text(p) + " exceeds the point budget of " +
                      std::to_string(c.point_budget));
  const Partition lin = to_lower_row(p);
  return std::binary_search(c.linear_forms.begin(), c.linear_forms.end(), lin)
             ? Membership::Confirmed
             : Membership::NotFoundWithinBudget;
}

std::vector<Partition> closure_lower_row(const ClosureSet& c, std::size_t k) {
  std::vector<Partition> out;
  for (const auto& p : c.linear_forms)
    if (p.size() == k) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------
// classification

namespace {

Classification lattice_meet(const std::vector<Partition>& generators,
                            const std::vector<CategoryId>& world,
                            WorldKind kind) {
  std::vector<CategoryId> satisfied;
  for (CategoryId id : world) {
    const bool all = std::all_of(generators.begin(), generators.end(),
                                 [&](const Partition& g) { return in_category(id, g); });
    if (all) satisfied.push_back(id);
  }
  std::optional<CategoryId> least;
  for (CategoryId c : satisfied) {
    const bool below_all = std::all_of(satisfied.begin(), satisfied.end(), [&](CategoryId d) {
      return category_included(c, d);
    });
    if (below_all) least = c;
  }
  if (!least) throw std::logic_error("category lattice has no least element");

  Classification out;
  out.world = kind;
  out.category = least;
  out.saturated = true;
  const std::string name(category_name(*least));
  for (const auto& g : generators) out.evidence.push_back({g, "satisfies " + name});
  // Every category directly below the result misses some generator.
  for (CategoryId d : world) {
    if (d == *least || !category_included(d, *least)) continue;
    const bool maximal = std::none_of(world.begin(), world.end(), [&](CategoryId e) {
      return e != d && e != *least && category_included(d, e) &&
             category_included(e, *least);
    });
    if (!maximal) continue;
    for (const auto& g : generators) {
      if (!in_category(d, g)) {
        out.evidence.push_back({g, "not in " + std::string(category_name(d))});
        break;
      }
    }
  }
  return out;
}

struct Prober {
  const ClosureSet& closure;
  Classification& record;

  Membership operator()(const Partition& p, const std::string& label) {
    Membership m = Membership::NotFoundWithinBudget;
    if (p.size() <= closure.point_budget) {
      m = closure_contains(closure, p);
    } else {
      const Partition lin = to_lower_row(p);
      if (std::binary_search(closure.seed_forms.begin(), closure.seed_forms.end(), lin))
        m = Membership::Confirmed;
    }
    record.evidence.push_back({p, label + " " + std::string(to_string(m))});
    return m;
  }
};

}  // namespace

std::string world_text(const Classification& c) {
  switch (c.world) {
    case WorldKind::Free7: return "Free7";
    case WorldKind::Classical6: return "Classical6";
    case WorldKind::HalfLib: return "HalfLib";
    case WorldKind::Series: return "Series(" + std::to_string(c.series) + ")";
    case WorldKind::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string name_text(const Classification& c) {
  if (c.world == WorldKind::Series) return "H^(" + std::to_string(c.series) + ")";
  if (c.category) return std::string(category_name(*c.category));
  return "?";
}

std::string to_record(const Classification& c) {
  std::ostringstream os;
  os << "world=" << world_text(c) << '\n';
  os << "name=" << name_text(c) << '\n';
  const bool exact = c.point_budget == 0;
  os << "exact=" << (exact ? "true" : "false") << '\n';
  if (!exact) {
    os << "point_budget=" << c.point_budget << '\n';
    os << "intermediate_budget=" << c.intermediate_budget << '\n';
    os << "saturated=" << (c.saturated ? "true" : "false") << '\n';
  }
  for (const auto& e : c.evidence)
    os << "evidence=" << canonical_text(e.witness) << " | " << e.reason << '\n';
  return os.str();
}

Classification classify_noncrossing(const std::vector<Partition>& generators) {
  for (const auto& g : generators)
    if (!is_noncrossing(g))
      throw NotNoncrossing(canonical_text(g) + " is not noncrossing");
  return lattice_meet(generators, free_categories(), WorldKind::Free7);
}

Classification classify_classical(const std::vector<Partition>& generators) {
  std::vector<Partition> with_crossing = generators;
  with_crossing.push_back(named_partition(NamedKind::Crossing));
  return lattice_meet(with_crossing, classical_categories(), WorldKind::Classical6);
}

Classification classify_easy(const std::vector<Partition>& generators,
                             Budgets budgets) {
  ClosureOptions o;
  o.point_budget = budgets.point_budget;
  o.intermediate_budget = budgets.intermediate_budget;
  check_budgets({}, o);
  const bool all_nc = std::all_of(generators.begin(), generators.end(),
                                  [](const Partition& g) { return is_noncrossing(g); });
  if (all_nc) return classify_noncrossing(generators);

  const Partition crossing = named_partition(NamedKind::Crossing);
  if (crossing.size() <= o.point_budget) o.stop_when_found = {crossing};
  const ClosureSet closure = generate_closure(generators, o);

  Classification probe;
  Prober check{closure, probe};
  auto finish = [&](Classification c) {
    c.point_budget = budgets.point_budget;
    c.intermediate_budget = budgets.intermediate_budget;
    c.saturated = closure.saturated;
    c.evidence.insert(c.evidence.begin(), probe.evidence.begin(), probe.evidence.end());
    return c;
  };

  if (check(crossing, "crossing") == Membership::Confirmed)
    return finish(classify_classical(generators));

  Classification out;
  if (check(named_partition(NamedKind::HalfLib), "halflib") == Membership::Confirmed) {
    if (check(named_partition(NamedKind::FourBlock), "fourblock") ==
        Membership::NotFoundWithinBudget) {
      out.world = WorldKind::HalfLib;
      const bool ds = check(named_partition(NamedKind::DoubleSingleton),
                            "double-singleton") == Membership::Confirmed;
      out.category = ds ? CategoryId::BSharpStar : CategoryId::OStar;
      return finish(out);
    }
    std::vector<int> found;
    const int largest = static_cast<int>(budgets.point_budget / 2);
    for (int t = 3; t <= largest; ++t)
      if (check(named_partition(NamedKind::H, t), "h_" + std::to_string(t)) ==
          Membership::Confirmed)
        found.push_back(t);
    // h_t beyond the point budget can only be known as a generator.
    for (const auto& g : generators) {
      const int t = static_cast<int>(g.size() / 2);
      if (g.size() % 2 == 0 && t > largest &&
          to_lower_row(g) == named_partition(NamedKind::H, t)) {
        found.push_back(t);
        probe.evidence.push_back({g, "h_" + std::to_string(t) + " generator"});
      }
    }
    if (found.empty()) {
      out.world = WorldKind::HalfLib;
      out.category = CategoryId::HStar;
      return finish(out);
    }
    int g = 0;
    for (int t : found) g = std::gcd(g, t);
    if (g >= 3) {
      out.world = WorldKind::Series;
      out.category = CategoryId::HSeries;
      out.series = g;
      return finish(out);
    }
    probe.evidence.push_back(
        {crossing, "gcd of h_t indices is " + std::to_string(g) +
                       ", which forces the crossing partition"});
    return finish(out);
  }
  check(named_partition(NamedKind::FourBlock), "fourblock");
  check(named_partition(NamedKind::DoubleSingleton), "double-singleton");
  check(named_partition(NamedKind::Singleton), "singleton");
  return finish(out);
}

}  // namespace easycat
