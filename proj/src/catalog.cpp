#include "easycat/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <string>

#include "easycat/category_ops.hpp"
#include "easycat/error.hpp"

namespace easycat {

namespace {

Partition lower_row(std::vector<std::uint8_t> labels) {
  return Partition::from_labels(0, labels.size(), labels);
}

int parse_param(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw UnknownName("bad parameter in '" + std::string(whole) + "'");
  return value;
}

struct BlockStats {
  std::size_t size = 0;
  std::size_t plus = 0;
  std::size_t minus = 0;
};

std::vector<BlockStats> block_stats(const Partition& p) {
  std::vector<BlockStats> out(p.block_count());
  const auto seq = p.linear_labels();
  for (std::size_t t = 0; t < seq.size(); ++t) {
    auto& b = out[seq[t]];
    ++b.size;
    (mark_at(t) == Mark::Plus ? b.plus : b.minus) += 1;
  }
  return out;
}

bool all_pairs(const std::vector<BlockStats>& bs) {
  return std::all_of(bs.begin(), bs.end(),
                     [](const BlockStats& b) { return b.size == 2; });
}

bool all_even(const std::vector<BlockStats>& bs) {
  return std::all_of(bs.begin(), bs.end(),
                     [](const BlockStats& b) { return b.size % 2 == 0; });
}

bool even_odd_blocks(const std::vector<BlockStats>& bs) {
  return std::count_if(bs.begin(), bs.end(), [](const BlockStats& b) {
           return b.size % 2 == 1;
         }) % 2 == 0;
}

bool at_most_two(const std::vector<BlockStats>& bs) {
  return std::all_of(bs.begin(), bs.end(),
                     [](const BlockStats& b) { return b.size <= 2; });
}

bool even_singletons(const std::vector<BlockStats>& bs) {
  return std::count_if(bs.begin(), bs.end(), [](const BlockStats& b) {
           return b.size == 1;
         }) % 2 == 0;
}

bool pairs_balanced(const std::vector<BlockStats>& bs) {
  return std::all_of(bs.begin(), bs.end(), [](const BlockStats& b) {
    return b.size != 2 || b.plus == 1;
  });
}

bool blocks_balanced(const std::vector<BlockStats>& bs) {
  return std::all_of(bs.begin(), bs.end(),
                     [](const BlockStats& b) { return b.plus == b.minus; });
}

// Block rule shared by the free and classical versions of a category.
bool block_rule(CategoryId id, const std::vector<BlockStats>& bs) {
  switch (id) {
    case CategoryId::OFree:
    case CategoryId::O:
      return all_pairs(bs);
    case CategoryId::HFree:
    case CategoryId::H:
      return all_even(bs);
    case CategoryId::SPrimeFree:
    case CategoryId::SPrime:
      return even_odd_blocks(bs);
    case CategoryId::SFree:
    case CategoryId::S:
      return true;
    case CategoryId::BSharpFree:
      return at_most_two(bs) && even_singletons(bs) && pairs_balanced(bs);
    case CategoryId::BPrimeFree:
    case CategoryId::BPrime:
      return at_most_two(bs) && even_singletons(bs);
    case CategoryId::BFree:
    case CategoryId::B:
      return at_most_two(bs);
    case CategoryId::OStar:
      return all_pairs(bs) && pairs_balanced(bs);
    case CategoryId::HStar:
      return all_even(bs) && blocks_balanced(bs);
    case CategoryId::BSharpStar:
      return at_most_two(bs) && even_singletons(bs) && pairs_balanced(bs);
    case CategoryId::HSeries:
    case CategoryId::FatCross:
      break;
  }
  throw NoPredicate("category " + std::string(category_name(id)) +
                    " has no membership predicate");
}

using NK = NamedKind;

std::vector<CatalogEntry> build_catalog() {
  const NamedPartition single{NK::Singleton},
      dsingle{NK::DoubleSingleton}, four{NK::FourBlock},
      positioner{NK::Positioner}, cross{NK::Crossing}, halflib{NK::HalfLib},
      hs{NK::H, 0}, fat{NK::FatCrossing};
  using W = World;
  using C = CategoryId;
  return {
      {C::OFree, "O+", W::Noncrossing, {}, true},
      {C::HFree, "H+", W::Noncrossing, {four}, true},
      {C::SPrimeFree, "S'+", W::Noncrossing, {dsingle, four}, true},
      {C::SFree, "S+", W::Noncrossing, {single, four}, true},
      {C::BSharpFree, "B#+", W::Noncrossing, {dsingle}, true},
      {C::BPrimeFree, "B'+", W::Noncrossing, {positioner}, true},
      {C::BFree, "B+", W::Noncrossing, {single}, true},
      {C::O, "O", W::Classical, {cross}, true},
      {C::H, "H", W::Classical, {cross, four}, true},
      {C::SPrime, "S'", W::Classical, {cross, dsingle, four}, true},
      {C::S, "S", W::Classical, {cross, single, four}, true},
      {C::BPrime, "B'", W::Classical, {cross, positioner}, true},
      {C::B, "B", W::Classical, {cross, single}, true},
      {C::OStar, "O*", W::HalfLiberated, {halflib}, true},
      {C::HStar, "H*", W::HalfLiberated, {halflib, four}, true},
      {C::BSharpStar, "B#*", W::HalfLiberated, {halflib, dsingle}, true},
      {C::HSeries, "H^(s)", W::HyperoctahedralSeries, {halflib, four, hs},
       false},
      {C::FatCross, "fatcross", W::HyperoctahedralSeries, {fat, four}, false},
  };
}

// Direct inclusions; category_included takes the reflexive-transitive
// closure.
const std::vector<std::pair<CategoryId, CategoryId>>& cover_edges() {
  using C = CategoryId;
  static const std::vector<std::pair<C, C>> edges = {
      {C::OFree, C::HFree},        {C::HFree, C::SPrimeFree},
      {C::SPrimeFree, C::SFree},   {C::OFree, C::BSharpFree},
      {C::BSharpFree, C::BPrimeFree}, {C::BPrimeFree, C::BFree},
      {C::BFree, C::SFree},        {C::BPrimeFree, C::SPrimeFree},
      {C::O, C::H},                {C::H, C::SPrime},
      {C::SPrime, C::S},           {C::O, C::BPrime},
      {C::BPrime, C::B},           {C::B, C::S},
      {C::BPrime, C::SPrime},      {C::OStar, C::HStar},
      {C::OStar, C::BSharpStar},
  };
  return edges;
}

}  // namespace

Partition named_partition(NamedKind kind, int param) {
  switch (kind) {
    case NK::Unit:
      return parse_partition("P(1,1): u1,l1");
    case NK::Pair:
      return lower_row({0, 0});
    case NK::Singleton:
      return lower_row({0});
    case NK::DoubleSingleton:
      return lower_row({0, 1});
    case NK::Block:
      if (param < 1) throw BadParam("block size must be at least 1");
      if (param > static_cast<int>(kMaxPoints))
        throw BadParam("block size exceeds point limit");
      return lower_row(std::vector<std::uint8_t>(param, 0));
    case NK::FourBlock:
      return lower_row({0, 0, 0, 0});
    case NK::Positioner:
      return lower_row({0, 1, 2, 1});
    case NK::Crossing:
      return parse_partition("P(2,2): u1,l2; u2,l1");
    case NK::HalfLib:
      return parse_partition("P(3,3): u1,l3; u2,l2; u3,l1");
    case NK::H: {
      if (param < 1) throw BadParam("h_s needs s >= 1");
      if (2 * static_cast<std::size_t>(param) > kMaxPoints)
        throw BadParam("h_s exceeds point limit");
      std::vector<std::uint8_t> labels(2 * param);
      for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i % 2;
      return lower_row(std::move(labels));
    }
    case NK::K: {
      if (param < 1) throw BadParam("k_l needs l >= 1");
      const std::size_t w = static_cast<std::size_t>(param) + 2;
      if (2 * w > kMaxPoints) throw BadParam("k_l exceeds point limit");
      std::vector<Block> blocks{{upper(1), upper(w), lower(1), lower(w)}};
      for (std::size_t i = 2; i <= w - 1; ++i)
        blocks.push_back({upper(i), lower(i)});
      return make_partition(w, w, blocks);
    }
    case NK::FatCrossing:
      return parse_partition("P(4,4): u1,u2,l3,l4; u3,u4,l1,l2");
  }
  throw BadParam("unknown named partition");
}

NamedPartition parse_named_partition(std::string_view name) {
  static const std::map<std::string, NamedKind, std::less<>> plain = {
      {"unit", NK::Unit},
      {"pair", NK::Pair},
      {"singleton", NK::Singleton},
      {"double-singleton", NK::DoubleSingleton},
      {"fourblock", NK::FourBlock},
      {"positioner", NK::Positioner},
      {"crossing", NK::Crossing},
      {"halflib", NK::HalfLib},
      {"fatcross", NK::FatCrossing},
  };
  if (auto it = plain.find(name); it != plain.end()) return {it->second, 0};
  const auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    const auto head = name.substr(0, colon);
    const int value = parse_param(name.substr(colon + 1), name);
    if (head == "block") return {NK::Block, value};
    if (head == "h") return {NK::H, value};
    if (head == "k") return {NK::K, value};
  }
  throw UnknownName("unknown partition name '" + std::string(name) + "'");
}

std::string to_string(NamedPartition np) {
  switch (np.kind) {
    case NK::Unit: return "unit";
    case NK::Pair: return "pair";
    case NK::Singleton: return "singleton";
    case NK::DoubleSingleton: return "double-singleton";
    case NK::Block: return "block:" + std::to_string(np.param);
    case NK::FourBlock: return "fourblock";
    case NK::Positioner: return "positioner";
    case NK::Crossing: return "crossing";
    case NK::HalfLib: return "halflib";
    case NK::H: return np.param == 0 ? "h:s" : "h:" + std::to_string(np.param);
    case NK::K: return "k:" + std::to_string(np.param);
    case NK::FatCrossing: return "fatcross";
  }
  return "?";
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(CategoryId id) {
  return catalog().at(static_cast<std::size_t>(id));
}

std::string_view category_name(CategoryId id) { return catalog_entry(id).name; }

CategoryId parse_category(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return e.id;
  throw UnknownName("unknown category '" + std::string(name) + "'");
}

bool has_predicate(CategoryId id) { return catalog_entry(id).has_predicate; }

bool in_category(CategoryId id, const Partition& p) {
  if (!has_predicate(id))
    throw NoPredicate("category " + std::string(category_name(id)) +
                      " has no membership predicate");
  const World w = catalog_entry(id).world;
  if (w == World::Noncrossing && !is_noncrossing(p)) return false;
  return block_rule(id, block_stats(p));
}

Predicate category_predicate(CategoryId id) {
  if (!has_predicate(id))
    throw NoPredicate("category " + std::string(category_name(id)) +
                      " has no membership predicate");
  return [id](const Partition& p) { return in_category(id, p); };
}

std::vector<Partition> catalog_generators(CategoryId id, int series_s) {
  std::vector<Partition> out;
  for (NamedPartition np : catalog_entry(id).generators) {
    if (np.kind == NK::H && np.param == 0) {
      if (series_s < 3) throw BadParam("the h_s series needs s >= 3");
      np.param = series_s;
    }
    out.push_back(named_partition(np));
  }
  return out;
}

std::vector<Partition> enumerate_category(CategoryId id,
                                          std::size_t total_points) {
  if (!has_predicate(id))
    throw NoPredicate("category " + std::string(category_name(id)) +
                      " has no membership predicate");
  const bool nc = catalog_entry(id).world == World::Noncrossing;
  std::vector<Partition> out;
  for_each_partition(0, total_points, nc, [&](const Partition& p) {
    if (in_category(id, p)) out.push_back(p);
  });
  return out;
}

const std::vector<CategoryId>& free_categories() {
  using C = CategoryId;
  static const std::vector<C> v = {C::OFree,      C::HFree,      C::SPrimeFree,
                                   C::SFree,      C::BSharpFree, C::BPrimeFree,
                                   C::BFree};
  return v;
}

const std::vector<CategoryId>& classical_categories() {
  using C = CategoryId;
  static const std::vector<C> v = {C::O, C::H, C::SPrime, C::S, C::BPrime, C::B};
  return v;
}

const std::vector<CategoryId>& halflib_categories() {
  using C = CategoryId;
  static const std::vector<C> v = {C::OStar, C::HStar, C::BSharpStar};
  return v;
}

bool category_included(CategoryId a, CategoryId b) {
  if (a == b) return true;
  std::vector<CategoryId> stack{a};
  std::vector<bool> seen(catalog().size(), false);
  seen[static_cast<std::size_t>(a)] = true;
  while (!stack.empty()) {
    const CategoryId c = stack.back();
    stack.pop_back();
    for (auto [from, to] : cover_edges()) {
      if (from != c || seen[static_cast<std::size_t>(to)]) continue;
      if (to == b) return true;
      seen[static_cast<std::size_t>(to)] = true;
      stack.push_back(to);
    }
  }
  return false;
}

}  // namespace easycat
