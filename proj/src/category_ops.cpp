#include "easycat/category_ops.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "easycat/error.hpp"

namespace easycat {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

std::string shape(const Partition& p) {
  return "P(" + std::to_string(p.upper_count()) + "," +
         std::to_string(p.lower_count()) + ")";
}

}  // namespace

Partition tensor(const Partition& p, const Partition& q) {
  const std::size_t k = p.upper_count(), l = p.lower_count();
  const std::size_t k2 = q.upper_count(), l2 = q.lower_count();
  if (p.size() + q.size() > kMaxPoints)
    throw RangeError("tensor product exceeds point limit");
  if (p.block_count() + q.block_count() > kMaxPoints)
    throw RangeError("tensor product exceeds block limit");
  const auto shift = static_cast<std::uint8_t>(p.block_count());
  const auto pl = p.labels();
  const auto ql = q.labels();
  std::vector<std::uint8_t> out;
  out.reserve(p.size() + q.size());
  out.insert(out.end(), pl.begin(), pl.begin() + k);
  for (std::size_t i = 0; i < k2; ++i) out.push_back(ql[i] + shift);
  out.insert(out.end(), pl.begin() + k, pl.end());
  for (std::size_t i = k2; i < k2 + l2; ++i) out.push_back(ql[i] + shift);
  return Partition::from_labels(k + k2, l + l2, out);
}

ComposeResult compose(const Partition& p, const Partition& q) {
  const std::size_t k = p.upper_count(), l = p.lower_count();
  const std::size_t m = q.lower_count();
  if (q.upper_count() != l)
    throw ArityMismatch("cannot compose " + shape(p) + " with " + shape(q) +
                        ": middle rows differ");
  const std::size_t bp = p.block_count();
  UnionFind uf(bp + q.block_count());
  const auto pl = p.labels();
  const auto ql = q.labels();
  for (std::size_t i = 0; i < l; ++i) uf.unite(pl[k + i], bp + ql[i]);

  std::vector<bool> survives(bp + q.block_count(), false);
  std::vector<std::size_t> roots;
  roots.reserve(k + m);
  for (std::size_t i = 0; i < k; ++i) roots.push_back(uf.find(pl[i]));
  for (std::size_t i = 0; i < m; ++i) roots.push_back(uf.find(bp + ql[l + i]));
  std::vector<std::uint8_t> compressed(bp + q.block_count(), 0xff);
  std::vector<std::uint8_t> out;
  out.reserve(k + m);
  std::uint8_t next = 0;
  for (std::size_t r : roots) {
    survives[r] = true;
    auto& c = compressed[r];
    if (c == 0xff) c = next++;
    out.push_back(c);
  }
  std::size_t loops = 0;
  for (std::size_t b = 0; b < bp + q.block_count(); ++b)
    if (uf.find(b) == b && !survives[b]) ++loops;
  return {Partition::from_labels(k, m, out), loops};
}

Partition involute(const Partition& p) {
  const std::size_t k = p.upper_count(), l = p.lower_count();
  const auto pl = p.labels();
  std::vector<std::uint8_t> out;
  out.reserve(p.size());
  out.insert(out.end(), pl.begin() + k, pl.end());
  out.insert(out.end(), pl.begin(), pl.begin() + k);
  return Partition::from_labels(l, k, out);
}

Partition rotate(const Partition& p, Rotation where) {
  const std::size_t k = p.upper_count(), l = p.lower_count();
  auto seq = p.linear_labels();
  switch (where) {
    case Rotation::DownLeft:
      if (k == 0) throw EmptyRowError("no upper point to move down");
      return Partition::from_linear(k - 1, l + 1, seq);
    case Rotation::UpLeft:
      if (l == 0) throw EmptyRowError("no lower point to move up");
      return Partition::from_linear(k + 1, l - 1, seq);
    case Rotation::DownRight:
      if (k == 0) throw EmptyRowError("no upper point to move down");
      std::rotate(seq.begin(), seq.begin() + 1, seq.end());
      return Partition::from_linear(k - 1, l + 1, seq);
    case Rotation::UpRight:
      if (l == 0) throw EmptyRowError("no lower point to move up");
      std::rotate(seq.rbegin(), seq.rbegin() + 1, seq.rend());
      return Partition::from_linear(k + 1, l - 1, seq);
    case Rotation::CycleLeft:
    case Rotation::CycleRight:
      if (k != 0)
        throw CycleOnTwoRows("cyclic rotation needs an empty upper row, got " +
                             shape(p));
      if (l == 0) throw EmptyRowError("nothing to rotate in P(0,0)");
      if (where == Rotation::CycleLeft)
        std::rotate(seq.begin(), seq.begin() + 1, seq.end());
      else
        std::rotate(seq.rbegin(), seq.rbegin() + 1, seq.rend());
      return Partition::from_linear(0, l, seq);
  }
  return p;
}

Partition rotate_linear(const Partition& p, std::size_t steps) {
  auto seq = p.linear_labels();
  if (seq.empty()) return p;
  std::rotate(seq.begin(), seq.begin() + static_cast<long>(steps % seq.size()),
              seq.end());
  return Partition::from_linear(p.upper_count(), p.lower_count(), seq);
}

Partition to_lower_row(const Partition& p) {
  return Partition::from_linear(0, p.size(), p.linear_labels());
}

void for_each_partition(std::size_t k, std::size_t l, bool noncrossing_only,
                        const std::function<void(const Partition&)>& visit,
                        std::size_t cap) {
  const std::size_t n = k + l;
  if (n > cap)
    throw CapExceeded("enumeration of P(" + std::to_string(k) + "," +
                      std::to_string(l) + ") exceeds the cap of " +
                      std::to_string(cap) + " points");
  if (n == 0) {
    visit(Partition{});
    return;
  }
  // restricted growth strings in lexicographic order
  std::vector<std::uint8_t> rgs(n, 0);
  std::vector<std::uint8_t> max_prefix(n, 1);  // max of rgs[0..i] + 1
  while (true) {
    Partition p = Partition::from_labels(k, l, rgs);
    if (!noncrossing_only || is_noncrossing(p)) visit(p);
    // advance
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == max_prefix[i - 1]) --i;
    if (i == 0) return;
    ++rgs[i];
    max_prefix[i] = std::max<std::uint8_t>(max_prefix[i - 1], rgs[i] + 1);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      max_prefix[j] = max_prefix[j - 1];
    }
  }
}

std::vector<Partition> enumerate_all(std::size_t k, std::size_t l,
                                     bool noncrossing_only, std::size_t cap) {
  std::vector<Partition> out;
  for_each_partition(
      k, l, noncrossing_only, [&](const Partition& p) { out.push_back(p); },
      cap);
  return out;
}

}  // namespace easycat
