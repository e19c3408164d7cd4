#include "easycat/partition.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <string>

#include "easycat/error.hpp"

namespace easycat {

namespace {

constexpr std::uint8_t kUnset = 0xff;

std::size_t point_offset(std::size_t k, Point p) {
  return p.row == Row::Upper ? p.index - 1 : k + p.index - 1;
}

Point point_at(std::size_t k, std::size_t offset) {
  return offset < k ? upper(offset + 1) : lower(offset - k + 1);
}

// Linear position t <-> point offset. Linear order is u_k..u_1, l_1..l_l.
std::size_t offset_of_linear(std::size_t k, std::size_t t) {
  return t < k ? k - 1 - t : t;
}

void check_size(std::size_t k, std::size_t l) {
  if (k + l > kMaxPoints)
    throw RangeError("partition has " + std::to_string(k + l) +
                     " points, limit is " + std::to_string(kMaxPoints));
}

}  // namespace

Partition Partition::from_labels(std::size_t k, std::size_t l,
                                 std::span<const std::uint8_t> labels) {
  check_size(k, l);
  if (labels.size() != k + l)
    throw RangeError("label count does not match k + l");
  Partition p;
  p.k_ = k;
  p.labels_.resize(labels.size());
  std::array<std::uint8_t, 256> remap;
  remap.fill(kUnset);
  std::uint8_t next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto& r = remap[labels[i]];
    if (r == kUnset) r = next++;
    p.labels_[i] = r;
  }
  p.blocks_ = next;
  return p;
}

Partition Partition::from_linear(std::size_t k, std::size_t l,
                                 std::span<const std::uint8_t> linear_labels) {
  check_size(k, l);
  if (linear_labels.size() != k + l)
    throw RangeError("label count does not match k + l");
  std::vector<std::uint8_t> by_point(k + l);
  for (std::size_t t = 0; t < k + l; ++t)
    by_point[offset_of_linear(k, t)] = linear_labels[t];
  return from_labels(k, l, by_point);
}

std::uint8_t Partition::block_of(Point p) const {
  const std::size_t count = p.row == Row::Upper ? k_ : lower_count();
  if (p.index < 1 || p.index > count)
    throw RangeError("point index out of range");
  return labels_[point_offset(k_, p)];
}

std::vector<Block> Partition::blocks() const {
  std::vector<Block> out(blocks_);
  for (std::size_t i = 0; i < labels_.size(); ++i)
    out[labels_[i]].push_back(point_at(k_, i));
  return out;
}

std::vector<std::uint8_t> Partition::linear_labels() const {
  std::vector<std::uint8_t> out(labels_.size());
  for (std::size_t t = 0; t < out.size(); ++t)
    out[t] = labels_[offset_of_linear(k_, t)];
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.labels_.begin(), a.labels_.end(), b.labels_.begin(), b.labels_.end());
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull ^ (p.upper_count() * 0x9e3779b97f4a7c15ull);
  for (auto v : p.labels()) {
    h ^= v + 1;
    h *= 0x100000001b3ull;
  }
  return h ^ p.size();
}

Partition make_partition(std::size_t k, std::size_t l,
                         const std::vector<Block>& blocks) {
  check_size(k, l);
  std::vector<std::uint8_t> labels(k + l, kUnset);
  if (blocks.size() > kMaxPoints) throw RangeError("too many blocks");
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw CoverageError("empty block");
    for (const Point& pt : blocks[b]) {
      const std::size_t count = pt.row == Row::Upper ? k : l;
      if (pt.index < 1 || pt.index > count)
        throw RangeError(std::string(pt.row == Row::Upper ? "u" : "l") +
                         std::to_string(pt.index) + " is out of range for P(" +
                         std::to_string(k) + "," + std::to_string(l) + ")");
      auto& slot = labels[point_offset(k, pt)];
      if (slot != kUnset)
        throw OverlapError(std::string(pt.row == Row::Upper ? "u" : "l") +
                           std::to_string(pt.index) +
                           " appears more than once");
      slot = static_cast<std::uint8_t>(b);
    }
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == kUnset) {
      const Point pt = point_at(k, i);
      throw CoverageError(std::string(pt.row == Row::Upper ? "u" : "l") +
                          std::to_string(pt.index) + " is not in any block");
    }
  }
  return Partition::from_labels(k, l, labels);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  Partition run() {
    expect('P');
    expect('(');
    const std::size_t k = number();
    expect(',');
    const std::size_t l = number();
    expect(')');
    expect(':');
    std::vector<Block> blocks;
    if (pos_ < s_.size()) {
      blocks.push_back(block());
      while (pos_ < s_.size()) {
        expect(';');
        blocks.push_back(block());
      }
    }
    return make_partition(k, l, blocks);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + " at offset " + std::to_string(pos_) + " in '" +
                      s_ + "'");
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t number() {
    std::size_t value = 0;
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  Point point() {
    if (pos_ >= s_.size()) fail("expected a point code");
    Row row;
    if (s_[pos_] == 'u')
      row = Row::Upper;
    else if (s_[pos_] == 'l')
      row = Row::Lower;
    else
      fail("expected 'u' or 'l'");
    ++pos_;
    return {row, number()};
  }

  Block block() {
    Block b{point()};
    while (pos_ < s_.size() && s_[pos_] == ',') {
      ++pos_;
      b.push_back(point());
    }
    return b;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Partition parse_partition(std::string_view text) { return Parser(text).run(); }

std::string canonical_text(const Partition& p) {
  std::string out = "P(" + std::to_string(p.upper_count()) + "," +
                    std::to_string(p.lower_count()) + "):";
  bool first_block = true;
  for (const Block& b : p.blocks()) {
    out += first_block ? " " : "; ";
    first_block = false;
    bool first_point = true;
    for (const Point& pt : b) {
      if (!first_point) out += ',';
      first_point = false;
      out += pt.row == Row::Upper ? 'u' : 'l';
      out += std::to_string(pt.index);
    }
  }
  return out;
}

Linearization linearize(const Partition& p) {
  Linearization lin;
  const std::size_t k = p.upper_count();
  lin.points.reserve(p.size());
  lin.marks.reserve(p.size());
  for (std::size_t t = 0; t < p.size(); ++t) {
    lin.points.push_back(point_at(k, offset_of_linear(k, t)));
    lin.marks.push_back(mark_at(t));
  }
  return lin;
}

std::size_t linear_position(const Partition& p, Point pt) {
  const std::size_t k = p.upper_count();
  const std::size_t count = pt.row == Row::Upper ? k : p.lower_count();
  if (pt.index < 1 || pt.index > count)
    throw RangeError("point index out of range");
  return pt.row == Row::Upper ? k - pt.index : k + pt.index - 1;
}

bool is_noncrossing_sequence(std::span<const std::uint8_t> seq) {
  std::array<std::int16_t, 256> last;
  last.fill(-1);
  for (std::size_t i = 0; i < seq.size(); ++i)
    last[seq[i]] = static_cast<std::int16_t>(i);
  std::array<bool, 256> seen{};
  std::array<std::uint8_t, 256> stack;
  std::size_t depth = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const std::uint8_t b = seq[i];
    if (!seen[b]) {
      seen[b] = true;
      stack[depth++] = b;
    } else if (stack[depth - 1] != b) {
      // some block opened after b is still open: it straddles this point
      return false;
    }
    if (last[b] == static_cast<std::int16_t>(i)) --depth;
  }
  return true;
}

bool is_noncrossing(const Partition& p) {
  const auto seq = p.linear_labels();
  return is_noncrossing_sequence(seq);
}

BlockProfile block_profile(const Partition& p) {
  BlockProfile prof;
  std::vector<std::size_t> sizes(p.block_count(), 0);
  prof.marks.assign(p.block_count(), {0, 0});
  const auto seq = p.linear_labels();
  for (std::size_t t = 0; t < seq.size(); ++t) {
    ++sizes[seq[t]];
    auto& pm = prof.marks[seq[t]];
    (mark_at(t) == Mark::Plus ? pm.first : pm.second) += 1;
  }
  for (std::size_t s : sizes) {
    if (s == 1) ++prof.singleton_count;
    if (s % 2 == 1) ++prof.odd_block_count;
  }
  std::sort(sizes.begin(), sizes.end());
  prof.sizes = std::move(sizes);
  return prof;
}

}  // namespace easycat
