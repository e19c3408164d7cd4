#pragma once

// Two-row set partitions P(k,l): k upper points, l lower points, grouped into
// blocks. Values are immutable after construction and always canonical, so
// structural equality is partition equality.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace easycat {

enum class Row : std::uint8_t { Upper, Lower };

struct Point {
  Row row = Row::Upper;
  std::size_t index = 1;  // 1-based, left to right within the row

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (a.row != b.row) return a.row == Row::Upper ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
    return a.index <=> b.index;
  }
};

inline Point upper(std::size_t i) { return {Row::Upper, i}; }
inline Point lower(std::size_t i) { return {Row::Lower, i}; }

using Block = std::vector<Point>;

// Hard limit on k + l; block ids are stored in a byte.
inline constexpr std::size_t kMaxPoints = 255;

class Partition {
 public:
  // The empty partition in P(0,0).
  Partition() = default;

  // Builds from one block id per point, in point order u1..uk, l1..ll. Ids
  // are arbitrary small integers; they are renumbered to first-occurrence
  // order.
  static Partition from_labels(std::size_t k, std::size_t l,
                               std::span<const std::uint8_t> labels);

  // Builds from block ids given in linearized order (see linearize()).
  static Partition from_linear(std::size_t k, std::size_t l,
                               std::span<const std::uint8_t> linear_labels);

  std::size_t upper_count() const { return k_; }
  std::size_t lower_count() const { return labels_.size() - k_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t block_count() const { return blocks_; }
  bool empty() const { return labels_.empty(); }

  // Canonical block id of every point, point order u1..uk, l1..ll. Blocks are
  // numbered by their least point.
  std::span<const std::uint8_t> labels() const { return labels_; }
  std::uint8_t block_of(Point p) const;

  // Blocks in canonical order, each sorted.
  std::vector<Block> blocks() const;

  // Block ids in linearized order u_k..u_1, l_1..l_l (not renumbered).
  std::vector<std::uint8_t> linear_labels() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Orders by total size, then upper count, then labels.
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b);

 private:
  std::size_t k_ = 0;
  std::size_t blocks_ = 0;
  std::vector<std::uint8_t> labels_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

Partition make_partition(std::size_t k, std::size_t l,
                         const std::vector<Block>& blocks);

// Grammar: `P(<k>,<l>): <block> (';' <block>)*`, block = comma separated
// point codes u<i> / l<j>. Whitespace is ignored. The empty partition is
// written `P(0,0):`.
Partition parse_partition(std::string_view text);

std::string canonical_text(const Partition& p);

enum class Mark : std::uint8_t { Plus, Minus };

struct Linearization {
  std::vector<Point> points;  // u_k, ..., u_1, l_1, ..., l_l
  std::vector<Mark> marks;    // alternating, starting with Plus
};

Linearization linearize(const Partition& p);

// Mark of the point at linear position `pos` (0-based).
inline Mark mark_at(std::size_t pos) {
  return pos % 2 == 0 ? Mark::Plus : Mark::Minus;
}

// Linear position (0-based) of a point of p.
std::size_t linear_position(const Partition& p, Point pt);

bool is_noncrossing(const Partition& p);

// Same test on a bare sequence of block ids.
bool is_noncrossing_sequence(std::span<const std::uint8_t> seq);

struct BlockProfile {
  std::vector<std::size_t> sizes;  // ascending
  std::size_t singleton_count = 0;
  std::size_t odd_block_count = 0;
  // (plus, minus) per block, canonical block order
  std::vector<std::pair<std::size_t, std::size_t>> marks;
};

BlockProfile block_profile(const Partition& p);

}  // namespace easycat
