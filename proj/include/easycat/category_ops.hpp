#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "easycat/partition.hpp"

namespace easycat {

Partition tensor(const Partition& p, const Partition& q);

struct ComposeResult {
  Partition result;
  // Middle-row components that reach neither the upper row of p nor the
  // lower row of q. Each contributes a factor n to T_q T_p.
  std::size_t removed_loops = 0;
};

// p in P(k,l) on top of q in P(l,m); result in P(k,m).
ComposeResult compose(const Partition& p, const Partition& q);

Partition involute(const Partition& p);

// Named by the direction the moved point travels.
//   DownLeft   leftmost upper point -> leftmost lower position   (k >= 1)
//   UpLeft     leftmost lower point -> leftmost upper position   (l >= 1)
//   DownRight  rightmost upper point -> rightmost lower position (k >= 1)
//   UpRight    rightmost lower point -> rightmost upper position (l >= 1)
//   CycleLeft  on P(0,l): first point moves to the right end
//   CycleRight on P(0,l): last point moves to the left end
enum class Rotation { UpLeft, DownLeft, UpRight, DownRight, CycleLeft, CycleRight };

Partition rotate(const Partition& p, Rotation where);

// Cyclic rotation of the linearization by `steps` positions, keeping the
// shape P(k,l). A step moves the first linear point to the end.
Partition rotate_linear(const Partition& p, std::size_t steps);

// The same connections redrawn in P(0, k+l).
Partition to_lower_row(const Partition& p);

inline constexpr std::size_t kDefaultEnumerationCap = 12;

// All partitions of P(k,l), canonical order (lexicographic in labels).
std::vector<Partition> enumerate_all(std::size_t k, std::size_t l,
                                     bool noncrossing_only,
                                     std::size_t cap = kDefaultEnumerationCap);

// Streaming form of enumerate_all; avoids materializing the list.
void for_each_partition(std::size_t k, std::size_t l, bool noncrossing_only,
                        const std::function<void(const Partition&)>& visit,
                        std::size_t cap = kDefaultEnumerationCap);

}  // namespace easycat
