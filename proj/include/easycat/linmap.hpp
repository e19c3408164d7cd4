#pragma once

// The linear maps T_p on tensor powers of C^n, and checks of the
// partition/relation dictionary against concrete classical groups.

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "easycat/partition.hpp"

namespace easycat {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Largest n^k allowed on either side of a matrix.
inline constexpr std::size_t kMatrixSideCap = 10000;

struct IntertwinerMatrix {
  std::size_t n = 0;
  Partition p;
  // n^l rows, n^k columns. Tuples are indexed big-endian with values
  // 0..n-1, so (i_1,...,i_k) sits at sum (i_t - 1) n^(k-t).
  IntMatrix entries;
};

// Indices are 1-based as in the definition; throws IndexRange otherwise.
int delta(const Partition& p, std::span<const std::size_t> i,
          std::span<const std::size_t> j, std::size_t n);

IntertwinerMatrix t_matrix(const Partition& p, std::size_t n);

// n^power, or MemoryCap when it exceeds kMatrixSideCap.
std::size_t checked_power(std::size_t n, std::size_t power);

struct FunctorCheck {
  bool composition = false;  // T_q T_p = n^loops T_{pq}
  bool tensor = false;       // T_{p (x) q} = T_p (x) T_q
  bool adjoint = false;      // T_{p*} = T_p^t (checked for p and q)
  bool ok() const { return composition && tensor && adjoint; }
};

// p in P(k,l) on top of q in P(l,m).
FunctorCheck check_functor_detail(const Partition& p, const Partition& q,
                                  std::size_t n);
bool check_functor(const Partition& p, const Partition& q, std::size_t n);
// Only T_q T_p = n^loops T_{pq}.
bool check_composition(const Partition& p, const Partition& q, std::size_t n);

// T_p as the list of nonzero rows in each column (all entries are 1).
struct SparseT {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::uint32_t>> col_rows;
  std::size_t nonzeros = 0;
};
SparseT t_sparse(const Partition& p, std::size_t n);

// Sparse product check T_q T_p == scale * T_pq. Reuses its scratch space
// between calls.
class SparseProductCheck {
 public:
  bool operator()(const SparseT& tp, const SparseT& tq, const SparseT& tpq,
                  std::int64_t scale);

 private:
  std::vector<std::int64_t> acc_;
  std::vector<std::size_t> touched_;
};

enum class RepKind { SymmetricGroup, Hyperoctahedral, Bistochastic, OrthogonalSample };

struct GroupRep {
  RepKind kind = RepKind::SymmetricGroup;
  std::size_t n = 0;
  // Finite kinds hold small integer entries, for which double arithmetic is
  // exact at the sizes involved; their tolerance is 0.
  std::vector<Eigen::MatrixXd> elements;
  double tolerance = 0.0;
};

inline constexpr double kSampleTolerance = 1e-9;
inline constexpr std::size_t kMaxSymmetricN = 6;
inline constexpr std::size_t kMaxHyperoctahedralN = 4;

// sample_count and seed only matter for the sampled kinds.
GroupRep classical_rep(RepKind kind, std::size_t n, std::size_t sample_count = 20,
                       std::uint64_t seed = 0);

// Largest entry of |T_p u^(x)k - u^(x)l T_p| over the elements of rep.
double intertwiner_defect(const GroupRep& rep, const Partition& p);
bool check_intertwiner(const GroupRep& rep, const Partition& p);

// (A^(x)k) M for an n x n matrix A and M with n^k rows, without forming the
// Kronecker power.
Eigen::MatrixXd kron_power_apply(const Eigen::MatrixXd& a, std::size_t k,
                                 const Eigen::MatrixXd& m);

std::string_view to_string(RepKind kind);
RepKind parse_rep_kind(std::string_view name);

}  // namespace easycat
