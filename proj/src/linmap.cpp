#include "easycat/linmap.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "easycat/category_ops.hpp"
#include "easycat/error.hpp"

namespace easycat {

std::size_t checked_power(std::size_t n, std::size_t power) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < power; ++i) {
    out *= n;
    if (out > kMatrixSideCap)
      throw MemoryCap(std::to_string(n) + "^" + std::to_string(power) +
                      " exceeds the matrix side cap of " +
                      std::to_string(kMatrixSideCap));
  }
  return out;
}

int delta(const Partition& p, std::span<const std::size_t> i,
          std::span<const std::size_t> j, std::size_t n) {
  if (i.size() != p.upper_count() || j.size() != p.lower_count())
    throw IndexRange("index tuple lengths do not match the partition shape");
  std::vector<std::size_t> value(p.block_count(), 0);
  const auto labels = p.labels();
  for (std::size_t t = 0; t < labels.size(); ++t) {
    const std::size_t v = t < i.size() ? i[t] : j[t - i.size()];
    if (v < 1 || v > n) throw IndexRange("index " + std::to_string(v) + " outside 1.." + std::to_string(n));
    auto& slot = value[labels[t]];
    if (slot == 0)
      slot = v;
    else if (slot != v)
      return 0;
  }
  return 1;
}

IntertwinerMatrix t_matrix(const Partition& p, std::size_t n) {
  if (n < 1) throw BadParam("dimension must be at least 1");
  const std::size_t k = p.upper_count(), l = p.lower_count();
  const std::size_t cols = checked_power(n, k);
  const std::size_t rows = checked_power(n, l);
  IntertwinerMatrix out{n, p, IntMatrix::Zero(rows, cols)};
  // Every nonzero entry comes from exactly one assignment of values to
  // blocks.
  const std::size_t b = p.block_count();
  std::vector<std::size_t> assign(b, 0);
  const auto labels = p.labels();
  while (true) {
    std::size_t col = 0, row = 0;
    for (std::size_t t = 0; t < k; ++t) col = col * n + assign[labels[t]];
    for (std::size_t t = k; t < k + l; ++t) row = row * n + assign[labels[t]];
    out.entries(row, col) = 1;
    std::size_t d = 0;
    while (d < b && ++assign[d] == n) assign[d++] = 0;
    if (d == b) break;
  }
  return out;
}

namespace {

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

bool check_composition(const Partition& p, const Partition& q, std::size_t n) {
  const ComposeResult pq = compose(p, q);
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < pq.removed_loops; ++i) scale *= static_cast<std::int64_t>(n);
  return t_matrix(q, n).entries * t_matrix(p, n).entries ==
         scale * t_matrix(pq.result, n).entries;
}

SparseT t_sparse(const Partition& p, std::size_t n) {
  if (n < 1) throw BadParam("dimension must be at least 1");
  const std::size_t k = p.upper_count(), l = p.lower_count();
  SparseT out;
  out.cols = checked_power(n, k);
  out.rows = checked_power(n, l);
  out.col_rows.resize(out.cols);
  const std::size_t b = p.block_count();
  std::vector<std::size_t> assign(b, 0);
  const auto labels = p.labels();
  while (true) {
    std::size_t col = 0, row = 0;
    for (std::size_t t = 0; t < k; ++t) col = col * n + assign[labels[t]];
    for (std::size_t t = k; t < k + l; ++t) row = row * n + assign[labels[t]];
    out.col_rows[col].push_back(static_cast<std::uint32_t>(row));
    ++out.nonzeros;
    std::size_t d = 0;
    while (d < b && ++assign[d] == n) assign[d++] = 0;
    if (d == b) break;
  }
  return out;
}

bool SparseProductCheck::operator()(const SparseT& tp, const SparseT& tq,
                                    const SparseT& tpq, std::int64_t scale) {
  if (tp.rows != tq.cols || tpq.rows != tq.rows || tpq.cols != tp.cols)
    throw ArityMismatch("matrix shapes do not compose");
  const std::size_t width = tp.cols;
  if (acc_.size() < tq.rows * width) acc_.assign(tq.rows * width, 0);
  for (std::size_t i = 0; i < width; ++i)
    for (std::uint32_t j : tp.col_rows[i])
      for (std::uint32_t r : tq.col_rows[j]) {
        const std::size_t at = r * width + i;
        if (acc_[at]++ == 0) touched_.push_back(at);
      }
  bool ok = touched_.size() == tpq.nonzeros;
  for (std::size_t i = 0; ok && i < width; ++i)
    for (std::uint32_t r : tpq.col_rows[i])
      if (acc_[r * width + i] != scale) {
        ok = false;
        break;
      }
  for (std::size_t at : touched_) acc_[at] = 0;
  touched_.clear();
  return ok;
}

FunctorCheck check_functor_detail(const Partition& p, const Partition& q,
                                  std::size_t n) {
  const IntMatrix tp = t_matrix(p, n).entries;
  const IntMatrix tq = t_matrix(q, n).entries;
  FunctorCheck out;
  out.composition = check_composition(p, q, n);
  out.tensor = t_matrix(tensor(p, q), n).entries == kron(tp, tq);
  out.adjoint = t_matrix(involute(p), n).entries == tp.transpose() &&
                t_matrix(involute(q), n).entries == tq.transpose();
  return out;
}

bool check_functor(const Partition& p, const Partition& q, std::size_t n) {
  return check_functor_detail(p, q, n).ok();
}

Eigen::MatrixXd kron_power_apply(const Eigen::MatrixXd& a, std::size_t k,
                                 const Eigen::MatrixXd& m) {
  const std::size_t n = static_cast<std::size_t>(a.rows());
  Eigen::MatrixXd cur = m;
  Eigen::MatrixXd next(m.rows(), m.cols());
  std::size_t stride = 1;
  for (std::size_t mode = 0; mode < k; ++mode) {
    // mode with the given stride; indices split as (outer, digit, inner)
    const std::size_t span_len = stride * n;
    const std::size_t outer = static_cast<std::size_t>(m.rows()) / span_len;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t in = 0; in < stride; ++in) {
          const std::size_t base = o * span_len + in;
          for (std::size_t r = 0; r < n; ++r) {
            double acc = 0.0;
            for (std::size_t s = 0; s < n; ++s)
              acc += a(r, s) * cur(base + s * stride, c);
            next(base + r * stride, c) = acc;
          }
        }
      }
    }
    std::swap(cur, next);
    stride *= n;
  }
  return cur;
}

namespace {

std::vector<Eigen::MatrixXd> permutation_matrices(std::size_t n, bool signs) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Eigen::MatrixXd> out;
  do {
    const std::size_t sign_patterns = signs ? (std::size_t{1} << n) : 1;
    for (std::size_t mask = 0; mask < sign_patterns; ++mask) {
      Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n, n);
      for (std::size_t c = 0; c < n; ++c)
        u(perm[c], c) = (mask >> c) & 1 ? -1.0 : 1.0;
      out.push_back(std::move(u));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the signs
// of R's diagonal moved into Q.
Eigen::MatrixXd random_orthogonal(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

// Orthogonal T with first column (1,...,1)/sqrt(n).
Eigen::MatrixXd all_ones_frame(std::size_t n) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  m.col(0).setOnes();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  Eigen::MatrixXd q = qr.householderQ();
  if (q(0, 0) < 0) q *= -1.0;
  return q;
}

}  // namespace

GroupRep classical_rep(RepKind kind, std::size_t n, std::size_t sample_count,
                       std::uint64_t seed) {
  if (n < 2) throw BadParam("classical_rep needs n >= 2");
  GroupRep rep;
  rep.kind = kind;
  rep.n = n;
  std::mt19937_64 rng(seed);
  switch (kind) {
    case RepKind::SymmetricGroup:
      if (n > kMaxSymmetricN)
        throw EnumerationTooLarge("S_" + std::to_string(n) + " is too large to enumerate");
      rep.elements = permutation_matrices(n, false);
      break;
    case RepKind::Hyperoctahedral:
      if (n > kMaxHyperoctahedralN)
        throw EnumerationTooLarge("H_" + std::to_string(n) + " is too large to enumerate");
      rep.elements = permutation_matrices(n, true);
      break;
    case RepKind::OrthogonalSample:
      rep.tolerance = kSampleTolerance;
      for (std::size_t s = 0; s < sample_count; ++s)
        rep.elements.push_back(random_orthogonal(n, rng));
      break;
    case RepKind::Bistochastic: {
      rep.tolerance = kSampleTolerance;
      const Eigen::MatrixXd t = all_ones_frame(n);
      for (std::size_t s = 0; s < sample_count; ++s) {
        Eigen::MatrixXd block = Eigen::MatrixXd::Identity(n, n);
        block.bottomRightCorner(n - 1, n - 1) = random_orthogonal(n - 1, rng);
        rep.elements.push_back(t * block * t.transpose());
      }
      break;
    }
  }
  return rep;
}

double intertwiner_defect(const GroupRep& rep, const Partition& p) {
  const std::size_t k = p.upper_count(), l = p.lower_count();
  checked_power(rep.n, k);
  checked_power(rep.n, l);
  const Eigen::MatrixXd t = t_matrix(p, rep.n).entries.cast<double>();
  double worst = 0.0;
  for (const auto& u : rep.elements) {
    // T u^(x)k = ((u^t)^(x)k T^t)^t
    const Eigen::MatrixXd lhs =
        kron_power_apply(u.transpose(), k, t.transpose()).transpose();
    const Eigen::MatrixXd rhs = kron_power_apply(u, l, t);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

bool check_intertwiner(const GroupRep& rep, const Partition& p) {
  return intertwiner_defect(rep, p) <= rep.tolerance;
}

std::string_view to_string(RepKind kind) {
  switch (kind) {
    case RepKind::SymmetricGroup: return "symmetric";
    case RepKind::Hyperoctahedral: return "hyperoctahedral";
    case RepKind::Bistochastic: return "bistochastic";
    case RepKind::OrthogonalSample: return "orthogonal";
  }
  return "?";
}

RepKind parse_rep_kind(std::string_view name) {
  for (RepKind k : {RepKind::SymmetricGroup, RepKind::Hyperoctahedral,
                    RepKind::Bistochastic, RepKind::OrthogonalSample})
    if (to_string(k) == name) return k;
  throw UnknownName("unknown representation '" + std::string(name) +
                    "' (expected symmetric, hyperoctahedral, bistochastic or orthogonal)");
}

}  // namespace easycat
