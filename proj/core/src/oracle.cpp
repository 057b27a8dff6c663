#include "ssc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace ssc {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Bit-based uniform in [lo, hi); engine-portable unlike the std distribution.
double uniform(std::mt19937_64& rng, double lo, double hi) {
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

RealizedSystem realize(const StructuredNetwork& net, const WeightedRealization& w) {
  const auto n = static_cast<Eigen::Index>(net.state_count());

  if (w.coupling.size() < net.state_edges().size())
    throw MissingWeight("coupling weights incomplete");
  if (w.coupling.size() > net.state_edges().size())
    throw ExtraWeight("coupling weights cover unknown edges");
  if (w.loop.size() < net.state_count())
    throw MissingWeight("loop weights incomplete");
  if (w.loop.size() > net.state_count())
    throw ExtraWeight("loop weights cover unknown nodes");
  if (w.gain.size() < net.inputs().size())
    throw MissingWeight("input gains incomplete");
  if (w.gain.size() > net.inputs().size())
    throw ExtraWeight("input gains cover unknown inputs");

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [edge, value] : w.coupling) {
    auto [lo, hi] = edge;
    if (lo >= hi) throw ExtraWeight("coupling key must be ordered (min,max)");
    if (!net.has_state(lo) || !net.has_state(hi))
      throw ExtraWeight("coupling weight on unknown edge");
    auto i = static_cast<Eigen::Index>(net.index_of(lo));
    auto j = static_cast<Eigen::Index>(net.index_of(hi));
    if ((net.adjacency(static_cast<std::size_t>(i)) &
         (AlphaMask{1} << static_cast<std::size_t>(j))) == 0)
      throw ExtraWeight("coupling weight on non-edge");
    if (value <= 0.0)
      throw SignViolation("coupling a_ij must be positive");
    a(i, j) = a(j, i) = value;
  }

  Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
  for (auto [node, value] : w.loop) {
    if (!net.has_state(node)) throw ExtraWeight("loop weight on unknown node");
    if (value >= 0.0) throw SignViolation("loop a_ii must be negative");
    s(static_cast<Eigen::Index>(net.index_of(node))) = value;
  }

  RealizedSystem sys;
  // Dynamics matrix up to overall sign; this orientation is the positive
  // definite one (Laplacian D - A plus |a_ii| on the diagonal).
  Eigen::VectorXd degree = a.rowwise().sum();
  sys.l_tilde = Eigen::MatrixXd(degree.asDiagonal()) - a -
                Eigen::MatrixXd(s.asDiagonal());

  const auto m = static_cast<Eigen::Index>(net.inputs().size());
  sys.b = Eigen::MatrixXd::Zero(n, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const auto& att = net.inputs()[static_cast<std::size_t>(k)];
    auto it = w.gain.find(att.id);
    if (it == w.gain.end()) throw MissingWeight("no gain for input " + att.id);
    if (it->second == 0.0) throw SignViolation("gain for " + att.id + " must be nonzero");
    sys.b(static_cast<Eigen::Index>(net.index_of(att.target)), k) = it->second;
  }
  return sys;
}

bool check_full_rank(const RealizedSystem& sys) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sys.l_tilde,
                                                        Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  double magnitude = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  double tol = static_cast<double>(ev.size()) * kEps * magnitude;
  return ev(0) > tol;
}

int controllability_rank_krylov(const RealizedSystem& sys) {
  const Eigen::Index n = sys.l_tilde.rows();
  double scale = std::max(sys.l_tilde.cwiseAbs().rowwise().sum().maxCoeff(), 1.0);
  double tol = static_cast<double>(n) * kEps * scale;

  Eigen::MatrixXd basis(n, n);
  Eigen::Index rank = 0;

  // Accepts the columns of `block` that stick out of the current basis.
  auto absorb = [&](const Eigen::MatrixXd& block) {
    Eigen::MatrixXd accepted(n, block.cols());
    Eigen::Index taken = 0;
    for (Eigen::Index c = 0; c < block.cols(); ++c) {
      Eigen::VectorXd v = block.col(c);
      for (int pass = 0; pass < 2; ++pass)
        v -= basis.leftCols(rank) * (basis.leftCols(rank).transpose() * v);
      if (v.norm() > tol) {
        v.normalize();
        basis.col(rank++) = v;
        accepted.col(taken++) = v;
      }
    }
    return Eigen::MatrixXd(accepted.leftCols(taken));
  };

  Eigen::MatrixXd fresh = absorb(sys.b);
  for (Eigen::Index step = 1; step < n && fresh.cols() > 0 && rank < n; ++step)
    fresh = absorb(sys.l_tilde * fresh);
  return static_cast<int>(rank);
}

int controllability_rank_eigenspace(const RealizedSystem& sys) {
  const Eigen::Index n = sys.l_tilde.rows();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sys.l_tilde);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  double magnitude = std::max(std::abs(ev(0)), std::abs(ev(n - 1)));
  double cluster_tol = std::max(static_cast<double>(n) * kEps * magnitude,
                                std::numeric_limits<double>::min());

  if (sys.b.cols() == 0) return 0;
  // Projections are judged on an absolute scale: an all-tiny block must come
  // out rank 0, which a pivot-relative threshold can never deliver.
  double projection_tol =
      static_cast<double>(n) * kEps * std::max(sys.b.norm(), 1.0);

  int rank = 0;
  Eigen::Index begin = 0;
  while (begin < n) {
    Eigen::Index end = begin + 1;
    while (end < n && ev(end) - ev(end - 1) <= cluster_tol) ++end;

    // Contribution of this eigenvalue cluster: rank of V_cluster^T B.
    Eigen::MatrixXd projected =
        solver.eigenvectors().middleCols(begin, end - begin).transpose() * sys.b;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(projected);
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
      if (svd.singularValues()(k) > projection_tol) ++rank;
    begin = end;
  }
  return std::min(rank, static_cast<int>(n));
}

int controllability_rank(const RealizedSystem& sys) {
  int eigen_rank = controllability_rank_eigenspace(sys);
  int krylov_rank = controllability_rank_krylov(sys);
  if (eigen_rank != krylov_rank)
    throw std::logic_error("controllability rank mismatch: eigen-space " +
                           std::to_string(eigen_rank) + " vs Krylov " +
                           std::to_string(krylov_rank));
  return eigen_rank;
}

WeightedRealization sample_realization(const StructuredNetwork& net,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(splitmix64(seed));
  WeightedRealization w;
  for (auto edge : net.state_edges()) w.coupling[edge] = uniform(rng, 0.1, 10.0);
  for (NodeId node : net.state_labels()) w.loop[node] = uniform(rng, -10.0, -0.1);
  for (const auto& att : net.inputs()) w.gain[att.id] = uniform(rng, 0.5, 2.0);
  return w;
}

double sample_verdict(const StructuredNetwork& net, std::size_t trials,
                      std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  const int n = static_cast<int>(net.state_count());
  std::size_t controllable = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    WeightedRealization w = sample_realization(net, splitmix64(seed) ^ (t + 1));
    RealizedSystem sys = realize(net, w);
    if (controllability_rank(sys) == n) ++controllable;
  }
  return static_cast<double>(controllable) / static_cast<double>(trials);
}

}  // namespace ssc
