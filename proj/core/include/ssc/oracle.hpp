// Numerical controllability oracle over sampled weighted realizations.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "ssc/graph.hpp"

namespace ssc {

// One concrete member of the pattern family: positive couplings on the state
// edges, strictly negative self-loops, nonzero input gains.
struct WeightedRealization {
  std::map<std::pair<NodeId, NodeId>, double> coupling;  // keys (min,max)
  std::map<NodeId, double> loop;
  std::map<std::string, double> gain;  // keyed by input id
};

struct RealizedSystem {
  Eigen::MatrixXd l_tilde;  // (D - A) - S: symmetric, positive definite
  Eigen::MatrixXd b;        // n x m, one gain per column at the target row
};

// Assembles the system matrices. Weights must cover exactly the network's
// edges, nodes, and attachments (MissingWeight / ExtraWeight) with the model's
// signs (SignViolation).
RealizedSystem realize(const StructuredNetwork& net, const WeightedRealization& w);

// True iff l_tilde is positive definite (smallest eigenvalue above the
// relative tolerance n * eps * |lambda|_max).
bool check_full_rank(const RealizedSystem& sys);

// Numerical rank of [B, LB, L^2 B, ...], by incremental Krylov
// orthonormalization. Cross-check route.
int controllability_rank_krylov(const RealizedSystem& sys);

// Rank via the eigen-space test: an eigenvalue cluster of L contributes its
// multiplicity minus the rank of the eigenvector block projected onto B.
// Oracle of record for symmetric systems.
int controllability_rank_eigenspace(const RealizedSystem& sys);

// Runs both routes; they must agree (std::logic_error otherwise).
int controllability_rank(const RealizedSystem& sys);

// Deterministic weight draw: couplings uniform on [0.1, 10], loops on
// [-10, -0.1], gains on [0.5, 2].
WeightedRealization sample_realization(const StructuredNetwork& net,
                                       std::uint64_t seed);

// Fraction of `trials` sampled realizations with full controllability rank.
// Deterministic for a fixed seed (one sub-seed per trial index).
double sample_verdict(const StructuredNetwork& net, std::size_t trials,
                      std::uint64_t seed);

}  // namespace ssc
