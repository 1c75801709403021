#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

namespace hsiband {

struct SvmParams {
  double c = 100.0;       // box constraint, > 0
  double gamma = 0.0;     // RBF width; <= 0 selects 1 / (dims * mean feature variance)
  double tol = 1e-3;      // KKT tolerance
  int max_passes = 1000;  // cap on optimization sweeps
};

// exp(-gamma * ||x - y||^2)
double rbf_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double gamma);

// One soft-margin binary machine of the one-vs-one ensemble. The decision
// value is sum_i coeffs[i] * K(sv_i, x) + bias with coeffs = alpha_i * y_i;
// a non-negative value votes for pos_class.
struct BinaryMachine {
  int pos_class = 0;   // smaller class id of the pair
  int neg_class = 0;
  Eigen::MatrixXd support_vectors;  // rows are scaled feature vectors
  Eigen::VectorXd coeffs;
  double bias = 0.0;

  // Post-training diagnostics.
  double dual_objective = 0.0;
  double max_kkt_violation = 0.0;
  double sum_alpha_y = 0.0;
};

struct SvmModel {
  std::vector<int> classes;         // sorted distinct labels
  Eigen::VectorXd feature_min;      // training min-max scaling to [0, 1]
  Eigen::VectorXd feature_max;
  double c = 0.0;
  double gamma = 0.0;
  std::vector<BinaryMachine> machines;  // all pairs (a, b), a < b
};

// Trains one-vs-one RBF machines with SMO. Features are min-max scaled to
// [0, 1] using statistics of `samples` only. Requires >= 2 classes, >= 1
// sample per class and finite features.
SvmModel train(const Eigen::MatrixXd& samples, const Eigen::VectorXi& labels,
               const SvmParams& params);

// Majority vote over the pairwise machines; vote ties break to the lower
// class id (an exactly-zero decision value also votes the lower id).
int predict(const SvmModel& model, const Eigen::VectorXd& sample);
Eigen::VectorXi predict(const SvmModel& model, const Eigen::MatrixXd& samples);

// Per-machine decision values for one raw sample (scaling applied).
std::vector<double> decision_values(const SvmModel& model, const Eigen::VectorXd& sample);

// Exhaustive cross-validated search over the parameter grids, maximizing the
// mean fold overall accuracy on the training data alone. Ties prefer the
// smaller C, then the smaller gamma. Folds are stratified per class in sample
// order; a class smaller than the fold count shrinks the effective fold count
// (leave-one-out for the smallest class).
SvmParams grid_search(const Eigen::MatrixXd& samples, const Eigen::VectorXi& labels,
                      std::span<const double> c_grid, std::span<const double> gamma_grid,
                      int folds, const SvmParams& base);

// Versioned JSON persistence; real values survive the round trip bit-exactly.
void save_model(const SvmModel& model, const std::string& path);
SvmModel load_model(const std::string& path);

namespace detail {

struct SmoResult {
  Eigen::VectorXd alpha;
  double bias = 0.0;
  double dual_objective = 0.0;
  double max_kkt_violation = 0.0;
  int sweeps = 0;
};

// Sequential minimal optimization on a presented binary problem
// (y in {-1, +1}); two-coefficient updates with the second choice maximizing
// |E1 - E2|. Deterministic for a fixed row order.
SmoResult smo_solve(const Eigen::MatrixXd& samples, const Eigen::VectorXd& y, double c,
                    double gamma, double tol, int max_passes);

}  // namespace detail

}  // namespace hsiband
