#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hsiband/cube.hpp"

namespace hsiband {

// Explicit joint probability mass function over 1-3 discrete variables,
// stored row-major with the last variable fastest. Used as the exact
// ground-truth oracle for the histogram estimators.
class JointPmf {
 public:
  // Validates: 1-3 dims, each >= 1, entries >= 0, total within 1e-12 of 1.
  JointPmf(std::vector<int> dims, Eigen::ArrayXd probs);

  int num_vars() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  const Eigen::ArrayXd& probs() const { return probs_; }

  double at(int v0) const;
  double at(int v0, int v1) const;
  double at(int v0, int v1, int v2) const;

 private:
  std::vector<int> dims_;
  Eigen::ArrayXd probs_;
};

// Integer cell counts over the same layout; the rational source of a PMF and
// of sample streams that realize it with exact frequencies.
struct CountTable {
  std::vector<int> dims;
  std::vector<long long> counts;  // row-major, last variable fastest

  long long total() const;
  JointPmf to_pmf() const;
  // One symbol stream per variable, of length total(), with per-cell counts
  // matching the table exactly.
  std::vector<QuantizedBand> streams() const;
};

// Exact values of every supported measure, computed by direct summation of
// the analytic definitions (MI and interaction via their Kullback-Leibler
// forms, deliberately a different algebraic route than the estimators).
// Fields that need more variables than the PMF has are NaN.
struct OracleMeasures {
  double entropy0, entropy1, entropy2;             // marginals
  double joint01, joint02, joint12, joint012;      // joint entropies
  double mi01, mi02, mi12;                         // pairwise MI
  double normalized_mi_min01;                      // MI / min entropy
  double normalized_mi_joint01;                    // (H0 + H1) / H01
  double pair_class_mi;                            // I((v0,v1); v2)
  double interaction;                              // I(v0; v1; v2)
};

OracleMeasures oracle_measures(const JointPmf& pmf);

// Exact entropy of the full joint table.
double entropy(const JointPmf& pmf);

}  // namespace hsiband
