#include "hsiband/pmf.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hsiband {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double table_entropy(const Eigen::ArrayXd& p) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) > 0.0) h -= p(i) * std::log2(p(i));
  }
  return h;
}

// MI via the KL form: sum p(a,b) log2(p(a,b) / (p(a) p(b))).
double kl_mutual_info(const Eigen::ArrayXd& joint, const Eigen::ArrayXd& pa,
                      const Eigen::ArrayXd& pb) {
  double mi = 0.0;
  for (Eigen::Index a = 0; a < pa.size(); ++a) {
    for (Eigen::Index b = 0; b < pb.size(); ++b) {
      const double pab = joint(a * pb.size() + b);
      if (pab > 0.0) mi += pab * std::log2(pab / (pa(a) * pb(b)));
    }
  }
  return mi;
}

}  // namespace

JointPmf::JointPmf(std::vector<int> dims, Eigen::ArrayXd probs)
    : dims_(std::move(dims)), probs_(std::move(probs)) {
  if (dims_.empty() || dims_.size() > 3) {
    throw std::invalid_argument("JointPmf: supports 1 to 3 variables");
  }
  Eigen::Index cells = 1;
  for (const int d : dims_) {
    if (d < 1) throw std::invalid_argument("JointPmf: alphabet sizes must be >= 1");
    cells *= d;
  }
  if (probs_.size() != cells) throw std::invalid_argument("JointPmf: table size mismatch");
  if ((probs_ < 0.0).any()) throw std::invalid_argument("JointPmf: negative probability");
  if (std::abs(probs_.sum() - 1.0) > 1e-12) {
    throw std::invalid_argument("JointPmf: probabilities must sum to 1");
  }
}

double JointPmf::at(int v0) const { return probs_(v0); }
double JointPmf::at(int v0, int v1) const { return probs_(v0 * dims_[1] + v1); }
double JointPmf::at(int v0, int v1, int v2) const {
  return probs_((static_cast<Eigen::Index>(v0) * dims_[1] + v1) * dims_[2] + v2);
}

long long CountTable::total() const {
  long long n = 0;
  for (const long long c : counts) {
    if (c < 0) throw std::invalid_argument("CountTable: negative count");
    n += c;
  }
  return n;
}

JointPmf CountTable::to_pmf() const {
  const long long n = total();
  if (n == 0) throw std::invalid_argument("CountTable: empty table");
  Eigen::ArrayXd probs(static_cast<Eigen::Index>(counts.size()));
  for (std::size_t i = 0; i < counts.size(); ++i) {
    probs(static_cast<Eigen::Index>(i)) =
        static_cast<double>(counts[i]) / static_cast<double>(n);
  }
  return JointPmf(dims, probs);
}

std::vector<QuantizedBand> CountTable::streams() const {
  const long long n = total();
  if (n == 0) throw std::invalid_argument("CountTable: empty table");
  const int nvars = static_cast<int>(dims.size());
  std::vector<QuantizedBand> out(nvars);
  for (int v = 0; v < nvars; ++v) {
    out[v].levels = dims[v];
    out[v].symbols.resize(n);
    out[v].source_min = 0.0;
    out[v].source_max = static_cast<double>(dims[v] - 1);
  }
  long long pos = 0;
  for (std::size_t flat = 0; flat < counts.size(); ++flat) {
    std::size_t rem = flat;
    int coord[3] = {0, 0, 0};
    for (int v = nvars - 1; v >= 0; --v) {
      coord[v] = static_cast<int>(rem % dims[v]);
      rem /= dims[v];
    }
    for (long long c = 0; c < counts[flat]; ++c) {
      for (int v = 0; v < nvars; ++v) out[v].symbols(pos) = coord[v];
      ++pos;
    }
  }
  return out;
}

double entropy(const JointPmf& pmf) { return table_entropy(pmf.probs()); }

OracleMeasures oracle_measures(const JointPmf& pmf) {
  OracleMeasures m{kNan, kNan, kNan, kNan, kNan, kNan, kNan,
                   kNan, kNan, kNan, kNan, kNan, kNan, kNan};
  const int nvars = pmf.num_vars();
  const auto& dims = pmf.dims();

  if (nvars == 1) {
    m.entropy0 = table_entropy(pmf.probs());
    return m;
  }

  if (nvars == 2) {
    Eigen::ArrayXd p0 = Eigen::ArrayXd::Zero(dims[0]);
    Eigen::ArrayXd p1 = Eigen::ArrayXd::Zero(dims[1]);
    for (int a = 0; a < dims[0]; ++a) {
      for (int b = 0; b < dims[1]; ++b) {
        p0(a) += pmf.at(a, b);
        p1(b) += pmf.at(a, b);
      }
    }
    m.entropy0 = table_entropy(p0);
    m.entropy1 = table_entropy(p1);
    m.joint01 = table_entropy(pmf.probs());
    m.mi01 = kl_mutual_info(pmf.probs(), p0, p1);
    const double mn = std::min(m.entropy0, m.entropy1);
    m.normalized_mi_min01 = mn > 0.0 ? m.mi01 / mn : 0.0;
    m.normalized_mi_joint01 = m.joint01 > 0.0 ? (m.entropy0 + m.entropy1) / m.joint01 : kNan;
    return m;
  }

  const int d0 = dims[0], d1 = dims[1], d2 = dims[2];
  Eigen::ArrayXd p0 = Eigen::ArrayXd::Zero(d0);
  Eigen::ArrayXd p1 = Eigen::ArrayXd::Zero(d1);
  Eigen::ArrayXd p2 = Eigen::ArrayXd::Zero(d2);
  Eigen::ArrayXd p01 = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(d0) * d1);
  Eigen::ArrayXd p02 = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(d0) * d2);
  Eigen::ArrayXd p12 = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(d1) * d2);
  for (int a = 0; a < d0; ++a) {
    for (int b = 0; b < d1; ++b) {
      for (int c = 0; c < d2; ++c) {
        const double p = pmf.at(a, b, c);
        p0(a) += p;
        p1(b) += p;
        p2(c) += p;
        p01(a * d1 + b) += p;
        p02(a * d2 + c) += p;
        p12(b * d2 + c) += p;
      }
    }
  }
  m.entropy0 = table_entropy(p0);
  m.entropy1 = table_entropy(p1);
  m.entropy2 = table_entropy(p2);
  m.joint01 = table_entropy(p01);
  m.joint02 = table_entropy(p02);
  m.joint12 = table_entropy(p12);
  m.joint012 = table_entropy(pmf.probs());
  m.mi01 = kl_mutual_info(p01, p0, p1);
  m.mi02 = kl_mutual_info(p02, p0, p2);
  m.mi12 = kl_mutual_info(p12, p1, p2);
  const double mn = std::min(m.entropy0, m.entropy1);
  m.normalized_mi_min01 = mn > 0.0 ? m.mi01 / mn : 0.0;
  m.normalized_mi_joint01 = m.joint01 > 0.0 ? (m.entropy0 + m.entropy1) / m.joint01 : kNan;

  // I((v0,v1); v2) as a KL sum over the pair-class table.
  double pair_class = 0.0;
  // I(v0; v1 | v2) for the interaction decomposition I(v0;v1;v2) = I(v0;v1|v2) - I(v0;v1).
  double cond_mi = 0.0;
  for (int a = 0; a < d0; ++a) {
    for (int b = 0; b < d1; ++b) {
      for (int c = 0; c < d2; ++c) {
        const double p = pmf.at(a, b, c);
        if (p <= 0.0) continue;
        pair_class += p * std::log2(p / (p01(a * d1 + b) * p2(c)));
        cond_mi += p * std::log2(p2(c) * p / (p02(a * d2 + c) * p12(b * d2 + c)));
      }
    }
  }
  m.pair_class_mi = pair_class;
  m.interaction = cond_mi - m.mi01;
  return m;
}

}  // namespace hsiband
