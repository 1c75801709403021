#include "hsiband/cube.hpp"

#include <cmath>
#include <stdexcept>

namespace hsiband {

HyperCube::HyperCube(int rows, int cols, Eigen::MatrixXf values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ < 1 || cols_ < 1 || values_.cols() < 1) {
    throw std::invalid_argument("HyperCube: rows, cols and bands must all be >= 1");
  }
  if (values_.rows() != static_cast<Eigen::Index>(rows_) * cols_) {
    throw std::invalid_argument("HyperCube: value count does not match rows * cols");
  }
  if (!values_.allFinite()) {
    throw std::invalid_argument("HyperCube: non-finite reflectance sample");
  }
}

int GroundTruth::num_classes() const {
  return labels.size() == 0 ? 0 : labels.maxCoeff();
}

LabeledPixels::LabeledPixels(const HyperCube& cube, const GroundTruth& gt) {
  if (gt.rows != cube.rows() || gt.cols != cube.cols()) {
    throw std::invalid_argument("LabeledPixels: ground truth grid does not match cube");
  }
  if (gt.labels.size() != static_cast<Eigen::Index>(gt.rows) * gt.cols) {
    throw std::invalid_argument("LabeledPixels: label count does not match grid");
  }
  if (gt.labels.minCoeff() < 0) {
    throw std::invalid_argument("LabeledPixels: negative class label");
  }
  for (int p = 0; p < gt.labels.size(); ++p) {
    if (gt.labels(p) != 0) pixels_.push_back(p);
  }
  labels_.resize(pixels_.size());
  num_classes_ = 0;
  for (std::size_t i = 0; i < pixels_.size(); ++i) {
    labels_(static_cast<Eigen::Index>(i)) = gt.labels(pixels_[i]);
    num_classes_ = std::max(num_classes_, gt.labels(pixels_[i]));
  }
  by_class_.assign(num_classes_ + 1, {});
  for (std::size_t i = 0; i < pixels_.size(); ++i) {
    by_class_[labels_(static_cast<Eigen::Index>(i))].push_back(static_cast<int>(i));
  }
  for (int c = 1; c <= num_classes_; ++c) {
    if (!by_class_[c].empty()) ++distinct_classes_;
  }
}

Eigen::VectorXd band_at_labeled(const HyperCube& cube, const LabeledPixels& labeled, int band) {
  if (band < 0 || band >= cube.bands()) {
    throw std::invalid_argument("band_at_labeled: band index out of range");
  }
  Eigen::VectorXd out(labeled.count());
  const auto column = cube.band(band);
  for (int i = 0; i < labeled.count(); ++i) {
    out(i) = static_cast<double>(column(labeled.pixels()[i]));
  }
  return out;
}

QuantizedBand quantize_values(const Eigen::VectorXd& values, int levels) {
  if (levels < 1) throw std::invalid_argument("quantize: levels must be >= 1");
  if (values.size() == 0) throw std::invalid_argument("quantize: no labeled pixels");

  QuantizedBand q;
  q.levels = levels;
  q.source_min = values.minCoeff();
  q.source_max = values.maxCoeff();
  q.symbols.resize(values.size());

  const double range = q.source_max - q.source_min;
  if (range <= 0.0) {
    q.symbols.setZero();
    return q;
  }
  const double denom = range * (1.0 + 1e-12);
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    int s = static_cast<int>(std::floor((values(i) - q.source_min) * levels / denom));
    q.symbols(i) = std::clamp(s, 0, levels - 1);
  }
  return q;
}

QuantizedBand quantize_band(const HyperCube& cube, const LabeledPixels& labeled, int band,
                            int levels) {
  return quantize_values(band_at_labeled(cube, labeled, band), levels);
}

QuantizedBand quantize_estimate(const EstimateBand& estimate, int levels) {
  return quantize_values(estimate.values, levels);
}

QuantizedBand class_series(const LabeledPixels& labeled) {
  QuantizedBand q;
  q.levels = labeled.num_classes();
  q.symbols = labeled.labels().array() - 1;
  q.source_min = 1.0;
  q.source_max = static_cast<double>(labeled.num_classes());
  return q;
}

EstimateBand update_estimate(const EstimateBand& estimate, const Eigen::VectorXd& band_values) {
  if (estimate.values.size() != band_values.size()) {
    throw std::invalid_argument("update_estimate: dimension mismatch");
  }
  return EstimateBand{(estimate.values + band_values) * 0.5};
}

EstimateBand update_estimate(const EstimateBand& estimate, const HyperCube& cube,
                             const LabeledPixels& labeled, int band) {
  return update_estimate(estimate, band_at_labeled(cube, labeled, band));
}

}  // namespace hsiband
