#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace hsiband {

// Hyperspectral cube stored pixel-major: value(r, c, b) = values()(r * cols + c, b).
// Each band is a column, so per-band work maps onto Eigen column expressions.
class HyperCube {
 public:
  // values: (rows * cols) x bands. Rejects non-finite samples.
  HyperCube(int rows, int cols, Eigen::MatrixXf values);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int bands() const { return static_cast<int>(values_.cols()); }
  int pixels() const { return rows_ * cols_; }

  const Eigen::MatrixXf& values() const { return values_; }
  Eigen::MatrixXf::ConstColXpr band(int b) const { return values_.col(b); }
  float at(int r, int c, int b) const { return values_(r * cols_ + c, b); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  Eigen::MatrixXf values_;
};

// Per-pixel class labels on the cube's spatial grid. Label 0 marks unlabeled
// background and is excluded from every probability estimate, split and metric.
struct GroundTruth {
  int rows = 0;
  int cols = 0;
  Eigen::VectorXi labels;                 // rows * cols entries, raster order
  std::vector<std::string> class_names;   // optional, may be empty

  int num_classes() const;                // largest label present
  int label_at(int r, int c) const { return labels(r * cols + c); }
};

// Fixed raster-order index of the labeled pixels of a cube/ground-truth pair.
// Every QuantizedBand, EstimateBand and Split built from the pair shares this
// ordering.
class LabeledPixels {
 public:
  LabeledPixels(const HyperCube& cube, const GroundTruth& gt);

  int count() const { return static_cast<int>(pixels_.size()); }
  const std::vector<int>& pixels() const { return pixels_; }       // raster indices
  const Eigen::VectorXi& labels() const { return labels_; }        // class per labeled pixel
  int num_classes() const { return num_classes_; }
  int distinct_classes() const { return distinct_classes_; }
  // Labeled-order positions per class id (index 0 unused).
  const std::vector<std::vector<int>>& by_class() const { return by_class_; }

 private:
  std::vector<int> pixels_;
  Eigen::VectorXi labels_;
  std::vector<std::vector<int>> by_class_;
  int num_classes_ = 0;
  int distinct_classes_ = 0;
};

// A band (or estimate) reduced to discrete symbols over the labeled pixels.
struct QuantizedBand {
  int levels = 0;
  Eigen::VectorXi symbols;      // one per labeled pixel, each in [0, levels)
  double source_min = 0.0;
  double source_max = 0.0;
};

// Running pixel-wise average of the selected bands, kept in raw values and
// re-quantized (fresh min-max) before each information computation.
struct EstimateBand {
  Eigen::VectorXd values;       // one per labeled pixel
};

// Raw reflectances of one band restricted to the labeled pixels.
Eigen::VectorXd band_at_labeled(const HyperCube& cube, const LabeledPixels& labeled, int band);

// Uniform min-max binning: symbol = floor((v - min) * levels / range) with a
// 1e-12 relative guard on the range, clamped to [0, levels); a constant input
// maps everything to symbol 0.
QuantizedBand quantize_values(const Eigen::VectorXd& values, int levels);

QuantizedBand quantize_band(const HyperCube& cube, const LabeledPixels& labeled, int band,
                            int levels);

QuantizedBand quantize_estimate(const EstimateBand& estimate, int levels);

// Class labels as a discrete series aligned with the labeled ordering
// (symbol = label - 1).
QuantizedBand class_series(const LabeledPixels& labeled);

// Pixel-wise mean of the current estimate and a band's raw values.
EstimateBand update_estimate(const EstimateBand& estimate, const Eigen::VectorXd& band_values);
EstimateBand update_estimate(const EstimateBand& estimate, const HyperCube& cube,
                             const LabeledPixels& labeled, int band);

}  // namespace hsiband
