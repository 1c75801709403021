#pragma once

#include <cstdint>
#include <vector>

#include "hsiband/cube.hpp"

namespace hsiband {

// Stratified train/test partition of the labeled pixels. Indices are positions
// in the LabeledPixels ordering, not raster indices.
struct Split {
  std::vector<int> train_indices;
  std::vector<int> test_indices;
  double fraction = 0.0;
  std::uint64_t seed = 0;
};

// Per class c: |train_c| = max(1, round(fraction * |c|)); the rest goes to
// test. Deterministic for a fixed seed (stream tag "split"). Every class must
// hold at least 2 labeled pixels.
Split stratified_split(const LabeledPixels& labeled, double fraction, std::uint64_t seed);

}  // namespace hsiband
