#include "hsiband/split.hpp"

#include <cmath>
#include <stdexcept>

#include "hsiband/rng.hpp"

namespace hsiband {

Split stratified_split(const LabeledPixels& labeled, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw std::invalid_argument("stratified_split: fraction must lie in (0, 1)");
  }
  for (int c = 1; c <= labeled.num_classes(); ++c) {
    const std::size_t n = labeled.by_class()[c].size();
    if (n == 1) {
      throw std::invalid_argument("stratified_split: class " + std::to_string(c) +
                                  " has fewer than 2 labeled pixels");
    }
  }

  Split split;
  split.fraction = fraction;
  split.seed = seed;
  Rng rng(seed, "split");
  for (int c = 1; c <= labeled.num_classes(); ++c) {
    std::vector<int> positions = labeled.by_class()[c];
    if (positions.empty()) continue;
    rng.shuffle(positions);
    const auto n_train = std::max<long long>(
        1, std::llround(fraction * static_cast<double>(positions.size())));
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if (i < static_cast<std::size_t>(n_train)) {
        split.train_indices.push_back(positions[i]);
      } else {
        split.test_indices.push_back(positions[i]);
      }
    }
  }
  return split;
}

}  // namespace hsiband
