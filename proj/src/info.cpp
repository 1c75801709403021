#include "hsiband/info.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hsiband {
namespace {

void check_stream(const QuantizedBand& x, const char* who) {
  if (x.symbols.size() == 0) throw std::invalid_argument(std::string(who) + ": empty input");
  if (x.levels < 1) throw std::invalid_argument(std::string(who) + ": levels must be >= 1");
}

void check_lengths(const QuantizedBand& x, const QuantizedBand& y, const char* who) {
  if (x.symbols.size() != y.symbols.size()) {
    throw std::invalid_argument(std::string(who) + ": sample length mismatch");
  }
}

int checked_symbol(const QuantizedBand& x, Eigen::Index i) {
  const int s = x.symbols(i);
  if (s < 0 || s >= x.levels) throw std::invalid_argument("symbol outside [0, levels)");
  return s;
}

// H = log2(n) - sum(c log2 c) / n over the run counts.
double entropy_from_counts(const std::vector<std::int64_t>& counts, std::int64_t n) {
  double acc = 0.0;
  for (const std::int64_t c : counts) {
    if (c > 0) acc += static_cast<double>(c) * std::log2(static_cast<double>(c));
  }
  return std::log2(static_cast<double>(n)) - acc / static_cast<double>(n);
}

bool use_dense(std::int64_t cells, std::int64_t n) {
  return cells <= std::max<std::int64_t>(65536, 4 * n);
}

// Entropy of a keyed symbol stream; keys must lie in [0, cells).
double keyed_entropy(const std::vector<std::int64_t>& keys, std::int64_t cells,
                     detail::HistMode mode) {
  const std::int64_t n = static_cast<std::int64_t>(keys.size());
  const bool dense = mode == detail::HistMode::kAuto ? use_dense(cells, n)
                                                     : mode == detail::HistMode::kDense;
  if (dense) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(cells), 0);
    for (const std::int64_t k : keys) ++counts[static_cast<std::size_t>(k)];
    return entropy_from_counts(counts, n);
  }
  std::vector<std::int64_t> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  double acc = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double c = static_cast<double>(j - i);
    acc += c * std::log2(c);
    i = j;
  }
  return std::log2(static_cast<double>(n)) - acc / static_cast<double>(n);
}

// Canonical orientation so joint measures are symmetric bit-for-bit: the
// wider-alphabet stream leads; equal alphabets fall back to lexicographic
// symbol order.
bool swap_for_canonical(const QuantizedBand& x, const QuantizedBand& y) {
  if (x.levels != y.levels) return x.levels < y.levels;
  return std::lexicographical_compare(y.symbols.begin(), y.symbols.end(), x.symbols.begin(),
                                      x.symbols.end());
}

double pair_entropy(const QuantizedBand& first, const QuantizedBand& second,
                    detail::HistMode mode) {
  const std::int64_t cells =
      static_cast<std::int64_t>(first.levels) * static_cast<std::int64_t>(second.levels);
  std::vector<std::int64_t> keys(static_cast<std::size_t>(first.symbols.size()));
  for (Eigen::Index i = 0; i < first.symbols.size(); ++i) {
    keys[static_cast<std::size_t>(i)] =
        static_cast<std::int64_t>(checked_symbol(first, i)) * second.levels +
        checked_symbol(second, i);
  }
  return keyed_entropy(keys, cells, mode);
}

double triple_entropy(const QuantizedBand& first, const QuantizedBand& second,
                      const QuantizedBand& third, detail::HistMode mode) {
  const std::int64_t cells = static_cast<std::int64_t>(first.levels) * second.levels *
                             static_cast<std::int64_t>(third.levels);
  std::vector<std::int64_t> keys(static_cast<std::size_t>(first.symbols.size()));
  for (Eigen::Index i = 0; i < first.symbols.size(); ++i) {
    keys[static_cast<std::size_t>(i)] =
        (static_cast<std::int64_t>(checked_symbol(first, i)) * second.levels +
         checked_symbol(second, i)) *
            third.levels +
        checked_symbol(third, i);
  }
  return keyed_entropy(keys, cells, mode);
}

}  // namespace

double entropy(const QuantizedBand& x) {
  check_stream(x, "entropy");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(x.levels), 0);
  for (Eigen::Index i = 0; i < x.symbols.size(); ++i) {
    ++counts[static_cast<std::size_t>(checked_symbol(x, i))];
  }
  return entropy_from_counts(counts, x.symbols.size());
}

namespace detail {

double joint_entropy(const QuantizedBand& x, const QuantizedBand& y, HistMode mode) {
  check_stream(x, "joint_entropy");
  check_stream(y, "joint_entropy");
  check_lengths(x, y, "joint_entropy");
  return swap_for_canonical(x, y) ? pair_entropy(y, x, mode) : pair_entropy(x, y, mode);
}

double joint_entropy3(const QuantizedBand& x, const QuantizedBand& y, const QuantizedBand& z,
                      HistMode mode) {
  check_stream(x, "joint_entropy3");
  check_stream(y, "joint_entropy3");
  check_stream(z, "joint_entropy3");
  check_lengths(x, y, "joint_entropy3");
  check_lengths(x, z, "joint_entropy3");
  return swap_for_canonical(x, y) ? triple_entropy(y, x, z, mode) : triple_entropy(x, y, z, mode);
}

}  // namespace detail

double joint_entropy(const QuantizedBand& x, const QuantizedBand& y) {
  return detail::joint_entropy(x, y, detail::HistMode::kAuto);
}

double joint_entropy3(const QuantizedBand& x, const QuantizedBand& y, const QuantizedBand& z) {
  return detail::joint_entropy3(x, y, z, detail::HistMode::kAuto);
}

double mutual_info(const QuantizedBand& x, const QuantizedBand& y) {
  const double mi = entropy(x) + entropy(y) - joint_entropy(x, y);
  return std::max(0.0, mi);
}

double normalized_mi_min(const QuantizedBand& x, const QuantizedBand& y) {
  const double mn = std::min(entropy(x), entropy(y));
  if (mn <= 0.0) return 0.0;
  return mutual_info(x, y) / mn;
}

double normalized_mi_joint(const QuantizedBand& x, const QuantizedBand& y) {
  const double hxy = joint_entropy(x, y);
  if (hxy <= 0.0) {
    throw std::invalid_argument("normalized_mi_joint: jointly constant inputs");
  }
  return (entropy(x) + entropy(y)) / hxy;
}

double joint_pair_class_mi(const QuantizedBand& x, const QuantizedBand& y,
                           const QuantizedBand& c) {
  const double mi = joint_entropy(x, y) + entropy(c) - joint_entropy3(x, y, c);
  return std::max(0.0, mi);
}

double interaction_info(const QuantizedBand& x, const QuantizedBand& y, const QuantizedBand& c) {
  const bool swap = swap_for_canonical(x, y);
  const QuantizedBand& a = swap ? y : x;
  const QuantizedBand& b = swap ? x : y;
  return joint_pair_class_mi(a, b, c) - mutual_info(a, c) - mutual_info(b, c);
}

double interaction_info_conditional(const QuantizedBand& x, const QuantizedBand& y,
                                    const QuantizedBand& c) {
  const double hc = entropy(c);
  const double mi_xy = entropy(x) + entropy(y) - joint_entropy(x, y);
  const double h_x_given_c = joint_entropy(x, c) - hc;
  const double h_y_given_c = joint_entropy(y, c) - hc;
  const double h_xy_given_c = joint_entropy3(x, y, c) - hc;
  return mi_xy - (h_x_given_c + h_y_given_c - h_xy_given_c);
}

}  // namespace hsiband
