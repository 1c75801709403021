#include "hsiband/selectors.hpp"

#include <cmath>
#include <stdexcept>

#include "hsiband/info.hpp"
#include "hsiband/parallel.hpp"

namespace hsiband {
namespace {

double disr_term(const QuantizedBand& b, const QuantizedBand& s, const QuantizedBand& gt) {
  const double h3 = joint_entropy3(b, s, gt);
  if (h3 <= 0.0) return 0.0;
  return joint_pair_class_mi(b, s, gt) / h3;
}

}  // namespace

Method parse_method(const std::string& name) {
  if (name == "mim") return Method::kMim;
  if (name == "mibf") return Method::kMibf;
  if (name == "mifs") return Method::kMifs;
  if (name == "mrmr") return Method::kMrmr;
  if (name == "nmifs") return Method::kNmifs;
  if (name == "jmi") return Method::kJmi;
  if (name == "disr") return Method::kDisr;
  if (name == "mrms") return Method::kMrms;
  throw std::invalid_argument("unknown method: " + name);
}

std::string method_name(Method method) {
  switch (method) {
    case Method::kMim: return "mim";
    case Method::kMibf: return "mibf";
    case Method::kMifs: return "mifs";
    case Method::kMrmr: return "mrmr";
    case Method::kNmifs: return "nmifs";
    case Method::kJmi: return "jmi";
    case Method::kDisr: return "disr";
    case Method::kMrms: return "mrms";
  }
  throw std::logic_error("method_name: bad enum");
}

std::vector<Method> all_methods() {
  return {Method::kMim,   Method::kMibf, Method::kMifs, Method::kMrmr,
          Method::kNmifs, Method::kJmi,  Method::kDisr, Method::kMrms};
}

std::vector<int> SelectionTrace::bands() const {
  std::vector<int> out;
  out.reserve(steps.size());
  for (const auto& step : steps) out.push_back(step.band);
  return out;
}

double score_mim(const QuantizedBand& b, const QuantizedBand& gt) { return mutual_info(b, gt); }

double score_mifs(const QuantizedBand& b, const QuantizedBand& gt,
                  std::span<const QuantizedBand> selected, double beta) {
  double redundancy = 0.0;
  for (const auto& s : selected) redundancy += mutual_info(b, s);
  return mutual_info(b, gt) - beta * redundancy;
}

double score_mrmr(const QuantizedBand& b, const QuantizedBand& gt,
                  std::span<const QuantizedBand> selected) {
  if (selected.empty()) return score_mim(b, gt);
  double redundancy = 0.0;
  for (const auto& s : selected) redundancy += mutual_info(b, s);
  return mutual_info(b, gt) - redundancy / static_cast<double>(selected.size());
}

double score_nmifs(const QuantizedBand& b, const QuantizedBand& gt,
                   std::span<const QuantizedBand> selected, double beta) {
  double redundancy = 0.0;
  for (const auto& s : selected) redundancy += normalized_mi_min(b, s);
  return mutual_info(b, gt) - beta * redundancy;
}

double score_jmi(const QuantizedBand& b, const QuantizedBand& gt,
                 std::span<const QuantizedBand> selected) {
  if (selected.empty()) return score_mim(b, gt);
  double total = 0.0;
  for (const auto& s : selected) total += joint_pair_class_mi(b, s, gt);
  return total;
}

double score_disr(const QuantizedBand& b, const QuantizedBand& gt,
                  std::span<const QuantizedBand> selected) {
  if (selected.empty()) {
    const double h = joint_entropy(b, gt);
    return h > 0.0 ? mutual_info(b, gt) / h : 0.0;
  }
  double total = 0.0;
  for (const auto& s : selected) total += disr_term(b, s, gt);
  return total;
}

double score_mrms(const QuantizedBand& b, const QuantizedBand& gt,
                  const QuantizedBand& estimate) {
  return mutual_info(b, gt) + interaction_info(b, estimate, gt);
}

MibfDecision score_mibf(const QuantizedBand& b, const QuantizedBand& gt,
                        const QuantizedBand& estimate, double threshold) {
  MibfDecision d;
  d.relevance = mutual_info(b, gt);
  d.interaction = interaction_info(b, estimate, gt);
  d.accepted = d.interaction >= threshold;
  return d;
}

SelectionTrace select(const HyperCube& cube, const LabeledPixels& labeled,
                      const SelectorConfig& config) {
  const int n_bands = cube.bands();
  if (config.k < 1 || config.k > n_bands) {
    throw std::invalid_argument("select: k must lie in [1, bands]");
  }
  if (config.beta < 0.0) throw std::invalid_argument("select: beta must be >= 0");
  if (config.levels < 1) throw std::invalid_argument("select: levels must be >= 1");
  if (labeled.count() < 1) throw std::invalid_argument("select: no labeled pixels");
  if (labeled.distinct_classes() < 2) {
    throw std::invalid_argument("select: ground truth must hold at least 2 classes");
  }

  const QuantizedBand gt = class_series(labeled);
  std::vector<QuantizedBand> bands(n_bands);
  parallel_for(n_bands,
               [&](int b) { bands[b] = quantize_band(cube, labeled, b, config.levels); });

  std::vector<double> relevance(n_bands);
  parallel_for(n_bands, [&](int b) { relevance[b] = mutual_info(bands[b], gt); });

  const bool uses_estimate = config.method == Method::kMrms || config.method == Method::kMibf;
  const bool pairwise_cache = config.method == Method::kMifs || config.method == Method::kMrmr ||
                              config.method == Method::kNmifs;
  const bool jointwise_cache = config.method == Method::kJmi || config.method == Method::kDisr;

  std::vector<bool> selected_mask(n_bands, false);
  std::vector<double> cache_sum(n_bands, 0.0);  // redundancy or joint-relevance running sum

  SelectionTrace trace;
  trace.method = config.method;

  // Step 1: maximal relevance, shared by every criterion.
  int first = 0;
  for (int b = 1; b < n_bands; ++b) {
    if (relevance[b] > relevance[first]) first = b;
  }
  selected_mask[first] = true;
  trace.steps.push_back({first, relevance[first], relevance[first], std::nullopt});

  EstimateBand estimate;
  if (uses_estimate) estimate.values = band_at_labeled(cube, labeled, first);

  int last_added = first;
  while (static_cast<int>(trace.steps.size()) < config.k) {
    const int n_selected = static_cast<int>(trace.steps.size());

    if (pairwise_cache || jointwise_cache) {
      parallel_for(n_bands, [&](int b) {
        if (selected_mask[b]) return;
        switch (config.method) {
          case Method::kMifs:
          case Method::kMrmr:
            cache_sum[b] += mutual_info(bands[b], bands[last_added]);
            break;
          case Method::kNmifs:
            cache_sum[b] += normalized_mi_min(bands[b], bands[last_added]);
            break;
          case Method::kJmi:
            cache_sum[b] += joint_pair_class_mi(bands[b], bands[last_added], gt);
            break;
          case Method::kDisr:
            cache_sum[b] += disr_term(bands[b], bands[last_added], gt);
            break;
          default: break;
        }
      });
    }

    QuantizedBand estimate_q;
    if (uses_estimate) estimate_q = quantize_estimate(estimate, config.levels);

    std::vector<double> score(n_bands, 0.0);
    std::vector<double> interaction(n_bands, 0.0);
    std::vector<char> accepted(n_bands, 1);
    parallel_for(n_bands, [&](int b) {
      if (selected_mask[b]) return;
      switch (config.method) {
        case Method::kMim:
          score[b] = relevance[b];
          break;
        case Method::kMifs:
        case Method::kNmifs:
          score[b] = relevance[b] - config.beta * cache_sum[b];
          break;
        case Method::kMrmr:
          score[b] = relevance[b] - cache_sum[b] / static_cast<double>(n_selected);
          break;
        case Method::kJmi:
        case Method::kDisr:
          score[b] = cache_sum[b];
          break;
        case Method::kMrms:
          interaction[b] = interaction_info(bands[b], estimate_q, gt);
          score[b] = relevance[b] + interaction[b];
          break;
        case Method::kMibf: {
          const MibfDecision d = score_mibf(bands[b], gt, estimate_q, config.threshold);
          interaction[b] = d.interaction;
          accepted[b] = d.accepted ? 1 : 0;
          score[b] = d.relevance;
          break;
        }
      }
    });

    int chosen = -1;
    if (config.method == Method::kMibf) {
      for (int b = 0; b < n_bands; ++b) {
        if (selected_mask[b] || !accepted[b]) continue;
        if (chosen < 0 || score[b] > score[chosen]) chosen = b;
      }
    }
    if (chosen < 0) {  // every criterion, and the MIBF all-rejected fallback
      for (int b = 0; b < n_bands; ++b) {
        if (selected_mask[b]) continue;
        if (chosen < 0 || score[b] > score[chosen]) chosen = b;
      }
    }

    selected_mask[chosen] = true;
    SelectionStep step{chosen, score[chosen], relevance[chosen], std::nullopt};
    if (uses_estimate) step.interaction = interaction[chosen];
    trace.steps.push_back(step);

    if (uses_estimate) {
      estimate = update_estimate(estimate, cube, labeled, chosen);
    }
    last_added = chosen;
  }
  return trace;
}

SelectionTrace select(const HyperCube& cube, const GroundTruth& gt, const SelectorConfig& config) {
  return select(cube, LabeledPixels(cube, gt), config);
}

}  // namespace hsiband
