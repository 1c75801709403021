#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hsiband/cube.hpp"

namespace hsiband {

enum class Method { kMim, kMibf, kMifs, kMrmr, kNmifs, kJmi, kDisr, kMrms };

Method parse_method(const std::string& name);    // throws on unknown name
std::string method_name(Method method);
std::vector<Method> all_methods();

struct SelectorConfig {
  Method method = Method::kMrms;
  int k = 1;                  // bands to select
  double beta = 0.5;          // MIFS / NMIFS redundancy weight
  double threshold = -0.02;   // MIBF rejection threshold on interaction
  int levels = 256;           // quantization levels
};

struct SelectionStep {
  int band = -1;
  double score = 0.0;
  double relevance = 0.0;                  // MI(band, ground truth)
  std::optional<double> interaction;       // MRMS / MIBF interaction term
};

struct SelectionTrace {
  Method method = Method::kMrms;
  std::vector<SelectionStep> steps;

  std::vector<int> bands() const;
};

// Per-criterion scores. These are the definitional forms; the greedy engine
// maintains incremental sums that accumulate the same terms in the same order.

double score_mim(const QuantizedBand& b, const QuantizedBand& gt);

// MI(b, gt) - beta * sum over selected of MI(b, s). Empty set falls back to
// score_mim.
double score_mifs(const QuantizedBand& b, const QuantizedBand& gt,
                  std::span<const QuantizedBand> selected, double beta);

// MI(b, gt) - mean over selected of MI(b, s).
double score_mrmr(const QuantizedBand& b, const QuantizedBand& gt,
                  std::span<const QuantizedBand> selected);

// MI(b, gt) - beta * sum over selected of NI(b, s).
double score_nmifs(const QuantizedBand& b, const QuantizedBand& gt,
                   std::span<const QuantizedBand> selected, double beta);

// Sum over selected of I((b, s); gt). Empty set falls back to score_mim.
double score_jmi(const QuantizedBand& b, const QuantizedBand& gt,
                 std::span<const QuantizedBand> selected);

// Sum over selected of I((b, s); gt) / H(b, s, gt); a degenerate all-constant
// term contributes 0. Empty set falls back to MI(b, gt) / H(b, gt).
double score_disr(const QuantizedBand& b, const QuantizedBand& gt,
                  std::span<const QuantizedBand> selected);

// MI(b, gt) + I(b; estimate; gt). An exact copy of the estimate scores 0.
double score_mrms(const QuantizedBand& b, const QuantizedBand& gt,
                  const QuantizedBand& estimate);

struct MibfDecision {
  bool accepted = false;
  double relevance = 0.0;
  double interaction = 0.0;
};

// Relevance ranking with a redundancy gate: rejected when
// I(b; estimate; gt) < threshold.
MibfDecision score_mibf(const QuantizedBand& b, const QuantizedBand& gt,
                        const QuantizedBand& estimate, double threshold);

// Greedy forward selection. Step 1 picks argmax MI(band, gt) for every
// method; later steps maximize the configured criterion over the remaining
// bands, refreshing the ground-truth estimate (methods that use it) after
// each accepted band. Ties break toward the lowest band index. If MIBF
// rejects every remaining candidate, the highest-relevance one is taken so
// the trace still reaches k bands.
SelectionTrace select(const HyperCube& cube, const LabeledPixels& labeled,
                      const SelectorConfig& config);
SelectionTrace select(const HyperCube& cube, const GroundTruth& gt, const SelectorConfig& config);

}  // namespace hsiband
