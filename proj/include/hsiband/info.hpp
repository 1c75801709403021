#pragma once

#include "hsiband/cube.hpp"

namespace hsiband {

// Plug-in (maximum-likelihood) histogram estimators over discrete symbol
// streams. All values are in bits (log base 2). Mutual-information estimates
// clamp tiny negative floating-point artifacts to 0; interaction information
// is never clamped because its sign carries the signal.

// H(X) = -sum p log2 p with 0 log 0 := 0.
double entropy(const QuantizedBand& x);

// Entropy of the paired / tripled symbol stream. Symmetric bit-for-bit in its
// arguments (the orientation is canonicalized internally).
double joint_entropy(const QuantizedBand& x, const QuantizedBand& y);
double joint_entropy3(const QuantizedBand& x, const QuantizedBand& y, const QuantizedBand& z);

// MI(X,Y) = H(X) + H(Y) - H(X,Y), clamped to >= 0. Exactly symmetric.
double mutual_info(const QuantizedBand& x, const QuantizedBand& y);

// NI(X,Y) = MI / min{H(X), H(Y)}, in [0, 1]. Defined as 0 when the smaller
// entropy is 0 (a constant input shares no information).
double normalized_mi_min(const QuantizedBand& x, const QuantizedBand& y);

// (H(X) + H(Y)) / H(X,Y), in [1, 2]. Throws on jointly constant inputs.
double normalized_mi_joint(const QuantizedBand& x, const QuantizedBand& y);

// I((X,Y); C) = H(X,Y) + H(C) - H(X,Y,C), clamped to >= 0.
double joint_pair_class_mi(const QuantizedBand& x, const QuantizedBand& y,
                           const QuantizedBand& c);

// Interaction information I(X;Y;C) = I((X,Y);C) - MI(X,C) - MI(Y,C).
// Positive = synergy, negative = redundancy, zero = independence. Exactly
// symmetric in x and y.
double interaction_info(const QuantizedBand& x, const QuantizedBand& y, const QuantizedBand& c);

// Same quantity through conditional entropies:
// [H(X)+H(Y)-H(X,Y)] - [H(X|C)+H(Y|C)-H(X,Y|C)]. Kept as an independent
// algebraic route for cross-checking interaction_info.
double interaction_info_conditional(const QuantizedBand& x, const QuantizedBand& y,
                                    const QuantizedBand& c);

namespace detail {

// Joint histograms switch from dense tables to sorted sparse runs when the
// cell count exceeds max(65536, 4 * samples); both paths sum identical count
// multisets in identical order. Exposed so tests can force either path.
enum class HistMode { kAuto, kDense, kSparse };

double joint_entropy(const QuantizedBand& x, const QuantizedBand& y, HistMode mode);
double joint_entropy3(const QuantizedBand& x, const QuantizedBand& y, const QuantizedBand& z,
                      HistMode mode);

}  // namespace detail

}  // namespace hsiband
