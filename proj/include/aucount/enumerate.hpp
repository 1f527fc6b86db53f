#pragma once

#include "aucount/types.hpp"

#include <memory>
#include <optional>

namespace aucount {

/// Pull-based stream of compatible labelings. Emits each labeling exactly
/// once, in a deterministic order, holding only the current partial swap
/// vector between items (the full set is never materialized).
class LabelingStream {
 public:
  LabelingStream(LabelingStream&&) noexcept;
  LabelingStream& operator=(LabelingStream&&) noexcept;
  ~LabelingStream();

  /// The next labeling, or nullopt when the stream is exhausted.
  std::optional<LabelVector> next();

  /// Class size and mispair count of the most recently emitted labeling.
  Count current_n1() const;
  Count current_d() const;

 private:
  struct Impl;
  explicit LabelingStream(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;

  friend LabelingStream enumerate_fixed(Count n0, Count n1, Count d);
  friend LabelingStream enumerate_all(Count n, const ExactAuc& auc);
  friend LabelingStream enumerate_all(Count n, const ExactAuc& auc,
                                      const GuessVector& guesses);
};

/// Streams every labeling with n0 zeros, n1 ones, and exactly d misclassified
/// pairs against ascending guesses, in descending lexicographic order of the
/// corresponding swap vectors. Empty when d > n0*n1.
LabelingStream enumerate_fixed(Count n0, Count n1, Count d);

/// Streams every length-n labeling achieving AUC exactly `auc`, concatenating
/// the per-n1 streams in ascending n1. Labelings are emitted in sorted-guess
/// index order.
LabelingStream enumerate_all(Count n, const ExactAuc& auc);

/// As above, but each labeling is reordered so its bits align with the
/// original positions of `guesses`. Throws LengthMismatch unless
/// guesses.size() == n.
LabelingStream enumerate_all(Count n, const ExactAuc& auc, const GuessVector& guesses);

}  // namespace aucount
