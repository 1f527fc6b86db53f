#pragma once

#include "aucount/types.hpp"

namespace aucount {

/// Exact AUC of `guesses` against `labels`: the fraction of (0,1) example
/// pairs where the positively labeled example has the larger guess, reduced.
/// Throws UndefinedAuc when all labels belong to one class.
ExactAuc compute_auc(const LabelVector& labels, const GuessVector& guesses);

/// Number of misclassified pairs h: pairs (i labeled 0, j labeled 1) with
/// guess(i) > guess(j). AUC = 1 - h/(n0*n1) whenever the AUC is defined.
Count mispair_count(const LabelVector& labels, const GuessVector& guesses);

/// h for labels interpreted in sorted-guess index order, i.e. the number of
/// (i labeled 0, j labeled 1) pairs with i > j.
Count mispair_count_sorted(const LabelVector& labels);

/// Permutation sending each example to its rank in ascending-guess order.
SortPermutation sort_permutation(const GuessVector& guesses);

/// Exchanges entries i-1 and i (1-based), requiring labels[i] = 1 and
/// labels[i-1] = 0. Increases mispair_count_sorted by exactly 1.
LabelVector left_swap(const LabelVector& labels, Count i);

/// k consecutive left-swaps from index i (1-based): the 1 at position i moves
/// k places left across zeros. Requires k >= 1, k < i.
LabelVector multi_left_swap(const LabelVector& labels, Count i, Count k);

/// The unique labeling whose n1 ones occupy the last n1 positions; the only
/// labeling of its shape with mispair_count_sorted = 0.
LabelVector rightmost(Count n, Count n1);

/// Bijection labeling -> swap vector: s[i] = n - n1 + (i+1) - p[i] where p
/// lists the 1-based positions of the ones. sum(s) = mispair_count_sorted.
SwapVector labels_to_swaps(const LabelVector& labels);

/// Inverse of labels_to_swaps: places the i-th one at position
/// n - n1 + (i+1) - s[i]. Throws InvalidSwapVector on a malformed input.
LabelVector swaps_to_labels(const SwapVector& swaps, Count n);

}  // namespace aucount
