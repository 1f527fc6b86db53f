#include "aucount/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace aucount {

namespace {

void check_lengths(const LabelVector& labels, const GuessVector& guesses) {
  if (labels.size() != guesses.size()) {
    throw LengthMismatch("labels have length " + std::to_string(labels.size()) +
                         " but guesses have length " + std::to_string(guesses.size()));
  }
}

}  // namespace

ExactAuc compute_auc(const LabelVector& labels, const GuessVector& guesses) {
  check_lengths(labels, guesses);
  const Count n1 = labels.ones();
  const Count n0 = labels.zeros();
  if (n0 == 0 || n1 == 0) {
    throw UndefinedAuc("AUC undefined: all labels belong to one class");
  }

  BigCount correct = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i]) continue;
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (!labels[j]) continue;
      if (guesses[i] < guesses[j]) ++correct;
    }
  }
  return ExactAuc(correct, BigCount(n0) * n1);
}

Count mispair_count(const LabelVector& labels, const GuessVector& guesses) {
  check_lengths(labels, guesses);
  Count h = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i]) continue;
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (!labels[j]) continue;
      if (guesses[i] > guesses[j]) ++h;
    }
  }
  return h;
}

Count mispair_count_sorted(const LabelVector& labels) {
  // Each 0 is mispaired with every 1 to its left.
  Count h = 0;
  Count ones_seen = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i]) {
      ++ones_seen;
    } else {
      h += ones_seen;
    }
  }
  return h;
}

SortPermutation sort_permutation(const GuessVector& guesses) {
  std::vector<std::size_t> order(guesses.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return guesses[a] < guesses[b]; });
  std::vector<Count> ranks(guesses.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    ranks[order[rank]] = static_cast<Count>(rank);
  }
  return SortPermutation(std::move(ranks));
}

LabelVector left_swap(const LabelVector& labels, Count i) {
  if (i < 2 || i > labels.size()) {
    throw InvalidSwap("left-swap index " + std::to_string(i) + " out of range");
  }
  if (labels[i - 1] != 1 || labels[i - 2] != 0) {
    throw InvalidSwap("left-swap at index " + std::to_string(i) +
                      " requires a 1 preceded by a 0");
  }
  std::vector<std::uint8_t> bits = labels.bits();
  std::swap(bits[i - 1], bits[i - 2]);
  return LabelVector(std::move(bits));
}

LabelVector multi_left_swap(const LabelVector& labels, Count i, Count k) {
  if (k == 0 || k >= i) {
    throw InvalidSwap("swap count " + std::to_string(k) +
                      " must satisfy 1 <= k < i = " + std::to_string(i));
  }
  LabelVector result = labels;
  for (Count step = 0; step < k; ++step) {
    result = left_swap(result, i - step);
  }
  return result;
}

LabelVector rightmost(Count n, Count n1) {
  if (n1 > n) {
    throw InvalidShape("cannot place " + std::to_string(n1) + " ones in " +
                       std::to_string(n) + " positions");
  }
  std::vector<std::uint8_t> bits(n, 0);
  std::fill(bits.begin() + static_cast<std::ptrdiff_t>(n - n1), bits.end(), 1);
  return LabelVector(std::move(bits));
}

SwapVector labels_to_swaps(const LabelVector& labels) {
  const Count n = labels.size();
  const Count n1 = labels.ones();
  if (n1 == 0) throw EmptyClass("labeling has no 1 entries");

  const std::vector<Count> positions = labels.one_positions();
  SwapVector out;
  out.n0 = n - n1;
  out.swaps.reserve(n1);
  for (Count i = 1; i <= n1; ++i) {
    out.swaps.push_back(n - n1 + i - positions[i - 1]);
  }
  return out;
}

LabelVector swaps_to_labels(const SwapVector& swaps, Count n) {
  const Count n1 = swaps.swaps.size();
  if (n1 > n || swaps.n0 != n - n1) {
    throw InvalidSwapVector("swap vector shape does not match n = " + std::to_string(n));
  }
  if (!swaps.valid()) {
    throw InvalidSwapVector("swap vector violates n0 >= s1 >= ... >= s_n1 >= 0");
  }
  std::vector<std::uint8_t> bits(n, 0);
  for (Count i = 1; i <= n1; ++i) {
    bits[n - n1 + i - swaps.swaps[i - 1] - 1] = 1;
  }
  return LabelVector(std::move(bits));
}

}  // namespace aucount
