#include "aucount/enumerate.hpp"

#include "aucount/core.hpp"
#include "aucount/counting.hpp"

#include <algorithm>
#include <vector>

namespace aucount {

namespace {

// Walks the swap vectors (n0 >= s[0] >= ... >= s[n1-1] >= 0, sum = d) in
// descending lexicographic order. Position i can take values down to
// ceil(rem_i / slots_i); decrementing the deepest position above its floor
// and greedily maxing the suffix yields the lexicographic successor.
class SwapEnumerator {
 public:
  SwapEnumerator(Count n0, Count n1, Count d) : n0_(n0), n1_(n1) {
    if (BigCount(d) > BigCount(n0) * n1) {
      exhausted_ = true;
      return;
    }
    swaps_.resize(n1);
    rem_.resize(n1);
    fill_greedy(0, d);
  }

  // Pointer stays valid until the following call; nullptr once exhausted.
  const std::vector<Count>* next() {
    if (exhausted_) return nullptr;
    if (fresh_) {
      fresh_ = false;
      return &swaps_;
    }
    for (std::size_t i = n1_; i-- > 0;) {
      const Count slots = n1_ - i;
      const Count floor_i = (rem_[i] + slots - 1) / slots;
      if (swaps_[i] > floor_i) {
        --swaps_[i];
        fill_greedy(i + 1, rem_[i] - swaps_[i]);
        return &swaps_;
      }
    }
    exhausted_ = true;
    return nullptr;
  }

 private:
  void fill_greedy(std::size_t from, Count remaining) {
    for (std::size_t i = from; i < n1_; ++i) {
      rem_[i] = remaining;
      const Count bound = i == 0 ? n0_ : swaps_[i - 1];
      swaps_[i] = std::min(bound, remaining);
      remaining -= swaps_[i];
    }
  }

  Count n0_;
  std::size_t n1_;
  std::vector<Count> swaps_;
  std::vector<Count> rem_;  // rem_[i]: sum still unassigned at position i
  bool exhausted_ = false;
  bool fresh_ = true;
};

struct Segment {
  Count n0 = 0;
  Count n1 = 0;
  Count d = 0;
};

}  // namespace

struct LabelingStream::Impl {
  std::vector<Segment> segments;
  std::size_t seg = 0;
  std::optional<SwapEnumerator> walker;
  std::optional<SortPermutation> perm;
  Count emitted_n1 = 0;
  Count emitted_d = 0;

  std::optional<LabelVector> next() {
    while (seg < segments.size()) {
      const Segment& s = segments[seg];
      if (!walker) walker.emplace(s.n0, s.n1, s.d);
      if (const std::vector<Count>* swaps = walker->next()) {
        LabelVector labels = swaps_to_labels(SwapVector{*swaps, s.n0}, s.n0 + s.n1);
        emitted_n1 = s.n1;
        emitted_d = s.d;
        if (perm) return perm->to_original(labels);
        return labels;
      }
      walker.reset();
      ++seg;
    }
    return std::nullopt;
  }
};

LabelingStream::LabelingStream(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
LabelingStream::LabelingStream(LabelingStream&&) noexcept = default;
LabelingStream& LabelingStream::operator=(LabelingStream&&) noexcept = default;
LabelingStream::~LabelingStream() = default;

std::optional<LabelVector> LabelingStream::next() { return impl_->next(); }
Count LabelingStream::current_n1() const { return impl_->emitted_n1; }
Count LabelingStream::current_d() const { return impl_->emitted_d; }

LabelingStream enumerate_fixed(Count n0, Count n1, Count d) {
  auto impl = std::make_unique<LabelingStream::Impl>();
  impl->segments.push_back({n0, n1, d});
  return LabelingStream(std::move(impl));
}

LabelingStream enumerate_all(Count n, const ExactAuc& auc) {
  auto impl = std::make_unique<LabelingStream::Impl>();
  for (const CandidateEntry& entry : candidate_n1(n, auc)) {
    impl->segments.push_back({n - entry.n1, entry.n1, entry.d});
  }
  return LabelingStream(std::move(impl));
}

LabelingStream enumerate_all(Count n, const ExactAuc& auc, const GuessVector& guesses) {
  if (guesses.size() != n) {
    throw LengthMismatch("guess vector has length " + std::to_string(guesses.size()) +
                         ", expected " + std::to_string(n));
  }
  LabelingStream stream = enumerate_all(n, auc);
  stream.impl_->perm = sort_permutation(guesses);
  return stream;
}

}  // namespace aucount
