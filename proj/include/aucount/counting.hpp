#pragma once

#include "aucount/types.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace aucount {

/// A positive-class size compatible with a reported AUC denominator, paired
/// with the implied number of misclassified pairs.
struct CandidateEntry {
  Count n1 = 0;
  Count d = 0;

  friend bool operator==(const CandidateEntry& a, const CandidateEntry& b) {
    return a.n1 == b.n1 && a.d == b.d;
  }
};

using CandidateSet = std::vector<CandidateEntry>;

/// All n1 in (0, n) with q | (n - n1)*n1, ascending, each with
/// d(n1) = (q - p)*(n - n1)*n1 / q. Empty result means no labeling of any
/// class balance is compatible with the reported value.
CandidateSet candidate_n1(Count n, const ExactAuc& auc);

inline constexpr std::size_t kDefaultMemCapBytes = std::size_t{4} << 30;

struct CountingConfig {
  /// Upper bound on the memo table's entry storage. Exceeding it raises
  /// CapacityExceeded instead of exhausting memory.
  std::size_t mem_cap_bytes = kDefaultMemCapBytes;
  /// Compute independent n1 addends of count_total/scan on worker threads.
  bool parallel = false;
};

/// Exact counting of compatible labelings via the recursion
///   v(n0, n1, d) = sum_{k=0}^{min(d, n0)} v(k, n1-1, d-k)
/// memoized in a dense 3-D table that grows monotonically across queries.
class Counter {
 public:
  explicit Counter(CountingConfig config = {});
  ~Counter();

  Counter(const Counter&) = delete;
  Counter& operator=(const Counter&) = delete;

  /// v(n0, n1, d): the number of labelings with n = n0 + n1 examples, n1 of
  /// them ones, and exactly d misclassified pairs against ascending guesses.
  BigCount count_fixed(Count n0, Count n1, Count d);

  /// Pre-sizes the memo table so later queries within these bounds are pure
  /// lookups. Throws CapacityExceeded if the table would exceed the cap.
  void reserve(Count n0_max, Count n1_max, Count d_max);

  struct Addend {
    Count n1 = 0;
    Count d = 0;
    BigCount count;
  };

  struct Total {
    BigCount total;
    std::vector<Addend> by_n1;  // ascending n1
  };

  /// w(n, c): total labelings of length n achieving AUC exactly c, summed
  /// over the disjoint per-n1 sets.
  Total count_total(Count n, const ExactAuc& auc);

  struct ScanRow {
    Count n = 0;
    CandidateSet candidates;
    BigCount total;
  };

  /// One row per n in [n_min, n_max] whose candidate set is nonempty.
  std::vector<ScanRow> scan(const ExactAuc& auc, Count n_min, Count n_max);

  const CountingConfig& config() const { return config_; }

 private:
  struct Table;

  BigCount count_fixed_unchecked(Count n0, Count n1, Count d);

  CountingConfig config_;
  std::unique_ptr<Table> table_;
};

}  // namespace aucount
