#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aucount {

/// Unsigned machine-width count (test-set sizes, class sizes, mispair counts).
using Count = std::uint64_t;

/// Arbitrary-precision nonnegative count. Labeling counts grow exponentially
/// in n, so fixed-width integers are never used for them.
using BigCount = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UndefinedAuc : Error { using Error::Error; };
struct DuplicateGuess : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct InvalidSwap : Error { using Error::Error; };
struct InvalidShape : Error { using Error::Error; };
struct EmptyClass : Error { using Error::Error; };
struct InvalidSwapVector : Error { using Error::Error; };
struct CapacityExceeded : Error { using Error::Error; };
struct LimitExceeded : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Decimal
// ---------------------------------------------------------------------------

/// An exactly-parsed decimal literal, value = mantissa * 10^exponent.
/// Comparison is exact; "0.50" and "0.5" compare equal.
class Decimal {
 public:
  Decimal() = default;
  Decimal(BigCount mantissa, int exponent);
  explicit Decimal(std::int64_t value) : Decimal(BigCount(value), 0) {}

  /// Parses an optionally signed decimal literal with optional fraction and
  /// exponent part ("0.2", "-1.", ".5", "3e-2"). Throws ParseError.
  static Decimal parse(std::string_view text);

  const BigCount& mantissa() const { return mantissa_; }
  int exponent() const { return exponent_; }

  std::string str() const;

  friend bool operator==(const Decimal& a, const Decimal& b);
  friend bool operator<(const Decimal& a, const Decimal& b);
  friend bool operator>(const Decimal& a, const Decimal& b) { return b < a; }
  friend bool operator!=(const Decimal& a, const Decimal& b) { return !(a == b); }

 private:
  // Normalized: mantissa has no trailing factor of 10 (zero has exponent 0).
  BigCount mantissa_ = 0;
  int exponent_ = 0;
};

// ---------------------------------------------------------------------------
// LabelVector
// ---------------------------------------------------------------------------

/// A binary ground-truth hypothesis over n test examples.
class LabelVector {
 public:
  LabelVector() = default;
  explicit LabelVector(std::vector<std::uint8_t> bits);

  /// Parses a string of '0'/'1' characters, e.g. "1010".
  static LabelVector parse(std::string_view text);

  Count size() const { return bits_.size(); }
  Count ones() const { return ones_; }
  Count zeros() const { return bits_.size() - ones_; }

  /// 0-based access.
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  /// 1-based indices of the 1 entries, ascending.
  std::vector<Count> one_positions() const;

  std::string str() const;

  friend bool operator==(const LabelVector& a, const LabelVector& b) {
    return a.bits_ == b.bits_;
  }
  friend bool operator!=(const LabelVector& a, const LabelVector& b) {
    return !(a == b);
  }
  friend bool operator<(const LabelVector& a, const LabelVector& b) {
    return a.bits_ < b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
  Count ones_ = 0;
};

// ---------------------------------------------------------------------------
// GuessVector
// ---------------------------------------------------------------------------

/// A contestant's real-valued guesses, one exact decimal per example.
/// All values must be pairwise distinct.
class GuessVector {
 public:
  explicit GuessVector(std::vector<Decimal> scores);

  Count size() const { return scores_.size(); }
  const Decimal& operator[](std::size_t i) const { return scores_[i]; }
  const std::vector<Decimal>& scores() const { return scores_; }

 private:
  std::vector<Decimal> scores_;
};

// ---------------------------------------------------------------------------
// SortPermutation
// ---------------------------------------------------------------------------

/// The permutation sending each original example index to its rank in
/// ascending-score order.
class SortPermutation {
 public:
  SortPermutation() = default;
  explicit SortPermutation(std::vector<Count> ranks);

  Count size() const { return ranks_.size(); }

  /// 0-based: rank of the example at original position i.
  Count rank_of(std::size_t i) const { return ranks_[i]; }
  const std::vector<Count>& ranks() const { return ranks_; }

  bool is_identity() const;

  /// Reorders original-order values into ascending-score order.
  template <typename T>
  std::vector<T> to_sorted(const std::vector<T>& original) const {
    std::vector<T> out(original.size());
    for (std::size_t i = 0; i < original.size(); ++i) out[ranks_[i]] = original[i];
    return out;
  }

  /// Inverse of to_sorted.
  template <typename T>
  std::vector<T> to_original(const std::vector<T>& sorted) const {
    std::vector<T> out(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) out[i] = sorted[ranks_[i]];
    return out;
  }

  LabelVector to_sorted(const LabelVector& labels) const;
  LabelVector to_original(const LabelVector& labels) const;

 private:
  std::vector<Count> ranks_;
};

// ---------------------------------------------------------------------------
// SwapVector
// ---------------------------------------------------------------------------

/// Encodes a labeling with n1 ones as the numbers of left-swaps applied to
/// each 1 of the right-most configuration: n0 >= s[0] >= ... >= s[n1-1] >= 0.
struct SwapVector {
  std::vector<Count> swaps;
  Count n0 = 0;

  Count sum() const;
  bool valid() const;

  friend bool operator==(const SwapVector& a, const SwapVector& b) {
    return a.n0 == b.n0 && a.swaps == b.swaps;
  }
};

// ---------------------------------------------------------------------------
// ExactAuc
// ---------------------------------------------------------------------------

/// A reported AUC value as a reduced fraction p/q with 0 <= p/q <= 1.
class ExactAuc {
 public:
  /// Reduces p/q. Throws ParseError unless q > 0 and 0 <= p/q <= 1.
  ExactAuc(BigCount p, BigCount q);

  /// Accepts "p/q" with integer parts, or a terminating decimal such as
  /// "0.75" (converted exactly, then reduced).
  static ExactAuc parse(std::string_view text);

  const BigCount& p() const { return p_; }
  const BigCount& q() const { return q_; }

  std::string str() const;
  double approx() const;

  friend bool operator==(const ExactAuc& a, const ExactAuc& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const ExactAuc& a, const ExactAuc& b) { return !(a == b); }
  friend bool operator<(const ExactAuc& a, const ExactAuc& b) {
    return a.p_ * b.q_ < b.p_ * a.q_;
  }

 private:
  BigCount p_;
  BigCount q_;
};

}  // namespace aucount
