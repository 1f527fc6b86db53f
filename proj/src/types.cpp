#include "aucount/types.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace aucount {

namespace {

BigCount pow10(unsigned k) {
  BigCount r = 1;
  for (unsigned i = 0; i < k; ++i) r *= 10;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Decimal
// ---------------------------------------------------------------------------

Decimal::Decimal(BigCount mantissa, int exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  while (mantissa_ % 10 == 0) {
    mantissa_ /= 10;
    ++exponent_;
  }
}

Decimal Decimal::parse(std::string_view text) {
  std::size_t i = 0;
  const auto fail = [&](const char* why) -> Decimal {
    throw ParseError("invalid decimal literal \"" + std::string(text) + "\": " + why);
  };
  if (text.empty()) return fail("empty");

  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }

  BigCount mant = 0;
  int exp = 0;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    mant = mant * 10 + (text[i] - '0');
    ++digits;
    ++i;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      mant = mant * 10 + (text[i] - '0');
      --exp;
      ++digits;
      ++i;
    }
  }
  if (digits == 0) return fail("no digits");

  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_neg = text[i] == '-';
      ++i;
    }
    if (i == text.size()) return fail("exponent has no digits");
    long e = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      e = e * 10 + (text[i] - '0');
      if (e > 100000) return fail("exponent out of range");
      ++i;
    }
    exp += static_cast<int>(exp_neg ? -e : e);
  }
  if (i != text.size()) return fail("trailing characters");

  if (negative) mant = -mant;
  return Decimal(std::move(mant), exp);
}

std::string Decimal::str() const {
  std::ostringstream os;
  os << mantissa_;
  std::string s = os.str();
  if (exponent_ == 0) return s;
  os.str("");
  os << s << "e" << exponent_;
  return os.str();
}

bool operator==(const Decimal& a, const Decimal& b) {
  // Normalized representation is canonical.
  return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
}

bool operator<(const Decimal& a, const Decimal& b) {
  const int common = std::min(a.exponent_, b.exponent_);
  const BigCount lhs = a.mantissa_ * pow10(static_cast<unsigned>(a.exponent_ - common));
  const BigCount rhs = b.mantissa_ * pow10(static_cast<unsigned>(b.exponent_ - common));
  return lhs < rhs;
}

// ---------------------------------------------------------------------------
// LabelVector
// ---------------------------------------------------------------------------

LabelVector::LabelVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::uint8_t b : bits_) {
    if (b > 1) throw ParseError("label entries must be 0 or 1");
    ones_ += b;
  }
}

LabelVector LabelVector::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError(std::string("invalid label character '") + c + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return LabelVector(std::move(bits));
}

std::vector<Count> LabelVector::one_positions() const {
  std::vector<Count> pos;
  pos.reserve(ones_);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) pos.push_back(static_cast<Count>(i + 1));
  }
  return pos;
}

std::string LabelVector::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (std::uint8_t b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

// ---------------------------------------------------------------------------
// GuessVector
// ---------------------------------------------------------------------------

GuessVector::GuessVector(std::vector<Decimal> scores) : scores_(std::move(scores)) {
  if (scores_.empty()) throw ParseError("guess vector must not be empty");
  std::vector<std::size_t> order(scores_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores_[a] < scores_[b]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (scores_[order[k - 1]] == scores_[order[k]]) {
      throw DuplicateGuess("duplicate guess value " + scores_[order[k]].str() +
                           " at positions " + std::to_string(order[k - 1] + 1) +
                           " and " + std::to_string(order[k] + 1));
    }
  }
}

// ---------------------------------------------------------------------------
// SortPermutation
// ---------------------------------------------------------------------------

SortPermutation::SortPermutation(std::vector<Count> ranks) : ranks_(std::move(ranks)) {
  std::vector<bool> seen(ranks_.size(), false);
  for (Count r : ranks_) {
    if (r >= ranks_.size() || seen[r]) {
      throw ParseError("rank vector is not a permutation");
    }
    seen[r] = true;
  }
}

bool SortPermutation::is_identity() const {
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (ranks_[i] != i) return false;
  }
  return true;
}

LabelVector SortPermutation::to_sorted(const LabelVector& labels) const {
  if (labels.size() != size()) throw LengthMismatch("label/permutation length mismatch");
  return LabelVector(to_sorted(labels.bits()));
}

LabelVector SortPermutation::to_original(const LabelVector& labels) const {
  if (labels.size() != size()) throw LengthMismatch("label/permutation length mismatch");
  return LabelVector(to_original(labels.bits()));
}

// ---------------------------------------------------------------------------
// SwapVector
// ---------------------------------------------------------------------------

Count SwapVector::sum() const {
  Count total = 0;
  for (Count s : swaps) total += s;
  return total;
}

bool SwapVector::valid() const {
  Count prev = n0;
  for (Count s : swaps) {
    if (s > prev) return false;
    prev = s;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ExactAuc
// ---------------------------------------------------------------------------

ExactAuc::ExactAuc(BigCount p, BigCount q) : p_(std::move(p)), q_(std::move(q)) {
  if (q_ <= 0) throw ParseError("AUC denominator must be positive");
  if (p_ < 0 || p_ > q_) throw ParseError("AUC must lie in [0, 1]");
  const BigCount g = boost::multiprecision::gcd(p_, q_);
  p_ /= g;
  q_ /= g;
}

ExactAuc ExactAuc::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const auto parse_int = [&](std::string_view part) {
      if (part.empty()) throw ParseError("invalid fraction \"" + std::string(text) + "\"");
      BigCount v = 0;
      for (char c : part) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw ParseError("invalid fraction \"" + std::string(text) + "\"");
        }
        v = v * 10 + (c - '0');
      }
      return v;
    };
    return ExactAuc(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  const Decimal dec = Decimal::parse(text);
  if (dec.exponent() >= 0) {
    return ExactAuc(dec.mantissa() * pow10(static_cast<unsigned>(dec.exponent())), 1);
  }
  return ExactAuc(dec.mantissa(), pow10(static_cast<unsigned>(-dec.exponent())));
}

std::string ExactAuc::str() const {
  std::ostringstream os;
  os << p_ << "/" << q_;
  return os.str();
}

double ExactAuc::approx() const {
  return p_.convert_to<double>() / q_.convert_to<double>();
}

}  // namespace aucount
