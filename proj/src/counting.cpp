#include "aucount/counting.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>
#include <utility>

namespace aucount {

CandidateSet candidate_n1(Count n, const ExactAuc& auc) {
  CandidateSet out;
  const BigCount scaled_mispairs = auc.q() - auc.p();
  for (Count n1 = 1; n1 < n; ++n1) {
    const BigCount pairs = BigCount(n - n1) * n1;
    if (pairs % auc.q() != 0) continue;
    // Divisibility established above, so d is an exact integer.
    const BigCount d = scaled_mispairs * (pairs / auc.q());
    if (d > std::numeric_limits<Count>::max()) {
      throw CapacityExceeded("mispair count for n1 = " + std::to_string(n1) +
                             " exceeds the supported range");
    }
    out.push_back({n1, d.convert_to<Count>()});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counter
// ---------------------------------------------------------------------------

// Dense memoization of v over [0, n0_max] x [0, n1_max] x [0, d_max],
// refilled from scratch whenever a query forces any dimension to grow.
struct Counter::Table {
  Count n0_max = 0;
  Count n1_max = 0;
  Count d_max = 0;
  bool filled = false;
  std::vector<BigCount> cells;

  std::size_t index(Count n0, Count n1, Count d) const {
    return (static_cast<std::size_t>(n1) * (n0_max + 1) + n0) * (d_max + 1) + d;
  }

  const BigCount& at(Count n0, Count n1, Count d) const {
    return cells[index(n0, n1, d)];
  }

  void fill() {
    for (Count n1 = 0; n1 <= n1_max; ++n1) {
      for (Count n0 = 0; n0 <= n0_max; ++n0) {
        const std::size_t base = index(n0, n1, 0);
        cells[base] = 1;
        for (Count d = 1; d <= d_max; ++d) {
          if (n0 == 0 || n1 == 0) {
            cells[base + d] = 0;
            continue;
          }
          BigCount sum = 0;
          const Count k_max = std::min(d, n0);
          for (Count k = 0; k <= k_max; ++k) {
            sum += at(k, n1 - 1, d - k);
          }
          cells[base + d] = std::move(sum);
        }
      }
    }
    filled = true;
  }
};

Counter::Counter(CountingConfig config)
    : config_(config), table_(std::make_unique<Table>()) {}

Counter::~Counter() = default;

void Counter::reserve(Count n0_max, Count n1_max, Count d_max) {
  n0_max = std::max(n0_max, table_->n0_max);
  n1_max = std::max(n1_max, table_->n1_max);
  d_max = std::max(d_max, table_->d_max);
  if (table_->filled && n0_max == table_->n0_max && n1_max == table_->n1_max &&
      d_max == table_->d_max) {
    return;
  }

  const BigCount entries = (BigCount(n0_max) + 1) * (BigCount(n1_max) + 1) * (BigCount(d_max) + 1);
  const BigCount bytes = entries * sizeof(BigCount);
  if (bytes > config_.mem_cap_bytes) {
    throw CapacityExceeded("memo table for (n0, n1, d) = (" + std::to_string(n0_max) +
                           ", " + std::to_string(n1_max) + ", " + std::to_string(d_max) +
                           ") needs " + bytes.str() + " bytes, cap is " +
                           std::to_string(config_.mem_cap_bytes));
  }

  table_->n0_max = n0_max;
  table_->n1_max = n1_max;
  table_->d_max = d_max;
  table_->cells.assign(entries.convert_to<std::size_t>(), BigCount(0));
  table_->fill();
}

BigCount Counter::count_fixed(Count n0, Count n1, Count d) {
  if (d == 0) return 1;
  if (n0 == 0 || n1 == 0) return 0;
  if (BigCount(d) > BigCount(n0) * n1) return 0;
  reserve(n0, n1, d);
  return table_->at(n0, n1, d);
}

namespace {

// One sequential Counter per worker; addends land in their candidate's slot,
// so the result is identical to the sequential sum.
std::vector<BigCount> parallel_addends(const CandidateSet& candidates, Count n,
                                       const CountingConfig& config) {
  std::vector<BigCount> results(candidates.size());
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, candidates.size());
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        CountingConfig local = config;
        local.parallel = false;
        Counter counter(local);
        for (std::size_t k = w; k < candidates.size(); k += workers) {
          results[k] = counter.count_fixed(n - candidates[k].n1, candidates[k].n1,
                                           candidates[k].d);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return results;
}

}  // namespace

Counter::Total Counter::count_total(Count n, const ExactAuc& auc) {
  const CandidateSet candidates = candidate_n1(n, auc);
  Total result;
  result.total = 0;
  result.by_n1.reserve(candidates.size());

  if (config_.parallel && candidates.size() > 1) {
    std::vector<BigCount> addends = parallel_addends(candidates, n, config_);
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      result.total += addends[k];
      result.by_n1.push_back({candidates[k].n1, candidates[k].d, std::move(addends[k])});
    }
    return result;
  }

  for (const CandidateEntry& entry : candidates) {
    BigCount count = count_fixed(n - entry.n1, entry.n1, entry.d);
    result.total += count;
    result.by_n1.push_back({entry.n1, entry.d, std::move(count)});
  }
  return result;
}

std::vector<Counter::ScanRow> Counter::scan(const ExactAuc& auc, Count n_min, Count n_max) {
  if (n_min < 2 || n_min > n_max) {
    throw ParseError("scan range requires 2 <= n_min <= n_max");
  }

  std::vector<ScanRow> rows;
  for (Count n = n_min; n <= n_max; ++n) {
    CandidateSet candidates = candidate_n1(n, auc);
    if (candidates.empty()) continue;
    rows.push_back({n, std::move(candidates), BigCount(0)});
  }

  if (!config_.parallel) {
    // Size the table once for the whole range; the per-row sums below are
    // then pure lookups.
    Count n0_max = 0, n1_max = 0, d_max = 0;
    for (const ScanRow& row : rows) {
      for (const CandidateEntry& entry : row.candidates) {
        n0_max = std::max(n0_max, row.n - entry.n1);
        n1_max = std::max(n1_max, entry.n1);
        d_max = std::max(d_max, entry.d);
      }
    }
    reserve(n0_max, n1_max, d_max);
  }

  for (ScanRow& row : rows) {
    if (config_.parallel && row.candidates.size() > 1) {
      for (BigCount& addend : parallel_addends(row.candidates, row.n, config_)) {
        row.total += addend;
      }
    } else {
      for (const CandidateEntry& entry : row.candidates) {
        row.total += count_fixed(row.n - entry.n1, entry.n1, entry.d);
      }
    }
  }
  return rows;
}

}  // namespace aucount
