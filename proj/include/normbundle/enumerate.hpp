#pragma once

// Exhaustive enumeration of valid centers.  For fixed degree d and ambient
// dimension s every center is a (d-s)-subset of [2, d-2], which keeps the
// space small enough to sweep completely; the report aggregates splitting
// types with counts and a deterministic witness (the lexicographically
// smallest exponent set producing the type).

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "normbundle/curve.hpp"
#include "normbundle/linalg_oracle.hpp"
#include "normbundle/splitting.hpp"

namespace normbundle {

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

namespace detail {

// All k-subsets of {lo, ..., hi} in lexicographic order.
inline std::vector<std::vector<int>> subsets_of_range(int lo, int hi, int k) {
  std::vector<std::vector<int>> out;
  const int n = hi - lo + 1;
  if (k < 0 || k > n) return out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = lo + i;
  while (true) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == hi - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

}  // namespace detail

struct TypeEntry {
  long long count = 0;
  std::vector<int> witness;  // lexicographically smallest exponent set
};

struct EnumerationReport {
  int d = 0;
  int s = 0;
  long long total_spaces = 0;
  std::map<SplittingType, TypeEntry> histogram;
};

// Sweeps every valid center for (d, s) and tallies splitting types.  With
// jobs > 1 the subsets are split into contiguous chunks, one thread each;
// counts add and witnesses take the minimum, so the merged report is
// identical for every worker count.
inline EnumerationReport enumerate_centers(int d, int s, int jobs = 1) {
  if (s < 3 || d <= s) {
    throw validation_error(errc::invalid_range,
                           "need d > s >= 3 (got d = " + std::to_string(d) +
                               ", s = " + std::to_string(s) + ")");
  }
  const int t = d - s;
  const std::vector<std::vector<int>> subsets =
      detail::subsets_of_range(2, d - 2, t);

  using Histogram = std::map<SplittingType, TypeEntry>;
  const auto tally = [d](const std::vector<std::vector<int>>& chunk,
                         Histogram& into) {
    for (const std::vector<int>& exponents : chunk) {
      const SplittingType type =
          splitting_type(summarize(validate(from_center(d, exponents))));
      auto [it, inserted] = into.try_emplace(type, TypeEntry{1, exponents});
      if (!inserted) {
        ++it->second.count;
        if (exponents < it->second.witness) it->second.witness = exponents;
      }
    }
  };

  EnumerationReport report;
  report.d = d;
  report.s = s;
  report.total_spaces = static_cast<long long>(subsets.size());

  if (jobs < 1) jobs = 1;
  if (jobs > static_cast<int>(subsets.size())) {
    jobs = static_cast<int>(subsets.size());
  }
  if (jobs <= 1) {
    tally(subsets, report.histogram);
  } else {
    std::vector<Histogram> partial(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    const std::size_t n = subsets.size();
    for (int w = 0; w < jobs; ++w) {
      const std::size_t begin = n * static_cast<std::size_t>(w) / static_cast<std::size_t>(jobs);
      const std::size_t end = n * static_cast<std::size_t>(w + 1) / static_cast<std::size_t>(jobs);
      workers.emplace_back([&, begin, end, w] {
        const std::vector<std::vector<int>> chunk(subsets.begin() + static_cast<std::ptrdiff_t>(begin),
                                                  subsets.begin() + static_cast<std::ptrdiff_t>(end));
        tally(chunk, partial[static_cast<std::size_t>(w)]);
      });
    }
    for (std::thread& th : workers) th.join();
    for (const Histogram& h : partial) {
      for (const auto& [type, entry] : h) {
        auto [it, inserted] = report.histogram.try_emplace(type, entry);
        if (!inserted) {
          it->second.count += entry.count;
          if (entry.witness < it->second.witness) it->second.witness = entry.witness;
        }
      }
    }
  }

  if (report.total_spaces != binomial(d - 3, t)) {
    throw internal_error(errc::count_mismatch,
                         "enumerated " + std::to_string(report.total_spaces) +
                             " centers, expected C(" + std::to_string(d - 3) +
                             ", " + std::to_string(t) + ")");
  }
  return report;
}

struct Achievability {
  bool achievable = false;
  std::vector<int> witness;  // empty when not achievable
};

// Decides whether `candidate` occurs as a splitting type for (d, s).  The
// candidate must have the right shape before enumeration even starts:
// s - 1 entries, none negative, summing to 2(d - s).
inline Achievability achievable(int d, int s, const SplittingType& candidate) {
  if (s < 3 || d <= s) {
    throw validation_error(errc::invalid_range,
                           "need d > s >= 3 (got d = " + std::to_string(d) +
                               ", s = " + std::to_string(s) + ")");
  }
  if (static_cast<int>(candidate.c.size()) != s - 1) {
    throw validation_error(errc::malformed_candidate,
                           "candidate has " + std::to_string(candidate.c.size()) +
                               " entries, expected s - 1 = " + std::to_string(s - 1));
  }
  for (int x : candidate.c) {
    if (x < 0) {
      throw validation_error(errc::malformed_candidate,
                             "candidate entries must be non-negative (got " +
                                 std::to_string(x) + ")",
                             x);
    }
  }
  if (candidate.sum() != 2 * (d - s)) {
    throw validation_error(errc::malformed_candidate,
                           "candidate sums to " + std::to_string(candidate.sum()) +
                               ", expected 2(d - s) = " + std::to_string(2 * (d - s)));
  }
  const EnumerationReport report = enumerate_centers(d, s);
  const auto it = report.histogram.find(candidate);
  if (it == report.histogram.end()) return Achievability{};
  return Achievability{true, it->second.witness};
}

struct SweepMismatch {
  int d = 0;
  std::vector<int> exponents;
  SplittingType formula;
  SplittingType oracle;
  PhiTable phi_formula;
  PhiTable phi_oracle;
};

struct SweepReport {
  int d_min = 0;
  int d_max = 0;
  long long spaces_checked = 0;
  std::optional<SweepMismatch> first_mismatch;
  double elapsed_seconds = 0.0;

  bool ok() const { return !first_mismatch.has_value(); }
};

// Formula-vs-oracle agreement over every valid center with 6 <= d <= d_max.
// A disagreement is report content (with both phi tables attached), not an
// exception: the caller decides what a mismatch means.
inline SweepReport sweep_verify(int d_max) {
  if (d_max < 6) {
    throw validation_error(errc::invalid_range,
                           "sweep needs d_max >= 6 (got " + std::to_string(d_max) + ")");
  }
  SweepReport report;
  report.d_min = 6;
  report.d_max = d_max;
  const auto start = std::chrono::steady_clock::now();
  for (int d = 6; d <= d_max; ++d) {
    for (int t = 1; t <= d - 3; ++t) {
      for (const std::vector<int>& exponents : detail::subsets_of_range(2, d - 2, t)) {
        const ValidatedSpace space = validate(from_center(d, exponents));
        ++report.spaces_checked;
        if (report.first_mismatch) continue;  // keep counting, stop comparing
        const SplittingType fast = splitting_type(summarize(space));
        const SplittingType slow = splitting_oracle(space);
        if (!(fast == slow)) {
          report.first_mismatch =
              SweepMismatch{d,         exponents,
                            fast,      slow,
                            phi_table(summarize(space)), phi_table_oracle(space)};
        }
      }
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace normbundle
