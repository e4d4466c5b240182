#pragma once

// Exact maximization of |<correlation polynomial>| over deterministic local
// strategies (an assignment of +-1 to every measurement setting). The LHV
// value set is a polytope whose vertices are exactly these assignments, so
// the maximum over them is the LHV bound.
//
// Numbers stay exact throughout: all coefficients are brought to a common
// denominator sqrt(2)^k, so a strategy value is an integer pair (A, B)
// meaning (A + B*sqrt(2)) / sqrt(2)^k, and magnitude comparisons reduce to
// integer sign tests.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <thread>
#include <utility>
#include <vector>

#include "graphbell/correlation.hpp"

namespace graphbell {

struct Strategy {
  std::map<ObservableLabel, int> signs;  // label -> +1 / -1
};

enum class LhvMethod { exhaustive, branch_and_bound, auto_select };

inline const char* lhv_method_name(LhvMethod m) {
  switch (m) {
    case LhvMethod::exhaustive: return "exhaustive";
    case LhvMethod::branch_and_bound: return "branch_and_bound";
    default: return "auto";
  }
}

struct LhvReport {
  RootTwoScalar bound;                    // max |value|, exact
  Strategy argmax;                        // lexicographically smallest witness
  std::uint64_t strategies_explored = 0;
  LhvMethod method = LhvMethod::exhaustive;  // the method actually run
};

/// Exact value of the polynomial under one deterministic assignment.
inline RootTwoScalar strategy_value(const CorrelationPolynomial& c, const Strategy& s) {
  RootTwoScalar total;
  for (const auto& [factors, coeff] : c.terms()) {
    int sign = 1;
    for (const auto& [site, label] : factors) {
      auto it = s.signs.find(label);
      if (it == s.signs.end()) {
        throw ValidationError("strategy_value: strategy misses setting " + label.str_with_site());
      }
      sign *= it->second;
    }
    total = total + (sign > 0 ? coeff : -coeff);
  }
  return total;
}

namespace lhv_detail {

using IntPair = std::pair<std::int64_t, std::int64_t>;  // A + B*sqrt(2)

inline int pair_sign(__int128 a, __int128 b) {
  if (a == 0 && b == 0) return 0;
  if (a >= 0 && b >= 0) return 1;
  if (a <= 0 && b <= 0) return -1;
  __int128 aa = a * a;
  __int128 bb = 2 * b * b;
  if (a > 0) return aa > bb ? 1 : -1;
  return aa > bb ? -1 : 1;
}

/// sign(|x| - |y|) for values x, y given as integer pairs.
inline int abs_compare(const IntPair& x, const IntPair& y) {
  // compare squares: x^2 = (A^2 + 2B^2) + 2AB*sqrt(2)
  __int128 da = static_cast<__int128>(x.first) * x.first +
                2 * static_cast<__int128>(x.second) * x.second -
                static_cast<__int128>(y.first) * y.first -
                2 * static_cast<__int128>(y.second) * y.second;
  __int128 db = 2 * (static_cast<__int128>(x.first) * x.second -
                     static_cast<__int128>(y.first) * y.second);
  return pair_sign(da, db);
}

inline IntPair abs_pair(const IntPair& x) {
  return pair_sign(x.first, x.second) < 0 ? IntPair{-x.first, -x.second} : x;
}

struct Compiled {
  std::vector<ObservableLabel> labels;               // sorted; index = label id
  std::uint32_t common_k = 0;
  std::vector<IntPair> coeff;                        // per term, at common_k
  std::vector<IntPair> coeff_abs;
  std::vector<std::vector<std::uint32_t>> term_labels;
  std::vector<std::vector<std::uint32_t>> label_terms;

  RootTwoScalar value_of(const IntPair& v) const {
    return RootTwoScalar(v.first, v.second, common_k);
  }
};

inline Compiled compile(const CorrelationPolynomial& c) {
  Compiled out;
  out.labels = c.labels();
  std::map<ObservableLabel, std::uint32_t> index;
  for (std::uint32_t i = 0; i < out.labels.size(); ++i) index.emplace(out.labels[i], i);
  out.label_terms.resize(out.labels.size());

  for (const auto& [factors, coeff] : c.terms()) {
    out.common_k = std::max(out.common_k, coeff.k());
  }
  std::int64_t max_a = 0, max_b = 0;
  std::uint32_t t = 0;
  for (const auto& [factors, coeff] : c.terms()) {
    std::int64_t a = coeff.a(), b = coeff.b();
    for (std::uint32_t i = coeff.k(); i < out.common_k; ++i) {
      std::int64_t na = detail::checked_mul(b, 2);
      b = a;
      a = na;
    }
    out.coeff.emplace_back(a, b);
    out.coeff_abs.push_back(abs_pair({a, b}));
    max_a = detail::checked_add(max_a, std::llabs(a));
    max_b = detail::checked_add(max_b, std::llabs(b));
    std::vector<std::uint32_t> ids;
    for (const auto& [site, label] : factors) ids.push_back(index.at(label));
    out.term_labels.push_back(std::move(ids));
    for (auto id : out.term_labels.back()) out.label_terms[id].push_back(t);
    ++t;
  }
  // magnitude comparisons square the accumulators, so keep them below 2^31
  if (max_a >= (std::int64_t{1} << 31) || max_b >= (std::int64_t{1} << 31)) {
    throw std::overflow_error("lhv_bound: coefficient magnitudes too large");
  }
  return out;
}

struct Best {
  IntPair value{0, 0};           // signed value at the witness
  IntPair magnitude{0, 0};       // |value|
  std::vector<std::int8_t> assignment;
  bool valid = false;

  void consider(const IntPair& v, const std::vector<std::int8_t>& signs) {
    IntPair mag = abs_pair(v);
    if (valid) {
      int cmp = abs_compare(mag, magnitude);
      if (cmp < 0) return;
      if (cmp == 0 &&
          !std::lexicographical_compare(signs.begin(), signs.end(), assignment.begin(),
                                        assignment.end())) {
        return;
      }
    }
    valid = true;
    value = v;
    magnitude = mag;
    assignment = signs;
  }

  void merge(const Best& o) {
    if (o.valid) consider(o.value, o.assignment);
  }
};

/// Gray-code walk over the free labels with the first `prefix_bits` labels
/// pinned to `prefix`; exactly one label flips per step, so the value pair is
/// updated incrementally through the terms containing that label.
inline Best exhaustive_partition(const Compiled& c, std::uint32_t prefix_bits,
                                 std::uint64_t prefix) {
  const std::size_t n_labels = c.labels.size();
  const std::size_t n_terms = c.coeff.size();
  std::vector<std::int8_t> signs(n_labels, 1);
  for (std::uint32_t i = 0; i < prefix_bits; ++i) {
    if ((prefix >> i) & 1) signs[i] = -1;
  }
  std::vector<std::int8_t> term_sign(n_terms, 1);
  std::int64_t acc_a = 0, acc_b = 0;
  for (std::size_t t = 0; t < n_terms; ++t) {
    for (auto id : c.term_labels[t]) term_sign[t] *= signs[id];
    acc_a += term_sign[t] * c.coeff[t].first;
    acc_b += term_sign[t] * c.coeff[t].second;
  }

  Best best;
  best.consider({acc_a, acc_b}, signs);
  const std::uint32_t free_bits = static_cast<std::uint32_t>(n_labels) - prefix_bits;
  const std::uint64_t steps = free_bits >= 64 ? 0 : (std::uint64_t{1} << free_bits);
  for (std::uint64_t step = 1; step < steps; ++step) {
    std::uint32_t flip = prefix_bits + std::countr_zero(step);
    signs[flip] = -signs[flip];
    for (auto t : c.label_terms[flip]) {
      term_sign[t] = -term_sign[t];
      acc_a += 2 * term_sign[t] * c.coeff[t].first;
      acc_b += 2 * term_sign[t] * c.coeff[t].second;
    }
    best.consider({acc_a, acc_b}, signs);
  }
  return best;
}

inline Best run_exhaustive(const Compiled& c, unsigned threads, std::uint64_t& explored) {
  const std::uint32_t n_labels = static_cast<std::uint32_t>(c.labels.size());
  explored = n_labels >= 64 ? 0 : (std::uint64_t{1} << n_labels);
  std::uint32_t prefix_bits = 0;
  if (threads > 1 && n_labels > 4) {
    while ((std::uint32_t{1} << prefix_bits) < 4 * threads && prefix_bits + 2 < n_labels &&
           prefix_bits < 12) {
      ++prefix_bits;
    }
  }
  const std::uint64_t partitions = std::uint64_t{1} << prefix_bits;
  if (partitions == 1) return exhaustive_partition(c, 0, 0);

  std::vector<Best> results(partitions);
  auto worker = [&](unsigned tid) {
    for (std::uint64_t p = tid; p < partitions; p += threads) {
      results[p] = exhaustive_partition(c, prefix_bits, p);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned tid = 1; tid < threads; ++tid) pool.emplace_back(worker, tid);
  worker(0);
  for (auto& th : pool) th.join();

  Best best;
  for (const auto& r : results) best.merge(r);
  return best;
}

struct BnbSearch {
  const Compiled& c;
  std::vector<std::vector<std::uint32_t>> site_groups;  // label ids grouped by site
  std::vector<std::int8_t> signs;
  std::vector<std::int8_t> term_sign;
  std::vector<std::uint32_t> term_remaining;
  std::int64_t fixed_a = 0, fixed_b = 0;   // completed terms
  std::int64_t rest_a = 0, rest_b = 0;     // sum |coeff| over incomplete terms
  std::uint64_t leaves = 0;
  Best best;

  explicit BnbSearch(const Compiled& compiled) : c(compiled) {
    std::map<std::uint32_t, std::vector<std::uint32_t>> by_site;
    for (std::uint32_t id = 0; id < c.labels.size(); ++id) {
      by_site[c.labels[id].site].push_back(id);
    }
    for (auto& [site, ids] : by_site) site_groups.push_back(ids);
    // most-constrained sites first
    std::stable_sort(site_groups.begin(), site_groups.end(),
                     [](const auto& l, const auto& r) { return l.size() > r.size(); });
    signs.assign(c.labels.size(), 1);
    term_sign.assign(c.coeff.size(), 1);
    term_remaining.resize(c.coeff.size());
    for (std::size_t t = 0; t < c.coeff.size(); ++t) {
      term_remaining[t] = static_cast<std::uint32_t>(c.term_labels[t].size());
      if (term_remaining[t] == 0) {
        fixed_a += c.coeff[t].first;
        fixed_b += c.coeff[t].second;
      } else {
        rest_a += c.coeff_abs[t].first;
        rest_b += c.coeff_abs[t].second;
      }
    }
  }

  void assign(std::uint32_t id, std::int8_t sign) {
    signs[id] = sign;
    for (auto t : c.label_terms[id]) {
      if (sign < 0) term_sign[t] = -term_sign[t];
      if (--term_remaining[t] == 0) {
        fixed_a += term_sign[t] * c.coeff[t].first;
        fixed_b += term_sign[t] * c.coeff[t].second;
        rest_a -= c.coeff_abs[t].first;
        rest_b -= c.coeff_abs[t].second;
      }
    }
  }

  void unassign(std::uint32_t id) {
    std::int8_t sign = signs[id];
    for (auto t : c.label_terms[id]) {
      if (term_remaining[t]++ == 0) {
        fixed_a -= term_sign[t] * c.coeff[t].first;
        fixed_b -= term_sign[t] * c.coeff[t].second;
        rest_a += c.coeff_abs[t].first;
        rest_b += c.coeff_abs[t].second;
      }
      if (sign < 0) term_sign[t] = -term_sign[t];
    }
    signs[id] = 1;
  }

  void dfs(std::size_t depth) {
    if (depth == site_groups.size()) {
      ++leaves;
      best.consider({fixed_a, fixed_b}, signs);
      return;
    }
    if (best.valid) {
      // optimistic bound: |fixed| plus every unresolved coefficient at +|c|
      IntPair reach = abs_pair({fixed_a, fixed_b});
      reach.first += rest_a;
      reach.second += rest_b;
      int cmp = abs_compare(reach, best.magnitude);
      if (cmp < 0) return;
      if (cmp == 0) {
        // at best a tie; only a lexicographically smaller witness is left to
        // find, and the all-minus fill is the smallest completion possible
        std::vector<std::int8_t> completion = signs;
        for (std::size_t d = depth; d < site_groups.size(); ++d) {
          for (auto id : site_groups[d]) completion[id] = -1;
        }
        if (!std::lexicographical_compare(completion.begin(), completion.end(),
                                          best.assignment.begin(), best.assignment.end())) {
          return;
        }
      }
    }
    const auto& ids = site_groups[depth];
    const std::uint32_t m = static_cast<std::uint32_t>(ids.size());
    for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << m); ++combo) {
      // high bit = first label so that combos ascend in assignment order
      for (std::uint32_t j = 0; j < m; ++j) {
        assign(ids[j], ((combo >> (m - 1 - j)) & 1) ? 1 : -1);
      }
      dfs(depth + 1);
      for (std::uint32_t j = m; j-- > 0;) unassign(ids[j]);
    }
  }
};

}  // namespace lhv_detail

/// Exact LHV bound of a correlation polynomial: the maximum of |value| over
/// all deterministic strategies. `auto_select` runs the Gray-code exhaustive
/// walk up to 24 settings and branch-and-bound beyond. The result does not
/// depend on the thread count.
inline LhvReport lhv_bound(const CorrelationPolynomial& c,
                           LhvMethod method = LhvMethod::auto_select, unsigned threads = 0) {
  lhv_detail::Compiled compiled = lhv_detail::compile(c);
  const std::size_t n_labels = compiled.labels.size();
  if (n_labels > 40) {
    throw ValidationError("lhv_bound: " + std::to_string(n_labels) +
                          " settings exceed the hard cap of 40");
  }
  if (method == LhvMethod::auto_select) {
    method = n_labels <= 24 ? LhvMethod::exhaustive : LhvMethod::branch_and_bound;
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  LhvReport report;
  report.method = method;
  lhv_detail::Best best;
  if (method == LhvMethod::exhaustive) {
    best = lhv_detail::run_exhaustive(compiled, threads, report.strategies_explored);
  } else {
    lhv_detail::BnbSearch search(compiled);
    search.dfs(0);
    best = search.best;
    report.strategies_explored = search.leaves;
  }

  report.bound = compiled.value_of(best.magnitude).abs();
  for (std::size_t i = 0; i < n_labels; ++i) {
    report.argmax.signs.emplace(compiled.labels[i], best.assignment.empty() ? 1 : best.assignment[i]);
  }
  return report;
}

}  // namespace graphbell
