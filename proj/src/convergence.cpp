#include "mzv/convergence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mzv {

namespace {

std::string describe(const char* what, int len, double sum, double need) {
  std::ostringstream os;
  os << what << ": sum " << sum << " over " << len
     << " position(s) must exceed " << need;
  return os.str();
}

std::vector<double> widen(const Index& k) {
  return std::vector<double>(k.begin(), k.end());
}

/// Every suffix of length L has sum > L.
ConvergenceResult suffix_condition(const std::vector<double>& k,
                                   const char* what) {
  double sum = 0.0;
  for (int L = 1; L <= static_cast<int>(k.size()); ++L) {
    sum += k[k.size() - static_cast<size_t>(L)];
    if (!(sum > L)) return {false, describe(what, L, sum, L)};
  }
  return {true, {}};
}

/// For every nonempty subset S of `heads`: sum(S) + offset > |S|.
/// The binding subsets are the j smallest heads for each j.
ConvergenceResult subset_condition(const Index& heads, double offset,
                                   const char* what) {
  Index sorted = heads;
  std::sort(sorted.begin(), sorted.end());
  double sum = offset;
  for (int j = 1; j <= static_cast<int>(sorted.size()); ++j) {
    sum += sorted[static_cast<size_t>(j) - 1];
    if (!(sum > j)) return {false, describe(what, j, sum, j)};
  }
  return {true, {}};
}

}  // namespace

ConvergenceResult check_ez(const Index& k) {
  if (k.empty()) return {false, "empty index"};
  return suffix_condition(widen(k), "suffix sum");
}

ConvergenceResult check_mt(const Index& heads, double tail) {
  if (heads.empty()) {
    if (tail > 1) return {true, {}};
    return {false, describe("tail exponent", 1, tail, 1)};
  }
  return subset_condition(heads, tail, "head-subset sum plus tail");
}

ConvergenceResult check_miyagawa(const Index& heads,
                                 const std::vector<double>& final_block) {
  if (final_block.empty()) return {false, "empty final block"};
  const int q = static_cast<int>(final_block.size());
  // Every proper suffix of the final block is the innermost part of the
  // chain and must converge from any fixed starting point, so the chain
  // guard's suffix conditions are necessary here, not merely advisory.
  if (auto g = check_chain_guard(final_block); !g) return g;
  const double total =
      std::accumulate(final_block.begin(), final_block.end(), 0.0);
  if (heads.empty()) {
    if (total > q) return {true, {}};
    return {false, describe("final-block total", q, total, q)};
  }
  return subset_condition(heads, total - q + 1,
                          "head-subset sum plus final-block excess");
}

ConvergenceResult check_miyagawa(const Index& heads, const Index& final_block) {
  return check_miyagawa(heads, widen(final_block));
}

ConvergenceResult check_chain_guard(const std::vector<double>& final_block) {
  if (final_block.empty()) return {false, "empty final block"};
  double sum = 0.0;
  for (int L = 1; L <= static_cast<int>(final_block.size()) - 1; ++L) {
    sum += final_block[final_block.size() - static_cast<size_t>(L)];
    if (!(sum > L))
      return {false, describe("final-block proper suffix sum", L, sum, L)};
  }
  return {true, {}};
}

ConvergenceResult check_chain_guard(const Index& final_block) {
  return check_chain_guard(widen(final_block));
}

ConvergenceResult check_gmt(const std::vector<Index>& blocks,
                            const std::vector<double>& final_block) {
  if (final_block.empty()) return {false, "empty final block"};
  const int q = static_cast<int>(final_block.size());

  // Condition (i): all leading-block entries >= 1; final suffix sums of
  // lengths 1..q-1 exceed their length; total final sum > q-1.
  auto cond_i = [&]() -> ConvergenceResult {
    for (const auto& b : blocks)
      for (int e : b)
        if (e < 1) return {false, "leading-block entry below 1"};
    auto g = check_chain_guard(final_block);
    if (!g) return g;
    const double total =
        std::accumulate(final_block.begin(), final_block.end(), 0.0);
    if (!(total > q - 1))
      return {false, describe("final-block total", q, total, q - 1)};
    return {true, {}};
  }();
  if (cond_i) return cond_i;

  // Condition (ii): first block is exactly (0); all later leading-block
  // entries >= 1; final suffix sums of lengths 1..q exceed their length.
  auto cond_ii = [&]() -> ConvergenceResult {
    if (blocks.empty() || blocks.front() != Index{0})
      return {false, "first block is not (0)"};
    for (size_t i = 1; i < blocks.size(); ++i)
      for (int e : blocks[i])
        if (e < 1) return {false, "leading-block entry below 1"};
    return suffix_condition(final_block, "final-block suffix sum");
  }();
  if (cond_ii) return cond_ii;

  return {false, "neither sufficient condition holds: (i) " +
                     cond_i.failed_condition + "; (ii) " +
                     cond_ii.failed_condition};
}

ConvergenceResult check_gmt(const GmtIndex& k) {
  return check_gmt(k.blocks, widen(k.final_block));
}

}  // namespace mzv
