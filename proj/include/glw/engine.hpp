#pragma once

// Universal gl weight system on permutations, computed by the adjacent-swap
// recurrence with memoization on rotation classes.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "glw/diagrams.hpp"
#include "glw/polyring.hpp"

namespace glw {

/// Result of one application of the swap identity at positions (k, k+1):
///   w(input) = w(swapped) + sum_i scalar_i * w(perm_i).
struct SwapOutcome {
  Permutation swapped;
  std::vector<std::pair<Polynomial, Permutation>> merge_terms;
};

/// Requires 1 <= k < m and no fixed point at k or k+1; throws DomainError otherwise.
SwapOutcome swap_step(const Permutation& p, unsigned k);

/// How the conjugating word towards the normal form is chosen. Every
/// strategy yields the same polynomial; they differ in the path taken.
enum class Strategy {
  /// Cycles ordered by least element, bubble passes left to right.
  BubbleLeftToRight,
  /// Cycles ordered by least element, bubble passes right to left.
  BubbleRightToLeft,
  /// Cycles in reverse order of least element, bubble passes left to right.
  ReversedCycleOrder,
};

/// The permutation whose cycles occupy consecutive intervals as standard
/// ascending cycles, with the relabeling word that conjugates p onto it.
struct NormalFormPlan {
  Permutation target;
  std::vector<unsigned> word; // adjacent positions k, applied in order
};
NormalFormPlan plan_normal_form(const Permutation& p, Strategy strategy = Strategy::BubbleLeftToRight);

/// Map from canonical key to w value. Safe for concurrent use; inserting a
/// key twice with different values throws std::logic_error.
class MemoCache {
public:
  std::optional<Polynomial> find(const std::string& key) const;
  void insert(const std::string& key, const Polynomial& value);
  std::size_t size() const;
  void clear();

  /// JSON-lines: a versioned header line, then one
  /// {"key": base64(canonical key), "value": polynomial} record per line.
  void save(const std::filesystem::path& path) const;
  /// Validates header, keys (canonical, fixed-point-free) and values
  /// (integer coefficients in N and C only, correct leading term).
  /// Throws ParseError naming the offending line.
  static std::shared_ptr<MemoCache> load(const std::filesystem::path& path);

  static constexpr int format_version = 1;

private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Polynomial> map_;
};

struct EngineOptions {
  Strategy strategy = Strategy::BubbleLeftToRight;
  /// Key the memo by rotation class. When false, keys are the exact image
  /// sequence, so no cyclic invariance is assumed anywhere.
  bool rotation_memo = true;
  /// Also cache the intermediate conjugates met along a swap word.
  bool cache_intermediates = true;
};

struct EngineStats {
  std::uint64_t block_evaluations = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t swaps = 0;
  std::size_t max_depth = 0;
};

class Engine {
public:
  explicit Engine(EngineOptions options = {}, std::shared_ptr<MemoCache> cache = nullptr);

  /// w_GL(p) in Z[N, C1, C2, ...].
  Polynomial wgl(const Permutation& p);
  Polynomial wgl(const ChordDiagram& d) { return wgl(chord_to_perm(d)); }

  MemoCache& cache() { return *cache_; }
  std::shared_ptr<MemoCache> shared_cache() const { return cache_; }
  const EngineOptions& options() const { return options_; }
  EngineStats stats() const;

private:
  Polynomial evaluate(const Permutation& p, std::size_t depth);
  Polynomial evaluate_block(const Permutation& block, std::size_t depth);
  std::string key_of(const Permutation& block) const;

  EngineOptions options_;
  std::shared_ptr<MemoCache> cache_;
  std::atomic<std::uint64_t> block_evaluations_{0};
  std::atomic<std::uint64_t> cache_hits_{0};
  std::atomic<std::uint64_t> swaps_{0};
  std::atomic<std::size_t> max_depth_{0};
};

/// Convenience form using a caller-provided cache and default options.
Polynomial wgl(const Permutation& p, MemoCache& cache);
/// The sl_N value: w_GL with C1 set to 0.
Polynomial wsl(const Permutation& p);
Polynomial set_c1_zero(const Polynomial& p);

/// Product of C_l over the cycle lengths l of p (C1 for fixed points).
Polynomial cycle_type_monomial(const Permutation& p);

} // namespace glw
