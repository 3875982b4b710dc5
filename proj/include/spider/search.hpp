#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spider/convex_drawing.hpp"
#include "spider/spider_model.hpp"

namespace spider {

struct SearchResult {
    std::int64_t best_count = 0;
    CyclicOrder witness;
    std::uint64_t orders_examined = 0;
    bool exhaustive = false;
    std::optional<bool> matches_conjecture;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

struct ExhaustiveOptions {
    std::uint64_t budget = kDefaultBudget;
    bool reflection = true;     // quotient by reversal of the circular order
    bool leg_symmetry = false;  // quotient by permutations of equal-length legs
    unsigned threads = 0;       // 0: hardware concurrency
};

/// Number of orders the enumeration would visit before leg-symmetry pruning:
/// (n-1)!/2 with the reflection quotient, (n-1)! without. Saturates.
std::uint64_t exhaustive_order_count(const SpiderSpec& s, bool reflection = true);

/// Maximum convex crossing count over all cyclic orders. The witness is the
/// lexicographically smallest maximizing order (center first). Throws
/// BudgetExceeded when exhaustive_order_count exceeds options.budget.
SearchResult exhaustive_max(const SpiderSpec& s, const ExhaustiveOptions& options = {});

struct HillClimbOptions {
    std::uint64_t seed = 1;
    int restarts = 8;
    int steps = 2000;
    unsigned threads = 0;
};

/// Random-restart local search with adjacent swaps and single-vertex
/// reinsertion, strict improvements only. When every leg has length >= 2,
/// restart 0 starts from algorithm_order, so the result is at least the
/// constructive lower bound.
SearchResult hill_climb(const SpiderSpec& s, const HillClimbOptions& options = {});

enum class VerifyStatus { Equal, Greater, Less, Rejected, BudgetExceeded };

const char* to_string(VerifyStatus status);

struct VerifyRow {
    SpiderSpec spider;
    std::optional<std::int64_t> conjectured;
    std::optional<std::int64_t> convex_max;
    std::uint64_t orders_examined = 0;
    bool bounds_coincide = false;  // value proven by matching lower/upper bounds
    VerifyStatus status = VerifyStatus::Rejected;
    std::string message;
};

/// One exhaustive run per spider, compared against the conjectured value.
std::vector<VerifyRow> verify_conjecture(const std::vector<SpiderSpec>& spiders,
                                         const ExhaustiveOptions& options = {});

/// Expands "k=3..4,len=2..3" (either side may be a single value) to every
/// non-increasing legs list with k legs and lengths in range.
std::vector<SpiderSpec> expand_legs_range(const std::string& expression);

}  // namespace spider
