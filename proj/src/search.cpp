#include "spider/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <random>
#include <regex>
#include <thread>

#include "spider/bounds.hpp"
#include "spider/error.hpp"

namespace spider {
namespace {

unsigned resolve_threads(unsigned requested, std::size_t tasks) {
    unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(tasks, 1)));
}

// Runs body(task) for task in [0, tasks) over a fixed worker pool.
template <typename Body>
void parallel_tasks(std::size_t tasks, unsigned threads, Body body) {
    const unsigned workers = resolve_threads(threads, tasks);
    if (workers <= 1) {
        for (std::size_t t = 0; t < tasks; ++t) body(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t t = next++; t < tasks; t = next++) body(t);
        });
    }
}

// Flat view of a spider for the inner loops.
struct Layout {
    int n = 0;
    std::vector<int> leg_of;
    std::vector<int> dist_of;
    std::vector<int> group_of_leg;   // 1-based legs; legs of equal length share a group
    std::vector<int> group_first;    // first leg of each group
    std::vector<int> leg_first_vertex;
    std::vector<IndexedPair> pairs;

    explicit Layout(const SpiderSpec& s) : n(s.vertex_count()), pairs(non_incident_pairs(s)) {
        leg_of.resize(static_cast<std::size_t>(n));
        dist_of.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            const auto l = s.label_at(v);
            leg_of[static_cast<std::size_t>(v)] = l.leg;
            dist_of[static_cast<std::size_t>(v)] = l.dist;
        }
        group_of_leg.assign(static_cast<std::size_t>(s.leg_count() + 1), -1);
        leg_first_vertex.assign(static_cast<std::size_t>(s.leg_count() + 1), 0);
        for (int i = 1; i <= s.leg_count(); ++i) {
            leg_first_vertex[static_cast<std::size_t>(i)] = s.index_of({i, 1});
            if (i > 1 && s.leg_length(i) == s.leg_length(i - 1)) {
                group_of_leg[static_cast<std::size_t>(i)] = group_of_leg[static_cast<std::size_t>(i - 1)];
            } else {
                group_of_leg[static_cast<std::size_t>(i)] = static_cast<int>(group_first.size());
                group_first.push_back(i);
            }
        }
    }

    std::int64_t count(const std::vector<int>& seq, std::vector<int>& pos) const {
        for (int t = 0; t < n; ++t) pos[static_cast<std::size_t>(seq[static_cast<std::size_t>(t)])] = t;
        std::int64_t c = 0;
        for (const auto& p : pairs) {
            c += chords_alternate(pos[static_cast<std::size_t>(p.a1)], pos[static_cast<std::size_t>(p.a2)],
                                  pos[static_cast<std::size_t>(p.b1)], pos[static_cast<std::size_t>(p.b2)]);
        }
        return c;
    }

    // Relabels legs inside each equal-length group by order of first
    // appearance; the result is the lex-smallest sequence in the orbit.
    void canonical_relabel(const std::vector<int>& seq, std::vector<int>& out, std::vector<int>& map,
                           std::vector<int>& next) const {
        std::fill(map.begin(), map.end(), 0);
        for (std::size_t g = 0; g < group_first.size(); ++g) next[g] = group_first[g];
        out.resize(seq.size());
        for (std::size_t t = 0; t < seq.size(); ++t) {
            const int v = seq[t];
            const int leg = leg_of[static_cast<std::size_t>(v)];
            if (leg == 0) {
                out[t] = 0;
                continue;
            }
            int& image = map[static_cast<std::size_t>(leg)];
            if (image == 0) image = next[static_cast<std::size_t>(group_of_leg[static_cast<std::size_t>(leg)])]++;
            out[t] = leg_first_vertex[static_cast<std::size_t>(image)] + dist_of[static_cast<std::size_t>(v)] - 1;
        }
    }

    // Legs in each group first appear in increasing order.
    bool legs_canonical(const std::vector<int>& seq, std::vector<int>& next) const {
        for (std::size_t g = 0; g < group_first.size(); ++g) next[g] = group_first[g];
        std::vector<char> seen(group_of_leg.size(), 0);
        for (int v : seq) {
            const int leg = leg_of[static_cast<std::size_t>(v)];
            if (leg == 0 || seen[static_cast<std::size_t>(leg)]) continue;
            seen[static_cast<std::size_t>(leg)] = 1;
            int& expected = next[static_cast<std::size_t>(group_of_leg[static_cast<std::size_t>(leg)])];
            if (leg != expected) return false;
            ++expected;
        }
        return true;
    }
};

std::uint64_t saturating_factorial(int m) {
    std::uint64_t f = 1;
    for (int i = 2; i <= m; ++i) {
        if (f > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(i)) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

struct Best {
    std::int64_t count = -1;
    std::vector<int> witness;
    std::uint64_t examined = 0;

    void offer(std::int64_t c, const std::vector<int>& seq) {
        if (c > count || (c == count && seq < witness)) {
            count = c;
            witness = seq;
        }
    }
    void merge(const Best& other) {
        examined += other.examined;
        if (other.count >= 0) offer(other.count, other.witness);
    }
};

std::optional<bool> conjecture_match(const SpiderSpec& s, std::int64_t best) {
    if (s.min_leg() < 2) return std::nullopt;
    return best == conjectured_mrcr(s);
}

}  // namespace

std::uint64_t exhaustive_order_count(const SpiderSpec& s, bool reflection) {
    const std::uint64_t f = saturating_factorial(s.vertex_count() - 1);
    if (f == std::numeric_limits<std::uint64_t>::max()) return f;
    return reflection ? f / 2 : f;
}

SearchResult exhaustive_max(const SpiderSpec& s, const ExhaustiveOptions& options) {
    const std::uint64_t total = exhaustive_order_count(s, options.reflection);
    if (total > options.budget) {
        throw Error(ErrorCode::BudgetExceeded, std::to_string(total) + " orders exceed budget " +
                                                   std::to_string(options.budget));
    }
    const Layout layout(s);
    const int n = layout.n;

    // One task per choice of the vertex following the center.
    std::vector<Best> partial(static_cast<std::size_t>(n - 1));
    parallel_tasks(partial.size(), options.threads, [&](std::size_t task) {
        const int first = static_cast<int>(task) + 1;
        Best local;
        std::vector<int> seq{0, first};
        for (int v = 1; v < n; ++v)
            if (v != first) seq.push_back(v);
        std::vector<int> pos(static_cast<std::size_t>(n));
        std::vector<int> map(layout.group_of_leg.size()), next(layout.group_first.size());
        std::vector<int> reflected(static_cast<std::size_t>(n)), canon;
        do {
            if (options.leg_symmetry && !layout.legs_canonical(seq, next)) continue;
            if (options.reflection) {
                reflected[0] = 0;
                std::reverse_copy(seq.begin() + 1, seq.end(), reflected.begin() + 1);
                if (options.leg_symmetry) {
                    layout.canonical_relabel(reflected, canon, map, next);
                    if (canon < seq) continue;
                } else if (reflected < seq) {
                    continue;
                }
            }
            ++local.examined;
            const std::int64_t c = layout.count(seq, pos);
            if (c > local.count) {
                local.count = c;
                local.witness = seq;  // enumeration is lexicographic, first hit is smallest
            }
        } while (std::next_permutation(seq.begin() + 2, seq.end()));
        partial[task] = std::move(local);
    });

    Best best;
    for (const auto& p : partial) best.merge(p);
    return SearchResult{best.count, CyclicOrder::from_indices(s, best.witness), best.examined, true,
                        conjecture_match(s, best.count)};
}

SearchResult hill_climb(const SpiderSpec& s, const HillClimbOptions& options) {
    if (options.restarts < 1 || options.steps < 0) {
        throw Error(ErrorCode::Internal, "hill_climb needs restarts >= 1 and steps >= 0");
    }
    const Layout layout(s);
    const int n = layout.n;
    const bool seeded_start = s.min_leg() >= 2;
    std::vector<int> algorithm_start;
    if (seeded_start) algorithm_start = algorithm_order(s).indices();

    std::vector<Best> partial(static_cast<std::size_t>(options.restarts));
    parallel_tasks(partial.size(), options.threads, [&](std::size_t restart) {
        std::seed_seq seq_seed{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                               static_cast<std::uint32_t>(restart)};
        std::mt19937_64 rng(seq_seed);
        std::vector<int> cur;
        if (restart == 0 && seeded_start) {
            cur = algorithm_start;
        } else {
            cur.resize(static_cast<std::size_t>(n));
            std::iota(cur.begin(), cur.end(), 0);
            std::shuffle(cur.begin() + 1, cur.end(), rng);
        }
        std::vector<int> pos(static_cast<std::size_t>(n));
        Best local;
        std::int64_t cur_count = layout.count(cur, pos);
        local.examined = 1;
        std::vector<int> cand;
        // Positions 1..n-1 are movable; the center stays at 0.
        std::uniform_int_distribution<int> slot(1, n - 1);
        std::uniform_int_distribution<int> adjacent(1, n - 2);
        for (int step = 0; step < options.steps && n > 2; ++step) {
            cand = cur;
            if (rng() & 1u) {
                const int t = adjacent(rng);
                std::swap(cand[static_cast<std::size_t>(t)], cand[static_cast<std::size_t>(t + 1)]);
            } else {
                const int from = slot(rng);
                int to = slot(rng);
                if (to == from) to = from == n - 1 ? 1 : from + 1;
                const int v = cand[static_cast<std::size_t>(from)];
                cand.erase(cand.begin() + from);
                cand.insert(cand.begin() + to, v);
            }
            const std::int64_t c = layout.count(cand, pos);
            ++local.examined;
            if (c > cur_count) {
                cur.swap(cand);
                cur_count = c;
            }
        }
        local.offer(cur_count, cur);
        partial[restart] = std::move(local);
    });

    Best best;
    for (const auto& p : partial) best.merge(p);
    return SearchResult{best.count, CyclicOrder::from_indices(s, best.witness), best.examined, false,
                        conjecture_match(s, best.count)};
}

const char* to_string(VerifyStatus status) {
    switch (status) {
        case VerifyStatus::Equal: return "equal";
        case VerifyStatus::Greater: return "GREATER";
        case VerifyStatus::Less: return "LESS";
        case VerifyStatus::Rejected: return "rejected";
        case VerifyStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "unknown";
}

std::vector<VerifyRow> verify_conjecture(const std::vector<SpiderSpec>& spiders, const ExhaustiveOptions& options) {
    std::vector<VerifyRow> rows;
    rows.reserve(spiders.size());
    for (const auto& s : spiders) {
        VerifyRow row{s, {}, {}, 0, false, VerifyStatus::Rejected, {}};
        if (s.min_leg() < 2) {
            row.status = VerifyStatus::Rejected;
            row.message = "every leg must have length >= 2";
            rows.push_back(std::move(row));
            continue;
        }
        row.conjectured = conjectured_mrcr(s);
        row.bounds_coincide = bounds_coincide(s);
        try {
            const auto r = exhaustive_max(s, options);
            row.convex_max = r.best_count;
            row.orders_examined = r.orders_examined;
            row.status = r.best_count == *row.conjectured ? VerifyStatus::Equal
                         : r.best_count > *row.conjectured ? VerifyStatus::Greater
                                                           : VerifyStatus::Less;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BudgetExceeded) throw;
            row.status = VerifyStatus::BudgetExceeded;
            row.message = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SpiderSpec> expand_legs_range(const std::string& expression) {
    static const std::regex grammar(R"(\s*k\s*=\s*(\d+)(?:\s*\.\.\s*(\d+))?\s*,\s*len\s*=\s*(\d+)(?:\s*\.\.\s*(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(expression, m, grammar)) {
        throw Error(ErrorCode::Parse, "legs range must look like \"k=3..4,len=2..3\", got '" + expression + "'");
    }
    auto num = [&](int idx, int fallback) { return m[idx].matched ? std::stoi(m[idx].str()) : fallback; };
    const int k_lo = num(1, 0), k_hi = num(2, k_lo);
    const int len_lo = num(3, 0), len_hi = num(4, len_lo);
    if (k_lo > k_hi || len_lo > len_hi || k_hi > 64 || len_hi > 1000) {
        throw Error(ErrorCode::Parse, "empty or oversized legs range '" + expression + "'");
    }
    std::vector<SpiderSpec> out;
    std::vector<int> legs;
    // Non-increasing lists in lexicographic order of (k, legs).
    auto rec = [&](auto&& self, int remaining, int max_len) -> void {
        if (remaining == 0) {
            out.push_back(make_spider(legs));
            return;
        }
        for (int len = len_lo; len <= max_len; ++len) {
            legs.push_back(len);
            self(self, remaining - 1, len);
            legs.pop_back();
        }
    };
    for (int k = k_lo; k <= k_hi; ++k) rec(rec, k, len_hi);
    return out;
}

}  // namespace spider
