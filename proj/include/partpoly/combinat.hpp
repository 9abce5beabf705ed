#ifndef PARTPOLY_COMBINAT_HPP
#define PARTPOLY_COMBINAT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "partpoly/stat_table.hpp"

// Brute-force oracles: every statistic recomputed from the combinatorial
// objects themselves. Deliberately naive; the series expanders are checked
// against these tables, never the other way around. Desk-scale sizes only.

namespace partpoly {

/// Non-increasing sequence of positive parts; empty means the partition of 0.
using Partition = std::vector<int>;

namespace detail {

template <class F>
void enum_partitions_rec(int n, int max_part, Partition& buf, F& visit) {
    if (n == 0) {
        visit(static_cast<const Partition&>(buf));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        buf.push_back(p);
        enum_partitions_rec(n - p, p, buf, visit);
        buf.pop_back();
    }
}

template <class F>
void enum_distinct_rec(int n, int max_part, Partition& buf, F& visit) {
    if (n == 0) {
        visit(static_cast<const Partition&>(buf));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        buf.push_back(p);
        enum_distinct_rec(n - p, p - 1, buf, visit);
        buf.pop_back();
    }
}

}  // namespace detail

/// Visit every partition of n (parts bounded by max_part) exactly once.
template <class F>
void enum_partitions(int n, F&& visit, int max_part = -1) {
    Partition buf;
    auto& v = visit;
    detail::enum_partitions_rec(n, max_part < 0 ? std::max(n, 1) : max_part, buf, v);
}

/// Visit every partition of n into distinct parts (parts <= max_part).
template <class F>
void enum_distinct_partitions(int n, F&& visit, int max_part = -1) {
    Partition buf;
    auto& v = visit;
    detail::enum_distinct_rec(n, max_part < 0 ? std::max(n, 1) : max_part, buf, v);
}

inline int rank_of(const Partition& p) {
    if (p.empty()) return 0;
    return p.front() - static_cast<int>(p.size());
}

inline int crank_of(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("crank_of: empty partition (classical gap)");
    int ones = static_cast<int>(std::count(p.begin(), p.end(), 1));
    if (ones == 0) return p.front();
    int mu = static_cast<int>(std::count_if(p.begin(), p.end(), [&](int x) { return x > ones; }));
    return mu - ones;
}

inline Integer p_of(int n) {
    Integer c = 0;
    enum_partitions(n, [&](const Partition&) { ++c; });
    return c;
}

/// Total number of smallest parts over all partitions of n.
inline Integer spt_of(int n) {
    Integer s = 0;
    enum_partitions(n, [&](const Partition& p) {
        if (!p.empty()) s += std::count(p.begin(), p.end(), p.back());
    });
    return s;
}

inline StatTable oracle_rank(int n) {
    StatTable t{Statistic::Rank, 0, n, {}};
    enum_partitions(n, [&](const Partition& p) { t.add(rank_of(p), 1); });
    return t;
}

/// Crank distribution by enumeration. The combinatorial crank is classical
/// for n >= 2 only; n = 1 disagrees with the generating function and n = 0
/// is pinned to {0 -> 1} by convention. Callers compare with series rows
/// starting at n = 2.
inline StatTable oracle_crank(int n) {
    StatTable t{Statistic::Crank, 0, n, {}};
    if (n == 0) {
        t.add(0, 1);
        return t;
    }
    enum_partitions(n, [&](const Partition& p) { t.add(crank_of(p), 1); });
    return t;
}

namespace detail {

// parts-count tallies: result[k] = #partitions of n with exactly k parts,
// all parts in [min_part, max_part]. Computed by honest enumeration.
inline std::vector<long> tally_by_parts(int n, int min_part, int max_part) {
    std::vector<long> tally(static_cast<std::size_t>(n / std::max(min_part, 1)) + 1, 0);
    Partition buf;
    auto visit = [&](const Partition& p) { ++tally[p.size()]; };
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            visit(buf);
            return;
        }
        for (int q = std::min(rem, maxp); q >= min_part; --q) {
            buf.push_back(q);
            rec(rem - q, q);
            buf.pop_back();
        }
    };
    rec(n, std::min(n == 0 ? 1 : n, max_part));
    return tally;
}

inline std::vector<long> tally_distinct_by_parts(int n, int max_part) {
    std::vector<long> tally(1, 0);
    enum_distinct_partitions(
        n,
        [&](const Partition& p) {
            if (tally.size() <= p.size()) tally.resize(p.size() + 1, 0);
            ++tally[p.size()];
        },
        max_part);
    return tally;
}

}  // namespace detail

/// Signed spt-crank distribution N_S(m, n): vector partitions (pi1, pi2, pi3)
/// with pi1 nonempty into distinct parts and s(pi1) <= min(s(pi2), s(pi3)),
/// weighted by (-1)^{#pi1 - 1}, tallied by crank #pi2 - #pi3.
inline StatTable oracle_spt_crank(int n) {
    if (n < 1) throw std::invalid_argument("oracle_spt_crank: n >= 1 required");
    StatTable t{Statistic::SptCrank, 0, n, {}};
    for (int s = 1; s <= n; ++s) {
        for (int size1 = s; size1 <= n; ++size1) {
            // pi1 = {s} plus distinct parts all exceeding s, total size1;
            // signed weight (-1)^{#pi1 - 1} summed over the choices
            long weight = 0;
            enum_distinct_partitions(size1 - s, [&](const Partition& extra) {
                if (!extra.empty() && extra.back() <= s) return;
                weight += (extra.size() % 2 == 0) ? 1 : -1;
            });
            if (weight == 0) continue;
            int rem = n - size1;
            for (int a = 0; a <= rem; ++a) {
                auto t2 = detail::tally_by_parts(a, s, a == 0 ? 1 : a);
                auto t3 = detail::tally_by_parts(rem - a, s, rem - a == 0 ? 1 : rem - a);
                for (std::size_t k2 = 0; k2 < t2.size(); ++k2) {
                    if (t2[k2] == 0) continue;
                    for (std::size_t k3 = 0; k3 < t3.size(); ++k3) {
                        if (t3[k3] == 0) continue;
                        t.add(static_cast<long>(k2) - static_cast<long>(k3),
                              Integer(weight) * t2[k2] * t3[k3]);
                    }
                }
            }
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// Overpartitions
// ---------------------------------------------------------------------------

/// Summary of one overpartition: enough to evaluate the pair rank.
struct OverpartitionStats {
    int largest = 0;       // 0 for the empty overpartition
    int num_parts = 0;
    int num_overlined = 0;
    bool largest_overlined = false;
};

/// All overpartitions of n (each partition with any subset of its distinct
/// part values overlined at the first occurrence), as summary records.
inline std::vector<OverpartitionStats> enum_overpartitions(int n) {
    std::vector<OverpartitionStats> out;
    enum_partitions(n, [&](const Partition& p) {
        std::vector<int> distinct;
        for (int x : p)
            if (distinct.empty() || distinct.back() != x) distinct.push_back(x);
        int k = static_cast<int>(distinct.size());
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            OverpartitionStats s;
            s.largest = p.empty() ? 0 : p.front();
            s.num_parts = static_cast<int>(p.size());
            s.num_overlined = static_cast<int>(__builtin_popcount(mask));
            s.largest_overlined = k > 0 && (mask & 1u);  // distinct[0] is the largest value
            out.push_back(s);
        }
    });
    return out;
}

/// Number of overpartitions of n.
inline Integer op_of(int n) { return Integer(enum_overpartitions(n).size()); }

/// Number of overpartition pairs of n.
inline Integer pp_of(int n) {
    Integer total = 0;
    for (int a = 0; a <= n; ++a)
        total += Integer(enum_overpartitions(a).size()) * Integer(enum_overpartitions(n - a).size());
    return total;
}

/// Rank distribution of overpartition pairs (lambda, mu):
/// largest(pair) - #parts(lambda) - #overlined(mu) - chi, where chi = 1 iff
/// the pair's largest part lies only in mu and mu's largest part is not
/// overlined (ties go to lambda; an overlined first occurrence wins in mu).
inline StatTable oracle_orank(int n) {
    StatTable t{Statistic::ORank, 0, n, {}};
    std::vector<std::vector<OverpartitionStats>> ops(static_cast<std::size_t>(n) + 1);
    for (int a = 0; a <= n; ++a) ops[static_cast<std::size_t>(a)] = enum_overpartitions(a);
    for (int a = 0; a <= n; ++a) {
        for (const auto& lam : ops[static_cast<std::size_t>(a)]) {
            for (const auto& mu : ops[static_cast<std::size_t>(n - a)]) {
                int largest = std::max(lam.largest, mu.largest);
                int chi = (mu.largest > lam.largest && !mu.largest_overlined) ? 1 : 0;
                t.add(largest - lam.num_parts - mu.num_overlined - chi, 1);
            }
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// Unimodal sequences
// ---------------------------------------------------------------------------

/// Rank distribution (#parts right of the peak minus #parts before it) of
/// unimodal sequences of size n. Weak sequences carry a designated peak: any
/// occurrence of the maximum may be marked, so a sequence with a repeated
/// maximum is counted once per choice. Strict sequences have a unique peak.
inline StatTable oracle_unimodal(int n, bool strict) {
    StatTable t{strict ? Statistic::StronglyUnimodalRank : Statistic::UnimodalRank, 0, n, {}};
    if (n == 0) {
        t.add(0, 1);
        return t;
    }
    // Designated-peak decomposition: peak value p, left multiset and right
    // multiset of parts <= p (strict: distinct parts <= p-1). Rank is
    // #right - #left.
    for (int p = 1; p <= n; ++p) {
        for (int a = 0; a + p <= n; ++a) {
            int b = n - p - a;
            std::vector<long> left, right;
            if (strict) {
                left = detail::tally_distinct_by_parts(a, p - 1);
                right = detail::tally_distinct_by_parts(b, p - 1);
            } else {
                left = detail::tally_by_parts(a, 1, p);
                right = detail::tally_by_parts(b, 1, p);
            }
            for (std::size_t kl = 0; kl < left.size(); ++kl) {
                if (left[kl] == 0) continue;
                for (std::size_t kr = 0; kr < right.size(); ++kr) {
                    if (right[kr] == 0) continue;
                    t.add(static_cast<long>(kr) - static_cast<long>(kl),
                          Integer(left[kl]) * right[kr]);
                }
            }
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// Hooks, t-cores and the abacus bijection
// ---------------------------------------------------------------------------

inline Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    Partition c(static_cast<std::size_t>(p.front()), 0);
    for (int x : p)
        for (int j = 0; j < x; ++j) ++c[static_cast<std::size_t>(j)];
    return c;
}

/// All hook lengths of the Ferrers-Young diagram, sorted descending.
inline std::vector<int> hook_lengths(const Partition& p) {
    std::vector<int> hooks;
    Partition conj = conjugate(p);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 1; j <= p[i]; ++j)  // arm + leg + 1
            hooks.push_back((p[i] - j) + (conj[static_cast<std::size_t>(j - 1)] - static_cast<int>(i) - 1) + 1);
    std::sort(hooks.rbegin(), hooks.rend());
    return hooks;
}

inline bool is_tcore(const Partition& p, int t) {
    for (int h : hook_lengths(p))
        if (h % t == 0) return false;
    return true;
}

/// Distribution of the number of t-divisible hooks over partitions of n.
inline StatTable oracle_thook(int t, int n) {
    if (t < 2) throw std::invalid_argument("oracle_thook: t >= 2 required");
    StatTable tab{Statistic::THook, t, n, {}};
    enum_partitions(n, [&](const Partition& p) {
        long m = 0;
        for (int h : hook_lengths(p))
            if (h % t == 0) ++m;
        tab.add(m, 1);
    });
    return tab;
}

inline Integer oracle_tcore_count(int t, int n) {
    Integer c = 0;
    enum_partitions(n, [&](const Partition& p) {
        if (is_tcore(p, t)) ++c;
    });
    return c;
}

/// Abacus (balanced beta-number) form of the Garvan-Kim-Stanton bijection:
/// a t-core maps to the zero-sum vector n_r = (#beta numbers on runner r) -
/// s/t, computed from beta set {lambda_i + s - i} with s a multiple of t.
/// Satisfies |lambda| = t*||v||^2/2 + (0,1,...,t-1).v; see the tests.
inline std::vector<long> phi2(const Partition& p, int t) {
    if (t < 2) throw std::invalid_argument("phi2: t >= 2 required");
    int s = static_cast<int>(p.size());
    int rows = ((s + t - 1) / t) * t;
    std::vector<std::vector<long>> runner_levels(static_cast<std::size_t>(t));
    for (int i = 1; i <= rows; ++i) {
        long beta = (i <= s ? p[static_cast<std::size_t>(i - 1)] : 0) + rows - i;
        runner_levels[static_cast<std::size_t>(beta % t)].push_back(beta / t);
    }
    std::vector<long> v(static_cast<std::size_t>(t));
    for (int r = 0; r < t; ++r) {
        auto& levels = runner_levels[static_cast<std::size_t>(r)];
        std::sort(levels.begin(), levels.end());
        // t-core <=> every runner's beads are flush: levels 0,1,...,a_r-1
        for (std::size_t j = 0; j < levels.size(); ++j)
            if (levels[j] != static_cast<long>(j)) throw NotATCoreError("phi2: partition is not a t-core");
        v[static_cast<std::size_t>(r)] = static_cast<long>(levels.size()) - rows / t;
    }
    return v;
}

inline Partition phi2_inverse(const std::vector<long>& v, int t) {
    if (static_cast<int>(v.size()) != t) throw std::invalid_argument("phi2_inverse: vector size != t");
    long sum = std::accumulate(v.begin(), v.end(), 0L);
    if (sum != 0) throw std::invalid_argument("phi2_inverse: coordinates must sum to zero");
    long K = 0;
    for (long x : v) K = std::max(K, -x);
    long rows = static_cast<long>(t) * K;
    std::vector<long> betas;
    for (int r = 0; r < t; ++r) {
        long a = v[static_cast<std::size_t>(r)] + K;
        for (long j = 0; j < a; ++j) betas.push_back(r + j * t);
    }
    std::sort(betas.rbegin(), betas.rend());
    Partition p;
    for (long i = 1; i <= static_cast<long>(betas.size()); ++i) {
        long part = betas[static_cast<std::size_t>(i - 1)] - (rows - i);
        if (part > 0) p.push_back(static_cast<int>(part));
    }
    return p;
}

/// The t-core crank combination coefficients (defined for t = 5, 7, 11 only).
inline const std::vector<long>& tcore_crank_coeffs(int t) {
    static const std::vector<long> c5{4, 1, 0, 1, 4};
    static const std::vector<long> c7{4, 2, 1, 0, 1, 2, 4};
    static const std::vector<long> c11{4, 9, 5, 3, 1, 0, 1, 3, 5, 9, 4};
    switch (t) {
        case 5: return c5;
        case 7: return c7;
        case 11: return c11;
        default: throw UnsupportedModulusError("t-core crank defined only for t in {5,7,11}");
    }
}

inline long tcore_crank_of_vector(const std::vector<long>& v, int t) {
    const auto& coef = tcore_crank_coeffs(t);
    long acc = 0;
    for (int i = 0; i < t; ++i) acc += coef[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    long m = acc % t;
    return m < 0 ? m + t : m;
}

/// Residue-class distribution of the t-core crank over t-cores of n, via the
/// partition-side route (enumerate, filter, apply phi2). Cross-checks the
/// lattice enumeration in the expander module.
inline StatTable oracle_tcore_crank(int t, int n) {
    const auto& coef = tcore_crank_coeffs(t);  // validates t
    (void)coef;
    StatTable tab{Statistic::TCoreCrank, t, n, {}};
    enum_partitions(n, [&](const Partition& p) {
        if (!is_tcore(p, t)) return;
        tab.add(tcore_crank_of_vector(phi2(p, t), t), 1);
    });
    return tab;
}

}  // namespace partpoly

#endif
