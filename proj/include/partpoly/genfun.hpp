#ifndef PARTPOLY_GENFUN_HPP
#define PARTPOLY_GENFUN_HPP

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "partpoly/combinat.hpp"
#include "partpoly/qseries.hpp"
#include "partpoly/stat_table.hpp"

// Series expanders: each family's two-variable generating function is built
// from sparse factors (1 - c w^a q^b), so a full table to truncation T costs
// O(T) factor updates. Rows are exact Laurent polynomials indexed by n.

namespace partpoly {

/// rank_n(w) for n = 0..T, from sum_{k>=0} q^{k^2} / ((wq;q)_k (w^{-1}q;q)_k).
inline std::vector<LaurentPoly> expand_rank(long T) {
    QSeriesTable acc = QSeriesTable::one(T);  // k = 0 summand
    QSeriesTable f = QSeriesTable::one(T);
    for (long k = 1; k * k <= T; ++k) {
        div_sparse_factor(f, 1, +1, k);
        div_sparse_factor(f, 1, -1, k);
        add_shifted(acc, f, k * k);
    }
    return std::move(acc).take_terms();
}

/// crank_n(w) for n = 0..T, from prod_{n>=1} (1-q^n)/((1-wq^n)(1-w^{-1}q^n)).
inline std::vector<LaurentPoly> expand_crank(long T) {
    QSeriesTable s = QSeriesTable::one(T);
    for (long n = 1; n <= T; ++n) {
        mul_sparse_factor(s, 1, 0, n);
        div_sparse_factor(s, 1, +1, n);
        div_sparse_factor(s, 1, -1, n);
    }
    return std::move(s).take_terms();
}

/// spt-crank_n(w) for n = 0..T (row 0 is zero), from
/// sum_{n>=1} q^n (q^{n+1};q)_inf / ((wq^n;q)_inf (w^{-1}q^n;q)_inf).
/// Summands are maintained incrementally walking n downward: stepping from
/// n+1 to n multiplies by (1-q^{n+1}) and divides by (1-wq^n)(1-w^{-1}q^n).
inline std::vector<LaurentPoly> expand_spt_crank(long T) {
    if (T < 1) throw std::invalid_argument("expand_spt_crank: T >= 1 required");
    QSeriesTable acc(T);
    QSeriesTable p = QSeriesTable::one(T);
    for (long n = T; n >= 1; --n) {
        mul_sparse_factor(p, 1, 0, n + 1);  // no-op once n + 1 > T
        div_sparse_factor(p, 1, +1, n);
        div_sparse_factor(p, 1, -1, n);
        add_shifted(acc, p, n);
    }
    return std::move(acc).take_terms();
}

/// o-rank_n(w) for n = 0..T, from sum_{n>=0} (-1;q)_n^2 q^n / ((wq;q)_n (w^{-1}q;q)_n).
inline std::vector<LaurentPoly> expand_orank(long T) {
    QSeriesTable acc = QSeriesTable::one(T);
    QSeriesTable p = QSeriesTable::one(T);
    for (long n = 1; n <= T; ++n) {
        // (-1;q)_n gains (1 + q^{n-1}); at n = 1 this is the constant 2
        mul_sparse_factor(p, -1, 0, n - 1);
        mul_sparse_factor(p, -1, 0, n - 1);
        div_sparse_factor(p, 1, +1, n);
        div_sparse_factor(p, 1, -1, n);
        add_shifted(acc, p, n);
    }
    return std::move(acc).take_terms();
}

/// Designated-peak unimodal rank rows u(m, n), from
/// sum_{n>=0} q^n / ((wq;q)_n (w^{-1}q;q)_n).
inline std::vector<LaurentPoly> expand_unimodal(long T) {
    QSeriesTable acc = QSeriesTable::one(T);
    QSeriesTable p = QSeriesTable::one(T);
    for (long n = 1; n <= T; ++n) {
        div_sparse_factor(p, 1, +1, n);
        div_sparse_factor(p, 1, -1, n);
        add_shifted(acc, p, n);
    }
    return std::move(acc).take_terms();
}

/// Strongly unimodal rank rows u*(m, n): peak p, strictly smaller distinct
/// parts on each side, left parts weighted w^{-1} and right parts w:
/// sum_{p>=1} q^p (-wq;q)_{p-1} (-w^{-1}q;q)_{p-1}. Validated against the
/// enumeration oracle and the triangular-number degree rule.
inline std::vector<LaurentPoly> expand_strongly_unimodal(long T) {
    QSeriesTable acc(T);
    acc.term(0) = LaurentPoly::constant(1);
    QSeriesTable g = QSeriesTable::one(T);
    for (long p = 1; p <= T; ++p) {
        add_shifted(acc, g, p);
        mul_sparse_factor(g, -1, +1, p);
        mul_sparse_factor(g, -1, -1, p);
    }
    return std::move(acc).take_terms();
}

/// t-hook rows c_t(m, n) from Han's product
///   1 / prod (1-(wq^t)^n)^t * prod (1-q^{tn})^t / (1-q^n).
inline std::vector<LaurentPoly> expand_thook(int t, long T) {
    if (t < 2) throw std::invalid_argument("expand_thook: t >= 2 required");
    QSeriesTable s = QSeriesTable::one(T);
    for (long n = 1; n <= T; ++n) {
        for (int i = 0; i < t; ++i) div_sparse_factor(s, 1, n, t * n);
        for (int i = 0; i < t; ++i) mul_sparse_factor(s, 1, 0, t * n);
        div_sparse_factor(s, 1, 0, n);
    }
    return std::move(s).take_terms();
}

enum class WagnerVariant {
    AsPrinted,  // (1+wq^n)(1+w^{-1}q^n) over (1-wq^n)(1+w^{-1}q^n); the
                // shared factor cancels, leaving prod (1+wq^n)/(1-wq^n)
    Symmetric,  // denominator read as (1-wq^n)(1-w^{-1}q^n)
};

/// Wagner's overpartition-pair crank product. The Symmetric variant is the
/// one whose w = 1 rows reproduce the overpartition-pair counts; both are
/// exposed because the printed source is ambiguous.
inline std::vector<LaurentPoly> expand_wagner_crank(long T, WagnerVariant variant = WagnerVariant::Symmetric) {
    QSeriesTable s = QSeriesTable::one(T);
    for (long n = 1; n <= T; ++n) {
        mul_sparse_factor(s, -1, +1, n);
        div_sparse_factor(s, 1, +1, n);
        if (variant == WagnerVariant::Symmetric) {
            mul_sparse_factor(s, -1, -1, n);
            div_sparse_factor(s, 1, -1, n);
        }
    }
    return std::move(s).take_terms();
}

// ---------------------------------------------------------------------------
// t-core crank via lattice enumeration
// ---------------------------------------------------------------------------

namespace detail {

// min over integer x of t x^2 + 2 j x (continuous minimum at -j/t)
inline long min_coord_contrib(int t, int j) {
    long best = 0;
    for (long x : {-(long)j / t, -(long)j / t - 1, -(long)j / t + 1}) {
        long v = (long)t * x * x + 2L * j * x;
        best = std::min(best, v);
    }
    return best;
}

}  // namespace detail

/// Residue-class t-core crank tables for all n <= n_max in one sweep of the
/// zero-sum lattice {v : sum v_i = 0, t||v||^2/2 + (0,...,t-1).v <= n_max}.
/// Recursion prunes on the doubled quadratic-form value; the last coordinate
/// is forced by the zero-sum constraint.
inline std::vector<StatTable> tcore_crank_tables(int t, long n_max) {
    const auto& coef = tcore_crank_coeffs(t);  // validates t in {5,7,11}
    const long budget = 2 * n_max;
    std::vector<std::vector<long>> buckets(static_cast<std::size_t>(n_max) + 1,
                                           std::vector<long>(static_cast<std::size_t>(t), 0));
    std::vector<long> minrem(static_cast<std::size_t>(t) + 1, 0);
    for (int i = t - 1; i >= 0; --i)
        minrem[static_cast<std::size_t>(i)] =
            minrem[static_cast<std::size_t>(i) + 1] + detail::min_coord_contrib(t, i);

    std::function<void(int, long, long, long)> rec = [&](int i, long sum, long val2, long dot) {
        if (i == t - 1) {
            long x = -sum;
            long v = val2 + (long)t * x * x + 2L * i * x;
            if (v > budget) return;
            long n = v / 2;
            long m = (dot + coef[static_cast<std::size_t>(i)] * x) % t;
            if (m < 0) m += t;
            ++buckets[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
            return;
        }
        long r = budget - val2 - minrem[static_cast<std::size_t>(i) + 1];
        if (r < 0) return;
        double disc = std::sqrt(static_cast<double>(i) * i + static_cast<double>(t) * r);
        long xlo = static_cast<long>(std::floor((-i - disc) / t)) - 1;
        long xhi = static_cast<long>(std::ceil((-i + disc) / t)) + 1;
        for (long x = xlo; x <= xhi; ++x) {
            long c = (long)t * x * x + 2L * i * x;
            if (c > r) continue;
            rec(i + 1, sum + x, val2 + c, dot + coef[static_cast<std::size_t>(i)] * x);
        }
    };
    rec(0, 0, 0, 0);

    std::vector<StatTable> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        StatTable tab{Statistic::TCoreCrank, t, n, {}};
        for (int m = 0; m < t; ++m)
            tab.add(m, buckets[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)]);
        out.push_back(std::move(tab));
    }
    return out;
}

inline StatTable tcore_crank_table(int t, long n) {
    return tcore_crank_tables(t, n).back();
}

// ---------------------------------------------------------------------------
// Stanton's modified polynomials
// ---------------------------------------------------------------------------

inline long stanton_beta(long ell) { return ell - (ell * ell - 1) / 24; }

/// rank*_{ell,n} / crank*_{ell,n}: the base polynomial at index ell*n + beta
/// plus four monomial corrections. Scope: rank for ell in {5,7}, crank for
/// ell in {5,7,11}. `rows` must cover index ell*n + beta.
inline LaurentPoly stanton_modified(Statistic kind, long ell, long n, std::span<const LaurentPoly> rows) {
    const bool rank_kind = kind == Statistic::Rank;
    if (!rank_kind && kind != Statistic::Crank)
        throw OutOfScopeError("stanton_modified: kind must be rank or crank");
    if ((rank_kind && ell != 5 && ell != 7) || (!rank_kind && ell != 5 && ell != 7 && ell != 11))
        throw OutOfScopeError("stanton_modified: modulus outside the conjecture's scope");
    if (n < 0) throw std::invalid_argument("stanton_modified: n >= 0 required");
    const long idx = ell * n + stanton_beta(ell);
    if (idx >= static_cast<long>(rows.size()))
        throw std::invalid_argument("stanton_modified: base rows do not reach index " + std::to_string(idx));
    LaurentPoly f = rows[static_cast<std::size_t>(idx)];
    const long d = rank_kind ? 2 : ell;
    f += LaurentPoly::monomial(1, idx - d);
    f -= LaurentPoly::monomial(1, idx - d + (rank_kind ? 1 : ell));
    f += LaurentPoly::monomial(1, d - idx);
    f -= LaurentPoly::monomial(1, d - idx - (rank_kind ? 1 : ell));
    return f;
}

inline LaurentPoly stanton_modified(Statistic kind, long ell, long n) {
    const long idx = ell * n + stanton_beta(ell);
    auto rows = kind == Statistic::Rank ? expand_rank(idx) : expand_crank(idx);
    return stanton_modified(kind, ell, n, rows);
}

// ---------------------------------------------------------------------------
// Stanley's partition-by-parts polynomial data
// ---------------------------------------------------------------------------

/// p_k(n) for k = 1..n (partitions of n into exactly k parts).
inline StatTable parts_count_table(long n) {
    if (n < 1) throw std::invalid_argument("parts_count_table: n >= 1 required");
    // P(m, k) = P(m-1, k-1) + P(m-k, k)
    std::vector<std::vector<Integer>> P(static_cast<std::size_t>(n) + 1,
                                        std::vector<Integer>(static_cast<std::size_t>(n) + 1, Integer(0)));
    P[0][0] = 1;
    for (long m = 1; m <= n; ++m)
        for (long k = 1; k <= m; ++k) {
            P[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
                P[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)];
            if (m - k >= 0)
                P[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] +=
                    P[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(k)];
        }
    StatTable t{Statistic::PartsCount, 0, n, {}};
    for (long k = 1; k <= n; ++k) t.add(k, P[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
    return t;
}

}  // namespace partpoly

#endif
