#ifndef PARTPOLY_QSERIES_HPP
#define PARTPOLY_QSERIES_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "partpoly/laurent.hpp"

namespace partpoly {

/// Truncated power series in q whose coefficients are Laurent polynomials in
/// w. A table of truncation T stores exactly T+1 terms (q^0 .. q^T); binary
/// operations truncate to min(T1, T2) and never extrapolate.
class QSeriesTable {
  public:
    explicit QSeriesTable(long truncation) : terms_(static_cast<std::size_t>(truncation) + 1) {
        if (truncation < 0) throw std::invalid_argument("QSeriesTable: negative truncation");
    }

    static QSeriesTable one(long truncation) {
        QSeriesTable s(truncation);
        s.terms_[0] = LaurentPoly::constant(1);
        return s;
    }

    long truncation() const { return static_cast<long>(terms_.size()) - 1; }

    const LaurentPoly& term(long n) const { return terms_.at(static_cast<std::size_t>(n)); }
    LaurentPoly& term(long n) { return terms_.at(static_cast<std::size_t>(n)); }

    const std::vector<LaurentPoly>& terms() const { return terms_; }
    std::vector<LaurentPoly> take_terms() && { return std::move(terms_); }

    bool operator==(const QSeriesTable& o) const { return terms_ == o.terms_; }

  private:
    std::vector<LaurentPoly> terms_;
};

inline QSeriesTable qs_add(const QSeriesTable& a, const QSeriesTable& b) {
    QSeriesTable r(std::min(a.truncation(), b.truncation()));
    for (long n = 0; n <= r.truncation(); ++n) r.term(n) = a.term(n) + b.term(n);
    return r;
}

/// Cauchy product truncated at min(T1, T2).
inline QSeriesTable qs_mul(const QSeriesTable& a, const QSeriesTable& b) {
    QSeriesTable r(std::min(a.truncation(), b.truncation()));
    for (long n = 0; n <= r.truncation(); ++n) {
        LaurentPoly acc;
        for (long i = 0; i <= n; ++i) {
            if (!a.term(i).is_zero() && !b.term(n - i).is_zero()) acc += a.term(i) * b.term(n - i);
        }
        r.term(n) = std::move(acc);
    }
    return r;
}

/// Multiplicative inverse up to truncation. Requires constant term +/-1.
inline QSeriesTable qs_invert(const QSeriesTable& a) {
    const LaurentPoly& a0 = a.term(0);
    if (a0 != LaurentPoly::constant(1) && a0 != LaurentPoly::constant(-1))
        throw NotAUnitError("qs_invert: constant term must be +1 or -1");
    const Integer u = a0.eval_at_one();  // +1 or -1, self-inverse
    QSeriesTable b(a.truncation());
    b.term(0) = LaurentPoly::constant(u);
    for (long n = 1; n <= a.truncation(); ++n) {
        LaurentPoly acc;
        for (long k = 1; k <= n; ++k) {
            if (!a.term(k).is_zero() && !b.term(n - k).is_zero()) acc += a.term(k) * b.term(n - k);
        }
        b.term(n) = acc.scaled(-u);
    }
    return b;
}

// ---------------------------------------------------------------------------
// Sparse-factor kernels. All infinite products and summand updates in the
// expanders reduce to multiplying or dividing by (1 - c * w^a * q^b). Both
// directions are linear-time recurrences over the table, which is what keeps
// large-T expansion cheap.
// ---------------------------------------------------------------------------

/// s *= (1 - c * w^a * q^b), in place. b >= 0; b == 0 falls back to a full
/// coefficient-wise Laurent multiply.
inline void mul_sparse_factor(QSeriesTable& s, const Integer& c, long a, long b) {
    if (b < 0) throw std::domain_error("mul_sparse_factor: negative q-power");
    if (c == 0) return;
    if (b == 0) {
        LaurentPoly f = LaurentPoly::constant(1) - LaurentPoly::monomial(c, a);
        for (long n = 0; n <= s.truncation(); ++n) s.term(n) *= f;
        return;
    }
    const Integer mc = -c;
    for (long n = s.truncation(); n >= b; --n) s.term(n).add_scaled(s.term(n - b), mc, a);
}

/// s /= (1 - c * w^a * q^b), in place; requires b >= 1 (geometric expansion).
inline void div_sparse_factor(QSeriesTable& s, const Integer& c, long a, long b) {
    if (b < 1) throw std::domain_error("div_sparse_factor: q-power must be >= 1");
    if (c == 0) return;
    for (long n = b; n <= s.truncation(); ++n) s.term(n).add_scaled(s.term(n - b), c, a);
}

/// acc += w-shifted copy of s starting at q^shift: acc[n] += s[n - shift].
inline void add_shifted(QSeriesTable& acc, const QSeriesTable& s, long shift) {
    for (long n = shift; n <= acc.truncation() && n - shift <= s.truncation(); ++n)
        acc.term(n) += s.term(n - shift);
}

/// q-Pochhammer product of factors (1 - c * w^a * q^{start_power + k}) for
/// k = 0 .. n_factors-1 (all k when n_factors is empty), truncated at T.
/// Infinite products require start_power >= 1 so the tail stabilizes.
inline QSeriesTable qs_pochhammer(const Integer& c, long a, long start_power,
                                  std::optional<long> n_factors, long T) {
    if (!n_factors && start_power < 1)
        throw DivergentProductError("qs_pochhammer: infinite product with a q^0 factor");
    QSeriesTable s = QSeriesTable::one(T);
    for (long k = 0;; ++k) {
        if (n_factors && k >= *n_factors) break;
        long b = start_power + k;
        if (b > T) break;  // remaining factors are 1 + O(q^{T+1})
        if (b < 0) throw std::domain_error("qs_pochhammer: factor with negative q-power");
        mul_sparse_factor(s, c, a, b);
    }
    return s;
}

}  // namespace partpoly

#endif
