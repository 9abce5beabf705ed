#ifndef PARTPOLY_CYCLO_HPP
#define PARTPOLY_CYCLO_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "partpoly/laurent.hpp"

namespace partpoly {

/// The ell-th cyclotomic polynomial, with the convention Phi_1 = w - 1.
/// Computed by exact division of w^ell - 1 by the proper-divisor factors.
inline LaurentPoly cyclotomic(long ell) {
    if (ell < 1) throw std::invalid_argument("cyclotomic: ell >= 1 required");
    if (ell == 1) return LaurentPoly::monomial(1, 1) - LaurentPoly::constant(1);
    LaurentPoly num = LaurentPoly::monomial(1, ell) - LaurentPoly::constant(1);
    for (long d = 1; d < ell; ++d) {
        if (ell % d != 0) continue;
        auto div = divide_exact(num, cyclotomic(d));
        if (!div.divisible || !div.quotient_integral)
            throw InternalInconsistencyError("cyclotomic: factor division failed");
        num = div.quotient;
    }
    return num;
}

/// Bucket sums f_hat_{r,ell}: total coefficient mass on exponents congruent
/// to r mod ell. The buckets always sum to f(1).
inline std::vector<Integer> bucket_sums(const LaurentPoly& f, long ell) {
    if (ell < 1) throw std::invalid_argument("bucket_sums: ell >= 1 required");
    std::vector<Integer> buckets(static_cast<std::size_t>(ell), Integer(0));
    for (long e = f.min_exp(); e <= f.max_exp(); ++e) {
        long r = e % ell;
        if (r < 0) r += ell;
        buckets[static_cast<std::size_t>(r)] += f.coeff(e);
    }
    return buckets;
}

/// Symmetric about exponent zero: f(w) == f(w^{-1}).
inline bool check_symmetric(const LaurentPoly& f) { return f == f.reversed(); }

/// Weakly increasing then weakly decreasing over the full exponent window,
/// interior zero coefficients included.
inline bool check_unimodal(const LaurentPoly& f) {
    if (f.is_zero()) return true;
    bool descending = false;
    for (long e = f.min_exp() + 1; e <= f.max_exp(); ++e) {
        const Integer& prev = f.coeff(e - 1);
        const Integer& cur = f.coeff(e);
        if (!descending) {
            if (cur < prev) descending = true;
        } else if (cur > prev) {
            return false;
        }
    }
    return true;
}

/// Strictly increasing to a single peak, then strictly decreasing.
inline bool check_strictly_unimodal(const LaurentPoly& f) {
    if (f.is_zero()) return false;
    long e = f.min_exp();
    while (e < f.max_exp() && f.coeff(e + 1) > f.coeff(e)) ++e;
    for (; e < f.max_exp(); ++e)
        if (!(f.coeff(e + 1) < f.coeff(e))) return false;
    return true;
}

/// Joint certificate for one polynomial and one prime modulus. Both routes of
/// the divisibility criterion (bucket equality and exact division) are always
/// run and cross-checked; disagreement aborts, since it would falsify the
/// criterion as implemented.
struct DivisibilityReport {
    std::string family;
    long ell = 0;
    long n = -1;
    std::vector<Integer> buckets;
    bool divisible = false;
    std::optional<LaurentPoly> quotient;
    std::optional<bool> quotient_nonnegative;
    bool symmetric = false;
    bool unimodal = false;
};

inline DivisibilityReport check_divisibility(const LaurentPoly& f, long ell,
                                             std::string family = {}, long n = -1) {
    if (!is_prime(ell)) throw std::invalid_argument("check_divisibility: ell must be prime");
    DivisibilityReport rep;
    rep.family = std::move(family);
    rep.ell = ell;
    rep.n = n;
    rep.buckets = bucket_sums(f, ell);
    bool buckets_equal = true;
    for (const auto& b : rep.buckets)
        if (b != rep.buckets.front()) buckets_equal = false;

    const LaurentPoly phi = cyclotomic(ell);
    auto div = divide_exact(f.shifted(-f.min_exp()), phi);
    if (div.divisible != buckets_equal)
        throw InternalInconsistencyError(
            "check_divisibility: bucket equality and exact division disagree");
    rep.divisible = div.divisible;
    rep.symmetric = check_symmetric(f);
    rep.unimodal = check_unimodal(f);
    if (rep.divisible) {
        if (!div.quotient_integral)
            throw InternalInconsistencyError("check_divisibility: non-integral quotient for monic divisor");
        LaurentPoly q = div.quotient.shifted(f.min_exp());
        if (q * phi != f)
            throw InternalInconsistencyError("check_divisibility: quotient re-verification failed");
        bool nonneg = true;
        for (const auto& c : q.coeffs())
            if (c < 0) nonneg = false;
        rep.quotient = std::move(q);
        rep.quotient_nonnegative = nonneg;
        // symmetric + unimodal + divisible forces a non-negative quotient for
        // odd primes; a violation is a build-stopping inconsistency.
        if (ell % 2 == 1 && rep.symmetric && rep.unimodal && !nonneg)
            throw InternalInconsistencyError(
                "check_divisibility: symmetric unimodal divisible input with negative quotient");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

struct SweepEntry {
    long n = 0;
    Integer value;
    long value_mod = 0;
};

/// Evaluate the family's counting values on the progression n == residue
/// (mod ell) up to n < values.size(), reporting each value mod ell.
inline std::vector<SweepEntry> congruence_sweep(std::span<const Integer> values, long ell, long residue) {
    if (ell < 1) throw std::invalid_argument("congruence_sweep: ell >= 1 required");
    std::vector<SweepEntry> out;
    long r = ((residue % ell) + ell) % ell;
    for (long n = r; n < static_cast<long>(values.size()); n += ell) {
        Integer m = values[static_cast<std::size_t>(n)] % ell;
        if (m < 0) m += ell;
        out.push_back({n, values[static_cast<std::size_t>(n)], static_cast<long>(m)});
    }
    return out;
}

struct ResidueScan {
    long residue = 0;
    long tested = 0;
    bool all_divisible = true;
    std::optional<long> first_failure;
};

struct SearchResult {
    long step = 0;
    std::vector<ResidueScan> scans;
    std::vector<long> full_residues;  // residues with no failure over the tested range
};

/// Empirical residue scan: for which b does `divisor` divide every tested row
/// with n == b (mod step)? Reports carry the tested range and a first-failure
/// witness; no completeness is claimed.
inline SearchResult search_progressions(std::span<const LaurentPoly> rows, long step,
                                        const LaurentPoly& divisor) {
    if (step < 1) throw std::invalid_argument("search_progressions: step >= 1 required");
    if (static_cast<long>(rows.size()) <= step)
        throw std::invalid_argument("search_progressions: need at least one representative per class");
    SearchResult res;
    res.step = step;
    for (long b = 0; b < step; ++b) {
        ResidueScan scan;
        scan.residue = b;
        for (long n = b; n < static_cast<long>(rows.size()); n += step) {
            ++scan.tested;
            auto div = divide_exact(rows[static_cast<std::size_t>(n)], divisor);
            if (!div.divisible) {
                scan.all_divisible = false;
                if (!scan.first_failure) scan.first_failure = n;
            }
        }
        if (scan.all_divisible) res.full_residues.push_back(b);
        res.scans.push_back(std::move(scan));
    }
    return res;
}

// ---------------------------------------------------------------------------
// JSON export (exact integers as decimal strings)
// ---------------------------------------------------------------------------

inline nlohmann::json report_to_json(const DivisibilityReport& rep) {
    nlohmann::json j;
    j["family"] = rep.family;
    j["ell"] = rep.ell;
    j["n"] = rep.n;
    nlohmann::json buckets = nlohmann::json::array();
    for (const auto& b : rep.buckets) buckets.push_back(b.str());
    j["buckets"] = std::move(buckets);
    j["divisible"] = rep.divisible;
    j["symmetric"] = rep.symmetric;
    j["unimodal"] = rep.unimodal;
    if (rep.quotient) {
        nlohmann::json q;
        q["min_exp"] = rep.quotient->min_exp();
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : rep.quotient->coeffs()) coeffs.push_back(c.str());
        q["coeffs"] = std::move(coeffs);
        j["quotient"] = std::move(q);
        j["quotient_nonnegative"] = *rep.quotient_nonnegative;
    }
    return j;
}

}  // namespace partpoly

#endif
