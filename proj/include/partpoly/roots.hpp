#ifndef PARTPOLY_ROOTS_HPP
#define PARTPOLY_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "partpoly/genfun.hpp"
#include "partpoly/stat_table.hpp"

namespace partpoly {

/// Single-variable polynomial with non-negative integer coefficients and
/// nonzero constant and leading terms. Symmetric statistics are stored
/// doubled (coeffs[0] = s(0,n), coeffs[m] = 2 s(m,n)): the Erdos-Turan
/// quantity and the root multiset are scale invariant, so nothing downstream
/// changes and all arithmetic stays integral.
struct PrincipalPoly {
    Statistic statistic{};
    int param = 0;
    long n = 0;
    bool doubled = false;
    std::vector<Integer> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    LaurentPoly to_laurent() const { return LaurentPoly::from_coeffs(0, coeffs); }
};

inline bool is_symmetric_statistic(Statistic s) {
    switch (s) {
        case Statistic::Rank:
        case Statistic::Crank:
        case Statistic::SptCrank:
        case Statistic::ORank:
        case Statistic::UnimodalRank:
        case Statistic::StronglyUnimodalRank:
        case Statistic::WagnerCrank:
            return true;
        default:
            return false;
    }
}

/// Build the principal polynomial of a statistic's distribution at one n.
/// Symmetric families give the doubled half polynomial; one-sided families
/// give the plain polynomial. PartsCount rows start at m = 1, so they are
/// shifted down by one exponent (discarding the forced root at w = 0).
inline PrincipalPoly principal_poly(const StatTable& t) {
    PrincipalPoly p;
    p.statistic = t.statistic;
    p.param = t.param;
    p.n = t.n;
    if (t.statistic == Statistic::TCoreCrank)
        throw std::invalid_argument("principal_poly: mod-t crank has no principal polynomial");
    if (t.counts.empty()) throw ZeroConstantTermError("principal_poly: empty distribution");
    for (const auto& [m, c] : t.counts)
        if (c < 0)
            throw std::domain_error("principal_poly: negative count at m=" + std::to_string(m));
    long shift = t.statistic == Statistic::PartsCount ? 1 : 0;
    if (is_symmetric_statistic(t.statistic)) {
        for (const auto& [m, c] : t.counts)
            if (t.count(-m) != c)
                throw InternalInconsistencyError("principal_poly: symmetric family table is not symmetric");
        const Integer& s0 = t.count(0);
        if (s0 == 0) throw ZeroConstantTermError("principal_poly: s(0,n) = 0");
        long top = t.counts.rbegin()->first;
        p.doubled = true;
        p.coeffs.assign(static_cast<std::size_t>(top) + 1, Integer(0));
        p.coeffs[0] = s0;
        for (long m = 1; m <= top; ++m) p.coeffs[static_cast<std::size_t>(m)] = 2 * t.count(m);
    } else {
        long top = t.counts.rbegin()->first;
        if (t.counts.begin()->first < shift)
            throw std::domain_error("principal_poly: negative exponent in one-sided family");
        p.coeffs.assign(static_cast<std::size_t>(top - shift) + 1, Integer(0));
        for (const auto& [m, c] : t.counts) p.coeffs[static_cast<std::size_t>(m - shift)] = c;
        if (p.coeffs[0] == 0) throw ZeroConstantTermError("principal_poly: t(0,n) = 0");
    }
    while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
    return p;
}

/// Stanley's partition polynomial, read with exponent k (parts count); the
/// forced zero constant term is shifted away inside principal_poly.
inline PrincipalPoly partition_parts_poly(long n) { return principal_poly(parts_count_table(n)); }

// ---------------------------------------------------------------------------
// Erdos-Turan quantity
// ---------------------------------------------------------------------------

inline double big_log(const Integer& x) {
    if (x <= 0) throw std::domain_error("big_log: positive input required");
    boost::multiprecision::cpp_bin_float_100 v(x);
    return static_cast<double>(log(v));
}

/// L(f) = sum |a_j| / sqrt(|a_0 a_d|), reported exactly as L^2 together with
/// the floating log L / d used by the sub-exponential criterion.
struct ErdosTuran {
    Rational L_squared;
    double log_L_over_d = 0.0;
};

inline ErdosTuran erdos_turan_L(const PrincipalPoly& f) {
    const long d = f.degree();
    const Integer& a0 = f.coeffs.front();
    const Integer& ad = f.coeffs.back();
    if (a0 == 0 || ad == 0) throw ZeroConstantTermError("erdos_turan_L: a_0 a_d = 0");
    Integer sum = 0;
    for (const auto& c : f.coeffs) sum += abs_int(c);
    ErdosTuran et;
    et.L_squared = Rational(sum * sum, abs_int(a0) * abs_int(ad));
    double log_l = big_log(sum) - 0.5 * (big_log(abs_int(a0)) + big_log(abs_int(ad)));
    et.log_L_over_d = d > 0 ? log_l / static_cast<double>(d) : 0.0;
    return et;
}

// ---------------------------------------------------------------------------
// Simultaneous (Aberth-Ehrlich) root finding with a precision ladder
// ---------------------------------------------------------------------------

/// All roots of one principal polynomial, with multiplicity. residual_scale
/// is max_j |f(z_j)| over the max-norm of the coefficients, reported from the
/// precision level that actually converged.
struct RootSet {
    std::vector<std::complex<double>> roots;
    double residual_scale = 0.0;
    long degree = 0;
};

namespace detail {

using ExtReal = boost::multiprecision::cpp_bin_float_quad;                 // 113-bit significand
using ExtReal2 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<
    128, boost::multiprecision::digit_base_2>>;                            // 128-bit significand
using ExtComplex = boost::multiprecision::cpp_complex<40>;                 // ~133-bit significand

template <class C, class R>
struct AberthOutcome {
    std::vector<C> roots;
    R residual = R(0);
    int sweeps = 0;
    bool converged = false;
};

// One Aberth-Ehrlich run at fixed precision. Coefficients arrive scaled by
// their max-norm. Updates are Jacobi-style (corrections computed from the
// previous sweep), so the iteration is deterministic however it is chunked.
template <class C, class R>
AberthOutcome<C, R> aberth(const std::vector<R>& a, R tol, int max_sweeps) {
    const long d = static_cast<long>(a.size()) - 1;
    AberthOutcome<C, R> out;
    out.roots.resize(static_cast<std::size_t>(d));

    // initial guesses on the root-magnitude circle, deterministically jittered
    double r0 = std::pow(std::abs(static_cast<double>(a[0] / a[static_cast<std::size_t>(d)])),
                         1.0 / static_cast<double>(d));
    r0 = std::clamp(r0, 1e-3, 1e3);
    std::mt19937_64 rng(0x7c3a9d11u);
    for (long j = 0; j < d; ++j) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        double theta = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.25 + 0.5 * u) /
                       static_cast<double>(d) + 0.5;
        double rad = r0 * (1.0 + 0.05 * (u - 0.5));
        out.roots[static_cast<std::size_t>(j)] = C(R(rad * std::cos(theta)), R(rad * std::sin(theta)));
    }

    auto eval = [&](const C& z, C& p, C& dp) {
        p = C(a[static_cast<std::size_t>(d)]);
        dp = C(R(0));
        for (long k = d - 1; k >= 0; --k) {
            dp = dp * z + p;
            p = p * z + C(a[static_cast<std::size_t>(k)]);
        }
    };

    const R conv = R(100) * std::numeric_limits<R>::epsilon();
    std::vector<C> next(out.roots.size());
    for (out.sweeps = 1; out.sweeps <= max_sweeps; ++out.sweeps) {
        R max_step = R(0);
        for (long j = 0; j < d; ++j) {
            const C& z = out.roots[static_cast<std::size_t>(j)];
            C p, dp;
            eval(z, p, dp);
            if (abs(p) == R(0)) {
                next[static_cast<std::size_t>(j)] = z;
                continue;
            }
            C newton = (abs(dp) == R(0)) ? C(R(1e-3), R(1e-3)) : p / dp;
            C s(R(0));
            for (long k = 0; k < d; ++k) {
                if (k == j) continue;
                C diff = z - out.roots[static_cast<std::size_t>(k)];
                if (abs(diff) == R(0)) diff = C(std::numeric_limits<R>::epsilon(), R(0));
                s += C(R(1)) / diff;
            }
            C denom = C(R(1)) - newton * s;
            C step = (abs(denom) == R(0)) ? newton : newton / denom;
            next[static_cast<std::size_t>(j)] = z - step;
            max_step = std::max(max_step, R(abs(step) / (R(1) + abs(z))));
        }
        out.roots.swap(next);
        if (max_step < conv) break;
    }

    out.residual = R(0);
    for (const C& z : out.roots) {
        C p, dp;
        eval(z, p, dp);
        out.residual = std::max(out.residual, R(abs(p)));
    }
    out.converged = out.residual <= tol;
    return out;
}

inline std::vector<double> scale_to_double(const std::vector<Integer>& coeffs) {
    Integer maxc = 0;
    for (const auto& c : coeffs) maxc = std::max(maxc, abs_int(c));
    std::vector<double> a(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        a[i] = static_cast<double>(boost::multiprecision::cpp_bin_float_100(coeffs[i]) /
                                   boost::multiprecision::cpp_bin_float_100(maxc));
    return a;
}

template <class R>
std::vector<R> scale_to_real(const std::vector<Integer>& coeffs) {
    Integer maxc = 0;
    for (const auto& c : coeffs) maxc = std::max(maxc, abs_int(c));
    std::vector<R> a(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) a[i] = R(coeffs[i]) / R(maxc);
    return a;
}

inline void sort_roots(std::vector<std::complex<double>>& roots) {
    std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
        double ax = std::arg(x), ay = std::arg(y);
        if (ax != ay) return ax < ay;
        return std::abs(x) < std::abs(y);
    });
}

}  // namespace detail

/// Solve for all roots, escalating double -> ~133-bit significand when the
/// requested residual cannot be met (or immediately for very high degree or
/// coefficients beyond double range).
inline RootSet solve_roots(const std::vector<Integer>& coeffs, double tol = 1e-10) {
    const long d = static_cast<long>(coeffs.size()) - 1;
    if (d < 1) throw std::invalid_argument("solve_roots: degree >= 1 required");
    if (coeffs.front() == 0 || coeffs.back() == 0)
        throw std::invalid_argument("solve_roots: zero constant or leading coefficient");

    RootSet rs;
    rs.degree = d;
    Integer maxc = 0;
    for (const auto& c : coeffs) maxc = std::max(maxc, abs_int(c));
    const bool huge = boost::multiprecision::msb(maxc) > 960 || d > 500;

    if (!huge) {
        auto a = detail::scale_to_double(coeffs);
        auto run = detail::aberth<std::complex<double>, double>(a, tol, 400);
        if (run.converged) {
            rs.roots = std::move(run.roots);
            rs.residual_scale = run.residual;
            detail::sort_roots(rs.roots);
            return rs;
        }
    }

    auto a = detail::scale_to_real<detail::ExtReal2>(coeffs);
    auto run = detail::aberth<detail::ExtComplex, detail::ExtReal2>(
        a, detail::ExtReal2(tol), 600);
    if (!run.converged)
        throw NoConvergenceError(run.sweeps, static_cast<double>(run.residual));
    rs.roots.reserve(run.roots.size());
    for (const auto& z : run.roots)
        rs.roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    rs.residual_scale = static_cast<double>(run.residual);
    detail::sort_roots(rs.roots);
    return rs;
}

inline RootSet solve_roots(const PrincipalPoly& f, double tol = 1e-10) {
    return solve_roots(f.coeffs, tol);
}

// ---------------------------------------------------------------------------
// Equidistribution measurements
// ---------------------------------------------------------------------------

/// Star discrepancy of the normalized root angles against the uniform
/// distribution on the circle.
inline double star_discrepancy(const RootSet& rs) {
    const long d = static_cast<long>(rs.roots.size());
    if (d < 1) throw std::invalid_argument("star_discrepancy: no roots");
    std::vector<double> u(rs.roots.size());
    for (std::size_t j = 0; j < rs.roots.size(); ++j) {
        double a = std::arg(rs.roots[j]) / (2.0 * std::numbers::pi);
        if (a < 0) a += 1.0;
        u[j] = a;
    }
    std::sort(u.begin(), u.end());
    double dstar = 0.0;
    for (long j = 1; j <= d; ++j) {
        double uj = u[static_cast<std::size_t>(j - 1)];
        dstar = std::max(dstar, std::max(static_cast<double>(j) / d - uj,
                                         uj - static_cast<double>(j - 1) / d));
    }
    return dstar;
}

/// Vieta cross-checks on a computed root set: the modulus product against
/// |a_0 / a_d| (relative) and the root sum against -a_{d-1}/a_d.
struct VietaCheck {
    double product_rel_err = 0.0;
    double sum_err = 0.0;
};

inline VietaCheck vieta_check(const PrincipalPoly& f, const RootSet& rs) {
    VietaCheck v;
    double log_prod = 0.0;
    std::complex<double> sum = 0.0;
    for (const auto& z : rs.roots) {
        log_prod += std::log(std::abs(z));
        sum += z;
    }
    double expected_log = big_log(abs_int(f.coeffs.front())) - big_log(abs_int(f.coeffs.back()));
    v.product_rel_err = std::abs(std::expm1(log_prod - expected_log));
    const long d = f.degree();
    double ratio = static_cast<double>(boost::multiprecision::cpp_bin_float_100(f.coeffs[static_cast<std::size_t>(d - 1)]) /
                                       boost::multiprecision::cpp_bin_float_100(f.coeffs[static_cast<std::size_t>(d)]));
    std::complex<double> expected_sum(-ratio, 0.0);
    v.sum_err = std::abs(sum - expected_sum) / (1.0 + std::abs(expected_sum));
    return v;
}

/// Histogram of root moduli, plus sporadic-root accounting: roots with |z|
/// outside [1 - delta, 1 + delta] count as sporadic. `peaks` is the number of
/// strict local maxima among the bins (plateaus collapse to one peak).
struct RadialProfile {
    std::vector<long> bin_counts;
    double lo = 0.0, hi = 0.0;
    double min_mod = 0.0, max_mod = 0.0, mean_mod = 0.0;
    long sporadic = 0;
    double delta = 0.05;
    long peaks = 0;
};

inline RadialProfile radial_profile(const RootSet& rs, int bins, double delta = 0.05) {
    if (bins < 1) throw std::invalid_argument("radial_profile: bins >= 1 required");
    RadialProfile p;
    p.delta = delta;
    p.bin_counts.assign(static_cast<std::size_t>(bins), 0);
    if (rs.roots.empty()) return p;
    std::vector<double> mods(rs.roots.size());
    for (std::size_t i = 0; i < rs.roots.size(); ++i) mods[i] = std::abs(rs.roots[i]);
    auto [mn, mx] = std::minmax_element(mods.begin(), mods.end());
    p.min_mod = *mn;
    p.max_mod = *mx;
    p.lo = p.min_mod;
    p.hi = p.max_mod;
    double width = (p.hi - p.lo) / bins;
    for (double m : mods) {
        p.mean_mod += m / static_cast<double>(mods.size());
        long b = width > 0 ? std::min<long>(bins - 1, static_cast<long>((m - p.lo) / width)) : 0;
        ++p.bin_counts[static_cast<std::size_t>(b)];
        if (m < 1.0 - delta || m > 1.0 + delta) ++p.sporadic;
    }
    // count strict local maxima, merging plateaus
    long i = 0;
    const long B = bins;
    while (i < B) {
        long j = i;
        while (j + 1 < B && p.bin_counts[static_cast<std::size_t>(j + 1)] == p.bin_counts[static_cast<std::size_t>(i)]) ++j;
        long left = i > 0 ? p.bin_counts[static_cast<std::size_t>(i - 1)] : -1;
        long right = j + 1 < B ? p.bin_counts[static_cast<std::size_t>(j + 1)] : -1;
        if (p.bin_counts[static_cast<std::size_t>(i)] > 0 &&
            p.bin_counts[static_cast<std::size_t>(i)] > left &&
            p.bin_counts[static_cast<std::size_t>(i)] > right)
            ++p.peaks;
        i = j + 1;
    }
    return p;
}

/// Top degree of the strongly unimodal rank row: rank d needs at least the
/// strictly decreasing triangle (d+1, d, ..., 1) of size T_{d+1}, so the
/// degree is k - 1 for the largest triangular number T_k <= n. Matches the
/// enumeration oracle exactly (e.g. n = 200 -> 18).
inline long strongly_unimodal_degree(long n) {
    if (n < 1) throw std::invalid_argument("strongly_unimodal_degree: n >= 1 required");
    long k = 1;
    while ((k + 1) * (k + 2) / 2 <= n) ++k;
    return k - 1;
}

// ---------------------------------------------------------------------------
// Figure artifacts
// ---------------------------------------------------------------------------

inline void write_roots_csv(const RootSet& rs, std::ostream& os) {
    os << "re,im,modulus,angle\n";
    char buf[160];
    for (const auto& z : rs.roots) {
        double ang = std::arg(z);
        if (ang < 0) ang += 2.0 * std::numbers::pi;
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", z.real(), z.imag(),
                      std::abs(z), ang);
        os << buf;
    }
}

/// Unit-circle scatter: stroked circle, axes, one dot per root, square
/// viewbox extending to max(1.1, max |z|).
inline void write_roots_svg(const RootSet& rs, std::ostream& os) {
    double extent = 1.1;
    for (const auto& z : rs.roots) extent = std::max(extent, std::abs(z));
    double l = extent * 1.05;
    char buf[256];
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\"";
    std::snprintf(buf, sizeof buf, "%.6f %.6f %.6f %.6f\">\n", -l, -l, 2 * l, 2 * l);
    os << buf;
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.6f\" y1=\"0\" x2=\"%.6f\" y2=\"0\" stroke=\"#bbbbbb\" stroke-width=\"%.6f\"/>\n",
                  -l, l, l / 400);
    os << buf;
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"0\" y1=\"%.6f\" x2=\"0\" y2=\"%.6f\" stroke=\"#bbbbbb\" stroke-width=\"%.6f\"/>\n",
                  -l, l, l / 400);
    os << buf;
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#4477aa\" stroke-width=\"%.6f\"/>\n",
                  l / 300);
    os << buf;
    for (const auto& z : rs.roots) {
        // SVG y-axis points down; flip the imaginary part
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.9f\" cy=\"%.9f\" r=\"%.6f\" fill=\"#cc3311\"/>\n",
                      z.real(), -z.imag(), l / 160);
        os << buf;
    }
    os << "</svg>\n";
}

}  // namespace partpoly

#endif
