#ifndef PARTPOLY_LAURENT_HPP
#define PARTPOLY_LAURENT_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "partpoly/common.hpp"

namespace partpoly {

/// Exact integer-coefficient Laurent polynomial in one variable w.
///
/// Stored densely over the exponent window [min_exp(), max_exp()]. Canonical
/// form: the boundary coefficients are nonzero and the zero polynomial is the
/// empty window with min_exp = max_exp = 0. All arithmetic is exact.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly constant(Integer c) { return monomial(std::move(c), 0); }

    static LaurentPoly monomial(Integer c, long exp) {
        LaurentPoly f;
        if (c != 0) {
            f.min_exp_ = exp;
            f.coeffs_.push_back(std::move(c));
        }
        return f;
    }

    // Coefficients for exponents min_exp, min_exp+1, ...; trailing/leading
    // zeros are trimmed.
    static LaurentPoly from_coeffs(long min_exp, std::vector<Integer> coeffs) {
        LaurentPoly f;
        f.min_exp_ = min_exp;
        f.coeffs_ = std::move(coeffs);
        f.normalize();
        return f;
    }

    bool is_zero() const { return coeffs_.empty(); }
    long min_exp() const { return coeffs_.empty() ? 0 : min_exp_; }
    long max_exp() const { return coeffs_.empty() ? 0 : min_exp_ + static_cast<long>(coeffs_.size()) - 1; }
    std::size_t window_size() const { return coeffs_.size(); }

    const Integer& coeff(long exp) const {
        static const Integer zero = 0;
        if (coeffs_.empty() || exp < min_exp_ || exp > max_exp()) return zero;
        return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
    }

    const std::vector<Integer>& coeffs() const { return coeffs_; }

    bool operator==(const LaurentPoly& o) const {
        return (coeffs_.empty() && o.coeffs_.empty()) ||
               (min_exp_ == o.min_exp_ && coeffs_ == o.coeffs_);
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& g) {
        add_scaled(g, 1, 0);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& g) {
        add_scaled(g, -1, 0);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        LaurentPoly r;
        r.min_exp_ = a.min_exp_ + b.min_exp_;
        r.coeffs_ = mul_dense(a.coeffs_, b.coeffs_);
        r.normalize();
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& g) { return *this = *this * g; }

    /// In-place fused update: *this += c * w^shift * g. The workhorse of the
    /// q-series kernels; g must not alias *this unless shift==0 and c==+/-1
    /// paths are avoided (callers never alias).
    void add_scaled(const LaurentPoly& g, const Integer& c, long shift) {
        if (g.is_zero() || c == 0) return;
        long g_lo = g.min_exp_ + shift;
        long g_hi = g.max_exp() + shift;
        if (coeffs_.empty()) {
            min_exp_ = g_lo;
            coeffs_.assign(g.coeffs_.begin(), g.coeffs_.end());
            if (c != 1)
                for (auto& x : coeffs_) x *= c;
            normalize();
            return;
        }
        long lo = std::min(min_exp_, g_lo);
        long hi = std::max(max_exp(), g_hi);
        reserve_window(lo, hi);
        Integer* base = coeffs_.data() + (g_lo - min_exp_);
        const Integer* src = g.coeffs_.data();
        std::size_t n = g.coeffs_.size();
        if (c == 1) {
            for (std::size_t i = 0; i < n; ++i) base[i] += src[i];
        } else if (c == -1) {
            for (std::size_t i = 0; i < n; ++i) base[i] -= src[i];
        } else {
            for (std::size_t i = 0; i < n; ++i) base[i] += c * src[i];
        }
        normalize();
    }

    /// Substitute w -> w^{-1}.
    LaurentPoly reversed() const {
        if (is_zero()) return {};
        LaurentPoly r;
        r.min_exp_ = -max_exp();
        r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
        return r;
    }

    /// Multiply by w^k.
    LaurentPoly shifted(long k) const {
        LaurentPoly r = *this;
        if (!r.coeffs_.empty()) r.min_exp_ += k;
        return r;
    }

    LaurentPoly scaled(const Integer& c) const {
        if (c == 0) return {};
        LaurentPoly r = *this;
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }

    /// Sum of all coefficients, i.e. the value at w = 1.
    Integer eval_at_one() const {
        Integer s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long e = max_exp(); e >= min_exp(); --e) {
            const Integer& c = coeff(e);
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Integer a = abs_int(c);
            if (a != 1 || e == 0) os << a.str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << "w";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) {
        return os << f.to_string();
    }

  private:
    long min_exp_ = 0;
    std::vector<Integer> coeffs_;

    void normalize() {
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            min_exp_ = 0;
            return;
        }
        std::size_t tail = coeffs_.size();
        while (tail > lead && coeffs_[tail - 1] == 0) --tail;
        if (lead > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        coeffs_.resize(tail - lead);
        min_exp_ += static_cast<long>(lead);
    }

    void reserve_window(long lo, long hi) {
        if (lo < min_exp_) {
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_exp_ - lo), Integer(0));
            min_exp_ = lo;
        }
        if (hi > max_exp()) coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(hi - max_exp()), Integer(0));
    }

    static constexpr std::size_t kKaratsubaThreshold = 48;

    static std::vector<Integer> mul_dense(const std::vector<Integer>& a, const std::vector<Integer>& b) {
        if (std::min(a.size(), b.size()) < kKaratsubaThreshold) return mul_schoolbook(a, b);
        return mul_karatsuba(a, b);
    }

    static std::vector<Integer> mul_schoolbook(const std::vector<Integer>& a, const std::vector<Integer>& b) {
        std::vector<Integer> r(a.size() + b.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (b[j] != 0) r[i + j] += a[i] * b[j];
            }
        }
        return r;
    }

    static std::vector<Integer> mul_karatsuba(const std::vector<Integer>& a, const std::vector<Integer>& b) {
        std::size_t n = std::max(a.size(), b.size());
        if (std::min(a.size(), b.size()) < kKaratsubaThreshold) return mul_schoolbook(a, b);
        std::size_t h = n / 2;
        auto split = [h](const std::vector<Integer>& v) {
            std::vector<Integer> lo(v.begin(), v.begin() + static_cast<long>(std::min(h, v.size())));
            std::vector<Integer> hi(v.size() > h ? v.begin() + static_cast<long>(h) : v.end(), v.end());
            if (lo.empty()) lo.push_back(0);
            if (hi.empty()) hi.push_back(0);
            return std::pair(std::move(lo), std::move(hi));
        };
        auto [a0, a1] = split(a);
        auto [b0, b1] = split(b);
        std::vector<Integer> z0 = mul_karatsuba(a0, b0);
        std::vector<Integer> z2 = mul_karatsuba(a1, b1);
        auto vec_add = [](std::vector<Integer> x, const std::vector<Integer>& y) {
            if (x.size() < y.size()) x.resize(y.size(), Integer(0));
            for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i];
            return x;
        };
        std::vector<Integer> z1 = mul_karatsuba(vec_add(a0, a1), vec_add(b0, b1));
        for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
        for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
        std::vector<Integer> r(a.size() + b.size() - 1, Integer(0));
        for (std::size_t i = 0; i < z0.size() && i < r.size(); ++i) r[i] += z0[i];
        for (std::size_t i = 0; i < z1.size() && i + h < r.size(); ++i) r[i + h] += z1[i];
        for (std::size_t i = 0; i < z2.size() && i + 2 * h < r.size(); ++i) r[i + 2 * h] += z2[i];
        return r;
    }
};

/// Outcome of exact Laurent division f = quotient * g + remainder.
///
/// Division runs over exact rationals; `divisible` means the rational
/// remainder vanished. `quotient` is populated only when the quotient also
/// certified as integral (always the case for monic divisors such as
/// cyclotomics). A nonzero remainder is reported cleared of denominators, so
/// for monic divisors it is the exact remainder.
struct DivisionResult {
    bool divisible = false;
    bool quotient_integral = false;
    LaurentPoly quotient;
    LaurentPoly remainder;
};

inline DivisionResult divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    DivisionResult res;
    if (f.is_zero()) {
        res.divisible = true;
        res.quotient_integral = true;
        return res;
    }
    // Shift both operands to ordinary polynomials; w is a unit, so this does
    // not affect divisibility.
    const long fa = f.min_exp();
    const long gb = g.min_exp();
    std::vector<Rational> a(f.coeffs().begin(), f.coeffs().end());
    const std::vector<Integer>& d = g.coeffs();
    const long db = static_cast<long>(d.size()) - 1;
    const Rational lead(d.back());

    std::vector<Rational> q;
    long da = static_cast<long>(a.size()) - 1;
    if (da >= db) {
        q.assign(static_cast<std::size_t>(da - db + 1), Rational(0));
        for (long k = da - db; k >= 0; --k) {
            Rational qc = a[static_cast<std::size_t>(k + db)] / lead;
            q[static_cast<std::size_t>(k)] = qc;
            if (qc != 0)
                for (long j = 0; j <= db; ++j)
                    a[static_cast<std::size_t>(k + j)] -= qc * Rational(d[static_cast<std::size_t>(j)]);
        }
    }

    bool rem_zero = std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
    if (rem_zero) {
        res.divisible = true;
        res.quotient_integral =
            std::all_of(q.begin(), q.end(), [](const Rational& x) { return denominator(x) == 1; });
        if (res.quotient_integral) {
            std::vector<Integer> qi(q.size());
            for (std::size_t i = 0; i < q.size(); ++i) qi[i] = numerator(q[i]);
            res.quotient = LaurentPoly::from_coeffs(fa - gb, std::move(qi));
        }
        return res;
    }
    Integer den = 1;
    for (const auto& x : a)
        if (x != 0) den = lcm(den, denominator(x));
    std::vector<Integer> ri(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        ri[i] = numerator(a[i]) * (den / denominator(a[i]));
    res.remainder = LaurentPoly::from_coeffs(fa, std::move(ri));
    return res;
}

}  // namespace partpoly

#endif
