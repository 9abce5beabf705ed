#ifndef PARTPOLY_COMMON_HPP
#define PARTPOLY_COMMON_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace partpoly {

// Exact arbitrary-precision scalars. Every algebraic value in the library is
// an Integer; Rational appears only transiently inside exact division.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct NotAUnitError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DivergentProductError : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnsupportedModulusError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OutOfScopeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotATCoreError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroConstantTermError : std::domain_error {
    using std::domain_error::domain_error;
};

// Two mathematically equivalent routes disagreed on the same input. This is
// never a recoverable condition: it means the build itself is wrong.
struct InternalInconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

struct NoConvergenceError : std::runtime_error {
    int iterations;
    double worst_residual;
    NoConvergenceError(int iters, double residual)
        : std::runtime_error("root solve failed to converge after " + std::to_string(iters) +
                             " sweeps (worst residual " + std::to_string(residual) + ")"),
          iterations(iters),
          worst_residual(residual) {}
};

inline Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace partpoly

#endif
