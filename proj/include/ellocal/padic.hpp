#ifndef ELLOCAL_PADIC_HPP_
#define ELLOCAL_PADIC_HPP_

#include "ellocal/arith.hpp"
#include "ellocal/polynomial.hpp"

#include <optional>
#include <vector>

namespace ellocal {

/* Working precision for computations in Q_ell: residues are carried modulo
 * ell^precision, and callers that must decide something escalate the
 * precision (doubling) until max_precision. */
struct PadicContext {
    Integer prime;
    int precision = 20;
    int max_precision = 2048;

    /* Initial precision of 20 * deg(f) digits. */
    static PadicContext for_polynomial(Integer prime, IntegerPolynomial const& f, int max_precision = 2048);
};

/* An element of Q_ell known to finite precision:
 *   exact zero, or
 *   ell^valuation * unit with the unit known modulo ell^relative_precision, or
 *   (relative_precision == 0) some element of ell^valuation Z_ell. */
struct PadicNumber {
    bool exact_zero = false;
    int valuation = 0;
    Integer unit;
    int relative_precision = 0;

    static PadicNumber zero() { return {true, 0, 0, 0}; }
    bool is_indeterminate() const { return !exact_zero && relative_precision == 0; }
    /* ell^valuation * unit as a rational approximation */
    Rational approximation(Integer const& ell) const;
};

/* Value of f at x, with the precision that survives the evaluation. */
PadicNumber evaluate(IntegerPolynomial const& f, PadicNumber const& x, Integer const& ell);

/* Square test in Q_ell; nullopt when x is not known precisely enough. */
std::optional<bool> is_square(PadicNumber const& x, Integer const& ell);

/* Roots of f in Q_ell at one fixed precision (no escalation). Throws
 * UndecidedError if some residue class cannot be resolved at that precision. */
std::vector<PadicNumber> padic_roots_at(IntegerPolynomial const& f, Integer const& ell, int precision);

struct PadicRoots {
    std::vector<PadicNumber> roots;
    int precision = 0; /* precision at which every class was decided */
};

/* Roots of f in Q_ell, escalating ctx.precision up to ctx.max_precision. */
PadicRoots padic_roots(IntegerPolynomial const& f, PadicContext const& ctx);

/* Number of distinct roots of f in Q_ell. */
int count_roots_padic(IntegerPolynomial const& f, PadicContext const& ctx);

}  // namespace ellocal

#endif /* ELLOCAL_PADIC_HPP_ */
