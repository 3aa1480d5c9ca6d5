#ifndef ELLOCAL_ARITH_HPP_
#define ELLOCAL_ARITH_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ellocal {

using Integer = mpz_class;
/* mpq_class values are kept canonical: lowest terms, positive denominator. */
using Rational = mpq_class;

Rational make_rational(Integer const& num, Integer const& den);
Rational parse_rational(std::string const& text);
std::string to_string(Integer const& x);
std::string to_string(Rational const& x);

bool is_integral(Rational const& x);
bool is_prime(Integer const& n);
Integer next_prime(Integer const& n);
Integer power(Integer const& base, unsigned long exponent);

/* Nonnegative residue of a modulo m (m > 0). */
Integer mod(Integer const& a, Integer const& m);
Integer inverse_mod(Integer const& a, Integer const& m);
/* Legendre symbol (a / ell) for an odd prime ell, in {-1, 0, 1}. */
int legendre(Integer const& a, Integer const& ell);

/* ell-adic valuation; throws ArithmeticError on zero. */
int valuation(Integer const& x, Integer const& ell);
int valuation(Rational const& x, Integer const& ell);
/* x with every factor of ell removed (keeps the sign). */
Integer unit_part(Integer const& x, Integer const& ell);

/* Is the nonzero rational x a square in Q_ell? */
bool is_square_local(Rational const& x, Integer const& ell);
bool is_rational_square(Rational const& x);

/* Prime factorization of |n| (n != 0) as (prime, exponent), primes ascending. */
std::vector<std::pair<Integer, int>> factor(Integer const& n);
std::vector<Integer> prime_divisors(Integer const& n);

}  // namespace ellocal

#endif /* ELLOCAL_ARITH_HPP_ */
