#ifndef ELLOCAL_POLYNOMIAL_HPP_
#define ELLOCAL_POLYNOMIAL_HPP_

#include "ellocal/arith.hpp"

#include <span>
#include <string>
#include <vector>

namespace ellocal {

/* Dense univariate polynomial over Z, coefficients indexed by degree.
 * The coefficient vector never carries leading zeros. */
class IntegerPolynomial {
  public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<Integer> coefficients);
    IntegerPolynomial(std::initializer_list<long> coefficients);

    static IntegerPolynomial monomial(Integer const& c, int degree);

    /* -1 for the zero polynomial */
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Integer const& coeff(int i) const;
    Integer const& leading() const;
    std::span<Integer const> coefficients() const { return coeffs_; }

    Integer evaluate(Integer const& x) const;
    Rational evaluate(Rational const& x) const;
    IntegerPolynomial derivative() const;
    Integer content() const;
    IntegerPolynomial primitive_part() const;

    IntegerPolynomial& operator+=(IntegerPolynomial const& o);
    IntegerPolynomial& operator-=(IntegerPolynomial const& o);
    IntegerPolynomial& operator*=(Integer const& c);

    friend IntegerPolynomial operator+(IntegerPolynomial a, IntegerPolynomial const& b) { return a += b; }
    friend IntegerPolynomial operator-(IntegerPolynomial a, IntegerPolynomial const& b) { return a -= b; }
    friend IntegerPolynomial operator*(IntegerPolynomial const& a, IntegerPolynomial const& b);
    friend IntegerPolynomial operator*(IntegerPolynomial a, Integer const& c) { return a *= c; }
    friend bool operator==(IntegerPolynomial const&, IntegerPolynomial const&) = default;

    std::string to_string() const;

  private:
    void trim();
    std::vector<Integer> coeffs_;
};

IntegerPolynomial pow(IntegerPolynomial const& f, unsigned n);

/* Exact division over Z; throws ArithmeticError if b does not divide a. */
IntegerPolynomial divide_exact(IntegerPolynomial const& a, IntegerPolynomial const& b);

/* gcd over Z[x], primitive with positive leading coefficient. */
IntegerPolynomial gcd(IntegerPolynomial const& a, IntegerPolynomial const& b);

/* Primitive squarefree part: same roots as f, each with multiplicity one. */
IntegerPolynomial squarefree_part(IntegerPolynomial const& f);

/* Is f mod q squarefree of the same degree? */
bool is_squarefree_mod(IntegerPolynomial const& f, Integer const& q);

/* Distinct rational roots of a nonzero f, ascending. */
std::vector<Rational> rational_roots(IntegerPolynomial const& f);

/* Distinct roots in [0, ell) of f mod ell; f must not vanish mod ell. */
std::vector<Integer> roots_mod_prime(IntegerPolynomial const& f, Integer const& ell);

}  // namespace ellocal

#endif /* ELLOCAL_POLYNOMIAL_HPP_ */
