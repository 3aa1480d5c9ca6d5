#include "ellocal/arith.hpp"

#include "ellocal/errors.hpp"

#include <algorithm>
#include <map>

namespace ellocal {

Rational make_rational(Integer const& num, Integer const& den)
{
    if (den == 0)
        throw ArithmeticError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string const& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(text));
        return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (std::invalid_argument const&) {
        throw ParseError("not a rational number: '" + text + "'");
    } catch (ArithmeticError const&) {
        throw ParseError("zero denominator in '" + text + "'");
    }
}

std::string to_string(Integer const& x) { return x.get_str(); }
std::string to_string(Rational const& x) { return x.get_str(); }

bool is_integral(Rational const& x) { return x.get_den() == 1; }

bool is_prime(Integer const& n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Integer next_prime(Integer const& n)
{
    Integer r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer power(Integer const& base, unsigned long exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Integer mod(Integer const& a, Integer const& m)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer inverse_mod(Integer const& a, Integer const& m)
{
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw ArithmeticError("not invertible modulo " + m.get_str());
    return r;
}

int legendre(Integer const& a, Integer const& ell)
{
    return mpz_legendre(a.get_mpz_t(), ell.get_mpz_t());
}

int valuation(Integer const& x, Integer const& ell)
{
    if (x == 0)
        throw ArithmeticError("valuation of zero undefined");
    if (ell < 2)
        throw DomainError("valuation base must be >= 2");
    Integer t = x;
    int v = 0;
    while (mpz_divisible_p(t.get_mpz_t(), ell.get_mpz_t())) {
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), ell.get_mpz_t());
        ++v;
    }
    return v;
}

int valuation(Rational const& x, Integer const& ell)
{
    if (x == 0)
        throw ArithmeticError("valuation of zero undefined");
    return valuation(Integer(x.get_num()), ell) - valuation(Integer(x.get_den()), ell);
}

Integer unit_part(Integer const& x, Integer const& ell)
{
    Integer t = x;
    while (t != 0 && mpz_divisible_p(t.get_mpz_t(), ell.get_mpz_t()))
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), ell.get_mpz_t());
    return t;
}

bool is_square_local(Rational const& x, Integer const& ell)
{
    if (x == 0)
        throw ArithmeticError("square test of zero");
    if (valuation(x, ell) % 2 != 0)
        return false;
    /* u = n/d and n*d differ by the square d^2 */
    Integer u = unit_part(Integer(x.get_num()), ell) * unit_part(Integer(x.get_den()), ell);
    if (ell == 2)
        return mod(u, 8) == 1;
    return legendre(u, ell) == 1;
}

bool is_rational_square(Rational const& x)
{
    if (x < 0)
        return false;
    return mpz_perfect_square_p(x.get_num_mpz_t()) && mpz_perfect_square_p(x.get_den_mpz_t());
}

namespace {

Integer pollard_brent(Integer const& n)
{
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        auto f = [&](Integer const& v) { return mod(v * v + c, n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(128ul, r - k); ++i) {
                    y = f(y);
                    q = mod(q * abs(x - y), n);
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += 128;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_into(Integer const& n, std::map<Integer, int>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, int>> factor(Integer const& n)
{
    if (n == 0)
        throw ArithmeticError("cannot factor zero");
    Integer m = abs(n);
    std::map<Integer, int> primes;
    for (unsigned long p = 2; p < 1000 && m > 1; ++p) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++primes[Integer(p)];
            m /= p;
        }
    }
    factor_into(m, primes);
    return {primes.begin(), primes.end()};
}

std::vector<Integer> prime_divisors(Integer const& n)
{
    std::vector<Integer> out;
    for (auto const& [p, e] : factor(n))
        out.push_back(p);
    return out;
}

}  // namespace ellocal
