#include "ellocal/polynomial.hpp"

#include "ellocal/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ellocal {

IntegerPolynomial::IntegerPolynomial(std::vector<Integer> coefficients)
    : coeffs_(std::move(coefficients))
{
    trim();
}

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long> coefficients)
{
    for (long c : coefficients)
        coeffs_.emplace_back(c);
    trim();
}

IntegerPolynomial IntegerPolynomial::monomial(Integer const& c, int degree)
{
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntegerPolynomial(std::move(v));
}

void IntegerPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Integer const& IntegerPolynomial::coeff(int i) const
{
    static const Integer zero = 0;
    if (i < 0 || i > degree())
        return zero;
    return coeffs_[i];
}

Integer const& IntegerPolynomial::leading() const
{
    if (is_zero())
        throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Integer IntegerPolynomial::evaluate(Integer const& x) const
{
    Integer r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * x + *it;
    return r;
}

Rational IntegerPolynomial::evaluate(Rational const& x) const
{
    Rational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * x + Rational(*it);
    return r;
}

IntegerPolynomial IntegerPolynomial::derivative() const
{
    std::vector<Integer> d;
    for (int i = 1; i <= degree(); ++i)
        d.push_back(coeffs_[i] * i);
    return IntegerPolynomial(std::move(d));
}

Integer IntegerPolynomial::content() const
{
    Integer g = 0;
    for (auto const& c : coeffs_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntegerPolynomial IntegerPolynomial::primitive_part() const
{
    if (is_zero())
        return *this;
    Integer g = content();
    if (leading() < 0)
        g = -g;
    std::vector<Integer> v;
    for (auto const& c : coeffs_)
        v.push_back(c / g);
    return IntegerPolynomial(std::move(v));
}

IntegerPolynomial& IntegerPolynomial::operator+=(IntegerPolynomial const& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntegerPolynomial& IntegerPolynomial::operator-=(IntegerPolynomial const& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntegerPolynomial& IntegerPolynomial::operator*=(Integer const& c)
{
    for (auto& x : coeffs_)
        x *= c;
    trim();
    return *this;
}

IntegerPolynomial operator*(IntegerPolynomial const& a, IntegerPolynomial const& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    return IntegerPolynomial(std::move(r));
}

std::string IntegerPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Integer const& c = coeffs_[i];
        if (c == 0)
            continue;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        Integer a = abs(c);
        if (a != 1 || i == 0)
            os << a;
        if (i > 0)
            os << "x";
        if (i > 1)
            os << "^" << i;
        first = false;
    }
    return os.str();
}

IntegerPolynomial pow(IntegerPolynomial const& f, unsigned n)
{
    IntegerPolynomial r{1};
    for (unsigned i = 0; i < n; ++i)
        r = r * f;
    return r;
}

namespace {

/* lc(b)^(deg a - deg b + 1) * a mod b */
IntegerPolynomial pseudo_remainder(IntegerPolynomial a, IntegerPolynomial const& b)
{
    int db = b.degree();
    Integer const& lb = b.leading();
    int steps = a.degree() - db + 1;
    while (!a.is_zero() && a.degree() >= db) {
        Integer la = a.leading();
        int shift = a.degree() - db;
        a *= lb;
        a -= IntegerPolynomial::monomial(la, shift) * b;
        --steps;
    }
    if (steps > 0)
        a *= power(lb, steps);
    return a;
}

/* Polynomials over F_ell as coefficient vectors with entries in [0, ell). */
struct ModRing {
    Integer ell;
    using Poly = std::vector<Integer>;

    void trim(Poly& a) const
    {
        while (!a.empty() && a.back() == 0)
            a.pop_back();
    }
    Poly reduce(IntegerPolynomial const& f) const
    {
        Poly r;
        for (auto const& c : f.coefficients())
            r.push_back(mod(c, ell));
        trim(r);
        return r;
    }
    Poly monic(Poly a) const
    {
        Integer inv = inverse_mod(a.back(), ell);
        for (auto& c : a)
            c = mod(c * inv, ell);
        return a;
    }
    Poly sub(Poly a, Poly const& b) const
    {
        if (b.size() > a.size())
            a.resize(b.size());
        for (size_t i = 0; i < b.size(); ++i)
            a[i] = mod(a[i] - b[i], ell);
        trim(a);
        return a;
    }
    Poly mul(Poly const& a, Poly const& b) const
    {
        if (a.empty() || b.empty())
            return {};
        Poly r(a.size() + b.size() - 1);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        for (auto& c : r)
            c = mod(c, ell);
        trim(r);
        return r;
    }
    /* quotient and remainder by a monic divisor */
    std::pair<Poly, Poly> divmod(Poly a, Poly const& m) const
    {
        size_t dm = m.size() - 1;
        if (a.size() <= dm)
            return {{}, a};
        Poly q(a.size() - dm);
        for (size_t i = a.size(); i-- > dm;) {
            Integer c = a[i];
            if (c == 0)
                continue;
            q[i - dm] = c;
            for (size_t j = 0; j <= dm; ++j)
                a[i - dm + j] = mod(a[i - dm + j] - c * m[j], ell);
        }
        trim(a);
        trim(q);
        return {q, a};
    }
    Poly rem(Poly const& a, Poly const& m) const { return divmod(a, m).second; }
    Poly gcd(Poly a, Poly b) const
    {
        while (!b.empty()) {
            b = monic(b);
            Poly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return a.empty() ? a : monic(a);
    }
    Poly powmod(Poly base, Integer e, Poly const& m) const
    {
        Poly r{1};
        base = rem(base, m);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t()))
                r = rem(mul(r, base), m);
            base = rem(mul(base, base), m);
            e >>= 1;
        }
        return r;
    }
    Integer eval(Poly const& a, Integer const& x) const
    {
        Integer r = 0;
        for (auto it = a.rbegin(); it != a.rend(); ++it)
            r = mod(r * x + *it, ell);
        return r;
    }

    /* d is monic, a product of distinct linear factors */
    void split(Poly const& d, std::vector<Integer>& roots) const
    {
        if (d.size() == 2) {
            roots.push_back(mod(-d[0], ell));
            return;
        }
        Integer half = (ell - 1) / 2;
        for (long a = 1;; ++a) {
            Poly w = sub(powmod(Poly{Integer(a), 1}, half, d), Poly{1});
            Poly e = gcd(d, w);
            if (e.size() > 1 && e.size() < d.size()) {
                split(e, roots);
                split(divmod(d, e).first, roots);
                return;
            }
        }
    }
};

}  // namespace

IntegerPolynomial divide_exact(IntegerPolynomial const& a, IntegerPolynomial const& b)
{
    if (b.is_zero())
        throw ArithmeticError("division by the zero polynomial");
    std::vector<Integer> rem(a.coefficients().begin(), a.coefficients().end());
    int db = b.degree();
    if (a.degree() < db) {
        if (!a.is_zero())
            throw ArithmeticError("inexact polynomial division");
        return {};
    }
    std::vector<Integer> q(a.degree() - db + 1);
    for (int i = a.degree(); i >= db; --i) {
        if (!mpz_divisible_p(rem[i].get_mpz_t(), b.leading().get_mpz_t()))
            throw ArithmeticError("inexact polynomial division");
        Integer c = rem[i] / b.leading();
        q[i - db] = c;
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] -= c * b.coeff(j);
    }
    for (auto const& r : rem)
        if (r != 0)
            throw ArithmeticError("inexact polynomial division");
    return IntegerPolynomial(std::move(q));
}

IntegerPolynomial gcd(IntegerPolynomial const& a, IntegerPolynomial const& b)
{
    IntegerPolynomial x = a.primitive_part(), y = b.primitive_part();
    if (x.degree() < y.degree())
        std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0)
            return IntegerPolynomial{1};
        IntegerPolynomial r = pseudo_remainder(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

IntegerPolynomial squarefree_part(IntegerPolynomial const& f)
{
    if (f.degree() <= 0)
        return f.primitive_part();
    /* coprime to f' modulo a large prime not dividing lc(f) => squarefree */
    ModRing ring{Integer("2305843009213693951")};
    if (mod(f.leading(), ring.ell) != 0) {
        auto fr = ring.reduce(f);
        auto dr = ring.reduce(f.derivative());
        if (!dr.empty() && ring.gcd(fr, dr).size() == 1)
            return f.primitive_part();
    }
    IntegerPolynomial g = gcd(f, f.derivative());
    return divide_exact(f.primitive_part(), g).primitive_part();
}

bool is_squarefree_mod(IntegerPolynomial const& f, Integer const& q)
{
    ModRing ring{q};
    if (f.is_zero() || mod(f.leading(), q) == 0)
        return false;
    if (f.degree() == 0)
        return true;
    auto dr = ring.reduce(f.derivative());
    return !dr.empty() && ring.gcd(ring.reduce(f), dr).size() == 1;
}

std::vector<Rational> rational_roots(IntegerPolynomial const& f)
{
    if (f.is_zero())
        throw DomainError("roots of the zero polynomial");
    IntegerPolynomial g = squarefree_part(f);
    std::vector<Rational> roots;
    if (g.degree() < 1)
        return roots;
    /* x = y / lc with y an integer root of the monic lc^(d-1) g(y / lc) */
    int d = g.degree();
    Integer lc = g.leading();
    std::vector<Integer> mc(d + 1);
    for (int i = 0; i < d; ++i)
        mc[i] = g.coeff(i) * power(lc, d - 1 - i);
    mc[d] = 1;
    IntegerPolynomial monic(std::move(mc));

    /* Cauchy bound on integer roots */
    Integer bound = 0;
    for (int i = 0; i < d; ++i)
        bound = std::max(bound, Integer(abs(monic.coeff(i))));
    bound += 1;

    Integer q = 3;
    while (!is_squarefree_mod(monic, q))
        q = next_prime(q);
    Integer modulus = q;
    while (modulus <= 2 * bound)
        modulus *= modulus;
    IntegerPolynomial dm = monic.derivative();
    for (Integer r : roots_mod_prime(monic, q)) {
        /* Newton lifting from q to modulus; the root is simple mod q */
        Integer m = q;
        while (m < modulus) {
            m = std::min(Integer(m * m), modulus);
            r = mod(r - monic.evaluate(r) * inverse_mod(dm.evaluate(r), m), m);
        }
        if (r > modulus / 2)
            r -= modulus;
        if (monic.evaluate(r) == 0)
            roots.push_back(make_rational(r, lc));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Integer> roots_mod_prime(IntegerPolynomial const& f, Integer const& ell)
{
    ModRing ring{ell};
    auto g = ring.reduce(f);
    if (g.empty())
        throw DomainError("polynomial vanishes modulo " + ell.get_str());
    std::vector<Integer> roots;
    if (g.size() == 1)
        return roots;
    if (ell < 64) {
        for (Integer x = 0; x < ell; ++x)
            if (ring.eval(g, x) == 0)
                roots.push_back(x);
        return roots;
    }
    g = ring.monic(g);
    auto xp = ring.powmod(ModRing::Poly{0, 1}, ell, g);
    auto d = ring.gcd(g, ring.sub(xp, ModRing::Poly{0, 1}));
    if (d.size() > 1)
        ring.split(d, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace ellocal
