#include "ellocal/padic.hpp"

#include "ellocal/errors.hpp"

#include <algorithm>
#include <limits>

namespace ellocal {

namespace {

constexpr int exact_precision = std::numeric_limits<int>::max();

/* c * ell^k, exact for negative k */
Integer shift(Integer const& c, Integer const& ell, long k)
{
    if (k >= 0)
        return c * power(ell, k);
    Integer d = power(ell, -k);
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
        throw AlgorithmInvariantError("inexact ell-adic shift");
    return c / d;
}

PadicNumber from_exact(Rational const& value, Integer const& ell)
{
    if (value == 0)
        return PadicNumber::zero();
    int v = valuation(value, ell);
    Integer num = unit_part(Integer(value.get_num()), ell);
    Integer den = unit_part(Integer(value.get_den()), ell);
    /* the unit num/den is stored through num*den, which has the same
     * quadratic character and the same class mod 8 */
    return {false, v, num * den, exact_precision};
}

PadicNumber from_residue(Integer const& value, int base_valuation, int absolute_precision, Integer const& ell)
{
    if (value == 0)
        return {false, base_valuation + absolute_precision, 0, 0};
    int w = valuation(value, ell);
    int rp = absolute_precision - w;
    return {false, base_valuation + w, mod(unit_part(value, ell), power(ell, rp)), rp};
}

/* Residue-class tree search for the roots of g in Z_ell with g(0) mod ell
 * not required to vanish. Roots are returned as units when units_only. */
class IntegralRootSearch {
  public:
    IntegralRootSearch(Integer ell, int precision) : ell_(std::move(ell)), precision_(precision) {}

    std::vector<PadicNumber> unit_roots(IntegerPolynomial const& h)
    {
        std::vector<PadicNumber> out;
        Node start{reduce(h, precision_), precision_, 0, 0};
        std::vector<Node> stack{std::move(start)};
        while (!stack.empty()) {
            Node node = std::move(stack.back());
            stack.pop_back();
            expand(std::move(node), stack, out);
        }
        return out;
    }

  private:
    struct Node {
        std::vector<Integer> g; /* residues modulo ell^digits */
        int digits;
        Integer offset;         /* y = offset + ell^depth * z */
        int depth;
    };

    std::vector<Integer> reduce(IntegerPolynomial const& h, int digits) const
    {
        Integer m = power(ell_, digits);
        std::vector<Integer> g;
        for (auto const& c : h.coefficients())
            g.push_back(mod(c, m));
        return g;
    }

    static Integer eval(std::vector<Integer> const& g, Integer const& z, Integer const& m)
    {
        Integer r = 0;
        for (auto it = g.rbegin(); it != g.rend(); ++it)
            r = mod(r * z + *it, m);
        return r;
    }

    static std::vector<Integer> derivative(std::vector<Integer> const& g)
    {
        std::vector<Integer> d;
        for (size_t i = 1; i < g.size(); ++i)
            d.push_back(g[i] * static_cast<unsigned long>(i));
        return d;
    }

    void expand(Node node, std::vector<Node>& stack, std::vector<PadicNumber>& out)
    {
        int c = std::numeric_limits<int>::max();
        for (auto const& a : node.g)
            if (a != 0)
                c = std::min(c, valuation(a, ell_));
        if (c == std::numeric_limits<int>::max() || c >= node.digits)
            throw UndecidedError(precision_);
        if (c > 0) {
            Integer d = power(ell_, c);
            for (auto& a : node.g)
                mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
            node.digits -= c;
        }

        Integer m = power(ell_, node.digits);
        auto dg = derivative(node.g);
        IntegerPolynomial residue(node.g);
        for (Integer const& r : roots_mod_prime(residue, ell_)) {
            if (node.depth == 0 && r == 0)
                continue;
            if (mod(eval(dg, r, ell_), ell_) != 0) {
                Integer z = r;
                for (;;) {
                    Integer gz = eval(node.g, z, m);
                    if (gz == 0)
                        break;
                    z = mod(z - gz * inverse_mod(eval(dg, z, m), m), m);
                }
                int rp = node.depth + node.digits;
                Integer y = mod(node.offset + power(ell_, node.depth) * z, power(ell_, rp));
                out.push_back({false, 0, y, rp});
            } else {
                stack.push_back({substitute(node.g, r, m), node.digits,
                                 node.offset + power(ell_, node.depth) * r, node.depth + 1});
            }
        }
    }

    /* g(r + ell z) modulo m */
    std::vector<Integer> substitute(std::vector<Integer> g, Integer const& r, Integer const& m) const
    {
        size_t n = g.size();
        for (size_t i = 0; i + 1 < n; ++i)
            for (size_t j = n - 1; j > i; --j)
                g[j - 1] = mod(g[j - 1] + r * g[j], m);
        Integer scale = 1;
        for (auto& a : g) {
            a = mod(a * scale, m);
            scale *= ell_;
        }
        return g;
    }

    Integer ell_;
    int precision_;
};

}  // namespace

PadicContext PadicContext::for_polynomial(Integer prime, IntegerPolynomial const& f, int max_precision)
{
    return {std::move(prime), std::clamp(20 * f.degree(), 1, std::max(1, max_precision)), max_precision};
}

Rational PadicNumber::approximation(Integer const& ell) const
{
    if (exact_zero)
        return 0;
    if (valuation >= 0)
        return Rational(unit * power(ell, valuation));
    return make_rational(unit, power(ell, -valuation));
}

PadicNumber evaluate(IntegerPolynomial const& f, PadicNumber const& x, Integer const& ell)
{
    if (x.exact_zero || x.relative_precision == exact_precision)
        return from_exact(f.evaluate(x.approximation(ell)), ell);
    int d = f.degree();
    if (x.valuation >= 0) {
        int abs_prec = x.valuation + x.relative_precision;
        Integer m = power(ell, abs_prec);
        Integer X = mod(x.unit * power(ell, x.valuation), m);
        Integer g = 0;
        for (int i = d; i >= 0; --i)
            g = mod(g * X + f.coeff(i), m);
        return from_residue(g, 0, abs_prec, ell);
    }
    /* f(ell^-s u) = ell^(-s d) * sum c_i u^i ell^(s (d - i)) */
    long s = -x.valuation;
    if (x.relative_precision == 0)
        return {false, static_cast<int>(-s * d), 0, 0};
    Integer m = power(ell, x.relative_precision);
    Integer h = 0;
    for (int i = d; i >= 0; --i)
        h = mod(h * x.unit + f.coeff(i) * power(ell, s * (d - i)), m);
    return from_residue(h, static_cast<int>(-s * d), x.relative_precision, ell);
}

std::optional<bool> is_square(PadicNumber const& x, Integer const& ell)
{
    if (x.exact_zero)
        return true;
    if (x.is_indeterminate())
        return std::nullopt;
    if (x.valuation % 2 != 0)
        return false;
    if (ell == 2) {
        if (x.relative_precision < 3)
            return std::nullopt;
        return mod(x.unit, 8) == 1;
    }
    return legendre(x.unit, ell) == 1;
}

std::vector<PadicNumber> padic_roots_at(IntegerPolynomial const& f, Integer const& ell, int precision)
{
    if (f.is_zero())
        throw DomainError("root count of the zero polynomial");
    if (f.degree() == 0)
        throw DomainError("root count of a constant polynomial");
    if (!is_prime(ell))
        throw DomainError("p-adic context needs a prime, got " + ell.get_str());
    if (precision < 1)
        throw DomainError("p-adic precision must be >= 1");

    std::vector<PadicNumber> roots;
    IntegerPolynomial g = squarefree_part(f);
    if (g.coeff(0) == 0) {
        roots.push_back(PadicNumber::zero());
        auto c = g.coefficients();
        g = IntegerPolynomial(std::vector<Integer>(c.begin() + 1, c.end()));
    }
    if (g.degree() < 1)
        return roots;

    /* lower convex hull of (i, v(c_i)) */
    std::vector<std::pair<long, long>> pts;
    for (int i = 0; i <= g.degree(); ++i)
        if (g.coeff(i) != 0)
            pts.emplace_back(i, valuation(g.coeff(i), ell));
    std::vector<std::pair<long, long>> hull;
    for (auto const& pt : pts) {
        while (hull.size() >= 2) {
            auto const& a = hull[hull.size() - 2];
            auto const& b = hull.back();
            /* drop b unless it lies strictly below segment a-pt */
            if ((b.second - a.second) * (pt.first - a.first) >= (pt.second - a.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }

    IntegralRootSearch search(ell, precision);
    for (size_t s = 0; s + 1 < hull.size(); ++s) {
        long rise = hull[s + 1].second - hull[s].second;
        long run = hull[s + 1].first - hull[s].first;
        if (rise % run != 0)
            continue; /* no roots of non-integral valuation in Q_ell */
        long w = -rise / run;
        long base = hull[s].second + w * hull[s].first;
        std::vector<Integer> h;
        for (int i = 0; i <= g.degree(); ++i)
            h.push_back(g.coeff(i) == 0 ? Integer(0) : shift(g.coeff(i), ell, w * i - base));
        for (auto& y : search.unit_roots(IntegerPolynomial(std::move(h)))) {
            y.valuation = static_cast<int>(w);
            roots.push_back(std::move(y));
        }
    }
    return roots;
}

PadicRoots padic_roots(IntegerPolynomial const& f, PadicContext const& ctx)
{
    int n = std::max(1, ctx.precision);
    for (;;) {
        try {
            return {padic_roots_at(f, ctx.prime, n), n};
        } catch (UndecidedError const&) {
            if (n >= ctx.max_precision)
                throw UndecidedError(n);
            n = std::min(2 * n, ctx.max_precision);
        }
    }
}

int count_roots_padic(IntegerPolynomial const& f, PadicContext const& ctx)
{
    return static_cast<int>(padic_roots(f, ctx).roots.size());
}

}  // namespace ellocal
