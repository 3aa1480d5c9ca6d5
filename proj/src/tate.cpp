#include "ellocal/tate.hpp"

#include "ellocal/errors.hpp"
#include "ellocal/polynomial.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <sstream>

namespace ellocal {

/* ---------------------------------------------------------------------- */
/* FiniteAbelianGroup */

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors))
{
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] <= 1)
            throw DomainError("invariant factors must exceed 1");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw DomainError("invariant factors must form a divisibility chain");
    }
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(std::int64_t n)
{
    if (n < 1)
        throw DomainError("cyclic group order must be positive");
    return n == 1 ? FiniteAbelianGroup() : FiniteAbelianGroup({n});
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_factors(std::vector<std::int64_t> orders)
{
    /* prime -> exponents of the prime-power parts */
    std::map<std::int64_t, std::vector<std::int64_t>> parts;
    for (std::int64_t n : orders) {
        if (n < 1)
            throw DomainError("cyclic group order must be positive");
        for (std::int64_t q = 2; q * q <= n; ++q) {
            std::int64_t pp = 1;
            while (n % q == 0) {
                n /= q;
                pp *= q;
            }
            if (pp > 1)
                parts[q].push_back(pp);
        }
        if (n > 1)
            parts[n].push_back(n);
    }
    size_t k = 0;
    for (auto& [q, v] : parts) {
        std::sort(v.begin(), v.end(), std::greater<>());
        k = std::max(k, v.size());
    }
    std::vector<std::int64_t> factors(k, 1);
    for (auto const& [q, v] : parts)
        for (size_t i = 0; i < v.size(); ++i)
            factors[k - 1 - i] *= v[i];
    return FiniteAbelianGroup(std::move(factors));
}

std::int64_t FiniteAbelianGroup::order() const
{
    std::int64_t n = 1;
    for (auto d : factors_)
        n *= d;
    return n;
}

std::int64_t FiniteAbelianGroup::exponent() const
{
    return factors_.empty() ? 1 : factors_.back();
}

std::int64_t FiniteAbelianGroup::p_torsion_order(std::int64_t p) const
{
    std::int64_t n = 1;
    for (auto d : factors_)
        n *= std::gcd(d, p);
    return n;
}

std::int64_t FiniteAbelianGroup::mod_p_quotient_order(std::int64_t p) const
{
    /* #G / #pG, with pG = prod Z/(d_i / gcd(d_i, p)) */
    std::int64_t image = 1;
    for (auto d : factors_)
        image *= d / std::gcd(d, p);
    return order() / image;
}

bool FiniteAbelianGroup::embeds_in(FiniteAbelianGroup const& other) const
{
    return other.order() % order() == 0 && other.exponent() % exponent() == 0 &&
           factors_.size() <= other.factors_.size();
}

std::string FiniteAbelianGroup::to_string() const
{
    if (factors_.empty())
        return "trivial";
    std::ostringstream os;
    for (size_t i = 0; i < factors_.size(); ++i)
        os << (i ? " x " : "") << "Z/" << factors_[i];
    return os.str();
}

/* ---------------------------------------------------------------------- */
/* KodairaType */

KodairaType::KodairaType(Family family, int n) : family_(family), n_(n)
{
    bool indexed = family == Family::In || family == Family::In_star;
    if (indexed ? n < 1 : n != 0)
        throw DomainError("bad Kodaira index for this family");
}

KodairaType KodairaType::parse(std::string const& text)
{
    static const std::map<std::string, Family> plain = {
        {"I0", Family::I0},        {"II", Family::II},        {"III", Family::III},
        {"IV", Family::IV},        {"I0*", Family::I0_star},  {"IV*", Family::IV_star},
        {"III*", Family::III_star}, {"II*", Family::II_star},
    };
    if (auto it = plain.find(text); it != plain.end())
        return KodairaType(it->second);
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::string head = text.substr(0, colon);
        int n = 0;
        try {
            n = std::stoi(text.substr(colon + 1));
        } catch (std::exception const&) {
            throw ParseError("bad Kodaira symbol '" + text + "'");
        }
        if (head == "In" && n >= 1)
            return KodairaType(Family::In, n);
        if (head == "In*" && n >= 1)
            return KodairaType(Family::In_star, n);
    }
    throw ParseError("bad Kodaira symbol '" + text + "'");
}

KodairaType KodairaType::from_code(int code)
{
    switch (code) {
    case 1: return KodairaType(Family::I0);
    case 2: return KodairaType(Family::II);
    case 3: return KodairaType(Family::III);
    case 4: return KodairaType(Family::IV);
    case -1: return KodairaType(Family::I0_star);
    case -2: return KodairaType(Family::II_star);
    case -3: return KodairaType(Family::III_star);
    case -4: return KodairaType(Family::IV_star);
    default: break;
    }
    if (code > 4)
        return KodairaType(Family::In, code - 4);
    if (code < -4)
        return KodairaType(Family::In_star, -code - 4);
    throw ParseError("bad Kodaira code " + std::to_string(code));
}

int KodairaType::code() const
{
    switch (family_) {
    case Family::I0: return 1;
    case Family::In: return 4 + n_;
    case Family::II: return 2;
    case Family::III: return 3;
    case Family::IV: return 4;
    case Family::I0_star: return -1;
    case Family::In_star: return -4 - n_;
    case Family::IV_star: return -4;
    case Family::III_star: return -3;
    case Family::II_star: return -2;
    }
    throw AlgorithmInvariantError("unknown Kodaira family");
}

int KodairaType::components() const
{
    switch (family_) {
    case Family::I0: return 1;
    case Family::In: return n_;
    case Family::II: return 1;
    case Family::III: return 2;
    case Family::IV: return 3;
    case Family::I0_star: return 5;
    case Family::In_star: return n_ + 5;
    case Family::IV_star: return 7;
    case Family::III_star: return 8;
    case Family::II_star: return 9;
    }
    throw AlgorithmInvariantError("unknown Kodaira family");
}

FiniteAbelianGroup KodairaType::geometric_component_group() const
{
    switch (family_) {
    case Family::I0:
    case Family::II:
    case Family::II_star:
        return {};
    case Family::In:
        return FiniteAbelianGroup::cyclic(n_);
    case Family::III:
    case Family::III_star:
        return FiniteAbelianGroup::cyclic(2);
    case Family::IV:
    case Family::IV_star:
        return FiniteAbelianGroup::cyclic(3);
    case Family::I0_star:
        return FiniteAbelianGroup({2, 2});
    case Family::In_star:
        return n_ % 2 == 0 ? FiniteAbelianGroup({2, 2}) : FiniteAbelianGroup::cyclic(4);
    }
    throw AlgorithmInvariantError("unknown Kodaira family");
}

std::string KodairaType::to_string() const
{
    switch (family_) {
    case Family::I0: return "I0";
    case Family::In: return "In:" + std::to_string(n_);
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
    case Family::I0_star: return "I0*";
    case Family::In_star: return "In*:" + std::to_string(n_);
    case Family::IV_star: return "IV*";
    case Family::III_star: return "III*";
    case Family::II_star: return "II*";
    }
    throw AlgorithmInvariantError("unknown Kodaira family");
}

/* ---------------------------------------------------------------------- */
/* Tate's algorithm */

namespace {

/* An integral model under a sequence of integral coordinate changes. */
struct Model {
    Integer a1, a2, a3, a4, a6;
    Integer b2, b4, b6, b8, c4, c6, disc;

    explicit Model(std::array<Integer, 5> const& a) : a1(a[0]), a2(a[1]), a3(a[2]), a4(a[3]), a6(a[4])
    {
        refresh();
    }

    void refresh()
    {
        b2 = a1 * a1 + 4 * a2;
        b4 = 2 * a4 + a1 * a3;
        b6 = a3 * a3 + 4 * a6;
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        c4 = b2 * b2 - 24 * b4;
        c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
        disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    }

    void shift(Integer const& r, Integer const& s, Integer const& t)
    {
        Integer n1 = a1 + 2 * s;
        Integer n2 = a2 - s * a1 + 3 * r - s * s;
        Integer n3 = a3 + r * a1 + 2 * t;
        Integer n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
        Integer n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
        a1 = n1, a2 = n2, a3 = n3, a4 = n4, a6 = n6;
        refresh();
    }

    std::array<Integer, 5> coefficients() const { return {a1, a2, a3, a4, a6}; }
};

class TateMachine {
  public:
    TateMachine(WeierstrassCurve const& curve, Integer const& ell)
        : p_(ell), model_(curve.integral_coefficients()), minimal_(model_.coefficients())
    {
    }

    LocalData run();

  private:
    bool pdiv(Integer const& x) const { return mpz_divisible_p(x.get_mpz_t(), p_.get_mpz_t()); }
    int pval(Integer const& x) const { return x == 0 ? INT_MAX / 2 : valuation(x, p_); }
    Integer red(Integer const& x) const { return mod(x, p_); }
    Integer inv(Integer const& x) const { return inverse_mod(x, p_); }

    /* x / d, which must be exact */
    static Integer exact(Integer const& x, Integer const& d)
    {
        if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
            throw AlgorithmInvariantError("algorithm invariant violated: expected divisibility by " + d.get_str());
        return x / d;
    }
    Integer over(Integer const& x, int k) const { return exact(x, power(p_, k)); }

    /* does a X^2 + b X + c have a root in F_p */
    bool quadratic_has_root(Integer const& a, Integer const& b, Integer const& c) const
    {
        Integer ra = red(a), rb = red(b), rc = red(c);
        if (ra == 0)
            return rb != 0 || rc == 0;
        if (p_ == 2)
            return rc == 0 || red(ra + rb + rc) == 0;
        return legendre(rb * rb - 4 * ra * rc, p_) >= 0;
    }

    int cubic_root_count(Integer const& b, Integer const& c, Integer const& d) const
    {
        return static_cast<int>(roots_mod_prime(IntegerPolynomial(std::vector<Integer>{d, c, b, 1}), p_).size());
    }

    void step(char const* action, Integer const& r, Integer const& s, Integer const& t)
    {
        if (r == 0 && s == 0 && t == 0)
            return;
        model_.shift(r, s, t);
        Transformation tr{1, Rational(r), Rational(s), Rational(t)};
        total_ = total_.then(tr);
        trace_.push_back({action, tr});
    }

    void rescale()
    {
        Model& m = model_;
        m.a1 = over(m.a1, 1);
        m.a2 = over(m.a2, 2);
        m.a3 = over(m.a3, 3);
        m.a4 = over(m.a4, 4);
        m.a6 = over(m.a6, 6);
        m.refresh();
        Transformation tr{Rational(p_), 0, 0, 0};
        total_ = total_.then(tr);
        trace_.push_back({"non-minimal: rescale by p", tr});
        minimal_ = m.coefficients();
        to_minimal_ = total_;
    }

    LocalData finish(KodairaType kodaira, int vdisc, int f, std::int64_t c, bool split);

    Integer p_;
    Model model_;                      /* working coordinates */
    Transformation total_;             /* input -> working coordinates */
    std::vector<TateStep> trace_;
    std::array<Integer, 5> minimal_;   /* model after the last rescale */
    Transformation to_minimal_;
};

/* (r, t) moving the singular point of the reduction to (0, 0) */
std::pair<Integer, Integer> singular_point_shift(Model const& m, Integer const& p)
{
    Integer r, t;
    bool b2_div = mpz_divisible_p(m.b2.get_mpz_t(), p.get_mpz_t());
    if (p == 2) {
        if (b2_div) {
            r = m.a4;
            t = r * (1 + m.a2 + r) + m.a6;
        } else {
            r = m.a3;
            t = r + m.a4;
        }
    } else if (p == 3) {
        r = b2_div ? Integer(-m.b6) : Integer(-m.b2 * m.b4);
        t = m.a1 * r + m.a3;
    } else {
        if (mpz_divisible_p(m.c4.get_mpz_t(), p.get_mpz_t()))
            r = -inverse_mod(12, p) * m.b2;
        else
            r = -inverse_mod(12 * m.c4, p) * (m.c6 + m.b2 * m.c4);
        t = -inverse_mod(2, p) * (m.a1 * r + m.a3);
    }
    return {mod(r, p), mod(t, p)};
}

LocalData TateMachine::run()
{
    using F = KodairaType::Family;
    Model& m = model_;
    Integer half = p_ == 2 ? Integer(0) : inverse_mod(2, p_);

    for (;;) {
        if (m.disc == 0)
            throw SingularCurveError();
        int vd = pval(m.disc);
        if (vd == 0)
            return finish(KodairaType(F::I0), 0, 0, 1, false);

        auto [r0, t0] = singular_point_shift(m, p_);
        step("singular point to origin", r0, 0, t0);
        if (!pdiv(m.a3) || !pdiv(m.a4) || !pdiv(m.a6))
            throw AlgorithmInvariantError("algorithm invariant violated: singular point not at origin");

        if (!pdiv(m.c4)) {
            /* tangent slopes at the node: Y^2 + a1 Y - a2 = 0 */
            bool split = quadratic_has_root(1, m.a1, -m.a2);
            std::int64_t c = split ? vd : (vd % 2 == 0 ? 2 : 1);
            return finish(KodairaType(F::In, vd), vd, 1, c, split);
        }
        if (pval(m.a6) < 2)
            return finish(KodairaType(F::II), vd, vd, 1, false);
        if (pval(m.b8) < 3)
            return finish(KodairaType(F::III), vd, vd - 1, 2, false);
        if (pval(m.b6) < 3) {
            std::int64_t c = quadratic_has_root(1, over(m.a3, 1), -over(m.a6, 2)) ? 3 : 1;
            return finish(KodairaType(F::IV), vd, vd - 2, c, false);
        }

        /* p | a1, a2; p^2 | a3, a4; p^3 | a6 */
        Integer s, t;
        if (p_ == 2) {
            s = red(m.a2);
            t = 2 * red(over(m.a6, 2));
        } else if (p_ == 3) {
            s = m.a1;
            t = m.a3;
        } else {
            s = -m.a1 * half;
            t = -m.a3 * half;
        }
        step("normalize for the cubic", 0, s, t);

        Integer b = over(m.a2, 1), c = over(m.a4, 2), d = over(m.a6, 3);
        Integer w = 27 * d * d - b * b * c * c + 4 * b * b * b * d - 18 * b * c * d + 4 * c * c * c;
        Integer x = 3 * c - b * b;

        if (!pdiv(w)) {
            /* three distinct roots */
            return finish(KodairaType(F::I0_star), vd, vd - 4, 1 + cubic_root_count(b, c, d), false);
        }

        if (!pdiv(x)) {
            /* one double root: move it to T = 0 */
            Integer r;
            if (p_ == 2)
                r = red(c);
            else if (p_ == 3)
                r = c * inv(b);
            else
                r = (b * c - 9 * d) * inv(2 * x);
            step("double root to origin", p_ * red(r), 0, 0);

            int ix = 3, iy = 3;
            Integer mx = p_ * p_, my = mx;
            std::int64_t cp = 0;
            for (;;) {
                Integer a2t = over(m.a2, 1), a3t = exact(m.a3, my), a4t = exact(m.a4, p_ * mx), a6t = exact(m.a6, mx * my);
                if (!pdiv(a3t * a3t + 4 * a6t)) {
                    cp = quadratic_has_root(1, a3t, -a6t) ? 4 : 2;
                    break;
                }
                Integer ty = p_ == 2 ? Integer(my * red(a6t)) : Integer(my * red(-a3t * half));
                step("subchain: y shift", 0, 0, ty);
                my *= p_;
                ++iy;
                a2t = over(m.a2, 1);
                a4t = exact(m.a4, p_ * mx);
                a6t = exact(m.a6, mx * my);
                if (!pdiv(a4t * a4t - 4 * a6t * a2t)) {
                    cp = quadratic_has_root(a2t, a4t, a6t) ? 4 : 2;
                    break;
                }
                Integer rx = p_ == 2 ? Integer(mx * red(a6t * inv(a2t))) : Integer(mx * red(-a4t * inv(2 * a2t)));
                step("subchain: x shift", rx, 0, 0);
                mx *= p_;
                ++ix;
            }
            int n = ix + iy - 5;
            return finish(KodairaType(F::In_star, n), vd, vd - ix - iy + 1, cp, false);
        }

        /* triple root: move it to T = 0 */
        Integer r;
        if (p_ == 2)
            r = b;
        else if (p_ == 3)
            r = -d; /* cube root in F_3 */
        else
            r = -b * inv(3);
        step("triple root to origin", p_ * red(r), 0, 0);

        Integer a3t = over(m.a3, 2), a6t = over(m.a6, 4);
        if (!pdiv(a3t * a3t + 4 * a6t)) {
            std::int64_t cp = quadratic_has_root(1, a3t, -a6t) ? 3 : 1;
            return finish(KodairaType(F::IV_star), vd, vd - 6, cp, false);
        }

        /* p^3 | a3, p^5 | a6 */
        Integer ts = p_ == 2 ? Integer(-p_ * p_ * red(a6t)) : Integer(p_ * p_ * red(-a3t * half));
        step("clear a3, a6 for III*/II*", 0, 0, ts);
        if (pval(m.a4) < 4)
            return finish(KodairaType(F::III_star), vd, vd - 7, 2, false);
        if (pval(m.a6) < 6)
            return finish(KodairaType(F::II_star), vd, vd - 8, 1, false);

        rescale();
    }
}

LocalData TateMachine::finish(KodairaType kodaira, int vdisc, int f, std::int64_t c, bool split)
{
    using F = KodairaType::Family;
    FiniteAbelianGroup geom = kodaira.geometric_component_group();
    FiniteAbelianGroup arith;
    switch (kodaira.family()) {
    case F::In:
        if (split)
            arith = geom;
        else
            arith = FiniteAbelianGroup::cyclic(c);
        break;
    case F::I0_star:
        arith = c == 4 ? geom : FiniteAbelianGroup::cyclic(c);
        break;
    case F::In_star:
        arith = c == 4 ? geom : FiniteAbelianGroup::cyclic(2);
        break;
    default:
        arith = FiniteAbelianGroup::cyclic(c);
        break;
    }
    if (arith.order() != c || !arith.embeds_in(geom))
        throw AlgorithmInvariantError("algorithm invariant violated: component group mismatch");

    int comps = kodaira.components();
    if (vdisc != f + comps - 1)
        throw AlgorithmInvariantError("algorithm invariant violated: Ogg's formula");

    return LocalData{p_,
                     WeierstrassCurve(minimal_),
                     to_minimal_,
                     trace_,
                     vdisc,
                     kodaira,
                     f,
                     c,
                     geom,
                     arith,
                     split,
                     comps};
}

}  // namespace

LocalData tate_local(WeierstrassCurve const& curve, Integer const& ell)
{
    if (!is_prime(ell))
        throw DomainError("Tate's algorithm needs a prime, got " + ell.get_str());
    return TateMachine(curve, ell).run();
}

bool is_split_multiplicative(LocalData const& local)
{
    if (!local.kodaira.is_multiplicative())
        throw DomainError("not multiplicative");
    Integer const& p = local.prime;
    auto a = local.minimal_model.integral_coefficients();
    Model m(a);
    if (p >= 5)
        return legendre(-m.c6, p) == 1;
    auto [r, t] = singular_point_shift(m, p);
    m.shift(r, 0, t);
    /* the node's tangent slopes solve Y^2 + a1 Y - a2 = 0 over F_p */
    for (Integer y = 0; y < p; ++y)
        if (mod(y * y + m.a1 * y - m.a2, p) == 0)
            return true;
    return false;
}

std::int64_t phi_p_part_order(LocalData const& local, std::int64_t p)
{
    if (p == 2)
        throw DomainError("odd p required");
    if (!is_prime(Integer(static_cast<long>(p))))
        throw DomainError("p must be an odd prime");
    std::int64_t n = local.phi_arithmetic.p_torsion_order(p);
    if (n != tamagawa_p_part(local.tamagawa, p))
        throw AlgorithmInvariantError("odd part of the component group is not cyclic");
    return n;
}

std::int64_t tamagawa_p_part(std::int64_t tamagawa, std::int64_t p)
{
    return tamagawa % p == 0 ? p : 1;
}

}  // namespace ellocal
