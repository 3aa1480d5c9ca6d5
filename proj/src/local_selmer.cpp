#include "ellocal/local_selmer.hpp"

#include "ellocal/errors.hpp"
#include "ellocal/padic.hpp"

#include <map>

namespace ellocal {

Place Place::finite(Integer prime)
{
    if (!is_prime(prime))
        throw DomainError("finite place needs a prime, got " + prime.get_str());
    Place v;
    v.prime_ = std::move(prime);
    return v;
}

Integer const& Place::prime() const
{
    if (!prime_)
        throw DomainError("the real place has no prime");
    return *prime_;
}

std::string Place::to_string() const
{
    return prime_ ? prime_->get_str() : "inf";
}

Place Place::parse(std::string const& text)
{
    if (text == "inf")
        return real();
    try {
        return finite(Integer(text));
    } catch (std::invalid_argument const&) {
        throw ParseError("bad place '" + text + "'");
    }
}

bool operator==(Place const& a, Place const& b)
{
    if (a.is_real() || b.is_real())
        return a.is_real() == b.is_real();
    return *a.prime_ == *b.prime_;
}

bool operator<(Place const& a, Place const& b)
{
    if (a.is_real())
        return !b.is_real();
    if (b.is_real())
        return false;
    return *a.prime_ < *b.prime_;
}

Rational LocalSelmerOrders::selmer_euler_factor() const
{
    return make_rational(kummer_order, torsion_order);
}

Rational LocalSelmerOrders::relaxed_euler_factor() const
{
    return make_rational(relaxed_order, torsion_order);
}

bool is_supported_p(std::int64_t p)
{
    return p == 3 || p == 5 || p == 7;
}

void require_supported_p(std::int64_t p)
{
    if (p == 2)
        throw DomainError("odd p required");
    if (!is_supported_p(p))
        throw DomainError("p exceeds desk-scale cap (p must be 3, 5 or 7)");
}

IntegerPolynomial two_torsion_polynomial(WeierstrassCurve const& curve)
{
    curve.integral_coefficients();
    Invariants const& inv = curve.invariants();
    return IntegerPolynomial({Integer(inv.b6.get_num()), Integer(2 * inv.b4.get_num()),
                              Integer(inv.b2.get_num()), Integer(4)});
}

IntegerPolynomial division_polynomial(WeierstrassCurve const& curve, std::int64_t p)
{
    require_supported_p(p);
    curve.integral_coefficients();
    Invariants const& inv = curve.invariants();
    Integer b2 = inv.b2.get_num(), b4 = inv.b4.get_num(), b6 = inv.b6.get_num(), b8 = inv.b8.get_num();

    /* f_n = psi_n for odd n, psi_n / psi_2 for even n; psi_2^2 = F */
    IntegerPolynomial F = two_torsion_polynomial(curve);
    IntegerPolynomial F2 = F * F;
    std::map<int, IntegerPolynomial> f;
    f[0] = IntegerPolynomial();
    f[1] = IntegerPolynomial{1};
    f[2] = IntegerPolynomial{1};
    f[3] = IntegerPolynomial({b8, 3 * b6, 3 * b4, b2, Integer(3)});
    f[4] = IntegerPolynomial({b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, Integer(2)});
    for (int n = 5; n <= p; ++n) {
        int m = n / 2;
        if (n % 2 == 1) {
            IntegerPolynomial lhs = f[m + 2] * pow(f[m], 3), rhs = f[m - 1] * pow(f[m + 1], 3);
            if (m % 2 == 0)
                lhs = lhs * F2;
            else
                rhs = rhs * F2;
            f[n] = lhs - rhs;
        } else {
            f[n] = f[m] * (f[m + 2] * pow(f[m - 1], 2) - f[m - 2] * pow(f[m + 1], 2));
        }
    }
    return f[static_cast<int>(p)];
}

std::int64_t local_torsion_order(WeierstrassCurve const& curve, Place const& place, std::int64_t p, int max_precision)
{
    require_supported_p(p);
    if (place.is_real())
        return p;
    Integer const& ell = place.prime();
    IntegerPolynomial psi = division_polynomial(curve, p);
    IntegerPolynomial F = two_torsion_polynomial(curve);
    PadicContext ctx = PadicContext::for_polynomial(ell, psi, max_precision);

    for (int n = ctx.precision;; n = std::min(2 * n, ctx.max_precision)) {
        try {
            std::int64_t points = 1;
            for (auto const& x : padic_roots_at(psi, ell, n)) {
                auto square = is_square(evaluate(F, x, ell), ell);
                if (!square)
                    throw UndecidedError(n);
                if (*square)
                    points += 2;
            }
            if (points != 1 && points != p && points != p * p)
                throw InconsistentDataError("inconsistent local data: #E(Q_" + ell.get_str() + ")[" +
                                            std::to_string(p) + "] = " + std::to_string(points));
            return points;
        } catch (UndecidedError const&) {
            if (n >= ctx.max_precision)
                throw UndecidedError(n);
        }
    }
}

std::int64_t local_kummer_order(Place const& place, std::int64_t p, std::int64_t torsion_order)
{
    if (place.is_real())
        return 1;
    if (place.prime() == p)
        return p * torsion_order;
    return torsion_order;
}

namespace {

LocalSelmerOrders finite_orders(LocalData const& local, std::int64_t torsion, std::int64_t p)
{
    LocalSelmerOrders o{Place::finite(local.prime)};
    o.torsion_order = torsion;
    o.kummer_order = local_kummer_order(o.place, p, torsion);
    o.phi_p = phi_p_part_order(local, p);
    o.tt_p = o.phi_p;
    o.relaxed_order = o.kummer_order * o.tt_p;
    std::int64_t quotient = local.phi_arithmetic.mod_p_quotient_order(p);
    if (o.kummer_order % quotient != 0)
        throw InconsistentDataError("inconsistent local data at " + o.place.to_string() +
                                    ": #Phi/p does not divide the Kummer order");
    o.restricted_order = o.kummer_order / quotient;
    return o;
}

}  // namespace

LocalSelmerOrders assemble_local_orders(LocalData const& local, std::int64_t p, int max_precision)
{
    require_supported_p(p);
    std::int64_t torsion = local_torsion_order(local.minimal_model, Place::finite(local.prime), p, max_precision);
    return finite_orders(local, torsion, p);
}

LocalSelmerOrders assemble_local_orders(WeierstrassCurve const& curve, Place const& place, std::int64_t p,
                                        int max_precision)
{
    require_supported_p(p);
    if (place.is_real()) {
        LocalSelmerOrders o{place};
        o.torsion_order = local_torsion_order(curve, place, p);
        o.kummer_order = local_kummer_order(place, p, o.torsion_order);
        return o;
    }
    return assemble_local_orders(tate_local(curve, place.prime()), p, max_precision);
}

}  // namespace ellocal
