#include "ellocal/finite_field.hpp"

#include "ellocal/errors.hpp"

namespace ellocal {

ReducedCurve::ReducedCurve(WeierstrassCurve const& curve, std::uint64_t ell) : ell_(ell)
{
    if (ell == 2 || !is_prime(Integer(static_cast<unsigned long>(ell))))
        throw DomainError("odd prime required for point enumeration");
    if (ell > enumeration_prime_cap)
        throw DomainError("prime too large for enumeration");
    Integer l(static_cast<unsigned long>(ell));
    Rational const& disc = curve.discriminant();
    for (auto const& c : curve.coefficients())
        if (mpz_divisible_p(c.get_den_mpz_t(), l.get_mpz_t()))
            throw DomainError("model is not integral at " + l.get_str());
    if (mpz_divisible_p(disc.get_num_mpz_t(), l.get_mpz_t()))
        throw SingularCurveError("reduction is singular");
    a1_ = reduce(curve.a1());
    a2_ = reduce(curve.a2());
    a3_ = reduce(curve.a3());
    a4_ = reduce(curve.a4());
    a6_ = reduce(curve.a6());
}

std::uint64_t ReducedCurve::reduce(Rational const& c) const
{
    Integer l(static_cast<unsigned long>(ell_));
    Integer v = mod(Integer(c.get_num()) * inverse_mod(Integer(c.get_den()), l), l);
    return v.get_ui();
}

std::uint64_t ReducedCurve::inv(std::uint64_t a) const
{
    std::uint64_t result = 1, base = a % ell_, e = ell_ - 2;
    while (e) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

bool ReducedCurve::contains(FiniteFieldPoint const& P) const
{
    if (P.infinity)
        return true;
    std::uint64_t x = P.x, y = P.y;
    std::uint64_t lhs = (mul(y, y) + mul(mul(a1_, x), y) + mul(a3_, y)) % ell_;
    std::uint64_t rhs = (mul(mul(x, x), x) + mul(a2_, mul(x, x)) + mul(a4_, x) + a6_) % ell_;
    return lhs == rhs;
}

FiniteFieldPoint ReducedCurve::negate(FiniteFieldPoint const& P) const
{
    if (P.infinity)
        return P;
    return FiniteFieldPoint::affine(P.x, sub(sub(0, P.y), (mul(a1_, P.x) + a3_) % ell_));
}

FiniteFieldPoint ReducedCurve::add(FiniteFieldPoint const& P, FiniteFieldPoint const& Q) const
{
    if (P.infinity)
        return Q;
    if (Q.infinity)
        return P;
    std::uint64_t lambda, nu;
    if (P.x == Q.x) {
        if (negate(Q) == P)
            return FiniteFieldPoint::at_infinity();
        /* doubling */
        std::uint64_t num = (3 * mul(P.x, P.x) + 2 * mul(a2_, P.x) + a4_ + ell_ - mul(a1_, P.y)) % ell_;
        std::uint64_t den = (2 * P.y + mul(a1_, P.x) + a3_) % ell_;
        lambda = mul(num, inv(den));
        std::uint64_t num2 = (ell_ - mul(mul(P.x, P.x), P.x) + mul(a4_, P.x) + 2 * a6_ + ell_ - mul(a3_, P.y)) % ell_;
        nu = mul(num2, inv(den));
    } else {
        std::uint64_t den = sub(Q.x, P.x);
        lambda = mul(sub(Q.y, P.y), inv(den));
        nu = mul(sub(mul(P.y, Q.x), mul(Q.y, P.x)), inv(den));
    }
    std::uint64_t x3 = sub(sub(sub((mul(lambda, lambda) + mul(a1_, lambda)) % ell_, a2_), P.x), Q.x);
    std::uint64_t y3 = sub(sub(0, mul((lambda + a1_) % ell_, x3)), (nu + a3_) % ell_);
    return FiniteFieldPoint::affine(x3, y3);
}

FiniteFieldPoint ReducedCurve::multiply(FiniteFieldPoint const& P, std::uint64_t n) const
{
    FiniteFieldPoint result = FiniteFieldPoint::at_infinity(), base = P;
    while (n) {
        if (n & 1)
            result = add(result, base);
        base = add(base, base);
        n >>= 1;
    }
    return result;
}

PointEnumeration enumerate_points_mod(WeierstrassCurve const& curve, std::uint64_t ell)
{
    ReducedCurve E(curve, ell);
    Integer l(static_cast<unsigned long>(ell));
    auto a = [&](Rational const& c) {
        return mod(Integer(c.get_num()) * inverse_mod(Integer(c.get_den()), l), l).get_ui();
    };
    std::uint64_t a1 = a(curve.a1()), a2 = a(curve.a2()), a3 = a(curve.a3()), a4 = a(curve.a4()), a6 = a(curve.a6());

    /* root_of[v] is some y with y^2 = v, or ell if v is a nonresidue */
    std::vector<std::uint64_t> root_of(ell, ell);
    for (std::uint64_t y = 0; y <= ell / 2; ++y)
        root_of[y * y % ell] = y;

    std::vector<FiniteFieldPoint> pts{FiniteFieldPoint::at_infinity()};
    std::uint64_t half = (ell + 1) / 2;
    for (std::uint64_t x = 0; x < ell; ++x) {
        /* (2y + a1 x + a3)^2 = 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2 */
        std::uint64_t h = (a1 * x + a3) % ell;
        std::uint64_t rhs = ((x * x % ell * x) + a2 * (x * x % ell) + a4 * x + a6) % ell;
        std::uint64_t d = (4 * rhs + h * h) % ell;
        std::uint64_t w = root_of[d];
        if (w == ell)
            continue;
        std::uint64_t y1 = (w + ell - h) % ell * half % ell;
        pts.push_back(FiniteFieldPoint::affine(x, y1));
        if (d != 0) {
            std::uint64_t y2 = (2 * ell - w - h) % ell * half % ell;
            pts.push_back(FiniteFieldPoint::affine(x, y2));
            if (y2 < y1)
                std::swap(pts[pts.size() - 1], pts[pts.size() - 2]);
        }
    }
    return {E, std::move(pts)};
}

std::uint64_t count_p_torsion_mod(WeierstrassCurve const& curve, std::uint64_t ell, std::uint64_t p)
{
    auto en = enumerate_points_mod(curve, ell);
    std::uint64_t n = 0;
    for (auto const& P : en.points)
        if (en.curve.multiply(P, p).infinity)
            ++n;
    return n;
}

}  // namespace ellocal
