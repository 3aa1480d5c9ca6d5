#include "ellocal/weierstrass.hpp"

#include "ellocal/errors.hpp"

#include <sstream>

namespace ellocal {

Transformation Transformation::then(Transformation const& n) const
{
    Rational u2 = u * u;
    return {u * n.u, r + u2 * n.r, s + u * n.s, t + u2 * s * n.r + u2 * u * n.t};
}

Invariants compute_invariants(std::array<Rational, 5> const& a)
{
    auto const& [a1, a2, a3, a4, a6] = a;
    Invariants v;
    v.b2 = a1 * a1 + 4 * a2;
    v.b4 = 2 * a4 + a1 * a3;
    v.b6 = a3 * a3 + 4 * a6;
    v.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    v.c4 = v.b2 * v.b2 - 24 * v.b4;
    v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
    v.discriminant = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 + 9 * v.b2 * v.b4 * v.b6;
    if (v.discriminant != 0)
        v.j = v.c4 * v.c4 * v.c4 / v.discriminant;
    return v;
}

namespace {

Invariants checked_invariants(std::array<Rational, 5> const& a)
{
    Invariants v = compute_invariants(a);
    if (v.discriminant == 0)
        throw SingularCurveError();
    if (4 * v.b8 != v.b2 * v.b6 - v.b4 * v.b4 || 1728 * v.discriminant != v.c4 * v.c4 * v.c4 - v.c6 * v.c6)
        throw AlgorithmInvariantError("Weierstrass invariant identities fail");
    return v;
}

}  // namespace

WeierstrassCurve::WeierstrassCurve(std::array<Rational, 5> a, unchecked_tag)
    : a_(std::move(a)), inv_(checked_invariants(a_))
{
}

WeierstrassCurve::WeierstrassCurve(Integer a1, Integer a2, Integer a3, Integer a4, Integer a6)
    : WeierstrassCurve(std::array<Rational, 5>{Rational(a1), Rational(a2), Rational(a3), Rational(a4), Rational(a6)},
                       unchecked_tag{})
{
}

WeierstrassCurve::WeierstrassCurve(std::array<Integer, 5> const& a)
    : WeierstrassCurve(a[0], a[1], a[2], a[3], a[4])
{
}

WeierstrassCurve WeierstrassCurve::from_rational(std::array<Rational, 5> const& a)
{
    Integer u = 1;
    for (auto const& c : a)
        mpz_lcm(u.get_mpz_t(), u.get_mpz_t(), c.get_den_mpz_t());
    static constexpr int weight[5] = {1, 2, 3, 4, 6};
    std::array<Integer, 5> scaled;
    for (int i = 0; i < 5; ++i) {
        Rational c = a[i] * Rational(power(u, weight[i]));
        scaled[i] = c.get_num();
    }
    return WeierstrassCurve(scaled);
}

WeierstrassCurve WeierstrassCurve::parse(std::string_view text)
{
    std::array<Rational, 5> a;
    size_t pos = 0;
    for (int i = 0; i < 5; ++i) {
        size_t comma = text.find(',', pos);
        bool last = (i == 4);
        if ((comma == std::string_view::npos) != last)
            throw ParseError("expected five comma-separated coefficients \"a1,a2,a3,a4,a6\"");
        std::string field(text.substr(pos, last ? std::string_view::npos : comma - pos));
        auto b = field.find_first_not_of(" \t");
        auto e = field.find_last_not_of(" \t\r\n");
        if (b == std::string::npos)
            throw ParseError("empty coefficient in curve specification");
        a[i] = parse_rational(field.substr(b, e - b + 1));
        pos = comma + 1;
    }
    return from_rational(a);
}

bool WeierstrassCurve::is_integral() const
{
    for (auto const& c : a_)
        if (!ellocal::is_integral(c))
            return false;
    return true;
}

std::array<Integer, 5> WeierstrassCurve::integral_coefficients() const
{
    if (!is_integral())
        throw DomainError("integral model required");
    std::array<Integer, 5> out;
    for (int i = 0; i < 5; ++i)
        out[i] = a_[i].get_num();
    return out;
}

std::string WeierstrassCurve::to_string() const
{
    std::ostringstream os;
    for (int i = 0; i < 5; ++i)
        os << (i ? "," : "") << a_[i].get_str();
    return os.str();
}

WeierstrassCurve transform(WeierstrassCurve const& curve, Transformation const& tr)
{
    if (tr.u == 0)
        throw DomainError("degenerate transformation");
    auto const& [a1, a2, a3, a4, a6] = curve.a_;
    Rational const &u = tr.u, &r = tr.r, &s = tr.s, &t = tr.t;
    Rational u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    std::array<Rational, 5> n{
        (a1 + 2 * s) / u,
        (a2 - s * a1 + 3 * r - s * s) / u2,
        (a3 + r * a1 + 2 * t) / u3,
        (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u4,
        (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / u6,
    };
    return WeierstrassCurve(std::move(n), WeierstrassCurve::unchecked_tag{});
}

}  // namespace ellocal
