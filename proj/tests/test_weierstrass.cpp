#include "ellocal/errors.hpp"
#include "ellocal/finite_field.hpp"
#include "ellocal/weierstrass.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace ellocal;

namespace {

WeierstrassCurve curve(long a1, long a2, long a3, long a4, long a6)
{
    return WeierstrassCurve(a1, a2, a3, a4, a6);
}

Transformation random_transformation(std::mt19937_64& rng)
{
    Transformation t;
    do {
        t.u = make_rational(support::random_integer(rng, -6, 6), support::random_integer(rng, 1, 4));
    } while (t.u == 0);
    t.r = make_rational(support::random_integer(rng, -20, 20), support::random_integer(rng, 1, 5));
    t.s = make_rational(support::random_integer(rng, -20, 20), support::random_integer(rng, 1, 5));
    t.t = make_rational(support::random_integer(rng, -20, 20), support::random_integer(rng, 1, 5));
    return t;
}

}  // namespace

TEST_CASE("invariant examples")
{
    auto e1 = curve(0, 0, 0, 0, 1);
    CHECK(e1.discriminant() == -432);
    CHECK(e1.invariants().j == 0);
    auto e2 = curve(0, 0, 0, -1, 0);
    CHECK(e2.discriminant() == 64);
    CHECK(e2.invariants().j == 1728);
    auto e3 = curve(0, -1, 1, -10, -20);
    CHECK(e3.discriminant() == -power(Integer(11), 5));
    CHECK_THROWS_WITH_AS(curve(0, 0, 0, 0, 0), "singular curve", SingularCurveError);
    CHECK_THROWS_AS(curve(0, 0, 0, -3, 2), SingularCurveError);
}

TEST_CASE("parsing")
{
    CHECK(WeierstrassCurve::parse(" 0, -1 ,1,-10,-20") == curve(0, -1, 1, -10, -20));
    CHECK_THROWS_AS(WeierstrassCurve::parse("1,2,3"), ParseError);
    CHECK_THROWS_AS(WeierstrassCurve::parse("1,2,3,4,x"), ParseError);
    CHECK_THROWS_AS(WeierstrassCurve::parse("1,2,3,4,5,6"), ParseError);
    CHECK_THROWS_AS(WeierstrassCurve::parse("0,0,0,0,0"), SingularCurveError);
}

TEST_CASE("rational input is cleared to an integral model")
{
    /* y^2 = x^3 + x/4 + 1/8: c4 = -12, c6 = -108, Delta = -31/4 */
    auto e = WeierstrassCurve::from_rational(
        {Rational(0), Rational(0), Rational(0), make_rational(1, 4), make_rational(1, 8)});
    CHECK(e.is_integral());
    CHECK(e.invariants().j == make_rational(6912, 31));
}

TEST_CASE("transformations")
{
    auto e = curve(0, 0, 0, 0, 1);
    CHECK(transform(e, Transformation{}) == e);
    auto scaled = transform(e, Transformation{2});
    CHECK(scaled.discriminant() == make_rational(-432, 4096));
    CHECK_FALSE(scaled.is_integral());
    CHECK_THROWS_AS(scaled.integral_coefficients(), DomainError);
    CHECK_THROWS_WITH_AS(transform(e, Transformation{0}), "degenerate transformation", DomainError);
}

TEST_CASE("j is invariant, discriminant scales, composition is consistent")
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        WeierstrassCurve e = curve(0, 0, 0, 1, 0);
        try {
            e = curve(support::random_integer(rng, -2, 2).get_si(), support::random_integer(rng, -5, 5).get_si(),
                      support::random_integer(rng, -2, 2).get_si(), support::random_integer(rng, -50, 50).get_si(),
                      support::random_integer(rng, -50, 50).get_si());
        } catch (SingularCurveError const&) {
            continue;
        }
        auto t1 = random_transformation(rng), t2 = random_transformation(rng);
        auto e1 = transform(e, t1);
        CHECK(e1.invariants().j == e.invariants().j);
        Rational u12 = t1.u * t1.u * t1.u * t1.u * t1.u * t1.u;
        u12 *= u12;
        CHECK(e1.discriminant() == e.discriminant() / u12);
        CHECK(transform(e1, t2) == transform(e, t1.then(t2)));
        auto const& inv = e1.invariants();
        CHECK(4 * inv.b8 == inv.b2 * inv.b6 - inv.b4 * inv.b4);
        CHECK(1728 * inv.discriminant == inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6);
    }
}

TEST_CASE("point counts")
{
    auto e = curve(0, 0, 0, 1, 0);
    CHECK(enumerate_points_mod(e, 5).points.size() == 4);
    CHECK(enumerate_points_mod(e, 7).points.size() == 8);
    CHECK(count_p_torsion_mod(e, 7, 3) == 1);
    /* y^2 + y = x^3 has E(F_7) = Z/3 x Z/3 and E(F_5)[3] = Z/3 */
    CHECK(count_p_torsion_mod(curve(0, 0, 1, 0, 0), 7, 3) == 9);
    CHECK(count_p_torsion_mod(curve(0, 0, 1, 0, 0), 5, 3) == 3);
    CHECK_THROWS_WITH_AS(enumerate_points_mod(e, 2), doctest::Contains("odd"), DomainError);
    CHECK_THROWS_WITH_AS(enumerate_points_mod(curve(0, -1, 1, -10, -20), 11), "reduction is singular",
                         SingularCurveError);
    CHECK_THROWS_WITH_AS(enumerate_points_mod(e, 100003), "prime too large for enumeration", DomainError);
}

TEST_CASE("group law axioms and Hasse bound")
{
    std::mt19937_64 rng(42);
    std::vector<WeierstrassCurve> curves{curve(0, 0, 0, 1, 0), curve(0, -1, 1, -10, -20), curve(1, 0, 1, 4, -6),
                                         curve(0, 0, 1, -1, 0), curve(1, -1, 1, -14, 29)};
    for (auto const& e : curves) {
        for (std::uint64_t ell = 3; ell < 100; ell = next_prime(Integer(ell)).get_ui()) {
            if (mod(e.discriminant().get_num(), Integer(ell)) == 0)
                continue;
            auto en = enumerate_points_mod(e, ell);
            auto const& pts = en.points;
            auto const& E = en.curve;
            double n = static_cast<double>(pts.size());
            CHECK(std::abs(n - (ell + 1.0)) <= 2 * std::sqrt(double(ell)));
            auto pick = [&] { return pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)]; };
            for (int k = 0; k < 20; ++k) {
                auto P = pick(), Q = pick(), R = pick();
                CHECK(E.contains(E.add(P, Q)));
                CHECK(E.add(P, Q) == E.add(Q, P));
                CHECK(E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R)));
                CHECK(E.add(P, FiniteFieldPoint::at_infinity()) == P);
                CHECK(E.add(P, E.negate(P)).infinity);
                CHECK(E.multiply(P, pts.size()).infinity);
            }
            for (std::uint64_t p : {3, 5, 7}) {
                auto t = count_p_torsion_mod(e, ell, p);
                CHECK((t == 1 || t == p || t == p * p));
                CHECK(pts.size() % t == 0);
                if (t == p * p)
                    CHECK((ell - 1) % p == 0);
            }
        }
    }
}
