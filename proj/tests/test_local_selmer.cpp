#include "ellocal/errors.hpp"
#include "ellocal/finite_field.hpp"
#include "ellocal/local_selmer.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ellocal;

namespace {

std::vector<support::CorpusCurve> const& corpus()
{
    static auto const c = support::load_corpus();
    return c;
}

WeierstrassCurve const& by_label(std::string const& label)
{
    for (auto const& c : corpus())
        if (c.label == label)
            return c.curve;
    throw std::runtime_error("no corpus curve " + label);
}

void check_orders(LocalSelmerOrders const& o, std::array<std::int64_t, 6> expected)
{
    CHECK(o.torsion_order == expected[0]);
    CHECK(o.kummer_order == expected[1]);
    CHECK(o.phi_p == expected[2]);
    CHECK(o.relaxed_order == expected[3]);
    CHECK(o.restricted_order == expected[4]);
    CHECK(o.tt_p == expected[5]);
}

}  // namespace

TEST_CASE("places")
{
    CHECK(Place::real().to_string() == "inf");
    CHECK(Place::parse("11") == Place::finite(Integer(11)));
    CHECK(Place::parse("inf").is_real());
    CHECK(Place::real() < Place::finite(Integer(2)));
    CHECK(Place::finite(Integer(3)) < Place::finite(Integer(5)));
    CHECK_FALSE(Place::finite(Integer(5)) < Place::real());
    CHECK_THROWS_AS(Place::parse("x"), ParseError);
    CHECK_THROWS_AS(Place::finite(Integer(9)), DomainError);
    CHECK_THROWS_AS(Place::real().prime(), DomainError);
}

TEST_CASE("division polynomials")
{
    long a = 3, b = -7;
    WeierstrassCurve e(0, 0, 0, a, b);
    CHECK(division_polynomial(e, 3) == IntegerPolynomial{-a * a, 12 * b, 6 * a, 0, 3});
    for (std::int64_t p : {3, 5, 7})
        CHECK(division_polynomial(by_label("11.a2"), p).degree() == (p * p - 1) / 2);
    CHECK(division_polynomial(WeierstrassCurve(0, 0, 1, 0, 0), 3).evaluate(Integer(0)) == 0);
    CHECK_THROWS_WITH_AS(division_polynomial(e, 2), "odd p required", DomainError);
    CHECK_THROWS_WITH_AS(division_polynomial(e, 11), doctest::Contains("p exceeds desk-scale cap"), DomainError);
    CHECK(two_torsion_polynomial(WeierstrassCurve(1, 2, 3, 4, 5)) == IntegerPolynomial{29, 22, 9, 4});
}

TEST_CASE("roots of psi_p mod ell are the x-coordinates of p-torsion points")
{
    for (auto const& label : {"11.a2", "c14.2", "c26.2", "37.a1", "c54.2"}) {
        auto const& e = by_label(label);
        for (std::uint64_t ell : {13, 17, 19, 31, 43, 61, 71}) {
            if (mod(e.discriminant().get_num(), Integer(ell)) == 0)
                continue;
            auto en = enumerate_points_mod(e, ell);
            for (std::int64_t p : {3, 5, 7}) {
                std::set<std::uint64_t> xs;
                for (auto const& P : en.points)
                    if (!P.infinity && en.curve.multiply(P, p).infinity)
                        xs.insert(P.x);
                auto roots = roots_mod_prime(division_polynomial(e, p), Integer(ell));
                std::set<std::uint64_t> rs;
                for (auto const& r : roots)
                    rs.insert(r.get_ui());
                INFO(label, " ell=", ell, " p=", p);
                /* every torsion x is a root; a root may also carry points over F_ell^2 */
                CHECK(std::includes(rs.begin(), rs.end(), xs.begin(), xs.end()));
            }
        }
    }
}

TEST_CASE("local torsion examples")
{
    CHECK(local_torsion_order(by_label("11.a2"), Place::real(), 5) == 5);
    CHECK(local_torsion_order(WeierstrassCurve(0, 0, 0, 1, 0), Place::finite(Integer(7)), 3) == 1);
    CHECK(local_torsion_order(WeierstrassCurve(0, 0, 1, 0, 0), Place::finite(Integer(5)), 3) == 3);
    CHECK(local_torsion_order(by_label("11.a2"), Place::finite(Integer(11)), 5) == 25);
    CHECK(local_kummer_order(Place::real(), 3, 3) == 1);
    CHECK(local_kummer_order(Place::finite(Integer(7)), 3, 1) == 1);
    CHECK(local_kummer_order(Place::finite(Integer(3)), 3, 1) == 3);
}

TEST_CASE("local torsion matches the oracle table at bad primes and at p")
{
    auto rows = support::load_local_torsion();
    REQUIRE(rows.size() > 500);
    for (auto const& row : rows) {
        INFO(row.label, " p=", row.p, " ell=", row.ell.get_str());
        CHECK(local_torsion_order(by_label(row.label), Place::finite(row.ell), row.p) == row.torsion);
    }
}

TEST_CASE("local torsion matches F_ell at good primes")
{
    for (auto const& c : corpus()) {
        Integer disc = c.curve.discriminant().get_num();
        for (std::uint64_t ell : {11, 13, 29, 31, 37, 43, 61, 67}) {
            if (mod(disc, Integer(ell)) == 0)
                continue;
            for (std::int64_t p : {3, 5, 7}) {
                if (std::uint64_t(p) == ell)
                    continue;
                INFO(c.label, " ell=", ell, " p=", p);
                CHECK(local_torsion_order(c.curve, Place::finite(Integer(ell)), p) ==
                      std::int64_t(count_p_torsion_mod(c.curve, ell, p)));
            }
        }
    }
}

TEST_CASE("assembled orders")
{
    auto const& e = by_label("11.a2");
    check_orders(assemble_local_orders(e, Place::finite(Integer(11)), 5), {25, 25, 5, 125, 5, 5});
    check_orders(assemble_local_orders(e, Place::real(), 3), {3, 1, 1, 1, 1, 1});
    check_orders(assemble_local_orders(e, Place::finite(Integer(5)), 5), {5, 25, 1, 25, 25, 1});
    auto good = assemble_local_orders(e, Place::finite(Integer(31)), 5);
    std::int64_t t = good.torsion_order;
    check_orders(good, {t, t, 1, t, t, 1});
    CHECK(good.selmer_euler_factor() == 1);
}

TEST_CASE("local identities at every place of the corpus")
{
    for (auto const& c : corpus()) {
        std::vector<Place> places{Place::real()};
        for (auto const& row : c.record.local)
            places.push_back(Place::finite(row.prime));
        for (std::int64_t p : {3, 5, 7}) {
            for (auto const& v : places) {
                auto o = assemble_local_orders(c.curve, v, p);
                INFO(c.label, " p=", p, " at ", v.to_string());
                CHECK(o.relaxed_order == o.kummer_order * o.phi_p);
                CHECK(o.kummer_order == o.restricted_order * o.phi_p);
                CHECK(o.relaxed_order * o.restricted_order == o.kummer_order * o.kummer_order);
                CHECK(o.restricted_order <= o.kummer_order);
                CHECK(o.kummer_order <= o.relaxed_order);
                CHECK(o.tt_p == o.phi_p);
            }
        }
    }
}

TEST_CASE("inconsistent reduction data is detected")
{
    LocalData local = tate_local(by_label("11.a2"), Integer(11));
    local.minimal_model = WeierstrassCurve(0, 0, 0, 1, 0); /* #E(Q_11)[5] = 1 */
    CHECK_THROWS_WITH_AS(assemble_local_orders(local, 5), doctest::Contains("inconsistent local data"),
                         InconsistentDataError);
}

TEST_CASE("precision cap surfaces as undecided")
{
    /* psi_5 at 11 for 11.a2 needs more than one digit */
    CHECK_THROWS_AS(local_torsion_order(by_label("11.a2"), Place::finite(Integer(11)), 5, 1), UndecidedError);
}
