#include "ellocal/errors.hpp"
#include "ellocal/tate.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ellocal;

namespace {

using Family = KodairaType::Family;

std::vector<support::CorpusCurve> const& corpus()
{
    static auto const c = support::load_corpus();
    return c;
}

}  // namespace

TEST_CASE("finite abelian groups")
{
    FiniteAbelianGroup g({2, 4});
    CHECK(g.order() == 8);
    CHECK(g.exponent() == 4);
    CHECK(g.p_torsion_order(2) == 4);
    CHECK(g.mod_p_quotient_order(2) == 4);
    CHECK(FiniteAbelianGroup::from_cyclic_factors({6, 4}) == FiniteAbelianGroup({2, 12}));
    CHECK(FiniteAbelianGroup::from_cyclic_factors({1, 1}).is_trivial());
    CHECK(FiniteAbelianGroup::cyclic(1).is_trivial());
    CHECK(FiniteAbelianGroup::cyclic(2).embeds_in(FiniteAbelianGroup({2, 2})));
    CHECK_FALSE(FiniteAbelianGroup::cyclic(4).embeds_in(FiniteAbelianGroup({2, 2})));
    CHECK_THROWS_AS(FiniteAbelianGroup({4, 2}), DomainError);
    CHECK_THROWS_AS(FiniteAbelianGroup({1, 2}), DomainError);
    for (std::int64_t n = 1; n <= 30; ++n)
        for (std::int64_t p : {2, 3, 5, 7}) {
            auto c = FiniteAbelianGroup::cyclic(n);
            CHECK(c.p_torsion_order(p) == c.mod_p_quotient_order(p));
        }
}

TEST_CASE("Kodaira symbols")
{
    for (int code : {1, 2, 3, 4, 5, 9, 14, -1, -2, -3, -4, -5, -9}) {
        auto k = KodairaType::from_code(code);
        CHECK(k.code() == code);
        CHECK(KodairaType::parse(k.to_string()) == k);
    }
    CHECK(KodairaType::parse("In:5").components() == 5);
    CHECK(KodairaType::parse("In*:3").components() == 8);
    CHECK(KodairaType::parse("II*").components() == 9);
    CHECK(KodairaType::parse("In*:3").geometric_component_group() == FiniteAbelianGroup::cyclic(4));
    CHECK(KodairaType::parse("In*:2").geometric_component_group() == FiniteAbelianGroup({2, 2}));
    CHECK(KodairaType::parse("IV*").geometric_component_group() == FiniteAbelianGroup::cyclic(3));
    CHECK_THROWS_AS(KodairaType::parse("I7"), ParseError);
    CHECK_THROWS_AS(KodairaType::from_code(0), ParseError);
    CHECK_THROWS_AS(KodairaType(Family::In, 0), DomainError);
}

TEST_CASE("local data examples")
{
    auto good = tate_local(WeierstrassCurve(0, 0, 0, 0, 1), Integer(5));
    CHECK(good.kodaira == KodairaType(Family::I0));
    CHECK(good.conductor_exponent == 0);
    CHECK(good.tamagawa == 1);
    CHECK(good.phi_arithmetic.is_trivial());

    auto e = tate_local(WeierstrassCurve(0, -1, 1, -10, -20), Integer(11));
    CHECK(e.kodaira == KodairaType(Family::In, 5));
    CHECK(e.conductor_exponent == 1);
    CHECK(e.tamagawa == 5);
    CHECK(e.split);
    CHECK(is_split_multiplicative(e));
    CHECK(e.phi_arithmetic == FiniteAbelianGroup::cyclic(5));
    CHECK(phi_p_part_order(e, 5) == 5);
    CHECK(phi_p_part_order(e, 3) == 1);

    auto c27 = tate_local(WeierstrassCurve(0, 0, 1, 0, 0), Integer(3));
    CHECK(c27.kodaira == KodairaType(Family::II));
    CHECK(c27.conductor_exponent == 3);
    CHECK(c27.tamagawa == 1);
    CHECK(phi_p_part_order(c27, 3) == 1);

    auto iv = tate_local(WeierstrassCurve(0, 1, 0, -1, 0), Integer(2));
    CHECK(iv.kodaira == KodairaType(Family::IV));
    CHECK(iv.tamagawa == 3);
    CHECK(phi_p_part_order(iv, 3) == 3);

    CHECK_THROWS_WITH_AS(phi_p_part_order(e, 2), "odd p required", DomainError);
    CHECK_THROWS_WITH_AS(is_split_multiplicative(c27), "not multiplicative", DomainError);
    CHECK_THROWS_AS(tate_local(WeierstrassCurve(0, 0, 0, 0, 1), Integer(4)), DomainError);
}

TEST_CASE("non-minimal models are reduced first")
{
    /* 11.a2 scaled by u = 2, and y^2 + y = x^3 scaled by u = 3 */
    auto a = tate_local(WeierstrassCurve(0, -4, 8, -160, -1280), Integer(2));
    CHECK(a.kodaira.is_good());
    CHECK(a.discriminant_valuation == 0);
    CHECK(a.to_minimal.u == 2);
    CHECK(transform(WeierstrassCurve(0, -4, 8, -160, -1280), a.to_minimal) == a.minimal_model);
    auto b = tate_local(WeierstrassCurve(0, 0, 27, 0, 0), Integer(3));
    CHECK(b.kodaira == KodairaType(Family::II));
    CHECK(b.tamagawa == 1);
    CHECK(b.discriminant_valuation == 3);
}

TEST_CASE("corpus agrees with the oracle fixtures")
{
    for (auto const& c : corpus()) {
        for (auto const& row : c.record.local) {
            auto local = tate_local(c.curve, row.prime);
            INFO(c.label, " at ", row.prime.get_str());
            CHECK(local.kodaira == row.kodaira);
            CHECK(local.conductor_exponent == row.conductor_exponent);
            CHECK(local.tamagawa == row.tamagawa);
            if (row.discriminant_valuation)
                CHECK(local.discriminant_valuation == *row.discriminant_valuation);
            if (local.kodaira.is_multiplicative()) {
                CHECK(local.split == (*row.reduction_type == 1));
                CHECK(is_split_multiplicative(local) == local.split);
            }
        }
    }
}

TEST_CASE("structural invariants on the corpus")
{
    for (auto const& c : corpus()) {
        for (Integer const& ell : prime_divisors(c.curve.discriminant().get_num())) {
            auto local = tate_local(c.curve, ell);
            INFO(c.label, " at ", ell.get_str());
            int m = local.kodaira.components();
            CHECK(local.discriminant_valuation == local.conductor_exponent + m - 1);
            CHECK(local.components == m);
            CHECK(local.phi_arithmetic.order() == local.tamagawa);
            CHECK(local.phi_geometric.order() % local.tamagawa == 0);
            CHECK(local.phi_arithmetic.embeds_in(local.phi_geometric));
            CHECK((local.conductor_exponent == 0) == local.kodaira.is_good());
            CHECK((local.conductor_exponent == 1) == local.kodaira.is_multiplicative());
            if (local.kodaira.is_additive())
                CHECK(local.conductor_exponent >= 2);
            auto const& inv = local.minimal_model.invariants();
            if (local.kodaira.is_multiplicative()) {
                CHECK(local.discriminant_valuation == local.kodaira.n());
                CHECK(valuation(inv.c4, ell) == 0);
            }
            if (local.kodaira.is_additive())
                CHECK((inv.c4 == 0 || valuation(inv.c4, ell) >= 1));
            for (std::int64_t p : {3, 5, 7})
                CHECK(phi_p_part_order(local, p) == tamagawa_p_part(local.tamagawa, p));

            auto again = tate_local(local.minimal_model, ell);
            CHECK(again.minimal_model == local.minimal_model);
            CHECK(again.kodaira == local.kodaira);
            CHECK(again.tamagawa == local.tamagawa);
            CHECK(again.to_minimal.is_identity());
            CHECK(transform(c.curve, local.to_minimal) == local.minimal_model);
        }
    }
}

TEST_CASE("local data is invariant under integral coordinate changes")
{
    std::mt19937_64 rng(51);
    for (auto const& c : corpus()) {
        Transformation t{1, support::random_integer(rng, -30, 30), support::random_integer(rng, -30, 30),
                         support::random_integer(rng, -30, 30)};
        auto moved = transform(c.curve, t);
        for (auto const& row : c.record.local) {
            auto a = tate_local(c.curve, row.prime), b = tate_local(moved, row.prime);
            INFO(c.label, " at ", row.prime.get_str());
            CHECK(a.kodaira == b.kodaira);
            CHECK(a.tamagawa == b.tamagawa);
            CHECK(a.conductor_exponent == b.conductor_exponent);
            CHECK(a.discriminant_valuation == b.discriminant_valuation);
            CHECK(a.split == b.split);
        }
        /* scaling by ell makes the model non-minimal at ell only */
        Integer ell = c.record.local.front().prime;
        auto scaled = transform(c.curve, Transformation{make_rational(1, ell)});
        auto d = tate_local(scaled, ell);
        CHECK(d.kodaira == c.record.local.front().kodaira);
        CHECK(d.tamagawa == c.record.local.front().tamagawa);
        CHECK(transform(scaled, d.to_minimal) == d.minimal_model);
    }
}
