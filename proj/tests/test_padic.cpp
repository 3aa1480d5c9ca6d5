#include "ellocal/errors.hpp"
#include "ellocal/padic.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ellocal;

namespace {

int count(IntegerPolynomial const& f, long ell)
{
    return count_roots_padic(f, PadicContext::for_polynomial(Integer(ell), f));
}

IntegerPolynomial linear(Rational const& r)
{
    return IntegerPolynomial(std::vector<Integer>{-r.get_num(), r.get_den()});
}

}  // namespace

TEST_CASE("root count examples")
{
    CHECK(count(IntegerPolynomial{-1, 0, 1}, 3) == 2);
    CHECK(count(IntegerPolynomial{-3, 0, 1}, 3) == 0);
    CHECK(count(IntegerPolynomial{1, 0, 1}, 5) == 2);
    CHECK(count(IntegerPolynomial{1, 0, 1}, 7) == 0);
    CHECK(count(IntegerPolynomial{-17, 0, 1}, 2) == 2);
    CHECK(count(IntegerPolynomial{-5, 0, 1}, 2) == 0);
    CHECK(count(IntegerPolynomial{-2, 0, 0, 1}, 5) == 1); /* cube roots of 2: 3^3 = 27 = 2 mod 25 */
}

TEST_CASE("roots of negative valuation are counted")
{
    CHECK(count(IntegerPolynomial{-1, 0, 9}, 3) == 2);          /* +-1/3 */
    CHECK(count(IntegerPolynomial{-1, 0, 0, 0, 625}, 5) == 4);  /* i^k/5 */
    CHECK(count(IntegerPolynomial{-1, 0, 0, 0, 2401}, 7) == 2); /* +-1/7 */
    CHECK(count(IntegerPolynomial{-1, 0, 3}, 3) == 0);          /* odd valuation */
    CHECK(count(linear(make_rational(7, 343)), 7) == 1);
    CHECK(count(linear(Rational(0)) * IntegerPolynomial{-2, 0, 1}, 7) == 3); /* 0 and +-sqrt 2 */
}

TEST_CASE("multiplying by (x - r) adds exactly one root")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        long ell = std::vector<long>{3, 5, 7, 11}[trial % 4];
        std::vector<Integer> c;
        for (int i = 0; i < 4; ++i)
            c.push_back(support::random_integer(rng, -60, 60));
        c.push_back(support::random_integer(rng, 1, 9));
        IntegerPolynomial f(c);
        Rational r = make_rational(support::random_integer(rng, -200, 200), support::random_integer(rng, 1, 30));
        if (f.evaluate(r) == 0 || f.degree() < 1)
            continue;
        CHECK(count(f * linear(r), ell) == count(f, ell) + 1);
        CHECK(count(f * linear(r) * linear(r), ell) == count(f, ell) + 1);
    }
}

TEST_CASE("count agrees with exhaustive search modulo ell^N on random quartics")
{
    std::mt19937_64 rng(32);
    int checked = 0, rejected = 0;
    for (int trial = 0; checked < 1000; ++trial) {
        struct Setting {
            long ell;
            int N;
        };
        Setting s = std::vector<Setting>{{3, 6}, {5, 5}, {7, 4}}[trial % 3];
        std::vector<std::int64_t> c;
        for (int i = 0; i < 4; ++i)
            c.push_back(std::uniform_int_distribution<std::int64_t>(-40, 40)(rng));
        c.push_back(1);
        IntegerPolynomial f(std::vector<Integer>(c.begin(), c.end()));
        if (squarefree_part(f).degree() != 4)
            continue;
        auto brute = support::brute_roots_mod(c, s.ell, s.N);
        if (brute.ambiguous) {
            ++rejected;
            continue;
        }
        ++checked;
        CHECK_MESSAGE(count(f, s.ell) == brute.count, f.to_string(), " at ", s.ell);
    }
    MESSAGE("rejected ", rejected, " ambiguous instances");
    CHECK(rejected < 200);
}

TEST_CASE("insufficient precision is reported, never a wrong count")
{
    Integer far = power(Integer(3), 60);
    IntegerPolynomial f = linear(Rational(1)) * IntegerPolynomial(std::vector<Integer>{-(far + 1), 1});
    PadicContext tight{Integer(3), 8, 32};
    CHECK_THROWS_AS(count_roots_padic(f, tight), UndecidedError);
    try {
        count_roots_padic(f, tight);
    } catch (UndecidedError const& e) {
        CHECK(e.precision() == 32);
        CHECK(std::string(e.what()) == "undecided at precision 32");
    }
    PadicContext enough{Integer(3), 8, 256};
    auto roots = padic_roots(f, enough);
    CHECK(roots.roots.size() == 2);
    CHECK(roots.precision > 60);
}

TEST_CASE("degenerate input is rejected")
{
    PadicContext ctx{Integer(5)};
    CHECK_THROWS_WITH_AS(count_roots_padic(IntegerPolynomial(), ctx), "root count of the zero polynomial",
                         DomainError);
    CHECK_THROWS_WITH_AS(count_roots_padic(IntegerPolynomial{7}, ctx), "root count of a constant polynomial",
                         DomainError);
    CHECK_THROWS_AS(count_roots_padic(IntegerPolynomial{1, 1}, PadicContext{Integer(6)}), DomainError);
}

TEST_CASE("square test on approximations")
{
    Integer ell(5);
    PadicNumber x{false, 2, Integer(4), 3}; /* 25 * 4 (mod 5^5) */
    CHECK(is_square(x, ell) == std::optional<bool>(true));
    PadicNumber y{false, 1, Integer(4), 3};
    CHECK(is_square(y, ell) == std::optional<bool>(false));
    PadicNumber unknown{false, 4, Integer(0), 0};
    CHECK_FALSE(is_square(unknown, ell).has_value());
    PadicNumber two_adic{false, 0, Integer(1), 2}; /* 1 mod 4: not enough to decide mod 8 */
    CHECK_FALSE(is_square(two_adic, Integer(2)).has_value());
    CHECK(is_square(PadicNumber::zero(), ell) == std::optional<bool>(true));
}
