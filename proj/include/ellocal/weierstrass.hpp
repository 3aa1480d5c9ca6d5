#ifndef ELLOCAL_WEIERSTRASS_HPP_
#define ELLOCAL_WEIERSTRASS_HPP_

#include "ellocal/arith.hpp"

#include <array>
#include <string>
#include <string_view>

namespace ellocal {

/* Change of variables x = u^2 x' + r, y = u^3 y' + u^2 s x' + t. */
struct Transformation {
    Rational u = 1;
    Rational r = 0;
    Rational s = 0;
    Rational t = 0;

    /* Apply *this first, then next. */
    Transformation then(Transformation const& next) const;
    bool is_identity() const { return u == 1 && r == 0 && s == 0 && t == 0; }
    friend bool operator==(Transformation const&, Transformation const&) = default;
};

struct Invariants {
    Rational b2, b4, b6, b8;
    Rational c4, c6;
    Rational discriminant;
    Rational j;
};

/* y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q, nonsingular.
 *
 * Curves built from user input are integral: rational coefficients are
 * cleared with x -> x/u^2, y -> y/u^3, u the lcm of the denominators.
 * Non-integral models only arise as results of transform(). */
class WeierstrassCurve {
  public:
    WeierstrassCurve(Integer a1, Integer a2, Integer a3, Integer a4, Integer a6);
    explicit WeierstrassCurve(std::array<Integer, 5> const& a);

    /* Integral model of the curve with the given rational coefficients. */
    static WeierstrassCurve from_rational(std::array<Rational, 5> const& a);
    /* "a1,a2,a3,a4,a6" */
    static WeierstrassCurve parse(std::string_view text);

    Rational const& a1() const { return a_[0]; }
    Rational const& a2() const { return a_[1]; }
    Rational const& a3() const { return a_[2]; }
    Rational const& a4() const { return a_[3]; }
    Rational const& a6() const { return a_[4]; }
    std::array<Rational, 5> const& coefficients() const { return a_; }

    bool is_integral() const;
    /* throws DomainError for non-integral models */
    std::array<Integer, 5> integral_coefficients() const;

    Invariants const& invariants() const { return inv_; }
    Rational const& discriminant() const { return inv_.discriminant; }

    std::string to_string() const;
    friend bool operator==(WeierstrassCurve const& a, WeierstrassCurve const& b) { return a.a_ == b.a_; }

  private:
    struct unchecked_tag {};
    WeierstrassCurve(std::array<Rational, 5> a, unchecked_tag);
    friend WeierstrassCurve transform(WeierstrassCurve const&, Transformation const&);

    std::array<Rational, 5> a_;
    Invariants inv_;
};

Invariants compute_invariants(std::array<Rational, 5> const& a);

/* The same curve in the coordinates of tr; discriminant scales by u^-12. */
WeierstrassCurve transform(WeierstrassCurve const& curve, Transformation const& tr);

}  // namespace ellocal

#endif /* ELLOCAL_WEIERSTRASS_HPP_ */
