#ifndef ELLOCAL_FINITE_FIELD_HPP_
#define ELLOCAL_FINITE_FIELD_HPP_

#include "ellocal/weierstrass.hpp"

#include <cstdint>
#include <vector>

namespace ellocal {

/* Enumeration is limited to primes up to this bound. */
inline constexpr std::uint64_t enumeration_prime_cap = 100000;

struct FiniteFieldPoint {
    bool infinity = true;
    std::uint64_t x = 0;
    std::uint64_t y = 0;

    static FiniteFieldPoint at_infinity() { return {}; }
    static FiniteFieldPoint affine(std::uint64_t x, std::uint64_t y) { return {false, x, y}; }
    friend bool operator==(FiniteFieldPoint const&, FiniteFieldPoint const&) = default;
};

/* Good reduction of an integral model modulo an odd prime ell <= cap,
 * with the affine chord-and-tangent group law. */
class ReducedCurve {
  public:
    ReducedCurve(WeierstrassCurve const& curve, std::uint64_t ell);

    std::uint64_t prime() const { return ell_; }
    bool contains(FiniteFieldPoint const& P) const;
    FiniteFieldPoint negate(FiniteFieldPoint const& P) const;
    FiniteFieldPoint add(FiniteFieldPoint const& P, FiniteFieldPoint const& Q) const;
    FiniteFieldPoint multiply(FiniteFieldPoint const& P, std::uint64_t n) const;

  private:
    std::uint64_t reduce(Rational const& c) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % ell_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + ell_ - b) % ell_; }
    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t ell_;
    std::uint64_t a1_, a2_, a3_, a4_, a6_;
};

struct PointEnumeration {
    ReducedCurve curve;
    std::vector<FiniteFieldPoint> points; /* infinity first, then by (x, y) */
};

PointEnumeration enumerate_points_mod(WeierstrassCurve const& curve, std::uint64_t ell);

/* #{P in E~(F_ell) : [p]P = O} by scalar multiplication over the enumeration. */
std::uint64_t count_p_torsion_mod(WeierstrassCurve const& curve, std::uint64_t ell, std::uint64_t p);

}  // namespace ellocal

#endif /* ELLOCAL_FINITE_FIELD_HPP_ */
