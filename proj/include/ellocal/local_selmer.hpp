#ifndef ELLOCAL_LOCAL_SELMER_HPP_
#define ELLOCAL_LOCAL_SELMER_HPP_

#include "ellocal/arith.hpp"
#include "ellocal/polynomial.hpp"
#include "ellocal/tate.hpp"
#include "ellocal/weierstrass.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace ellocal {

/* A place of Q: the real place or a finite prime. */
class Place {
  public:
    static Place real() { return Place(); }
    static Place finite(Integer prime);

    bool is_real() const { return !prime_; }
    Integer const& prime() const;
    /* "inf" or the decimal prime */
    std::string to_string() const;
    static Place parse(std::string const& text);

    friend bool operator==(Place const& a, Place const& b);
    friend bool operator<(Place const& a, Place const& b);

  private:
    std::optional<Integer> prime_;
};

/* Orders of the local objects attached to E[p] at one place. */
struct LocalSelmerOrders {
    Place place;
    std::int64_t torsion_order = 1;    /* #E(K_v)[p] */
    std::int64_t kummer_order = 1;     /* #E(K_v)/pE(K_v), the local Selmer condition */
    std::int64_t phi_p = 1;            /* #Phi(k_v)[p] */
    std::int64_t relaxed_order = 1;    /* #H^1_(S)(K_v, E[p]) */
    std::int64_t restricted_order = 1; /* #H^1_[S](K_v, E[p]) */
    std::int64_t tt_p = 1;             /* #TT(E/K_v)[p] */

    /* kummer / torsion and relaxed / torsion */
    Rational selmer_euler_factor() const;
    Rational relaxed_euler_factor() const;
};

/* Supported primes p for the torsion module E[p]. */
bool is_supported_p(std::int64_t p);
void require_supported_p(std::int64_t p);

/* psi_p in x for an integral model, p in {3, 5, 7}; degree (p^2 - 1)/2. */
IntegerPolynomial division_polynomial(WeierstrassCurve const& curve, std::int64_t p);

/* 4x^3 + b2 x^2 + 2 b4 x + b6 = (2y + a1 x + a3)^2 on the curve */
IntegerPolynomial two_torsion_polynomial(WeierstrassCurve const& curve);

/* #E(K_v)[p]. Any integral model may be passed for a finite place. */
std::int64_t local_torsion_order(WeierstrassCurve const& curve, Place const& place, std::int64_t p,
                                 int max_precision = 2048);

/* #E(K_v)/pE(K_v) from #E(K_v)[p]. */
std::int64_t local_kummer_order(Place const& place, std::int64_t p, std::int64_t torsion_order);

LocalSelmerOrders assemble_local_orders(WeierstrassCurve const& curve, Place const& place, std::int64_t p,
                                        int max_precision = 2048);
/* Finite place with reduction data already computed. */
LocalSelmerOrders assemble_local_orders(LocalData const& local, std::int64_t p, int max_precision = 2048);

}  // namespace ellocal

#endif /* ELLOCAL_LOCAL_SELMER_HPP_ */
