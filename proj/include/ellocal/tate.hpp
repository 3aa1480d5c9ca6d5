#ifndef ELLOCAL_TATE_HPP_
#define ELLOCAL_TATE_HPP_

#include "ellocal/arith.hpp"
#include "ellocal/weierstrass.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ellocal {

/* Finite abelian group by invariant factors d1 | d2 | ... | dk, all > 1. */
class FiniteAbelianGroup {
  public:
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors);

    static FiniteAbelianGroup cyclic(std::int64_t n);
    /* Normal form of a product of cyclic groups of the given orders. */
    static FiniteAbelianGroup from_cyclic_factors(std::vector<std::int64_t> orders);

    std::span<std::int64_t const> invariant_factors() const { return factors_; }
    bool is_trivial() const { return factors_.empty(); }
    std::int64_t order() const;
    std::int64_t exponent() const;
    /* #G[p] = prod gcd(d_i, p) */
    std::int64_t p_torsion_order(std::int64_t p) const;
    /* #G/pG */
    std::int64_t mod_p_quotient_order(std::int64_t p) const;
    /* order and exponent divide, and no more invariant factors than other */
    bool embeds_in(FiniteAbelianGroup const& other) const;

    std::string to_string() const;
    friend bool operator==(FiniteAbelianGroup const&, FiniteAbelianGroup const&) = default;

  private:
    std::vector<std::int64_t> factors_;
};

class KodairaType {
  public:
    enum class Family { I0, In, II, III, IV, I0_star, In_star, IV_star, III_star, II_star };

    KodairaType() = default;
    /* n is required (>= 1) for In and In_star, and must be 0 otherwise */
    explicit KodairaType(Family family, int n = 0);

    /* "I0", "In:<n>", "II", "III", "IV", "I0*", "In*:<n>", "IV*", "III*", "II*" */
    static KodairaType parse(std::string const& text);
    /* PARI/LMFDB integer encoding: 1 = I0, 2..4 = II..IV, 4+n = In,
     * -1 = I0*, -2..-4 = II*..IV*, -4-n = In* */
    static KodairaType from_code(int code);
    int code() const;

    Family family() const { return family_; }
    int n() const { return n_; }
    bool is_good() const { return family_ == Family::I0; }
    bool is_multiplicative() const { return family_ == Family::In; }
    bool is_additive() const { return !is_good() && !is_multiplicative(); }

    /* irreducible components of the special fiber */
    int components() const;
    FiniteAbelianGroup geometric_component_group() const;

    std::string to_string() const;
    friend bool operator==(KodairaType const&, KodairaType const&) = default;

  private:
    Family family_ = Family::I0;
    int n_ = 0;
};

struct TateStep {
    std::string action;
    Transformation change;
};

/* Reduction data of a curve at one prime. */
struct LocalData {
    Integer prime;
    /* The input model if it is already minimal at ell, otherwise the model
     * reached by the last rescaling step. */
    WeierstrassCurve minimal_model;
    Transformation to_minimal;    /* input model -> minimal_model */
    /* every coordinate change of the step machine, in order; the changes
     * after the last rescale only serve the classification */
    std::vector<TateStep> trace;
    int discriminant_valuation = 0;
    KodairaType kodaira;
    int conductor_exponent = 0;
    std::int64_t tamagawa = 1;
    FiniteAbelianGroup phi_geometric;
    FiniteAbelianGroup phi_arithmetic;
    bool split = false;           /* meaningful for In only */
    int components = 1;
};

/* Tate's algorithm at ell for an integral model. */
LocalData tate_local(WeierstrassCurve const& curve, Integer const& ell);

/* Split test through c6 for ell >= 5, through the tangent slopes at the
 * node for ell = 2, 3; independent of the split flag set by tate_local. */
bool is_split_multiplicative(LocalData const& local);

/* #Phi(k_v)[p] from the invariant factors; p odd. */
std::int64_t phi_p_part_order(LocalData const& local, std::int64_t p);

/* p^min(1, v_p(c)) */
std::int64_t tamagawa_p_part(std::int64_t tamagawa, std::int64_t p);

}  // namespace ellocal

#endif /* ELLOCAL_TATE_HPP_ */
