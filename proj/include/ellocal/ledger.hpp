#ifndef ELLOCAL_LEDGER_HPP_
#define ELLOCAL_LEDGER_HPP_

#include "ellocal/arith.hpp"
#include "ellocal/local_selmer.hpp"
#include "ellocal/tate.hpp"
#include "ellocal/weierstrass.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ellocal {

enum class Verdict { pass, fail, undecided, not_evaluated };
std::string to_string(Verdict v);

struct NamedVerdict {
    std::string name;
    Verdict verdict = Verdict::not_evaluated;
    std::string detail;
};

/* Global orders that are not computed here; supplied by the caller. */
struct ExternalSelmerData {
    std::optional<Integer> selmer_order;     /* #Sel_p(E/Q) */
    std::optional<Integer> restricted_order; /* #H^1_[S](Q, E[p]) */
};

struct LedgerOptions {
    int truncation_samples = 5;
    int max_precision = 2048;
    std::int64_t truncation_bound = 500; /* sampled primes are below this */
    ExternalSelmerData external;
};

/* A good prime outside S with its local orders and the F_ell count. */
struct TruncationSample {
    Integer prime;
    LocalSelmerOrders orders;
    std::int64_t reduced_torsion = 0; /* #E~(F_ell)[p] */
};

struct EulerLedger {
    WeierstrassCurve curve;
    std::int64_t p = 3;
    std::vector<Place> S{};
    /* aligned with S; entries of undecided places hold defaults */
    std::vector<LocalSelmerOrders> local{};
    std::vector<LocalData> reduction{}; /* finite places of S, in order */
    std::int64_t global_torsion = 1;

    Rational chi_selmer{};
    Rational chi_relaxed{};
    Rational mt_lhs{};
    Integer mt_rhs = 1;
    Integer kummer_total = 1;
    Integer relaxed_total = 1;
    Integer restricted_total = 1;
    bool all_phi_trivial = true;

    std::vector<TruncationSample> truncation{};
    std::vector<std::string> undecided{};
    std::vector<NamedVerdict> verdicts{};

    /* not_evaluated if no verdict has that name */
    Verdict verdict(std::string const& name) const;
};

/* {inf} + {p} + {ell : v_ell(Delta_min) > 0}, sorted. */
std::vector<Place> build_S(WeierstrassCurve const& curve, std::int64_t p);

/* #E(Q)[p], from the rational roots of psi_p. */
std::int64_t global_torsion_order(WeierstrassCurve const& curve, std::int64_t p);

/* (#H^0 / #H^0) * prod kummer / torsion */
Rational chi_selmer(std::int64_t global_torsion, std::vector<LocalSelmerOrders> const& local);
/* the same product with the relaxed orders */
Rational chi_relaxed(std::int64_t global_torsion, std::vector<LocalSelmerOrders> const& local);

EulerLedger verify_main_theorem(WeierstrassCurve const& curve, std::int64_t p, LedgerOptions const& options = {});

}  // namespace ellocal

#endif /* ELLOCAL_LEDGER_HPP_ */
