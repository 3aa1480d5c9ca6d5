#include "ellocal/ledger.hpp"

#include "ellocal/errors.hpp"
#include "ellocal/finite_field.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ellocal {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::undecided:
        return "undecided";
    case Verdict::not_evaluated:
        return "not evaluated";
    }
    return "?";
}

Verdict EulerLedger::verdict(std::string const& name) const
{
    for (auto const& v : verdicts)
        if (v.name == name)
            return v.verdict;
    return Verdict::not_evaluated;
}

std::vector<Place> build_S(WeierstrassCurve const& curve, std::int64_t p)
{
    require_supported_p(p);
    std::vector<Place> S{Place::real(), Place::finite(Integer(p))};
    curve.integral_coefficients();
    for (Integer const& ell : prime_divisors(curve.discriminant().get_num())) {
        if (ell == p)
            continue;
        if (tate_local(curve, ell).discriminant_valuation > 0)
            S.push_back(Place::finite(ell));
    }
    std::sort(S.begin(), S.end());
    return S;
}

std::int64_t global_torsion_order(WeierstrassCurve const& curve, std::int64_t p)
{
    IntegerPolynomial psi = division_polynomial(curve, p);
    IntegerPolynomial F = two_torsion_polynomial(curve);
    std::int64_t points = 1;
    for (Rational const& x : rational_roots(psi)) {
        Rational y2 = F.evaluate(x);
        /* F(x) = 0 would be a 2-torsion point, impossible for a root of psi_p */
        if (sgn(y2) == 0)
            throw AlgorithmInvariantError("root of psi_" + std::to_string(p) + " is 2-torsion");
        if (is_rational_square(y2))
            points += 2;
    }
    if (points != 1 && points != p)
        throw AlgorithmInvariantError("#E(Q)[" + std::to_string(p) + "] = " + std::to_string(points));
    return points;
}

Rational chi_selmer(std::int64_t global_torsion, std::vector<LocalSelmerOrders> const& local)
{
    Rational chi = make_rational(Integer(global_torsion), Integer(global_torsion));
    for (auto const& o : local)
        chi *= o.selmer_euler_factor();
    return chi;
}

Rational chi_relaxed(std::int64_t global_torsion, std::vector<LocalSelmerOrders> const& local)
{
    Rational chi = make_rational(Integer(global_torsion), Integer(global_torsion));
    for (auto const& o : local)
        chi *= o.relaxed_euler_factor();
    return chi;
}

namespace {

bool local_identities_hold(LocalSelmerOrders const& o, std::string& why)
{
    std::ostringstream out;
    if (o.relaxed_order != o.kummer_order * o.phi_p)
        out << "relaxed != kummer*phi_p; ";
    if (o.kummer_order != o.restricted_order * o.phi_p)
        out << "kummer != restricted*phi_p; ";
    if (o.relaxed_order * o.restricted_order != o.kummer_order * o.kummer_order)
        out << "relaxed*restricted != kummer^2; ";
    if (!(o.restricted_order <= o.kummer_order && o.kummer_order <= o.relaxed_order))
        out << "chain restricted <= kummer <= relaxed broken; ";
    if (o.tt_p != o.phi_p)
        out << "tt_p != phi_p; ";
    why = out.str();
    return why.empty();
}

std::uint64_t fnv1a(std::string const& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

/* Reproducible choice of good primes outside S. */
std::vector<Integer> sample_good_primes(WeierstrassCurve const& curve, std::int64_t p, std::vector<Place> const& S,
                                        LedgerOptions const& options)
{
    Integer disc = curve.discriminant().get_num();
    std::vector<Integer> candidates;
    for (Integer ell = 3; ell < options.truncation_bound; ell = next_prime(ell)) {
        if (std::find(S.begin(), S.end(), Place::finite(ell)) != S.end() || mod(disc, ell) == 0)
            continue;
        candidates.push_back(ell);
    }
    std::mt19937_64 rng(fnv1a(curve.to_string() + "/" + std::to_string(p)));
    std::vector<Integer> picked;
    std::size_t want = static_cast<std::size_t>(std::max(0, options.truncation_samples));
    std::sample(candidates.begin(), candidates.end(), std::back_inserter(picked), want, rng);
    return picked;
}

NamedVerdict equality(std::string name, bool decided, bool holds, std::string detail)
{
    if (!decided)
        return {std::move(name), Verdict::undecided, "some local orders are undecided"};
    return {std::move(name), holds ? Verdict::pass : Verdict::fail, std::move(detail)};
}

}  // namespace

EulerLedger verify_main_theorem(WeierstrassCurve const& curve, std::int64_t p, LedgerOptions const& options)
{
    require_supported_p(p);
    curve.integral_coefficients();

    EulerLedger L{curve, p};
    L.S = build_S(curve, p);
    L.global_torsion = global_torsion_order(curve, p);

    bool decided = true;
    bool identities = true;
    std::string identity_detail;
    bool p_is_good = true;
    for (Place const& v : L.S) {
        LocalSelmerOrders orders{v};
        try {
            if (v.is_real()) {
                orders = assemble_local_orders(curve, v, p, options.max_precision);
            } else {
                LocalData local = tate_local(curve, v.prime());
                if (v.prime() == p && !local.kodaira.is_good())
                    p_is_good = false;
                L.mt_rhs *= tamagawa_p_part(local.tamagawa, p);
                L.reduction.push_back(local);
                orders = assemble_local_orders(local, p, options.max_precision);
            }
        } catch (UndecidedError const& e) {
            decided = false;
            L.undecided.push_back("torsion at " + v.to_string() + ": " + e.what());
            L.local.push_back(orders);
            continue;
        }
        std::string why;
        if (!local_identities_hold(orders, why)) {
            identities = false;
            identity_detail += v.to_string() + ": " + why;
        }
        if (orders.phi_p != 1)
            L.all_phi_trivial = false;
        L.kummer_total *= orders.kummer_order;
        L.relaxed_total *= orders.relaxed_order;
        L.restricted_total *= orders.restricted_order;
        L.local.push_back(orders);
    }

    L.chi_selmer = chi_selmer(L.global_torsion, L.local);
    L.chi_relaxed = chi_relaxed(L.global_torsion, L.local);
    L.mt_lhs = L.chi_relaxed / L.chi_selmer;

    L.verdicts.push_back(equality("euler_characteristic", decided, L.chi_selmer == 1,
                                  "chi_Sel = " + to_string(L.chi_selmer)));
    L.verdicts.push_back(equality("main_theorem", decided, L.mt_lhs == Rational(L.mt_rhs),
                                  "mt_lhs = " + to_string(L.mt_lhs) + ", mt_rhs = " + L.mt_rhs.get_str()));
    L.verdicts.push_back(equality("relaxed_restricted_ratio", decided,
                                  L.relaxed_total == L.restricted_total * L.mt_rhs * L.mt_rhs,
                                  "prod relaxed = " + L.relaxed_total.get_str() + ", prod restricted = " +
                                      L.restricted_total.get_str()));
    if (identities)
        L.verdicts.push_back({"local_identities", decided ? Verdict::pass : Verdict::undecided,
                              decided ? "" : "some local orders are undecided"});
    else
        L.verdicts.push_back({"local_identities", Verdict::fail, identity_detail});
    L.verdicts.push_back(equality("order_chain", decided,
                                  L.restricted_total <= L.kummer_total && L.kummer_total <= L.relaxed_total,
                                  L.all_phi_trivial ? "all Phi[p] trivial: the chain is an equality" : ""));

    /* outside S the Euler factors must be 1 and the local count must match F_ell */
    bool truncation_ok = true, truncation_decided = true;
    std::string truncation_detail;
    for (Integer const& ell : sample_good_primes(curve, p, L.S, options)) {
        TruncationSample sample{ell, LocalSelmerOrders{Place::finite(ell)}};
        try {
            sample.orders = assemble_local_orders(curve, Place::finite(ell), p, options.max_precision);
        } catch (UndecidedError const& e) {
            truncation_decided = false;
            L.undecided.push_back("torsion at " + ell.get_str() + ": " + e.what());
            continue;
        }
        sample.reduced_torsion = static_cast<std::int64_t>(
            count_p_torsion_mod(curve, ell.get_ui(), static_cast<std::uint64_t>(p)));
        if (sample.orders.selmer_euler_factor() != 1 || sample.orders.relaxed_euler_factor() != 1 ||
            sample.orders.torsion_order != sample.reduced_torsion) {
            truncation_ok = false;
            truncation_detail += ell.get_str() + " ";
        }
        L.truncation.push_back(sample);
    }
    if (!truncation_ok)
        L.verdicts.push_back({"truncation", Verdict::fail, "mismatch at " + truncation_detail});
    else
        L.verdicts.push_back({"truncation", truncation_decided ? Verdict::pass : Verdict::undecided, ""});

    /* #Sel_p(E/Q) <= #H^1_[S](Q,E[p]) * mt_rhs, only from supplied global orders */
    NamedVerdict bound{"selmer_bound", Verdict::not_evaluated, ""};
    auto const& ext = options.external;
    if (!ext.selmer_order || !ext.restricted_order)
        bound.detail = "global Selmer orders not supplied";
    else if (!p_is_good)
        bound.detail = "p is a bad prime";
    else {
        Integer rhs = *ext.restricted_order * L.mt_rhs;
        bound.verdict = *ext.selmer_order <= rhs ? Verdict::pass : Verdict::fail;
        bound.detail = "#Sel = " + ext.selmer_order->get_str() + ", bound = " + rhs.get_str() +
                       (*ext.selmer_order < rhs ? ", strict" : ", not strict");
    }
    L.verdicts.push_back(bound);
    return L;
}

}  // namespace ellocal
