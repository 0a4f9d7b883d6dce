#pragma once

#include "rifs/orlicz.hpp"
#include "rifs/space.hpp"
#include "rifs/verdict.hpp"
#include "rifs/weight.hpp"

#include <utility>
#include <vector>

namespace rifs {

// Geometric grid 10^lo .. 10^hi with `per_decade` points per decade.
std::vector<double> log_grid(int lo_exp = -8, int hi_exp = 8, int per_decade = 17);

// ---- Orlicz functions ----------------------------------------------------

// a_psi = sup{ t > 0 : psi(t) = 0 }.
double a_psi(const OrliczSpec& psi);

// psi(2u) <= K psi(u) for all u.  Table-defined psi never gets an
// unqualified `holds`: the best it can get is inconclusive with the
// observed K attached.
Verdict is_delta2(const OrliczSpec& psi, double u_min = 1e-8, double u_max = 1e8);

// lim_{t->0} psi(t)/t = 0.
Verdict is_N_at_zero(const OrliczSpec& psi);

// K-order continuity of L^psi on [0, alpha): Delta2, and N-function at zero
// when alpha = infinity.
Verdict orlicz_koc_decider(const OrliczSpec& psi, Domain alpha);

// Cross-check on [0, inf): a_psi = 0 against growth of phi(t) for t = 10^0..10^8.
Verdict a_psi_vs_phi_infty(const OrliczSpec& psi);

// ---- fundamental function limits ----------------------------------------

// phi(infinity) = infinity?  holds / fails(with the finite limit as witness).
Verdict phi_at_infinity(const SpaceHandle& space);

// d = lim phi(t)/t (analytic where the family allows it).
double fundamental_ratio_limit(const SpaceHandle& space);

// Embedding into L^1[0, inf) iff d > 0.  The probe log carries phi(t)/t and
// the associate fundamental function t/phi(t) on t = 10^0 .. 10^8.
Verdict embeds_in_L1(const SpaceHandle& space);

// ---- Gamma_{p,w} on [0, inf) ----------------------------------------------

// v(t) = t^(p'-1) W(t) W_p(t) / (W(t) + W_p(t))^(p'+1).
double reflexivity_density(double p, const WeightSpec& w, double t);
// integral_t0^T of that density by adaptive quadrature.
double reflexivity_density_integral(double p, const WeightSpec& w, double t0, double T);

// Three stages: prerequisite integral_0^t w(s) s^-p ds = inf, W(inf) = inf,
// V(inf) = inf.  The last two are decided from the tail exponents; the
// window integral of v on [1, 1e6] is logged as corroboration.
Verdict gamma_reflexive_decider(double p, const WeightSpec& w);

// Reflexive and W strictly increasing (no piece with c = 0).
Verdict gamma_approx_compact_decider(double p, const WeightSpec& w);

// W(t) <= A W_p(t) for all t > 0; `constant` holds the observed A.
Verdict rbp_check(double p, const WeightSpec& w);

// A weight tabulated on a log grid as power-law pieces, with the exact
// samples it interpolates and the divergence verdict for its integral.
struct DerivedWeight {
    WeightSpec v;
    std::vector<std::pair<double, double>> samples;
    bool integral_diverges = false;
    // Numerical evidence for the divergence (a lower bound or a limit value).
    double evidence = 0.0;
    Verdict hypotheses;
};

// v(t) = (t / W(t))^p' w(t); hypotheses W in Delta2 and W(inf) = inf.
DerivedWeight lambda_associate_weight(double p, const WeightSpec& w);

// v(t) = d/dt (integral_t^inf w(s) s^-p ds)^(-1/(p-1)); hypotheses
// W(inf) = inf, integral_0^1 w s^-p = inf and RB_p.
DerivedWeight gamma_dual_weight(double p, const WeightSpec& w);

} // namespace rifs
