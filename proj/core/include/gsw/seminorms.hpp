#pragma once

#include <map>
#include <string>
#include <vector>

#include "gsw/field.hpp"

namespace gsw {

/// Indices of the four-parameter half-space seminorm family.
struct HalfSpaceIndices {
    double s, t, tau1, tau2;

    HalfSpaceIndices(double s_, double t_, double tau1_, double tau2_)
        : s(s_), t(t_), tau1(tau1_), tau2(tau2_) {
        if (!(s > 0.0 && t > 0.0 && tau1 > 0.0 && tau2 > 0.0))
            throw ParameterError("HalfSpaceIndices: indices must be positive");
        if (!(s + t >= 1.0))
            throw ParameterError("HalfSpaceIndices: nontriviality requires s + t >= 1");
    }
};

struct SeminormCaps {
    int beta = 8;
    int k = 8;
    int l = 8;
};

/// sup over the grid and index scan of
///   h^{|alpha+beta|} / (alpha!^{rho2} beta!^{rho1}) <x>^{|alpha|} |f^(beta)(x)|
/// with spectral b-derivatives; factorial weights run through log-gamma and
/// the maximum is taken in log space (returns +inf past the double range).
double gs_seminorm(const SampledSignal& f, double rho1, double rho2, double h,
                   int alpha_max, int beta_max);

/// sup of h^{|beta|+k+l1+l2} / (beta!^s k!^t l1!^tau1 l2!^tau2) *
/// (a^{l1} + a^{-l2}) <b>^k |d_b^beta Phi(b,a)| over the lattice and scan.
double halfspace_seminorm_p(const HalfSpaceField& field, const HalfSpaceIndices& idx,
                            double h, SeminormCaps caps);

/// sup of h^{|beta|} / beta!^s e^{h(a^{1/tau1} + a^{-1/tau2} + |b|^{1/t})}
/// |d_b^beta Phi(b,a)|.  Returns +inf when the weighted values keep growing
/// toward the lattice boundary (the sup is not attained on the grid), the
/// computable surrogate for divergence of the exponential-weight family.
double halfspace_seminorm_q(const HalfSpaceField& field, const HalfSpaceIndices& idx,
                            double h, SeminormCaps caps);

enum class SeminormKind { GsP, HalfP, HalfQ };

struct SeminormReport {
    SeminormKind kind{};
    std::vector<double> h_sweep;
    std::vector<double> values;      // upper cap level; +inf sentinel possible
    std::vector<bool> finite;        // two-level cap stability per h
    double finite_up_to = 0.0;       // largest h judged finite (0 if none)
    SeminormCaps caps;               // base cap level of the stability pair
};

/// Runs the scan at caps and caps+2 per h; "finite" needs both values inside
/// the double range and within 1% of each other.  This operationalizes the
/// supremum over the unbounded index set.
SeminormReport gs_seminorm_sweep(const SampledSignal& f, double rho1, double rho2,
                                 const std::vector<double>& h_sweep, int alpha_max,
                                 int beta_max);
SeminormReport halfspace_seminorm_sweep(SeminormKind kind, const HalfSpaceField& field,
                                        const HalfSpaceIndices& idx,
                                        const std::vector<double>& h_sweep,
                                        SeminormCaps caps);

std::string seminorm_report_to_json(const SeminormReport& rep);

struct DecaySlice {
    double rate = 0.0;        // -slope of the log fit
    double exponent = 0.0;    // power of the independent variable
    double r_squared = 0.0;
    double band_lo = 0.0, band_hi = 0.0;
    int n_points = 0;
};

struct DecayFit {
    DecaySlice a_inf;   // log sup_b |Phi| vs a^{1/(t-rho2)}, upper scale decade
    DecaySlice a_zero;  // log sup_b |Phi| vs a^{-1/(s-rho1)}, lower scale decade
    DecaySlice b_decay; // log sup_a |Phi| vs |b|^{1/t}, outer-b band
};

/// Three least-squares fits of log sup-slices against the subexponential
/// rate variables.  Preconditions: t > rho2, s > rho1, field nonzero.
DecayFit decay_fit(const HalfSpaceField& field, double s, double t, double rho1,
                   double rho2);

std::string decay_fit_to_json(const DecayFit& fit);

enum class IndexTheorem { T3, T3Remark, T4a, T4b };

struct IndexCalculusResult {
    IndexTheorem theorem{};
    double rho1 = 0, rho2 = 0;
    // signal-side space (S^{upper}_{lower})_0
    double signal_upper = 0, signal_lower = 0;
    // half-space S^{s}_{t, tau1, tau2}
    double field_s = 0, field_t = 0, field_tau1 = 0, field_tau2 = 0;
    bool forward = true;   // true: signal -> field (analysis); false: synthesis
    std::map<std::string, bool> hypotheses;
    bool all_hypotheses_ok = true;
};

/// Pure index arithmetic of the analysis/synthesis mapping statements;
/// violated hypotheses are flagged, never thrown.
IndexCalculusResult index_calculus(double rho1, double rho2, double s, double t,
                                   double tau1, double tau2, IndexTheorem theorem);

std::string index_result_to_json(const IndexCalculusResult& res);

} // namespace gsw
