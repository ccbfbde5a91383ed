#pragma once

#include <cmath>
#include <vector>

#include "gsw/errors.hpp"

namespace gsw {

/// Compactly supported cutoff
///   r -> exp(peak - ((r - r0)(r1 - r))^{-1/(2(order-1))}),   r in (r0, r1),
/// zero elsewhere, with peak chosen so the maximum (at the midpoint) equals
/// `amplitude`.  Vanishes with all derivatives at r0 and r1.
class GevreyBump {
public:
    GevreyBump(double order, double r0, double r1, double amplitude = 1.0)
        : order_(order), r0_(r0), r1_(r1), amplitude_(amplitude) {
        if (!(order > 1.0))
            throw ParameterError("GevreyBump: order must exceed 1");
        if (!(r0 >= 0.0) || !(r1 > r0))
            throw ParameterError("GevreyBump: need 0 <= r0 < r1");
        q_ = 1.0 / (2.0 * (order - 1.0));
        const double half = 0.5 * (r1 - r0);
        peak_ = std::pow(half * half, -q_);
    }

    double order() const { return order_; }
    double lo() const { return r0_; }
    double hi() const { return r1_; }
    double amplitude() const { return amplitude_; }

    double operator()(double r) const {
        if (r <= r0_ || r >= r1_) return 0.0;
        const double u = (r - r0_) * (r1_ - r);
        return amplitude_ * std::exp(peak_ - std::pow(u, -q_));
    }

private:
    double order_, r0_, r1_, amplitude_;
    double q_, peak_;
};

/// Mollified indicator: identically 1 on [lo, hi], supported on
/// [lo - 2w, hi + 2w], built by convolving the indicator of [lo - w, hi + w]
/// with a unit-mass GevreyBump on [-w, w].  The mollifier CDF is tabulated
/// once (Simpson) and evaluated by cubic Hermite interpolation, which keeps
/// the profile C^1-exact at the table nodes.
class PlateauProfile {
public:
    PlateauProfile(double order, double lo, double hi, double width)
        : order_(order), lo_(lo), hi_(hi), w_(width) {
        if (!(width > 0.0))
            throw ParameterError("PlateauProfile: width must be positive");
        if (!(lo > 2.0 * width))
            throw ParameterError("PlateauProfile: support must stay away from 0 (lo > 2w)");
        if (!(hi > lo))
            throw ParameterError("PlateauProfile: need lo < hi");
        build_cdf();
    }

    double order() const { return order_; }
    double plateau_lo() const { return lo_; }
    double plateau_hi() const { return hi_; }
    double width() const { return w_; }
    double support_lo() const { return lo_ - 2.0 * w_; }
    double support_hi() const { return hi_ + 2.0 * w_; }

    double operator()(double r) const {
        if (r <= support_lo() || r >= support_hi()) return 0.0;
        if (r >= lo_ && r <= hi_) return 1.0;
        // indicator interval is [lo - w, hi + w]
        const double upper = std::min(w_, r - (lo_ - w_));
        const double lower = std::max(-w_, r - (hi_ + w_));
        return cdf(upper) - cdf(lower);
    }

private:
    void build_cdf() {
        GevreyBump m(order_, 0.0, 2.0 * w_);
        // shift to [-w, w]
        const int half_steps = 2048;                 // Simpson panels per half
        nodes_ = 2 * half_steps + 1;
        du_ = 2.0 * w_ / (nodes_ - 1);
        pdf_.resize(nodes_);
        cdf_.resize(nodes_);
        for (int i = 0; i < nodes_; ++i) pdf_[i] = m(i * du_);
        // composite Simpson cumulative on node pairs
        cdf_[0] = 0.0;
        for (int i = 2; i < nodes_; i += 2) {
            cdf_[i] = cdf_[i - 2] + du_ / 3.0 * (pdf_[i - 2] + 4.0 * pdf_[i - 1] + pdf_[i]);
        }
        for (int i = 1; i < nodes_; i += 2) {
            // odd nodes by local Simpson half-panel (3-point Newton-Cotes)
            cdf_[i] = cdf_[i - 1] +
                      du_ / 12.0 * (5.0 * pdf_[i - 1] + 8.0 * pdf_[i] -
                                    (i + 1 < nodes_ ? pdf_[i + 1] : 0.0));
        }
        const double total = cdf_[nodes_ - 1];
        for (int i = 0; i < nodes_; ++i) {
            cdf_[i] /= total;
            pdf_[i] /= total;
        }
    }

    // CDF of the mollifier at u in [-w, w]; cubic Hermite between nodes with
    // exact derivative pdf at the nodes.
    double cdf(double u) const {
        if (u <= -w_) return 0.0;
        if (u >= w_) return 1.0;
        const double x = (u + w_) / du_;
        int i = static_cast<int>(x);
        if (i >= nodes_ - 1) i = nodes_ - 2;
        const double tt = x - i;
        const double y0 = cdf_[i], y1 = cdf_[i + 1];
        const double d0 = pdf_[i] * du_, d1 = pdf_[i + 1] * du_;
        const double t2 = tt * tt, t3 = t2 * tt;
        return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + tt) * d0 +
               (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * d1;
    }

    double order_, lo_, hi_, w_;
    int nodes_ = 0;
    double du_ = 0.0;
    std::vector<double> pdf_, cdf_;
};

} // namespace gsw
