#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gsw/seminorms.hpp"
#include "gsw/signals.hpp"
#include "gsw/transform.hpp"

using namespace gsw;

namespace {

const SignalGrid& ref_grid() {
    static SignalGrid g(1, 1024, 32.0);
    return g;
}

const ScaleGrid& ref_scales() {
    static ScaleGrid ag(1.0 / 16.0, 16.0, 64);
    return ag;
}

const WaveletSpec& ref_wavelet() {
    static WaveletSpec w =
        design_directional_wavelet(1, GevreyIndices(0.5, 2.0), ref_grid());
    return w;
}

} // namespace

TEST_CASE("gaussian class membership: stable at 1/2, divergent at 1/4") {
    SampledSignal gauss = make_gaussian_signal(ref_grid());
    const std::vector<double> sweep{0.5, 0.75, 1.0};

    SeminormReport half = gs_seminorm_sweep(gauss, 0.5, 0.5, sweep, 8, 8);
    CHECK(half.finite[0]);
    CHECK(half.finite[1]);
    CHECK(half.finite_up_to >= 0.75);
    CHECK(half.values[0] == doctest::Approx(1.0).epsilon(1e-12));

    // rho1 + rho2 = 1/2 < 1: the scan keeps growing as the caps rise once
    // the growth enters the truncation window
    SeminormReport quarter = gs_seminorm_sweep(gauss, 0.25, 0.25, sweep, 8, 8);
    CHECK_FALSE(quarter.finite[1]);
    CHECK_FALSE(quarter.finite[2]);
    CHECK(quarter.finite_up_to <= 0.5);
    const double v8 = gs_seminorm(gauss, 0.25, 0.25, 0.75, 8, 8);
    const double v10 = gs_seminorm(gauss, 0.25, 0.25, 0.75, 10, 10);
    CHECK(v10 > 2.0 * v8);
    // at the same h the 1/2-class value is cap-stable
    CHECK(gs_seminorm(gauss, 0.5, 0.5, 0.75, 10, 10) ==
          doctest::Approx(gs_seminorm(gauss, 0.5, 0.5, 0.75, 8, 8)).epsilon(0.01));
}

TEST_CASE("zero inputs give zero seminorms") {
    CHECK(gs_seminorm(SampledSignal::zeros(ref_grid()), 0.5, 0.5, 0.5, 8, 8) == 0.0);
    HalfSpaceField zero = HalfSpaceField::zeros(ref_grid(), ref_scales());
    HalfSpaceIndices idx(0.5, 0.5, 1.0, 1.0);
    CHECK(halfspace_seminorm_p(zero, idx, 0.5, SeminormCaps{}) == 0.0);
    CHECK(halfspace_seminorm_q(zero, idx, 0.5, SeminormCaps{}) == 0.0);
}

TEST_CASE("seminorms are nondecreasing in h") {
    SampledSignal gauss = make_gaussian_signal(ref_grid());
    double prev = 0.0;
    for (double h : {0.25, 0.5, 1.0, 2.0}) {
        const double v = gs_seminorm(gauss, 0.5, 0.5, h, 8, 8);
        CHECK(v >= prev);
        prev = v;
    }
    HalfSpaceField paper = make_separable_field(ref_grid(), ref_scales(),
                                                BProfile::Gaussian, AProfile::ExpBoth);
    HalfSpaceIndices idx(0.5, 0.5, 1.0, 1.0);
    CHECK(halfspace_seminorm_p(paper, idx, 0.5, SeminormCaps{}) <=
          halfspace_seminorm_p(paper, idx, 1.0, SeminormCaps{}));
}

TEST_CASE("paper-example separable field is finite under p and q at h = 1/2") {
    HalfSpaceField paper = make_separable_field(ref_grid(), ref_scales(),
                                                BProfile::Gaussian, AProfile::ExpBoth);
    HalfSpaceIndices idx(0.5, 0.5, 1.0, 1.0);
    SeminormCaps c8{8, 8, 8}, c10{10, 10, 10};

    const double p8 = halfspace_seminorm_p(paper, idx, 0.5, c8);
    const double p10 = halfspace_seminorm_p(paper, idx, 0.5, c10);
    CHECK(std::isfinite(p8));
    CHECK(std::abs(p10 - p8) <= 0.01 * p10);   // cap stability within 1%

    const double q8 = halfspace_seminorm_q(paper, idx, 0.5, c8);
    const double q10 = halfspace_seminorm_q(paper, idx, 0.5, c10);
    CHECK(std::isfinite(q8));
    CHECK(std::abs(q10 - q8) <= 0.01 * q10);

    // the q supremum has the closed form e^{-1}: the exponential weight at
    // h = 1/2 exactly offsets half the scale profile, peaking at a = 1, b = 0
    CHECK(q8 == doctest::Approx(std::exp(-1.0)).epsilon(0.01));

    // weakening the a->0 index cannot increase the p value
    HalfSpaceIndices idx3(0.5, 0.5, 1.0, 3.0);
    CHECK(halfspace_seminorm_p(paper, idx3, 0.5, c8) <= p8 * (1.0 + 1e-12));
}

TEST_CASE("polynomial b-decay diverges under both p and q") {
    HalfSpaceField poly = make_separable_field(ref_grid(), ref_scales(),
                                               BProfile::Poly4, AProfile::ExpBoth);
    HalfSpaceIndices idx(0.5, 0.5, 1.0, 1.0);
    const double p8 = halfspace_seminorm_p(poly, idx, 0.5, SeminormCaps{8, 8, 8});
    const double p10 = halfspace_seminorm_p(poly, idx, 0.5, SeminormCaps{10, 10, 10});
    CHECK(p10 > 2.0 * p8);   // scan grows without stabilizing
    for (double h : {0.25, 0.5, 1.0})
        CHECK(std::isinf(halfspace_seminorm_q(poly, idx, h, SeminormCaps{8, 8, 8})));
}

TEST_CASE("p and q finiteness verdicts agree across the regression suite") {
    const std::vector<double> sweep{0.25, 0.5};
    struct Entry {
        HalfSpaceField field;
        HalfSpaceIndices idx;
    };
    std::vector<Entry> suite;
    suite.push_back({make_separable_field(ref_grid(), ref_scales(),
                                          BProfile::Gaussian, AProfile::ExpBoth),
                     HalfSpaceIndices(0.5, 0.5, 1.0, 1.0)});
    suite.push_back({make_separable_field(ref_grid(), ref_scales(), BProfile::Poly4,
                                          AProfile::ExpBoth),
                     HalfSpaceIndices(0.5, 0.5, 1.0, 1.0)});
    suite.push_back({make_separable_field(ref_grid(), ref_scales(), BProfile::Sech,
                                          AProfile::ExpBoth),
                     HalfSpaceIndices(0.5, 1.0, 1.0, 1.0)});
    HalfSpaceIndices idxt(1.0, 4.0, 2.0, 3.0);
    suite.push_back(
        {cwt_fourier(make_bump_spectrum_signal(ref_grid()), ref_wavelet(), ref_scales()),
         idxt});
    suite.push_back(
        {cwt_fourier(make_flat_gauss_signal(ref_grid()), ref_wavelet(), ref_scales()),
         idxt});
    suite.push_back(
        {cwt_fourier(translate_signal(make_bump_spectrum_signal(ref_grid()), 48),
                     ref_wavelet(), ref_scales()),
         idxt});

    int finite_count = 0;
    for (const auto& e : suite) {
        SeminormReport rp = halfspace_seminorm_sweep(SeminormKind::HalfP, e.field,
                                                     e.idx, sweep, SeminormCaps{});
        SeminormReport rq = halfspace_seminorm_sweep(SeminormKind::HalfQ, e.field,
                                                     e.idx, sweep, SeminormCaps{});
        for (std::size_t i = 0; i < sweep.size(); ++i)
            CHECK(rp.finite[i] == rq.finite[i]);
        if (rp.finite[0]) ++finite_count;
    }
    CHECK(finite_count == 5);   // all but the polynomial-decay field
}

TEST_CASE("seminorm report serialization") {
    HalfSpaceField paper = make_separable_field(ref_grid(), ref_scales(),
                                                BProfile::Gaussian, AProfile::ExpBoth);
    SeminormReport rep =
        halfspace_seminorm_sweep(SeminormKind::HalfQ, paper,
                                 HalfSpaceIndices(0.5, 0.5, 1.0, 1.0), {0.25, 0.5},
                                 SeminormCaps{});
    const std::string text = seminorm_report_to_json(rep);
    CHECK(text.find("\"half_q\"") != std::string::npos);
    CHECK(text.find("\"finite_up_to\"") != std::string::npos);
}

TEST_CASE("caps outside [0,12] are rejected with advice") {
    SampledSignal gauss = make_gaussian_signal(ref_grid());
    CHECK_THROWS_AS(gs_seminorm(gauss, 0.5, 0.5, 0.5, 14, 8), ParameterError);
}

TEST_CASE("decay fit on the reference transform field") {
    SignalGrid g(1, 4096, 128.0);
    WaveletSpec psi = design_directional_wavelet(1, GevreyIndices(0.5, 2.0), g);
    HalfSpaceField W = cwt_fourier(make_flat_gauss_signal(g), psi, ref_scales());
    DecayFit fit = decay_fit(W, 2.5, 3.0, 0.5, 2.0);

    CHECK(fit.a_inf.r_squared >= 0.95);
    CHECK(fit.a_zero.r_squared >= 0.95);
    CHECK(fit.b_decay.r_squared >= 0.95);
    CHECK(fit.a_inf.rate > 0.0);
    CHECK(fit.a_zero.rate > 0.0);
    CHECK(fit.b_decay.rate > 0.0);
    // each band spans at least a decade of its variable
    CHECK(fit.a_inf.band_hi / fit.a_inf.band_lo >= 10.0);
    CHECK(fit.a_zero.band_hi / fit.a_zero.band_lo >= 10.0);
    CHECK(fit.b_decay.band_hi / fit.b_decay.band_lo >= 10.0);

    // slope invariance under positive scaling of the field
    HalfSpaceField W7 = W;
    for (auto& z : W7.values) z *= 7.0;
    DecayFit fit7 = decay_fit(W7, 2.5, 3.0, 0.5, 2.0);
    CHECK(std::abs(fit7.a_inf.rate - fit.a_inf.rate) <= 1e-10 * fit.a_inf.rate);
    CHECK(std::abs(fit7.b_decay.rate - fit.b_decay.rate) <= 1e-10 * fit.b_decay.rate);
}

TEST_CASE("decay fit recovers the closed-form e^{-a} slice") {
    HalfSpaceField paper = make_separable_field(ref_grid(), ref_scales(),
                                                BProfile::Gaussian, AProfile::ExpBoth);
    // t - rho2 = 1 makes the upper-decade variable a itself
    DecayFit fit = decay_fit(paper, 2.0, 2.0, 1.0, 1.0);
    CHECK(fit.a_inf.rate == doctest::Approx(1.0).epsilon(0.10));
    CHECK(fit.a_inf.r_squared >= 0.95);
}

TEST_CASE("flat-in-a fields produce no spurious rate") {
    HalfSpaceField flat = make_separable_field(ref_grid(), ref_scales(),
                                               BProfile::Gaussian, AProfile::Constant);
    DecayFit fit = decay_fit(flat, 2.0, 2.0, 1.0, 1.0);
    CHECK(std::abs(fit.a_inf.rate) <= 1e-8);
    CHECK(fit.a_inf.r_squared <= 0.1);
}

TEST_CASE("decay fit preconditions") {
    HalfSpaceField paper = make_separable_field(ref_grid(), ref_scales(),
                                                BProfile::Gaussian, AProfile::ExpBoth);
    CHECK_THROWS_AS(decay_fit(paper, 2.0, 1.0, 1.0, 1.0), ParameterError);  // t <= rho2
    CHECK_THROWS_AS(decay_fit(paper, 1.0, 2.0, 1.0, 1.0), ParameterError);  // s <= rho1
    CHECK_THROWS_AS(
        decay_fit(HalfSpaceField::zeros(ref_grid(), ref_scales()), 2.0, 2.0, 1.0, 1.0),
        NumericalError);
}

TEST_CASE("index calculus") {
    SUBCASE("analysis with derived scale indices") {
        auto r = index_calculus(1.0, 2.0, 1.0, 4.0, 0.0, 0.0, IndexTheorem::T3Remark);
        CHECK(r.signal_upper == 1.0);
        CHECK(r.signal_lower == 2.0);    // t + 1 - rho1 - rho2
        CHECK(r.field_s == 1.0);
        CHECK(r.field_t == 4.0);
        CHECK(r.field_tau1 == 2.0);      // t - rho2
        CHECK(r.field_tau2 == 2.0);      // s + rho2 - 1
        CHECK(r.all_hypotheses_ok);
    }
    SUBCASE("synthesis hypothesis flags") {
        auto r = index_calculus(1.0, 2.0, 0.5, 4.0, 1.0, 0.0, IndexTheorem::T4a);
        CHECK_FALSE(r.hypotheses.at("s>rho1"));   // s = 0.5 <= rho1 = 1
        CHECK_FALSE(r.all_hypotheses_ok);
    }
    SUBCASE("analysis hypothesis flags") {
        auto r = index_calculus(1.0, 2.0, 1.0, 2.5, 1.5, 2.0, IndexTheorem::T3);
        CHECK_FALSE(r.hypotheses.at("t>rho1+rho2"));   // 2.5 <= 3
        CHECK_FALSE(r.all_hypotheses_ok);
    }
    SUBCASE("full T3 index arithmetic") {
        auto r = index_calculus(0.5, 2.0, 1.0, 4.0, 2.0, 3.0, IndexTheorem::T3);
        CHECK(r.signal_upper == std::min(1.0, 3.0 - 2.0 + 1.0));
        CHECK(r.signal_lower == 1.0 - 0.5 + std::min(4.0 - 2.0, 2.0));
        CHECK(r.all_hypotheses_ok);
        const std::string text = index_result_to_json(r);
        CHECK(text.find("\"analysis\"") != std::string::npos);
    }
}
