#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>

#include "gsw/fft.hpp"
#include "gsw/io.hpp"

using namespace gsw;

namespace {

std::filesystem::path temp_path(const char* name) {
    auto dir = std::filesystem::temp_directory_path() / "gsw_test_io";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::vector<cplx> random_values(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    auto u = [&] { return (eng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
    std::vector<cplx> v(n);
    for (auto& z : v) z = cplx(u(), u());
    return v;
}

} // namespace

TEST_CASE("fourier lattice matches the transform convention") {
    SignalGrid g16(1, 16, 8.0);
    FrequencyGrid fg = fourier_grid(g16);
    CHECK(fg.spacing == doctest::Approx(M_PI / 8.0).epsilon(1e-15));
    CHECK(fg.values.front() == doctest::Approx(-M_PI).epsilon(1e-15));
    CHECK(fg.values.back() == doctest::Approx(M_PI - M_PI / 8.0).epsilon(1e-15));

    SignalGrid g1024(1, 1024, 32.0);
    FrequencyGrid fg2 = fourier_grid(g1024);
    CHECK(fg2.values.front() == doctest::Approx(-16.0 * M_PI).epsilon(1e-15));

    // 2D lattice is the Cartesian square of the 1D one
    SignalGrid g2(2, 16, 8.0);
    FrequencyGrid fg3 = fourier_grid(g2);
    CHECK(fg3.values == fg.values);
}

TEST_CASE("grid invariants rejected") {
    CHECK_THROWS_AS(SignalGrid(1, 24, 8.0), ParameterError);
    CHECK_THROWS_AS(SignalGrid(1, 8, 8.0), ParameterError);
    CHECK_THROWS_AS(SignalGrid(3, 64, 8.0), ParameterError);
    CHECK_THROWS_AS(SignalGrid(1, 64, -1.0), ParameterError);
    CHECK_THROWS_AS(ScaleGrid(0.0, 1.0, 8), ParameterError);
    CHECK_THROWS_AS(ScaleGrid(2.0, 1.0, 8), ParameterError);
}

TEST_CASE("scale grid is geometric with uniform log weights") {
    ScaleGrid ag(1.0 / 16.0, 16.0, 64);
    const auto& a = ag.values();
    const double ratio = a[1] / a[0];
    for (int k = 1; k + 1 < ag.count(); ++k)
        CHECK(std::abs(a[k + 1] / a[k] - ratio) <= 1e-12 * ratio);
    auto w = ag.quadrature_weights();
    CHECK(w[0] == doctest::Approx(0.5 * ag.log_step()));
    CHECK(w[5] == doctest::Approx(ag.log_step()));
}

TEST_CASE("gaussian transforms to sqrt(2pi) gaussian") {
    SignalGrid g(1, 1024, 32.0);
    std::vector<cplx> v(g.size());
    for (int j = 0; j < g.n(); ++j) {
        const double x = g.coord(j);
        v[j] = std::exp(-0.5 * x * x);
    }
    SampledSpectrum spec = forward_fft(SampledSignal(g, std::move(v)));
    const double c = std::sqrt(2.0 * M_PI);
    // relative 1e-8 with an absolute floor at the double-precision FFT noise
    for (int p = 0; p < g.n(); ++p) {
        const double xi = g.freq(p);
        if (std::abs(xi) > 8.0) continue;
        const double want = c * std::exp(-0.5 * xi * xi);
        CHECK(std::abs(spec.values[p] - want) <= 1e-8 * want + 1e-14 * c);
    }
}

TEST_CASE("unit impulse at the origin has a flat spectrum") {
    SignalGrid g(1, 256, 16.0);
    std::vector<cplx> v(g.size(), 0.0);
    v[g.n() / 2] = 1.0 / g.spacing();
    SampledSpectrum spec = forward_fft(SampledSignal(g, std::move(v)));
    for (const auto& z : spec.values)
        CHECK(std::abs(z - cplx(1.0)) <= 1e-10);
}

TEST_CASE("fft round trip and Parseval") {
    for (int dim : {1, 2}) {
        SignalGrid g(dim, dim == 1 ? 1024 : 64, 16.0);
        SampledSignal f(g, random_values(g.size(), 42));
        double peak = 0.0;
        for (auto& z : f.values) peak = std::max(peak, std::abs(z));

        SampledSpectrum spec = forward_fft(f);
        SampledSignal back = inverse_fft(spec);
        double err = 0.0;
        for (std::size_t i = 0; i < f.values.size(); ++i)
            err = std::max(err, std::abs(back.values[i] - f.values[i]));
        CHECK(err <= 1e-12 * peak);

        const double space = l2_norm_sq_space(f);
        const double freq = l2_norm_sq_freq(spec);
        CHECK(std::abs(space - freq) <= 1e-10 * space);
    }
}

TEST_CASE("binary round trips are bit-exact") {
    SignalGrid g(1, 64, 7.0 / 3.0);
    ScaleGrid ag(1.0 / 3.0, 11.0, 9);

    CHECK(signal_grid_from_json(signal_grid_to_json(g)) == g);
    CHECK(scale_grid_from_json(scale_grid_to_json(ag)) == ag);

    SampledSignal sig(g, random_values(g.size(), 7));
    auto spath = temp_path("sig.gsw");
    save_signal(spath.string(), sig);
    SampledSignal sig2 = load_signal(spath.string());
    CHECK(sig2.grid == g);
    CHECK(std::memcmp(sig.values.data(), sig2.values.data(), sig.values.size() * 16) == 0);

    HalfSpaceField field(g, ag, random_values(g.size() * ag.count(), 9));
    auto fpath = temp_path("field.gsw");
    save_field(fpath.string(), field);
    HalfSpaceField field2 = load_field(fpath.string());
    CHECK(field2.sgrid == g);
    CHECK(field2.agrid == ag);
    CHECK(std::memcmp(field.values.data(), field2.values.data(),
                      field.values.size() * 16) == 0);

    // whole-file determinism: saving again produces identical bytes
    auto fpath2 = temp_path("field_again.gsw");
    save_field(fpath2.string(), field2);
    std::ifstream a(fpath, std::ios::binary), b(fpath2, std::ios::binary);
    std::string abytes((std::istreambuf_iterator<char>(a)), {});
    std::string bbytes((std::istreambuf_iterator<char>(b)), {});
    CHECK(abytes == bbytes);
}

TEST_CASE("csv export carries the documented columns") {
    SignalGrid g(1, 16, 8.0);
    ScaleGrid ag(0.5, 2.0, 3);
    HalfSpaceField field = HalfSpaceField::zeros(g, ag);
    std::ostringstream os;
    field_to_csv(os, field);
    CHECK(os.str().substr(0, 10) == "b,a,re,im\n");

    SignalGrid g2(2, 16, 8.0);
    std::ostringstream os2;
    signal_to_csv(os2, SampledSignal::zeros(g2));
    CHECK(os2.str().substr(0, 12) == "b1,b2,re,im\n");
}

TEST_CASE("corrupt containers are rejected") {
    auto path = temp_path("bad.gsw");
    std::ofstream os(path, std::ios::binary);
    os << "NOTMAGIC" << std::string(16, 'x');
    os.close();
    CHECK_THROWS_AS(load_signal(path.string()), IoError);
    CHECK_THROWS_AS(load_field("/nonexistent/nowhere.gsw"), IoError);
}
