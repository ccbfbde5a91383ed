// gsw: command-line front end for wavelet design, transforms, Calderon
// verification, seminorm scans and decay fitting.
//
// Conventions:
//   - stdout carries exactly one JSON document per run; diagnostics and
//     errors go to stderr.
//   - Every report embeds the fully resolved configuration under "config";
//     re-running `gsw <command> --config <saved.json>` reproduces the run
//     bit-exactly on the same platform.
//   - Exit codes: 0 success, 1 usage or invalid parameter, 2 numerical
//     precondition or verdict failure, 3 I/O failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsw/calderon.hpp"
#include "gsw/fft.hpp"
#include "gsw/io.hpp"
#include "gsw/parallel.hpp"
#include "gsw/seminorms.hpp"
#include "gsw/signals.hpp"
#include "gsw/synthesis.hpp"
#include "gsw/transform.hpp"

using json = nlohmann::json;
using namespace gsw;

namespace {

json g_config_defaults;   // loaded from --config, keyed by flag name

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

void spew(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw IoError("cannot open for writing: " + path);
    os << text;
    if (!os) throw IoError("write failed: " + path);
}

// resolved-value helper: --config file values act as defaults, explicit
// flags override them
template <typename T>
T resolve(const CLI::Option* opt, const T& cli_value, const char* key) {
    if (opt->count() > 0) return cli_value;
    if (g_config_defaults.contains(key)) return g_config_defaults.at(key).get<T>();
    return cli_value;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    if (out.empty()) throw ParameterError("expected a comma-separated number list");
    return out;
}

std::array<int, 2> parse_beta(const std::string& text) {
    auto v = parse_list(text);
    if (v.size() > 2) throw ParameterError("beta takes at most two components");
    std::array<int, 2> beta{static_cast<int>(v[0]),
                            v.size() > 1 ? static_cast<int>(v[1]) : 0};
    return beta;
}

void emit(const std::string& command, const json& config, const json& report) {
    json out{{"command", command}, {"config", config}, {"report", report}};
    std::cout << out.dump(2) << "\n";
}

WaveletSpec load_wavelet_file(const std::string& path) {
    return wavelet_from_json(slurp(path));
}

json moment_report_json(const MomentReport& rep) {
    return json{{"max_order", rep.max_order},
                {"moment_bounds", rep.moment_bounds},
                {"verdict", rep.verdict},
                {"tolerance", rep.tolerance},
                {"stencil", rep.stencil}};
}

json nondeg_report_json(const NondegeneracyReport& rep) {
    return json{{"verdict", rep.verdict},
                {"worst_direction", {rep.worst_direction[0], rep.worst_direction[1]}},
                {"worst_mass", rep.worst_mass},
                {"tolerance", rep.tolerance}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wavelet analysis and synthesis on the position-scale half-space"};
    app.require_subcommand(1);
    app.fallthrough();   // allow --config/--threads after the subcommand name

    int threads = 0;
    app.add_option("--threads", threads,
                   "worker cap (default: GSW_THREADS or hardware)");
    std::string config_path;
    app.add_option("--config", config_path,
                   "load a previously emitted config as defaults");

    // ---- design ---------------------------------------------------------
    auto* cmd_design = app.add_subcommand("design", "design a wavelet in frequency");
    struct {
        int dim = 0;
        double rho1 = 0.5, rho2 = 2.0;
        int n = 1024;
        double l = 32.0;
        std::string kind = "directional";
        double r0 = 0.5, r1 = 2.0;
        std::string label;
        std::string out = "wavelet.json";
        bool embed = false;
        int moment_order = 10;
        double moment_tol = 1e-8;
        int directions = 256, radii = 512;
        double nondeg_tol = 1e-8;
    } d;
    auto* d_dim = cmd_design->add_option("--dim", d.dim, "dimension (1 or 2)");
    auto* d_rho1 = cmd_design->add_option("--rho1", d.rho1, "derivative-growth index");
    auto* d_rho2 = cmd_design->add_option("--rho2", d.rho2, "decay index (> 1)");
    auto* d_n = cmd_design->add_option("--n", d.n, "lattice nodes per axis");
    auto* d_l = cmd_design->add_option("--l", d.l, "half extent L");
    auto* d_kind = cmd_design->add_option("--kind", d.kind, "directional|radial");
    auto* d_r0 = cmd_design->add_option("--r0", d.r0, "radial annulus inner edge");
    auto* d_r1 = cmd_design->add_option("--r1", d.r1, "radial annulus outer edge");
    auto* d_label = cmd_design->add_option("--label", d.label, "wavelet label");
    auto* d_out = cmd_design->add_option("--out", d.out, "output wavelet JSON");
    cmd_design->add_flag("--embed-spectrum", d.embed, "embed lattice samples");

    // ---- make-pair ------------------------------------------------------
    auto* cmd_pair = app.add_subcommand("make-pair",
                                        "construct a reconstruction wavelet");
    struct {
        std::string wavelet;
        double plateau_lo = 0.0, plateau_hi = 0.0, eta_width = 0.0, eta_order = 2.0;
        int angles = 256, radial = 512;
        std::string out = "pair.json";
        bool embed = false;
    } mp;
    auto* mp_w = cmd_pair->add_option("--wavelet", mp.wavelet, "analyzing wavelet JSON");
    auto* mp_lo = cmd_pair->add_option("--plateau-lo", mp.plateau_lo, "eta plateau start");
    auto* mp_hi = cmd_pair->add_option("--plateau-hi", mp.plateau_hi, "eta plateau end");
    auto* mp_wd = cmd_pair->add_option("--eta-width", mp.eta_width, "mollifier width");
    auto* mp_or = cmd_pair->add_option("--eta-order", mp.eta_order, "mollifier order");
    auto* mp_an = cmd_pair->add_option("--angles", mp.angles, "g-table angles (2D)");
    auto* mp_ra = cmd_pair->add_option("--radial", mp.radial, "radial quadrature nodes");
    auto* mp_out = cmd_pair->add_option("--out", mp.out, "output pair JSON");
    cmd_pair->add_flag("--embed-spectra", mp.embed, "embed lattice samples");

    // ---- transform ------------------------------------------------------
    auto* cmd_transform = app.add_subcommand("transform", "forward wavelet transform");
    struct {
        std::string signal, wavelet, pair;
        double amin = 1.0 / 16.0, amax = 16.0;
        int scales = 64;
        std::string beta = "0";
        std::string out = "field.gsw";
        std::string csv;
    } t;
    auto* t_sig = cmd_transform->add_option("--signal", t.signal, "input signal file");
    auto* t_w = cmd_transform->add_option("--wavelet", t.wavelet, "wavelet JSON");
    auto* t_p = cmd_transform->add_option("--pair", t.pair, "pair JSON (uses psi)");
    auto* t_amin = cmd_transform->add_option("--amin", t.amin, "smallest scale");
    auto* t_amax = cmd_transform->add_option("--amax", t.amax, "largest scale");
    auto* t_k = cmd_transform->add_option("--scales", t.scales, "scale count K");
    auto* t_beta = cmd_transform->add_option("--beta", t.beta, "derivative orders");
    auto* t_out = cmd_transform->add_option("--out", t.out, "output field file");
    auto* t_csv = cmd_transform->add_option("--csv", t.csv, "optional CSV export");

    // ---- synthesize -----------------------------------------------------
    auto* cmd_synth = app.add_subcommand("synthesize", "wavelet synthesis operator");
    struct {
        std::string field, wavelet, pair;
        std::string out = "signal.gsw";
    } sy;
    auto* sy_f = cmd_synth->add_option("--field", sy.field, "input field file");
    auto* sy_w = cmd_synth->add_option("--wavelet", sy.wavelet, "wavelet JSON");
    auto* sy_p = cmd_synth->add_option("--pair", sy.pair, "pair JSON (uses phi)");
    auto* sy_out = cmd_synth->add_option("--out", sy.out, "output signal file");

    // ---- verify-calderon --------------------------------------------------
    auto* cmd_ver = app.add_subcommand("verify-calderon",
                                       "round-trip reconstruction check");
    struct {
        std::string signal, pair;
        double amin = 1.0 / 16.0, amax = 16.0;
        int scales = 64;
        double tol = 1e-3;
        bool allow_violation = false;
        std::string out_recon, csv;
    } vc;
    auto* vc_sig = cmd_ver->add_option("--signal", vc.signal, "input signal file");
    auto* vc_pair = cmd_ver->add_option("--pair", vc.pair, "reconstruction pair JSON");
    auto* vc_amin = cmd_ver->add_option("--amin", vc.amin, "smallest scale");
    auto* vc_amax = cmd_ver->add_option("--amax", vc.amax, "largest scale");
    auto* vc_k = cmd_ver->add_option("--scales", vc.scales, "scale count K");
    auto* vc_tol = cmd_ver->add_option("--tol", vc.tol, "L2 error gate");
    cmd_ver->add_flag("--allow-moment-violation", vc.allow_violation,
                      "proceed past the moment precondition");
    auto* vc_rec = cmd_ver->add_option("--out-recon", vc.out_recon,
                                       "write the reconstruction");
    auto* vc_csv = cmd_ver->add_option("--csv", vc.csv, "pointwise error CSV");

    // ---- seminorm -------------------------------------------------------
    auto* cmd_semi = app.add_subcommand("seminorm", "factorial-weighted scans");
    struct {
        std::string kind = "half_p";
        std::string signal, field;
        double rho1 = 0.5, rho2 = 0.5;
        double s = 0.5, t = 0.5, tau1 = 1.0, tau2 = 1.0;
        std::string h = "0.25,0.5,1";
        std::string caps = "8,8,8";
    } sm;
    auto* sm_kind = cmd_semi->add_option("--kind", sm.kind, "gs_p|half_p|half_q");
    auto* sm_sig = cmd_semi->add_option("--signal", sm.signal, "signal file (gs_p)");
    auto* sm_field = cmd_semi->add_option("--field", sm.field, "field file (half_*)");
    auto* sm_r1 = cmd_semi->add_option("--rho1", sm.rho1, "gs_p index");
    auto* sm_r2 = cmd_semi->add_option("--rho2", sm.rho2, "gs_p index");
    auto* sm_s = cmd_semi->add_option("--s", sm.s, "half-space index s");
    auto* sm_t = cmd_semi->add_option("--t", sm.t, "half-space index t");
    auto* sm_t1 = cmd_semi->add_option("--tau1", sm.tau1, "scale index at infinity");
    auto* sm_t2 = cmd_semi->add_option("--tau2", sm.tau2, "scale index at zero");
    auto* sm_h = cmd_semi->add_option("--h-sweep", sm.h, "h sweep (comma list)");
    auto* sm_caps = cmd_semi->add_option("--caps", sm.caps, "beta,k,l truncation caps");

    // ---- fit-decay ------------------------------------------------------
    auto* cmd_fit = app.add_subcommand("fit-decay", "subexponential rate fits");
    struct {
        std::string field;
        double s = 2.5, t = 3.0, rho1 = 0.5, rho2 = 2.0;
    } fd;
    auto* fd_field = cmd_fit->add_option("--field", fd.field, "input field file");
    auto* fd_s = cmd_fit->add_option("--s", fd.s, "decay index s (> rho1)");
    auto* fd_t = cmd_fit->add_option("--t", fd.t, "decay index t (> rho2)");
    auto* fd_r1 = cmd_fit->add_option("--rho1", fd.rho1, "wavelet index rho1");
    auto* fd_r2 = cmd_fit->add_option("--rho2", fd.rho2, "wavelet index rho2");

    // ---- make-signal ----------------------------------------------------
    auto* cmd_msig = app.add_subcommand("make-signal", "reference signal generator");
    struct {
        std::string kind = "bump-spectrum";
        int dim = 1, n = 1024;
        double l = 32.0;
        double r0 = 0.5, r1 = 2.0, order = 2.0, sigma = 1.0, flat = 1.0;
        double band_lo = 0.5, band_hi = 2.0;
        std::uint64_t seed = 1;
        std::string out = "signal.gsw";
        std::string csv;
    } ms;
    auto* ms_kind = cmd_msig->add_option(
        "--kind", ms.kind, "bump-spectrum|gaussian|flat-gauss|random");
    auto* ms_dim = cmd_msig->add_option("--dim", ms.dim, "dimension");
    auto* ms_n = cmd_msig->add_option("--n", ms.n, "lattice nodes per axis");
    auto* ms_l = cmd_msig->add_option("--l", ms.l, "half extent");
    auto* ms_r0 = cmd_msig->add_option("--r0", ms.r0, "bump inner edge");
    auto* ms_r1 = cmd_msig->add_option("--r1", ms.r1, "bump outer edge");
    auto* ms_or = cmd_msig->add_option("--order", ms.order, "bump order");
    auto* ms_sg = cmd_msig->add_option("--sigma", ms.sigma, "gaussian width");
    auto* ms_fl = cmd_msig->add_option("--flat", ms.flat, "flatness strength");
    auto* ms_blo = cmd_msig->add_option("--band-lo", ms.band_lo, "random band start");
    auto* ms_bhi = cmd_msig->add_option("--band-hi", ms.band_hi, "random band end");
    auto* ms_seed = cmd_msig->add_option("--seed", ms.seed, "random seed");
    auto* ms_out = cmd_msig->add_option("--out", ms.out, "output signal file");
    auto* ms_csv = cmd_msig->add_option("--csv", ms.csv, "optional CSV export");

    // ---- make-field -----------------------------------------------------
    auto* cmd_mf = app.add_subcommand("make-field", "reference field generator");
    struct {
        std::string kind = "separable";
        std::string b_profile = "gaussian";
        std::string a_profile = "exp-both";
        int dim = 1, n = 1024;
        double l = 32.0;
        double amin = 1.0 / 16.0, amax = 16.0;
        int scales = 64;
        double band_lo = 0.5, band_hi = 2.0;
        std::uint64_t seed = 1;
        std::string out = "field.gsw";
    } mf;
    auto* mf_kind = cmd_mf->add_option("--kind", mf.kind, "separable|random");
    auto* mf_b = cmd_mf->add_option("--b-profile", mf.b_profile, "gaussian|sech|poly4");
    auto* mf_a = cmd_mf->add_option("--a-profile", mf.a_profile, "exp-both|constant");
    auto* mf_dim = cmd_mf->add_option("--dim", mf.dim, "dimension");
    auto* mf_n = cmd_mf->add_option("--n", mf.n, "lattice nodes per axis");
    auto* mf_l = cmd_mf->add_option("--l", mf.l, "half extent");
    auto* mf_amin = cmd_mf->add_option("--amin", mf.amin, "smallest scale");
    auto* mf_amax = cmd_mf->add_option("--amax", mf.amax, "largest scale");
    auto* mf_k = cmd_mf->add_option("--scales", mf.scales, "scale count");
    auto* mf_blo = cmd_mf->add_option("--band-lo", mf.band_lo, "random band start");
    auto* mf_bhi = cmd_mf->add_option("--band-hi", mf.band_hi, "random band end");
    auto* mf_seed = cmd_mf->add_option("--seed", mf.seed, "random seed");
    auto* mf_out = cmd_mf->add_option("--out", mf.out, "output field file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (!config_path.empty()) {
            json saved = json::parse(slurp(config_path), nullptr, false);
            if (saved.is_discarded()) throw IoError("config: malformed JSON");
            g_config_defaults = saved.contains("config") ? saved.at("config") : saved;
            if (g_config_defaults.contains("command")) {
                const std::string want =
                    g_config_defaults.at("command").get<std::string>();
                if (!app.get_subcommand(want)->parsed())
                    throw ParameterError("config was emitted by '" + want +
                                         "', not this command");
            }
        }
        if (threads > 0) set_max_threads(threads);

        if (cmd_design->parsed()) {
            d.dim = resolve(d_dim, d.dim, "dim");
            d.rho1 = resolve(d_rho1, d.rho1, "rho1");
            d.rho2 = resolve(d_rho2, d.rho2, "rho2");
            d.n = resolve(d_n, d.n, "n");
            d.l = resolve(d_l, d.l, "l");
            d.kind = resolve(d_kind, d.kind, "kind");
            d.r0 = resolve(d_r0, d.r0, "r0");
            d.r1 = resolve(d_r1, d.r1, "r1");
            d.label = resolve(d_label, d.label, "label");
            d.out = resolve(d_out, d.out, "out");
            if (d_dim->count() == 0 && !g_config_defaults.contains("dim"))
                throw ParameterError("design: --dim is required");
            if (d.label.empty()) d.label = d.kind;

            SignalGrid grid(d.dim, d.n, d.l);
            WaveletSpec w = d.kind == "radial"
                ? design_radial_wavelet(d.dim, GevreyIndices(d.rho1, d.rho2), grid,
                                        d.r0, d.r1, d.label)
                : design_directional_wavelet(d.dim, GevreyIndices(d.rho1, d.rho2),
                                             grid, d.label);
            if (d.kind != "radial" && d.kind != "directional")
                throw ParameterError("design: unknown kind '" + d.kind + "'");
            MomentReport mom = check_vanishing_moments(w, d.moment_order, d.moment_tol);
            NondegeneracyReport nd =
                check_nondegenerate(w, d.directions, d.radii, d.nondeg_tol);
            spew(d.out, wavelet_to_json(w, d.embed));

            json config{{"command", "design"}, {"dim", d.dim}, {"rho1", d.rho1},
                        {"rho2", d.rho2}, {"n", d.n}, {"l", d.l}, {"kind", d.kind},
                        {"r0", d.r0}, {"r1", d.r1}, {"label", d.label}, {"out", d.out}};
            emit("design", config,
                 json{{"wavelet_file", d.out},
                      {"moments", moment_report_json(mom)},
                      {"nondegeneracy", nondeg_report_json(nd)}});
            return 0;
        }

        if (cmd_pair->parsed()) {
            mp.wavelet = resolve(mp_w, mp.wavelet, "wavelet");
            mp.out = resolve(mp_out, mp.out, "out");
            mp.angles = resolve(mp_an, mp.angles, "angles");
            mp.radial = resolve(mp_ra, mp.radial, "radial");
            if (mp.wavelet.empty()) throw ParameterError("make-pair: --wavelet required");
            WaveletSpec psi = load_wavelet_file(mp.wavelet);

            PlateauProfile eta = default_plateau(psi);
            mp.plateau_lo = resolve(mp_lo, mp.plateau_lo, "plateau_lo");
            mp.plateau_hi = resolve(mp_hi, mp.plateau_hi, "plateau_hi");
            mp.eta_width = resolve(mp_wd, mp.eta_width, "eta_width");
            mp.eta_order = resolve(mp_or, mp.eta_order, "eta_order");
            const bool custom = mp_lo->count() || mp_hi->count() || mp_wd->count() ||
                                g_config_defaults.contains("plateau_lo");
            if (custom) {
                if (!(mp.plateau_lo > 0.0 && mp.plateau_hi > mp.plateau_lo &&
                      mp.eta_width > 0.0))
                    throw ParameterError(
                        "make-pair: custom plateau needs --plateau-lo/hi/--eta-width");
                eta = PlateauProfile(mp.eta_order, mp.plateau_lo, mp.plateau_hi,
                                     mp.eta_width);
            } else {
                mp.plateau_lo = eta.plateau_lo();
                mp.plateau_hi = eta.plateau_hi();
                mp.eta_width = eta.width();
                mp.eta_order = eta.order();
            }

            ReconstructionPair pair =
                build_reconstruction_wavelet(psi, eta, mp.angles, mp.radial);
            spew(mp.out, pair_to_json(pair, mp.embed));

            json config{{"command", "make-pair"}, {"wavelet", mp.wavelet},
                        {"plateau_lo", mp.plateau_lo}, {"plateau_hi", mp.plateau_hi},
                        {"eta_width", mp.eta_width}, {"eta_order", mp.eta_order},
                        {"angles", mp.angles}, {"radial", mp.radial}, {"out", mp.out}};
            emit("make-pair", config,
                 json{{"pair_file", mp.out},
                      {"c", {pair.c.real(), pair.c.imag()}},
                      {"direction_spread", pair.direction_spread}});
            return 0;
        }

        if (cmd_transform->parsed()) {
            t.signal = resolve(t_sig, t.signal, "signal");
            t.wavelet = resolve(t_w, t.wavelet, "wavelet");
            t.pair = resolve(t_p, t.pair, "pair");
            t.amin = resolve(t_amin, t.amin, "amin");
            t.amax = resolve(t_amax, t.amax, "amax");
            t.scales = resolve(t_k, t.scales, "scales");
            t.beta = resolve(t_beta, t.beta, "beta");
            t.out = resolve(t_out, t.out, "out");
            t.csv = resolve(t_csv, t.csv, "csv");
            if (t.signal.empty()) throw ParameterError("transform: --signal required");
            if (t.wavelet.empty() == t.pair.empty())
                throw ParameterError("transform: pass exactly one of --wavelet/--pair");

            SampledSignal f = load_signal(t.signal);
            WaveletSpec w = t.wavelet.empty()
                ? pair_from_json(slurp(t.pair)).psi
                : load_wavelet_file(t.wavelet);
            ScaleGrid ag(t.amin, t.amax, t.scales);
            HalfSpaceField W = cwt_fourier(f, w, ag, parse_beta(t.beta));
            save_field(t.out, W);
            if (!t.csv.empty()) {
                std::ofstream cs(t.csv, std::ios::trunc);
                if (!cs) throw IoError("cannot open for writing: " + t.csv);
                field_to_csv(cs, W);
            }

            json config{{"command", "transform"}, {"signal", t.signal},
                        {"wavelet", t.wavelet}, {"pair", t.pair}, {"amin", t.amin},
                        {"amax", t.amax}, {"scales", t.scales}, {"beta", t.beta},
                        {"out", t.out}, {"csv", t.csv}};
            emit("transform", config,
                 json{{"field_file", t.out}, {"max_abs", W.max_abs()},
                      {"grid", json::parse(signal_grid_to_json(W.sgrid))},
                      {"scales", json::parse(scale_grid_to_json(W.agrid))}});
            return 0;
        }

        if (cmd_synth->parsed()) {
            sy.field = resolve(sy_f, sy.field, "field");
            sy.wavelet = resolve(sy_w, sy.wavelet, "wavelet");
            sy.pair = resolve(sy_p, sy.pair, "pair");
            sy.out = resolve(sy_out, sy.out, "out");
            if (sy.field.empty()) throw ParameterError("synthesize: --field required");
            if (sy.wavelet.empty() == sy.pair.empty())
                throw ParameterError(
                    "synthesize: pass exactly one of --wavelet/--pair");

            HalfSpaceField W = load_field(sy.field);
            WaveletSpec phi = sy.wavelet.empty()
                ? pair_from_json(slurp(sy.pair)).phi
                : load_wavelet_file(sy.wavelet);
            SampledSignal out = synthesis_fourier(W, phi);
            save_signal(sy.out, out);

            double peak = 0.0;
            for (auto& z : out.values) peak = std::max(peak, std::abs(z));
            json config{{"command", "synthesize"}, {"field", sy.field},
                        {"wavelet", sy.wavelet}, {"pair", sy.pair}, {"out", sy.out}};
            emit("synthesize", config,
                 json{{"signal_file", sy.out}, {"max_abs", peak}});
            return 0;
        }

        if (cmd_ver->parsed()) {
            vc.signal = resolve(vc_sig, vc.signal, "signal");
            vc.pair = resolve(vc_pair, vc.pair, "pair");
            vc.amin = resolve(vc_amin, vc.amin, "amin");
            vc.amax = resolve(vc_amax, vc.amax, "amax");
            vc.scales = resolve(vc_k, vc.scales, "scales");
            vc.tol = resolve(vc_tol, vc.tol, "tol");
            vc.out_recon = resolve(vc_rec, vc.out_recon, "out_recon");
            vc.csv = resolve(vc_csv, vc.csv, "csv");
            if (vc.signal.empty() || vc.pair.empty())
                throw ParameterError("verify-calderon: --signal and --pair required");

            SampledSignal f = load_signal(vc.signal);
            ReconstructionPair pair = pair_from_json(slurp(vc.pair));
            ScaleGrid ag(vc.amin, vc.amax, vc.scales);
            auto [rec, rep] = reconstruct(f, pair, ag, vc.allow_violation);
            if (!vc.out_recon.empty()) save_signal(vc.out_recon, rec);
            if (!vc.csv.empty()) {
                SampledSignal err = rec;
                for (std::size_t i = 0; i < err.values.size(); ++i)
                    err.values[i] -= f.values[i];
                std::ofstream cs(vc.csv, std::ios::trunc);
                if (!cs) throw IoError("cannot open for writing: " + vc.csv);
                signal_to_csv(cs, err);
            }

            json config{{"command", "verify-calderon"}, {"signal", vc.signal},
                        {"pair", vc.pair}, {"amin", vc.amin}, {"amax", vc.amax},
                        {"scales", vc.scales}, {"tol", vc.tol},
                        {"allow_moment_violation", vc.allow_violation},
                        {"out_recon", vc.out_recon}, {"csv", vc.csv}};
            emit("verify-calderon", config, json::parse(report_to_json(rep)));
            if (!(rep.rel_l2_error <= vc.tol)) {
                std::cerr << "verify-calderon: rel_l2_error " << rep.rel_l2_error
                          << " exceeds tolerance " << vc.tol << "\n";
                return 2;
            }
            return 0;
        }

        if (cmd_semi->parsed()) {
            sm.kind = resolve(sm_kind, sm.kind, "kind");
            sm.signal = resolve(sm_sig, sm.signal, "signal");
            sm.field = resolve(sm_field, sm.field, "field");
            sm.rho1 = resolve(sm_r1, sm.rho1, "rho1");
            sm.rho2 = resolve(sm_r2, sm.rho2, "rho2");
            sm.s = resolve(sm_s, sm.s, "s");
            sm.t = resolve(sm_t, sm.t, "t");
            sm.tau1 = resolve(sm_t1, sm.tau1, "tau1");
            sm.tau2 = resolve(sm_t2, sm.tau2, "tau2");
            sm.h = resolve(sm_h, sm.h, "h");
            sm.caps = resolve(sm_caps, sm.caps, "caps");

            const std::vector<double> sweep = parse_list(sm.h);
            const auto caps_list = parse_list(sm.caps);
            if (caps_list.size() != 3)
                throw ParameterError("seminorm: --caps takes beta,k,l");
            SeminormCaps caps{static_cast<int>(caps_list[0]),
                              static_cast<int>(caps_list[1]),
                              static_cast<int>(caps_list[2])};

            SeminormReport rep;
            if (sm.kind == "gs_p") {
                if (sm.signal.empty())
                    throw ParameterError("seminorm: gs_p needs --signal");
                rep = gs_seminorm_sweep(load_signal(sm.signal), sm.rho1, sm.rho2,
                                        sweep, caps.k, caps.beta);
            } else if (sm.kind == "half_p" || sm.kind == "half_q") {
                if (sm.field.empty())
                    throw ParameterError("seminorm: half_* needs --field");
                rep = halfspace_seminorm_sweep(
                    sm.kind == "half_p" ? SeminormKind::HalfP : SeminormKind::HalfQ,
                    load_field(sm.field),
                    HalfSpaceIndices(sm.s, sm.t, sm.tau1, sm.tau2), sweep, caps);
            } else {
                throw ParameterError("seminorm: unknown kind '" + sm.kind + "'");
            }

            json config{{"command", "seminorm"}, {"kind", sm.kind},
                        {"signal", sm.signal}, {"field", sm.field},
                        {"rho1", sm.rho1}, {"rho2", sm.rho2}, {"s", sm.s},
                        {"t", sm.t}, {"tau1", sm.tau1}, {"tau2", sm.tau2},
                        {"h", sm.h}, {"caps", sm.caps}};
            emit("seminorm", config, json::parse(seminorm_report_to_json(rep)));
            return 0;
        }

        if (cmd_fit->parsed()) {
            fd.field = resolve(fd_field, fd.field, "field");
            fd.s = resolve(fd_s, fd.s, "s");
            fd.t = resolve(fd_t, fd.t, "t");
            fd.rho1 = resolve(fd_r1, fd.rho1, "rho1");
            fd.rho2 = resolve(fd_r2, fd.rho2, "rho2");
            if (fd.field.empty()) throw ParameterError("fit-decay: --field required");

            DecayFit fit =
                decay_fit(load_field(fd.field), fd.s, fd.t, fd.rho1, fd.rho2);
            json config{{"command", "fit-decay"}, {"field", fd.field}, {"s", fd.s},
                        {"t", fd.t}, {"rho1", fd.rho1}, {"rho2", fd.rho2}};
            emit("fit-decay", config, json::parse(decay_fit_to_json(fit)));
            return 0;
        }

        if (cmd_msig->parsed()) {
            ms.kind = resolve(ms_kind, ms.kind, "kind");
            ms.dim = resolve(ms_dim, ms.dim, "dim");
            ms.n = resolve(ms_n, ms.n, "n");
            ms.l = resolve(ms_l, ms.l, "l");
            ms.r0 = resolve(ms_r0, ms.r0, "r0");
            ms.r1 = resolve(ms_r1, ms.r1, "r1");
            ms.order = resolve(ms_or, ms.order, "order");
            ms.sigma = resolve(ms_sg, ms.sigma, "sigma");
            ms.flat = resolve(ms_fl, ms.flat, "flat");
            ms.band_lo = resolve(ms_blo, ms.band_lo, "band_lo");
            ms.band_hi = resolve(ms_bhi, ms.band_hi, "band_hi");
            ms.seed = resolve(ms_seed, ms.seed, "seed");
            ms.out = resolve(ms_out, ms.out, "out");
            ms.csv = resolve(ms_csv, ms.csv, "csv");

            SignalGrid grid(ms.dim, ms.n, ms.l);
            SampledSignal f = SampledSignal::zeros(grid);
            if (ms.kind == "bump-spectrum")
                f = make_bump_spectrum_signal(grid, ms.r0, ms.r1, ms.order);
            else if (ms.kind == "gaussian")
                f = make_gaussian_signal(grid, ms.sigma);
            else if (ms.kind == "flat-gauss")
                f = make_flat_gauss_signal(grid, ms.flat);
            else if (ms.kind == "random")
                f = random_smooth_signal(grid, ms.band_lo, ms.band_hi, ms.seed);
            else
                throw ParameterError("make-signal: unknown kind '" + ms.kind + "'");
            save_signal(ms.out, f);
            if (!ms.csv.empty()) {
                std::ofstream cs(ms.csv, std::ios::trunc);
                if (!cs) throw IoError("cannot open for writing: " + ms.csv);
                signal_to_csv(cs, f);
            }

            json config{{"command", "make-signal"}, {"kind", ms.kind},
                        {"dim", ms.dim}, {"n", ms.n}, {"l", ms.l}, {"r0", ms.r0},
                        {"r1", ms.r1}, {"order", ms.order}, {"sigma", ms.sigma},
                        {"flat", ms.flat}, {"band_lo", ms.band_lo},
                        {"band_hi", ms.band_hi}, {"seed", ms.seed}, {"out", ms.out},
                        {"csv", ms.csv}};
            emit("make-signal", config, json{{"signal_file", ms.out}});
            return 0;
        }

        if (cmd_mf->parsed()) {
            mf.kind = resolve(mf_kind, mf.kind, "kind");
            mf.b_profile = resolve(mf_b, mf.b_profile, "b_profile");
            mf.a_profile = resolve(mf_a, mf.a_profile, "a_profile");
            mf.dim = resolve(mf_dim, mf.dim, "dim");
            mf.n = resolve(mf_n, mf.n, "n");
            mf.l = resolve(mf_l, mf.l, "l");
            mf.amin = resolve(mf_amin, mf.amin, "amin");
            mf.amax = resolve(mf_amax, mf.amax, "amax");
            mf.scales = resolve(mf_k, mf.scales, "scales");
            mf.band_lo = resolve(mf_blo, mf.band_lo, "band_lo");
            mf.band_hi = resolve(mf_bhi, mf.band_hi, "band_hi");
            mf.seed = resolve(mf_seed, mf.seed, "seed");
            mf.out = resolve(mf_out, mf.out, "out");

            SignalGrid grid(mf.dim, mf.n, mf.l);
            ScaleGrid ag(mf.amin, mf.amax, mf.scales);
            HalfSpaceField field = HalfSpaceField::zeros(grid, ag);
            if (mf.kind == "separable") {
                BProfile bp = mf.b_profile == "gaussian"
                    ? BProfile::Gaussian
                    : mf.b_profile == "sech" ? BProfile::Sech : BProfile::Poly4;
                if (mf.b_profile != "gaussian" && mf.b_profile != "sech" &&
                    mf.b_profile != "poly4")
                    throw ParameterError("make-field: unknown b-profile");
                AProfile ap = mf.a_profile == "constant" ? AProfile::Constant
                                                         : AProfile::ExpBoth;
                if (mf.a_profile != "constant" && mf.a_profile != "exp-both")
                    throw ParameterError("make-field: unknown a-profile");
                field = make_separable_field(grid, ag, bp, ap);
            } else if (mf.kind == "random") {
                field = random_smooth_field(grid, ag, mf.band_lo, mf.band_hi, mf.seed);
            } else {
                throw ParameterError("make-field: unknown kind '" + mf.kind + "'");
            }
            save_field(mf.out, field);

            json config{{"command", "make-field"}, {"kind", mf.kind},
                        {"b_profile", mf.b_profile}, {"a_profile", mf.a_profile},
                        {"dim", mf.dim}, {"n", mf.n}, {"l", mf.l}, {"amin", mf.amin},
                        {"amax", mf.amax}, {"scales", mf.scales},
                        {"band_lo", mf.band_lo}, {"band_hi", mf.band_hi},
                        {"seed", mf.seed}, {"out", mf.out}};
            emit("make-field", config, json{{"field_file", mf.out}});
            return 0;
        }

        throw ParameterError("no command given");
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
