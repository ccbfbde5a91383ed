#include "gsw/io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <ostream>

#include "json.hpp"

static_assert(std::endian::native == std::endian::little,
              "binary container assumes a little-endian host");

namespace gsw {

using json = nlohmann::json;

namespace {

void append_u32(std::vector<unsigned char>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

void append_payload(std::vector<unsigned char>& out, const std::vector<cplx>& values) {
    const std::size_t off = out.size();
    out.resize(off + values.size() * 16);
    std::memcpy(out.data() + off, values.data(), values.size() * 16);
}

std::vector<unsigned char> pack(const json& header, const std::vector<cplx>& values) {
    std::vector<unsigned char> out;
    out.insert(out.end(), kFileMagic, kFileMagic + 8);
    const std::string htext = header.dump();
    append_u32(out, static_cast<std::uint32_t>(htext.size()));
    out.insert(out.end(), htext.begin(), htext.end());
    append_payload(out, values);
    return out;
}

struct Unpacked {
    json header;
    std::vector<cplx> values;
};

Unpacked unpack(const std::vector<unsigned char>& bytes, const char* what) {
    if (bytes.size() < 12 || std::memcmp(bytes.data(), kFileMagic, 8) != 0)
        throw IoError(std::string(what) + ": bad magic");
    std::uint32_t hlen = 0;
    for (int i = 0; i < 4; ++i) hlen |= static_cast<std::uint32_t>(bytes[8 + i]) << (8 * i);
    if (bytes.size() < 12 + static_cast<std::size_t>(hlen))
        throw IoError(std::string(what) + ": truncated header");
    Unpacked u;
    u.header = json::parse(bytes.begin() + 12, bytes.begin() + 12 + hlen, nullptr, false);
    if (u.header.is_discarded())
        throw IoError(std::string(what) + ": malformed JSON header");
    const std::size_t payload = bytes.size() - 12 - hlen;
    if (payload % 16 != 0)
        throw IoError(std::string(what) + ": payload is not a complex64-pair multiple");
    u.values.resize(payload / 16);
    std::memcpy(u.values.data(), bytes.data() + 12 + hlen, payload);
    return u;
}

void write_file(const std::string& path, const std::vector<unsigned char>& bytes) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open for writing: " + path);
    os.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
    if (!os) throw IoError("write failed: " + path);
}

std::vector<unsigned char> read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open for reading: " + path);
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(is)),
                                     std::istreambuf_iterator<char>());
    return bytes;
}

json grid_header(const SignalGrid& g) {
    return json{{"dim", g.dim()}, {"N", g.n()}, {"L", g.half_extent()}};
}

SignalGrid grid_from_header(const json& h, const char* what) {
    if (!h.contains("dim") || !h.contains("N") || !h.contains("L"))
        throw IoError(std::string(what) + ": header missing grid keys");
    return SignalGrid(h.at("dim").get<int>(), h.at("N").get<int>(),
                      h.at("L").get<double>());
}

} // namespace

void save_signal(const std::string& path, const SampledSignal& sig) {
    json h = grid_header(sig.grid);
    h["kind"] = "signal";
    write_file(path, pack(h, sig.values));
}

SampledSignal load_signal(const std::string& path) {
    Unpacked u = unpack(read_file(path), "signal");
    if (u.header.value("kind", "") != "signal")
        throw IoError("not a signal file: " + path);
    return SampledSignal(grid_from_header(u.header, "signal"), std::move(u.values));
}

void save_spectrum(const std::string& path, const SampledSpectrum& spec) {
    write_file(path, spectrum_to_bytes(spec));
}

SampledSpectrum load_spectrum(const std::string& path) {
    return spectrum_from_bytes(read_file(path));
}

std::vector<unsigned char> spectrum_to_bytes(const SampledSpectrum& spec) {
    json h = grid_header(spec.grid);
    h["kind"] = "spectrum";
    return pack(h, spec.values);
}

SampledSpectrum spectrum_from_bytes(const std::vector<unsigned char>& bytes) {
    Unpacked u = unpack(bytes, "spectrum");
    if (u.header.value("kind", "") != "spectrum")
        throw IoError("not a spectrum blob");
    return SampledSpectrum(grid_from_header(u.header, "spectrum"), std::move(u.values));
}

void save_field(const std::string& path, const HalfSpaceField& field) {
    json h = grid_header(field.sgrid);
    h["kind"] = "field";
    h["a_min"] = field.agrid.a_min();
    h["a_max"] = field.agrid.a_max();
    h["K"] = field.agrid.count();
    write_file(path, pack(h, field.values));
}

HalfSpaceField load_field(const std::string& path) {
    Unpacked u = unpack(read_file(path), "field");
    if (u.header.value("kind", "") != "field")
        throw IoError("not a field file: " + path);
    ScaleGrid ag(u.header.at("a_min").get<double>(), u.header.at("a_max").get<double>(),
                 u.header.at("K").get<int>());
    return HalfSpaceField(grid_from_header(u.header, "field"), ag, std::move(u.values));
}

std::string signal_grid_to_json(const SignalGrid& g) { return grid_header(g).dump(); }

SignalGrid signal_grid_from_json(const std::string& text) {
    return grid_from_header(json::parse(text), "signal grid");
}

std::string scale_grid_to_json(const ScaleGrid& g) {
    return json{{"a_min", g.a_min()}, {"a_max", g.a_max()}, {"K", g.count()}}.dump();
}

ScaleGrid scale_grid_from_json(const std::string& text) {
    json h = json::parse(text);
    return ScaleGrid(h.at("a_min").get<double>(), h.at("a_max").get<double>(),
                     h.at("K").get<int>());
}

namespace {
void write_row(std::ostream& os, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
}
} // namespace

void field_to_csv(std::ostream& os, const HalfSpaceField& field) {
    const SignalGrid& g = field.sgrid;
    os << (g.dim() == 1 ? "b,a,re,im\n" : "b1,b2,a,re,im\n");
    for (int k = 0; k < field.agrid.count(); ++k) {
        const cplx* slab = field.slab(k);
        const double a = field.agrid[k];
        if (g.dim() == 1) {
            for (int j = 0; j < g.n(); ++j) {
                write_row(os, g.coord(j)); os << ',';
                write_row(os, a); os << ',';
                write_row(os, slab[j].real()); os << ',';
                write_row(os, slab[j].imag()); os << '\n';
            }
        } else {
            for (int j0 = 0; j0 < g.n(); ++j0)
                for (int j1 = 0; j1 < g.n(); ++j1) {
                    const cplx z = slab[static_cast<std::size_t>(j0) * g.n() + j1];
                    write_row(os, g.coord(j0)); os << ',';
                    write_row(os, g.coord(j1)); os << ',';
                    write_row(os, a); os << ',';
                    write_row(os, z.real()); os << ',';
                    write_row(os, z.imag()); os << '\n';
                }
        }
    }
}

void signal_to_csv(std::ostream& os, const SampledSignal& sig) {
    const SignalGrid& g = sig.grid;
    os << (g.dim() == 1 ? "b,re,im\n" : "b1,b2,re,im\n");
    if (g.dim() == 1) {
        for (int j = 0; j < g.n(); ++j) {
            write_row(os, g.coord(j)); os << ',';
            write_row(os, sig.values[j].real()); os << ',';
            write_row(os, sig.values[j].imag()); os << '\n';
        }
    } else {
        for (int j0 = 0; j0 < g.n(); ++j0)
            for (int j1 = 0; j1 < g.n(); ++j1) {
                const cplx z = sig.values[static_cast<std::size_t>(j0) * g.n() + j1];
                write_row(os, g.coord(j0)); os << ',';
                write_row(os, g.coord(j1)); os << ',';
                write_row(os, z.real()); os << ',';
                write_row(os, z.imag()); os << '\n';
            }
    }
}

std::string base64_encode(const std::vector<unsigned char>& data) {
    static const char* tab = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string out;
    out.reserve((data.size() + 2) / 3 * 4);
    std::size_t i = 0;
    for (; i + 2 < data.size(); i += 3) {
        std::uint32_t v = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
        out.push_back(tab[(v >> 18) & 63]);
        out.push_back(tab[(v >> 12) & 63]);
        out.push_back(tab[(v >> 6) & 63]);
        out.push_back(tab[v & 63]);
    }
    if (i + 1 == data.size()) {
        std::uint32_t v = data[i] << 16;
        out.push_back(tab[(v >> 18) & 63]);
        out.push_back(tab[(v >> 12) & 63]);
        out += "==";
    } else if (i + 2 == data.size()) {
        std::uint32_t v = (data[i] << 16) | (data[i + 1] << 8);
        out.push_back(tab[(v >> 18) & 63]);
        out.push_back(tab[(v >> 12) & 63]);
        out.push_back(tab[(v >> 6) & 63]);
        out += "=";
    }
    return out;
}

std::vector<unsigned char> base64_decode(const std::string& text) {
    auto val = [](char c) -> int {
        if (c >= 'A' && c <= 'Z') return c - 'A';
        if (c >= 'a' && c <= 'z') return c - 'a' + 26;
        if (c >= '0' && c <= '9') return c - '0' + 52;
        if (c == '+') return 62;
        if (c == '/') return 63;
        return -1;
    };
    std::vector<unsigned char> out;
    std::uint32_t acc = 0;
    int bits = 0;
    for (char c : text) {
        if (c == '=' || c == '\n' || c == '\r') continue;
        int v = val(c);
        if (v < 0) throw IoError("base64: invalid character");
        acc = (acc << 6) | static_cast<std::uint32_t>(v);
        bits += 6;
        if (bits >= 8) {
            bits -= 8;
            out.push_back(static_cast<unsigned char>((acc >> bits) & 0xff));
        }
    }
    return out;
}

} // namespace gsw
