#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gsw/field.hpp"

namespace gsw {

/// Binary container: 8-byte magic "GSWHSF01", a 4-byte little-endian length
/// prefix, a UTF-8 JSON header, then raw complex64-pair payload (two
/// little-endian IEEE-754 float64 per sample).  Fields are scale-major,
/// signals row-major.  Round trips are bit-exact.
inline constexpr char kFileMagic[8] = {'G', 'S', 'W', 'H', 'S', 'F', '0', '1'};

void save_signal(const std::string& path, const SampledSignal& sig);
SampledSignal load_signal(const std::string& path);

void save_spectrum(const std::string& path, const SampledSpectrum& spec);
SampledSpectrum load_spectrum(const std::string& path);

void save_field(const std::string& path, const HalfSpaceField& field);
HalfSpaceField load_field(const std::string& path);

/// In-memory form of the binary container (used to embed spectra in JSON).
std::vector<unsigned char> spectrum_to_bytes(const SampledSpectrum& spec);
SampledSpectrum spectrum_from_bytes(const std::vector<unsigned char>& bytes);

/// Grid descriptions as JSON text; parse is bit-exact.
std::string signal_grid_to_json(const SignalGrid& g);
SignalGrid signal_grid_from_json(const std::string& text);
std::string scale_grid_to_json(const ScaleGrid& g);
ScaleGrid scale_grid_from_json(const std::string& text);

/// CSV export, columns b(,b2),a,re,im for fields and b(,b2),re,im for signals.
void field_to_csv(std::ostream& os, const HalfSpaceField& field);
void signal_to_csv(std::ostream& os, const SampledSignal& sig);

std::string base64_encode(const std::vector<unsigned char>& data);
std::vector<unsigned char> base64_decode(const std::string& text);

} // namespace gsw
