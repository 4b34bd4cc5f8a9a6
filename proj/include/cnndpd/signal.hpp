// SPDX-FileCopyrightText: © 2026 cnndpd contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cnndpd/errors.hpp"

namespace cnndpd {

using cplx = std::complex<double>;

// Uniformly sampled complex baseband IQ sequence.
struct ComplexSignal {
    std::vector<cplx> samples;
    double sample_rate_hz = 1.0;

    size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }

    void validate(const char* what = "signal") const {
        if (samples.empty())
            throw DegenerateInputError(std::string(what) + ": empty sample buffer");
        if (!(sample_rate_hz > 0.0))
            throw ConfigError(std::string(what) + ": sample_rate_hz must be > 0");
    }
};

inline double mean_power(const ComplexSignal& x) {
    x.validate();
    double acc = 0.0;
    for (const auto& s : x.samples) acc += std::norm(s);
    return acc / static_cast<double>(x.samples.size());
}

inline double rms(const ComplexSignal& x) { return std::sqrt(mean_power(x)); }

// Scales the signal to an exact RMS level; phases are untouched.
inline ComplexSignal normalize_rms(const ComplexSignal& x, double target_rms) {
    x.validate("normalize_rms input");
    if (!(target_rms > 0.0)) throw ConfigError("normalize_rms: target_rms must be > 0");
    const double current = rms(x);
    if (current == 0.0) throw DegenerateInputError("normalize_rms: all-zero signal");
    const double scale = target_rms / current;
    ComplexSignal out = x;
    for (auto& s : out.samples) s *= scale;
    return out;
}

// --- CSV + JSON sidecar serialization -------------------------------------
//
// Column file: header "index,i,q", one row per sample, doubles printed with
// 17 significant digits so they round-trip exactly. The sidecar (same path
// with a .json extension) carries sample_rate_hz and caller-supplied
// provenance (generator config, seed).

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
    std::filesystem::path p = csv_path;
    p.replace_extension(".json");
    return p;
}

}  // namespace detail

inline void write_signal_csv(const ComplexSignal& x, const std::filesystem::path& csv_path,
                             const nlohmann::json& provenance = nlohmann::json::object()) {
    x.validate("write_signal_csv input");
    std::ofstream f(csv_path);
    if (!f) throw ConfigError("write_signal_csv: cannot open " + csv_path.string());
    f << "index,i,q\n";
    for (size_t n = 0; n < x.samples.size(); ++n) {
        f << n << ',' << detail::format_double(x.samples[n].real()) << ','
          << detail::format_double(x.samples[n].imag()) << '\n';
    }
    nlohmann::json meta{{"sample_rate_hz", x.sample_rate_hz}, {"provenance", provenance}};
    std::ofstream side(detail::sidecar_path(csv_path));
    if (!side) throw ConfigError("write_signal_csv: cannot open sidecar for " + csv_path.string());
    side << meta.dump(2) << '\n';
}

inline ComplexSignal read_signal_csv(const std::filesystem::path& csv_path) {
    std::ifstream f(csv_path);
    if (!f) throw ConfigError("read_signal_csv: cannot open " + csv_path.string());
    std::string line;
    if (!std::getline(f, line) || line.rfind("index,i,q", 0) != 0)
        throw ConfigError("read_signal_csv: missing 'index,i,q' header in " + csv_path.string());

    ComplexSignal out;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        const char* p = line.data();
        const char* end = p + line.size();
        auto skip_field = [&]() {
            while (p != end && *p != ',') ++p;
            if (p == end) throw ConfigError("read_signal_csv: malformed row: " + line);
            ++p;
        };
        skip_field();  // index column
        double re = 0.0, im = 0.0;
        auto r1 = std::from_chars(p, end, re);
        if (r1.ec != std::errc{} || r1.ptr == end || *r1.ptr != ',')
            throw ConfigError("read_signal_csv: malformed row: " + line);
        auto r2 = std::from_chars(r1.ptr + 1, end, im);
        if (r2.ec != std::errc{})
            throw ConfigError("read_signal_csv: malformed row: " + line);
        out.samples.emplace_back(re, im);
    }

    const auto side = detail::sidecar_path(csv_path);
    if (std::filesystem::exists(side)) {
        std::ifstream sf(side);
        nlohmann::json meta = nlohmann::json::parse(sf);
        out.sample_rate_hz = meta.at("sample_rate_hz").get<double>();
    }
    out.validate("read_signal_csv result");
    return out;
}

}  // namespace cnndpd
