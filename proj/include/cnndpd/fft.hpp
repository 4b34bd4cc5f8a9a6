// SPDX-FileCopyrightText: © 2026 cnndpd contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "cnndpd/errors.hpp"

// Iterative radix-2 FFT, power-of-two lengths only. All FFT consumers in
// this project (OFDM generation, Welch PSD) validate their sizes up front.

namespace cnndpd {

inline bool is_power_of_two(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place transform. Forward uses e^{-j2πnk/N}; inverse applies 1/N scaling.
inline void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
    const size_t n = a.size();
    if (!is_power_of_two(n)) throw ConfigError("fft: length must be a power of two");
    if (n == 1) return;

    // bit-reversal permutation
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (size_t len = 2; len <= n; len <<= 1) {
        const double angle = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(angle), std::sin(angle));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }

    if (inverse) {
        const double inv_n = 1.0 / static_cast<double>(n);
        for (auto& v : a) v *= inv_n;
    }
}

inline std::vector<std::complex<double>> fft(std::vector<std::complex<double>> a) {
    fft_inplace(a, false);
    return a;
}

inline std::vector<std::complex<double>> ifft(std::vector<std::complex<double>> a) {
    fft_inplace(a, true);
    return a;
}

}  // namespace cnndpd
