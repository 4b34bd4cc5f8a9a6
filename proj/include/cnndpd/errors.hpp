// SPDX-FileCopyrightText: © 2026 cnndpd contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace cnndpd {

// Invalid configuration or file schema. CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor/layer dimension mismatch.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input that makes the requested operation meaningless (empty or all-zero signal).
struct DegenerateInputError : std::runtime_error {
    explicit DegenerateInputError(const std::string& msg) : std::runtime_error(msg) {}
};

// PA device failure (e.g. length contract violated by an external device).
struct DeviceError : std::runtime_error {
    explicit DeviceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Training produced a non-finite loss.
struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Least-squares regressor matrix is numerically rank deficient.
struct IllConditionedError : std::runtime_error {
    IllConditionedError(const std::string& msg, double condition)
        : std::runtime_error(msg), condition_estimate(condition) {}
    double condition_estimate;
};

}  // namespace cnndpd
