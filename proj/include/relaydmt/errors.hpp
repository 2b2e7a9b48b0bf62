/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#ifndef RELAYDMT_ERRORS_HPP
#define RELAYDMT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relaydmt {

// Invalid configuration or argument (maps to CLI exit code 2).
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside the documented working range of an approximation or series.
class range_error : public std::domain_error {
public:
    explicit range_error(const std::string& what) : std::domain_error(what) {}
};

// Repeated-eigenvalue spectrum that the closed forms cannot handle, even after
// the perturbation policy.
class degeneracy_error : public std::runtime_error {
public:
    explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature, inversion or sampling did not converge (maps to CLI exit code 3).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Not enough qualifying data points for an empirical fit.
class insufficient_data_error : public std::runtime_error {
public:
    explicit insufficient_data_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace relaydmt

#endif
