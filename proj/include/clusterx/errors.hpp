// SPDX-License-Identifier: Apache-2.0
#ifndef CLUSTERX_ERRORS_HPP
#define CLUSTERX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace clusterx {

/// Malformed input: bad graph, bad operator, bad problem file.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A desk-scale size guard was exceeded. Guards are hard errors.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An algorithmic condition failed and no override was given.
class ConditionError : public std::runtime_error {
public:
    explicit ConditionError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace clusterx

#endif
