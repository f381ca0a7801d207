// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace darboux {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- evaluation / special function errors -------------------------------

struct DomainError : Error {
    using Error::Error;
};

struct NonConvergence : Error {
    using Error::Error;
};

struct PoleError : Error {
    using Error::Error;
};

// Pole hit in a parameter plane (e.g. gamma factor in a connection formula).
struct ParameterPole : PoleError {
    using PoleError::PoleError;
};

struct QuadratureFailure : Error {
    using Error::Error;
};

struct BranchCutHit : Error {
    using Error::Error;
};

// --- geometry errors ----------------------------------------------------

struct PointOutsideDomain : Error {
    using Error::Error;
};

struct NonConformalChart : Error {
    using Error::Error;
};

struct NotALimitPoint : Error {
    using Error::Error;
};

struct StencilOutsideDomain : Error {
    using Error::Error;
};

// --- kernel / solution errors -------------------------------------------

struct CausticSingularity : Error {
    using Error::Error;
};

struct PoleAtBoundState : Error {
    using Error::Error;
};

struct BoundaryNodeZero : Error {
    using Error::Error;
};

struct NoBoundStates : Error {
    using Error::Error;
};

struct IndexBeyondNM : Error {
    using Error::Error;
};

struct UnsolvedSystem : Error {
    using Error::Error;
};

struct TruncationNotConverged : Error {
    using Error::Error;
};

struct SpecialFunctionFailure : Error {
    using Error::Error;
};

// --- lattice errors -----------------------------------------------------

struct GridTooCoarse : Error {
    using Error::Error;
};

struct NotConverged : Error {
    using Error::Error;
};

struct DerivativeSingularity : Error {
    using Error::Error;
};

// --- cli errors ---------------------------------------------------------

struct ParseError : Error {
    using Error::Error;
};

}  // namespace darboux
