#pragma once

#include <stdexcept>
#include <string>

namespace mlsna {

enum class Errc {
    DuplicateEdge,
    SelfLoop,
    UnknownNode,
    UnknownLayer,
    EmptyLog,
    AlphaOutOfRange,
    BetaOutOfRange,
    DegenerateNetwork,
    NoConvergence,
    NoSuchEdge,
    DegenerateDenominator,
    WeightOutOfRange,
    UniverseMismatch,
    EmptyGroup,
    FrameMismatch,
    EmptyDataset,
    LengthMismatch,
    InfeasibleSpec,
    WiringFailure,
    BadInput,
};

/// Library error carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace mlsna
