#pragma once

#include <stdexcept>
#include <string>

namespace rsmsr {

enum class Errc {
    NotPrime,
    PrimeTooSmall,
    DuplicatePrime,
    NoIrreducibleFound,
    DivisionByZero,
    ConfigMismatch,
    NotABasis,
    InvalidArguments,
    IndexOutOfRange,
    ShapeMismatch,
    NonConsecutiveAlphaExponents,
    UnexpectedDependence,
    SpanDeficient,
    LengthMismatch,
    BadHelperSet,
    BadT,
    NotAHelper,
    MissingResponse,
    TraceNotInSubfield,
    SubspaceRankFailure,
};

const char* errc_name(Errc c);

/// Library-wide exception. `code()` identifies the failed precondition or
/// internal consistency check; the message carries context.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::PrimeTooSmall: return "PrimeTooSmall";
        case Errc::DuplicatePrime: return "DuplicatePrime";
        case Errc::NoIrreducibleFound: return "NoIrreducibleFound";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ConfigMismatch: return "ConfigMismatch";
        case Errc::NotABasis: return "NotABasis";
        case Errc::InvalidArguments: return "InvalidArguments";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::NonConsecutiveAlphaExponents: return "NonConsecutiveAlphaExponents";
        case Errc::UnexpectedDependence: return "UnexpectedDependence";
        case Errc::SpanDeficient: return "SpanDeficient";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::BadHelperSet: return "BadHelperSet";
        case Errc::BadT: return "BadT";
        case Errc::NotAHelper: return "NotAHelper";
        case Errc::MissingResponse: return "MissingResponse";
        case Errc::TraceNotInSubfield: return "TraceNotInSubfield";
        case Errc::SubspaceRankFailure: return "SubspaceRankFailure";
    }
    return "UnknownError";
}

}  // namespace rsmsr
