#pragma once

#include <stdexcept>
#include <string>

namespace eg {

enum class Errc {
    LoopEdge,
    DuplicateEdge,
    NodeOutOfRange,
    MalformedHeader,
    TruncatedBits,
    OrderTooLarge,
    NotEulerian,
    CycleBudgetExceeded,
    DecompositionBudgetExceeded,
    SameNode,
    Disconnected,
    NotBiconnected,
    InconsistentCounts,
    BadParameters,
    TooShort,
    WouldCreateMultiEdge,
    InvalidPlan,
    ClassCheckFailed,
    PartialLabeling,
    ParseError,
    Unsupported,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::LoopEdge: return "LoopEdge";
        case Errc::DuplicateEdge: return "DuplicateEdge";
        case Errc::NodeOutOfRange: return "NodeOutOfRange";
        case Errc::MalformedHeader: return "MalformedHeader";
        case Errc::TruncatedBits: return "TruncatedBits";
        case Errc::OrderTooLarge: return "OrderTooLarge";
        case Errc::NotEulerian: return "NotEulerian";
        case Errc::CycleBudgetExceeded: return "CycleBudgetExceeded";
        case Errc::DecompositionBudgetExceeded: return "DecompositionBudgetExceeded";
        case Errc::SameNode: return "SameNode";
        case Errc::Disconnected: return "Disconnected";
        case Errc::NotBiconnected: return "NotBiconnected";
        case Errc::InconsistentCounts: return "InconsistentCounts";
        case Errc::BadParameters: return "BadParameters";
        case Errc::TooShort: return "TooShort";
        case Errc::WouldCreateMultiEdge: return "WouldCreateMultiEdge";
        case Errc::InvalidPlan: return "InvalidPlan";
        case Errc::ClassCheckFailed: return "ClassCheckFailed";
        case Errc::PartialLabeling: return "PartialLabeling";
        case Errc::ParseError: return "ParseError";
        case Errc::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace eg
