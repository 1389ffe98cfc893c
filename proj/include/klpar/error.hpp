#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace klpar {

enum class Errc {
    MalformedCartan,
    IndexOutOfRange,
    SystemMismatch,
    ParabolicInfinite,
    PostVerificationFailed,
    NotComparable,
    NotMinCosetRep,
    NoSolution,
    UnknownSuite,
    ConfigurationInvalid,
    CacheHeaderMismatch,
    CorruptCache,
    ParseError,
    IoError,
    ArithmeticOverflow,
};

constexpr std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::MalformedCartan: return "MalformedCartan";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::SystemMismatch: return "SystemMismatch";
        case Errc::ParabolicInfinite: return "ParabolicInfinite";
        case Errc::PostVerificationFailed: return "PostVerificationFailed";
        case Errc::NotComparable: return "NotComparable";
        case Errc::NotMinCosetRep: return "NotMinCosetRep";
        case Errc::NoSolution: return "NoSolution";
        case Errc::UnknownSuite: return "UnknownSuite";
        case Errc::ConfigurationInvalid: return "ConfigurationInvalid";
        case Errc::CacheHeaderMismatch: return "CacheHeaderMismatch";
        case Errc::CorruptCache: return "CorruptCache";
        case Errc::ParseError: return "ParseError";
        case Errc::IoError: return "IoError";
        case Errc::ArithmeticOverflow: return "ArithmeticOverflow";
    }
    return "Unknown";
}

/// All library failures are reported through this exception; `code()` tells them apart.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace klpar
