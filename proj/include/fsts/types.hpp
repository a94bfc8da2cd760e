#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fsts {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

/// The five tampering families. Values index into per-type arrays everywhere.
enum class TamperType : int {
    CopyMove = 0,
    Splicing = 1,
    Removal = 2,
    Insertion = 3,
    Replacement = 4,
};

inline constexpr int kTamperTypeCount = 5;

inline constexpr std::array<TamperType, kTamperTypeCount> kAllTamperTypes = {
    TamperType::CopyMove, TamperType::Splicing, TamperType::Removal,
    TamperType::Insertion, TamperType::Replacement};

inline std::string_view to_string(TamperType t) {
    switch (t) {
        case TamperType::CopyMove: return "copy-move";
        case TamperType::Splicing: return "splicing";
        case TamperType::Removal: return "removal";
        case TamperType::Insertion: return "insertion";
        case TamperType::Replacement: return "replacement";
    }
    return "?";
}

inline TamperType tamper_type_from_string(std::string_view s) {
    for (TamperType t : kAllTamperTypes)
        if (to_string(t) == s) return t;
    throw ParseError("unknown tampering type: '" + std::string(s) + "'");
}

inline bool is_tamper_type(std::string_view s) {
    for (TamperType t : kAllTamperTypes)
        if (to_string(t) == s) return true;
    return false;
}

struct Rgb {
    uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

}  // namespace fsts
