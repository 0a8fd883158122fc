#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace surfmap {

enum class ErrorCode {
    ParseError,
    NonMutualAdjacency,
    DuplicateNeighbor,
    LoopEdge,
    UnknownEdge,
    BadHoleAnchor,
    DisconnectedMap,
    NotACycle,
    CycleTouchesItself,
    CyclesShareVertex,
    CycleContractible,
    MapHasHoles,
    SphereHasNone,
    GridTooSmall,
    AnchorNotTriangle,
    NonOrientableInput,
    NotATriangulation,
    NotATorus,
    NoExpansionMove,
    NoShrinkMove,
    NonSimpleHoleBoundary,
    NotAFaceSubdivision,
    VerifierRejected,
    InvalidArgument,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NonMutualAdjacency: return "NonMutualAdjacency";
        case ErrorCode::DuplicateNeighbor: return "DuplicateNeighbor";
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::BadHoleAnchor: return "BadHoleAnchor";
        case ErrorCode::DisconnectedMap: return "DisconnectedMap";
        case ErrorCode::NotACycle: return "NotACycle";
        case ErrorCode::CycleTouchesItself: return "CycleTouchesItself";
        case ErrorCode::CyclesShareVertex: return "CyclesShareVertex";
        case ErrorCode::CycleContractible: return "CycleContractible";
        case ErrorCode::MapHasHoles: return "MapHasHoles";
        case ErrorCode::SphereHasNone: return "SphereHasNone";
        case ErrorCode::GridTooSmall: return "GridTooSmall";
        case ErrorCode::AnchorNotTriangle: return "AnchorNotTriangle";
        case ErrorCode::NonOrientableInput: return "NonOrientableInput";
        case ErrorCode::NotATriangulation: return "NotATriangulation";
        case ErrorCode::NotATorus: return "NotATorus";
        case ErrorCode::NoExpansionMove: return "NoExpansionMove";
        case ErrorCode::NoShrinkMove: return "NoShrinkMove";
        case ErrorCode::NonSimpleHoleBoundary: return "NonSimpleHoleBoundary";
        case ErrorCode::NotAFaceSubdivision: return "NotAFaceSubdivision";
        case ErrorCode::VerifierRejected: return "VerifierRejected";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

// Contract violations and malformed inputs. Search outcomes like "not found"
// or "budget exceeded" are ordinary return values, not exceptions.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// FNV-1a, used for content digests of serialized maps and records.
inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string to_hex(uint64_t v);

inline std::string to_hex(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

}  // namespace surfmap
