#pragma once

#include <stdexcept>
#include <string>

namespace pebble {

enum class ErrorKind {
    BadInput,
    BadEdge,
    NotConnected,
    PriceBelowTwo,
    InsufficientPebbles,
    DomainError,
    NotComplete,
    NotPath,
    NotStar,
    Overflow,
    ResourceLimit,
};

inline const char* to_string(ErrorKind kind)
{
    switch (kind) {
        case ErrorKind::BadInput: return "BadInput";
        case ErrorKind::BadEdge: return "BadEdge";
        case ErrorKind::NotConnected: return "NotConnected";
        case ErrorKind::PriceBelowTwo: return "PriceBelowTwo";
        case ErrorKind::InsufficientPebbles: return "InsufficientPebbles";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::NotComplete: return "NotComplete";
        case ErrorKind::NotPath: return "NotPath";
        case ErrorKind::NotStar: return "NotStar";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::ResourceLimit: return "ResourceLimit";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message) :
        std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message)
{
    throw Error(kind, message);
}

} // namespace pebble
