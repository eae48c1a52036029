#pragma once

#include <stdexcept>
#include <string>

namespace anet {

enum class errc {
    invalid_params,
    invalid_digit,
    invalid_coordinate,
    parse_error,
    limit_exceeded,
    decomposition_unavailable,
    state_cap_exceeded,
    not_an_arc,
    no_return_path,
    io_error,
};

class Error : public std::runtime_error {
public:
    Error(errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(errc c)
{
    switch (c) {
    case errc::invalid_params: return "InvalidParams";
    case errc::invalid_digit: return "InvalidDigit";
    case errc::invalid_coordinate: return "InvalidCoordinate";
    case errc::parse_error: return "ParseError";
    case errc::limit_exceeded: return "LimitExceeded";
    case errc::decomposition_unavailable: return "DecompositionUnavailable";
    case errc::state_cap_exceeded: return "StateCapExceeded";
    case errc::not_an_arc: return "NotAnArc";
    case errc::no_return_path: return "NoReturnPath";
    case errc::io_error: return "IOError";
    }
    return "Error";
}

} // namespace anet
