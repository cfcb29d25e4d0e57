#ifndef CLUSPT_ERRORS_HPP
#define CLUSPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cluspt {

// Bad user-supplied data (files, ids, parameters). The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structure of an instance prevents an operation (disconnected cluster, infeasible model).
struct DecodeError : InputError {
    explicit DecodeError(const std::string& msg) : InputError(msg) {}
};

// Parse failure with a 1-based line number.
struct ParseError : InputError {
    ParseError(int line, const std::string& msg)
        : InputError("line " + std::to_string(line) + ": " + msg), line_number(line) {}
    int line_number;
};

// A caller violated an API contract (e.g. decoding an invalid chromosome).
struct ContractError : std::logic_error {
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace cluspt

#endif
