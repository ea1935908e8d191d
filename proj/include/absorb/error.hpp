#pragma once

#include <stdexcept>
#include <string>

namespace absorb {

enum class ErrorKind {
    invalid_order,
    cross_owner,
    not_proper,
    size_bound,
    degenerate_localization,
    construction,
    parse,
    elaboration,
    unknown_suite,
    usage,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace absorb
