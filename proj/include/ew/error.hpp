#pragma once

#include <stdexcept>
#include <string>

namespace ew {

enum class ErrorCode {
    bad_type = 1,
    bad_weight,
    node_not_minuscule,
    strings_too_long,
    data_invalid,
    weight_conflict,
    no_iso,
    inconsistent,
    table_mismatch,
    depth_overflow,
    io,
    internal
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

const char* error_name(ErrorCode code);

} // namespace ew
