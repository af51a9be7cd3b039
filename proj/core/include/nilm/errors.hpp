#pragma once

#include <stdexcept>
#include <string>

namespace nilm {

// Failure surfaces of the toolkit. The CLI maps these onto one-line
// machine-parsable diagnostics of the form "error: <kind>: <message>".
enum class ErrorKind {
    config,         // invalid layer/architecture/case configuration
    usage,          // API misuse (backward before forward, length mismatch)
    ingest,         // unreadable or malformed input file
    alignment,      // channels with no common time span
    normalization,  // degenerate statistics (zero variance)
    dataset,        // no usable windows
    train,          // non-finite loss or diverged optimization
    pipeline,       // stage contract violation (wrong checkpoint, bad scheme)
    evaluation,     // degenerate metric input
    io,             // filesystem failure
};

const char* error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    const char* kind_name() const noexcept { return error_kind_name(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

} // namespace nilm
