#ifndef CURVEBASIS_ERROR_HPP
#define CURVEBASIS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace curvebasis {

enum class ErrorCode {
    NotPrime,
    TooSmall,
    ContextMismatch,
    NotCoprime,
    NotMonic,
    SquarefreeViolation,
    ParseError,
    InsufficientPrecision,
    WildRamification,
    RankDeficient,
    Singular,
    NonIntegralTrace,
    InternalInvariantBroken,
    VerificationFailure,
};

const char* to_string(ErrorCode code);

/// All library failures surface as Error; the code decides the CLI exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void check(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) raise(code, what);
}

} // namespace curvebasis

#endif
