#pragma once

#include <stdexcept>
#include <string>

namespace qgb {

// Exit codes shared by the library's exception hierarchy and the CLI.
enum class ExitCode : int {
    Ok = 0,
    Parse = 1,
    Hypothesis = 2,
    Inconclusive = 3,
    Verification = 4,
};

class Error : public std::runtime_error {
public:
    Error(ExitCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ExitCode code() const { return code_; }

private:
    ExitCode code_;
};

// Malformed input file or expression.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(ExitCode::Parse, msg) {}
};

// Input does not satisfy the hypotheses a routine requires
// (e.g. not Artinian, wrong number of quadrics, bad characteristic).
class HypothesisError : public Error {
public:
    explicit HypothesisError(const std::string& msg) : Error(ExitCode::Hypothesis, msg) {}
};

// A randomized or bounded search ran out of budget without a definite answer.
class InconclusiveError : public Error {
public:
    explicit InconclusiveError(const std::string& msg) : Error(ExitCode::Inconclusive, msg) {}
};

// An internally produced certificate failed its independent check.
class VerificationError : public Error {
public:
    explicit VerificationError(const std::string& msg) : Error(ExitCode::Verification, msg) {}
};

} // namespace qgb
