#pragma once
#include <stdexcept>
#include <string>
#include <utility>

namespace tridiag_hira {

// A computation failed for numerical reasons. `stage` names the step that
// detected it (for example "grow_forward" or "glue").
class NumericalError : public std::runtime_error {
public:
    NumericalError(std::string stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

class SingularSystemError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace tridiag_hira
