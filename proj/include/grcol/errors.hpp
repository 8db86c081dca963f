#pragma once

#include <stdexcept>
#include <string>

namespace grcol {

/// Error categories used across the library. The CLI maps these to exit
/// codes: size/budget overruns exit 3, everything else is a usage error (2).
enum class Errc {
    not_prime,
    size_limit_exceeded,
    level_mismatch,
    division_by_zero,
    too_many_vectors,
    zero_space,
    ambient_mismatch,
    zero_vector,
    dependent_input,
    param_mismatch,
    bad_subset,
    bad_dim,
    dependent_pair,
    odd_characteristic,
    odd_n,
    not_lines,
    dim_mismatch,
    budget_exceeded,
    config_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::not_prime: return "NotPrime";
        case Errc::size_limit_exceeded: return "SizeLimitExceeded";
        case Errc::level_mismatch: return "LevelMismatch";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::too_many_vectors: return "TooManyVectors";
        case Errc::zero_space: return "ZeroSpace";
        case Errc::ambient_mismatch: return "AmbientMismatch";
        case Errc::zero_vector: return "ZeroVector";
        case Errc::dependent_input: return "DependentInput";
        case Errc::param_mismatch: return "ParamMismatch";
        case Errc::bad_subset: return "BadSubset";
        case Errc::bad_dim: return "BadDim";
        case Errc::dependent_pair: return "DependentPair";
        case Errc::odd_characteristic: return "OddCharacteristic";
        case Errc::odd_n: return "OddN";
        case Errc::not_lines: return "NotLines";
        case Errc::dim_mismatch: return "DimMismatch";
        case Errc::budget_exceeded: return "BudgetExceeded";
        case Errc::config_error: return "ConfigError";
    }
    return "Error";
}

} // namespace grcol
