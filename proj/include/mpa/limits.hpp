#pragma once

#include <stdexcept>
#include <string>

namespace mpa {

/// Thrown when a computation would exceed a configured resource cap.
/// The CLI maps this to exit code 3.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Caps guarding the combinatorial explosions.  Callers may relax or tighten;
/// the CLI reads overrides from MPALG_MAX_PARTITIONS / MPALG_MAX_BASIS /
/// MPALG_MAX_NNZ.
struct Limits {
    long long max_partitions = 10'000'000;  // enumerate_msp guard
    long long max_basis = 20'000;           // monomial basis size guard
    long long max_nnz = 200'000;            // sparse product nonzero guard
};

}  // namespace mpa
