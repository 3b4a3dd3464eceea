#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "birkhoff/decomposition.hpp"

namespace birkhoff {

struct MatrixMetadata {
    std::optional<uint64_t> seed;
    std::string generator;
};

/// Writes an n×n complex matrix as JSON with [re, im] entry pairs at full
/// round-trip precision. Throws std::runtime_error on I/O failure.
void save_matrix(const std::string& path, const ComplexMatrix& m, const MatrixMetadata& meta = {});

/// Parses a matrix file; fills *meta when provided and present in the file.
ComplexMatrix load_matrix(const std::string& path, MatrixMetadata* meta = nullptr);

/// Writes a decomposition with its audit block. Labels serialize structurally:
/// shift/pitch pairs for supercirculant and epicirculant terms, one-line images
/// for plain permutations.
void save_decomposition(const std::string& path, const Decomposition& d, const VerifyReport& audit);

/// Reloads a decomposition; term permutations are rebuilt from their labels.
Decomposition load_decomposition(const std::string& path);

} // namespace birkhoff
