#pragma once

#include <cstdint>
#include <string>

namespace birkhoff {

struct GenOptions {
    int n = 0;
    uint64_t seed = 0;
    std::string out;
};

enum class GroupSelect { automatic, symmetric, supercirculant, epicirculant };
enum class StrategySelect { automatic, one, two, structural };

struct DecomposeOptions {
    std::string in;
    std::string out;
    GroupSelect group = GroupSelect::automatic;
    StrategySelect strategy = StrategySelect::automatic;
    double tol = 1e-9;
    bool allow_large = false;
};

struct VerifyOptions {
    std::string matrix_path;
    std::string decomposition_path;
    double tol = 1e-9;
};

struct CountsOptions {
    int max_n = 0;
    std::string csv_path; // empty: stdout only
};

// Each command prints its report to stdout and returns a process exit code:
// 0 when every audit passes, nonzero otherwise. Argument/domain problems are
// thrown and reported by the caller.
int cmd_gen(const GenOptions& opt);
int cmd_decompose(const DecomposeOptions& opt);
int cmd_verify(const VerifyOptions& opt);
int cmd_counts(const CountsOptions& opt);

} // namespace birkhoff
