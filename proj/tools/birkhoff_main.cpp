#include <cstdio>
#include <exception>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "birkhoff/commands.hpp"

int main(int argc, char** argv) {
    using namespace birkhoff;

    CLI::App app{"Birkhoff decompositions of unit-line-sum unitary matrices"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* cmd_g = app.add_subcommand("gen", "generate a random unit-line-sum unitary matrix");
    cmd_g->add_option("--n", gen.n, "matrix dimension")->required();
    cmd_g->add_option("--seed", gen.seed, "RNG seed")->required();
    cmd_g->add_option("--out", gen.out, "output matrix file")->required();

    DecomposeOptions dec;
    const std::map<std::string, GroupSelect> group_names{{"auto", GroupSelect::automatic},
                                                         {"symmetric", GroupSelect::symmetric},
                                                         {"supercirculant", GroupSelect::supercirculant},
                                                         {"epicirculant", GroupSelect::epicirculant}};
    const std::map<std::string, StrategySelect> strategy_names{{"auto", StrategySelect::automatic},
                                                               {"1", StrategySelect::one},
                                                               {"2", StrategySelect::two},
                                                               {"structural", StrategySelect::structural}};
    CLI::App* cmd_d = app.add_subcommand("decompose", "decompose a matrix as a weighted permutation sum");
    cmd_d->add_option("--in", dec.in, "input matrix file")->required();
    cmd_d->add_option("--group", dec.group, "permutation group")
        ->transform(CLI::CheckedTransformer(group_names, CLI::ignore_case));
    cmd_d->add_option("--strategy", dec.strategy, "weight strategy")
        ->transform(CLI::CheckedTransformer(strategy_names, CLI::ignore_case));
    cmd_d->add_option("--out", dec.out, "output decomposition file")->required();
    cmd_d->add_option("--tol", dec.tol, "audit tolerance (residual gate is 10*tol*n)");
    cmd_d->add_flag("--allow-large", dec.allow_large, "permit group orders above 20000");

    VerifyOptions ver;
    CLI::App* cmd_v = app.add_subcommand("verify", "re-audit a decomposition against its matrix");
    cmd_v->add_option("--matrix", ver.matrix_path, "matrix file")->required();
    cmd_v->add_option("--decomposition", ver.decomposition_path, "decomposition file")->required();
    cmd_v->add_option("--tol", ver.tol, "audit tolerance (residual gate is 10*tol*n)");

    CountsOptions cnt;
    CLI::App* cmd_c = app.add_subcommand("counts", "print the Birkhoff term count per dimension");
    cmd_c->add_option("--max-n", cnt.max_n, "largest dimension (1..64)")->required();
    cmd_c->add_option("--csv", cnt.csv_path, "also write a CSV file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_g->parsed()) return cmd_gen(gen);
        if (cmd_d->parsed()) return cmd_decompose(dec);
        if (cmd_v->parsed()) return cmd_verify(ver);
        if (cmd_c->parsed()) return cmd_counts(cnt);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
