#include "birkhoff/commands.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "birkhoff/io.hpp"

namespace birkhoff {

namespace {

constexpr long long kLargeRunThreshold = 20'000;

GroupKind resolve_group(GroupSelect sel, int n) {
    const auto pw = prime_power_split(n);
    switch (sel) {
        case GroupSelect::automatic:
            if (n == 1 || !pw) return GroupKind::symmetric;
            return pw->second == 1 ? GroupKind::supercirculant : GroupKind::epicirculant;
        case GroupSelect::symmetric:
            return GroupKind::symmetric;
        case GroupSelect::supercirculant:
            if (!pw || pw->second != 1) {
                throw std::domain_error("supercirculant group requires a prime dimension, got n = " +
                                        std::to_string(n));
            }
            return GroupKind::supercirculant;
        case GroupSelect::epicirculant:
            if (!pw) {
                throw std::domain_error("epicirculant group requires a prime-power dimension, got n = " +
                                        std::to_string(n));
            }
            return GroupKind::epicirculant;
    }
    throw std::logic_error("resolve_group: bad selector");
}

long long expected_order(GroupKind kind, int n) {
    const auto pw = prime_power_split(n);
    switch (kind) {
        case GroupKind::symmetric: {
            long long f = 1;
            for (int k = 2; k <= n; ++k) {
                f *= k;
                if (f > kGroupOrderGuard) return f;
            }
            return f;
        }
        case GroupKind::supercirculant:
            return static_cast<long long>(n) * (n - 1);
        case GroupKind::epicirculant: {
            const auto [p, w] = *pw;
            long long order = n;
            long long pi = 1;
            for (int i = 0; i < w; ++i) {
                order *= n - pi;
                pi *= p;
                if (order > kGroupOrderGuard) return order;
            }
            return order;
        }
    }
    throw std::logic_error("expected_order: bad kind");
}

GroupTable enumerate(GroupKind kind, int n) {
    switch (kind) {
        case GroupKind::symmetric:
            return symmetric_group(n);
        case GroupKind::supercirculant:
            return supercirculant_group(Prime(n));
        case GroupKind::epicirculant: {
            const auto pw = prime_power_split(n);
            return epicirculant_group(Prime(pw->first), pw->second);
        }
    }
    throw std::logic_error("enumerate: bad kind");
}

void print_report(const VerifyReport& rep) {
    std::printf("|sum(c) - 1|:     %.17g  (tol %.17g)\n", rep.sum_c_err, rep.tol_sum);
    if (rep.sum_abs2_asserted) {
        std::printf("|sum|c|^2 - 1|:   %.17g  (tol %.17g)\n", rep.sum_abs2_err, rep.tol_sum);
    } else {
        std::printf("sum|c|^2:         %.17g  (not asserted for structural decompositions)\n", rep.sum_abs2);
    }
    std::printf("residual:         %.17g  (tol %.17g)\n", rep.residual, rep.tol_residual);
    std::printf("nonzero weights:  %lld\n", rep.nonzero_count);
    std::printf("negligible (<%g): %lld\n", kNegligibleWeight, rep.negligible_count);
    std::printf("verdict:          %s\n", rep.pass ? "PASS" : "FAIL");
}

} // namespace

int cmd_gen(const GenOptions& opt) {
    if (opt.n < 1) throw std::invalid_argument("gen: n must be >= 1");
    ComplexMatrix x(1, 1);
    if (opt.n == 1) {
        x(0, 0) = 1.0;
    } else {
        x = xu_from_unitary(haar_unitary(opt.n - 1, opt.seed), opt.n).matrix();
    }
    MatrixMetadata meta;
    meta.seed = opt.seed;
    meta.generator = "haar_xu";
    save_matrix(opt.out, x, meta);
    std::printf("wrote %dx%d matrix to %s (seed %" PRIu64 ")\n", opt.n, opt.n, opt.out.c_str(), opt.seed);
    return 0;
}

int cmd_decompose(const DecomposeOptions& opt) {
    const ComplexMatrix m = load_matrix(opt.in);
    const XuMatrix x = XuMatrix::validated(m, opt.tol); // throws naming the failed check
    const int n = x.n();

    Decomposition d;
    if (opt.strategy == StrategySelect::structural) {
        if (opt.group == GroupSelect::symmetric) {
            throw std::domain_error("structural decomposition produces supercirculant/epicirculant labels; "
                                    "it cannot target the symmetric group");
        }
        if (opt.group != GroupSelect::automatic) {
            resolve_group(opt.group, n); // reject e.g. a supercirculant request on a prime power
        }
        d = decompose_structural(x);
    } else {
        const GroupKind kind = resolve_group(opt.group, n);
        const long long expected = expected_order(kind, n);
        if (expected > kLargeRunThreshold && !opt.allow_large) {
            throw std::length_error("group order " + std::to_string(expected) + " exceeds " +
                                    std::to_string(kLargeRunThreshold) + "; pass --allow-large to proceed");
        }
        const GroupTable g = enumerate(kind, n);
        switch (opt.strategy) {
            case StrategySelect::one:
                d = decompose_strategy1(x, g);
                break;
            case StrategySelect::two:
                d = decompose_strategy2(x, g); // throws with the applicability reason
                break;
            case StrategySelect::automatic:
                d = strategy2_applicable(g).applicable ? decompose_strategy2(x, g) : decompose_strategy1(x, g);
                break;
            case StrategySelect::structural:
                break; // handled above
        }
    }

    const VerifyReport rep = verify(d, x.matrix(), opt.tol, 10.0 * opt.tol * n);
    save_decomposition(opt.out, d, rep);
    std::printf("n:                %d\n", n);
    std::printf("group:            %s (order %lld)\n", to_string(d.group).c_str(), d.group_order);
    std::printf("strategy:         %s\n", to_string(d.strategy).c_str());
    print_report(rep);
    std::printf("wrote %zu terms to %s\n", d.terms.size(), opt.out.c_str());
    return rep.pass ? 0 : 1;
}

int cmd_verify(const VerifyOptions& opt) {
    const ComplexMatrix x = load_matrix(opt.matrix_path);
    const Decomposition d = load_decomposition(opt.decomposition_path);
    if (x.rows() != d.n) {
        throw std::invalid_argument("verify: matrix is " + std::to_string(x.rows()) + "x" +
                                    std::to_string(x.cols()) + " but decomposition has n = " + std::to_string(d.n));
    }
    const VerifyReport rep = verify(d, x, opt.tol, 10.0 * opt.tol * d.n);
    std::printf("n:                %d\n", d.n);
    std::printf("group:            %s (order %lld)\n", to_string(d.group).c_str(), d.group_order);
    std::printf("strategy:         %s\n", to_string(d.strategy).c_str());
    print_report(rep);
    return rep.pass ? 0 : 1;
}

int cmd_counts(const CountsOptions& opt) {
    if (opt.max_n < 1 || opt.max_n > 64) {
        throw std::invalid_argument("counts: max-n must lie in {1..64}");
    }
    std::ofstream csv;
    if (!opt.csv_path.empty()) {
        csv.open(opt.csv_path);
        if (!csv) throw std::runtime_error("cannot open " + opt.csv_path + " for writing");
        csv << "n,terms,group,strategy\n";
    }
    std::printf("%4s  %-24s %-15s %s\n", "n", "terms", "group", "strategy");
    for (int n = 1; n <= opt.max_n; ++n) {
        const TermCount tc = term_count(n);
        std::printf("%4d  %-24s %-15s %s\n", n, tc.count.str().c_str(), to_string(tc.group).c_str(),
                    to_string(tc.strategy).c_str());
        if (csv.is_open()) {
            csv << n << "," << tc.count.str() << "," << to_string(tc.group) << "," << to_string(tc.strategy)
                << "\n";
        }
    }
    if (csv.is_open() && !csv) throw std::runtime_error("write failed: " + opt.csv_path);
    return 0;
}

} // namespace birkhoff
