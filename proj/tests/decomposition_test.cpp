#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "birkhoff/decomposition.hpp"

using namespace birkhoff;

namespace {

XuMatrix haar_xu(int n, uint64_t seed) { return xu_from_unitary(haar_unitary(n - 1, seed), n); }

cplx trace_product(const ComplexMatrix& d, const ComplexMatrix& u) {
    cplx t{0, 0};
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j) t += d(i, j) * u(j, i);
    return t;
}

// Direct weight evaluation through the cached standard-representation table,
// the reference route for the engine's conjugated-trace shortcut.
std::vector<cplx> weights_by_table(const XuMatrix& x, const GroupTable& g, bool doubled_evens) {
    const int n = x.n();
    const ComplexMatrix t = build_T(n);
    const ComplexMatrix u = unitary_from_xu(x);
    const StandardIrrepTable table = build_irrep_table(g, t);
    const double factor = (doubled_evens ? 2.0 : 1.0) * (n - 1) / static_cast<double>(g.order());
    std::vector<cplx> out(g.elems.size());
    for (size_t i = 0; i < g.elems.size(); ++i) {
        if (doubled_evens && perm_parity(g.elems[i].perm) == Parity::odd) {
            out[i] = 0.0;
            continue;
        }
        const int inv = g.inverse[i];
        cplx c = factor * (trace_product(table.d1[static_cast<size_t>(inv)], u) -
                           static_cast<double>(table.chi1[static_cast<size_t>(inv)]));
        if (g.elems[i].perm.is_identity()) c += 1.0;
        out[i] = c;
    }
    return out;
}

} // namespace

TEST_CASE("standard_irrep") {
    SUBCASE("identity maps to the identity block") {
        for (int n : {2, 4, 5}) {
            const ComplexMatrix d = standard_irrep(Perm::identity(n), build_T(n));
            CHECK(frobenius_dist(d, ComplexMatrix::identity(n - 1)) <= 1e-12);
        }
    }
    SUBCASE("the 2-point swap maps to [-1]") {
        const ComplexMatrix d = standard_irrep(Perm({1, 0}), build_T(2));
        CHECK(std::abs(d(0, 0) - cplx{-1, 0}) <= 1e-14);
    }
    SUBCASE("characters: Tr D = Tr P - 1, and the block embeds back") {
        const GroupTable g = symmetric_group(4);
        const ComplexMatrix t = build_T(4);
        const StandardIrrepTable table = build_irrep_table(g, t);
        for (size_t i = 0; i < g.elems.size(); ++i) {
            CHECK(table.chi1[i] == perm_trace(g.elems[i].perm) - 1);
            cplx tr{0, 0};
            for (int k = 0; k < 3; ++k) tr += table.d1[i](k, k);
            CHECK(std::abs(tr - cplx{static_cast<double>(table.chi1[i]), 0}) <= 1e-11);
            // T·diag(1, D)·T† reproduces the permutation matrix
            ComplexMatrix core(4, 4);
            core(0, 0) = 1.0;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) core(r + 1, c + 1) = table.d1[i](r, c);
            const ComplexMatrix back = mat_mul(mat_mul(t, core), mat_adjoint(t));
            CHECK(frobenius_dist(back, perm_to_matrix(g.elems[i].perm)) <= 1e-11);
        }
    }
    SUBCASE("block traces equal Tr(P) - 1 across the full symmetric group on 5 points") {
        const GroupTable g = symmetric_group(5);
        const StandardIrrepTable table = build_irrep_table(g, build_T(5));
        for (size_t i = 0; i < g.elems.size(); ++i) {
            cplx tr{0, 0};
            for (int k = 0; k < 4; ++k) tr += table.d1[i](k, k);
            CHECK(std::abs(tr - cplx{static_cast<double>(perm_trace(g.elems[i].perm) - 1), 0}) <= 1e-11);
        }
    }
    SUBCASE("supercirculant characters stay in the three-value set") {
        const GroupTable g = supercirculant_group(Prime(5));
        const StandardIrrepTable table = build_irrep_table(g, build_T(5));
        for (size_t i = 0; i < g.elems.size(); ++i) {
            CHECK((table.chi1[i] == -1 || table.chi1[i] == 0 || table.chi1[i] == 4));
        }
    }
}

TEST_CASE("strategy 1") {
    SUBCASE("identity input gives the delta weights") {
        const XuMatrix x5 = xu_from_unitary(ComplexMatrix::identity(4), 5);
        for (const GroupTable& g : {supercirculant_group(Prime(5)), symmetric_group(5)}) {
            const Decomposition d = decompose_strategy1(x5, g);
            REQUIRE(d.terms.size() == g.elems.size());
            for (size_t i = 0; i < d.terms.size(); ++i) {
                const cplx expect = d.terms[i].element.perm.is_identity() ? cplx{1, 0} : cplx{0, 0};
                CHECK(std::abs(d.terms[i].weight - expect) <= 1e-12);
            }
        }
    }

    SUBCASE("n = 2 swap lands on the non-identity label") {
        ComplexMatrix swap(2, 2);
        swap(0, 1) = 1.0;
        swap(1, 0) = 1.0;
        const Decomposition d = decompose_strategy1(XuMatrix::validated(swap), supercirculant_group(Prime(2)));
        REQUIRE(d.terms.size() == 2);
        for (const DecompTerm& term : d.terms) {
            const cplx expect = term.element.perm.is_identity() ? cplx{0, 0} : cplx{1, 0};
            CHECK(std::abs(term.weight - expect) <= 1e-12);
        }
    }

    SUBCASE("Haar input at p = 5: twenty terms, all audits pass") {
        const GroupTable g = supercirculant_group(Prime(5));
        for (uint64_t seed : {1ULL, 2ULL, 3ULL}) {
            const XuMatrix x = haar_xu(5, seed);
            const Decomposition d = decompose_strategy1(x, g);
            CHECK(d.terms.size() == 20);
            const VerifyReport rep = verify(d, x.matrix());
            CHECK(rep.sum_c_err <= 1e-9);
            CHECK(rep.sum_abs2_err <= 1e-9);
            CHECK(rep.residual <= 1e-8 * 5);
            CHECK(rep.pass);
        }
    }

    SUBCASE("engine weights equal the direct irrep-table evaluation") {
        struct Config {
            GroupTable g;
            int n;
        };
        const Config configs[] = {{supercirculant_group(Prime(5)), 5},
                                  {supercirculant_group(Prime(7)), 7},
                                  {symmetric_group(4), 4},
                                  {epicirculant_group(Prime(2), 2), 4},
                                  {epicirculant_group(Prime(3), 2), 9}};
        for (const Config& cfg : configs) {
            const XuMatrix x = haar_xu(cfg.n, 5);
            const Decomposition d = decompose_strategy1(x, cfg.g);
            const std::vector<cplx> direct = weights_by_table(x, cfg.g, false);
            for (size_t i = 0; i < direct.size(); ++i) {
                CHECK(std::abs(d.terms[i].weight - direct[i]) <= 1e-11);
            }
        }
    }

    SUBCASE("squared weight norm is 1 independent of the input") {
        for (int p : {3, 5, 7}) {
            const GroupTable g = supercirculant_group(Prime(p));
            for (uint64_t seed = 1; seed <= 20; ++seed) {
                const XuMatrix x = haar_xu(p, seed);
                const VerifyReport rep = verify(decompose_strategy1(x, g), x.matrix());
                CHECK(rep.sum_abs2_err <= 1e-9);
            }
        }
    }

    SUBCASE("larger groups within the default bound") {
        for (int p : {11, 13}) {
            const XuMatrix x = haar_xu(p, 2);
            CHECK(verify(decompose_strategy1(x, supercirculant_group(Prime(p))), x.matrix()).pass);
        }
        const GroupTable s7 = symmetric_group(7); // N = 5040
        const XuMatrix x7 = haar_xu(7, 2);
        CHECK(verify(decompose_strategy1(x7, s7), x7.matrix()).pass);
        CHECK(verify(decompose_strategy2(x7, s7), x7.matrix()).pass);
    }

    CHECK_THROWS_AS(decompose_strategy1(haar_xu(4, 1), symmetric_group(5)), std::invalid_argument);
}

TEST_CASE("strategy 2 applicability") {
    CHECK(!strategy2_applicable(GroupKind::symmetric, 2).applicable);
    CHECK(!strategy2_applicable(GroupKind::symmetric, 3).applicable);
    CHECK(strategy2_applicable(GroupKind::symmetric, 4).applicable);
    CHECK(strategy2_applicable(GroupKind::symmetric, 6).applicable);

    for (int p : {2, 3, 5, 7}) CHECK(!strategy2_applicable(GroupKind::supercirculant, p, p, 1).applicable);

    CHECK(strategy2_applicable(GroupKind::epicirculant, 4, 2, 2).applicable);
    CHECK(strategy2_applicable(GroupKind::epicirculant, 9, 3, 2).applicable);
    CHECK(strategy2_applicable(GroupKind::epicirculant, 27, 3, 3).applicable);
    CHECK(!strategy2_applicable(GroupKind::epicirculant, 8, 2, 3).applicable);
    CHECK(!strategy2_applicable(GroupKind::epicirculant, 16, 2, 4).applicable);
    CHECK(!strategy2_applicable(GroupKind::epicirculant, 5, 5, 1).applicable);

    // order precondition N >= 2 + 2(n-1)²
    CHECK(!strategy2_applicable(GroupKind::symmetric, 2).order_condition);  // 2 < 4
    CHECK(!strategy2_applicable(GroupKind::symmetric, 3).order_condition);  // 6 < 10
    CHECK(strategy2_applicable(GroupKind::symmetric, 4).order_condition);   // 24 >= 20
    CHECK(strategy2_applicable(GroupKind::epicirculant, 4, 2, 2).order_condition);
    CHECK(!strategy2_applicable(GroupKind::supercirculant, 7, 7, 1).order_condition); // 42 < 74

    CHECK_THROWS_AS(decompose_strategy2(haar_xu(3, 1), symmetric_group(3)), std::domain_error);
    CHECK_THROWS_AS(decompose_strategy2(haar_xu(7, 1), supercirculant_group(Prime(7))), std::domain_error);
    CHECK_THROWS_AS(decompose_strategy2(haar_xu(8, 1), epicirculant_group(Prime(2), 3)), std::domain_error);
}

TEST_CASE("strategy 2") {
    SUBCASE("identity input gives the delta weights") {
        const XuMatrix x4 = xu_from_unitary(ComplexMatrix::identity(3), 4);
        const Decomposition d = decompose_strategy2(x4, symmetric_group(4));
        for (const DecompTerm& term : d.terms) {
            const cplx expect = term.element.perm.is_identity() ? cplx{1, 0} : cplx{0, 0};
            CHECK(std::abs(term.weight - expect) <= 1e-12);
        }
    }

    SUBCASE("odd permutations carry exact zeros; nonzero counts match the halved order") {
        struct Config {
            GroupTable g;
            int n;
            long long nonzero;
        };
        const Config configs[] = {{epicirculant_group(Prime(2), 2), 4, 12},
                                  {epicirculant_group(Prime(3), 2), 9, 216},
                                  {symmetric_group(6), 6, 360}};
        for (const Config& cfg : configs) {
            const XuMatrix x = haar_xu(cfg.n, 3);
            const Decomposition d = decompose_strategy2(x, cfg.g);
            long long nonzero = 0;
            for (size_t i = 0; i < d.terms.size(); ++i) {
                if (perm_parity(cfg.g.elems[i].perm) == Parity::odd) {
                    CHECK(d.terms[i].weight == cplx{0, 0}); // exact zero by construction
                } else {
                    CHECK(d.terms[i].weight != cplx{0, 0});
                }
                if (d.terms[i].weight != cplx{0, 0}) ++nonzero;
            }
            CHECK(nonzero == cfg.nonzero);
            const VerifyReport rep = verify(d, x.matrix());
            CHECK(rep.nonzero_count == cfg.nonzero);
            CHECK(rep.pass);
        }
    }

    SUBCASE("engine weights equal the direct irrep-table evaluation") {
        const GroupTable g = epicirculant_group(Prime(2), 2);
        const XuMatrix x = haar_xu(4, 9);
        const Decomposition d = decompose_strategy2(x, g);
        const std::vector<cplx> direct = weights_by_table(x, g, true);
        for (size_t i = 0; i < direct.size(); ++i) {
            CHECK(std::abs(d.terms[i].weight - direct[i]) <= 1e-11);
        }
    }
}

TEST_CASE("structural decomposition") {
    SUBCASE("unit-pitch labels with weight 1/n rebuild the van der Waerden matrix") {
        const Prime three(3);
        Decomposition w_only;
        w_only.group = GroupKind::epicirculant;
        w_only.strategy = Strategy::structural;
        w_only.n = 9;
        w_only.p = 3;
        w_only.w = 2;
        const GfMatrix id = GfMatrix::identity(three, 2);
        for (int a = 0; a < 9; ++a) {
            EpiLabel l{to_dits(a, three, 2), id};
            w_only.terms.push_back(DecompTerm{GroupElement{epi_to_perm(l), l}, cplx{1.0 / 9.0, 0}});
        }
        CHECK(frobenius_dist(reconstruct(w_only, 9), van_der_waerden(9)) <= 1e-14);
    }

    SUBCASE("diagonal U collapses every pitch to 1") {
        ComplexMatrix u(2, 2);
        u(0, 0) = cplx{0.6, 0.8};
        u(1, 1) = cplx{-0.28, 0.96};
        const XuMatrix x = xu_from_unitary(u, 3);
        const Decomposition d = decompose_structural(x);
        CHECK(d.terms.size() <= 7); // 1 + 2·3 label bound
        long long substantial = 0; // everything off the circulant labels is round-trip noise
        for (const DecompTerm& term : d.terms) {
            if (std::abs(term.weight) > 1e-12) {
                ++substantial;
                CHECK(std::get<SuperLabel>(term.element.label).x == 1);
            }
        }
        CHECK(substantial == 3);
        const VerifyReport rep = verify(d, x.matrix());
        CHECK(rep.sum_c_err <= 1e-9);
        CHECK(rep.residual <= 1e-8 * 3);
    }

    SUBCASE("Haar inputs: sum rule and reconstruction, squared norm unconstrained") {
        for (int n : {3, 4, 5, 7, 8, 9}) {
            const XuMatrix x = haar_xu(n, 1);
            const Decomposition d = decompose_structural(x);
            const VerifyReport rep = verify(d, x.matrix());
            CHECK(rep.sum_c_err <= 1e-9);
            CHECK(rep.residual <= 1e-8 * n);
            CHECK(!rep.sum_abs2_asserted);
            CHECK(rep.pass);
            CHECK(d.strategy == Strategy::structural);
            if (prime_power_split(n)->second == 1) {
                CHECK(d.group == GroupKind::supercirculant);
                CHECK(std::holds_alternative<SuperLabel>(d.terms[0].element.label));
            } else {
                CHECK(d.group == GroupKind::epicirculant);
                CHECK(std::holds_alternative<EpiLabel>(d.terms[0].element.label));
            }
        }
    }

    SUBCASE("for unitary inputs the squared norm happens to be 1 as well") {
        // each pitch class sums orthogonal characters over distinct s, so
        // Σ|c|² = (1 + ‖U‖²_F)/n, and unitary U has ‖U‖²_F = n-1
        for (int n : {3, 5, 9}) {
            const XuMatrix x = haar_xu(n, 4);
            CHECK(verify(decompose_structural(x), x.matrix()).sum_abs2_err <= 1e-9);
        }
    }

    SUBCASE("recorded case where the squared norm is far from 1") {
        // the van der Waerden matrix has unit line sums but a zero core block:
        // Σc = 1 while Σ|c|² = 1/n
        const ComplexMatrix w3 = van_der_waerden(3);
        const Decomposition d = decompose_structural(w3, 1e-9);
        const VerifyReport rep = verify(d, w3);
        CHECK(rep.sum_c_err <= 1e-12);
        CHECK(rep.residual <= 1e-12);
        CHECK(std::abs(rep.sum_abs2 - 1.0 / 3.0) <= 1e-12);
        CHECK(rep.sum_abs2_err > 0.01); // only the sum rule holds without unitarity
        for (const DecompTerm& term : d.terms) {
            if (std::abs(term.weight) > 1e-12) {
                CHECK(std::get<SuperLabel>(term.element.label).x == 1);
                CHECK(std::abs(term.weight - cplx{1.0 / 3.0, 0}) <= 1e-12);
            }
        }
    }

    SUBCASE("line-sum validation on the relaxed entry point") {
        ComplexMatrix bad(2, 2);
        bad(0, 0) = 1.0;
        bad(1, 1) = -1.0;
        CHECK_THROWS_AS(decompose_structural(bad, 1e-9), std::domain_error);
    }

    SUBCASE("agrees with the strategy-1 reconstruction of the same matrix") {
        for (int n : {5, 9}) {
            const XuMatrix x = haar_xu(n, 8);
            const GroupTable g = n == 5 ? supercirculant_group(Prime(5)) : epicirculant_group(Prime(3), 2);
            const ComplexMatrix a = reconstruct(decompose_structural(x), n);
            const ComplexMatrix b = reconstruct(decompose_strategy1(x, g), n);
            CHECK(frobenius_dist(a, b) <= 2e-8 * n);
        }
    }

    CHECK_THROWS_AS(decompose_structural(haar_xu(6, 1)), std::domain_error);
    CHECK_THROWS_AS(decompose_structural(haar_xu(12, 1)), std::domain_error);
}

TEST_CASE("verify") {
    Decomposition single;
    single.group = GroupKind::symmetric;
    single.strategy = Strategy::strategy1;
    single.n = 3;
    single.group_order = 6;
    single.terms.push_back(DecompTerm{GroupElement{Perm::identity(3), std::monostate{}}, cplx{1, 0}});
    const VerifyReport ok = verify(single, ComplexMatrix::identity(3));
    CHECK(ok.sum_c_err == 0.0);
    CHECK(ok.sum_abs2_err == 0.0);
    CHECK(ok.residual == 0.0);
    CHECK(ok.nonzero_count == 1);
    CHECK(ok.pass);

    single.terms[0].weight = cplx{1.0 + 1e-3, 0};
    const VerifyReport bad = verify(single, ComplexMatrix::identity(3));
    CHECK(!bad.pass);
    CHECK(bad.sum_c_err > 1e-4);

    CHECK_THROWS_AS(verify(single, ComplexMatrix::identity(4)), std::invalid_argument);
}

TEST_CASE("term_count") {
    const uint64_t table2[17] = {1,   2,   6,         12,  20,          360,          42, 1344, 216,
                                 1814400, 110, 239500800, 156, 43589145600, 653837184000, 322560, 272};
    for (int n = 1; n <= 17; ++n) {
        CHECK(term_count(n).count == table2[n - 1]);
    }

    CHECK(term_count(6).group == GroupKind::symmetric);
    CHECK(term_count(6).strategy == Strategy::strategy2);
    CHECK(term_count(8).group == GroupKind::epicirculant);
    CHECK(term_count(8).strategy == Strategy::strategy1);
    CHECK(term_count(10).group == GroupKind::symmetric);
    CHECK(term_count(10).strategy == Strategy::strategy2);
    CHECK(term_count(4).group == GroupKind::epicirculant);
    CHECK(term_count(4).strategy == Strategy::strategy2);
    CHECK(term_count(5).group == GroupKind::supercirculant);
    CHECK(term_count(5).strategy == Strategy::strategy1);
    CHECK(term_count(1).count == 1);

    // supercirculant counts undercut both p² and p!/2
    for (int p : {5, 7, 11, 13}) {
        const uint64_t c = term_count(p).count.as_u64();
        CHECK(c == static_cast<uint64_t>(p) * (p - 1));
        CHECK(c < static_cast<uint64_t>(p) * p);
    }

    // past the 64-bit range
    CHECK(term_count(21).count.str() == "25545471085854720000");
    CHECK(!term_count(21).count.fits_u64());
    CHECK(term_count(25).count == 6000);       // GA(2,5)/2
    CHECK(term_count(27).count == 151632);     // GA(3,3)/2
    CHECK(term_count(32).count == 319979520);  // GA(5,2), not halved
    CHECK(term_count(49).count == 49392);      // GA(2,7)/2
    CHECK(term_count(64).count.str() == "1290157424640"); // GA(6,2)
    CHECK(term_count(60).count.str() ==
          "4160493556370695072138170591611682190377086303180622976224638848204800000000000000");

    CHECK_THROWS_AS(term_count(0), std::invalid_argument);
}
