#include "birkhoff/decomposition.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace birkhoff {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

cplx root_of_unity(long long t, int m) {
    const int r = mod_norm(t, m);
    const double ang = kTwoPi * static_cast<double>(r) / static_cast<double>(m);
    return {std::cos(ang), std::sin(ang)};
}

template <typename T>
T pairwise_sum(const T* xs, size_t count) {
    if (count <= 32) {
        T s{};
        for (size_t i = 0; i < count; ++i) s += xs[i];
        return s;
    }
    const size_t half = count / 2;
    return pairwise_sum(xs, half) + pairwise_sum(xs + half, count - half);
}

// Y = T·diag(0, U)·T†, so that Tr(D⁽¹⁾(σ)·U) = Tr(P_σ·Y) for every σ.
ComplexMatrix conjugated_block(const ComplexMatrix& t, const ComplexMatrix& u) {
    const int n = t.rows();
    ComplexMatrix core(n, n);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) core(i, j) = u(i - 1, j - 1);
    return mat_mul(mat_mul(t, core), mat_adjoint(t));
}

void audit_character(const GroupTable& g, int chi) {
    bool ok = false;
    switch (g.kind) {
        case GroupKind::supercirculant:
            ok = chi == -1 || chi == 0 || chi == g.p - 1;
            break;
        case GroupKind::epicirculant: {
            ok = chi == -1;
            long long pj = 1;
            for (int j = 0; j <= g.w && !ok; ++j) {
                ok = chi == pj - 1;
                pj *= g.p;
            }
            break;
        }
        case GroupKind::symmetric:
            ok = chi >= -1 && chi <= g.n - 1 && chi != g.n - 2;
            break;
    }
    if (!ok) {
        throw std::logic_error("character audit: value " + std::to_string(chi) + " outside the " +
                               to_string(g.kind) + " value set");
    }
}

struct WeightParams {
    double factor; // (n-1)/N, doubled for strategy 2
    bool evens_only;
};

Decomposition irrep_decompose(const XuMatrix& x, const GroupTable& g, const WeightParams& wp, Strategy strat) {
    const int n = x.n();
    if (g.n != n) throw std::invalid_argument("decompose: group degree does not match matrix dimension");
    const ComplexMatrix t = build_T(n);
    const ComplexMatrix u = unitary_from_xu(x);
    const ComplexMatrix y = conjugated_block(t, u);

    Decomposition d;
    d.group = g.kind;
    d.strategy = strat;
    d.t_choice = t_choice_tag(n);
    d.n = n;
    d.p = g.p;
    d.w = g.w;
    d.group_order = g.order();
    d.terms.reserve(g.elems.size());

    for (size_t idx = 0; idx < g.elems.size(); ++idx) {
        const GroupElement& el = g.elems[idx];
        cplx weight{0.0, 0.0};
        if (!wp.evens_only || perm_parity(el.perm) == Parity::even) {
            const Perm& q = g.elems[static_cast<size_t>(g.inverse[idx])].perm;
            cplx tr{0.0, 0.0};
            for (int k = 0; k < n; ++k) tr += y(q[k], k); // Tr(P_{σ⁻¹}·Y) = Tr(D⁽¹⁾(σ⁻¹)·U)
            const int chi = perm_trace(q) - 1;
            audit_character(g, chi);
            weight = wp.factor * (tr - static_cast<double>(chi));
            if (el.perm.is_identity()) weight += 1.0;
        }
        d.terms.push_back(DecompTerm{el, weight});
    }
    return d;
}

} // namespace

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::strategy1: return "strategy1";
        case Strategy::strategy2: return "strategy2";
        case Strategy::structural: return "structural";
    }
    return "?";
}

ComplexMatrix standard_irrep(const Perm& sigma, const ComplexMatrix& t) {
    const int n = sigma.size();
    if (t.rows() != n || t.cols() != n) throw std::invalid_argument("standard_irrep: T dimension mismatch");
    // T†·P_σ·T with the row permutation applied directly: (P_σ·T)_{k,:} = T_{σ(k),:}
    ComplexMatrix core(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            cplx s{0.0, 0.0};
            for (int k = 0; k < n; ++k) s += std::conj(t(k, r)) * t(sigma[k], c);
            core(r, c) = s;
        }
    }
    double border = std::abs(core(0, 0) - cplx{1, 0});
    for (int i = 1; i < n; ++i) border = std::max({border, std::abs(core(0, i)), std::abs(core(i, 0))});
    if (border > 1e-10) {
        throw std::logic_error("standard_irrep: block structure violated (border residual " +
                               std::to_string(border) + ")");
    }
    ComplexMatrix d(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) d(i - 1, j - 1) = core(i, j);
    return d;
}

StandardIrrepTable build_irrep_table(const GroupTable& g, const ComplexMatrix& t) {
    StandardIrrepTable table;
    table.d1.reserve(g.elems.size());
    table.chi1.reserve(g.elems.size());
    for (const GroupElement& el : g.elems) {
        table.d1.push_back(standard_irrep(el.perm, t));
        table.chi1.push_back(perm_trace(el.perm) - 1);
    }
    return table;
}

Strategy2Applicability strategy2_applicable(GroupKind kind, int n, int p, int w) {
    Strategy2Applicability out;
    BigNat order(1);
    switch (kind) {
        case GroupKind::symmetric: {
            for (int k = 2; k <= n; ++k) order.mul(static_cast<uint32_t>(k));
            out.applicable = n > 3;
            out.reason = out.applicable
                             ? "symmetric group on " + std::to_string(n) +
                                   " points has an anti-standard representation (n > 3)"
                             : "symmetric group on " + std::to_string(n) +
                                   " points has no anti-standard representation (requires n > 3)";
            break;
        }
        case GroupKind::supercirculant: {
            order = BigNat(static_cast<uint64_t>(p) * static_cast<uint64_t>(p - 1));
            out.applicable = false;
            out.reason = "supercirculant group mod " + std::to_string(p) +
                         ": odd elements all have zero standard character, so the anti-standard "
                         "representation is equivalent to the standard one";
            break;
        }
        case GroupKind::epicirculant: {
            const long long pw = ipow(p, w);
            order = BigNat(static_cast<uint64_t>(pw));
            long long pi = 1;
            for (int i = 0; i < w; ++i) {
                order.mul(static_cast<uint32_t>(pw - pi));
                pi *= p;
            }
            if (w == 1) {
                out.applicable = false;
                out.reason = "epicirculant group with w=1 coincides with the supercirculant group, "
                             "which has no anti-standard representation";
            } else if (p == 2 && w >= 3) {
                out.applicable = false;
                out.reason = "epicirculant group with p=2, w>=3: every element is an even permutation, "
                             "so no anti-standard representation exists";
            } else {
                out.applicable = true;
                out.reason = "epicirculant group with p=" + std::to_string(p) + ", w=" + std::to_string(w) +
                             " has an odd element with nonzero standard character, giving an "
                             "inequivalent anti-standard representation";
            }
            break;
        }
    }
    const uint64_t needed = 2 + 2ULL * static_cast<uint64_t>(n - 1) * static_cast<uint64_t>(n - 1);
    out.order_condition = !order.fits_u64() || order.as_u64() >= needed;
    return out;
}

Strategy2Applicability strategy2_applicable(const GroupTable& g) {
    return strategy2_applicable(g.kind, g.n, g.p, g.w);
}

Decomposition decompose_strategy1(const XuMatrix& x, const GroupTable& g) {
    const int n = x.n();
    const double factor = n > 1 ? static_cast<double>(n - 1) / static_cast<double>(g.order()) : 0.0;
    return irrep_decompose(x, g, WeightParams{factor, false}, Strategy::strategy1);
}

Decomposition decompose_strategy2(const XuMatrix& x, const GroupTable& g) {
    const Strategy2Applicability gate = strategy2_applicable(g);
    if (!gate.applicable) {
        throw std::domain_error("second strategy not applicable: " + gate.reason);
    }
    const int n = x.n();
    const double factor = 2.0 * static_cast<double>(n - 1) / static_cast<double>(g.order());
    return irrep_decompose(x, g, WeightParams{factor, true}, Strategy::strategy2);
}

Decomposition decompose_structural(const XuMatrix& x) {
    return decompose_structural(x.matrix(), x.report().tol);
}

Decomposition decompose_structural(const ComplexMatrix& x, double line_sum_tol) {
    if (x.rows() != x.cols()) throw std::invalid_argument("decompose_structural: matrix is not square");
    const int n = x.rows();
    const auto pw = prime_power_split(n);
    if (!pw) {
        throw std::domain_error("structural decomposition requires a prime-power dimension, got n = " +
                                std::to_string(n));
    }
    const auto [pv, w] = *pw;
    const Prime p(pv);

    // unit line sums alone force T†XT = diag(1, U); unitarity is not needed here
    double worst = 0;
    for (int i = 0; i < n; ++i) {
        cplx row{0, 0}, col{0, 0};
        for (int j = 0; j < n; ++j) {
            row += x(i, j);
            col += x(j, i);
        }
        worst = std::max({worst, std::abs(row - cplx{1, 0}), std::abs(col - cplx{1, 0})});
    }
    if (worst > line_sum_tol) {
        throw std::domain_error("structural decomposition requires unit line sums (residual " +
                                std::to_string(worst) + ")");
    }
    const ComplexMatrix t = build_T(n);
    const ComplexMatrix core = mat_mul(mat_mul(mat_adjoint(t), x), t);
    ComplexMatrix u(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) u(i - 1, j - 1) = core(i, j);

    std::vector<DitVector> dits(static_cast<size_t>(n));
    for (int z = 0; z < n; ++z) dits[static_cast<size_t>(z)] = to_dits(z, p, w);

    // weights accumulate on distinct (shift value, pitch entries) keys
    std::map<std::pair<int, std::vector<int>>, cplx> acc;
    const GfMatrix id = GfMatrix::identity(p, w);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (int a = 0; a < n; ++a) acc[{a, id.flat()}] += inv_n; // W = Σ_a (1/n)·E_{a,1}

    for (int r = 1; r < n; ++r) {
        for (int s = 1; s < n; ++s) {
            const GfMatrix pitch = pitch_matrix(r, s, p, w);
            const cplx coeff = inv_n * u(r - 1, s - 1);
            const DitVector& sd = dits[static_cast<size_t>(s)];
            for (int a = 0; a < n; ++a) {
                long long f = 0; // ditwise product f(s, a)
                for (int j = 0; j < w; ++j) {
                    f += static_cast<long long>(sd[static_cast<size_t>(j)]) *
                         dits[static_cast<size_t>(a)][static_cast<size_t>(j)];
                }
                acc[{a, pitch.flat()}] += coeff * root_of_unity(-f, pv); // (M_{r,s})_{0,a}
            }
        }
    }

    Decomposition d;
    d.group = w == 1 ? GroupKind::supercirculant : GroupKind::epicirculant;
    d.strategy = Strategy::structural;
    d.t_choice = t_choice_tag(n);
    d.n = n;
    d.p = pv;
    d.w = w;
    long long order = n;
    long long pi = 1;
    for (int i = 0; i < w; ++i) {
        order *= n - pi;
        pi *= pv;
    }
    d.group_order = order;
    d.terms.reserve(acc.size());
    for (const auto& [key, weight] : acc) {
        const auto& [a, xflat] = key;
        if (w == 1) {
            SuperLabel l{a, xflat[0]};
            d.terms.push_back(DecompTerm{GroupElement{super_to_perm(l, p), l}, weight});
        } else {
            GfMatrix pitch(p, w);
            for (int r = 0; r < w; ++r)
                for (int c = 0; c < w; ++c) pitch.set(r, c, xflat[static_cast<size_t>(r * w + c)]);
            EpiLabel l{dits[static_cast<size_t>(a)], std::move(pitch)};
            d.terms.push_back(DecompTerm{GroupElement{epi_to_perm(l), l}, weight});
        }
    }
    return d;
}

ComplexMatrix reconstruct(const Decomposition& d, int n) {
    ComplexMatrix out(n, n);
    for (const DecompTerm& term : d.terms) {
        if (term.element.perm.size() != n) {
            throw std::invalid_argument("reconstruct: term degree does not match dimension");
        }
        for (int k = 0; k < n; ++k) out(k, term.element.perm[k]) += term.weight;
    }
    return out;
}

VerifyReport verify(const Decomposition& d, const ComplexMatrix& x, double tol_sum, double tol_residual) {
    if (x.rows() != d.n || x.cols() != d.n) throw std::invalid_argument("verify: dimension mismatch");
    VerifyReport rep;
    rep.tol_sum = tol_sum;
    rep.tol_residual = tol_residual < 0 ? kDefaultResidualFactor * d.n : tol_residual;
    rep.sum_abs2_asserted = d.strategy != Strategy::structural;

    std::vector<cplx> weights;
    std::vector<double> norms;
    weights.reserve(d.terms.size());
    norms.reserve(d.terms.size());
    for (const DecompTerm& term : d.terms) {
        weights.push_back(term.weight);
        norms.push_back(std::norm(term.weight));
        const double mag = std::abs(term.weight);
        if (mag != 0.0) {
            ++rep.nonzero_count;
            if (mag < kNegligibleWeight) ++rep.negligible_count;
        }
    }
    rep.sum_c = pairwise_sum(weights.data(), weights.size());
    rep.sum_abs2 = pairwise_sum(norms.data(), norms.size());
    rep.sum_c_err = std::abs(rep.sum_c - cplx{1.0, 0.0});
    rep.sum_abs2_err = std::abs(rep.sum_abs2 - 1.0);
    rep.residual = frobenius_dist(reconstruct(d, d.n), x);

    rep.pass = rep.sum_c_err <= tol_sum && rep.residual <= rep.tol_residual &&
               (!rep.sum_abs2_asserted || rep.sum_abs2_err <= tol_sum);
    return rep;
}

TermCount term_count(int n) {
    if (n < 1) throw std::invalid_argument("term_count: n must be >= 1");
    if (n == 1) return TermCount{BigNat(1), GroupKind::symmetric, Strategy::strategy1};
    const auto pw = prime_power_split(n);
    if (pw) {
        const auto [p, w] = *pw;
        BigNat count(static_cast<uint64_t>(n));
        long long pi = 1;
        for (int i = 0; i < w; ++i) {
            count.mul(static_cast<uint32_t>(n - pi));
            pi *= p;
        }
        const GroupKind kind = w == 1 ? GroupKind::supercirculant : GroupKind::epicirculant;
        if (strategy2_applicable(kind, n, p, w).applicable) {
            count.div2();
            return TermCount{std::move(count), kind, Strategy::strategy2};
        }
        return TermCount{std::move(count), kind, Strategy::strategy1};
    }
    // n >= 4, not a prime power: n!/2 = 3·4·...·n
    BigNat count(1);
    for (int k = 3; k <= n; ++k) count.mul(static_cast<uint32_t>(k));
    return TermCount{std::move(count), GroupKind::symmetric, Strategy::strategy2};
}

} // namespace birkhoff
