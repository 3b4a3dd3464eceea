#include "birkhoff/gfmatrix.hpp"

#include <stdexcept>
#include <string>

namespace birkhoff {

namespace {

void require_same_shape(const GfMatrix& a, const GfMatrix& b) {
    if (a.p() != b.p() || a.dim() != b.dim()) {
        throw std::invalid_argument("GfMatrix: modulus or dimension mismatch");
    }
}

// Row-reduces a copy of `a` (optionally augmented with column b), returning rank
// and the running determinant of the square part.
struct Elimination {
    int rank = 0;
    int det = 1; // of the w×w part; 0 once a pivot is missing
};

Elimination eliminate(std::vector<int>& m, int rows, int cols, int p, int pivot_cols) {
    Elimination out;
    int row = 0;
    for (int col = 0; col < pivot_cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r) {
            if (m[static_cast<size_t>(r * cols + col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            if (col < rows) out.det = 0;
            continue;
        }
        if (pivot != row) {
            for (int c = 0; c < cols; ++c) {
                std::swap(m[static_cast<size_t>(pivot * cols + c)], m[static_cast<size_t>(row * cols + c)]);
            }
            out.det = mod_norm(-out.det, p);
        }
        const int pv = m[static_cast<size_t>(row * cols + col)];
        out.det = mod_norm(static_cast<long long>(out.det) * pv, p);
        const int inv = mod_inverse(pv, Prime(p));
        for (int c = col; c < cols; ++c) {
            m[static_cast<size_t>(row * cols + c)] =
                mod_norm(static_cast<long long>(m[static_cast<size_t>(row * cols + c)]) * inv, p);
        }
        for (int r = 0; r < rows; ++r) {
            if (r == row) continue;
            const int f = m[static_cast<size_t>(r * cols + col)];
            if (f == 0) continue;
            for (int c = col; c < cols; ++c) {
                const long long v = m[static_cast<size_t>(r * cols + c)] -
                                    static_cast<long long>(f) * m[static_cast<size_t>(row * cols + c)];
                m[static_cast<size_t>(r * cols + c)] = mod_norm(v, p);
            }
        }
        ++row;
    }
    out.rank = row;
    return out;
}

} // namespace

GfMatrix::GfMatrix(const Prime& p, int w) : p_(p.value()), w_(w), e_(static_cast<size_t>(w) * w, 0) {
    if (w < 1) throw std::invalid_argument("GfMatrix: dimension must be >= 1");
}

GfMatrix GfMatrix::identity(const Prime& p, int w) {
    GfMatrix m(p, w);
    for (int i = 0; i < w; ++i) m.set(i, i, 1);
    return m;
}

void GfMatrix::set(int r, int c, int v) {
    e_[static_cast<size_t>(r * w_ + c)] = mod_norm(v, p_);
}

GfMatrix gf_add(const GfMatrix& a, const GfMatrix& b) {
    require_same_shape(a, b);
    GfMatrix out(Prime(a.p()), a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out.set(r, c, a(r, c) + b(r, c));
    return out;
}

GfMatrix gf_sub(const GfMatrix& a, const GfMatrix& b) {
    require_same_shape(a, b);
    GfMatrix out(Prime(a.p()), a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out.set(r, c, a(r, c) - b(r, c));
    return out;
}

GfMatrix gf_mul(const GfMatrix& a, const GfMatrix& b) {
    require_same_shape(a, b);
    const int w = a.dim();
    GfMatrix out(Prime(a.p()), w);
    for (int r = 0; r < w; ++r) {
        for (int c = 0; c < w; ++c) {
            long long s = 0;
            for (int k = 0; k < w; ++k) s += static_cast<long long>(a(r, k)) * b(k, c);
            out.set(r, c, mod_norm(s, a.p()));
        }
    }
    return out;
}

GfMatrix gf_transpose(const GfMatrix& a) {
    GfMatrix out(Prime(a.p()), a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) out.set(c, r, a(r, c));
    return out;
}

DitVector gf_matvec(const GfMatrix& a, const DitVector& v) {
    if (static_cast<int>(v.size()) != a.dim()) {
        throw std::invalid_argument("gf_matvec: vector length does not match matrix dimension");
    }
    DitVector out(v.size());
    for (int r = 0; r < a.dim(); ++r) {
        long long s = 0;
        for (int c = 0; c < a.dim(); ++c) s += static_cast<long long>(a(r, c)) * v[static_cast<size_t>(c)];
        out[static_cast<size_t>(r)] = mod_norm(s, a.p());
    }
    return out;
}

int gf_det(const GfMatrix& a) {
    std::vector<int> m = a.flat();
    return eliminate(m, a.dim(), a.dim(), a.p(), a.dim()).det;
}

int gf_rank(const GfMatrix& a) {
    std::vector<int> m = a.flat();
    return eliminate(m, a.dim(), a.dim(), a.p(), a.dim()).rank;
}

GfMatrix gf_invert(const GfMatrix& a) {
    const int w = a.dim();
    const int p = a.p();
    // augmented [a | I]
    std::vector<int> m(static_cast<size_t>(w) * 2 * w, 0);
    for (int r = 0; r < w; ++r) {
        for (int c = 0; c < w; ++c) m[static_cast<size_t>(r * 2 * w + c)] = a(r, c);
        m[static_cast<size_t>(r * 2 * w + w + r)] = 1;
    }
    const Elimination e = eliminate(m, w, 2 * w, p, w);
    if (e.rank < w) {
        throw std::domain_error("gf_invert: singular matrix over F_" + std::to_string(p));
    }
    GfMatrix out(Prime(p), w);
    for (int r = 0; r < w; ++r)
        for (int c = 0; c < w; ++c) out.set(r, c, m[static_cast<size_t>(r * 2 * w + w + c)]);
    return out;
}

bool gf_solvable(const GfMatrix& a, const DitVector& b) {
    if (static_cast<int>(b.size()) != a.dim()) {
        throw std::invalid_argument("gf_solvable: vector length does not match matrix dimension");
    }
    const int w = a.dim();
    std::vector<int> m(static_cast<size_t>(w) * (w + 1), 0);
    for (int r = 0; r < w; ++r) {
        for (int c = 0; c < w; ++c) m[static_cast<size_t>(r * (w + 1) + c)] = a(r, c);
        m[static_cast<size_t>(r * (w + 1) + w)] = b[static_cast<size_t>(r)];
    }
    std::vector<int> plain = a.flat();
    const int rank_a = eliminate(plain, w, w, a.p(), w).rank;
    const int rank_aug = eliminate(m, w, w + 1, a.p(), w + 1).rank;
    return rank_a == rank_aug;
}

std::vector<GfMatrix> enumerate_gl(int w, const Prime& p) {
    const int m = p.value();
    const long long cells = static_cast<long long>(w) * w;
    long long candidates = 1;
    for (long long i = 0; i < cells; ++i) {
        candidates *= m;
        if (candidates > 10'000'000LL) {
            throw std::length_error("enumerate_gl: p^(w*w) exceeds the enumeration guard");
        }
    }
    std::vector<GfMatrix> out;
    std::vector<int> digits(static_cast<size_t>(cells), 0);
    for (long long k = 0; k < candidates; ++k) {
        GfMatrix cand(p, w);
        for (int r = 0; r < w; ++r)
            for (int c = 0; c < w; ++c) cand.set(r, c, digits[static_cast<size_t>(r * w + c)]);
        if (gf_det(cand) != 0) out.push_back(cand);
        // increment the flattened entries as a base-p counter, last cell fastest,
        // which makes the output ascend lexicographically
        for (long long i = cells - 1; i >= 0; --i) {
            if (++digits[static_cast<size_t>(i)] < m) break;
            digits[static_cast<size_t>(i)] = 0;
        }
    }
    return out;
}

GfMatrix pitch_matrix(long long r, long long s, const Prime& p, int w) {
    const long long n = ipow(p.value(), w);
    if (r < 1 || r >= n || s < 1 || s >= n) {
        throw std::domain_error("pitch_matrix: r and s must lie in {1..p^w-1}");
    }
    const DitVector rd = to_dits(r, p, w);
    const DitVector sd = to_dits(s, p, w);
    auto lsnz = [](const DitVector& d) {
        int i = 0;
        while (d[static_cast<size_t>(i)] == 0) ++i;
        return i;
    };
    const int alpha = lsnz(rd);
    const int beta = lsnz(sd);
    const int s_beta_inv = mod_inverse(sd[static_cast<size_t>(beta)], p);

    GfMatrix x(p, w);
    if (alpha != beta) {
        // unit diagonal off {alpha, beta}; x_{alpha,alpha}=0, x_{alpha,beta}=1;
        // row beta carries the solved entries
        for (int v = 0; v < w; ++v) {
            if (v != alpha && v != beta) x.set(v, v, 1);
        }
        x.set(alpha, beta, 1);
        for (int v = 0; v < w; ++v) {
            long long rhs;
            if (v == alpha) {
                rhs = rd[static_cast<size_t>(alpha)];
            } else if (v == beta) {
                rhs = rd[static_cast<size_t>(beta)] - sd[static_cast<size_t>(alpha)];
            } else {
                rhs = rd[static_cast<size_t>(v)] - sd[static_cast<size_t>(v)];
            }
            x.set(beta, v, mod_norm(rhs * s_beta_inv, p.value()));
        }
    } else {
        // degenerate case: r and s share their least-significant nonzero dit position.
        // Unit diagonal off beta, x_{beta,beta} = r_beta·s_beta⁻¹ (nonzero since r_beta ≠ 0),
        // remaining row-beta entries solve the column equations.
        for (int v = 0; v < w; ++v) {
            if (v != beta) x.set(v, v, 1);
        }
        x.set(beta, beta, mod_norm(static_cast<long long>(rd[static_cast<size_t>(beta)]) * s_beta_inv, p.value()));
        for (int v = 0; v < w; ++v) {
            if (v == beta) continue;
            const long long rhs = rd[static_cast<size_t>(v)] - sd[static_cast<size_t>(v)];
            x.set(beta, v, mod_norm(rhs * s_beta_inv, p.value()));
        }
    }
    return x;
}

} // namespace birkhoff
