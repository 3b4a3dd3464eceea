#include "birkhoff/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace birkhoff {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<size_t>(v)]) {
            throw std::invalid_argument("Perm: images are not a bijection on {0..n-1}");
        }
        seen[static_cast<size_t>(v)] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> im(static_cast<size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    return Perm(std::move(im));
}

bool Perm::is_identity() const {
    for (int k = 0; k < size(); ++k) {
        if (images_[static_cast<size_t>(k)] != k) return false;
    }
    return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("perm_compose: size mismatch");
    // (M_a·M_b)_{k,l} = δ_{l, b[a[k]]}
    std::vector<int> im(static_cast<size_t>(a.size()));
    for (int k = 0; k < a.size(); ++k) im[static_cast<size_t>(k)] = b[a[k]];
    return Perm(std::move(im));
}

Perm perm_inverse(const Perm& a) {
    std::vector<int> im(static_cast<size_t>(a.size()));
    for (int k = 0; k < a.size(); ++k) im[static_cast<size_t>(a[k])] = k;
    return Perm(std::move(im));
}

int perm_trace(const Perm& a) {
    int t = 0;
    for (int k = 0; k < a.size(); ++k) {
        if (a[k] == k) ++t;
    }
    return t;
}

Parity perm_parity(const Perm& a) {
    std::vector<bool> visited(static_cast<size_t>(a.size()), false);
    int transpositions = 0;
    for (int k = 0; k < a.size(); ++k) {
        if (visited[static_cast<size_t>(k)]) continue;
        int len = 0;
        int j = k;
        while (!visited[static_cast<size_t>(j)]) {
            visited[static_cast<size_t>(j)] = true;
            j = a[j];
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

Perm super_to_perm(const SuperLabel& l, const Prime& p) {
    const int m = p.value();
    if (mod_norm(l.x, m) == 0) throw std::domain_error("super_to_perm: pitch 0 is not a permutation");
    std::vector<int> im(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        im[static_cast<size_t>(k)] = mod_norm(l.a + static_cast<long long>(k) * l.x, m);
    }
    return Perm(std::move(im));
}

SuperLabel super_compose(const SuperLabel& l1, const SuperLabel& l2, const Prime& p) {
    const int m = p.value();
    if (mod_norm(l1.x, m) == 0 || mod_norm(l2.x, m) == 0) {
        throw std::domain_error("super_compose: pitch 0");
    }
    // S_{a,x}·S_{b,y} = S_{b+ay, xy}
    return SuperLabel{mod_norm(l2.a + static_cast<long long>(l1.a) * l2.x, m),
                      mod_norm(static_cast<long long>(l1.x) * l2.x, m)};
}

SuperLabel super_inverse(const SuperLabel& l, const Prime& p) {
    const int m = p.value();
    const int xinv = mod_inverse(l.x, p);
    // (S_{a,x})⁻¹ = S_{-a·x⁻¹, x⁻¹}
    return SuperLabel{mod_norm(-static_cast<long long>(l.a) * xinv, m), xinv};
}

Perm epi_to_perm(const EpiLabel& l) {
    const Prime p(l.x.p());
    const int w = l.x.dim();
    if (static_cast<int>(l.a.size()) != w) {
        throw std::invalid_argument("epi_to_perm: shift vector length does not match pitch dimension");
    }
    if (gf_det(l.x) == 0) throw std::domain_error("epi_to_perm: singular pitch matrix");
    const long long n = ipow(p.value(), w);
    std::vector<int> im(static_cast<size_t>(n));
    for (long long k = 0; k < n; ++k) {
        DitVector kd = to_dits(k, p, w);
        DitVector xd = gf_matvec(l.x, kd);
        for (int j = 0; j < w; ++j) {
            xd[static_cast<size_t>(j)] = mod_norm(xd[static_cast<size_t>(j)] + l.a[static_cast<size_t>(j)], p.value());
        }
        im[static_cast<size_t>(k)] = static_cast<int>(from_dits(xd, p));
    }
    return Perm(std::move(im));
}

EpiLabel epi_compose(const EpiLabel& l1, const EpiLabel& l2) {
    if (l1.x.p() != l2.x.p() || l1.x.dim() != l2.x.dim()) {
        throw std::invalid_argument("epi_compose: modulus or dimension mismatch");
    }
    // E_{a,x}·E_{b,y} = E_{b+y·a, y·x}
    const Prime p(l1.x.p());
    DitVector ya = gf_matvec(l2.x, l1.a);
    DitVector shift(ya.size());
    for (size_t j = 0; j < ya.size(); ++j) shift[j] = mod_norm(ya[j] + l2.a[j], p.value());
    return EpiLabel{std::move(shift), gf_mul(l2.x, l1.x)};
}

EpiLabel epi_inverse(const EpiLabel& l) {
    const Prime p(l.x.p());
    // (E_{a,x})⁻¹ = E_{-x⁻¹·a, x⁻¹}
    GfMatrix xinv = gf_invert(l.x);
    DitVector xa = gf_matvec(xinv, l.a);
    DitVector shift(xa.size());
    for (size_t j = 0; j < xa.size(); ++j) shift[j] = mod_norm(-xa[j], p.value());
    return EpiLabel{std::move(shift), std::move(xinv)};
}

std::string to_string(GroupKind k) {
    switch (k) {
        case GroupKind::symmetric: return "symmetric";
        case GroupKind::supercirculant: return "supercirculant";
        case GroupKind::epicirculant: return "epicirculant";
    }
    return "?";
}

namespace {

struct ImagesHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = v.size();
        for (int x : v) h = h * 1000003u + static_cast<size_t>(x) + 0x9e3779b9u;
        return h;
    }
};

void fill_inverses(GroupTable& g) {
    std::unordered_map<std::vector<int>, int, ImagesHash> index;
    index.reserve(g.elems.size() * 2);
    for (size_t i = 0; i < g.elems.size(); ++i) index.emplace(g.elems[i].perm.images(), static_cast<int>(i));
    g.inverse.resize(g.elems.size());
    for (size_t i = 0; i < g.elems.size(); ++i) {
        const auto it = index.find(perm_inverse(g.elems[i].perm).images());
        if (it == index.end()) throw std::logic_error("group table is not closed under inversion");
        g.inverse[i] = it->second;
    }
}

void check_order_guard(long long order) {
    if (order > kGroupOrderGuard) {
        throw std::length_error("group order " + std::to_string(order) + " exceeds the enumeration guard of " +
                                std::to_string(kGroupOrderGuard));
    }
}

} // namespace

GroupTable symmetric_group(int n) {
    if (n < 1) throw std::invalid_argument("symmetric_group: n must be >= 1");
    long long order = 1;
    for (int k = 2; k <= n; ++k) {
        order *= k;
        check_order_guard(order);
    }
    GroupTable g;
    g.kind = GroupKind::symmetric;
    g.n = n;
    g.elems.reserve(static_cast<size_t>(order));
    std::vector<int> im(static_cast<size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    do {
        g.elems.push_back(GroupElement{Perm(im), std::monostate{}});
    } while (std::next_permutation(im.begin(), im.end()));
    fill_inverses(g);
    return g;
}

GroupTable supercirculant_group(const Prime& p) {
    const int m = p.value();
    GroupTable g;
    g.kind = GroupKind::supercirculant;
    g.n = m;
    g.p = m;
    g.w = 1;
    g.elems.reserve(static_cast<size_t>(m) * (m - 1));
    for (int a = 0; a < m; ++a) {
        for (int x = 1; x < m; ++x) {
            SuperLabel l{a, x};
            g.elems.push_back(GroupElement{super_to_perm(l, p), l});
        }
    }
    fill_inverses(g);
    return g;
}

GroupTable epicirculant_group(const Prime& p, int w) {
    const long long n = ipow(p.value(), w);
    std::vector<GfMatrix> gl = enumerate_gl(w, p);
    check_order_guard(n * static_cast<long long>(gl.size()));

    GroupTable g;
    g.kind = GroupKind::epicirculant;
    g.n = static_cast<int>(n);
    g.p = p.value();
    g.w = w;
    g.elems.reserve(static_cast<size_t>(n) * gl.size());

    const GfMatrix id = GfMatrix::identity(p, w);
    EpiLabel identity{DitVector(static_cast<size_t>(w), 0), id};
    g.elems.push_back(GroupElement{epi_to_perm(identity), identity});
    // remaining elements in (value(a), lex(x)) order
    for (long long a = 0; a < n; ++a) {
        const DitVector ad = to_dits(a, p, w);
        for (const GfMatrix& x : gl) {
            if (a == 0 && x == id) continue;
            EpiLabel l{ad, x};
            g.elems.push_back(GroupElement{epi_to_perm(l), l});
        }
    }
    fill_inverses(g);
    return g;
}

} // namespace birkhoff
