#include "birkhoff/field.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace birkhoff {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Prime::Prime(int p) : p_(p) {
    if (!is_prime(p)) {
        throw std::domain_error("Prime: " + std::to_string(p) + " is not prime");
    }
}

std::optional<std::pair<int, int>> prime_power_split(long long n) {
    if (n < 2) return std::nullopt;
    long long p = 2;
    while (p * p <= n && n % p != 0) ++p;
    if (p * p > n) p = n; // n itself is prime
    int w = 0;
    long long m = n;
    while (m % p == 0) {
        m /= p;
        ++w;
    }
    if (m != 1) return std::nullopt;
    return std::make_pair(static_cast<int>(p), w);
}

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        assert(r <= (1LL << 62) / (base > 0 ? base : 1));
        r *= base;
    }
    return r;
}

int mod_norm(long long v, int p) {
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

int mod_inverse(int a, const Prime& p) {
    const int m = p.value();
    int r = mod_norm(a, m);
    if (r == 0) {
        throw std::domain_error("mod_inverse: residue 0 has no inverse mod " + std::to_string(m));
    }
    // extended Euclid on (r, m)
    long long t = 0, new_t = 1;
    long long rem = m, new_rem = r;
    while (new_rem != 0) {
        long long q = rem / new_rem;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = rem - q * new_rem;
        rem = new_rem;
        new_rem = tmp;
    }
    return mod_norm(t, m);
}

int primitive_root(const Prime& p) {
    const int m = p.value();
    if (m == 2) return 1;
    for (int g = 2; g < m; ++g) {
        int order = 1;
        long long x = g;
        while (x != 1) {
            x = x * g % m;
            ++order;
        }
        if (order == m - 1) return g;
    }
    throw std::logic_error("primitive_root: no generator found"); // unreachable for prime p
}

int dlog_position(int a, const Prime& p) {
    const int m = p.value();
    int r = mod_norm(a, m);
    if (r == 0) {
        throw std::domain_error("dlog_position: residue 0 has no discrete log mod " + std::to_string(m));
    }
    const int g = primitive_root(p);
    long long x = 1;
    for (int k = 0; k <= m - 2; ++k) {
        if (x == r) return k;
        x = x * g % m;
    }
    throw std::logic_error("dlog_position: generator does not reach residue"); // unreachable
}

DitVector to_dits(long long z, const Prime& p, int w) {
    const int m = p.value();
    if (z < 0 || z >= ipow(m, w)) {
        throw std::domain_error("to_dits: value " + std::to_string(z) + " outside {0.." +
                                std::to_string(ipow(m, w) - 1) + "}");
    }
    DitVector d(static_cast<size_t>(w));
    for (int j = 0; j < w; ++j) {
        d[static_cast<size_t>(j)] = static_cast<int>(z % m);
        z /= m;
    }
    return d;
}

long long from_dits(const DitVector& digits, const Prime& p) {
    const int m = p.value();
    long long z = 0;
    long long scale = 1;
    for (int d : digits) {
        if (d < 0 || d >= m) {
            throw std::domain_error("from_dits: dit " + std::to_string(d) + " outside {0.." +
                                    std::to_string(m - 1) + "}");
        }
        z += d * scale;
        scale *= m;
    }
    return z;
}

} // namespace birkhoff
