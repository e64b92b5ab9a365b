#pragma once

// Slow reference arithmetic and table definitions written straight from the
// definitions. Nothing here calls into the library.

#include <cstdint>
#include <vector>

namespace oracle {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using Lut = std::vector<u32>;

struct Field {
    int n;
    u64 modulus;

    u32 size() const { return u32{1} << n; }

    u32 mul(u32 a, u32 b) const {
        u64 acc = 0;
        for (int i = 0; i < n; ++i)
            if (b >> i & 1) acc ^= u64{a} << i;
        for (int bit = 2 * n - 2; bit >= n; --bit)
            if (acc >> bit & 1) acc ^= modulus << (bit - n);
        return static_cast<u32>(acc);
    }

    u32 pow(u32 a, u64 e) const {
        u32 r = 1;
        for (u64 i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }

    // Square and multiply for large exponents; still independent of the library.
    u32 fast_pow(u32 a, u64 e) const {
        u32 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    u32 inv(u32 a) const { return fast_pow(a, size() - 2); }

    u32 frob(u32 a, int k) const {
        for (int i = 0; i < k; ++i) a = mul(a, a);
        return a;
    }

    int trace(u32 a) const {
        u32 t = 0, x = a;
        for (int i = 0; i < n; ++i) {
            t ^= x;
            x = mul(x, x);
        }
        return static_cast<int>(t);
    }
};

// Polynomial arithmetic over GF(2) for primitivity checks.
inline u64 poly_mulmod(u64 a, u64 b, u64 m, int deg) {
    u64 r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> deg & 1) a ^= m;
    }
    return r;
}

inline u64 poly_powmod(u64 base, u64 e, u64 m, int deg) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, deg);
        base = poly_mulmod(base, base, m, deg);
        e >>= 1;
    }
    return r;
}

inline std::vector<u64> primes_of(u64 v) {
    std::vector<u64> out;
    for (u64 p = 2; p * p <= v; ++p)
        if (v % p == 0) {
            out.push_back(p);
            while (v % p == 0) v /= p;
        }
    if (v > 1) out.push_back(v);
    return out;
}

// x has order exactly 2^deg - 1 modulo m (implies m irreducible).
inline bool x_is_primitive(u64 m, int deg) {
    const u64 order = (u64{1} << deg) - 1;
    if (poly_powmod(2, order, m, deg) != 1) return false;
    for (u64 p : primes_of(order))
        if (poly_powmod(2, order / p, m, deg) == 1) return false;
    return true;
}

inline u64 euler_phi(u64 v) {
    u64 r = v;
    for (u64 p : primes_of(v)) r = r / p * (p - 1);
    return r;
}

inline u32 ddt(const Lut& f, u32 a, u32 b) {
    u32 c = 0;
    for (u32 x = 0; x < f.size(); ++x) c += (f[x ^ a] ^ f[x]) == b;
    return c;
}

inline u32 bct(const Lut& f, u32 a, u32 b) {
    u32 c = 0;
    for (u32 x = 0; x < f.size(); ++x)
        for (u32 y = 0; y < f.size(); ++y) c += (f[x] ^ f[y]) == b && (f[x ^ a] ^ f[y ^ a]) == b;
    return c;
}

inline u32 dd(const Lut& f, u32 a, u32 b, u32 c) {
    u32 k = 0;
    for (u32 x = 0; x < f.size(); ++x) k += (f[x ^ a ^ b] ^ f[x ^ b] ^ f[x ^ a] ^ f[x]) == c;
    return k;
}

inline u32 fbct(const Lut& f, u32 a, u32 b) { return dd(f, a, b, 0); }

inline u32 ubct(const Lut& f, u32 a, u32 b, u32 c) {
    u32 k = 0;
    for (u32 x = 0; x < f.size(); ++x) {
        if ((f[x] ^ f[x ^ a]) != b) continue;
        for (u32 y = 0; y < f.size(); ++y)
            if ((f[x] ^ f[y]) == c && (f[x ^ a] ^ f[y ^ a]) == c) {
                ++k;
                break;
            }
    }
    return k;
}

inline u32 ubct_pairs(const Lut& f, u32 a, u32 b, u32 c) {
    u32 k = 0;
    for (u32 x = 0; x < f.size(); ++x)
        for (u32 y = 0; y < f.size(); ++y)
            k += (f[x] ^ f[x ^ a]) == b && (f[x] ^ f[y]) == c && (f[x ^ a] ^ f[y ^ a]) == c;
    return k;
}

inline u32 lbct(const Lut& f, u32 a, u32 b, u32 c) {
    u32 k = 0;
    for (u32 x = 0; x < f.size(); ++x) k += (f[x] ^ f[x ^ b]) == c && (f[x ^ a] ^ f[x ^ a ^ b]) == c;
    return k;
}

inline u32 ebct(const Lut& f, u32 a, u32 b, u32 c, u32 d) {
    u32 k = 0;
    for (u32 x = 0; x < f.size(); ++x)
        k += (f[x] ^ f[x ^ a]) == b && (f[x] ^ f[x ^ c]) == d && (f[x ^ a ^ c] ^ f[x ^ a]) == d;
    return k;
}

inline u64 dbct(const Lut& f, u32 a, u32 d) {
    u64 total = 0;
    for (u32 b = 0; b < f.size(); ++b)
        for (u32 c = 0; c < f.size(); ++c) {
            const u32 l = lbct(f, b, c, d);
            if (l) total += u64{ubct(f, a, b, c)} * l;
        }
    return total;
}

inline Lut power_lut(const Field& k, u64 d) {
    Lut f(k.size());
    for (u32 x = 0; x < k.size(); ++x) f[x] = k.fast_pow(x, d);
    if (d == 0) f[0] = 1;
    return f;
}

// SplitMix64 finalizer, spelled out independently.
inline u64 splitmix_final(u64 z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

// Small deterministic generator for building test inputs.
struct Rng {
    u64 state;
    u64 next() { return splitmix_final(state += 0x9E3779B97F4A7C15ULL); }
    u32 below(u32 bound) { return static_cast<u32>(next() % bound); }
};

inline Lut random_lut(Rng& rng, u32 q) {
    Lut f(q);
    for (auto& v : f) v = rng.below(q);
    return f;
}

inline Lut random_permutation(Rng& rng, u32 q) {
    Lut f(q);
    for (u32 i = 0; i < q; ++i) f[i] = i;
    for (u32 i = q - 1; i > 0; --i) std::swap(f[i], f[rng.below(i + 1)]);
    return f;
}

}  // namespace oracle
