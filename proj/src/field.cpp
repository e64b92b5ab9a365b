#include "boomtab/field.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "boomtab/errors.hpp"

namespace boomtab {

namespace {

// Conway polynomials C(2, n), n = 2..20. All primitive.
constexpr std::array<poly_t, 21> kDefaultModuli = {
    0,       0,        0x7,      0xB,      0x13,     0x25,     0x5B,
    0x83,    0x11D,    0x211,    0x46F,    0x805,    0x10EB,   0x201B,
    0x40A9,  0x8035,   0x1002D,  0x20009,  0x41403,  0x80027,  0x1006F3,
};

void check_degree(int n) {
    if (n < kMinDegree || n > kMaxDegree)
        throw RangeError("field degree " + std::to_string(n) + " outside [2, 20]");
}

}  // namespace

int poly_degree(poly_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

poly_t poly_mod(poly_t a, poly_t m) {
    const int dm = poly_degree(m);
    for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= m << (d - dm);
    return a;
}

poly_t poly_mulmod(poly_t a, poly_t b, poly_t m) {
    const int dm = poly_degree(m);
    const poly_t top = poly_t{1} << dm;
    a = poly_mod(a, m);
    poly_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= m;
    }
    return r;
}

std::string poly_to_string(poly_t p) {
    if (p == 0) return "0";
    std::string out;
    for (int i = poly_degree(p); i >= 0; --i) {
        if (!((p >> i) & 1)) continue;
        if (!out.empty()) out += "+";
        if (i == 0) out += "1";
        else if (i == 1) out += "x";
        else out += "x^" + std::to_string(i);
    }
    return out;
}

std::optional<poly_t> find_factor(poly_t p) {
    const int dp = poly_degree(p);
    for (int d = 1; 2 * d <= dp; ++d) {
        for (poly_t q = poly_t{1} << d; q < (poly_t{2} << d); ++q) {
            if (poly_mod(p, q) == 0) return q;
        }
    }
    return std::nullopt;
}

bool is_irreducible(poly_t p) { return poly_degree(p) >= 1 && !find_factor(p); }

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= v; ++q) {
        if (v % q) continue;
        out.push_back(q);
        while (v % q == 0) v /= q;
    }
    if (v > 1) out.push_back(v);
    return out;
}

namespace {

poly_t poly_powmod(poly_t base, std::uint64_t e, poly_t m) {
    poly_t r = 1;
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m);
        base = poly_mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

bool has_full_order(poly_t x, poly_t m, std::uint64_t order,
                    const std::vector<std::uint64_t>& primes) {
    if (poly_powmod(x, order, m) != 1) return false;
    for (auto q : primes)
        if (poly_powmod(x, order / q, m) == 1) return false;
    return true;
}

}  // namespace

bool is_primitive_polynomial(poly_t p) {
    const int n = poly_degree(p);
    if (n < 1 || !(p & 1) || !is_irreducible(p)) return false;
    if (n == 1) return true;
    const std::uint64_t order = (std::uint64_t{1} << n) - 1;
    return has_full_order(2, p, order, prime_factors(order));
}

poly_t default_modulus(int n) {
    check_degree(n);
    return kDefaultModuli[static_cast<std::size_t>(n)];
}

FieldCtx::FieldCtx(int n, std::optional<poly_t> modulus, std::optional<elem_t> generator)
    : n_(n), size_(0), modulus_(0), generator_(0) {
    check_degree(n);
    size_ = std::uint32_t{1} << n;
    modulus_ = modulus.value_or(default_modulus(n));
    if (poly_degree(modulus_) != n)
        throw ArgumentError("modulus " + poly_to_string(modulus_) + " is not of degree " +
                            std::to_string(n));
    if (auto f = find_factor(modulus_))
        throw ReducibleModulusError("modulus " + poly_to_string(modulus_) +
                                        " is reducible: divisible by " + poly_to_string(*f),
                                    *f);
    const std::uint64_t ord = order();
    const auto primes = prime_factors(ord);
    if (generator) {
        if (*generator >= size_ || !has_full_order(*generator, modulus_, ord, primes))
            throw ArgumentError("element " + std::to_string(*generator) +
                                " is not a primitive element");
        generator_ = *generator;
    } else {
        for (elem_t x = 2; x < size_; ++x) {
            if (has_full_order(x, modulus_, ord, primes)) {
                generator_ = x;
                break;
            }
        }
    }

    log_.assign(size_, 0);
    exp_.assign(2 * static_cast<std::size_t>(ord), 0);
    poly_t cur = 1;
    for (std::uint32_t k = 0; k < ord; ++k) {
        exp_[k] = static_cast<elem_t>(cur);
        exp_[k + ord] = static_cast<elem_t>(cur);
        log_[cur] = k;
        cur = poly_mulmod(cur, generator_, modulus_);
    }
    if (cur != 1) throw ArgumentError("generator order check failed");
}

elem_t FieldCtx::inv(elem_t x) const {
    if (x == 0) throw DomainError("inverse of zero");
    return exp_[(order() - log_[x]) % order()];
}

elem_t FieldCtx::div(elem_t x, elem_t y) const {
    if (y == 0) throw DomainError("division by zero");
    if (x == 0) return 0;
    return exp_[log_[x] + order() - log_[y]];
}

elem_t FieldCtx::pow(elem_t x, std::uint64_t e) const {
    if (x == 0) return e == 0 ? 1 : 0;
    const std::uint64_t r = (static_cast<std::uint64_t>(log_[x]) * (e % order())) % order();
    return exp_[r];
}

elem_t FieldCtx::gpow(std::int64_t k) const {
    const auto ord = static_cast<std::int64_t>(order());
    return exp_[static_cast<std::size_t>(((k % ord) + ord) % ord)];
}

std::uint32_t FieldCtx::log(elem_t x) const {
    if (x == 0) throw DomainError("logarithm of zero");
    return log_[x];
}

elem_t FieldCtx::frobenius(elem_t x, std::uint64_t k) const {
    if (x == 0) return 0;
    const std::uint64_t shift = k % static_cast<std::uint64_t>(n_);
    return exp_[(static_cast<std::uint64_t>(log_[x]) << shift) % order()];
}

bool FieldCtx::in_subfield(elem_t x, int t) const {
    return frobenius(x, static_cast<std::uint64_t>(t)) == x;
}

std::uint32_t FieldCtx::multiplicative_order(elem_t x) const {
    if (x == 0) throw DomainError("order of zero");
    return order() / std::gcd(order(), log_[x]);
}

int FieldCtx::abs_trace(elem_t x) const { return static_cast<int>(rel_trace(1, x)); }

elem_t FieldCtx::rel_trace(int m, elem_t x) const {
    if (m <= 0 || n_ % m != 0)
        throw ArgumentError("relative trace degree " + std::to_string(m) + " does not divide " +
                            std::to_string(n_));
    elem_t acc = 0;
    elem_t y = x;
    for (int i = 0; i < n_ / m; ++i) {
        acc ^= y;
        y = frobenius(y, static_cast<std::uint64_t>(m));
    }
    return acc;
}

elem_t FieldCtx::embedded_trace(int s, elem_t x) const {
    if (s <= 0) throw ArgumentError("embedded trace step must be positive");
    const int t = std::gcd(s, n_);
    const int m = n_ / t;
    elem_t acc = 0;
    elem_t y = x;
    for (int i = 0; i < m; ++i) {
        acc ^= y;
        y = frobenius(y, static_cast<std::uint64_t>(s));
    }
    if (!in_subfield(acc, t)) throw DomainError("embedded trace left GF(2^t)");
    return acc;
}

std::vector<elem_t> FieldCtx::subfield_elements(int t) const {
    if (t <= 0 || n_ % t != 0)
        throw ArgumentError("subfield degree " + std::to_string(t) + " does not divide " +
                            std::to_string(n_));
    std::vector<elem_t> out{0};
    // GF(2^t)* is generated by g^((2^n-1)/(2^t-1)).
    const std::uint32_t step = order() / ((std::uint32_t{1} << t) - 1);
    for (std::uint32_t k = 0; k < order(); k += step) out.push_back(exp_[k]);
    std::sort(out.begin(), out.end());
    return out;
}

FieldPtr make_field(int n, std::optional<poly_t> modulus, std::optional<elem_t> generator) {
    return std::make_shared<const FieldCtx>(n, modulus, generator);
}

std::vector<poly_t> primitive_polynomials(int n) {
    check_degree(n);
    std::vector<poly_t> out;
    for (poly_t p = (poly_t{1} << n) | 1; p < (poly_t{2} << n); p += 2)
        if (is_primitive_polynomial(p)) out.push_back(p);
    return out;
}

void enumerate_primitive_representations(
    int n, const std::function<bool(const Representation&)>& visit) {
    check_degree(n);
    if (n > 12) throw RangeError("representation enumeration limited to n <= 12");
    const std::uint64_t ord = (std::uint64_t{1} << n) - 1;
    for (poly_t m : primitive_polynomials(n)) {
        FieldCtx ctx(n, m, 2);
        for (elem_t g = 2; g < ctx.size(); ++g) {
            if (ctx.multiplicative_order(g) != ord) continue;
            if (!visit(Representation{m, g})) return;
        }
    }
}

poly_t minimal_polynomial(const FieldCtx& ctx, elem_t x) {
    // Product of (X + conjugate) over the distinct conjugates of x; coefficients in GF(2).
    std::vector<elem_t> conj{x};
    for (elem_t y = ctx.sqr(x); y != x; y = ctx.sqr(y)) conj.push_back(y);
    std::vector<elem_t> coeff{1};  // coeff[i] of X^i, field-valued
    for (elem_t r : conj) {
        std::vector<elem_t> next(coeff.size() + 1, 0);
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            next[i + 1] ^= coeff[i];
            next[i] ^= ctx.mul(coeff[i], r);
        }
        coeff = std::move(next);
    }
    poly_t p = 0;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i] > 1) throw DomainError("minimal polynomial left GF(2)");
        if (coeff[i]) p |= poly_t{1} << i;
    }
    return p;
}

}  // namespace boomtab
