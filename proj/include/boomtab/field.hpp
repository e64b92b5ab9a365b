#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace boomtab {

// Field element: bit i is the coefficient of x^i.
using elem_t = std::uint32_t;
// Polynomial over GF(2), same bit convention. Moduli include the x^n bit.
using poly_t = std::uint64_t;

inline constexpr int kMinDegree = 2;
inline constexpr int kMaxDegree = 20;

int poly_degree(poly_t p);
poly_t poly_mod(poly_t a, poly_t m);
poly_t poly_mulmod(poly_t a, poly_t b, poly_t m);
std::string poly_to_string(poly_t p);

// Smallest-degree nontrivial factor found by trial division, if any.
std::optional<poly_t> find_factor(poly_t p);
bool is_irreducible(poly_t p);
// Irreducible and x generates the multiplicative group of GF(2)[x]/(p).
bool is_primitive_polynomial(poly_t p);

std::vector<std::uint64_t> prime_factors(std::uint64_t v);

// Shipped default modulus for each 2 <= n <= 20 (primitive; see docs/formats.md).
poly_t default_modulus(int n);

class FieldCtx {
public:
    // Throws RangeError for n outside [2, 20], ReducibleModulusError for reducible
    // moduli, ArgumentError for a modulus of the wrong degree or a non-primitive generator.
    FieldCtx(int n, std::optional<poly_t> modulus = std::nullopt,
             std::optional<elem_t> generator = std::nullopt);

    int n() const { return n_; }
    std::uint32_t size() const { return size_; }
    std::uint32_t order() const { return size_ - 1; }
    poly_t modulus() const { return modulus_; }
    elem_t generator() const { return generator_; }

    elem_t mul(elem_t x, elem_t y) const {
        if (x == 0 || y == 0) return 0;
        return exp_[log_[x] + log_[y]];
    }
    elem_t inv(elem_t x) const;
    elem_t div(elem_t x, elem_t y) const;
    elem_t pow(elem_t x, std::uint64_t e) const;
    elem_t sqr(elem_t x) const { return mul(x, x); }
    // g^k for any integer k.
    elem_t gpow(std::int64_t k) const;
    // Discrete log base the generator; x must be nonzero.
    std::uint32_t log(elem_t x) const;
    // x^(2^k).
    elem_t frobenius(elem_t x, std::uint64_t k) const;
    bool in_subfield(elem_t x, int t) const;
    std::uint32_t multiplicative_order(elem_t x) const;

    int abs_trace(elem_t x) const;
    // Tr_m^n; ArgumentError unless m | n.
    elem_t rel_trace(int m, elem_t x) const;
    // sum_{i<m} x^(2^(s i)) with m = n / gcd(s, n); lands in GF(2^gcd(s, n)).
    elem_t embedded_trace(int s, elem_t x) const;

    // Elements of GF(2^t) inside this field, ascending. t must divide n.
    std::vector<elem_t> subfield_elements(int t) const;

private:
    int n_;
    std::uint32_t size_;
    poly_t modulus_;
    elem_t generator_;
    std::vector<std::uint32_t> log_;
    std::vector<elem_t> exp_;  // length 2 * order so mul never reduces
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

FieldPtr make_field(int n, std::optional<poly_t> modulus = std::nullopt,
                    std::optional<elem_t> generator = std::nullopt);

struct Representation {
    poly_t modulus;
    elem_t generator;
};

// Primitive polynomials of degree n in ascending integer order.
std::vector<poly_t> primitive_polynomials(int n);

// Visits (modulus, generator) for every primitive modulus of degree n (ascending)
// and every primitive element under it (ascending). Stops when visit returns false.
// n <= 12.
void enumerate_primitive_representations(int n,
                                         const std::function<bool(const Representation&)>& visit);

// Minimal polynomial of x over GF(2).
poly_t minimal_polynomial(const FieldCtx& ctx, elem_t x);

}  // namespace boomtab
