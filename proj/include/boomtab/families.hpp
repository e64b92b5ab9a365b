#pragma once

#include <optional>
#include <span>
#include <vector>

#include "boomtab/closed_form.hpp"

namespace boomtab {

// X^(2^s+1). t = gcd(s,n), m = n/t. cond(x, y) below means the embedded trace of
// y / x^(2^s+1) equals m mod 2.
class GoldTables {
public:
    GoldTables(FieldPtr ctx, int s);  // ArgumentError unless 1 <= s < n

    int s() const { return s_; }
    int t() const { return t_; }
    int m() const { return m_; }
    bool cond(elem_t x, elem_t y) const;
    const VecFun& function() const { return f_; }

    count_t ddt(elem_t a, elem_t b) const;
    count_t ebct(elem_t a, elem_t b, elem_t c, elem_t d) const;
    count_t lbct(elem_t a, elem_t b, elem_t c) const;
    count_t ubct(elem_t a, elem_t b, elem_t c) const;
    // FBCT(a, 1).
    count_t fbct_normalized(elem_t a) const;
    count_t fbct(elem_t a, elem_t b) const;

    // #{b != 0 : cond(a, b) and cond(b, d)}. HypothesisError when m is even.
    count_t n_count(elem_t a, elem_t d) const;
    // 2^(2n) if ad = 0, else 2^(2t) (|N(a,d)| + [T in GF(2^t) \ {0,1}]) with
    // T the embedded trace of d / (a^(2^s+1))^(2^s+1). HypothesisError when m is even.
    count_t dbct(elem_t a, elem_t d) const;
    // Variant crediting (2^t - 2) to the T = u^4 branch, u in GF(2^t)* \ {1}. Since u -> u^4
    // is a bijection of GF(2^t) only one u qualifies, so this overcounts once t > 1.
    count_t dbct_all_u(elem_t a, elem_t d) const;

    count_t entry(TableKind kind, std::span<const elem_t> idx) const;

private:
    void require_odd_m() const;
    elem_t dbct_trace(elem_t a, elem_t d) const;

    FieldPtr ctx_;
    int s_, t_, m_;
    std::uint64_t e_;  // 2^s + 1
    VecFun f_;
    std::vector<elem_t> units_;  // GF(2^t)* \ {1}
};

count_t gold_ebct(FieldPtr ctx, int s, elem_t a, elem_t b, elem_t c, elem_t d);
count_t gold_lbct(FieldPtr ctx, int s, elem_t a, elem_t b, elem_t c);
count_t gold_ubct(FieldPtr ctx, int s, elem_t a, elem_t b, elem_t c);
count_t gold_fbct(FieldPtr ctx, int s, elem_t a);
count_t gold_dbct(FieldPtr ctx, int s, elem_t a, elem_t d);
count_t gold_n_count(FieldPtr ctx, int s, elem_t a, elem_t d);

// X^(2^(2s)-2^s+1) with gcd(s,n) = 2, n = 2t', t' odd, 3 not dividing t'.
class KasamiTables {
public:
    KasamiTables(FieldPtr ctx, int s);  // HypothesisError outside the hypotheses

    const VecFun& function() const { return f_; }
    elem_t omega() const { return omega_; }
    // First alpha (ascending) meeting the degree equation and the trace condition for (c, d).
    std::optional<elem_t> alpha(elem_t c, elem_t d) const;

    count_t ddt(elem_t a, elem_t b) const { return ddt_entry(f_, a, b); }
    count_t ebct(elem_t a, elem_t b, elem_t c, elem_t d) const;
    count_t lbct(elem_t a, elem_t b, elem_t c) const;
    count_t ubct(elem_t a, elem_t b, elem_t c) const;
    count_t entry(TableKind kind, std::span<const elem_t> idx) const;

private:
    FieldPtr ctx_;
    int s_;
    VecFun f_;
    elem_t omega_ = 0;
};

count_t kasami_tables(FieldPtr ctx, int s, TableKind kind, std::span<const elem_t> idx);

struct BrackenWitness {
    elem_t t = 0;
    elem_t alpha = 0;
    elem_t beta = 0;
    elem_t tau = 0;
    elem_t gamma = 0;
};

// X^(2^(2s)+2^s+1) with n = 4s.
class BrackenTables {
public:
    BrackenTables(FieldPtr ctx, int s);  // HypothesisError unless n == 4s

    const VecFun& function() const { return f_; }
    elem_t u() const { return u_; }
    elem_t v() const { return v_; }
    // Parameters for the equation F(X)+F(X+1) = D; nullopt when Tr_s^n(D) = 1 or none found.
    std::optional<BrackenWitness> witness(elem_t D) const;

    count_t ddt(elem_t a, elem_t b) const { return ddt_entry(f_, a, b); }
    count_t ebct(elem_t a, elem_t b, elem_t c, elem_t d) const;
    count_t lbct(elem_t a, elem_t b, elem_t c) const;
    count_t ubct(elem_t a, elem_t b, elem_t c) const;
    count_t entry(TableKind kind, std::span<const elem_t> idx) const;

private:
    FieldPtr ctx_;
    int s_;
    VecFun f_;
    elem_t u_ = 0;
    elem_t v_ = 0;
    elem_t u_frob_ = 0;  // u^(2^s)
    std::vector<elem_t> gf_s_;
    std::vector<elem_t> gf_2s_;
};

count_t bracken_tables(FieldPtr ctx, int s, TableKind kind, std::span<const elem_t> idx);

// X^(2^n-2) for n even; tuples with a zero coordinate go through trivial_entry.
class InverseTables {
public:
    explicit InverseTables(FieldPtr ctx);  // HypothesisError for odd n

    const VecFun& function() const { return f_; }
    count_t ebct(elem_t a, elem_t b, elem_t c, elem_t d) const;
    count_t lbct(elem_t a, elem_t b, elem_t c) const;
    count_t ubct(elem_t a, elem_t b, elem_t c) const;
    count_t fbct(elem_t a, elem_t b) const;
    count_t entry(TableKind kind, std::span<const elem_t> idx) const;

private:
    bool cube_root_of_unity(elem_t x) const;
    FieldPtr ctx_;
    VecFun f_;
};

// Odd n is routed to the APN case table.
count_t inverse_tables(FieldPtr ctx, TableKind kind, std::span<const elem_t> idx);
count_t inverse_fbct(FieldPtr ctx, elem_t a, elem_t b);

}  // namespace boomtab
