#include <numeric>

#include "boomtab/errors.hpp"
#include "boomtab/families.hpp"

namespace boomtab {

namespace {

int check_kasami(const FieldCtx& ctx, int s) {
    const int n = ctx.n();
    if (s < 1 || s >= n) throw HypothesisError("Kasami parameter s outside [1, n)");
    if (std::gcd(s, n) != 2 || n % 2 != 0 || (n / 2) % 2 == 0 || (n / 2) % 3 == 0)
        throw HypothesisError("Kasami closed form needs gcd(s,n)=2, n=2t' with t' odd and 3 not dividing t' (n=" +
                              std::to_string(n) + ", s=" + std::to_string(s) + ")");
    return s;
}

}  // namespace

KasamiTables::KasamiTables(FieldPtr ctx, int s)
    : ctx_(ctx), s_(check_kasami(*ctx, s)), f_(VecFun::from_family(ctx, KasamiFamily{s})) {
    for (elem_t w = 2; w < ctx_->size(); ++w) {
        if ((ctx_->sqr(w) ^ w ^ 1) == 0) {
            omega_ = w;
            break;
        }
    }
}

std::optional<elem_t> KasamiTables::alpha(elem_t c, elem_t d) const {
    const FieldCtx& k = *ctx_;
    const std::uint64_t p1 = std::uint64_t{1} << s_;
    const std::uint64_t p2 = p1 << s_;
    const std::uint64_t p3 = p2 << s_;
    const elem_t c2 = k.pow(c, p2);
    const elem_t c1 = k.pow(c, p1);
    for (elem_t al = 1; al < k.size(); ++al) {
        const elem_t lhs = c2 ^ k.mul(c1, k.pow(al, p3 - p1)) ^ k.mul(c, k.pow(al, p3 + p2 - p1 - 1)) ^
                           k.mul(d, k.pow(al, p2 - 1));
        if (lhs != 0) continue;
        if (k.embedded_trace(s_, 1 ^ k.div(c, k.pow(al, p1 + 1))) != 0) continue;
        return al;
    }
    return std::nullopt;
}

count_t KasamiTables::ebct(elem_t a, elem_t b, elem_t c, elem_t d) const {
    if (c == 0) return d == 0 ? ddt(a, b) : 0;
    if (a == 0) return b == 0 ? ddt(c, d) : 0;
    if (ddt(c, d) != 4) return 0;
    if (a == c) return b == d ? 4 : 0;
    const auto al = alpha(c, d);
    if (!al) return 0;
    const FieldCtx& k = *ctx_;
    const std::uint64_t p1 = std::uint64_t{1} << s_;
    const elem_t x1 = k.pow(*al, p1 + 1);
    const elem_t x3 = k.pow(*al, (p1 << (2 * s_)) + 1);
    for (elem_t w : {omega_, k.sqr(omega_)})
        if (a == (k.mul(w, c) ^ x1) && b == (k.mul(w, d) ^ x3)) return 4;
    return 0;
}

count_t KasamiTables::lbct(elem_t a, elem_t b, elem_t c) const {
    if (b == 0) return c == 0 ? ctx_->size() : 0;
    if (a == 0) return ddt(b, c);
    if (ddt(b, c) != 4) return 0;
    if (a == b) return 4;
    const auto al = alpha(b, c);
    if (!al) return 0;
    const FieldCtx& k = *ctx_;
    const elem_t x1 = k.pow(*al, (std::uint64_t{1} << s_) + 1);
    for (elem_t w : {omega_, k.sqr(omega_)})
        if (a == (k.mul(b, w) ^ x1)) return 4;
    return 0;
}

count_t KasamiTables::ubct(elem_t a, elem_t b, elem_t c) const {
    if (a == 0) return b == 0 ? ctx_->size() : 0;
    if (c == 0) return ddt(a, b);
    if (ddt(a, b) != 4) return 0;
    if (c == b) return 4;
    const auto al = alpha(a, b);
    if (!al) return 0;
    const FieldCtx& k = *ctx_;
    const elem_t x3 = k.pow(*al, (std::uint64_t{1} << (3 * s_)) + 1);
    for (elem_t w : {omega_, k.sqr(omega_)})
        if (c == (k.mul(b, w) ^ x3)) return 4;
    return 0;
}

count_t KasamiTables::entry(TableKind kind, std::span<const elem_t> idx) const {
    switch (kind) {
        case TableKind::DDT: return ddt(idx[0], idx[1]);
        case TableKind::EBCT: return ebct(idx[0], idx[1], idx[2], idx[3]);
        case TableKind::LBCT: return lbct(idx[0], idx[1], idx[2]);
        case TableKind::UBCT: return ubct(idx[0], idx[1], idx[2]);
        default: throw HypothesisError("no Kasami closed form for " + std::string(kind_name(kind)));
    }
}

count_t kasami_tables(FieldPtr ctx, int s, TableKind kind, std::span<const elem_t> idx) {
    return KasamiTables(std::move(ctx), s).entry(kind, idx);
}

}  // namespace boomtab
