#include "boomtab/errors.hpp"
#include "boomtab/families.hpp"

namespace boomtab {

namespace {

FieldPtr check_even(FieldPtr ctx) {
    if (ctx->n() % 2 != 0)
        throw HypothesisError("inverse-function closed form needs n even; odd n is APN");
    return ctx;
}

}  // namespace

InverseTables::InverseTables(FieldPtr ctx)
    : ctx_(check_even(std::move(ctx))), f_(VecFun::from_family(ctx_, InverseFamily{})) {}

bool InverseTables::cube_root_of_unity(elem_t x) const { return (ctx_->sqr(x) ^ x ^ 1) == 0; }

count_t InverseTables::ebct(elem_t a, elem_t b, elem_t c, elem_t d) const {
    const std::array<elem_t, 4> idx{a, b, c, d};
    if (auto v = trivial_entry(f_, TableKind::EBCT, idx)) return *v;
    const FieldCtx& k = *ctx_;
    const elem_t ib = k.inv(b), id = k.inv(d), ic = k.inv(c), ia = k.inv(a);
    if (a == c && c == ib && ib == id) return 4;
    if (b == ia && d == ic && cube_root_of_unity(k.mul(a, d))) return 4;
    if (a == c && b == d && d != ic && k.abs_trace(k.inv(k.mul(c, d))) == 0) return 2;
    return 0;
}

count_t InverseTables::lbct(elem_t a, elem_t b, elem_t c) const {
    const std::array<elem_t, 3> idx{a, b, c};
    if (auto v = trivial_entry(f_, TableKind::LBCT, idx)) return *v;
    const FieldCtx& k = *ctx_;
    const elem_t ic = k.inv(c);
    if (a == b && b == ic) return 4;
    if (b == ic && cube_root_of_unity(k.mul(a, c))) return 4;
    if (a == b && b != ic && k.abs_trace(k.inv(k.mul(b, c))) == 0) return 2;
    return 0;
}

count_t InverseTables::ubct(elem_t a, elem_t b, elem_t c) const {
    const std::array<elem_t, 3> idx{a, b, c};
    if (auto v = trivial_entry(f_, TableKind::UBCT, idx)) return *v;
    const FieldCtx& k = *ctx_;
    const elem_t ia = k.inv(a);
    if (b == c && c == ia) return 4;
    if (b == ia && cube_root_of_unity(k.mul(a, c))) return 4;
    if (c == b && b != ia && k.abs_trace(k.inv(k.mul(a, b))) == 0) return 2;
    return 0;
}

count_t InverseTables::fbct(elem_t a, elem_t b) const {
    if (a == 0 || b == 0 || a == b) return ctx_->size();
    return cube_root_of_unity(ctx_->div(a, b)) ? 4 : 0;
}

count_t InverseTables::entry(TableKind kind, std::span<const elem_t> idx) const {
    switch (kind) {
        case TableKind::FBCT: return fbct(idx[0], idx[1]);
        case TableKind::EBCT: return ebct(idx[0], idx[1], idx[2], idx[3]);
        case TableKind::LBCT: return lbct(idx[0], idx[1], idx[2]);
        case TableKind::UBCT: return ubct(idx[0], idx[1], idx[2]);
        default: throw HypothesisError("no inverse-function closed form for " + std::string(kind_name(kind)));
    }
}

count_t inverse_tables(FieldPtr ctx, TableKind kind, std::span<const elem_t> idx) {
    if (ctx->n() % 2 != 0) {
        const auto f = VecFun::from_family(ctx, InverseFamily{});
        return apn_tables(f, kind, idx);
    }
    return InverseTables(std::move(ctx)).entry(kind, idx);
}

count_t inverse_fbct(FieldPtr ctx, elem_t a, elem_t b) { return InverseTables(std::move(ctx)).fbct(a, b); }

}  // namespace boomtab
