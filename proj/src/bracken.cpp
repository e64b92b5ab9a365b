#include "boomtab/errors.hpp"
#include "boomtab/families.hpp"

namespace boomtab {

namespace {

int check_bracken(const FieldCtx& ctx, int s) {
    if (s < 1 || ctx.n() != 4 * s)
        throw HypothesisError("Bracken-Leander closed form needs n = 4s (n=" + std::to_string(ctx.n()) +
                              ", s=" + std::to_string(s) + ")");
    return s;
}

}  // namespace

BrackenTables::BrackenTables(FieldPtr ctx, int s)
    : ctx_(ctx), s_(check_bracken(*ctx, s)), f_(VecFun::from_family(ctx, BrackenFamily{s})) {
    const FieldCtx& k = *ctx_;
    gf_s_ = k.subfield_elements(s_);
    gf_2s_ = k.subfield_elements(2 * s_);
    for (elem_t x = 1; x < k.size() && !u_; ++x)
        if ((x ^ k.frobenius(x, s_)) == 1) u_ = x;
    for (elem_t x = 1; x < k.size() && !v_; ++x)
        if (!k.in_subfield(x, 2 * s_) && (x ^ k.frobenius(x, 2 * s_)) == 1) v_ = x;
    if (!u_ || !v_ || !k.in_subfield(u_, 2 * s_) || k.in_subfield(u_, s_))
        throw DomainError("Bracken-Leander auxiliary elements not found");
    u_frob_ = k.frobenius(u_, s_);
}

std::optional<BrackenWitness> BrackenTables::witness(elem_t D) const {
    const FieldCtx& k = *ctx_;
    const elem_t t = k.rel_trace(s_, D);
    if (t == 1) return std::nullopt;
    const elem_t tp = t ^ 1;
    const elem_t tp_inv = k.inv(tp);
    const elem_t uu = k.sqr(u_) ^ u_;
    for (elem_t al : gf_s_) {
        const elem_t beta = k.mul(tp_inv, k.sqr(al) ^ al) ^ k.mul(tp, uu) ^ 1;
        if (!k.in_subfield(beta, s_)) continue;
        const elem_t base = k.mul(k.mul(t, u_) ^ beta, v_);
        for (elem_t tau : gf_2s_) {
            const elem_t x = base ^ tau;
            if ((f_(x) ^ f_(x ^ 1)) != D) continue;
            const elem_t a2 = k.sqr(al);
            const elem_t gamma = k.mul(tp_inv, k.sqr(a2) ^ a2) ^
                                 k.mul(k.pow(tp, 3), k.pow(u_, 4) ^ k.sqr(u_)) ^ k.mul(a2, t) ^
                                 k.mul(al, t) ^ k.mul(k.mul(t, tp), u_ ^ k.sqr(u_));
            return BrackenWitness{t, al, beta, tau, gamma};
        }
    }
    return std::nullopt;
}

count_t BrackenTables::ebct(elem_t a, elem_t b, elem_t c, elem_t d) const {
    const FieldCtx& k = *ctx_;
    if (c == 0) return d == 0 ? ddt(a, b) : 0;
    if (a == 0) return b == 0 ? ddt(c, d) : 0;
    if (a == c) return b == d ? ddt(c, d) : 0;
    if (ddt(c, d) != 4) return 0;
    const elem_t fc = f_(c);
    const auto w = witness(k.div(d, fc));
    if (!w) return 0;
    const elem_t tp = w->t ^ 1;
    const elem_t kk = k.mul(tp, u_) ^ w->alpha;
    const elem_t lin = w->alpha ^ k.mul(tp, u_frob_);
    const elem_t g = k.mul(fc, w->gamma);
    if (a == k.mul(c, kk) && b == (k.mul(d, lin) ^ g)) return 4;
    if (a == k.mul(c, kk ^ 1) && b == (k.mul(d, lin ^ 1) ^ g)) return 4;
    return 0;
}

count_t BrackenTables::lbct(elem_t a, elem_t b, elem_t c) const {
    const FieldCtx& k = *ctx_;
    if (b == 0) return c == 0 ? ctx_->size() : 0;
    if (a == 0) return ddt(b, c);
    const count_t dd = ddt(b, c);
    if (dd == 2) return a == b ? 2 : 0;
    if (dd != 4) return 0;
    if (a == b) return 4;
    const auto w = witness(k.div(c, f_(b)));
    if (!w) return 0;
    const elem_t kk = k.mul(w->t ^ 1, u_) ^ w->alpha;
    return (a == k.mul(b, kk) || a == k.mul(b, kk ^ 1)) ? 4 : 0;
}

count_t BrackenTables::ubct(elem_t a, elem_t b, elem_t c) const {
    const FieldCtx& k = *ctx_;
    if (a == 0) return b == 0 ? f_.translated_image_preimage(c) : 0;
    if (c == 0) return ddt(a, b);
    const count_t dd = ddt(a, b);
    if (dd == 2) return c == b ? 2 : 0;
    if (dd != 4) return 0;
    if (c == b) return 4;
    const elem_t fa = f_(a);
    const auto w = witness(k.div(b, fa));
    if (!w) return 0;
    const elem_t tp = w->t ^ 1;
    const elem_t g = k.mul(fa, w->gamma);
    const elem_t c1 = k.mul(b, w->alpha ^ k.mul(tp, u_frob_)) ^ g;
    const elem_t c2 = k.mul(b, w->alpha ^ k.mul(tp, 1 ^ u_) ^ 1) ^ g;
    return (c == c1 || c == c2) ? 4 : 0;
}

count_t BrackenTables::entry(TableKind kind, std::span<const elem_t> idx) const {
    switch (kind) {
        case TableKind::DDT: return ddt(idx[0], idx[1]);
        case TableKind::EBCT: return ebct(idx[0], idx[1], idx[2], idx[3]);
        case TableKind::LBCT: return lbct(idx[0], idx[1], idx[2]);
        case TableKind::UBCT: return ubct(idx[0], idx[1], idx[2]);
        default: throw HypothesisError("no Bracken-Leander closed form for " + std::string(kind_name(kind)));
    }
}

count_t bracken_tables(FieldPtr ctx, int s, TableKind kind, std::span<const elem_t> idx) {
    return BrackenTables(std::move(ctx), s).entry(kind, idx);
}

}  // namespace boomtab
