#include <numeric>

#include "boomtab/errors.hpp"
#include "boomtab/families.hpp"

namespace boomtab {

GoldTables::GoldTables(FieldPtr ctx, int s)
    : ctx_(ctx),
      s_(s),
      t_(std::gcd(s, ctx->n())),
      m_(ctx->n() / t_),
      e_((std::uint64_t{1} << s) + 1),
      f_(VecFun::from_family(ctx, GoldFamily{s})) {
    for (elem_t u : ctx_->subfield_elements(t_))
        if (u > 1) units_.push_back(u);
}

bool GoldTables::cond(elem_t x, elem_t y) const {
    const elem_t tr = ctx_->embedded_trace(s_, ctx_->div(y, ctx_->pow(x, e_)));
    return tr == static_cast<elem_t>(m_ % 2);
}

count_t GoldTables::ddt(elem_t a, elem_t b) const {
    if (a == 0) return b == 0 ? ctx_->size() : 0;
    return cond(a, b) ? count_t{1} << t_ : 0;
}

count_t GoldTables::ebct(elem_t a, elem_t b, elem_t c, elem_t d) const {
    const count_t hit = count_t{1} << t_;
    if (c == 0) return d == 0 ? ddt(a, b) : 0;
    if (a == 0) return b == 0 ? ddt(c, d) : 0;
    if (!cond(c, d)) return 0;
    if (a == c) return b == d ? hit : 0;
    const elem_t cc = ctx_->pow(c, e_);
    for (elem_t u : units_) {
        if (a != ctx_->mul(u, c)) continue;
        const elem_t want = ctx_->mul(u ^ ctx_->sqr(u), cc) ^ ctx_->mul(u, d);
        return b == want ? hit : 0;
    }
    return 0;
}

count_t GoldTables::lbct(elem_t a, elem_t b, elem_t c) const {
    if (b == 0) return c == 0 ? ctx_->size() : 0;
    if (!cond(b, c)) return 0;
    if (a == 0 || ctx_->in_subfield(ctx_->div(a, b), t_)) return count_t{1} << t_;
    return 0;
}

count_t GoldTables::ubct(elem_t a, elem_t b, elem_t c) const {
    if (a == 0) return b == 0 ? f_.translated_image_preimage(c) : 0;
    if (!cond(a, b)) return 0;
    const count_t hit = count_t{1} << t_;
    if (c == 0 || c == b) return hit;
    const elem_t aa = ctx_->pow(a, e_);
    for (elem_t u : units_)
        if (c == (ctx_->mul(u ^ ctx_->sqr(u), aa) ^ ctx_->mul(u, b))) return hit;
    return 0;
}

count_t GoldTables::fbct_normalized(elem_t a) const {
    if (a == 0) return ctx_->size();
    return ctx_->in_subfield(a, t_) ? ctx_->size() : 0;
}

count_t GoldTables::fbct(elem_t a, elem_t b) const {
    if (a == 0 || b == 0) return ctx_->size();
    return fbct_normalized(ctx_->div(a, b));
}

void GoldTables::require_odd_m() const {
    if (m_ % 2 == 0)
        throw HypothesisError("Gold DBCT closed form needs n/gcd(s,n) odd (got m=" +
                              std::to_string(m_) + ")");
}

count_t GoldTables::n_count(elem_t a, elem_t d) const {
    require_odd_m();
    count_t total = 0;
    for (elem_t b = 1; b < ctx_->size(); ++b) total += cond(a, b) && cond(b, d);
    return total;
}

elem_t GoldTables::dbct_trace(elem_t a, elem_t d) const {
    const elem_t aa = ctx_->pow(ctx_->pow(a, e_), e_);
    return ctx_->embedded_trace(s_, ctx_->div(d, aa));
}

count_t GoldTables::dbct(elem_t a, elem_t d) const {
    require_odd_m();
    const count_t q = ctx_->size();
    if (a == 0 || d == 0) return q * q;
    const elem_t T = dbct_trace(a, d);
    const count_t extra = T > 1 ? 1 : 0;
    return (count_t{1} << (2 * t_)) * (n_count(a, d) + extra);
}

count_t GoldTables::dbct_all_u(elem_t a, elem_t d) const {
    require_odd_m();
    const count_t q = ctx_->size();
    if (a == 0 || d == 0) return q * q;
    const elem_t T = dbct_trace(a, d);
    bool branch = false;
    for (elem_t u : units_) branch = branch || ctx_->pow(u, 4) == T;
    const count_t extra = branch ? (count_t{1} << t_) - 2 : 0;
    return (count_t{1} << (2 * t_)) * (n_count(a, d) + extra);
}

count_t GoldTables::entry(TableKind kind, std::span<const elem_t> idx) const {
    switch (kind) {
        case TableKind::DDT: return ddt(idx[0], idx[1]);
        case TableKind::FBCT: return fbct(idx[0], idx[1]);
        case TableKind::EBCT: return ebct(idx[0], idx[1], idx[2], idx[3]);
        case TableKind::LBCT: return lbct(idx[0], idx[1], idx[2]);
        case TableKind::UBCT: return ubct(idx[0], idx[1], idx[2]);
        case TableKind::DBCT: return dbct(idx[0], idx[1]);
        default: throw HypothesisError("no Gold closed form for " + std::string(kind_name(kind)));
    }
}

count_t gold_ebct(FieldPtr ctx, int s, elem_t a, elem_t b, elem_t c, elem_t d) {
    return GoldTables(std::move(ctx), s).ebct(a, b, c, d);
}
count_t gold_lbct(FieldPtr ctx, int s, elem_t a, elem_t b, elem_t c) {
    return GoldTables(std::move(ctx), s).lbct(a, b, c);
}
count_t gold_ubct(FieldPtr ctx, int s, elem_t a, elem_t b, elem_t c) {
    return GoldTables(std::move(ctx), s).ubct(a, b, c);
}
count_t gold_fbct(FieldPtr ctx, int s, elem_t a) {
    return GoldTables(std::move(ctx), s).fbct_normalized(a);
}
count_t gold_dbct(FieldPtr ctx, int s, elem_t a, elem_t d) {
    return GoldTables(std::move(ctx), s).dbct(a, d);
}
count_t gold_n_count(FieldPtr ctx, int s, elem_t a, elem_t d) {
    return GoldTables(std::move(ctx), s).n_count(a, d);
}

}  // namespace boomtab
