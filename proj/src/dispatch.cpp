#include "boomtab/dispatch.hpp"

#include <charconv>

#include "boomtab/errors.hpp"

namespace boomtab {

namespace {

std::uint64_t parse_uint(std::string_view text, int base, const char* what) {
    std::uint64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v, base);
    if (text.empty() || ec != std::errc{} || ptr != end)
        throw ArgumentError(std::string("bad ") + what + ": '" + std::string(text) + "'");
    return v;
}

std::string_view strip_hex_prefix(std::string_view t) {
    if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) t.remove_prefix(2);
    return t;
}

int parse_param(std::string_view text) {
    const auto v = parse_uint(text, 10, "sbox parameter");
    if (v > 64) throw ArgumentError("sbox parameter out of range: " + std::string(text));
    return static_cast<int>(v);
}

}  // namespace

SboxSpec parse_sbox(std::string_view text) {
    SboxSpec spec{std::string(text), InverseFamily{}, false};
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    const bool has_arg = colon != std::string_view::npos;
    if (head == "inverse" && !has_arg) return spec;
    if (head == "gold-ccz5" && !has_arg) {
        spec.family = ModifiedFamily{"gold(2)", "ccz partner"};
        spec.ccz5_partner = true;
        return spec;
    }
    if (!has_arg) throw ArgumentError("unknown sbox '" + std::string(text) + "'");
    if (head == "power") spec.family = PowerFamily{parse_uint(arg, 10, "power exponent")};
    else if (head == "gold") spec.family = GoldFamily{parse_param(arg)};
    else if (head == "kasami") spec.family = KasamiFamily{parse_param(arg)};
    else if (head == "bracken") spec.family = BrackenFamily{parse_param(arg)};
    else if (head == "lut") {
        if (arg.size() < 2 || arg[0] != '@') throw ArgumentError("lut sbox needs lut:@<path>");
        spec.family = LutFileFamily{std::string(arg.substr(1))};
    } else if (head == "poly") {
        PolynomialFamily p;
        std::size_t pos = 0;
        while (pos <= arg.size()) {
            const auto comma = arg.find(',', pos);
            const auto tok = arg.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            p.coeffs.push_back(static_cast<elem_t>(parse_uint(strip_hex_prefix(tok), 16, "polynomial coefficient")));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        spec.family = std::move(p);
    } else {
        throw ArgumentError("unknown sbox '" + std::string(text) + "'");
    }
    return spec;
}

VecFun resolve_sbox(const FieldPtr& ctx, const SboxSpec& spec) {
    if (spec.ccz5_partner) {
        if (ctx->n() != 5) throw ArgumentError("gold-ccz5 is defined over n = 5 only");
        return gold_ccz5_partner(ctx);
    }
    if (const auto* lut = std::get_if<LutFileFamily>(&spec.family)) return read_lut_file(ctx, lut->path);
    if (const auto* poly = std::get_if<PolynomialFamily>(&spec.family))
        for (elem_t c : poly->coeffs)
            if (c >= ctx->size()) throw ArgumentError("polynomial coefficient outside the field");
    return VecFun::from_family(ctx, spec.family);
}

elem_t parse_index(const FieldCtx& ctx, std::string_view text) {
    elem_t v = 0;
    if (text == "g") {
        v = ctx.generator();
    } else if (text.size() > 2 && text[0] == 'g' && text[1] == '^') {
        std::string_view e = text.substr(2);
        const bool neg = !e.empty() && e[0] == '-';
        if (neg) e.remove_prefix(1);
        const auto k = parse_uint(e, 10, "g^k exponent");
        const auto order = ctx.order();
        const auto r = static_cast<std::int64_t>(k % order);
        v = ctx.gpow(neg ? -r : r);
    } else {
        const auto raw = parse_uint(strip_hex_prefix(text), 16, "index");
        if (raw >= ctx.size()) throw ArgumentError("index " + std::string(text) + " outside the field");
        v = static_cast<elem_t>(raw);
    }
    return v;
}

std::vector<elem_t> parse_indices(const FieldCtx& ctx, std::string_view text) {
    std::vector<elem_t> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        out.push_back(parse_index(ctx, text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

struct ClosedForm::Impl {
    std::optional<GoldTables> gold;
    std::optional<KasamiTables> kasami;
    std::optional<BrackenTables> bracken;
    std::optional<InverseTables> inverse;
    std::optional<ApnTables> apn;
    std::optional<DeltaUniformEngine> engine;
};

ClosedForm::ClosedForm(const VecFun& f) : f_(f), impl_(std::make_unique<Impl>()) {
    const FieldPtr& ctx = f.field_ptr();
    const Family& fam = f.family();
    if (const auto* g = std::get_if<GoldFamily>(&fam)) {
        impl_->gold.emplace(ctx, g->s);
        name_ = "gold";
    } else if (const auto* k = std::get_if<KasamiFamily>(&fam)) {
        impl_->kasami.emplace(ctx, k->s);
        name_ = "kasami";
    } else if (const auto* b = std::get_if<BrackenFamily>(&fam)) {
        impl_->bracken.emplace(ctx, b->s);
        name_ = "bracken";
    } else if (std::holds_alternative<InverseFamily>(fam)) {
        if (f.n() % 2 == 0) {
            impl_->inverse.emplace(ctx);
            name_ = "inverse";
        } else {
            impl_->apn.emplace(f);
            name_ = "apn";
        }
    } else {
        impl_->engine.emplace(f, f.n() <= 10);
        name_ = "delta-uniform";
    }
}

ClosedForm::~ClosedForm() = default;
ClosedForm::ClosedForm(ClosedForm&&) noexcept = default;

bool ClosedForm::covers(TableKind kind) const {
    using K = TableKind;
    const Impl& m = *impl_;
    if (m.gold) {
        if (kind == K::DBCT) return m.gold->m() % 2 == 1;
        return kind != K::BCT && kind != K::DD;
    }
    if (m.kasami || m.bracken) return kind == K::DDT || kind == K::EBCT || kind == K::LBCT || kind == K::UBCT;
    if (m.inverse) return kind == K::FBCT || kind == K::EBCT || kind == K::LBCT || kind == K::UBCT;
    return kind == K::EBCT || kind == K::LBCT || kind == K::UBCT;
}

count_t ClosedForm::entry(TableKind kind, std::span<const elem_t> idx) const {
    if (static_cast<int>(idx.size()) < arity(kind)) throw ArgumentError("too few indices");
    for (int i = 0; i < arity(kind); ++i)
        if (idx[static_cast<std::size_t>(i)] >= f_.size()) throw ArgumentError("index outside the field");
    const Impl& m = *impl_;
    if (covers(kind)) {
        if (m.gold) return m.gold->entry(kind, idx);
        if (m.kasami) return m.kasami->entry(kind, idx);
        if (m.bracken) return m.bracken->entry(kind, idx);
        if (m.inverse) return m.inverse->entry(kind, idx);
        if (m.apn) return m.apn->entry(kind, idx);
        return m.engine->entry(kind, idx);
    }
    if (auto v = trivial_entry(f_, kind, idx)) return *v;
    throw HypothesisError("no closed form for " + std::string(kind_name(kind)) + " of " + describe(f_.family()));
}

}  // namespace boomtab
