#include "boomtab/equiv.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>

#include <json.hpp>

#include "boomtab/errors.hpp"
#include "boomtab/parallel.hpp"
#include "boomtab/rng.hpp"
#include "boomtab/sampling.hpp"

namespace boomtab {

namespace {

int gf2_rank(std::vector<std::uint64_t> rows) {
    int rank = 0;
    for (int bit = 63; bit >= 0; --bit) {
        const std::uint64_t mask = std::uint64_t{1} << bit;
        auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](auto r) { return r & mask; });
        if (pivot == rows.end()) continue;
        std::swap(*pivot, rows[static_cast<std::size_t>(rank)]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != static_cast<std::size_t>(rank) && (rows[i] & mask)) rows[i] ^= rows[static_cast<std::size_t>(rank)];
        ++rank;
    }
    return rank;
}

std::string hex(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
    return buf;
}

std::uint64_t parse_hex(const std::string& s) {
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos, 16);
    if (pos != s.size()) throw ArgumentError("bad hex value: " + s);
    return v;
}

}  // namespace

BitMatrix::BitMatrix(int n, std::vector<elem_t> rows) : n_(n), rows_(std::move(rows)) {
    if (rows_.size() != static_cast<std::size_t>(n)) throw ArgumentError("bit matrix needs n rows");
    const elem_t mask = (elem_t{1} << n) - 1;
    for (elem_t r : rows_)
        if (r & ~mask) throw ArgumentError("bit matrix row wider than n bits");
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n);
    for (int i = 0; i < n; ++i) m.set_row(i, elem_t{1} << i);
    return m;
}

elem_t BitMatrix::apply(elem_t x) const {
    elem_t y = 0;
    for (int i = 0; i < n_; ++i) y |= static_cast<elem_t>(std::popcount(rows_[static_cast<std::size_t>(i)] & x) & 1) << i;
    return y;
}

bool BitMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](elem_t r) { return r == 0; });
}

int BitMatrix::rank() const { return gf2_rank({rows_.begin(), rows_.end()}); }

std::string_view form_name(MapForm form) {
    switch (form) {
        case MapForm::general: return "general";
        case MapForm::ea: return "ea";
        case MapForm::affine: return "affine";
    }
    return "?";
}

std::optional<MapForm> parse_form(std::string_view text) {
    for (MapForm f : {MapForm::general, MapForm::ea, MapForm::affine})
        if (form_name(f) == text) return f;
    return std::nullopt;
}

MapForm AffineMap2n::form() const {
    if (!a12.is_zero()) return MapForm::general;
    return a21.is_zero() ? MapForm::affine : MapForm::ea;
}

bool AffineMap2n::satisfies(MapForm want) const {
    switch (want) {
        case MapForm::general: return true;
        case MapForm::ea: return a12.is_zero();
        case MapForm::affine: return a12.is_zero() && a21.is_zero();
    }
    return false;
}

bool AffineMap2n::invertible() const {
    const int k = n();
    std::vector<std::uint64_t> rows;
    rows.reserve(static_cast<std::size_t>(2 * k));
    for (int i = 0; i < k; ++i) rows.push_back(a11.row(i) | (std::uint64_t{a12.row(i)} << k));
    for (int i = 0; i < k; ++i) rows.push_back(a21.row(i) | (std::uint64_t{a22.row(i)} << k));
    return gf2_rank(std::move(rows)) == 2 * k;
}

std::pair<elem_t, elem_t> AffineMap2n::apply(elem_t x, elem_t y) const {
    return {a11.apply(x) ^ a12.apply(y) ^ c, a21.apply(x) ^ a22.apply(y) ^ d};
}

AffineMap2n AffineMap2n::identity(int n) {
    return {BitMatrix::identity(n), BitMatrix::zero(n), BitMatrix::zero(n), BitMatrix::identity(n), 0, 0};
}

AffineMap2n random_affine(const FieldCtx& ctx, MapForm form, std::uint64_t seed) {
    const int n = ctx.n();
    const std::uint64_t q = ctx.size();
    constexpr int kMaxAttempts = 10000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        CounterStream rng(seed, static_cast<std::uint64_t>(attempt));
        auto draw = [&](bool keep) {
            BitMatrix m(n);
            for (int i = 0; i < n; ++i) {
                const auto r = static_cast<elem_t>(rng.below(q));
                if (keep) m.set_row(i, r);
            }
            return m;
        };
        AffineMap2n map;
        map.a11 = draw(true);
        map.a12 = draw(form == MapForm::general);
        map.a21 = draw(form != MapForm::affine);
        map.a22 = draw(true);
        map.c = static_cast<elem_t>(rng.below(q));
        map.d = static_cast<elem_t>(rng.below(q));
        if (map.invertible()) return map;
    }
    throw Error("random_affine: no invertible map after 10^4 attempts");
}

std::optional<VecFun> apply_graph_transform(const VecFun& f, const AffineMap2n& map) {
    if (map.n() != f.n()) throw ArgumentError("map dimension differs from the function's n");
    const std::uint32_t q = f.size();
    constexpr elem_t kUnset = std::numeric_limits<elem_t>::max();
    std::vector<elem_t> lut(q, kUnset);
    for (elem_t x = 0; x < q; ++x) {
        const auto [u, v] = map.apply(x, f(x));
        if (lut[u] != kUnset) return std::nullopt;
        lut[u] = v;
    }
    return VecFun::from_lut(f.field_ptr(), std::move(lut),
                            ModifiedFamily{describe(f.family()), "graph transform"});
}

std::array<elem_t, 4> predicted_indices(const AffineMap2n& map, TableKind kind,
                                        const std::array<elem_t, 4>& idx) {
    const auto& [a, b, c, d] = idx;
    switch (kind) {
        case TableKind::EBCT:
            return {map.a12.apply(b) ^ map.a11.apply(a), map.a22.apply(b) ^ map.a21.apply(a),
                    map.a12.apply(d) ^ map.a11.apply(c), map.a22.apply(d) ^ map.a21.apply(c)};
        case TableKind::LBCT:
            if (!map.satisfies(MapForm::ea)) throw ContractError("LBCT index map needs an EA-form map");
            return {map.a11.apply(a), map.a11.apply(b), map.a22.apply(c) ^ map.a21.apply(b), 0};
        case TableKind::UBCT:
            if (!map.satisfies(MapForm::affine)) throw ContractError("UBCT index map needs an affine-form map");
            return {map.a11.apply(a), map.a22.apply(b), map.a22.apply(c), 0};
        default:
            throw ContractError("no index map for " + std::string(kind_name(kind)));
    }
}

std::vector<TableKind> invariant_kinds(MapForm form) {
    switch (form) {
        case MapForm::general: return {TableKind::EBCT};
        case MapForm::ea: return {TableKind::LBCT, TableKind::EBCT};
        case MapForm::affine: return {TableKind::UBCT, TableKind::LBCT, TableKind::EBCT};
    }
    return {};
}

InvarianceReport invariance_check(const VecFun& f, const VecFun& g, const AffineMap2n& map,
                                  TableKind kind, std::uint64_t budget, std::uint64_t seed) {
    // Validates the form before any work.
    (void)predicted_indices(map, kind, {0, 0, 0, 0});
    InvarianceReport report;
    report.kind = kind;
    report.checked = budget;
    std::mutex mu;
    std::uint64_t first_index = std::numeric_limits<std::uint64_t>::max();
    constexpr std::uint64_t kChunk = 4096;
    const std::size_t chunks = static_cast<std::size_t>((budget + kChunk - 1) / kChunk);
    parallel_for(chunks, [&](std::size_t chunk, unsigned) {
        std::uint64_t bad = 0;
        std::optional<std::pair<std::uint64_t, InvarianceReport::Counterexample>> local;
        const std::uint64_t end = std::min<std::uint64_t>(budget, (chunk + 1) * kChunk);
        for (std::uint64_t i = chunk * kChunk; i < end; ++i) {
            const auto t = sample_tuple(f, kind, seed, i);
            const auto u = predicted_indices(map, kind, t);
            const count_t vf = entry(f, {kind, t});
            const count_t vg = entry(g, {kind, u});
            if (vf == vg) continue;
            ++bad;
            if (!local) local.emplace(i, InvarianceReport::Counterexample{t, u, vf, vg});
        }
        std::lock_guard lock(mu);
        report.mismatches += bad;
        if (local && local->first < first_index) {
            first_index = local->first;
            report.first = local->second;
        }
    });
    return report;
}

SpectrumComparison compare_spectra(const VecFun& f, const VecFun& g, TableKind kind, IndexFilter filter) {
    SpectrumComparison out{spectrum(f, kind, filter), spectrum(g, kind, filter), {}};
    std::map<count_t, std::pair<std::uint64_t, std::uint64_t>> merged;
    for (const auto& [v, c] : out.f.histogram) merged[v].first = c;
    for (const auto& [v, c] : out.g.histogram) merged[v].second = c;
    for (const auto& [v, cc] : merged)
        if (cc.first != cc.second) out.differences.emplace_back(v, cc);
    return out;
}

std::string affine_map_to_json(const AffineMap2n& map) {
    nlohmann::ordered_json j;
    j["n"] = map.n();
    auto rows = [](const BitMatrix& m) {
        nlohmann::json arr = nlohmann::json::array();
        for (elem_t r : m.rows()) arr.push_back(hex(r));
        return arr;
    };
    j["a11"] = rows(map.a11);
    j["a12"] = rows(map.a12);
    j["a21"] = rows(map.a21);
    j["a22"] = rows(map.a22);
    j["c"] = hex(map.c);
    j["d"] = hex(map.d);
    return j.dump();
}

AffineMap2n affine_map_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("affine map JSON: ") + e.what());
    }
    try {
        const int n = j.at("n").get<int>();
        auto rows = [&](const char* key) {
            std::vector<elem_t> r;
            for (const auto& v : j.at(key)) r.push_back(static_cast<elem_t>(parse_hex(v.get<std::string>())));
            return BitMatrix(n, std::move(r));
        };
        AffineMap2n map{rows("a11"), rows("a12"), rows("a21"), rows("a22"),
                        static_cast<elem_t>(parse_hex(j.at("c").get<std::string>())),
                        static_cast<elem_t>(parse_hex(j.at("d").get<std::string>()))};
        const elem_t mask = (elem_t{1} << n) - 1;
        if ((map.c & ~mask) || (map.d & ~mask)) throw ArgumentError("affine map constant wider than n bits");
        return map;
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("affine map JSON: ") + e.what());
    }
}

}  // namespace boomtab
