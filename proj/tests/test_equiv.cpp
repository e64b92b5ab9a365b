#include <doctest.h>

#include <algorithm>

#include "boomtab/equiv.hpp"
#include "boomtab/errors.hpp"
#include "oracle.hpp"

using namespace boomtab;

namespace {

int parity(elem_t v) { return __builtin_popcount(v) & 1; }

elem_t naive_apply(const BitMatrix& m, elem_t x) {
    elem_t out = 0;
    for (int i = 0; i < m.n(); ++i) out |= static_cast<elem_t>(parity(m.row(i) & x)) << i;
    return out;
}

int naive_rank(std::vector<oracle::u64> rows, int cols) {
    int rank = 0;
    for (int col = 0; col < cols; ++col) {
        auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](oracle::u64 r) { return r >> col & 1; });
        if (pivot == rows.end()) continue;
        std::iter_swap(rows.begin() + rank, pivot);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (static_cast<int>(i) != rank && (rows[i] >> col & 1)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

// Rows of the 2n x 2n block matrix acting on (x, y) packed as x | y << n.
std::vector<oracle::u64> block_rows(const AffineMap2n& m) {
    const int n = m.n();
    std::vector<oracle::u64> rows;
    for (int i = 0; i < n; ++i) rows.push_back(m.a11.row(i) | oracle::u64{m.a12.row(i)} << n);
    for (int i = 0; i < n; ++i) rows.push_back(m.a21.row(i) | oracle::u64{m.a22.row(i)} << n);
    return rows;
}

// Graph image computed without the library's transform. Empty when not a function graph.
oracle::Lut naive_transform(const oracle::Lut& f, const AffineMap2n& m) {
    oracle::Lut g(f.size(), ~0u);
    for (elem_t x = 0; x < f.size(); ++x) {
        const elem_t u = naive_apply(m.a11, x) ^ naive_apply(m.a12, f[x]) ^ m.c;
        const elem_t v = naive_apply(m.a21, x) ^ naive_apply(m.a22, f[x]) ^ m.d;
        if (g[u] != ~0u) return {};
        g[u] = v;
    }
    return g;
}

VecFun lut_fun(const FieldPtr& ctx, const oracle::Lut& lut) {
    return VecFun::from_lut(ctx, std::vector<elem_t>(lut.begin(), lut.end()), PowerFamily{0});
}

AffineMap2n swap_map(int n) {
    auto m = AffineMap2n::identity(n);
    m.a12 = BitMatrix::identity(n);
    m.a21 = BitMatrix::identity(n);
    m.a11 = BitMatrix::zero(n);
    m.a22 = BitMatrix::zero(n);
    return m;
}

}  // namespace

TEST_CASE("bit matrices") {
    oracle::Rng rng{1};
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(9));
        std::vector<elem_t> rows(n);
        for (auto& r : rows) r = rng.below(1u << n);
        BitMatrix m(n, rows);
        for (int k = 0; k < 20; ++k) {
            const elem_t x = rng.below(1u << n);
            REQUIRE(m.apply(x) == naive_apply(m, x));
        }
        REQUIRE(m.rank() == naive_rank({rows.begin(), rows.end()}, n));
    }
    CHECK(BitMatrix::identity(5).invertible());
    CHECK(BitMatrix::zero(5).is_zero());
    CHECK(BitMatrix::zero(5).rank() == 0);
    CHECK(BitMatrix::identity(5).apply(19) == 19);
}

TEST_CASE("form names") {
    CHECK(parse_form("ea") == MapForm::ea);
    CHECK(parse_form("affine") == MapForm::affine);
    CHECK(parse_form("general") == MapForm::general);
    CHECK_FALSE(parse_form("ccz").has_value());
    CHECK(form_name(MapForm::ea) == "ea");
}

TEST_CASE("random maps respect their form") {
    auto ctx = make_field(6);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto affine = random_affine(*ctx, MapForm::affine, seed);
        CHECK(affine.a12.is_zero());
        CHECK(affine.a21.is_zero());
        CHECK(affine.a11.invertible());
        CHECK(affine.a22.invertible());
        auto ea = random_affine(*ctx, MapForm::ea, seed);
        CHECK(ea.a12.is_zero());
        CHECK(ea.satisfies(MapForm::ea));
        auto general = random_affine(*ctx, MapForm::general, seed);
        CHECK(naive_rank(block_rows(general), 12) == 12);
        CHECK(general.invertible());
        CHECK(general == random_affine(*ctx, MapForm::general, seed));
    }
    CHECK(random_affine(*ctx, MapForm::general, 1) != random_affine(*ctx, MapForm::general, 2));
    CHECK(AffineMap2n::identity(6).form() == MapForm::affine);
    CHECK(swap_map(6).form() == MapForm::general);
    CHECK(swap_map(6).invertible());
}

TEST_CASE("graph transforms against a direct construction") {
    auto ctx = make_field(4);
    oracle::Rng rng{6};
    int admissible = 0, rejected = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto lut = seed % 2 ? oracle::random_permutation(rng, 16) : oracle::random_lut(rng, 16);
        auto f = lut_fun(ctx, lut);
        auto map = random_affine(*ctx, seed % 3 == 0 ? MapForm::ea : MapForm::general, seed);
        auto expected = naive_transform(lut, map);
        auto g = apply_graph_transform(f, map);
        REQUIRE(g.has_value() == !expected.empty());
        if (!g) {
            ++rejected;
            continue;
        }
        ++admissible;
        for (elem_t x = 0; x < 16; ++x) REQUIRE((*g)(x) == expected[x]);
    }
    CHECK(admissible > 0);
    CHECK(rejected > 0);

    auto perm = lut_fun(ctx, oracle::random_permutation(rng, 16));
    auto inv = apply_graph_transform(perm, swap_map(4));
    REQUIRE(inv.has_value());
    for (elem_t x = 0; x < 16; ++x) CHECK((*inv)(perm(x)) == x);
    auto same = apply_graph_transform(perm, AffineMap2n::identity(4));
    REQUIRE(same.has_value());
    CHECK(std::equal(same->lut().begin(), same->lut().end(), perm.lut().begin()));
}

TEST_CASE("EA maps are always admissible") {
    auto ctx = make_field(5);
    oracle::Rng rng{2};
    auto f = lut_fun(ctx, oracle::random_lut(rng, 32));
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        CHECK(apply_graph_transform(f, random_affine(*ctx, MapForm::ea, seed)).has_value());
}

TEST_CASE("index maps transport every entry") {
    auto ctx = make_field(4);
    oracle::Rng rng{31};
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const MapForm form = seed % 3 == 0 ? MapForm::affine : seed % 3 == 1 ? MapForm::ea : MapForm::general;
        auto lut = form == MapForm::general ? oracle::random_permutation(rng, 16) : oracle::random_lut(rng, 16);
        auto map = form == MapForm::general && seed % 2 ? swap_map(4) : random_affine(*ctx, form, seed);
        auto g_lut = naive_transform(lut, map);
        if (g_lut.empty()) continue;
        CAPTURE(seed);
        for (auto kind : invariant_kinds(map.form())) {
            for (elem_t a = 0; a < 16; ++a)
                for (elem_t b = 0; b < 16; ++b)
                    for (elem_t c = 0; c < 16; ++c) {
                        if (kind == TableKind::UBCT) {
                            auto p = predicted_indices(map, kind, {a, b, c, 0});
                            REQUIRE(oracle::ubct(lut, a, b, c) == oracle::ubct(g_lut, p[0], p[1], p[2]));
                        } else if (kind == TableKind::LBCT) {
                            auto p = predicted_indices(map, kind, {a, b, c, 0});
                            REQUIRE(oracle::lbct(lut, a, b, c) == oracle::lbct(g_lut, p[0], p[1], p[2]));
                        } else {
                            for (elem_t d = 0; d < 16; ++d) {
                                auto p = predicted_indices(map, kind, {a, b, c, d});
                                REQUIRE(oracle::ebct(lut, a, b, c, d) == oracle::ebct(g_lut, p[0], p[1], p[2], p[3]));
                            }
                        }
                    }
        }
    }
}

TEST_CASE("index maps refuse unsupported forms and kinds") {
    auto ctx = make_field(4);
    auto ea = random_affine(*ctx, MapForm::ea, 3);
    REQUIRE(ea.form() == MapForm::ea);
    CHECK_THROWS_AS(predicted_indices(ea, TableKind::UBCT, {1, 2, 3, 0}), ContractError);
    CHECK_THROWS_AS(predicted_indices(swap_map(4), TableKind::LBCT, {1, 2, 3, 0}), ContractError);
    CHECK_THROWS_AS(predicted_indices(AffineMap2n::identity(4), TableKind::DDT, {1, 2, 0, 0}), ContractError);
    CHECK(invariant_kinds(MapForm::general) == std::vector<TableKind>{TableKind::EBCT});
}

TEST_CASE("sampled invariance on Gold n=6") {
    auto ctx = make_field(6);
    auto f = VecFun::from_family(ctx, GoldFamily{2});
    auto map = random_affine(*ctx, MapForm::affine, 11);
    auto g = apply_graph_transform(f, map);
    REQUIRE(g.has_value());
    for (auto kind : {TableKind::UBCT, TableKind::LBCT, TableKind::EBCT}) {
        auto r = invariance_check(f, *g, map, kind, 10000, 4);
        CHECK(r.checked == 10000);
        CHECK(r.passed());
    }
    // Pairing F's entries with G's untransformed indices must break.
    auto identity_claim = invariance_check(f, *g, AffineMap2n::identity(6), TableKind::UBCT, 10000, 4);
    CHECK(identity_claim.mismatches > 0);
    REQUIRE(identity_claim.first.has_value());
    CHECK(identity_claim.first->value_f != identity_claim.first->value_g);
}

TEST_CASE("UBCT is not an EA invariant") {
    auto ctx = make_field(3);
    auto f = VecFun::from_family(ctx, PowerFamily{5});
    auto ea = AffineMap2n::identity(3);
    ea.a21 = BitMatrix::identity(3);  // G = F + X
    auto g = apply_graph_transform(f, ea);
    REQUIRE(g.has_value());
    auto cmp = compare_spectra(f, *g, TableKind::UBCT, IndexFilter::all);
    CHECK_FALSE(cmp.equal());
    CHECK(cmp.f.count_of(0) == 448);
    CHECK(cmp.g.count_of(0) == 452);
    CHECK(cmp.f.count_of(2) == 56);
    CHECK(cmp.g.count_of(2) == 52);
    CHECK(compare_spectra(f, *g, TableKind::LBCT, IndexFilter::all).equal());
    CHECK(compare_spectra(f, *g, TableKind::EBCT, IndexFilter::all).equal());
}

TEST_CASE("CCZ but not EA equivalent pair at n=5") {
    auto ctx = make_field(5);
    auto f = VecFun::from_family(ctx, PowerFamily{9});
    auto g = gold_ccz5_partner(ctx);
    CHECK(compare_spectra(f, g, TableKind::EBCT, IndexFilter::all).equal());
    auto ubct = compare_spectra(f, g, TableKind::UBCT, IndexFilter::all);
    CHECK(ubct.f.count_of(2) == 992);
    CHECK(ubct.g.count_of(2) == 982);
}

TEST_CASE("map JSON round trip") {
    auto ctx = make_field(7);
    auto map = random_affine(*ctx, MapForm::general, 99);
    auto text = affine_map_to_json(map);
    CHECK(affine_map_from_json(text) == map);
    CHECK_THROWS_AS(affine_map_from_json("{\"n\": 3}"), ArgumentError);
}
