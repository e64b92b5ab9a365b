#include <doctest.h>

#include <algorithm>

#include "boomtab/errors.hpp"
#include "boomtab/families.hpp"
#include "boomtab/sampling.hpp"
#include "oracle.hpp"

using namespace boomtab;

namespace {

VecFun lut_fun(const FieldPtr& ctx, const oracle::Lut& lut) {
    return VecFun::from_lut(ctx, std::vector<elem_t>(lut.begin(), lut.end()), PowerFamily{0});
}

oracle::Lut lut_of(const VecFun& f) { return {f.lut().begin(), f.lut().end()}; }

}  // namespace

TEST_CASE("derivative solution sets") {
    auto ctx = make_field(5);
    oracle::Rng rng{3};
    auto lut = oracle::random_lut(rng, 32);
    auto f = lut_fun(ctx, lut);
    for (elem_t a = 1; a < 32; ++a)
        for (elem_t b = 0; b < 32; ++b) {
            auto s = solve_derivative(f, a, b);
            std::vector<elem_t> expected;
            for (elem_t x = 0; x < 32; ++x)
                if ((lut[x ^ a] ^ lut[x]) == b) expected.push_back(x);
            auto roots = s.roots();
            std::sort(roots.begin(), roots.end());
            REQUIRE(roots == expected);
            for (elem_t r : s.representatives) REQUIRE(r < (r ^ a));
        }
    CHECK_THROWS_AS(solve_derivative(f, 0, 0), ArgumentError);
}

TEST_CASE("delta-uniform engine reproduces the definitions") {
    auto ctx = make_field(4);
    oracle::Rng rng{8};
    for (int trial = 0; trial < 4; ++trial) {
        auto lut = trial % 2 ? oracle::random_lut(rng, 16) : oracle::random_permutation(rng, 16);
        auto f = lut_fun(ctx, lut);
        DeltaUniformEngine engine(f);
        for (elem_t a = 0; a < 16; ++a)
            for (elem_t b = 0; b < 16; ++b)
                for (elem_t c = 0; c < 16; ++c) {
                    REQUIRE(engine.ubct(a, b, c) == oracle::ubct(lut, a, b, c));
                    REQUIRE(engine.lbct(a, b, c) == oracle::lbct(lut, a, b, c));
                    for (elem_t d = 0; d < 16; ++d)
                        REQUIRE(engine.ebct(a, b, c, d) == oracle::ebct(lut, a, b, c, d));
                }
    }
}

TEST_CASE("unindexed engine and free functions agree with brute force") {
    auto ctx = make_field(11);
    oracle::Rng rng{19};
    auto f = lut_fun(ctx, oracle::random_lut(rng, ctx->size()));
    DeltaUniformEngine lazy(f, false);
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto t = sample_tuple(f, TableKind::EBCT, 2, i);
        REQUIRE(lazy.ebct(t[0], t[1], t[2], t[3]) == ebct_entry(f, t[0], t[1], t[2], t[3]));
        REQUIRE(delta_uniform_lbct(f, t[0], t[1], t[2]) == lbct_entry(f, t[0], t[1], t[2]));
        REQUIRE(delta_uniform_ubct(f, t[0], t[1], t[2]) == ubct_entry(f, t[0], t[1], t[2]));
    }
}

TEST_CASE("matching rule undercounts UBCT for some non-permutations") {
    auto ctx = make_field(4);
    oracle::Rng rng{77};
    auto perm = oracle::random_permutation(rng, 16);
    auto p = lut_fun(ctx, perm);
    DeltaUniformEngine pe(p);
    for (elem_t a = 0; a < 16; ++a)
        for (elem_t b = 0; b < 16; ++b)
            for (elem_t c = 0; c < 16; ++c) REQUIRE(pe.ubct_matching_rule(a, b, c) == oracle::ubct(perm, a, b, c));

    int disagreements = 0;
    for (int trial = 0; trial < 50 && disagreements == 0; ++trial) {
        auto lut = oracle::random_lut(rng, 16);
        auto f = lut_fun(ctx, lut);
        DeltaUniformEngine e(f);
        for (elem_t a = 1; a < 16; ++a)
            for (elem_t b = 0; b < 16; ++b)
                for (elem_t c = 1; c < 16; ++c)
                    if (e.ubct_matching_rule(a, b, c) != oracle::ubct(lut, a, b, c)) {
                        CHECK(e.ubct_matching_rule(a, b, c) < oracle::ubct(lut, a, b, c));
                        ++disagreements;
                    }
    }
    CHECK(disagreements > 0);
}

TEST_CASE("trivial entries") {
    auto ctx = make_field(4);
    oracle::Rng rng{5};
    for (const auto& lut : {oracle::random_permutation(rng, 16), oracle::random_lut(rng, 16)}) {
        auto f = lut_fun(ctx, lut);
        int covered = 0;
        for (elem_t a = 0; a < 16; ++a)
            for (elem_t b = 0; b < 16; ++b)
                for (elem_t c = 0; c < 16; ++c)
                    for (elem_t d = 0; d < 16; ++d) {
                        std::array<elem_t, 4> idx{a, b, c, d};
                        if (auto v = trivial_entry(f, TableKind::EBCT, idx)) {
                            REQUIRE(*v == oracle::ebct(lut, a, b, c, d));
                            ++covered;
                        }
                        if (d != 0) continue;
                        if (auto v = trivial_entry(f, TableKind::UBCT, idx)) REQUIRE(*v == oracle::ubct(lut, a, b, c));
                        if (auto v = trivial_entry(f, TableKind::LBCT, idx)) REQUIRE(*v == oracle::lbct(lut, a, b, c));
                    }
        CHECK(covered > 0);
        CHECK_FALSE(trivial_entry(f, TableKind::EBCT, std::array<elem_t, 4>{1, 2, 3, 4}).has_value());
    }
}

TEST_CASE("EBCT squared against LBCT times UBCT") {
    auto f = VecFun::from_family(make_field(6), InverseFamily{});
    auto lut = lut_of(f);
    for (std::uint64_t i = 0; i < 3000; ++i) {
        auto t = sample_tuple(f, TableKind::EBCT, 9, i);
        auto r = ge2lu_check(f, t[0], t[1], t[2], t[3]);
        REQUIRE(r.holds());
        const auto e = oracle::ebct(lut, t[0], t[1], t[2], t[3]);
        REQUIRE(r.ebct == e);
        REQUIRE(r.lbct == oracle::lbct(lut, t[0], t[2], t[3]));
        REQUIRE(r.ubct == oracle::ubct(lut, t[2], t[3], t[1]));
        REQUIRE(e * e <= r.lbct * r.ubct);
    }
    auto gold = VecFun::from_family(make_field(6), GoldFamily{2});
    auto w = strict_inequality_witness(gold);
    REQUIRE(w.has_value());
    auto g = lut_of(gold);
    const auto& [a, b, c, d] = *w;
    const oracle::u64 e = oracle::ebct(g, a, b, c, d);
    CHECK(e * e < oracle::u64{oracle::lbct(g, a, c, d)} * oracle::ubct(g, c, d, b));
}

TEST_CASE("APN case table") {
    for (int n : {3, 5}) {
        auto f = VecFun::from_family(make_field(n), PowerFamily{3});
        auto lut = lut_of(f);
        ApnTables apn(f);
        const elem_t q = f.size();
        for (elem_t a = 0; a < q; ++a)
            for (elem_t b = 0; b < q; ++b)
                for (elem_t c = 0; c < q; ++c) {
                    REQUIRE(apn.ubct(a, b, c) == oracle::ubct(lut, a, b, c));
                    REQUIRE(apn.lbct(a, b, c) == oracle::lbct(lut, a, b, c));
                    for (elem_t d = 0; d < q; ++d) REQUIRE(apn.ebct(a, b, c, d) == oracle::ebct(lut, a, b, c, d));
                }
    }
    CHECK_THROWS_AS(ApnTables(VecFun::from_family(make_field(6), InverseFamily{})), DomainError);
}

TEST_CASE("differentially 4-uniform case table") {
    auto f = VecFun::from_family(make_field(6), InverseFamily{});
    FourUniformTables four(f);
    for (std::uint64_t i = 0; i < 5000; ++i) {
        auto t = sample_tuple(f, TableKind::EBCT, 4, i);
        REQUIRE(four.ebct(t[0], t[1], t[2], t[3]) == ebct_entry(f, t[0], t[1], t[2], t[3]));
        REQUIRE(four.lbct(t[0], t[1], t[2]) == lbct_entry(f, t[0], t[1], t[2]));
        REQUIRE(four.ubct(t[0], t[1], t[2]) == ubct_entry(f, t[0], t[1], t[2]));
    }
    auto ctx = make_field(5);
    oracle::Rng rng{4};
    auto bad = lut_fun(ctx, oracle::random_lut(rng, 32));
    REQUIRE(differential_uniformity(bad) > 4);
    CHECK_THROWS_AS(FourUniformTables{bad}, DomainError);
}

TEST_CASE("Gold tables against brute force") {
    for (int n : {4, 5, 6}) {
        auto ctx = make_field(n);
        for (int s = 1; s < n; ++s) {
            GoldTables gold(ctx, s);
            const auto& f = gold.function();
            for (std::uint64_t i = 0; i < 3000; ++i) {
                auto t = sample_tuple(f, TableKind::EBCT, 1, i);
                REQUIRE(gold.ebct(t[0], t[1], t[2], t[3]) == ebct_entry(f, t[0], t[1], t[2], t[3]));
                REQUIRE(gold.lbct(t[0], t[1], t[2]) == lbct_entry(f, t[0], t[1], t[2]));
                REQUIRE(gold.ubct(t[0], t[1], t[2]) == ubct_entry(f, t[0], t[1], t[2]));
            }
            for (elem_t a = 0; a < f.size(); ++a) {
                REQUIRE(gold.fbct(a, 1) == fbct_entry(f, a, 1));
                REQUIRE(gold_fbct(ctx, s, a) == fbct_entry(f, a, 1));
            }
        }
    }
    // FBCT(0, 1) is the full field.
    CHECK(gold_fbct(make_field(6), 1, 0) == 64);
}

TEST_CASE("Gold DBCT and the all-u variant") {
    auto ctx = make_field(6);
    GoldTables gold(ctx, 2);  // t = 2, m = 3
    auto full = dbct_full(gold.function());
    int variant_off = 0;
    for (elem_t a = 0; a < 64; ++a)
        for (elem_t d = 0; d < 64; ++d) {
            REQUIRE(gold.dbct(a, d) == full.at(a, d));
            variant_off += gold.dbct_all_u(a, d) != full.at(a, d);
        }
    CHECK(variant_off > 0);

    auto ctx5 = make_field(5);
    GoldTables t1(ctx5, 1);  // t = 1: the extra term is empty
    auto full5 = dbct_full(t1.function());
    for (elem_t a = 0; a < 32; ++a)
        for (elem_t d = 0; d < 32; ++d) REQUIRE(t1.dbct_all_u(a, d) == full5.at(a, d));

    GoldTables even_m(make_field(4), 2);
    CHECK_THROWS_AS(even_m.dbct(1, 1), HypothesisError);
    CHECK_THROWS_AS(GoldTables(ctx, 0), ArgumentError);
}

TEST_CASE("Kasami and Bracken-Leander hypotheses") {
    CHECK_THROWS_AS(KasamiTables(make_field(6), 2), HypothesisError);
    CHECK_THROWS_AS(KasamiTables(make_field(10), 1), HypothesisError);
    CHECK_THROWS_AS(BrackenTables(make_field(6), 2), HypothesisError);
    CHECK_THROWS_AS(BrackenTables(make_field(8), 1), HypothesisError);
}

TEST_CASE("Kasami tables at n=10") {
    auto ctx = make_field(10);
    KasamiTables k(ctx, 2);
    const auto& f = k.function();
    for (std::uint64_t i = 0; i < 1500; ++i) {
        auto t = sample_tuple(f, TableKind::EBCT, 6, i);
        REQUIRE(k.ebct(t[0], t[1], t[2], t[3]) == ebct_entry(f, t[0], t[1], t[2], t[3]));
        REQUIRE(k.lbct(t[0], t[1], t[2]) == lbct_entry(f, t[0], t[1], t[2]));
        REQUIRE(k.ubct(t[0], t[1], t[2]) == ubct_entry(f, t[0], t[1], t[2]));
    }
}

TEST_CASE("Bracken-Leander tables at n=8") {
    auto ctx = make_field(8);
    BrackenTables b(ctx, 2);
    const auto& f = b.function();
    for (std::uint64_t i = 0; i < 3000; ++i) {
        auto t = sample_tuple(f, TableKind::EBCT, 7, i);
        REQUIRE(b.ebct(t[0], t[1], t[2], t[3]) == ebct_entry(f, t[0], t[1], t[2], t[3]));
        REQUIRE(b.lbct(t[0], t[1], t[2]) == lbct_entry(f, t[0], t[1], t[2]));
        REQUIRE(b.ubct(t[0], t[1], t[2]) == ubct_entry(f, t[0], t[1], t[2]));
    }
}

TEST_CASE("inverse tables") {
    auto ctx = make_field(6);
    InverseTables inv(ctx);
    auto lut = lut_of(inv.function());
    for (elem_t a = 0; a < 64; ++a)
        for (elem_t b = 0; b < 64; ++b) {
            REQUIRE(inv.fbct(a, b) == oracle::fbct(lut, a, b));
            REQUIRE(inverse_fbct(ctx, a, b) == oracle::fbct(lut, a, b));
            for (elem_t c = 0; c < 64; c += 5) {
                REQUIRE(inv.ubct(a, b, c) == oracle::ubct(lut, a, b, c));
                REQUIRE(inv.lbct(a, b, c) == oracle::lbct(lut, a, b, c));
            }
        }
    CHECK_THROWS_AS(InverseTables(make_field(5)), HypothesisError);
    auto odd = make_field(5);
    auto f5 = VecFun::from_family(odd, InverseFamily{});
    for (std::uint64_t i = 0; i < 2000; ++i) {
        auto t = sample_tuple(f5, TableKind::EBCT, 3, i);
        REQUIRE(inverse_tables(odd, TableKind::EBCT, t) == ebct_entry(f5, t[0], t[1], t[2], t[3]));
    }
}

TEST_CASE("inverse function special cases") {
    for (int n : {6, 8}) {
        auto ctx = make_field(n);
        oracle::Field k{n, ctx->modulus()};
        InverseTables inv(ctx);
        auto lut = lut_of(inv.function());
        const elem_t q = ctx->size();
        int lbct4 = 0, lbct2 = 0, ebct4 = 0, fbct4 = 0;
        for (elem_t b = 1; b < q; ++b) {
            const elem_t ib = k.inv(b);
            REQUIRE(inv.ebct(ib, b, ib, b) == 4);
            REQUIRE(oracle::ebct(lut, ib, b, ib, b) == 4);
            ++ebct4;
            for (elem_t c = 1; c < q; ++c) {
                if (c == ib) {
                    for (elem_t a = 1; a < q; ++a) {
                        const elem_t ac = k.mul(a, c);
                        if ((k.mul(ac, ac) ^ ac ^ 1) != 0) continue;
                        REQUIRE(inv.lbct(a, b, c) == 4);
                        REQUIRE(oracle::lbct(lut, a, b, c) == 4);
                        ++lbct4;
                    }
                } else if (k.trace(k.inv(k.mul(b, c))) == 0) {
                    REQUIRE(inv.lbct(b, b, c) == 2);
                    REQUIRE(oracle::lbct(lut, b, b, c) == 2);
                    ++lbct2;
                }
                const elem_t w = k.mul(b, c);  // c = w / b
                if (w != 1 && k.mul(k.mul(w, w), w) == 1) {
                    REQUIRE(inv.fbct(b, k.mul(b, w)) == 4);
                    REQUIRE(oracle::fbct(lut, b, k.mul(b, w)) == 4);
                    ++fbct4;
                }
            }
        }
        CHECK(lbct4 > 0);
        CHECK(lbct2 > 0);
        CHECK(ebct4 == static_cast<int>(q - 1));
        CHECK(fbct4 > 0);
    }
}

TEST_CASE("APN EBCT takes values 0 and 2 off the trivial tuples") {
    auto ctx = make_field(5);
    auto f = VecFun::from_family(ctx, GoldFamily{1});
    auto lut = lut_of(f);
    for (elem_t a = 1; a < 32; ++a)
        for (elem_t b = 1; b < 32; ++b)
            for (elem_t c = 1; c < 32; ++c)
                for (elem_t d = 1; d < 32; ++d) {
                    if (a == c && b == d) continue;
                    const auto e = oracle::ebct(lut, a, b, c, d);
                    REQUIRE((e == 0 || e == 2));
                }
}

TEST_CASE("4-uniform LBCT vanishes off a in {0, b} when DDT(b, c) = 2") {
    auto ctx = make_field(6);
    auto f = VecFun::from_family(ctx, InverseFamily{});
    auto lut = lut_of(f);
    DeltaUniformEngine engine(f);
    int seen = 0;
    for (elem_t b = 1; b < 64; ++b)
        for (elem_t c = 1; c < 64; ++c) {
            if (oracle::ddt(lut, b, c) != 2) continue;
            for (elem_t a = 1; a < 64; ++a) {
                if (a == b) continue;
                REQUIRE(oracle::lbct(lut, a, b, c) == 0);
                REQUIRE(engine.lbct(a, b, c) == 0);
                ++seen;
            }
        }
    CHECK(seen > 0);
}
