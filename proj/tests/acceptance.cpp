// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "boomtab/equiv.hpp"
#include "boomtab/errors.hpp"
#include "boomtab/families.hpp"
#include "boomtab/reference.hpp"
#include "boomtab/rng.hpp"
#include "boomtab/sampling.hpp"

using namespace boomtab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Counts comparisons and remembers the first disagreement.
struct Tally {
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    std::string first;

    template <class... Idx>
    void compare(const char* what, count_t expected, count_t got, Idx... idx) {
        ++checked;
        if (expected == got) return;
        if (mismatches++ == 0) {
            std::ostringstream os;
            os << what << "(";
            const char* sep = "";
            ((os << sep << idx, sep = ","), ...);
            os << ") brute=" << expected << " closed=" << got;
            first = os.str();
        }
    }
    bool ok() const { return mismatches == 0 && checked > 0; }
    std::string summary() const {
        std::ostringstream os;
        os << checked << " comparisons, " << mismatches << " mismatches";
        if (!first.empty()) os << ", first " << first;
        return os.str();
    }
};

struct Outcome {
    bool pass;
    std::string detail;
};

VecFun random_function(const FieldPtr& ctx, std::uint64_t seed, bool permutation) {
    CounterStream rng(seed, 0);
    std::vector<elem_t> lut(ctx->size());
    if (permutation) {
        std::iota(lut.begin(), lut.end(), 0);
        for (std::size_t i = lut.size() - 1; i > 0; --i) std::swap(lut[i], lut[rng.below(i + 1)]);
    } else {
        for (auto& v : lut) v = static_cast<elem_t>(rng.below(ctx->size()));
    }
    return VecFun::from_lut(ctx, std::move(lut), PowerFamily{0});
}

// Full EBCT comparison via brute-force slices.
template <class Closed>
void compare_full_ebct(const VecFun& f, Tally& t, Closed&& closed) {
    const elem_t q = f.size();
    std::vector<std::uint16_t> slice(std::size_t{q} * q);
    for (elem_t a = 0; a < q; ++a)
        for (elem_t c = 0; c < q; ++c) {
            ebct_slice(f, a, c, slice);
            for (elem_t b = 0; b < q; ++b)
                for (elem_t d = 0; d < q; ++d) t.compare("EBCT", slice[b * q + d], closed(a, b, c, d), a, b, c, d);
        }
}

template <class Closed>
void compare_full_3(const Table3& table, Tally& t, const char* what, Closed&& closed) {
    const elem_t q = elem_t{1} << table.n;
    for (elem_t a = 0; a < q; ++a)
        for (elem_t b = 0; b < q; ++b)
            for (elem_t c = 0; c < q; ++c) t.compare(what, table.at(a, b, c), closed(a, b, c), a, b, c);
}

template <class Tables>
void compare_sampled(const VecFun& f, const Tables& tables, std::uint64_t count, std::uint64_t seed, Tally& t) {
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto e = sample_tuple(f, TableKind::EBCT, seed, i);
        t.compare("EBCT", ebct_entry(f, e[0], e[1], e[2], e[3]), tables.ebct(e[0], e[1], e[2], e[3]), e[0], e[1],
                  e[2], e[3]);
        const auto u = sample_tuple(f, TableKind::UBCT, seed + 1, i);
        t.compare("UBCT", ubct_entry(f, u[0], u[1], u[2]), tables.ubct(u[0], u[1], u[2]), u[0], u[1], u[2]);
        const auto l = sample_tuple(f, TableKind::LBCT, seed + 2, i);
        t.compare("LBCT", lbct_entry(f, l[0], l[1], l[2]), tables.lbct(l[0], l[1], l[2]), l[0], l[1], l[2]);
    }
}

Outcome gold_oracle() {
    Tally t;
    std::ostringstream cover;
    for (int n : {4, 6, 8, 10}) {
        auto ctx = make_field(n);
        cover << " n=" << n << ":s=";
        for (int s = 1; s < n; ++s) {
            const int g = std::gcd(s, n);
            if (g != 1 && g != 2) continue;
            cover << s << (s + 1 < n ? "," : "");
            GoldTables gold(ctx, s);
            const auto& f = gold.function();
            if (n <= 6) {
                compare_full_ebct(f, t, [&](elem_t a, elem_t b, elem_t c, elem_t d) { return gold.ebct(a, b, c, d); });
                compare_full_3(ubct_table(f), t, "UBCT", [&](elem_t a, elem_t b, elem_t c) { return gold.ubct(a, b, c); });
                compare_full_3(lbct_table(f), t, "LBCT", [&](elem_t a, elem_t b, elem_t c) { return gold.lbct(a, b, c); });
            } else {
                compare_sampled(f, gold, 100000, 1000 + n * 10 + s, t);
            }
        }
    }
    return {t.ok(), t.summary() + ";" + cover.str() + " (full at n<=6, 1e5 tuples per kind at n=8,10)"};
}

Outcome delta_uniform_oracle() {
    Tally t;
    int perms = 0;
    for (int i = 0; i < 50; ++i) {
        const int n = 4 + i % 3;
        auto ctx = make_field(n);
        const bool perm = i % 2 == 0;
        perms += perm;
        auto f = random_function(ctx, 500 + i, perm);
        DeltaUniformEngine engine(f);
        compare_full_ebct(f, t, [&](elem_t a, elem_t b, elem_t c, elem_t d) { return engine.ebct(a, b, c, d); });
        compare_full_3(ubct_table(f), t, "UBCT", [&](elem_t a, elem_t b, elem_t c) { return engine.ubct(a, b, c); });
        compare_full_3(lbct_table(f), t, "LBCT", [&](elem_t a, elem_t b, elem_t c) { return engine.lbct(a, b, c); });
        // The free functions go through the same solution sets without the index.
        CounterStream rng(77, i);
        for (int k = 0; k < 200; ++k) {
            const auto a = static_cast<elem_t>(rng.below(f.size())), b = static_cast<elem_t>(rng.below(f.size())),
                       c = static_cast<elem_t>(rng.below(f.size())), d = static_cast<elem_t>(rng.below(f.size()));
            t.compare("EBCT", ebct_entry(f, a, b, c, d), delta_uniform_ebct(f, a, b, c, d), a, b, c, d);
            t.compare("UBCT", ubct_entry(f, a, b, c), delta_uniform_ubct(f, a, b, c), a, b, c);
            t.compare("LBCT", lbct_entry(f, a, b, c), delta_uniform_lbct(f, a, b, c), a, b, c);
        }
    }
    return {t.ok(), t.summary() + "; 50 functions (" + std::to_string(perms) + " permutations) over n=4,5,6"};
}

Outcome gold_dbct_sum() {
    auto ctx = make_field(6);
    GoldTables gold(ctx, 2);
    const auto& f = gold.function();
    const auto brute = dbct_from_tables(ubct_table(f), lbct_table(f));
    Tally t;
    bool edges = true;
    for (elem_t a = 0; a < 64; ++a)
        for (elem_t d = 0; d < 64; ++d) {
            t.compare("DBCT", brute.at(a, d), gold.dbct(a, d), a, d);
            t.compare("DBCT", brute.at(a, d), gold_dbct(ctx, 2, a, d), a, d);
            if ((a == 0 || d == 0) && brute.at(a, d) != 4096) edges = false;
        }
    return {t.ok() && edges, t.summary() + "; DBCT(0,d)=DBCT(a,0)=4096 " + (edges ? "holds" : "FAILS")};
}

Outcome kasami_bracken() {
    Tally t;
    for (int s : {2, 6}) {
        KasamiTables k(make_field(10), s);
        compare_sampled(k.function(), k, 100000, 4000 + s, t);
    }
    BrackenTables b(make_field(8), 2);
    compare_sampled(b.function(), b, 100000, 4100, t);
    return {t.ok(), t.summary() + "; Kasami n=10 s=2,6 and Bracken-Leander n=8 s=2, 1e5 tuples per kind"};
}

Outcome inverse_and_apn() {
    Tally t;
    for (int n : {4, 6, 8}) {
        auto ctx = make_field(n);
        InverseTables inv(ctx);
        const auto& f = inv.function();
        compare_full_3(ubct_table(f), t, "UBCT", [&](elem_t a, elem_t b, elem_t c) { return inv.ubct(a, b, c); });
        compare_full_3(lbct_table(f), t, "LBCT", [&](elem_t a, elem_t b, elem_t c) { return inv.lbct(a, b, c); });
        const auto fbct = fbct_table(f);
        for (elem_t a = 0; a < f.size(); ++a)
            for (elem_t b = 0; b < f.size(); ++b) t.compare("FBCT", fbct.at(a, b), inverse_fbct(ctx, a, b), a, b);
        for (std::uint64_t i = 0; i < 100000; ++i) {
            const auto e = sample_tuple(f, TableKind::EBCT, 5000 + n, i);
            t.compare("EBCT", ebct_entry(f, e[0], e[1], e[2], e[3]),
                      inverse_tables(ctx, TableKind::EBCT, e), e[0], e[1], e[2], e[3]);
        }
    }
    for (int n : {5, 7}) {
        auto ctx = make_field(n);
        auto f = VecFun::from_family(ctx, InverseFamily{});
        ApnTables apn(f);
        compare_full_ebct(f, t, [&](elem_t a, elem_t b, elem_t c, elem_t d) { return apn.ebct(a, b, c, d); });
        compare_full_3(ubct_table(f), t, "UBCT", [&](elem_t a, elem_t b, elem_t c) { return apn.ubct(a, b, c); });
        compare_full_3(lbct_table(f), t, "LBCT", [&](elem_t a, elem_t b, elem_t c) { return apn.lbct(a, b, c); });
        // inverse_tables routes odd n here.
        for (std::uint64_t i = 0; i < 2000; ++i) {
            const auto e = sample_tuple(f, TableKind::EBCT, 5100 + n, i);
            t.compare("EBCT", ebct_entry(f, e[0], e[1], e[2], e[3]), inverse_tables(ctx, TableKind::EBCT, e), e[0],
                      e[1], e[2], e[3]);
        }
    }
    return {t.ok(), t.summary() + "; inverse n=4,6,8 full UBCT/LBCT/FBCT plus 1e5 EBCT, APN path n=5,7 full"};
}

Outcome relations() {
    Tally t;
    for (int i = 0; i < 40; ++i) {
        const int n = 4 + i % 3;
        const bool perm = i < 20;
        auto f = random_function(make_field(n), 6000 + i, perm);
        const elem_t q = f.size();
        const auto ddt = ddt_table(f), bct = bct_table(f), fbct = fbct_table(f);
        const auto dd = dd_table(f), ubct = ubct_table(f), lbct = lbct_table(f);
        for (elem_t a = 0; a < q; ++a)
            for (elem_t b = 0; b < q; ++b) {
                count_t lsum = 0, usum = 0;
                for (elem_t c = 0; c < q; ++c) {
                    lsum += lbct.at(a, b, c);
                    usum += ubct.at(a, c, b);
                }
                t.compare("sum_c LBCT vs FBCT", fbct.at(a, b), lsum, a, b);
                t.compare("UBCT(a,b,b) vs DDT", ddt.at(a, b), ubct.at(a, b, b), a, b);
                t.compare("LBCT(a,a,c) vs DDT", ddt.at(a, b), lbct.at(a, a, b), a, b);
                t.compare("DD(a,b,0) vs FBCT", fbct.at(a, b), dd.at(a, b, 0), a, b);
                if (perm) t.compare("sum_b UBCT(a,b,c) vs BCT", bct.at(a, b), usum, a, b);
            }
        if (!perm) continue;
        auto inv = compose_inverse(f);
        std::vector<std::uint16_t> sf(std::size_t{q} * q);
        for (elem_t a = 0; a < q; ++a)
            for (elem_t c = 0; c < q; ++c) {
                ebct_slice(f, a, c, sf);
                for (elem_t b = 0; b < q; ++b) {
                    // EBCT_F(a,b,c,d) = EBCT_{F^-1}(b,a,d,c): the inverse slice is indexed by (b, d).
                    for (elem_t d = 0; d < q; ++d)
                        t.compare("EBCT inverse", sf[b * q + d], ebct_entry(inv, b, a, d, c), a, b, c, d);
                }
            }
    }
    return {t.ok(), t.summary() + "; 20 permutations and 20 functions over n=4,5,6, all tuples"};
}

Outcome apn_characterization() {
    Tally eq;
    std::ostringstream detail;
    auto check = [&](const VecFun& f) {
        const elem_t q = f.size();
        const auto u = ubct_table(f), l = lbct_table(f);
        std::vector<std::uint16_t> slice(std::size_t{q} * q);
        for (elem_t a = 1; a < q; ++a)
            for (elem_t c = 1; c < q; ++c) {
                ebct_slice(f, a, c, slice);
                for (elem_t b = 1; b < q; ++b)
                    for (elem_t d = 1; d < q; ++d) {
                        const count_t e = slice[b * q + d];
                        eq.compare("E^2 vs L*U", count_t{l.at(a, c, d)} * u.at(c, d, b), e * e, a, b, c, d);
                    }
            }
    };
    check(VecFun::from_family(make_field(5), GoldFamily{1}));
    check(VecFun::from_family(make_field(5), InverseFamily{}));
    auto gold6 = VecFun::from_family(make_field(6), GoldFamily{2});
    auto w = strict_inequality_witness(gold6);
    bool strict = false;
    if (w) {
        const auto& [a, b, c, d] = *w;
        const count_t e = ebct_entry(gold6, a, b, c, d);
        const count_t lu = lbct_entry(gold6, a, c, d) * ubct_entry(gold6, c, d, b);
        strict = e * e < lu;
        detail << "; witness (" << a << "," << b << "," << c << "," << d << ") E^2=" << e * e << " < L*U=" << lu;
    } else {
        detail << "; no strict witness found for Gold n=6 s=2";
    }
    return {eq.ok() && strict, eq.summary() + " (Gold n=5 s=1, inverse n=5, nonzero tuples)" + detail.str()};
}

Outcome equivalence() {
    auto ctx = make_field(5);
    std::ostringstream detail;
    bool ok = true;
    std::uint64_t reports = 0, checked = 0, admissible_failures = 0;
    for (int i = 0; i < 40; ++i) {
        const MapForm form = i < 20 ? MapForm::affine : MapForm::ea;
        auto f = i % 2 ? random_function(ctx, 7000 + i, false) : VecFun::from_family(ctx, PowerFamily{9});
        auto map = random_affine(*ctx, form, 7100 + i);
        auto g = apply_graph_transform(f, map);
        if (!g) {
            ++admissible_failures;
            ok = false;
            continue;
        }
        for (auto kind : invariant_kinds(form)) {
            auto r = invariance_check(f, *g, map, kind, 100000, 7200 + i);
            ++reports;
            checked += r.checked;
            if (!r.passed()) {
                if (ok) {
                    const auto& ce = *r.first;
                    detail << "; first failure map " << i << " " << kind_name(kind) << " F=" << ce.value_f
                           << " G=" << ce.value_g;
                }
                ok = false;
            }
        }
    }
    auto x9 = VecFun::from_family(ctx, PowerFamily{9});
    auto ccz = compare_spectra(x9, gold_ccz5_partner(ctx), TableKind::UBCT, IndexFilter::all);
    const bool ccz_ok = ccz.f.count_of(2) == 992 && ccz.g.count_of(2) == 982;
    auto ctx3 = make_field(3);
    auto x5 = VecFun::from_family(ctx3, PowerFamily{5});
    auto plus_x = AffineMap2n::identity(3);
    plus_x.a21 = BitMatrix::identity(3);
    auto g3 = apply_graph_transform(x5, plus_x);
    auto ea = compare_spectra(x5, *g3, TableKind::UBCT, IndexFilter::all);
    const bool ea_ok = ea.f.count_of(0) == 448 && ea.g.count_of(0) == 452;
    std::ostringstream out;
    out << reports << " invariance runs over " << checked << " tuples" << detail.str()
        << "; UBCT value 2: X^9 " << ccz.f.count_of(2) << " vs partner " << ccz.g.count_of(2)
        << "; UBCT zeros: X^5 " << ea.f.count_of(0) << " vs X^5+X " << ea.g.count_of(0) << " (value 2: "
        << ea.f.count_of(2) << " vs " << ea.g.count_of(2) << ")";
    if (admissible_failures) out << "; " << admissible_failures << " inadmissible maps";
    return {ok && ccz_ok && ea_ok, out.str()};
}

Outcome representations() {
    std::ostringstream out;
    bool ok = true;
    const char* sep = "";
    for (const auto& table : reference_table_names())
        for (int n : reference_degrees(table)) {
            const auto t0 = Clock::now();
            const auto s = find_representation(table, n);
            const double secs = seconds_since(t0);
            out << sep << table << " n=" << n << ": ";
            sep = "; ";
            if (s.located) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "located modulus=0x%llx g=0x%x",
                              static_cast<unsigned long long>(s.located->modulus), s.located->generator);
                out << buf;
            } else {
                out << "not located (best " << s.best_rows_matched << "/" << s.rows.size() << " rows)";
            }
            char t[32];
            std::snprintf(t, sizeof t, " in %.2fs", secs);
            out << t;
            if (n == 6 && secs >= 60.0) ok = false;
        }
    return {ok, out.str()};
}

Outcome performance() {
    auto t0 = Clock::now();
    auto ebct = spectrum(VecFun::from_family(make_field(6), InverseFamily{}), TableKind::EBCT, IndexFilter::all);
    const double ebct_secs = seconds_since(t0);
    auto f8 = VecFun::from_family(make_field(8), InverseFamily{});
    t0 = Clock::now();
    auto u = ubct_table(f8);
    auto l = lbct_table(f8);
    const double tables_secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "EBCT spectrum n=6 %.2fs (limit 120s, %llu tuples); UBCT+LBCT n=8 %.2fs (limit 300s)",
                  ebct_secs, static_cast<unsigned long long>(ebct.domain_size), tables_secs);
    return {ebct_secs < 120.0 && tables_secs < 300.0 && u.values.size() == (1u << 24) && l.values.size() == (1u << 24),
            buf};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "Gold closed forms vs brute force", gold_oracle},
        {2, "delta-uniform theorem on random functions", delta_uniform_oracle},
        {3, "Gold DBCT at n=6 s=2", gold_dbct_sum},
        {4, "Kasami and Bracken-Leander tables", kasami_bracken},
        {5, "inverse function and APN case tables", inverse_and_apn},
        {6, "relation identities", relations},
        {7, "APN characterization", apn_characterization},
        {8, "equivalence invariance and spectrum regressions", equivalence},
        {9, "representation search for published blocks", representations},
        {10, "performance floor", performance},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome o{false, ""};
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        char secs[32];
        std::snprintf(secs, sizeof secs, " [%.1fs]", seconds_since(t0));
        std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " " << c.title << ": " << o.detail
                  << secs << std::endl;
        failed += !o.pass;
    }
    std::cout << (failed ? "acceptance: FAIL (" + std::to_string(failed) + " criteria)" : "acceptance: PASS")
              << std::endl;
    return failed ? 1 : 0;
}
