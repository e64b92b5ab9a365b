#include "boomtab/verify.hpp"

#include <charconv>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numeric>
#include <ostream>

#include "boomtab/dispatch.hpp"
#include "boomtab/equiv.hpp"
#include "boomtab/errors.hpp"
#include "boomtab/parallel.hpp"
#include "boomtab/rng.hpp"
#include "boomtab/sampling.hpp"
#include "boomtab/spectrum.hpp"

namespace boomtab {

namespace {

using Tuple = std::array<elem_t, 4>;
using ClosedFn = std::function<count_t(std::span<const elem_t>)>;

std::string tuple_text(const Tuple& t, int k) {
    std::string out = "(";
    char buf[16];
    for (int i = 0; i < k; ++i) {
        std::snprintf(buf, sizeof buf, "%s0x%x", i ? "," : "", t[static_cast<std::size_t>(i)]);
        out += buf;
    }
    return out + ")";
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw ArgumentError(std::string("bad ") + what + ": '" + std::string(text) + "'");
    return v;
}

// Mismatch tally merged across workers; keeps the counterexample with the smallest key.
struct Tally {
    std::mutex mu;
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t first_key = ~std::uint64_t{0};
    std::string first;

    void merge(std::uint64_t c, std::uint64_t m, std::uint64_t key, std::string text) {
        std::lock_guard lock(mu);
        checked += c;
        mismatches += m;
        if (m && key < first_key) {
            first_key = key;
            first = std::move(text);
        }
    }

    CheckResult result(std::string name, std::string domain) {
        CheckResult r;
        r.name = std::move(name);
        r.domain = std::move(domain);
        r.checked = checked;
        r.mismatches = mismatches;
        r.first_counterexample = std::move(first);
        return r;
    }
};

std::string mismatch_text(const Tuple& t, int k, count_t lhs, count_t rhs, const char* l, const char* r) {
    return tuple_text(t, k) + ": " + l + " " + std::to_string(lhs) + ", " + r + " " + std::to_string(rhs);
}

class Checker {
public:
    Checker(const VecFun& f, const VerifyOptions& opt) : f_(f), opt_(opt) {}

    bool use_full(TableKind kind) const {
        const bool allowed = f_.n() <= full_sweep_limit(kind) && (arity(kind) != 3 || f_.n() <= kMaxMaterialize3);
        if (opt_.budget == BudgetMode::full) {
            if (!allowed)
                throw BudgetExceeded(std::string(kind_name(kind)) + " full sweep at n=" + std::to_string(f_.n()) +
                                         " needs about " + std::to_string(full_sweep_cost(kind, f_.n())) + " operations",
                                     full_sweep_cost(kind, f_.n()));
            return true;
        }
        return opt_.budget == BudgetMode::automatic && allowed;
    }

    std::uint64_t samples(std::uint64_t cap = ~std::uint64_t{0}) const { return std::min(opt_.samples, cap); }

    // Closed form against brute force, full domain or seeded tuples.
    CheckResult compare(const std::string& name, TableKind kind, const ClosedFn& closed,
                        std::uint64_t sample_cap = ~std::uint64_t{0}) const {
        if (use_full(kind)) return compare_full(name, kind, closed);
        return compare_sampled(name, kind, closed, samples(sample_cap));
    }

    CheckResult compare_sampled(const std::string& name, TableKind kind, const ClosedFn& closed,
                                std::uint64_t count) const {
        Tally tally;
        const int k = arity(kind);
        constexpr std::uint64_t kChunk = 1024;
        parallel_for(static_cast<std::size_t>((count + kChunk - 1) / kChunk), [&](std::size_t chunk, unsigned) {
            std::uint64_t bad = 0, key = ~std::uint64_t{0};
            std::string text;
            const std::uint64_t end = std::min<std::uint64_t>(count, (chunk + 1) * kChunk);
            for (std::uint64_t i = chunk * kChunk; i < end; ++i) {
                const Tuple t = sample_tuple(f_, kind, opt_.seed, i);
                const count_t b = entry(f_, {kind, t});
                const count_t c = closed({t.data(), static_cast<std::size_t>(k)});
                if (b == c) continue;
                if (bad++ == 0) {
                    key = i;
                    text = mismatch_text(t, k, b, c, "brute", "closed");
                }
            }
            tally.merge(end - chunk * kChunk, bad, key, std::move(text));
        });
        return tally.result(name, std::to_string(count) + " seeded tuples (seed " + std::to_string(opt_.seed) + ")");
    }

    CheckResult compare_full(const std::string& name, TableKind kind, const ClosedFn& closed) const {
        const std::uint32_t q = f_.size();
        const int k = arity(kind);
        Tally tally;
        auto run_rows = [&](auto&& brute_row) {
            parallel_for(q, [&](std::size_t a, unsigned) {
                std::uint64_t bad = 0, checked = 0, key = ~std::uint64_t{0};
                std::string text;
                brute_row(static_cast<elem_t>(a), [&](const Tuple& t, count_t b) {
                    ++checked;
                    const count_t c = closed({t.data(), static_cast<std::size_t>(k)});
                    if (b == c) return;
                    if (bad++ == 0) {
                        key = a;
                        text = mismatch_text(t, k, b, c, "brute", "closed");
                    }
                });
                tally.merge(checked, bad, key, std::move(text));
            });
        };
        if (k == 2) {
            const Table2 t = kind == TableKind::DDT    ? ddt_table(f_)
                             : kind == TableKind::BCT  ? bct_table(f_)
                             : kind == TableKind::FBCT ? fbct_table(f_)
                                                       : dbct_full(f_);
            run_rows([&](elem_t a, auto&& emit) {
                for (elem_t b = 0; b < q; ++b) emit(Tuple{a, b, 0, 0}, t.at(a, b));
            });
        } else if (k == 3) {
            const Table3 t = kind == TableKind::UBCT   ? ubct_table(f_)
                             : kind == TableKind::LBCT ? lbct_table(f_)
                                                       : dd_table(f_);
            run_rows([&](elem_t a, auto&& emit) {
                for (elem_t b = 0; b < q; ++b)
                    for (elem_t c = 0; c < q; ++c) emit(Tuple{a, b, c, 0}, t.at(a, b, c));
            });
        } else {
            run_rows([&](elem_t a, auto&& emit) {
                std::vector<std::uint16_t> slice(std::size_t{q} * q);
                for (elem_t c = 0; c < q; ++c) {
                    ebct_slice(f_, a, c, slice);
                    for (elem_t b = 0; b < q; ++b)
                        for (elem_t d = 0; d < q; ++d) emit(Tuple{a, b, c, d}, slice[std::size_t{b} * q + d]);
                }
            });
        }
        return tally.result(name, "full domain");
    }

private:
    const VecFun& f_;
    const VerifyOptions& opt_;
};

FieldPtr field_of(const VerifyOptions& opt) { return make_field(opt.n, opt.modulus, opt.generator); }

std::optional<int> param_int(const VerifyOptions& opt, const std::string& key) {
    auto it = opt.params.find(key);
    if (it == opt.params.end()) return std::nullopt;
    return static_cast<int>(parse_u64(it->second, key.c_str()));
}

VecFun sbox_or(const FieldPtr& ctx, const VerifyOptions& opt, const char* fallback) {
    return resolve_sbox(ctx, parse_sbox(opt.sbox ? *opt.sbox : std::string(fallback)));
}

ClosedFn bind(const auto& tables, TableKind kind) {
    return [&tables, kind](std::span<const elem_t> idx) { return tables.entry(kind, idx); };
}

SuiteReport gold_suite(const FieldPtr& ctx, const VerifyOptions& opt, int s) {
    const GoldTables g(ctx, s);
    const VecFun& f = g.function();
    Checker ck(f, opt);
    SuiteReport r{"gold", "gold s=" + std::to_string(s) + " n=" + std::to_string(opt.n), false, {}, {}};
    for (TableKind kind : {TableKind::DDT, TableKind::FBCT, TableKind::EBCT, TableKind::LBCT, TableKind::UBCT})
        r.checks.push_back(ck.compare(std::string(kind_name(kind)) + " closed vs brute", kind, bind(g, kind)));
    if (g.m() % 2 == 1)
        r.checks.push_back(ck.compare("DBCT closed vs brute", TableKind::DBCT, bind(g, TableKind::DBCT), 2000));
    else
        r.checks.push_back({"DBCT closed vs brute", "-", 0, 0, {}, true, "skipped: n/gcd(s,n) even"});
    return r;
}

std::vector<SuiteReport> gold(const VerifyOptions& opt) {
    const auto ctx = field_of(opt);
    std::vector<SuiteReport> out;
    if (auto s = param_int(opt, "s")) {
        out.push_back(gold_suite(ctx, opt, *s));
    } else {
        for (int s = 1; s < opt.n; ++s) out.push_back(gold_suite(ctx, opt, s));
    }
    return out;
}

bool kasami_ok(int n, int s) {
    return s >= 1 && s < n && std::gcd(s, n) == 2 && n % 2 == 0 && (n / 2) % 2 == 1 && (n / 2) % 3 != 0;
}

std::vector<SuiteReport> kasami(const VerifyOptions& opt) {
    const auto ctx = field_of(opt);
    std::vector<int> ss;
    if (auto s = param_int(opt, "s")) ss.push_back(*s);
    else
        for (int s = 1; s < opt.n; ++s)
            if (kasami_ok(opt.n, s)) ss.push_back(s);
    if (ss.empty())
        throw HypothesisError("kasami suite needs n = 2t' with t' odd, 3 not dividing t', and some s with gcd(s,n) = 2");
    std::vector<SuiteReport> out;
    for (int s : ss) {
        const KasamiTables t(ctx, s);
        Checker ck(t.function(), opt);
        SuiteReport r{"kasami", "kasami s=" + std::to_string(s) + " n=" + std::to_string(opt.n), false, {}, {}};
        for (TableKind kind : {TableKind::DDT, TableKind::EBCT, TableKind::LBCT, TableKind::UBCT})
            r.checks.push_back(ck.compare(std::string(kind_name(kind)) + " closed vs brute", kind, bind(t, kind)));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<SuiteReport> bracken(const VerifyOptions& opt) {
    if (opt.n % 4 != 0) throw HypothesisError("bracken suite needs n divisible by 4 (n=" + std::to_string(opt.n) + ")");
    const int s = param_int(opt, "s").value_or(opt.n / 4);
    const auto ctx = field_of(opt);
    const BrackenTables t(ctx, s);
    Checker ck(t.function(), opt);
    SuiteReport r{"bracken", "bracken s=" + std::to_string(s) + " n=" + std::to_string(opt.n), false, {}, {}};
    for (TableKind kind : {TableKind::DDT, TableKind::EBCT, TableKind::LBCT, TableKind::UBCT})
        r.checks.push_back(ck.compare(std::string(kind_name(kind)) + " closed vs brute", kind, bind(t, kind)));
    return {r};
}

std::vector<SuiteReport> inverse(const VerifyOptions& opt) {
    const auto ctx = field_of(opt);
    const VecFun f = VecFun::from_family(ctx, InverseFamily{});
    Checker ck(f, opt);
    SuiteReport r{"inverse", "inverse n=" + std::to_string(opt.n), false, {}, {}};
    if (opt.n % 2 == 0) {
        const InverseTables t(ctx);
        for (TableKind kind : {TableKind::FBCT, TableKind::EBCT, TableKind::LBCT, TableKind::UBCT})
            r.checks.push_back(ck.compare(std::string(kind_name(kind)) + " closed vs brute", kind, bind(t, kind)));
    } else {
        const ApnTables t(f);
        for (TableKind kind : {TableKind::EBCT, TableKind::LBCT, TableKind::UBCT})
            r.checks.push_back(ck.compare(std::string(kind_name(kind)) + " APN case table vs brute", kind, bind(t, kind)));
    }
    return {r};
}

std::vector<SuiteReport> delta(const VerifyOptions& opt) {
    const auto ctx = field_of(opt);
    const VecFun f = sbox_or(ctx, opt, "power:3");
    Checker ck(f, opt);
    SuiteReport r{"delta", describe(f.family()) + " n=" + std::to_string(opt.n), false, {}, {}};
    const DeltaUniformEngine eng(f, f.n() <= 10);
    for (TableKind kind : {TableKind::EBCT, TableKind::LBCT, TableKind::UBCT})
        r.checks.push_back(ck.compare(std::string(kind_name(kind)) + " delta-uniform rule vs brute", kind, bind(eng, kind)));
    auto matching = ck.compare("UBCT 4l matching rule vs brute", TableKind::UBCT, [&](std::span<const elem_t> i) {
        if (i[0] == 0 || i[1] == 0 || i[2] == 0) return eng.ubct(i[0], i[1], i[2]);
        return eng.ubct_matching_rule(i[0], i[1], i[2]);
    });
    matching.informational = true;
    matching.note = f.is_permutation() ? "agrees for permutations" : "undercounts some non-permutation entries";
    r.checks.push_back(std::move(matching));
    if (differential_uniformity(f) <= 4) {
        const FourUniformTables fu(f);
        for (TableKind kind : {TableKind::EBCT, TableKind::LBCT, TableKind::UBCT})
            r.checks.push_back(ck.compare(std::string(kind_name(kind)) + " 4-uniform case table vs brute", kind, bind(fu, kind)));
    }
    return {r};
}

// EBCT^2 = LBCT(a,c,d) UBCT(c,d,b) on nonzero tuples.
CheckResult e2lu_check(const VecFun& f, const Checker& ck, std::uint64_t seed) {
    const std::uint32_t q = f.size();
    Tally tally;
    if (ck.use_full(TableKind::EBCT)) {
        const Table3 lb = lbct_table(f), ub = ubct_table(f);
        parallel_for(q - 1, [&](std::size_t i, unsigned) {
            const elem_t a = static_cast<elem_t>(i + 1);
            std::vector<std::uint16_t> slice(std::size_t{q} * q);
            std::uint64_t bad = 0, checked = 0;
            std::string text;
            for (elem_t c = 1; c < q; ++c) {
                ebct_slice(f, a, c, slice);
                for (elem_t b = 1; b < q; ++b)
                    for (elem_t d = 1; d < q; ++d) {
                        ++checked;
                        const count_t e = slice[std::size_t{b} * q + d];
                        const count_t lu = count_t{lb.at(a, c, d)} * ub.at(c, d, b);
                        if (e * e != lu && bad++ == 0) text = mismatch_text({a, b, c, d}, 4, e * e, lu, "EBCT^2", "LBCT*UBCT");
                    }
            }
            tally.merge(checked, bad, a, std::move(text));
        });
        return tally.result("EBCT^2 = LBCT*UBCT on nonzero tuples", "full domain");
    }
    const std::uint64_t count = ck.samples();
    for (std::uint64_t i = 0; i < count; ++i) {
        CounterStream rng(seed, i);
        const Tuple t{static_cast<elem_t>(rng.nonzero_below(q)), static_cast<elem_t>(rng.nonzero_below(q)),
                      static_cast<elem_t>(rng.nonzero_below(q)), static_cast<elem_t>(rng.nonzero_below(q))};
        const count_t e = ebct_entry(f, t[0], t[1], t[2], t[3]);
        const count_t lu = lbct_entry(f, t[0], t[2], t[3]) * ubct_entry(f, t[2], t[3], t[1]);
        tally.merge(1, e * e != lu, i, mismatch_text(t, 4, e * e, lu, "EBCT^2", "LBCT*UBCT"));
    }
    return tally.result("EBCT^2 = LBCT*UBCT on nonzero tuples", std::to_string(count) + " seeded nonzero tuples");
}

std::vector<SuiteReport> apn(const VerifyOptions& opt) {
    const auto ctx = field_of(opt);
    const VecFun f = sbox_or(ctx, opt, "power:3");
    if (differential_uniformity(f) != 2) throw HypothesisError("apn suite needs an APN sbox (" + describe(f.family()) + " is not APN)");
    Checker ck(f, opt);
    const ApnTables t(f);
    SuiteReport r{"apn", describe(f.family()) + " n=" + std::to_string(opt.n), false, {}, {}};
    for (TableKind kind : {TableKind::EBCT, TableKind::LBCT, TableKind::UBCT})
        r.checks.push_back(ck.compare(std::string(kind_name(kind)) + " APN case table vs brute", kind, bind(t, kind)));
    r.checks.push_back(e2lu_check(f, ck, opt.seed));
    return {r};
}

std::string spectrum_diff_text(const SpectrumComparison& cmp) {
    std::string out;
    for (const auto& [v, cc] : cmp.differences) {
        if (!out.empty()) out += "; ";
        out += "value " + std::to_string(v) + ": " + std::to_string(cc.first) + " vs " + std::to_string(cc.second);
    }
    return out.empty() ? "spectra equal" : out;
}

std::vector<SuiteReport> equiv(const VerifyOptions& opt) {
    const auto ctx = field_of(opt);
    const SboxSpec spec = parse_sbox(opt.sbox ? *opt.sbox : std::string("power:3"));
    const VecFun f = resolve_sbox(ctx, spec);
    const int maps = param_int(opt, "maps").value_or(5);
    const std::uint64_t per_check = opt.budget == BudgetMode::automatic ? std::min<std::uint64_t>(opt.samples, 10000) : opt.samples;
    SuiteReport r{"equiv", describe(f.family()) + " n=" + std::to_string(opt.n), false, {}, {}};

    auto run_maps = [&](MapForm form, std::uint64_t seed_base) {
        for (TableKind kind : invariant_kinds(form)) {
            CheckResult agg{std::string(kind_name(kind)) + " entry invariance under " + std::string(form_name(form)) + " maps",
                            std::to_string(maps) + " maps x " + std::to_string(per_check) + " tuples", 0, 0, {}, false, {}};
            for (int m = 0; m < maps; ++m) {
                const auto map = random_affine(*ctx, form, seed_base + static_cast<std::uint64_t>(m));
                const auto g = apply_graph_transform(f, map);
                if (!g) throw Error("EA-form map was not admissible");
                const auto rep = invariance_check(f, *g, map, kind, per_check, opt.seed + static_cast<std::uint64_t>(m));
                agg.checked += rep.checked;
                agg.mismatches += rep.mismatches;
                if (rep.first && agg.first_counterexample.empty())
                    agg.first_counterexample = "map " + std::to_string(m) + " " +
                                               mismatch_text(rep.first->idx_f, arity(kind), rep.first->value_f, rep.first->value_g, "F", "G");
            }
            r.checks.push_back(std::move(agg));
        }
    };
    run_maps(MapForm::affine, opt.seed * 1000003);
    run_maps(MapForm::ea, opt.seed * 1000003 + 500);

    if (f.is_permutation()) {
        // (x, y) -> (A12 y, A21 x + A22 y): admissible for every permutation, never EA.
        CheckResult agg{"EBCT entry invariance under non-EA CCZ maps", std::to_string(maps) + " maps x " + std::to_string(per_check) + " tuples",
                        0, 0, {}, false, {}};
        for (int m = 0; m < maps; ++m) {
            const auto a = random_affine(*ctx, MapForm::affine, opt.seed * 7919 + static_cast<std::uint64_t>(m));
            const AffineMap2n map{BitMatrix::zero(opt.n), a.a11, a.a22, random_affine(*ctx, MapForm::general, opt.seed + static_cast<std::uint64_t>(m)).a22, a.c, a.d};
            const auto g = apply_graph_transform(f, map);
            if (!map.invertible() || !g) continue;
            const auto rep = invariance_check(f, *g, map, TableKind::EBCT, per_check, opt.seed + static_cast<std::uint64_t>(m));
            agg.checked += rep.checked;
            agg.mismatches += rep.mismatches;
            if (rep.first && agg.first_counterexample.empty())
                agg.first_counterexample = mismatch_text(rep.first->idx_f, 4, rep.first->value_f, rep.first->value_g, "F", "G");
        }
        r.checks.push_back(std::move(agg));
    }

    if (opt.n <= full_sweep_limit(TableKind::UBCT)) {
        // G = F + X is EA-equivalent to F; UBCT is not covered by the EA theorem.
        std::vector<elem_t> lut(f.lut().begin(), f.lut().end());
        for (elem_t x = 0; x < f.size(); ++x) lut[x] ^= x;
        const VecFun g = VecFun::from_lut(ctx, std::move(lut), ModifiedFamily{describe(f.family()), "plus X"});
        const auto cmp = compare_spectra(f, g, TableKind::UBCT, IndexFilter::all);
        r.checks.push_back({"UBCT spectrum of F vs F + X (EA pair)", "full domain", f.size() * std::uint64_t{f.size()} * f.size(), 0, {}, true,
                            spectrum_diff_text(cmp)});
    }

    if (spec.ccz5_partner) {
        const VecFun x9 = VecFun::from_family(ctx, PowerFamily{9});
        const auto e = compare_spectra(x9, f, TableKind::EBCT, IndexFilter::all);
        CheckResult ce{"EBCT spectrum of X^9 vs its CCZ partner", "full domain", e.f.domain_size, e.equal() ? 0u : 1u, {}, false, spectrum_diff_text(e)};
        if (!e.equal()) ce.first_counterexample = spectrum_diff_text(e);
        r.checks.push_back(std::move(ce));
        const auto u = compare_spectra(x9, f, TableKind::UBCT, IndexFilter::all);
        r.checks.push_back({"UBCT spectrum of X^9 vs its CCZ partner", "full domain", u.f.domain_size, 0, {}, true, spectrum_diff_text(u)});
    }
    return {r};
}

void sum_identity(Tally& tally, const Tuple& t, int k, count_t lhs, count_t rhs, std::uint64_t key) {
    tally.merge(1, lhs != rhs, key, mismatch_text(t, k, lhs, rhs, "lhs", "rhs"));
}

std::vector<SuiteReport> relations(const VerifyOptions& opt) {
    const auto ctx = field_of(opt);
    const VecFun f = sbox_or(ctx, opt, "power:3");
    const std::uint32_t q = f.size();
    SuiteReport r{"relations", describe(f.family()) + " n=" + std::to_string(opt.n), false, {}, {}};
    const bool full = opt.n <= kMaxMaterialize3 && opt.budget != BudgetMode::sampled;
    if (!full && opt.budget == BudgetMode::full)
        throw BudgetExceeded("relations full sweep needs n <= 8", full_sweep_cost(TableKind::UBCT, opt.n));

    if (full) {
        const Table2 ddt = ddt_table(f), fbct = fbct_table(f), bct = bct_table(f);
        const Table3 lb = lbct_table(f), ub = ubct_table(f), dd = dd_table(f);
        Tally s1, s2, s3, s4, s5;
        for (elem_t a = 0; a < q; ++a)
            for (elem_t b = 0; b < q; ++b) {
                count_t sum_l = 0, sum_u = 0;
                for (elem_t c = 0; c < q; ++c) {
                    sum_l += lb.at(a, b, c);
                    sum_u += ub.at(a, c, b);
                }
                sum_identity(s1, {a, b}, 2, sum_l, fbct.at(a, b), a * q + b);
                sum_identity(s2, {a, b}, 2, ub.at(a, b, b), ddt.at(a, b), a * q + b);
                sum_identity(s3, {a, b}, 2, lb.at(a, a, b), ddt.at(a, b), a * q + b);
                sum_identity(s4, {a, b}, 2, dd.at(a, b, 0), fbct.at(a, b), a * q + b);
                if (f.is_permutation()) sum_identity(s5, {a, b}, 2, sum_u, bct.at(a, b), a * q + b);
            }
        r.checks.push_back(s1.result("sum_c LBCT(a,b,c) = FBCT(a,b)", "all (a,b)"));
        r.checks.push_back(s2.result("UBCT(a,b,b) = DDT(a,b)", "all (a,b)"));
        r.checks.push_back(s3.result("LBCT(a,a,c) = DDT(a,c)", "all (a,c)"));
        r.checks.push_back(s4.result("DD(a,b,0) = FBCT(a,b)", "all (a,b)"));
        if (f.is_permutation()) r.checks.push_back(s5.result("sum_b UBCT(a,b,c) = BCT(a,c)", "all (a,c)"));
    } else {
        const std::uint64_t count = std::min<std::uint64_t>(opt.samples, 64);
        Tally s1, s2, s3, s4, s5;
        for (std::uint64_t i = 0; i < count; ++i) {
            CounterStream rng(opt.seed, i);
            const auto a = static_cast<elem_t>(rng.below(q)), b = static_cast<elem_t>(rng.below(q));
            count_t sum_l = 0, sum_u = 0;
            for (elem_t c = 0; c < q; ++c) {
                sum_l += lbct_entry(f, a, b, c);
                if (f.is_permutation()) sum_u += ubct_entry(f, a, c, b);
            }
            sum_identity(s1, {a, b}, 2, sum_l, fbct_entry(f, a, b), i);
            sum_identity(s2, {a, b}, 2, ubct_entry(f, a, b, b), ddt_entry(f, a, b), i);
            sum_identity(s3, {a, b}, 2, lbct_entry(f, a, a, b), ddt_entry(f, a, b), i);
            sum_identity(s4, {a, b}, 2, dd_entry(f, a, b, 0), fbct_entry(f, a, b), i);
            if (f.is_permutation()) sum_identity(s5, {a, b}, 2, sum_u, bct_entry(f, a, b), i);
        }
        const std::string dom = std::to_string(count) + " seeded pairs";
        r.checks.push_back(s1.result("sum_c LBCT(a,b,c) = FBCT(a,b)", dom));
        r.checks.push_back(s2.result("UBCT(a,b,b) = DDT(a,b)", dom));
        r.checks.push_back(s3.result("LBCT(a,a,c) = DDT(a,c)", dom));
        r.checks.push_back(s4.result("DD(a,b,0) = FBCT(a,b)", dom));
        if (f.is_permutation()) r.checks.push_back(s5.result("sum_b UBCT(a,b,c) = BCT(a,c)", dom));
    }

    if (f.is_permutation()) {
        const VecFun inv = compose_inverse(f);
        Checker ck(f, opt);
        r.checks.push_back(ck.compare("EBCT_F(a,b,c,d) = EBCT_{F^-1}(b,a,d,c)", TableKind::EBCT,
                                      [&](std::span<const elem_t> i) { return ebct_entry(inv, i[1], i[0], i[3], i[2]); }));
    } else {
        r.checks.push_back({"permutation-only identities", "-", 0, 0, {}, true, "skipped: not a permutation"});
    }
    return {r};
}

}  // namespace

void parse_budget(std::string_view text, VerifyOptions& opt) {
    if (text == "full") opt.budget = BudgetMode::full;
    else if (text == "auto") opt.budget = BudgetMode::automatic;
    else {
        opt.budget = BudgetMode::sampled;
        opt.samples = parse_u64(text, "budget");
        if (opt.samples == 0) throw ArgumentError("budget must be positive");
    }
}

std::map<std::string, std::string> parse_params(std::string_view text) {
    std::map<std::string, std::string> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const auto item = text.substr(pos, comma - pos);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size())
            throw ArgumentError("bad parameter '" + std::string(item) + "', expected key=value");
        out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
        pos = comma + 1;
    }
    return out;
}

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"gold", "kasami", "bracken", "inverse", "delta",
                                                "apn",  "equiv",  "relations", "all"};
    return names;
}

std::vector<SuiteReport> run_suite(std::string_view suite, const VerifyOptions& opt) {
    using Fn = std::vector<SuiteReport> (*)(const VerifyOptions&);
    static const std::vector<std::pair<std::string_view, Fn>> table{
        {"gold", gold}, {"kasami", kasami}, {"bracken", bracken}, {"inverse", inverse},
        {"delta", delta}, {"apn", apn}, {"equiv", equiv}, {"relations", relations}};
    if (suite == "all") {
        std::vector<SuiteReport> out;
        for (const auto& [name, fn] : table) {
            try {
                auto part = fn(opt);
                out.insert(out.end(), part.begin(), part.end());
            } catch (const HypothesisError& e) {
                out.push_back({std::string(name), "n=" + std::to_string(opt.n), true, e.what(), {}});
            } catch (const BudgetExceeded& e) {
                out.push_back({std::string(name), "n=" + std::to_string(opt.n), true, e.what(), {}});
            }
        }
        return out;
    }
    for (const auto& [name, fn] : table)
        if (name == suite) return fn(opt);
    throw ArgumentError("unknown suite '" + std::string(suite) + "'");
}

void write_report(std::ostream& out, const std::vector<SuiteReport>& reports) {
    bool all_pass = true;
    for (const auto& r : reports) {
        out << "suite " << r.suite << ": " << r.subject << "\n";
        if (r.skipped) {
            out << "  SKIP " << r.skip_reason << "\n";
            continue;
        }
        for (const auto& c : r.checks) {
            const char* tag = c.informational ? "INFO" : c.passed() ? "PASS" : "FAIL";
            out << "  " << tag << " " << c.name << " [" << c.domain << "] checked=" << c.checked
                << " mismatches=" << c.mismatches;
            if (!c.note.empty()) out << " (" << c.note << ")";
            out << "\n";
            if (!c.informational && !c.first_counterexample.empty())
                out << "       first counterexample " << c.first_counterexample << "\n";
        }
        all_pass = all_pass && r.passed();
    }
    out << "result: " << (all_pass ? "pass" : "fail") << "\n";
}

}  // namespace boomtab
