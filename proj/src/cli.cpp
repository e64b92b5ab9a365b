#include "boomtab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "boomtab/dispatch.hpp"
#include "boomtab/errors.hpp"
#include "boomtab/reference.hpp"
#include "boomtab/spectrum.hpp"
#include "boomtab/verify.hpp"

namespace boomtab {

namespace {

constexpr const char* kFooter =
    "Index literals: hex (0x1f or 1f) or powers of the generator (g, g^k).\n"
    "Sbox: power:<d> gold:<s> kasami:<s> bracken:<s> inverse poly:<c0,c1,...> lut:@<path> gold-ccz5\n"
    "Exit codes: 0 success, 1 verification mismatch, 2 usage error,\n"
    "            3 hypothesis, configuration or budget error.\n"
    "BOOMTAB_THREADS sets the worker count; results do not depend on it.";

struct Common {
    int n = 0;
    std::string modulus;
    std::string generator;
    std::string sbox = "inverse";
    std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, Common& c, bool with_sbox = true) {
    cmd->add_option("--n", c.n, "field degree, 2..20")->required();
    cmd->add_option("--modulus", c.modulus, "hex modulus including the x^n bit (default: shipped primitive)");
    cmd->add_option("--generator", c.generator, "hex primitive element used for g^k (default: smallest)");
    if (with_sbox) cmd->add_option("--sbox", c.sbox, "function (default inverse)");
    cmd->add_option("--seed", c.seed, "seed for sampled tuples");
}

std::uint64_t parse_hex(const std::string& text, const char* what) {
    std::string_view t = text;
    if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) t.remove_prefix(2);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v, 16);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
        throw ArgumentError(std::string("bad ") + what + ": '" + text + "'");
    return v;
}

FieldPtr field_from(const Common& c) {
    std::optional<poly_t> m;
    std::optional<elem_t> g;
    if (!c.modulus.empty()) m = parse_hex(c.modulus, "modulus");
    if (!c.generator.empty()) g = static_cast<elem_t>(parse_hex(c.generator, "generator"));
    return make_field(c.n, m, g);
}

TableKind kind_from(const std::string& text) {
    auto k = parse_kind(text);
    if (!k) throw ArgumentError("unknown table kind '" + text + "'");
    return *k;
}

std::string hex(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
    return buf;
}

struct EntryArgs {
    Common c;
    std::string kind;
    std::string indices;
    std::string method = "brute";
    bool pairs = false;
};

int cmd_entry(const EntryArgs& a, std::ostream& out) {
    const auto ctx = field_from(a.c);
    const VecFun f = resolve_sbox(ctx, parse_sbox(a.c.sbox));
    const TableKind kind = kind_from(a.kind);
    const auto idx = parse_indices(*ctx, a.indices);
    if (static_cast<int>(idx.size()) != arity(kind))
        throw ArgumentError(std::string(kind_name(kind)) + " takes " + std::to_string(arity(kind)) + " indices, got " +
                            std::to_string(idx.size()));
    if (a.pairs && a.method != "brute") throw ArgumentError("--pairs applies to --method brute only");
    EntryQuery q{kind, {}};
    std::copy(idx.begin(), idx.end(), q.idx.begin());

    auto brute = [&] {
        if (a.pairs && kind == TableKind::UBCT) return ubct_entry(f, q.idx[0], q.idx[1], q.idx[2], Counting::pairs);
        if (a.pairs && kind == TableKind::LBCT) return lbct_entry(f, q.idx[0], q.idx[1], q.idx[2], Counting::pairs);
        return entry(f, q);
    };
    auto closed = [&] { return ClosedForm(f).entry(kind, idx); };

    if (a.method == "brute") {
        out << brute() << "\n";
        return kExitOk;
    }
    if (a.method == "closed") {
        out << closed() << "\n";
        return kExitOk;
    }
    const count_t c = closed();
    const count_t b = brute();
    out << "brute " << b << "\nclosed " << c << "\n" << (b == c ? "MATCH" : "MISMATCH") << "\n";
    return b == c ? kExitOk : kExitMismatch;
}

struct SpectrumArgs {
    Common c;
    std::string kind;
    std::string filter = "all";
    std::optional<std::uint64_t> sample;
    bool full = false;
    std::string out_file;
    std::string dump_file;
    bool nonzero_only = false;
};

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ArgumentError("cannot write " + path);
    return f;
}

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
    const auto ctx = field_from(a.c);
    const VecFun f = resolve_sbox(ctx, parse_sbox(a.c.sbox));
    const TableKind kind = kind_from(a.kind);
    IndexFilter filter;
    if (a.filter == "all") filter = IndexFilter::all;
    else if (a.filter == "nonzero") filter = IndexFilter::nonzero;
    else throw ArgumentError("--filter must be nonzero or all");
    if (a.full && a.sample) throw ArgumentError("--full and --sample are exclusive");
    for (const auto* p : {&a.out_file, &a.dump_file})
        if (!p->empty() && !ends_with(*p, ".csv") && !ends_with(*p, ".json"))
            throw ArgumentError("output file must end in .csv or .json: " + *p);

    std::optional<SampleSpec> sample;
    if (a.sample) sample = SampleSpec{*a.sample, a.c.seed};
    const Spectrum s = spectrum(f, kind, filter, sample);

    out << "kind " << kind_name(kind) << " n=" << f.n() << " modulus=" << hex(ctx->modulus())
        << " sbox=" << describe(f.family()) << "\n";
    out << "domain " << s.swept_domain << " (" << s.domain_size << " tuples)\n";
    out << "value count\n";
    for (const auto& [v, c] : s.histogram) out << v << " " << c << "\n";
    if (s.max_nontrivial) out << "max nontrivial " << *s.max_nontrivial << "\n";

    int code = kExitOk;
    if (kind == TableKind::DDT && !sample && filter == IndexFilter::all) {
        const Table2 t = ddt_table(f);
        const std::uint32_t q = f.size();
        bool rows = true, cols = true;
        for (elem_t x = 0; x < q; ++x) {
            std::uint64_t rs = 0, cs = 0;
            for (elem_t y = 0; y < q; ++y) {
                rs += t.at(x, y);
                cs += t.at(y, x);
            }
            rows = rows && rs == q;
            cols = cols && (x == 0 || cs == q);
        }
        out << "row sums " << (rows ? "all 2^n" : "VIOLATED") << "\n";
        if (f.is_permutation()) out << "column sums (b != 0) " << (cols ? "all 2^n" : "VIOLATED") << "\n";
        if (!rows || (f.is_permutation() && !cols)) code = kExitMismatch;
    }

    if (!a.out_file.empty()) {
        auto file = open_out(a.out_file);
        if (ends_with(a.out_file, ".csv")) write_spectrum_csv(file, s);
        else write_spectrum_json(file, s, ctx->modulus());
    }
    if (!a.dump_file.empty()) {
        auto file = open_out(a.dump_file);
        if (ends_with(a.dump_file, ".csv")) write_table_csv(file, f, kind, a.nonzero_only);
        else write_table_json(file, f, kind, a.nonzero_only);
    }
    return code;
}

struct VerifyArgs {
    Common c;
    std::string suite;
    std::string params;
    std::string budget = "auto";
    bool sbox_given = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    VerifyOptions opt;
    opt.n = a.c.n;
    if (!a.c.modulus.empty()) opt.modulus = parse_hex(a.c.modulus, "modulus");
    if (!a.c.generator.empty()) opt.generator = static_cast<elem_t>(parse_hex(a.c.generator, "generator"));
    opt.params = parse_params(a.params);
    parse_budget(a.budget, opt);
    if (a.sbox_given) opt.sbox = a.c.sbox;
    opt.seed = a.c.seed;
    (void)make_field(opt.n, opt.modulus, opt.generator);
    const auto reports = run_suite(a.suite, opt);
    write_report(out, reports);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });
    return ok ? kExitOk : kExitMismatch;
}

int cmd_find_representation(int n, const std::string& table, std::ostream& out) {
    write_search_report(out, find_representation(table, n));
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boomerang table toolkit for functions over GF(2^n)", "boomtab"};
    app.footer(kFooter);
    app.require_subcommand(1);

    EntryArgs ea;
    auto* entry_cmd = app.add_subcommand("entry", "compute one table entry");
    add_common(entry_cmd, ea.c);
    entry_cmd->add_option("--kind", ea.kind, "DDT BCT FBCT DD UBCT LBCT EBCT DBCT")->required();
    entry_cmd->add_option("--indices", ea.indices, "comma-separated a[,b[,c[,d]]]")->required();
    entry_cmd->add_option("--method", ea.method, "brute, closed or both")
        ->check(CLI::IsMember({"brute", "closed", "both"}));
    entry_cmd->add_flag("--pairs", ea.pairs, "count (X,Y) pairs for UBCT/LBCT instead of distinct X");

    SpectrumArgs sa;
    std::uint64_t sample_count = 0;
    auto* spec_cmd = app.add_subcommand("spectrum", "histogram of a table over its index space");
    add_common(spec_cmd, sa.c);
    spec_cmd->add_option("--kind", sa.kind, "table kind")->required();
    spec_cmd->add_option("--filter", sa.filter, "nonzero or all (default all)");
    auto* sample_opt = spec_cmd->add_option("--sample", sample_count, "number of uniformly drawn tuples");
    spec_cmd->add_flag("--full", sa.full, "sweep every tuple (default)");
    spec_cmd->add_option("--out", sa.out_file, "write the histogram to .csv or .json");
    spec_cmd->add_option("--dump", sa.dump_file, "write every entry to .csv or .json");
    spec_cmd->add_flag("--nonzero-only", sa.nonzero_only, "with --dump, skip zero entries");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "check closed forms and identities against brute force");
    add_common(verify_cmd, va.c);
    verify_cmd->add_option("--suite", va.suite, "gold kasami bracken inverse delta apn equiv relations all")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--params", va.params, "key=value list, e.g. s=2 or maps=20");
    verify_cmd->add_option("--budget", va.budget, "full, auto, or tuples per check");

    int rep_n = 0;
    std::string rep_table;
    auto* rep_cmd = app.add_subcommand("find-representation", "search (modulus, g) reproducing a published table block");
    rep_cmd->add_option("--n", rep_n, "field degree, at most 10")->required();
    rep_cmd->add_option("--table", rep_table, "paper2 paper3 paper4 paper5 x11")
        ->required()
        ->check(CLI::IsMember(reference_table_names()));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*entry_cmd) return cmd_entry(ea, out);
        if (*spec_cmd) {
            if (*sample_opt) sa.sample = sample_count;
            return cmd_spectrum(sa, out);
        }
        if (*verify_cmd) {
            va.sbox_given = verify_cmd->count("--sbox") > 0;
            return cmd_verify(va, out);
        }
        if (*rep_cmd) return cmd_find_representation(rep_n, rep_table, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitUsage;
}

}  // namespace boomtab
