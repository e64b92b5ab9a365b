#include "boomtab/reference.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>

#include "boomtab/errors.hpp"

namespace boomtab {

namespace {

using E = std::array<std::uint32_t, 4>;

ReferenceRow row(Family f, TableKind kind, E exps, count_t expected, Binding last = Binding::fixed) {
    return {std::move(f), kind, exps, last, expected};
}

// EBCT/LBCT/UBCT triple for one published line; the EBCT last index follows `last`.
void triple(std::vector<ReferenceRow>& out, Family f, E abcd, Binding last, count_t e, count_t l, count_t u) {
    out.push_back(row(f, TableKind::EBCT, abcd, e, last));
    out.push_back(row(f, TableKind::LBCT, {abcd[0], abcd[1], abcd[2], 0}, l));
    out.push_back(row(f, TableKind::UBCT, {abcd[0], abcd[1], abcd[2], 0}, u));
}

struct Block {
    const char* table;
    int n;
    std::vector<ReferenceRow> rows;
};

const std::vector<Block>& blocks() {
    static const std::vector<Block> all = [] {
        std::vector<Block> b;
        const auto any = Binding::for_all;
        const auto some = Binding::exists;
        const auto fixed = Binding::fixed;
        {
            Block k{"paper2", 6, {}};
            triple(k.rows, GoldFamily{2}, {44, 23, 16, 0}, any, 0, 4, 0);
            triple(k.rows, GoldFamily{2}, {2, 26, 53, 0}, any, 0, 0, 4);
            triple(k.rows, GoldFamily{2}, {44, 8, 23, 16}, fixed, 4, 0, 0);
            b.push_back(std::move(k));
        }
        {
            Block k{"paper2", 10, {}};
            triple(k.rows, GoldFamily{6}, {351, 692, 2, 0}, any, 0, 0, 0);
            triple(k.rows, GoldFamily{4}, {2, 359, 11, 0}, any, 0, 0, 4);
            triple(k.rows, GoldFamily{4}, {684, 11, 2, 359}, fixed, 4, 0, 0);
            b.push_back(std::move(k));
        }
        {
            Block k{"paper3", 10, {}};
            triple(k.rows, KasamiFamily{2}, {6, 1, 605, 0}, any, 0, 0, 4);
            triple(k.rows, KasamiFamily{6}, {5, 1, 774, 0}, any, 0, 0, 0);
            triple(k.rows, KasamiFamily{2}, {401, 605, 6, 1}, fixed, 4, 0, 0);
            triple(k.rows, KasamiFamily{6}, {84, 24, 2, 0}, any, 0, 4, 0);
            b.push_back(std::move(k));
        }
        {
            Block k{"paper4", 8, {}};
            triple(k.rows, BrackenFamily{2}, {1, 1, 1, 0}, some, 2, 2, 2);
            triple(k.rows, BrackenFamily{2}, {71, 3, 32, 0}, some, 0, 4, 0);
            triple(k.rows, BrackenFamily{2}, {54, 37, 26, 0}, some, 0, 4, 0);
            triple(k.rows, BrackenFamily{2}, {70, 3, 103, 0}, some, 0, 0, 4);
            triple(k.rows, BrackenFamily{2}, {36, 103, 70, 3}, fixed, 4, 0, 0);
            b.push_back(std::move(k));
        }
        {
            Block k{"paper5", 6, {}};
            k.rows.push_back(row(GoldFamily{2}, TableKind::DBCT, {25, 22, 0, 0}, 160));
            k.rows.push_back(row(GoldFamily{2}, TableKind::DBCT, {63, 56, 0, 0}, 64));
            b.push_back(std::move(k));
        }
        {
            Block k{"paper5", 10, {}};
            k.rows.push_back(row(GoldFamily{2}, TableKind::DBCT, {4, 186, 0, 0}, 1024));
            k.rows.push_back(row(GoldFamily{4}, TableKind::DBCT, {2, 868, 0, 0}, 1024));
            b.push_back(std::move(k));
        }
        {
            Block k{"x11", 6, {}};
            const Family f = PowerFamily{11};
            k.rows.push_back(row(f, TableKind::DDT, {1, 11, 0, 0}, 10));
            k.rows.push_back(row(f, TableKind::EBCT, {55, 38, 1, 11}, 8));
            k.rows.push_back(row(f, TableKind::EBCT, {19, 20, 1, 11}, 8));
            k.rows.push_back(row(f, TableKind::DDT, {38, 1, 0, 0}, 2));
            k.rows.push_back(row(f, TableKind::LBCT, {55, 38, 1, 0}, 0));
            k.rows.push_back(row(f, TableKind::DDT, {55, 38, 0, 0}, 10));
            k.rows.push_back(row(f, TableKind::UBCT, {55, 38, 1, 0}, 0));
            b.push_back(std::move(k));
        }
        return b;
    }();
    return all;
}

void require_table(std::string_view table) {
    const auto& names = reference_table_names();
    if (std::find(names.begin(), names.end(), table) == names.end())
        throw ArgumentError("unknown reference table: " + std::string(table));
}

std::string rep_string(const Representation& r) {
    return "modulus=0x" + [&] {
        char buf[24];
        std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(r.modulus));
        return std::string(buf);
    }() + " generator=0x" + [&] {
        char buf[24];
        std::snprintf(buf, sizeof buf, "%x", r.generator);
        return std::string(buf);
    }();
}

}  // namespace

std::string ReferenceRow::label() const {
    std::string out = describe(function) + " " + std::string(kind_name(kind)) + "(";
    const int k = arity(kind);
    for (int i = 0; i < k; ++i) {
        if (i) out += ",";
        if (i == k - 1 && last == Binding::for_all) out += "any d";
        else if (i == k - 1 && last == Binding::exists) out += "some d";
        else out += "g^" + std::to_string(exponents[static_cast<std::size_t>(i)]);
    }
    return out + ") = " + std::to_string(expected);
}

const std::vector<std::string>& reference_table_names() {
    static const std::vector<std::string> names{"paper2", "paper3", "paper4", "paper5", "x11"};
    return names;
}

std::vector<ReferenceRow> reference_rows(std::string_view table, int n) {
    require_table(table);
    for (const auto& b : blocks())
        if (b.table == table && b.n == n) return b.rows;
    return {};
}

std::vector<int> reference_degrees(std::string_view table) {
    require_table(table);
    std::vector<int> out;
    for (const auto& b : blocks())
        if (b.table == table) out.push_back(b.n);
    return out;
}

bool row_holds(const FieldPtr& ctx, const ReferenceRow& r, count_t* observed) {
    const VecFun f = VecFun::from_family(ctx, r.function);
    EntryQuery q{r.kind, {}};
    const int k = arity(r.kind);
    for (int i = 0; i < k; ++i) q.idx[static_cast<std::size_t>(i)] = ctx->gpow(r.exponents[static_cast<std::size_t>(i)]);
    if (r.last == Binding::fixed) {
        const count_t v = entry(f, q);
        if (observed) *observed = v;
        return v == r.expected;
    }
    const std::size_t li = static_cast<std::size_t>(k - 1);
    for (elem_t d = 0; d < ctx->size(); ++d) {
        q.idx[li] = d;
        const bool hit = entry(f, q) == r.expected;
        if (r.last == Binding::for_all && !hit) return false;
        if (r.last == Binding::exists && hit) return true;
    }
    return r.last == Binding::for_all;
}

RepresentationSearch find_representation(std::string_view table, int n) {
    require_table(table);
    if (n > 10) throw ArgumentError("representation search supports n <= 10");
    RepresentationSearch s;
    s.table = std::string(table);
    s.n = n;
    const auto rows = reference_rows(table, n);
    for (const auto& r : rows) s.rows.push_back({r, 0, {}});
    if (rows.empty()) return s;

    std::vector<std::map<count_t, std::uint64_t>> seen_values(rows.size());
    std::set<poly_t> seen_minpoly;
    std::map<poly_t, FieldPtr> by_modulus;
    enumerate_primitive_representations(n, [&](const Representation& rep) {
        auto& base = by_modulus[rep.modulus];
        if (!base) base = make_field(n, rep.modulus);
        if (!seen_minpoly.insert(minimal_polynomial(*base, rep.generator)).second) return true;
        ++s.representations;
        const FieldPtr ctx = make_field(n, rep.modulus, rep.generator);
        std::size_t matched = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            count_t v = 0;
            const bool ok = row_holds(ctx, rows[i], &v);
            if (rows[i].last == Binding::fixed) ++seen_values[i][v];
            if (ok) {
                ++matched;
                ++s.rows[i].representations_matching;
            }
        }
        if (matched > s.best_rows_matched || !s.best) {
            s.best_rows_matched = matched;
            s.best = rep;
        }
        if (matched == rows.size() && !s.located) s.located = rep;
        return true;
    });
    for (std::size_t i = 0; i < rows.size(); ++i)
        s.rows[i].observed.assign(seen_values[i].begin(), seen_values[i].end());
    return s;
}

void write_search_report(std::ostream& out, const RepresentationSearch& s) {
    out << "table: " << s.table << "\n";
    out << "n: " << s.n << "\n";
    out << "representations: " << s.representations << "\n";
    if (s.rows.empty()) {
        out << "status: no rows at this n\n";
        return;
    }
    if (s.located) {
        out << "status: located\n";
        out << "witness: " << rep_string(*s.located) << "\n";
    } else {
        out << "status: not located\n";
        if (s.best) out << "best: " << rep_string(*s.best) << " rows_matched=" << s.best_rows_matched << "/" << s.rows.size() << "\n";
    }
    for (const auto& r : s.rows) {
        out << "row: " << r.row.label() << " matching=" << r.representations_matching << "/" << s.representations;
        if (!r.observed.empty()) {
            out << " observed=";
            bool first = true;
            for (const auto& [v, c] : r.observed) {
                out << (first ? "" : ",") << v << "x" << c;
                first = false;
            }
        }
        if (r.representations_matching == 0) out << " unreachable";
        out << "\n";
    }
}

}  // namespace boomtab
