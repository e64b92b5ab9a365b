#include "boomtab/spectrum.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "boomtab/errors.hpp"
#include "boomtab/parallel.hpp"
#include "boomtab/rng.hpp"

namespace boomtab {

bool is_nontrivial_tuple(TableKind kind, std::span<const elem_t> idx) {
    switch (kind) {
        case TableKind::DDT: return idx[0] != 0;
        case TableKind::BCT: return idx[0] != 0 && idx[1] != 0;
        case TableKind::FBCT: return idx[0] != 0 && idx[1] != 0 && idx[0] != idx[1];
        default:
            for (elem_t v : idx)
                if (v == 0) return false;
            return true;
    }
}

int full_sweep_limit(TableKind kind) {
    switch (kind) {
        case TableKind::DDT:
        case TableKind::BCT:
        case TableKind::FBCT: return 12;
        case TableKind::DD:
        case TableKind::UBCT:
        case TableKind::LBCT:
        case TableKind::DBCT: return 8;
        case TableKind::EBCT: return 6;
    }
    return 0;
}

double full_sweep_cost(TableKind kind, int n) {
    return std::ldexp(1.0, n * (arity(kind) + 1));
}

namespace {

struct Accumulator {
    std::vector<std::uint64_t> hist;  // value -> count, grown on demand
    std::optional<count_t> max_nt;
    std::uint64_t swept = 0;

    void add(count_t v, bool nontrivial) {
        if (v >= hist.size()) hist.resize(v + 1, 0);
        ++hist[v];
        ++swept;
        if (nontrivial && (!max_nt || v > *max_nt)) max_nt = v;
    }
    void merge_into(Spectrum& s) const {
        for (std::size_t v = 0; v < hist.size(); ++v)
            if (hist[v]) s.histogram[v] += hist[v];
        s.domain_size += swept;
        if (max_nt && (!s.max_nontrivial || *max_nt > *s.max_nontrivial)) s.max_nontrivial = max_nt;
    }
};

bool passes(IndexFilter filter, std::span<const elem_t> idx) {
    if (filter == IndexFilter::all) return true;
    for (elem_t v : idx)
        if (v == 0) return false;
    return true;
}

std::string domain_text(TableKind kind, IndexFilter filter, const std::optional<SampleSpec>& sample) {
    std::ostringstream os;
    if (sample)
        os << "sampled(count=" << sample->count << ", seed=" << sample->seed << ", ";
    else
        os << "full(";
    os << (filter == IndexFilter::all ? "all" : "nonzero") << " indices " << kind_name(kind) << ")";
    return os.str();
}

void check_budget(const VecFun& f, TableKind kind) {
    if (f.n() <= full_sweep_limit(kind)) return;
    std::ostringstream os;
    os << kind_name(kind) << " full sweep at n=" << f.n() << " needs about "
       << full_sweep_cost(kind, f.n()) << " operations; full sweeps are limited to n <= "
       << full_sweep_limit(kind) << ", use sampling";
    throw BudgetExceeded(os.str(), full_sweep_cost(kind, f.n()));
}

Table2 table2(const VecFun& f, TableKind kind) {
    switch (kind) {
        case TableKind::DDT: return ddt_table(f);
        case TableKind::BCT: return bct_table(f);
        case TableKind::FBCT: return fbct_table(f);
        default: return dbct_full(f);
    }
}

Table3 table3(const VecFun& f, TableKind kind) {
    switch (kind) {
        case TableKind::DD: return dd_table(f);
        case TableKind::UBCT: return ubct_table(f);
        default: return lbct_table(f);
    }
}

// Lexicographic visit of every entry; used for export.
void visit_all(const VecFun& f, TableKind kind,
               const std::function<void(std::span<const elem_t>, count_t)>& fn) {
    check_budget(f, kind);
    const std::uint32_t q = f.size();
    std::array<elem_t, 4> idx{};
    const int ar = arity(kind);
    if (ar == 2) {
        const auto t = table2(f, kind);
        for (idx[0] = 0; idx[0] < q; ++idx[0])
            for (idx[1] = 0; idx[1] < q; ++idx[1]) fn({idx.data(), 2}, t.at(idx[0], idx[1]));
    } else if (ar == 3) {
        const auto t = table3(f, kind);
        for (idx[0] = 0; idx[0] < q; ++idx[0])
            for (idx[1] = 0; idx[1] < q; ++idx[1])
                for (idx[2] = 0; idx[2] < q; ++idx[2])
                    fn({idx.data(), 3}, t.at(idx[0], idx[1], idx[2]));
    } else {
        std::vector<std::vector<std::uint16_t>> slices(q, std::vector<std::uint16_t>(std::size_t{q} * q));
        for (idx[0] = 0; idx[0] < q; ++idx[0]) {
            for (elem_t c = 0; c < q; ++c) ebct_slice(f, idx[0], c, slices[c]);
            for (idx[1] = 0; idx[1] < q; ++idx[1])
                for (idx[2] = 0; idx[2] < q; ++idx[2])
                    for (idx[3] = 0; idx[3] < q; ++idx[3])
                        fn({idx.data(), 4}, slices[idx[2]][std::size_t{idx[1]} * q + idx[3]]);
        }
    }
}

}  // namespace

Spectrum spectrum(const VecFun& f, TableKind kind, IndexFilter filter,
                  std::optional<SampleSpec> sample) {
    Spectrum s{kind, f.n(), filter, {}, domain_text(kind, filter, sample), 0, sample, std::nullopt};
    const std::uint32_t q = f.size();
    const int ar = arity(kind);
    const unsigned workers = worker_count();
    std::vector<Accumulator> acc(workers);

    if (sample) {
        std::vector<count_t> values(sample->count);
        std::vector<std::uint8_t> nontrivial(sample->count);
        parallel_for(sample->count, [&](std::size_t i, unsigned) {
            CounterStream rng(sample->seed, i);
            EntryQuery query{kind, {}};
            for (int k = 0; k < ar; ++k)
                query.idx[k] = static_cast<elem_t>(filter == IndexFilter::nonzero ? rng.nonzero_below(q)
                                                                                  : rng.below(q));
            values[i] = entry(f, query);
            nontrivial[i] = is_nontrivial_tuple(kind, {query.idx.data(), static_cast<std::size_t>(ar)});
        });
        Accumulator all;
        for (std::size_t i = 0; i < values.size(); ++i) all.add(values[i], nontrivial[i]);
        all.merge_into(s);
        return s;
    }

    check_budget(f, kind);
    if (ar == 2) {
        const auto t = table2(f, kind);
        parallel_for(q, [&](std::size_t a, unsigned w) {
            std::array<elem_t, 2> idx{static_cast<elem_t>(a), 0};
            for (idx[1] = 0; idx[1] < q; ++idx[1])
                if (passes(filter, idx)) acc[w].add(t.at(idx[0], idx[1]), is_nontrivial_tuple(kind, idx));
        });
    } else if (ar == 3) {
        const auto t = table3(f, kind);
        parallel_for(q, [&](std::size_t a, unsigned w) {
            std::array<elem_t, 3> idx{static_cast<elem_t>(a), 0, 0};
            for (idx[1] = 0; idx[1] < q; ++idx[1])
                for (idx[2] = 0; idx[2] < q; ++idx[2])
                    if (passes(filter, idx))
                        acc[w].add(t.at(idx[0], idx[1], idx[2]), is_nontrivial_tuple(kind, idx));
        });
    } else {
        std::vector<std::vector<std::uint16_t>> scratch(workers,
                                                        std::vector<std::uint16_t>(std::size_t{q} * q));
        parallel_for(std::size_t{q} * q, [&](std::size_t ac, unsigned w) {
            const auto a = static_cast<elem_t>(ac / q);
            const auto c = static_cast<elem_t>(ac % q);
            ebct_slice(f, a, c, scratch[w]);
            std::array<elem_t, 4> idx{a, 0, c, 0};
            for (idx[1] = 0; idx[1] < q; ++idx[1])
                for (idx[3] = 0; idx[3] < q; ++idx[3])
                    if (passes(filter, idx))
                        acc[w].add(scratch[w][std::size_t{idx[1]} * q + idx[3]],
                                   is_nontrivial_tuple(kind, idx));
        });
    }
    for (const auto& a : acc) a.merge_into(s);
    return s;
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
    out << "value,count\n";
    for (const auto& [v, c] : s.histogram) out << v << "," << c << "\n";
}

namespace {

std::string hex_string(std::uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

}  // namespace

void write_spectrum_json(std::ostream& out, const Spectrum& s, poly_t modulus) {
    nlohmann::ordered_json j;
    j["kind"] = std::string(kind_name(s.kind));
    j["n"] = s.n;
    j["modulus"] = hex_string(modulus);
    j["indices_order"] = index_names(s.kind);
    j["swept_domain"] = s.swept_domain;
    j["domain_size"] = s.domain_size;
    if (s.max_nontrivial) j["max_nontrivial"] = *s.max_nontrivial;
    auto hist = nlohmann::ordered_json::array();
    for (const auto& [v, c] : s.histogram) hist.push_back({v, c});
    j["histogram"] = hist;
    out << j.dump(2) << "\n";
}

void write_table_csv(std::ostream& out, const VecFun& f, TableKind kind, bool nonzero_only) {
    for (const auto& name : index_names(kind)) out << name << ",";
    out << "value\n";
    visit_all(f, kind, [&](std::span<const elem_t> idx, count_t v) {
        if (nonzero_only && v == 0) return;
        for (elem_t x : idx) out << x << ",";
        out << v << "\n";
    });
}

void write_table_json(std::ostream& out, const VecFun& f, TableKind kind, bool nonzero_only) {
    nlohmann::ordered_json j;
    j["kind"] = std::string(kind_name(kind));
    j["n"] = f.n();
    j["modulus"] = hex_string(f.field().modulus());
    j["indices_order"] = index_names(kind);
    auto entries = nlohmann::ordered_json::array();
    visit_all(f, kind, [&](std::span<const elem_t> idx, count_t v) {
        if (nonzero_only && v == 0) return;
        auto row = nlohmann::ordered_json::array();
        for (elem_t x : idx) row.push_back(x);
        row.push_back(v);
        entries.push_back(std::move(row));
    });
    j["entries"] = entries;
    out << j.dump() << "\n";
}

}  // namespace boomtab
