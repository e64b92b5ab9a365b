#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "boomtab/tables.hpp"

namespace boomtab {

enum class IndexFilter { all, nonzero };

struct SampleSpec {
    std::uint64_t count;
    std::uint64_t seed;
};

struct Spectrum {
    TableKind kind;
    int n;
    IndexFilter filter;
    std::map<count_t, std::uint64_t> histogram;  // value -> number of tuples
    std::string swept_domain;
    std::uint64_t domain_size = 0;
    std::optional<SampleSpec> sample;
    // Max over the kind's nontrivial tuples (DDT a!=0; BCT a,b!=0; FBCT a!=b, ab!=0;
    // otherwise all indices nonzero) among the swept ones.
    std::optional<count_t> max_nontrivial;

    std::uint64_t count_of(count_t value) const {
        auto it = histogram.find(value);
        return it == histogram.end() ? 0 : it->second;
    }
};

bool is_nontrivial_tuple(TableKind kind, std::span<const elem_t> idx);

// Largest n allowed for a full sweep of this kind.
int full_sweep_limit(TableKind kind);
// Index-space size times inner-loop length, the figure quoted on refusal.
double full_sweep_cost(TableKind kind, int n);

// Full sweep when sample is absent (BudgetExceeded past the limit), else sample->count
// tuples drawn uniformly from the filtered index space with the counter-based generator.
Spectrum spectrum(const VecFun& f, TableKind kind, IndexFilter filter,
                  std::optional<SampleSpec> sample = std::nullopt);

// CSV: header "value,count", rows ascending by value.
void write_spectrum_csv(std::ostream& out, const Spectrum& s);
// JSON: {"kind","n","modulus","indices_order","swept_domain","histogram":[[value,count],...]}
void write_spectrum_json(std::ostream& out, const Spectrum& s, poly_t modulus);

// Full-table export of every entry (or only nonzero ones), lexicographic index order.
// CSV header names the index coordinates then "value".
void write_table_csv(std::ostream& out, const VecFun& f, TableKind kind, bool nonzero_only);
// JSON: {"kind","n","modulus","indices_order","entries":[[i1,..,value],...]}
void write_table_json(std::ostream& out, const VecFun& f, TableKind kind, bool nonzero_only);

}  // namespace boomtab
