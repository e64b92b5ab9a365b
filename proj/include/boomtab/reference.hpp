#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boomtab/tables.hpp"

namespace boomtab {

// How the last index of a reference row is bound when the published row leaves it open.
enum class Binding { fixed, for_all, exists };

// One published value. Indices are powers of the generator g.
struct ReferenceRow {
    Family function;
    TableKind kind;
    std::array<std::uint32_t, 4> exponents{};
    Binding last = Binding::fixed;
    count_t expected = 0;

    std::string label() const;
};

struct ReferenceBlock {
    std::string table;
    int n;
    std::vector<ReferenceRow> rows;
};

// Known table names: paper2, paper3, paper4, paper5, x11.
const std::vector<std::string>& reference_table_names();
// All blocks of the named table at degree n (empty when the table has no rows at n).
// ArgumentError for an unknown table name.
std::vector<ReferenceRow> reference_rows(std::string_view table, int n);
// Degrees with rows for the named table.
std::vector<int> reference_degrees(std::string_view table);

// Entry value of a row under the field (quantifier applied). Brute force.
bool row_holds(const FieldPtr& ctx, const ReferenceRow& row, count_t* observed = nullptr);

struct RowOutcome {
    ReferenceRow row;
    std::uint64_t representations_matching = 0;
    // Observed value -> number of representations producing it (fixed rows only).
    std::vector<std::pair<count_t, std::uint64_t>> observed;
};

struct RepresentationSearch {
    std::string table;
    int n = 0;
    std::uint64_t representations = 0;  // distinct up to the minimal polynomial of g
    std::optional<Representation> located;
    std::optional<Representation> best;
    std::size_t best_rows_matched = 0;
    std::vector<RowOutcome> rows;
};

// Visits every (modulus, generator) pair in enumeration order, skipping generators whose
// minimal polynomial was already seen. located is the first one reproducing every row.
// ArgumentError for unknown tables or n > 10.
RepresentationSearch find_representation(std::string_view table, int n);

void write_search_report(std::ostream& out, const RepresentationSearch& s);

}  // namespace boomtab
