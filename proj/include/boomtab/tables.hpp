#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boomtab/vecfun.hpp"

namespace boomtab {

using count_t = std::uint64_t;

enum class TableKind { DDT, BCT, FBCT, DD, UBCT, LBCT, EBCT, DBCT };

inline constexpr std::array<TableKind, 8> kAllKinds = {
    TableKind::DDT, TableKind::BCT,  TableKind::FBCT, TableKind::DD,
    TableKind::UBCT, TableKind::LBCT, TableKind::EBCT, TableKind::DBCT};

int arity(TableKind kind);
std::string_view kind_name(TableKind kind);  // "DDT", "UBCT", ...
std::optional<TableKind> parse_kind(std::string_view text);  // case-insensitive
// Index coordinate names in order, e.g. {"a","b","c"}.
std::vector<std::string> index_names(TableKind kind);

// How UBCT/LBCT count solutions. distinct_x is the normative convention (X counted
// once if some Y works); pairs counts every (X, Y) and is excluded from all invariants.
enum class Counting { distinct_x, pairs };

// #{X : F(X+a)+F(X) = b}
count_t ddt_entry(const VecFun& f, elem_t a, elem_t b);
std::vector<count_t> ddt_row(const VecFun& f, elem_t a);
// #{(X,Y) : F(X)+F(Y) = b, F(X+a)+F(Y+a) = b}
count_t bct_entry(const VecFun& f, elem_t a, elem_t b);
// #{X : F(X+a+b)+F(X+b)+F(X+a)+F(X) = 0}
count_t fbct_entry(const VecFun& f, elem_t a, elem_t b);
// #{X : F(X+a+b)+F(X+b)+F(X+a)+F(X) = c}
count_t dd_entry(const VecFun& f, elem_t a, elem_t b, elem_t c);

// #{X : F(X)+F(X+a) = b and some Y has F(X)+F(Y) = c, F(X+a)+F(Y+a) = c}
count_t ubct_entry(const VecFun& f, elem_t a, elem_t b, elem_t c,
                   Counting counting = Counting::distinct_x);
// #{X : F(X)+F(X+b) = c, F(X+a)+F(X+a+b) = c}  (Y = X+b is forced)
count_t lbct_entry(const VecFun& f, elem_t a, elem_t b, elem_t c,
                   Counting counting = Counting::distinct_x);
// #{X : F(X)+F(X+a) = b, F(X)+F(X+c) = d, F(X+a+c)+F(X+a) = d}
count_t ebct_entry(const VecFun& f, elem_t a, elem_t b, elem_t c, elem_t d);
// EBCT(a, ., c, .) for fixed (a, c): counts[b * q + d]. counts must hold q * q entries.
void ebct_slice(const VecFun& f, elem_t a, elem_t c, std::vector<std::uint16_t>& counts);
// sum_{b,c} UBCT(a,b,c) LBCT(b,c,d), recomputed on the fly.
count_t dbct_entry(const VecFun& f, elem_t a, elem_t d);

// Inverse-based definitions, permutations only (DomainError otherwise).
count_t ubct_entry_via_inverse(const VecFun& f, elem_t a, elem_t b, elem_t c);
count_t lbct_entry_via_inverse(const VecFun& f, elem_t a, elem_t b, elem_t c);
count_t ebct_entry_via_inverse(const VecFun& f, elem_t a, elem_t b, elem_t c, elem_t d);

struct EntryQuery {
    TableKind kind;
    std::array<elem_t, 4> idx{};
};

// ArgumentError if an index is outside the field.
count_t entry(const VecFun& f, const EntryQuery& q);

// Row-major q x q table (q = 2^n), value at [x * q + y].
struct Table2 {
    TableKind kind;
    int n;
    std::vector<std::uint32_t> values;
    std::uint32_t at(elem_t x, elem_t y) const { return values[(std::size_t{x} << n) | y]; }
};

// Row-major q x q x q table; only materialized for n <= 8 so values fit 16 bits.
struct Table3 {
    TableKind kind;
    int n;
    std::vector<std::uint16_t> values;
    std::uint16_t at(elem_t x, elem_t y, elem_t z) const {
        return values[(((std::size_t{x} << n) | y) << n) | z];
    }
};

inline constexpr int kMaxMaterialize3 = 8;

Table2 ddt_table(const VecFun& f);
Table2 bct_table(const VecFun& f);
Table2 fbct_table(const VecFun& f);
Table3 dd_table(const VecFun& f);
Table3 ubct_table(const VecFun& f);
Table3 lbct_table(const VecFun& f);
// From materialized UBCT/LBCT when n <= 8, else entry by entry.
Table2 dbct_full(const VecFun& f);
Table2 dbct_from_tables(const Table3& ubct, const Table3& lbct);

count_t differential_uniformity(const VecFun& f);
count_t boomerang_uniformity(const VecFun& f);
count_t second_order_zero_uniformity(const VecFun& f);

}  // namespace boomtab
