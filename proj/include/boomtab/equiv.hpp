#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "boomtab/spectrum.hpp"

namespace boomtab {

// n x n matrix over GF(2). rows[i] holds row i; output bit i of M x is parity(rows[i] & x).
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {}
    BitMatrix(int n, std::vector<elem_t> rows);

    static BitMatrix identity(int n);
    static BitMatrix zero(int n) { return BitMatrix(n); }

    int n() const { return n_; }
    const std::vector<elem_t>& rows() const { return rows_; }
    elem_t row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    void set_row(int i, elem_t bits) { rows_[static_cast<std::size_t>(i)] = bits; }

    elem_t apply(elem_t x) const;
    bool is_zero() const;
    int rank() const;
    bool invertible() const { return rank() == n_; }

    bool operator==(const BitMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<elem_t> rows_;
};

enum class MapForm { general, ea, affine };

std::string_view form_name(MapForm form);
std::optional<MapForm> parse_form(std::string_view text);

// (x, y) -> (A11 x + A12 y + C, A21 x + A22 y + D)
struct AffineMap2n {
    BitMatrix a11, a12, a21, a22;
    elem_t c = 0;
    elem_t d = 0;

    int n() const { return a11.n(); }
    // Most specific form the blocks satisfy.
    MapForm form() const;
    bool satisfies(MapForm form) const;
    // Rank of the full 2n x 2n matrix is 2n.
    bool invertible() const;
    std::pair<elem_t, elem_t> apply(elem_t x, elem_t y) const;

    static AffineMap2n identity(int n);

    bool operator==(const AffineMap2n&) const = default;
};

// Rejection-samples blocks (zeroing those the form forbids) until the 2n x 2n matrix
// is invertible. Deterministic in seed. Error after 10^4 attempts.
AffineMap2n random_affine(const FieldCtx& ctx, MapForm form, std::uint64_t seed);

// G with graph {map(x, F(x))}, or nullopt when x -> A11 x + A12 F(x) + C is not a bijection.
std::optional<VecFun> apply_graph_transform(const VecFun& f, const AffineMap2n& map);

// Index tuple of G matching tuple idx of F. ContractError unless the map form meets the
// kind's hypothesis: EBCT any, LBCT EA, UBCT affine. Other kinds are rejected.
std::array<elem_t, 4> predicted_indices(const AffineMap2n& map, TableKind kind,
                                        const std::array<elem_t, 4>& idx);

// Kinds whose entries predicted_indices transports under this form.
std::vector<TableKind> invariant_kinds(MapForm form);

struct InvarianceReport {
    TableKind kind;
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    struct Counterexample {
        std::array<elem_t, 4> idx_f;
        std::array<elem_t, 4> idx_g;
        count_t value_f;
        count_t value_g;
    };
    std::optional<Counterexample> first;
    bool passed() const { return mismatches == 0; }
};

// Compares table_F(t) with table_G(predicted(t)) on `budget` tuples from sample_tuple.
InvarianceReport invariance_check(const VecFun& f, const VecFun& g, const AffineMap2n& map,
                                  TableKind kind, std::uint64_t budget, std::uint64_t seed);

struct SpectrumComparison {
    Spectrum f;
    Spectrum g;
    // Values whose counts differ, with (count_f, count_g).
    std::vector<std::pair<count_t, std::pair<std::uint64_t, std::uint64_t>>> differences;
    bool equal() const { return differences.empty(); }
};

// Full-sweep histograms of both functions over the same filter.
SpectrumComparison compare_spectra(const VecFun& f, const VecFun& g, TableKind kind, IndexFilter filter);

// {"n":..,"a11":["0x..",..],..,"c":"0x..","d":"0x.."}
std::string affine_map_to_json(const AffineMap2n& map);
AffineMap2n affine_map_from_json(const std::string& text);

}  // namespace boomtab
