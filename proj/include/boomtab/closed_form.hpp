#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "boomtab/tables.hpp"

namespace boomtab {

// Roots of F(X+a)+F(X) = b, stored as representatives x_i < x_i + a (ascending).
struct SolutionSet {
    elem_t direction = 0;
    elem_t target = 0;
    std::vector<elem_t> representatives;

    std::size_t k() const { return representatives.size(); }
    std::size_t size() const { return 2 * representatives.size(); }
    std::vector<elem_t> roots() const;
};

// ArgumentError when a == 0.
SolutionSet solve_derivative(const VecFun& f, elem_t a, elem_t b);

struct IndexPair {
    std::size_t i;
    std::size_t j;
    bool operator==(const IndexPair&) const = default;
};

// U(i,j) = {(z_i+z_j, F(z_i)+F(z_j)), (z_i+z_j+c, F(z_i)+F(z_j)+d)} over S(c,d).
struct UPairSet {
    IndexPair idx;
    std::array<std::pair<elem_t, elem_t>, 2> members;
};
// V(i,j) = {y_i+y_j, y_i+y_j+b} over S(b,c); W(i,j) = {F(x_i)+F(x_j), F(x_i)+F(x_j)+b} over S(a,b).
struct ElemPairSet {
    IndexPair idx;
    std::array<elem_t, 2> members;
};

struct PairSets {
    std::vector<UPairSet> u;
    std::vector<ElemPairSet> v;
    std::vector<ElemPairSet> w;
};

std::vector<UPairSet> u_sets(const VecFun& f, const SolutionSet& s_cd);
std::vector<ElemPairSet> v_sets(const SolutionSet& s_bc);
std::vector<ElemPairSet> w_sets(const VecFun& f, const SolutionSet& s_ab);

// Largest set of pairwise index-disjoint pairs (exact search).
std::size_t max_disjoint_pairs(std::span<const IndexPair> edges);

// EBCT/LBCT/UBCT predicted from derivative solution sets only. Keeps a reference to f.
// For n <= 10 every solution set is indexed up front.
class DeltaUniformEngine {
public:
    explicit DeltaUniformEngine(const VecFun& f, bool index = true);

    count_t ddt(elem_t a, elem_t b) const;
    SolutionSet solutions(elem_t a, elem_t b) const;
    count_t translated_preimage(elem_t c) const;

    count_t ebct(elem_t a, elem_t b, elem_t c, elem_t d) const;
    count_t lbct(elem_t a, elem_t b, elem_t c) const;
    // 2 * #{i : some j != i has c in W(i,j)}.
    count_t ubct(elem_t a, elem_t b, elem_t c) const;
    // 4 * (max disjoint pairs {i,j} with c in W(i,j)). Matches ubct() for permutations
    // but undercounts some non-permutation entries.
    count_t ubct_matching_rule(elem_t a, elem_t b, elem_t c) const;

    count_t entry(TableKind kind, std::span<const elem_t> idx) const;

private:
    std::span<const elem_t> reps(elem_t a, elem_t b, std::vector<elem_t>& scratch) const;

    const VecFun& f_;
    bool indexed_ = false;
    std::vector<std::uint32_t> start_;  // (a * q + b) -> offset into reps_
    std::vector<elem_t> reps_;
    std::vector<count_t> preimage_;
};

count_t delta_uniform_ebct(const VecFun& f, elem_t a, elem_t b, elem_t c, elem_t d);
count_t delta_uniform_lbct(const VecFun& f, elem_t a, elem_t b, elem_t c);
count_t delta_uniform_ubct(const VecFun& f, elem_t a, elem_t b, elem_t c);

// Value forced by a zero coordinate; nullopt when no index is zero or no closed
// value is known for the kind. EBCT/LBCT/UBCT use the permutation lemma for
// permutations and the general delta-uniform cases otherwise.
std::optional<count_t> trivial_entry(const VecFun& f, TableKind kind, std::span<const elem_t> idx);

struct Ge2luReport {
    count_t ebct = 0;
    count_t lbct = 0;  // LBCT(a,c,d)
    count_t ubct = 0;  // UBCT(c,d,b)
    std::vector<elem_t> ebct_solutions;
    bool lower_correspondence = true;  // each EBCT root X gives LBCT(a,c,d) root with Y = X+c
    bool upper_correspondence = true;  // each EBCT root X gives UBCT(c,d,b) root with Y = X+a
    bool converse = true;              // LBCT(a,c,d) roots with F(X)+F(X+a)=b are EBCT roots
    bool inequality = true;            // EBCT^2 <= LBCT * UBCT
    bool equality = true;
    bool holds() const { return lower_correspondence && upper_correspondence && converse && inequality; }
};

Ge2luReport ge2lu_check(const VecFun& f, elem_t a, elem_t b, elem_t c, elem_t d);

// Tuple with EBCT^2 < LBCT * UBCT built from a derivative equation with >= 4 roots.
std::optional<std::array<elem_t, 4>> strict_inequality_witness(const VecFun& f);

// APN case table. DomainError unless the function has differential uniformity 2.
class ApnTables {
public:
    explicit ApnTables(const VecFun& f);
    count_t ebct(elem_t a, elem_t b, elem_t c, elem_t d) const;
    count_t lbct(elem_t a, elem_t b, elem_t c) const;
    count_t ubct(elem_t a, elem_t b, elem_t c) const;
    count_t entry(TableKind kind, std::span<const elem_t> idx) const;

private:
    count_t ddt(elem_t a, elem_t b) const { return ddt_.at(a, b); }
    std::uint32_t q_;
    Table2 ddt_;
    std::vector<count_t> preimage_;
};

count_t apn_tables(const VecFun& f, TableKind kind, std::span<const elem_t> idx);

// Differentially 4-uniform case table. DomainError when differential uniformity > 4.
class FourUniformTables {
public:
    explicit FourUniformTables(const VecFun& f);
    count_t ebct(elem_t a, elem_t b, elem_t c, elem_t d) const;
    count_t lbct(elem_t a, elem_t b, elem_t c) const;
    count_t ubct(elem_t a, elem_t b, elem_t c) const;
    count_t entry(TableKind kind, std::span<const elem_t> idx) const;

private:
    const VecFun& f_;
    DeltaUniformEngine engine_;
};

count_t fourdiff_tables(const VecFun& f, TableKind kind, std::span<const elem_t> idx);

}  // namespace boomtab
