#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boomtab/closed_form.hpp"
#include "boomtab/families.hpp"

namespace boomtab {

// Parsed --sbox value: power:<d>, gold:<s>, kasami:<s>, bracken:<s>, inverse,
// poly:<c0,c1,...>, lut:@<path>, gold-ccz5.
struct SboxSpec {
    std::string text;
    Family family;
    bool ccz5_partner = false;
};

// ArgumentError on malformed text.
SboxSpec parse_sbox(std::string_view text);
// ArgumentError when the spec does not fit the field (gold-ccz5 needs n = 5).
VecFun resolve_sbox(const FieldPtr& ctx, const SboxSpec& spec);

// Hex integer ("0x1f" or "1f"), "g", or "g^k" (k may be negative).
elem_t parse_index(const FieldCtx& ctx, std::string_view text);
std::vector<elem_t> parse_indices(const FieldCtx& ctx, std::string_view text);

// Closed-form evaluator picked from the function's family: Gold, Kasami, Bracken-Leander
// and inverse case tables where they apply, trivial cases, then the delta-uniform
// theorem for EBCT/LBCT/UBCT. Keeps a reference to f.
class ClosedForm {
public:
    // HypothesisError when the family's closed form does not cover this field.
    explicit ClosedForm(const VecFun& f);
    ~ClosedForm();
    ClosedForm(ClosedForm&&) noexcept;

    std::string name() const { return name_; }
    // HypothesisError when no closed form covers the kind for this function.
    count_t entry(TableKind kind, std::span<const elem_t> idx) const;
    bool covers(TableKind kind) const;

private:
    struct Impl;
    const VecFun& f_;
    std::string name_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace boomtab
