#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "boomtab/field.hpp"

namespace boomtab {

struct PowerFamily {
    std::uint64_t d;
};
struct GoldFamily {
    int s;  // X^(2^s+1)
};
struct KasamiFamily {
    int s;  // X^(2^(2s)-2^s+1)
};
struct BrackenFamily {
    int s;  // X^(2^(2s)+2^s+1), n = 4s
};
struct InverseFamily {};
struct LutFileFamily {
    std::string path;
};
struct PolynomialFamily {
    std::vector<elem_t> coeffs;  // coeffs[i] multiplies X^i
};
struct ModifiedFamily {
    std::string base;
    std::string description;
};

using Family = std::variant<PowerFamily, GoldFamily, KasamiFamily, BrackenFamily, InverseFamily,
                            LutFileFamily, PolynomialFamily, ModifiedFamily>;

std::string describe(const Family& family);

// Exponent of a named monomial family at degree n; nullopt for the rest.
std::optional<std::uint64_t> monomial_exponent(const Family& family, int n);

// Whether the family regenerates its LUT from metadata alone.
bool is_regenerable(const Family& family);

class VecFun {
public:
    // ArgumentError for out-of-range family parameters or LutFileFamily (use read_lut_file).
    static VecFun from_family(FieldPtr ctx, Family family);
    // ArgumentError unless lut.size() == 2^n and every value is a field element.
    static VecFun from_lut(FieldPtr ctx, std::vector<elem_t> lut, Family family);

    const FieldCtx& field() const { return *ctx_; }
    const FieldPtr& field_ptr() const { return ctx_; }
    int n() const { return ctx_->n(); }
    std::uint32_t size() const { return ctx_->size(); }
    const Family& family() const { return family_; }

    elem_t operator()(elem_t x) const { return lut_[x]; }
    elem_t eval(elem_t x) const { return lut_[x]; }
    elem_t derivative(elem_t x, elem_t a) const { return lut_[x ^ a] ^ lut_[x]; }
    std::span<const elem_t> lut() const { return lut_; }

    bool is_permutation() const { return !inverse_.empty(); }
    // DomainError for non-permutations.
    std::span<const elem_t> inverse_lut() const;

    // Inputs mapping to y, ascending.
    std::span<const elem_t> fiber(elem_t y) const {
        return {fiber_items_.data() + fiber_start_[y], fiber_start_[y + 1] - fiber_start_[y]};
    }
    bool in_image(elem_t y) const { return fiber_start_[y + 1] != fiber_start_[y]; }
    std::uint32_t image_size() const { return image_size_; }
    // Im(F), ascending.
    std::vector<elem_t> image() const;
    // Number of x with F(x) in targets (duplicates in targets are ignored).
    std::uint64_t preimage_size(std::span<const elem_t> targets) const;
    // |F^{-1}(c + Im F)|
    std::uint64_t translated_image_preimage(elem_t c) const;

private:
    VecFun() = default;
    void index();

    FieldPtr ctx_;
    std::vector<elem_t> lut_;
    Family family_;
    std::vector<elem_t> inverse_;
    std::vector<std::uint32_t> fiber_start_;
    std::vector<elem_t> fiber_items_;
    std::uint32_t image_size_ = 0;
};

// F^{-1} tagged modified(F, "inverse"). DomainError for non-permutations.
VecFun compose_inverse(const VecFun& f);

// Horner evaluation of sum coeffs[i] X^i.
std::vector<elem_t> evaluate_polynomial(const FieldCtx& ctx, std::span<const elem_t> coeffs);

// X^9 + (X^8 + X) Tr(X^9 + X) over GF(2^5): CCZ- but not EA-equivalent to X^9.
VecFun gold_ccz5_partner(FieldPtr ctx);

struct LutFile {
    int n = 0;
    std::optional<poly_t> modulus;
    std::vector<elem_t> values;
};

// Format: "n=<int>", optional "modulus=<hex>", then 2^n hex values.
LutFile parse_lut(std::istream& in);
void write_lut(std::ostream& out, const VecFun& f);
VecFun read_lut_file(FieldPtr ctx, const std::string& path);
void write_lut_file(const std::string& path, const VecFun& f);

}  // namespace boomtab
