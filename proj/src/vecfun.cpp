#include "boomtab/vecfun.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "boomtab/errors.hpp"

namespace boomtab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string hex(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

void check_s(int s, int n, const char* name) {
    if (s < 1 || s >= n)
        throw ArgumentError(std::string(name) + " parameter s=" + std::to_string(s) +
                            " outside [1, n)");
}

}  // namespace

std::string describe(const Family& family) {
    return std::visit(
        overloaded{
            [](const PowerFamily& p) { return "power(" + std::to_string(p.d) + ")"; },
            [](const GoldFamily& g) { return "gold(" + std::to_string(g.s) + ")"; },
            [](const KasamiFamily& k) { return "kasami(" + std::to_string(k.s) + ")"; },
            [](const BrackenFamily& b) { return "bracken(" + std::to_string(b.s) + ")"; },
            [](const InverseFamily&) { return std::string("inverse"); },
            [](const LutFileFamily& l) { return "lut-file(" + l.path + ")"; },
            [](const PolynomialFamily& p) {
                std::string out = "polynomial(";
                for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
                    if (i) out += ",";
                    out += hex(p.coeffs[i]);
                }
                return out + ")";
            },
            [](const ModifiedFamily& m) { return "modified(" + m.base + ", " + m.description + ")"; },
        },
        family);
}

std::optional<std::uint64_t> monomial_exponent(const Family& family, int n) {
    return std::visit(
        overloaded{
            [](const PowerFamily& p) -> std::optional<std::uint64_t> { return p.d; },
            [](const GoldFamily& g) -> std::optional<std::uint64_t> {
                return (std::uint64_t{1} << g.s) + 1;
            },
            [](const KasamiFamily& k) -> std::optional<std::uint64_t> {
                return (std::uint64_t{1} << (2 * k.s)) - (std::uint64_t{1} << k.s) + 1;
            },
            [](const BrackenFamily& b) -> std::optional<std::uint64_t> {
                return (std::uint64_t{1} << (2 * b.s)) + (std::uint64_t{1} << b.s) + 1;
            },
            [n](const InverseFamily&) -> std::optional<std::uint64_t> {
                return (std::uint64_t{1} << n) - 2;
            },
            [](const auto&) -> std::optional<std::uint64_t> { return std::nullopt; },
        },
        family);
}

bool is_regenerable(const Family& family) {
    return !std::holds_alternative<LutFileFamily>(family) &&
           !std::holds_alternative<ModifiedFamily>(family);
}

std::vector<elem_t> evaluate_polynomial(const FieldCtx& ctx, std::span<const elem_t> coeffs) {
    for (elem_t c : coeffs)
        if (c >= ctx.size()) throw ArgumentError("polynomial coefficient outside the field");
    std::vector<elem_t> lut(ctx.size());
    for (elem_t x = 0; x < ctx.size(); ++x) {
        elem_t acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = ctx.mul(acc, x) ^ *it;
        lut[x] = acc;
    }
    return lut;
}

VecFun VecFun::from_family(FieldPtr ctx, Family family) {
    const int n = ctx->n();
    std::visit(overloaded{
                   [n](const GoldFamily& g) { check_s(g.s, n, "gold"); },
                   [n](const KasamiFamily& k) { check_s(k.s, n, "kasami"); },
                   [n](const BrackenFamily& b) { check_s(b.s, n, "bracken"); },
                   [](const LutFileFamily&) {
                       throw ArgumentError("lut-file functions are loaded with read_lut_file");
                   },
                   [](const ModifiedFamily&) {
                       throw ArgumentError("modified functions need an explicit LUT");
                   },
                   [](const auto&) {},
               },
               family);

    std::vector<elem_t> lut;
    if (auto d = monomial_exponent(family, n)) {
        lut.resize(ctx->size());
        for (elem_t x = 0; x < ctx->size(); ++x) lut[x] = ctx->pow(x, *d);
    } else {
        lut = evaluate_polynomial(*ctx, std::get<PolynomialFamily>(family).coeffs);
    }
    return from_lut(std::move(ctx), std::move(lut), std::move(family));
}

VecFun VecFun::from_lut(FieldPtr ctx, std::vector<elem_t> lut, Family family) {
    if (lut.size() != ctx->size())
        throw ArgumentError("LUT has " + std::to_string(lut.size()) + " entries, expected " +
                            std::to_string(ctx->size()));
    for (elem_t y : lut)
        if (y >= ctx->size()) throw ArgumentError("LUT value " + hex(y) + " outside the field");
    VecFun f;
    f.ctx_ = std::move(ctx);
    f.lut_ = std::move(lut);
    f.family_ = std::move(family);
    f.index();
    return f;
}

void VecFun::index() {
    const std::uint32_t q = ctx_->size();
    fiber_start_.assign(q + 1, 0);
    for (elem_t y : lut_) ++fiber_start_[y + 1];
    image_size_ = 0;
    for (std::uint32_t y = 0; y < q; ++y) {
        if (fiber_start_[y + 1]) ++image_size_;
        fiber_start_[y + 1] += fiber_start_[y];
    }
    fiber_items_.assign(q, 0);
    std::vector<std::uint32_t> fill(fiber_start_.begin(), fiber_start_.end() - 1);
    for (elem_t x = 0; x < q; ++x) fiber_items_[fill[lut_[x]]++] = x;

    inverse_.clear();
    if (image_size_ == q) {
        inverse_.resize(q);
        for (elem_t x = 0; x < q; ++x) inverse_[lut_[x]] = x;
    }
}

std::span<const elem_t> VecFun::inverse_lut() const {
    if (inverse_.empty()) throw DomainError("function is not a permutation");
    return inverse_;
}

std::vector<elem_t> VecFun::image() const {
    std::vector<elem_t> out;
    out.reserve(image_size_);
    for (elem_t y = 0; y < size(); ++y)
        if (in_image(y)) out.push_back(y);
    return out;
}

std::uint64_t VecFun::preimage_size(std::span<const elem_t> targets) const {
    std::vector<bool> seen(size(), false);
    std::uint64_t total = 0;
    for (elem_t y : targets) {
        if (y >= size() || seen[y]) continue;
        seen[y] = true;
        total += fiber(y).size();
    }
    return total;
}

std::uint64_t VecFun::translated_image_preimage(elem_t c) const {
    std::uint64_t total = 0;
    for (elem_t x = 0; x < size(); ++x)
        if (in_image(lut_[x] ^ c)) ++total;
    return total;
}

VecFun compose_inverse(const VecFun& f) {
    auto inv = f.inverse_lut();
    return VecFun::from_lut(f.field_ptr(), std::vector<elem_t>(inv.begin(), inv.end()),
                            ModifiedFamily{describe(f.family()), "inverse"});
}

VecFun gold_ccz5_partner(FieldPtr ctx) {
    if (ctx->n() != 5) throw ArgumentError("the gold-ccz5 fixture lives in GF(2^5)");
    std::vector<elem_t> lut(ctx->size());
    for (elem_t x = 0; x < ctx->size(); ++x) {
        const elem_t x9 = ctx->pow(x, 9);
        const elem_t tr = static_cast<elem_t>(ctx->abs_trace(x9 ^ x));
        lut[x] = x9 ^ (tr ? (ctx->pow(x, 8) ^ x) : 0);
    }
    return VecFun::from_lut(std::move(ctx), std::move(lut),
                            ModifiedFamily{"power(9)", "X^9+(X^8+X)Tr(X^9+X)"});
}

LutFile parse_lut(std::istream& in) {
    LutFile out;
    std::string tok;
    if (!(in >> tok) || tok.rfind("n=", 0) != 0) throw ArgumentError("LUT file must start with n=<int>");
    try {
        out.n = std::stoi(tok.substr(2));
    } catch (const std::exception&) {
        throw ArgumentError("bad n in LUT header: " + tok);
    }
    if (out.n < kMinDegree || out.n > kMaxDegree) throw RangeError("LUT n outside [2, 20]");
    const std::size_t q = std::size_t{1} << out.n;
    auto parse_hex = [](const std::string& s) -> std::uint64_t {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(s, &pos, 16);
        if (pos != s.size()) throw ArgumentError("bad hex token: " + s);
        return v;
    };
    while (in >> tok) {
        try {
            if (tok.rfind("modulus=", 0) == 0) {
                if (!out.values.empty() || out.modulus)
                    throw ArgumentError("modulus line must directly follow n=");
                out.modulus = parse_hex(tok.substr(8));
                continue;
            }
            out.values.push_back(static_cast<elem_t>(parse_hex(tok)));
        } catch (const std::invalid_argument&) {
            throw ArgumentError("bad hex token: " + tok);
        } catch (const std::out_of_range&) {
            throw ArgumentError("hex token out of range: " + tok);
        }
    }
    if (out.values.size() != q)
        throw ArgumentError("LUT file has " + std::to_string(out.values.size()) +
                            " values, expected " + std::to_string(q));
    for (elem_t v : out.values)
        if (v >= q) throw ArgumentError("LUT value " + hex(v) + " outside the field");
    return out;
}

void write_lut(std::ostream& out, const VecFun& f) {
    out << "n=" << f.n() << "\n";
    out << "modulus=" << hex(f.field().modulus()) << "\n";
    const int width = (f.n() + 3) / 4;
    const std::size_t per_line = 16;
    auto lut = f.lut();
    for (std::size_t i = 0; i < lut.size(); ++i) {
        out << std::hex << std::setw(width) << std::setfill('0') << lut[i] << std::dec;
        out << ((i + 1) % per_line == 0 || i + 1 == lut.size() ? "\n" : " ");
    }
}

VecFun read_lut_file(FieldPtr ctx, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open LUT file " + path);
    LutFile file = parse_lut(in);
    if (file.n != ctx->n())
        throw ArgumentError("LUT file is for n=" + std::to_string(file.n) + ", field has n=" +
                            std::to_string(ctx->n()));
    if (file.modulus && *file.modulus != ctx->modulus())
        throw ArgumentError("LUT file modulus " + hex(*file.modulus) +
                            " differs from the field modulus " + hex(ctx->modulus()));
    return VecFun::from_lut(std::move(ctx), std::move(file.values), LutFileFamily{path});
}

void write_lut_file(const std::string& path, const VecFun& f) {
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot write LUT file " + path);
    write_lut(out, f);
}

}  // namespace boomtab
