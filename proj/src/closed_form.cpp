#include "boomtab/closed_form.hpp"

#include <algorithm>

#include "boomtab/errors.hpp"

namespace boomtab {

std::vector<elem_t> SolutionSet::roots() const {
    std::vector<elem_t> out;
    for (elem_t x : representatives) {
        out.push_back(x);
        out.push_back(x ^ direction);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SolutionSet solve_derivative(const VecFun& f, elem_t a, elem_t b) {
    if (a == 0) throw ArgumentError("derivative equation needs a nonzero direction");
    SolutionSet s{a, b, {}};
    for (elem_t x = 0; x < f.size(); ++x)
        if (x < (x ^ a) && f.derivative(x, a) == b) s.representatives.push_back(x);
    return s;
}

std::vector<UPairSet> u_sets(const VecFun& f, const SolutionSet& s) {
    std::vector<UPairSet> out;
    const auto& z = s.representatives;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) {
            const elem_t x = z[i] ^ z[j];
            const elem_t y = f(z[i]) ^ f(z[j]);
            out.push_back({{i, j}, {{{x, y}, {x ^ s.direction, y ^ s.target}}}});
        }
    return out;
}

std::vector<ElemPairSet> v_sets(const SolutionSet& s) {
    std::vector<ElemPairSet> out;
    const auto& y = s.representatives;
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = i + 1; j < y.size(); ++j)
            out.push_back({{i, j}, {y[i] ^ y[j], y[i] ^ y[j] ^ s.direction}});
    return out;
}

std::vector<ElemPairSet> w_sets(const VecFun& f, const SolutionSet& s) {
    std::vector<ElemPairSet> out;
    const auto& x = s.representatives;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const elem_t v = f(x[i]) ^ f(x[j]);
            out.push_back({{i, j}, {v, v ^ s.target}});
        }
    return out;
}

namespace {

std::size_t matching_from(std::span<const IndexPair> edges, std::size_t from,
                          std::vector<bool>& used) {
    std::size_t best = 0;
    for (std::size_t e = from; e < edges.size(); ++e) {
        const auto [i, j] = edges[e];
        if (used[i] || used[j]) continue;
        used[i] = used[j] = true;
        best = std::max(best, 1 + matching_from(edges, e + 1, used));
        used[i] = used[j] = false;
    }
    return best;
}

}  // namespace

std::size_t max_disjoint_pairs(std::span<const IndexPair> edges) {
    std::size_t top = 0;
    for (const auto& e : edges) top = std::max({top, e.i + 1, e.j + 1});
    std::vector<bool> used(top, false);
    return matching_from(edges, 0, used);
}

DeltaUniformEngine::DeltaUniformEngine(const VecFun& f, bool index) : f_(f) {
    if (!index || f.n() > 10) return;
    const std::size_t q = f.size();
    start_.assign(q * q + 1, 0);
    for (elem_t a = 1; a < q; ++a)
        for (elem_t x = 0; x < q; ++x)
            if (x < (x ^ a)) ++start_[a * q + f.derivative(x, a) + 1];
    for (std::size_t i = 0; i < q * q; ++i) start_[i + 1] += start_[i];
    reps_.assign(start_.back(), 0);
    std::vector<std::uint32_t> fill(start_.begin(), start_.end() - 1);
    for (elem_t a = 1; a < q; ++a)
        for (elem_t x = 0; x < q; ++x)
            if (x < (x ^ a)) reps_[fill[a * q + f.derivative(x, a)]++] = x;
    preimage_.resize(q);
    for (elem_t c = 0; c < q; ++c) preimage_[c] = f.translated_image_preimage(c);
    indexed_ = true;
}

std::span<const elem_t> DeltaUniformEngine::reps(elem_t a, elem_t b,
                                                 std::vector<elem_t>& scratch) const {
    if (indexed_) {
        const std::size_t key = std::size_t{a} * f_.size() + b;
        return {reps_.data() + start_[key], start_[key + 1] - start_[key]};
    }
    scratch = solve_derivative(f_, a, b).representatives;
    return scratch;
}

count_t DeltaUniformEngine::ddt(elem_t a, elem_t b) const {
    if (a == 0) return b == 0 ? f_.size() : 0;
    std::vector<elem_t> scratch;
    return 2 * reps(a, b, scratch).size();
}

SolutionSet DeltaUniformEngine::solutions(elem_t a, elem_t b) const {
    std::vector<elem_t> scratch;
    auto r = reps(a, b, scratch);
    return SolutionSet{a, b, {r.begin(), r.end()}};
}

count_t DeltaUniformEngine::translated_preimage(elem_t c) const {
    return indexed_ ? preimage_[c] : f_.translated_image_preimage(c);
}

count_t DeltaUniformEngine::ebct(elem_t a, elem_t b, elem_t c, elem_t d) const {
    if (c == 0) return d == 0 ? ddt(a, b) : 0;
    if (a == 0) return b == 0 ? ddt(c, d) : 0;
    if (a == c) return b == d ? ddt(c, d) : 0;
    std::vector<elem_t> scratch;
    auto z = reps(c, d, scratch);
    std::vector<IndexPair> edges;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) {
            const elem_t x = z[i] ^ z[j];
            const elem_t y = f_(z[i]) ^ f_(z[j]);
            if ((x == a && y == b) || ((x ^ c) == a && (y ^ d) == b)) edges.push_back({i, j});
        }
    return 4 * max_disjoint_pairs(edges);
}

count_t DeltaUniformEngine::lbct(elem_t a, elem_t b, elem_t c) const {
    if (b == 0) return c == 0 ? f_.size() : 0;
    if (a == 0 || a == b) return ddt(b, c);
    std::vector<elem_t> scratch;
    auto y = reps(b, c, scratch);
    std::vector<IndexPair> edges;
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = i + 1; j < y.size(); ++j) {
            const elem_t v = y[i] ^ y[j];
            if (v == a || (v ^ b) == a) edges.push_back({i, j});
        }
    return 4 * max_disjoint_pairs(edges);
}

count_t DeltaUniformEngine::ubct(elem_t a, elem_t b, elem_t c) const {
    if (a == 0) return b == 0 ? translated_preimage(c) : 0;
    if (c == 0 || c == b) return ddt(a, b);
    std::vector<elem_t> scratch;
    auto x = reps(a, b, scratch);
    count_t covered = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (i == j) continue;
            const elem_t v = f_(x[i]) ^ f_(x[j]);
            if (v == c || (v ^ b) == c) {
                ++covered;
                break;
            }
        }
    return 2 * covered;
}

count_t DeltaUniformEngine::ubct_matching_rule(elem_t a, elem_t b, elem_t c) const {
    if (a == 0) return b == 0 ? translated_preimage(c) : 0;
    if (c == 0 || c == b) return ddt(a, b);
    std::vector<elem_t> scratch;
    auto x = reps(a, b, scratch);
    std::vector<IndexPair> edges;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const elem_t v = f_(x[i]) ^ f_(x[j]);
            if (v == c || (v ^ b) == c) edges.push_back({i, j});
        }
    return 4 * max_disjoint_pairs(edges);
}

count_t DeltaUniformEngine::entry(TableKind kind, std::span<const elem_t> idx) const {
    switch (kind) {
        case TableKind::DDT: return ddt(idx[0], idx[1]);
        case TableKind::EBCT: return ebct(idx[0], idx[1], idx[2], idx[3]);
        case TableKind::LBCT: return lbct(idx[0], idx[1], idx[2]);
        case TableKind::UBCT: return ubct(idx[0], idx[1], idx[2]);
        default: throw HypothesisError("no delta-uniform closed form for " + std::string(kind_name(kind)));
    }
}

count_t delta_uniform_ebct(const VecFun& f, elem_t a, elem_t b, elem_t c, elem_t d) {
    return DeltaUniformEngine(f, false).ebct(a, b, c, d);
}

count_t delta_uniform_lbct(const VecFun& f, elem_t a, elem_t b, elem_t c) {
    return DeltaUniformEngine(f, false).lbct(a, b, c);
}

count_t delta_uniform_ubct(const VecFun& f, elem_t a, elem_t b, elem_t c) {
    return DeltaUniformEngine(f, false).ubct(a, b, c);
}

std::optional<count_t> trivial_entry(const VecFun& f, TableKind kind, std::span<const elem_t> idx) {
    const int ar = arity(kind);
    if (std::none_of(idx.begin(), idx.begin() + ar, [](elem_t v) { return v == 0; })) return std::nullopt;
    const count_t q = f.size();
    const bool perm = f.is_permutation();
    switch (kind) {
        case TableKind::DDT:
            if (idx[0] == 0) return idx[1] == 0 ? q : 0;
            if (perm) return 0;
            return std::nullopt;
        case TableKind::BCT:
            if (perm) return q;
            return std::nullopt;
        case TableKind::FBCT: return q;
        case TableKind::DD:
            if (idx[0] == 0 || idx[1] == 0) return idx[2] == 0 ? q : 0;
            return std::nullopt;
        case TableKind::DBCT:
            if (perm) return q * q;
            return std::nullopt;
        default: break;
    }
    if (!perm) {
        DeltaUniformEngine engine(f, false);
        return engine.entry(kind, idx);
    }
    const elem_t a = idx[0], b = idx[1], c = idx[2];
    if (kind == TableKind::EBCT) {
        const elem_t d = idx[3];
        if (a == 0 && b == 0 && c == 0 && d == 0) return q;
        if (a == 0 && b == 0 && c != 0 && d != 0) return ddt_entry(f, c, d);
        if (a != 0 && b != 0 && c == 0 && d == 0) return ddt_entry(f, a, b);
        return 0;
    }
    if (kind == TableKind::LBCT) {
        if (b == 0) return c == 0 ? q : 0;
        if (c == 0) return 0;
        return ddt_entry(f, b, c);  // a = 0
    }
    // UBCT
    if (a == 0) return b == 0 ? q : 0;
    if (c == 0) return ddt_entry(f, a, b);
    return 0;  // b = 0 with a, c != 0
}

Ge2luReport ge2lu_check(const VecFun& f, elem_t a, elem_t b, elem_t c, elem_t d) {
    Ge2luReport r;
    for (elem_t x = 0; x < f.size(); ++x) {
        const bool e_root = (f(x) ^ f(x ^ a)) == b && (f(x) ^ f(x ^ c)) == d &&
                            (f(x ^ a ^ c) ^ f(x ^ a)) == d;
        const bool l_root = (f(x) ^ f(x ^ c)) == d && (f(x ^ a) ^ f(x ^ a ^ c)) == d;
        if (l_root && (f(x) ^ f(x ^ a)) == b && !e_root) r.converse = false;
        if (!e_root) continue;
        r.ebct_solutions.push_back(x);
        if (!l_root) r.lower_correspondence = false;
        // UBCT(c,d,b) with Y = X+a: F(X)+F(X+c)=d, F(X)+F(Y)=b, F(X+c)+F(Y+c)=b.
        const elem_t y = x ^ a;
        const bool u_root = (f(x) ^ f(x ^ c)) == d && (f(x) ^ f(y)) == b && (f(x ^ c) ^ f(y ^ c)) == b;
        if (!u_root) r.upper_correspondence = false;
    }
    r.ebct = r.ebct_solutions.size();
    r.lbct = lbct_entry(f, a, c, d);
    r.ubct = ubct_entry(f, c, d, b);
    r.inequality = r.ebct * r.ebct <= r.lbct * r.ubct;
    r.equality = r.ebct * r.ebct == r.lbct * r.ubct;
    return r;
}

std::optional<std::array<elem_t, 4>> strict_inequality_witness(const VecFun& f) {
    for (elem_t c = 1; c < f.size(); ++c)
        for (elem_t d = 1; d < f.size(); ++d) {
            const auto s = solve_derivative(f, c, d);
            if (s.k() < 2) continue;
            const auto& z = s.representatives;
            for (std::size_t i = 0; i < z.size(); ++i)
                for (std::size_t j = i + 1; j < z.size(); ++j)
                    // a = c forces EBCT(c, b, c, d) = 0 for b != d, while a second root pair
                    // makes UBCT(c, d, b) positive.
                    for (elem_t b : {f(z[i]) ^ f(z[j]), f(z[i]) ^ f(z[j] ^ c)}) {
                        if (b == 0 || b == d) continue;
                        const count_t e = ebct_entry(f, c, b, c, d);
                        if (e * e < lbct_entry(f, c, c, d) * ubct_entry(f, c, d, b))
                            return std::array<elem_t, 4>{c, b, c, d};
                    }
        }
    return std::nullopt;
}

ApnTables::ApnTables(const VecFun& f) : q_(f.size()), ddt_(ddt_table(f)) {
    for (elem_t a = 1; a < q_; ++a)
        for (elem_t b = 0; b < q_; ++b)
            if (ddt_.at(a, b) > 2) throw DomainError("function is not APN");
    preimage_.resize(q_);
    for (elem_t c = 0; c < q_; ++c) preimage_[c] = f.translated_image_preimage(c);
}

count_t ApnTables::ebct(elem_t a, elem_t b, elem_t c, elem_t d) const {
    if (c == 0 && d == 0) return ddt(a, b);
    if (c != 0 && a == c && b == d) return ddt(c, d);
    if (c != 0 && a == 0 && b == 0) return ddt(c, d);
    return 0;
}

count_t ApnTables::lbct(elem_t a, elem_t b, elem_t c) const {
    if (b == 0 && c == 0) return q_;
    if (b != 0 && (a == b || a == 0)) return ddt(b, c);
    return 0;
}

count_t ApnTables::ubct(elem_t a, elem_t b, elem_t c) const {
    if (a == 0 && b == 0) return preimage_[c];
    if (a != 0 && (c == b || c == 0)) return ddt(a, b);
    return 0;
}

count_t ApnTables::entry(TableKind kind, std::span<const elem_t> idx) const {
    switch (kind) {
        case TableKind::DDT: return ddt(idx[0], idx[1]);
        case TableKind::EBCT: return ebct(idx[0], idx[1], idx[2], idx[3]);
        case TableKind::LBCT: return lbct(idx[0], idx[1], idx[2]);
        case TableKind::UBCT: return ubct(idx[0], idx[1], idx[2]);
        default: throw HypothesisError("no APN closed form for " + std::string(kind_name(kind)));
    }
}

count_t apn_tables(const VecFun& f, TableKind kind, std::span<const elem_t> idx) {
    return ApnTables(f).entry(kind, idx);
}

FourUniformTables::FourUniformTables(const VecFun& f) : f_(f), engine_(f) {
    const std::uint32_t q = f.size();
    for (elem_t a = 1; a < q; ++a)
        for (elem_t b = 0; b < q; ++b)
            if (engine_.ddt(a, b) > 4) throw DomainError("differential uniformity exceeds 4");
}

count_t FourUniformTables::ebct(elem_t a, elem_t b, elem_t c, elem_t d) const {
    if (c == 0) return d == 0 ? engine_.ddt(a, b) : 0;
    if (a == 0) return b == 0 ? engine_.ddt(c, d) : 0;
    if (a == c) return b == d ? engine_.ddt(c, d) : 0;
    const auto s = engine_.solutions(c, d);
    if (s.k() != 2) return 0;
    const elem_t z1 = s.representatives[0], z2 = s.representatives[1];
    if (a == (z1 ^ z2) && b == (f_(z1) ^ f_(z2))) return 4;
    if (a == (z1 ^ z2 ^ c) && b == (f_(z1) ^ f_(z2 ^ c))) return 4;
    return 0;
}

count_t FourUniformTables::lbct(elem_t a, elem_t b, elem_t c) const {
    if (b == 0) return c == 0 ? f_.size() : 0;
    if (a == 0) return engine_.ddt(b, c);
    const auto s = engine_.solutions(b, c);
    if (s.k() == 1) return a == b ? 2 : 0;
    if (s.k() != 2) return 0;
    const elem_t y = s.representatives[0] ^ s.representatives[1];
    return (a == b || a == y || a == (y ^ b)) ? 4 : 0;
}

count_t FourUniformTables::ubct(elem_t a, elem_t b, elem_t c) const {
    if (a == 0) return b == 0 ? engine_.translated_preimage(c) : 0;
    if (c == 0) return engine_.ddt(a, b);
    const auto s = engine_.solutions(a, b);
    if (s.k() == 1) return c == b ? 2 : 0;
    if (s.k() != 2) return 0;
    const elem_t v = f_(s.representatives[0]) ^ f_(s.representatives[1]);
    return (c == b || c == v || c == (v ^ b)) ? 4 : 0;
}

count_t FourUniformTables::entry(TableKind kind, std::span<const elem_t> idx) const {
    switch (kind) {
        case TableKind::DDT: return engine_.ddt(idx[0], idx[1]);
        case TableKind::EBCT: return ebct(idx[0], idx[1], idx[2], idx[3]);
        case TableKind::LBCT: return lbct(idx[0], idx[1], idx[2]);
        case TableKind::UBCT: return ubct(idx[0], idx[1], idx[2]);
        default: throw HypothesisError("no 4-uniform closed form for " + std::string(kind_name(kind)));
    }
}

count_t fourdiff_tables(const VecFun& f, TableKind kind, std::span<const elem_t> idx) {
    return FourUniformTables(f).entry(kind, idx);
}

}  // namespace boomtab
