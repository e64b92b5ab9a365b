#include "boomtab/tables.hpp"

#include <algorithm>
#include <cctype>

#include "boomtab/errors.hpp"
#include "boomtab/parallel.hpp"

namespace boomtab {

int arity(TableKind kind) {
    switch (kind) {
        case TableKind::DDT:
        case TableKind::BCT:
        case TableKind::FBCT:
        case TableKind::DBCT: return 2;
        case TableKind::DD:
        case TableKind::UBCT:
        case TableKind::LBCT: return 3;
        case TableKind::EBCT: return 4;
    }
    return 0;
}

std::string_view kind_name(TableKind kind) {
    switch (kind) {
        case TableKind::DDT: return "DDT";
        case TableKind::BCT: return "BCT";
        case TableKind::FBCT: return "FBCT";
        case TableKind::DD: return "DD";
        case TableKind::UBCT: return "UBCT";
        case TableKind::LBCT: return "LBCT";
        case TableKind::EBCT: return "EBCT";
        case TableKind::DBCT: return "DBCT";
    }
    return "?";
}

std::optional<TableKind> parse_kind(std::string_view text) {
    std::string upper(text);
    for (char& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    for (TableKind k : kAllKinds)
        if (kind_name(k) == upper) return k;
    return std::nullopt;
}

std::vector<std::string> index_names(TableKind kind) {
    if (kind == TableKind::DBCT) return {"a", "d"};
    static const std::vector<std::string> all{"a", "b", "c", "d"};
    return {all.begin(), all.begin() + arity(kind)};
}

count_t ddt_entry(const VecFun& f, elem_t a, elem_t b) {
    count_t n = 0;
    for (elem_t x = 0; x < f.size(); ++x) n += f.derivative(x, a) == b;
    return n;
}

std::vector<count_t> ddt_row(const VecFun& f, elem_t a) {
    std::vector<count_t> row(f.size(), 0);
    for (elem_t x = 0; x < f.size(); ++x) ++row[f.derivative(x, a)];
    return row;
}

count_t bct_entry(const VecFun& f, elem_t a, elem_t b) {
    count_t n = 0;
    for (elem_t x = 0; x < f.size(); ++x) {
        const elem_t want = f(x ^ a) ^ b;
        for (elem_t y : f.fiber(f(x) ^ b)) n += f(y ^ a) == want;
    }
    return n;
}

count_t fbct_entry(const VecFun& f, elem_t a, elem_t b) { return dd_entry(f, a, b, 0); }

count_t dd_entry(const VecFun& f, elem_t a, elem_t b, elem_t c) {
    count_t n = 0;
    for (elem_t x = 0; x < f.size(); ++x) n += (f(x ^ a ^ b) ^ f(x ^ b) ^ f(x ^ a) ^ f(x)) == c;
    return n;
}

count_t ubct_entry(const VecFun& f, elem_t a, elem_t b, elem_t c, Counting counting) {
    count_t n = 0;
    for (elem_t x = 0; x < f.size(); ++x) {
        if ((f(x) ^ f(x ^ a)) != b) continue;
        const elem_t want = f(x ^ a) ^ c;
        count_t ys = 0;
        for (elem_t y : f.fiber(f(x) ^ c)) {
            if (f(y ^ a) != want) continue;
            ++ys;
            if (counting == Counting::distinct_x) break;
        }
        n += ys;
    }
    return n;
}

count_t lbct_entry(const VecFun& f, elem_t a, elem_t b, elem_t c, Counting) {
    count_t n = 0;
    for (elem_t x = 0; x < f.size(); ++x)
        n += (f(x) ^ f(x ^ b)) == c && (f(x ^ a) ^ f(x ^ a ^ b)) == c;
    return n;
}

count_t ebct_entry(const VecFun& f, elem_t a, elem_t b, elem_t c, elem_t d) {
    count_t n = 0;
    for (elem_t x = 0; x < f.size(); ++x)
        n += (f(x) ^ f(x ^ a)) == b && (f(x) ^ f(x ^ c)) == d && (f(x ^ a ^ c) ^ f(x ^ a)) == d;
    return n;
}

void ebct_slice(const VecFun& f, elem_t a, elem_t c, std::vector<std::uint16_t>& counts) {
    const std::uint32_t q = f.size();
    std::fill(counts.begin(), counts.end(), 0);
    for (elem_t x = 0; x < q; ++x) {
        const elem_t b = f(x) ^ f(x ^ a);
        const elem_t d = f(x) ^ f(x ^ c);
        if ((f(x ^ a ^ c) ^ f(x ^ a)) == d) ++counts[std::size_t{b} * q + d];
    }
}

count_t dbct_entry(const VecFun& f, elem_t a, elem_t d) {
    const std::uint32_t q = f.size();
    // Group X by b = F(X)+F(X+a).
    std::vector<std::uint32_t> start(q + 1, 0);
    for (elem_t x = 0; x < q; ++x) ++start[f.derivative(x, a) + 1];
    for (std::uint32_t b = 0; b < q; ++b) start[b + 1] += start[b];
    std::vector<elem_t> members(q);
    {
        std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
        for (elem_t x = 0; x < q; ++x) members[fill[f.derivative(x, a)]++] = x;
    }
    std::vector<std::uint32_t> ub(q, 0), mark(q, 0);
    std::vector<elem_t> touched;
    std::uint32_t stamp = 0;
    count_t total = 0;
    for (elem_t b = 0; b < q; ++b) {
        if (start[b] == start[b + 1]) continue;
        touched.clear();
        for (std::uint32_t i = start[b]; i < start[b + 1]; ++i) {
            const elem_t x = members[i];
            ++stamp;
            for (elem_t y = 0; y < q; ++y) {
                const elem_t c = f(x) ^ f(y);
                if ((f(x ^ a) ^ f(y ^ a)) != c || mark[c] == stamp) continue;
                mark[c] = stamp;
                if (ub[c]++ == 0) touched.push_back(c);
            }
        }
        for (elem_t c : touched) {
            total += ub[c] * lbct_entry(f, b, c, d);
            ub[c] = 0;
        }
    }
    return total;
}

count_t ubct_entry_via_inverse(const VecFun& f, elem_t a, elem_t b, elem_t c) {
    auto inv = f.inverse_lut();
    count_t n = 0;
    for (elem_t x = 0; x < f.size(); ++x)
        n += (f(x) ^ f(x ^ a)) == b && (inv[f(x) ^ c] ^ inv[f(x ^ a) ^ c]) == a;
    return n;
}

count_t lbct_entry_via_inverse(const VecFun& f, elem_t a, elem_t b, elem_t c) {
    auto inv = f.inverse_lut();
    count_t n = 0;
    for (elem_t x = 0; x < f.size(); ++x)
        n += (f(x) ^ f(x ^ b)) == c && (inv[f(x) ^ c] ^ inv[f(x ^ a) ^ c]) == a;
    return n;
}

count_t ebct_entry_via_inverse(const VecFun& f, elem_t a, elem_t b, elem_t c, elem_t d) {
    auto inv = f.inverse_lut();
    count_t n = 0;
    for (elem_t x = 0; x < f.size(); ++x)
        n += (f(x) ^ f(x ^ a)) == b && (f(x) ^ f(x ^ c)) == d &&
             (inv[f(x) ^ d] ^ inv[f(x ^ a) ^ d]) == a;
    return n;
}

count_t entry(const VecFun& f, const EntryQuery& q) {
    for (int i = 0; i < arity(q.kind); ++i)
        if (q.idx[i] >= f.size()) throw ArgumentError("index outside the field");
    const auto& [a, b, c, d] = q.idx;
    switch (q.kind) {
        case TableKind::DDT: return ddt_entry(f, a, b);
        case TableKind::BCT: return bct_entry(f, a, b);
        case TableKind::FBCT: return fbct_entry(f, a, b);
        case TableKind::DD: return dd_entry(f, a, b, c);
        case TableKind::UBCT: return ubct_entry(f, a, b, c);
        case TableKind::LBCT: return lbct_entry(f, a, b, c);
        case TableKind::EBCT: return ebct_entry(f, a, b, c, d);
        case TableKind::DBCT: return dbct_entry(f, a, b);
    }
    return 0;
}

namespace {

void require_small(const VecFun& f, const char* what) {
    if (f.n() > kMaxMaterialize3)
        throw BudgetExceeded(std::string(what) + " tables are materialized only for n <= 8",
                             static_cast<double>(std::uint64_t{1} << (3 * f.n())));
}

// X sorted into classes of equal F(X)+F(X+a).
struct DerivativeClasses {
    std::vector<std::uint32_t> start;
    std::vector<elem_t> members;

    DerivativeClasses(const VecFun& f, elem_t a) : start(f.size() + 1, 0), members(f.size()) {
        const std::uint32_t q = f.size();
        for (elem_t x = 0; x < q; ++x) ++start[f.derivative(x, a) + 1];
        for (std::uint32_t b = 0; b < q; ++b) start[b + 1] += start[b];
        std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
        for (elem_t x = 0; x < q; ++x) members[fill[f.derivative(x, a)]++] = x;
    }
    std::span<const elem_t> of(elem_t b) const {
        return {members.data() + start[b], start[b + 1] - start[b]};
    }
};

}  // namespace

Table2 ddt_table(const VecFun& f) {
    const std::size_t q = f.size();
    Table2 t{TableKind::DDT, f.n(), std::vector<std::uint32_t>(q * q, 0)};
    parallel_for(q, [&](std::size_t a, unsigned) {
        auto* row = t.values.data() + a * q;
        for (elem_t x = 0; x < q; ++x) ++row[f.derivative(x, static_cast<elem_t>(a))];
    });
    return t;
}

// F(X)+F(Y) = b together with F(X+a)+F(Y+a) = b holds iff X and Y share the
// derivative value in direction a, so pairs are enumerated class by class.
Table2 bct_table(const VecFun& f) {
    const std::size_t q = f.size();
    Table2 t{TableKind::BCT, f.n(), std::vector<std::uint32_t>(q * q, 0)};
    parallel_for(q, [&](std::size_t a, unsigned) {
        auto* row = t.values.data() + a * q;
        DerivativeClasses cls(f, static_cast<elem_t>(a));
        for (elem_t v = 0; v < q; ++v)
            for (elem_t x : cls.of(v))
                for (elem_t y : cls.of(v)) ++row[f(x) ^ f(y)];
    });
    return t;
}

// FBCT(a,b) counts X with F(X)+F(X+a) = F(X+b)+F(X+a+b): pairs (X, X+b) in one class.
Table2 fbct_table(const VecFun& f) {
    const std::size_t q = f.size();
    Table2 t{TableKind::FBCT, f.n(), std::vector<std::uint32_t>(q * q, 0)};
    parallel_for(q, [&](std::size_t a, unsigned) {
        auto* row = t.values.data() + a * q;
        DerivativeClasses cls(f, static_cast<elem_t>(a));
        for (elem_t v = 0; v < q; ++v)
            for (elem_t x : cls.of(v))
                for (elem_t y : cls.of(v)) ++row[x ^ y];
    });
    return t;
}

Table3 dd_table(const VecFun& f) {
    require_small(f, "DD");
    const std::size_t q = f.size();
    Table3 t{TableKind::DD, f.n(), std::vector<std::uint16_t>(q * q * q, 0)};
    parallel_for(q, [&](std::size_t a, unsigned) {
        for (elem_t b = 0; b < q; ++b) {
            auto* row = t.values.data() + (a * q + b) * q;
            for (elem_t x = 0; x < q; ++x) ++row[f(x ^ a ^ b) ^ f(x ^ b) ^ f(x ^ a) ^ f(x)];
        }
    });
    return t;
}

Table3 ubct_table(const VecFun& f) {
    require_small(f, "UBCT");
    const std::size_t q = f.size();
    Table3 t{TableKind::UBCT, f.n(), std::vector<std::uint16_t>(q * q * q, 0)};
    const unsigned workers = worker_count();
    std::vector<std::vector<std::uint32_t>> marks(workers, std::vector<std::uint32_t>(q, 0));
    std::vector<std::uint32_t> stamps(workers, 0);
    parallel_for(q, [&](std::size_t a, unsigned w) {
        auto& mark = marks[w];
        for (elem_t x = 0; x < q; ++x) {
            const elem_t b = f(x) ^ f(x ^ a);
            auto* row = t.values.data() + (a * q + b) * q;
            const std::uint32_t stamp = ++stamps[w];
            for (elem_t y = 0; y < q; ++y) {
                const elem_t c = f(x) ^ f(y);
                if ((f(x ^ a) ^ f(y ^ a)) != c || mark[c] == stamp) continue;
                mark[c] = stamp;
                ++row[c];
            }
        }
    });
    return t;
}

Table3 lbct_table(const VecFun& f) {
    require_small(f, "LBCT");
    const std::size_t q = f.size();
    Table3 t{TableKind::LBCT, f.n(), std::vector<std::uint16_t>(q * q * q, 0)};
    parallel_for(q, [&](std::size_t a, unsigned) {
        for (elem_t b = 0; b < q; ++b) {
            auto* row = t.values.data() + (a * q + b) * q;
            for (elem_t x = 0; x < q; ++x) {
                const elem_t c = f(x) ^ f(x ^ b);
                if ((f(x ^ a) ^ f(x ^ a ^ b)) == c) ++row[c];
            }
        }
    });
    return t;
}

Table2 dbct_from_tables(const Table3& ubct, const Table3& lbct) {
    if (ubct.n != lbct.n) throw ArgumentError("UBCT/LBCT size mismatch");
    const int n = ubct.n;
    const std::size_t q = std::size_t{1} << n;
    Table2 t{TableKind::DBCT, n, std::vector<std::uint32_t>(q * q, 0)};
    parallel_for(q, [&](std::size_t a, unsigned) {
        std::vector<count_t> row(q, 0);
        for (std::size_t b = 0; b < q; ++b) {
            const auto* u = ubct.values.data() + (a * q + b) * q;
            for (std::size_t c = 0; c < q; ++c) {
                if (!u[c]) continue;
                const auto* l = lbct.values.data() + (b * q + c) * q;
                for (std::size_t d = 0; d < q; ++d) row[d] += count_t{u[c]} * l[d];
            }
        }
        for (std::size_t d = 0; d < q; ++d) t.values[a * q + d] = static_cast<std::uint32_t>(row[d]);
    });
    return t;
}

Table2 dbct_full(const VecFun& f) {
    if (f.n() <= kMaxMaterialize3) return dbct_from_tables(ubct_table(f), lbct_table(f));
    const std::size_t q = f.size();
    Table2 t{TableKind::DBCT, f.n(), std::vector<std::uint32_t>(q * q, 0)};
    parallel_for(q * q, [&](std::size_t i, unsigned) {
        t.values[i] = static_cast<std::uint32_t>(
            dbct_entry(f, static_cast<elem_t>(i / q), static_cast<elem_t>(i % q)));
    });
    return t;
}

count_t differential_uniformity(const VecFun& f) {
    const auto t = ddt_table(f);
    const std::size_t q = f.size();
    return *std::max_element(t.values.begin() + static_cast<std::ptrdiff_t>(q), t.values.end());
}

count_t boomerang_uniformity(const VecFun& f) {
    const auto t = bct_table(f);
    count_t best = 0;
    for (elem_t a = 1; a < f.size(); ++a)
        for (elem_t b = 1; b < f.size(); ++b) best = std::max<count_t>(best, t.at(a, b));
    return best;
}

count_t second_order_zero_uniformity(const VecFun& f) {
    const auto t = fbct_table(f);
    count_t best = 0;
    for (elem_t a = 1; a < f.size(); ++a)
        for (elem_t b = 1; b < f.size(); ++b)
            if (a != b) best = std::max<count_t>(best, t.at(a, b));
    return best;
}

}  // namespace boomtab
