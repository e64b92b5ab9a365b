#include "boomtab/sampling.hpp"

#include "boomtab/rng.hpp"

namespace boomtab {

namespace {

// Random element of {x : F(x)+F(x+a) = F(x0)+F(x0+a)}; x0 itself always qualifies.
elem_t partner(const VecFun& f, elem_t a, elem_t x0, CounterStream& rng) {
    const elem_t target = f.derivative(x0, a);
    std::uint64_t seen = 0;
    elem_t pick = x0;
    for (elem_t x = 0; x < f.size(); ++x) {
        if (f.derivative(x, a) != target) continue;
        // Reservoir sampling keeps the draw count independent of the class layout.
        if (rng.below(++seen) == 0) pick = x;
    }
    return pick;
}

}  // namespace

std::array<elem_t, 4> sample_tuple(const VecFun& f, TableKind kind, std::uint64_t seed,
                                   std::uint64_t i) {
    CounterStream rng(seed, i);
    const std::uint32_t q = f.size();
    std::array<elem_t, 4> t{};
    for (auto& v : t) v = static_cast<elem_t>(rng.below(q));

    if (!rng.coin(2)) {
        switch (kind) {
            case TableKind::EBCT: {
                const auto c = static_cast<elem_t>(rng.nonzero_below(q));
                const auto x = static_cast<elem_t>(rng.below(q));
                const elem_t z = partner(f, c, x, rng);
                elem_t a = x ^ z;
                if (rng.coin(2)) a ^= c;
                t = {a, f(x) ^ f(x ^ a), c, f.derivative(x, c)};
                break;
            }
            case TableKind::LBCT: {
                const auto b = static_cast<elem_t>(rng.nonzero_below(q));
                const auto y = static_cast<elem_t>(rng.below(q));
                const elem_t z = partner(f, b, y, rng);
                elem_t a = y ^ z;
                if (rng.coin(2)) a ^= b;
                t = {a, b, f.derivative(y, b), 0};
                break;
            }
            case TableKind::UBCT: {
                const auto a = static_cast<elem_t>(rng.nonzero_below(q));
                const auto x = static_cast<elem_t>(rng.below(q));
                const elem_t z = partner(f, a, x, rng);
                const elem_t b = f.derivative(x, a);
                elem_t c = f(x) ^ f(z);
                if (rng.coin(2)) c ^= b;
                t = {a, b, c, 0};
                break;
            }
            case TableKind::DDT:
            case TableKind::DBCT: {
                const auto a = static_cast<elem_t>(rng.nonzero_below(q));
                const auto x = static_cast<elem_t>(rng.below(q));
                t = {a, f.derivative(x, a), 0, 0};
                break;
            }
            default: break;
        }
    }
    for (int k = 0; k < arity(kind); ++k)
        if (rng.coin(16)) t[k] = 0;
    for (int k = arity(kind); k < 4; ++k) t[k] = 0;
    return t;
}

}  // namespace boomtab
