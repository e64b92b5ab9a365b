// Times the heavy sweeps and compares each against bench/thresholds.json.
// Usage: boomtab_bench [thresholds.json] [--repeat N]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "boomtab/equiv.hpp"
#include "boomtab/reference.hpp"

using namespace boomtab;

namespace {

struct Workload {
    std::string name;
    std::function<std::uint64_t()> run;  // returns a checksum so nothing is optimized away
};

std::vector<Workload> workloads() {
    return {
        {"ebct_spectrum_n6",
         [] {
             auto f = VecFun::from_family(make_field(6), InverseFamily{});
             return spectrum(f, TableKind::EBCT, IndexFilter::all).domain_size;
         }},
        {"ubct_lbct_tables_n8",
         [] {
             auto f = VecFun::from_family(make_field(8), InverseFamily{});
             return std::uint64_t{ubct_table(f).values[12345]} + lbct_table(f).values[54321];
         }},
        {"dbct_full_n8",
         [] {
             auto f = VecFun::from_family(make_field(8), GoldFamily{1});
             return std::uint64_t{dbct_full(f).values[777]};
         }},
        {"ddt_bct_spectrum_n12",
         [] {
             auto f = VecFun::from_family(make_field(12), InverseFamily{});
             return *spectrum(f, TableKind::DDT, IndexFilter::all).max_nontrivial +
                    *spectrum(f, TableKind::BCT, IndexFilter::nonzero).max_nontrivial;
         }},
        {"sampled_ebct_n14",
         [] {
             auto f = VecFun::from_family(make_field(14), GoldFamily{3});
             return spectrum(f, TableKind::EBCT, IndexFilter::nonzero, SampleSpec{20000, 1}).domain_size;
         }},
        {"invariance_n8",
         [] {
             auto ctx = make_field(8);
             auto f = VecFun::from_family(ctx, InverseFamily{});
             auto map = random_affine(*ctx, MapForm::affine, 1);
             auto g = apply_graph_transform(f, map);
             return invariance_check(f, *g, map, TableKind::UBCT, 100000, 1).mismatches;
         }},
        {"representation_search_n10",
         [] { return std::uint64_t{find_representation("paper2", 10).representations}; }},
    };
}

}  // namespace

int main(int argc, char** argv) {
    std::string path = "thresholds.json";
    int repeat = 3;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--repeat" && i + 1 < argc)
            repeat = std::max(1, std::atoi(argv[++i]));
        else
            path = arg;
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open thresholds file " << path << "\n";
        return 2;
    }
    const auto limits = nlohmann::json::parse(in);
    // Slow or shared machines can stretch every regression threshold.
    double scale = 1.0;
    if (const char* env = std::getenv("BOOMTAB_BENCH_SCALE")) scale = std::max(1.0, std::atof(env));

    int failures = 0;
    std::printf("%-28s %10s %12s %12s  %s\n", "workload", "best_s", "regress_s", "floor_s", "status");
    for (const auto& w : workloads()) {
        if (!limits.contains(w.name)) {
            std::cerr << "no threshold for " << w.name << "\n";
            return 2;
        }
        const auto& lim = limits[w.name];
        double best = 1e300;
        std::uint64_t sink = 0;
        for (int r = 0; r < repeat; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            sink += w.run();
            best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        }
        const double regress = lim.at("regression_seconds").get<double>() * scale;
        const double floor = lim.value("floor_seconds", 0.0);
        const bool ok = best <= regress && (floor == 0.0 || best <= floor);
        failures += !ok;
        std::printf("%-28s %10.3f %12.1f %12s  %s (checksum %llu)\n", w.name.c_str(), best, regress,
                    floor > 0 ? std::to_string(static_cast<int>(floor)).c_str() : "-", ok ? "ok" : "REGRESSION",
                    static_cast<unsigned long long>(sink));
    }
    return failures ? 1 : 0;
}
