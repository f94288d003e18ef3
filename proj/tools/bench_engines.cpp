// Times the serial reference against the OpenMP branch evaluation of the
// memoized skein engine, and the Hecke engine where a braid form exists.

#include "skein/catalog.hpp"
#include "skein/hecke.hpp"

#include <chrono>
#include <iostream>

using namespace skein;
using Clock = std::chrono::steady_clock;

namespace {

double time_of(const std::function<void()>& f) {
    auto t0 = Clock::now();
    f();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_diagram(const std::string& name, const OrientedDiagram& d,
                   const std::optional<BraidWord>& braid) {
    LaurentVZ serial_val, parallel_val, hecke_val;
    MemoCache c1, c2;
    EngineOptions ser, par;
    par.parallel = true;
    double t_serial = time_of([&] { serial_val = homfly_memo(d, c1, ser); });
    double t_par = time_of([&] { parallel_val = homfly_memo(d, c2, par); });
    std::cout << name << ": crossings=" << d.crossing_count()
              << " serial=" << t_serial << "s parallel=" << t_par << "s";
    if (braid) {
        double t_hecke = time_of([&] { hecke_val = homfly_hecke(*braid); });
        std::cout << " hecke=" << t_hecke << "s";
        if (!(hecke_val == serial_val)) {
            std::cout << " ENGINE MISMATCH\n";
            std::exit(1);
        }
    }
    if (!(serial_val == parallel_val)) {
        std::cout << " SERIAL/PARALLEL MISMATCH\n";
        std::exit(1);
    }
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> names;
    for (int i = 1; i < argc; ++i) names.push_back(argv[i]);
    if (names.empty())
        names = {"trefoil", "figure_eight", "conway_knot", "kt_knot"};
    Catalog cat = Catalog::load(Catalog::default_dir());
    for (const auto& n : names) {
        if (!cat.contains(n)) {
            std::cout << n << ": not in catalog, skipped\n";
            continue;
        }
        const CatalogEntry& e = cat.lookup(n);
        std::optional<BraidWord> braid;
        if (e.kind == "braid") braid = e.as_braid();
        bench_diagram(n, e.as_diagram(), braid);
    }
    return 0;
}
