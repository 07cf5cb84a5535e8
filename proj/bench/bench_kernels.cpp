// Benchmark: serial reference vs OpenMP kernels on the reflection scan, the
// unitarity scan and group materialization.

#include <chrono>
#include <iostream>
#include <string>

#include "qrg/gkh.hpp"
#include "qrg/kernels.hpp"

using namespace qrg;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_it(F&& f) {
    auto t0 = Clock::now();
    f();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_group(const std::string& name, const GKHGroup& g) {
    std::vector<QMat2> mats;
    double t_mat = time_it([&] { mats = g.materialize_all(); });

    std::vector<uint8_t> mask_s, mask_p;
    double t_refl_s = time_it([&] { mask_s = reflection_mask_serial(mats); });
    double t_refl_p = time_it([&] { mask_p = reflection_mask_parallel(mats); });
    bool agree = mask_s == mask_p;

    double t_uni_s = time_it([&] { (void)all_unitary_serial(mats); });
    double t_uni_p = time_it([&] { (void)all_unitary_parallel(mats); });

    long reflections = 0;
    for (uint8_t b : mask_s) reflections += b;

    std::cout << name << "  order=" << g.order() << "  reflections=" << reflections << "\n";
    std::cout << "  materialize            " << t_mat << " s\n";
    std::cout << "  reflection scan serial " << t_refl_s << " s\n";
    std::cout << "  reflection scan openmp " << t_refl_p << " s  (speedup "
              << (t_refl_p > 0 ? t_refl_s / t_refl_p : 0) << "x, agree=" << agree << ")\n";
    std::cout << "  unitarity scan serial  " << t_uni_s << " s\n";
    std::cout << "  unitarity scan openmp  " << t_uni_p << " s  (speedup "
              << (t_uni_p > 0 ? t_uni_s / t_uni_p : 0) << "x)\n";
}

} // namespace

int main(int argc, char** argv) {
    bool big = argc > 1 && std::string(argv[1]) == "--big";
    std::cout << "openmp: " << (openmp_enabled() ? "on" : "off")
              << ", threads: " << openmp_threads() << "\n\n";
    bench_group("G(I,C:2,id)", gkh_polyhedral(GroupName::I(), "C:2", "id"));
    bench_group("G(O,O,id)", gkh_polyhedral(GroupName::O(), "O", "id"));
    if (big) bench_group("G(I,I,id)", gkh_polyhedral(GroupName::I(), "I", "id"));
    return 0;
}
