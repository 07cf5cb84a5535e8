#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <thread>

#include "qrg/extpoly.hpp"
#include "qrg/gkh.hpp"
#include "qrg/kernels.hpp"

using namespace qrg;

// The OpenMP kernels must agree with the serial reference implementations.

TEST_CASE("reflection scans: serial reference vs parallel") {
    std::vector<QMat2> mats = gkh_polyhedral(GroupName::O(), "C:2", "id").materialize_all();
    CHECK(reflection_mask_serial(mats) == reflection_mask_parallel(mats));
    CHECK(reflection_orders_serial(mats) == reflection_orders_parallel(mats));

    std::vector<QMat2> ext = ExtPolyGroup::boxdot(8, 1, GroupName::T()).materialize_all();
    CHECK(reflection_mask_serial(ext) == reflection_mask_parallel(ext));
    CHECK(reflection_orders_serial(ext) == reflection_orders_parallel(ext));
}

TEST_CASE("unitarity scans agree") {
    std::vector<QMat2> mats = gkh_standard_dihedral(5, 2, 1).materialize_all();
    CHECK(all_unitary_serial(mats));
    CHECK(all_unitary_parallel(mats));
    mats.push_back(QMat2::diag(Quat::one() + Quat::one(), Quat::one()));
    CHECK_FALSE(all_unitary_serial(mats));
    CHECK_FALSE(all_unitary_parallel(mats));
}

TEST_CASE("predicate scans agree including early failure") {
    auto pred = [](std::size_t i) { return i != 37; };
    CHECK(all_of_serial(30, pred) == all_of_parallel(30, pred));
    CHECK(all_of_serial(100, pred) == all_of_parallel(100, pred));
    CHECK_FALSE(all_of_parallel(100, pred));
}

TEST_CASE("transform kernels fill every slot") {
    std::vector<int> a(1000, 0), b(1000, 0);
    transform_serial(a.size(), [&](std::size_t i) { a[i] = static_cast<int>(3 * i + 1); });
    transform_parallel(b.size(), [&](std::size_t i) { b[i] = static_cast<int>(3 * i + 1); });
    CHECK(a == b);
}

TEST_CASE("concurrent builds share the caches safely") {
    std::vector<std::thread> workers;
    std::atomic<int> total{0};
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&, t] {
            // Distinct groups per thread, shared Phi_n and sgroup caches.
            GKHGroup g = gkh_standard_dihedral(3 + t, 2, 1);
            total += g.order();
            SGroupPtr i = sgroup(GroupName::I());
            total += i->order();
        });
    for (auto& w : workers) w.join();
    int expected = 4 * 120;
    for (int t = 0; t < 4; ++t) expected += 16 * (3 + t);
    CHECK(total == expected);
}

TEST_CASE("report the backend") {
    // Informational: the dispatchers pick OpenMP when compiled in.
    CHECK(openmp_threads() >= 1);
    MESSAGE("openmp enabled: ", openmp_enabled(), ", threads: ", openmp_threads());
}
