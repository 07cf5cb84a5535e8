#include "qrg/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qrg {

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int openmp_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<uint8_t> reflection_mask_serial(const std::vector<QMat2>& elems, int order_cap) {
    std::vector<uint8_t> mask(elems.size(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
        mask[i] = quat_is_reflection(elems[i], order_cap, /*check_unitary=*/false).is_reflection;
    return mask;
}

std::vector<uint8_t> reflection_mask_parallel(const std::vector<QMat2>& elems, int order_cap) {
    std::vector<uint8_t> mask(elems.size(), 0);
    const long n = static_cast<long>(elems.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < n; ++i)
        mask[i] = quat_is_reflection(elems[i], order_cap, /*check_unitary=*/false).is_reflection;
    return mask;
}

std::vector<uint8_t> reflection_mask(const std::vector<QMat2>& elems, int order_cap) {
    return openmp_enabled() ? reflection_mask_parallel(elems, order_cap)
                            : reflection_mask_serial(elems, order_cap);
}

std::vector<int> reflection_orders_serial(const std::vector<QMat2>& elems, int order_cap) {
    std::vector<int> orders(elems.size(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        ReflectionInfo info = quat_is_reflection(elems[i], order_cap, false);
        if (info.is_reflection) orders[i] = info.order;
    }
    return orders;
}

std::vector<int> reflection_orders_parallel(const std::vector<QMat2>& elems, int order_cap) {
    std::vector<int> orders(elems.size(), 0);
    const long n = static_cast<long>(elems.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < n; ++i) {
        ReflectionInfo info = quat_is_reflection(elems[i], order_cap, false);
        if (info.is_reflection) orders[i] = info.order;
    }
    return orders;
}

std::vector<int> reflection_orders(const std::vector<QMat2>& elems, int order_cap) {
    return openmp_enabled() ? reflection_orders_parallel(elems, order_cap)
                            : reflection_orders_serial(elems, order_cap);
}

bool all_unitary_serial(const std::vector<QMat2>& elems) {
    for (const QMat2& m : elems)
        if (!m.is_unitary()) return false;
    return true;
}

bool all_unitary_parallel(const std::vector<QMat2>& elems) {
    return all_of_parallel(elems.size(), [&](std::size_t i) { return elems[i].is_unitary(); });
}

bool all_unitary(const std::vector<QMat2>& elems) {
    return openmp_enabled() ? all_unitary_parallel(elems) : all_unitary_serial(elems);
}

bool all_of_serial(std::size_t n, const std::function<bool(std::size_t)>& pred) {
    for (std::size_t i = 0; i < n; ++i)
        if (!pred(i)) return false;
    return true;
}

bool all_of_parallel(std::size_t n, const std::function<bool(std::size_t)>& pred) {
    std::atomic<bool> ok{true};
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < count; ++i) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        if (!pred(static_cast<std::size_t>(i))) ok.store(false, std::memory_order_relaxed);
    }
    return ok.load();
}

bool all_of_elements(std::size_t n, const std::function<bool(std::size_t)>& pred) {
    return openmp_enabled() ? all_of_parallel(n, pred) : all_of_serial(n, pred);
}

void transform_serial(std::size_t n, const std::function<void(std::size_t)>& f) {
    for (std::size_t i = 0; i < n; ++i) f(i);
}

void transform_parallel(std::size_t n, const std::function<void(std::size_t)>& f) {
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < count; ++i) f(static_cast<std::size_t>(i));
}

void transform_elements(std::size_t n, const std::function<void(std::size_t)>& f) {
    if (openmp_enabled())
        transform_parallel(n, f);
    else
        transform_serial(n, f);
}

} // namespace qrg
