#pragma once

/// Data-parallel scans over element lists. Every kernel has a serial
/// reference implementation (the ground truth used by the tests) and an
/// OpenMP variant; run_parallel() reports which one the dispatchers use.

#include <cstdint>
#include <functional>
#include <vector>

#include "qrg/qmat.hpp"

namespace qrg {

bool openmp_enabled();
int openmp_threads();

/// One byte per element: 1 if quat_is_reflection accepts it.
std::vector<uint8_t> reflection_mask_serial(const std::vector<QMat2>& elems, int order_cap = kDefaultOrderCap);
std::vector<uint8_t> reflection_mask_parallel(const std::vector<QMat2>& elems, int order_cap = kDefaultOrderCap);
std::vector<uint8_t> reflection_mask(const std::vector<QMat2>& elems, int order_cap = kDefaultOrderCap);

/// Orders of the reflections only (zero elsewhere).
std::vector<int> reflection_orders_serial(const std::vector<QMat2>& elems, int order_cap = kDefaultOrderCap);
std::vector<int> reflection_orders_parallel(const std::vector<QMat2>& elems, int order_cap = kDefaultOrderCap);
std::vector<int> reflection_orders(const std::vector<QMat2>& elems, int order_cap = kDefaultOrderCap);

/// All elements unitary?
bool all_unitary_serial(const std::vector<QMat2>& elems);
bool all_unitary_parallel(const std::vector<QMat2>& elems);
bool all_unitary(const std::vector<QMat2>& elems);

/// Per-element predicate scan (conjunction). The predicate must be pure.
bool all_of_serial(std::size_t n, const std::function<bool(std::size_t)>& pred);
bool all_of_parallel(std::size_t n, const std::function<bool(std::size_t)>& pred);
bool all_of_elements(std::size_t n, const std::function<bool(std::size_t)>& pred);

/// Per-element map into a preallocated slot (out[i] = f(i)).
void transform_serial(std::size_t n, const std::function<void(std::size_t)>& f);
void transform_parallel(std::size_t n, const std::function<void(std::size_t)>& f);
void transform_elements(std::size_t n, const std::function<void(std::size_t)>& f);

} // namespace qrg
