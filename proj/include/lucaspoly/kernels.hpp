#pragma once

// Multiplication kernels behind BiPoly::operator*. The serial kernel is the
// reference; the parallel kernel partitions the product by output s-degree
// and runs the rows under OpenMP. Both return canonical polynomials and must
// agree term for term.

#include <cstddef>

#include "lucaspoly/bipoly.hpp"

namespace lucaspoly::kernels {

BiPoly mul_serial(const BiPoly& a, const BiPoly& b);
BiPoly mul_parallel(const BiPoly& a, const BiPoly& b);

/// Products with at least this many term pairs go to the parallel kernel when
/// more than one OpenMP thread is available.
inline constexpr std::size_t kParallelThreshold = 4096;

}  // namespace lucaspoly::kernels
