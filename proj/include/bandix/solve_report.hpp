#pragma once

#include <chrono>
#include <cstddef>

#include "bandix/band_matrix.hpp"
#include "bandix/op_counter.hpp"

namespace bandix {

template <Field S>
struct SolveReport {
    Vector<S> x;
    std::size_t iterations = 0;  // 0 for direct methods
    double residual_inf = 0.0;
    OpCounter ops;               // the whole solve, setup included
    OpCounter iteration_ops;     // loop body only; empty for direct methods
    double wall_seconds = 0.0;
};

/// Monotonic wall-clock stopwatch.
class Stopwatch {
public:
    Stopwatch() : start_(clock::now()) {}
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_;
};

}  // namespace bandix
