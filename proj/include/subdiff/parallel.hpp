#pragma once

// Grid evaluation helpers shared by the optimizer, the oracle comparison and
// the table sweeps. Every kernel has a serial reference path; the OpenMP path
// writes each result into its own slot, so both produce identical vectors.

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace subdiff {

enum class ExecPolicy { serial, parallel };

/// Evaluates fn(i) for i in [0, count) and returns the results in order.
/// The first exception raised by any evaluation is rethrown after the loop.
template <class T, class Fn>
std::vector<T> evaluate_grid(std::size_t count, Fn&& fn, ExecPolicy policy = ExecPolicy::parallel)
{
    std::vector<T> out(count);
    if (policy == ExecPolicy::serial || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }

    std::vector<std::exception_ptr> errors(count);
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            out[k] = fn(k);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

/// Index of the smallest value; ties go to the lowest index.
inline std::size_t argmin(const std::vector<double>& values)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] < values[best]) best = i;
    return best;
}

}  // namespace subdiff
