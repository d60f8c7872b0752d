#ifndef MC_PARALLEL_HPP
#define MC_PARALLEL_HPP

#include <cstdlib>
#include <exception>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mc::par {

enum class Mode { Serial, OpenMP };

// Default mode: OpenMP when compiled in, unless MC_SERIAL is set.
inline Mode& mode() {
    static Mode m = [] {
#ifdef _OPENMP
        return std::getenv("MC_SERIAL") ? Mode::Serial : Mode::OpenMP;
#else
        return Mode::Serial;
#endif
    }();
    return m;
}

// Serial reference loop; the parallel kernels below must match it exactly.
template <class F>
void serial_for(long n, F&& body) {
    for (long i = 0; i < n; ++i) body(i);
}

template <class F>
void parallel_for(long n, F&& body) {
#ifdef _OPENMP
    if (mode() == Mode::OpenMP) {
        // exceptions must not unwind across the OpenMP region
        std::exception_ptr first_error;
        std::mutex mu;
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!first_error) first_error = std::current_exception();
            }
        }
        if (first_error) std::rethrow_exception(first_error);
        return;
    }
#endif
    serial_for(n, body);
}

// Fill out[i] = f(i); results identical between modes by construction.
template <class T, class F>
std::vector<T> parallel_map(long n, F&& f) {
    std::vector<T> out(static_cast<size_t>(n));
    parallel_for(n, [&](long i) { out[static_cast<size_t>(i)] = f(i); });
    return out;
}

template <class T, class F>
std::vector<T> serial_map(long n, F&& f) {
    std::vector<T> out(static_cast<size_t>(n));
    serial_for(n, [&](long i) { out[static_cast<size_t>(i)] = f(i); });
    return out;
}

// Deterministic reduction: per-index terms are computed in parallel, the
// fold itself runs in index order.
template <class T, class F, class R>
T parallel_reduce(long n, T init, F&& term, R&& fold) {
    auto terms = parallel_map<T>(n, term);
    T acc = init;
    for (auto& t : terms) acc = fold(acc, t);
    return acc;
}

template <class T, class F, class R>
T serial_reduce(long n, T init, F&& term, R&& fold) {
    T acc = init;
    for (long i = 0; i < n; ++i) acc = fold(acc, term(i));
    return acc;
}

}  // namespace mc::par

#endif
