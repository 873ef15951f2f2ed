#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace zetalab {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;
inline constexpr double kSqrtPi = 1.77245385090551602730;
inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kLog2Pi = 1.83787706640934548356;

inline constexpr const char* kVersion = "zetalab 0.1.0";

// ---------------------------------------------------------------------------
// error taxonomy: every precondition failure names the violated condition so
// the CLI can report it verbatim and exit nonzero.

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct domain_error : error {
    using error::error;
};
struct precision_error : error {
    using error::error;
};
struct budget_error : error {
    using error::error;
};
struct io_error : error {
    using error::error;
};
struct data_error : error {
    using error::error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw domain_error(what);
}

// ---------------------------------------------------------------------------
// compensated (Neumaier) summation; all reductions that must be deterministic
// under reordering go through this with a fixed chunk order.

struct NeumaierSum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    [[nodiscard]] double value() const { return s + c; }
};

inline double compensated_total(const std::vector<double>& parts) {
    NeumaierSum acc;
    for (double p : parts) acc.add(p);
    return acc.value();
}

// ---------------------------------------------------------------------------
// chunked parallel map.  Chunk boundaries depend only on `n`, never on the
// worker count, and partial results are combined in chunk order, so results
// are bit-identical for any thread count.

inline unsigned default_thread_count() {
    unsigned hc = std::thread::hardware_concurrency();
    return std::clamp(hc, 1u, 8u);
}

template <class Fn>
void parallel_chunks(std::size_t n_chunks, unsigned threads, Fn&& body) {
    if (n_chunks == 0) return;
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n_chunks)));
    if (threads == 1) {
        for (std::size_t i = 0; i < n_chunks; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n_chunks) return;
                body(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// FNV-1a 64-bit checksum; used for the sample-cache payload and file digests.

inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t seed = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

// numeric formatting is locale-independent: snprintf with the "C" numeric
// locale (never changed by this library), '.' decimal point, LF endings.
inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_hex64(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// least-squares slope of y against x (straight line), with normal equations
// in long double; tiny fixed-size problem.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    bool degenerate = false;
};

inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    LineFit out;
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) {
        out.degenerate = true;
        return out;
    }
    long double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += static_cast<long double>(x[i]) * x[i];
        sxy += static_cast<long double>(x[i]) * y[i];
    }
    const long double det = n * sxx - sx * sx;
    if (det <= 0) {
        out.degenerate = true;
        return out;
    }
    out.slope = static_cast<double>((n * sxy - sx * sy) / det);
    out.intercept = static_cast<double>((sy * sxx - sx * sxy) / det);
    return out;
}

} // namespace zetalab
