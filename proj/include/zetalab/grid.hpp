#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "zetalab/common.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

static_assert(std::endian::native == std::endian::little,
              "cache format is little-endian; big-endian hosts are unsupported");

struct SampleGrid {
    double t0 = 0.0;
    double t1 = 0.0;
    double dt = 0.0;
    std::vector<CriticalSample> samples;

    void validate() const {
        require(!samples.empty(), "SampleGrid: empty grid");
        require(dt > 0.0, "SampleGrid: dt > 0 required");
        const auto n = samples.size();
        require(std::abs((t1 - t0) - dt * static_cast<double>(n - 1)) <=
                    1e-12 * std::max(1.0, std::abs(t1)),
                "SampleGrid: t1 - t0 = (n-1) dt violated");
        for (std::size_t i = 1; i < n; ++i) {
            const double gap = samples[i].t - samples[i - 1].t;
            require(gap > 0.0 && std::abs(gap - dt) <= 1e-12 * std::max(1.0, samples[i].t),
                    "SampleGrid: non-uniform spacing beyond 1e-12");
        }
    }

    [[nodiscard]] std::size_t size() const { return samples.size(); }
};

// ---------------------------------------------------------------------------
// cache file: magic "ZMC1"; 32-byte header (t0, t1, dt as little-endian
// doubles, count as little-endian uint64); count records of three doubles
// (t, re, im); FNV-1a 64 checksum of the record bytes.

namespace detail {

inline std::string sanitize_number(double v) {
    std::string s = format_g17(v);
    for (char& ch : s) {
        if (ch == '.') ch = 'p';
        else if (ch == '-') ch = 'm';
        else if (ch == '+') ch = 'q';
    }
    return s;
}

} // namespace detail

inline std::filesystem::path cache_file_path(const std::filesystem::path& dir, double t0,
                                             double t1, double dt) {
    return dir / ("grid_" + detail::sanitize_number(t0) + "_" + detail::sanitize_number(t1) +
                  "_" + detail::sanitize_number(dt) + ".zmc");
}

inline void write_grid_cache(const std::filesystem::path& file, const SampleGrid& grid) {
    namespace fs = std::filesystem;
    fs::create_directories(file.parent_path());
    const fs::path tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("cache: cannot open " + tmp.string() + " for writing");
        out.write("ZMC1", 4);
        const std::uint64_t count = grid.samples.size();
        out.write(reinterpret_cast<const char*>(&grid.t0), 8);
        out.write(reinterpret_cast<const char*>(&grid.t1), 8);
        out.write(reinterpret_cast<const char*>(&grid.dt), 8);
        out.write(reinterpret_cast<const char*>(&count), 8);
        static_assert(sizeof(CriticalSample) == 24);
        out.write(reinterpret_cast<const char*>(grid.samples.data()),
                  static_cast<std::streamsize>(count * sizeof(CriticalSample)));
        const std::uint64_t sum =
            fnv1a64(grid.samples.data(), count * sizeof(CriticalSample));
        out.write(reinterpret_cast<const char*>(&sum), 8);
        if (!out) throw io_error("cache: short write to " + tmp.string());
    }
    fs::rename(tmp, file); // single-writer: atomic publish
}

inline std::optional<SampleGrid> read_grid_cache(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, "ZMC1", 4) != 0) return std::nullopt;
    SampleGrid g;
    std::uint64_t count = 0;
    in.read(reinterpret_cast<char*>(&g.t0), 8);
    in.read(reinterpret_cast<char*>(&g.t1), 8);
    in.read(reinterpret_cast<char*>(&g.dt), 8);
    in.read(reinterpret_cast<char*>(&count), 8);
    if (!in || count == 0 || count > (1ull << 33)) return std::nullopt;
    g.samples.resize(count);
    in.read(reinterpret_cast<char*>(g.samples.data()),
            static_cast<std::streamsize>(count * sizeof(CriticalSample)));
    std::uint64_t stored = 0;
    in.read(reinterpret_cast<char*>(&stored), 8);
    if (!in) return std::nullopt;
    if (stored != fnv1a64(g.samples.data(), count * sizeof(CriticalSample)))
        return std::nullopt; // corrupt payload: caller recomputes and overwrites
    return g;
}

// Build (or load) the uniform sample grid.  A repeated call with identical
// arguments is a cache hit and returns bit-identical samples.
inline SampleGrid build_grid(double t0, double t1, double dt, const PrecisionPolicy& policy,
                             const std::filesystem::path& cache_dir,
                             unsigned threads = default_thread_count()) {
    require(t0 >= 0.0 && t1 > t0, "build_grid: 0 <= t0 < t1 required");
    require(dt > 0.0 && dt <= 0.25, "build_grid: 0 < dt <= 0.25 required");
    const auto n = static_cast<std::size_t>(std::llround((t1 - t0) / dt)) + 1;
    t1 = t0 + dt * static_cast<double>(n - 1); // snap to the grid
    const auto file = cache_file_path(cache_dir, t0, t1, dt);

    if (auto cached = read_grid_cache(file)) {
        if (cached->samples.size() == n && cached->t0 == t0 && cached->t1 == t1 &&
            cached->dt == dt) {
            cached->validate();
            return *std::move(cached);
        }
    }

    SampleGrid g;
    g.t0 = t0;
    g.t1 = t1;
    g.dt = dt;
    g.samples.resize(n);
    constexpr std::size_t kChunk = 512;
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    parallel_chunks(chunks, threads, [&](std::size_t ci) {
        const std::size_t lo = ci * kChunk;
        const std::size_t hi = std::min(n, lo + kChunk);
        for (std::size_t i = lo; i < hi; ++i) {
            const double t = t0 + dt * static_cast<double>(i);
            const cplx z = eval_zeta_half_line(t, policy);
            g.samples[i] = CriticalSample{t, z.real(), z.imag()};
        }
    });
    g.validate();
    write_grid_cache(file, g);
    return g;
}

} // namespace zetalab
