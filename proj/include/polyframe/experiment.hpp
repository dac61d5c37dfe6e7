#pragma once

#include "strings.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

namespace polyframe {

enum class ExperimentKind { GaussianSimplex, RandomFrameSimplex, RandomFrameCube };

inline std::string kind_name(ExperimentKind k)
{
    switch (k) {
    case ExperimentKind::GaussianSimplex:
        return "gaussian_simplex";
    case ExperimentKind::RandomFrameSimplex:
        return "random_frame_simplex";
    case ExperimentKind::RandomFrameCube:
        return "random_frame_cube";
    }
    return "?";
}

inline ExperimentKind parse_kind(const std::string& s)
{
    for (auto k : {ExperimentKind::GaussianSimplex, ExperimentKind::RandomFrameSimplex, ExperimentKind::RandomFrameCube})
        if (kind_name(k) == s)
            return k;
    throw InputError("unknown experiment kind '" + s + "'");
}

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::GaussianSimplex;
    int dim_lo = 3, dim_hi = 3;
    int samples = 100;
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0 = hardware concurrency; never affects results
};

inline constexpr int experiment_max_dim = 12;
inline constexpr int experiment_max_cube_dim = 7;
inline constexpr int experiment_max_samples = 10000;

struct SampleResult {
    std::vector<bool> loop_at;  // k = 0..d-2
    int resampled = 0;

    bool any() const { return std::find(loop_at.begin(), loop_at.end(), true) != loop_at.end(); }
};

struct DimReport {
    int dim = 0;
    int samples = 0;
    int resampled = 0;
    std::vector<int> loops_by_k;
    int with_loop = 0;

    double fraction() const { return samples ? static_cast<double>(with_loop) / samples : 0.0; }
};

struct ExperimentReport {
    ExperimentSpec spec;
    std::vector<DimReport> dims;
};

namespace detail {

// Standard normals by Box-Muller on 53-bit uniforms.
class Gaussian {
public:
    explicit Gaussian(std::seed_seq& s) : rng_(s) {}

    double operator()()
    {
        if (spare_) {
            double z = *spare_;
            spare_.reset();
            return z;
        }
        double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1p-53;  // (0, 1]
        double u2 = static_cast<double>(rng_() >> 11) * 0x1p-53;
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        return r * std::cos(a);
    }

    // Exact dyadic value of the double.
    Rat exact() { return Rat((*this)()); }

private:
    std::mt19937_64 rng_;
    std::optional<double> spare_;
};

inline std::optional<FramedPolytope> draw(ExperimentKind kind, int d, Gaussian& g)
{
    auto gaussian_frame = [&](std::size_t n) -> std::optional<Frame> {
        std::vector<RVec> cols(n, RVec(n));
        for (auto& c : cols)
            for (auto& x : c)
                x = g.exact();
        if (rank(RMat::from_columns(cols, n)) < n)
            return std::nullopt;
        // unnormalized Gram-Schmidt; positive rescaling keeps the f-orientation
        return orthogonalize(Frame::from_vectors(cols));
    };
    std::optional<FramedPolytope> fp;
    switch (kind) {
    case ExperimentKind::GaussianSimplex: {
        PointConfig c;
        c.dim = static_cast<std::size_t>(d);
        for (int i = 0; i <= d; ++i) {
            RVec p(c.dim);
            for (auto& x : p)
                x = g.exact();
            c.points.push_back(p);
            c.labels.push_back(std::to_string(i + 1));
        }
        if (affine_dim(c.points) != d)
            return std::nullopt;
        fp.emplace(c, Frame::canonical(c.dim));
        break;
    }
    case ExperimentKind::RandomFrameSimplex: {
        auto f = gaussian_frame(static_cast<std::size_t>(d + 1));
        if (!f)
            return std::nullopt;
        fp.emplace(make_family({Family::Simplex, 0, d, {}}), *f);
        break;
    }
    case ExperimentKind::RandomFrameCube: {
        auto f = gaussian_frame(static_cast<std::size_t>(d));
        if (!f)
            return std::nullopt;
        fp.emplace(make_family({Family::Cube, 0, d, {}}), *f);
        break;
    }
    }
    if (!fp->admissible())
        return std::nullopt;
    return fp;
}

} // namespace detail

inline constexpr int experiment_max_attempts = 64;

// One sample, seeded only by (seed, dim, index, attempt).
inline SampleResult run_sample(const ExperimentSpec& spec, int d, int idx)
{
    SampleResult r;
    for (int attempt = 0; attempt < experiment_max_attempts; ++attempt) {
        std::seed_seq s{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                        static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(idx),
                        static_cast<std::uint32_t>(attempt)};
        detail::Gaussian g(s);
        auto fp = detail::draw(spec.kind, d, g);
        if (!fp) {
            ++r.resampled;
            continue;
        }
        for (int k = 0; k <= d - 2; ++k)
            r.loop_at.push_back(has_k_loop(*fp, k));
        return r;
    }
    throw InternalError("experiment: no admissible draw after " + std::to_string(experiment_max_attempts) + " attempts");
}

inline void validate(const ExperimentSpec& spec)
{
    if (spec.dim_lo < 1 || spec.dim_hi < spec.dim_lo)
        throw InputError("experiment: need 1 <= A <= B in --dims A..B");
    if (spec.dim_hi > experiment_max_dim)
        throw InputError("experiment: dimension above " + std::to_string(experiment_max_dim) + " refused");
    if (spec.kind == ExperimentKind::RandomFrameCube && spec.dim_hi > experiment_max_cube_dim)
        throw InputError("experiment: cube dimension above " + std::to_string(experiment_max_cube_dim) + " refused");
    if (spec.samples < 1 || spec.samples > experiment_max_samples)
        throw InputError("experiment: samples must lie in 1.." + std::to_string(experiment_max_samples));
}

inline ExperimentReport run_experiment(const ExperimentSpec& spec)
{
    validate(spec);
    struct Job {
        int d, idx;
    };
    std::vector<Job> jobs;
    for (int d = spec.dim_lo; d <= spec.dim_hi; ++d)
        for (int i = 0; i < spec.samples; ++i)
            jobs.push_back({d, i});
    std::vector<SampleResult> results(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    unsigned nt = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    nt = std::min<unsigned>(nt, static_cast<unsigned>(jobs.size()));
    auto work = [&] {
        for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
            try {
                results[j] = run_sample(spec, jobs[j].d, jobs[j].idx);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < nt; ++t)
        pool.emplace_back(work);
    work();
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);

    ExperimentReport rep{spec, {}};
    std::size_t j = 0;
    for (int d = spec.dim_lo; d <= spec.dim_hi; ++d) {
        DimReport dr;
        dr.dim = d;
        dr.loops_by_k.assign(static_cast<std::size_t>(std::max(0, d - 1)), 0);
        for (int i = 0; i < spec.samples; ++i, ++j) {
            const auto& r = results[j];
            ++dr.samples;
            dr.resampled += r.resampled;
            for (std::size_t k = 0; k < r.loop_at.size(); ++k)
                dr.loops_by_k[k] += r.loop_at[k];
            dr.with_loop += r.any();
        }
        rep.dims.push_back(dr);
    }
    return rep;
}

// Small integer point sets and integer frames, redrawn until full-dimensional and admissible.
inline FramedPolytope random_framed_polytope(std::mt19937_64& rng, int d, int max_extra = 3, int box = 6)
{
    std::uniform_int_distribution<int> coord(-box, box), frame_entry(-4, 4), extra(0, max_extra);
    for (;;) {
        int n = d + 1 + extra(rng);
        std::set<RVec> pts;
        while (static_cast<int>(pts.size()) < n) {
            RVec p(static_cast<std::size_t>(d));
            for (auto& x : p)
                x = coord(rng);
            pts.insert(p);
        }
        std::vector<RVec> all(pts.begin(), pts.end());
        if (affine_dim(all) != d)
            continue;
        PointConfig c;
        c.dim = static_cast<std::size_t>(d);
        for (int i : hull_vertex_indices(all)) {
            c.points.push_back(all[static_cast<std::size_t>(i)]);
            c.labels.push_back("v" + std::to_string(c.points.size()));
        }
        std::vector<RVec> cols(static_cast<std::size_t>(d), RVec(static_cast<std::size_t>(d)));
        for (auto& col : cols)
            for (auto& x : col)
                x = frame_entry(rng);
        if (rank(RMat::from_columns(cols, static_cast<std::size_t>(d))) < static_cast<std::size_t>(d))
            continue;
        FramedPolytope fp(c, Frame::from_vectors(cols));
        if (fp.admissible())
            return fp;
    }
}

} // namespace polyframe
