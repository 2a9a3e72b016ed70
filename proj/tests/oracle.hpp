#pragma once
// Brute-force reference implementations, deliberately independent of the
// engine's generic-rank machinery: mono detection by exhaustive integer
// grid search over the hom space, measure by direct recursion over all
// shorter classes.

#include <map>
#include <stdexcept>

#include "grtk/grengine.hpp"

namespace oracle {

using namespace grtk;

inline bool grid_full_rank(const HomBasis& hb, const Representation& X,
                           const Representation& Y, int radius)
{
    int k = hb.dim();
    int nv = X.q->vertex_count;
    std::vector<int> c(k, -radius);
    while (true) {
        bool mono = true;
        for (int v = 0; v < nv && mono; ++v) {
            if (X.dims[v] == 0) continue;
            Matrix F(int(Y.dims[v]), int(X.dims[v]));
            for (int i = 0; i < k; ++i) {
                if (c[i] == 0) continue;
                for (size_t p = 0; p < F.a.size(); ++p)
                    F.a[p] += Rat(c[i]) * hb.basis[i][v].a[p];
            }
            if (rat_rank(std::move(F)) < X.dims[v]) mono = false;
        }
        if (mono) return true;
        int pos = 0;
        while (pos < k && c[pos] == radius) c[pos++] = -radius;
        if (pos == k) return false;
        ++c[pos];
    }
}

inline bool sample_full_rank(const HomBasis& hb, const Representation& X,
                             const Representation& Y)
{
    // deterministic LCG-driven coefficient samples for hom spaces too large
    // for the exhaustive grid
    int k = hb.dim();
    int nv = X.q->vertex_count;
    unsigned long long s = 88172645463325252ULL;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long> c(k);
        for (auto& x : c) {
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            x = long((s >> 33) % 19) - 9;
        }
        bool mono = true;
        for (int v = 0; v < nv && mono; ++v) {
            if (X.dims[v] == 0) continue;
            Matrix F(int(Y.dims[v]), int(X.dims[v]));
            for (int i = 0; i < k; ++i) {
                if (c[i] == 0) continue;
                for (size_t p = 0; p < F.a.size(); ++p)
                    F.a[p] += Rat(c[i]) * hb.basis[i][v].a[p];
            }
            if (rat_rank(std::move(F)) < X.dims[v]) mono = false;
        }
        if (mono) return true;
    }
    return false;
}

inline bool mono_exists(const Quiver& q, const IsoClass& X, const IsoClass& Y)
{
    if (!dim_leq(X.dims, Y.dims)) return false;
    Representation rx = class_to_rep(q, X);
    Representation ry = class_to_rep(q, Y);
    HomBasis hb = hom_basis(rx, ry);
    if (hb.dim() == 0) return false;
    if (grid_full_rank(hb, rx, ry, 1)) return true;
    if (hb.dim() <= 6 && grid_full_rank(hb, rx, ry, 3)) return true;
    return hb.dim() > 6 && sample_full_rank(hb, rx, ry);
}

struct MeasureOracle {
    const Quiver& q;
    std::vector<IsoClass> universe;  // everything up to the bound, sorted
    std::map<std::string, GRMeasure> memo;

    MeasureOracle(Context& ctx, int max_len)
        : q(*ctx.q), universe(enumerate_indecomposables(ctx, max_len))
    {
    }

    GRMeasure measure(const IsoClass& M)
    {
        auto it = memo.find(M.key);
        if (it != memo.end()) return it->second;
        GRMeasure res;
        if (M.length == 1) {
            res = GRMeasure({1});
        }
        else {
            GRMeasure best;
            for (const auto& N : universe) {
                if (N.length >= M.length) break;  // universe is length-sorted
                IsoClass cand = N;
                if (cand.band && M.band && cand.lambda != M.lambda)
                    cand = make_band_class(q, cand.bword, cand.mult, M.lambda);
                if (!dim_leq(cand.dims, M.dims)) continue;
                if (!mono_exists(q, cand, M)) continue;
                GRMeasure m = measure(cand);
                if (best.empty() || measure_less(best, m)) best = m;
            }
            if (best.empty()) throw std::runtime_error("oracle: no submodule");
            res = extend(best, int(M.length));
        }
        memo[M.key] = res;
        return res;
    }
};

/* the general engine path in isolation: candidate sorting plus mono tests,
 * recursing into itself rather than into the dispatching gr_measure */
struct GeneralPath {
    Context& ctx;
    std::map<std::string, GRMeasure> memo;

    explicit GeneralPath(Context& c) : ctx(c) {}

    GRMeasure measure(const IsoClass& M)
    {
        auto it = memo.find(M.key);
        if (it != memo.end()) return it->second;
        GRMeasure res;
        if (M.length == 1) {
            res = GRMeasure({1});
        }
        else {
            std::vector<std::pair<GRMeasure, IsoClass>> order;
            for (const auto& c : enumerate_indecomposables(ctx, int(M.length) - 1)) {
                IsoClass cc = c;
                if (cc.band && M.band && cc.lambda != M.lambda)
                    cc = make_band_class(*ctx.q, cc.bword, cc.mult, M.lambda);
                if (!dim_leq(cc.dims, M.dims)) continue;
                order.emplace_back(measure(cc), cc);
            }
            std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
                Ordering cmp = compare(a.first, b.first);
                if (cmp != Ordering::EQ) return cmp == Ordering::GT;
                return a.second.key < b.second.key;
            });
            GRMeasure best;
            for (const auto& [mu, c] : order)
                if (ctx.exists_mono(c, M)) {
                    best = mu;
                    break;
                }
            if (best.empty()) throw std::runtime_error("general path: no submodule");
            res = extend(best, int(M.length));
        }
        memo[M.key] = res;
        return res;
    }
};

}  // namespace oracle
