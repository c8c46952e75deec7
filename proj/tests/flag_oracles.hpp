/*
 * Brute-force flag and representation-point enumeration used as an
 * independent oracle against the engine's counting routines.
 */
#pragma once

#include "oracles.hpp"
#include "quiverlab/flag_type.hpp"
#include "quiverlab/quiver.hpp"

namespace oracles {

// A graded flag chain: chain[l][vertex] = basis rows of V^l at that
// vertex, in ambient coordinates.  chain[0] is the full space.
using GradedSpace = std::vector<Mat>;
using FlagChain = std::vector<GradedSpace>;

inline Mat identity(int d) {
    Mat m(static_cast<size_t>(d), Vec(static_cast<size_t>(d), 0));
    for (int i = 0; i < d; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

inline bool contained(const Mat& sub, const Mat& big, int p) {
    for (const auto& v : sub)
        if (!in_span(big, v, p)) return false;
    return true;
}

inline void flags_rec(const quiverlab::Quiver& q, const std::vector<int>& nu,
                      const std::vector<int>& fverts, const std::vector<int>& fmults,
                      size_t step, FlagChain& chain, int p, std::vector<FlagChain>& out) {
    if (step == fverts.size()) {
        out.push_back(chain);
        return;
    }
    const int vi = fverts[step];
    const int drop = fmults[step];
    const GradedSpace cur = chain.back();   // copy: chain reallocates below
    const int curdim = static_cast<int>(cur[static_cast<size_t>(vi)].size());
    const int newdim = curdim - drop;
    if (newdim < 0) return;
    for (const auto& sub : all_subspaces(nu[static_cast<size_t>(vi)], newdim, p)) {
        if (!contained(sub, cur[static_cast<size_t>(vi)], p)) continue;
        GradedSpace next = cur;
        next[static_cast<size_t>(vi)] = sub;
        chain.push_back(next);
        flags_rec(q, nu, fverts, fmults, step + 1, chain, p, out);
        chain.pop_back();
    }
}

inline std::vector<FlagChain> all_flags(const quiverlab::Quiver& q, const quiverlab::FlagType& f, int p) {
    const auto nu = q.dense(quiverlab::degree(f));
    std::vector<int> fverts, fmults;
    for (int l = 0; l < f.length(); ++l) {
        fverts.push_back(q.vertex_index(f.vertices[static_cast<size_t>(l)]));
        fmults.push_back(f.mults[static_cast<size_t>(l)]);
    }
    GradedSpace full;
    for (int i = 0; i < q.vertex_count(); ++i) full.push_back(identity(nu[static_cast<size_t>(i)]));
    FlagChain chain{full};
    std::vector<FlagChain> out;
    flags_rec(q, nu, fverts, fmults, 0, chain, p, out);
    return out;
}

// All points of E_V(F_p): one matrix per arrow, shape nu_tgt x nu_src.
inline std::vector<std::vector<Mat>> all_points(const quiverlab::Quiver& q,
                                                const std::vector<int>& nu, int p) {
    const auto arrows = q.arrow_indices();
    std::vector<std::pair<int, int>> shapes;
    long cells = 0;
    for (const auto& [s, t] : arrows) {
        shapes.emplace_back(nu[static_cast<size_t>(t)], nu[static_cast<size_t>(s)]);
        cells += static_cast<long>(nu[static_cast<size_t>(t)]) * nu[static_cast<size_t>(s)];
    }
    std::vector<std::vector<Mat>> out;
    std::vector<int> digits(static_cast<size_t>(cells), 0);
    while (true) {
        std::vector<Mat> x;
        size_t pos = 0;
        for (const auto& [r, c] : shapes) {
            Mat m(static_cast<size_t>(r), Vec(static_cast<size_t>(c), 0));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = digits[pos++];
            x.push_back(std::move(m));
        }
        out.push_back(std::move(x));
        long i = cells - 1;
        while (i >= 0 && digits[static_cast<size_t>(i)] == p - 1) digits[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        ++digits[static_cast<size_t>(i)];
    }
    return out;
}

inline bool is_stable(const quiverlab::Quiver& q, const FlagChain& chain,
                      const std::vector<Mat>& x, int p) {
    const auto arrows = q.arrow_indices();
    for (size_t w = 0; w < arrows.size(); ++w) {
        const auto& [s, t] = arrows[w];
        for (size_t l = 1; l < chain.size(); ++l) {
            const Mat& src = chain[l - 1][static_cast<size_t>(s)];
            const Mat& tgt = chain[l][static_cast<size_t>(t)];
            for (const auto& u : src) {
                const Vec img = apply(x[w], u, p);
                bool zero = true;
                for (int c : img) if (c % p != 0) { zero = false; break; }
                if (zero) continue;
                if (!in_span(tgt, img, p)) return false;
            }
        }
    }
    return true;
}

} // namespace oracles
