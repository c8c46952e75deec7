/*
 * Brute-force oracles used by the test suites.  Everything here is an
 * independent, straightforward enumeration over small finite fields; it
 * deliberately shares no code with the main library so that the two can
 * check each other.
 */
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracles {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;   // rows

inline int mod_inv(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    return 0;
}

// Reduced row echelon form; returns rank.  Rows become a canonical basis
// of the row space (zero rows dropped).
inline int rref(Mat& m, int p) {
    int rank = 0;
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (m[r][c] % p != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const int inv = mod_inv(m[rank][c], p);
        for (auto& x : m[rank]) x = x * inv % p;
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == rank || m[r][c] % p == 0) continue;
            const int f = m[r][c] % p;
            for (int j = 0; j < cols; ++j)
                m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    m.resize(static_cast<size_t>(rank));
    return rank;
}

inline std::string key_of(const Mat& m) {
    std::string k;
    for (const auto& row : m)
        for (int x : row) k += static_cast<char>('0' + x);
    return k;
}

// All vectors of F_p^d in lexicographic order.
inline std::vector<Vec> all_vectors(int d, int p) {
    std::vector<Vec> out;
    Vec v(static_cast<size_t>(d), 0);
    while (true) {
        out.push_back(v);
        int i = d - 1;
        while (i >= 0 && v[static_cast<size_t>(i)] == p - 1) v[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        ++v[static_cast<size_t>(i)];
    }
    return out;
}

// All k-dimensional subspaces of F_p^d, each as a canonical RREF basis.
// Enumerates spans of k-tuples of vectors; fine for the desk-scale ranges
// the tests use.
inline std::vector<Mat> all_subspaces(int d, int k, int p) {
    std::vector<Mat> out;
    if (k == 0) { out.push_back(Mat{}); return out; }
    const auto vecs = all_vectors(d, p);
    std::set<std::string> seen;
    std::vector<size_t> pick(static_cast<size_t>(k), 0);
    while (true) {
        Mat m;
        for (size_t i : pick) m.push_back(vecs[i]);
        Mat r = m;
        if (rref(r, p) == k && seen.insert(key_of(r)).second)
            out.push_back(r);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == vecs.size() - 1) pick[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
    }
    return out;
}

inline long subspace_count(int d, int k, int p) {
    return static_cast<long>(all_subspaces(d, k, p).size());
}

inline bool in_span(const Mat& basis, const Vec& v, int p) {
    Mat m = basis;
    m.push_back(v);
    Mat b = basis;
    return rref(m, p) == rref(b, p);
}

// Matrix-vector product over F_p (matrix given by rows of length = |v|).
inline Vec apply(const Mat& a, const Vec& v, int p) {
    Vec out(a.size(), 0);
    for (size_t r = 0; r < a.size(); ++r) {
        long s = 0;
        for (size_t c = 0; c < v.size(); ++c) s += static_cast<long>(a[r][c]) * v[c];
        out[r] = static_cast<int>(s % p);
    }
    return out;
}

inline long partition_count(int n) {
    std::vector<long> p(static_cast<size_t>(n) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; ++m)
            p[static_cast<size_t>(m)] += p[static_cast<size_t>(m - k)];
    return p[static_cast<size_t>(n)];
}

inline long composition_count(int n) { return n == 0 ? 1 : 1L << (n - 1); }

} // namespace oracles
