#include "quiverlab/flag_type.hpp"

#include <sstream>

#include "qring/qnumbers.hpp"

namespace quiverlab {

std::string FlagType::str() const {
    std::ostringstream os;
    os << "(";
    for (int l = 0; l < length(); ++l) {
        if (l) os << ",";
        os << vertices[static_cast<size_t>(l)];
    }
    os << ";";
    for (int l = 0; l < length(); ++l) {
        if (l) os << ",";
        os << mults[static_cast<size_t>(l)];
    }
    os << ")";
    return os.str();
}

void validate(const Quiver& q, const FlagType& f) {
    if (f.vertices.size() != f.mults.size())
        throw quiver_error("flag type: sequences of different length");
    for (int l = 0; l < f.length(); ++l) {
        q.vertex_index(f.vertices[static_cast<size_t>(l)]);
        if (f.mults[static_cast<size_t>(l)] < 1)
            throw quiver_error("flag type: multiplicities must be >= 1");
    }
}

DimVec degree(const FlagType& f) {
    DimVec d;
    for (int l = 0; l < f.length(); ++l)
        d[f.vertices[static_cast<size_t>(l)]] += f.mults[static_cast<size_t>(l)];
    return d;
}

bool is_full_flag(const Quiver& q, const FlagType& f) {
    for (int l = 0; l < f.length(); ++l)
        if (q.is_imaginary(f.vertices[static_cast<size_t>(l)]) && f.mults[static_cast<size_t>(l)] != 1)
            return false;
    return true;
}

FlagType bridge_type(const Quiver& q, const FlagType& f) {
    validate(q, f);
    FlagType out;
    for (int l = 0; l < f.length(); ++l) {
        const auto& v = f.vertices[static_cast<size_t>(l)];
        const int a = f.mults[static_cast<size_t>(l)];
        if (q.is_imaginary(v)) {
            for (int k = 0; k < a; ++k) {
                out.vertices.push_back(v);
                out.mults.push_back(1);
            }
        } else {
            out.vertices.push_back(v);
            out.mults.push_back(a);
        }
    }
    return out;
}

namespace {

void enumerate_rec(const Quiver& q, std::vector<int>& remaining, FlagType& cur,
                   FlagMode mode, std::vector<FlagType>& out) {
    bool done = true;
    for (int r : remaining)
        if (r > 0) { done = false; break; }
    if (done) {
        out.push_back(cur);
        return;
    }
    for (int i = 0; i < q.vertex_count(); ++i) {
        const int avail = remaining[static_cast<size_t>(i)];
        if (avail <= 0) continue;
        const bool imaginary = q.is_imaginary(q.vertices()[static_cast<size_t>(i)]);
        // Multiplicity descending gives the documented enumeration order.
        for (int a = avail; a >= 1; --a) {
            if (mode == FlagMode::full_flag && imaginary && a != 1) continue;
            remaining[static_cast<size_t>(i)] -= a;
            cur.vertices.push_back(q.vertices()[static_cast<size_t>(i)]);
            cur.mults.push_back(a);
            enumerate_rec(q, remaining, cur, mode, out);
            cur.vertices.pop_back();
            cur.mults.pop_back();
            remaining[static_cast<size_t>(i)] += a;
        }
    }
}

} // namespace

std::vector<FlagType> enumerate_flag_types(const Quiver& q, const DimVec& nu, FlagMode mode) {
    std::vector<int> remaining = q.dense(nu);
    FlagType cur;
    std::vector<FlagType> out;
    enumerate_rec(q, remaining, cur, mode, out);
    return out;
}

FlagDims flag_dims(const Quiver& q, const FlagType& f) {
    validate(q, f);
    FlagDims d;
    const int n = f.length();
    for (int l = 0; l < n; ++l)
        for (int m = l + 1; m < n; ++m)
            if (f.vertices[static_cast<size_t>(l)] == f.vertices[static_cast<size_t>(m)])
                d.dim_flag += static_cast<long>(f.mults[static_cast<size_t>(l)]) * f.mults[static_cast<size_t>(m)];

    d.dim_tilde = d.dim_flag;
    for (const auto& arrow : q.arrows())
        for (int l = 0; l < n; ++l)
            for (int m = l + 1; m < n; ++m)
                if (f.vertices[static_cast<size_t>(l)] == arrow.src &&
                    f.vertices[static_cast<size_t>(m)] == arrow.tgt)
                    d.dim_tilde += static_cast<long>(f.mults[static_cast<size_t>(l)]) * f.mults[static_cast<size_t>(m)];

    // Point count: product over vertices of the symmetric Gaussian
    // multinomial of the step multiplicities at that vertex.
    d.point_count = qring::LaurentPolynomial::one();
    const DimVec nu = degree(f);
    for (const auto& [v, dim] : nu) {
        std::vector<int> parts;
        for (int l = 0; l < n; ++l)
            if (f.vertices[static_cast<size_t>(l)] == v)
                parts.push_back(f.mults[static_cast<size_t>(l)]);
        d.point_count *= qring::gaussian_multinomial(dim, parts);
    }
    return d;
}

InductionDims induction_dims(const Quiver& q, const DimVec& t, const DimVec& w) {
    const auto dt = q.dense(t);
    const auto dw = q.dense(w);
    InductionDims d;
    for (size_t i = 0; i < dt.size(); ++i)
        d.d2 += static_cast<long>(dt[i]) * dt[i] + static_cast<long>(dw[i]) * dw[i];
    d.d1 = d.d2;
    for (const auto& [s, tgt] : q.arrow_indices())
        d.d1 += static_cast<long>(dt[static_cast<size_t>(s)]) * dw[static_cast<size_t>(tgt)];
    for (size_t i = 0; i < dt.size(); ++i)
        d.d1 += static_cast<long>(dt[i]) * dw[i];
    return d;
}

FlagType concat(const FlagType& a, const FlagType& b) {
    FlagType out = a;
    out.vertices.insert(out.vertices.end(), b.vertices.begin(), b.vertices.end());
    out.mults.insert(out.mults.end(), b.mults.begin(), b.mults.end());
    return out;
}

} // namespace quiverlab
