#include "quiverlab/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace quiverlab {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
        if (!index_.emplace(vertices_[static_cast<size_t>(i)], i).second)
            throw quiver_error("duplicate vertex label '" + vertices_[static_cast<size_t>(i)] + "'");
    }
    for (const auto& a : arrows_) {
        if (!index_.count(a.src))
            throw quiver_error("arrow source '" + a.src + "' is not a vertex");
        if (!index_.count(a.tgt))
            throw quiver_error("arrow target '" + a.tgt + "' is not a vertex");
    }
}

int Quiver::vertex_index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        throw quiver_error("unknown vertex label '" + label + "'");
    return it->second;
}

bool Quiver::has_vertex(const std::string& label) const { return index_.count(label) > 0; }

int Quiver::loop_count(const std::string& label) const {
    vertex_index(label);
    int n = 0;
    for (const auto& a : arrows_)
        if (a.src == label && a.tgt == label) ++n;
    return n;
}

std::vector<std::string> Quiver::imaginary_vertices() const {
    std::vector<std::string> out;
    for (const auto& v : vertices_)
        if (is_imaginary(v)) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> Quiver::arrow_indices() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(arrows_.size());
    for (const auto& a : arrows_)
        out.emplace_back(vertex_index(a.src), vertex_index(a.tgt));
    return out;
}

Quiver Quiver::positive_part() const {
    std::vector<Arrow> rest;
    for (const auto& a : arrows_)
        if (a.src != a.tgt) rest.push_back(a);
    return Quiver(vertices_, rest);
}

std::vector<int> Quiver::nonloop_arrow_positions() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(arrows_.size()); ++i)
        if (arrows_[static_cast<size_t>(i)].src != arrows_[static_cast<size_t>(i)].tgt)
            out.push_back(i);
    return out;
}

Quiver Quiver::flip_arrow(int nonloop_position) const {
    const auto positions = nonloop_arrow_positions();
    if (nonloop_position < 0 || nonloop_position >= static_cast<int>(positions.size()))
        throw quiver_error("flip_arrow: no such non-loop arrow");
    std::vector<Arrow> arr = arrows_;
    auto& a = arr[static_cast<size_t>(positions[static_cast<size_t>(nonloop_position)])];
    std::swap(a.src, a.tgt);
    return Quiver(vertices_, arr);
}

std::vector<int> Quiver::dense(const DimVec& d) const {
    std::vector<int> out(vertices_.size(), 0);
    for (const auto& [label, mult] : d) {
        if (mult < 0) throw quiver_error("negative multiplicity at vertex '" + label + "'");
        out[static_cast<size_t>(vertex_index(label))] = mult;
    }
    return out;
}

DimVec Quiver::from_dense(const std::vector<int>& v) const {
    if (v.size() != vertices_.size())
        throw quiver_error("dense dimension vector has wrong length");
    DimVec d;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) d[vertices_[i]] = v[i];
    return d;
}

std::string Quiver::canonical_string() const {
    std::ostringstream os;
    os << "v:";
    for (const auto& v : vertices_) os << v << ",";
    os << ";a:";
    for (const auto& a : arrows_) os << a.src << ">" << a.tgt << ",";
    return os.str();
}

int total(const DimVec& d) {
    int t = 0;
    for (const auto& [_, m] : d) t += m;
    return t;
}

bool leq(const DimVec& a, const DimVec& b) {
    for (const auto& [label, m] : a) {
        auto it = b.find(label);
        const int bm = it == b.end() ? 0 : it->second;
        if (m > bm) return false;
    }
    return true;
}

DimVec add(const DimVec& a, const DimVec& b) {
    DimVec out = a;
    for (const auto& [label, m] : b) {
        out[label] += m;
        if (out[label] == 0) out.erase(label);
    }
    return out;
}

DimVec scaled(const DimVec& a, int k) {
    DimVec out;
    if (k == 0) return out;
    for (const auto& [label, m] : a)
        out[label] = m * k;
    return out;
}

std::string to_string(const DimVec& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, m] : d) {
        if (!first) os << ",";
        os << label << ":" << m;
        first = false;
    }
    return first ? "0" : os.str();
}

long euler_form(const Quiver& q, const DimVec& a, const DimVec& b) {
    const auto da = q.dense(a);
    const auto db = q.dense(b);
    long val = 0;
    for (size_t i = 0; i < da.size(); ++i)
        val += static_cast<long>(da[i]) * db[i];
    for (const auto& [s, t] : q.arrow_indices())
        val -= static_cast<long>(da[static_cast<size_t>(s)]) * db[static_cast<size_t>(t)];
    return val;
}

long symmetric_form(const Quiver& q, const DimVec& a, const DimVec& b) {
    return euler_form(q, a, b) + euler_form(q, b, a);
}

int CartanMatrix::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels[static_cast<size_t>(i)] == label) return i;
    throw quiver_error("unknown Cartan index '" + label + "'");
}

CartanMatrix cartan_matrix(const Quiver& q) {
    CartanMatrix c;
    c.labels = q.vertices();
    const int n = q.vertex_count();
    c.entries.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            DimVec ei{{q.vertices()[static_cast<size_t>(i)], 1}};
            DimVec ej{{q.vertices()[static_cast<size_t>(j)], 1}};
            c.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = symmetric_form(q, ei, ej);
        }
        c.real_tag.push_back(q.is_real(q.vertices()[static_cast<size_t>(i)]));
    }
    return c;
}

bool approx_equivalent(const CartanMatrix& c, const CartanMatrix& d) {
    if (c.labels != d.labels)
        throw quiver_error("approx_equivalent: mismatched index lists");
    if (c.real_tag != d.real_tag) return false;
    for (int i = 0; i < c.size(); ++i)
        for (int j = 0; j < c.size(); ++j)
            if (i != j && c.at(i, j) != d.at(i, j)) return false;
    // Real diagonal entries are 2 on both sides once the tags agree.
    return true;
}

CartanMatrix extend_cartan(const Quiver& q, int cutoff) {
    if (cutoff < 1) throw quiver_error("extend_cartan: cutoff must be >= 1");
    // Index entries as (vertex, n): n = 1 fixed for real vertices,
    // 1..cutoff for imaginary ones.
    std::vector<std::pair<std::string, int>> idx;
    for (const auto& v : q.vertices())
        if (q.is_real(v)) idx.emplace_back(v, 1);
    for (const auto& v : q.vertices())
        if (q.is_imaginary(v))
            for (int n = 1; n <= cutoff; ++n) idx.emplace_back(v, n);

    CartanMatrix c;
    const int n = static_cast<int>(idx.size());
    c.entries.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        const auto& [vi, ni] = idx[static_cast<size_t>(i)];
        c.labels.push_back(q.is_real(vi) ? vi : vi + ":" + std::to_string(ni));
        for (int j = 0; j < n; ++j) {
            const auto& [vj, nj] = idx[static_cast<size_t>(j)];
            DimVec ei{{vi, 1}}, ej{{vj, 1}};
            c.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                static_cast<long>(ni) * nj * symmetric_form(q, ei, ej);
        }
        c.real_tag.push_back(c.entries[static_cast<size_t>(i)][static_cast<size_t>(i)] == 2);
    }
    return c;
}

} // namespace quiverlab
