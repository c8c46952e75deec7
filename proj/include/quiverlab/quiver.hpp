/*
 * Quivers with loops and their Cartan data.
 *
 * A quiver is a finite ordered vertex list plus a list of arrows
 * (multi-arrows and loops allowed).  Loop counts, the real/imaginary
 * split and the Euler forms are always derived from the arrow list,
 * never cached.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace quiverlab {

class quiver_error : public std::runtime_error {
public:
    explicit quiver_error(const std::string& what) : std::runtime_error(what) {}
};

// Dimension vector: finite-support map from vertex labels to multiplicities.
using DimVec = std::map<std::string, int>;

struct Arrow {
    std::string src, tgt;
    bool operator==(const Arrow& o) const { return src == o.src && tgt == o.tgt; }
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int vertex_index(const std::string& label) const;   // throws on unknown label
    bool has_vertex(const std::string& label) const;

    int loop_count(const std::string& label) const;     // l_i
    bool is_imaginary(const std::string& label) const { return loop_count(label) >= 1; }
    bool is_real(const std::string& label) const { return loop_count(label) == 0; }
    std::vector<std::string> imaginary_vertices() const;

    // Arrows as index pairs, in input order.
    std::vector<std::pair<int, int>> arrow_indices() const;

    // Same vertices, all loops removed.
    Quiver positive_part() const;
    // Same arrows with one non-loop arrow (by position in the non-loop
    // sublist) reversed.
    Quiver flip_arrow(int nonloop_position) const;
    std::vector<int> nonloop_arrow_positions() const;

    // Dense vector of multiplicities in vertex order; unknown labels in
    // `d` are an error, missing labels count as 0.
    std::vector<int> dense(const DimVec& d) const;
    DimVec from_dense(const std::vector<int>& v) const;

    // Canonical single-line serialization, used for hashing and cache keys.
    std::string canonical_string() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> index_;
};

int total(const DimVec& d);
bool leq(const DimVec& a, const DimVec& b);            // componentwise
DimVec add(const DimVec& a, const DimVec& b);
DimVec scaled(const DimVec& a, int k);
std::string to_string(const DimVec& d);

// Nonsymmetric Euler form <a,b> = sum_i a_i b_i - sum_w a_{s(w)} b_{t(w)}.
long euler_form(const Quiver& q, const DimVec& a, const DimVec& b);
// (a,b) = <a,b> + <b,a>.
long symmetric_form(const Quiver& q, const DimVec& a, const DimVec& b);

// Borcherds-Cartan matrix: symmetric integer matrix with labeled index
// list and a real/imaginary tag per index.
struct CartanMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<long>> entries;
    std::vector<bool> real_tag;

    long at(int i, int j) const { return entries[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    int size() const { return static_cast<int>(labels.size()); }
    int index_of(const std::string& label) const;
};

CartanMatrix cartan_matrix(const Quiver& q);

// C ~ D: same index lists and tags, equal off-diagonal entries; the
// imaginary diagonal entries are allowed to differ.
bool approx_equivalent(const CartanMatrix& c, const CartanMatrix& d);

// Extended Cartan matrix on the index set {real i} + {(i,n) : i imaginary,
// 1 <= n <= cutoff}; the entry of (i,n),(j,m) is n*m*(i,j).  Extended
// labels are written "<vertex>:<n>".
CartanMatrix extend_cartan(const Quiver& q, int cutoff);

} // namespace quiverlab
