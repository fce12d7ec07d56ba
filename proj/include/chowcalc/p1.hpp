#ifndef CHOWCALC_P1_HPP
#define CHOWCALC_P1_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "chowcalc/rational.hpp"

namespace chowcalc {

// Exact linear algebra for splitting types on the projective line: section
// counts, explicit monomial multiplication-map matrices, ranks and coranks,
// and the Hurwitz-space numerology of the genus-11 strata.

/// Degrees of the line-bundle summands of a split bundle, stored ascending.
class SplittingType {
public:
    SplittingType() = default;
    SplittingType(std::initializer_list<int> parts) : parts_(parts) { normalize(); }
    explicit SplittingType(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    int sum() const {
        int s = 0;
        for (int d : parts_)
            s += d;
        return s;
    }

    SplittingType twisted(int e) const {
        std::vector<int> out(parts_);
        for (int& d : out)
            d += e;
        return SplittingType(std::move(out));
    }

    SplittingType merged(const SplittingType& other) const {
        std::vector<int> out(parts_);
        out.insert(out.end(), other.parts_.begin(), other.parts_.end());
        return SplittingType(std::move(out));
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(parts_[i]);
        }
        return out + ")";
    }

    friend bool operator==(const SplittingType& a, const SplittingType& b) {
        return a.parts_ == b.parts_;
    }

private:
    void normalize() { std::sort(parts_.begin(), parts_.end()); }
    std::vector<int> parts_;
};

/// h^0 of a split bundle on the line. Parts below -1 are rejected: there the
/// section count and the Euler characteristic disagree, and nothing in the
/// shipped computations needs that regime.
inline int h0(const SplittingType& split) {
    int total = 0;
    for (int d : split.parts()) {
        if (d < -1)
            throw Error("h0: summand of degree " + std::to_string(d) +
                        " (below -1) is unsupported");
        total += std::max(d + 1, 0);
    }
    return total;
}

struct RationalMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rational> entries; // row-major

    static RationalMatrix zero(std::size_t rows, std::size_t cols) {
        RationalMatrix m;
        m.rows = rows;
        m.cols = cols;
        m.entries.assign(rows * cols, Rational(0));
        return m;
    }

    Rational& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Matrix of the bilinear multiplication map
///   H^0(⊕ O(d_i)) ⊗ H^0(O(e)) -> H^0(⊕ O(d_i + e))
/// in monomial bases ordered by descending power of the first coordinate,
/// block per summand. Rows index the target basis, columns the source ⊗
/// twist basis.
inline RationalMatrix mult_map_matrix(const SplittingType& split, int twist_space_deg = 1) {
    const int e = twist_space_deg;
    if (e < -1)
        throw Error("mult_map_matrix: twist degree below -1 is unsupported");
    (void)h0(split);          // validates the parts
    (void)h0(split.twisted(e)); // and the twisted parts
    const int twist_dim = std::max(e + 1, 0);

    std::size_t rows = 0, cols = 0;
    for (int d : split.parts()) {
        rows += static_cast<std::size_t>(std::max(d + e + 1, 0));
        cols += static_cast<std::size_t>(std::max(d + 1, 0)) * twist_dim;
    }
    RationalMatrix m = RationalMatrix::zero(rows, cols);

    std::size_t row_base = 0, col = 0;
    for (int d : split.parts()) {
        const int src_dim = std::max(d + 1, 0);
        const int tgt_dim = std::max(d + e + 1, 0);
        // source monomial x^j y^(d-j), twist monomial x^k y^(e-k); the
        // product x^(j+k) sits at row (d+e) - (j+k) of this block.
        for (int j = d; j >= d - src_dim + 1; --j)
            for (int k = e; k >= e - twist_dim + 1; --k)
                m.at(row_base + static_cast<std::size_t>(d + e - j - k), col++) = 1;
        row_base += static_cast<std::size_t>(tgt_dim);
    }
    return m;
}

/// Exact rank by fraction-free (Bareiss) Gaussian elimination over the
/// integers, after clearing row denominators.
inline std::size_t rank(const RationalMatrix& m) {
    if (m.rows == 0 || m.cols == 0)
        return 0;
    std::vector<std::vector<Integer>> a(m.rows, std::vector<Integer>(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r) {
        Integer scale = 1;
        for (std::size_t c = 0; c < m.cols; ++c)
            scale = boost::multiprecision::lcm(scale, denominator(m.at(r, c)));
        for (std::size_t c = 0; c < m.cols; ++c) {
            Rational v = m.at(r, c) * Rational(scale);
            a[r][c] = numerator(v);
        }
    }

    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == m.rows)
            continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            for (std::size_t j = col + 1; j < m.cols; ++j)
                a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[r][col];
        ++r;
    }
    return r;
}

inline std::size_t corank(const RationalMatrix& m) { return m.rows - rank(m); }

struct HurwitzDims {
    int dim_hurwitz;       // 2g + 3
    int dim_bielliptic;    // 2g - 2
    int dim_preimage;      // 2g - 1
    int codim_preimage;    // 4, independent of g
    int codim_bielliptic;  // g - 1
};

inline HurwitzDims hurwitz_dims(int g) {
    if (g < 2)
        throw Error("hurwitz_dims: genus must be at least 2");
    return HurwitzDims{2 * g + 3, 2 * g - 2, 2 * g - 1, 4, g - 1};
}

/// One stratum of the genus-11 splitting-type table. The codimensions are
/// tabulated input data (they come from a stratum-codimension formula this
/// library does not implement), and are flagged as such.
struct BiellipticStratum {
    SplittingType e_type, f_type;
    int codim;
    bool codim_tabulated;
    std::string label;
};

inline std::vector<BiellipticStratum> genus11_bielliptic_strata() {
    return {
        {SplittingType{1, 6, 7}, SplittingType{2, 12}, 2, true, "hyperelliptic-related"},
        {SplittingType{2, 6, 6}, SplittingType{4, 10}, 4, true, "general bielliptic"},
        {SplittingType{2, 5, 7}, SplittingType{4, 10}, 5, true, "special bielliptic"},
    };
}

} // namespace chowcalc

#endif
