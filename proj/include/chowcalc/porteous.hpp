#ifndef CHOWCALC_PORTEOUS_HPP
#define CHOWCALC_PORTEOUS_HPP

#include <vector>

#include "chowcalc/ring.hpp"

namespace chowcalc {

// Degeneracy-locus class formulas: the Porteous determinant Delta^p_q, the
// expected codimension (a-k)(b-k), and the excess codimension-p term
// [c(K^v ⊗ C) / c(N)]_p used when the locus sits below expected codimension.

/// A map of bundles A -> B of ranks a, b with a rank-<=k locus in question.
struct DegeneracyProblem {
    int a = 0, b = 0, k = 0;
    GradedClass cA, cB; // total Chern classes, unit-leading, same ring

    static DegeneracyProblem make(int a, int b, int k, GradedClass cA, GradedClass cB) {
        if (k < 0 || k >= std::min(a, b))
            throw Error("degeneracy problem needs 0 <= k < min(a, b); got a=" +
                        std::to_string(a) + " b=" + std::to_string(b) + " k=" + std::to_string(k));
        cA.require_same_ring(cB);
        if (truncate(cA, 0) != cA.ring()->one() || truncate(cB, 0) != cB.ring()->one())
            throw Error("degeneracy problem: total Chern classes must be unit-leading");
        return DegeneracyProblem{a, b, k, std::move(cA), std::move(cB)};
    }
};

inline int expected_codim(const DegeneracyProblem& p) { return (p.a - p.k) * (p.b - p.k); }

namespace detail {

// Determinant over the class ring by cofactor expansion along the first row;
// p <= 8 in practice, so cost is irrelevant next to exactness.
inline GradedClass class_det(const std::vector<std::vector<GradedClass>>& m,
                             const RingPresentation::Ptr& ring) {
    const std::size_t n = m.size();
    if (n == 0)
        return ring->one();
    if (n == 1)
        return m[0][0];
    GradedClass det = ring->zero();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<GradedClass>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<GradedClass> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        GradedClass term = m[0][j] * class_det(minor, ring);
        det += (j % 2) ? -term : term;
    }
    return det;
}

} // namespace detail

/// Delta^p_q(c): determinant of the p x p matrix with entry (i, j) equal to
/// the codimension-(q + j - i) component of c (zero for negative
/// codimension, the scalar part for codimension 0).
inline GradedClass delta_pq(const GradedClass& c, int p, int q) {
    if (p < 0 || q < 0)
        throw Error("delta_pq: p and q must be non-negative");
    const auto& ring = c.ring();
    if (p == 0)
        return ring->one();
    std::vector<std::vector<GradedClass>> m(p, std::vector<GradedClass>(p, ring->zero()));
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j) {
            const int codim = q + j - i;
            if (codim >= 0)
                m[i - 1][j - 1] = truncate(c, codim);
        }
    return detail::class_det(m, ring);
}

/// Expected class of the rank-<=k locus: Delta^{a-k}_{b-k}(c(B)/c(A)).
inline GradedClass porteous_class(const DegeneracyProblem& p) {
    GradedClass quotient = p.cB * graded_inverse(p.cA);
    return delta_pq(quotient, p.a - p.k, p.b - p.k);
}

/// Codimension-p piece of c(K^v ⊗ C) / c(N): the class whose pushforward the
/// excess formula equates with the Porteous determinant.
inline GradedClass excess_term(const GradedClass& cKC, const GradedClass& cN, int p) {
    if (p < 0)
        throw Error("excess_term: p must be non-negative");
    cKC.require_same_ring(cN);
    return truncate(cKC * graded_inverse(cN), p);
}

} // namespace chowcalc

#endif
