#ifndef CHOWCALC_TESTS_SUPPORT_HPP
#define CHOWCALC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "chowcalc/chowcalc.hpp"

// Deterministic random generators for the property suites. Seeds are fixed
// per test case so failures reproduce.
namespace testsupport {

using namespace chowcalc;

class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(gen_);
    }

    Rational rational(int max_abs_num = 9, int max_den = 4) {
        int num = uniform(-max_abs_num, max_abs_num);
        int den = uniform(1, max_den);
        return Rational(num) / den;
    }

    Rational nonzero_rational(int max_abs_num = 9, int max_den = 4) {
        Rational r = rational(max_abs_num, max_den);
        while (r == 0)
            r = rational(max_abs_num, max_den);
        return r;
    }

    /// Sparse polynomial in the given parameters, degree <= 2 per parameter.
    ParamPolynomial poly(const std::vector<std::string>& params, int max_terms = 3) {
        ParamPolynomial p(rational());
        const int terms = uniform(0, max_terms);
        for (int t = 0; t < terms; ++t) {
            ParamPolynomial mono(rational());
            for (const auto& name : params)
                if (uniform(0, 1))
                    mono *= ParamPolynomial::parameter(name, uniform(1, 2));
            p += mono;
        }
        return p;
    }

    /// Random mixed-codimension class with polynomial coefficients.
    GradedClass cls(const RingPresentation::Ptr& ring) {
        GradedClass c(ring);
        for (std::size_t i = 0; i < ring->size(); ++i)
            if (uniform(0, 2))
                c.set_coeff(i, poly(ring->parameters()));
        return c;
    }

    /// Random class with an invertible (nonzero constant) leading term.
    GradedClass unit_leading(const RingPresentation::Ptr& ring) {
        GradedClass c = cls(ring);
        c.set_coeff(ring->unit_index(), ParamPolynomial(nonzero_rational()));
        return c;
    }

    /// Random honest bundle class: unit leading term, random positive parts.
    SheafClass sheaf(const RingPresentation::Ptr& ring, int max_rank = 4) {
        GradedClass total = cls(ring);
        total.set_coeff(ring->unit_index(), ParamPolynomial(1));
        return SheafClass(uniform(0, max_rank), total);
    }

    SheafClass line(const RingPresentation::Ptr& ring) {
        GradedClass c1(ring);
        for (std::size_t i = 0; i < ring->size(); ++i)
            if (ring->codim(i) == 1 && uniform(0, 1))
                c1.set_coeff(i, poly(ring->parameters()));
        return line_bundle(c1);
    }

private:
    std::mt19937 gen_;
};

inline std::vector<RingPresentation::Ptr> builtin_test_rings() {
    return {builtin_ring("EtimesZ"), builtin_ring("PV"), builtin_ring("Z"),
            builtin_ring("Qt6")};
}

// Independent determinant oracle: the plain Leibniz permutation sum, kept
// deliberately separate from the library's cofactor expansion.
inline GradedClass leibniz_det(const std::vector<std::vector<GradedClass>>& m,
                               const RingPresentation::Ptr& ring) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    GradedClass det = ring->zero();
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        GradedClass term = ring->one();
        for (std::size_t i = 0; i < n; ++i)
            term = term * m[i][perm[i]];
        det += (inversions % 2) ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

inline GradedClass oracle_delta_pq(const GradedClass& c, int p, int q) {
    const auto& ring = c.ring();
    std::vector<std::vector<GradedClass>> m(p, std::vector<GradedClass>(p, ring->zero()));
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j)
            if (q + j - i >= 0)
                m[i - 1][j - 1] = truncate(c, q + j - i);
    return leibniz_det(m, ring);
}

} // namespace testsupport

#endif
