#ifndef CHOWCALC_SHEAF_HPP
#define CHOWCALC_SHEAF_HPP

#include <vector>

#include "chowcalc/ring.hpp"

namespace chowcalc {

// Characteristic-class calculus via the splitting principle: total Chern
// class <-> Chern character, Todd classes, duals, tensor and symmetric-power
// rules. All expansions are carried exactly to the ambient top codimension;
// the universal formulas are generated from power series, not hardwired, so
// presentations of any finite dimension load cleanly.

/// A vector bundle's class: rank plus total Chern class with leading term 1.
/// Virtual (negative-rank) objects never materialize here; GRR outputs stay
/// Chern characters until a rank is known.
class SheafClass {
public:
    SheafClass(int rank, GradedClass total_chern)
        : rank_(rank), chern_(std::move(total_chern)) {
        if (rank_ < 0)
            throw Error("SheafClass: negative rank " + std::to_string(rank_));
        if (truncate(chern_, 0) != chern_.ring()->one())
            throw Error("SheafClass: total Chern class must have leading term 1, got '" +
                        truncate(chern_, 0).to_string() + "'");
    }

    int rank() const { return rank_; }
    const GradedClass& chern() const { return chern_; }
    const RingPresentation::Ptr& ring() const { return chern_.ring(); }

    /// The codimension-i Chern class c_i.
    GradedClass c(int i) const { return truncate(chern_, i); }

    friend bool operator==(const SheafClass& a, const SheafClass& b) {
        return a.rank_ == b.rank_ && a.chern_ == b.chern_;
    }

private:
    int rank_;
    GradedClass chern_;
};

inline SheafClass trivial_bundle(const RingPresentation::Ptr& ring, int rank) {
    return SheafClass(rank, ring->one());
}

inline SheafClass line_bundle(const GradedClass& c1) {
    if (!c1.is_homogeneous(1))
        throw Error("line_bundle: c1 must be homogeneous of codimension 1");
    return SheafClass(1, c1.ring()->one() + c1);
}

/// Direct sum: ranks add, total Chern classes multiply.
inline SheafClass direct_sum(const SheafClass& a, const SheafClass& b) {
    return SheafClass(a.rank() + b.rank(), a.chern() * b.chern());
}

namespace detail {

// Power sums p_k of the Chern roots from the elementary symmetric functions
// e_k = c_k, by Newton's identities; index 0 unused.
inline std::vector<GradedClass> chern_power_sums(const GradedClass& total_chern) {
    const int n = total_chern.ring()->top_codim();
    std::vector<GradedClass> e, p;
    e.reserve(n + 1);
    p.assign(n + 1, total_chern.ring()->zero());
    for (int i = 0; i <= n; ++i)
        e.push_back(truncate(total_chern, i));
    for (int k = 1; k <= n; ++k) {
        GradedClass sum = Rational(k % 2 ? 1 : -1) * Rational(k) * e[k];
        for (int i = 1; i < k; ++i)
            sum += Rational(i % 2 ? 1 : -1) * (e[i] * p[k - i]);
        p[k] = sum;
    }
    return p;
}

/// exp of a class with no codimension-0 part.
inline GradedClass class_exp(const GradedClass& g) {
    const int n = g.ring()->top_codim();
    GradedClass result = g.ring()->one();
    GradedClass power = g.ring()->one();
    Rational factorial = 1;
    for (int j = 1; j <= n; ++j) {
        power = power * g;
        if (power.is_zero())
            break;
        factorial *= j;
        result += power * (Rational(1) / factorial);
    }
    return result;
}

// Dense power series over the rationals, coefficients [0..n].
inline std::vector<Rational> series_inverse(const std::vector<Rational>& f) {
    std::vector<Rational> g(f.size(), 0);
    g[0] = Rational(1) / f[0];
    for (std::size_t k = 1; k < f.size(); ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i)
            acc += f[i] * g[k - i];
        g[k] = -acc / f[0];
    }
    return g;
}

inline std::vector<Rational> series_log1p(const std::vector<Rational>& f) {
    // log f for f with constant term 1: sum (-1)^(k-1) (f-1)^k / k.
    const std::size_t n = f.size();
    std::vector<Rational> u(f);
    u[0] = 0;
    std::vector<Rational> power(n, 0), result(n, 0);
    power[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<Rational> next(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 1; i + j < n; ++j)
                next[i + j] += power[i] * u[j];
        power = std::move(next);
        const Rational sign = (k % 2) ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i)
            result[i] += sign * power[i] / Rational(k);
    }
    return result;
}

// Coefficients a_k of log(x / (1 - e^{-x})), so that td = exp(sum a_k p_k).
inline std::vector<Rational> todd_log_series(int n) {
    std::vector<Rational> denom(n + 1, 0);
    Rational factorial = 1;
    for (int k = 0; k <= n; ++k) {
        factorial *= (k + 1);
        denom[k] = Rational(k % 2 ? -1 : 1) / factorial; // (1 - e^{-x}) / x
    }
    return series_log1p(series_inverse(denom));
}

} // namespace detail

/// ch(F) = rank + c1 + (c1^2 - 2 c2)/2 + ..., exact to top codimension.
inline GradedClass chern_character(const SheafClass& F) {
    const auto p = detail::chern_power_sums(F.chern());
    GradedClass ch = Rational(F.rank()) * F.ring()->one();
    Rational factorial = 1;
    for (int k = 1; k <= F.ring()->top_codim(); ++k) {
        factorial *= k;
        ch += p[k] * (Rational(1) / factorial);
    }
    return ch;
}

/// Newton-identity inversion of chern_character; the codimension-0 part of
/// ch must equal the stated rank.
inline SheafClass chern_from_character(const GradedClass& ch, int rank) {
    const auto& ring = ch.ring();
    if (truncate(ch, 0) != Rational(rank) * ring->one())
        throw Error("chern_from_character: leading term '" + truncate(ch, 0).to_string() +
                    "' does not match rank " + std::to_string(rank));
    const int n = ring->top_codim();
    std::vector<GradedClass> p(n + 1, ring->zero()), e(n + 1, ring->zero());
    Rational factorial = 1;
    for (int k = 1; k <= n; ++k) {
        factorial *= k;
        p[k] = truncate(ch, k) * factorial;
    }
    e[0] = ring->one();
    GradedClass total = ring->one();
    for (int k = 1; k <= n; ++k) {
        GradedClass sum = ring->zero();
        for (int i = 1; i <= k; ++i)
            sum += Rational(i % 2 ? 1 : -1) * (e[k - i] * p[i]);
        e[k] = sum * (Rational(1) / Rational(k));
        total += e[k];
    }
    return SheafClass(rank, total);
}

/// td(F) = 1 + c1/2 + (c1^2 + c2)/12 + ..., generated from the series
/// expansion of x/(1 - e^{-x}) so every order is available.
inline GradedClass todd(const SheafClass& F) {
    const int n = F.ring()->top_codim();
    if (n == 0)
        return F.ring()->one();
    const auto a = detail::todd_log_series(n);
    const auto p = detail::chern_power_sums(F.chern());
    GradedClass g = F.ring()->zero();
    for (int k = 1; k <= n; ++k)
        g += p[k] * a[k];
    return detail::class_exp(g);
}

/// c_i(dual F) = (-1)^i c_i(F).
inline SheafClass dual(const SheafClass& F) {
    GradedClass total = F.ring()->zero();
    for (int i = 0; i <= F.ring()->top_codim(); ++i) {
        GradedClass part = F.c(i);
        total += (i % 2) ? -part : part;
    }
    return SheafClass(F.rank(), total);
}

/// First Chern class of a tensor product: rank(B) c1(A) + rank(A) c1(B).
inline GradedClass tensor_c1(const SheafClass& A, const SheafClass& B) {
    A.chern().require_same_ring(B.chern());
    return Rational(B.rank()) * A.c(1) + Rational(A.rank()) * B.c(1);
}

namespace detail {

// Polynomials in two commuting formal variables, used for the symmetric
// power expansion; key = (exponent, exponent).
using Bivariate = std::map<std::pair<int, int>, Rational>;

inline void bivar_add(Bivariate& p, std::pair<int, int> mono, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = p.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            p.erase(it);
    }
}

inline Bivariate bivar_mul(const Bivariate& a, const Bivariate& b, int max_total_degree) {
    Bivariate r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            const int dx = ma.first + mb.first, dy = ma.second + mb.second;
            if (dx + dy > max_total_degree)
                continue;
            bivar_add(r, {dx, dy}, ca * cb);
        }
    return r;
}

} // namespace detail

/// Sym^n of a rank-2 bundle: rank n+1; Chern classes from the formal-root
/// product of (1 + i*alpha + (n-i)*beta) over i = 0..n, with alpha + beta =
/// c1(V) and alpha*beta = c2(V), expanded into elementary symmetric
/// polynomials and evaluated in the ambient ring.
inline SheafClass sym_power_rank2(const SheafClass& V, int n) {
    if (V.rank() != 2)
        throw Error("sym_power_rank2: bundle has rank " + std::to_string(V.rank()) +
                    ", expected 2");
    if (n < 0)
        throw Error("sym_power_rank2: negative power");
    const auto& ring = V.ring();
    const int top = ring->top_codim();

    // Product of the formal factors, truncated by total degree.
    detail::Bivariate product{{{0, 0}, 1}};
    for (int i = 0; i <= n; ++i) {
        detail::Bivariate factor{{{0, 0}, 1}};
        detail::bivar_add(factor, {1, 0}, i);
        detail::bivar_add(factor, {0, 1}, n - i);
        product = detail::bivar_mul(product, factor, top);
    }

    // Power sums alpha^k + beta^k as polynomials in (e1, e2); the Bivariate
    // key is reused as (e1-exponent, e2-exponent). Newton for two roots:
    // p1 = e1, p2 = e1^2 - 2 e2, p_k = e1 p_{k-1} - e2 p_{k-2}.
    std::vector<detail::Bivariate> psum(std::max(top + 1, 3));
    psum[1] = {{{1, 0}, 1}};
    psum[2] = {{{2, 0}, 1}, {{0, 1}, -2}};
    for (int k = 3; k <= top; ++k) {
        detail::Bivariate a = detail::bivar_mul({{{1, 0}, 1}}, psum[k - 1], 2 * top);
        detail::Bivariate b = detail::bivar_mul({{{0, 1}, 1}}, psum[k - 2], 2 * top);
        for (const auto& [m, c] : b)
            detail::bivar_add(a, m, -c);
        psum[k] = std::move(a);
    }

    // Rewrite each symmetric homogeneous component in e1, e2.
    const GradedClass e1 = V.c(1), e2 = V.c(2);
    auto eval_e_poly = [&](const detail::Bivariate& poly) {
        GradedClass out = ring->zero();
        for (const auto& [m, c] : poly) {
            GradedClass term = Rational(c) * ring->one();
            for (int i = 0; i < m.first; ++i)
                term = term * e1;
            for (int i = 0; i < m.second; ++i)
                term = term * e2;
            out += term;
        }
        return out;
    };

    GradedClass total = ring->one();
    for (int d = 1; d <= top; ++d) {
        detail::Bivariate in_e;
        for (const auto& [m, c] : product) {
            const int p = m.first, q = m.second;
            if (p + q != d || p < q)
                continue;
            if (p == q) {
                detail::bivar_add(in_e, {0, q}, c); // c * e2^q
            } else {
                auto mirror = product.find({q, p});
                if (mirror == product.end() || mirror->second != c)
                    throw Error("sym_power_rank2: internal symmetry violation");
                // c * e2^q * (alpha^(p-q) + beta^(p-q))
                for (const auto& [pm, pc] : psum[p - q])
                    detail::bivar_add(in_e, {pm.first, pm.second + q}, c * pc);
            }
        }
        total += truncate(eval_e_poly(in_e), d);
    }
    return SheafClass(n + 1, total);
}

} // namespace chowcalc

#endif
