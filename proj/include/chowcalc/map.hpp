#ifndef CHOWCALC_MAP_HPP
#define CHOWCALC_MAP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chowcalc/sheaf.hpp"

namespace chowcalc {

// A proper map between two presented rings. Descriptors carry only the
// pullback (a ring homomorphism, verified on all basis pairs), the relative
// dimension, an optional finite degree, and the relative Todd class.
// Pushforward is not tabulated: it is computed from the intersection pairing
// of the target, which keeps a single source of truth.

namespace detail {

// Determinant over the scalar polynomial ring by first-row expansion; the
// pairing matrices are tiny (<= 3x3 for every shipped ring).
inline ParamPolynomial poly_det(const std::vector<std::vector<ParamPolynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 0)
        return ParamPolynomial(1);
    if (n == 1)
        return m[0][0];
    ParamPolynomial det;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<ParamPolynomial>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<ParamPolynomial> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        ParamPolynomial term = m[0][j] * poly_det(minor);
        det += (j % 2) ? -term : term;
    }
    return det;
}

} // namespace detail

class MapDescriptor;
inline GradedClass pull(const MapDescriptor& m, const GradedClass& x);
inline GradedClass push(const MapDescriptor& m, const GradedClass& x);

class MapDescriptor {
public:
    using Ptr = std::shared_ptr<const MapDescriptor>;

    struct Data {
        std::string name;
        RingPresentation::Ptr source, target;
        int relative_dim = 0;
        std::optional<long long> finite_degree;
        std::vector<GradedClass> pullback; // one class in source per target basis element
        GradedClass relative_todd;         // td of the relative tangent complex, in source
    };

    static Ptr make(Data data) {
        auto m = Ptr(new MapDescriptor(std::move(data)));
        m->validate();
        return m;
    }

    const std::string& name() const { return name_; }
    const RingPresentation::Ptr& source() const { return source_; }
    const RingPresentation::Ptr& target() const { return target_; }
    int relative_dim() const { return relative_dim_; }
    const std::optional<long long>& finite_degree() const { return finite_degree_; }
    const GradedClass& pullback_of_basis(std::size_t i) const { return pullback_[i]; }
    const GradedClass& relative_todd() const { return relative_todd_; }

    /// The same map with a parameter substituted everywhere (rings, pullback
    /// classes, relative Todd class).
    Ptr substituted(const std::string& param, const Rational& value,
                    const RingPresentation::Ptr& new_source,
                    const RingPresentation::Ptr& new_target) const {
        Data data;
        data.name = name_;
        data.source = new_source;
        data.target = new_target;
        data.relative_dim = relative_dim_;
        data.finite_degree = finite_degree_;
        for (const auto& c : pullback_)
            data.pullback.push_back(c.substitute(param, value, new_source));
        data.relative_todd = relative_todd_.substitute(param, value, new_source);
        return make(std::move(data));
    }

private:
    explicit MapDescriptor(Data data)
        : name_(std::move(data.name)),
          source_(std::move(data.source)),
          target_(std::move(data.target)),
          relative_dim_(data.relative_dim),
          finite_degree_(data.finite_degree),
          pullback_(std::move(data.pullback)),
          relative_todd_(std::move(data.relative_todd)) {}

    void validate() const {
        if (!source_ || !target_)
            throw Error("map '" + name_ + "': missing source or target ring");
        if (pullback_.size() != target_->size())
            throw Error("map '" + name_ + "': pullback must cover every target basis element");
        for (std::size_t i = 0; i < pullback_.size(); ++i) {
            if (pullback_[i].ring().get() != source_.get())
                throw Error("map '" + name_ + "': pullback of '" + target_->symbol(i) +
                            "' lives in the wrong ring");
            if (!pullback_[i].is_homogeneous(target_->codim(i)))
                throw Error("map '" + name_ + "': pullback of '" + target_->symbol(i) +
                            "' does not preserve codimension");
        }
        if (pullback_[target_->unit_index()] != source_->one())
            throw Error("map '" + name_ + "': pullback of the unit is not the unit");
        if (finite_degree_ && relative_dim_ != 0)
            throw Error("map '" + name_ + "': finite maps must have relative dimension 0");
        if (relative_todd_.ring().get() != source_.get())
            throw Error("map '" + name_ + "': relative Todd class lives in the wrong ring");
        if (truncate(relative_todd_, 0) != source_->one())
            throw Error("map '" + name_ + "': relative Todd class must have leading term 1");

        // Pullback is a ring homomorphism on all basis pairs.
        for (std::size_t i = 0; i < target_->size(); ++i)
            for (std::size_t j = i; j < target_->size(); ++j) {
                GradedClass lhs = pullback_[i] * pullback_[j];
                GradedClass rhs = source_->zero();
                for (const auto& [k, coeff] : target_->product(i, j))
                    rhs += coeff * pullback_[k];
                if (lhs != rhs)
                    throw Error("map '" + name_ + "': pullback is not a ring homomorphism on (" +
                                target_->symbol(i) + ", " + target_->symbol(j) + ")");
            }

        // For finite maps, the fundamental class pushes to degree * [target].
        if (finite_degree_) {
            GradedClass pushed = push(*this, source_->one());
            if (pushed != Rational(*finite_degree_) * target_->one())
                throw Error("map '" + name_ + "': fundamental class does not push to " +
                            std::to_string(*finite_degree_) + " * [target]");
        }
    }

    std::string name_;
    RingPresentation::Ptr source_, target_;
    int relative_dim_;
    std::optional<long long> finite_degree_;
    std::vector<GradedClass> pullback_;
    GradedClass relative_todd_;
};

/// Linear extension of the basis pullback.
inline GradedClass pull(const MapDescriptor& m, const GradedClass& x) {
    if (x.ring().get() != m.target().get())
        throw Error("pull along '" + m.name() + "': class is not in the target ring");
    GradedClass out = m.source()->zero();
    for (const auto& [i, c] : x.coeffs())
        out += c * m.pullback_of_basis(i);
    return out;
}

/// Pushforward via the intersection pairing: the unique y with
/// deg(y * w) = deg(x * pull(w)) for every basis element w of complementary
/// codimension. Solved exactly (Cramer over the scalar polynomial ring).
inline GradedClass push(const MapDescriptor& m, const GradedClass& x) {
    if (x.ring().get() != m.source().get())
        throw Error("push along '" + m.name() + "': class is not in the source ring");
    const auto& target = m.target();
    GradedClass out = target->zero();

    for (int cs = 0; cs <= m.source()->top_codim(); ++cs) {
        GradedClass xc = truncate(x, cs);
        if (xc.is_zero())
            continue;
        const int ct = cs - m.relative_dim();
        if (ct < 0 || ct > target->top_codim())
            continue; // pushes to zero

        std::vector<std::size_t> unknowns, duals;
        for (std::size_t i = 0; i < target->size(); ++i) {
            if (target->codim(i) == ct)
                unknowns.push_back(i);
            if (target->codim(i) == target->top_codim() - ct)
                duals.push_back(i);
        }

        std::vector<ParamPolynomial> rhs;
        rhs.reserve(duals.size());
        for (std::size_t w : duals)
            rhs.push_back(integrate(xc * pull(m, target->basis_class(w))));

        if (unknowns.empty()) {
            for (const auto& r : rhs)
                if (!r.is_zero())
                    throw Error("push along '" + m.name() +
                                "': degenerate pairing (no basis in codimension " +
                                std::to_string(ct) + " to carry a nonzero pairing)");
            continue;
        }
        if (duals.size() != unknowns.size())
            throw Error("push along '" + m.name() + "': degenerate pairing (codimension " +
                        std::to_string(ct) + " pairs with a basis of different size)");

        std::vector<std::vector<ParamPolynomial>> pairing(
            duals.size(), std::vector<ParamPolynomial>(unknowns.size()));
        for (std::size_t r = 0; r < duals.size(); ++r)
            for (std::size_t c = 0; c < unknowns.size(); ++c)
                pairing[r][c] =
                    integrate(target->basis_class(unknowns[c]) * target->basis_class(duals[r]));

        const ParamPolynomial det = detail::poly_det(pairing);
        if (det.is_zero())
            throw Error("push along '" + m.name() + "': degenerate pairing in codimension " +
                        std::to_string(ct));
        for (std::size_t c = 0; c < unknowns.size(); ++c) {
            auto replaced = pairing;
            for (std::size_t r = 0; r < duals.size(); ++r)
                replaced[r][c] = rhs[r];
            auto coeff = detail::poly_det(replaced).divide_exact(det);
            if (!coeff)
                throw Error("push along '" + m.name() +
                            "': pairing solution is not polynomial in the parameters");
            out += *coeff * target->basis_class(unknowns[c]);
        }
    }
    return out;
}

/// GRR: the Chern character of the derived pushforward,
/// push(m, ch(F) * relative_todd(m)).
inline GradedClass grr_push(const MapDescriptor& m, const GradedClass& character) {
    return push(m, character * m.relative_todd());
}
inline GradedClass grr_push(const MapDescriptor& m, const SheafClass& F) {
    return grr_push(m, chern_character(F));
}

/// Projection formula instance: push(x * pull y) == push(x) * y, exactly.
inline bool pushpull_check(const MapDescriptor& m, const GradedClass& x, const GradedClass& y) {
    return push(m, x * pull(m, y)) == push(m, x) * y;
}

/// Pullback of a bundle class: same rank, pulled total Chern class.
inline SheafClass pull(const MapDescriptor& m, const SheafClass& F) {
    return SheafClass(F.rank(), pull(m, F.chern()));
}

} // namespace chowcalc

#endif
