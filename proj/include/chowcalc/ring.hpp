#ifndef CHOWCALC_RING_HPP
#define CHOWCALC_RING_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chowcalc/param_poly.hpp"

namespace chowcalc {

// Exact arithmetic in a finite-basis graded commutative ring presented by an
// explicit multiplication table. Everything the validator can check by
// exhaustion is checked at construction: grading, symmetry, a unique unit,
// associativity on all basis triples. Presentations are immutable after
// construction and shared read-only by the classes living over them.

struct BasisElement {
    std::string symbol;
    int codim = 0;
};

struct RingData {
    struct Product {
        std::string a, b;
        std::vector<std::pair<std::string, ParamPolynomial>> value;
    };

    std::string name;
    std::vector<std::string> parameters;
    std::vector<BasisElement> basis;
    int top_codim = 0;
    std::string unit;
    std::vector<Product> products; // unlisted products are zero
    std::vector<std::pair<std::string, ParamPolynomial>> integral;
};

class GradedClass;

class RingPresentation : public std::enable_shared_from_this<RingPresentation> {
public:
    using Ptr = std::shared_ptr<const RingPresentation>;
    using SparseRow = std::vector<std::pair<std::size_t, ParamPolynomial>>;

    static Ptr make(RingData data);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& parameters() const { return parameters_; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    std::size_t size() const { return basis_.size(); }
    int top_codim() const { return top_codim_; }
    std::size_t unit_index() const { return unit_index_; }

    int codim(std::size_t i) const { return basis_[i].codim; }
    const std::string& symbol(std::size_t i) const { return basis_[i].symbol; }

    std::optional<std::size_t> index_of(const std::string& symbol) const {
        auto it = index_.find(symbol);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    bool has_parameter(const std::string& name) const {
        return std::find(parameters_.begin(), parameters_.end(), name) != parameters_.end();
    }

    /// Product of two basis elements as a sparse combination of basis elements.
    const SparseRow& product(std::size_t i, std::size_t j) const {
        return table_[i * basis_.size() + j];
    }

    /// Degree assigned to a top-codimension basis element (zero for the rest).
    const ParamPolynomial& integral_coeff(std::size_t i) const { return integral_[i]; }

    GradedClass zero() const;
    GradedClass one() const;
    GradedClass basis_class(std::size_t i) const;
    GradedClass basis_class(const std::string& symbol) const;

    /// New presentation with a parameter replaced by a rational everywhere in
    /// the table and integral; the parameter is dropped from the declared set.
    Ptr substituted(const std::string& param, const Rational& value) const;

    RingData to_data() const;

private:
    RingPresentation() = default;
    void validate() const;

    std::string name_;
    std::vector<std::string> parameters_;
    std::vector<BasisElement> basis_;
    int top_codim_ = 0;
    std::size_t unit_index_ = 0;
    std::vector<SparseRow> table_;       // dense (i,j) indexing, sparse rows
    std::vector<ParamPolynomial> integral_;
    std::unordered_map<std::string, std::size_t> index_;
};

// An element of a presented ring: basis symbol -> ParamPolynomial, nonzero
// coefficients only. Mixed-codimension values (total Chern classes etc.) are
// first-class.
class GradedClass {
public:
    GradedClass() = default;
    explicit GradedClass(RingPresentation::Ptr ring) : ring_(std::move(ring)) {}

    static GradedClass zero(RingPresentation::Ptr ring) { return GradedClass(std::move(ring)); }
    static GradedClass unit(RingPresentation::Ptr ring) {
        GradedClass c(std::move(ring));
        c.set_coeff(c.ring_->unit_index(), ParamPolynomial(1));
        return c;
    }
    static GradedClass basis(RingPresentation::Ptr ring, std::size_t i) {
        GradedClass c(std::move(ring));
        c.set_coeff(i, ParamPolynomial(1));
        return c;
    }

    const RingPresentation::Ptr& ring() const { return ring_; }
    const std::map<std::size_t, ParamPolynomial>& coeffs() const { return coeffs_; }

    ParamPolynomial coeff(std::size_t i) const {
        auto it = coeffs_.find(i);
        return it == coeffs_.end() ? ParamPolynomial() : it->second;
    }
    ParamPolynomial coeff(const std::string& symbol) const {
        auto i = ring_->index_of(symbol);
        if (!i)
            throw Error("no basis symbol '" + symbol + "' in ring " + ring_->name());
        return coeff(*i);
    }

    void set_coeff(std::size_t i, ParamPolynomial value) {
        if (i >= ring_->size())
            throw Error("basis index out of range");
        if (value.is_zero())
            coeffs_.erase(i);
        else
            coeffs_[i] = std::move(value);
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// True when every nonzero coefficient sits in the given codimension.
    bool is_homogeneous(int codim) const {
        for (const auto& [i, c] : coeffs_)
            if (ring_->codim(i) != codim)
                return false;
        return true;
    }

    int max_codim() const {
        int m = 0;
        for (const auto& [i, c] : coeffs_)
            m = std::max(m, ring_->codim(i));
        return m;
    }

    GradedClass operator-() const {
        GradedClass r(*this);
        for (auto& [i, c] : r.coeffs_)
            c = -c;
        return r;
    }

    GradedClass& operator+=(const GradedClass& o) {
        require_same_ring(o);
        for (const auto& [i, c] : o.coeffs_)
            add_coeff(i, c);
        return *this;
    }
    GradedClass& operator-=(const GradedClass& o) {
        require_same_ring(o);
        for (const auto& [i, c] : o.coeffs_)
            add_coeff(i, -c);
        return *this;
    }

    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }

    friend GradedClass operator*(const GradedClass& a, const GradedClass& b) {
        a.require_same_ring(b);
        GradedClass r(a.ring_);
        for (const auto& [i, ci] : a.coeffs_)
            for (const auto& [j, cj] : b.coeffs_) {
                ParamPolynomial c = ci * cj;
                for (const auto& [k, ck] : a.ring_->product(i, j))
                    r.add_coeff(k, c * ck);
            }
        return r;
    }

    friend GradedClass operator*(const ParamPolynomial& s, GradedClass x) {
        for (auto it = x.coeffs_.begin(); it != x.coeffs_.end();) {
            it->second = s * it->second;
            it = it->second.is_zero() ? x.coeffs_.erase(it) : std::next(it);
        }
        return x;
    }
    friend GradedClass operator*(GradedClass x, const ParamPolynomial& s) { return s * std::move(x); }
    friend GradedClass operator*(const Rational& s, GradedClass x) { return ParamPolynomial(s) * std::move(x); }
    friend GradedClass operator*(GradedClass x, const Rational& s) { return ParamPolynomial(s) * std::move(x); }
    friend GradedClass operator*(int s, GradedClass x) { return ParamPolynomial(s) * std::move(x); }
    friend GradedClass operator*(GradedClass x, int s) { return ParamPolynomial(s) * std::move(x); }

    friend bool operator==(const GradedClass& a, const GradedClass& b) {
        a.require_same_ring(b);
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const GradedClass& a, const GradedClass& b) { return !(a == b); }

    /// The image under the evaluation homomorphism at param = value; the
    /// result lives over the matching substituted presentation.
    GradedClass substitute(const std::string& param, const Rational& value,
                           RingPresentation::Ptr target) const {
        if (target->size() != ring_->size())
            throw Error("substitution target does not match source presentation");
        GradedClass r(std::move(target));
        for (const auto& [i, c] : coeffs_)
            r.add_coeff(i, c.substitute(param, value));
        return r;
    }

    std::string to_string() const;

    void require_same_ring(const GradedClass& o) const {
        if (ring_.get() != o.ring_.get())
            throw Error("ring mismatch: '" + ring_->name() + "' vs '" + o.ring_->name() + "'");
    }

private:
    void add_coeff(std::size_t i, const ParamPolynomial& c) {
        if (c.is_zero())
            return;
        auto it = coeffs_.find(i);
        if (it == coeffs_.end()) {
            coeffs_.emplace(i, c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                coeffs_.erase(it);
        }
    }

    RingPresentation::Ptr ring_;
    std::map<std::size_t, ParamPolynomial> coeffs_;
};

inline GradedClass RingPresentation::zero() const {
    return GradedClass::zero(shared_from_this());
}
inline GradedClass RingPresentation::one() const {
    return GradedClass::unit(shared_from_this());
}
inline GradedClass RingPresentation::basis_class(std::size_t i) const {
    return GradedClass::basis(shared_from_this(), i);
}
inline GradedClass RingPresentation::basis_class(const std::string& symbol) const {
    auto i = index_of(symbol);
    if (!i)
        throw Error("no basis symbol '" + symbol + "' in ring " + name_);
    return GradedClass::basis(shared_from_this(), *i);
}

inline RingPresentation::Ptr RingPresentation::make(RingData data) {
    auto ring = std::shared_ptr<RingPresentation>(new RingPresentation());
    ring->name_ = std::move(data.name);
    ring->parameters_ = std::move(data.parameters);
    ring->basis_ = std::move(data.basis);
    ring->top_codim_ = data.top_codim;
    const std::size_t n = ring->basis_.size();

    if (ring->name_.empty())
        throw Error("ring presentation needs a name");
    if (n == 0)
        throw Error("ring '" + ring->name_ + "': empty basis");
    for (std::size_t i = 0; i < ring->parameters_.size(); ++i)
        for (std::size_t j = i + 1; j < ring->parameters_.size(); ++j)
            if (ring->parameters_[i] == ring->parameters_[j])
                throw Error("ring '" + ring->name_ + "': duplicate parameter '" +
                            ring->parameters_[i] + "'");

    for (std::size_t i = 0; i < n; ++i) {
        const auto& b = ring->basis_[i];
        if (b.symbol.empty())
            throw Error("ring '" + ring->name_ + "': empty basis symbol");
        if (!ring->index_.emplace(b.symbol, i).second)
            throw Error("ring '" + ring->name_ + "': duplicate basis symbol '" + b.symbol + "'");
        if (b.codim < 0 || b.codim > ring->top_codim_)
            throw Error("ring '" + ring->name_ + "': basis symbol '" + b.symbol +
                        "' has codimension " + std::to_string(b.codim) +
                        " outside [0, " + std::to_string(ring->top_codim_) + "]");
    }

    auto unit = ring->index_.find(data.unit);
    if (unit == ring->index_.end())
        throw Error("ring '" + ring->name_ + "': unit symbol '" + data.unit + "' is not in the basis");
    ring->unit_index_ = unit->second;
    for (std::size_t i = 0; i < n; ++i) {
        const bool is_codim0 = ring->basis_[i].codim == 0;
        if (is_codim0 && i != ring->unit_index_)
            throw Error("ring '" + ring->name_ + "': extra codimension-0 basis symbol '" +
                        ring->basis_[i].symbol + "' (exactly one unit allowed)");
        if (i == ring->unit_index_ && !is_codim0)
            throw Error("ring '" + ring->name_ + "': unit '" + data.unit +
                        "' must have codimension 0");
    }

    auto check_coeff_params = [&](const ParamPolynomial& p, const std::string& where) {
        for (const auto& var : p.variables())
            if (!ring->has_parameter(var))
                throw Error("ring '" + ring->name_ + "': coefficient in " + where +
                            " uses undeclared parameter '" + var + "'");
    };

    // Fill the table, symmetrically; unit products are implied.
    ring->table_.assign(n * n, {});
    std::vector<bool> listed(n * n, false);
    for (const auto& prod : data.products) {
        auto ia = ring->index_.find(prod.a);
        auto ib = ring->index_.find(prod.b);
        if (ia == ring->index_.end() || ib == ring->index_.end())
            throw Error("ring '" + ring->name_ + "': product (" + prod.a + ", " + prod.b +
                        ") names an unknown basis symbol");
        const std::size_t i = ia->second, j = ib->second;
        SparseRow row;
        for (const auto& [sym, coeff] : prod.value) {
            auto k = ring->index_.find(sym);
            if (k == ring->index_.end())
                throw Error("ring '" + ring->name_ + "': product (" + prod.a + ", " + prod.b +
                            ") refers to unknown basis symbol '" + sym + "'");
            check_coeff_params(coeff, "product (" + prod.a + ", " + prod.b + ")");
            if (coeff.is_zero())
                continue;
            for (const auto& [seen, c] : row)
                if (seen == k->second)
                    throw Error("ring '" + ring->name_ + "': product (" + prod.a + ", " + prod.b +
                                ") lists basis symbol '" + sym + "' twice");
            row.emplace_back(k->second, coeff);
        }
        auto assign = [&](std::size_t p, std::size_t q) {
            if (listed[p * n + q]) {
                if (ring->table_[p * n + q] != row)
                    throw Error("ring '" + ring->name_ + "': conflicting entries for product (" +
                                ring->basis_[p].symbol + ", " + ring->basis_[q].symbol + ")");
            } else {
                listed[p * n + q] = true;
                ring->table_[p * n + q] = row;
            }
        };
        assign(i, j);
        if (i != j)
            assign(j, i);
    }
    for (std::size_t j = 0; j < n; ++j) {
        SparseRow identity{{j, ParamPolynomial(1)}};
        const std::size_t u = ring->unit_index_;
        if (listed[u * n + j]) {
            if (ring->table_[u * n + j] != identity)
                throw Error("ring '" + ring->name_ + "': unit product (" + data.unit + ", " +
                            ring->basis_[j].symbol + ") is not the identity");
        } else {
            ring->table_[u * n + j] = identity;
            if (j != u)
                ring->table_[j * n + u] = identity;
        }
    }

    // Integral functional on top-codimension symbols.
    ring->integral_.assign(n, ParamPolynomial());
    for (const auto& [sym, coeff] : data.integral) {
        auto k = ring->index_.find(sym);
        if (k == ring->index_.end())
            throw Error("ring '" + ring->name_ + "': integral refers to unknown basis symbol '" +
                        sym + "'");
        if (ring->basis_[k->second].codim != ring->top_codim_)
            throw Error("ring '" + ring->name_ + "': integral assigns a degree to '" + sym +
                        "', which is not of top codimension");
        check_coeff_params(coeff, "integral of " + sym);
        ring->integral_[k->second] = coeff;
    }

    ring->validate();
    return ring;
}

inline void RingPresentation::validate() const {
    const std::size_t n = basis_.size();

    // Grading: the product of codim-i and codim-j elements lies purely in
    // codim i+j, and is zero above top_codim.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int expected = basis_[i].codim + basis_[j].codim;
            for (const auto& [k, coeff] : product(i, j)) {
                if (expected > top_codim_)
                    throw Error("ring '" + name_ + "': grading violation, product (" +
                                basis_[i].symbol + ", " + basis_[j].symbol +
                                ") must vanish above top codimension");
                if (basis_[k].codim != expected)
                    throw Error("ring '" + name_ + "': grading violation, product (" +
                                basis_[i].symbol + ", " + basis_[j].symbol + ") contains '" +
                                basis_[k].symbol + "' of codimension " +
                                std::to_string(basis_[k].codim) + ", expected " +
                                std::to_string(expected));
            }
        }

    // Symmetry (commutativity; all classes live in even cohomological degree).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto row = [&](std::size_t a, std::size_t b) {
                std::map<std::size_t, ParamPolynomial> m;
                for (const auto& [k, c] : product(a, b))
                    m[k] = c;
                return m;
            };
            if (row(i, j) != row(j, i))
                throw Error("ring '" + name_ + "': multiplication table not symmetric at (" +
                            basis_[i].symbol + ", " + basis_[j].symbol + ")");
        }

    // Associativity, by exhaustion over all basis triples.
    auto self = shared_from_this();
    std::vector<GradedClass> gens;
    gens.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(GradedClass::basis(self, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if ((gens[i] * gens[j]) * gens[k] != gens[i] * (gens[j] * gens[k]))
                    throw Error("ring '" + name_ + "': associativity fails on (" +
                                basis_[i].symbol + ", " + basis_[j].symbol + ", " +
                                basis_[k].symbol + ")");
}

inline RingPresentation::Ptr RingPresentation::substituted(const std::string& param,
                                                           const Rational& value) const {
    RingData data = to_data();
    data.parameters.erase(std::remove(data.parameters.begin(), data.parameters.end(), param),
                          data.parameters.end());
    for (auto& prod : data.products)
        for (auto& [sym, coeff] : prod.value)
            coeff = coeff.substitute(param, value);
    for (auto& [sym, coeff] : data.integral)
        coeff = coeff.substitute(param, value);
    return make(std::move(data));
}

inline RingData RingPresentation::to_data() const {
    RingData data;
    data.name = name_;
    data.parameters = parameters_;
    data.basis = basis_;
    data.top_codim = top_codim_;
    data.unit = basis_[unit_index_].symbol;
    const std::size_t n = basis_.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (i == unit_index_ || j == unit_index_)
                continue;
            const auto& row = product(i, j);
            if (row.empty())
                continue;
            RingData::Product prod;
            prod.a = basis_[i].symbol;
            prod.b = basis_[j].symbol;
            for (const auto& [k, coeff] : row)
                prod.value.emplace_back(basis_[k].symbol, coeff);
            data.products.push_back(std::move(prod));
        }
    for (std::size_t i = 0; i < n; ++i)
        if (!integral_[i].is_zero())
            data.integral.emplace_back(basis_[i].symbol, integral_[i]);
    return data;
}

// ---- the chow_core operations ------------------------------------------

inline GradedClass ring_mul(const GradedClass& x, const GradedClass& y) { return x * y; }

/// Degree functional: top-codimension coefficients weighted by the ring's
/// integral; lower-codimension components are ignored.
inline ParamPolynomial integrate(const GradedClass& x) {
    ParamPolynomial out;
    const auto& ring = *x.ring();
    for (const auto& [i, c] : x.coeffs())
        if (ring.codim(i) == ring.top_codim())
            out += c * ring.integral_coeff(i);
    return out;
}

/// Keep only the components of exactly the given codimension.
inline GradedClass truncate(const GradedClass& x, int codim) {
    GradedClass r(x.ring());
    for (const auto& [i, c] : x.coeffs())
        if (x.ring()->codim(i) == codim)
            r.set_coeff(i, c);
    return r;
}

/// Inverse of a unit-leading class by the standard graded recursion
/// (Neumann series, which terminates at top_codim).
inline GradedClass graded_inverse(const GradedClass& x) {
    const auto& ring = x.ring();
    ParamPolynomial lead = truncate(x, 0).coeff(ring->unit_index());
    if (!lead.is_constant() || lead.constant_value() == 0)
        throw Error("graded_inverse: leading term '" + lead.to_string() + "' is not a unit scalar");
    const Rational u = lead.constant_value();
    GradedClass m = x.ring()->zero();
    for (int c = 1; c <= ring->top_codim(); ++c)
        m += truncate(x, c);
    m = m * (Rational(1) / u);
    // 1/x = (1/u) * (1 - m + m^2 - ...).
    GradedClass result = ring->one();
    GradedClass power = ring->one();
    for (int k = 1; k <= ring->top_codim(); ++k) {
        power = power * m;
        if (power.is_zero())
            break;
        result += (k % 2 ? -power : power);
    }
    return result * (Rational(1) / u);
}

inline std::string GradedClass::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [i, c] : coeffs_) {
        const bool is_unit = (i == ring_->unit_index());
        const bool multi = c.terms().size() > 1;
        std::string piece;
        bool negative = false;
        if (multi) {
            // Multi-term coefficients keep their signs inside parentheses.
            if (is_unit)
                piece = first ? c.to_string() : "(" + c.to_string() + ")";
            else
                piece = "(" + c.to_string() + ")*" + ring_->symbol(i);
        } else {
            const auto& [mono, coeff] = *c.terms().begin();
            Rational r = coeff;
            if (r < 0) {
                negative = true;
                r = -r;
            }
            std::string vars;
            for (std::size_t k = 0; k < mono.size(); ++k) {
                if (k)
                    vars += "*";
                vars += mono[k].first;
                if (mono[k].second > 1)
                    vars += "^" + std::to_string(mono[k].second);
            }
            std::string body = chowcalc::to_string(r);
            if (!vars.empty())
                body = (r == 1) ? vars : body + "*" + vars;
            if (!is_unit) {
                if (body == "1")
                    body = ring_->symbol(i);
                else
                    body += "*" + ring_->symbol(i);
            }
            piece = body;
        }
        if (first) {
            out += negative ? "-" + piece : piece;
            first = false;
        } else {
            out += negative ? " - " + piece : " + " + piece;
        }
    }
    return out;
}

inline std::string to_string(const GradedClass& x) { return x.to_string(); }

} // namespace chowcalc

#endif
