#ifndef CHOWCALC_PARAM_POLY_HPP
#define CHOWCALC_PARAM_POLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chowcalc/rational.hpp"

namespace chowcalc {

// A polynomial with rational coefficients in a finite set of named formal
// parameters. This is the scalar ring of every class in the library; the
// genus-11 computation uses it to carry the normalization parameter s
// through symbolically and watch it cancel.
//
// Monomials are exponent vectors stored sorted by parameter name with no
// zero exponents; terms with coefficient zero are never stored, so equality
// is plain map equality. The term order is lexicographic over the union of
// parameter names (multiplication-compatible, which exact division needs).
class ParamPolynomial {
public:
    using Monomial = std::vector<std::pair<std::string, int>>;

    struct MonomialLess {
        bool operator()(const Monomial& a, const Monomial& b) const {
            std::size_t i = 0, j = 0;
            while (i < a.size() || j < b.size()) {
                if (i == a.size())
                    return true; // a exhausted: remaining b-vars make b larger
                if (j == b.size())
                    return false;
                if (a[i].first == b[j].first) {
                    if (a[i].second != b[j].second)
                        return a[i].second < b[j].second;
                    ++i, ++j;
                } else if (a[i].first < b[j].first) {
                    return false; // a has a positive power of an earlier var
                } else {
                    return true;
                }
            }
            return false;
        }
    };

    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    ParamPolynomial() = default;

    /*implicit*/ ParamPolynomial(int value) : ParamPolynomial(Rational(value)) {}
    /*implicit*/ ParamPolynomial(Rational value) {
        if (value != 0)
            terms_[Monomial{}] = std::move(value);
    }

    static ParamPolynomial parameter(const std::string& name, int exponent = 1) {
        ParamPolynomial p;
        if (exponent < 0)
            throw Error("negative parameter exponent");
        if (exponent == 0)
            return ParamPolynomial(1);
        p.terms_[Monomial{{name, exponent}}] = 1;
        return p;
    }

    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Rational constant_value() const {
        if (terms_.empty())
            return 0;
        if (!is_constant())
            throw Error("polynomial '" + to_string() + "' is not constant");
        return terms_.begin()->second;
    }

    /// Coefficient of a monomial (e.g. {{"s",1}}); zero if absent.
    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool depends_on(const std::string& name) const {
        for (const auto& [mono, coeff] : terms_)
            for (const auto& [var, exp] : mono)
                if (var == name)
                    return true;
        return false;
    }

    std::vector<std::string> variables() const {
        std::vector<std::string> vars;
        for (const auto& [mono, coeff] : terms_)
            for (const auto& [var, exp] : mono)
                if (std::find(vars.begin(), vars.end(), var) == vars.end())
                    vars.push_back(var);
        return vars;
    }

    ParamPolynomial operator-() const {
        ParamPolynomial r(*this);
        for (auto& [mono, coeff] : r.terms_)
            coeff = -coeff;
        return r;
    }

    ParamPolynomial& operator+=(const ParamPolynomial& o) {
        for (const auto& [mono, coeff] : o.terms_)
            add_term(mono, coeff);
        return *this;
    }
    ParamPolynomial& operator-=(const ParamPolynomial& o) {
        for (const auto& [mono, coeff] : o.terms_)
            add_term(mono, -coeff);
        return *this;
    }
    ParamPolynomial& operator*=(const ParamPolynomial& o) {
        *this = *this * o;
        return *this;
    }

    friend ParamPolynomial operator+(ParamPolynomial a, const ParamPolynomial& b) {
        a += b;
        return a;
    }
    friend ParamPolynomial operator-(ParamPolynomial a, const ParamPolynomial& b) {
        a -= b;
        return a;
    }
    friend ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b) {
        ParamPolynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(mul_monomials(ma, mb), ca * cb);
        return r;
    }

    friend bool operator==(const ParamPolynomial& a, const ParamPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ParamPolynomial& a, const ParamPolynomial& b) {
        return !(a == b);
    }

    /// Division by a nonzero rational constant (the only scalar division the
    /// formulas ever need: 1/2 in ch2, 1/12 in td2, ...).
    ParamPolynomial divided_by(const Rational& c) const {
        if (c == 0)
            throw Error("division by zero");
        ParamPolynomial r(*this);
        for (auto& [mono, coeff] : r.terms_)
            coeff /= c;
        return r;
    }

    /// Exact polynomial quotient; nullopt if the division does not come out
    /// exactly. Used by the pushforward pairing solver (Cramer).
    std::optional<ParamPolynomial> divide_exact(const ParamPolynomial& d) const {
        if (d.is_zero())
            return std::nullopt;
        ParamPolynomial rem(*this), quot;
        const auto& [dm, dc] = *d.terms_.rbegin(); // leading term
        while (!rem.is_zero()) {
            const auto& [rm, rc] = *rem.terms_.rbegin();
            auto qm = div_monomials(rm, dm);
            if (!qm)
                return std::nullopt;
            ParamPolynomial t;
            t.terms_[*qm] = rc / dc;
            quot += t;
            rem -= t * d;
        }
        return quot;
    }

    ParamPolynomial substitute(const std::string& name, const Rational& value) const {
        ParamPolynomial r;
        for (const auto& [mono, coeff] : terms_) {
            Rational c = coeff;
            Monomial rest;
            for (const auto& [var, exp] : mono) {
                if (var == name) {
                    for (int e = 0; e < exp; ++e)
                        c *= value;
                } else {
                    rest.emplace_back(var, exp);
                }
            }
            r.add_term(rest, c);
        }
        return r;
    }

    /// Ascending powers, explicit signs, '*' for products, '^' for exponents.
    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [mono, coeff] : terms_) {
            Rational c = coeff;
            if (first) {
                if (c < 0) {
                    out += "-";
                    c = -c;
                }
            } else {
                out += (c < 0) ? " - " : " + ";
                if (c < 0)
                    c = -c;
            }
            out += term_string(mono, c);
            first = false;
        }
        return out;
    }

private:
    void add_term(const Monomial& mono, const Rational& coeff) {
        if (coeff == 0)
            return;
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    static Monomial mul_monomials(const Monomial& a, const Monomial& b) {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
                r.push_back(a[i++]);
            else if (i == a.size() || b[j].first < a[i].first)
                r.push_back(b[j++]);
            else {
                r.emplace_back(a[i].first, a[i].second + b[j].second);
                ++i, ++j;
            }
        }
        return r;
    }

    // a / b as monomials; nullopt when some exponent would go negative.
    static std::optional<Monomial> div_monomials(const Monomial& a, const Monomial& b) {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size()) {
                r.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                return std::nullopt;
            } else if (a[i].first < b[j].first) {
                r.push_back(a[i++]);
            } else {
                int e = a[i].second - b[j].second;
                if (e < 0)
                    return std::nullopt;
                if (e > 0)
                    r.emplace_back(a[i].first, e);
                ++i, ++j;
            }
        }
        return r;
    }

    static std::string term_string(const Monomial& mono, const Rational& abs_coeff) {
        std::string vars;
        for (std::size_t k = 0; k < mono.size(); ++k) {
            if (k)
                vars += "*";
            vars += mono[k].first;
            if (mono[k].second > 1)
                vars += "^" + std::to_string(mono[k].second);
        }
        if (vars.empty())
            return chowcalc::to_string(abs_coeff);
        if (abs_coeff == 1)
            return vars;
        return chowcalc::to_string(abs_coeff) + "*" + vars;
    }

    TermMap terms_;
};

inline std::string to_string(const ParamPolynomial& p) { return p.to_string(); }

} // namespace chowcalc

#endif
