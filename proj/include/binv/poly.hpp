#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "binv/monomial.hpp"
#include "binv/rational.hpp"

namespace binv {

// Sparse multivariate polynomial over a commutative coefficient ring C.
// Terms are kept in canonical order: graded lexicographic, largest monomial
// first, no zero coefficients.  C must support +, -, *, ==, construction
// from int, and comparison with 0.
template <class C>
class Poly {
  public:
    using Term = std::pair<Monomial, C>;

    Poly() = default;
    explicit Poly(const C& c) {
        if (!(c == 0)) terms_.emplace_back(kMonoOne, c);
    }
    Poly(Monomial m, const C& c) {
        if (!(c == 0)) terms_.emplace_back(m, c);
    }

    static Poly from_terms(std::vector<Term> terms) {
        Poly p;
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Monomial leading_monomial() const {
        if (is_zero()) throw std::domain_error("leading monomial of zero polynomial");
        return terms_.front().first;
    }
    const C& leading_coeff() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return terms_.front().second;
    }

    C coeff(Monomial m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, Monomial k) { return t.first > k; });
        if (it != terms_.end() && it->first == m) return it->second;
        return C(0);
    }

    int degree() const {  // total degree; -1 for the zero polynomial
        if (is_zero()) return -1;
        return mono_degree(terms_.front().first);
    }

    Poly& operator+=(const Poly& o) { return merge(o, false); }
    Poly& operator-=(const Poly& o) { return merge(o, true); }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    Poly operator-() const {
        Poly r(*this);
        for (auto& t : r.terms_) t.second = C(0) - t.second;
        return r;
    }

    Poly& operator*=(const C& s) {
        if (s == 0) { terms_.clear(); return *this; }
        for (auto& t : terms_) t.second = t.second * s;
        prune_zeros();
        return *this;
    }
    friend Poly operator*(Poly a, const C& s) { return a *= s; }
    friend Poly operator*(const C& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::unordered_map<Monomial, C> acc;
        acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 8);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                auto [it, fresh] = acc.try_emplace(mono_mul(ma, mb), ca * cb);
                if (!fresh) it->second = it->second + ca * cb;
            }
        std::vector<Term> v(acc.begin(), acc.end());
        return from_terms(std::move(v));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(int e) const {
        if (e < 0) throw std::domain_error("negative polynomial power");
        Poly r(C(1));
        Poly base(*this);
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= base;
            if (e > 1) base *= base;
        }
        return r;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Poly derivative(int var) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& [m, c] : terms_) {
            int e = mono_exponent(m, var);
            if (e == 0) continue;
            out.emplace_back(mono_div(m, mono_var(var)), c * C(e));
        }
        return from_terms(std::move(out));
    }

    // Substitute `repl` for variable `var` (other variables untouched).
    Poly substitute(int var, const Poly& repl) const {
        std::vector<Poly> pw = {Poly(C(1))};
        Poly out;
        for (const auto& [m, c] : terms_) {
            int e = mono_exponent(m, var);
            while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * repl);
            Monomial rest = mono_div(m, mono_var(var, e));
            out += Poly(rest, c) * pw[e];
        }
        return out;
    }

    template <class S>
    S evaluate(const std::array<S, kNumVars>& x) const {
        S total(0);
        for (const auto& [m, c] : terms_) {
            S v(c);
            for (int var = 0; var < kNumVars; ++var)
                for (int e = 0; e < mono_exponent(m, var); ++e) v = v * x[var];
            total = total + v;
        }
        return total;
    }

    // Multidegree if every term shares one; nullopt otherwise (or if zero).
    std::optional<MultiDegree> multidegree() const {
        if (is_zero()) return std::nullopt;
        MultiDegree d = mono_multidegree(terms_.front().first);
        for (const auto& [m, c] : terms_)
            if (mono_multidegree(m) != d) return std::nullopt;
        return d;
    }
    bool is_multihomogeneous() const { return is_zero() || multidegree().has_value(); }

    // True if every term has torus weight w.
    bool is_isobaric(int w) const {
        for (const auto& [m, c] : terms_)
            if (mono_weight(m) != w) return false;
        return true;
    }

    // Split into multihomogeneous pieces, keyed by multidegree.
    std::map<MultiDegree, Poly> pieces() const {
        std::map<MultiDegree, Poly> out;
        for (const auto& t : terms_) out[mono_multidegree(t.first)].terms_.push_back(t);
        return out;
    }

    // The scalar s with *this == s * g, if one exists (g != 0, *this may be 0).
    std::optional<C> proportionality(const Poly& g) const {
        if (g.is_zero()) return std::nullopt;
        if (is_zero()) return C(0);
        if (terms_.size() != g.terms_.size()) return std::nullopt;
        C s = terms_.front().second;  // leading(f)/leading(g), formed below
        bool have = false;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].first != g.terms_[i].first) return std::nullopt;
            if (!have) {
                s = div_exact(terms_[i].second, g.terms_[i].second);
                have = true;
            } else if (!(terms_[i].second == s * g.terms_[i].second)) {
                return std::nullopt;
            }
        }
        return s;
    }

  private:
    static C div_exact(const C& a, const C& b) { return a / b; }

    void prune_zeros() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const Term& t) { return t.second == 0; }),
                     terms_.end());
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return x.first > y.first; });
        std::size_t w = 0;
        for (std::size_t i = 0; i < terms_.size();) {
            Monomial m = terms_[i].first;
            C c = terms_[i].second;
            for (++i; i < terms_.size() && terms_[i].first == m; ++i)
                c = c + terms_[i].second;
            if (!(c == 0)) terms_[w++] = {m, c};
        }
        terms_.resize(w);
    }

    Poly& merge(const Poly& o, bool subtract) {
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first > o.terms_[j].first)) {
                out.push_back(terms_[i++]);
            } else if (i == terms_.size() || o.terms_[j].first > terms_[i].first) {
                C c = o.terms_[j].second;
                if (subtract) c = C(0) - c;
                if (!(c == 0)) out.emplace_back(o.terms_[j].first, c);
                ++j;
            } else {
                C c = terms_[i].second;
                if (subtract) c = c - o.terms_[j].second;
                else c = c + o.terms_[j].second;
                if (!(c == 0)) out.emplace_back(terms_[i].first, c);
                ++i, ++j;
            }
        }
        terms_ = std::move(out);
        return *this;
    }

    std::vector<Term> terms_;
};

// Polynomial in the 11 coefficient variables with exact rational coefficients:
// the concrete ring every invariant lives in.
using CoeffPoly = Poly<Rat>;

std::string to_string(const CoeffPoly& p);

}  // namespace binv
