#pragma once

#include <string>
#include <vector>

#include "binv/rational.hpp"

namespace binv {

// Univariate polynomial in a formal parameter t with rational coefficients.
// Used as the scalar ring when a group element depends symbolically on t,
// so one check covers a whole one-parameter subgroup.
class RatPoly {
  public:
    RatPoly() = default;
    RatPoly(int c) { if (c != 0) coeffs_ = {Rat(c)}; }
    RatPoly(const Rat& c) { if (c != 0) coeffs_ = {c}; }

    static RatPoly t() { return RatPoly(std::vector<Rat>{0, 1}); }
    explicit RatPoly(std::vector<Rat> c) : coeffs_(std::move(c)) { trim(); }

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Rat constant_value() const { return coeffs_.empty() ? Rat(0) : coeffs_[0]; }

    Rat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Rat(0);
    }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return RatPoly(std::move(c));
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
        std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return RatPoly(std::move(c));
    }
    RatPoly operator-() const { return RatPoly() - *this; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return RatPoly();
        std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RatPoly(std::move(c));
    }
    RatPoly& operator+=(const RatPoly& o) { return *this = *this + o; }
    RatPoly& operator-=(const RatPoly& o) { return *this = *this - o; }
    RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }

    // Division by a nonzero constant; anything else has no inverse here.
    friend RatPoly operator/(const RatPoly& a, const RatPoly& b) {
        if (!b.is_constant() || b.is_zero())
            throw std::domain_error("division by a non-unit in the t-polynomial ring");
        std::vector<Rat> c = a.coeffs_;
        for (auto& x : c) x /= b.coeffs_[0];
        return RatPoly(std::move(c));
    }

    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator==(int c) const {
        if (c == 0) return coeffs_.empty();
        return coeffs_.size() == 1 && coeffs_[0] == c;
    }

    Rat evaluate(const Rat& x) const {
        Rat v(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
        return v;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (coeffs_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += rat_to_string(coeffs_[i]);
            if (i >= 1) s += "*t";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;  // ascending powers of t
};

}  // namespace binv
