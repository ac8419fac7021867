#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "rational.hpp"

namespace stable_schur {

/// Univariate polynomial with exact rational coefficients, lowest degree first.
/// Trailing zero coefficients are never stored, so the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
    Polynomial& operator*=(const Rational& c) {
        for (auto& x : coeffs_) x *= c;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const { return *this * Rational(-1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }

    // p(s*t + c): used to turn polynomials in n into polynomials in 2n for Sp.
    Polynomial compose_affine(const Rational& s, const Rational& c) const {
        Polynomial out;
        Polynomial lin({c, s});
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * lin + constant(*it);
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(const std::string& var = "n") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Rational& c = coeffs_[k];
            if (c == 0) continue;
            Rational mag = abs(c);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            bool unit = (mag == 1);
            if (!unit || k == 0) os << mag.get_str();
            if (k > 0) {
                if (!unit) os << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }

private:
    void trim() {
        for (auto& c : coeffs_) c.canonicalize();
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Newton interpolation through (start + i, values[i]); exact over Q.
inline Polynomial interpolate(std::int64_t start, std::span<const std::int64_t> values) {
    std::vector<Rational> diffs(values.begin(), values.end());
    Polynomial result;
    Polynomial basis = Polynomial::constant(1);
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        result += basis * diffs[k];
        // divided differences with unit spacing
        for (std::size_t i = diffs.size() - 1; i > k; --i) diffs[i] = (diffs[i] - diffs[i - 1]) / Rational(static_cast<long>(k + 1));
        basis = basis * Polynomial({Rational(-(start + static_cast<std::int64_t>(k))), Rational(1)});
    }
    return result;
}

}  // namespace stable_schur
