/*
   Copyright 2026 The hallc1 authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HALLC1_INTPOLY_HPP
#define HALLC1_INTPOLY_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace hallc1 {

struct NonIntegralInterpolant : std::runtime_error {
    NonIntegralInterpolant()
        : std::runtime_error("interpolant has a non-integer coefficient") {}
};

/// Polynomial in one variable with integer coefficients, canonical form
/// (no trailing zero coefficient).
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(std::int64_t c) {
        if (c != 0) coeffs_.push_back(c);
    }
    explicit IntPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly x() { return IntPoly(std::vector<std::int64_t>{0, 1}); }

    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero

    std::int64_t coeff(int d) const {
        return (d >= 0 && d < (int)coeffs_.size()) ? coeffs_[d] : 0;
    }

    std::int64_t eval(std::int64_t q) const {
        __int128 acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
        return detail::narrow(acc);
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff((int)i) + b.coeff((int)i);
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff((int)i) - b.coeff((int)i);
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] = detail::narrow((__int128)c[i + j] +
                                          (__int128)a.coeffs_[i] * b.coeffs_[j]);
        return IntPoly(std::move(c));
    }
    IntPoly operator-() const { return IntPoly(0) - *this; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    /// Canonical string, e.g. "x^2+x+1", "0", "-x+3".
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (int d = degree(); d >= 0; --d) {
            std::int64_t c = coeffs_[d];
            if (c == 0) continue;
            if (!s.empty()) s += c > 0 ? "+" : "-";
            else if (c < 0) s += "-";
            std::int64_t a = c < 0 ? -c : c;
            if (d == 0 || a != 1) s += std::to_string(a);
            if (d >= 1) s += "x";
            if (d >= 2) s += "^" + std::to_string(d);
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<std::int64_t> coeffs_;
};

/// Unique interpolating polynomial through the given points; throws
/// NonIntegralInterpolant if any coefficient fails to be an integer.
inline IntPoly lagrange_interpolate(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& points) {
    // Newton's divided differences keep intermediate values small.
    const size_t n = points.size();
    if (n == 0) return {};
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("lagrange_interpolate: repeated x-coordinate");

    std::vector<Rational> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = Rational(points[i].second);
    std::vector<std::vector<Rational>> table{dd};
    for (size_t level = 1; level < n; ++level) {
        std::vector<Rational> next(n - level);
        for (size_t i = 0; i < n - level; ++i)
            next[i] = (table.back()[i + 1] - table.back()[i]) /
                      Rational(points[i + level].first - points[i].first);
        table.push_back(std::move(next));
    }

    // Expand the Newton form into monomial coefficients.
    std::vector<Rational> acc;  // coefficients, low degree first
    std::vector<Rational> basis{Rational(1)};
    for (size_t level = 0; level < n; ++level) {
        const Rational c = table[level][0];
        if (acc.size() < basis.size()) acc.resize(basis.size());
        for (size_t i = 0; i < basis.size(); ++i) acc[i] += c * basis[i];
        // basis *= (x - x_level)
        std::vector<Rational> nb(basis.size() + 1);
        for (size_t i = 0; i < basis.size(); ++i) {
            nb[i + 1] += basis[i];
            nb[i] -= basis[i] * Rational(points[level].first);
        }
        basis = std::move(nb);
    }

    std::vector<std::int64_t> out(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
        if (!acc[i].is_integer()) throw NonIntegralInterpolant{};
        out[i] = acc[i].as_integer();
    }
    return IntPoly(std::move(out));
}

}  // namespace hallc1

#endif
