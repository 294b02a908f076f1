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

#ifndef HALLC1_LAURENT_HPP
#define HALLC1_LAURENT_HPP

#include <map>
#include <ostream>
#include <string>

#include "intpoly.hpp"
#include "rational.hpp"

namespace hallc1 {

/// Laurent polynomial in v with rational coefficients; the intended
/// specialization is v^2 = q for a field size q. Canonical form stores no
/// zero coefficients.
class LaurentV {
  public:
    LaurentV() = default;
    LaurentV(std::int64_t c) {
        if (c != 0) terms_[0] = Rational(c);
    }
    LaurentV(const Rational& c) {
        if (!c.is_zero()) terms_[0] = c;
    }

    static LaurentV v_pow(int e, Rational c = Rational(1)) {
        LaurentV f;
        if (!c.is_zero()) f.terms_[e] = c;
        return f;
    }

    /// Image of an integer polynomial in q under q |-> v^2.
    static LaurentV from_intpoly_q(const IntPoly& p) {
        LaurentV f;
        for (int d = 0; d <= p.degree(); ++d)
            if (p.coeff(d) != 0) f.terms_[2 * d] = Rational(p.coeff(d));
        return f;
    }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend LaurentV operator+(const LaurentV& a, const LaurentV& b) {
        LaurentV r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend LaurentV operator-(const LaurentV& a, const LaurentV& b) {
        LaurentV r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend LaurentV operator*(const LaurentV& a, const LaurentV& b) {
        LaurentV r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentV operator-() const { return LaurentV{} - *this; }
    LaurentV& operator+=(const LaurentV& o) { return *this = *this + o; }
    LaurentV& operator-=(const LaurentV& o) { return *this = *this - o; }
    LaurentV& operator*=(const LaurentV& o) { return *this = *this * o; }

    friend bool operator==(const LaurentV& a, const LaurentV& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentV& a, const LaurentV& b) { return !(a == b); }

    /// Exact value under v^2 = q, split by v-parity: returns (even, odd)
    /// where the element equals even + odd * v. Keeps the result rational.
    std::pair<Rational, Rational> eval_q_split(std::int64_t q) const {
        Rational even(0), odd(0);
        for (auto& [e, c] : terms_) {
            // v^e = q^(e/2) for even e, q^((e-1)/2) * v for odd e.
            int half = (e >= 0 ? e : e - 1) / 2;
            Rational scale = half >= 0 ? Rational(ipow(q, half)) : Rational(1, ipow(q, -half));
            if (e % 2 == 0)
                even += c * scale;
            else
                odd += c * scale;
        }
        return {even, odd};
    }

    /// Canonical string, ascending exponents, e.g. "v^-1+v", "-v+2", "0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto& [e, c] : terms_) {
            Rational a = c;
            if (!s.empty()) {
                s += (a.num() < 0) ? "-" : "+";
                if (a.num() < 0) a = -a;
            } else if (a.num() < 0) {
                s += "-";
                a = -a;
            }
            bool unit = (a == Rational(1));
            if (e == 0 || !unit) s += a.str();
            if (e != 0) {
                if (!unit) s += "*";
                s += "v";
                if (e != 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentV& f) { return os << f.str(); }

  private:
    static std::int64_t ipow(std::int64_t b, int e) {
        __int128 r = 1;
        while (e--) r = detail::narrow(r * b);
        return (std::int64_t)r;
    }
    void add_term(int e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[e] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    std::map<int, Rational> terms_;
};

}  // namespace hallc1

#endif
