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

#ifndef HALLC1_FP_HPP
#define HALLC1_FP_HPP

#include <cassert>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace hallc1 {

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// The prime field F_p with elements represented as residues 0..p-1.
struct PrimeField {
    int p;

    explicit PrimeField(int p_) : p(p_) {
        if (!is_prime(p)) throw std::invalid_argument("PrimeField: " + std::to_string(p_) + " is not prime");
    }

    int add(int a, int b) const { return (a + b) % p; }
    int sub(int a, int b) const { return ((a - b) % p + p) % p; }
    int mul(int a, int b) const { return (int)((std::int64_t)a * b % p); }
    int neg(int a) const { return (p - a) % p; }
    int inv(int a) const {
        if (a % p == 0) throw std::domain_error("PrimeField: inverse of zero");
        // extended Euclid
        int t = 0, nt = 1, r = p, nr = a % p;
        while (nr != 0) {
            int q = r / nr;
            int tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        return (t % p + p) % p;
    }
};

/// Dense matrix over F_p, row-major.
class FpMat {
  public:
    FpMat() = default;
    FpMat(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

    static FpMat identity(int n, int p) {
        FpMat m(n, n, p);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int p() const { return p_; }

    int& operator()(int r, int c) { return a_[r * cols_ + c]; }
    int operator()(int r, int c) const { return a_[r * cols_ + c]; }

    friend bool operator==(const FpMat& a, const FpMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const FpMat& a, const FpMat& b) { return !(a == b); }
    friend bool operator<(const FpMat& x, const FpMat& y) {
        if (x.rows_ != y.rows_) return x.rows_ < y.rows_;
        if (x.cols_ != y.cols_) return x.cols_ < y.cols_;
        return x.a_ < y.a_;  // row-major lexicographic
    }

    FpMat mul(const FpMat& o) const {
        assert(cols_ == o.rows_ && p_ == o.p_);
        FpMat r(rows_, o.cols_, p_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                int v = (*this)(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r(i, j) = (int)((r(i, j) + (std::int64_t)v * o(k, j)) % p_);
            }
        return r;
    }

    FpMat add(const FpMat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        FpMat r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (r.a_[i] + o.a_[i]) % p_;
        return r;
    }

    FpMat sub(const FpMat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        FpMat r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ((r.a_[i] - o.a_[i]) % p_ + p_) % p_;
        return r;
    }

    FpMat scale(int c) const {
        FpMat r = *this;
        c = ((c % p_) + p_) % p_;
        for (auto& x : r.a_) x = (int)((std::int64_t)x * c % p_);
        return r;
    }

    bool is_zero() const {
        for (int x : a_)
            if (x != 0) return false;
        return true;
    }

    FpMat transpose() const {
        FpMat r(cols_, rows_, p_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    std::vector<int> rref() {
        PrimeField F(p_);
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int pr = -1;
            for (int i = r; i < rows_; ++i)
                if ((*this)(i, c) != 0) {
                    pr = i;
                    break;
                }
            if (pr < 0) continue;
            if (pr != r)
                for (int j = 0; j < cols_; ++j) std::swap((*this)(pr, j), (*this)(r, j));
            int iv = F.inv((*this)(r, c));
            for (int j = 0; j < cols_; ++j) (*this)(r, j) = F.mul((*this)(r, j), iv);
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                int f = (*this)(i, c);
                if (f == 0) continue;
                for (int j = 0; j < cols_; ++j)
                    (*this)(i, j) = F.sub((*this)(i, j), F.mul(f, (*this)(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        FpMat c = *this;
        return (int)c.rref().size();
    }

    /// Basis of the right null space {x : Ax = 0}, returned as rows.
    FpMat kernel_basis() const {
        FpMat R = *this;
        std::vector<int> pivots = R.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) is_pivot[c] = true;
        int k = cols_ - (int)pivots.size();
        FpMat K(k, cols_, p_);
        PrimeField F(p_);
        int row = 0;
        for (int c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            K(row, c) = 1;
            for (size_t i = 0; i < pivots.size(); ++i) K(row, pivots[i]) = F.neg(R((int)i, c));
            ++row;
        }
        K.rref();  // canonical basis, unit leading entries
        return K;
    }

    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    FpMat inverse() const {
        assert(rows_ == cols_);
        FpMat aug(rows_, 2 * cols_, p_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = 1;
        }
        auto piv = aug.rref();
        if ((int)piv.size() != rows_) throw std::domain_error("FpMat::inverse: singular matrix");
        FpMat r(rows_, cols_, p_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = aug(i, cols_ + j);
        return r;
    }

    /// Row-space membership: does v (length cols) lie in the span of the rows?
    /// Requires *this to be in rref.
    bool rref_contains(const std::vector<int>& v) const {
        PrimeField F(p_);
        std::vector<int> w = v;
        for (int i = 0; i < rows_; ++i) {
            int pc = -1;
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) {
                    pc = j;
                    break;
                }
            if (pc < 0) break;
            int f = w[pc];
            if (f == 0) continue;
            for (int j = 0; j < cols_; ++j) w[j] = F.sub(w[j], F.mul(f, (*this)(i, j)));
        }
        for (int x : w)
            if (x != 0) return false;
        return true;
    }

    std::vector<int> row(int i) const {
        return std::vector<int>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }

    /// Coordinates of v in the row basis of *this (rows must be in rref with
    /// unit pivots). Throws if v is not in the span.
    std::vector<int> rref_coords(const std::vector<int>& v) const {
        PrimeField F(p_);
        std::vector<int> w = v, coords(rows_, 0);
        for (int i = 0; i < rows_; ++i) {
            int pc = -1;
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) {
                    pc = j;
                    break;
                }
            if (pc < 0) break;
            coords[i] = w[pc];
            int f = w[pc];
            if (f == 0) continue;
            for (int j = 0; j < cols_; ++j) w[j] = F.sub(w[j], F.mul(f, (*this)(i, j)));
        }
        for (int x : w)
            if (x != 0) throw std::domain_error("rref_coords: vector outside span");
        return coords;
    }

  private:
    int rows_ = 0, cols_ = 0, p_ = 2;
    std::vector<int> a_;
};

/// Enumerate all subspaces of F_p^n as canonical rref matrices (rows = basis;
/// the 0-dimensional space is the 0 x n matrix). Deterministic order:
/// by dimension, then pivot columns, then free entries.
inline void for_each_subspace(int n, int p, const std::function<void(const FpMat&)>& fn) {
    for (int k = 0; k <= n; ++k) {
        // choose pivot columns (increasing)
        std::vector<int> piv(k);
        std::function<void(int, int)> choose = [&](int idx, int start) {
            if (idx == k) {
                // fill free entries
                FpMat m(k, n, p);
                std::vector<bool> is_piv(n, false);
                for (int c : piv) is_piv[c] = true;
                std::vector<std::pair<int, int>> free_cells;
                for (int i = 0; i < k; ++i) {
                    m(i, piv[i]) = 1;
                    for (int c = piv[i] + 1; c < n; ++c)
                        if (!is_piv[c]) free_cells.emplace_back(i, c);
                }
                std::function<void(size_t)> fill = [&](size_t fi) {
                    if (fi == free_cells.size()) {
                        fn(m);
                        return;
                    }
                    for (int val = 0; val < p; ++val) {
                        m(free_cells[fi].first, free_cells[fi].second) = val;
                        fill(fi + 1);
                    }
                    m(free_cells[fi].first, free_cells[fi].second) = 0;
                };
                fill(0);
                return;
            }
            for (int c = start; c <= n - (k - idx); ++c) {
                piv[idx] = c;
                choose(idx + 1, c + 1);
            }
        };
        choose(0, 0);
    }
}

/// Solve c * A = z for a coefficient row c (A's rows need not be in rref).
/// Throws if z is not in the row space.
inline std::vector<int> solve_in_rowspace(const FpMat& A, const std::vector<int>& z) {
    const int k = A.rows(), n = A.cols(), p = A.p();
    FpMat aug(n, k + 1, p);  // columns: A^T | z
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) aug(i, j) = A(j, i);
        aug(i, k) = z[i];
    }
    auto piv = aug.rref();
    std::vector<int> c(k, 0);
    for (size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == k) throw std::domain_error("solve_in_rowspace: vector outside span");
        c[piv[r]] = aug((int)r, k);
    }
    return c;
}

inline std::int64_t subspace_count(int n, int p) {
    std::int64_t cnt = 0;
    for_each_subspace(n, p, [&](const FpMat&) { ++cnt; });
    return cnt;
}

}  // namespace hallc1

#endif
