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

#ifndef HALLC1_MODCAT_HPP
#define HALLC1_MODCAT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fp.hpp"
#include "quiver.hpp"
#include "rational.hpp"

namespace hallc1 {

struct NegativeExt : std::runtime_error {
    NegativeExt() : std::runtime_error("NegativeExt: hom_dim - euler_form is negative") {}
};
struct NonIntegralMultiplicity : std::runtime_error {
    NonIntegralMultiplicity()
        : std::runtime_error("NonIntegralMultiplicity: decomposition is not a natural-number combination") {}
};
struct CatalogueSearchExhausted : std::runtime_error {
    explicit CatalogueSearchExhausted(const std::string& what)
        : std::runtime_error("CatalogueSearchExhausted: " + what) {}
};
struct EndSpaceTooLarge : std::runtime_error {
    EndSpaceTooLarge() : std::runtime_error("EndSpaceTooLarge: endomorphism enumeration refused") {}
};
struct SearchSpaceTooLarge : std::runtime_error {
    SearchSpaceTooLarge() : std::runtime_error("SearchSpaceTooLarge: subobject enumeration refused") {}
};

/// A representation of a quiver over F_p: one matrix per arrow, map for
/// arrow a:i->j of shape dims[j] x dims[i].
struct Rep {
    const DynkinQuiver* Q = nullptr;
    int p = 2;
    DimVector dims;
    std::vector<FpMat> maps;  // indexed like Q->arrows()

    int total_dim() const { return total(dims); }
};

inline Rep zero_rep(const DynkinQuiver& Q, int p) {
    Rep r{&Q, p, DimVector(Q.n(), 0), {}};
    for (auto& [s, t] : Q.arrows()) {
        (void)s;
        (void)t;
        r.maps.emplace_back(0, 0, p);
    }
    return r;
}

inline Rep direct_sum(const Rep& a, const Rep& b) {
    Rep r{a.Q, a.p, a.dims + b.dims, {}};
    const auto& arrows = a.Q->arrows();
    for (size_t k = 0; k < arrows.size(); ++k) {
        auto [s, t] = arrows[k];
        FpMat m(r.dims[t], r.dims[s], a.p);
        for (int i = 0; i < a.dims[t]; ++i)
            for (int j = 0; j < a.dims[s]; ++j) m(i, j) = a.maps[k](i, j);
        for (int i = 0; i < b.dims[t]; ++i)
            for (int j = 0; j < b.dims[s]; ++j) m(a.dims[t] + i, a.dims[s] + j) = b.maps[k](i, j);
        r.maps.push_back(std::move(m));
    }
    return r;
}

/// The indecomposable projective P_i: one-dimensional at every vertex
/// reachable from i, with identity arrow maps in between.
inline Rep projective(const DynkinQuiver& Q, int p, int i) {
    Rep r{&Q, p, DimVector(Q.n(), 0), {}};
    for (int v = 0; v < Q.n(); ++v) r.dims[v] = (v == i || Q.has_path(i, v)) ? 1 : 0;
    for (auto& [s, t] : Q.arrows()) {
        FpMat m(r.dims[t], r.dims[s], p);
        if (r.dims[s] == 1 && r.dims[t] == 1) m(0, 0) = 1;
        r.maps.push_back(std::move(m));
    }
    return r;
}

inline Rep simple(const DynkinQuiver& Q, int p, int i) {
    Rep r{&Q, p, DimVector(Q.n(), 0), {}};
    r.dims[i] = 1;
    for (auto& [s, t] : Q.arrows()) r.maps.emplace_back(r.dims[t], r.dims[s], p);
    return r;
}

/// Basis of Hom_A(M, N), optionally constrained to intertwine given
/// endomorphisms dM, dN (f dM = dN f at every vertex). Each basis element is
/// one matrix per vertex, of shape N.dims[v] x M.dims[v].
inline std::vector<std::vector<FpMat>> hom_basis(const Rep& M, const Rep& N,
                                                 const std::vector<FpMat>* dM = nullptr,
                                                 const std::vector<FpMat>* dN = nullptr) {
    const int n = M.Q->n();
    const int p = M.p;
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + N.dims[v] * M.dims[v];
    const int vars = offset[n];
    auto var = [&](int v, int r, int c) { return offset[v] + r * M.dims[v] + c; };

    std::vector<std::vector<int>> eqs;
    auto add_eq = [&](std::vector<int>&& row) {
        bool nz = false;
        for (int x : row)
            if (x) {
                nz = true;
                break;
            }
        if (nz) eqs.push_back(std::move(row));
    };
    PrimeField F(p);
    const auto& arrows = M.Q->arrows();
    for (size_t a = 0; a < arrows.size(); ++a) {
        auto [i, j] = arrows[a];
        // f_j M_a - N_a f_i = 0: equations indexed by (r, c), r < N.dims[j], c < M.dims[i]
        for (int r = 0; r < N.dims[j]; ++r)
            for (int c = 0; c < M.dims[i]; ++c) {
                std::vector<int> row(vars, 0);
                for (int k = 0; k < M.dims[j]; ++k)
                    row[var(j, r, k)] = F.add(row[var(j, r, k)], M.maps[a](k, c));
                for (int k = 0; k < N.dims[i]; ++k)
                    row[var(i, k, c)] = F.sub(row[var(i, k, c)], N.maps[a](r, k));
                add_eq(std::move(row));
            }
    }
    if (dM && dN) {
        for (int v = 0; v < n; ++v) {
            // f_v dM_v - dN_v f_v = 0
            for (int r = 0; r < N.dims[v]; ++r)
                for (int c = 0; c < M.dims[v]; ++c) {
                    std::vector<int> row(vars, 0);
                    for (int k = 0; k < M.dims[v]; ++k)
                        row[var(v, r, k)] = F.add(row[var(v, r, k)], (*dM)[v](k, c));
                    for (int k = 0; k < N.dims[v]; ++k)
                        row[var(v, k, c)] = F.sub(row[var(v, k, c)], (*dN)[v](r, k));
                    add_eq(std::move(row));
                }
        }
    }

    FpMat sys((int)eqs.size(), vars, p);
    for (size_t i = 0; i < eqs.size(); ++i)
        for (int j = 0; j < vars; ++j) sys((int)i, j) = eqs[i][j];
    FpMat K = sys.kernel_basis();

    std::vector<std::vector<FpMat>> basis;
    for (int b = 0; b < K.rows(); ++b) {
        std::vector<FpMat> fam;
        for (int v = 0; v < n; ++v) {
            FpMat f(N.dims[v], M.dims[v], p);
            for (int r = 0; r < N.dims[v]; ++r)
                for (int c = 0; c < M.dims[v]; ++c) f(r, c) = K(b, var(v, r, c));
            fam.push_back(std::move(f));
        }
        basis.push_back(std::move(fam));
    }
    return basis;
}

inline int hom_dim(const Rep& M, const Rep& N, const std::vector<FpMat>* dM = nullptr,
                   const std::vector<FpMat>* dN = nullptr) {
    return (int)hom_basis(M, N, dM, dN).size();
}

inline int ext_dim(const Rep& M, const Rep& N) {
    long long e = hom_dim(M, N) - M.Q->euler_form(M.dims, N.dims);
    if (e < 0) throw NegativeExt{};
    return (int)e;
}

/// Indecomposability via the endomorphism ring: End is local iff its only
/// idempotents are 0 and 1. dim End == 1 is the fast path.
inline bool is_indecomposable(const Rep& M, const std::vector<FpMat>* d = nullptr) {
    if (M.total_dim() == 0) return false;
    auto basis = hom_basis(M, M, d, d);
    if (basis.size() == 1) return true;
    // enumerate idempotents in the End space
    const int n = M.Q->n();
    const int p = M.p;
    double size = 1;
    for (size_t i = 0; i < basis.size(); ++i) size *= p;
    if (size > 1e7) throw EndSpaceTooLarge{};
    std::vector<int> coef(basis.size(), 0);
    while (true) {
        // f = sum coef_k basis_k
        std::vector<FpMat> f;
        for (int v = 0; v < n; ++v) {
            FpMat m(M.dims[v], M.dims[v], p);
            for (size_t k = 0; k < basis.size(); ++k)
                if (coef[k]) m = m.add(basis[k][v].scale(coef[k]));
            f.push_back(std::move(m));
        }
        bool idem = true, zero = true, one = true;
        for (int v = 0; v < n && idem; ++v) {
            if (f[v].mul(f[v]) != f[v]) idem = false;
            if (!f[v].is_zero()) zero = false;
            if (f[v] != FpMat::identity(M.dims[v], p)) one = false;
        }
        if (idem && !zero && !one) return false;
        // next coefficient tuple
        size_t k = 0;
        while (k < coef.size() && ++coef[k] == p) coef[k++] = 0;
        if (k == coef.size()) break;
    }
    return true;
}

/// Number of invertible elements of End (optionally End of the pair (M, d)).
/// Enumerates p^{dim End} elements; refuses above the threshold.
inline std::int64_t aut_count(const Rep& M, const std::vector<FpMat>* d = nullptr,
                              std::int64_t threshold = 1 << 14) {
    auto basis = hom_basis(M, M, d, d);
    const int n = M.Q->n();
    const int p = M.p;
    double size = 1;
    for (size_t i = 0; i < basis.size(); ++i) size *= p;
    if (size > (double)threshold) throw EndSpaceTooLarge{};
    std::int64_t count = 0;
    std::vector<int> coef(basis.size(), 0);
    while (true) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            FpMat m(M.dims[v], M.dims[v], p);
            for (size_t k = 0; k < basis.size(); ++k)
                if (coef[k]) m = m.add(basis[k][v].scale(coef[k]));
            if (!m.is_invertible()) ok = false;
        }
        if (ok) ++count;
        size_t k = 0;
        while (k < coef.size() && ++coef[k] == p) coef[k++] = 0;
        if (k == coef.size()) break;
    }
    return count;
}

/// rad M at each vertex: the span of the images of all incoming arrow maps,
/// as an rref basis-row matrix.
inline std::vector<FpMat> radical_bases(const Rep& M) {
    const int n = M.Q->n();
    std::vector<FpMat> rad;
    const auto& arrows = M.Q->arrows();
    for (int v = 0; v < n; ++v) {
        std::vector<std::vector<int>> rows;
        for (size_t a = 0; a < arrows.size(); ++a) {
            if (arrows[a].second != v) continue;
            const FpMat& m = M.maps[a];
            for (int c = 0; c < m.cols(); ++c) {
                std::vector<int> col(m.rows());
                for (int r = 0; r < m.rows(); ++r) col[r] = m(r, c);
                rows.push_back(std::move(col));
            }
        }
        FpMat span((int)rows.size(), M.dims[v], M.p);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < M.dims[v]; ++j) span((int)i, j) = rows[i][j];
        auto piv = span.rref();
        FpMat basis((int)piv.size(), M.dims[v], M.p);
        for (size_t i = 0; i < piv.size(); ++i)
            for (int j = 0; j < M.dims[v]; ++j) basis((int)i, j) = span((int)i, j);
        rad.push_back(std::move(basis));
    }
    return rad;
}

/// dim (M / rad M) at each vertex.
inline DimVector top_dims(const Rep& M) {
    auto rad = radical_bases(M);
    DimVector t(M.Q->n());
    for (int v = 0; v < M.Q->n(); ++v) t[v] = M.dims[v] - rad[v].rows();
    return t;
}

/// Composite of the arrow maps of M along the unique directed path i -> v
/// (identity for v == i). Undefined if no path exists.
inline FpMat path_composite(const Rep& M, int i, int v) {
    if (v == i) return FpMat::identity(M.dims[i], M.p);
    // walk backwards: find arrow ending the path
    const auto& arrows = M.Q->arrows();
    for (size_t a = 0; a < arrows.size(); ++a) {
        auto [s, t] = arrows[a];
        if (t == v && (s == i || M.Q->has_path(i, s)))
            return M.maps[a].mul(path_composite(M, i, s));
    }
    throw std::logic_error("path_composite: no path");
}

struct ProjectiveCover {
    Rep P;                      ///< the cover, a direct sum of P_j's
    std::vector<int> copies;    ///< multiplicity of P_j per vertex j
    std::vector<FpMat> phi;     ///< the epimorphism P -> M, per vertex
};

struct MinimalResolution {
    Rep Omega;                  ///< the syzygy, a submodule of P
    std::vector<FpMat> delta;   ///< inclusion Omega -> P, per vertex
    ProjectiveCover cover;
};

/// Projective cover of M: one copy of P_j per top dimension at j, with the
/// generator of each copy sent to a lift of a top basis vector.
inline ProjectiveCover projective_cover(const Rep& M) {
    const DynkinQuiver& Q = *M.Q;
    const int n = Q.n();
    const int p = M.p;
    auto rad = radical_bases(M);

    // generators at each vertex: standard unit vectors completing rad to M
    std::vector<std::vector<std::vector<int>>> gens(n);
    for (int v = 0; v < n; ++v) {
        std::vector<std::vector<int>> rows;
        for (int i = 0; i < rad[v].rows(); ++i) rows.push_back(rad[v].row(i));
        for (int k = 0; k < M.dims[v]; ++k) {
            std::vector<int> e(M.dims[v], 0);
            e[k] = 1;
            FpMat test((int)rows.size() + 1, M.dims[v], p);
            for (size_t i = 0; i < rows.size(); ++i)
                for (int j = 0; j < M.dims[v]; ++j) test((int)i, j) = rows[i][j];
            for (int j = 0; j < M.dims[v]; ++j) test((int)rows.size(), j) = e[j];
            if (test.rank() > (int)rows.size()) {
                rows.push_back(e);
                gens[v].push_back(e);
            }
        }
    }

    ProjectiveCover pc;
    pc.copies.assign(n, 0);
    Rep P = zero_rep(Q, p);
    // copy layout: per vertex j, gens[j].size() copies of P_j, in vertex order
    std::vector<std::pair<int, std::vector<int>>> copy_list;  // (source vertex j, generator)
    for (int j = 0; j < n; ++j) {
        pc.copies[j] = (int)gens[j].size();
        for (auto& g : gens[j]) {
            P = direct_sum(P, projective(Q, p, j));
            copy_list.emplace_back(j, g);
        }
    }
    pc.P = P;

    // epimorphism: the basis vector of copy (j, g) at vertex v maps to
    // path_composite(M, j, v) * g
    std::vector<FpMat> phi;
    for (int v = 0; v < n; ++v) {
        FpMat f(M.dims[v], P.dims[v], p);
        int col = 0;
        for (auto& [j, g] : copy_list) {
            Rep Pj = projective(Q, p, j);
            if (Pj.dims[v] == 0) continue;
            FpMat comp = path_composite(M, j, v);  // M.dims[v] x M.dims[j]
            for (int r = 0; r < M.dims[v]; ++r) {
                int acc = 0;
                for (int k = 0; k < M.dims[j]; ++k)
                    acc = (int)((acc + (std::int64_t)comp(r, k) * g[k]) % p);
                f(r, col) = acc;
            }
            ++col;
        }
        // columns for copies whose P_j vanishes at v do not exist; recount
        phi.push_back(std::move(f));
    }
    // fix column indexing: columns of P at vertex v enumerate copies with P_j
    // nonzero at v, in copy_list order -- which is what the loop above built.
    pc.phi = std::move(phi);
    return pc;
}

/// Minimal projective resolution 0 -> Omega -> P -> M -> 0.
inline MinimalResolution minimal_resolution(const Rep& M) {
    MinimalResolution res;
    res.cover = projective_cover(M);
    const Rep& P = res.cover.P;
    const int n = M.Q->n();
    const int p = M.p;

    // kernel at each vertex
    std::vector<FpMat> ker;
    for (int v = 0; v < n; ++v) ker.push_back(res.cover.phi[v].kernel_basis());

    Rep Omega{M.Q, p, DimVector(n, 0), {}};
    for (int v = 0; v < n; ++v) Omega.dims[v] = ker[v].rows();
    const auto& arrows = M.Q->arrows();
    for (size_t a = 0; a < arrows.size(); ++a) {
        auto [s, t] = arrows[a];
        FpMat m(Omega.dims[t], Omega.dims[s], p);
        for (int c = 0; c < Omega.dims[s]; ++c) {
            // image of basis vector c of ker[s] under P's arrow map
            std::vector<int> x = ker[s].row(c);
            std::vector<int> y(P.dims[t], 0);
            for (int r = 0; r < P.dims[t]; ++r) {
                std::int64_t acc = 0;
                for (int k = 0; k < P.dims[s]; ++k) acc += (std::int64_t)P.maps[a](r, k) * x[k];
                y[r] = (int)(acc % p);
            }
            std::vector<int> coords = ker[t].rref_coords(y);
            for (int r = 0; r < Omega.dims[t]; ++r) m(r, c) = coords[r];
        }
        Omega.maps.push_back(std::move(m));
    }
    res.Omega = std::move(Omega);
    for (int v = 0; v < n; ++v) res.delta.push_back(ker[v].transpose());
    return res;
}

// ---------------------------------------------------------------------------
// Subrepresentation enumeration

/// Enumerate every subrepresentation of Z (optionally also stable under the
/// vertexwise endomorphism d) as a tuple of rref basis-row matrices, one per
/// vertex, each subrepresentation exactly once in a deterministic order.
inline void for_each_subrep(const Rep& Z, const std::vector<FpMat>* d,
                            const std::function<void(const std::vector<FpMat>&)>& fn,
                            int max_total_dim = 14) {
    if (Z.total_dim() > max_total_dim) throw SearchSpaceTooLarge{};
    const DynkinQuiver& Q = *Z.Q;
    const int n = Q.n();
    const int p = Z.p;

    // per-vertex candidate subspaces (d-stable where d is given)
    std::vector<std::vector<FpMat>> cand(n);
    for (int v = 0; v < n; ++v) {
        for_each_subspace(Z.dims[v], p, [&](const FpMat& U) {
            if (d) {
                for (int r = 0; r < U.rows(); ++r) {
                    std::vector<int> x = U.row(r), y(Z.dims[v], 0);
                    for (int i = 0; i < Z.dims[v]; ++i) {
                        std::int64_t acc = 0;
                        for (int j = 0; j < Z.dims[v]; ++j) acc += (std::int64_t)(*d)[v](i, j) * x[j];
                        y[i] = (int)(acc % p);
                    }
                    if (!U.rref_contains(y)) return;
                }
            }
            cand[v].push_back(U);
        });
    }

    // arrows checkable once vertex v is assigned
    std::vector<std::vector<int>> check_at(n);
    const auto& arrows = Q.arrows();
    for (size_t a = 0; a < arrows.size(); ++a)
        check_at[std::max(arrows[a].first, arrows[a].second)].push_back((int)a);

    // images of each source candidate's basis rows, computed once per arrow
    std::vector<std::vector<std::vector<std::vector<int>>>> img(arrows.size());
    std::vector<std::vector<char>> img_done(arrows.size());
    // lazy pairwise compatibility cache; skipped when it would be too large
    std::vector<std::vector<std::int8_t>> comp(arrows.size());
    for (size_t a = 0; a < arrows.size(); ++a) {
        auto [s, t] = arrows[a];
        img[a].resize(cand[s].size());
        img_done[a].assign(cand[s].size(), 0);
        size_t cells = cand[s].size() * cand[t].size();
        if (cells <= (size_t(1) << 25)) comp[a].assign(cells, -1);
    }
    auto compatible = [&](int a, int ks, int kt) -> bool {
        auto [s, t] = arrows[a];
        std::int8_t* cell = comp[a].empty() ? nullptr : &comp[a][(size_t)ks * cand[t].size() + kt];
        if (cell && *cell >= 0) return *cell != 0;
        if (!img_done[a][ks]) {
            const FpMat& us = cand[s][ks];
            img[a][ks].resize(us.rows());
            for (int r = 0; r < us.rows(); ++r) {
                std::vector<int> y(Z.dims[t], 0);
                for (int i = 0; i < Z.dims[t]; ++i) {
                    std::int64_t acc = 0;
                    for (int j = 0; j < Z.dims[s]; ++j) acc += (std::int64_t)Z.maps[a](i, j) * us(r, j);
                    y[i] = (int)(acc % p);
                }
                img[a][ks][r] = std::move(y);
            }
            img_done[a][ks] = 1;
        }
        bool ok = true;
        for (const auto& y : img[a][ks])
            if (!cand[t][kt].rref_contains(y)) {
                ok = false;
                break;
            }
        if (cell) *cell = ok ? 1 : 0;
        return ok;
    };

    std::vector<FpMat> U(n, FpMat(0, 0, p));
    std::vector<int> pick(n, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            fn(U);
            return;
        }
        for (int k = 0; k < (int)cand[v].size(); ++k) {
            pick[v] = k;
            bool ok = true;
            for (int a : check_at[v]) {
                auto [s, t] = arrows[a];
                if (!compatible(a, pick[s], pick[t])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                U[v] = cand[v][k];
                rec(v + 1);
            }
        }
    };
    rec(0);
}

/// The subrepresentation spanned by the given rref bases, with the induced
/// arrow maps (and restricted d if given).
inline Rep sub_rep(const Rep& Z, const std::vector<FpMat>& U, const std::vector<FpMat>* d = nullptr,
                   std::vector<FpMat>* d_out = nullptr) {
    const DynkinQuiver& Q = *Z.Q;
    const int n = Q.n();
    const int p = Z.p;
    Rep S{&Q, p, DimVector(n, 0), {}};
    for (int v = 0; v < n; ++v) S.dims[v] = U[v].rows();
    const auto& arrows = Q.arrows();
    auto apply = [&](const FpMat& m, const std::vector<int>& x) {
        std::vector<int> y(m.rows(), 0);
        for (int i = 0; i < m.rows(); ++i) {
            std::int64_t acc = 0;
            for (int j = 0; j < m.cols(); ++j) acc += (std::int64_t)m(i, j) * x[j];
            y[i] = (int)(acc % p);
        }
        return y;
    };
    for (size_t a = 0; a < arrows.size(); ++a) {
        auto [s, t] = arrows[a];
        FpMat m(S.dims[t], S.dims[s], p);
        for (int c = 0; c < S.dims[s]; ++c) {
            std::vector<int> coords = U[t].rref_coords(apply(Z.maps[a], U[s].row(c)));
            for (int r = 0; r < S.dims[t]; ++r) m(r, c) = coords[r];
        }
        S.maps.push_back(std::move(m));
    }
    if (d && d_out) {
        d_out->clear();
        for (int v = 0; v < n; ++v) {
            FpMat m(S.dims[v], S.dims[v], p);
            for (int c = 0; c < S.dims[v]; ++c) {
                std::vector<int> coords = U[v].rref_coords(apply((*d)[v], U[v].row(c)));
                for (int r = 0; r < S.dims[v]; ++r) m(r, c) = coords[r];
            }
            d_out->push_back(std::move(m));
        }
    }
    return S;
}

/// The quotient Z / <U>, with induced arrow maps (and induced d if given).
inline Rep quotient_rep(const Rep& Z, const std::vector<FpMat>& U,
                        const std::vector<FpMat>* d = nullptr,
                        std::vector<FpMat>* d_out = nullptr) {
    const DynkinQuiver& Q = *Z.Q;
    const int n = Q.n();
    const int p = Z.p;

    // complement bases: standard unit vectors completing each U[v]
    std::vector<FpMat> comp(n, FpMat(0, 0, p)), full(n, FpMat(0, 0, p));
    for (int v = 0; v < n; ++v) {
        std::vector<std::vector<int>> rows;
        for (int r = 0; r < U[v].rows(); ++r) rows.push_back(U[v].row(r));
        std::vector<std::vector<int>> crows;
        for (int k = 0; k < Z.dims[v]; ++k) {
            std::vector<int> e(Z.dims[v], 0);
            e[k] = 1;
            FpMat test((int)rows.size() + 1, Z.dims[v], p);
            for (size_t i = 0; i < rows.size(); ++i)
                for (int j = 0; j < Z.dims[v]; ++j) test((int)i, j) = rows[i][j];
            for (int j = 0; j < Z.dims[v]; ++j) test((int)rows.size(), j) = e[j];
            if (test.rank() > (int)rows.size()) {
                rows.push_back(e);
                crows.push_back(e);
            }
        }
        FpMat c((int)crows.size(), Z.dims[v], p);
        for (size_t i = 0; i < crows.size(); ++i)
            for (int j = 0; j < Z.dims[v]; ++j) c((int)i, j) = crows[i][j];
        comp[v] = c;
        FpMat f(U[v].rows() + c.rows(), Z.dims[v], p);
        for (int i = 0; i < U[v].rows(); ++i)
            for (int j = 0; j < Z.dims[v]; ++j) f(i, j) = U[v](i, j);
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < Z.dims[v]; ++j) f(U[v].rows() + i, j) = c(i, j);
        full[v] = f;
    }

    auto apply = [&](const FpMat& m, const std::vector<int>& x) {
        std::vector<int> y(m.rows(), 0);
        for (int i = 0; i < m.rows(); ++i) {
            std::int64_t acc = 0;
            for (int j = 0; j < m.cols(); ++j) acc += (std::int64_t)m(i, j) * x[j];
            y[i] = (int)(acc % p);
        }
        return y;
    };
    // class of x in the quotient: coefficients along the complement rows
    auto project = [&](int v, const std::vector<int>& x) {
        std::vector<int> c = solve_in_rowspace(full[v], x);
        return std::vector<int>(c.begin() + U[v].rows(), c.end());
    };

    Rep R{&Q, p, DimVector(n, 0), {}};
    for (int v = 0; v < n; ++v) R.dims[v] = comp[v].rows();
    const auto& arrows = Q.arrows();
    for (size_t a = 0; a < arrows.size(); ++a) {
        auto [s, t] = arrows[a];
        FpMat m(R.dims[t], R.dims[s], p);
        for (int c = 0; c < R.dims[s]; ++c) {
            std::vector<int> coords = project(t, apply(Z.maps[a], comp[s].row(c)));
            for (int r = 0; r < R.dims[t]; ++r) m(r, c) = coords[r];
        }
        R.maps.push_back(std::move(m));
    }
    if (d && d_out) {
        d_out->clear();
        for (int v = 0; v < n; ++v) {
            FpMat m(R.dims[v], R.dims[v], p);
            for (int c = 0; c < R.dims[v]; ++c) {
                std::vector<int> coords = project(v, apply((*d)[v], comp[v].row(c)));
                for (int r = 0; r < R.dims[v]; ++r) m(r, c) = coords[r];
            }
            d_out->push_back(std::move(m));
        }
    }
    return R;
}

// ---------------------------------------------------------------------------
// Indecomposable catalogue

/// Isoclass of a module: multiplicity per positive root (catalogue index).
using ModClass = std::map<int, int>;

inline ModClass mod_class_add(const ModClass& a, const ModClass& b) {
    ModClass r = a;
    for (auto& [k, m] : b) {
        r[k] += m;
        if (r[k] == 0) r.erase(k);
    }
    return r;
}

class IndCatalogue {
  public:
    IndCatalogue(const DynkinQuiver& Q, int p) : Q_(&Q), p_(p) { build(); }

    const DynkinQuiver& quiver() const { return *Q_; }
    int p() const { return p_; }
    int size() const { return (int)roots_.size(); }

    const std::vector<DimVector>& roots() const { return roots_; }
    const DimVector& root(int idx) const { return roots_[idx]; }
    const Rep& rep(int idx) const { return reps_[idx]; }

    /// Catalogue index of the root with dim vector of P_i / S_i.
    int projective_root(int i) const { return proj_root_[i]; }
    int simple_root(int i) const { return simple_root_[i]; }
    bool is_projective_root(int idx) const {
        for (int i = 0; i < Q_->n(); ++i)
            if (proj_root_[i] == idx) return true;
        return false;
    }

    int hom_gram(int a, int b) const { return H_[a][b]; }

    /// Projective cover and syzygy of the indecomposable at idx, as classes
    /// supported on projective roots.
    const ModClass& cover_class(int idx) const { return cover_class_[idx]; }
    const ModClass& syzygy_class(int idx) const { return syzygy_class_[idx]; }

    int root_index(const DimVector& d) const {
        for (size_t i = 0; i < roots_.size(); ++i)
            if (roots_[i] == d) return (int)i;
        return -1;
    }

    Rep realize(const ModClass& cls) const {
        Rep r = zero_rep(*Q_, p_);
        for (auto& [idx, mult] : cls)
            for (int c = 0; c < mult; ++c) r = direct_sum(r, reps_[idx]);
        return r;
    }

    DimVector class_dim(const ModClass& cls) const {
        DimVector d(Q_->n(), 0);
        for (auto& [idx, mult] : cls)
            for (int v = 0; v < Q_->n(); ++v) d[v] += mult * roots_[idx][v];
        return d;
    }

    /// Krull-Schmidt multiplicities via the Hom-dimension Gram system.
    ModClass decompose(const Rep& X) const;

    ModClass top_class(const Rep& M) const {
        DimVector t = top_dims(M);
        ModClass cls;
        for (int v = 0; v < Q_->n(); ++v)
            if (t[v] > 0) cls[simple_root_[v]] = t[v];
        return cls;
    }

  private:
    void build();

    const DynkinQuiver* Q_;
    int p_;
    std::vector<DimVector> roots_;
    std::vector<Rep> reps_;
    std::vector<std::vector<int>> H_;  // H[a][b] = dim Hom(M(a), M(b))
    std::vector<int> proj_root_, simple_root_;
    std::vector<ModClass> cover_class_, syzygy_class_;
};

namespace detail {

inline int max_root_entry(DynkinType t, int rank) {
    switch (t) {
        case DynkinType::A: return 1;
        case DynkinType::D: return 2;
        default: return rank == 6 ? 3 : (rank == 7 ? 4 : 6);
    }
}

/// Lexicographically least (row-major over arrows) indecomposable rep with
/// the given dim vector, or nullopt if none exists.
inline std::optional<Rep> find_indecomposable(const DynkinQuiver& Q, int p, const DimVector& d) {
    Rep M{&Q, p, d, {}};
    std::vector<std::pair<int, int>> cells;  // (arrow, flat index)
    const auto& arrows = Q.arrows();
    for (size_t a = 0; a < arrows.size(); ++a) {
        auto [s, t] = arrows[a];
        M.maps.emplace_back(d[t], d[s], p);
        for (int k = 0; k < d[t] * d[s]; ++k) cells.emplace_back((int)a, k);
    }
    // odometer with the last cell fastest = lexicographic on the tuple
    std::vector<int> val(cells.size(), 0);
    while (true) {
        if (is_indecomposable(M)) return M;
        int k = (int)cells.size() - 1;
        while (k >= 0) {
            auto [a, idx] = cells[k];
            int r = idx / d[arrows[a].first], c = idx % d[arrows[a].first];
            if (++val[k] < p) {
                M.maps[a](r, c) = val[k];
                break;
            }
            val[k] = 0;
            M.maps[a](r, c) = 0;
            --k;
        }
        if (k < 0) break;
    }
    return std::nullopt;
}

}  // namespace detail

inline void IndCatalogue::build() {
    const int n = Q_->n();
    const int maxc = detail::max_root_entry(Q_->type(), n);

    // candidate dim vectors with unit Euler self-pairing (the Tits form)
    std::vector<DimVector> candidates;
    DimVector d(n, 0);
    std::function<void(int)> gen = [&](int v) {
        if (v == n) {
            if (total(d) > 0 && Q_->euler_form(d, d) == 1) candidates.push_back(d);
            return;
        }
        for (int x = 0; x <= maxc; ++x) {
            d[v] = x;
            gen(v + 1);
        }
        d[v] = 0;
    };
    gen(0);
    std::sort(candidates.begin(), candidates.end(), [](const DimVector& a, const DimVector& b) {
        if (total(a) != total(b)) return total(a) < total(b);
        return a < b;
    });

    for (const auto& cand : candidates) {
        auto rep = detail::find_indecomposable(*Q_, p_, cand);
        if (!rep) throw CatalogueSearchExhausted("no indecomposable with the predicted dim vector");
        roots_.push_back(cand);
        reps_.push_back(std::move(*rep));
    }

    const int N = (int)roots_.size();
    H_.assign(N, std::vector<int>(N, 0));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) H_[a][b] = hom_dim(reps_[a], reps_[b]);

    proj_root_.assign(n, -1);
    simple_root_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        proj_root_[i] = root_index(projective(*Q_, p_, i).dims);
        simple_root_[i] = root_index(simple(*Q_, p_, i).dims);
        if (proj_root_[i] < 0 || simple_root_[i] < 0)
            throw CatalogueSearchExhausted("projective or simple dim vector missing from the catalogue");
    }

    cover_class_.resize(N);
    syzygy_class_.resize(N);
    for (int idx = 0; idx < N; ++idx) {
        auto res = minimal_resolution(reps_[idx]);
        ModClass cov, syz;
        for (int j = 0; j < n; ++j)
            if (res.cover.copies[j] > 0) cov[proj_root_[j]] = res.cover.copies[j];
        if (res.Omega.total_dim() > 0) syz = decompose(res.Omega);
        cover_class_[idx] = std::move(cov);
        syzygy_class_[idx] = std::move(syz);
    }
}

inline ModClass IndCatalogue::decompose(const Rep& X) const {
    const int N = size();
    // solve H m = b exactly over Q (H is integer and invertible)
    std::vector<std::vector<Rational>> A(N, std::vector<Rational>(N + 1));
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) A[a][b] = Rational(H_[a][b]);
        A[a][N] = Rational(hom_dim(reps_[a], X));
    }
    for (int c = 0; c < N; ++c) {
        int pr = -1;
        for (int r = c; r < N; ++r)
            if (!A[r][c].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) throw NonIntegralMultiplicity{};  // Gram matrix singular: invalid input
        std::swap(A[pr], A[c]);
        Rational inv = Rational(1) / A[c][c];
        for (int cc = 0; cc <= N; ++cc) A[c][cc] *= inv;
        for (int r = 0; r < N; ++r) {
            if (r == c || A[r][c].is_zero()) continue;
            Rational f = A[r][c];
            for (int cc = c; cc <= N; ++cc) A[r][cc] -= f * A[c][cc];
        }
    }
    ModClass cls;
    for (int r = 0; r < N; ++r) {
        if (!A[r][N].is_integer() || A[r][N].num() < 0) throw NonIntegralMultiplicity{};
        if (A[r][N].num() > 0) cls[r] = (int)A[r][N].as_integer();
    }
    // sanity: dimension vectors must agree
    if (class_dim(cls) != X.dims) throw NonIntegralMultiplicity{};
    return cls;
}

}  // namespace hallc1

#endif
