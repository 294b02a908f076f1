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

#ifndef HALLC1_CYCLIC_HPP
#define HALLC1_CYCLIC_HPP

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "modcat.hpp"

namespace hallc1 {

struct NotProjectiveErr : std::runtime_error {
    NotProjectiveErr() : std::runtime_error("NotProjective: underlying module is not projective") {}
};
struct NotAC1Isoclass : std::runtime_error {
    NotAC1Isoclass() : std::runtime_error("NotAC1Isoclass: object is not a valid 1-cyclic complex of projectives") {}
};

/// Isoclass in P_1(Gamma): multiplicities of C_{M(alpha)} per positive root
/// (catalogue index) and of K_{P_i} per vertex.
struct C1Class {
    std::map<int, int> mods;   ///< root index -> multiplicity of C_{M(root)}
    std::map<int, int> projs;  ///< vertex -> multiplicity of K_{P_vertex}

    bool empty() const { return mods.empty() && projs.empty(); }
    bool is_indecomposable() const {
        int s = 0;
        for (auto& [k, m] : mods) s += m;
        for (auto& [k, m] : projs) s += m;
        return s == 1;
    }
    int summand_count() const {
        int s = 0;
        for (auto& [k, m] : mods) s += m;
        for (auto& [k, m] : projs) s += m;
        return s;
    }

    friend bool operator==(const C1Class& a, const C1Class& b) {
        return a.mods == b.mods && a.projs == b.projs;
    }
    friend bool operator<(const C1Class& a, const C1Class& b) {
        return std::tie(a.mods, a.projs) < std::tie(b.mods, b.projs);
    }

    static C1Class c_of(int root_idx, int mult = 1) {
        C1Class c;
        if (mult > 0) c.mods[root_idx] = mult;
        return c;
    }
    static C1Class k_of(int vertex, int mult = 1) {
        C1Class c;
        if (mult > 0) c.projs[vertex] = mult;
        return c;
    }
    friend C1Class operator+(const C1Class& a, const C1Class& b) {
        C1Class r = a;
        for (auto& [k, m] : b.mods) r.mods[k] += m;
        for (auto& [k, m] : b.projs) r.projs[k] += m;
        return r;
    }
};

/// A concrete 1-cyclic complex: a projective representation together with a
/// square-zero endomorphism d.
struct C1Object {
    Rep rep;
    std::vector<FpMat> d;  // per vertex, square

    int total_dim() const { return rep.total_dim(); }
};

inline bool d_is_valid(const C1Object& X) {
    const auto& arrows = X.rep.Q->arrows();
    for (size_t a = 0; a < arrows.size(); ++a) {
        auto [s, t] = arrows[a];
        if (X.d[t].mul(X.rep.maps[a]) != X.rep.maps[a].mul(X.d[s])) return false;
    }
    for (int v = 0; v < X.rep.Q->n(); ++v)
        if (!X.d[v].mul(X.d[v]).is_zero()) return false;
    return true;
}

inline C1Object c1_zero(const DynkinQuiver& Q, int p) {
    C1Object X{zero_rep(Q, p), {}};
    for (int v = 0; v < Q.n(); ++v) X.d.emplace_back(0, 0, p);
    return X;
}

inline C1Object c1_direct_sum(const C1Object& a, const C1Object& b) {
    C1Object r{direct_sum(a.rep, b.rep), {}};
    int p = a.rep.p;
    for (int v = 0; v < a.rep.Q->n(); ++v) {
        FpMat m(r.rep.dims[v], r.rep.dims[v], p);
        for (int i = 0; i < a.rep.dims[v]; ++i)
            for (int j = 0; j < a.rep.dims[v]; ++j) m(i, j) = a.d[v](i, j);
        for (int i = 0; i < b.rep.dims[v]; ++i)
            for (int j = 0; j < b.rep.dims[v]; ++j)
                m(a.rep.dims[v] + i, a.rep.dims[v] + j) = b.d[v](i, j);
        r.d.push_back(std::move(m));
    }
    return r;
}

/// C_f for a module map f : Omega -> P between projectives, given per-vertex
/// as P.dims[v] x Omega.dims[v]. Underlying module P + Omega, d = (0 f; 0 0).
inline C1Object c_of_map(const IndCatalogue& cat, const Rep& P, const Rep& Omega,
                         const std::vector<FpMat>& f) {
    for (const Rep* R : {&P, &Omega}) {
        if (R->total_dim() == 0) continue;
        ModClass cls = cat.decompose(*R);
        for (auto& [idx, mult] : cls)
            if (!cat.is_projective_root(idx)) throw NotProjectiveErr{};
    }
    C1Object X{direct_sum(P, Omega), {}};
    int p = P.p;
    for (int v = 0; v < P.Q->n(); ++v) {
        FpMat m(X.rep.dims[v], X.rep.dims[v], p);
        for (int i = 0; i < P.dims[v]; ++i)
            for (int j = 0; j < Omega.dims[v]; ++j) m(i, P.dims[v] + j) = f[v](i, j);
        X.d.push_back(std::move(m));
    }
    return X;
}

/// K_P = C_{Id_P}.
inline C1Object k_object(const IndCatalogue& cat, const Rep& P) {
    std::vector<FpMat> id;
    for (int v = 0; v < P.Q->n(); ++v) id.push_back(FpMat::identity(P.dims[v], P.p));
    return c_of_map(cat, P, P, id);
}

/// C_M from the minimal projective resolution of M.
inline C1Object c_of_module(const IndCatalogue& cat, const Rep& M) {
    auto res = minimal_resolution(M);
    return c_of_map(cat, res.cover.P, res.Omega, res.delta);
}

inline C1Object shift(const C1Object& X) {
    C1Object Y = X;
    for (auto& m : Y.d) m = m.scale(-1);
    return Y;
}

/// Homology Ker d / Im d with the induced arrow maps.
inline Rep homology(const C1Object& X) {
    const DynkinQuiver& Q = *X.rep.Q;
    const int n = Q.n();
    const int p = X.rep.p;

    // kernel bases as subspace tuples, then quotient by the image
    std::vector<FpMat> ker;
    for (int v = 0; v < n; ++v) ker.push_back(X.d[v].kernel_basis());
    Rep K = sub_rep(X.rep, ker);

    // image of d inside the kernel, in kernel coordinates
    std::vector<FpMat> img_in_k;
    for (int v = 0; v < n; ++v) {
        const FpMat& dv = X.d[v];
        std::vector<std::vector<int>> cols;
        for (int c = 0; c < dv.cols(); ++c) {
            std::vector<int> y(dv.rows());
            for (int r = 0; r < dv.rows(); ++r) y[r] = dv(r, c);
            cols.push_back(ker[v].rref_coords(y));  // d^2 = 0: image is in the kernel
        }
        FpMat m((int)cols.size(), K.dims[v], p);
        for (size_t i = 0; i < cols.size(); ++i)
            for (int j = 0; j < K.dims[v]; ++j) m((int)i, j) = cols[i][j];
        auto piv = m.rref();
        FpMat basis((int)piv.size(), K.dims[v], p);
        for (size_t i = 0; i < piv.size(); ++i)
            for (int j = 0; j < K.dims[v]; ++j) basis((int)i, j) = m((int)i, j);
        img_in_k.push_back(std::move(basis));
    }
    return quotient_rep(K, img_in_k);
}

/// Underlying projective class of lambda: sum of P_M + Omega_M over mods plus
/// 2 P_i per K_{P_i}, as a ModClass on projective roots.
inline ModClass underlying_projective(const IndCatalogue& cat, const C1Class& lambda) {
    ModClass u;
    for (auto& [idx, mult] : lambda.mods) {
        for (auto& [r, m] : cat.cover_class(idx)) u[r] += mult * m;
        for (auto& [r, m] : cat.syzygy_class(idx)) u[r] += mult * m;
    }
    for (auto& [i, mult] : lambda.projs) u[cat.projective_root(i)] += 2 * mult;
    for (auto it = u.begin(); it != u.end();)
        it = it->second == 0 ? u.erase(it) : std::next(it);
    return u;
}

/// The block-diagonal canonical object of an isoclass.
inline C1Object realize(const IndCatalogue& cat, const C1Class& lambda) {
    C1Object X = c1_zero(cat.quiver(), cat.p());
    for (auto& [idx, mult] : lambda.mods)
        for (int c = 0; c < mult; ++c) X = c1_direct_sum(X, c_of_module(cat, cat.rep(idx)));
    for (auto& [i, mult] : lambda.projs)
        for (int c = 0; c < mult; ++c)
            X = c1_direct_sum(X, k_object(cat, projective(cat.quiver(), cat.p(), i)));
    return X;
}

/// The unique lambda with realize(lambda) isomorphic to X, from the complete
/// invariant (class of H_0, class of the underlying module).
inline C1Class classify(const IndCatalogue& cat, const C1Object& X) {
    if (!d_is_valid(X)) throw NotAC1Isoclass{};
    // M is projective iff the projective cover of top(M) has the dims of M;
    // the top dims then give the multiplicity of each P_v directly.
    const int n = cat.quiver().n();
    DimVector t = top_dims(X.rep);
    DimVector cover_dims(n, 0);
    ModClass under;
    for (int v = 0; v < n; ++v) {
        if (t[v] == 0) continue;
        under[cat.projective_root(v)] = t[v];
        const DimVector& pd = cat.root(cat.projective_root(v));
        for (int w = 0; w < n; ++w) cover_dims[w] += t[v] * pd[w];
    }
    if (cover_dims != X.rep.dims) throw NotAC1Isoclass{};

    C1Class lambda;
    Rep H = homology(X);
    if (H.total_dim() > 0) lambda.mods = cat.decompose(H);

    // residue = underlying - sum (P_M + Omega_M) must be 2 * (projective class)
    ModClass residue = under;
    for (auto& [idx, mult] : lambda.mods) {
        for (auto& [r, m] : cat.cover_class(idx)) residue[r] -= mult * m;
        for (auto& [r, m] : cat.syzygy_class(idx)) residue[r] -= mult * m;
    }
    for (auto& [r, m] : residue) {
        if (m == 0) continue;
        if (m < 0 || m % 2 != 0) throw NotAC1Isoclass{};
        // find the vertex of this projective root
        int vtx = -1;
        for (int i = 0; i < cat.quiver().n(); ++i)
            if (cat.projective_root(i) == r) vtx = i;
        if (vtx < 0) throw NotAC1Isoclass{};
        lambda.projs[vtx] = m / 2;
    }
    return lambda;
}

/// (dim Hom_A(H0 X, H0 Y), dim Ext^1_A(H0 X, H0 Y)); the extension group in
/// C_1(P) has q^(h+e) elements.
inline std::pair<int, int> ext1_dims(const IndCatalogue& cat, const C1Class& x, const C1Class& y) {
    long long h = 0;
    for (auto& [a, ma] : x.mods)
        for (auto& [b, mb] : y.mods) h += (long long)ma * mb * cat.hom_gram(a, b);
    DimVector dx(cat.quiver().n(), 0), dy(cat.quiver().n(), 0);
    for (auto& [a, ma] : x.mods)
        for (int v = 0; v < cat.quiver().n(); ++v) dx[v] += ma * cat.root(a)[v];
    for (auto& [b, mb] : y.mods)
        for (int v = 0; v < cat.quiver().n(); ++v) dy[v] += mb * cat.root(b)[v];
    long long e = h - cat.quiver().euler_form(dx, dy);
    if (e < 0) throw NegativeExt{};
    return {(int)h, (int)e};
}

inline DimVector homology_dim(const IndCatalogue& cat, const C1Class& x) {
    DimVector d(cat.quiver().n(), 0);
    for (auto& [a, m] : x.mods)
        for (int v = 0; v < cat.quiver().n(); ++v) d[v] += m * cat.root(a)[v];
    return d;
}

inline DimVector underlying_dim(const IndCatalogue& cat, const C1Class& x) {
    return cat.class_dim(underlying_projective(cat, x));
}

// ---------------------------------------------------------------------------
// Canonical order on indecomposable isoclasses

/// An indecomposable isoclass: C_{M(root)} or K_{P_vertex}.
struct IndC1 {
    bool is_k = false;
    int idx = 0;  // root index for C, vertex for K

    C1Class as_class() const { return is_k ? C1Class::k_of(idx) : C1Class::c_of(idx); }
    friend bool operator==(const IndC1& a, const IndC1& b) {
        return a.is_k == b.is_k && a.idx == b.idx;
    }
};

/// All indecomposable isoclasses: |Phi+| C-classes plus n K-classes.
inline std::vector<IndC1> all_indecomposables(const IndCatalogue& cat) {
    std::vector<IndC1> out;
    for (int r = 0; r < cat.size(); ++r) out.push_back({false, r});
    for (int i = 0; i < cat.quiver().n(); ++i) out.push_back({true, i});
    return out;
}

/// Total order refining the PBW degree (dim H_0, dim End H_0): K-classes
/// first (homology 0), then C-classes by total homology dimension, End
/// dimension, dim vector, index.
inline std::vector<IndC1> canonical_order(const IndCatalogue& cat) {
    auto out = all_indecomposables(cat);
    auto key = [&](const IndC1& c) {
        if (c.is_k) return std::tuple<int, int, DimVector, int, int>{0, 0, DimVector{}, 1, c.idx};
        // End of an indecomposable over a Dynkin path algebra is k
        return std::tuple<int, int, DimVector, int, int>{total(cat.root(c.idx)), 1,
                                                         cat.root(c.idx), 0, c.idx};
    };
    std::sort(out.begin(), out.end(), [&](const IndC1& a, const IndC1& b) { return key(a) < key(b); });
    return out;
}

/// Multiplicity of an indecomposable inside a class.
inline int multiplicity(const C1Class& lambda, const IndC1& c) {
    if (c.is_k) {
        auto it = lambda.projs.find(c.idx);
        return it == lambda.projs.end() ? 0 : it->second;
    }
    auto it = lambda.mods.find(c.idx);
    return it == lambda.mods.end() ? 0 : it->second;
}

}  // namespace hallc1

#endif
