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

#ifndef HALLC1_QUIVER_HPP
#define HALLC1_QUIVER_HPP

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hallc1 {

struct NotDynkin : std::runtime_error {
    explicit NotDynkin(const std::string& what) : std::runtime_error("NotDynkin: " + what) {}
};
struct OrientedCycle : std::runtime_error {
    OrientedCycle() : std::runtime_error("OrientedCycle: quiver contains an oriented cycle") {}
};

enum class DynkinType { A, D, E };

inline char dynkin_type_char(DynkinType t) {
    switch (t) {
        case DynkinType::A: return 'A';
        case DynkinType::D: return 'D';
        default: return 'E';
    }
}

/// Integer vector in N^n; componentwise operations.
using DimVector = std::vector<int>;

inline DimVector operator+(const DimVector& a, const DimVector& b) {
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline int total(const DimVector& d) {
    int s = 0;
    for (int x : d) s += x;
    return s;
}

/// Undirected edge set of the Dynkin diagram of the given type and rank,
/// 0-based vertices. A_n: chain. D_n: chain 0..n-2 with n-1 attached at n-3.
/// E_n (Bourbaki): chain 0-2-3-4-5(-6-7) with vertex 1 attached at vertex 3.
inline std::vector<std::pair<int, int>> dynkin_edges(DynkinType t, int n) {
    std::vector<std::pair<int, int>> e;
    switch (t) {
        case DynkinType::A:
            if (n < 1) throw NotDynkin("type A needs rank >= 1");
            for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
            break;
        case DynkinType::D:
            if (n < 4) throw NotDynkin("type D needs rank >= 4");
            for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(n - 3, n - 1);
            break;
        case DynkinType::E:
            if (n < 6 || n > 8) throw NotDynkin("type E needs rank 6, 7 or 8");
            e.emplace_back(0, 2);
            for (int i = 2; i + 1 < n; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(1, 3);
            break;
    }
    return e;
}

/// An orientation of a simply-laced Dynkin diagram. Vertices are 0-based.
class DynkinQuiver {
  public:
    DynkinQuiver(DynkinType type, int rank, std::vector<std::pair<int, int>> arrows)
        : type_(type), rank_(rank), arrows_(std::move(arrows)) {
        validate();
        compute_reachability();
    }

    DynkinType type() const { return type_; }
    int rank() const { return rank_; }
    int n() const { return rank_; }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }

    std::string name() const {
        return std::string(1, dynkin_type_char(type_)) + std::to_string(rank_);
    }

    /// Length of the unique directed path i -> j, or -1 if none. Length 0 for i == j.
    int path_length(int i, int j) const { return dist_[i][j]; }

    bool has_path(int i, int j) const { return i != j && dist_[i][j] > 0; }

    /// a_ij = 1 iff a directed path i -> j exists (antisymmetric).
    std::vector<std::vector<int>> path_matrix() const {
        std::vector<std::vector<int>> a(rank_, std::vector<int>(rank_, 0));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                if (has_path(i, j)) {
                    a[i][j] = 1;
                    a[j][i] = -1;
                }
        return a;
    }

    /// Unordered pairs {i,j} joined by a directed path of length >= 2.
    std::set<std::pair<int, int>> long_path_pairs() const {
        std::set<std::pair<int, int>> out;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                if (i != j && dist_[i][j] >= 2) out.insert({std::min(i, j), std::max(i, j)});
        return out;
    }

    bool is_bipartite() const {
        for (int v = 0; v < rank_; ++v) {
            bool in = false, out = false;
            for (auto& [s, t] : arrows_) {
                if (s == v) out = true;
                if (t == v) in = true;
            }
            if (in && out) return false;
        }
        return true;
    }

    /// Euler form of the path algebra: <a,b> = sum_i a_i b_i - sum_{s->t} a_s b_t.
    long long euler_form(const DimVector& a, const DimVector& b) const {
        long long r = 0;
        for (int i = 0; i < rank_; ++i) r += (long long)a[i] * b[i];
        for (auto& [s, t] : arrows_) r -= (long long)a[s] * b[t];
        return r;
    }

  private:
    void validate() {
        auto edges = dynkin_edges(type_, rank_);
        std::multiset<std::pair<int, int>> want(edges.begin(), edges.end());
        std::set<std::pair<int, int>> seen_directed;
        std::multiset<std::pair<int, int>> got;
        for (auto& [s, t] : arrows_) {
            if (s < 0 || s >= rank_ || t < 0 || t >= rank_ || s == t)
                throw NotDynkin("arrow endpoints out of range");
            if (seen_directed.count({t, s})) throw OrientedCycle{};
            seen_directed.insert({s, t});
            got.insert({std::min(s, t), std::max(s, t)});
        }
        if (got != want)
            throw NotDynkin("arrows do not orient each Dynkin edge exactly once");
        // A one-per-edge orientation of a tree cannot contain longer cycles.
    }

    void compute_reachability() {
        dist_.assign(rank_, std::vector<int>(rank_, -1));
        for (int s = 0; s < rank_; ++s) {
            dist_[s][s] = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (auto& [a, b] : arrows_)
                    if (a == v && dist_[s][b] < 0) {
                        dist_[s][b] = dist_[s][v] + 1;
                        q.push(b);
                    }
            }
        }
    }

    DynkinType type_;
    int rank_;
    std::vector<std::pair<int, int>> arrows_;
    std::vector<std::vector<int>> dist_;
};

/// Convenience builders for the quivers used throughout the tests.
inline DynkinQuiver linear_quiver(int n) {
    std::vector<std::pair<int, int>> arrows;
    for (int i = 0; i + 1 < n; ++i) arrows.emplace_back(i, i + 1);
    return DynkinQuiver(DynkinType::A, n, std::move(arrows));
}

/// Alternating orientation: 0 -> 1 <- 2 -> 3 ...
inline DynkinQuiver bipartite_a_quiver(int n) {
    std::vector<std::pair<int, int>> arrows;
    for (int i = 0; i + 1 < n; ++i) {
        if (i % 2 == 0)
            arrows.emplace_back(i, i + 1);
        else
            arrows.emplace_back(i + 1, i);
    }
    return DynkinQuiver(DynkinType::A, n, std::move(arrows));
}

/// D4 with all arrows pointing into the branch vertex (vertex 1).
inline DynkinQuiver d4_sink_quiver() {
    return DynkinQuiver(DynkinType::D, 4, {{0, 1}, {2, 1}, {3, 1}});
}

/// Parse the quiver description format:
///   type=<A|D|E><rank>
///   i -> j        (one arrow per line, 1-based vertices)
inline DynkinQuiver parse_quiver(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    DynkinType type = DynkinType::A;
    int rank = 0;
    bool have_type = false;
    std::vector<std::pair<int, int>> arrows;
    while (std::getline(in, line)) {
        // strip whitespace and comments
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string s;
        for (char c : line)
            if (!std::isspace((unsigned char)c)) s += c;
        if (s.empty()) continue;
        if (s.rfind("type=", 0) == 0) {
            if (s.size() < 7) throw std::invalid_argument("bad type line: " + line);
            switch (s[5]) {
                case 'A': type = DynkinType::A; break;
                case 'D': type = DynkinType::D; break;
                case 'E': type = DynkinType::E; break;
                default: throw std::invalid_argument("unknown Dynkin type in: " + line);
            }
            rank = std::stoi(s.substr(6));
            have_type = true;
            continue;
        }
        auto pos = s.find("->");
        if (pos == std::string::npos) throw std::invalid_argument("bad arrow line: " + line);
        int a = std::stoi(s.substr(0, pos));
        int b = std::stoi(s.substr(pos + 2));
        arrows.emplace_back(a - 1, b - 1);
    }
    if (!have_type) throw std::invalid_argument("quiver file is missing the type= line");
    return DynkinQuiver(type, rank, std::move(arrows));
}

}  // namespace hallc1

#endif
