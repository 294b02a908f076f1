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

#ifndef HALLC1_SERIALIZE_HPP
#define HALLC1_SERIALIZE_HPP

#include <json.hpp>

#include <cctype>
#include <string>

#include "hall.hpp"

namespace hallc1 {

inline std::string dim_vector_key(const DimVector& d) {
    std::string s = "[";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + "]";
}

inline nlohmann::ordered_json to_json(const IndCatalogue& cat, const C1Class& c) {
    nlohmann::ordered_json mods = nlohmann::ordered_json::object();
    for (auto& [idx, m] : c.mods) mods[dim_vector_key(cat.root(idx))] = m;
    nlohmann::ordered_json projs = nlohmann::ordered_json::object();
    for (auto& [v, m] : c.projs) projs[std::to_string(v + 1)] = m;
    return {{"mods", mods}, {"projs", projs}};
}

inline nlohmann::ordered_json to_json(const IndCatalogue& cat, const ModClass& c) {
    nlohmann::ordered_json mods = nlohmann::ordered_json::object();
    for (auto& [idx, m] : c) mods[dim_vector_key(cat.root(idx))] = m;
    return {{"mods", mods}};
}

inline std::string coeff_str(const Rational& c) { return c.str(); }
inline std::string coeff_str(const IntPoly& c) { return c.str(); }
inline std::string coeff_str(const LaurentV& c) { return c.str(); }
inline const char* coeff_domain(const Rational&) { return "rational"; }
inline const char* coeff_domain(const IntPoly&) { return "intpoly"; }
inline const char* coeff_domain(const LaurentV&) { return "laurent"; }

template <class B, class C>
inline nlohmann::ordered_json to_json(const IndCatalogue& cat, const LinComb<B, C>& e) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    C domain_probe{0};
    for (auto& [b, c] : e.terms)
        terms.push_back({{"basis", to_json(cat, b)}, {"coeff", coeff_str(c)}});
    return {{"domain", coeff_domain(domain_probe)}, {"terms", terms}};
}

// shorthand descriptors: "C[1,1]+K1+2*C[0,1]" (dim vectors 1-based vertices for K)
inline std::string shorthand(const IndCatalogue& cat, const C1Class& c) {
    std::string s;
    auto app = [&](const std::string& part, int m) {
        if (!s.empty()) s += "+";
        if (m != 1) s += std::to_string(m) + "*";
        s += part;
    };
    for (auto& [idx, m] : c.mods) app("C" + dim_vector_key(cat.root(idx)), m);
    for (auto& [v, m] : c.projs) app("K" + std::to_string(v + 1), m);
    return s.empty() ? "0" : s;
}

inline std::string shorthand(const IndCatalogue& cat, const ModClass& c) {
    std::string s;
    for (auto& [idx, m] : c) {
        if (!s.empty()) s += "+";
        if (m != 1) s += std::to_string(m) + "*";
        s += "C" + dim_vector_key(cat.root(idx));
    }
    return s.empty() ? "0" : s;
}

inline C1Class parse_c1_class(const IndCatalogue& cat, const std::string& text) {
    C1Class out;
    size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("class descriptor '" + text + "': " + why);
    };
    while (i < text.size()) {
        int mult = 1;
        if (std::isdigit((unsigned char)text[i])) {
            size_t j = i;
            while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
            if (j >= text.size() || text[j] != '*') fail("expected '*' after multiplicity");
            mult = std::stoi(text.substr(i, j - i));
            i = j + 1;
        }
        if (i >= text.size()) fail("dangling multiplicity");
        if (text[i] == 'C') {
            ++i;
            if (i >= text.size() || text[i] != '[') fail("expected '[' after C");
            size_t close = text.find(']', i);
            if (close == std::string::npos) fail("unterminated dim vector");
            DimVector d;
            std::string body = text.substr(i + 1, close - i - 1);
            size_t pos = 0;
            while (pos < body.size()) {
                size_t comma = body.find(',', pos);
                if (comma == std::string::npos) comma = body.size();
                d.push_back(std::stoi(body.substr(pos, comma - pos)));
                pos = comma + 1;
            }
            int idx = cat.root_index(d);
            if (idx < 0) fail("not a positive root: " + dim_vector_key(d));
            out.mods[idx] += mult;
            i = close + 1;
        } else if (text[i] == 'K') {
            ++i;
            size_t j = i;
            while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
            if (j == i) fail("expected vertex after K");
            int v = std::stoi(text.substr(i, j - i)) - 1;
            if (v < 0 || v >= cat.quiver().n()) fail("vertex out of range");
            out.projs[v] += mult;
            i = j;
        } else if (text[i] == '0' && text.size() == 1) {
            return out;
        } else {
            fail("expected C or K");
        }
        if (i < text.size()) {
            if (text[i] != '+') fail("expected '+'");
            ++i;
        }
    }
    return out;
}

/// Parses a dim vector key "[1,0,1]" back into a vector.
inline DimVector parse_dim_vector_key(const std::string& key) {
    if (key.size() < 2 || key.front() != '[' || key.back() != ']')
        throw std::invalid_argument("bad dim vector key: " + key);
    DimVector d;
    std::string body = key.substr(1, key.size() - 2);
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        if (comma == std::string::npos) comma = body.size();
        d.push_back(std::stoi(body.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return d;
}

/// Accepts a class descriptor either as shorthand ("C[1,1]+K2") or as the
/// JSON emitted by to_json ({"mods": {...}, "projs": {...}}).
inline C1Class parse_c1_descriptor(const IndCatalogue& cat, const std::string& text) {
    size_t first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '{') {
        auto j = nlohmann::json::parse(text);
        C1Class out;
        if (j.contains("mods"))
            for (auto& [key, m] : j.at("mods").items()) {
                int idx = cat.root_index(parse_dim_vector_key(key));
                if (idx < 0) throw std::invalid_argument("not a positive root: " + key);
                if (m.get<int>() > 0) out.mods[idx] += m.get<int>();
            }
        if (j.contains("projs"))
            for (auto& [key, m] : j.at("projs").items()) {
                int v = std::stoi(key) - 1;
                if (v < 0 || v >= cat.quiver().n())
                    throw std::invalid_argument("vertex out of range: " + key);
                if (m.get<int>() > 0) out.projs[v] += m.get<int>();
            }
        return out;
    }
    return parse_c1_class(cat, text);
}

/// Module-class descriptor: same grammar, but K parts are rejected.
inline ModClass parse_mod_descriptor(const IndCatalogue& cat, const std::string& text) {
    C1Class c = parse_c1_descriptor(cat, text);
    if (!c.projs.empty())
        throw std::invalid_argument("module class descriptor must not contain K parts: " + text);
    ModClass out;
    for (auto& [idx, m] : c.mods) out[idx] = m;
    return out;
}

}  // namespace hallc1

#endif
