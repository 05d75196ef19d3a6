#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "operator_poly.hpp"
#include "schubert.hpp"

namespace hasse {

struct TextStyle {
    bool unicode = false;
    /// Wrap sums at term boundaries once a line would exceed this width; 0 disables.
    std::size_t width = 0;

    const char* wedge() const { return unicode ? "∧" : "^"; }
    const char* epsilon() const { return unicode ? "ε" : "e"; }
    const char* sigma() const { return unicode ? "σ" : "s"; }
    const char* times() const { return unicode ? "·" : "*"; }
    const char* minus() const { return unicode ? "−" : "-"; }
};

namespace detail {

struct RenderedTerm {
    bool negative = false;
    std::string body;
};

inline std::string q_power(unsigned d) { return d == 1 ? "q" : "q^" + std::to_string(d); }

/// Renders coefficient * basis; an empty basis stands for 1.
inline RenderedTerm render_term(const QPolynomial& coeff, const std::string& basis, const TextStyle& style);

inline std::string join_terms(const std::vector<RenderedTerm>& terms, const TextStyle& style) {
    if (terms.empty()) return "0";
    std::string out;
    std::size_t line_start = 0;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        std::string piece;
        if (t == 0) {
            piece = (terms[t].negative ? std::string(style.minus()) : std::string()) + terms[t].body;
        } else {
            piece = std::string(" ") + (terms[t].negative ? style.minus() : "+") + " " + terms[t].body;
        }
        if (style.width > 0 && t > 0 && out.size() - line_start + piece.size() > style.width) {
            out += "\n ";
            line_start = out.size() - 1;
            piece.erase(0, 1);
        }
        out += piece;
    }
    return out;
}

inline std::string render_qpoly_signed(const QPolynomial& p, const TextStyle& style) {
    std::vector<RenderedTerm> terms;
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
        const auto& [deg, c] = *it;
        RenderedTerm t{c < 0, {}};
        const Integer mag = c < 0 ? Integer(-c) : c;
        if (deg == 0) {
            t.body = to_string(mag);
        } else {
            t.body = (mag == 1 ? std::string() : to_string(mag) + style.times()) + q_power(deg);
        }
        terms.push_back(std::move(t));
    }
    return join_terms(terms, TextStyle{style.unicode, 0});
}

inline RenderedTerm render_term(const QPolynomial& coeff, const std::string& basis, const TextStyle& style) {
    RenderedTerm t;
    if (coeff.term_count() == 1) {
        const auto& [deg, c] = *coeff.coefficients().begin();
        t.negative = c < 0;
        const Integer mag = t.negative ? Integer(-c) : c;
        std::vector<std::string> factors;
        if (mag != 1 || (deg == 0 && basis.empty())) factors.push_back(to_string(mag));
        if (deg > 0) factors.push_back(q_power(deg));
        if (!basis.empty()) factors.push_back(basis);
        for (std::size_t f = 0; f < factors.size(); ++f) {
            if (f > 0) t.body += style.times();
            t.body += factors[f];
        }
        return t;
    }
    t.body = "(" + render_qpoly_signed(coeff, style) + ")";
    if (!basis.empty()) t.body += style.times() + basis;
    return t;
}

}  // namespace detail

inline std::string render(const QPolynomial& p, const TextStyle& style = {}) {
    return detail::render_qpoly_signed(p, style);
}

inline std::string render(const Monomial& m, const TextStyle& style = {}) {
    if (m.empty()) return "1";
    std::string out;
    for (std::size_t j = 0; j < m.arity(); ++j) {
        if (j > 0) out += style.wedge();
        out += style.epsilon() + std::to_string(m[j]);
    }
    return out;
}

inline std::string render(const Partition& p, const TextStyle& style = {}) {
    std::string out = std::string(style.sigma()) + "(";
    for (std::size_t j = 0; j < p.length(); ++j) {
        if (j > 0) out += ",";
        out += std::to_string(p[j]);
    }
    return out + ")";
}

/// e-notation, terms in colex order.
inline std::string render(const Element& x, const TextStyle& style = {}) {
    std::vector<detail::RenderedTerm> terms;
    for (const auto& [m, c] : x.terms()) terms.push_back(detail::render_term(c, m.empty() ? "" : render(m, style), style));
    return detail::join_terms(terms, style);
}

/// The same element with every monomial relabelled by its partition.
inline std::string render_as_classes(const Element& x, const TextStyle& style = {}) {
    std::vector<detail::RenderedTerm> terms;
    for (const auto& [m, c] : x.terms())
        terms.push_back(detail::render_term(c, render(monomial_to_partition(m), style), style));
    return detail::join_terms(terms, style);
}

/// Ring-element notation: sigma_0 is the unit and prints as its coefficient.
inline std::string render(const SchubertExpansion& e, const TextStyle& style = {}) {
    std::vector<detail::RenderedTerm> terms;
    for (const auto& [p, c] : e) terms.push_back(detail::render_term(c, p.empty() ? "" : render(p, style), style));
    return detail::join_terms(terms, style);
}

inline std::string render(const OperatorPoly& poly, const TextStyle& style = {}) {
    std::vector<detail::RenderedTerm> terms;
    // higher total degree first, then by generator list
    std::vector<std::pair<OperatorPoly::generator_list, Integer>> sorted(poly.terms().begin(), poly.terms().end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        auto weight = [](const auto& g) { return std::accumulate(g.begin(), g.end(), 0); };
        if (weight(a.first) != weight(b.first)) return weight(a.first) > weight(b.first);
        return a.first.size() > b.first.size();
    });
    for (const auto& [gens, c] : sorted) {
        std::string basis;
        for (std::size_t j = 0; j < gens.size();) {
            std::size_t run = j;
            while (run < gens.size() && gens[run] == gens[j]) ++run;
            if (!basis.empty()) basis += style.times();
            basis += "D" + std::to_string(gens[j]);
            if (run - j > 1) basis += "^" + std::to_string(run - j);
            j = run;
        }
        terms.push_back(detail::render_term(QPolynomial(c), basis, style));
    }
    return detail::join_terms(terms, style);
}

// JSON. Integers travel as decimal strings.

using json = nlohmann::json;

inline json to_json(const QPolynomial& p) {
    json arr = json::array();
    for (const auto& [deg, c] : p.coefficients()) arr.push_back({{"qdeg", deg}, {"value", to_string(c)}});
    return arr;
}

inline json to_json(const Element& x) {
    json terms = json::array();
    for (const auto& [m, c] : x.terms())
        terms.push_back({{"indices", std::vector<int>(m.indices().begin(), m.indices().end())}, {"coeff", to_json(c)}});
    json out;
    out["grade"] = x.grade() ? json(*x.grade()) : json(nullptr);
    out["terms"] = std::move(terms);
    return out;
}

inline json to_json(const OperatorPoly& poly) {
    json terms = json::array();
    for (const auto& [gens, c] : poly.terms()) terms.push_back({{"gens", gens}, {"value", to_string(c)}});
    return {{"terms", std::move(terms)}};
}

inline json to_json(const SchubertExpansion& e) {
    json terms = json::array();
    for (const auto& [p, c] : e)
        terms.push_back({{"partition", std::vector<int>(p.parts().begin(), p.parts().end())}, {"coeff", to_json(c)}});
    return {{"terms", std::move(terms)}};
}

namespace detail {
inline Integer integer_from_json(const json& v) {
    if (!v.is_string()) throw parse_error("integer values must be decimal strings");
    const auto& s = v.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
        throw parse_error("not a decimal integer: '" + s + "'");
    return Integer(s);
}

template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("invalid value: ") + e.what());
    }
}
}  // namespace detail

inline QPolynomial qpolynomial_from_json(const json& j) {
    return detail::guarded([&] {
        QPolynomial p;
        if (!j.is_array()) throw parse_error("a q-polynomial is a JSON array of {qdeg, value}");
        for (const auto& t : j) {
            const long long deg = t.at("qdeg").get<long long>();
            if (deg < 0) throw parse_error("negative q-degree");
            p.add(static_cast<QPolynomial::degree_type>(deg), detail::integer_from_json(t.at("value")));
        }
        return p;
    });
}

inline Element element_from_json(const json& j) {
    return detail::guarded([&] {
        Element::grade_type grade;
        if (!j.at("grade").is_null()) grade = j.at("grade").get<std::size_t>();
        Element x(grade);
        for (const auto& t : j.at("terms")) x.add_term(Monomial(t.at("indices").get<std::vector<int>>()), qpolynomial_from_json(t.at("coeff")));
        return x;
    });
}

inline OperatorPoly operator_poly_from_json(const json& j) {
    return detail::guarded([&] {
        OperatorPoly p;
        for (const auto& t : j.at("terms")) p.add_term(t.at("gens").get<std::vector<int>>(), detail::integer_from_json(t.at("value")));
        return p;
    });
}

inline SchubertExpansion expansion_from_json(const json& j) {
    return detail::guarded([&] {
        SchubertExpansion e;
        for (const auto& t : j.at("terms")) {
            QPolynomial c = qpolynomial_from_json(t.at("coeff"));
            if (!c.is_zero()) e[Partition(t.at("partition").get<std::vector<int>>())] += c;
        }
        return e;
    });
}

/// "1,3,4" -> {1, 3, 4}; the empty string is the empty list.
inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.find_first_not_of(" \t") == std::string::npos) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw parse_error("empty entry in list '" + text + "'");
        item = item.substr(b, e - b + 1);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw parse_error("not an integer: '" + item + "'");
        }
        if (used != item.size() || v < -1'000'000'000LL || v > 1'000'000'000LL)
            throw parse_error("not an integer: '" + item + "'");
        out.push_back(static_cast<int>(v));
    }
    if (!text.empty() && text.back() == ',') throw parse_error("trailing comma in '" + text + "'");
    return out;
}

inline Monomial parse_monomial(const std::string& text) {
    try {
        return Monomial(parse_int_list(text));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("bad monomial '") + text + "': " + e.what());
    }
}

inline Partition parse_partition(const std::string& text) {
    try {
        return Partition(parse_int_list(text));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("bad partition '") + text + "': " + e.what());
    }
}

/// "2;1,1;2,2" -> {(2), (1,1), (2,2)}.
inline std::vector<Partition> parse_partition_list(const std::string& text) {
    std::vector<Partition> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) out.push_back(parse_partition(item));
    if (!text.empty() && text.back() == ';') out.emplace_back();
    return out;
}

}  // namespace hasse
