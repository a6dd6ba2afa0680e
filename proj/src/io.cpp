#include "fueter/io.hpp"

namespace fueter {

Json poly_terms_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [alpha, c] : p.terms()) {
        Json alpha_json = Json::array();
        for (auto e : alpha.exponents()) alpha_json.push_back(static_cast<int>(e));
        terms.push_back({{"alpha", alpha_json}, {"re", to_string(c.re)}, {"im", to_string(c.im)}});
    }
    return terms;
}

template <Space S>
Json section_to_json(const Section<S>& f) {
    Json comps = Json::array();
    for (int i = 0; i < f.size(); ++i) {
        Json c;
        c["slot"] = {{"ones", f.slot_of(i).ones}};
        if constexpr (S == Space::V1) c["A"] = f.unprimed_of(i);
        if constexpr (S == Space::V2) {
            c["A"] = f.pair_of(i).a;
            c["B"] = f.pair_of(i).b;
        }
        c["terms"] = poly_terms_to_json(f.component(i));
        comps.push_back(std::move(c));
    }
    return {{"n", f.params().n()}, {"k", f.params().k()}, {"space", space_name(S)}, {"components", comps}};
}

template Json section_to_json(const Section<Space::V0>&);
template Json section_to_json(const Section<Space::V1>&);
template Json section_to_json(const Section<Space::V2>&);

namespace {

int require_int(const Json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw SectionParseError(where + ": missing \"" + key + "\"");
    const Json& v = j.at(key);
    if (!v.is_number_integer()) throw SectionParseError(where + ": \"" + key + "\" must be an integer");
    return v.get<int>();
}

Rational require_rational(const Json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw SectionParseError(where + ": missing \"" + key + "\"");
    const Json& v = j.at(key);
    if (!v.is_string()) throw SectionParseError(where + ": \"" + key + "\" must be a \"p/q\" string");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SectionParseError(where + ": \"" + key + "\": " + e.what());
    }
}

Poly parse_terms(const Json& c, int num_vars, const std::string& where) {
    Poly p(num_vars);
    if (!c.contains("terms")) return p;
    const Json& terms = c.at("terms");
    if (!terms.is_array()) throw SectionParseError(where + ": \"terms\" must be an array");
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string at = where + ", term " + std::to_string(t);
        const Json& term = terms[t];
        if (!term.is_object()) throw SectionParseError(at + ": must be an object");
        if (!term.contains("alpha") || !term.at("alpha").is_array())
            throw SectionParseError(at + ": \"alpha\" must be an array");
        const Json& alpha_json = term.at("alpha");
        if (static_cast<int>(alpha_json.size()) != num_vars)
            throw SectionParseError(at + ": \"alpha\" needs " + std::to_string(num_vars) + " exponents");
        MultiIndex alpha(num_vars);
        for (int v = 0; v < num_vars; ++v) {
            const Json& e = alpha_json[static_cast<std::size_t>(v)];
            if (!e.is_number_integer() || e.get<long>() < 0 || e.get<long>() > 255)
                throw SectionParseError(at + ": exponents must be integers in [0, 255]");
            alpha.set(v, e.get<int>());
        }
        p.add_term(alpha, GaussRat(require_rational(term, "re", at), require_rational(term, "im", at)));
    }
    return p;
}

template <Space S>
Section<S> parse_components(const ComplexParams& params, const Json& comps) {
    Section<S> f(params);
    const int k = params.k();
    const int nu = params.num_unprimed();
    const int length = S == Space::V0 ? k : S == Space::V1 ? k - 1 : k - 2;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const Json& c = comps[i];
        std::string where = "component " + std::to_string(i);
        if (!c.is_object()) throw SectionParseError(where + ": must be an object");
        if (!c.contains("slot") || !c.at("slot").is_object()) throw SectionParseError(where + ": missing \"slot\" object");
        const int ones = require_int(c.at("slot"), "ones", where + " slot");
        if (ones < 0 || ones > length)
            throw SectionParseError(where + ": slot ones=" + std::to_string(ones) + " outside [0, " +
                                    std::to_string(length) + "]");
        where += " (ones=" + std::to_string(ones);
        int index = ones;
        int sign = 1;
        if constexpr (S != Space::V0) {
            const int a = require_int(c, "A", where + ")");
            if (a < 0 || a >= nu) throw SectionParseError(where + "): A=" + std::to_string(a) + " outside [0, " + std::to_string(nu - 1) + "]");
            where += ", A=" + std::to_string(a);
            if constexpr (S == Space::V1) {
                index = f.index(ones, a);
            } else {
                const int b = require_int(c, "B", where + ")");
                if (b < 0 || b >= nu) throw SectionParseError(where + "): B=" + std::to_string(b) + " outside [0, " + std::to_string(nu - 1) + "]");
                where += ", B=" + std::to_string(b);
                if (a == b) throw SectionParseError(where + "): A and B must differ (antisymmetric pair)");
                const auto o = orient(a, b);
                sign = o.sign;
                index = f.index(UnprimedPair(o.a, o.b), ones);
            }
        }
        where += ")";
        Poly p = parse_terms(c, params.num_vars(), where);
        if (sign < 0) p = -p;
        f.component(index) += p;
    }
    return f;
}

}  // namespace

AnySection section_from_json(const Json& j) {
    if (!j.is_object()) throw SectionParseError("section must be a JSON object");
    const int n = require_int(j, "n", "section");
    const int k = require_int(j, "k", "section");
    if (n < 1) throw SectionParseError("section: n must be at least 1");
    if (k < 2) throw SectionParseError("section: k must be at least 2 (the complex is first order only for k >= 2)");
    const ComplexParams params(n, k);
    if (!j.contains("space") || !j.at("space").is_string()) throw SectionParseError("section: missing \"space\"");
    const std::string space = j.at("space").get<std::string>();
    if (!j.contains("components") || !j.at("components").is_array())
        throw SectionParseError("section: \"components\" must be an array");
    const Json& comps = j.at("components");
    if (space == "V0") return parse_components<Space::V0>(params, comps);
    if (space == "V1") return parse_components<Space::V1>(params, comps);
    if (space == "V2") return parse_components<Space::V2>(params, comps);
    throw SectionParseError("section: unknown space \"" + space + "\" (expected V0, V1 or V2)");
}

AnySection section_from_string(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SectionParseError(std::string("malformed JSON: ") + e.what());
    }
    return section_from_json(j);
}

Json to_json(const WeightedScalar& w) {
    if (w.value.im == 0) return to_string(w.value.re);
    return {{"re", to_string(w.value.re)}, {"im", to_string(w.value.im)}};
}

Json to_json(const SolveReport& r) {
    return {{"degree", r.degree},
            {"residual_check", r.residual_check},
            {"orthogonality_defect", to_json(r.orthogonality_defect)},
            {"norm_ratio_sq", to_string(r.norm_ratio_sq)},
            {"u", section_to_json(r.u)}};
}

Json to_json(const EstimateReport& r) {
    return {{"lhs", to_string(r.lhs)},
            {"rhs", to_string(r.rhs)},
            {"margin", to_string(r.margin)},
            {"sharp_lhs", to_string(r.sharp_lhs)},
            {"sharp_rhs", to_string(r.sharp_rhs)},
            {"sharp_margin", to_string(r.sharp_margin)}};
}

Json to_json(const BoundReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"degree", row.degree},
                        {"norm_ratio_sq", to_string(row.ratio_sq)},
                        {"norm_ratio", row.ratio},
                        {"above_half", row.above_half}});
    return {{"rows", rows}, {"nonincreasing", r.nonincreasing}};
}

Json to_json(const IdentityCheck& c) {
    return {{"name", c.name}, {"cases", c.cases}, {"passed", c.passed()}, {"worst_defect", to_string(c.worst_defect)}};
}

}  // namespace fueter
