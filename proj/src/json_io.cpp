#include "coha/json_io.hpp"

#include <sstream>
#include <string>

namespace coha {

json quiver_to_json(const Quiver& q) {
    json j;
    j["vertices"] = q.vertex_names;
    json arrows = json::array();
    for (int i = 0; i < q.num_vertices(); ++i)
        for (int k = 0; k < q.num_vertices(); ++k)
            if (q.arrows[i][k] > 0)
                arrows.push_back({q.vertex_names[i], q.vertex_names[k], q.arrows[i][k]});
    j["arrows"] = arrows;
    if (q.has_relations)
        j["has_relations"] = true;
    return j;
}

Quiver quiver_from_json(const json& j) {
    std::vector<std::string> names;
    for (const auto& v : j.at("vertices"))
        names.push_back(v.get<std::string>());
    Quiver q = Quiver::empty(std::move(names));
    for (const auto& a : j.at("arrows")) {
        int mult = a.size() > 2 ? a.at(2).get<int>() : 1;
        q.add_arrow(q.vertex_index(a.at(0).get<std::string>()),
                    q.vertex_index(a.at(1).get<std::string>()), mult);
    }
    if (j.contains("has_relations"))
        q.has_relations = j["has_relations"].get<bool>();
    return q;
}

json poly_to_json(const RatPoly& p, const Quiver& q) {
    json j;
    json dim = json::object();
    for (int v = 0; v < q.num_vertices(); ++v)
        dim[q.vertex_names[v]] = p.dim()[v];
    j["dim"] = dim;
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        json exp = json::object();
        for (int v = 0; v < q.num_vertices(); ++v)
            for (int s = 0; s < p.dim()[v]; ++s) {
                int e = m.exp[p.slot_offset(v) + s];
                if (e != 0)
                    exp[q.vertex_names[v] + "," + std::to_string(s + 1)] = e;
            }
        terms.push_back({{"exp", exp}, {"coeff", rat_to_string(c)}});
    }
    j["terms"] = terms;
    return j;
}

RatPoly poly_from_json(const json& j, const Quiver& q) {
    DimVector dim(q.num_vertices(), 0);
    for (const auto& [name, value] : j.at("dim").items())
        dim[q.vertex_index(name)] = value.get<int>();
    RatPoly p(dim);
    for (const auto& term : j.at("terms")) {
        std::vector<int> e(p.num_slots(), 0);
        for (const auto& [key, value] : term.at("exp").items()) {
            auto comma = key.rfind(',');
            if (comma == std::string::npos)
                throw CohaError("bad exponent key '" + key + "' (want vertex,slot)");
            int v = q.vertex_index(key.substr(0, comma));
            int slot = std::stoi(key.substr(comma + 1)) - 1;
            e[p.flat_index(v, slot)] += value.get<int>();
        }
        p += RatPoly::monomial(dim, Monomial(std::move(e)),
                               rat_from_string(term.at("coeff").get<std::string>()));
    }
    return p;
}

json quot_class_to_json(QuotientAlgebra& alg, const QuotClass& c) {
    json j;
    if (alg.n() >= 0)
        j["n"] = alg.n();
    j["polydeg"] = c.bideg.polydeg;
    j["virtual_degree"] = alg.virtual_deg(c.bideg);
    j["representative"] = poly_to_json(alg.canonical_rep(c).poly(), alg.quiver());
    json reduced = json::array();
    for (const auto& x : c.reduced)
        reduced.push_back(rat_to_string(x));
    j["reduced"] = reduced;
    return j;
}

json series_to_json(const QtSeries& s) {
    json j;
    j["n"] = s.n();
    j["max_total_dim"] = s.trunc().max_total_dim;
    j["max_q2"] = s.trunc().max_q2;
    json terms = json::array();
    for (const auto& [key, c] : s.coeffs()) {
        std::ostringstream d;
        for (std::size_t v = 0; v < key.first.size(); ++v) {
            if (v)
                d << ",";
            d << key.first[v];
        }
        terms.push_back({{"d", d.str()}, {"q2", key.second}, {"coeff", rat_to_string(c)}});
    }
    j["terms"] = terms;
    return j;
}

QtSeries series_from_json(const json& j) {
    int n = j.at("n").get<int>();
    QtTrunc trunc{j.at("max_total_dim").get<int>(), j.at("max_q2").get<int>()};
    QtSeries s(n, trunc);
    for (const auto& term : j.at("terms")) {
        DimVector d;
        std::stringstream ss(term.at("d").get<std::string>());
        std::string tok;
        while (std::getline(ss, tok, ','))
            d.push_back(std::stoi(tok));
        s.add(d, term.at("q2").get<int>(),
              rat_from_string(term.at("coeff").get<std::string>()));
    }
    return s;
}

} // namespace coha
