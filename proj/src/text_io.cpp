#include "clx/text_io.hpp"

#include <sstream>

namespace clx {

Json ring_to_json(const CLRing& r) { return Json(r.str()); }

Json poly_to_json(const HilbertPoly& p) {
    Json j = Json::object();
    j["str"] = p.str();
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    j["coeffs"] = coeffs;
    return j;
}

Json ideal_to_json(const MonomialIdeal& I) {
    Json j = Json::object();
    j["ring"] = I.ring().str();
    Json gens = Json::array();
    for (const auto& g : I.gens()) gens.push_back(g.exps());
    j["gens"] = gens;
    j["str"] = I.str();
    return j;
}

Json chain_to_json(const Chain& c) {
    Json j = Json::object();
    j["length"] = c.length();
    Json steps = Json::array();
    for (const auto& s : c.steps) {
        Json e = Json::object();
        e["ideal"] = ideal_to_json(s.ideal);
        if (s.replaced) e["replaced"] = s.replaced->str();
        steps.push_back(std::move(e));
    }
    j["steps"] = steps;
    j["point"] = ideal_to_json(c.point());
    return j;
}

Json axiom_to_json(const AxiomResult& a) {
    Json j = Json::object();
    j["axiom"] = a.axiom;
    j["pass"] = a.pass;
    j["failures"] = a.failures;
    return j;
}

Json betti_to_json(const BettiTable& t) {
    Json j = Json::object();
    j["module"] = t.quotient_module ? "quotient" : "ideal";
    j["base_ring"] = t.over_quotient_ring ? "quotient" : "ambient";
    Json window = Json::object();
    window["imax"] = t.imax;
    window["jmax"] = t.jmax;
    j["window"] = window;
    Json entries = Json::array();
    for (const auto& [ij, b] : t.entries) {
        Json e = Json::object();
        e["i"] = ij.first;
        e["j"] = ij.second;
        e["b"] = b.str();
        entries.push_back(std::move(e));
    }
    j["entries"] = entries;
    Json totals = Json::array();
    for (const auto& b : t.totals()) totals.push_back(b.str());
    j["totals"] = totals;
    return j;
}

Json bounds_to_json(const BoundsReport& r) {
    Json j = Json::object();
    j["provenance"] = r.provenance;
    j["betti"] = betti_to_json(r.table);
    return j;
}

CLRing ring_from_json(const Json& j) {
    if (!j.is_string()) throw DomainError("ring must be a string like \"2,3,inf,inf\"");
    return CLRing::parse(j.get<std::string>());
}

HilbertPoly poly_from_json(const Json& j) {
    if (j.is_string()) return HilbertPoly::parse(j.get<std::string>());
    if (j.is_object() && j.contains("coeffs")) {
        std::vector<Rat> cs;
        for (const auto& c : j.at("coeffs")) {
            if (c.is_string())
                cs.emplace_back(c.get<std::string>());
            else
                cs.emplace_back(c.get<long long>());
        }
        return HilbertPoly(std::move(cs));
    }
    throw DomainError("polynomial must be a string or an object with \"coeffs\"");
}

MonomialIdeal ideal_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("gens"))
        throw DomainError("ideal must be an object with \"ring\" and \"gens\"");
    CLRing r = ring_from_json(j.at("ring"));
    std::vector<Monomial> gens;
    for (const auto& g : j.at("gens")) {
        if (g.is_string()) {
            gens.push_back(parse_monomial(r, g.get<std::string>()));
        } else {
            std::vector<int> e = g.get<std::vector<int>>();
            if (static_cast<int>(e.size()) != r.varcount())
                throw DomainError("generator exponent vector has wrong length");
            gens.emplace_back(r, std::move(e));
        }
    }
    return MonomialIdeal(r, std::move(gens));
}

// Diagram layout: rows are the regularity strand j-i, columns homological i.
std::string betti_to_csv(const BettiTable& t) {
    int rmin = 0, rmax = 0;
    bool first = true;
    for (const auto& [ij, b] : t.entries) {
        int r = ij.second - ij.first;
        if (first || r < rmin) rmin = r;
        if (first || r > rmax) rmax = r;
        first = false;
    }
    std::ostringstream out;
    out << "j-i";
    for (int i = 0; i <= t.imax; ++i) out << ',' << i;
    out << '\n';
    for (int r = rmin; r <= rmax; ++r) {
        out << r;
        for (int i = 0; i <= t.imax; ++i) {
            out << ',';
            auto it = t.entries.find({i, r + i});
            if (it != t.entries.end()) out << it->second;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace clx
