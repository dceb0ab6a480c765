#include "schubnef/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace schubnef {

namespace {

long long checked_int64(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v < lo || v > hi)
        throw std::invalid_argument("json: integer exceeds the 64-bit JSON range");
    return v.convert_to<long long>();
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("json: expected an integer");
}

ComponentName component_name_from_string(const std::string& s) {
    if (s == "M1") return ComponentName::M1;
    if (s == "M2") return ComponentName::M2;
    throw std::invalid_argument("json: unknown component name '" + s + "'");
}

CaseLabel case_label_from_string(const std::string& s) {
    if (s == "i") return CaseLabel::i;
    if (s == "ii") return CaseLabel::ii;
    if (s == "iii") return CaseLabel::iii;
    if (s == "iv") return CaseLabel::iv;
    throw std::invalid_argument("json: unknown case label '" + s + "'");
}

}  // namespace

Json to_json(const Partition& p) {
    Json arr = Json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("json: partition must be an array");
    std::vector<int> parts;
    for (const auto& x : j) parts.push_back(x.get<int>());
    return Partition(std::move(parts));
}

Json to_json(const SchubertExpansion& e) {
    Json arr = Json::array();
    for (const auto& [key, coeff] : e.terms()) {
        Json term;
        term["partition"] = to_json(key);
        term["coeff"] = checked_int64(coeff);
        arr.push_back(std::move(term));
    }
    return arr;
}

SchubertExpansion expansion_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("json: expansion must be an array");
    SchubertExpansion e;
    for (const auto& term : j)
        e.add(partition_from_json(term.at("partition")), int_from_json(term.at("coeff")));
    return e;
}

Json to_json(const QPolynomial& p) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients())
        coeffs.push_back(Json::array({numerator(c).str(), denominator(c).str()}));
    Json out;
    out["coeffs"] = std::move(coeffs);
    return out;
}

QPolynomial qpolynomial_from_json(const Json& j) {
    std::vector<Rat> coeffs;
    for (const auto& pair : j.at("coeffs")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("json: polynomial coefficient must be [num, den]");
        const Int num(pair[0].get<std::string>());
        const Int den(pair[1].get<std::string>());
        if (den == 0) throw std::invalid_argument("json: zero denominator");
        coeffs.emplace_back(num, den);
    }
    return QPolynomial(std::move(coeffs));
}

Json to_json(const RationalCone& c) {
    Json gens = Json::array();
    for (const auto& g : c.generators()) {
        Json row = Json::array();
        for (const auto& x : g) row.push_back(checked_int64(x));
        gens.push_back(std::move(row));
    }
    Json out;
    out["dim"] = c.ambient_dim();
    out["generators"] = std::move(gens);
    return out;
}

RationalCone cone_from_json(const Json& j) {
    const int dim = j.at("dim").get<int>();
    std::vector<ZVector> gens;
    for (const auto& row : j.at("generators")) {
        ZVector g;
        for (const auto& x : row) g.push_back(int_from_json(x));
        gens.push_back(std::move(g));
    }
    return RationalCone(dim, std::move(gens));
}

Json to_json(const PairingMatrix& p) {
    Json out;
    out["divisors"] = p.divisor_labels;
    out["curves"] = p.curve_labels;
    Json entries = Json::array();
    for (const auto& row : p.entries) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(checked_int64(x));
        entries.push_back(std::move(r));
    }
    out["entries"] = std::move(entries);
    return out;
}

PairingMatrix pairing_from_json(const Json& j) {
    std::vector<std::vector<Int>> entries;
    for (const auto& row : j.at("entries")) {
        std::vector<Int> r;
        for (const auto& x : row) r.push_back(int_from_json(x));
        entries.push_back(std::move(r));
    }
    return PairingMatrix(j.at("divisors").get<std::vector<std::string>>(),
                         j.at("curves").get<std::vector<std::string>>(), std::move(entries));
}

Json to_json(const HilbParams& p) {
    Json out;
    out["d"] = p.d;
    out["m"] = p.m;
    out["k"] = p.k;
    out["n"] = p.n;
    return out;
}

HilbParams params_from_json(const Json& j) {
    return HilbParams(j.at("d").get<int>(), j.at("m").get<int>(), j.at("k").get<int>(),
                      j.at("n").get<int>());
}

Json to_json(const ComponentDescription& c) {
    Json out;
    out["name"] = to_string(c.name);
    out["flag"] = Json::array({c.flag.a, c.flag.b, c.flag.n});
    out["family_class"] = to_json(c.family_class);
    out["ns_rank"] = c.ns_rank;
    out["generators"] = c.generator_labels;
    return out;
}

ComponentDescription component_from_json(const Json& j, int sym_degree) {
    ComponentDescription c;
    c.name = component_name_from_string(j.at("name").get<std::string>());
    const auto& flag = j.at("flag");
    if (!flag.is_array() || flag.size() != 3)
        throw std::invalid_argument("json: flag must be an [a,b,n] triple");
    c.flag = FlagType{flag[0].get<int>(), flag[1].get<int>(), flag[2].get<int>()};
    c.family_class = partition_from_json(j.at("family_class"));
    c.ns_rank = j.at("ns_rank").get<int>();
    c.generator_labels = j.at("generators").get<std::vector<std::string>>();
    c.sym_degree = sym_degree;
    return c;
}

Json to_json(const NefConeReport& r) {
    Json out;
    out["params"] = to_json(r.params);
    out["case"] = to_string(r.case_label);
    Json comps = Json::array();
    for (const auto& c : r.components) comps.push_back(to_json(c));
    out["components"] = std::move(comps);
    out["cone"] = to_json(r.cone);
    Json pairings = Json::array();
    for (const auto& p : r.pairings) pairings.push_back(to_json(p));
    out["pairings"] = std::move(pairings);
    return out;
}

NefConeReport report_from_json(const Json& j) {
    HilbParams params = params_from_json(j.at("params"));
    std::vector<ComponentDescription> components;
    std::vector<std::string> labels;
    for (const auto& cj : j.at("components")) {
        components.push_back(component_from_json(cj, params.d));
        labels.insert(labels.end(), components.back().generator_labels.begin(),
                      components.back().generator_labels.end());
    }
    std::vector<PairingMatrix> pairings;
    for (const auto& pj : j.at("pairings")) pairings.push_back(pairing_from_json(pj));
    return NefConeReport{std::move(params),
                         case_label_from_string(j.at("case").get<std::string>()),
                         std::move(components),
                         std::move(labels),
                         cone_from_json(j.at("cone")),
                         std::move(pairings)};
}

Json to_json(const VerificationRecord& r) {
    Json out;
    out["grassmannian"] = Json{{"k", r.k}, {"n", r.n}};
    out["component"] = to_string(r.component);
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    out["checks"] = std::move(checks);
    out["pass"] = r.all_pass();
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace schubnef
