#include "jack/json_io.hpp"

#include <limits>

#include "jack/error.hpp"

namespace jack::json {

Json to_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string in JSON");
        return z;
    }
    throw ParseError("expected an integer in JSON, got " + j.dump());
}

Json to_json(const Rational& q) {
    return Json::array({to_json(Integer(q.get_num())), to_json(Integer(q.get_den()))});
}

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("expected [num, den], got " + j.dump());
    Integer d = integer_from_json(j[1]);
    if (d == 0) throw ParseError("zero denominator in JSON rational");
    Rational q(integer_from_json(j[0]), d);
    q.canonicalize();
    return q;
}

Json coeffs_to_json(const AlphaPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

AlphaPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a coefficient list, got " + j.dump());
    std::vector<Rational> c;
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return AlphaPoly(std::move(c));
}

Json to_json(const AlphaRat& f) {
    Json out = Json::object();
    out["num"] = coeffs_to_json(f.num());
    out["den"] = coeffs_to_json(f.den());
    return out;
}

AlphaRat alpharat_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError("expected {\"num\", \"den\"}, got " + j.dump());
    return AlphaRat(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

Json to_json(const LinearFactorization& f) {
    Json out = Json::object();
    out["constant"] = to_json(f.constant);
    Json factors = Json::array();
    for (const auto& [b, mult] : f.factors) factors.push_back(Json::array({b.x, b.y, mult}));
    out["factors"] = std::move(factors);
    return out;
}

LinearFactorization factorization_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("constant") || !j.contains("factors"))
        throw ParseError("expected {\"constant\", \"factors\"}, got " + j.dump());
    LinearFactorization f;
    f.constant = rational_from_json(j["constant"]);
    for (const auto& e : j["factors"]) {
        if (!e.is_array() || e.size() != 3) throw ParseError("bad factor entry " + e.dump());
        f.factors[{e[0].get<int>(), e[1].get<int>()}] += e[2].get<int>();
    }
    return f;
}

Json to_json(const Partition& p) {
    Json out = Json::array();
    for (int part : p.parts()) out.push_back(part);
    return out;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a partition array, got " + j.dump());
    std::vector<int> parts;
    for (const auto& e : j) parts.push_back(e.get<int>());
    return Partition(std::move(parts));
}

Json to_json(BoxCoord b) { return Json::array({b.x, b.y}); }

BoxCoord box_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("expected [x, y], got " + j.dump());
    return {j[0].get<int>(), j[1].get<int>()};
}

Json to_json(const SymFunc& f) {
    Json out = Json::object();
    out["basis"] = to_string(f.basis());
    auto deg = f.degree();
    out["degree"] = deg ? Json(*deg) : Json(nullptr);
    Json terms = Json::array();
    for (const auto& [lambda, c] : f.terms()) {
        Json t = Json::object();
        t["partition"] = to_json(lambda);
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

SymFunc symfunc_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
        throw ParseError("expected a symmetric function object, got " + j.dump());
    SymFunc f(parse_basis(j["basis"].get<std::string>()));
    for (const auto& t : j["terms"])
        f.add(partition_from_json(t.at("partition")), alpharat_from_json(t.at("coeff")));
    return f;
}

Json to_json(const LatticeRational& t) {
    Json factors = Json::array();
    for (const auto& [b, k] : t.orders()) factors.push_back(Json::array({b.x, b.y, k}));
    Json out = Json::object();
    out["factors"] = std::move(factors);
    return out;
}

LatticeRational lattice_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("factors")) throw ParseError("expected {\"factors\"}, got " + j.dump());
    LatticeRational t;
    for (const auto& e : j["factors"]) {
        if (!e.is_array() || e.size() != 3) throw ParseError("bad factor entry " + e.dump());
        t *= LatticeRational::factor({e[0].get<int>(), e[1].get<int>()}, e[2].get<int>());
    }
    return t;
}

Json to_json(const HookAssignment& a) {
    Json choices = Json::array();
    for (const auto& [b, h] : a.choices()) choices.push_back(Json::array({b.x, b.y, std::string(1, to_char(h))}));
    Json out = Json::object();
    out["shape"] = to_json(a.shape());
    out["choices"] = std::move(choices);
    return out;
}

HookAssignment assignment_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("choices"))
        throw ParseError("expected {\"shape\", \"choices\"}, got " + j.dump());
    std::map<BoxCoord, Hook> choice;
    for (const auto& e : j["choices"]) {
        if (!e.is_array() || e.size() != 3 || !e[2].is_string()) throw ParseError("bad choice entry " + e.dump());
        const std::string h = e[2].get<std::string>();
        if (h != "U" && h != "L") throw ParseError("hook must be \"U\" or \"L\", got " + h);
        choice[{e[0].get<int>(), e[1].get<int>()}] = h == "U" ? Hook::U : Hook::L;
    }
    return HookAssignment(partition_from_json(j["shape"]), std::move(choice));
}

Json to_json(const StanleyProduct& p) {
    Json out = Json::object();
    out["mu"] = to_json(p.mu_factor);
    out["nu"] = to_json(p.nu_factor);
    out["lambda"] = to_json(p.lambda_factor);
    out["value"] = coeffs_to_json(p.value);
    return out;
}

StanleyProduct product_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("mu") || !j.contains("nu") || !j.contains("lambda"))
        throw ParseError("expected {\"mu\", \"nu\", \"lambda\"}, got " + j.dump());
    StanleyProduct p = make_product(assignment_from_json(j["mu"]), assignment_from_json(j["nu"]),
                                    assignment_from_json(j["lambda"]));
    if (j.contains("value") && poly_from_json(j["value"]) != p.value)
        throw ParseError("stored value disagrees with the hook product");
    return p;
}

Json to_json(const LrTable& t) {
    Json entries = Json::array();
    for (const auto& e : t.entries) {
        Json o = Json::object();
        o["gamma"] = to_json(e.gamma);
        o["g"] = to_json(e.g);
        o["stanley"] = to_json(e.stanley);
        entries.push_back(std::move(o));
    }
    Json out = Json::object();
    out["mu"] = to_json(t.mu);
    out["nu"] = to_json(t.nu);
    out["entries"] = std::move(entries);
    return out;
}

LrTable lr_table_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("mu") || !j.contains("nu") || !j.contains("entries"))
        throw ParseError("expected {\"mu\", \"nu\", \"entries\"}, got " + j.dump());
    LrTable t{partition_from_json(j["mu"]), partition_from_json(j["nu"]), {}};
    for (const auto& e : j["entries"])
        t.entries.push_back({partition_from_json(e.at("gamma")), alpharat_from_json(e.at("g")),
                             alpharat_from_json(e.at("stanley"))});
    return t;
}

}  // namespace jack::json
