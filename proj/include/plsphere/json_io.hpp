#pragma once

// JSON wire formats.
//
// Complex files are UTF-8 JSON objects
//   {"name": string, "facets": [[int,...],...], "aliases": {"int": string}?}
// with facets canonicalized on input.  Certificates serialize as tagged
// objects ({"kind":"shelling","order":[[...],...]} and friends) and
// Lefschetz witnesses as
//   {"field":"gf","p":...,"thetas":[[...],...],"omega":[...],
//    "dims":[...],"ranks":[...],"seed":...}.
// All parse failures raise plsphere::Error so the CLI can map them to its
// input-error exit code.

#include <nlohmann/json.hpp>

#include "plsphere/contraction.hpp"
#include "plsphere/decompose.hpp"
#include "plsphere/lefschetz.hpp"
#include "plsphere/vectors.hpp"

namespace plsphere {

using json = nlohmann::ordered_json;

struct NamedComplex {
    std::string name;
    Complex complex;
};

// ---- basic pieces ----

inline json face_to_json(const Face& f) { return json(f); }

inline json facets_to_json(const Complex& c) {
    json arr = json::array();
    for (const Face& f : c.facets()) arr.push_back(f);
    return arr;
}

inline json bigint_to_json(const BigInt& x) {
    if (x >= std::numeric_limits<long long>::min() &&
        x <= std::numeric_limits<long long>::max())
        return json(x.convert_to<long long>());
    return json(x.str());
}

inline json complex_to_json(const Complex& c, const std::string& name = "") {
    json j;
    j["name"] = name;
    j["facets"] = facets_to_json(c);
    if (!c.aliases().empty()) {
        json a = json::object();
        for (const auto& [v, s] : c.aliases()) a[std::to_string(v)] = s;
        j["aliases"] = a;
    }
    return j;
}

inline Face face_from_json(const json& j) {
    if (!j.is_array()) throw Error("face must be a JSON array of integers");
    Face f;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw Error("face must be a JSON array of integers");
        f.push_back(x.get<Label>());
    }
    return f;
}

inline NamedComplex complex_from_json(const json& j) {
    if (!j.is_object()) throw Error("complex JSON must be an object");
    if (!j.contains("facets")) throw Error("complex JSON is missing \"facets\"");
    const json& fj = j.at("facets");
    if (!fj.is_array()) throw Error("\"facets\" must be an array of faces");
    std::vector<Face> fs;
    for (const auto& x : fj) fs.push_back(face_from_json(x));
    NamedComplex out;
    out.complex = Complex::from_facets(fs);
    if (j.contains("name")) {
        if (!j.at("name").is_string()) throw Error("\"name\" must be a string");
        out.name = j.at("name").get<std::string>();
    }
    if (j.contains("aliases")) {
        const json& aj = j.at("aliases");
        if (!aj.is_object()) throw Error("\"aliases\" must be an object");
        std::map<Label, std::string> aliases;
        for (auto it = aj.begin(); it != aj.end(); ++it) {
            Label v;
            try {
                std::size_t used = 0;
                v = std::stoi(it.key(), &used);
                if (used != it.key().size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw Error("alias keys must be integer vertex labels");
            }
            if (!it.value().is_string()) throw Error("alias values must be strings");
            aliases[v] = it.value().get<std::string>();
        }
        out.complex.set_aliases(std::move(aliases));
    }
    return out;
}

// Parse a complex from raw JSON text (file contents).
inline NamedComplex complex_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
    return complex_from_json(j);
}

// ---- certificates ----

inline json shelling_to_json(const ShellingCertificate& cert) {
    json j;
    j["kind"] = "shelling";
    json order = json::array();
    for (const Face& f : cert.order) order.push_back(f);
    j["order"] = order;
    return j;
}

inline ShellingCertificate shelling_from_json(const json& j) {
    if (!j.is_object() || j.value("kind", "") != std::string("shelling") ||
        !j.contains("order") || !j.at("order").is_array())
        throw Error("not a shelling certificate");
    ShellingCertificate cert;
    for (const auto& x : j.at("order")) cert.order.push_back(face_from_json(x));
    return cert;
}

inline json shedding_to_json(const SheddingCertificate& cert) {
    json j;
    j["kind"] = "shedding";
    j["order"] = cert.order;
    j["remaining"] = cert.remaining;
    return j;
}

inline json shrinking_to_json(const ShrinkingCertificate& cert) {
    json j;
    j["kind"] = "shrinking";
    if (cert.simplex_base) {
        j["simplex_base"] = true;
        return j;
    }
    j["base_facet"] = cert.base_facet;
    j["order"] = cert.order;
    json balls = json::array();
    for (const ShellingCertificate& b : cert.ball_certs) balls.push_back(shelling_to_json(b));
    j["balls"] = balls;
    return j;
}

inline const char* strong_node_name(StrongCertificate::Node n) {
    using Node = StrongCertificate::Node;
    switch (n) {
        case Node::LowDim: return "low-dim";
        case Node::SimplexBoundary: return "simplex-boundary";
        case Node::TwoSphere: return "two-sphere";
        case Node::SheddingOrder: return "shedding-order";
        case Node::ShrinkingOrder: return "shrinking-order";
        case Node::EdgeSplit: return "edge-split";
    }
    return "?";
}

inline json strong_to_json(const StrongCertificate& cert) {
    json j;
    j["kind"] = strong_node_name(cert.node);
    if (cert.shedding) j["shedding"] = shedding_to_json(*cert.shedding);
    if (cert.shrinking) j["shrinking"] = shrinking_to_json(*cert.shrinking);
    if (cert.sphere_shelling) j["shelling"] = shelling_to_json(*cert.sphere_shelling);
    if (cert.edge) j["edge"] = json::array({cert.edge->first, cert.edge->second});
    if (!cert.children.empty()) {
        json kids = json::array();
        for (const StrongCertPtr& k : cert.children) kids.push_back(strong_to_json(*k));
        j["children"] = kids;
    }
    return j;
}

// ---- TriState results ----

template <class Cert, class CertToJson>
json tristate_to_json(const TriState<Cert>& r, const CertToJson& cert_to_json) {
    json j;
    j["verdict"] = verdict_name(r.verdict);
    if (r.certificate) j["certificate"] = cert_to_json(*r.certificate);
    if (!r.obstruction.empty()) j["obstruction"] = r.obstruction;
    j["budget_spent"] = r.budget_spent;
    if (r.exhausted_search) j["exhausted_search"] = true;
    return j;
}

inline json shelling_result_to_json(const ShellingResult& r) {
    return tristate_to_json(r, shelling_to_json);
}

inline json shedding_result_to_json(const SheddingResult& r) {
    return tristate_to_json(r, shedding_to_json);
}

inline json shrinking_result_to_json(const ShrinkingResult& r) {
    return tristate_to_json(r, shrinking_to_json);
}

inline json strong_result_to_json(const StrongResult& r) {
    return tristate_to_json(r, [](const StrongCertPtr& p) { return strong_to_json(*p); });
}

// ---- reports and vectors ----

inline json contraction_report_to_json(const ContractionReport& rep) {
    json j;
    j["u"] = rep.u;
    j["v"] = rep.v;
    j["link_condition"] = rep.link_condition;
    j["contracted"] = facets_to_json(rep.contracted);
    j["deletion_ball"] = shelling_result_to_json(rep.deletion_ball);
    j["star_union_ball"] = shelling_result_to_json(rep.star_union_ball);
    j["contracted_sphere"] = shelling_result_to_json(rep.contracted_sphere);
    j["complement_ball"] = shelling_result_to_json(rep.complement_ball);
    j["deletion_pure_full_dim"] = rep.deletion_pure_full_dim;
    j["consistent"] = rep.consistent;
    return j;
}

inline json fhg_to_json(const FHGVectors& v) {
    json j;
    j["d"] = v.d;
    json f = json::array(), h = json::array(), g = json::array();
    for (const BigInt& x : v.f) f.push_back(bigint_to_json(x));
    for (const BigInt& x : v.h) h.push_back(bigint_to_json(x));
    for (const BigInt& x : v.g) g.push_back(bigint_to_json(x));
    j["f"] = f;
    j["h"] = h;
    j["g"] = g;
    j["dehn_sommerville"] = dehn_sommerville_holds(v);
    return j;
}

inline json witness_to_json(const LefschetzWitness& w) {
    json j;
    j["field"] = "gf";
    j["p"] = w.p;
    json thetas = json::array();
    for (const LinearForm& th : w.thetas) thetas.push_back(th);
    j["thetas"] = thetas;
    j["omega"] = w.omega;
    j["dims"] = w.dims;
    j["ranks"] = w.ranks;
    j["seed"] = w.seed;
    return j;
}

inline LefschetzWitness witness_from_json(const json& j, const Complex& c) {
    if (!j.is_object() || j.value("field", "") != std::string("gf"))
        throw Error("not a GF(p) witness");
    LefschetzWitness w;
    w.p = j.at("p").get<uint64_t>();
    w.verts = c.vertices();
    for (const auto& th : j.at("thetas")) w.thetas.push_back(th.get<LinearForm>());
    w.omega = j.at("omega").get<LinearForm>();
    w.dims = j.at("dims").get<std::vector<long>>();
    w.ranks = j.at("ranks").get<std::vector<long>>();
    w.seed = j.value("seed", uint64_t{0});
    return w;
}

}  // namespace plsphere
