#pragma once

#include <fstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "address_space.hpp"
#include "map_system.hpp"
#include "relation.hpp"
#include "symmetry.hpp"

namespace itlab {

using ordered_json = nlohmann::ordered_json;
using AnySystem = std::variant<MapSystem<double>, MapSystem<Rat>>;

inline const ordered_json& field(const ordered_json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) throw config_error(std::string("missing field: ") + name);
    return *it;
}

inline BranchSpec parse_branch(const ordered_json& j, const char* name) {
    if (!j.is_object()) throw config_error(std::string(name) + " must be an object");
    BranchSpec br;
    const std::string fam = field(j, "family").get<std::string>();
    if (fam == "affine") br.family = BranchFamily::affine;
    else if (fam == "sine") br.family = BranchFamily::sine_perturbed;
    else throw config_error("unknown branch family: " + fam);
    if (j.contains("eps")) br.eps = j["eps"].get<double>();
    return br;
}

template <class S>
S parse_scalar_field(const ordered_json& j, const char* name) {
    const ordered_json& v = field(j, name);
    if (v.is_string()) return parse_real<S>(v.get<std::string>());
    if (v.is_number()) {
        if constexpr (std::is_same_v<S, Rat>)
            throw config_error(std::string("rational mode takes string values "
                                           "(\"3/5\" or \"0.6\") for field: ") + name);
        else
            return v.get<double>();
    }
    throw config_error(std::string("field must be a number or string: ") + name);
}

inline AnySystem parse_system(const ordered_json& j) {
    if (!j.is_object()) throw config_error("config root must be a JSON object");
    const std::string mode = field(j, "mode").get<std::string>();
    BranchSpec b0, b1;
    if (j.contains("branch0")) b0 = parse_branch(j["branch0"], "branch0");
    if (j.contains("branch1")) b1 = parse_branch(j["branch1"], "branch1");
    if (mode == "rational")
        return MapSystem<Rat>(parse_scalar_field<Rat>(j, "a"),
                              parse_scalar_field<Rat>(j, "b"),
                              parse_scalar_field<Rat>(j, "rho"), b0, b1);
    if (mode == "float")
        return MapSystem<double>(parse_scalar_field<double>(j, "a"),
                                 parse_scalar_field<double>(j, "b"),
                                 parse_scalar_field<double>(j, "rho"), b0, b1);
    throw config_error("mode must be \"rational\" or \"float\"");
}

inline AnySystem load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw config_error(std::string("config parse error: ") + e.what());
    }
    return parse_system(j);
}

inline ordered_json itinerary_json(const ItineraryResult& r) {
    ordered_json j;
    j["word"] = r.word.str();
    j["reliable_len"] = r.reliable_len;
    if (r.hit_critical) j["hit_critical"] = *r.hit_critical;
    else j["hit_critical"] = nullptr;
    return j;
}

inline const char* mode_name(PrefixMode m) {
    switch (m) {
        case PrefixMode::omega: return "omega";
        case PrefixMode::omega_plus: return "omega_plus";
        default: return "closure";
    }
}

inline PrefixMode mode_from(const std::string& s) {
    if (s == "omega") return PrefixMode::omega;
    if (s == "omega_plus") return PrefixMode::omega_plus;
    if (s == "closure") return PrefixMode::closure;
    throw config_error("unknown mode: " + s);
}

inline ordered_json prefix_json(const PrefixSet& P) {
    ordered_json j;
    j["depth"] = P.depth;
    j["mode"] = mode_name(P.mode);
    auto words = ordered_json::array();
    for (const Word& w : P.words) words.push_back(w.str());
    j["words"] = std::move(words);
    return j;
}

inline ordered_json node_set_json(const FiniteRelation& r, const NodeSet& s) {
    auto arr = ordered_json::array();
    for (int v : s) arr.push_back(r.labels[static_cast<std::size_t>(v)].str());
    return arr;
}

inline ordered_json relation_json(const FiniteRelation& r) {
    ordered_json j;
    auto nodes = ordered_json::array();
    for (const Word& w : r.labels) nodes.push_back(w.str());
    j["nodes"] = std::move(nodes);
    auto edges = ordered_json::array();
    for (int x = 0; x < r.nodes(); ++x)
        for (int y : r.adj[x]) edges.push_back(ordered_json::array({x, y}));
    j["edges"] = std::move(edges);
    return j;
}

inline ordered_json conley_json(const FiniteRelation& r, const ConleyReport& rep) {
    ordered_json j = relation_json(r);
    j["maximal_attractor"] = node_set_json(r, rep.maximal_attractor);
    j["chain_recurrent"] = node_set_json(r, rep.chain_recurrent);
    auto comps = ordered_json::array();
    for (const NodeSet& c : rep.transitive_components)
        comps.push_back(node_set_json(r, c));
    j["transitive_components"] = std::move(comps);
    j["attractor"] = node_set_json(r, rep.attractor);
    j["basin"] = node_set_json(r, rep.basin);
    j["dual_repeller"] = node_set_json(r, rep.dual_repeller);
    j["connecting"] = node_set_json(r, rep.connecting);
    return j;
}

inline const char* defect_name(DefectOrdering o) {
    switch (o) {
        case DefectOrdering::tau_less: return "tau_less";
        case DefectOrdering::tau_greater: return "tau_greater";
        default: return "equal_to_depth";
    }
}

inline ordered_json defect_json(const SymmetryDefect& d) {
    ordered_json j;
    j["ordering"] = defect_name(d.ordering);
    if (d.decided_at) j["decided_at"] = *d.decided_at;
    else j["decided_at"] = nullptr;
    j["depth_used"] = d.depth_used;
    return j;
}

template <class S>
ordered_json solve_json(const SolveResult<S>& res) {
    ordered_json j;
    j["rho_star"] = to_double(res.rho_star);
    if constexpr (std::is_same_v<S, Rat>) {
        j["rho_star_exact"] = rational_string(res.rho_star);
        j["bracket"] = ordered_json::array(
            {rational_string(res.bracket_lo), rational_string(res.bracket_hi)});
        j["mode"] = "rational";
    } else {
        j["bracket"] = ordered_json::array({res.bracket_lo, res.bracket_hi});
        j["mode"] = "float";
    }
    j["iterations"] = res.iterations;
    j["certificate"] = defect_json(res.certificate);
    return j;
}

inline ordered_json symmetry_report_json(const SymmetryReport& rep) {
    ordered_json j;
    j["depth"] = rep.depth;
    j["alpha_matches_star_beta"] = rep.alpha_matches_star_beta;
    if (rep.first_mismatch) j["first_mismatch"] = *rep.first_mismatch;
    else j["first_mismatch"] = nullptr;
    j["prefix_set_star_invariant"] = rep.prefix_set_star_invariant;
    return j;
}

inline ordered_json validation_json(const ValidationReport& rep) {
    ordered_json j;
    j["pass"] = rep.pass;
    j["endpoint_residual"] = rep.endpoint_residual;
    j["min_derivative"] = rep.min_derivative;
    j["derivative_bound"] = rep.derivative_bound;
    j["messages"] = rep.messages;
    return j;
}

} // namespace itlab
