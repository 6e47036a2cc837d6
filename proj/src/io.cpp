#include "posetreal/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace posetreal {

using nlohmann::json;

json poset_to_json(const Poset& p) {
    json points = json::array();
    for (int i = 0; i < p.size(); ++i) {
        const Label& l = p.label(i);
        if (l.leveled())
            points.push_back(json::array({l.tag, l.level}));
        else
            points.push_back(l.tag);
    }
    json covers = json::array();
    for (auto [i, j] : p.cover_pairs()) covers.push_back(json::array({i, j}));
    return json{{"points", points}, {"covers", covers}};
}

Poset poset_from_json(const json& j) {
    std::vector<Label> labels;
    for (const auto& pt : j.at("points")) {
        if (pt.is_array())
            labels.push_back({pt.at(0).get<std::string>(), pt.at(1).get<int>()});
        else
            labels.push_back({pt.get<std::string>(), -1});
    }
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : j.at("covers"))
        covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    return Poset::from_covers(std::move(labels), covers);
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
    return json{{"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph::make(j.at("n").get<int>(), std::move(edges));
}

json action_to_json(const std::vector<Perm>& action) {
    json arr = json::array();
    for (const Perm& p : action) arr.push_back(p);
    return json{{"action", arr}};
}

std::vector<Perm> action_from_json(const json& j) {
    std::vector<Perm> action;
    for (const auto& p : j.at("action")) action.push_back(p.get<Perm>());
    return action;
}

json permgroup_to_json(const PermGroup& pg) {
    json gens = json::array();
    for (const Perm& g : pg.generators) gens.push_back(g);
    json orbits = json::array();
    for (const auto& o : pg.orbits) orbits.push_back(o);
    return json{{"degree", pg.degree},
                {"order", pg.order},
                {"generators", gens},
                {"orbits", orbits}};
}

std::string poset_hash(const Poset& p) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<uint64_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) {
        for (char c : p.label(i).tag) mix(static_cast<uint64_t>(static_cast<unsigned char>(c)));
        mix(static_cast<uint64_t>(p.label(i).level + 2));
        const uint64_t* row = p.closure().row(i);
        for (int w = 0; w < p.closure().words_per_row(); ++w) mix(row[w]);
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

json certificate_to_json(const RealizationCertificate& cert, const Poset& p, bool verified) {
    return json{{"group", cert.group_name},
                {"group_order", cert.group_order},
                {"poset_hash", poset_hash(p)},
                {"aut_order", cert.aut_order},
                {"orbit_count", cert.orbit_count},
                {"free", cert.free},
                {"action_valid", cert.action_valid},
                {"homomorphism", cert.homomorphism},
                {"injective", cert.injective},
                {"verdict", cert.verdict},
                {"verified", verified}};
}

json beta_result_to_json(const std::string& group_name, const BetaResult& r) {
    json sizes = json::array();
    for (const auto& rep : r.reports)
        sizes.push_back(json{{"n", rep.size},
                             {"count", rep.poset_count},
                             {"found", rep.realizer_found.has_value()},
                             {"seconds", rep.elapsed.count()}});
    json out{{"group", group_name}, {"sizes", sizes}};
    out["beta"] = r.beta ? json(*r.beta) : json(nullptr);
    out["witness"] = r.witness ? poset_to_json(*r.witness) : json(nullptr);
    return out;
}

std::string poset_to_dot(const Poset& p) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";
    for (int i = 0; i < p.size(); ++i) {
        std::string esc;
        for (char c : p.label(i).str()) {
            if (c == '"' || c == '\\') esc += '\\';
            esc += c;
        }
        os << "  n" << i << " [label=\"" << esc << "\"];\n";
    }
    for (int h = 0; h <= p.max_height(); ++h) {
        os << "  { rank=same;";
        for (int i = 0; i < p.size(); ++i)
            if (p.height_of(i) == h) os << " n" << i << ";";
        os << " }\n";
    }
    for (auto [i, j] : p.cover_pairs()) os << "  n" << i << " -> n" << j << ";\n";
    os << "}\n";
    return os.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace posetreal
