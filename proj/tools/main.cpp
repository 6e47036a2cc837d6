#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "posetreal/beta.hpp"
#include "posetreal/bounds.hpp"
#include "posetreal/construct.hpp"
#include "posetreal/io.hpp"

using namespace posetreal;
using nlohmann::json;

namespace {

AutOptions aut_options_from_env(int timeout_s) {
    AutOptions opts;
    if (const char* cap = std::getenv("POSET_REALIZER_CAP")) opts.point_cap = std::atoi(cap);
    opts.timeout_ms = timeout_s * 1000;
    return opts;
}

struct ConstructArgs {
    std::string group_spec;
    std::string method;
    std::string gens;
    int n = 0;
    int p = 0, k = 0;
    std::string parts;
    std::string graph_file;
    std::string out_prefix;
    std::string dot_file;
    bool no_verify = false;
    bool unverified = false;
};

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

int run_construct(const ConstructArgs& args, int timeout_s, int /*workers*/) {
    AutOptions opts = aut_options_from_env(timeout_s);

    std::optional<ConstructedRealization> real;
    std::optional<Poset> bare;
    if (args.method == "main") {
        FiniteGroup g = group_from_spec(args.group_spec);
        std::vector<int> gens = parse_generator_list(g, args.gens);
        if (gens.empty()) throw ValidationError("--method main requires --gens");
        real = main_theorem_poset(g, GeneratingSequence{gens});
    } else if (args.method == "crown") {
        bare = crown(args.n);
    } else if (args.method == "subdivided-crown") {
        real = subdivided_crown(args.n);
    } else if (args.method == "cyclic-pk") {
        real = cyclic_prime_power_poset(args.p, args.k, args.unverified);
    } else if (args.method == "abelian-join") {
        real = abelian_join_poset(parse_int_list(args.parts));
    } else if (args.method == "graph-lattice") {
        bare = graph_realizer_lattice(graph_from_json(load_json_file(args.graph_file)));
    } else {
        throw ParseError("unknown method tag: " + args.method);
    }

    const Poset& poset = real ? real->poset : *bare;
    if (!args.dot_file.empty()) {
        std::ofstream out(args.dot_file);
        out << poset_to_dot(poset);
    }
    json summary;
    summary["method"] = args.method;
    summary["points"] = poset.size();
    if (!args.out_prefix.empty()) write_json_file(args.out_prefix + ".poset.json", poset_to_json(poset));

    if (!real) {
        std::cout << summary.dump(2) << "\n";
        return 0;
    }
    summary["group"] = real->group.name;
    summary["group_order"] = real->group.order;
    if (!args.out_prefix.empty())
        write_json_file(args.out_prefix + ".action.json", action_to_json(real->action));

    bool verdict = true;
    if (!args.no_verify) {
        RealizationCertificate cert = verify_realization(real->group, real->poset, real->action, opts);
        verdict = cert.verdict;
        summary["certificate"] = certificate_to_json(cert, real->poset, true);
        if (!args.out_prefix.empty())
            write_json_file(args.out_prefix + ".cert.json", certificate_to_json(cert, real->poset, true));
    } else {
        RealizationCertificate stub;
        stub.group_name = real->group.name;
        stub.group_order = real->group.order;
        summary["certificate"] = certificate_to_json(stub, real->poset, false);
        if (!args.out_prefix.empty())
            write_json_file(args.out_prefix + ".cert.json",
                            certificate_to_json(stub, real->poset, false));
    }
    std::cout << summary.dump(2) << "\n";
    return verdict ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite posets with prescribed automorphism groups: builders, "
                 "verification engine, and exhaustive minimum-size search"};
    app.require_subcommand(1);
    int timeout_s = 0;
    int workers = 1;
    unsigned seed = 20240101; // fixed default; only sampled diagnostics use it
    app.add_option("--timeout", timeout_s, "automorphism search timeout in seconds (0 = none)");
    app.add_option("--workers", workers, "worker threads for enumeration/search");
    app.add_option("--seed", seed, "seed for any sampled diagnostics");

    ConstructArgs cargs;
    auto* construct = app.add_subcommand("construct", "build a poset realizer and verify it");
    construct->add_option("--group", cargs.group_spec, "group spec, e.g. C2^3, S4, D6, Q8xC3");
    construct->add_option("--method", cargs.method,
                          "main | crown | subdivided-crown | cyclic-pk | abelian-join | graph-lattice")
        ->required();
    construct->add_option("--gens", cargs.gens, "generator list for --method main (e1,e2,... or indices)");
    construct->add_option("--n", cargs.n, "size parameter for crown/subdivided-crown");
    construct->add_option("--p", cargs.p, "prime for cyclic-pk");
    construct->add_option("--k", cargs.k, "exponent for cyclic-pk");
    construct->add_option("--parts", cargs.parts, "comma list of cyclic orders for abelian-join");
    construct->add_option("--graph", cargs.graph_file, "graph JSON file for graph-lattice");
    construct->add_option("--out-prefix", cargs.out_prefix, "write <prefix>.poset/.action/.cert.json");
    construct->add_option("--dot", cargs.dot_file, "write the Hasse diagram in DOT format");
    construct->add_flag("--no-verify", cargs.no_verify, "skip verification (certificate marked unverified)");
    construct->add_flag("--unverified", cargs.unverified,
                        "allow the subdivided-crown regime for odd primes beyond 3 and 5");

    std::string poset_file, action_file, cert_file, json_out, group_spec, graph_file;
    bool want_bounded = false, bounds_json = false;
    int max_points = 0;

    auto* aut = app.add_subcommand("aut", "automorphism group of a poset file");
    aut->add_option("--poset", poset_file, "poset JSON file")->required();
    aut->add_option("--json-out", json_out, "write the permutation group JSON here");

    auto* verify = app.add_subcommand("verify", "re-check a realization certificate");
    verify->add_option("--poset", poset_file, "poset JSON file")->required();
    verify->add_option("--action", action_file, "action JSON file")->required();
    verify->add_option("--group", group_spec, "group spec")->required();
    verify->add_option("--cert", cert_file, "previously written certificate to compare against");

    auto* beta_cmd = app.add_subcommand("beta", "exhaustive minimum realizer search");
    beta_cmd->add_option("--group", group_spec, "group spec")->required();
    beta_cmd->add_option("--max-points", max_points, "largest poset size to scan (<= 9)")->required();
    beta_cmd->add_option("--json-out", json_out, "write the search report here");

    auto* face = app.add_subcommand("face-poset", "face poset of a graph");
    face->add_option("--graph", graph_file, "graph JSON file")->required();
    face->add_flag("--bounded", want_bounded, "add a global minimum and maximum");
    face->add_option("--out", json_out, "write the poset JSON here");
    face->add_option("--dot", cert_file, "write the Hasse diagram in DOT format");

    auto* bounds_cmd = app.add_subcommand("bounds", "print the reference bounds table");
    bounds_cmd->add_flag("--json", bounds_json, "emit JSON instead of text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return run_construct(cargs, timeout_s, workers);

        if (aut->parsed()) {
            Poset p = poset_from_json(load_json_file(poset_file));
            PermGroup pg = automorphism_group(p, aut_options_from_env(timeout_s));
            json out = permgroup_to_json(pg);
            out["orbit_count"] = pg.orbits.size();
            if (!json_out.empty()) write_json_file(json_out, out);
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (verify->parsed()) {
            Poset p = poset_from_json(load_json_file(poset_file));
            std::vector<Perm> action = action_from_json(load_json_file(action_file));
            FiniteGroup g = group_from_spec(group_spec);
            RealizationCertificate cert = verify_realization(g, p, action, aut_options_from_env(timeout_s));
            json out = certificate_to_json(cert, p, true);
            bool matches = true;
            if (!cert_file.empty()) {
                json prev = load_json_file(cert_file);
                matches = prev.at("aut_order") == out.at("aut_order") &&
                          prev.at("verdict") == out.at("verdict") &&
                          prev.at("poset_hash") == out.at("poset_hash");
                out["matches_previous"] = matches;
            }
            std::cout << out.dump(2) << "\n";
            return cert.verdict && matches ? 0 : 1;
        }

        if (beta_cmd->parsed()) {
            FiniteGroup g = group_from_spec(group_spec);
            BetaResult r = beta(g, max_points, workers);
            json out = beta_result_to_json(g.name, r);
            if (!json_out.empty()) write_json_file(json_out, out);
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (face->parsed()) {
            Graph g = graph_from_json(load_json_file(graph_file));
            Poset p = face_poset(g);
            if (want_bounded) p = bounded(p);
            json out = poset_to_json(p);
            if (!json_out.empty()) write_json_file(json_out, out);
            if (!cert_file.empty()) {
                std::ofstream dot(cert_file);
                dot << poset_to_dot(p);
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (bounds_cmd->parsed()) {
            const auto& table = known_bounds();
            if (bounds_json) {
                json arr = json::array();
                for (const auto& e : table) {
                    json row{{"group", e.group}, {"p", e.p},
                             {"k", e.k},         {"beta_lower", e.beta_lower},
                             {"beta_upper", e.beta_upper}, {"source", e.source}};
                    row["alpha"] = e.alpha ? json(*e.alpha) : json(nullptr);
                    arr.push_back(row);
                }
                std::cout << arr.dump(2) << "\n";
            } else {
                std::cout << "group   alpha   beta_lower  beta_upper  source\n";
                for (const auto& e : table)
                    std::cout << e.group << "\t" << (e.alpha ? std::to_string(*e.alpha) : "-")
                              << "\t" << e.beta_lower << "\t" << e.beta_upper << "\t" << e.source
                              << "\n";
            }
            return 0;
        }
    } catch (const Error& err) {
        json e{{"error", err.what()}};
        std::cerr << e.dump() << "\n";
        return 2;
    } catch (const std::exception& err) {
        json e{{"error", err.what()}};
        std::cerr << e.dump() << "\n";
        return 3;
    }
    return 0;
}
