// dessinlab: clean dessins d'enfants as permutation triples, their Brauer
// graph algebra invariants, and Kauer mutations.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dessinlab/algebra.hpp"
#include "dessinlab/dessin.hpp"
#include "dessinlab/errors.hpp"
#include "dessinlab/io.hpp"
#include "dessinlab/mutation.hpp"
#include "dessinlab/quiver.hpp"

#include <json.hpp>

namespace {

using namespace dessinlab;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitResourceLimit = 3;

struct Options {
    std::string format = "text";
    std::string out_path;
    int limit = 0; // 0 = defaults
    bool verify = false;
};

void write_output(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw validation_error("cannot open output file " + opt.out_path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CleanDessin load_dessin(const std::string& path) {
    return parse_document(read_file(path)).to_dessin();
}

MutationLimits mutation_limits(const Options& opt) {
    MutationLimits lim;
    if (opt.limit > 0) lim.max_class_size = opt.limit;
    return lim;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"clean dessins d'enfants, Brauer graph algebra invariants, "
                 "and Kauer mutations"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", opt.out_path, "write output to a file");
    app.add_option("--limit", opt.limit, "resource limit override");
    app.add_flag("--verify", opt.verify, "include oracle values in reports");

    std::string file_a, file_b;
    int edge_dart = 0, times = 1, edges = 0;
    std::uint64_t seed = 0;
    std::string faces_spec, blacks_spec;
    int genus = -1, vertices = -1, face_count = -1;
    bool insert_before = false;

    auto* validate = app.add_subcommand("validate", "parse and check a dessin file");
    validate->add_option("file", file_a)->required();

    auto* info = app.add_subcommand("info", "invariant report");
    info->add_option("file", file_a)->required();

    auto* mutate_cmd = app.add_subcommand("mutate", "mutate at an edge");
    mutate_cmd->add_option("file", file_a)->required();
    mutate_cmd->add_option("--edge", edge_dart, "a dart of the edge")->required();
    mutate_cmd->add_option("--times", times, "number of mutations");
    mutate_cmd->add_flag("--insert-before", insert_before,
                         "diagnostic: insert moved darts before their targets");

    auto* period = app.add_subcommand("period", "mutation period at an edge");
    period->add_option("file", file_a)->required();
    period->add_option("--edge", edge_dart, "a dart of the edge")->required();

    auto* orbit = app.add_subcommand("orbit", "mutation class statistics");
    orbit->add_option("file", file_a)->required();

    auto* star = app.add_subcommand("star", "mutation sequence to a generalized star");
    star->add_option("file", file_a)->required();

    auto* iso = app.add_subcommand("iso", "isomorphism test");
    iso->add_option("file_a", file_a)->required();
    iso->add_option("file_b", file_b)->required();

    auto* deq = app.add_subcommand("derived-eq", "derived equivalence verdict");
    deq->add_option("file_a", file_a)->required();
    deq->add_option("file_b", file_b)->required();

    auto* enumerate = app.add_subcommand("enumerate", "isomorphism classes by edge count");
    enumerate->add_option("--edges", edges)->required();
    enumerate->add_option("--genus", genus, "genus filter");
    enumerate->add_option("--vertices", vertices, "black vertex count filter");
    enumerate->add_option("--face-count", face_count, "face count filter");
    enumerate->add_option("--faces", faces_spec, "face degree multiset, comma separated");
    enumerate->add_option("--black-degrees", blacks_spec,
                          "black degree multiset, comma separated");

    auto* clean = app.add_subcommand("clean", "clean double cover of a map");
    clean->add_option("file", file_a)->required();

    auto* triangulate_cmd = app.add_subcommand("triangulate", "barycentric subdivision");
    triangulate_cmd->add_option("file", file_a)->required();

    auto* random_cmd = app.add_subcommand("random", "seeded random dessin");
    random_cmd->add_option("--edges", edges)->required();
    random_cmd->add_option("--seed", seed);

    auto* dot = app.add_subcommand("dot", "DOT export of a dessin or its quiver");
    dot->add_option("file", file_a)->required();
    bool dot_quiver = false;
    dot->add_flag("--quiver", dot_quiver, "export the quiver instead");

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }

    if (validate->parsed()) {
        const CleanDessin d = load_dessin(file_a);
        const Passport p = d.passport();
        std::ostringstream out;
        out << "ok: n=" << p.edge_count << " genus=" << p.genus
            << " phi=" << format_permutation(d.phi(), true) << "\n";
        write_output(opt, out.str());
        return kExitOk;
    }

    if (info->parsed()) {
        const CleanDessin d = load_dessin(file_a);
        const InvariantReport r = compute_report(d, opt.verify);
        const std::string digest = canonical_digest(d);
        write_output(opt, opt.format == "json" ? report_json(r, digest)
                                               : report_text(r, digest));
        return kExitOk;
    }

    if (mutate_cmd->parsed()) {
        CleanDessin d = load_dessin(file_a);
        const auto convention = insert_before ? MutationConvention::BeforeTarget
                                                   : MutationConvention::AfterTarget;
        std::string kind;
        for (int k = 0; k < times; ++k) {
            MutationStep step = mutate(d, edge_dart, convention);
            kind = to_string(step.kind);
            d = std::move(step.result);
        }
        if (opt.format == "json") {
            nlohmann::ordered_json j;
            j["case"] = kind;
            j["n"] = d.edge_count();
            j["sigma"] = format_permutation(d.sigma());
            j["alpha"] = format_permutation(d.alpha());
            write_output(opt, j.dump(2) + "\n");
        } else {
            write_output(opt, "# case: " + kind + "\n" + format_document(d));
        }
        return kExitOk;
    }

    if (period->parsed()) {
        const CleanDessin d = load_dessin(file_a);
        const int bound = period_bound(d, edge_dart);
        const int exact = exact_period(d, edge_dart);
        if (opt.format == "json") {
            nlohmann::ordered_json j;
            j["exact"] = exact;
            j["bound"] = bound;
            write_output(opt, j.dump(2) + "\n");
        } else {
            write_output(opt, "exact=" + std::to_string(exact) +
                                  " bound=" + std::to_string(bound) + "\n");
        }
        return kExitOk;
    }

    if (orbit->parsed()) {
        const CleanDessin d = load_dessin(file_a);
        const MutationClass cls = mutation_class(d, mutation_limits(opt));
        if (opt.format == "json") {
            nlohmann::ordered_json j;
            j["size"] = cls.members.size();
            j["star_count"] = cls.star_members.size();
            write_output(opt, j.dump(2) + "\n");
        } else {
            write_output(opt, "size=" + std::to_string(cls.members.size()) +
                                  " stars=" + std::to_string(cls.star_members.size()) + "\n");
        }
        return kExitOk;
    }

    if (star->parsed()) {
        const CleanDessin d = load_dessin(file_a);
        const std::vector<int> path = star_reduce(d, mutation_limits(opt));
        if (opt.format == "json") {
            nlohmann::ordered_json j;
            j["darts"] = path;
            write_output(opt, j.dump(2) + "\n");
        } else {
            std::string line;
            for (size_t k = 0; k < path.size(); ++k) {
                if (k) line += ' ';
                line += std::to_string(path[k]);
            }
            write_output(opt, line + "\n");
        }
        return kExitOk;
    }

    if (iso->parsed()) {
        const CleanDessin a = load_dessin(file_a);
        const CleanDessin b = load_dessin(file_b);
        const auto g = find_conjugator(a, b);
        if (!g) {
            write_output(opt, "not isomorphic\n");
            return kExitValidation;
        }
        write_output(opt, "isomorphic, conjugator g = " + format_permutation(*g, true) + "\n");
        return kExitOk;
    }

    if (deq->parsed()) {
        const CleanDessin a = load_dessin(file_a);
        const CleanDessin b = load_dessin(file_b);
        const EquivalenceResult res = derived_equivalent(a, b, mutation_limits(opt));
        std::ostringstream out;
        out << to_string(res.verdict);
        if (res.witness_path) {
            out << " path=";
            for (size_t k = 0; k < res.witness_path->size(); ++k) {
                if (k) out << ',';
                out << (*res.witness_path)[k];
            }
        }
        out << "\n";
        write_output(opt, out.str());
        return res.verdict == EquivalenceVerdict::Undecided ? kExitResourceLimit : kExitOk;
    }

    if (enumerate->parsed()) {
        PassportFilter filter;
        if (genus >= 0) filter.genus = genus;
        if (vertices >= 0) filter.black_count = vertices;
        if (face_count >= 0) filter.face_count = face_count;
        if (!faces_spec.empty()) filter.face_degrees = parse_int_list(faces_spec);
        if (!blacks_spec.empty()) filter.black_degrees = parse_int_list(blacks_spec);
        EnumerationLimits lim;
        if (opt.limit > 0) lim.max_edges = opt.limit;
        const auto classes = enumerate_dessins(edges, filter, lim);
        if (opt.format == "json") {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (const auto& d : classes) {
                const Passport p = d.passport();
                nlohmann::ordered_json e;
                e["sigma"] = format_permutation(d.sigma());
                e["alpha"] = format_permutation(d.alpha());
                e["black_degrees"] = p.black_degrees;
                e["face_degrees"] = p.face_degrees;
                e["genus"] = p.genus;
                j.push_back(std::move(e));
            }
            nlohmann::ordered_json top;
            top["count"] = classes.size();
            top["classes"] = std::move(j);
            write_output(opt, top.dump(2) + "\n");
        } else {
            std::ostringstream out;
            out << classes.size() << " classes\n";
            for (const auto& d : classes)
                out << "sigma=" << format_permutation(d.sigma(), true)
                    << " alpha=" << format_permutation(d.alpha()) << "\n";
            write_output(opt, out.str());
        }
        return kExitOk;
    }

    if (clean->parsed()) {
        const DessinDocument doc = parse_document(read_file(file_a));
        const CleanDessin d = clean_cover(doc.sigma(), doc.alpha());
        write_output(opt, format_document(d, doc.name));
        return kExitOk;
    }

    if (triangulate_cmd->parsed()) {
        const CleanDessin d = load_dessin(file_a);
        write_output(opt, format_document(triangulate(d)));
        return kExitOk;
    }

    if (random_cmd->parsed()) {
        const CleanDessin d = random_dessin(edges, seed);
        write_output(opt, format_document(d));
        return kExitOk;
    }

    if (dot->parsed()) {
        const CleanDessin d = load_dessin(file_a);
        write_output(opt, dot_quiver ? export_dot(Quiver::of(d)) : export_dot(d));
        return kExitOk;
    }

    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dessinlab::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dessinlab::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const dessinlab::validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
