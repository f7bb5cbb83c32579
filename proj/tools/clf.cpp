// Command-line front end: generators, hypergraph operations, converters,
// verifiers and the brute-force oracle.

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "clf/constructions.hpp"
#include "clf/correspondence.hpp"
#include "clf/designs.hpp"
#include "clf/errors.hpp"
#include "clf/graph.hpp"
#include "clf/hypergraph.hpp"
#include "clf/io.hpp"
#include "clf/turan.hpp"
#include "clf/verification.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct Options {
    int k = 3;
    int t = 2;
    int q = 1;
    int m = 2;
    int depth = 2;
    int g = 0;
    int n = 0;
    int s = 0;
    int split = 1;
    int classes = -1;
    int max_rounds = 200;
    std::uint64_t seed = 0;
    std::optional<std::size_t> edge_e;
    std::optional<std::size_t> edge_f;
    std::string forbid;
    std::string link;
    std::string out;
    std::string report;
    std::vector<std::string> inputs;
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
    } else {
        clf::write_text_file(o.out, text);
    }
}

// Verification reports go to stdout and, if requested, to --report.
int finish(const Options& o, const clf::VerificationReport& r) {
    const auto text = r.to_text();
    std::cout << text;
    if (!o.report.empty()) clf::write_text_file(o.report, text);
    return r.overall() ? kOk : kVerificationFailed;
}

// Generator reports are written only to --report; the object goes to -o.
void side_report(const Options& o, clf::VerificationReport r) {
    r.add_measure("seed", static_cast<std::int64_t>(o.seed));
    if (!o.report.empty()) clf::write_text_file(o.report, r.to_text());
}

void graph_result(const Options& o, const clf::Graph& g) {
    emit(o, clf::format_graph(g));
    clf::VerificationReport r;
    clf::add_basic_measures(r, g);
    side_report(o, r);
}

void hypergraph_result(const Options& o, const clf::Hypergraph& h, const clf::ClassList& cls = {}) {
    emit(o, clf::format_hypergraph(h, cls));
    clf::VerificationReport r;
    r.add_measure("vertices", h.vertex_count());
    r.add_measure("edges", static_cast<std::int64_t>(h.edge_count()));
    if (auto k = clf::uniformity(h)) r.add_measure("uniformity", *k);
    if (auto t = clf::regularity(h)) r.add_measure("regularity", *t);
    side_report(o, r);
}

const std::string& input(const Options& o, std::size_t i) {
    if (o.inputs.size() <= i) throw clf::InvalidArgument("missing input file");
    return o.inputs[i];
}

bool looks_like_hypergraph(const std::string& text) {
    return text.rfind("hypergraph", 0) == 0;
}

int gen_treeglue(const Options& o) {
    const int g = o.g > 0 ? o.g : o.k + 1;
    auto outcome = clf::tree_glue_with_cycle_target(o.t, o.k, o.q, g, o.seed, o.max_rounds);
    for (const auto& w : outcome.warnings) std::cerr << "warning: " << w << '\n';
    outcome.report.add_measure("requested_seed", static_cast<std::int64_t>(o.seed));
    if (!o.report.empty()) clf::write_text_file(o.report, outcome.report.to_text());
    if (!outcome.graph) {
        std::cerr << outcome.report.to_text();
        return kVerificationFailed;
    }
    emit(o, clf::format_graph(*outcome.graph));
    return kOk;
}

int gen_cartesian(const Options& o) {
    std::vector<clf::Graph> factors;
    if (o.inputs.empty()) {
        if (o.t < 2) throw clf::InvalidArgument("cartesian needs --t >= 2 factors");
        factors.assign(o.t, clf::complete_graph(o.k));
    } else {
        for (const auto& path : o.inputs) factors.push_back(clf::load_graph(path));
    }
    graph_result(o, clf::cartesian_product(factors));
    return kOk;
}

int gen_witness(const Options& o) {
    if (o.s > 0) {
        graph_result(o, clf::witness_clique_plus_isolates(o.s, o.n));
    } else {
        graph_result(o, clf::witness_matching(o.n));
    }
    return kOk;
}

int gen_ag(const Options& o, bool seed_given) {
    const auto p = clf::affine_lines(o.m, o.q);
    if (o.classes >= 0) {
        std::optional<std::uint64_t> seed;
        if (seed_given) seed = o.seed;
        hypergraph_result(o, clf::take_classes(p, o.classes, seed));
    } else {
        hypergraph_result(o, p.design.blocks, p.classes);
    }
    return kOk;
}

int hg_switch(const Options& o) {
    const auto a = clf::load_hypergraph(input(o, 0));
    const auto b = clf::load_hypergraph(input(o, 1));
    const auto e = o.edge_e ? *o.edge_e : clf::find_removable_edge(a);
    const auto f = o.edge_f ? *o.edge_f : clf::find_removable_edge(b);
    hypergraph_result(o, clf::switch_edges(a, b, e, f, o.split));
    return kOk;
}

int hg_girth(const Options& o) {
    const auto h = clf::load_hypergraph(input(o, 0));
    const auto res = clf::berge_girth(h);
    clf::VerificationReport r;
    if (o.g > 0) {
        const bool ok = !res.girth || *res.girth >= o.g;
        std::string detail;
        if (!ok) {
            detail = "berge cycle of length " + std::to_string(*res.girth) + ": vertices " +
                     clf::format_vertices(res.witness->vertices) + " edges";
            for (auto e : res.witness->edges) detail += " " + std::to_string(e);
        }
        r.add_check("berge_girth_at_least", ok, detail);
    }
    r.add_check("linear", clf::is_linear(h));
    r.add_check("connected", clf::is_connected(h));
    r.add_measure("vertices", h.vertex_count());
    r.add_measure("edges", static_cast<std::int64_t>(h.edge_count()));
    if (auto k = clf::uniformity(h)) r.add_measure("uniformity", *k);
    if (auto t = clf::regularity(h)) r.add_measure("regularity", *t);
    r.add_measure("berge_girth", res.girth ? *res.girth : -1);
    return finish(o, r);
}

int verify_link(const Options& o) {
    const auto g = clf::load_graph(input(o, 0));
    const auto link = o.link.empty() ? clf::complete_graph(o.k - 1) : clf::load_graph(o.link);
    auto r = clf::verify_constant_link(g, link, o.t);
    clf::add_basic_measures(r, g);
    return finish(o, r);
}

int verify_cycles(const Options& o) {
    if (o.g <= 0) throw clf::InvalidArgument("verify cycles needs --g");
    const auto g = clf::load_graph(input(o, 0));
    auto r = clf::verify_no_cycles_in_range(g, o.k, o.g);
    clf::add_basic_measures(r, g);
    return finish(o, r);
}

int verify_star(const Options& o) {
    const auto g = clf::load_graph(input(o, 0));
    auto r = clf::verify_induced_star_free(g, o.t);
    clf::add_basic_measures(r, g);
    return finish(o, r);
}

int verify_turan(const Options& o) {
    const auto g = clf::load_graph(input(o, 0));
    return finish(o, clf::verify_extremal_cycle_instance(g, o.k, o.t));
}

int verify_classify(const Options& o) {
    const auto text = clf::read_text_file(input(o, 0));
    const int bound = o.g > 0 ? o.g : o.k + 3;
    clf::FamilyMembership m;
    if (looks_like_hypergraph(text)) {
        m = clf::classify_hypergraph(clf::parse_hypergraph(text).hypergraph, o.k, o.t, bound);
    } else {
        m = clf::classify_graph(clf::parse_graph(text), o.k, o.t, bound);
    }
    clf::VerificationReport r;
    r.add_check("in_l", m.in_l);
    r.add_check("in_h", m.in_h);
    r.add_check("in_b", m.in_b);
    r.add_measure("k", m.k);
    r.add_measure("t", m.t);
    r.add_measure("search_bound", m.search_bound);
    r.add_measure("girth_class", m.girth_class ? *m.girth_class : -1);
    return finish(o, r);
}

int oracle_turind(const Options& o) {
    if (o.forbid.empty()) throw clf::InvalidArgument("oracle turind needs --forbid");
    const auto inst = clf::TuranInstance::parse(o.forbid, o.t, o.n);
    const int value = clf::brute_force_turind(inst);
    std::cout << value << '\n';
    if (!o.report.empty()) {
        clf::VerificationReport r;
        const auto upper = clf::turan_upper_bound(inst);
        r.add_check("below_upper_bound", value * upper.den <= upper.num,
                    "upper bound " + upper.to_string());
        r.add_measure("ex_ind", value);
        r.add_measure("upper_bound_floor", upper.num / upper.den);
        r.add_measure("n", o.n);
        r.add_measure("t", o.t);
        clf::write_text_file(o.report, r.to_text());
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constant-link graph constructions and verifiers"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto out_flags = [&](CLI::App* c) {
        c->add_option("-o,--out", o.out, "Output path (default: stdout)");
        c->add_option("--report", o.report, "Write the report to this path");
        c->add_option("--seed", o.seed, "Random seed (default 0)");
    };
    auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help,
                    std::function<int()> run) {
        auto* c = group->add_subcommand(name, help);
        out_flags(c);
        c->callback([&action, run] { action = run; });
        return c;
    };
    auto files = [&](CLI::App* c, std::size_t count) {
        c->add_option("inputs", o.inputs, "Input files")->expected(static_cast<int>(count))->required();
    };

    auto* gen = app.add_subcommand("gen", "Build designs and graphs");
    gen->require_subcommand(1);
    leaf(gen, "fano", "S(2,3,7)", [&] {
        hypergraph_result(o, clf::fano().blocks);
        return kOk;
    });
    leaf(gen, "sts", "Steiner triple system on --n points", [&] {
        hypergraph_result(o, clf::steiner_triple(o.n).blocks);
        return kOk;
    })->add_option("--n", o.n)->required();
    leaf(gen, "pg", "Projective plane of order --q", [&] {
        hypergraph_result(o, clf::projective_plane(o.q).blocks);
        return kOk;
    })->add_option("--q", o.q)->required();
    {
        CLI::App* ag = nullptr;
        auto* c = leaf(gen, "ag", "Lines of AG_m(q) with parallel classes", [&] {
            return gen_ag(o, ag->count("--seed") > 0);
        });
        ag = c;
        c->add_option("--q", o.q)->required();
        c->add_option("--m", o.m, "Dimension (default 2)");
        c->add_option("--classes", o.classes, "Keep only this many parallel classes");
    }
    {
        auto* c = leaf(gen, "steiner-tower", "S_depth(k)", [&] {
            graph_result(o, clf::steiner_tower(o.k, o.depth, o.q));
            return kOk;
        });
        c->add_option("--k", o.k)->required();
        c->add_option("--depth", o.depth);
        c->add_option("--q", o.q, "Number of base cliques (default 1)");
    }
    {
        auto* c = leaf(gen, "affine-tower", "A_depth(q)", [&] {
            graph_result(o, clf::affine_tower(o.q, o.depth));
            return kOk;
        });
        c->add_option("--q", o.q)->required();
        c->add_option("--depth", o.depth);
    }
    files(leaf(gen, "gamma", "Gamma(G, H, F) from files G H F", [&] {
              graph_result(o, clf::gamma(clf::load_graph(input(o, 0)),
                                         clf::load_hypergraph(input(o, 1)),
                                         clf::load_graph(input(o, 2))));
              return kOk;
          }),
          3);
    {
        auto* c = leaf(gen, "treeglue", "Tree glue G(t,k,q,Pi) certified against (k,g)",
                       [&] { return gen_treeglue(o); });
        c->add_option("--t", o.t)->required();
        c->add_option("--k", o.k)->required();
        c->add_option("--q", o.q)->required();
        c->add_option("--g", o.g, "Forbid cycle lengths strictly between k and g");
        c->add_option("--max-rounds", o.max_rounds);
    }
    {
        auto* c = leaf(gen, "cartesian", "Product of graph files, or --t copies of K_k",
                       [&] { return gen_cartesian(o); });
        c->add_option("inputs", o.inputs, "Factor graph files");
        c->add_option("--k", o.k);
        c->add_option("--t", o.t);
    }
    {
        auto* c = leaf(gen, "witness", "Lower-bound witness: matching, or K_{2s-1} with --s",
                       [&] { return gen_witness(o); });
        c->add_option("--n", o.n)->required();
        c->add_option("--s", o.s);
    }

    auto* hg = app.add_subcommand("hg", "Hypergraph operations");
    hg->require_subcommand(1);
    {
        auto* c = leaf(hg, "switch", "Switch an edge of H1 with an edge of H2", [&] { return hg_switch(o); });
        files(c, 2);
        c->add_option("--split", o.split);
        c->add_option("--e", o.edge_e, "Edge of H1 (default: first removable)");
        c->add_option("--f", o.edge_f, "Edge of H2 (default: first removable)");
    }
    {
        auto* c = leaf(hg, "chain", "Switch --q copies together", [&] {
            hypergraph_result(o, clf::chain_switch(clf::load_hypergraph(input(o, 0)), o.q, o.split));
            return kOk;
        });
        files(c, 1);
        c->add_option("--q", o.q)->required();
        c->add_option("--split", o.split);
    }
    {
        auto* c = leaf(hg, "girth", "Berge girth report", [&] { return hg_girth(o); });
        files(c, 1);
        c->add_option("--g", o.g, "Require Berge girth at least g");
    }

    auto* convert = app.add_subcommand("convert", "Translate between graphs and hypergraphs");
    convert->require_subcommand(1);
    files(leaf(convert, "expand", "Hyperedges to cliques", [&] {
              graph_result(o, clf::expand_to_cliques(clf::load_hypergraph(input(o, 0))));
              return kOk;
          }),
          1);
    {
        auto* c = leaf(convert, "contract", "k-cliques to hyperedges", [&] {
            hypergraph_result(o, clf::contract_cliques(clf::load_graph(input(o, 0)), o.k));
            return kOk;
        });
        files(c, 1);
        c->add_option("--k", o.k)->required();
    }
    files(leaf(convert, "incidence", "Incidence graph", [&] {
              graph_result(o, clf::incidence_graph(clf::load_hypergraph(input(o, 0))));
              return kOk;
          }),
          1);
    {
        auto* c = leaf(convert, "from-incidence", "Hypergraph from a bipartite graph", [&] {
            hypergraph_result(o, clf::from_incidence(clf::load_graph(input(o, 0)), o.n));
            return kOk;
        });
        files(c, 1);
        c->add_option("--n", o.n, "Number of hypergraph vertices (left side)")->required();
    }

    auto* verify = app.add_subcommand("verify", "Check properties of a graph");
    verify->require_subcommand(1);
    {
        auto* c = leaf(verify, "link", "Constant link t copies of K_{k-1} (or --link)",
                       [&] { return verify_link(o); });
        files(c, 1);
        c->add_option("--k", o.k);
        c->add_option("--t", o.t);
        c->add_option("--link", o.link, "Graph file with the expected link component");
    }
    {
        auto* c = leaf(verify, "cycles", "No cycle length strictly between k and g",
                       [&] { return verify_cycles(o); });
        files(c, 1);
        c->add_option("--k", o.k)->required();
        c->add_option("--g", o.g)->required();
    }
    {
        auto* c = leaf(verify, "star", "No induced K_{1,t}", [&] { return verify_star(o); });
        files(c, 1);
        c->add_option("--t", o.t)->required();
    }
    {
        auto* c = leaf(verify, "turan", "Extremal for ex_ind(n; C_k, K_{1,t})",
                       [&] { return verify_turan(o); });
        files(c, 1);
        c->add_option("--k", o.k)->required();
        c->add_option("--t", o.t)->required();
    }
    {
        auto* c = leaf(verify, "classify", "Family membership of a graph or hypergraph",
                       [&] { return verify_classify(o); });
        files(c, 1);
        c->add_option("--k", o.k)->required();
        c->add_option("--t", o.t)->required();
        c->add_option("--g", o.g, "Cycle search bound (default k+3)");
    }

    auto* oracle = app.add_subcommand("oracle", "Exhaustive reference values");
    oracle->require_subcommand(1);
    {
        auto* c = leaf(oracle, "turind", "Exact ex_ind(n; H, K_{1,t}) for n <= 7",
                       [&] { return oracle_turind(o); });
        c->add_option("--forbid", o.forbid, "C<k>, <s>K2 or C<k>+<j>")->required();
        c->add_option("--t", o.t)->required();
        c->add_option("--n", o.n)->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return action ? action() : kUsage;
    } catch (const clf::IntegrityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const clf::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
