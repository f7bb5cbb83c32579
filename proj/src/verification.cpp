#include "clf/verification.hpp"

#include <algorithm>

#include "clf/errors.hpp"

namespace clf {

namespace {

// Lexicographically least independent set of the given size.
bool extend_independent(const Graph& g, Vertex from, int size, std::vector<Vertex>& chosen) {
    if (static_cast<int>(chosen.size()) == size) return true;
    for (Vertex v = from; v < g.vertex_count(); ++v) {
        if (g.vertex_count() - v < size - static_cast<int>(chosen.size())) return false;
        bool free = std::none_of(chosen.begin(), chosen.end(),
                                 [&](Vertex c) { return g.has_edge(c, v); });
        if (!free) continue;
        chosen.push_back(v);
        if (extend_independent(g, v + 1, size, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

void VerificationReport::add_check(std::string name, bool passed, std::string detail) {
    checks_.push_back({std::move(name), passed, std::move(detail)});
}

void VerificationReport::add_measure(std::string name, std::int64_t value) {
    measures_.push_back({std::move(name), value});
}

void VerificationReport::append(const VerificationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    measures_.insert(measures_.end(), other.measures_.begin(), other.measures_.end());
}

const Check* VerificationReport::find_check(const std::string& name) const {
    for (const auto& c : checks_)
        if (c.name == name) return &c;
    return nullptr;
}

std::optional<std::int64_t> VerificationReport::measure(const std::string& name) const {
    for (const auto& m : measures_)
        if (m.name == name) return m.value;
    return std::nullopt;
}

bool VerificationReport::overall() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

std::string VerificationReport::to_text() const {
    std::string out;
    for (const auto& c : checks_) {
        out += "check " + c.name + " = " + (c.passed ? "pass" : "fail");
        if (!c.passed && !c.detail.empty()) out += ": " + c.detail;
        out += '\n';
    }
    for (const auto& m : measures_) out += "measure " + m.name + " = " + std::to_string(m.value) + '\n';
    out += std::string("overall = ") + (overall() ? "pass" : "fail") + '\n';
    return out;
}

std::string format_vertices(std::span<const Vertex> vs) {
    std::string out;
    for (Vertex v : vs) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

std::optional<Vertex> first_link_mismatch(const Graph& g, const Graph& link, int t) {
    if (t < 0) throw InvalidArgument("link multiplicity must be non-negative");
    const bool connected_link = link.vertex_count() > 0 && is_connected(link);
    const Graph target = connected_link ? Graph{} : disjoint_copies(link, t);
    const auto expected_degree = static_cast<std::size_t>(t) * link.vertex_count();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (static_cast<std::size_t>(g.degree(v)) != expected_degree) return v;
        const Graph lv = link_of(g, v);
        if (!connected_link) {
            if (!is_isomorphic(lv, target)) return v;
            continue;
        }
        const auto parts = components(lv);
        if (parts.size() != static_cast<std::size_t>(t)) return v;
        for (const auto& part : parts) {
            if (part.size() != static_cast<std::size_t>(link.vertex_count()) ||
                !is_isomorphic(induced_subgraph(lv, part), link)) {
                return v;
            }
        }
    }
    return std::nullopt;
}

std::optional<Graph> common_link(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    Graph first = link_of(g, 0);
    for (Vertex v = 1; v < g.vertex_count(); ++v)
        if (!is_isomorphic(link_of(g, v), first)) return std::nullopt;
    return first;
}

void add_basic_measures(VerificationReport& report, const Graph& g) {
    report.add_measure("vertices", g.vertex_count());
    report.add_measure("edges", static_cast<std::int64_t>(g.edge_count()));
    report.add_measure("min_degree", g.min_degree());
    report.add_measure("max_degree", g.max_degree());
    report.add_measure("components", static_cast<std::int64_t>(components(g).size()));
}

VerificationReport verify_constant_link(const Graph& g, const Graph& link, int t) {
    VerificationReport report;
    auto bad = first_link_mismatch(g, link, t);
    if (bad) {
        const Graph lv = link_of(g, *bad);
        report.add_check("constant_link", false,
                         "vertex " + std::to_string(*bad) + " has link with " +
                             std::to_string(lv.vertex_count()) + " vertices, " +
                             std::to_string(lv.edge_count()) + " edges, " +
                             std::to_string(components(lv).size()) + " components");
    } else {
        report.add_check("constant_link", true);
    }
    report.add_measure("link_copies", t);
    report.add_measure("link_vertices", link.vertex_count());
    return report;
}

VerificationReport verify_no_cycles_in_range(const Graph& g, int lo, int hi) {
    if (lo < 3 || lo >= hi) throw InvalidArgument("cycle range needs 3 <= lo < hi");
    VerificationReport report;
    auto cycle = find_cycle_in_range(g, lo + 1, hi - 1);
    if (cycle) {
        report.add_check("no_cycles_in_range", false,
                         "cycle of length " + std::to_string(cycle->size()) + ": " +
                             format_vertices(*cycle));
    } else {
        report.add_check("no_cycles_in_range", true);
    }
    report.add_measure("range_lo", lo);
    report.add_measure("range_hi", hi);
    return report;
}

VerificationReport verify_induced_star_free(const Graph& g, int t) {
    if (t < 2) throw InvalidArgument("induced star check needs t >= 2");
    VerificationReport report;
    int worst = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) > kIndependenceLimit) {
            report.add_check("induced_star_free", false,
                             "indeterminate: link of vertex " + std::to_string(v) + " has " +
                                 std::to_string(g.degree(v)) + " vertices");
            return report;
        }
        const int alpha = independence_number(link_of(g, v));
        worst = std::max(worst, alpha);
        if (alpha >= t) {
            const Graph lv = link_of(g, v);
            std::vector<Vertex> leaves;
            extend_independent(lv, 0, t, leaves);
            const auto nbrs = g.neighbors(v);
            for (auto& leaf : leaves) leaf = nbrs[leaf];
            report.add_check("induced_star_free", false,
                             "induced K_1," + std::to_string(t) + " center " + std::to_string(v) +
                                 " leaves " + format_vertices(leaves));
            report.add_measure("max_link_independence", alpha);
            return report;
        }
    }
    report.add_check("induced_star_free", true);
    report.add_measure("max_link_independence", worst);
    return report;
}

VerificationReport verify_extremal_cycle_instance(const Graph& g, int k, int t) {
    if (k < 3 || t < 3) throw InvalidArgument("extremal cycle instance needs k >= 3 and t >= 3");
    VerificationReport report;
    auto cycle = find_cycle_in_range(g, k, k);
    if (cycle) {
        report.add_check("c_k_free", false, "C_" + std::to_string(k) + ": " + format_vertices(*cycle));
    } else {
        report.add_check("c_k_free", true);
    }
    report.append(verify_induced_star_free(g, t));

    const auto n = static_cast<std::int64_t>(g.vertex_count());
    const auto twice_bound = static_cast<std::int64_t>(k - 2) * (t - 1) * n;
    const auto twice_edges = 2 * static_cast<std::int64_t>(g.edge_count());
    if (twice_edges == twice_bound) {
        report.add_check("edge_count_extremal", true);
    } else {
        report.add_check("edge_count_extremal", false,
                         "2e = " + std::to_string(twice_edges) + " but (k-2)(t-1)n = " +
                             std::to_string(twice_bound));
    }
    add_basic_measures(report, g);
    if (twice_bound % 2 == 0) report.add_measure("turan_bound", twice_bound / 2);
    return report;
}

}  // namespace clf
