#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clf/graph.hpp"

namespace clf {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;  // witness for failures, empty otherwise
};

struct Measure {
    std::string name;
    std::int64_t value = 0;
};

/// Ordered pass/fail checks plus integer measurements.
///
/// Text form, one item per line:
///   check <name> = pass|fail[: <witness>]
///   measure <name> = <integer>
///   overall = pass|fail
class VerificationReport {
public:
    void add_check(std::string name, bool passed, std::string detail = {});
    void add_measure(std::string name, std::int64_t value);
    void append(const VerificationReport& other);

    const std::vector<Check>& checks() const { return checks_; }
    const std::vector<Measure>& measures() const { return measures_; }
    const Check* find_check(const std::string& name) const;
    std::optional<std::int64_t> measure(const std::string& name) const;

    // Conjunction of all checks (true for an empty report).
    bool overall() const;
    std::string to_text() const;

private:
    std::vector<Check> checks_;
    std::vector<Measure> measures_;
};

std::string format_vertices(std::span<const Vertex> vs);

// First vertex whose link is not isomorphic to t disjoint copies of `link`.
std::optional<Vertex> first_link_mismatch(const Graph& g, const Graph& link, int t);

// The common link of every vertex, if all links are isomorphic.
std::optional<Graph> common_link(const Graph& g);

// check constant_link: every L(v) ≅ t·L.
VerificationReport verify_constant_link(const Graph& g, const Graph& link, int t);

// check no_cycles_in_range: no cycle of length l with lo < l < hi.
VerificationReport verify_no_cycles_in_range(const Graph& g, int lo, int hi);

// check induced_star_free: α(L(v)) <= t-1 for every v. Links above the α size
// cap fail as indeterminate.
VerificationReport verify_induced_star_free(const Graph& g, int t);

// check c_k_free, induced_star_free, edge_count_extremal: G attains
// ex_ind(n; C_k, K_{1,t}) = (k-2)(t-1)n/2.
VerificationReport verify_extremal_cycle_instance(const Graph& g, int k, int t);

// Standard measurements: vertices, edges, min_degree, max_degree, components.
void add_basic_measures(VerificationReport& report, const Graph& g);

}  // namespace clf
