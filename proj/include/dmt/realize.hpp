#pragma once

#include <string>
#include <vector>

#include "dmt/invert.hpp"
#include "dmt/mergetree.hpp"

namespace dmt {

enum class RealizeMode { Simple, Planar };

struct RealizabilityViolation {
    std::string cycle_node;
    long long cycles;  // |C(T(c_u))|
    long long leaves;  // l(c_u)
    long long bound;
};

struct RealizabilityReport {
    RealizeMode mode = RealizeMode::Simple;
    std::vector<RealizabilityViolation> violations;
    bool realizable() const { return violations.empty(); }
};

/// Simple mode requires |C(T(c_u))| < (l(c_u)-2)(l(c_u)-1)/2 for every cycle
/// node c; planar mode requires |C(T(c_u))| < 2*l(c_u) - 5. Exact integer
/// arithmetic, strict inequalities.
RealizabilityReport check_realizable(const Gmt& t, RealizeMode mode);

struct NotRealizable : std::runtime_error {
    explicit NotRealizable(RealizabilityReport rep);
    RealizabilityReport report;
};

/// Realization by a simple graph: sc-order labels, phi_path of the underlying
/// tree, then cycle edges inserted in ascending label order at the
/// lexicographically minimal non-adjacent vertex pair of the corresponding
/// component. The hook `order` substitutes any valid Morse order for the
/// default sublevel-connected one.
PhiResult realize_simple(const Gmt& t);
PhiResult realize_simple(const Gmt& t, const Order& order);

/// As realize_simple but candidate pairs are additionally filtered by the
/// planarity oracle on graph-plus-candidate-edge.
PhiResult realize_planar(const Gmt& t);
PhiResult realize_planar(const Gmt& t, const Order& order);

/// True iff the simple graph is planar. Parallel edges are rejected.
bool planarity_oracle(const MultiGraph& g);

/// Index-pair planarity test shared with the test oracles; edges as pairs
/// over 0..n-1.
bool planar_boyer(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace dmt
