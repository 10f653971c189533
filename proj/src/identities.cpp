#include "greenfn/identities.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "greenfn/poly_matrix.hpp"

namespace greenfn {

bool IdentityReport::holds() const {
    return std::all_of(parts.begin(), parts.end(), [](const ReportPart& p) { return p.holds; });
}

namespace {

void add_part(IdentityReport& report, std::string label, std::string left, std::string right) {
    bool ok = left == right;
    report.parts.push_back({std::move(label), std::move(left), std::move(right), ok});
}

Rational int_pow(const Rational& base, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

/// Rebuilds the graph with every weight and potential replaced.
BoundaryGraph remade(const BoundaryGraph& g, const Rational& edge_weight,
                     const std::function<Rational(VertexId)>& potential) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, edge_weight});
    std::vector<VertexId> boundary;
    for (int i = g.interior_count(); i < g.vertex_count(); ++i)
        boundary.push_back(g.vertex_at(i));
    std::map<VertexId, Rational> pot;
    for (VertexId v : g.vertices()) pot[v] = potential(v);
    return BoundaryGraph(g.vertices(), std::move(edges), std::move(boundary), std::move(pot));
}

BoundaryGraph negated_potential(const BoundaryGraph& g) {
    std::vector<Edge> edges = g.edges();
    std::vector<VertexId> boundary;
    for (int i = g.interior_count(); i < g.vertex_count(); ++i)
        boundary.push_back(g.vertex_at(i));
    std::map<VertexId, Rational> pot;
    for (VertexId v : g.vertices()) pot[v] = -g.potential(v);
    return BoundaryGraph(g.vertices(), std::move(edges), std::move(boundary), std::move(pot));
}

/// Visits every subset of the real edge set with exactly k elements.
void for_each_edge_subset(int total, int k,
                          const std::function<void(const std::vector<int>&)>& visit) {
    if (k < 0 || k > total) return;
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    if (k == 0) {
        visit(subset);
        return;
    }
    while (true) {
        visit(subset);
        int i = k - 1;
        while (i >= 0 && subset[i] == total - k + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

struct ForestScan {
    int omega = 0;
    std::vector<std::vector<VertexId>> components;
};

/// Components of an acyclic edge subset, or nullopt when it has a cycle.
std::optional<ForestScan> scan_forest(const BoundaryGraph& g, const std::vector<int>& subset) {
    int n = g.vertex_count();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int ei : subset) {
        const Edge& e = g.edges()[ei];
        int a = find(g.index_of(e.u)), b = find(g.index_of(e.v));
        if (a == b) return std::nullopt;
        parent[a] = b;
    }
    std::map<int, std::vector<VertexId>> comps;
    for (int i = 0; i < n; ++i) comps[find(i)].push_back(g.vertex_at(i));
    ForestScan scan;
    scan.omega = static_cast<int>(comps.size());
    for (auto& [root, vs] : comps) scan.components.push_back(std::move(vs));
    return scan;
}

}  // namespace

long count_boundary_forests(const BoundaryGraph& g,
                            std::optional<std::pair<VertexId, VertexId>> pair,
                            std::uint64_t cap) {
    if (g.boundary_count() == 0)
        throw GraphError("forest census requires a nonempty boundary");
    if (pair && (g.is_boundary(pair->first) || g.is_boundary(pair->second)))
        throw GraphError("marked vertices must be interior");

    int total = static_cast<int>(g.edges().size());
    int k = g.vertex_count() - g.boundary_count() - (pair ? 1 : 0);
    // Acyclicity then forces omega = |dX| (or |dX| + 1 with a pair).
    std::uint64_t work = 1;
    for (int i = 1; i <= std::min(k, total - k); ++i) {
        work = work * static_cast<std::uint64_t>(total - std::min(k, total - k) + i) /
               static_cast<std::uint64_t>(i);
        if (work > cap) throw CapExceededError(work, cap);
    }

    long count = 0;
    for_each_edge_subset(total, k, [&](const std::vector<int>& subset) {
        auto scan = scan_forest(g, subset);
        if (!scan) return;
        for (const auto& comp : scan->components) {
            int nb = 0;
            bool marked_l = false, marked_m = false;
            for (VertexId v : comp) {
                if (g.is_boundary(v)) ++nb;
                if (pair && v == pair->first) marked_l = true;
                if (pair && v == pair->second) marked_m = true;
            }
            if (marked_l || marked_m) {
                if (!(marked_l && marked_m) || nb > 0) return;
            } else if (nb != 1) {
                return;
            }
        }
        ++count;
    });
    return count;
}

ForestCensus forest_census(const BoundaryGraph& g, std::uint64_t cap) {
    ForestCensus census;
    census.n_boundary = count_boundary_forests(g, std::nullopt, cap);
    for (int i = 0; i < g.interior_count(); ++i)
        for (int j = i; j < g.interior_count(); ++j) {
            auto key = std::make_pair(g.vertex_at(i), g.vertex_at(j));
            census.n_pair[key] = count_boundary_forests(g, key, cap);
        }
    return census;
}

IdentityReport check_iota_determinant_equality(const BoundaryGraph& g, std::uint64_t cap) {
    IdentityReport report{"iota-determinant", {}};
    PolyMatrix theta = build_theta(g);
    Poly det = det_fraction_free(theta);
    Poly l = iota1(g, Mode::L, cap).value;
    Poly q = iota1(g, Mode::Q, cap).value;
    add_part(report, "iota1[L] = iota1[Q]", l.str(), q.str());
    add_part(report, "iota1[L] = det Theta", l.str(), det.str());
    for (int i = 0; i < g.interior_count(); ++i) {
        for (int j = i; j < g.interior_count(); ++j) {
            VertexId ul = g.vertex_at(i), um = g.vertex_at(j);
            Poly l2 = iota2(g, Mode::L, ul, um, cap).value;
            Poly q2 = iota2(g, Mode::Q, ul, um, cap).value;
            Poly cof = det_fraction_free(minor_matrix(theta, i, j));
            if ((i + j) % 2 != 0) cof = -cof;
            std::string at = "(" + std::to_string(ul) + "," + std::to_string(um) + ")";
            add_part(report, "iota2[L]" + at + " = iota2[Q]" + at, l2.str(), q2.str());
            add_part(report, "iota2[L]" + at + " = signed minor det", l2.str(), cof.str());
        }
    }
    return report;
}

IdentityReport check_forest_determinant(const BoundaryGraph& g, std::uint64_t cap) {
    auto kappa = g.regularity();
    if (!kappa) throw GraphError("forest-determinant check requires a regular graph");
    if (!g.has_unit_weights())
        throw GraphError("forest-determinant check requires unit weights");
    if (g.boundary_count() == 0)
        throw GraphError("forest-determinant check requires a nonempty boundary");

    IdentityReport report{"forest-determinant", {}};
    // Grounded Laplacian: weights -1, potential = degree, z = 0.
    BoundaryGraph lap = remade(g, Rational(-1), [&](VertexId v) {
        return Rational(static_cast<long>(g.degree(v)));
    });
    PolyMatrix theta = build_theta(lap);
    Rational det0 = det_fraction_free(theta).eval(Rational(0));

    long census = count_boundary_forests(g, std::nullopt, cap);
    add_part(report, "forest census = det grounded Laplacian", std::to_string(census),
             det0.str());

    int n_bd = g.boundary_count();
    Rational minus2k(static_cast<long>(-2 * *kappa));
    DeformedGraph dg{lap};
    Rational hq_sum(0);
    for_each_factor(dg, Mode::Q, std::nullopt, cap, [&](const Factor& f) {
        int loops = static_cast<int>(f.loops.size());
        int exponent = f.omega - loops - n_bd;
        assert(exponent == f.b1_noloop && exponent >= 0);
        hq_sum += int_pow(Rational(4), exponent) * int_pow(minus2k, loops);
    });
    int n_int = g.interior_count();
    if (n_int % 2 != 0) hq_sum = -hq_sum;
    add_part(report, "forest census = signed Q-factor sum", std::to_string(census),
             hq_sum.str());

    for (int i = 0; i < n_int; ++i) {
        for (int j = i; j < n_int; ++j) {
            VertexId ul = g.vertex_at(i), um = g.vertex_at(j);
            std::string at = "(" + std::to_string(ul) + "," + std::to_string(um) + ")";
            long pair_census = count_boundary_forests(g, std::make_pair(ul, um), cap);

            Poly cof = det_fraction_free(minor_matrix(theta, i, j));
            Rational cof0 = cof.eval(Rational(0));
            if ((i + j) % 2 != 0) cof0 = -cof0;
            add_part(report, "pair census" + at + " = signed Laplacian minor",
                     std::to_string(pair_census), cof0.str());

            Rational pair_sum(0);
            for_each_factor(dg, Mode::Q, std::make_pair(ul, um), cap, [&](const Factor& f) {
                int loops = static_cast<int>(f.loops.size());
                int exponent = f.omega - loops - n_bd - 1;
                assert(exponent == f.b1_noloop && exponent >= 0);
                Rational term = int_pow(Rational(4), exponent) * int_pow(minus2k, loops);
                if (f.pair_distance % 2 != 0) term = -term;
                pair_sum += term;
            });
            if ((n_int - 1) % 2 != 0) pair_sum = -pair_sum;
            add_part(report, "pair census" + at + " = signed Q-factor sum",
                     std::to_string(pair_census), pair_sum.str());
        }
    }
    return report;
}

IdentityReport check_odd_cycle_difference(const BoundaryGraph& g, std::uint64_t cap) {
    IdentityReport report{"odd-cycle-difference", {}};
    Poly det_v = det_fraction_free(build_theta(g));
    Poly det_neg = det_fraction_free(build_theta(negated_potential(g))).reflected();
    if (g.interior_count() % 2 != 0) det_neg = -det_neg;
    Poly lhs = det_v - det_neg;

    DeformedGraph dg{g};
    EdgeWeightTable table = weight_table(g, Mode::Q);
    Poly rhs;
    for_each_factor(dg, Mode::Q, std::nullopt, cap, [&](const Factor& f) {
        if (f.b1_noloop == 0) return;  // those factors belong to the L-family
        rhs += int_pow(Rational(4), f.b1_noloop) * factor_weight(f, table);
    });
    add_part(report, "determinant difference = odd-cycle factor sum", lhs.str(), rhs.str());
    return report;
}

IdentityReport check_unicyclic_forest_identity(const BoundaryGraph& g, std::uint64_t cap) {
    auto kappa = g.regularity();
    if (!kappa) throw GraphError("unicyclic-forest check requires a regular graph");
    if (!g.has_unit_weights())
        throw GraphError("unicyclic-forest check requires unit weights");
    if (g.boundary_count() != 0)
        throw GraphError("unicyclic-forest check requires an empty boundary");

    IdentityReport report{"unicyclic-forest", {}};
    int n = g.vertex_count();
    int total = static_cast<int>(g.edges().size());

    // Left side: every component of the factor is odd unicyclic with a real
    // cycle, so the subset has exactly |X| edges and no self-loops.
    Rational lhs(0);
    DeformedGraph dg{g};
    for_each_factor(dg, Mode::Q, std::nullopt, cap, [&](const Factor& f) {
        if (!f.loops.empty()) return;
        assert(f.b1_noloop == f.omega);
        lhs += int_pow(Rational(4), f.omega);
    });

    // Right side: all spanning forests, isolated vertices allowed.
    std::uint64_t subsets = total >= 63 ? UINT64_MAX : (std::uint64_t{1} << total);
    if (subsets > cap) throw CapExceededError(subsets, cap);
    Rational rhs(0);
    Rational minus2k(static_cast<long>(-2 * *kappa));
    for (int k = 0; k < n && k <= total; ++k) {
        for_each_edge_subset(total, k, [&](const std::vector<int>& subset) {
            auto scan = scan_forest(g, subset);
            if (!scan) return;
            Rational lambda(1);
            for (const auto& comp : scan->components)
                lambda *= Rational(static_cast<long>(comp.size()));
            rhs += int_pow(minus2k, scan->omega) * lambda;
        });
    }
    if (n % 2 != 0) rhs = -rhs;
    add_part(report, "4^omega over odd-unicyclic factors = signed forest sum", lhs.str(),
             rhs.str());
    return report;
}

}  // namespace greenfn
