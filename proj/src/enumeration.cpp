#include "greenfn/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace greenfn {

EdgeWeightTable weight_table(const BoundaryGraph& g, Mode mode) {
    DeformedGraph dg{g};
    EdgeWeightTable table{mode, {}};
    table.weight.reserve(dg.edge_count());
    for (int e = 0; e < dg.real_edge_count(); ++e) {
        const Rational& w = dg.weight(e);
        table.weight.emplace_back(mode == Mode::L ? -w : w);
    }
    for (int e = dg.real_edge_count(); e < dg.edge_count(); ++e) {
        VertexId u = dg.loop_anchor(e);
        Rational vj = mode == Mode::L ? g.potential(u) + g.pi(u) : g.potential(u) - g.pi(u);
        table.weight.push_back(Poly::linear(vj, Rational(-1)));
    }
    return table;
}

Poly factor_weight(const Factor& h, const EdgeWeightTable& table) {
    Poly w(Rational(1));
    for (int e : h.edge_subset) w *= table.weight[e];
    return w;
}

namespace {

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // C(n, i) is integral at every step and monotone for i <= n/2.
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (result > cap) return cap + 1;
    }
    return result;
}

struct DisjointSet {
    std::vector<int> parent;

    explicit DisjointSet(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }
};

int tree_distance(const DeformedGraph& g, const std::vector<int>& comp_edges, VertexId from,
                  VertexId to) {
    if (from == to) return 0;
    std::map<VertexId, std::vector<VertexId>> adj;
    for (int e : comp_edges) {
        auto [u, v] = g.endpoints(e);
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::pair<VertexId, int>> queue{{from, 0}};
    std::set<VertexId> seen{from};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [u, d] = queue[head];
        if (u == to) return d;
        for (VertexId v : adj[u])
            if (seen.insert(v).second) queue.emplace_back(v, d + 1);
    }
    assert(false && "marked vertices not connected inside their component");
    return -1;
}

}  // namespace

void for_each_factor(const DeformedGraph& g, Mode mode,
                     std::optional<std::pair<VertexId, VertexId>> pair, std::uint64_t cap,
                     const std::function<void(const Factor&)>& sink) {
    const BoundaryGraph& base = g.base();
    int n = base.vertex_count();
    int n_int = base.interior_count();
    int total = g.edge_count();
    int k = pair ? n_int - 1 : n_int;

    if (pair) {
        if (base.is_boundary(pair->first) || base.is_boundary(pair->second))
            throw GraphError("marked vertices must be interior");
    }
    if (k < 0) return;
    if (binomial_capped(total, k, cap) > cap)
        throw CapExceededError(binomial_capped(total, k, UINT64_MAX - 1), cap);

    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;

    auto visit = [&](const std::vector<int>& h) {
        DisjointSet dsu(n);
        for (int e : h) {
            if (g.is_loop(e)) continue;
            auto [u, v] = g.endpoints(e);
            dsu.unite(base.index_of(u), base.index_of(v));
        }
        std::map<int, std::vector<VertexId>> comps;  // root -> vertices, model order
        for (int i = 0; i < n; ++i) comps[dsu.find(i)].push_back(base.vertex_at(i));

        Factor factor;
        factor.edge_subset = h;
        factor.omega = static_cast<int>(comps.size());
        for (int e : h)
            if (g.is_loop(e)) factor.loops.push_back(e);

        std::map<int, std::vector<int>> comp_edges;
        for (int e : h) {
            auto [u, v] = g.endpoints(e);
            comp_edges[dsu.find(base.index_of(u))].push_back(e);
        }

        for (auto& [root, vertices] : comps) {
            ComponentKind kind;
            try {
                kind = classify_component(g, factor.edge_subset, vertices);
            } catch (const ClassificationError&) {
                return;  // no valid factor contains this component
            }
            const std::vector<int>& edges_here = comp_edges[root];
            bool touches_boundary = std::any_of(vertices.begin(), vertices.end(),
                                                [&](VertexId v) { return base.is_boundary(v); });
            bool touches_marked =
                pair && std::any_of(vertices.begin(), vertices.end(), [&](VertexId v) {
                    return v == pair->first || v == pair->second;
                });

            if (touches_marked) {
                std::set<VertexId> vset(vertices.begin(), vertices.end());
                if (!vset.count(pair->first) || !vset.count(pair->second)) return;
                if (touches_boundary) return;
                if (kind != ComponentKind::PureTree) return;
                factor.pair_distance =
                    tree_distance(g, edges_here, pair->first, pair->second);
            } else if (touches_boundary) {
                if (kind != ComponentKind::TreeWithOneBoundary) return;
            } else {
                bool admissible = kind == ComponentKind::TreeWithOneSelfLoop ||
                                  (mode == Mode::Q && kind == ComponentKind::OddUnicyclic);
                if (!admissible) return;
                if (kind == ComponentKind::OddUnicyclic) ++factor.b1_noloop;
            }

            // Component-wise edge counts force the family's total cardinality.
            int expect = kind == ComponentKind::TreeWithOneSelfLoop ||
                                 kind == ComponentKind::OddUnicyclic
                             ? static_cast<int>(vertices.size())
                             : static_cast<int>(vertices.size()) - 1;
            assert(static_cast<int>(edges_here.size()) == expect);
            (void)expect;

            factor.components.emplace_back(vertices, kind);
        }
        sink(factor);
    };

    if (k == 0) {
        visit({});
        return;
    }
    while (true) {
        visit(subset);
        // next k-combination of {0, ..., total-1}
        int i = k - 1;
        while (i >= 0 && subset[i] == total - k + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

std::vector<Factor> enumerate_H(const DeformedGraph& g, Mode mode, std::uint64_t cap) {
    std::vector<Factor> out;
    for_each_factor(g, mode, std::nullopt, cap, [&](const Factor& f) { out.push_back(f); });
    return out;
}

std::vector<Factor> enumerate_H_pair(const DeformedGraph& g, Mode mode, VertexId l, VertexId m,
                                     std::uint64_t cap) {
    std::vector<Factor> out;
    for_each_factor(g, mode, std::make_pair(l, m), cap,
                    [&](const Factor& f) { out.push_back(f); });
    return out;
}

namespace {

Rational pow4(int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= Rational(4);
    return r;
}

IotaResult accumulate_family(const BoundaryGraph& g, Mode mode,
                             std::optional<std::pair<VertexId, VertexId>> pair,
                             std::uint64_t cap) {
    DeformedGraph dg{g};
    EdgeWeightTable table = weight_table(g, mode);
    IotaResult result;
    for_each_factor(dg, mode, pair, cap, [&](const Factor& f) {
        Poly term = factor_weight(f, table);
        if (mode == Mode::Q) {
            Rational scale = pow4(f.b1_noloop);
            if (pair && f.pair_distance % 2 != 0) scale = -scale;
            term = scale * term;
        }
        result.value += term;
        ++result.factor_count;
        ++result.class_histogram[{f.omega, static_cast<int>(f.loops.size()), f.b1_noloop}];
        ++result.term_classes[term];
    });
    return result;
}

}  // namespace

IotaResult iota1(const BoundaryGraph& g, Mode mode, std::uint64_t cap) {
    return accumulate_family(g, mode, std::nullopt, cap);
}

IotaResult iota2(const BoundaryGraph& g, Mode mode, VertexId l, VertexId m, std::uint64_t cap) {
    return accumulate_family(g, mode, std::make_pair(l, m), cap);
}

GreensMatrix greens_from_factors(const BoundaryGraph& g, Mode mode, std::uint64_t cap) {
    int n = g.interior_count();
    Poly denom = iota1(g, mode, cap).value;
    GreensMatrix out(n, std::vector<RationalFunction>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Poly numer = iota2(g, mode, g.vertex_at(i), g.vertex_at(j), cap).value;
            auto entry = RationalFunction::reduce(numer, denom);
            out[i][j] = entry;
            out[j][i] = entry;
        }
    }
    return out;
}

}  // namespace greenfn
