#include "spanlab/layered_instance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "spanlab/shortest_paths.hpp"

namespace spanlab {

int LayeredBaseGraph::out_of(int u, int a, int b) const {
    int cur = u;
    for (int t = 0; t < 2 * l; ++t) {
        int label = (t % 2 == 0) ? a : b;
        cur = forward[size_t(t)][size_t(cur)][size_t(label)];
        if (cur == -1) return -1;
    }
    return cur;
}

std::vector<int> LayeredBaseGraph::alternating_walk(int u, int a, int b) const {
    std::vector<int> walk{u};
    int cur = u;
    for (int t = 0; t < 2 * l; ++t) {
        int label = (t % 2 == 0) ? a : b;
        cur = forward[size_t(t)][size_t(cur)][size_t(label)];
        if (cur == -1) return {};
        walk.push_back(cur);
    }
    return walk;
}

WeightedGraph LayeredBaseGraph::to_graph() const {
    std::vector<Edge> edges;
    for (int t = 0; t < 2 * l; ++t)
        for (int u = 0; u < p; ++u)
            for (int a = 0; a < labels; ++a) {
                int v = forward[size_t(t)][size_t(u)][size_t(a)];
                if (v != -1) edges.push_back({global_id(t, u), global_id(t + 1, v), 1.0});
            }
    return WeightedGraph(layer_count() * p, edges);
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

LayeredBaseGraph load_base_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    LayeredBaseGraph b;
    bool have_header = false;
    std::vector<std::array<int, 4>> raw_edges;
    int max_label = -1;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        if (!have_header) {
            if (!(ls >> b.p >> b.l)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": expected header \"p l\"");
            }
            if (b.p < 1 || b.l < 1)
                throw std::runtime_error("base graph needs p >= 1 and l >= 1 (at least 3 layers)");
            have_header = true;
            continue;
        }
        int layer, u, a, v;
        if (!(ls >> layer >> u >> a >> v)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": expected edge \"i u a v\"");
        }
        if (layer < 0 || layer >= 2 * b.l)
            throw std::runtime_error("line " + std::to_string(lineno) + ": layer out of range");
        if (u < 0 || u >= b.p || v < 0 || v >= b.p)
            throw std::runtime_error("line " + std::to_string(lineno) + ": vertex out of range");
        if (a < 0) throw std::runtime_error("line " + std::to_string(lineno) + ": negative label");
        max_label = std::max(max_label, a);
        raw_edges.push_back({layer, u, a, v});
    }
    if (!have_header) throw std::runtime_error("empty base-graph document");
    b.labels = max_label + 1;
    if (b.labels < 1) throw std::runtime_error("base graph has no labeled edges");
    b.forward.assign(size_t(2 * b.l),
                     std::vector<std::vector<int>>(size_t(b.p), std::vector<int>(size_t(b.labels), -1)));
    for (auto [t, u, a, v] : raw_edges) {
        if (b.forward[size_t(t)][size_t(u)][size_t(a)] != -1)
            throw std::runtime_error("duplicate labeled edge at layer " + std::to_string(t));
        b.forward[size_t(t)][size_t(u)][size_t(a)] = v;
    }
    return b;
}

LayeredBaseGraph load_base_graph_file(const std::string& path) {
    return load_base_graph(read_file(path));
}

std::string serialize_base_graph(const LayeredBaseGraph& b) {
    std::string out = std::to_string(b.p) + " " + std::to_string(b.l) + "\n";
    for (int t = 0; t < 2 * b.l; ++t) {
        out += "# layer " + std::to_string(t) + " -> " + std::to_string(t + 1) + "\n";
        for (int u = 0; u < b.p; ++u)
            for (int a = 0; a < b.labels; ++a) {
                int v = b.forward[size_t(t)][size_t(u)][size_t(a)];
                if (v != -1)
                    out += std::to_string(t) + " " + std::to_string(u) + " " + std::to_string(a) +
                           " " + std::to_string(v) + "\n";
            }
    }
    return out;
}

BaseGraphReport validate_base_graph(const LayeredBaseGraph& b) {
    BaseGraphReport rep;
    if (b.l < 1) {
        rep.failures.push_back("needs at least 3 layers (l >= 1)");
        return rep;
    }
    rep.layering_ok = true;  // representation is layered by construction

    rep.determinism_ok = true;
    for (int t = 0; t < 2 * b.l && rep.determinism_ok; ++t)
        for (int u = 0; u < b.p && rep.determinism_ok; ++u) {
            std::vector<char> hit(size_t(b.p), 0);
            for (int a = 0; a < b.labels; ++a) {
                int v = b.forward[size_t(t)][size_t(u)][size_t(a)];
                if (v == -1) {
                    rep.determinism_ok = false;
                    rep.failures.push_back("missing forward edge: layer " + std::to_string(t) +
                                           " vertex " + std::to_string(u) + " label " +
                                           std::to_string(a));
                    break;
                }
                if (hit[size_t(v)]) {
                    rep.determinism_ok = false;
                    rep.failures.push_back("two labels share a target: layer " + std::to_string(t) +
                                           " vertex " + std::to_string(u));
                    break;
                }
                hit[size_t(v)] = 1;
            }
        }

    if (rep.determinism_ok) {
        rep.pairs_ok = true;
        WeightedGraph g = b.to_graph();
        // walks with the same label pair must be vertex-disjoint across inputs
        for (int a = 0; a < b.labels && rep.pairs_ok; ++a)
            for (int bb = 0; bb < b.labels && rep.pairs_ok; ++bb) {
                std::vector<std::vector<char>> used(size_t(2 * b.l + 1),
                                                    std::vector<char>(size_t(b.p), 0));
                for (int u = 0; u < b.p; ++u) {
                    auto walk = b.alternating_walk(u, a, bb);
                    if (walk.empty()) {
                        rep.pairs_ok = false;
                        rep.failures.push_back("alternating walk stuck");
                        break;
                    }
                    for (int t = 0; t <= 2 * b.l; ++t) {
                        if (used[size_t(t)][size_t(walk[size_t(t)])]) {
                            rep.pairs_ok = false;
                            rep.failures.push_back(
                                "walks for labels (" + std::to_string(a) + "," + std::to_string(bb) +
                                ") collide at layer " + std::to_string(t));
                            break;
                        }
                        used[size_t(t)][size_t(walk[size_t(t)])] = 1;
                    }
                    if (!rep.pairs_ok) break;
                }
            }
        // each walk must be the unique shortest path between its endpoints
        std::vector<std::vector<char>> pair_seen(size_t(b.p), std::vector<char>(size_t(b.p), 0));
        for (int u = 0; u < b.p && rep.pairs_ok; ++u) {
            PathCount pc = count_shortest_paths(g, b.global_id(0, u));
            for (int a = 0; a < b.labels && rep.pairs_ok; ++a)
                for (int bb = 0; bb < b.labels && rep.pairs_ok; ++bb) {
                    int v = b.out_of(u, a, bb);
                    if (v == -1) {
                        rep.pairs_ok = false;
                        rep.failures.push_back("alternating walk stuck");
                        break;
                    }
                    Vertex gv = b.global_id(2 * b.l, v);
                    if (pc.dist[size_t(gv)] != 2 * b.l) {
                        rep.pairs_ok = false;
                        rep.failures.push_back("input " + std::to_string(u) + " labels (" +
                                               std::to_string(a) + "," + std::to_string(bb) +
                                               "): walk is not a shortest path");
                        break;
                    }
                    if (pc.count[size_t(gv)] != 1) {
                        rep.pairs_ok = false;
                        rep.failures.push_back("input " + std::to_string(u) + " labels (" +
                                               std::to_string(a) + "," + std::to_string(bb) +
                                               "): a second shortest path exists");
                        break;
                    }
                    if (pair_seen[size_t(u)][size_t(v)]) {
                        rep.pairs_ok = false;
                        rep.failures.push_back("two label pairs map input " + std::to_string(u) +
                                               " to the same output");
                        break;
                    }
                    pair_seen[size_t(u)][size_t(v)] = 1;
                    ++rep.pair_count;
                }
        }
    }
    rep.label_bound_ok = double(b.labels) <= std::sqrt(double(b.p)) / 2.0;
    rep.ok = rep.layering_ok && rep.determinism_ok && rep.pairs_ok;
    return rep;
}

// --- exhaustive search over per-transition label bijections --------------------

namespace {

struct SearchState {
    int p, l, labels;
    uint64_t steps = 0;
    uint64_t max_steps;
    // permutation choice per (transition, label)
    std::vector<std::vector<std::vector<int>>> choice;  // [t][a] = permutation of [p]
    std::vector<std::vector<int>> perms;                // all permutations of [p]
};

bool transition_ok(const SearchState& st, int t) {
    // distinct targets per source across labels
    for (int u = 0; u < st.p; ++u) {
        std::vector<char> hit(size_t(st.p), 0);
        for (int a = 0; a < st.labels; ++a) {
            int v = st.choice[size_t(t)][size_t(a)][size_t(u)];
            if (hit[size_t(v)]) return false;
            hit[size_t(v)] = 1;
        }
    }
    return true;
}

LayeredBaseGraph assemble(const SearchState& st) {
    LayeredBaseGraph b;
    b.p = st.p;
    b.l = st.l;
    b.labels = st.labels;
    b.forward.assign(size_t(2 * st.l),
                     std::vector<std::vector<int>>(size_t(st.p), std::vector<int>(size_t(st.labels))));
    for (int t = 0; t < 2 * st.l; ++t)
        for (int u = 0; u < st.p; ++u)
            for (int a = 0; a < st.labels; ++a)
                b.forward[size_t(t)][size_t(u)][size_t(a)] = st.choice[size_t(t)][size_t(a)][size_t(u)];
    return b;
}

bool dfs(SearchState& st, int t, int a, LayeredBaseGraph& out) {
    if (t == 2 * st.l) {
        LayeredBaseGraph cand = assemble(st);
        if (validate_base_graph(cand).ok) {
            out = cand;
            return true;
        }
        return false;
    }
    int nt = (a + 1 == st.labels) ? t + 1 : t;
    int na = (a + 1 == st.labels) ? 0 : a + 1;
    for (const auto& perm : st.perms) {
        if (++st.steps > st.max_steps) return false;
        st.choice[size_t(t)][size_t(a)] = perm;
        if (a + 1 == st.labels && !transition_ok(st, t)) continue;
        if (dfs(st, nt, na, out)) return true;
    }
    return false;
}

}  // namespace

std::optional<LayeredBaseGraph> search_base_graph(int p, int l, int labels, uint64_t max_steps) {
    if (p < 1 || l < 1 || labels < 1) throw std::invalid_argument("search: bad parameters");
    // property 3 forces the label maps to be bijections, so searching
    // permutations loses no generality
    SearchState st;
    st.p = p;
    st.l = l;
    st.labels = labels;
    st.max_steps = max_steps;
    std::vector<int> base(static_cast<size_t>(p));
    std::iota(base.begin(), base.end(), 0);
    std::vector<int> perm = base;
    do {
        st.perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    st.choice.assign(size_t(2 * l),
                     std::vector<std::vector<int>>(size_t(labels), base));
    LayeredBaseGraph out;
    if (dfs(st, 0, 0, out)) return out;
    return std::nullopt;
}

// --- recursive instances ---------------------------------------------------------

namespace {

// working representation during assembly
struct Assembled {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<char> critical;
    std::vector<int> inputs, outputs;               // local vertex ids
    std::vector<std::array<int, 4>> pattern_pairs;  // (in idx, out idx, label a, label b)
};

Assembled bipartite_base(int q) {
    Assembled a;
    a.n = 2 * q;
    for (int i = 0; i < q; ++i) a.inputs.push_back(i);
    for (int j = 0; j < q; ++j) a.outputs.push_back(q + j);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            a.edges.push_back({Vertex(i), Vertex(q + j), 1.0});
            a.critical.push_back(1);
            a.pattern_pairs.push_back({i, j, -1, -1});
        }
    return a;
}

Assembled wrap(const LayeredBaseGraph& base, const Assembled& inner, double edge_weight) {
    if (int(inner.inputs.size()) != base.labels || int(inner.outputs.size()) != base.labels)
        throw std::invalid_argument(
            "recursive build: inner instance must have one port per label of the outer base");
    Assembled a;
    const int p = base.p, l = base.l;
    const int per_copy = inner.n;
    const int copies_per_layer = p;
    auto copy_offset = [&](int layer, int idx) {
        // internal layers are 1 .. 2l-1
        return 2 * p + ((layer - 1) * copies_per_layer + idx) * per_copy;
    };
    a.n = 2 * p + (2 * l - 1) * p * per_copy;
    for (int i = 0; i < p; ++i) a.inputs.push_back(i);
    for (int j = 0; j < p; ++j) a.outputs.push_back(p + j);

    // inner copies
    for (int layer = 1; layer <= 2 * l - 1; ++layer)
        for (int idx = 0; idx < p; ++idx) {
            int off = copy_offset(layer, idx);
            for (size_t e = 0; e < inner.edges.size(); ++e) {
                const Edge& ie = inner.edges[e];
                a.edges.push_back({Vertex(ie.u + off), Vertex(ie.v + off), ie.w});
                a.critical.push_back(inner.critical[e]);
            }
        }
    // connecting edges, following the even/odd port rule
    for (int t = 0; t < 2 * l; ++t)
        for (int u = 0; u < p; ++u)
            for (int lab = 0; lab < base.labels; ++lab) {
                int v = base.forward[size_t(t)][size_t(u)][size_t(lab)];
                if (v == -1) throw std::invalid_argument("recursive build: base not validated");
                Vertex from, to;
                if (t % 2 == 0) {
                    from = (t == 0) ? Vertex(u)
                                    : Vertex(copy_offset(t, u) + inner.inputs[size_t(lab)]);
                    to = Vertex(copy_offset(t + 1, v) + inner.inputs[size_t(lab)]);
                } else {
                    from = Vertex(copy_offset(t, u) + inner.outputs[size_t(lab)]);
                    to = (t + 1 == 2 * l) ? Vertex(p + v)
                                          : Vertex(copy_offset(t + 1, v) + inner.outputs[size_t(lab)]);
                }
                a.edges.push_back({from, to, edge_weight});
                a.critical.push_back(0);
            }
    // pattern pairs: (u, out(u,a,b)) whenever (a,b) is a pattern pair of the inner level
    std::vector<std::vector<char>> inner_has(size_t(base.labels),
                                             std::vector<char>(size_t(base.labels), 0));
    for (const auto& pp : inner.pattern_pairs) inner_has[size_t(pp[0])][size_t(pp[1])] = 1;
    std::vector<std::vector<char>> seen(size_t(p), std::vector<char>(size_t(p), 0));
    for (int u = 0; u < p; ++u)
        for (int la = 0; la < base.labels; ++la)
            for (int lb = 0; lb < base.labels; ++lb) {
                if (!inner_has[size_t(la)][size_t(lb)]) continue;
                int v = base.out_of(u, la, lb);
                if (v == -1) continue;
                if (seen[size_t(u)][size_t(v)])
                    throw std::logic_error("recursive build: duplicate pattern pair");
                seen[size_t(u)][size_t(v)] = 1;
                a.pattern_pairs.push_back({u, v, la, lb});
            }
    return a;
}

}  // namespace

RecursiveInstance build_recursive(const std::vector<LayeredBaseGraph>& bases, int kappa, int p0) {
    if (kappa < 0) throw std::invalid_argument("kappa must be >= 0");
    if (kappa > 0 && int(bases.size()) != kappa)
        throw std::invalid_argument("need exactly kappa base graphs");
    RecursiveInstance inst;
    inst.kappa = kappa;

    Assembled cur;
    if (kappa == 0) {
        if (p0 < 1) throw std::invalid_argument("kappa = 0 needs a port count p0");
        cur = bipartite_base(p0);
        inst.l = 0;
        inst.top_p = p0;
    } else {
        inst.l = bases[0].l;
        inst.top_p = bases[0].p;
        for (const auto& b : bases)
            if (b.l != inst.l)
                throw std::invalid_argument("all base graphs in the chain must share l");
        cur = bipartite_base(bases.back().labels);
        for (int idx = kappa - 1; idx >= 0; --idx) {
            double w = std::pow(double(2 * inst.l - 1), double(kappa - idx));
            cur = wrap(bases[size_t(idx)], cur, w);
        }
    }
    inst.graph = WeightedGraph(cur.n, cur.edges);
    // edge collapse must not occur: the construction emits each unordered pair once
    if (inst.graph.m() != int(cur.edges.size()))
        throw std::logic_error("recursive build produced parallel edges");
    inst.critical.assign(size_t(inst.graph.m()), 0);
    for (size_t e = 0; e < cur.edges.size(); ++e) {
        auto id = inst.graph.find_edge(cur.edges[e].u, cur.edges[e].v);
        inst.critical[size_t(*id)] = cur.critical[e];
    }
    for (int i : cur.inputs) inst.input_ports.push_back(Vertex(i));
    for (int j : cur.outputs) inst.output_ports.push_back(Vertex(j));
    for (const auto& pp : cur.pattern_pairs)
        inst.pairs.push_back({Vertex(cur.inputs[size_t(pp[0])]), Vertex(cur.outputs[size_t(pp[1])]),
                              pp[2], pp[3]});
    int64_t weight_unit = 1;
    for (int i = 0; i < kappa; ++i) weight_unit *= (2 * inst.l - 1);
    inst.expected_distance = int64_t(2 * inst.l * kappa + 1) * weight_unit;
    return inst;
}

size_t RecursiveInstance::critical_count() const {
    size_t c = 0;
    for (char f : critical) c += size_t(f);
    return c;
}

RecursiveVerifyReport verify_recursive(const RecursiveInstance& inst, bool check_deletions) {
    RecursiveVerifyReport rep;
    rep.expected_distance = inst.expected_distance;
    rep.distances_ok = rep.uniqueness_ok = rep.disjoint_ok = rep.critical_count_ok = true;
    const WeightedGraph& g = inst.graph;

    int64_t per_pair_expected = 1;
    for (int i = 0; i < inst.kappa; ++i) per_pair_expected *= (2 * inst.l - 1);
    if (inst.kappa == 0) per_pair_expected = 1;

    std::vector<int> critical_owner(size_t(g.m()), -1);
    for (size_t pi = 0; pi < inst.pairs.size(); ++pi) {
        const InstancePair& pr = inst.pairs[pi];
        ++rep.pairs_checked;
        PathCount pc = count_shortest_paths(g, pr.u);
        if (pc.dist[size_t(pr.v)] != inst.expected_distance) {
            rep.distances_ok = false;
            rep.failure = "pair (" + std::to_string(pr.u) + "," + std::to_string(pr.v) +
                          ") has distance " + std::to_string(pc.dist[size_t(pr.v)]);
            break;
        }
        if (pc.count[size_t(pr.v)] != 1) {
            rep.uniqueness_ok = false;
            rep.failure = "pair (" + std::to_string(pr.u) + "," + std::to_string(pr.v) +
                          ") has " + std::to_string(pc.count[size_t(pr.v)]) + " shortest paths";
            break;
        }
        IntSPTree t = dijkstra_int(g, pr.u);
        PathRecord path = t.path_to(pr.v);
        int64_t crit_here = 0;
        for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
            auto e = g.find_edge(path.vertices[i], path.vertices[i + 1]);
            if (!inst.critical[size_t(*e)]) continue;
            ++crit_here;
            if (critical_owner[size_t(*e)] != -1 && critical_owner[size_t(*e)] != int(pi)) {
                rep.disjoint_ok = false;
                rep.failure = "critical edge shared by pairs " +
                              std::to_string(critical_owner[size_t(*e)]) + " and " +
                              std::to_string(pi);
            }
            critical_owner[size_t(*e)] = int(pi);
        }
        if (crit_here != per_pair_expected) {
            rep.critical_count_ok = false;
            rep.failure = "pair " + std::to_string(pi) + " crosses " + std::to_string(crit_here) +
                          " critical edges, expected " + std::to_string(per_pair_expected);
        }
        if (!rep.disjoint_ok || !rep.critical_count_ok) break;

        if (check_deletions) {
            int64_t min_raise = 2 * per_pair_expected;  // 2 (2l-1)^kappa
            for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
                auto e = g.find_edge(path.vertices[i], path.vertices[i + 1]);
                if (!inst.critical[size_t(*e)]) continue;
                IntSPTree td = dijkstra_int(g, pr.u, *e);
                int64_t nd = td.reached(pr.v) ? td.dist[size_t(pr.v)]
                                              : std::numeric_limits<int64_t>::max();
                if (nd != std::numeric_limits<int64_t>::max() &&
                    nd < inst.expected_distance + min_raise) {
                    rep.deletion_ok = false;
                    rep.failure = "deleting a critical edge of pair " + std::to_string(pi) +
                                  " only raises its distance to " + std::to_string(nd);
                }
            }
            if (!rep.deletion_ok) break;
        }
    }

    double upper = 2.0 * std::pow(double(2 * std::max(1, inst.l)), double(inst.kappa)) *
                   std::pow(double(inst.top_p), 2.0 - std::pow(0.5, double(inst.kappa)));
    rep.vertex_bound_ok = double(g.n()) <= upper + 1e-9;
    if (inst.kappa >= 1 && !inst.pairs.empty()) {
        double ratio = double(inst.top_p) * double(inst.top_p) / double(inst.pairs.size());
        rep.xi_hat = std::pow(ratio, 1.0 / double(2 * inst.kappa));
    }
    rep.ok = rep.distances_ok && rep.uniqueness_ok && rep.disjoint_ok && rep.critical_count_ok &&
             rep.vertex_bound_ok && rep.deletion_ok;
    return rep;
}

}  // namespace spanlab
