#include "qclaw/exchange_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace qclaw {

QuantumSeed apply_path(const QuantumSeed& s, const MutationPath& path) {
    QuantumSeed cur = s;
    for (const auto& m : path) {
        if (auto* mm = std::get_if<MutateMove>(&m)) {
            cur = mutate_seed(cur, mm->vertex);
        } else {
            cur = relabel_seed(cur, std::get<PermuteMove>(m).sigma);
        }
    }
    return cur;
}

std::vector<int> mutation_sequence(const MutationPath& path) {
    std::vector<int> out;
    for (const auto& m : path)
        if (auto* mm = std::get_if<MutateMove>(&m)) out.push_back(mm->vertex);
    return out;
}

std::string variable_key(const QuantumSeed& s, int pos) {
    return s.vars[pos].key();
}

SeedTarget target_of(const QuantumSeed& s, const VertexKeyFn& key) {
    SeedTarget t{s.index, s.B, s.Lambda, {}};
    for (int p = 0; p < s.size(); ++p) t.keys.push_back(key(s, p));
    return t;
}

namespace {

std::vector<std::string> keys_of(const QuantumSeed& s, const VertexKeyFn& key) {
    std::vector<std::string> k;
    for (int p = 0; p < s.size(); ++p) k.push_back(key(s, p));
    return k;
}

bool exchange_data_equal(const QuantumSeed& s, const SeedTarget& t) {
    return s.index == t.index && s.B == t.B && s.Lambda == t.Lambda;
}

std::string matrix_key(const IntMatrix& m, const std::vector<int>& rowOrder, const std::vector<int>& colOrder) {
    std::string s;
    for (int r : rowOrder) {
        for (int c : colOrder) s += std::to_string(m(r, c)) + ',';
        s += ';';
    }
    return s;
}

/// Exact identity of a seed, optionally up to relabeling.
std::string seed_key(const QuantumSeed& s, const std::vector<std::string>& keys, bool moduloPermutation) {
    const int n = s.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (moduloPermutation) {
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (s.index.is_frozen(a) != s.index.is_frozen(b)) return s.index.is_frozen(b);
            return keys[a] < keys[b];
        });
        for (int i = 0; i + 1 < n; ++i)
            if (keys[order[i]] == keys[order[i + 1]]) {
                std::iota(order.begin(), order.end(), 0);
                break;
            }
    }
    std::vector<int> cols;
    for (int p : order)
        if (!s.index.is_frozen(p)) cols.push_back(s.index.column(p));
    std::string out;
    for (int p : order) out += keys[p] + '#';
    out += matrix_key(s.B, order, cols);
    if (s.Lambda) out += matrix_key(*s.Lambda, order, order);
    return out;
}

} // namespace

std::string seed_identity(const QuantumSeed& s, bool moduloPermutation) {
    return seed_key(s, keys_of(s, variable_key), moduloPermutation);
}

std::optional<Permutation> match_up_to_permutation(const QuantumSeed& s, const std::vector<std::string>& keys,
                                                   const SeedTarget& target) {
    const int n = s.size();
    if (n != target.index.size()) return std::nullopt;
    std::unordered_map<std::string, int> where;
    for (int t = 0; t < n; ++t)
        if (!where.emplace(target.keys[t], t).second) return std::nullopt;
    Permutation sigma;
    std::set<int> used;
    for (int p = 0; p < n; ++p) {
        auto it = where.find(keys[p]);
        if (it == where.end() || !used.insert(it->second).second) return std::nullopt;
        if (s.index.is_frozen(p) != target.index.is_frozen(it->second)) return std::nullopt;
        sigma[s.index.label(p)] = target.index.label(it->second);
    }
    if (s.index.labels() != target.index.labels()) return std::nullopt;
    QuantumSeed moved = relabel_seed(s, sigma);
    if (!exchange_data_equal(moved, target)) return std::nullopt;
    return sigma;
}

std::optional<MutationPath> search_path(const QuantumSeed& from, const SeedTarget& to, const VertexKeyFn& key,
                                        int maxDepth, bool usePermutations) {
    struct Node {
        QuantumSeed seed;
        std::vector<std::string> keys;
        MutationPath path;
        int last;
    };
    auto check = [&](const Node& node) -> std::optional<MutationPath> {
        if (usePermutations) {
            auto sigma = match_up_to_permutation(node.seed, node.keys, to);
            if (!sigma) return std::nullopt;
            MutationPath p = node.path;
            bool identity = std::all_of(sigma->begin(), sigma->end(), [](auto& kv) { return kv.first == kv.second; });
            if (!identity) p.push_back(PermuteMove{*sigma});
            return p;
        }
        if (node.keys == to.keys && exchange_data_equal(node.seed, to)) return node.path;
        return std::nullopt;
    };
    std::deque<Node> queue;
    std::unordered_set<std::string> seen;
    Node root{from, keys_of(from, key), {}, 0};
    seen.insert(seed_key(root.seed, root.keys, usePermutations));
    queue.push_back(std::move(root));
    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        if (auto p = check(node)) return p;
        if (static_cast<int>(node.path.size()) >= maxDepth) continue;
        for (int k : node.seed.index.unfrozen_labels()) {
            if (k == node.last && !node.path.empty()) continue;
            Node next{mutate_seed(node.seed, k), {}, node.path, k};
            next.keys = keys_of(next.seed, key);
            next.path.push_back(MutateMove{k});
            if (!seen.insert(seed_key(next.seed, next.keys, usePermutations)).second) continue;
            queue.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

std::optional<MutationPath> find_mutation_path(const QuantumSeed& a, const QuantumSeed& b, int maxDepth,
                                               bool usePermutations) {
    if (!same_context(a.reference(), b.reference()))
        throw Error("ContextMismatch", "seeds must share a reference torus");
    return search_path(a, target_of(b), variable_key, maxDepth, usePermutations);
}

ExchangeGraph enumerate_exchange_graph(const QuantumSeed& s, int maxSeeds, bool moduloPermutation) {
    ExchangeGraph g;
    std::unordered_set<std::string> seen;
    auto keyOf = [&](const QuantumSeed& x) { return seed_key(x, keys_of(x, variable_key), moduloPermutation); };
    seen.insert(keyOf(s));
    g.seeds.push_back(s);
    g.parent.push_back(-1);
    g.via.push_back(0);
    g.depth.push_back(0);
    if (maxSeeds < 1) {
        g.seeds.clear();
        g.truncated = true;
        return g;
    }
    for (size_t i = 0; i < g.seeds.size(); ++i) {
        for (int k : g.seeds[i].index.unfrozen_labels()) {
            if (g.parent[i] >= 0 && g.via[i] == k) continue;
            QuantumSeed next = mutate_seed(g.seeds[i], k);
            std::string key = keyOf(next);
            if (seen.count(key)) continue;
            if (static_cast<int>(g.seeds.size()) >= maxSeeds) {
                g.truncated = true;
                return g;
            }
            seen.insert(key);
            g.seeds.push_back(std::move(next));
            g.parent.push_back(static_cast<int>(i));
            g.via.push_back(k);
            g.depth.push_back(g.depth[i] + 1);
        }
    }
    return g;
}

size_t count_clusters(const std::vector<QuantumSeed>& seeds) {
    std::set<std::vector<std::string>> clusters;
    for (const auto& s : seeds) {
        std::vector<std::string> keys;
        for (const auto& v : s.vars) keys.push_back(v.key());
        std::sort(keys.begin(), keys.end());
        clusters.insert(keys);
    }
    return clusters.size();
}

std::optional<GreenToRed> find_green_to_red(const QuantumSeed& s, int maxDepth) {
    QuantumSeed init = with_own_torus(s);
    DominanceOrder order(init.B);
    const auto& uf = init.index.unfrozen();
    auto try_seed = [&](const QuantumSeed& x) -> std::optional<std::map<int, int>> {
        std::map<int, int> sigma;
        std::set<int> used;
        for (int k : uf) {
            for (int p : uf) {
                if (used.count(p)) continue;
                LatticeVector d = degree_and_pointedness(x.vars[p], order).degree;
                bool ok = true;
                for (int u : uf) ok = ok && d(u) == (u == k ? -1 : 0);
                if (ok) {
                    sigma[init.index.label(k)] = init.index.label(p);
                    used.insert(p);
                    break;
                }
            }
            if (!sigma.count(init.index.label(k))) return std::nullopt;
        }
        return sigma;
    };
    struct Node {
        QuantumSeed seed;
        MutationPath path;
    };
    std::deque<Node> queue{{init, {}}};
    std::unordered_set<std::string> seen{seed_key(init, keys_of(init, variable_key), true)};
    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        if (auto sigma = try_seed(node.seed)) return GreenToRed{node.path, *sigma};
        if (static_cast<int>(node.path.size()) >= maxDepth) continue;
        for (int k : node.seed.index.unfrozen_labels()) {
            Node next{mutate_seed(node.seed, k), node.path};
            next.path.push_back(MutateMove{k});
            if (!seen.insert(seed_key(next.seed, keys_of(next.seed, variable_key), true)).second) continue;
            queue.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

} // namespace qclaw
