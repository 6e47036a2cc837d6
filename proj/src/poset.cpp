#include "posetreal/poset.hpp"

#include <algorithm>
#include <numeric>

#include "posetreal/aut.hpp"

namespace posetreal {

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges) {
    Graph g;
    g.n = n;
    for (auto& [u, v] : edges) {
        if (u == v) throw ValidationError("graph has a loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ValidationError("graph edge references invalid vertex");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);
    return g;
}

namespace {

// DFS cycle witness in the declared cover digraph.
std::vector<int> find_cycle(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<int> state(n, 0), parent(n, -1);
    for (int s = 0; s < n; ++s) {
        if (state[s]) continue;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int v = stack.back();
            if (state[v] == 0) {
                state[v] = 1;
                for (int w : adj[v]) {
                    if (state[w] == 1) {
                        std::vector<int> cycle = {w};
                        for (int x = v; x != w; x = parent[x]) cycle.push_back(x);
                        std::reverse(cycle.begin() + 1, cycle.end());
                        return cycle;
                    }
                    if (state[w] == 0) {
                        parent[w] = v;
                        stack.push_back(w);
                    }
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return {};
}

} // namespace

void Poset::finish() {
    int n = size();
    up_.assign(n, {});
    down_.assign(n, {});
    // cover (i,j): i<j with nothing strictly between
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!lt_.get(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k)
                if (lt_.get(i, k) && lt_.get(k, j)) cover = false;
            if (cover) {
                up_[i].push_back(j);
                down_[j].push_back(i);
            }
        }
    // heights bottom-up in order of |down_set|
    height_.assign(n, -1);
    std::vector<int> by_below(n);
    std::iota(by_below.begin(), by_below.end(), 0);
    std::sort(by_below.begin(), by_below.end(), [&](int a, int b) {
        int ca = 0, cb = 0;
        for (int k = 0; k < n; ++k) {
            ca += lt_.get(k, a);
            cb += lt_.get(k, b);
        }
        return ca < cb;
    });
    for (int x : by_below) {
        int h = 0;
        for (int y : down_[x]) h = std::max(h, height_[y] + 1);
        height_[x] = h;
    }
}

Poset Poset::from_covers(std::vector<Label> labels,
                         const std::vector<std::pair<int, int>>& covers) {
    int n = static_cast<int>(labels.size());
    std::vector<std::vector<int>> adj(n);
    BitMatrix m(n);
    for (auto [i, j] : covers) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw ValidationError("cover pair references unknown point");
        if (i == j) throw CycleError("cover relation is reflexive at point " + std::to_string(i), {i});
        adj[i].push_back(j);
        m.set(i, j);
    }
    auto cycle = find_cycle(n, adj);
    if (!cycle.empty()) {
        std::string msg = "declared covers contain a cycle:";
        for (int v : cycle) msg += " " + std::to_string(v);
        throw CycleError(msg, cycle);
    }
    Poset p;
    p.labels_ = std::move(labels);
    m.transitive_close();
    p.lt_ = std::move(m);
    p.finish();
    // flag declared pairs that were transitively implied
    std::vector<char> is_cover(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j : p.up_[i]) is_cover[static_cast<size_t>(i) * n + j] = 1;
    for (auto [i, j] : covers)
        if (!is_cover[static_cast<size_t>(i) * n + j]) p.redundant_declared_ = true;
    return p;
}

Poset Poset::from_closure(std::vector<Label> labels, BitMatrix lt) {
    int n = static_cast<int>(labels.size());
    if (lt.size() != n) throw ValidationError("closure matrix size mismatch");
    if (lt.any_diagonal()) throw ValidationError("strict order must be irreflexive");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (lt.get(i, j))
                for (int k = 0; k < n; ++k)
                    if (lt.get(j, k) && !lt.get(i, k))
                        throw ValidationError("relation is not transitive at (" +
                                              std::to_string(i) + "," + std::to_string(j) + "," +
                                              std::to_string(k) + ")");
    Poset p;
    p.labels_ = std::move(labels);
    p.lt_ = std::move(lt);
    p.finish();
    return p;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j : up_[i]) out.emplace_back(i, j);
    std::sort(out.begin(), out.end());
    return out;
}

int Poset::max_height() const {
    int m = 0;
    for (int h : height_) m = std::max(m, h);
    return size() ? m : 0;
}

int Poset::find(const Label& l) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == l) return i;
    return -1;
}

std::vector<int> down_set(const Poset& p, int x) {
    if (x < 0 || x >= p.size()) throw ValidationError("unknown point");
    std::vector<int> out;
    for (int y = 0; y < p.size(); ++y)
        if (p.less(y, x)) out.push_back(y);
    return out;
}

std::vector<int> up_set(const Poset& p, int x) {
    if (x < 0 || x >= p.size()) throw ValidationError("unknown point");
    std::vector<int> out;
    for (int y = 0; y < p.size(); ++y)
        if (p.less(x, y)) out.push_back(y);
    return out;
}

bool adjacent(const Poset& p, int x, int y) {
    if (x < 0 || y < 0 || x >= p.size() || y >= p.size()) throw ValidationError("unknown point");
    if (x == y) throw ValidationError("adjacency needs two distinct points");
    for (int z = 0; z < p.size(); ++z)
        if (p.less(z, x) && p.less(z, y)) return true;
    return false;
}

Poset ordinal_sum(const Poset& p1, const Poset& p2) {
    int n1 = p1.size(), n2 = p2.size(), n = n1 + n2;
    std::vector<Label> labels;
    labels.reserve(n);
    for (int i = 0; i < n1; ++i) labels.push_back(p1.label(i));
    for (int i = 0; i < n2; ++i) labels.push_back(p2.label(i));
    BitMatrix m(n);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            if (p1.less(i, j)) m.set(i, j);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j)
            if (p2.less(i, j)) m.set(n1 + i, n1 + j);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) m.set(i, n1 + j);
    return Poset::from_closure(std::move(labels), std::move(m));
}

Poset face_poset(const Graph& g) {
    std::vector<Label> labels;
    for (int v = 0; v < g.n; ++v) labels.push_back({"v" + std::to_string(v), -1});
    std::vector<std::pair<int, int>> covers;
    int idx = g.n;
    for (auto [u, v] : g.edges) {
        labels.push_back({"e" + std::to_string(u) + "-" + std::to_string(v), -1});
        covers.emplace_back(u, idx);
        covers.emplace_back(v, idx);
        ++idx;
    }
    return Poset::from_covers(std::move(labels), covers);
}

Poset bounded(const Poset& p) {
    int n = p.size();
    std::vector<Label> labels;
    labels.push_back({"bot", -1});
    for (int i = 0; i < n; ++i) labels.push_back(p.label(i));
    labels.push_back({"top", -1});
    BitMatrix m(n + 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.less(i, j)) m.set(i + 1, j + 1);
    for (int i = 1; i <= n; ++i) {
        m.set(0, i);
        m.set(i, n + 1);
    }
    m.set(0, n + 1);
    return Poset::from_closure(std::move(labels), std::move(m));
}

std::optional<std::vector<int>> are_isomorphic(const Poset& p1, const Poset& p2) {
    if (p1.size() != p2.size()) return std::nullopt;
    CanonicalForm c1 = canonical_form(p1);
    CanonicalForm c2 = canonical_form(p2);
    if (c1.cert != c2.cert) return std::nullopt;
    // c1.order[k] and c2.order[k] occupy the same canonical position
    std::vector<int> map(p1.size());
    for (int k = 0; k < p1.size(); ++k) map[c1.order[k]] = c2.order[k];
    return map;
}

} // namespace posetreal
