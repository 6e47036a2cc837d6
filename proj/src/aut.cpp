#include "posetreal/aut.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>

namespace posetreal {

Perm identity_perm(int degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose_perms(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
    return r;
}

Perm inverse_perm(const Perm& a) {
    Perm r(a.size());
    for (size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<int>(x);
    return r;
}

bool preserves_order(const Poset& p, const Perm& perm) {
    int n = p.size();
    if (static_cast<int>(perm.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int x : perm) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = 1;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.less(i, j) != p.less(perm[i], perm[j])) return false;
    return true;
}

std::vector<int> refine_colors(const Poset& p) {
    int n = p.size();
    if (n == 0) return {};
    std::vector<std::vector<int>> sig(n);
    for (int x = 0; x < n; ++x)
        sig[x] = {p.height_of(x), static_cast<int>(p.lower_covers(x).size()),
                  static_cast<int>(p.upper_covers(x).size())};
    std::vector<int> colors(n, 0);
    size_t ncolors = 0;
    while (true) {
        std::map<std::vector<int>, int> ids;
        for (int x = 0; x < n; ++x) ids.emplace(sig[x], 0);
        int next = 0;
        for (auto& [k, v] : ids) v = next++; // dense ids in lex order: invariant
        for (int x = 0; x < n; ++x) colors[x] = ids.at(sig[x]);
        if (ids.size() == ncolors || ids.size() == static_cast<size_t>(n)) break;
        ncolors = ids.size();
        for (int x = 0; x < n; ++x) {
            std::vector<int>& s = sig[x];
            s.clear();
            s.push_back(colors[x]);
            std::vector<int> lo, hi;
            for (int y : p.lower_covers(x)) lo.push_back(colors[y]);
            for (int y : p.upper_covers(x)) hi.push_back(colors[y]);
            std::sort(lo.begin(), lo.end());
            std::sort(hi.begin(), hi.end());
            s.push_back(-1);
            s.insert(s.end(), lo.begin(), lo.end());
            s.push_back(-1);
            s.insert(s.end(), hi.begin(), hi.end());
        }
    }
    return colors;
}

// ---------------------------------------------------------------------------
// Canonical form: minimum closure-matrix certificate over all orderings that
// list points by non-decreasing refined color. Prefix-pruned backtracking;
// when a branch's prefix beats the incumbent, the incumbent is discarded
// (every leaf of that branch is smaller than it).
// ---------------------------------------------------------------------------

namespace {

struct CanonSearch {
    const Poset& p;
    int n;
    std::vector<int> colors;
    std::vector<int> cur;
    std::vector<uint8_t> bits;
    std::vector<char> used;
    std::vector<int> best_order;
    std::vector<uint8_t> best;
    bool have_best = false;

    explicit CanonSearch(const Poset& poset) : p(poset), n(poset.size()) {
        colors = refine_colors(p);
        used.assign(n, 0);
    }

    void rec() {
        int pos = static_cast<int>(cur.size());
        if (pos == n) {
            if (!have_best || bits < best) {
                best = bits;
                best_order = cur;
                have_best = true;
            }
            return;
        }
        int minc = -1;
        for (int x = 0; x < n; ++x)
            if (!used[x] && (minc < 0 || colors[x] < minc)) minc = colors[x];
        size_t base = bits.size();
        for (int x = 0; x < n; ++x) {
            if (used[x] || colors[x] != minc) continue;
            for (int i = 0; i < pos; ++i) bits.push_back(p.less(cur[i], x) ? 1 : 0);
            for (int i = 0; i < pos; ++i) bits.push_back(p.less(x, cur[i]) ? 1 : 0);
            bool prune = false;
            if (have_best) {
                int cmp = 0;
                for (size_t t = base; t < bits.size(); ++t) {
                    if (bits[t] != best[t]) {
                        cmp = bits[t] < best[t] ? -1 : 1;
                        break;
                    }
                }
                if (cmp > 0)
                    prune = true;
                else if (cmp < 0) {
                    // whole subtree beats the incumbent
                    have_best = false;
                    best.clear();
                }
            }
            if (!prune) {
                used[x] = 1;
                cur.push_back(x);
                rec();
                cur.pop_back();
                used[x] = 0;
            }
            bits.resize(base);
        }
    }
};

} // namespace

CanonicalForm canonical_form(const Poset& p) {
    CanonSearch s(p);
    s.rec();
    return CanonicalForm{std::move(s.best_order), std::move(s.best)};
}

// ---------------------------------------------------------------------------
// Automorphism search
// ---------------------------------------------------------------------------

namespace {

struct AutSearch {
    const Poset& p;
    int n;
    std::vector<int> colors;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline = false;
    long long ticks = 0;

    AutSearch(const Poset& poset, const AutOptions& opts) : p(poset), n(poset.size()) {
        colors = refine_colors(p);
        if (opts.timeout_ms > 0) {
            has_deadline = true;
            deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(opts.timeout_ms);
        }
    }

    void tick() {
        if (has_deadline && (++ticks & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            throw TimeoutError("automorphism search timed out");
    }

    bool consistent(const std::vector<int>& m, const std::vector<int>& assigned, int x, int y) const {
        if (colors[x] != colors[y]) return false;
        for (int u : assigned) {
            int v = m[u];
            if (p.less(u, x) != p.less(v, y)) return false;
            if (p.less(x, u) != p.less(y, v)) return false;
        }
        return true;
    }

    // Completes the partial map in m/im to a full automorphism, if possible.
    bool extend(std::vector<int>& m, std::vector<int>& im, std::vector<int>& assigned) {
        tick();
        if (static_cast<int>(assigned.size()) == n) return true;
        // branch on the unassigned point with the most assigned cover
        // neighbours (strongest propagation), smallest index to break ties
        int x = -1, bestscore = -1;
        for (int u = 0; u < n; ++u) {
            if (m[u] >= 0) continue;
            int score = 0;
            for (int w : p.lower_covers(u))
                if (m[w] >= 0) ++score;
            for (int w : p.upper_covers(u))
                if (m[w] >= 0) ++score;
            if (score > bestscore) {
                bestscore = score;
                x = u;
            }
        }
        for (int y = 0; y < n; ++y) {
            if (im[y] >= 0 || !consistent(m, assigned, x, y)) continue;
            m[x] = y;
            im[y] = x;
            assigned.push_back(x);
            if (extend(m, im, assigned)) return true;
            assigned.pop_back();
            m[x] = -1;
            im[y] = -1;
        }
        return false;
    }

    // Automorphism fixing 0..b-1 pointwise and mapping b to c, if any.
    std::optional<Perm> stabilized_map(int b, int c) {
        std::vector<int> m(n, -1), im(n, -1), assigned;
        for (int u = 0; u < b; ++u) {
            m[u] = u;
            im[u] = u;
            assigned.push_back(u);
        }
        if (!consistent(m, assigned, b, c)) return std::nullopt;
        m[b] = c;
        im[c] = b;
        assigned.push_back(b);
        if (extend(m, im, assigned)) return m;
        return std::nullopt;
    }
};

unsigned long long checked_mul(unsigned long long a, unsigned long long b) {
    if (b != 0 && a > (1ull << 62) / b)
        throw CapExceeded("permutation group order exceeds representable range");
    return a * b;
}

} // namespace

PermGroup automorphism_group(const Poset& p, const AutOptions& opts) {
    int n = p.size();
    if (n > opts.point_cap)
        throw CapExceeded("poset has " + std::to_string(n) + " points, cap is " +
                          std::to_string(opts.point_cap));
    AutSearch search(p, opts);
    PermGroup pg;
    pg.degree = n;
    pg.order = 1;
    std::set<Perm> gens;
    for (int b = 0; b < n; ++b) {
        unsigned long long orbit = 1; // b itself
        for (int c = b + 1; c < n; ++c) {
            auto phi = search.stabilized_map(b, c);
            if (phi) {
                ++orbit;
                gens.insert(*phi);
            }
        }
        pg.order = checked_mul(pg.order, orbit);
    }
    pg.generators.assign(gens.begin(), gens.end()); // lexicographic
    pg.orbits = orbit_partition(n, pg.generators);
    return pg;
}

std::vector<std::vector<int>> orbit_partition(int degree, const std::vector<Perm>& generators) {
    std::vector<int> parent(degree);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Perm& g : generators)
        for (int x = 0; x < degree; ++x) {
            int a = find(x), b = find(g[x]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<int, std::vector<int>> groups;
    for (int x = 0; x < degree; ++x) groups[find(x)].push_back(x);
    std::vector<std::vector<int>> orbits;
    for (auto& [root, members] : groups) orbits.push_back(std::move(members));
    return orbits;
}

std::vector<std::vector<int>> orbit_partition(const PermGroup& pg) {
    return orbit_partition(pg.degree, pg.generators);
}

unsigned long long group_order(int degree, const std::vector<Perm>& generators) {
    Perm id = identity_perm(degree);
    std::vector<Perm> gens;
    for (const Perm& g : generators)
        if (g != id) gens.push_back(g);
    if (gens.empty()) return 1;
    int base = -1;
    for (int x = 0; x < degree && base < 0; ++x)
        for (const Perm& g : gens)
            if (g[x] != x) {
                base = x;
                break;
            }
    // orbit of base with transversal
    std::map<int, Perm> transversal;
    transversal[base] = id;
    std::vector<int> frontier = {base};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (const Perm& g : gens) {
                int y = g[x];
                if (!transversal.count(y)) {
                    transversal[y] = compose_perms(g, transversal[x]);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    std::set<Perm> stab;
    for (const Perm& g : gens)
        for (auto& [x, tx] : transversal) {
            Perm s = compose_perms(inverse_perm(transversal.at(g[x])), compose_perms(g, tx));
            if (s != id) stab.insert(s);
        }
    return checked_mul(transversal.size(),
                       group_order(degree, std::vector<Perm>(stab.begin(), stab.end())));
}

std::vector<Perm> enumerate_elements(int degree, const std::vector<Perm>& generators, size_t cap) {
    std::set<Perm> elems;
    elems.insert(identity_perm(degree));
    std::vector<Perm> frontier(elems.begin(), elems.end());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& a : frontier)
            for (const Perm& g : generators) {
                Perm b = compose_perms(g, a);
                if (elems.insert(b).second) {
                    if (elems.size() > cap)
                        throw CapExceeded("group enumeration exceeds cap of " + std::to_string(cap));
                    next.push_back(std::move(b));
                }
            }
        frontier = std::move(next);
    }
    return {elems.begin(), elems.end()};
}

namespace {

unsigned long long perm_element_order(const Perm& g) {
    int n = static_cast<int>(g.size());
    std::vector<char> seen(n, 0);
    unsigned long long ord = 1;
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        unsigned long long len = 0;
        for (int y = x; !seen[y]; y = g[y]) {
            seen[y] = 1;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

} // namespace

bool is_cyclic_of_order(const PermGroup& pg, unsigned long long n) {
    if (pg.order != n) return false;
    if (n == 1) return true;
    if (pg.order > 10000)
        throw CapExceeded("group too large to enumerate for cyclicity test");
    auto elems = enumerate_elements(pg.degree, pg.generators, 10000);
    for (const Perm& g : elems)
        if (perm_element_order(g) == n) return true;
    return false;
}

RealizationCertificate verify_realization(const FiniteGroup& g, const Poset& p,
                                          const std::vector<Perm>& action,
                                          const AutOptions& opts) {
    if (static_cast<int>(action.size()) != g.order)
        throw ValidationError("action must assign a permutation to every group element");
    int n = p.size();
    for (const Perm& perm : action) {
        if (static_cast<int>(perm.size()) != n)
            throw ValidationError("malformed action: wrong permutation degree");
        std::vector<char> seen(n, 0);
        for (int x : perm) {
            if (x < 0 || x >= n || seen[x]++)
                throw ValidationError("malformed action: not a permutation");
        }
    }
    RealizationCertificate cert;
    cert.group_name = g.name;
    cert.group_order = g.order;
    cert.action_valid = true;
    for (const Perm& perm : action)
        if (!preserves_order(p, perm)) cert.action_valid = false;
    cert.homomorphism = true;
    for (int a = 0; a < g.order && cert.homomorphism; ++a)
        for (int b = 0; b < g.order; ++b)
            if (action[g.mul(a, b)] != compose_perms(action[a], action[b])) {
                cert.homomorphism = false;
                break;
            }
    cert.injective = true;
    for (int a = 0; a < g.order && cert.injective; ++a)
        for (int b = a + 1; b < g.order; ++b)
            if (action[a] == action[b]) {
                cert.injective = false;
                break;
            }
    cert.free = true;
    for (int a = 1; a < g.order && cert.free; ++a)
        for (int x = 0; x < n; ++x)
            if (action[a][x] == x) {
                cert.free = false;
                break;
            }
    cert.orbit_count = static_cast<int>(orbit_partition(n, action).size());
    cert.aut_order = automorphism_group(p, opts).order;
    cert.verdict = cert.action_valid && cert.homomorphism && cert.injective &&
                   cert.aut_order == static_cast<unsigned long long>(g.order);
    return cert;
}

} // namespace posetreal
