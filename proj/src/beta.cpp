#include "posetreal/beta.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace posetreal {

namespace {

// Packed canonical certificate: n(n-1) <= 72 bits for n <= 9.
using Cert = std::array<uint64_t, 2>;

Cert pack_cert(const std::vector<uint8_t>& bits) {
    Cert c{0, 0};
    for (size_t t = 0; t < bits.size(); ++t)
        if (bits[t]) c[t >> 6] |= uint64_t(1) << (t & 63);
    return c;
}

Poset poset_from_cert(int n, const Cert& c) {
    BitMatrix m(n);
    size_t t = 0;
    auto bit = [&](size_t i) { return (c[i >> 6] >> (i & 63)) & 1u; };
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < k; ++i, ++t)
            if (bit(t)) m.set(i, k);
        for (int i = 0; i < k; ++i, ++t)
            if (bit(t)) m.set(k, i);
    }
    std::vector<Label> labels;
    for (int i = 0; i < n; ++i) labels.push_back({std::to_string(i), -1});
    return Poset::from_closure(std::move(labels), std::move(m));
}

void parallel_chunks(size_t nitems, int workers, const std::function<void(size_t, size_t)>& fn) {
    if (workers <= 1 || nitems < 64) {
        fn(0, nitems);
        return;
    }
    size_t chunk = (nitems + workers - 1) / workers;
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        size_t lo = std::min(nitems, w * chunk);
        size_t hi = std::min(nitems, (w + 1) * chunk);
        if (lo < hi) threads.emplace_back(fn, lo, hi);
    }
    for (auto& t : threads) t.join();
}

// Children of `parent`: add one maximal point over every order ideal.
void emit_children(const Poset& parent, std::set<Cert>& out) {
    int n = parent.size();
    std::vector<uint32_t> below(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (parent.less(j, i)) below[i] |= uint32_t(1) << j;
    uint32_t full = n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1;
    for (uint32_t mask = 0; mask <= full; ++mask) {
        bool ideal = true;
        for (uint32_t rest = mask; rest && ideal; rest &= rest - 1) {
            int i = __builtin_ctz(rest);
            if (below[i] & ~mask) ideal = false;
        }
        if (!ideal) continue;
        BitMatrix m(n + 1);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                if (parent.less(i, j)) m.set(i, j);
            if (mask & (uint32_t(1) << i)) m.set(i, n);
        }
        std::vector<Label> labels;
        for (int i = 0; i <= n; ++i) labels.push_back({std::to_string(i), -1});
        Poset child = Poset::from_closure(std::move(labels), std::move(m));
        out.insert(pack_cert(canonical_form(child).cert));
    }
}

// Canonical certs of all isomorphism classes, one vector per size 1..n.
std::vector<std::vector<Cert>> enumerate_certs(int n, int workers) {
    if (n < 1 || n > 9)
        throw ValidationError("poset enumeration supports 1 <= n <= 9, got " + std::to_string(n));
    std::vector<std::vector<Cert>> by_size(n + 1);
    by_size[1] = {Cert{0, 0}};
    for (int s = 2; s <= n; ++s) {
        const auto& parents = by_size[s - 1];
        std::vector<std::set<Cert>> partial(std::max(workers, 1));
        std::atomic<size_t> chunk_id{0};
        parallel_chunks(parents.size(), workers, [&](size_t lo, size_t hi) {
            std::set<Cert>& mine = partial[chunk_id++];
            for (size_t idx = lo; idx < hi; ++idx)
                emit_children(poset_from_cert(s - 1, parents[idx]), mine);
        });
        std::set<Cert> merged;
        for (auto& p : partial) merged.merge(p);
        by_size[s].assign(merged.begin(), merged.end());
    }
    return by_size;
}

bool group_is_cyclic(const FiniteGroup& g) {
    for (int x = 0; x < g.order; ++x)
        if (element_order(g, x) == g.order) return true;
    return false;
}

} // namespace

std::vector<Poset> enumerate_posets(int n, int workers) {
    auto certs = enumerate_certs(n, workers);
    std::vector<Poset> out;
    out.reserve(certs[n].size());
    for (const Cert& c : certs[n]) out.push_back(poset_from_cert(n, c));
    return out;
}

bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order != b.order) return false;
    if (a.order == 1) return true;
    std::vector<int> all;
    for (int x = 1; x < a.order; ++x) all.push_back(x);
    std::vector<int> gens = irredundant_reduce(a, all).elems;

    // extend phi (partial, defined on 0 and the generators) to a full
    // homomorphism by closing under products; fail on conflict
    auto try_images = [&](const std::vector<int>& images) {
        std::vector<int> phi(a.order, -1);
        phi[0] = 0;
        for (size_t i = 0; i < gens.size(); ++i) phi[gens[i]] = images[i];
        bool grew = true;
        while (grew) {
            grew = false;
            for (int x = 0; x < a.order; ++x) {
                if (phi[x] < 0) continue;
                for (int y = 0; y < a.order; ++y) {
                    if (phi[y] < 0) continue;
                    int xy = a.mul(x, y);
                    int im = b.mul(phi[x], phi[y]);
                    if (phi[xy] < 0) {
                        phi[xy] = im;
                        grew = true;
                    } else if (phi[xy] != im) {
                        return false;
                    }
                }
            }
        }
        std::vector<char> hit(b.order, 0);
        for (int x = 0; x < a.order; ++x) {
            if (phi[x] < 0 || hit[phi[x]]) return false;
            hit[phi[x]] = 1;
        }
        return true;
    };

    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        int ord = element_order(a, gens[i]);
        for (int y = 0; y < b.order; ++y)
            if (element_order(b, y) == ord) candidates[i].push_back(y);
        if (candidates[i].empty()) return false;
    }
    std::vector<size_t> pick(gens.size(), 0);
    while (true) {
        std::vector<int> images(gens.size());
        for (size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][pick[i]];
        if (try_images(images)) return true;
        size_t i = 0;
        while (i < pick.size() && ++pick[i] == candidates[i].size()) pick[i++] = 0;
        if (i == pick.size()) return false;
    }
}

bool realizes(const Poset& p, const FiniteGroup& g) {
    PermGroup pg = automorphism_group(p);
    if (pg.order != static_cast<unsigned long long>(g.order)) return false;
    if (group_is_cyclic(g)) return is_cyclic_of_order(pg, g.order);
    if (g.order > 24) throw CapExceeded("non-cyclic realizability check capped at order 24");
    auto elems = enumerate_elements(pg.degree, pg.generators, 10000);
    std::map<Perm, int> index;
    int next = 0;
    for (const Perm& e : elems) index[e] = next++;
    FiniteGroup autg;
    autg.order = static_cast<int>(elems.size());
    autg.name = "Aut";
    autg.table.assign(autg.order, std::vector<int>(autg.order));
    for (int x = 0; x < autg.order; ++x)
        for (int y = 0; y < autg.order; ++y)
            autg.table[x][y] = index.at(compose_perms(elems[x], elems[y]));
    // enumerate_elements lists the identity first (lexicographically least
    // among permutations closed under inverse? not guaranteed) -- renumber
    int e = index.at(identity_perm(pg.degree));
    if (e != 0) {
        auto old = autg.table;
        std::vector<int> relabel(autg.order);
        for (int i = 0; i < autg.order; ++i) relabel[i] = i;
        std::swap(relabel[0], relabel[e]);
        for (int x = 0; x < autg.order; ++x)
            for (int y = 0; y < autg.order; ++y)
                autg.table[relabel[x]][relabel[y]] = relabel[old[x][y]];
    }
    return groups_isomorphic(autg, g);
}

BetaResult beta(const FiniteGroup& g, int max_points, int workers) {
    if (max_points < 1 || max_points > 9)
        throw ValidationError("beta search supports max_points between 1 and 9");
    BetaResult result;
    auto certs = enumerate_certs(max_points, workers);
    for (int s = 1; s <= max_points; ++s) {
        auto t0 = std::chrono::steady_clock::now();
        EnumerationReport report;
        report.size = s;
        report.poset_count = static_cast<long long>(certs[s].size());
        std::atomic<size_t> best_found{certs[s].size()};
        parallel_chunks(certs[s].size(), workers, [&](size_t lo, size_t hi) {
            for (size_t idx = lo; idx < hi; ++idx) {
                if (idx >= best_found.load(std::memory_order_relaxed)) continue;
                Poset p = poset_from_cert(s, certs[s][idx]);
                if (realizes(p, g)) {
                    size_t prev = best_found.load();
                    while (idx < prev && !best_found.compare_exchange_weak(prev, idx)) {
                    }
                }
            }
        });
        if (best_found.load() < certs[s].size())
            report.realizer_found = poset_from_cert(s, certs[s][best_found.load()]);
        report.elapsed = std::chrono::steady_clock::now() - t0;
        bool found = report.realizer_found.has_value();
        result.reports.push_back(std::move(report));
        if (found) {
            result.beta = s;
            result.witness = result.reports.back().realizer_found;
            break;
        }
    }
    return result;
}

OrbitAudit orbit_size_audit(const Poset& p, const FiniteGroup& g) {
    // precondition: g cyclic of prime-power order and realized by p
    int n = g.order;
    int prime = 0;
    int rest = n;
    for (int d = 2; d <= rest; ++d)
        if (rest % d == 0) {
            prime = d;
            while (rest % d == 0) rest /= d;
            break;
        }
    if (prime == 0 || rest != 1)
        throw ValidationError("orbit audit requires a cyclic group of prime-power order");
    if (!group_is_cyclic(g))
        throw ValidationError("orbit audit requires a cyclic group");
    if (!realizes(p, g))
        throw ValidationError("orbit audit requires that the poset realizes the group");
    PermGroup pg = automorphism_group(p);
    OrbitAudit audit;
    for (const auto& orbit : pg.orbits) audit.orbit_sizes.push_back(static_cast<int>(orbit.size()));
    std::sort(audit.orbit_sizes.rbegin(), audit.orbit_sizes.rend());
    for (int s : audit.orbit_sizes)
        if (s == n) ++audit.full_orbits;
    audit.passed = audit.full_orbits >= 2;
    return audit;
}

} // namespace posetreal
