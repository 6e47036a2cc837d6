#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "posetreal/construct.hpp"
#include "posetreal/io.hpp"
#include "posetreal/poset.hpp"
#include "test_util.hpp"

using namespace posetreal;
using namespace posetreal::testutil;

namespace {

std::vector<Label> plain_labels(int n) {
    std::vector<Label> l;
    for (int i = 0; i < n; ++i) l.push_back({std::to_string(i), -1});
    return l;
}

// Longest-path oracle on the cover DAG.
int longest_chain_below(const Poset& p, int x) {
    int best = 0;
    for (int y : p.lower_covers(x)) best = std::max(best, 1 + longest_chain_below(p, y));
    return best;
}

} // namespace

TEST_CASE("from_covers builds the closure of a chain") {
    Poset p = Poset::from_covers(plain_labels(3), {{0, 1}, {1, 2}});
    CHECK(p.less(0, 2));
    CHECK(p.cover_pairs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK_FALSE(p.redundant_declared());
}

TEST_CASE("redundant declared pair is dropped with a warning flag") {
    Poset p = Poset::from_covers(plain_labels(3), {{0, 1}, {1, 2}, {0, 2}});
    CHECK(p.cover_pairs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(p.redundant_declared());
}

TEST_CASE("cycle in declared covers is rejected with a witness") {
    try {
        Poset::from_covers(plain_labels(2), {{0, 1}, {1, 0}});
        FAIL("expected CycleError");
    } catch (const CycleError& e) {
        CHECK(e.cycle.size() == 2);
    }
}

TEST_CASE("heights") {
    Poset c4 = chain(4);
    CHECK(c4.height_of(3) == 3);
    CHECK(c4.height_of(0) == 0);
    Poset a3 = antichain(3);
    for (int i = 0; i < 3; ++i) CHECK(a3.height_of(i) == 0);
    Poset cr = crown(3);
    for (int t = 0; t < cr.size(); ++t) {
        CAPTURE(t);
        CHECK(cr.height_of(t) == longest_chain_below(cr, t));
        if (cr.label(t).level == 1) CHECK(cr.height_of(t) == 1);
    }
}

TEST_CASE("down and up sets") {
    Poset c3 = chain(3);
    CHECK(down_set(c3, 2) == std::vector<int>{0, 1});
    CHECK(down_set(c3, 0).empty());
    Poset cr = crown(3);
    int bottom = cr.find("0", 0);
    std::vector<int> ups = up_set(cr, bottom);
    CHECK(ups == std::vector<int>{cr.find("0", 1), cr.find("1", 1)});
    CHECK_THROWS_AS(down_set(c3, 5), ValidationError);
}

TEST_CASE("adjacency (shared strict lower bound) on crown(4)") {
    Poset cr = crown(4);
    CHECK(adjacent(cr, cr.find("0", 1), cr.find("1", 1))); // common point (0,0)
    CHECK_FALSE(adjacent(cr, cr.find("0", 1), cr.find("2", 1)));
    CHECK_FALSE(adjacent(cr, cr.find("0", 0), cr.find("1", 0))); // minimal points
}

TEST_CASE("ordinal sums") {
    Poset c = ordinal_sum(chain(2), chain(2));
    CHECK(are_isomorphic(c, chain(4)).has_value());
    Poset b = ordinal_sum(antichain(2), antichain(2));
    CHECK(b.size() == 4);
    CHECK(b.cover_pairs().size() == 4); // complete bipartite 2x2 Hasse
    Poset s = ordinal_sum(subdivided_crown(3).poset, subdivided_crown(3).poset);
    CHECK(s.size() == 18);
    CHECK(s.max_height() == 5);
}

TEST_CASE("face posets") {
    Graph single = Graph::make(2, {{0, 1}});
    Poset fp = face_poset(single);
    CHECK(fp.size() == 3);
    CHECK(fp.lower_covers(2).size() == 2);

    Graph k3 = Graph::make(3, {{0, 1}, {0, 2}, {1, 2}});
    Poset f3 = face_poset(k3);
    CHECK(f3.size() == 6);
    for (int i = 3; i < 6; ++i) CHECK(f3.lower_covers(i).size() == 2);
    for (int i = 0; i < 3; ++i) CHECK(up_set(f3, i).size() == 2);
    CHECK(f3.max_height() == 1);

    Graph edgeless = Graph::make(3, {});
    CHECK(are_isomorphic(face_poset(edgeless), antichain(3)).has_value());
}

TEST_CASE("bounded adds a minimum and maximum") {
    Poset d = bounded(antichain(2));
    CHECK(d.size() == 4);
    CHECK(d.height_of(d.find("top", -1)) == 2);
    Poset e = bounded(Poset::from_covers({}, {}));
    CHECK(are_isomorphic(e, chain(2)).has_value());

    // face_poset(K3) bounded: 8 points, and a lattice (pairwise meets/joins)
    Graph k3 = Graph::make(3, {{0, 1}, {0, 2}, {1, 2}});
    Poset l = bounded(face_poset(k3));
    CHECK(l.size() == 8);
    int n = l.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            // join: unique minimal common upper bound
            std::vector<int> ub, lb;
            for (int z = 0; z < n; ++z) {
                bool zx = l.less(x, z) || z == x, zy = l.less(y, z) || z == y;
                if (zx && zy) ub.push_back(z);
                bool xz = l.less(z, x) || z == x, yz = l.less(z, y) || z == y;
                if (xz && yz) lb.push_back(z);
            }
            int minimal = 0, maximal = 0;
            for (int u : ub) {
                bool is_min = true;
                for (int v : ub)
                    if (v != u && l.less(v, u)) is_min = false;
                if (is_min) ++minimal;
            }
            for (int u : lb) {
                bool is_max = true;
                for (int v : lb)
                    if (v != u && l.less(u, v)) is_max = false;
                if (is_max) ++maximal;
            }
            CHECK(minimal == 1);
            CHECK(maximal == 1);
        }
}

TEST_CASE("isomorphism checks") {
    CHECK(are_isomorphic(chain(3), chain(3)).has_value());
    CHECK_FALSE(are_isomorphic(chain(3), antichain(3)).has_value());

    // crown(3) vs a relabelled copy; cross-check against brute force over 6! maps
    Poset cr = crown(3);
    std::vector<int> relabel = {3, 5, 0, 4, 1, 2};
    BitMatrix m(6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (cr.less(i, j)) m.set(relabel[i], relabel[j]);
    Poset cr2 = Poset::from_closure(plain_labels(6), std::move(m));
    auto iso = are_isomorphic(cr, cr2);
    REQUIRE(iso.has_value());
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(cr.less(i, j) == cr2.less((*iso)[i], (*iso)[j]));

    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    bool brute_found = false;
    do {
        bool ok = true;
        for (int i = 0; i < 6 && ok; ++i)
            for (int j = 0; j < 6; ++j)
                if (cr.less(i, j) != cr2.less(perm[i], perm[j])) {
                    ok = false;
                    break;
                }
        if (ok) brute_found = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(brute_found);
}

TEST_CASE("property: closure/reduction roundtrip on random posets") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Poset p = random_poset(rng, n);
        Poset q = Poset::from_covers(p.labels(), p.cover_pairs());
        CHECK(q.closure() == p.closure());
        CHECK_FALSE(q.redundant_declared());
    }
}

TEST_CASE("property: height is monotone") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        Poset p = random_poset(rng, 1 + static_cast<int>(rng() % 10));
        for (int i = 0; i < p.size(); ++i)
            for (int j = 0; j < p.size(); ++j)
                if (p.less(i, j)) CHECK(p.height_of(i) < p.height_of(j));
    }
}

TEST_CASE("property: ordinal_sum is associative up to isomorphism") {
    std::mt19937 rng(44);
    for (int trial = 0; trial < 30; ++trial) {
        Poset a = random_poset(rng, 1 + static_cast<int>(rng() % 5));
        Poset b = random_poset(rng, 1 + static_cast<int>(rng() % 5));
        Poset c = random_poset(rng, 1 + static_cast<int>(rng() % 5));
        Poset left = ordinal_sum(ordinal_sum(a, b), c);
        Poset right = ordinal_sum(a, ordinal_sum(b, c));
        CHECK(are_isomorphic(left, right).has_value());
    }
}

TEST_CASE("property: face_poset counts") {
    std::mt19937 rng(45);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g = Graph::make(n, edges);
        Poset fp = face_poset(g);
        CHECK(fp.size() == g.n + static_cast<int>(g.edges.size()));
        for (int i = g.n; i < fp.size(); ++i) CHECK(fp.lower_covers(i).size() == 2);
    }
}

TEST_CASE("poset JSON round trip") {
    std::mt19937 rng(46);
    for (int trial = 0; trial < 20; ++trial) {
        Poset p = random_poset(rng, 1 + static_cast<int>(rng() % 8));
        Poset q = poset_from_json(poset_to_json(p));
        CHECK(q.closure() == p.closure());
        CHECK(q.labels() == p.labels());
    }
    // leveled labels survive
    Poset cr = crown(3);
    Poset cr2 = poset_from_json(poset_to_json(cr));
    CHECK(cr2.label(0).level == 0);
    CHECK(cr2.closure() == cr.closure());
}

TEST_CASE("DOT export mentions every point and cover") {
    Poset cr = crown(3);
    std::string dot = poset_to_dot(cr);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("rank=same") != std::string::npos);
    for (auto [i, j] : cr.cover_pairs())
        CHECK(dot.find("n" + std::to_string(i) + " -> n" + std::to_string(j)) !=
              std::string::npos);
}
