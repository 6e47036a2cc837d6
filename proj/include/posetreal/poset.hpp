#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetreal/bitmatrix.hpp"
#include "posetreal/common.hpp"

namespace posetreal {

// Point label: either plain text, or (tag, level) for construction points
// where the level becomes the drawing rank.
struct Label {
    std::string tag;
    int level = -1;

    bool leveled() const { return level >= 0; }
    bool operator==(const Label& o) const { return tag == o.tag && level == o.level; }
    std::string str() const {
        return leveled() ? "(" + tag + "," + std::to_string(level) + ")" : tag;
    }
};

// Simple undirected graph, no loops or multi-edges.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // stored with u < v, sorted, unique

    static Graph make(int n, std::vector<std::pair<int, int>> edges);
};

// Finite poset: strict order as a closure bit-matrix plus the cover relation
// (transitive reduction). Immutable after construction.
class Poset {
  public:
    Poset() = default;

    // Declared covers may contain transitively implied pairs; those are
    // dropped and redundant_declared() is set. Throws CycleError on a cycle.
    static Poset from_covers(std::vector<Label> labels,
                             const std::vector<std::pair<int, int>>& covers);

    // lt must already be irreflexive and transitive (checked).
    static Poset from_closure(std::vector<Label> labels, BitMatrix lt);

    int size() const { return static_cast<int>(labels_.size()); }
    bool less(int a, int b) const { return lt_.get(a, b); }
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
    const BitMatrix& closure() const { return lt_; }
    const Label& label(int i) const { return labels_[i]; }
    const std::vector<Label>& labels() const { return labels_; }

    const std::vector<int>& upper_covers(int i) const { return up_[i]; }
    const std::vector<int>& lower_covers(int i) const { return down_[i]; }
    std::vector<std::pair<int, int>> cover_pairs() const;

    int height_of(int i) const { return height_[i]; }
    int max_height() const;

    bool redundant_declared() const { return redundant_declared_; }

    // index of the point with the given label, -1 if absent
    int find(const Label& l) const;
    int find(const std::string& tag, int level) const { return find(Label{tag, level}); }

  private:
    void finish(); // covers + heights from lt_
    std::vector<Label> labels_;
    BitMatrix lt_;
    std::vector<std::vector<int>> up_, down_;
    std::vector<int> height_;
    bool redundant_declared_ = false;
};

std::vector<int> down_set(const Poset& p, int x);
std::vector<int> up_set(const Poset& p, int x);

// Adjacency of two points: some point lies strictly below both.
bool adjacent(const Poset& p, int x, int y);

// Every point of p1 below every point of p2.
Poset ordinal_sum(const Poset& p1, const Poset& p2);

// Vertices and edges of g, each edge above its two endpoints.
Poset face_poset(const Graph& g);

// Adds a global minimum and maximum.
Poset bounded(const Poset& p);

// Order isomorphism p1 -> p2 as an index map, if one exists.
std::optional<std::vector<int>> are_isomorphic(const Poset& p1, const Poset& p2);

} // namespace posetreal
