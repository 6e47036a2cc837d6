#include "posetreal/group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"

namespace posetreal {

namespace {

constexpr int kOrderCap = 5040;

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
    // (a*b)(x) = a(b(x))
    Perm r(a.size());
    for (size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
    return r;
}

FiniteGroup from_permutations(std::vector<Perm> elems, const std::string& name,
                              const std::vector<Perm>& gens) {
    // identity must be first
    std::map<Perm, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    FiniteGroup g;
    g.order = static_cast<int>(elems.size());
    g.name = name;
    g.table.assign(g.order, std::vector<int>(g.order));
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            g.table[a][b] = index.at(compose(elems[a], elems[b]));
    for (const Perm& h : gens) g.canonical_gens.push_back(index.at(h));
    return g;
}

FiniteGroup make_cyclic(int n) {
    if (n < 1) throw ParseError("cyclic group order must be positive");
    if (n > kOrderCap)
        throw ValidationError("C" + std::to_string(n) + " exceeds the order cap of " +
                              std::to_string(kOrderCap));
    FiniteGroup g;
    g.order = n;
    g.name = "C" + std::to_string(n);
    g.table.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
    if (n > 1) g.canonical_gens = {1};
    return g;
}

FiniteGroup make_symmetric(int n) {
    if (n < 1) throw ParseError("S<n> requires n >= 1");
    long long fact = 1;
    for (int i = 2; i <= n; ++i) {
        fact *= i;
        if (fact > kOrderCap)
            throw ValidationError("S" + std::to_string(n) + " has order " + std::to_string(fact) +
                                  "..., exceeding the cap of " + std::to_string(kOrderCap));
    }
    Perm id(n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elems;
    Perm p = id;
    do {
        elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // lex order puts the identity first
    std::vector<Perm> gens;
    for (int k = 0; k + 1 < n; ++k) {
        Perm t = id;
        std::swap(t[k], t[k + 1]);
        gens.push_back(t);
    }
    return from_permutations(std::move(elems), "S" + std::to_string(n), gens);
}

FiniteGroup make_dihedral(int n) {
    if (n < 1) throw ParseError("D<n> requires n >= 1");
    if (2LL * n > kOrderCap)
        throw ValidationError("D" + std::to_string(n) + " has order " + std::to_string(2LL * n) +
                              ", exceeding the cap of " + std::to_string(kOrderCap));
    // symmetries of the n-gon as permutations of Z_n
    std::vector<Perm> elems;
    for (int i = 0; i < n; ++i) {
        Perm r(n);
        for (int x = 0; x < n; ++x) r[x] = (x + i) % n;
        elems.push_back(r);
    }
    for (int i = 0; i < n; ++i) {
        Perm s(n);
        for (int x = 0; x < n; ++x) s[x] = ((i - x) % n + n) % n;
        elems.push_back(s);
    }
    if (n <= 2) {
        // degenerate cases collapse to equal permutations; fall back to an
        // abstract presentation r^n = s^2 = e, srs = r^-1
        FiniteGroup g;
        g.order = 2 * n;
        g.name = "D" + std::to_string(n);
        g.table.assign(2 * n, std::vector<int>(2 * n));
        auto idx = [n](int i, int j) { return i + n * j; };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < 2; ++l) {
                        int rot = j == 0 ? (i + k) % n : ((i - k) % n + n) % n;
                        g.table[idx(i, j)][idx(k, l)] = idx(rot, (j + l) % 2);
                    }
        g.canonical_gens = {idx(1 % n, 0), idx(0, 1)};
        if (n == 1) g.canonical_gens = {idx(0, 1)};
        return g;
    }
    std::vector<Perm> gens = {elems[1], elems[n]};
    return from_permutations(std::move(elems), "D" + std::to_string(n), gens);
}

FiniteGroup make_quaternion8() {
    // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
    auto enc = [](int sign, int unit) {
        if (unit == 0) return sign > 0 ? 0 : 1;
        return 2 * unit + (sign > 0 ? 0 : 1);
    };
    auto dec = [](int e, int& sign, int& unit) {
        if (e < 2) { sign = e == 0 ? 1 : -1; unit = 0; return; }
        unit = e / 2;
        sign = (e % 2 == 0) ? 1 : -1;
    };
    // unit multiplication: units 1,i,j,k
    static const int umul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int usign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    FiniteGroup g;
    g.order = 8;
    g.name = "Q8";
    g.table.assign(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sa, ua, sb, ub;
            dec(a, sa, ua);
            dec(b, sb, ub);
            g.table[a][b] = enc(sa * sb * usign[ua][ub], umul[ua][ub]);
        }
    g.canonical_gens = {2, 4}; // i, j
    return g;
}

struct SpecParser {
    std::string s;
    size_t pos = 0;

    explicit SpecParser(std::string str) : s(std::move(str)) {}

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    int parse_int() {
        size_t start = pos;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (start == pos) throw ParseError("group spec: expected integer at '" + s.substr(start) + "'");
        return std::stoi(s.substr(start, pos - start));
    }

    FiniteGroup parse_atom() {
        if (eof()) throw ParseError("group spec: unexpected end of input");
        if (s.compare(pos, 5, "file:") == 0) {
            std::string path = s.substr(pos + 5);
            pos = s.size();
            return group_from_cayley_file(path);
        }
        char c = peek();
        ++pos;
        switch (c) {
        case 'C': return make_cyclic(parse_int());
        case 'D': return make_dihedral(parse_int());
        case 'S': return make_symmetric(parse_int());
        case 'Q': {
            int n = parse_int();
            if (n != 8) throw ParseError("group spec: only Q8 is supported");
            return make_quaternion8();
        }
        default:
            throw ParseError(std::string("group spec: unknown atom '") + c + "'");
        }
    }

    FiniteGroup parse_term() {
        FiniteGroup g = parse_atom();
        if (!eof() && peek() == '^') {
            ++pos;
            int k = parse_int();
            if (k < 1) throw ParseError("group spec: power must be >= 1");
            FiniteGroup r = g;
            for (int i = 1; i < k; ++i) r = direct_product(r, g);
            return r;
        }
        return g;
    }

    FiniteGroup parse() {
        FiniteGroup g = parse_term();
        while (!eof() && peek() == 'x') {
            ++pos;
            g = direct_product(g, parse_term());
        }
        if (!eof()) throw ParseError("group spec: trailing input at '" + s.substr(pos) + "'");
        return g;
    }
};

} // namespace

int FiniteGroup::inverse(int a) const {
    for (int b = 0; b < order; ++b)
        if (table[a][b] == 0) return b;
    throw ValidationError("element " + std::to_string(a) + " has no inverse");
}

std::string FiniteGroup::element_name(int x) const {
    return x == 0 ? "e" : "g" + std::to_string(x);
}

void validate_cayley(const FiniteGroup& g) {
    int n = g.order;
    if (n < 1) throw ValidationError("group order must be positive");
    if (static_cast<int>(g.table.size()) != n)
        throw ValidationError("Cayley table has wrong number of rows");
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(g.table[a].size()) != n)
            throw ValidationError("Cayley table row " + std::to_string(a) + " has wrong length");
        std::vector<char> seen(n, 0);
        for (int b = 0; b < n; ++b) {
            int v = g.table[a][b];
            if (v < 0 || v >= n)
                throw ValidationError("Cayley table entry out of range at (" + std::to_string(a) +
                                      "," + std::to_string(b) + ")");
            if (seen[v]++)
                throw ValidationError("row " + std::to_string(a) + " is not a permutation");
        }
    }
    for (int b = 0; b < n; ++b) {
        std::vector<char> seen(n, 0);
        for (int a = 0; a < n; ++a)
            if (seen[g.table[a][b]]++)
                throw ValidationError("column " + std::to_string(b) + " is not a permutation");
    }
    for (int a = 0; a < n; ++a)
        if (g.table[0][a] != a || g.table[a][0] != a)
            throw ValidationError("element 0 is not a two-sided identity (fails at " +
                                  std::to_string(a) + ")");
    for (int a = 0; a < n; ++a) g.inverse(a); // throws if missing
    auto check_triple = [&](int a, int b, int c) {
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
            throw ValidationError("associativity fails at triple (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
    };
    if (n <= 256) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> d(0, n - 1);
        for (int t = 0; t < 1000000; ++t) check_triple(d(rng), d(rng), d(rng));
    }
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    long long n = static_cast<long long>(a.order) * b.order;
    if (n > kOrderCap)
        throw ValidationError("group order " + std::to_string(n) + " exceeds the cap of " +
                              std::to_string(kOrderCap));
    FiniteGroup g;
    g.order = static_cast<int>(n);
    g.name = a.name + "x" + b.name;
    g.table.assign(g.order, std::vector<int>(g.order));
    auto idx = [&](int ia, int ib) { return ia * b.order + ib; };
    for (int ia = 0; ia < a.order; ++ia)
        for (int ib = 0; ib < b.order; ++ib)
            for (int ja = 0; ja < a.order; ++ja)
                for (int jb = 0; jb < b.order; ++jb)
                    g.table[idx(ia, ib)][idx(ja, jb)] = idx(a.table[ia][ja], b.table[ib][jb]);
    for (int h : a.canonical_gens) g.canonical_gens.push_back(idx(h, 0));
    for (int h : b.canonical_gens) g.canonical_gens.push_back(idx(0, h));
    return g;
}

FiniteGroup group_from_spec(const std::string& spec) {
    SpecParser parser(spec);
    FiniteGroup g = parser.parse();
    if (g.order > kOrderCap)
        throw ValidationError("group order exceeds the cap of " + std::to_string(kOrderCap));
    validate_cayley(g);
    return g;
}

FiniteGroup group_from_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open Cayley-table file: " + path);
    nlohmann::json j;
    in >> j;
    FiniteGroup g;
    g.order = j.at("order").get<int>();
    g.table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("name")) g.name = j["name"].get<std::string>();
    if (g.order < 1 || static_cast<int>(g.table.size()) != g.order)
        throw ValidationError("Cayley-table file: table size does not match order");
    // locate the identity and renumber so it lands at index 0
    int e = -1;
    for (int a = 0; a < g.order && e < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < g.order; ++b)
            if (b >= static_cast<int>(g.table[a].size()) || g.table[a][b] != b ||
                g.table[b][a] != b) {
                ok = false;
                break;
            }
        if (ok) e = a;
    }
    if (e < 0) throw ValidationError("Cayley-table file: no two-sided identity found");
    if (e != 0) {
        std::vector<int> relabel(g.order);
        std::iota(relabel.begin(), relabel.end(), 0);
        std::swap(relabel[0], relabel[e]);
        auto old = g.table;
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b)
                g.table[relabel[a]][relabel[b]] = relabel[old[a][b]];
    }
    validate_cayley(g);
    return g;
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
    std::vector<char> in(g.order, 0);
    in[0] = 1;
    std::vector<int> frontier = {0};
    for (int x : elems) {
        if (x < 0 || x >= g.order) throw ValidationError("element index out of range");
        if (!in[x]) {
            in[x] = 1;
            frontier.push_back(x);
        }
    }
    std::vector<int> members = frontier;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier)
            for (int b : members) {
                for (int p : {g.mul(a, b), g.mul(b, a)}) {
                    if (!in[p]) {
                        in[p] = 1;
                        next.push_back(p);
                    }
                }
            }
        for (int x : next) members.push_back(x);
        // newly added elements must also be multiplied among themselves;
        // folding them into `members` before the next round covers that
        frontier = std::move(next);
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool generates(const FiniteGroup& g, const std::vector<int>& elems) {
    return static_cast<int>(generated_subgroup(g, elems).size()) == g.order;
}

bool is_irredundant(const FiniteGroup& g, const std::vector<int>& seq) {
    if (!generates(g, seq)) return false;
    for (size_t i = 0; i < seq.size(); ++i) {
        std::vector<int> rest;
        for (size_t j = 0; j < seq.size(); ++j)
            if (j != i) rest.push_back(seq[j]);
        if (generates(g, rest)) return false;
    }
    return true;
}

GeneratingSequence irredundant_reduce(const FiniteGroup& g, const std::vector<int>& seq) {
    if (!generates(g, seq)) throw ValidationError("sequence does not generate the group");
    // Earlier elements are privileged (the sequence is ordered), so drop from
    // the tail: remove the highest-index element whose removal still leaves a
    // generating sequence, and repeat.
    std::vector<int> cur = seq;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = cur.size(); i-- > 0;) {
            std::vector<int> rest;
            for (size_t j = 0; j < cur.size(); ++j)
                if (j != i) rest.push_back(cur[j]);
            if (generates(g, rest)) {
                cur = std::move(rest);
                changed = true;
                break;
            }
        }
    }
    return GeneratingSequence{cur};
}

int element_order(const FiniteGroup& g, int x) {
    if (x < 0 || x >= g.order) throw ValidationError("element index out of range");
    int m = 1, p = x;
    while (p != 0) {
        p = g.mul(p, x);
        ++m;
    }
    return m;
}

std::vector<int> parse_generator_list(const FiniteGroup& g, const std::string& list) {
    std::vector<int> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok[0] == 'e' && tok.size() > 1) {
            int k = std::stoi(tok.substr(1));
            if (k < 1 || k > static_cast<int>(g.canonical_gens.size()))
                throw ParseError("generator token '" + tok + "': group " + g.name + " has " +
                                 std::to_string(g.canonical_gens.size()) + " canonical generators");
            out.push_back(g.canonical_gens[k - 1]);
        } else {
            int v;
            try {
                v = std::stoi(tok);
            } catch (const std::exception&) {
                throw ParseError("generator token '" + tok + "' is neither an index nor e<k>");
            }
            if (v < 0 || v >= g.order)
                throw ParseError("generator index " + tok + " out of range for " + g.name);
            out.push_back(v);
        }
    }
    return out;
}

} // namespace posetreal
