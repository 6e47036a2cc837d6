#include "posetreal/construct.hpp"

#include <algorithm>

namespace posetreal {

namespace {

// Declared relations -> strict order by transitive closure. Builders declare
// generating relations; some constructions are stated "up to closure".
Poset poset_from_relations(std::vector<Label> labels,
                           const std::vector<std::pair<int, int>>& rels) {
    int n = static_cast<int>(labels.size());
    BitMatrix m(n);
    for (auto [i, j] : rels) m.set(i, j);
    m.transitive_close();
    if (m.any_diagonal()) throw ValidationError("construction relations contain a cycle");
    return Poset::from_closure(std::move(labels), std::move(m));
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long ipow(int base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > 1000000) throw CapExceeded("p^k exceeds the desk-scale cap");
    }
    return r;
}

} // namespace

ConstructedRealization main_theorem_poset(const FiniteGroup& g, const GeneratingSequence& h) {
    int d = h.d();
    if (d < 3)
        throw ValidationError("main construction requires d >= 3 generators (got d = " +
                              std::to_string(d) + ")");
    if (!is_irredundant(g, h.elems))
        throw ValidationError("generating sequence is not irredundant");
    for (int x : h.elems)
        if (x == 0) throw ValidationError("generating sequence contains the identity");

    int n = g.order;
    auto idx = [n](int x, int level) { return level * n + x; };
    // h_0 = h_{-1} = e by convention
    auto hh = [&](int i) { return i <= 0 ? 0 : h.elems[i - 1]; };

    std::vector<Label> labels;
    labels.reserve(4 * n);
    for (int level = 0; level < 4; ++level)
        for (int x = 0; x < n; ++x) labels.push_back({g.element_name(x), level});

    std::vector<std::pair<int, int>> covers;
    bool odd = d % 2 == 1;
    for (int x = 0; x < n; ++x) {
        if (odd) {
            for (int i = -1; i <= d - 1; ++i) {
                int m = g.mul(x, g.mul(g.inverse(hh(i + 1)), hh(i)));
                covers.emplace_back(idx(m, 0), idx(x, 1));
            }
        } else {
            covers.emplace_back(idx(x, 0), idx(x, 1));
            for (int i = 1; i <= d - 1; ++i) {
                int m = g.mul(x, g.mul(g.inverse(hh(i + 1)), hh(i)));
                covers.emplace_back(idx(m, 0), idx(x, 1));
            }
        }
        covers.emplace_back(idx(x, 1), idx(x, 2));
        if (odd) {
            for (int k = 0; k <= d; ++k) {
                int gh = g.mul(x, hh(k));
                covers.emplace_back(k % 2 == 0 ? idx(gh, 2) : idx(gh, 1), idx(x, 3));
            }
        } else {
            covers.emplace_back(idx(x, 2), idx(x, 3));
            for (int k = 1; k <= d; ++k) {
                int gh = g.mul(x, hh(k));
                covers.emplace_back(k % 2 == 1 ? idx(gh, 2) : idx(gh, 1), idx(x, 3));
            }
        }
    }
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());

    Poset p = Poset::from_covers(std::move(labels), covers);
    if (p.redundant_declared())
        throw ValidationError("declared covers are not the transitive reduction "
                              "(irredundancy validation bug)");
    int expected = odd ? d + 1 : d;
    for (int x = 0; x < n; ++x)
        if (static_cast<int>(p.lower_covers(idx(x, 1)).size()) != expected)
            throw ValidationError("height-1 point covers " +
                                  std::to_string(p.lower_covers(idx(x, 1)).size()) +
                                  " minimal points, expected " + std::to_string(expected) +
                                  " (irredundancy validation bug)");

    ConstructedRealization r;
    r.poset = std::move(p);
    r.group = g;
    r.method = "main";
    std::string gens;
    for (size_t i = 0; i < h.elems.size(); ++i)
        gens += (i ? "," : "") + std::to_string(h.elems[i]);
    r.params = {{"d", std::to_string(d)}, {"gens", gens}};
    r.action.reserve(n);
    for (int a = 0; a < n; ++a) {
        Perm perm(4 * n);
        for (int level = 0; level < 4; ++level)
            for (int x = 0; x < n; ++x) perm[idx(x, level)] = idx(g.mul(a, x), level);
        r.action.push_back(std::move(perm));
    }
    return r;
}

Poset crown(int n) {
    if (n < 1) throw ValidationError("crown requires n >= 1");
    std::vector<Label> labels;
    for (int level = 0; level < 2; ++level)
        for (int i = 0; i < n; ++i) labels.push_back({std::to_string(i), level});
    auto idx = [n](int i, int level) { return level * n + i; };
    std::vector<std::pair<int, int>> rels;
    for (int i = 0; i < n; ++i) {
        rels.emplace_back(idx(i, 0), idx(i, 1));
        rels.emplace_back(idx(i, 0), idx((i + 1) % n, 1));
    }
    return poset_from_relations(std::move(labels), rels);
}

ConstructedRealization subdivided_crown(int n) {
    if (n < 1) throw ValidationError("subdivided crown requires n >= 1");
    std::vector<Label> labels;
    for (int level = 0; level < 3; ++level)
        for (int i = 0; i < n; ++i) labels.push_back({std::to_string(i), level});
    auto idx = [n](int i, int level) { return level * n + i; };
    std::vector<std::pair<int, int>> rels;
    for (int i = 0; i < n; ++i) {
        rels.emplace_back(idx(i, 0), idx(i, 1));
        rels.emplace_back(idx(i, 1), idx(i, 2));
        rels.emplace_back(idx((i + 1) % n, 0), idx(i, 2));
    }
    ConstructedRealization r;
    r.poset = poset_from_relations(std::move(labels), rels);
    r.group = group_from_spec("C" + std::to_string(n));
    r.method = "subdivided-crown";
    r.params = {{"n", std::to_string(n)}};
    for (int a = 0; a < n; ++a) {
        Perm perm(3 * n);
        for (int level = 0; level < 3; ++level)
            for (int i = 0; i < n; ++i) perm[idx(i, level)] = idx((i + a) % n, level);
        r.action.push_back(std::move(perm));
    }
    return r;
}

ConstructedRealization cyclic_prime_power_poset(int p, int k, bool allow_unverified) {
    if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
    if (k < 1) throw ValidationError("exponent k must be >= 1");
    if (p == 2 && k == 1)
        throw ValidationError("order 2 needs no crown construction: the 2-point antichain "
                              "realizes it");
    long long m_ll = ipow(p, k);
    if (m_ll > 5040) throw CapExceeded("p^k exceeds the group-order cap of 5040");
    int m = static_cast<int>(m_ll);

    enum class Regime { Subdivided, Z4, Discrete };
    Regime regime;
    if (p == 2)
        regime = Regime::Z4;
    else if (p == 3 || p == 5 || allow_unverified)
        regime = Regime::Subdivided;
    else
        regime = Regime::Discrete;

    std::vector<Label> labels;
    for (int level = 0; level < 2; ++level)
        for (int i = 0; i < m; ++i) labels.push_back({std::to_string(i), level});
    auto qidx = [m](int i, int level) { return level * m + i; };
    std::vector<std::pair<int, int>> rels;
    for (int i = 0; i < m; ++i) {
        rels.emplace_back(qidx(i, 0), qidx(i, 1));
        rels.emplace_back(qidx(i, 0), qidx((i + 1) % m, 1));
    }

    int r_mod; // modulus of the upper part
    int upper_levels;
    if (regime == Regime::Discrete) {
        r_mod = p;
        upper_levels = 1;
    } else {
        r_mod = (regime == Regime::Z4) ? 4 : p;
        upper_levels = 3;
    }
    int base = 2 * m;
    auto uidx = [&](int j, int level) { return base + level * r_mod + j; };
    for (int level = 0; level < upper_levels; ++level)
        for (int j = 0; j < r_mod; ++j) labels.push_back({"c" + std::to_string(j), 2 + level});

    if (regime != Regime::Discrete) {
        for (int j = 0; j < r_mod; ++j) {
            rels.emplace_back(uidx(j, 0), uidx(j, 1));
            rels.emplace_back(uidx(j, 1), uidx(j, 2));
            rels.emplace_back(uidx((j + 1) % r_mod, 0), uidx(j, 2));
        }
        for (int i = 0; i < m; ++i) rels.emplace_back(qidx(i, 1), uidx(i % r_mod, 0));
    } else {
        for (int i = 0; i < m; ++i) {
            int q = i % p;
            rels.emplace_back(qidx(i, 1), uidx(((q - 1) % p + p) % p, 0));
            rels.emplace_back(qidx(i, 1), uidx(q, 0));
            rels.emplace_back(qidx(i, 1), uidx((q + 2) % p, 0));
        }
    }

    ConstructedRealization r;
    r.poset = poset_from_relations(std::move(labels), rels);
    long long expected_size = regime == Regime::Discrete ? 2LL * m + p
                              : regime == Regime::Z4     ? 2LL * m + 12
                                                         : 2LL * m + 3 * p;
    if (r.poset.size() != expected_size)
        throw ValidationError("builder size mismatch"); // unreachable by construction
    r.group = group_from_spec("C" + std::to_string(m));
    r.method = "cyclic-pk";
    r.params = {{"p", std::to_string(p)},
                {"k", std::to_string(k)},
                {"regime", regime == Regime::Discrete ? "discrete"
                           : regime == Regime::Z4     ? "z4"
                                                      : "subdivided"},
                {"verified_family", (p == 2 || p == 3 || p == 5 || regime == Regime::Discrete)
                                        ? "true"
                                        : "false"}};
    for (int a = 0; a < m; ++a) {
        Perm perm(r.poset.size());
        for (int level = 0; level < 2; ++level)
            for (int i = 0; i < m; ++i) perm[qidx(i, level)] = qidx((i + a) % m, level);
        for (int level = 0; level < upper_levels; ++level)
            for (int j = 0; j < r_mod; ++j) perm[uidx(j, level)] = uidx((j + a) % r_mod, level);
        r.action.push_back(std::move(perm));
    }
    return r;
}

ConstructedRealization abelian_join_poset(const std::vector<int>& parts) {
    if (parts.empty()) throw ValidationError("abelian join needs at least one part");
    for (int n : parts)
        if (n < 1) throw ValidationError("every part must be >= 1");

    std::vector<ConstructedRealization> scs;
    for (size_t i = 0; i < parts.size(); ++i) {
        ConstructedRealization sc = subdivided_crown(parts[i]);
        // prefix labels with the part index so the join stays readable
        std::vector<Label> relabeled;
        for (int x = 0; x < sc.poset.size(); ++x) {
            Label l = sc.poset.label(x);
            l.tag = "p" + std::to_string(i) + "." + l.tag;
            relabeled.push_back(std::move(l));
        }
        sc.poset = Poset::from_closure(std::move(relabeled), sc.poset.closure());
        scs.push_back(std::move(sc));
    }

    Poset joined = scs[0].poset;
    FiniteGroup grp = scs[0].group;
    for (size_t i = 1; i < scs.size(); ++i) {
        joined = ordinal_sum(joined, scs[i].poset);
        grp = direct_product(grp, scs[i].group);
    }

    ConstructedRealization r;
    r.poset = std::move(joined);
    r.group = std::move(grp);
    r.method = "abelian-join";
    std::string ps;
    for (size_t i = 0; i < parts.size(); ++i) ps += (i ? "," : "") + std::to_string(parts[i]);
    r.params = {{"parts", ps}};
    // element index is mixed-radix over the parts, last part fastest
    for (int a = 0; a < r.group.order; ++a) {
        std::vector<int> comp(parts.size());
        int rem = a;
        for (size_t i = parts.size(); i-- > 0;) {
            comp[i] = rem % parts[i];
            rem /= parts[i];
        }
        Perm perm;
        perm.reserve(r.poset.size());
        for (size_t i = 0; i < parts.size(); ++i) {
            int offset = static_cast<int>(perm.size());
            const Perm& part_perm = scs[i].action[comp[i]];
            for (int x : part_perm) perm.push_back(offset + x);
        }
        r.action.push_back(std::move(perm));
    }
    return r;
}

Poset graph_realizer_lattice(const Graph& g) {
    return bounded(face_poset(g));
}

} // namespace posetreal
