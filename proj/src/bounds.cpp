#include "posetreal/bounds.hpp"

namespace posetreal {

namespace {

long long ipow(int b, int e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

std::optional<int> alpha_formula(int p, int k) {
    long long pk = ipow(p, k);
    if (p == 2 && k == 1) return 2;
    if (p == 2) return static_cast<int>(pk + 6);
    if (p == 3 || p == 5) return static_cast<int>(pk + 2 * p);
    return static_cast<int>(pk + p);
}

int beta_lower_formula(int p, int k) {
    if (p == 2 && k == 1) return 2;
    return static_cast<int>(2 * ipow(p, k));
}

int beta_upper_formula(int p, int k) {
    long long pk = ipow(p, k);
    if (p == 2 && k == 1) return 2;
    if (p == 2) return static_cast<int>(2 * pk + 12);
    if (p == 3 || p == 5) return static_cast<int>(2 * pk + 3 * p);
    return static_cast<int>(2 * pk + p);
}

const std::vector<BoundsEntry>& known_bounds() {
    static const std::vector<BoundsEntry> table = [] {
        std::vector<BoundsEntry> t;
        auto add = [&](int p, int k, const std::string& source) {
            BoundsEntry e;
            e.p = p;
            e.k = k;
            e.group = "Z" + std::to_string(ipow(p, k));
            e.alpha = alpha_formula(p, k);
            e.beta_lower = beta_lower_formula(p, k);
            e.beta_upper = beta_upper_formula(p, k);
            e.source = source;
            t.push_back(e);
        };
        add(2, 1, "antichain");
        add(2, 2, "crown-z4-extension");
        add(2, 3, "crown-z4-extension");
        add(2, 4, "crown-z4-extension");
        add(3, 1, "orbit-counting"); // beta(Z3) is known exactly
        t.back().beta_lower = 9;
        t.back().beta_upper = 9;
        add(3, 2, "crown-subdivided-extension");
        add(3, 3, "crown-subdivided-extension");
        add(5, 1, "crown-subdivided-extension");
        add(5, 2, "crown-subdivided-extension");
        add(7, 1, "crown-discrete-extension");
        add(11, 1, "crown-discrete-extension");
        add(13, 1, "crown-discrete-extension");
        return t;
    }();
    return table;
}

} // namespace posetreal
