#include "oscbath/pairings.hpp"

#include <algorithm>
#include <sstream>

#include "oscbath/errors.hpp"

namespace oscbath {

namespace {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

void check_m(int m, const char* what) {
    if (m < 0) throw numeric_error(std::string(what) + ": negative m");
}

void enumerate_rec(std::vector<int>& free_points, Pairing& current,
                   const std::function<void(const Pairing&)>& fn) {
    if (free_points.empty()) {
        fn(current);
        return;
    }
    // Pair the smallest free point with each larger one; this produces the
    // canonical form directly and in lexicographic order.
    const int first = free_points.front();
    std::vector<int> rest(free_points.begin() + 1, free_points.end());
    for (std::size_t j = 0; j < rest.size(); ++j) {
        std::vector<int> remaining;
        remaining.reserve(rest.size() - 1);
        for (std::size_t k = 0; k < rest.size(); ++k)
            if (k != j) remaining.push_back(rest[k]);
        current.pairs.emplace_back(first, rest[j]);
        enumerate_rec(remaining, current, fn);
        current.pairs.pop_back();
    }
}

}  // namespace

BigInt pairing_count(int m) {
    check_m(m, "pairing_count");
    BigInt r = 1;
    for (int i = 1; i <= m; ++i) r *= 2 * i - 1;
    return r;
}

BigInt connected_graph_count(int m) {
    if (m < 1) throw numeric_error("connected_graph_count: m must be >= 1");
    return factorial(2 * m) / (2 * m);
}

BigInt decomposition_count(int n, const std::vector<int>& sizes) {
    int total = 0;
    for (int ma : sizes) {
        if (ma < 1) throw numeric_error("decomposition_count: all m_a must be >= 1");
        total += ma;
    }
    if (total != n) {
        std::ostringstream os;
        os << "decomposition_count: sizes sum to " << total << ", expected " << n;
        throw numeric_error(os.str());
    }
    BigInt r = factorial(2 * n);
    for (int ma : sizes) r /= factorial(2 * ma);
    return r;
}

void for_each_pairing(int m, const std::function<void(const Pairing&)>& fn, bool override_guard) {
    if (m < 1) throw numeric_error("for_each_pairing: m must be >= 1");
    if (m > kPairingEnumerationGuard && !override_guard) {
        std::ostringstream os;
        os << "combinatorial blowup: enumerating " << pairing_count(m) << " pairings for m=" << m
           << " exceeds the guard (m <= " << kPairingEnumerationGuard
           << "); pass override to proceed";
        throw guard_error(os.str());
    }
    std::vector<int> points(2 * m);
    for (int i = 0; i < 2 * m; ++i) points[i] = i + 1;
    Pairing current;
    current.m = m;
    current.pairs.reserve(m);
    enumerate_rec(points, current, fn);
}

std::vector<Pairing> all_pairings(int m, bool override_guard) {
    std::vector<Pairing> out;
    for_each_pairing(m, [&](const Pairing& p) { out.push_back(p); }, override_guard);
    return out;
}

Pairing pairing_at(int m, const BigInt& index) {
    if (m < 1) throw numeric_error("pairing_at: m must be >= 1");
    if (index < 0 || index >= pairing_count(m)) throw numeric_error("pairing_at: index out of range");
    std::vector<int> points(2 * m);
    for (int i = 0; i < 2 * m; ++i) points[i] = i + 1;
    Pairing p;
    p.m = m;
    BigInt idx = index;
    while (!points.empty()) {
        const int k = static_cast<int>(points.size()) / 2;  // pairs still to place
        // After fixing the partner of the smallest point, (2k-3)!! completions remain.
        const BigInt block = k >= 2 ? pairing_count(k - 1) : BigInt(1);
        const BigInt digit = idx / block;
        idx %= block;
        const int first = points.front();
        const int pos = 1 + static_cast<int>(digit);
        const int partner = points[pos];
        p.pairs.emplace_back(first, partner);
        points.erase(points.begin() + pos);
        points.erase(points.begin());
    }
    return p;
}

ComponentDecomposition connected_components(const PairGraph& g) {
    const int m = g.osc_lines.m;
    if (g.f_lines.m != m) throw numeric_error("connected_components: matchings cover different point sets");
    const int n_points = 2 * m;

    auto partner_map = [&](const Pairing& p, const char* kind) {
        std::vector<int> partner(n_points + 1, 0);
        for (const auto& [i, j] : p.pairs) {
            if (i < 1 || j < 1 || i > n_points || j > n_points || i >= j)
                throw numeric_error(std::string("connected_components: malformed ") + kind + " pair");
            if (partner[i] || partner[j])
                throw numeric_error(std::string("connected_components: ") + kind + " matching not disjoint");
            partner[i] = j;
            partner[j] = i;
        }
        for (int v = 1; v <= n_points; ++v)
            if (!partner[v])
                throw numeric_error(std::string("connected_components: ") + kind + " matching does not cover all points");
        return partner;
    };
    const std::vector<int> osc = partner_map(g.osc_lines, "osc");
    const std::vector<int> fl = partner_map(g.f_lines, "f");

    ComponentDecomposition out;
    std::vector<char> seen(n_points + 1, 0);
    for (int start = 1; start <= n_points; ++start) {
        if (seen[start]) continue;
        // Walk the component alternating line kinds; for two perfect matchings
        // it must close into a single cycle through every component point.
        std::vector<int> comp;
        int v = start;
        bool use_osc = true;
        do {
            if (seen[v]) throw numeric_error("connected_components: component is not a simple alternating cycle");
            seen[v] = 1;
            comp.push_back(v);
            v = use_osc ? osc[v] : fl[v];
            use_osc = !use_osc;
        } while (v != start);
        if (comp.size() % 2 != 0)
            throw numeric_error("connected_components: odd alternating cycle encountered");
        std::sort(comp.begin(), comp.end());
        out.sizes.push_back(static_cast<int>(comp.size()));
        out.components.push_back(std::move(comp));
    }
    return out;
}

BigRat linked_cluster_pair_count(int n) {
    if (n < 1) throw numeric_error("linked_cluster_pair_count: n must be >= 1");
    BigRat total = 0;
    // Compositions (m_1..m_k) of n enumerated recursively.
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            const int k = static_cast<int>(parts.size());
            BigRat term(decomposition_count(n, parts), factorial(k));
            for (int ma : parts) term *= BigRat(connected_graph_count(ma), 1);
            total += term;
            return;
        }
        for (int ma = 1; ma <= remaining; ++ma) {
            parts.push_back(ma);
            rec(remaining - ma);
            parts.pop_back();
        }
    };
    rec(n);
    return total;
}

}  // namespace oscbath
