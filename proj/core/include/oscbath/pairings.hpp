// pairings.hpp — perfect matchings of {1..2m} (Wick pairings), two-matching
// graphs, connected-component decomposition and the exact counting identities
// behind the linked-cluster factorization.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <utility>
#include <vector>

namespace oscbath {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// A perfect matching of {1,...,2m} in canonical form: each pair (i,j) has
/// i < j, and pairs are sorted by first element.
struct Pairing {
    int m = 0;
    std::vector<std::pair<int, int>> pairs;

    bool operator==(const Pairing&) const = default;
};

/// Two matchings over the same point set; every point has degree exactly two,
/// one line of each kind.
struct PairGraph {
    Pairing osc_lines;
    Pairing f_lines;
};

/// Partition of the point set into connected components (each an alternating
/// cycle, hence of even size).
struct ComponentDecomposition {
    std::vector<std::vector<int>> components;
    std::vector<int> sizes;  // component sizes, 2*m_a each
};

// Enumeration refuses m beyond this without an explicit override:
// (2*12-1)!! ~ 3.2e8 matchings.
inline constexpr int kPairingEnumerationGuard = 12;

/// (2m)!/(2^m m!) = (2m-1)!!, the number of perfect matchings, exact.
BigInt pairing_count(int m);

/// (2m)!/(2m), the number of connected two-matching graphs on 2m points, exact.
BigInt connected_graph_count(int m);

/// Multinomial (2n)!/((2m_1)!...(2m_k)!) counting point-set decompositions
/// with prescribed even block sizes. Throws if the sizes do not sum to n.
BigInt decomposition_count(int n, const std::vector<int>& sizes);

/// Streams every perfect matching of {1,...,2m} exactly once, in canonical
/// form and deterministic (lexicographic) order. Throws guard_error for
/// m > kPairingEnumerationGuard unless override_guard is set.
void for_each_pairing(int m, const std::function<void(const Pairing&)>& fn,
                      bool override_guard = false);

std::vector<Pairing> all_pairings(int m, bool override_guard = false);

/// Unranking: the index-th pairing (0-based) in the canonical enumeration
/// order. Lets consumers split the stream into independent index ranges.
Pairing pairing_at(int m, const BigInt& index);

/// Connected components of the union of both line sets. Also verifies the
/// alternating-cycle structure of every component and throws numeric_error
/// with a description if a component fails to close into a single cycle.
ComponentDecomposition connected_components(const PairGraph& g);

/// Exact linked-cluster count: sum over k and compositions (m_1..m_k) of
/// (1/k!) * (2n)!/prod (2m_a)! * prod (2m_a)!/(2m_a). Equals pairing_count(n)^2
/// (the number of (P,P') pairs); the equality is the counting backbone of the
/// factorized series and is enforced by the acceptance suite.
BigRat linked_cluster_pair_count(int n);

}  // namespace oscbath
