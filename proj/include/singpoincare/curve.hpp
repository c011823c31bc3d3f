#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "singpoincare/contfrac.hpp"

namespace singpoincare {

// Plane branch x = u^m, y = u^{k_1} + u^{k_2} + ... with m < k_1 < k_2 < ...
// and gcd(m, k_1, ..., k_s) = 1.
struct CurveBranch {
    long mult = 0;
    std::vector<long> exponents;
};

struct NodeId {
    long i = 0, j = 0, k = 0;  // stage, block, position; all 1-based
    bool operator==(const NodeId&) const = default;
    std::string str() const;
};

// One exceptional divisor of the embedded resolution. N is the pullback order
// of the branch, nu the log-Jacobian order plus one, M = N - sum N(parents)
// (equal to the block divisor r_{i,j}), mu the multiplicity of the divisor in
// the arc-lift sense (sum over parents, 1 for a first blow-up).
struct ChainNode {
    NodeId id;
    long r = 0;
    long N = 0, nu = 0, M = 0, mu = 0;
    bool is_F = false;  // last divisor of its stage
    std::vector<NodeId> neighbors;
};

struct CurveResolution {
    CurveBranch branch;
    EuclidTable table;
    std::vector<ChainNode> nodes;            // creation order
    std::vector<std::vector<NodeId>> chains;  // spatial order per stage
    NodeId strict_meets;                      // F_s, the divisor meeting the strict transform

    const ChainNode& node(NodeId id) const;
    bool has_node(NodeId id) const;
};

CurveResolution build_chains(const CurveBranch& br);

// Where an arc meets the resolved surface, with contact orders.
enum class LocKind { off_x, on_curve, interior, intersection, on_strict };

struct ContactProfile {
    LocKind kind = LocKind::off_x;
    std::vector<NodeId> nodes;    // 1 id for interior/on_strict, 2 for intersection
    std::vector<long> gammas;     // aligned with nodes
    long gamma_strict = 0;        // contact with the strict transform (on_strict)
};

// multiplicity n of the traced arc, sum of mu * gamma over exceptional contacts
long multiplicity_n(const CurveResolution& res, const ContactProfile& p);

// Extended natural number; value may be negative in intermediate formula terms.
struct ExtNat {
    bool infinite = false;
    long value = 0;
    static ExtNat inf() { return {true, 0}; }
    static ExtNat fin(long v) { return {false, v}; }
    bool operator==(const ExtNat&) const = default;
    std::string str() const;
};

ExtNat en_add(ExtNat a, long b);
ExtNat en_min(ExtNat a, ExtNat b);
ExtNat en_max(ExtNat a, ExtNat b);

// Contact configurations with no printed contact-order formula.
struct dx_unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contact order of the branch along an arc with the given profile, by the
// case-by-case formulas. Throws dx_unsupported for uncovered configurations.
ExtNat dx_curve(const CurveResolution& res, const ContactProfile& p);

// lambda of a contact decomposition: components (depth e, contact gamma);
// at most two components, and for two the depths differ by exactly one.
long contact_lambda(const std::vector<std::pair<long, long>>& components);

// Contact orders of an arc with the local normal crossings data around a
// depth-e tangency point: the two halves of the tangent cone E', E'' with
// their tangency partners H', H'', and the remaining divisor E.
struct NontransversalContacts {
    long cE = 0, cEp = 0, cEpp = 0, cHp = 0, cHpp = 0;
};

// min/max evaluation of the contact order through a depth-e tangency:
//   min( d_zbar + e*(cE+cE'+cE'') + max(A, B, C), d_wprime + e*cpsiE )
// with A = min(floor((cE+cE'+cE'')/2), cE'+cH', cE''+cH''),
//      B = min(cE'+cH', cE+cE'-cH''), C = min(cE''+cH'', cE+cE''-cH').
ExtNat dx_nontransversal(ExtNat d_zbar, ExtNat d_wprime, long e, long cpsi_e,
                         const NontransversalContacts& c);

}  // namespace singpoincare
