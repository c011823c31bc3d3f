#include "singpoincare/curve.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace singpoincare {

std::string NodeId::str() const {
    std::ostringstream out;
    out << "E" << i << "." << j << "." << k;
    return out.str();
}

std::string ExtNat::str() const {
    return infinite ? "infinity" : std::to_string(value);
}

ExtNat en_add(ExtNat a, long b) {
    return a.infinite ? a : ExtNat::fin(a.value + b);
}

ExtNat en_min(ExtNat a, ExtNat b) {
    if (a.infinite) return b;
    if (b.infinite) return a;
    return ExtNat::fin(std::min(a.value, b.value));
}

ExtNat en_max(ExtNat a, ExtNat b) {
    if (a.infinite || b.infinite) return ExtNat::inf();
    return ExtNat::fin(std::max(a.value, b.value));
}

const ChainNode& CurveResolution::node(NodeId id) const {
    for (const auto& n : nodes)
        if (n.id == id) return n;
    throw std::invalid_argument("unknown divisor " + id.str());
}

bool CurveResolution::has_node(NodeId id) const {
    for (const auto& n : nodes)
        if (n.id == id) return true;
    return false;
}

CurveResolution build_chains(const CurveBranch& br) {
    CurveResolution res;
    res.branch = br;
    res.table = euclid_table(br.mult, br.exponents);
    const auto& a = res.table.a;
    const auto& r = res.table.r;
    const long s = res.table.stages();

    // adjacency splice: a blow-up at a free point of A attaches to A; a blow-up
    // at A * B separates the pair and attaches to both
    std::vector<std::vector<int>> adj;
    auto link = [&adj](int x, int y) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    };
    auto unlink = [&adj](int x, int y) {
        std::erase(adj[x], y);
        std::erase(adj[y], x);
    };

    auto create = [&](NodeId id, long rm, const std::vector<int>& parents) -> int {
        ChainNode n;
        n.id = id;
        n.r = rm;
        n.N = rm;
        n.mu = parents.empty() ? 1 : 0;
        long jac = 1;
        for (int p : parents) {
            n.N += res.nodes[p].N;
            n.mu += res.nodes[p].mu;
            jac += res.nodes[p].nu - 1;
        }
        n.M = n.N;
        for (int p : parents) n.M -= res.nodes[p].N;
        n.nu = jac + 1;
        res.nodes.push_back(n);
        adj.emplace_back();
        int idx = int(res.nodes.size()) - 1;
        if (parents.size() == 2) unlink(parents[0], parents[1]);
        for (int p : parents) link(idx, p);
        return idx;
    };

    int prev_f = -1;
    for (long i = 1; i <= s; ++i) {
        const long w = res.table.w[i - 1];
        std::vector<int> block_last(w + 1, -1);
        int last = -1;
        for (long j = 1; j <= w; ++j) {
            const long aij = a[i - 1][j - 1];
            if (aij == 0) {
                // empty first block: the anchor for block 2 is the previous stage's end
                block_last[j] = prev_f;
                continue;
            }
            for (long k = 1; k <= aij; ++k) {
                std::vector<int> parents;
                if (j == 1) {
                    if (k == 1) {
                        if (i > 1) parents = {prev_f};
                    } else {
                        parents = {last};
                    }
                } else if (k == 1) {
                    if (j == 2)
                        parents = {block_last[1]};  // tangential: a free point of the anchor
                    else
                        parents = {block_last[j - 1], block_last[j - 2]};
                } else {
                    parents = {last, block_last[j - 1]};
                }
                last = create({i, j, k}, r[i - 1][j - 1], parents);
            }
            block_last[j] = last;
        }
        res.nodes[block_last[w]].is_F = true;
        prev_f = block_last[w];
    }
    res.strict_meets = res.nodes[prev_f].id;

    // record neighbors and per-stage spatial chains by walking the final graph
    for (size_t x = 0; x < res.nodes.size(); ++x)
        for (int y : adj[x]) res.nodes[x].neighbors.push_back(res.nodes[y].id);

    for (long i = 1; i <= s; ++i) {
        std::vector<int> members;
        for (size_t x = 0; x < res.nodes.size(); ++x)
            if (res.nodes[x].id.i == i) members.push_back(int(x));
        // spatial chain: start from the degree-<=1 end within the stage
        auto stage_deg = [&](int x) {
            int d = 0;
            for (int y : adj[x])
                if (res.nodes[y].id.i == i) ++d;
            return d;
        };
        int start = members.front();
        for (int x : members)
            if (stage_deg(x) <= 1 && res.nodes[x].id.j == 1) start = x;
        std::vector<NodeId> chain;
        int prev = -1, cur = start;
        while (true) {
            chain.push_back(res.nodes[cur].id);
            int next = -1;
            for (int y : adj[cur])
                if (y != prev && res.nodes[y].id.i == i) next = y;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
        if (chain.size() != members.size())
            throw std::logic_error("stage subgraph is not a chain");
        res.chains.push_back(std::move(chain));
    }
    return res;
}

long multiplicity_n(const CurveResolution& res, const ContactProfile& p) {
    if (p.kind == LocKind::off_x || p.kind == LocKind::on_curve) return 0;
    if (p.nodes.size() != p.gammas.size() || p.nodes.empty())
        throw std::invalid_argument("profile needs aligned nodes and contact orders");
    long n = 0;
    for (size_t i = 0; i < p.nodes.size(); ++i) {
        if (p.gammas[i] < 1) throw std::invalid_argument("contact orders must be >= 1");
        n += res.node(p.nodes[i]).mu * p.gammas[i];
    }
    return n;
}

namespace {

// k_{i-1} + sum over completed odd blocks below j of a_{i,j'} r_{i,j'}, plus
// k steps into block j
long odd_block_offset(const CurveResolution& res, long i, long j, long k) {
    const auto& t = res.table;
    long acc = (i >= 2) ? t.k[i - 2] : 0;
    for (long jp = 1; jp < j; jp += 2) acc += t.a[i - 1][jp - 1] * t.r[i - 1][jp - 1];
    return acc + k * t.r[i - 1][j - 1];
}

}  // namespace

ExtNat dx_curve(const CurveResolution& res, const ContactProfile& p) {
    if (p.kind == LocKind::off_x) return ExtNat::fin(0);
    if (p.kind == LocKind::on_curve) return ExtNat::inf();

    const long m = res.branch.mult;
    const long n = multiplicity_n(res, p);

    if (p.kind == LocKind::on_strict) {
        NodeId id = p.nodes.at(0);
        if (!(id == res.strict_meets))
            throw dx_unsupported("the strict transform only meets " + res.strict_meets.str());
        if (p.gamma_strict < 1)
            throw std::invalid_argument("on_strict profile needs a positive strict contact");
        // here mu(F_s) = m, so lambda = gamma(F_s)
        const long lambda = p.gammas.at(0);
        const long ks = res.table.k.back();
        return ExtNat::fin(lambda * ks + p.gamma_strict);
    }

    if (p.kind == LocKind::interior) {
        NodeId id = p.nodes.at(0);
        const ChainNode& nd = res.node(id);
        if (id.i == 1 && id.j == 1 && id.k == 1) return ExtNat::fin(n);
        if (n % m != 0) return ExtNat::fin(n);
        const long lambda = n / m;
        if (id.j % 2 == 0) {
            if (nd.is_F)
                throw dx_unsupported("interior of " + id.str() +
                                     ": stage ends in an even block, no formula printed");
            return ExtNat::fin(lambda * res.table.k[id.i - 1]);
        }
        return ExtNat::fin(lambda * odd_block_offset(res, id.i, id.j, id.k));
    }

    // intersections
    NodeId a = p.nodes.at(0), b = p.nodes.at(1);
    long ga = p.gammas.at(0), gb = p.gammas.at(1);
    if (std::make_pair(a.i, std::make_pair(a.j, a.k)) >
        std::make_pair(b.i, std::make_pair(b.j, b.k))) {
        std::swap(a, b);
        std::swap(ga, gb);
    }
    const auto& na = res.node(a);
    const auto& nb = res.node(b);
    bool adjacent = false;
    for (const auto& nid : na.neighbors)
        if (nid == b) adjacent = true;
    if (!adjacent) throw std::invalid_argument(a.str() + " and " + b.str() + " do not meet");
    (void)nb;

    if (a.i != b.i)
        throw dx_unsupported("junction between stages " + a.str() + " and " + b.str() +
                             ": no formula printed");
    if (n % m != 0) return ExtNat::fin(n);
    const long lambda = n / m;
    const long w = res.table.w[a.i - 1];
    const long a_aj = res.table.a[a.i - 1][a.j - 1];

    if (a.j == b.j) {
        if (a.j % 2 == 0) {
            if (nb.is_F && a.j == w)
                throw dx_unsupported("junction inside the final even block at " + b.str() +
                                     ": no formula printed");
            throw dx_unsupported("intersection inside even block " + a.str() + " * " + b.str() +
                                 ": no formula printed");
        }
        // consecutive positions k, k+1 of an odd block
        return ExtNat::fin(lambda * odd_block_offset(res, a.i, a.j, a.k) + gb);
    }
    if (b.j == a.j + 2 && a.j % 2 == 1 && a.k == a_aj && b.k == 1) {
        return ExtNat::fin(lambda * odd_block_offset(res, a.i, a.j, a_aj) + gb);
    }
    if (nb.is_F && b.j == w && w % 2 == 0 && a.j == w - 1 && a.k == a_aj) {
        return ExtNat::fin(lambda * odd_block_offset(res, a.i, a.j, a_aj) + gb);
    }
    if (nb.is_F && w % 2 == 1)
        throw dx_unsupported("junction at " + b.str() +
                             " with an odd block count: no formula printed");
    throw dx_unsupported("intersection " + a.str() + " * " + b.str() + ": no formula printed");
}

long contact_lambda(const std::vector<std::pair<long, long>>& components) {
    if (components.empty() || components.size() > 2)
        throw std::invalid_argument("contact decomposition has one or two components");
    if (components.size() == 2) {
        long diff = components[0].first - components[1].first;
        if (diff != 1 && diff != -1)
            throw std::invalid_argument("component depths must differ by exactly one");
    }
    long lambda = 0;
    for (const auto& [e, g] : components) {
        if (e < 1 || g < 1) throw std::invalid_argument("depths and contacts must be >= 1");
        lambda += e * g;
    }
    return lambda;
}

ExtNat dx_nontransversal(ExtNat d_zbar, ExtNat d_wprime, long e, long cpsi_e,
                         const NontransversalContacts& c) {
    if (e < 1) throw std::invalid_argument("tangency depth must be >= 1");
    const long csum = c.cE + c.cEp + c.cEpp;
    ExtNat first = ExtNat::inf();
    if (!d_zbar.infinite) {
        const long a = std::min({csum / 2, c.cEp + c.cHp, c.cEpp + c.cHpp});
        const long b = std::min(c.cEp + c.cHp, c.cE + c.cEp - c.cHpp);
        const long cc = std::min(c.cEpp + c.cHpp, c.cE + c.cEpp - c.cHp);
        first = ExtNat::fin(d_zbar.value + e * csum + std::max({a, b, cc}));
    }
    ExtNat second = d_wprime.infinite ? ExtNat::inf()
                                      : ExtNat::fin(d_wprime.value + e * cpsi_e);
    return en_min(first, second);
}

}  // namespace singpoincare
