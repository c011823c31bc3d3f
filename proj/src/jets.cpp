#include "singpoincare/jets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace singpoincare {

namespace {

bool is_prime(long v) {
    if (v < 2) return false;
    for (long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

long mod_pow(long b, long e, long p) {
    long r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

long mod_inv(long a, long p) { return mod_pow(a, p - 2, p); }

}  // namespace

long long jet_count_at_depth(long c, long n, long q, long M) {
    if (c < 2 || n < 0 || !is_prime(q)) throw std::invalid_argument("need c >= 2, n >= 0, q prime");
    if (M < n) throw std::invalid_argument("depth below truncation order");

    // series carry coefficients at s^1..s^M; array index i holds the s^{i+1} one
    long qn = 1;
    for (long i = 0; i < n; ++i) qn *= q;
    std::vector<char> seen(size_t(qn) * qn * qn, 0);
    auto trunc_id = [&](const std::vector<long>& v) {
        long id = 0;
        for (long i = n - 1; i >= 0; --i) id = id * q + v[i];
        return id;
    };

    // per-y data: y^c mod s^{M+1}, its order, and the y truncation id
    struct YData {
        std::vector<long> yc;
        long ord;  // M+1 when y^c vanishes to depth M
        long id;
    };
    std::vector<YData> ys;
    std::vector<long> y(M, 0), pw, nx(M, 0);
    while (true) {
        YData d;
        pw = y;
        for (long rep = 1; rep < c; ++rep) {
            std::fill(nx.begin(), nx.end(), 0);
            for (long i = 0; i < M; ++i) {
                if (pw[i] == 0) continue;
                for (long j = 0; i + j + 1 < M; ++j)
                    if (y[j] != 0) nx[i + j + 1] = (nx[i + j + 1] + pw[i] * y[j]) % q;
            }
            pw = nx;
        }
        d.yc = pw;
        d.ord = M + 1;
        for (long i = 0; i < M; ++i)
            if (pw[i] != 0) {
                d.ord = i + 1;
                break;
            }
        d.id = trunc_id(y);
        ys.push_back(std::move(d));
        long pos = 0;
        while (pos < M && ++y[pos] == q) y[pos++] = 0;
        if (pos == M) break;
    }

    std::vector<long> x(M, 0), z(std::max(n, 1L), 0);
    while (true) {
        long v = M + 1;  // ord(x)
        for (long i = 0; i < M; ++i)
            if (x[i] != 0) {
                v = i + 1;
                break;
            }
        const long xid = trunc_id(x);
        for (const auto& yd : ys) {
            if (v == M + 1) {
                // x = 0 to depth M: need y^c = 0 as well; z is unconstrained
                if (yd.ord == M + 1)
                    for (long id = 0; id < qn; ++id)
                        seen[(size_t(xid) * qn + yd.id) * qn + id] = 1;
                continue;
            }
            if (yd.ord <= v) continue;  // x z has order > v, no solution
            // z = y^c / x by forward substitution; z_j determined for j <= M - v
            const long solvable = M - v;
            const long zlen = std::min(solvable, n);
            const long inv = mod_inv(x[v - 1], q);
            for (long j = 1; j <= zlen; ++j) {
                long acc = yd.yc[v + j - 1];
                for (long w = 1; w < j; ++w) {
                    const long xi = v + j - w;
                    if (x[xi - 1] != 0) acc -= x[xi - 1] * z[w - 1];
                }
                z[j - 1] = ((acc % q) + q) % q * inv % q;
            }
            if (solvable >= n) {
                seen[(size_t(xid) * qn + yd.id) * qn + trunc_id(z)] = 1;
            } else {
                long fixed = 0, base = 1, freecnt = 1;
                for (long i = solvable - 1; i >= 0; --i) fixed = fixed * q + z[i];
                for (long i = 0; i < solvable; ++i) base *= q;
                for (long i = 0; i < n - solvable; ++i) freecnt *= q;
                for (long f = 0; f < freecnt; ++f)
                    seen[(size_t(xid) * qn + yd.id) * qn + (f * base + fixed)] = 1;
            }
        }
        long pos = 0;
        while (pos < M && ++x[pos] == q) x[pos++] = 0;
        if (pos == M) break;
    }
    long long cnt = 0;
    for (char b : seen) cnt += b;
    return cnt;
}

JetCountResult liftable_jet_count(const JetCountRequest& req) {
    auto cost = [&](long depth) { return std::pow(double(req.q), 3.0 * depth); };
    long M = std::max(req.n + 2, req.c);
    if (cost(M) > req.budget)
        throw std::runtime_error("jet enumeration budget exceeded before the first depth");
    long long prev = jet_count_at_depth(req.c, req.n, req.q, M);
    while (M < req.max_depth) {
        if (cost(M + 1) > req.budget)
            throw std::runtime_error("jet enumeration budget exceeded before stabilization");
        long long next = jet_count_at_depth(req.c, req.n, req.q, M + 1);
        if (next > prev) throw std::logic_error("truncation counts must be non-increasing");
        if (next == prev) return {next, M, true};
        prev = next;
        ++M;
    }
    return {prev, M, false};
}

namespace {

struct DxSearch {
    long p = 2, m = 2, d = 1;
    std::vector<long> kexp;
    std::vector<long> ax, ay;  // targets; index = power of s, length d
    std::vector<long> phi;

    // truncated power phi^e, coefficients of s^0..s^{d-1}
    std::vector<long> power(long e) const {
        auto mul = [&](const std::vector<long>& u, const std::vector<long>& w) {
            std::vector<long> t(d, 0);
            for (long i = 0; i < d; ++i) {
                if (u[i] == 0) continue;
                for (long j = 0; i + j < d; ++j)
                    if (w[j] != 0) t[i + j] = (t[i + j] + u[i] * w[j]) % p;
            }
            return t;
        };
        std::vector<long> r(d, 0), base = phi;
        r[0] = 1 % p;
        for (long ee = e; ee > 0; ee >>= 1) {
            if (ee & 1) r = mul(r, base);
            if (ee > 1) base = mul(base, base);
        }
        return r;
    }

    // coefficients below the first order a tail coefficient can reach are
    // final; reject as soon as a final coefficient of either difference is
    // nonzero, with phi fixed up to index `level`
    bool viable(long level) const {
        long ordphi = -1;
        for (long i = 0; i <= level; ++i)
            if (phi[i] != 0) {
                ordphi = i;
                break;
            }
        auto final_below = [&](long kmin) {
            long t = (ordphi < 0) ? kmin * (level + 1) : (level + 1) + (kmin - 1) * ordphi;
            return std::min(t, d);
        };
        std::vector<long> pm = power(m);
        for (long i = 0, ta = final_below(m); i < ta; ++i)
            if ((ax[i] - pm[i]) % p != 0) return false;
        std::vector<long> g(d, 0);
        for (long e : kexp) {
            std::vector<long> pe = power(e);
            for (long i = 0; i < d; ++i) g[i] = (g[i] + pe[i]) % p;
        }
        for (long i = 0, tb = final_below(kexp.front()); i < tb; ++i)
            if ((ay[i] - g[i]) % p != 0) return false;
        return true;
    }

    bool dfs(long level) {
        if (level == d) return true;  // viable(d-1) already checked all of [0, d)
        for (long v = 0; v < p; ++v) {
            phi[level] = v;
            if (viable(level) && dfs(level + 1)) return true;
        }
        phi[level] = 0;
        return false;
    }
};

}  // namespace

DxSearchResult dx_search_oracle(const CurveBranch& br, const std::vector<long>& ax,
                                const std::vector<long>& ay, long p, long depth) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    CurveResolution res = build_chains(br);  // validates the branch data
    if (br.mult % p == 0) throw std::invalid_argument("p divides the branch multiplicity");
    for (const auto& row : res.table.r)
        for (long rij : row)
            if (rij % p == 0) throw std::invalid_argument("p divides a block multiplicity");

    auto run_check = [&](long d) {
        DxSearch s;
        s.p = p;
        s.m = br.mult;
        s.d = d;
        s.kexp = br.exponents;
        s.ax.assign(d, 0);
        s.ay.assign(d, 0);
        for (size_t i = 0; i < ax.size() && long(i) < d; ++i) s.ax[i] = ((ax[i] % p) + p) % p;
        for (size_t i = 0; i < ay.size() && long(i) < d; ++i) s.ay[i] = ((ay[i] % p) + p) % p;
        s.phi.assign(d, 0);
        return s.dfs(0);
    };

    // "contact order >= d" is monotone in d; binary search the largest witness
    if (run_check(depth)) return {true, depth};
    long lo = 0, hi = depth;
    while (lo + 1 < hi) {
        long mid = lo + (hi - lo) / 2;
        if (run_check(mid))
            lo = mid;
        else
            hi = mid;
    }
    return {false, lo};
}

}  // namespace singpoincare
