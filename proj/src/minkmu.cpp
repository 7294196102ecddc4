#include "ffgeom/minkmu.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "ffgeom/errors.hpp"
#include "ffgeom/fpmat.hpp"

namespace ffgeom {

MuInstance MuInstance::make(const FieldSpec& field, int dim, const LaurentTail& theta,
                            const LaurentTail& phi) {
    if (dim != 2 && dim != 3) throw BadDimensions();
    if (theta.p() != field.p()) throw FieldMismatch();
    LaurentTail ph = phi;
    if (dim == 2)
        ph = LaurentTail(field.p());
    else if (ph.p() != field.p()) {
        if (ph.p() == 0)
            ph = LaurentTail(field.p());
        else
            throw FieldMismatch();
    }
    const int h = std::max({1, theta.denom(), ph.denom()});
    return MuInstance{field, dim, theta, ph, h};
}

LatticeBasis make_unipotent_lattice(const MuInstance& inst) {
    const std::uint32_t p = inst.field.p();
    const std::size_t d = static_cast<std::size_t>(inst.dim);
    KMatrix g = KMatrix::identity(p, d);
    g.at(0, d - 1) = tail_to_ratfunc(inst.theta);
    if (inst.dim == 3) g.at(1, d - 1) = tail_to_ratfunc(inst.phi);
    return LatticeBasis(inst.field, std::move(g));
}

namespace {

constexpr int kInf = 1 << 20;

// A parameter triple of the covering search: deg N = m, with the first
// e1 - 1 coefficients of <N theta> - alpha and the first e2 - 1 of
// <N phi> - beta required to vanish (e2 = 0 when d = 2). Solvability over
// the prefix pair is membership in the column space of the stacked Hankel
// system; Yt/Yp are the parity checks.
struct Triple {
    int m, e1, e2;
    int kt;
    std::vector<std::uint32_t> Yt, Yp;  // kt x (e1-1), kt x (e2-1)
    bool ker_nontrivial;
};

std::vector<Triple> build_triples(const MuInstance& inst, int T) {
    const std::uint32_t p = inst.field.p();
    const int h = inst.h;
    std::vector<Triple> ts;
    auto add = [&](int m, int e1, int e2) {
        const int rows = (e1 - 1) + (e2 - 1 > 0 ? e2 - 1 : 0);
        FpMatrix H(p, static_cast<std::size_t>(rows), static_cast<std::size_t>(m + 1));
        for (int r = 0; r < e1 - 1; ++r)
            for (int c = 0; c <= m; ++c)
                H.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                    inst.theta.coeff(1 + r + c);
        for (int r = 0; r < e2 - 1; ++r)
            for (int c = 0; c <= m; ++c)
                H.at(static_cast<std::size_t>(e1 - 1 + r), static_cast<std::size_t>(c)) =
                    inst.phi.coeff(1 + r + c);
        Triple t;
        t.m = m;
        t.e1 = e1;
        t.e2 = e2;
        auto Y = left_nullspace_fp(H);
        t.kt = static_cast<int>(Y.size());
        for (const auto& y : Y) {
            for (int i = 0; i < e1 - 1; ++i) t.Yt.push_back(y[static_cast<std::size_t>(i)]);
            for (int i = 0; i < e2 - 1; ++i)
                t.Yp.push_back(y[static_cast<std::size_t>(e1 - 1 + i)]);
        }
        t.ker_nontrivial = !nullspace_fp(H).empty();
        ts.push_back(std::move(t));
    };
    for (int m = 0; m < h; ++m) {
        if (inst.dim == 2) {
            const int e1 = m + T;
            if (e1 <= h + 1) add(m, e1, 0);
        } else {
            const int lo = std::max(1, m + T - (h + 1));
            const int hi = std::min(h + 1, m + T - 1);
            for (int e1 = lo; e1 <= hi; ++e1) add(m, e1, m + T - e1);
        }
    }
    return ts;
}

// Tails of length h with first nonzero coefficient at index c, in
// lexicographic order; class h + 1 holds the single zero tail.
std::vector<std::vector<std::uint32_t>> class_members(std::uint32_t p, int h, int c) {
    std::vector<std::vector<std::uint32_t>> out;
    if (c == h + 1) {
        out.emplace_back(static_cast<std::size_t>(h), 0);
        return out;
    }
    const int free = h - c;
    double bits = (1 + free) * std::log2(static_cast<double>(p));
    if (bits > 22) throw Error("mu remainder enumeration too large");
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(h), 0);
    digits[static_cast<std::size_t>(c) - 1] = 1;
    for (;;) {
        out.push_back(digits);
        // odometer, most significant digit at the class position
        int k = h - 1;
        while (k >= c - 1) {
            const std::uint32_t lo = (k == c - 1) ? 1 : 0;
            if (++digits[static_cast<std::size_t>(k)] < p) break;
            digits[static_cast<std::size_t>(k)] = lo;
            --k;
        }
        if (k < c - 1) break;
    }
    return out;
}

std::uint64_t dot_key(const std::vector<std::uint32_t>& Y, int kt, int len,
                      const std::vector<std::uint32_t>& digits, std::uint32_t p, bool negate) {
    std::uint64_t key = 0;
    for (int r = 0; r < kt; ++r) {
        std::uint64_t acc = 0;
        const std::uint32_t* row = Y.data() + static_cast<std::size_t>(r) * len;
        for (int i = 0; i < len; ++i) acc += static_cast<std::uint64_t>(row[i]) * digits[static_cast<std::size_t>(i)];
        std::uint32_t v = static_cast<std::uint32_t>(acc % p);
        if (negate) v = fp_neg(p, v);
        key = key * p + v;
    }
    return key;
}

struct Bitset {
    std::vector<std::uint64_t> w;
    explicit Bitset(std::size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= 1ull << (i & 63); }
};

class D3Search {
public:
    D3Search(const MuInstance& inst, int T, int workers)
        : inst_(inst), T_(T), workers_(std::max(1, workers)) {}

    MuDecision run() {
        triples_ = build_triples(inst_, T_);
        const int h = inst_.h;
        for (int ca = 1; ca <= h + 1; ++ca) {
            for (int cb = 1; cb <= h + 1 && ca + cb <= T_ - 2; ++cb) {
                auto w = scan_class_pair(ca, cb);
                if (w) return MuDecision{false, std::move(w)};
            }
        }
        return MuDecision{true, std::nullopt};
    }

private:
    const std::vector<std::vector<std::uint32_t>>& members(int c) {
        auto it = member_cache_.find(c);
        if (it == member_cache_.end())
            it = member_cache_.emplace(c, class_members(inst_.field.p(), inst_.h, c)).first;
        return it->second;
    }

    std::optional<MuWitness> scan_class_pair(int ca, int cb) {
        const std::uint32_t p = inst_.field.p();
        const auto& A = members(ca);
        const auto& B = members(cb);
        const std::size_t na = A.size();
        const std::size_t nwords = (na + 63) / 64;
        const std::uint64_t last_mask =
            (na % 64) ? ((1ull << (na % 64)) - 1) : ~0ull;

        // per-triple buckets over the alpha class, keyed by the parity-check
        // value of the theta prefix
        struct Table {
            bool usable = true;
            bool beta_pref_zero = false;
            std::unordered_map<std::uint64_t, Bitset> buckets;
        };
        std::vector<Table> tables(triples_.size());
        for (std::size_t t = 0; t < triples_.size(); ++t) {
            const Triple& tr = triples_[t];
            Table& tb = tables[t];
            const bool alpha_pref_zero = ca > tr.e1 - 1;
            tb.beta_pref_zero = cb > tr.e2 - 1;
            if (!tr.ker_nontrivial && alpha_pref_zero && tb.beta_pref_zero) {
                tb.usable = false;  // only the zero solution, never covers
                continue;
            }
            for (std::size_t i = 0; i < na; ++i) {
                const std::uint64_t key = dot_key(tr.Yt, tr.kt, tr.e1 - 1, A[i], p, false);
                auto [it, fresh] = tb.buckets.try_emplace(key, Bitset(na));
                it->second.set(i);
            }
        }

        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> hit_block{SIZE_MAX};
        std::mutex mu;
        std::size_t hit_b = 0, hit_a = 0;
        const std::size_t block = 64;
        const std::size_t nblocks = (B.size() + block - 1) / block;

        auto worker = [&]() {
            std::vector<std::uint64_t> cov(nwords);
            std::vector<std::uint64_t> need(triples_.size());
            for (;;) {
                const std::size_t blk = next.fetch_add(1);
                if (blk >= nblocks || blk > hit_block.load()) break;
                const std::size_t lo = blk * block;
                const std::size_t hi = std::min(B.size(), lo + block);
                for (std::size_t bi = lo; bi < hi; ++bi) {
                    std::fill(cov.begin(), cov.end(), 0);
                    bool full = false;
                    for (std::size_t t = 0; t < triples_.size() && !full; ++t) {
                        if (!tables[t].usable) continue;
                        const Triple& tr = triples_[t];
                        const std::uint64_t key =
                            dot_key(tr.Yp, tr.kt, tr.e2 - 1, B[bi], p, true);
                        auto it = tables[t].buckets.find(key);
                        if (it == tables[t].buckets.end()) continue;
                        const auto& w = it->second.w;
                        std::uint64_t all = ~0ull;
                        for (std::size_t k = 0; k < nwords; ++k) {
                            cov[k] |= w[k];
                            all &= (k + 1 == nwords) ? (cov[k] | ~last_mask) : cov[k];
                        }
                        full = all == ~0ull;
                    }
                    if (!full) {
                        std::size_t ai = 0;
                        for (std::size_t k = 0; k < nwords; ++k) {
                            std::uint64_t miss = ~cov[k];
                            if (k + 1 == nwords) miss &= last_mask;
                            if (miss) {
                                ai = k * 64 + static_cast<std::size_t>(__builtin_ctzll(miss));
                                break;
                            }
                        }
                        std::lock_guard<std::mutex> lk(mu);
                        if (blk < hit_block.load() ||
                            (blk == hit_block.load() && bi < hit_b)) {
                            hit_block.store(blk);
                            hit_b = bi;
                            hit_a = ai;
                        }
                        break;  // later members of this block cannot precede bi
                    }
                }
            }
        };

        const std::size_t nthreads =
            std::min<std::size_t>(static_cast<std::size_t>(workers_), nblocks);
        if (nthreads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }

        if (hit_block.load() == SIZE_MAX) return std::nullopt;
        MuWitness w{LaurentTail(p, A[hit_a]), LaurentTail(p, B[hit_b]), T_};
        return w;
    }

    const MuInstance& inst_;
    int T_;
    int workers_;
    std::vector<Triple> triples_;
    std::unordered_map<int, std::vector<std::vector<std::uint32_t>>> member_cache_;
};

std::optional<MuWitness> scan_d2(const MuInstance& inst, int T,
                                 const std::vector<Triple>& triples) {
    const std::uint32_t p = inst.field.p();
    for (int ca = 1; ca <= inst.h + 1 && 1 + ca < T; ++ca) {
        for (const auto& alpha : class_members(p, inst.h, ca)) {
            bool covered = false;
            for (const Triple& tr : triples) {
                const bool pref_zero = ca > tr.e1 - 1;
                if (pref_zero && !tr.ker_nontrivial) continue;
                if (dot_key(tr.Yt, tr.kt, tr.e1 - 1, alpha, p, false) == 0) {
                    covered = true;
                    break;
                }
            }
            if (!covered)
                return MuWitness{LaurentTail(p, alpha), LaurentTail(p), T};
        }
    }
    return std::nullopt;
}

}  // namespace

MuDecision mu_decision(const MuInstance& inst, int T, int workers) {
    if (T <= inst.dim) {
        if (T < 1) throw BadThreshold();
        return MuDecision{true, std::nullopt};  // Minkowski bound, trivially covered
    }
    if (inst.dim == 2) {
        auto w = scan_d2(inst, T, build_triples(inst, T));
        return MuDecision{!w.has_value(), std::move(w)};
    }
    return D3Search(inst, T, workers).run();
}

MuResult mu_exact(const MuInstance& inst, int workers) {
    const int cap = 2 * inst.h + 3;
    for (int T = inst.dim + 1; T <= cap; ++T) {
        MuDecision dec = mu_decision(inst, T, workers);
        if (!dec.holds) return MuResult{AbsValue::power(-(T - 1)), std::move(dec.witness)};
    }
    throw Error("mu scan failed to terminate at the clamp cap");
}

MuResult mu_brute_oracle(const MuInstance& inst, int tail_precision) {
    const int h = inst.h;
    const int P = tail_precision;
    if (P < h + 1) throw PrecisionTooLow();
    const std::uint32_t p = inst.field.p();
    const bool d3 = inst.dim == 3;

    double bits = (d3 ? 2.0 * P : 1.0 * P) * std::log2(static_cast<double>(p));
    if (bits + h * std::log2(static_cast<double>(p)) > 34) throw Error("oracle too large");

    // all tails of length P, lexicographic
    std::vector<std::vector<std::uint32_t>> tails;
    {
        std::vector<std::uint32_t> digits(static_cast<std::size_t>(P), 0);
        for (;;) {
            tails.push_back(digits);
            int k = P - 1;
            while (k >= 0) {
                if (++digits[static_cast<std::size_t>(k)] < p) break;
                digits[static_cast<std::size_t>(k)] = 0;
                --k;
            }
            if (k < 0) break;
        }
    }
    const std::size_t nt = tails.size();

    auto first_nz = [&](const std::vector<std::uint32_t>& t) {
        for (std::size_t j = 0; j < t.size(); ++j)
            if (t[j] != 0) return static_cast<int>(j) + 1;
        return kInf;
    };

    // nonzero N with deg <= h-1; conv[i] = coefficient of x^{-(i+1)} in <N theta>
    struct Branch {
        int m;
        std::vector<std::uint32_t> conv_theta, conv_phi;
    };
    std::vector<Branch> branches;
    {
        std::vector<std::uint32_t> n(static_cast<std::size_t>(h), 0);
        for (;;) {
            int k = h - 1;
            while (k >= 0) {
                if (++n[static_cast<std::size_t>(k)] < p) break;
                n[static_cast<std::size_t>(k)] = 0;
                --k;
            }
            if (k < 0) break;
            Branch b;
            b.m = 0;
            for (int j = 0; j < h; ++j)
                if (n[static_cast<std::size_t>(j)] != 0) b.m = j;
            auto conv = [&](const LaurentTail& t) {
                std::vector<std::uint32_t> c(static_cast<std::size_t>(h), 0);
                for (int i = 1; i <= h; ++i) {
                    std::uint64_t acc = 0;
                    for (int j = 0; j < h; ++j)
                        acc += static_cast<std::uint64_t>(n[static_cast<std::size_t>(j)]) *
                               t.coeff(i + j);
                    c[static_cast<std::size_t>(i) - 1] = static_cast<std::uint32_t>(acc % p);
                }
                return c;
            };
            b.conv_theta = conv(inst.theta);
            if (d3) b.conv_phi = conv(inst.phi);
            branches.push_back(std::move(b));
        }
    }

    // v(<N theta> - alpha), clamped to kInf when the difference vanishes
    auto mismatch = [&](const std::vector<std::uint32_t>& conv,
                        const std::vector<std::uint32_t>& tail) {
        for (int j = 1; j <= P; ++j) {
            const std::uint32_t c = (j <= h) ? conv[static_cast<std::size_t>(j) - 1] : 0;
            if (c != tail[static_cast<std::size_t>(j) - 1]) return j;
        }
        return kInf;
    };

    // per-branch mismatch tables, then a max-plus scan over all pairs
    const std::size_t nb = branches.size();
    std::vector<std::int32_t> vt(nb * nt), vp;
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t a = 0; a < nt; ++a)
            vt[b * nt + a] = mismatch(branches[b].conv_theta, tails[a]);
    if (d3) {
        vp.resize(nb * nt);
        for (std::size_t b = 0; b < nb; ++b)
            for (std::size_t a = 0; a < nt; ++a)
                vp[b * nt + a] = mismatch(branches[b].conv_phi, tails[a]);
    }

    int best = kInf;
    std::size_t best_a = 0, best_b = 0;
    if (d3) {
        for (std::size_t ai = 0; ai < nt; ++ai) {
            const int va = first_nz(tails[ai]);
            for (std::size_t bi = 0; bi < nt; ++bi) {
                int cost = 1 + std::min(va + first_nz(tails[bi]), kInf);
                if (cost >= best) continue;
                for (std::size_t b = 0; b < nb && cost < best; ++b) {
                    const int c = vt[b * nt + ai] + vp[b * nt + bi] - branches[b].m;
                    if (c > cost) cost = c;
                }
                if (cost < best) {
                    best = cost;
                    best_a = ai;
                    best_b = bi;
                }
            }
        }
    } else {
        for (std::size_t ai = 0; ai < nt; ++ai) {
            int cost = 1 + first_nz(tails[ai]);
            for (std::size_t b = 0; b < nb && cost < best; ++b) {
                const int c = vt[b * nt + ai] - branches[b].m;
                if (c > cost) cost = c;
            }
            if (cost < best) {
                best = cost;
                best_a = ai;
            }
        }
    }

    MuResult r{AbsValue::power(-best), std::nullopt};
    MuWitness w{LaurentTail(p, tails[best_a]),
                d3 ? LaurentTail(p, tails[best_b]) : LaurentTail(p), best + 1};
    r.witness = std::move(w);
    return r;
}

}  // namespace ffgeom
