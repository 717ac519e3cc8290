#include "agc/agcode.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace agc {

namespace {

// y-value lists keyed by the index of y^n
std::vector<std::vector<FqElem>> nth_root_table(const FieldPtr& f, int n) {
    std::vector<std::vector<FqElem>> table(f->q());
    for (long long i = 0; i < f->q(); ++i) {
        FqElem y = f->from_index(i);
        table[y.pow(n).index()].push_back(std::move(y));
    }
    return table;
}

struct Rref {
    std::vector<std::vector<FqElem>> rows;
    std::vector<long long> pivots;
};

Rref rref(std::vector<std::vector<FqElem>> m, const FieldPtr& f) {
    Rref out;
    if (m.empty()) return out;
    size_t nr = m.size(), nc = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < nc && r < nr; ++c) {
        size_t sel = nr;
        for (size_t i = r; i < nr; ++i) {
            if (!m[i][c].is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel == nr) continue;
        std::swap(m[r], m[sel]);
        FqElem inv = m[r][c].inverse();
        for (auto& x : m[r]) x = x * inv;
        for (size_t i = 0; i < nr; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            FqElem fct = m[i][c];
            for (size_t j = 0; j < nc; ++j) m[i][j] = m[i][j] - fct * m[r][j];
        }
        out.pivots.push_back(static_cast<long long>(c));
        ++r;
    }
    m.resize(r, std::vector<FqElem>(nc, f->zero()));
    out.rows = std::move(m);
    return out;
}

bool in_row_space(std::vector<FqElem> v, const Rref& rr) {
    for (size_t i = 0; i < rr.rows.size(); ++i) {
        long long c = rr.pivots[i];
        if (!v[c].is_zero()) {
            FqElem f = v[c];
            for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * rr.rows[i][j];
        }
    }
    return std::all_of(v.begin(), v.end(), [](const FqElem& e) { return e.is_zero(); });
}

std::vector<long long> block_offsets(const std::vector<long long>& blocks) {
    std::vector<long long> ofs{0};
    for (long long b : blocks) ofs.push_back(ofs.back() + b);
    return ofs;
}

}  // namespace

SuperCurve make_curve(const FieldPtr& field, int n, const Poly& h) {
    if (n < 1 || n > 3) throw std::invalid_argument("cover degree n must be 1, 2 or 3");
    if (!h.field()->same_as(*field)) throw std::invalid_argument("h is over a different field");
    if (!h.is_monic()) throw std::invalid_argument("h must be monic");
    long long q = field->q();
    if (n > 1) {
        if ((q - 1) % n != 0)
            throw std::domain_error("Kummer cover needs n | q-1 (primitive n-th root of unity)");
        if (field->p() % n == 0) throw std::domain_error("cover degree divides the characteristic");
        if (!is_separable(h)) throw std::invalid_argument("h must be separable");
        if (!splits_completely(h)) throw std::invalid_argument("h must split completely");
    } else {
        if (!is_separable(h) || !splits_completely(h))
            throw std::invalid_argument("h must be separable and split");
    }
    long long m = h.degree();

    FqElem zeta = field->one();
    if (n > 1) {
        for (long long i = 2; i < q; ++i) {
            FqElem cand = field->from_index(i);
            if (cand.pow(n) == field->one() && cand != field->one()) {
                zeta = cand;  // n prime, so any nontrivial n-th root is primitive
                break;
            }
        }
        if (zeta == field->one()) throw std::logic_error("no primitive n-th root found");
    }

    long long genus = 0;
    if (n == 2) {
        long long d = std::gcd(2LL, m);
        genus = (m - d) / 2;
    } else if (n == 3) {
        long long d = std::gcd(3LL, m);
        genus = (m - 1) - (d - 1) / 2;
    }
    return SuperCurve{field, n, h, zeta, m, genus};
}

PointSet rational_points(const SuperCurve& curve) {
    const FieldPtr& f = curve.field;
    long long q = f->q();
    if (q > kEnumLimit) throw std::domain_error("point enumeration ceiling exceeded");
    PointSet ps{};
    long long d = std::gcd(static_cast<long long>(curve.n), curve.m);
    ps.infinite_count = static_cast<int>(d);
    ps.infinite_ram_index = static_cast<int>(curve.n / d);
    if (curve.n == 1) {
        for (long long i = 0; i < q; ++i) {
            FqElem x = f->from_index(i);
            ps.affine.emplace_back(x, curve.h.eval(x));
        }
        ps.infinite_count = 1;
        ps.infinite_ram_index = 1;
    } else {
        auto table = nth_root_table(f, curve.n);
        for (long long i = 0; i < q; ++i) {
            FqElem x = f->from_index(i);
            FqElem v = curve.h.eval(x);
            for (const FqElem& y : table[v.index()]) ps.affine.emplace_back(x, y);
        }
    }
    // Hasse-Weil window, compared exactly: (N - q - 1)^2 <= 4 g^2 q
    long long n_total = ps.total_rational();
    long long dev = n_total - q - 1;
    if (dev * dev > 4 * curve.genus * curve.genus * q)
        throw std::logic_error("point count escapes the Hasse-Weil window");
    return ps;
}

std::vector<SplitPoint> split_points(const SuperCurve& curve) {
    const FieldPtr& f = curve.field;
    long long q = f->q();
    if (q > kEnumLimit) throw std::domain_error("point enumeration ceiling exceeded");
    std::vector<SplitPoint> out;
    for (long long i = 0; i < q; ++i) {
        FqElem beta = f->from_index(i);
        FqElem v = curve.h.eval(beta);
        if (v.is_zero() || !is_nth_power(v, curve.n)) continue;
        SplitPoint sp{beta, {}};
        if (curve.n == 1) {
            sp.ys.push_back(v);
        } else {
            // smallest y with y^n = v, then the zeta orbit
            FqElem y0 = f->zero();
            bool found = false;
            for (long long yi = 1; yi < q && !found; ++yi) {
                FqElem y = f->from_index(yi);
                if (y.pow(curve.n) == v) {
                    y0 = y;
                    found = true;
                }
            }
            FqElem y = y0;
            for (int t = 0; t < curve.n; ++t) {
                sp.ys.push_back(y);
                y = y * curve.zeta;
            }
        }
        out.push_back(std::move(sp));
    }
    return out;
}

std::vector<Monomial> rr_basis(const SuperCurve& curve, long long r) {
    if (r < 0) throw std::invalid_argument("divisor multiple r must be >= 0");
    if (curve.n > 1 && std::gcd(static_cast<long long>(curve.n), curve.m) != 1)
        throw std::domain_error("one-point basis needs gcd(n, m) = 1 (totally ramified infinity)");
    std::vector<Monomial> basis;
    if (curve.n == 1) {
        for (long long i = 0; i <= r; ++i) basis.push_back({i, 0});
        return basis;
    }
    // pole orders: v(x) = -n, v(y) = -m at the unique infinite place
    for (int j = 0; j < curve.n; ++j) {
        for (long long i = 0; curve.n * i + curve.m * j <= r; ++i) basis.push_back({i, j});
    }
    return basis;
}

LinearCode eval_code(const SuperCurve& curve, const std::vector<FqElem>& betas, long long r) {
    if (betas.empty()) throw std::invalid_argument("eval_code: empty evaluation support");
    const FieldPtr& f = curve.field;

    std::vector<FqElem> sorted_betas = betas;
    std::sort(sorted_betas.begin(), sorted_betas.end());
    for (size_t i = 1; i < sorted_betas.size(); ++i)
        if (sorted_betas[i] == sorted_betas[i - 1])
            throw std::invalid_argument("eval_code: repeated beta");

    auto split = split_points(curve);
    std::vector<SplitPoint> chosen;
    for (const auto& b : sorted_betas) {
        const SplitPoint* hit = nullptr;
        for (const auto& sp : split) {
            if (sp.beta == b) {
                hit = &sp;
                break;
            }
        }
        if (hit != nullptr) {
            chosen.push_back(*hit);
        } else if (curve.n == 1) {
            // genus-0 cover: any affine place is fine, including roots of h
            chosen.push_back(SplitPoint{b, {curve.h.eval(b)}});
        } else {
            throw std::invalid_argument("eval_code: " + b.str() + " is not a completely split place");
        }
    }

    long long n_len = 0;
    for (const auto& sp : chosen) n_len += static_cast<long long>(sp.ys.size());
    if (r >= n_len)
        throw std::invalid_argument("eval_code: need deg G < n for the designed distance");

    // D is affine, G sits at infinity; they cannot share support
    auto basis = rr_basis(curve, r);
    std::vector<std::vector<FqElem>> rows;
    rows.reserve(basis.size());
    for (const auto& mono : basis) {
        std::vector<FqElem> row;
        row.reserve(n_len);
        for (const auto& sp : chosen) {
            FqElem xe = sp.beta.pow(mono.x_exp);
            for (const auto& y : sp.ys) row.push_back(xe * y.pow(mono.y_exp));
        }
        rows.push_back(std::move(row));
    }
    Rref rr = rref(std::move(rows), f);

    LinearCode code;
    code.field = f;
    code.n_len = n_len;
    code.k_dim = static_cast<long long>(rr.rows.size());
    code.gen = std::move(rr.rows);
    code.blocks.assign(chosen.size(), curve.n);
    code.provenance = LinearCode::Provenance{r, curve.genus, sorted_betas};
    return code;
}

std::optional<long long> min_distance_bruteforce(const LinearCode& code,
                                                 long long max_enumerations) {
    const FieldPtr& f = code.field;
    long long q = f->q();
    // q^k - 1 nonzero messages
    long long total = 1;
    for (long long i = 0; i < code.k_dim; ++i) {
        if (total > max_enumerations / q + 1) return std::nullopt;
        total *= q;
        if (total - 1 > max_enumerations) return std::nullopt;
    }

    long long p = f->p();
    int s = f->s();
    size_t width = static_cast<size_t>(code.n_len) * s;

    // For every row precompute the residue-vector deltas between consecutive
    // scalar multiples c*row (c running over the whole field in index order),
    // so the walk over all messages is a single add per step.
    std::vector<std::vector<std::vector<long long>>> deltas(code.k_dim);
    std::vector<std::vector<long long>> restore(code.k_dim);
    for (long long i = 0; i < code.k_dim; ++i) {
        std::vector<long long> prev(width, 0);
        deltas[i].resize(q);
        for (long long c = 1; c < q; ++c) {
            FqElem scalar = f->from_index(c);
            std::vector<long long> scaled(width);
            for (long long j = 0; j < code.n_len; ++j) {
                FqElem v = scalar * code.gen[i][j];
                for (int t = 0; t < s; ++t) scaled[j * s + t] = v.coeffs()[t];
            }
            std::vector<long long> d(width);
            for (size_t t = 0; t < width; ++t) d[t] = ((scaled[t] - prev[t]) % p + p) % p;
            deltas[i][c] = std::move(d);
            prev = std::move(scaled);
        }
        restore[i].resize(width);
        for (size_t t = 0; t < width; ++t) restore[i][t] = (p - prev[t]) % p;
    }

    std::vector<long long> cur(width, 0);
    long long best = code.n_len + 1;

    auto weight = [&]() {
        long long w = 0;
        for (long long j = 0; j < code.n_len; ++j) {
            for (int t = 0; t < s; ++t) {
                if (cur[j * s + t] != 0) {
                    ++w;
                    break;
                }
            }
        }
        return w;
    };

    auto rec = [&](auto&& self, long long depth, bool nonzero) -> void {
        if (depth == code.k_dim) {
            if (nonzero) best = std::min(best, weight());
            return;
        }
        self(self, depth + 1, nonzero);
        for (long long c = 1; c < q; ++c) {
            const auto& d = deltas[depth][c];
            for (size_t t = 0; t < width; ++t) cur[t] = (cur[t] + d[t]) % p;
            self(self, depth + 1, true);
        }
        const auto& fin = restore[depth];
        for (size_t t = 0; t < width; ++t) cur[t] = (cur[t] + fin[t]) % p;
    };
    rec(rec, 0, false);
    return best;
}

BlockPermutation identity_perm(const LinearCode& code) {
    BlockPermutation perm;
    for (long long b : code.blocks) {
        std::vector<long long> idx(b);
        std::iota(idx.begin(), idx.end(), 0);
        perm.per_block.push_back(std::move(idx));
    }
    return perm;
}

BlockPermutation zeta_rotation(const LinearCode& code) {
    BlockPermutation perm;
    for (long long b : code.blocks) {
        std::vector<long long> idx(b);
        for (long long j = 0; j < b; ++j) idx[j] = (j + 1) % b;
        perm.per_block.push_back(std::move(idx));
    }
    return perm;
}

bool apply_block_perm(const LinearCode& code, const BlockPermutation& perm) {
    if (code.blocks.empty()) throw std::invalid_argument("code has no block structure");
    if (perm.per_block.size() != code.blocks.size())
        throw std::invalid_argument("permutation shape does not match the block structure");
    for (size_t b = 0; b < code.blocks.size(); ++b) {
        const auto& pi = perm.per_block[b];
        if (static_cast<long long>(pi.size()) != code.blocks[b])
            throw std::invalid_argument("permutation shape does not match the block structure");
        std::vector<bool> seen(pi.size(), false);
        for (long long v : pi) {
            if (v < 0 || v >= static_cast<long long>(pi.size()) || seen[v])
                throw std::invalid_argument("block entry is not a permutation");
            seen[v] = true;
        }
    }

    Rref rr;
    rr.rows = code.gen;
    for (const auto& row : code.gen) {
        for (long long c = 0; c < code.n_len; ++c) {
            if (!row[c].is_zero()) {
                rr.pivots.push_back(c);
                break;
            }
        }
    }
    if (rr.pivots.size() != rr.rows.size())
        throw std::logic_error("generator matrix is not in reduced form");

    auto offsets = block_offsets(code.blocks);
    for (const auto& row : code.gen) {
        std::vector<FqElem> permuted;
        permuted.reserve(row.size());
        for (size_t b = 0; b < code.blocks.size(); ++b) {
            for (long long j = 0; j < code.blocks[b]; ++j)
                permuted.push_back(row[offsets[b] + perm.per_block[b][j]]);
        }
        if (!in_row_space(std::move(permuted), rr)) return false;
    }
    return true;
}

BlockTransCertificate certify_block_transitive(const LinearCode& code) {
    if (code.blocks.empty()) throw std::invalid_argument("code has no block structure");
    BlockTransCertificate cert{static_cast<long long>(code.blocks.size()), {}, false};

    BlockPermutation rot = zeta_rotation(code);
    if (apply_block_perm(code, rot)) {
        // powers of the simultaneous rotation sweep every block
        cert.generators.push_back(std::move(rot));
        cert.transitive_per_block = true;
        return cert;
    }
    // fall back to independent per-block rotations
    bool all = true;
    for (size_t b = 0; b < code.blocks.size(); ++b) {
        BlockPermutation single = identity_perm(code);
        single.per_block[b] = rot.per_block[b];
        if (apply_block_perm(code, single))
            cert.generators.push_back(std::move(single));
        else
            all = false;
    }
    cert.transitive_per_block = all;
    return cert;
}

LinearCode direct_sum(const std::vector<LinearCode>& codes) {
    if (codes.empty()) throw std::invalid_argument("direct_sum: no summands");
    const FieldPtr& f = codes.front().field;
    LinearCode out;
    out.field = f;
    for (const auto& c : codes) {
        if (!c.field->same_as(*f)) throw std::invalid_argument("direct_sum: field mismatch");
        out.n_len += c.n_len;
        out.k_dim += c.k_dim;
        if (c.blocks.empty())
            out.blocks.push_back(c.n_len);
        else
            out.blocks.insert(out.blocks.end(), c.blocks.begin(), c.blocks.end());
    }
    long long col = 0;
    for (const auto& c : codes) {
        for (const auto& row : c.gen) {
            std::vector<FqElem> wide(out.n_len, f->zero());
            for (long long j = 0; j < c.n_len; ++j) wide[col + j] = row[j];
            out.gen.push_back(std::move(wide));
        }
        col += c.n_len;
    }
    return out;
}

}  // namespace agc
