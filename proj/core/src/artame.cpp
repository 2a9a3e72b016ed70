#include "grtk/artame.hpp"

#include <algorithm>
#include <stdexcept>

namespace grtk {

IsoClass make_string_class(const Quiver& q, const StringWord& w)
{
    IsoClass c;
    c.word = w.canonical();
    c.dims = string_dim(q, c.word);
    c.length = dim_total(c.dims);
    c.key = word_key(c.word);
    return c;
}

IsoClass make_band_class(const Quiver& q, const BandWord& b, int m, const Rat& lambda)
{
    IsoClass c;
    c.band = true;
    c.bword = b.canonical();
    c.mult = m;
    c.lambda = lambda;
    c.dims = band_dim(q, c.bword, m);
    c.length = dim_total(c.dims);
    c.key = band_key(c.bword) + "m" + std::to_string(m) + "l" + rat_to_string(lambda);
    return c;
}

Representation class_to_rep(const Quiver& q, const IsoClass& c)
{
    return c.band ? band_to_rep(q, c.bword, c.mult, c.lambda)
                  : string_to_rep(q, c.word);
}

std::string class_label(const Quiver& q, const IsoClass& c)
{
    if (!c.band) return "M(" + c.word.str(q) + ")";
    return "B(" + c.bword.str(q) + ", m=" + std::to_string(c.mult) + ", l=" +
           rat_to_string(c.lambda) + ")";
}

long defect(const Quiver& q, const DimVector& d)
{
    if (!q.is_tilde_a()) throw QuiverError("defect requires an acyclic cycle quiver");
    long s = 0;
    for (long x : d) s += x;
    for (const Arrow& a : q.arrows) s -= d[a.tgt];
    return s;
}

namespace {

/* inverse of an integer matrix with |det| = 1, as rationals */
std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> m)
{
    int n = int(m.size());
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::runtime_error("singular Euler matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat p = m[col][col];
        for (int c = 0; c < n; ++c) {
            m[col][c] /= p;
            inv[col][c] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int c = 0; c < n; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

}  // namespace

DimVector coxeter(const Quiver& q, const DimVector& d, int direction)
{
    int n = q.vertex_count;
    std::vector<std::vector<Rat>> E(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i) E[i][i] = 1;
    for (const Arrow& a : q.arrows) E[a.src][a.tgt] -= 1;
    std::vector<std::vector<Rat>> phi(n, std::vector<Rat>(n));
    if (direction >= 0) {
        // Phi = -E^{-1} E^T
        auto Ei = invert(E);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat s = 0;
                for (int k = 0; k < n; ++k) s += Ei[i][k] * E[j][k];
                phi[i][j] = -s;
            }
    }
    else {
        // Phi^{-1} = -E^{-T} E
        auto Ei = invert(E);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat s = 0;
                for (int k = 0; k < n; ++k) s += Ei[k][i] * E[k][j];
                phi[i][j] = -s;
            }
    }
    DimVector out(n, 0);
    for (int i = 0; i < n; ++i) {
        Rat s = 0;
        for (int j = 0; j < n; ++j) s += phi[i][j] * Rat(d[j]);
        if (denominator(s) != 1) throw std::runtime_error("non-integral Coxeter image");
        out[i] = long(numerator(s));
    }
    return out;
}

bool is_projective_dim(const Quiver& q, const DimVector& d)
{
    // dim P(v)_w = number of paths v -> w
    for (int v = 0; v < q.vertex_count; ++v) {
        DimVector p(q.vertex_count, 0);
        // count paths by simple DFS; acyclic quiver, small
        std::vector<std::pair<int, long>> stack{{v, 1}};
        while (!stack.empty()) {
            auto [u, c] = stack.back();
            stack.pop_back();
            p[u] += c;
            for (const Arrow& a : q.arrows)
                if (a.src == u) stack.push_back({a.tgt, c});
        }
        if (p == d) return true;
    }
    return false;
}

bool is_injective_dim(const Quiver& q, const DimVector& d)
{
    for (int v = 0; v < q.vertex_count; ++v) {
        DimVector p(q.vertex_count, 0);
        std::vector<std::pair<int, long>> stack{{v, 1}};
        while (!stack.empty()) {
            auto [u, c] = stack.back();
            stack.pop_back();
            p[u] += c;
            for (const Arrow& a : q.arrows)
                if (a.tgt == u) stack.push_back({a.src, c});
        }
        if (p == d) return true;
    }
    return false;
}

namespace {

/* cyclic vertex order v_0=0, v_1, ..., v_n and the arrow on each edge
 * (v_k, v_{k+1}); sign[k] is true when the arrow points along the walk */
struct CycleLayout {
    std::vector<int> verts;
    std::vector<int> edge_arrow;
    std::vector<bool> forward;
};

CycleLayout cycle_layout(const Quiver& q)
{
    if (!q.is_tilde_a()) throw QuiverError("not an acyclic cycle quiver");
    CycleLayout L;
    int n1 = q.vertex_count;
    int cur = 0, prev_arrow = -1;
    for (int step = 0; step < n1; ++step) {
        L.verts.push_back(cur);
        int chosen = -1;
        for (int a = 0; a < q.n_arrows(); ++a) {
            if (a == prev_arrow) continue;
            if (q.arrow(a).src == cur || q.arrow(a).tgt == cur) {
                chosen = a;
                break;
            }
        }
        if (chosen < 0) throw QuiverError("broken cycle");
        bool fwd = q.arrow(chosen).src == cur;
        L.edge_arrow.push_back(chosen);
        L.forward.push_back(fwd);
        cur = fwd ? q.arrow(chosen).tgt : q.arrow(chosen).src;
        prev_arrow = chosen;
    }
    if (cur != 0) throw QuiverError("walk did not close");
    return L;
}

StringWord run_path_word(const Quiver& q, const CycleLayout& L, int start, int len,
                         bool forward_run)
{
    int n1 = int(L.verts.size());
    std::vector<Letter> letters;
    if (forward_run) {
        for (int k = 0; k < len; ++k)
            letters.push_back(Letter{L.edge_arrow[(start + k) % n1], false});
    }
    else {
        for (int k = len - 1; k >= 0; --k)
            letters.push_back(Letter{L.edge_arrow[(start + k) % n1], false});
    }
    return validate_string(q, letters);
}

void order_by_tau(const Quiver& q, Tube& t)
{
    int r = int(t.quasi_simples.size());
    t.rank = r;
    if (r <= 1) return;
    std::vector<DimVector> dims;
    for (const auto& w : t.quasi_simples) dims.push_back(string_dim(q, w));
    std::vector<StringWord> ordered{t.quasi_simples[0]};
    DimVector cur = dims[0];
    for (int step = 1; step < r; ++step) {
        DimVector next = coxeter(q, cur, 1);
        int found = -1;
        for (int k = 0; k < r; ++k)
            if (dims[k] == next) found = k;
        if (found < 0) throw std::runtime_error("tau does not permute tube");
        ordered.push_back(t.quasi_simples[found]);
        cur = next;
    }
    t.quasi_simples = std::move(ordered);
}

}  // namespace

TubeSystem tube_system(const Quiver& q)
{
    CycleLayout L = cycle_layout(q);
    int n1 = int(L.verts.size());
    // maximal runs of constant direction around the cycle
    int start = 0;
    while (start < n1 && L.forward[(start + n1 - 1) % n1] == L.forward[start % n1]) ++start;
    if (start == n1) throw QuiverError("cyclic orientation has no source");
    std::vector<std::pair<int, int>> runs;  // (start edge, length)
    int k = start;
    for (int seen = 0; seen < n1;) {
        int len = 1;
        while (L.forward[(k + len) % n1] == L.forward[k % n1] && len < n1) ++len;
        runs.push_back({k % n1, len});
        k += len;
        seen += len;
    }
    TubeSystem ts;
    for (int side = 0; side < 2; ++side) {
        bool fwd = side == 0;
        Tube t;
        t.id = side;
        for (auto [s, len] : runs) {
            if (L.forward[s] == fwd) {
                t.quasi_simples.push_back(run_path_word(q, L, s, len, fwd));
            }
            else {
                for (int j = 1; j < len; ++j)
                    t.quasi_simples.push_back(trivial_string(q, L.verts[(s + j) % n1]));
            }
        }
        order_by_tau(q, t);
        ts.tubes.push_back(std::move(t));
    }
    return ts;
}

ARClass classify(const Quiver& q, const TubeSystem& ts, const IsoClass& M,
                 const MonoEpiOptions& opt)
{
    ARClass c;
    c.dims = M.dims;
    c.defect = defect(q, M.dims);
    if (M.band) {
        if (c.defect != 0) throw std::runtime_error("band with nonzero defect");
        c.kind = ARKind::Regular;
        c.homogeneous = true;
        c.quasi_length = M.mult;
        return c;
    }
    if (c.defect < 0) {
        c.kind = ARKind::Preprojective;
        return c;
    }
    if (c.defect > 0) {
        c.kind = ARKind::Preinjective;
        return c;
    }
    c.kind = ARKind::Regular;
    Representation R = string_to_rep(q, M.word);
    for (const Tube& t : ts.tubes) {
        for (int kk = 0; kk < t.rank; ++kk) {
            const StringWord& X = t.quasi_simples[kk];
            DimVector xd = string_dim(q, X);
            if (!dim_leq(xd, M.dims)) continue;
            HomBasis hb = graph_map_basis(q, X, M.word);
            if (hb.dim() == 0) continue;
            MonoEpiResult me = mono_epi_test(string_to_rep(q, X), R, opt);
            if (!me.exists_mono) continue;
            c.tube_id = t.id;
            c.socle_index = kk;
            // walk the tube downwards from the socle to read off the level
            long total = 0;
            int ql = 0;
            while (total < M.length) {
                int idx = ((kk - ql) % t.rank + t.rank) % t.rank;
                total += dim_total(string_dim(q, t.quasi_simples[idx]));
                ++ql;
            }
            if (total != M.length)
                throw std::runtime_error("quasi-length does not fit tube data");
            c.quasi_length = ql;
            return c;
        }
    }
    throw std::runtime_error("regular string not located in a tube");
}

IsoClass quasi_chain(const Quiver& q, const IsoClass& X, int i)
{
    if (i < 1) throw std::invalid_argument("quasi-chain index must be >= 1");
    if (X.band) {
        if (X.mult != 1) throw std::invalid_argument("not a quasi-simple band");
        return make_band_class(q, X.bword, i, X.lambda);
    }
    StringWord cur = X.word;
    for (int step = 1; step < i; ++step) {
        std::vector<StringWord> exts = irreducible_mono_extensions(q, cur);
        std::vector<StringWord> regs;
        for (const auto& e : exts)
            if (defect(q, string_dim(q, e)) == 0) regs.push_back(e);
        if (regs.size() != 1)
            throw std::runtime_error("quasi-chain step is not unique");
        cur = regs.front();
    }
    return make_string_class(q, cur);
}

ARClass tau_class(const Quiver& q, const TubeSystem& ts, const ARClass& c, int direction)
{
    ARClass out = c;
    if (c.kind == ARKind::Regular) {
        if (c.homogeneous) return out;
        const Tube& t = ts.tubes.at(c.tube_id);
        int r = t.rank;
        out.socle_index = ((c.socle_index + direction) % r + r) % r;
        DimVector d(q.vertex_count, 0);
        long total = 0;
        int ql = 0;
        DimVector want;
        while (ql < c.quasi_length) {
            int idx = ((out.socle_index - ql) % r + r) % r;
            DimVector xd = string_dim(q, t.quasi_simples[idx]);
            for (int v = 0; v < q.vertex_count; ++v) d[v] += xd[v];
            total += dim_total(xd);
            ++ql;
        }
        (void)total;
        (void)want;
        out.dims = d;
        return out;
    }
    if (direction >= 0 && is_projective_dim(q, c.dims))
        throw std::invalid_argument("tau of a projective class");
    if (direction < 0 && is_injective_dim(q, c.dims))
        throw std::invalid_argument("tau-inverse of an injective class");
    out.dims = coxeter(q, c.dims, direction);
    out.defect = defect(q, out.dims);
    return out;
}

}  // namespace grtk
