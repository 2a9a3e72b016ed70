#include "grtk/homlin.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace grtk {

int rat_rank(Matrix m)
{
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(rank, c));
        Rat p = m.at(rank, col);
        for (int r = rank + 1; r < m.rows; ++r) {
            if (m.at(r, col) == 0) continue;
            Rat f = m.at(r, col) / p;
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

namespace {

// nullspace basis of A (rows x cols) over Q
std::vector<std::vector<Rat>> nullspace(Matrix A)
{
    int rows = A.rows, cols = A.cols;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (A.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = 0; c < cols; ++c) std::swap(A.at(piv, c), A.at(rank, c));
        Rat p = A.at(rank, col);
        for (int c = 0; c < cols; ++c) A.at(rank, c) /= p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || A.at(r, col) == 0) continue;
            Rat f = A.at(r, col);
            for (int c = 0; c < cols; ++c) A.at(r, c) -= f * A.at(rank, c);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> out;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(cols);
        v[fc] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -A.at(r, fc);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

HomBasis hom_basis(const Representation& X, const Representation& Y)
{
    const Quiver& q = *X.q;
    int nv = q.vertex_count;
    // unknowns: entries of f_v (dimY_v x dimX_v), row-major, vertex by vertex
    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + int(Y.dims[v] * X.dims[v]);
    int unknowns = off[nv];
    auto idx = [&](int v, int r, int c) { return off[v] + r * int(X.dims[v]) + c; };

    int eqs = 0;
    for (int a = 0; a < q.n_arrows(); ++a)
        eqs += int(Y.dims[q.arrow(a).tgt] * X.dims[q.arrow(a).src]);
    Matrix A(eqs, unknowns);
    int row = 0;
    for (int a = 0; a < q.n_arrows(); ++a) {
        int s = q.arrow(a).src, t = q.arrow(a).tgt;
        const Matrix& Xa = X.mats[a];
        const Matrix& Ya = Y.mats[a];
        for (int r = 0; r < Y.dims[t]; ++r)
            for (int c = 0; c < X.dims[s]; ++c) {
                // (f_t Xa)(r,c) - (Ya f_s)(r,c) = 0
                for (int j = 0; j < X.dims[t]; ++j)
                    if (Xa.at(j, c) != 0) A.at(row, idx(t, r, j)) += Xa.at(j, c);
                for (int j = 0; j < Y.dims[s]; ++j)
                    if (Ya.at(r, j) != 0) A.at(row, idx(s, j, c)) -= Ya.at(r, j);
                ++row;
            }
    }
    HomBasis hb;
    for (auto& v : nullspace(std::move(A))) {
        HomElement f;
        for (int vv = 0; vv < nv; ++vv) {
            Matrix m(int(Y.dims[vv]), int(X.dims[vv]));
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < m.cols; ++c) m.at(r, c) = v[idx(vv, r, c)];
            f.push_back(std::move(m));
        }
        hb.basis.push_back(std::move(f));
    }
    return hb;
}

HomBasis graph_map_basis(const Quiver& q, const StringWord& C, const StringWord& D)
{
    auto factors = substring_quotients(q, C);
    auto subs = substring_submodules(q, D);
    auto cwalk = C.walk(q);
    auto dwalk = D.walk(q);
    Representation XC = string_to_rep(q, C);
    Representation XD = string_to_rep(q, D);
    // basis position of z_i inside its vertex block, for both strings
    auto positions = [&](const std::vector<int>& walk) {
        std::vector<int> pos(walk.size());
        std::vector<int> seen(q.vertex_count, 0);
        for (size_t i = 0; i < walk.size(); ++i) pos[i] = seen[walk[i]]++;
        return pos;
    };
    auto cpos = positions(cwalk), dpos = positions(dwalk);

    HomBasis hb;
    auto emit = [&](int ci, int cj, int di, bool reversed) {
        HomElement f;
        for (int v = 0; v < q.vertex_count; ++v)
            f.emplace_back(int(XD.dims[v]), int(XC.dims[v]));
        for (int k = ci; k <= cj; ++k) {
            int dk = reversed ? di + (cj - k) : di + (k - ci);
            f[cwalk[k]].at(dpos[dk], cpos[k]) = 1;
        }
        hb.basis.push_back(std::move(f));
    };
    for (const auto& F : factors)
        for (const auto& S : subs) {
            int lenF = F.j - F.i, lenS = S.j - S.i;
            if (lenF != lenS) continue;
            if (lenF == 0) {
                if (cwalk[F.i] == dwalk[S.i]) emit(F.i, F.j, S.i, false);
                continue;
            }
            bool fwd = std::equal(C.letters.begin() + F.i, C.letters.begin() + F.j,
                                  D.letters.begin() + S.i);
            if (fwd) emit(F.i, F.j, S.i, false);
            bool rev = true;
            for (int t = 0; t < lenF; ++t)
                if (C.letters[F.i + t] != D.letters[S.j - 1 - t].flipped()) {
                    rev = false;
                    break;
                }
            if (rev) emit(F.i, F.j, S.i, true);
        }
    return hb;
}

namespace {

// sparse multivariate polynomial over Q, lex-ordered exponent vectors
using Mono = std::vector<int>;
using MPoly = std::map<Mono, Rat>;

MPoly mp_mul(const MPoly& a, const MPoly& b)
{
    MPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Mono e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Rat& acc = r[e];
            acc += ca * cb;
            if (acc == 0) r.erase(e);
        }
    return r;
}

void mp_sub(MPoly& a, const MPoly& b)
{
    for (const auto& [e, c] : b) {
        Rat& acc = a[e];
        acc -= c;
        if (acc == 0) a.erase(e);
    }
}

// exact division a / b (Bareiss guarantees exactness)
MPoly mp_div(MPoly a, const MPoly& b)
{
    if (b.empty()) throw std::runtime_error("division by zero polynomial");
    auto lb = b.rbegin();  // lex-largest term of divisor
    MPoly quot;
    while (!a.empty()) {
        auto la = a.rbegin();
        Mono e(la->first.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = la->first[i] - lb->first[i];
            if (e[i] < 0) throw std::runtime_error("inexact polynomial division");
        }
        Rat c = la->second / lb->second;
        MPoly term{{e, c}};
        mp_sub(a, mp_mul(term, b));
        quot[e] = c;
    }
    return quot;
}

// generic rank of a matrix of polynomials via fraction-free elimination
int mpoly_rank(std::vector<std::vector<MPoly>> M)
{
    int rows = int(M.size());
    if (rows == 0) return 0;
    int cols = int(M[0].size());
    MPoly prev;  // previous pivot; empty means 1
    int rank = 0;
    for (int step = 0; step < std::min(rows, cols); ++step) {
        int pr = -1, pc = -1;
        for (int r = step; r < rows && pr < 0; ++r)
            for (int c = step; c < cols; ++c)
                if (!M[r][c].empty()) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        std::swap(M[pr], M[step]);
        for (int r = 0; r < rows; ++r) std::swap(M[r][pc], M[r][step]);
        for (int r = step + 1; r < rows; ++r)
            for (int c = step + 1; c < cols; ++c) {
                MPoly t = mp_mul(M[step][step], M[r][c]);
                mp_sub(t, mp_mul(M[r][step], M[step][c]));
                M[r][c] = prev.empty() ? std::move(t) : mp_div(std::move(t), prev);
            }
        for (int r = step + 1; r < rows; ++r) M[r][step].clear();
        prev = M[step][step];
        ++rank;
    }
    return rank;
}

int generic_rank_at_vertex(const HomBasis& hb, int v)
{
    int k = hb.dim();
    int rows = hb.basis[0][v].rows, cols = hb.basis[0][v].cols;
    std::vector<std::vector<MPoly>> M(rows, std::vector<MPoly>(cols));
    for (int i = 0; i < k; ++i)
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                const Rat& x = hb.basis[i][v].at(r, c);
                if (x == 0) continue;
                Mono e(k, 0);
                e[i] = 1;
                Rat& acc = M[r][c][e];
                acc += x;
                if (acc == 0) M[r][c].erase(e);
            }
    return mpoly_rank(std::move(M));
}

}  // namespace

MonoEpiResult mono_epi_test(const Representation& X, const Representation& Y,
                            const MonoEpiOptions& opt)
{
    MonoEpiResult res;
    int nv = X.q->vertex_count;
    if (X.total() == 0 || Y.total() == 0) {
        res.exists_mono = X.total() == 0;
        res.exists_epi = Y.total() == 0;
        res.cert.method = "trivial";
        return res;
    }
    bool mono_possible = true, epi_possible = true;
    for (int v = 0; v < nv; ++v) {
        if (X.dims[v] > Y.dims[v]) mono_possible = false;
        if (X.dims[v] < Y.dims[v]) epi_possible = false;
    }
    if (!mono_possible && !epi_possible) {
        res.cert.method = "trivial";
        return res;
    }
    return mono_epi_test(X, Y, hom_basis(X, Y), opt);
}

MonoEpiResult mono_epi_test(const Representation& X, const Representation& Y,
                            const HomBasis& hb, const MonoEpiOptions& opt)
{
    MonoEpiResult res;
    int nv = X.q->vertex_count;
    if (X.total() == 0 || Y.total() == 0) {
        res.exists_mono = X.total() == 0;
        res.exists_epi = Y.total() == 0;
        res.cert.method = "trivial";
        return res;
    }
    bool mono_possible = true, epi_possible = true;
    for (int v = 0; v < nv; ++v) {
        if (X.dims[v] > Y.dims[v]) mono_possible = false;
        if (X.dims[v] < Y.dims[v]) epi_possible = false;
    }
    if (!mono_possible && !epi_possible) {
        res.cert.method = "trivial";
        return res;
    }
    int k = hb.dim();
    if (k == 0) {
        res.cert.method = "trivial";
        return res;
    }
    auto eval_ranks = [&](const std::vector<long>& t, bool& mono, bool& epi) {
        mono = mono_possible;
        epi = epi_possible;
        for (int v = 0; v < nv && (mono || epi); ++v) {
            Matrix F(int(Y.dims[v]), int(X.dims[v]));
            for (int i = 0; i < k; ++i) {
                if (t[i] == 0) continue;
                for (size_t p = 0; p < F.a.size(); ++p) F.a[p] += Rat(t[i]) * hb.basis[i][v].a[p];
            }
            int r = rat_rank(std::move(F));
            if (r < X.dims[v]) mono = false;
            if (r < Y.dims[v]) epi = false;
        }
    };
    bool need_mono = mono_possible, need_epi = epi_possible;
    if (opt.random_fast_path) {
        std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<long> dist(-65536, 65536);
        for (int trial = 0; trial < 3 && (need_mono || need_epi); ++trial) {
            std::vector<long> t(k);
            for (auto& x : t) x = dist(rng);
            bool m, e;
            eval_ranks(t, m, e);
            if (m && need_mono) {
                res.exists_mono = true;
                need_mono = false;
                res.cert.method = "randomized";
                res.cert.witness = t;
            }
            if (e && need_epi) {
                res.exists_epi = true;
                need_epi = false;
                res.cert.method = "randomized";
                if (res.cert.witness.empty()) res.cert.witness = t;
            }
        }
    }
    if (need_mono || need_epi) {
        // symbolic generic rank, vertex by vertex
        bool mono = mono_possible, epi = epi_possible;
        for (int v = 0; v < nv && (mono || epi); ++v) {
            if (X.dims[v] == 0 && Y.dims[v] == 0) continue;
            int r = generic_rank_at_vertex(hb, v);
            if (r < X.dims[v]) mono = false;
            if (r < Y.dims[v]) epi = false;
        }
        if (need_mono) res.exists_mono = mono;
        if (need_epi) res.exists_epi = epi;
        res.cert.method = "symbolic";
        res.cert.witness.clear();
    }
    return res;
}

}  // namespace grtk
