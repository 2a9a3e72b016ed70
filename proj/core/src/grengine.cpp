#include "grtk/grengine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "grtk/strmod.hpp"

namespace grtk {

const TubeSystem& Context::tubes()
{
    if (!ts_) ts_ = tube_system(*q);
    return *ts_;
}

const ARClass& Context::ar(const IsoClass& c)
{
    auto it = class_cache.find(c.key);
    if (it != class_cache.end()) return it->second;
    ARClass a = classify(*q, tubes(), c, opt);
    return class_cache.emplace(c.key, std::move(a)).first->second;
}

bool Context::exists_mono(const IsoClass& X, const IsoClass& Y)
{
    if (X.key == Y.key) return true;
    auto k = std::make_pair(X.key, Y.key);
    auto it = mono_cache.find(k);
    if (it != mono_cache.end()) return it->second;
    bool ans = false;
    if (dim_leq(X.dims, Y.dims)) {
        if (!X.band && !Y.band) {
            HomBasis hb = graph_map_basis(*q, X.word, Y.word);
            if (hb.dim() > 0) {
                Representation rx = class_to_rep(*q, X);
                Representation ry = class_to_rep(*q, Y);
                ans = mono_epi_test(rx, ry, hb, opt).exists_mono;
            }
        }
        else {
            Representation rx = class_to_rep(*q, X);
            Representation ry = class_to_rep(*q, Y);
            ans = mono_epi_test(rx, ry, opt).exists_mono;
        }
    }
    mono_cache[k] = ans;
    return ans;
}

bool Context::exists_epi(const IsoClass& X, const IsoClass& Y)
{
    if (X.key == Y.key) return true;
    auto k = std::make_pair(X.key, Y.key);
    auto it = epi_cache.find(k);
    if (it != epi_cache.end()) return it->second;
    bool ans = false;
    if (dim_leq(Y.dims, X.dims)) {
        if (!X.band && !Y.band) {
            HomBasis hb = graph_map_basis(*q, X.word, Y.word);
            if (hb.dim() > 0) {
                Representation rx = class_to_rep(*q, X);
                Representation ry = class_to_rep(*q, Y);
                ans = mono_epi_test(rx, ry, hb, opt).exists_epi;
            }
        }
        else {
            Representation rx = class_to_rep(*q, X);
            Representation ry = class_to_rep(*q, Y);
            ans = mono_epi_test(rx, ry, opt).exists_epi;
        }
    }
    epi_cache[k] = ans;
    return ans;
}

std::vector<IsoClass> enumerate_indecomposables(Context& ctx, int max_len)
{
    auto it = ctx.enum_cache.find(max_len);
    if (it != ctx.enum_cache.end()) return it->second;
    std::vector<IsoClass> out;
    if (max_len >= 1) {
        for (const auto& w : enumerate_strings(*ctx.q, max_len - 1))
            out.push_back(make_string_class(*ctx.q, w));
        for (const auto& b : band_words(*ctx.q)) {
            long dl = dim_total(band_dim(*ctx.q, b, 1));
            for (int m = 1; m * dl <= max_len; ++m)
                out.push_back(make_band_class(*ctx.q, b, m, ctx.lambda));
        }
        std::sort(out.begin(), out.end(), [](const IsoClass& a, const IsoClass& b) {
            if (a.length != b.length) return a.length < b.length;
            return a.key < b.key;
        });
    }
    ctx.enum_cache[max_len] = out;
    return out;
}

namespace {

/* fast substring recursion is justified for band-free strings: Dynkin A
 * strings always, and strings of non-positive defect on a cycle */
bool fast_path_ok(Context& ctx, const IsoClass& M)
{
    if (M.band) return false;
    if (ctx.q->is_dynkin_a()) return true;
    if (ctx.q->is_tilde_a()) return defect(*ctx.q, M.dims) <= 0;
    return false;
}

/* proper-submodule candidates for the general path, every class shorter
 * than M whose dimension vector fits; band candidates follow M's parameter */
std::vector<IsoClass> general_candidates(Context& ctx, const IsoClass& M)
{
    std::vector<IsoClass> out;
    for (const auto& c : enumerate_indecomposables(ctx, int(M.length) - 1)) {
        IsoClass cc = c;
        if (cc.band && M.band && cc.lambda != M.lambda)
            cc = make_band_class(*ctx.q, cc.bword, cc.mult, M.lambda);
        if (!dim_leq(cc.dims, M.dims)) continue;
        out.push_back(std::move(cc));
    }
    return out;
}

}  // namespace

GRMeasure gr_measure_fast(Context& ctx, const StringWord& C)
{
    StringWord cc = C.canonical();
    std::string k = word_key(cc);
    auto it = ctx.fast_memo.find(k);
    if (it != ctx.fast_memo.end()) return it->second;
    GRMeasure res;
    if (cc.trivial()) {
        res = GRMeasure({1});
    }
    else {
        GRMeasure best;
        for (const auto& S : substring_submodules(*ctx.q, cc)) {
            if (S.i == 0 && S.j == cc.length()) continue;
            GRMeasure m = gr_measure_fast(ctx, S.sub);
            if (best.empty() || measure_less(best, m)) best = m;
        }
        if (best.empty()) throw std::runtime_error("string without proper submodule");
        res = extend(best, cc.length() + 1);
    }
    ctx.fast_memo[k] = res;
    return res;
}

GRMeasure gr_measure(Context& ctx, const IsoClass& M)
{
    auto it = ctx.measure_memo.find(M.key);
    if (it != ctx.measure_memo.end()) return it->second;
    GRMeasure res;
    if (M.length == 1) {
        res = GRMeasure({1});
    }
    else if (fast_path_ok(ctx, M)) {
        res = gr_measure_fast(ctx, M.word);
    }
    else {
        auto cands = general_candidates(ctx, M);
        std::vector<std::pair<GRMeasure, const IsoClass*>> order;
        order.reserve(cands.size());
        for (const auto& c : cands) order.emplace_back(gr_measure(ctx, c), &c);
        std::sort(order.begin(), order.end(),
                  [](const auto& a, const auto& b) {
                      Ordering cmp = compare(a.first, b.first);
                      if (cmp != Ordering::EQ) return cmp == Ordering::GT;
                      return a.second->key < b.second->key;
                  });
        GRMeasure best;
        for (const auto& [mu, c] : order)
            if (ctx.exists_mono(*c, M)) {
                best = mu;
                break;
            }
        if (best.empty()) throw std::runtime_error("no proper submodule found");
        res = extend(best, int(M.length));
    }
    ctx.measure_memo[M.key] = res;
    return res;
}

GRResult gr_submodules(Context& ctx, const IsoClass& M)
{
    auto hit = ctx.sub_cache.find(M.key);
    if (hit != ctx.sub_cache.end()) return hit->second;
    if (M.length <= 1)
        throw std::invalid_argument("a simple module has no GR submodule");
    GRResult R;
    R.measure = gr_measure(ctx, M);
    GRMeasure prefix(std::vector<int>(R.measure.elems.begin(), R.measure.elems.end() - 1));
    std::map<std::string, GRSub> found;
    if (fast_path_ok(ctx, M)) {
        for (const auto& S : substring_submodules(*ctx.q, M.word)) {
            if (S.i == 0 && S.j == M.word.length()) continue;
            if (S.j - S.i + 1 != prefix.max()) continue;
            if (!(gr_measure_fast(ctx, S.sub) == prefix)) continue;
            GRSub g;
            g.cls = make_string_class(*ctx.q, S.sub);
            g.quotient_words = S.quotient;
            g.quotient_uniserial =
                S.quotient.size() == 1 && is_uniserial_word(S.quotient.front());
            auto [pos, inserted] = found.emplace(g.cls.key, g);
            if (!inserted && g.quotient_uniserial && !pos->second.quotient_uniserial)
                pos->second = g;
        }
    }
    else {
        for (const auto& c : general_candidates(ctx, M)) {
            if (c.length != prefix.max()) continue;
            if (!(gr_measure(ctx, c) == prefix)) continue;
            if (!ctx.exists_mono(c, M)) continue;
            found.emplace(c.key, GRSub{c, {}, false});
        }
    }
    if (found.empty()) throw std::runtime_error("GR submodule not located");
    std::set<DimVector> dimset;
    for (auto& [k, g] : found) {
        dimset.insert(g.cls.dims);
        R.subs.push_back(g);
    }
    R.gr_count = int(R.subs.size());
    R.gr_count_dim = int(dimset.size());
    const IsoClass& n = R.subs.front().cls;
    if (n.length == 1)
        R.filtration = {n};
    else
        R.filtration = gr_submodules(ctx, n).filtration;
    R.filtration.push_back(M);
    ctx.sub_cache[M.key] = R;
    return R;
}

bool is_gr_inclusion(Context& ctx, const IsoClass& N, const IsoClass& M)
{
    if (N.length >= M.length) return false;
    if (!(extend(gr_measure(ctx, N), int(M.length)) == gr_measure(ctx, M))) return false;
    return ctx.exists_mono(N, M);
}

namespace {

struct Ray {
    int rank = 1;
    bool band = false;
    std::vector<IsoClass> chain;  // X_1, X_2, ... while |X_i| <= bound
    std::vector<GRMeasure> mus;
    long next_len = 0;  // length of the first chain element beyond the bound
};

IsoClass next_regular_extension(Context& ctx, const IsoClass& cur)
{
    if (cur.band) return make_band_class(*ctx.q, cur.bword, cur.mult + 1, cur.lambda);
    std::vector<StringWord> regs;
    for (const auto& e : irreducible_mono_extensions(*ctx.q, cur.word))
        if (defect(*ctx.q, string_dim(*ctx.q, e)) == 0) regs.push_back(e);
    if (regs.size() != 1) throw std::runtime_error("quasi-chain step is not unique");
    return make_string_class(*ctx.q, regs.front());
}

std::vector<Ray> regular_rays(Context& ctx, long max_len)
{
    std::vector<Ray> rays;
    if (!ctx.q->is_tilde_a()) return rays;
    auto grow = [&](Ray r, IsoClass cur) {
        while (cur.length <= max_len) {
            r.mus.push_back(gr_measure(ctx, cur));
            r.chain.push_back(cur);
            cur = next_regular_extension(ctx, cur);
        }
        r.next_len = cur.length;
        if (!r.chain.empty()) rays.push_back(std::move(r));
    };
    for (const Tube& t : ctx.tubes().tubes)
        for (const StringWord& qs : t.quasi_simples) {
            Ray r;
            r.rank = t.rank;
            grow(std::move(r), make_string_class(*ctx.q, qs));
        }
    for (const auto& b : band_words(*ctx.q)) {
        Ray r;
        r.rank = 1;
        r.band = true;
        grow(std::move(r), make_band_class(*ctx.q, b, 1, ctx.lambda));
    }
    return rays;
}

std::optional<GRMeasure> measure_h1(Context& ctx)
{
    auto bws = band_words(*ctx.q);
    if (bws.empty()) return std::nullopt;
    return gr_measure(ctx, make_band_class(*ctx.q, bws.front(), 1, ctx.lambda));
}

struct Enumerated {
    std::vector<IsoClass> classes;
    std::vector<GRMeasure> mus;           // parallel to classes
    std::vector<GRMeasure> sorted_mus;    // ascending, unique
};

Enumerated enumerate_with_measures(Context& ctx, int max_len)
{
    Enumerated e;
    e.classes = enumerate_indecomposables(ctx, max_len);
    e.mus.reserve(e.classes.size());
    for (const auto& c : e.classes) e.mus.push_back(gr_measure(ctx, c));
    e.sorted_mus = e.mus;
    std::sort(e.sorted_mus.begin(), e.sorted_mus.end(), measure_less);
    e.sorted_mus.erase(std::unique(e.sorted_mus.begin(), e.sorted_mus.end()),
                       e.sorted_mus.end());
    return e;
}

const char* kind_name(ARKind k)
{
    switch (k) {
        case ARKind::Preprojective: return "preprojective";
        case ARKind::Regular: return "regular";
        case ARKind::Preinjective: return "preinjective";
    }
    return "?";
}

/* mu exceeds every measure on the ray, including the part beyond the bound:
 * some mu(R_j) sits below mu without being a prefix of it, and from j on the
 * observed chain closes up as consecutive GR extensions */
bool ray_dominated(const Ray& r, const GRMeasure& mu)
{
    auto closed_from = [&](size_t j) {
        for (size_t t = j; t + 1 < r.mus.size(); ++t)
            if (!(r.mus[t + 1] == extend(r.mus[t], int(r.chain[t + 1].length))))
                return false;
        return true;
    };
    for (size_t j = 0; j < r.mus.size(); ++j) {
        if (!measure_less(r.mus[j], mu)) continue;
        if (starts_with(r.mus[j], mu)) continue;
        if (closed_from(j)) return true;
    }
    /* mu strictly extends the last observed chain measure: every chain
     * element beyond the bound is longer than any element of mu, so the
     * extension already dominates the whole tail */
    const GRMeasure& last = r.mus.back();
    if (starts_with(last, mu) && mu.elems.size() > last.elems.size() &&
        mu.max() < r.next_len && closed_from(0))
        return true;
    return false;
}

}  // namespace

PartitionReport partition_prefix(Context& ctx, int max_len)
{
    if (!ctx.q->is_tilde_a())
        throw std::invalid_argument("partition requires an acyclic cycle quiver");
    PartitionReport rep;
    rep.bound = max_len;
    auto mh1 = measure_h1(ctx);
    if (!mh1) throw std::runtime_error("no band family available");
    auto rays = regular_rays(ctx, max_len);

    struct Agg {
        GRMeasure mu;
        std::vector<std::string> wit;
        bool pre = false, reg = false, inj = false;
    };
    Enumerated E = enumerate_with_measures(ctx, max_len);
    std::map<std::string, Agg> by;
    for (size_t i = 0; i < E.classes.size(); ++i) {
        Agg& a = by[E.mus[i].str()];
        a.mu = E.mus[i];
        a.wit.push_back(class_label(*ctx.q, E.classes[i]));
        ARKind k = ctx.ar(E.classes[i]).kind;
        if (k == ARKind::Preprojective) a.pre = true;
        if (k == ARKind::Regular) a.reg = true;
        if (k == ARKind::Preinjective) a.inj = true;
    }
    std::vector<const Agg*> rows;
    for (auto& [k, a] : by) rows.push_back(&a);
    std::sort(rows.begin(), rows.end(),
              [](const Agg* a, const Agg* b) { return measure_less(a->mu, b->mu); });

    std::vector<GRMeasure> regmus;
    for (const Agg* a : rows)
        if (a->reg) regmus.push_back(a->mu);

    for (const Agg* a : rows) {
        PartitionRow row;
        row.mu = a->mu;
        row.witnesses = a->wit;
        if (a->pre) row.kinds.push_back("preprojective");
        if (a->reg) row.kinds.push_back("regular");
        if (a->inj) row.kinds.push_back("preinjective");
        bool above_all = true;
        for (const auto& rm : regmus)
            if (!measure_less(rm, a->mu)) {
                above_all = false;
                break;
            }
        if (a->pre) {
            row.label = "take-off";
            row.certified = true;
        }
        else if (!above_all) {
            if (compare(a->mu, *mh1) != Ordering::LT) {
                row.label = "central";
                row.certified = true;
            }
            else {
                row.label = "undetermined-at-bound";
                row.certified = false;
            }
        }
        else {
            row.label = "landing";
            row.certified = true;
            for (const Ray& r : rays)
                if (!ray_dominated(r, a->mu)) {
                    row.certified = false;
                    break;
                }
        }
        rep.rows.push_back(std::move(row));
    }
    for (const auto& row : rep.rows) {
        if (row.label != "take-off") break;
        rep.takeoff_prefix.push_back(row.mu);
    }
    rep.regular_prefix = regmus;
    return rep;
}

SuccessorResult direct_successor(Context& ctx, const GRMeasure& I, int max_len)
{
    Enumerated E = enumerate_with_measures(ctx, max_len);
    auto pos = std::find(E.sorted_mus.begin(), E.sorted_mus.end(), I);
    if (pos == E.sorted_mus.end())
        throw std::invalid_argument("measure not realized within the bound");
    SuccessorResult res;
    if (std::next(pos) == E.sorted_mus.end()) {
        res.status = "none-at-bound";
        return res;
    }
    res.measure = *std::next(pos);
    res.status = "bounded";
    auto mh1 = measure_h1(ctx);
    for (const Ray& r : regular_rays(ctx, max_len)) {
        if (r.band) {
            for (size_t i = 0; i + 1 < r.mus.size(); ++i)
                if (r.mus[i] == I && r.mus[i + 1] == res.measure) {
                    res.status = "certified";
                    res.witness = "homogeneous chain";
                    return res;
                }
            continue;
        }
        if (mh1 && r.mus.size() >= size_t(r.rank) &&
            compare(r.mus[r.rank - 1], *mh1) != Ordering::LT) {
            for (size_t j = size_t(2 * r.rank); j < r.mus.size(); ++j)
                if (r.mus[j - 1] == I && r.mus[j] == res.measure) {
                    res.status = "certified";
                    res.witness = "tube chain";
                    return res;
                }
        }
    }
    return res;
}

std::vector<NoPredecessorEntry> no_predecessor_report(Context& ctx, int max_len)
{
    if (!ctx.q->is_tilde_a())
        throw std::invalid_argument("predecessor report requires an acyclic cycle quiver");
    int dl = ctx.q->vertex_count;
    int l0 = max_len - dl;
    if (l0 < 1) throw std::invalid_argument("bound too small");
    int lu = max_len - 2 * dl;
    if (lu < 1) lu = l0;
    Enumerated S = enumerate_with_measures(ctx, max_len);
    Enumerated S0 = enumerate_with_measures(ctx, l0);
    Enumerated U = enumerate_with_measures(ctx, lu);
    auto mh1 = measure_h1(ctx);
    auto pred_in = [](const std::vector<GRMeasure>& sorted, const GRMeasure& mu)
        -> std::optional<GRMeasure> {
        std::optional<GRMeasure> best;
        for (const auto& m : sorted) {
            if (!measure_less(m, mu)) break;
            best = m;
        }
        return best;
    };
    std::vector<NoPredecessorEntry> out;
    for (const auto& mu : U.sorted_mus) {
        NoPredecessorEntry e;
        e.mu = mu;
        if (mu == GRMeasure({1})) {
            e.status = "certified";
            e.reason = "global minimum";
            out.push_back(std::move(e));
            continue;
        }
        if (mh1 && mu == *mh1) {
            e.status = "certified";
            e.reason = "limit of the take-off sequence";
            out.push_back(std::move(e));
            continue;
        }
        auto p0 = pred_in(S0.sorted_mus, mu);
        auto p1 = pred_in(S.sorted_mus, mu);
        bool same = (p0.has_value() == p1.has_value()) &&
                    (!p0 || *p0 == *p1);
        if (!same) {
            e.status = "bounded";
            e.reason = "predecessor candidate unstable under bound growth";
            out.push_back(std::move(e));
        }
    }
    return out;
}

MuIJTable mu_ij_table(Context& ctx, const IsoClass& X, int i_max, int max_len)
{
    if (!ctx.q->is_tilde_a())
        throw std::invalid_argument("mu_ij table requires an acyclic cycle quiver");
    auto mh1 = measure_h1(ctx);
    if (!mh1) throw std::runtime_error("no band family available");

    int r;
    if (X.band) {
        if (X.mult != 1) throw std::invalid_argument("not a quasi-simple class");
        r = 1;
    }
    else {
        const ARClass& a = ctx.ar(X);
        if (a.kind != ARKind::Regular || a.quasi_length != 1)
            throw std::invalid_argument("not a quasi-simple class");
        r = ctx.tubes().tubes.at(a.tube_id).rank;
    }
    std::vector<IsoClass> chain;  // X_1 .. X_{i_max+1}
    std::vector<GRMeasure> mus;
    IsoClass cur = X;
    for (int i = 1; i <= i_max + 1; ++i) {
        mus.push_back(gr_measure(ctx, cur));
        chain.push_back(cur);
        cur = next_regular_extension(ctx, cur);
    }
    if (measure_less(mus[r - 1], *mh1))
        throw std::invalid_argument("chain does not dominate the homogeneous measure");

    Enumerated E = enumerate_with_measures(ctx, max_len);
    MuIJTable T;
    std::vector<std::vector<const IsoClass*>> row_realizers;
    for (int i = std::max(1, 2 * r); i <= i_max; ++i) {
        const GRMeasure& pre = mus[i - 1];
        long next_len = chain[i].length;
        std::map<int, MuIJRow> at_i;
        for (size_t k = 0; k < E.classes.size(); ++k) {
            const GRMeasure& m = E.mus[k];
            if (m.elems.size() != pre.elems.size() + 1) continue;
            if (!starts_with(pre, m)) continue;
            if (m.max() == int(next_len)) continue;
            MuIJRow& row = at_i[m.max()];
            row.i = i;
            row.a = m.max();
            row.mu = m;
            row.realizers.push_back(class_label(*ctx.q, E.classes[k]));
            if (ctx.ar(E.classes[k]).kind != ARKind::Preinjective)
                T.all_preinjective = false;
        }
        for (auto& [a, row] : at_i) {
            if (a >= next_len) T.a_below_next = false;
            T.rows.push_back(std::move(row));
        }
    }
    for (size_t u = 0; u < T.rows.size(); ++u)
        for (size_t v = u + 1; v < T.rows.size(); ++v)
            if (T.rows[u].i < T.rows[v].i &&
                !measure_less(T.rows[v].mu, T.rows[u].mu))
                T.cross_ordered = false;
    // rows ordered by descending measure; check adjacency in the realized order
    std::vector<MuIJRow> ladder = T.rows;
    std::sort(ladder.begin(), ladder.end(), [](const MuIJRow& a, const MuIJRow& b) {
        return measure_less(b.mu, a.mu);
    });
    for (size_t u = 0; u + 1 < ladder.size(); ++u) {
        const GRMeasure& hi = ladder[u].mu;
        const GRMeasure& lo = ladder[u + 1].mu;
        for (const auto& m : E.sorted_mus)
            if (measure_less(lo, m) && measure_less(m, hi)) {
                T.predecessor_chain = false;
                break;
            }
        if (!T.predecessor_chain) break;
    }
    if (ladder.empty()) T.predecessor_chain = false;
    return T;
}

/* ------------------------------------------------------------------ */
/* property suite                                                      */

namespace {

using Check = void (*)(Context&, int, PropertyReport&);

void note_fail(PropertyReport& rep, const std::string& what)
{
    if (rep.failures.size() < 20) rep.failures.push_back(what);
}

std::vector<IsoClass> extension_targets(Context& ctx, const IsoClass& N)
{
    std::vector<IsoClass> out;
    if (N.band) {
        out.push_back(make_band_class(*ctx.q, N.bword, N.mult + 1, N.lambda));
        return out;
    }
    for (const auto& e : irreducible_mono_extensions(*ctx.q, N.word))
        out.push_back(make_string_class(*ctx.q, e));
    return out;
}

bool is_irreducible_extension(Context& ctx, const IsoClass& N, const IsoClass& M)
{
    for (const auto& y : extension_targets(ctx, N))
        if (y.key == M.key) return true;
    return false;
}

void check_epi_factorization(Context& ctx, int bound, PropertyReport& rep)
{
    Enumerated E = enumerate_with_measures(ctx, bound);
    for (const auto& M : E.classes) {
        if (M.length < 2) continue;
        for (const auto& g : gr_submodules(ctx, M).subs) {
            ++rep.checked;
            bool ok = false;
            for (const auto& y : extension_targets(ctx, g.cls))
                if (ctx.exists_epi(y, M)) {
                    ok = true;
                    break;
                }
            if (!ok)
                note_fail(rep, class_label(*ctx.q, g.cls) + " -> " +
                                   class_label(*ctx.q, M));
        }
    }
}

void check_bigprop_1a(Context& ctx, int bound, PropertyReport& rep)
{
    Enumerated E = enumerate_with_measures(ctx, bound);
    for (const auto& M : E.classes) {
        if (M.length < 2 || ctx.ar(M).kind != ARKind::Preprojective) continue;
        for (const auto& g : gr_submodules(ctx, M).subs) {
            ++rep.checked;
            if (!is_irreducible_extension(ctx, g.cls, M))
                note_fail(rep, class_label(*ctx.q, g.cls) + " -> " +
                                   class_label(*ctx.q, M));
        }
    }
}

void check_bigprop_1b(Context& ctx, int bound, PropertyReport& rep)
{
    Enumerated E = enumerate_with_measures(ctx, bound);
    for (const auto& M : E.classes) {
        const ARClass& a = ctx.ar(M);
        if (a.kind != ARKind::Regular || a.quasi_length != 1) continue;
        if (M.length < 2) continue;
        for (const auto& g : gr_submodules(ctx, M).subs) {
            ++rep.checked;
            if (ctx.ar(g.cls).kind != ARKind::Preprojective)
                note_fail(rep, class_label(*ctx.q, g.cls) + " -> " +
                                   class_label(*ctx.q, M));
        }
    }
}

void check_bigprop_1c(Context& ctx, int bound, PropertyReport& rep)
{
    Enumerated E = enumerate_with_measures(ctx, bound);
    for (const auto& M : E.classes) {
        const ARClass& a = ctx.ar(M);
        if (a.kind != ARKind::Regular || a.quasi_length < 2) continue;
        IsoClass below;
        if (M.band) {
            below = make_band_class(*ctx.q, M.bword, M.mult - 1, M.lambda);
        }
        else {
            const Tube& t = ctx.tubes().tubes.at(a.tube_id);
            IsoClass soc = make_string_class(*ctx.q, t.quasi_simples.at(a.socle_index));
            below = quasi_chain(*ctx.q, soc, a.quasi_length - 1);
        }
        for (const auto& g : gr_submodules(ctx, M).subs) {
            ++rep.checked;
            bool ok = ctx.ar(g.cls).kind == ARKind::Preprojective ||
                      g.cls.key == below.key;
            if (!ok)
                note_fail(rep, class_label(*ctx.q, g.cls) + " -> " +
                                   class_label(*ctx.q, M));
        }
    }
}

void check_bigprop_1d(Context& ctx, int bound, PropertyReport& rep)
{
    Enumerated E = enumerate_with_measures(ctx, bound);
    for (const auto& M : E.classes) {
        if (M.length < 2 || ctx.ar(M).kind != ARKind::Preinjective) continue;
        for (const auto& g : gr_submodules(ctx, M).subs) {
            ++rep.checked;
            if (ctx.ar(g.cls).kind != ARKind::Regular)
                note_fail(rep, class_label(*ctx.q, g.cls) + " -> " +
                                   class_label(*ctx.q, M));
        }
    }
}

void check_bigprop_2(Context& ctx, int bound, PropertyReport& rep)
{
    auto mh1 = measure_h1(ctx);
    Enumerated E = enumerate_with_measures(ctx, bound);
    for (size_t i = 0; i < E.classes.size(); ++i) {
        if (ctx.ar(E.classes[i]).kind != ARKind::Preprojective) continue;
        ++rep.checked;
        if (!measure_less(E.mus[i], *mh1))
            note_fail(rep, class_label(*ctx.q, E.classes[i]));
    }
}

void check_bigprop_3(Context& ctx, int bound, PropertyReport& rep)
{
    auto mh1 = measure_h1(ctx);
    PartitionReport part = partition_prefix(ctx, bound);
    for (const auto& row : part.rows)
        if (row.mu == *mh1) {
            ++rep.checked;
            if (row.label != "central")
                note_fail(rep, "homogeneous measure labeled " + row.label);
        }
    long dl = ctx.q->vertex_count;
    Enumerated E = enumerate_with_measures(ctx, bound);
    for (size_t i = 0; i < E.classes.size(); ++i) {
        const IsoClass& M = E.classes[i];
        if (ctx.ar(M).kind != ARKind::Preinjective) continue;
        bool sincere = true;
        for (long d : M.dims)
            if (d < 1) sincere = false;
        if (!sincere || M.length <= dl) continue;
        ++rep.checked;
        if (compare(E.mus[i], *mh1) != Ordering::GT)
            note_fail(rep, class_label(*ctx.q, M));
    }
}

void check_bigprop_5(Context& ctx, int bound, PropertyReport& rep)
{
    (void)bound;
    auto mh1 = measure_h1(ctx);
    for (const Tube& t : ctx.tubes().tubes) {
        if (t.rank < 2) continue;
        ++rep.checked;
        bool ok = false;
        for (const auto& qs : t.quasi_simples) {
            IsoClass xr = quasi_chain(*ctx.q, make_string_class(*ctx.q, qs), t.rank);
            if (compare(gr_measure(ctx, xr), *mh1) != Ordering::LT) {
                ok = true;
                break;
            }
        }
        if (!ok) note_fail(rep, "tube " + std::to_string(t.id));
    }
    if (rep.checked == 0) rep.details = "skipped: no tube of rank > 1";
}

void check_bigprop_6(Context& ctx, int bound, PropertyReport& rep)
{
    auto mh1 = measure_h1(ctx);
    for (const Ray& r : regular_rays(ctx, bound)) {
        if (r.band || !r.chain.front().word.trivial()) continue;
        for (const auto& mu : r.mus) {
            ++rep.checked;
            if (!measure_less(mu, *mh1))
                note_fail(rep, "chain over " +
                                   class_label(*ctx.q, r.chain.front()));
        }
    }
}

void check_bigprop_7(Context& ctx, int bound, PropertyReport& rep)
{
    auto mh1 = measure_h1(ctx);
    auto rays = regular_rays(ctx, bound);
    Enumerated E = enumerate_with_measures(ctx, bound);
    for (size_t i = 0; i < E.classes.size(); ++i) {
        const IsoClass& M = E.classes[i];
        if (M.length < 2 || ctx.ar(M).kind != ARKind::Preinjective) continue;
        if (measure_less(E.mus[i], *mh1)) continue;  // not certainly outside take-off
        for (const auto& g : gr_submodules(ctx, M).subs) {
            const ARClass& a = ctx.ar(g.cls);
            if (a.kind != ARKind::Regular) continue;
            // the ray through the GR submodule stays below mu(M)
            for (const Ray& r : rays) {
                if (r.band != g.cls.band) continue;
                if (!r.band && r.chain.front().key !=
                                   make_string_class(
                                       *ctx.q, ctx.tubes()
                                                   .tubes.at(a.tube_id)
                                                   .quasi_simples.at(a.socle_index))
                                       .key)
                    continue;
                for (const auto& mu : r.mus) {
                    ++rep.checked;
                    if (!measure_less(mu, E.mus[i]))
                        note_fail(rep, class_label(*ctx.q, M));
                }
            }
        }
    }
}

void check_onemap(Context& ctx, int bound, PropertyReport& rep)
{
    Enumerated E = enumerate_with_measures(ctx, bound);
    auto bws = band_words(*ctx.q);
    for (const auto& M : E.classes) {
        if (ctx.ar(M).kind != ARKind::Preinjective) continue;
        Representation rm = class_to_rep(*ctx.q, M);
        for (const Tube& t : ctx.tubes().tubes) {
            ++rep.checked;
            int cnt = 0;
            for (const auto& qs : t.quasi_simples)
                if (graph_map_basis(*ctx.q, qs, M.word).dim() > 0) ++cnt;
            if (cnt != 1)
                note_fail(rep, class_label(*ctx.q, M) + " tube " +
                                   std::to_string(t.id) + " count " +
                                   std::to_string(cnt));
        }
        if (!bws.empty()) {
            ++rep.checked;
            Representation h =
                class_to_rep(*ctx.q, make_band_class(*ctx.q, bws.front(), 1, ctx.lambda));
            if (hom_basis(h, rm).dim() == 0)
                note_fail(rep, class_label(*ctx.q, M) + " misses the band component");
        }
    }
}

void check_two_gr_string(Context& ctx, int bound, PropertyReport& rep)
{
    Enumerated E = enumerate_with_measures(ctx, bound);
    for (const auto& M : E.classes) {
        if (M.band || M.length < 2) continue;
        if (!fast_path_ok(ctx, M)) continue;  // band-free strings only
        ++rep.checked;
        if (gr_submodules(ctx, M).gr_count > 2)
            note_fail(rep, class_label(*ctx.q, M));
    }
}

void check_uniserial_factors(Context& ctx, int bound, PropertyReport& rep)
{
    Enumerated E = enumerate_with_measures(ctx, bound);
    for (const auto& M : E.classes) {
        if (M.band || M.length < 2) continue;
        if (!fast_path_ok(ctx, M)) continue;
        for (const auto& g : gr_submodules(ctx, M).subs) {
            ++rep.checked;
            if (!g.quotient_uniserial)
                note_fail(rep, class_label(*ctx.q, g.cls) + " -> " +
                                   class_label(*ctx.q, M));
        }
    }
}

void check_prop_2gr(Context& ctx, int bound, PropertyReport& rep)
{
    Enumerated E = enumerate_with_measures(ctx, bound);
    for (const auto& M : E.classes) {
        if (M.band || M.length < 2) continue;
        const ARClass& a = ctx.ar(M);
        if (a.kind != ARKind::Regular) continue;
        GRResult R = gr_submodules(ctx, M);
        if (R.gr_count != 2) continue;
        ++rep.checked;
        bool ok = false;
        for (const auto& g : R.subs)
            if (is_irreducible_extension(ctx, g.cls, M)) {
                ok = true;
                break;
            }
        if (!ok) note_fail(rep, class_label(*ctx.q, M));
    }
}

void check_gr_remark_7(Context& ctx, int bound, PropertyReport& rep)
{
    Enumerated E = enumerate_with_measures(ctx, bound);
    DimVector delta(ctx.q->vertex_count, 1);
    for (const auto& M : E.classes) {
        if (M.length < 2) continue;
        const ARClass& a = ctx.ar(M);
        if (a.kind == ARKind::Regular && a.quasi_length == 1 && M.dims == delta)
            continue;  // the homogeneous quasi-simple is the stated exception
        ++rep.checked;
        if (gr_submodules(ctx, M).gr_count_dim > 2)
            note_fail(rep, class_label(*ctx.q, M));
    }
}

void check_prepre(Context& ctx, int bound, PropertyReport& rep)
{
    auto mh1 = measure_h1(ctx);
    int dl = ctx.q->vertex_count;
    if (bound - dl < 1) throw std::invalid_argument("bound too small");
    Enumerated S = enumerate_with_measures(ctx, bound);
    Enumerated S0 = enumerate_with_measures(ctx, bound - dl);
    auto pred_in = [](const std::vector<GRMeasure>& sorted, const GRMeasure& mu)
        -> std::optional<GRMeasure> {
        std::optional<GRMeasure> best;
        for (const auto& m : sorted) {
            if (!measure_less(m, mu)) break;
            best = m;
        }
        return best;
    };
    std::set<std::string> judged;
    for (size_t i = 0; i < S.classes.size(); ++i) {
        const IsoClass& M = S.classes[i];
        if (ctx.ar(M).kind != ARKind::Preinjective) continue;
        const GRMeasure& mu = S.mus[i];
        if (measure_less(mu, *mh1)) continue;  // could still be take-off
        if (!judged.insert(mu.str()).second) continue;
        auto p0 = pred_in(S0.sorted_mus, mu);
        auto p1 = pred_in(S.sorted_mus, mu);
        if (!p0 || !p1 || !(*p0 == *p1)) continue;  // candidate unstable, skip
        ++rep.checked;
        bool ok = p1->max() > mu.max();
        for (size_t k = 0; k < S.classes.size() && ok; ++k)
            if (S.mus[k] == *p1 && ctx.ar(S.classes[k]).kind != ARKind::Preinjective)
                ok = false;
        if (!ok) note_fail(rep, mu.str());
    }
}

void check_lemma2(Context& ctx, int bound, PropertyReport& rep)
{
    auto mh1 = measure_h1(ctx);
    auto rays = regular_rays(ctx, bound);
    for (size_t a = 0; a < rays.size(); ++a) {
        const Ray& A = rays[a];
        if (A.mus.size() < size_t(A.rank)) continue;
        if (measure_less(A.mus[A.rank - 1], *mh1)) continue;
        for (size_t b = 0; b < rays.size(); ++b) {
            if (a == b) continue;
            const Ray& B = rays[b];
            bool hit = false;
            for (size_t i = size_t(2 * A.rank); i <= A.mus.size() && !hit; ++i)
                for (size_t j = 1; j <= B.mus.size(); ++j)
                    if (A.mus[i - 1] == B.mus[j - 1]) {
                        hit = true;
                        break;
                    }
            if (!hit) continue;
            ++rep.checked;
            bool ok = A.rank == B.rank;
            for (size_t t = size_t(A.rank);
                 ok && t <= std::min(A.mus.size(), B.mus.size()); ++t)
                if (!(A.mus[t - 1] == B.mus[t - 1])) ok = false;
            if (!ok)
                note_fail(rep, "rays " + std::to_string(a) + "," + std::to_string(b));
        }
    }
    if (rep.checked == 0) rep.details = "no coinciding chain measures within bound";
}

void check_landing_iff(Context& ctx, int bound, PropertyReport& rep)
{
    PartitionReport part = partition_prefix(ctx, bound);
    for (const auto& row : part.rows) {
        ++rep.checked;
        bool has_reg =
            std::find(row.kinds.begin(), row.kinds.end(), "regular") != row.kinds.end();
        if (row.label == "landing") {
            if (row.kinds != std::vector<std::string>{"preinjective"})
                note_fail(rep, row.mu.str() + " landing with non-preinjective realizer");
        }
        else if (has_reg && row.label == "landing") {
            note_fail(rep, row.mu.str());
        }
    }
}

void check_landing_order(Context& ctx, int bound, PropertyReport& rep)
{
    PartitionReport part = partition_prefix(ctx, bound);
    std::vector<const PartitionRow*> landing;
    for (const auto& row : part.rows)
        if (row.label == "landing" && row.certified) landing.push_back(&row);
    for (size_t i = 0; i < landing.size(); ++i)
        for (size_t j = i + 1; j < landing.size(); ++j) {
            ++rep.checked;
            // rows ascend, so the later row must belong to a shorter module
            if (landing[i]->mu.max() <= landing[j]->mu.max())
                note_fail(rep, landing[i]->mu.str() + " vs " + landing[j]->mu.str());
        }
    if (landing.size() < 2) rep.details = "fewer than two certified landing measures";
}

void check_landing_exceptional(Context& ctx, int bound, PropertyReport& rep)
{
    bool has_exceptional = false;
    for (const Tube& t : ctx.tubes().tubes)
        if (t.rank > 1) has_exceptional = true;
    if (!has_exceptional) {
        rep.details = "skipped: no tube of rank > 1";
        return;
    }
    long dl = ctx.q->vertex_count;
    PartitionReport part = partition_prefix(ctx, bound);
    Enumerated E = enumerate_with_measures(ctx, bound);
    for (const auto& row : part.rows) {
        if (row.label != "landing" || row.mu.max() < 2 * dl) continue;
        for (size_t i = 0; i < E.classes.size(); ++i) {
            if (!(E.mus[i] == row.mu)) continue;
            for (const auto& g : gr_submodules(ctx, E.classes[i]).subs) {
                ++rep.checked;
                const ARClass& a = ctx.ar(g.cls);
                bool exceptional = !g.cls.band && a.kind == ARKind::Regular &&
                                   ctx.tubes().tubes.at(a.tube_id).rank > 1;
                if (!exceptional)
                    note_fail(rep, class_label(*ctx.q, g.cls) + " -> " +
                                       class_label(*ctx.q, E.classes[i]));
            }
        }
    }
}

void check_coro_cen(Context& ctx, int bound, PropertyReport& rep)
{
    bool has_exceptional = false;
    for (const Tube& t : ctx.tubes().tubes)
        if (t.rank > 1) has_exceptional = true;
    if (!has_exceptional) {
        rep.details = "skipped: no tube of rank > 1";
        return;
    }
    PartitionReport part = partition_prefix(ctx, bound);
    Enumerated E = enumerate_with_measures(ctx, bound);
    for (size_t i = 0; i < E.classes.size(); ++i) {
        const IsoClass& M = E.classes[i];
        if (M.length < 2) continue;
        bool has_hi = false;
        for (const auto& g : gr_submodules(ctx, M).subs)
            if (g.cls.band && g.cls.mult >= 2) has_hi = true;
        if (!has_hi) continue;
        ++rep.checked;
        for (const auto& row : part.rows)
            if (row.mu == E.mus[i] && row.label != "central")
                note_fail(rep, class_label(*ctx.q, M) + " labeled " + row.label);
    }
    if (rep.checked == 0)
        rep.details = "no module with a non-simple homogeneous GR submodule in bound";
}

void check_xq_h1(Context& ctx, int bound, PropertyReport& rep)
{
    (void)bound;
    int sources = 0;
    for (int v = 0; v < ctx.q->vertex_count; ++v)
        if (ctx.q->arrows_to(v).empty()) ++sources;
    if (sources != 1) {
        rep.details = "skipped: orientation is not one-source-one-sink";
        return;
    }
    auto mh1 = measure_h1(ctx);
    for (const Tube& t : ctx.tubes().tubes) {
        const StringWord* path = nullptr;
        for (const auto& qs : t.quasi_simples)
            if (!qs.trivial()) path = &qs;
        if (!path) continue;
        ++rep.checked;
        IsoClass xr = quasi_chain(*ctx.q, make_string_class(*ctx.q, *path), t.rank);
        if (!(gr_measure(ctx, xr) == *mh1))
            note_fail(rep, "tube " + std::to_string(t.id));
    }
}

long central_preinjective_count(Context& ctx, int bound)
{
    PartitionReport part = partition_prefix(ctx, bound);
    std::set<std::string> central;
    for (const auto& row : part.rows)
        if (row.label == "central") central.insert(row.mu.str());
    Enumerated E = enumerate_with_measures(ctx, bound);
    long n = 0;
    for (size_t i = 0; i < E.classes.size(); ++i)
        if (ctx.ar(E.classes[i]).kind == ARKind::Preinjective &&
            central.count(E.mus[i].str()))
            ++n;
    return n;
}

void check_inf_central(Context& ctx, int bound, PropertyReport& rep)
{
    int dl = ctx.q->vertex_count;
    bool sink_source = true;
    for (int v = 0; v < ctx.q->vertex_count; ++v)
        if (!ctx.q->arrows_to(v).empty() && !ctx.q->arrows_from(v).empty())
            sink_source = false;
    long c1 = central_preinjective_count(ctx, bound);
    long c2 = central_preinjective_count(ctx, bound + dl);
    rep.checked = 2;
    rep.details = "counts " + std::to_string(c1) + " -> " + std::to_string(c2);
    if (sink_source) {
        if (c1 != 0 || c2 != 0) note_fail(rep, "sink-source with central preinjectives");
    }
    else if (c2 <= c1) {
        note_fail(rep, "count did not grow with the bound");
    }
}

const std::vector<std::pair<std::string, Check>>& property_table()
{
    static const std::vector<std::pair<std::string, Check>> table = {
        {"epi_factorization", check_epi_factorization},
        {"bigprop_1a", check_bigprop_1a},
        {"bigprop_1b", check_bigprop_1b},
        {"bigprop_1c", check_bigprop_1c},
        {"bigprop_1d", check_bigprop_1d},
        {"bigprop_2", check_bigprop_2},
        {"bigprop_3", check_bigprop_3},
        {"bigprop_5", check_bigprop_5},
        {"bigprop_6", check_bigprop_6},
        {"bigprop_7", check_bigprop_7},
        {"onemap", check_onemap},
        {"two_gr_string", check_two_gr_string},
        {"uniserial_factors", check_uniserial_factors},
        {"prop_2gr", check_prop_2gr},
        {"gr_remark_7", check_gr_remark_7},
        {"prepre", check_prepre},
        {"lemma2", check_lemma2},
        {"landing_iff", check_landing_iff},
        {"landing_order", check_landing_order},
        {"landing_exceptional", check_landing_exceptional},
        {"coro_cen", check_coro_cen},
        {"xq_h1", check_xq_h1},
        {"inf_central", check_inf_central},
    };
    return table;
}

}  // namespace

PropertyReport verify_property(Context& ctx, const std::string& id, int bound)
{
    if (!ctx.q->is_tilde_a() && id != "two_gr_string" && id != "uniserial_factors")
        throw std::invalid_argument("property requires an acyclic cycle quiver");
    for (const auto& [name, fn] : property_table())
        if (name == id) {
            PropertyReport rep;
            rep.id = id;
            fn(ctx, bound, rep);
            rep.pass = rep.failures.empty();
            return rep;
        }
    throw std::invalid_argument("unknown property id: " + id);
}

std::vector<std::string> registered_properties()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : property_table()) out.push_back(name);
    return out;
}

}  // namespace grtk
