#include "grtk/strmod.hpp"

#include <algorithm>
#include <set>

namespace grtk {

namespace {

StringWord subword(const Quiver& q, const StringWord& C, int i, int j)
{
    // interval [i,j] of basis indices -> letters c_{i+1}..c_j
    if (i == j) return trivial_string(q, C.walk(q)[i]);
    StringWord w;
    w.letters.assign(C.letters.begin() + i, C.letters.begin() + j);
    w.base_vertex = letter_source(q, w.letters.front());
    return w;
}

}  // namespace

std::vector<SubstringInclusion> substring_submodules(const Quiver& q, const StringWord& C)
{
    int n = C.length();
    std::vector<SubstringInclusion> out;
    for (int i = 0; i <= n; ++i) {
        if (!(i == 0 || !C.letters[i - 1].inverse)) continue;
        for (int j = i; j <= n; ++j) {
            if (!(j == n || C.letters[j].inverse)) continue;
            SubstringInclusion s;
            s.i = i;
            s.j = j;
            s.sub = subword(q, C, i, j);
            if (i >= 1) s.quotient.push_back(subword(q, C, 0, i - 1));
            if (j <= n - 1) s.quotient.push_back(subword(q, C, j + 1, n));
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<SubstringInclusion> substring_quotients(const Quiver& q, const StringWord& C)
{
    int n = C.length();
    std::vector<SubstringInclusion> out;
    for (int i = 0; i <= n; ++i) {
        if (!(i == 0 || C.letters[i - 1].inverse)) continue;
        for (int j = i; j <= n; ++j) {
            if (!(j == n || !C.letters[j].inverse)) continue;
            SubstringInclusion s;
            s.i = i;
            s.j = j;
            s.sub = subword(q, C, i, j);
            if (i >= 1) s.quotient.push_back(subword(q, C, 0, i - 1));
            if (j <= n - 1) s.quotient.push_back(subword(q, C, j + 1, n));
            out.push_back(std::move(s));
        }
    }
    return out;
}

Covering covering_transport(const Quiver& q, const StringWord& C)
{
    Covering cov;
    int n = C.length();
    cov.aq.vertex_count = n + 1;
    for (int i = 0; i < n; ++i) {
        const Letter& l = C.letters[i];
        if (l.inverse)
            cov.aq.arrows.push_back({"c" + std::to_string(i + 1), i + 1, i});
        else
            cov.aq.arrows.push_back({"c" + std::to_string(i + 1), i, i + 1});
    }
    cov.aq.validate();
    if (n == 0) {
        cov.lifted = trivial_string(cov.aq, 0);
        return cov;
    }
    std::vector<Letter> lifted;
    for (int i = 0; i < n; ++i) lifted.push_back(Letter{i, C.letters[i].inverse});
    cov.lifted = validate_string(cov.aq, lifted);
    return cov;
}

bool is_uniserial_word(const StringWord& C)
{
    for (const Letter& l : C.letters)
        if (l.inverse != C.letters.front().inverse) return false;
    return true;
}

namespace {

// unique valid one-letter continuation at the top end, if any
std::optional<Letter> top_continuation(const Quiver& q, const std::vector<Letter>& w,
                                       bool direction_inverse)
{
    int v = letter_target(q, w.back());
    std::optional<Letter> found;
    for (int a = 0; a < q.n_arrows(); ++a) {
        Letter l{a, direction_inverse};
        if (letter_source(q, l) != v) continue;
        auto cand = w;
        cand.push_back(l);
        if (!is_valid_string(q, cand)) continue;
        if (found) throw WordError("ambiguous maximal hook; not a string algebra");
        found = l;
    }
    return found;
}

std::optional<Letter> bottom_continuation(const Quiver& q, const std::vector<Letter>& w,
                                          bool direction_inverse)
{
    int v = letter_source(q, w.front());
    std::optional<Letter> found;
    for (int a = 0; a < q.n_arrows(); ++a) {
        Letter l{a, direction_inverse};
        if (letter_target(q, l) != v) continue;
        auto cand = w;
        cand.insert(cand.begin(), l);
        if (!is_valid_string(q, cand)) continue;
        if (found) throw WordError("ambiguous maximal hook; not a string algebra");
        found = l;
    }
    return found;
}

// hooks at the two ends of C where the end letter is direct (or C trivial)
void hooks(const Quiver& q, const StringWord& C, std::set<StringWord>& out)
{
    int n = C.length();
    // top end: append gamma^{-1} then a maximal direct run
    if (n == 0 || !C.letters.back().inverse) {
        int u = C.end_vertex(q);
        for (int a = 0; a < q.n_arrows(); ++a) {
            if (q.arrow(a).tgt != u) continue;
            std::vector<Letter> w = C.letters;
            w.push_back(Letter{a, true});
            if (n == 0) {
                // composability of a single letter needs no walk context
            }
            if (!is_valid_string(q, w)) continue;
            while (auto l = top_continuation(q, w, false)) w.push_back(*l);
            StringWord r;
            r.letters = w;
            r.base_vertex = letter_source(q, w.front());
            out.insert(r.canonical());
        }
    }
    // bottom end: prepend gamma then a maximal inverse run
    if (n == 0 || !C.letters.front().inverse) {
        int u = C.start_vertex(q);
        for (int a = 0; a < q.n_arrows(); ++a) {
            if (q.arrow(a).tgt != u) continue;
            std::vector<Letter> w = C.letters;
            w.insert(w.begin(), Letter{a, false});
            if (!is_valid_string(q, w)) continue;
            while (auto l = bottom_continuation(q, w, true)) w.insert(w.begin(), *l);
            StringWord r;
            r.letters = w;
            r.base_vertex = letter_source(q, w.front());
            out.insert(r.canonical());
        }
    }
}

}  // namespace

std::vector<StringWord> irreducible_mono_extensions(const Quiver& q, const StringWord& C)
{
    std::set<StringWord> out;
    hooks(q, C, out);
    hooks(q, C.inverted(), out);
    return {out.begin(), out.end()};
}

}  // namespace grtk
