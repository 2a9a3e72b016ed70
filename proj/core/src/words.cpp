#include "grtk/words.hpp"

#include <algorithm>
#include <set>

namespace grtk {

bool StringWord::operator<(const StringWord& o) const
{
    if (letters.empty() && o.letters.empty()) return base_vertex < o.base_vertex;
    return letters < o.letters;
}

StringWord StringWord::inverted() const
{
    StringWord r;
    r.base_vertex = base_vertex;
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        r.letters.push_back(it->flipped());
    return r;
}

StringWord StringWord::canonical() const
{
    if (trivial()) return *this;
    StringWord inv = inverted();
    return letters <= inv.letters ? *this : inv;
}

std::vector<int> StringWord::walk(const Quiver& q) const
{
    std::vector<int> u;
    if (trivial()) {
        u.push_back(base_vertex);
        return u;
    }
    u.push_back(letter_source(q, letters.front()));
    for (const Letter& l : letters) u.push_back(letter_target(q, l));
    return u;
}

int StringWord::start_vertex(const Quiver& q) const
{
    return trivial() ? base_vertex : letter_source(q, letters.front());
}

int StringWord::end_vertex(const Quiver& q) const
{
    return trivial() ? base_vertex : letter_target(q, letters.back());
}

std::string StringWord::str(const Quiver& q) const
{
    if (trivial()) return "e" + std::to_string(base_vertex);
    std::string s;
    /* printed left-to-right as c_n ... c_1 */
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        if (!s.empty()) s += " ";
        if (it->inverse) s += "-";
        s += q.arrow(it->arrow).name;
    }
    return s;
}

std::string word_key(const StringWord& w)
{
    if (w.trivial()) return "s:e" + std::to_string(w.base_vertex);
    std::string s = "s:";
    for (const Letter& l : w.letters) {
        s += l.inverse ? "-" : "+";
        s += std::to_string(l.arrow);
        s += ".";
    }
    return s;
}

namespace {

/* direct factors of maximal direct runs may not contain a relation path */
bool violates_relations(const Quiver& q, const std::vector<Letter>& letters)
{
    for (const auto& rel : q.relations) {
        size_t k = rel.size();
        if (letters.size() < k) continue;
        for (size_t i = 0; i + k <= letters.size(); ++i) {
            bool direct_hit = true, inverse_hit = true;
            for (size_t j = 0; j < k; ++j) {
                if (letters[i + j].inverse || letters[i + j].arrow != rel[j])
                    direct_hit = false;
                if (!letters[i + j].inverse ||
                    letters[i + j].arrow != rel[k - 1 - j])
                    inverse_hit = false;
            }
            if (direct_hit || inverse_hit) return true;
        }
    }
    return false;
}

const char* string_defect(const Quiver& q, const std::vector<Letter>& letters)
{
    for (const Letter& l : letters)
        if (l.arrow < 0 || l.arrow >= q.n_arrows()) return "unknown arrow";
    for (size_t i = 0; i + 1 < letters.size(); ++i) {
        if (letter_target(q, letters[i]) != letter_source(q, letters[i + 1]))
            return "non-composable letters";
        if (letters[i].arrow == letters[i + 1].arrow &&
            letters[i].inverse != letters[i + 1].inverse)
            return "unreduced";
        /* two direct or two inverse copies of the same arrow in a row can
         * only happen on a loop, which validate() already rejects */
    }
    if (violates_relations(q, letters)) return "relation factor";
    return nullptr;
}

}  // namespace

bool is_valid_string(const Quiver& q, const std::vector<Letter>& letters)
{
    return string_defect(q, letters) == nullptr;
}

StringWord validate_string(const Quiver& q, const std::vector<Letter>& letters)
{
    if (letters.empty()) throw WordError("empty letter sequence; use trivial_string");
    if (const char* why = string_defect(q, letters)) throw WordError(why);
    StringWord w;
    w.letters = letters;
    w.base_vertex = letter_source(q, letters.front());
    return w;
}

StringWord trivial_string(const Quiver& q, int vertex)
{
    if (vertex < 0 || vertex >= q.vertex_count) throw WordError("bad vertex");
    StringWord w;
    w.base_vertex = vertex;
    return w;
}

std::vector<StringWord> enumerate_strings(const Quiver& q, int max_length)
{
    std::set<StringWord> out;
    for (int v = 0; v < q.vertex_count; ++v) out.insert(trivial_string(q, v));

    /* grow walks letter by letter; a canonical representative of every
     * class appears among all walks */
    std::vector<std::vector<Letter>> frontier;
    for (int a = 0; a < q.n_arrows(); ++a) {
        frontier.push_back({Letter{a, false}});
        frontier.push_back({Letter{a, true}});
    }
    for (int len = 1; len <= max_length && !frontier.empty(); ++len) {
        std::vector<std::vector<Letter>> next;
        for (auto& w : frontier) {
            if (!is_valid_string(q, w)) continue;
            StringWord sw;
            sw.letters = w;
            out.insert(sw.canonical());
            if (len == max_length) continue;
            int end = letter_target(q, w.back());
            for (int a = 0; a < q.n_arrows(); ++a) {
                if (q.arrow(a).src == end) {
                    auto w2 = w;
                    w2.push_back(Letter{a, false});
                    next.push_back(std::move(w2));
                }
                if (q.arrow(a).tgt == end) {
                    auto w2 = w;
                    w2.push_back(Letter{a, true});
                    next.push_back(std::move(w2));
                }
            }
        }
        frontier = std::move(next);
    }
    return {out.begin(), out.end()};
}

BandWord BandWord::canonical() const
{
    std::vector<Letter> best = letters;
    auto consider = [&](std::vector<Letter> cand) {
        for (int r = 0; r < static_cast<int>(cand.size()); ++r) {
            if (cand < best) best = cand;
            std::rotate(cand.begin(), cand.begin() + 1, cand.end());
        }
    };
    consider(letters);
    std::vector<Letter> inv;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        inv.push_back(it->flipped());
    consider(inv);
    BandWord b;
    b.letters = best;
    return b;
}

std::vector<int> BandWord::node_vertices(const Quiver& q) const
{
    std::vector<int> u;
    for (const Letter& l : letters) u.push_back(letter_source(q, l));
    return u;
}

std::string BandWord::str(const Quiver& q) const
{
    std::string s;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        if (!s.empty()) s += " ";
        if (it->inverse) s += "-";
        s += q.arrow(it->arrow).name;
    }
    return s;
}

std::string band_key(const BandWord& b)
{
    std::string s = "b:";
    for (const Letter& l : b.letters) {
        s += l.inverse ? "-" : "+";
        s += std::to_string(l.arrow);
        s += ".";
    }
    return s;
}

std::vector<BandWord> band_words(const Quiver& q)
{
    /* Only the A~_n cycle band is supported; trees have none. */
    if (q.is_dynkin_a()) return {};
    if (!q.is_tilde_a()) {
        if (q.is_acyclic() && q.relations.empty()) return {};
        throw WordError("band enumeration supported for A~_n and Dynkin A only");
    }
    int n1 = q.vertex_count;
    /* walk 0 -> 1 -> ... -> n -> 0 along the underlying cycle */
    std::vector<Letter> letters(n1);
    for (int i = 0; i < n1; ++i) {
        int u = i, w = (i + 1) % n1;
        int edge = -1;
        bool inverse = false;
        for (int a = 0; a < q.n_arrows(); ++a) {
            const Arrow& ar = q.arrow(a);
            if (ar.src == u && ar.tgt == w && edge < 0) {
                edge = a;
                inverse = false;
            }
            else if (ar.src == w && ar.tgt == u && edge < 0) {
                edge = a;
                inverse = true;
            }
        }
        /* Kronecker: two parallel arrows between the same pair; use one
         * forward and the other backward */
        if (n1 == 2 && i == 1) {
            for (int a = 0; a < q.n_arrows(); ++a)
                if (a != letters[0].arrow) {
                    edge = a;
                    inverse = !letters[0].inverse;
                }
        }
        if (edge < 0) throw WordError("cycle edge not found");
        letters[i] = Letter{edge, inverse};
    }
    BandWord b;
    b.letters = letters;
    return {b.canonical()};
}

}  // namespace grtk
