#include "grtk/quiver.hpp"

#include <algorithm>
#include <functional>

namespace grtk {

int Quiver::arrow_by_name(const std::string& name) const
{
    for (int a = 0; a < n_arrows(); ++a)
        if (arrows[a].name == name) return a;
    throw QuiverError("unknown arrow name: " + name);
}

std::vector<int> Quiver::arrows_from(int v) const
{
    std::vector<int> r;
    for (int a = 0; a < n_arrows(); ++a)
        if (arrows[a].src == v) r.push_back(a);
    return r;
}

std::vector<int> Quiver::arrows_to(int v) const
{
    std::vector<int> r;
    for (int a = 0; a < n_arrows(); ++a)
        if (arrows[a].tgt == v) r.push_back(a);
    return r;
}

void Quiver::validate() const
{
    if (vertex_count <= 0) throw QuiverError("quiver has no vertices");
    for (const Arrow& a : arrows)
        if (a.src < 0 || a.src >= vertex_count || a.tgt < 0 || a.tgt >= vertex_count)
            throw QuiverError("arrow endpoint out of range");
    for (const auto& rel : relations) {
        if (rel.size() < 2) throw QuiverError("relation shorter than two arrows");
        for (size_t i = 0; i < rel.size(); ++i) {
            if (rel[i] < 0 || rel[i] >= n_arrows())
                throw QuiverError("relation refers to unknown arrow");
            if (i + 1 < rel.size() && arrows[rel[i]].tgt != arrows[rel[i + 1]].src)
                throw QuiverError("relation path not composable");
        }
    }
    if (string_algebra) {
        auto in_relations = [&](int first, int second) {
            for (const auto& rel : relations)
                for (size_t i = 0; i + 1 < rel.size(); ++i)
                    if (rel[i] == first && rel[i + 1] == second) return true;
            return false;
        };
        for (int v = 0; v < vertex_count; ++v) {
            if (arrows_from(v).size() > 2 || arrows_to(v).size() > 2)
                throw QuiverError("string algebra: more than two arrows at a vertex");
        }
        for (int b = 0; b < n_arrows(); ++b) {
            int forward = 0, backward = 0;
            for (int g = 0; g < n_arrows(); ++g) {
                if (arrows[g].src == arrows[b].tgt && !in_relations(b, g)) ++forward;
                if (arrows[g].tgt == arrows[b].src && !in_relations(g, b)) ++backward;
            }
            if (forward > 1 || backward > 1)
                throw QuiverError("string algebra: composability condition violated");
        }
    }
}

bool Quiver::is_acyclic() const
{
    std::vector<int> state(vertex_count, 0);
    std::function<bool(int)> dfs = [&](int v) {
        state[v] = 1;
        for (int a : arrows_from(v)) {
            int w = arrows[a].tgt;
            if (state[w] == 1) return false;
            if (state[w] == 0 && !dfs(w)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (int v = 0; v < vertex_count; ++v)
        if (state[v] == 0 && !dfs(v)) return false;
    return true;
}

bool Quiver::is_tilde_a() const
{
    if (!relations.empty()) return false;
    if (n_arrows() != vertex_count || vertex_count < 2) return false;
    std::vector<int> degree(vertex_count, 0);
    for (const Arrow& a : arrows) {
        if (a.src == a.tgt) return false;
        ++degree[a.src];
        ++degree[a.tgt];
    }
    for (int d : degree)
        if (d != 2) return false;
    /* the underlying graph is then a disjoint union of cycles; demand
     * connectivity */
    std::vector<bool> seen(vertex_count, false);
    std::function<void(int)> dfs = [&](int v) {
        seen[v] = true;
        for (const Arrow& a : arrows) {
            if (a.src == v && !seen[a.tgt]) dfs(a.tgt);
            if (a.tgt == v && !seen[a.src]) dfs(a.src);
        }
    };
    dfs(0);
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) return false;
    return is_acyclic();
}

bool Quiver::is_dynkin_a() const
{
    if (!relations.empty()) return false;
    if (n_arrows() != vertex_count - 1) return false;
    std::vector<int> degree(vertex_count, 0);
    for (const Arrow& a : arrows) {
        if (a.src == a.tgt) return false;
        ++degree[a.src];
        ++degree[a.tgt];
    }
    int leaves = 0;
    for (int d : degree) {
        if (d > 2 || d == 0) return false;
        if (d == 1) ++leaves;
    }
    return leaves == 2 || vertex_count == 1;
}

Quiver build_cycle_quiver(const CycleOrientation& orientation)
{
    return build_cycle_quiver(orientation.signs);
}

Quiver build_cycle_quiver(const std::string& signs)
{
    int n1 = static_cast<int>(signs.size());
    if (n1 < 2) throw QuiverError("cycle word needs at least two signs");
    int p = 0, q = 0;
    for (char c : signs) {
        if (c == '+')
            ++p;
        else if (c == '-')
            ++q;
        else
            throw QuiverError("cycle word must be over {+,-}");
    }
    if (p == 0 || q == 0) throw QuiverError("cyclic_orientation");

    Quiver quiver;
    quiver.vertex_count = n1;
    quiver.arrows.resize(n1);
    quiver.string_algebra = true;
    quiver.cycle = CycleOrientation{signs, p, q};

    /* '+' arrows numbered along the cycle, '-' arrows against it, so that
     * the canonical +^p -^q word gets the source-to-sink path names
     * a1..ap and b1..bq. */
    int ai = 0;
    for (int i = 0; i < n1; ++i) {
        int u = i, w = (i + 1) % n1;
        if (signs[i] == '+') quiver.arrows[i] = {"a" + std::to_string(++ai), u, w};
    }
    int bi = 0;
    for (int i = n1 - 1; i >= 0; --i) {
        int u = i, w = (i + 1) % n1;
        if (signs[i] == '-') quiver.arrows[i] = {"b" + std::to_string(++bi), w, u};
    }
    quiver.validate();
    return quiver;
}

Quiver build_line_quiver(const std::string& signs)
{
    int n = static_cast<int>(signs.size()) + 1;
    Quiver quiver;
    quiver.vertex_count = n;
    quiver.string_algebra = true;
    for (int i = 0; i + 1 < n; ++i) {
        if (signs[i] == '+')
            quiver.arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
        else if (signs[i] == '-')
            quiver.arrows.push_back({"a" + std::to_string(i + 1), i + 1, i});
        else
            throw QuiverError("line word must be over {+,-}");
    }
    quiver.validate();
    return quiver;
}

}  // namespace grtk
