#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace grtk {

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

/* Orientation of a cycle quiver as a sign word: sign[i] == '+' orients
 * edge i as i -> i+1 (mod n+1), '-' the other way. p counts '+', q '-'. */
struct CycleOrientation {
    std::string signs;
    int p = 0;
    int q = 0;
};

class QuiverError : public std::runtime_error {
public:
    explicit QuiverError(const std::string& what) : std::runtime_error(what) {}
};

struct Quiver {
    int vertex_count = 0;
    std::vector<Arrow> arrows;
    /* monomial relations: each a composable arrow path, first-applied first */
    std::vector<std::vector<int>> relations;
    bool string_algebra = false;
    std::optional<CycleOrientation> cycle;  // set for cycle quivers

    int n_arrows() const { return static_cast<int>(arrows.size()); }
    const Arrow& arrow(int a) const { return arrows.at(a); }
    int arrow_by_name(const std::string& name) const;

    /* arrows with the given endpoint */
    std::vector<int> arrows_from(int v) const;
    std::vector<int> arrows_to(int v) const;

    void validate() const;
    bool is_acyclic() const;
    /* acyclic orientation of the extended Dynkin cycle A~_n */
    bool is_tilde_a() const;
    /* orientation of a Dynkin A line quiver */
    bool is_dynkin_a() const;
};

/* Cycle quiver from a sign word. Throws QuiverError("cyclic_orientation")
 * on an all-same-sign word. '+' arrows are named a1..ap in cycle order,
 * '-' arrows b1..bq in reverse cycle order. */
Quiver build_cycle_quiver(const CycleOrientation& orientation);
Quiver build_cycle_quiver(const std::string& signs);

/* Line quiver of type A_n; sign word of length n-1, '+' = left-to-right. */
Quiver build_line_quiver(const std::string& signs);

}  // namespace grtk
