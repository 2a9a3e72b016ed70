#pragma once
#include <optional>
#include <string>
#include <vector>

#include "grtk/rep.hpp"
#include "grtk/strmod.hpp"

namespace grtk {

// one hom element = matrix per vertex satisfying f_tgt X_a = Y_a f_src
using HomElement = std::vector<Matrix>;

struct HomBasis {
    std::vector<HomElement> basis;
    int dim() const { return int(basis.size()); }
};

struct GenericRankCertificate {
    std::string method;  // "symbolic" | "randomized" | "trivial"
    std::vector<long> witness;
};

struct MonoEpiResult {
    bool exists_mono = false;
    bool exists_epi = false;
    GenericRankCertificate cert;
};

HomBasis hom_basis(const Representation& X, const Representation& Y);

// combinatorial basis for string pairs; agrees with hom_basis in size
HomBasis graph_map_basis(const Quiver& q, const StringWord& C, const StringWord& D);

struct MonoEpiOptions {
    bool random_fast_path = true;
    unsigned long long seed = 0;
};

MonoEpiResult mono_epi_test(const Representation& X, const Representation& Y,
                            const MonoEpiOptions& opt = {});

/* same test against a caller-supplied basis of Hom(X, Y) */
MonoEpiResult mono_epi_test(const Representation& X, const Representation& Y,
                            const HomBasis& hb, const MonoEpiOptions& opt);

// rank of a rational matrix by Gaussian elimination
int rat_rank(Matrix m);

}  // namespace grtk
