#include "grtk/rep.hpp"

namespace grtk {

DimVector string_dim(const Quiver& q, const StringWord& C)
{
    DimVector d(q.vertex_count, 0);
    for (int v : C.walk(q)) ++d[v];
    return d;
}

Representation string_to_rep(const Quiver& q, const StringWord& C)
{
    Representation R;
    R.q = &q;
    R.dims = string_dim(q, C);
    std::vector<int> walk = C.walk(q);
    /* position of z_i inside the basis of its vertex */
    std::vector<int> pos(walk.size());
    {
        std::vector<int> seen(q.vertex_count, 0);
        for (size_t i = 0; i < walk.size(); ++i) pos[i] = seen[walk[i]]++;
    }
    R.mats.reserve(q.n_arrows());
    for (int a = 0; a < q.n_arrows(); ++a)
        R.mats.emplace_back(int(R.dims[q.arrow(a).tgt]), int(R.dims[q.arrow(a).src]));
    for (size_t i = 0; i < C.letters.size(); ++i) {
        const Letter& l = C.letters[i];
        // direct c_i: beta(z_{i-1}) = z_i ; inverse: beta(z_i) = z_{i-1}
        int from = l.inverse ? int(i) + 1 : int(i);
        int to = l.inverse ? int(i) : int(i) + 1;
        R.mats[l.arrow].at(pos[to], pos[from]) = 1;
    }
    return R;
}

DimVector band_dim(const Quiver& q, const BandWord& b, int m)
{
    DimVector d(q.vertex_count, 0);
    for (int v : b.node_vertices(q)) d[v] += m;
    return d;
}

Representation band_to_rep(const Quiver& q, const BandWord& b, int m, const Rat& lambda)
{
    if (m < 1) throw WordError("band multiplicity must be >= 1");
    if (lambda == 0) throw WordError("band parameter must be nonzero");
    Representation R;
    R.q = &q;
    R.dims = band_dim(q, b, m);
    std::vector<int> nodes = b.node_vertices(q);
    int k = int(nodes.size());
    std::vector<int> base(k);
    {
        std::vector<int> seen(q.vertex_count, 0);
        for (int i = 0; i < k; ++i) {
            base[i] = seen[nodes[i]] * m;
            ++seen[nodes[i]];
        }
    }
    R.mats.reserve(q.n_arrows());
    for (int a = 0; a < q.n_arrows(); ++a)
        R.mats.emplace_back(int(R.dims[q.arrow(a).tgt]), int(R.dims[q.arrow(a).src]));
    for (int i = 0; i < k; ++i) {
        const Letter& l = b.letters[i];
        int ni = i, nj = (i + 1) % k;  // letter connects node i to node i+1
        int from = l.inverse ? nj : ni;
        int to = l.inverse ? ni : nj;
        bool jordan = (i == k - 1);  // designated letter carries J_m(lambda)
        Matrix& M = R.mats[l.arrow];
        for (int r = 0; r < m; ++r) {
            if (jordan) {
                M.at(base[to] + r, base[from] + r) = lambda;
                if (r + 1 < m) M.at(base[to] + r, base[from] + r + 1) = 1;
            }
            else {
                M.at(base[to] + r, base[from] + r) = 1;
            }
        }
    }
    return R;
}

}  // namespace grtk
