#pragma once
#include <vector>

#include "grtk/homlin.hpp"
#include "grtk/isoclass.hpp"

namespace grtk {

enum class ARKind { Preprojective, Regular, Preinjective };

struct ARClass {
    ARKind kind = ARKind::Regular;
    long defect = 0;
    DimVector dims;
    bool homogeneous = false;  // regular band family
    int tube_id = -1;          // exceptional-tube coordinates
    int socle_index = -1;
    int quasi_length = 0;
};

/* Stable tube built from string data. quasi_simples are ordered so that
 * tau(quasi_simples[k]) = quasi_simples[(k+1) % rank]. */
struct Tube {
    int id = 0;
    int rank = 0;
    std::vector<StringWord> quasi_simples;
};

struct TubeSystem {
    std::vector<Tube> tubes;  // the (at most two) string tubes, any rank
};

/* <delta, d> under the Euler form; preprojective < 0 < preinjective */
long defect(const Quiver& q, const DimVector& d);

/* dim tau M (direction +1) or dim tau^{-1} M (direction -1); only valid
 * on non-projective (resp. non-injective) classes */
DimVector coxeter(const Quiver& q, const DimVector& d, int direction);

bool is_projective_dim(const Quiver& q, const DimVector& d);
bool is_injective_dim(const Quiver& q, const DimVector& d);

TubeSystem tube_system(const Quiver& q);

ARClass classify(const Quiver& q, const TubeSystem& ts, const IsoClass& M,
                 const MonoEpiOptions& opt = {});

/* X_i in the quasi-chain over a quasi-simple class (string or band m=1) */
IsoClass quasi_chain(const Quiver& q, const IsoClass& X, int i);

ARClass tau_class(const Quiver& q, const TubeSystem& ts, const ARClass& c,
                  int direction = 1);

}  // namespace grtk
