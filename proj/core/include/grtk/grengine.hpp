#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grtk/artame.hpp"
#include "grtk/homlin.hpp"
#include "grtk/isoclass.hpp"
#include "grtk/measure.hpp"

namespace grtk {

struct GRSub {
    IsoClass cls;
    std::vector<StringWord> quotient_words;  // fast path only
    bool quotient_uniserial = false;
};

struct GRResult {
    GRMeasure measure;
    std::vector<GRSub> subs;
    int gr_count = 0;
    int gr_count_dim = 0;  // counted by distinct dimension vectors
    std::vector<IsoClass> filtration;  // N_1 < ... < N_s < M
};

/* Shared caches for all measure computations over one quiver. */
struct Context {
    const Quiver* q = nullptr;
    MonoEpiOptions opt;
    Rat lambda = 1;  // parameter of the representative band family

    explicit Context(const Quiver& quiver) : q(&quiver) {}

    const TubeSystem& tubes();
    const ARClass& ar(const IsoClass& c);
    bool exists_mono(const IsoClass& X, const IsoClass& Y);
    bool exists_epi(const IsoClass& X, const IsoClass& Y);

    std::map<std::string, GRMeasure> measure_memo;
    std::map<std::string, GRMeasure> fast_memo;
    std::map<std::string, ARClass> class_cache;
    std::map<std::pair<std::string, std::string>, bool> mono_cache;
    std::map<std::pair<std::string, std::string>, bool> epi_cache;
    std::map<int, std::vector<IsoClass>> enum_cache;
    std::map<std::string, GRResult> sub_cache;

private:
    std::optional<TubeSystem> ts_;
};

std::vector<IsoClass> enumerate_indecomposables(Context& ctx, int max_len);

GRMeasure gr_measure(Context& ctx, const IsoClass& M);
/* substring-lattice recursion only; sound for band-free strings */
GRMeasure gr_measure_fast(Context& ctx, const StringWord& C);

GRResult gr_submodules(Context& ctx, const IsoClass& M);

bool is_gr_inclusion(Context& ctx, const IsoClass& N, const IsoClass& M);

struct PartitionRow {
    GRMeasure mu;
    std::string label;  // take-off | central | landing | undetermined-at-bound
    bool certified = false;
    std::vector<std::string> witnesses;
    std::vector<std::string> kinds;
};

struct PartitionReport {
    int bound = 0;
    std::vector<PartitionRow> rows;  // ascending by measure
    std::vector<GRMeasure> takeoff_prefix;
    std::vector<GRMeasure> regular_prefix;
};

PartitionReport partition_prefix(Context& ctx, int max_len);

struct SuccessorResult {
    GRMeasure measure;
    std::string status;  // certified | bounded
    std::string witness;
};

SuccessorResult direct_successor(Context& ctx, const GRMeasure& I, int max_len);

struct NoPredecessorEntry {
    GRMeasure mu;
    std::string status;  // certified | bounded
    std::string reason;
};

std::vector<NoPredecessorEntry> no_predecessor_report(Context& ctx, int max_len);

struct MuIJRow {
    int i = 0;
    int a = 0;
    GRMeasure mu;
    std::vector<std::string> realizers;
};

struct MuIJTable {
    std::vector<MuIJRow> rows;
    bool a_below_next = true;       // a_{i,j} < |X_{i+1}|
    bool cross_ordered = true;      // mu_{i,j} > mu_{l,h} for i < l
    bool all_preinjective = true;   // realizers in I
    bool predecessor_chain = true;  // adjacent rows have no measure between
};

MuIJTable mu_ij_table(Context& ctx, const IsoClass& X, int i_max, int max_len);

struct PropertyReport {
    std::string id;
    bool pass = false;
    long checked = 0;
    std::vector<std::string> failures;
    std::string details;
};

PropertyReport verify_property(Context& ctx, const std::string& id, int bound);
std::vector<std::string> registered_properties();

}  // namespace grtk
