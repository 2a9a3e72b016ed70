#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "grtk/grengine.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace grtk;

namespace {

struct RunConfig {
    std::string cycle;
    std::string quiver_path;
    int max_len = 12;
    std::string lambda_str = "1";
    unsigned long long seed = 0;
    bool no_random_fast_path = false;
    std::string out_dir;
    std::string format = "json";
};

Rat parse_rat(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

Quiver load_quiver(const RunConfig& cfg)
{
    if (!cfg.cycle.empty()) return build_cycle_quiver(cfg.cycle);
    if (cfg.quiver_path.empty())
        throw std::invalid_argument("provide --cycle or --quiver");
    std::ifstream in(cfg.quiver_path);
    if (!in) throw std::invalid_argument("cannot read " + cfg.quiver_path);
    json doc = json::parse(in);
    if (doc.contains("cycle")) return build_cycle_quiver(doc["cycle"].get<std::string>());
    if (doc.contains("line")) return build_line_quiver(doc["line"].get<std::string>());
    Quiver q;
    q.vertex_count = doc.at("vertices").get<int>();
    for (const auto& a : doc.at("arrows"))
        q.arrows.push_back({a.at(0).get<std::string>(), a.at(1).get<int>(), a.at(2).get<int>()});
    if (doc.contains("relations"))
        for (const auto& rel : doc["relations"]) {
            std::vector<int> path;
            for (const auto& name : rel) path.push_back(q.arrow_by_name(name.get<std::string>()));
            q.relations.push_back(std::move(path));
        }
    q.validate();
    return q;
}

Context make_context(const Quiver& q, const RunConfig& cfg)
{
    Context ctx(q);
    ctx.lambda = parse_rat(cfg.lambda_str);
    ctx.opt.seed = cfg.seed;
    ctx.opt.random_fast_path = !cfg.no_random_fast_path;
    return ctx;
}

StringWord parse_string_word(const Quiver& q, const std::string& text)
{
    std::istringstream in(text);
    std::vector<Letter> rev;
    std::string tok;
    while (in >> tok) {
        if (tok.size() > 1 && tok[0] == 'e' && isdigit(tok[1]) && rev.empty()) {
            std::string rest;
            if (in >> rest) throw std::invalid_argument("trivial word takes one token");
            return trivial_string(q, std::stoi(tok.substr(1)));
        }
        bool inv = tok[0] == '-';
        rev.push_back({q.arrow_by_name(inv ? tok.substr(1) : tok), inv});
    }
    if (rev.empty()) throw std::invalid_argument("empty string word");
    // tokens arrive as c_n .. c_1
    std::reverse(rev.begin(), rev.end());
    return validate_string(q, rev);
}

GRMeasure parse_measure(const std::string& text)
{
    std::vector<int> e;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) e.push_back(std::stoi(item));
    return GRMeasure(std::move(e));
}

json measure_json(const GRMeasure& m) { return json(m.elems); }

json config_json(const RunConfig& cfg)
{
    json j;
    if (!cfg.cycle.empty()) j["cycle"] = cfg.cycle;
    if (!cfg.quiver_path.empty()) j["quiver"] = cfg.quiver_path;
    j["max_len"] = cfg.max_len;
    j["lambda"] = cfg.lambda_str;
    j["seed"] = cfg.seed;
    j["random_fast_path"] = !cfg.no_random_fast_path;
    return j;
}

void emit(const RunConfig& cfg, const std::string& name, const json& doc,
          const std::string& csv)
{
    const std::string& body = cfg.format == "csv" ? csv : doc.dump(2) + "\n";
    if (cfg.out_dir.empty()) {
        std::cout << body;
        return;
    }
    std::filesystem::create_directories(cfg.out_dir);
    std::string path = cfg.out_dir + "/" + name + "." + cfg.format;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << body;
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += '"';
        r += c;
    }
    return r + "\"";
}

int cmd_measure(const RunConfig& cfg, const std::string& word, int band_m)
{
    Quiver q = load_quiver(cfg);
    Context ctx = make_context(q, cfg);
    IsoClass M;
    if (band_m > 0) {
        auto bws = band_words(q);
        if (bws.empty()) throw std::invalid_argument("quiver has no band");
        M = make_band_class(q, bws.front(), band_m, ctx.lambda);
    }
    else {
        M = make_string_class(q, parse_string_word(q, word));
    }
    json doc;
    doc["config"] = config_json(cfg);
    doc["class"] = class_label(q, M);
    doc["length"] = M.length;
    GRMeasure mu = gr_measure(ctx, M);
    doc["measure"] = measure_json(mu);
    std::string csv = "field,value\nclass," + csv_escape(class_label(q, M)) +
                      "\nmeasure," + csv_escape(mu.str()) + "\n";
    if (M.length > 1) {
        GRResult R = gr_submodules(ctx, M);
        doc["gr_count"] = R.gr_count;
        doc["gr_count_dim"] = R.gr_count_dim;
        json subs = json::array();
        for (const auto& g : R.subs) subs.push_back(class_label(q, g.cls));
        doc["gr_submodules"] = subs;
        json filt = json::array();
        for (const auto& c : R.filtration) filt.push_back(class_label(q, c));
        doc["filtration"] = filt;
        csv += "gr_count," + std::to_string(R.gr_count) + "\n";
    }
    emit(cfg, "measure", doc, csv);
    return 0;
}

int cmd_enumerate(const RunConfig& cfg)
{
    Quiver q = load_quiver(cfg);
    Context ctx = make_context(q, cfg);
    json rows = json::array();
    std::string csv = "class,length,kind,measure\n";
    for (const auto& c : enumerate_indecomposables(ctx, cfg.max_len)) {
        GRMeasure mu = gr_measure(ctx, c);
        std::string kind = q.is_tilde_a()
                               ? (ctx.ar(c).kind == ARKind::Preprojective ? "preprojective"
                                  : ctx.ar(c).kind == ARKind::Regular     ? "regular"
                                                                          : "preinjective")
                               : "finite";
        json row;
        row["class"] = class_label(q, c);
        row["length"] = c.length;
        row["kind"] = kind;
        row["measure"] = measure_json(mu);
        rows.push_back(row);
        csv += csv_escape(class_label(q, c)) + "," + std::to_string(c.length) + "," +
               kind + "," + csv_escape(mu.str()) + "\n";
    }
    json doc;
    doc["config"] = config_json(cfg);
    doc["bound"] = cfg.max_len;
    doc["classes"] = rows;
    emit(cfg, "enumerate", doc, csv);
    return 0;
}

int cmd_partition(const RunConfig& cfg)
{
    Quiver q = load_quiver(cfg);
    Context ctx = make_context(q, cfg);
    PartitionReport rep = partition_prefix(ctx, cfg.max_len);
    json doc;
    doc["config"] = config_json(cfg);
    doc["bound"] = rep.bound;
    json rows = json::array();
    std::string csv = "measure,label,certified,kinds,witnesses\n";
    for (const auto& r : rep.rows) {
        json row;
        row["measure"] = measure_json(r.mu);
        row["label"] = r.label;
        row["certified"] = r.certified;
        row["kinds"] = r.kinds;
        row["witnesses"] = r.witnesses;
        rows.push_back(row);
        std::string kinds;
        for (const auto& k : r.kinds) kinds += (kinds.empty() ? "" : ";") + k;
        csv += csv_escape(r.mu.str()) + "," + r.label + "," +
               (r.certified ? "certified" : "bounded") + "," + csv_escape(kinds) + "," +
               std::to_string(r.witnesses.size()) + "\n";
    }
    doc["rows"] = rows;
    json tk = json::array(), rg = json::array();
    for (const auto& m : rep.takeoff_prefix) tk.push_back(measure_json(m));
    for (const auto& m : rep.regular_prefix) rg.push_back(measure_json(m));
    doc["takeoff_prefix"] = tk;
    doc["regular_prefix"] = rg;
    emit(cfg, "partition", doc, csv);
    return 0;
}

int cmd_successors(const RunConfig& cfg, const std::string& from, int steps)
{
    Quiver q = load_quiver(cfg);
    Context ctx = make_context(q, cfg);
    GRMeasure cur = parse_measure(from);
    json doc;
    doc["config"] = config_json(cfg);
    doc["bound"] = cfg.max_len;
    doc["from"] = measure_json(cur);
    json rows = json::array();
    std::string csv = "step,measure,status,witness\n";
    for (int s = 1; s <= steps; ++s) {
        SuccessorResult r = direct_successor(ctx, cur, cfg.max_len);
        json row;
        row["step"] = s;
        row["measure"] = measure_json(r.measure);
        row["status"] = r.status;
        row["witness"] = r.witness;
        rows.push_back(row);
        csv += std::to_string(s) + "," + csv_escape(r.measure.str()) + "," + r.status +
               "," + csv_escape(r.witness) + "\n";
        if (r.status == "none-at-bound") break;
        cur = r.measure;
    }
    doc["successors"] = rows;
    emit(cfg, "successors", doc, csv);
    return 0;
}

int cmd_predecessors(const RunConfig& cfg)
{
    Quiver q = load_quiver(cfg);
    Context ctx = make_context(q, cfg);
    json doc;
    doc["config"] = config_json(cfg);
    doc["bound"] = cfg.max_len;
    json rows = json::array();
    std::string csv = "measure,status,reason\n";
    for (const auto& e : no_predecessor_report(ctx, cfg.max_len)) {
        json row;
        row["measure"] = measure_json(e.mu);
        row["status"] = e.status;
        row["reason"] = e.reason;
        rows.push_back(row);
        csv += csv_escape(e.mu.str()) + "," + e.status + "," + csv_escape(e.reason) + "\n";
    }
    doc["no_predecessor"] = rows;
    // predecessor ladders over each chain dominating the homogeneous measure
    auto mh1 = gr_measure(ctx, make_band_class(q, band_words(q).front(), 1, ctx.lambda));
    json tables = json::array();
    for (const Tube& t : ctx.tubes().tubes) {
        for (const auto& qs : t.quasi_simples) {
            IsoClass X = make_string_class(q, qs);
            IsoClass xr = quasi_chain(q, X, t.rank);
            if (measure_less(gr_measure(ctx, xr), mh1)) continue;
            MuIJTable T = mu_ij_table(ctx, X, 2 * t.rank + 2, cfg.max_len);
            json tj;
            tj["quasi_simple"] = class_label(q, X);
            tj["rank"] = t.rank;
            tj["a_below_next"] = T.a_below_next;
            tj["cross_ordered"] = T.cross_ordered;
            tj["all_preinjective"] = T.all_preinjective;
            tj["predecessor_chain"] = T.predecessor_chain;
            json trows = json::array();
            for (const auto& r : T.rows) {
                json row;
                row["i"] = r.i;
                row["a"] = r.a;
                row["measure"] = measure_json(r.mu);
                row["realizers"] = r.realizers;
                trows.push_back(row);
            }
            tj["rows"] = trows;
            tables.push_back(tj);
        }
    }
    doc["mu_ij_tables"] = tables;
    emit(cfg, "predecessors", doc, csv);
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::vector<std::string> ids)
{
    Quiver q = load_quiver(cfg);
    Context ctx = make_context(q, cfg);
    if (ids.empty() || (ids.size() == 1 && ids.front() == "all"))
        ids = registered_properties();
    json doc;
    doc["config"] = config_json(cfg);
    doc["bound"] = cfg.max_len;
    json rows = json::array();
    std::string csv = "id,pass,checked,failures,details\n";
    bool all_pass = true;
    for (const auto& id : ids) {
        PropertyReport rep = verify_property(ctx, id, cfg.max_len);
        all_pass = all_pass && rep.pass;
        json row;
        row["id"] = rep.id;
        row["pass"] = rep.pass;
        row["checked"] = rep.checked;
        row["failures"] = rep.failures;
        row["details"] = rep.details;
        rows.push_back(row);
        csv += rep.id + "," + (rep.pass ? "pass" : "fail") + "," +
               std::to_string(rep.checked) + "," + std::to_string(rep.failures.size()) +
               "," + csv_escape(rep.details) + "\n";
    }
    doc["properties"] = rows;
    doc["pass"] = all_pass;
    emit(cfg, "verify", doc, csv);
    return all_pass ? 0 : 1;
}

int cmd_paper_examples(const RunConfig& cfg)
{
    json doc;
    doc["config"] = config_json(cfg);
    json checks = json::array();
    bool all = true;
    auto record = [&](const std::string& name, bool ok, const std::string& got) {
        json c;
        c["name"] = name;
        c["pass"] = ok;
        c["value"] = got;
        checks.push_back(c);
        all = all && ok;
    };

    {  // cycle with three forward and two backward edges
        Quiver q = build_cycle_quiver("+++--");
        Context ctx(q);
        GRMeasure h1 = gr_measure(ctx, make_band_class(q, band_words(q).front(), 1, 1));
        record("h1_measure", h1 == GRMeasure({1, 2, 3, 4, 5}), h1.str());
        for (const Tube& t : ctx.tubes().tubes)
            for (const auto& qs : t.quasi_simples) {
                if (qs.trivial()) continue;
                IsoClass X = make_string_class(q, qs);
                GRMeasure mx = gr_measure(ctx, X);
                GRMeasure expect =
                    t.rank == 2 ? GRMeasure({1, 2, 3, 4}) : GRMeasure({1, 2, 3});
                record("path_quasi_simple_rank" + std::to_string(t.rank),
                       mx == expect, mx.str());
                GRMeasure mr = gr_measure(ctx, quasi_chain(q, X, t.rank));
                record("chain_meets_h1_rank" + std::to_string(t.rank), mr == h1,
                       mr.str());
            }
    }
    for (int n : {3, 5}) {  // alternating orientation
        std::string signs;
        for (int i = 0; i <= n; ++i) signs += (i % 2 == 0) ? '+' : '-';
        Quiver q = build_cycle_quiver(signs);
        Context ctx(q);
        IsoClass h1 = make_band_class(q, band_words(q).front(), 1, 1);
        GRMeasure mu = gr_measure(ctx, h1);
        std::vector<int> want;
        for (int k = 1; k <= n; k += 2) want.push_back(k);
        want.push_back(n + 1);
        record("sink_source_h1_n" + std::to_string(n), mu == GRMeasure(want), mu.str());
        GRResult R = gr_submodules(ctx, h1);
        bool ok = R.gr_count == (n + 1) / 2;
        for (const auto& g : R.subs) {
            if (g.cls.length != n) ok = false;
            if (ctx.ar(g.cls).kind != ARKind::Preprojective) ok = false;
        }
        record("sink_source_gr_h1_n" + std::to_string(n), ok,
               std::to_string(R.gr_count));
    }
    doc["checks"] = checks;
    doc["pass"] = all;
    std::string csv = "name,pass,value\n";
    for (const auto& c : checks)
        csv += c["name"].get<std::string>() + "," +
               (c["pass"].get<bool>() ? "pass" : "fail") + "," +
               csv_escape(c["value"].get<std::string>()) + "\n";
    emit(cfg, "paper-examples", doc, csv);
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Gabriel-Roiter measure toolkit for string algebras"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--cycle", cfg.cycle, "cycle orientation sign word, e.g. \"++-\"");
        sub->add_option("--quiver", cfg.quiver_path, "quiver description file (JSON)");
        sub->add_option("--max-len", cfg.max_len, "length bound for enumeration");
        sub->add_option("--lambda", cfg.lambda_str, "band parameter (rational)");
        sub->add_option("--seed", cfg.seed, "seed for the randomized rank check");
        sub->add_flag("--no-random-fast-path", cfg.no_random_fast_path,
                      "always use the symbolic rank computation");
        sub->add_option("--out", cfg.out_dir, "output directory (default: stdout)");
        sub->add_option("--format", cfg.format, "json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    std::string word, from_measure;
    int band_m = 0, steps = 1;
    std::vector<std::string> ids;

    CLI::App* measure = app.add_subcommand("measure", "GR measure of one module");
    add_common(measure);
    measure->add_option("--string", word, "string word, e.g. \"a2 -b1\" or \"e0\"");
    measure->add_option("--band", band_m, "band multiplicity, e.g. --band 1");

    CLI::App* enumerate = app.add_subcommand("enumerate", "indecomposables up to a bound");
    add_common(enumerate);

    CLI::App* partition = app.add_subcommand("partition", "take-off/central/landing report");
    add_common(partition);

    CLI::App* successors = app.add_subcommand("successors", "direct successor chain");
    add_common(successors);
    successors->add_option("--measure", from_measure, "starting measure, e.g. \"1,2,3\"")
        ->required();
    successors->add_option("--steps", steps, "number of successor steps");

    CLI::App* predecessors =
        app.add_subcommand("predecessors", "no-predecessor report and mu_ij ladders");
    add_common(predecessors);

    CLI::App* verify = app.add_subcommand("verify", "run registered property checks");
    add_common(verify);
    verify->add_option("ids", ids, "property ids (default: all)");

    CLI::App* paper = app.add_subcommand("paper-examples", "reproduce worked examples");
    add_common(paper);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (measure->parsed()) {
            if (word.empty() == (band_m == 0))
                throw std::invalid_argument("provide exactly one of --string / --band");
            return cmd_measure(cfg, word, band_m);
        }
        if (enumerate->parsed()) return cmd_enumerate(cfg);
        if (partition->parsed()) return cmd_partition(cfg);
        if (successors->parsed()) return cmd_successors(cfg, from_measure, steps);
        if (predecessors->parsed()) return cmd_predecessors(cfg);
        if (verify->parsed()) return cmd_verify(cfg, ids);
        if (paper->parsed()) return cmd_paper_examples(cfg);
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
