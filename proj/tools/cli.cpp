#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ngspread/graph_io.hpp"
#include "ngspread/graphon.hpp"
#include "ngspread/rng.hpp"
#include "ngspread/spectral.hpp"

namespace ngspread::cli {

namespace {

using nlohmann::json;

constexpr double kValueTol = 1e-9;

int effective_jobs(const Invocation& inv) {
    if (inv.jobs > 0) return inv.jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// 9 significant digits, '.' decimal; magnitudes below 1e-12 (three orders
// under every reporting tolerance) print as 0.
std::string fmt_sig9(double x) {
    if (std::abs(x) < 1e-12) return "0";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

std::string action_name(ToggleAction a) {
    switch (a) {
    case ToggleAction::add: return "add";
    case ToggleAction::remove: return "remove";
    default: return "none";
    }
}

std::vector<std::string> graph6_members(const std::vector<CanonicalForm>& members) {
    std::vector<std::string> out;
    out.reserve(members.size());
    for (const auto& form : members) out.push_back(to_graph6(graph_from_canonical(form)));
    return out;
}

std::vector<CanonicalForm> expected_ng_maximizers(int n) {
    std::set<CanonicalForm> forms;
    for (int omega : optimal_clique(n)) {
        Graph g = complete_split(n, omega);
        forms.insert(canonical_form(g));
        forms.insert(canonical_form(complement(g)));
    }
    return {forms.begin(), forms.end()};
}

std::vector<CanonicalForm> expected_qspread_maximizers(int n) {
    return {canonical_form(pendant_clique(n))};
}

std::vector<CanonicalForm> expected_qspread_minimizers(int n) {
    std::set<CanonicalForm> forms;
    forms.insert(canonical_form(named_graph(GraphKind::path, n)));
    if (n % 2 == 1) forms.insert(canonical_form(named_graph(GraphKind::cycle, n)));
    return {forms.begin(), forms.end()};
}

json report_header(const Invocation& inv, const std::string& command) {
    json j;
    j["command"] = command;
    j["seed"] = inv.seed;
    return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- verify-ng

int exec_verify_ng(const Invocation& inv, std::ostream& out, std::ostream& err) {
    ScanOptions options;
    options.full_scan = inv.full_scan;
    options.jobs = effective_jobs(inv);
    MaximizerSet result = exhaustive_ng(inv.n, options);
    err << "scanned " << result.graphs_scanned << " graphs at n=" << inv.n << "\n";

    double bound = ng_bound(inv.n);
    auto expected = expected_ng_maximizers(inv.n);
    bool value_ok = std::abs(result.best_value - bound) <= kValueTol;
    bool set_ok = result.members == expected;

    json j = report_header(inv, "verify-ng");
    j["n"] = inv.n;
    j["scan"] = inv.full_scan ? "full" : "half";
    j["graphs_scanned"] = result.graphs_scanned;
    j["best_value"] = result.best_value;
    j["bound"] = bound;
    j["maximizers"] = graph6_members(result.members);
    j["expected_maximizers"] = graph6_members(expected);
    j["conjecture_holds"] = value_ok && set_ok;
    emit(out, j);
    return value_ok && set_ok ? 0 : 3;
}

// ----------------------------------------------------------- verify-qspread

int exec_verify_qspread(const Invocation& inv, std::ostream& out, std::ostream& err) {
    QSpreadExtremes result = exhaustive_qspread(inv.n, effective_jobs(inv));
    err << "scanned " << result.maximizers.graphs_scanned << " connected graphs at n=" << inv.n
        << "\n";

    auto expected_max = expected_qspread_maximizers(inv.n);
    auto expected_min = expected_qspread_minimizers(inv.n);
    bool max_ok = result.maximizers.members == expected_max;
    bool min_ok = result.minimizers.members == expected_min;

    json j = report_header(inv, "verify-qspread");
    j["n"] = inv.n;
    j["graphs_scanned"] = result.maximizers.graphs_scanned;
    j["max"] = {{"value", result.maximizers.best_value},
                {"members", graph6_members(result.maximizers.members)},
                {"expected", graph6_members(expected_max)},
                {"matches", max_ok}};
    j["min"] = {{"value", result.minimizers.best_value},
                {"members", graph6_members(result.minimizers.members)},
                {"expected", graph6_members(expected_min)},
                {"matches", min_ok}};
    j["conjecture_holds"] = max_ok && min_ok;
    emit(out, j);
    return max_ok && min_ok ? 0 : 3;
}

// -------------------------------------------------------------- bound-table

int exec_bound_table(const Invocation& inv, std::ostream& out, std::ostream&) {
    struct Row {
        int n, residue, omega_star;
        double bound, p_cs, gap;
    };
    std::vector<Row> rows;
    for (int n = inv.n_min; n <= inv.n_max; ++n) {
        int omega = optimal_clique(n).front();
        double bound = ng_bound(n);
        double p_cs = cs_lambda1(n, omega) + (n - omega - 1);
        rows.push_back(Row{n, n % 3, omega, bound, p_cs, bound - p_cs});
    }
    if (inv.output == OutputFormat::csv) {
        std::ostringstream csv;
        csv << "n,residue,bound,omega_star,p_cs,gap\n";
        for (const Row& r : rows)
            csv << r.n << ',' << r.residue << ',' << fmt_sig9(r.bound) << ',' << r.omega_star
                << ',' << fmt_sig9(r.p_cs) << ',' << fmt_sig9(r.gap) << "\n";
        out << csv.str();
    } else {
        json j = report_header(inv, "bound-table");
        json arr = json::array();
        for (const Row& r : rows)
            arr.push_back({{"n", r.n},
                           {"residue", r.residue},
                           {"bound", r.bound},
                           {"omega_star", r.omega_star},
                           {"p_cs", r.p_cs},
                           {"gap", r.gap}});
        j["rows"] = std::move(arr);
        emit(out, j);
    }
    return 0;
}

// ------------------------------------------------------------- search-local

int exec_search_local(const Invocation& inv, std::ostream& out, std::ostream& err) {
    Rng rng(inv.seed);
    const bool is_ng = inv.mode == Objective::ng;
    const double reference =
        is_ng ? ng_bound(inv.n) : q_spread(pendant_clique(inv.n)).s;

    json traces = json::array();
    int matching = 0;
    int complete = 0;
    double worst_fixpoint = 0.0;
    bool finding = false;

    std::vector<CanonicalForm> conjectured;
    if (inv.n <= kCanonicalMaxVertices)
        conjectured = is_ng ? expected_ng_maximizers(inv.n) : expected_qspread_maximizers(inv.n);

    for (int i = 0; i < inv.starts; ++i) {
        Graph start =
            is_ng ? random_graph(inv.n, rng) : random_connected_graph(inv.n, rng);
        SearchTrace trace = local_search(start, inv.mode, inv.max_steps, inv.seed);
        double value = is_ng ? ng_sum(trace.fixpoint).p : q_spread(trace.fixpoint).s;

        json steps = json::array();
        for (const SearchStep& st : trace.steps)
            steps.push_back({{"action", action_name(st.decision.action)},
                             {"u", st.decision.u},
                             {"v", st.decision.v},
                             {"score", st.decision.score},
                             {"value", st.objective_value}});
        json t;
        t["start"] = to_graph6(trace.start);
        t["fixpoint"] = to_graph6(trace.fixpoint);
        t["value"] = value;
        t["complete"] = trace.complete;
        t["steps"] = std::move(steps);
        if (!conjectured.empty()) {
            bool iso = std::find(conjectured.begin(), conjectured.end(),
                                 canonical_form(trace.fixpoint)) != conjectured.end();
            t["matches_conjectured"] = iso;
            if (iso) ++matching;
        }
        traces.push_back(std::move(t));

        if (trace.complete) ++complete;
        worst_fixpoint = std::max(worst_fixpoint, value);
        if (value > reference + kValueTol) finding = true;
    }
    err << "ran " << inv.starts << " local searches at n=" << inv.n << "\n";

    json j = report_header(inv, "search-local");
    j["mode"] = is_ng ? "ng" : "qspread";
    j["n"] = inv.n;
    j["starts"] = inv.starts;
    j["max_steps"] = inv.max_steps;
    j["complete_traces"] = complete;
    j[is_ng ? "bound" : "conjectured_max"] = reference;
    j["max_fixpoint_value"] = worst_fixpoint;
    j["exceeds_conjectured_value"] = finding;
    if (!conjectured.empty()) {
        j["fixpoints_matching_conjectured"] = matching;
        j["fraction_matching_conjectured"] =
            static_cast<double>(matching) / static_cast<double>(inv.starts);
    }
    j["traces"] = std::move(traces);
    emit(out, j);
    return finding ? 3 : 0;
}

// ------------------------------------------------------------ graphon-check

int exec_graphon_theorem34(const Invocation& inv, std::ostream& out, std::ostream&) {
    StepGraphon w = limit_split_graphon();
    StepGraphon wbar = complement(w);
    GraphonEigen e = max_eigen(w);
    GraphonEigen ebar = max_eigen(wbar);

    const double sqrt2 = std::sqrt(2.0);
    const double sqrt6 = std::sqrt(6.0);
    double max_err = 0.0;
    auto track = [&max_err](double have, double want) {
        max_err = std::max(max_err, std::abs(std::abs(have) - std::abs(want)));
    };
    track(e.mu, 2.0 / 3.0);
    track(ebar.mu, 2.0 / 3.0);
    track(e.f[0], sqrt2);
    track(e.f[1], sqrt2 / 2.0);
    track(ebar.f[0], 0.0);
    track(ebar.f[1], sqrt6 / 2.0);
    bool pass = max_err <= 1e-12;

    json j = report_header(inv, "graphon-check");
    j["check"] = "theorem34";
    j["mu"] = e.mu;
    j["mu_bar"] = ebar.mu;
    j["f"] = e.f;
    j["g"] = ebar.f;
    j["expected"] = {{"mu", 2.0 / 3.0},
                     {"f", {sqrt2, sqrt2 / 2.0}},
                     {"g", {0.0, sqrt6 / 2.0}}};
    j["max_error"] = max_err;
    j["pass"] = pass;
    emit(out, j);
    return pass ? 0 : 1;
}

int exec_graphon_relation(const Invocation& inv, std::ostream& out, std::ostream&) {
    Rng rng(inv.seed);
    struct Row {
        double mu, n_mu, lambda1, gap;
    };
    std::vector<Row> rows;
    bool ok = true;
    for (int i = 0; i < inv.samples; ++i) {
        Graph g = random_graph(inv.n, rng);
        double mu = max_eigen(from_graph(g)).mu;
        double lambda1 = principal_pair(adjacency_matrix(g), true).value;
        double gap = std::abs(lambda1 - inv.n * mu);
        ok = ok && gap <= kValueTol;
        rows.push_back(Row{mu, inv.n * mu, lambda1, gap});
    }
    if (inv.output == OutputFormat::csv) {
        std::ostringstream csv;
        csv << "n,mu,n_mu,lambda1,gap\n";
        for (const Row& r : rows)
            csv << inv.n << ',' << fmt_sig9(r.mu) << ',' << fmt_sig9(r.n_mu) << ','
                << fmt_sig9(r.lambda1) << ',' << fmt_sig9(r.gap) << "\n";
        out << csv.str();
    } else {
        json j = report_header(inv, "graphon-check");
        j["check"] = "relation";
        j["n"] = inv.n;
        j["samples"] = inv.samples;
        json arr = json::array();
        for (const Row& r : rows)
            arr.push_back({{"mu", r.mu}, {"n_mu", r.n_mu}, {"lambda1", r.lambda1}, {"gap", r.gap}});
        j["rows"] = std::move(arr);
        j["all_within_tolerance"] = ok;
        emit(out, j);
    }
    return ok ? 0 : 1;
}

int exec_graphon_cutnorm(const Invocation& inv, std::ostream& out, std::ostream&) {
    StepGraphon u = load_graphon_file(inv.file_a);
    StepGraphon w = load_graphon_file(inv.file_b);
    CutNormResult norm = cut_norm(common_refinement_diff(u, w), effective_jobs(inv));
    DeltaUpperResult delta = delta_cut_upper(u, w);

    json j = report_header(inv, "graphon-check");
    j["check"] = "cutnorm";
    j["cut_norm"] = norm.value;
    j["exact"] = norm.exact;
    j["delta_upper"] = delta.value;
    switch (delta.alignment) {
    case Alignment::permutation: j["alignment"] = "permutation"; break;
    case Alignment::permutation_capped: j["alignment"] = "permutation_capped"; break;
    case Alignment::identity_fallback: j["alignment"] = "identity_fallback"; break;
    }
    emit(out, j);
    return 0;
}

// --------------------------------------------------------------------- diag

int exec_diag(const Invocation& inv, std::ostream& out, std::ostream&) {
    Graph g = load_graph_file(inv.graph_file);
    NGReport ng = ng_sum(g);
    double deviation = ng_deviation(g);
    QSpreadReport qs = q_spread(g);
    DiagnosticsReport diag = asymptotic_diagnostics(g, inv.epsilon);
    Spectrum spec_a = full_spectrum(adjacency_matrix(g));
    Spectrum spec_q = full_spectrum(signless_laplacian(g));

    double ng_x_max = *std::max_element(ng.x.begin(), ng.x.end());
    double sqrt_n = std::sqrt(static_cast<double>(g.n()));

    json j = report_header(inv, "diag");
    j["n"] = g.n();
    j["graph6"] = to_graph6(g);
    j["epsilon"] = inv.epsilon;
    j["ng"] = {{"lambda1", ng.lambda1},
               {"lambda1_bar", ng.lambda1_bar},
               {"p", ng.p},
               {"x", ng.x},
               {"x_bar", ng.x_bar},
               {"deviation", deviation},
               {"x_max_scaled", ng_x_max * sqrt_n}};
    j["qspread"] = {{"q1", qs.q1}, {"qn", qs.qn}, {"s", qs.s}, {"x", qs.x}, {"z", qs.z}};
    j["spectrum"] = {{"adjacency", spec_a.values}, {"signless_laplacian", spec_q.values}};
    j["partition"] = {{"S", diag.partition.z_small},
                      {"T", diag.partition.x_small},
                      {"L", diag.partition.z_large},
                      {"x_max_scaled", diag.partition.x_max_scaled},
                      {"z_max_scaled", diag.partition.z_max_scaled}};
    j["flags"] = {{"q1_above_2n_minus_5", diag.flags.q1_above_2n_minus_5},
                  {"qn_below_3", diag.flags.qn_below_3},
                  {"size_above_threshold", diag.flags.size_above_threshold},
                  {"x_max_below_threshold", diag.flags.x_max_below_threshold},
                  {"x_small_below_8", diag.flags.x_small_below_8}};
    emit(out, j);
    return 0;
}

} // namespace

Invocation parse_invocation(const std::vector<std::string>& args) {
    Invocation inv;
    CLI::App app{"spectral extremal graph toolkit"};
    app.require_subcommand(1);

    std::string output = "json";
    std::string mode = "ng";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--output", output, "report format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--seed", inv.seed, "random seed, echoed into the report");
        cmd->add_option("--jobs", inv.jobs, "worker threads (0 = hardware)")
            ->check(CLI::Range(0, 64));
    };

    auto* vng = app.add_subcommand("verify-ng",
                                   "exhaustively verify the spectral radius sum maximum");
    vng->add_option("--n", inv.n, "vertex count")->required()->check(CLI::Range(3, 8));
    vng->add_flag("--full-scan", inv.full_scan, "scan all edge masks, not just half");
    vng->add_flag("--allow-slow", inv.allow_slow, "permit the n=8 scan (2^28 eigensolves)");
    add_common(vng);

    auto* vqs = app.add_subcommand("verify-qspread",
                                   "exhaustively verify the signless-Laplacian spread extremes");
    // the pendant-clique claim is stated for n >= 6; below that the extremes tie
    vqs->add_option("--n", inv.n, "vertex count")->required()->check(CLI::Range(6, 8));
    vqs->add_flag("--allow-slow", inv.allow_slow, "permit the n=8 scan");
    add_common(vqs);

    auto* bt = app.add_subcommand("bound-table",
                                  "closed-form bound vs extremal split-graph value per order");
    bt->add_option("--n-min", inv.n_min, "first order")->required()->check(CLI::Range(3, 4096));
    bt->add_option("--n-max", inv.n_max, "last order")->required()->check(CLI::Range(3, 4096));
    add_common(bt);

    auto* sl = app.add_subcommand("search-local", "eigenvector-guided hill climbing");
    sl->add_option("--mode", mode, "objective")->required()->check(CLI::IsMember({"ng", "qspread"}));
    sl->add_option("--n", inv.n, "vertex count")->required()->check(CLI::Range(3, 64));
    sl->add_option("--starts", inv.starts, "number of random starts")->check(CLI::Range(1, 100000));
    sl->add_option("--max-steps", inv.max_steps, "step budget per start")
        ->check(CLI::Range(1, 1000000));
    add_common(sl);

    auto* gc = app.add_subcommand("graphon-check", "step-graphon spectral and cut-norm checks");
    gc->require_subcommand(1);
    auto* t34 = gc->add_subcommand("theorem34",
                                   "two-block limit graphon eigenvalue and eigenfunction values");
    add_common(t34);
    auto* rel = gc->add_subcommand("relation", "lambda1 = n * mu on random graphs");
    rel->add_option("--n", inv.n, "vertex count")->required()->check(CLI::Range(1, 64));
    rel->add_option("--samples", inv.samples, "number of random graphs")
        ->check(CLI::Range(1, 100000));
    add_common(rel);
    auto* cut = gc->add_subcommand("cutnorm", "cut norm of the difference of two graphon files");
    cut->add_option("file_a", inv.file_a, "first graphon json")->required();
    cut->add_option("file_b", inv.file_b, "second graphon json")->required();
    add_common(cut);

    auto* dg = app.add_subcommand("diag", "spectral diagnostics of one graph");
    dg->add_option("--graph", inv.graph_file, "graph file (graph6 or json)")->required();
    dg->add_option("--epsilon", inv.epsilon, "threshold for the small-|z| class")
        ->check(CLI::PositiveNumber);
    add_common(dg);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (vng->parsed()) inv.command = Command::verify_ng;
    if (vqs->parsed()) inv.command = Command::verify_qspread;
    if (bt->parsed()) inv.command = Command::bound_table;
    if (sl->parsed()) inv.command = Command::search_local;
    if (gc->parsed()) {
        inv.command = Command::graphon_check;
        if (t34->parsed()) inv.graphon_kind = GraphonCheckKind::theorem34;
        if (rel->parsed()) inv.graphon_kind = GraphonCheckKind::relation;
        if (cut->parsed()) inv.graphon_kind = GraphonCheckKind::cutnorm;
    }
    if (dg->parsed()) inv.command = Command::diag;

    inv.output = output == "csv" ? OutputFormat::csv : OutputFormat::json;
    inv.mode = mode == "qspread" ? Objective::qspread : Objective::ng;

    if ((inv.command == Command::verify_ng || inv.command == Command::verify_qspread) &&
        inv.n == 8 && !inv.allow_slow)
        throw UsageError("--n: 8 exceeds the default enumeration cap; pass --allow-slow "
                         "(expect 2^28 eigensolves, use --jobs)");
    if (inv.command == Command::bound_table && inv.n_min > inv.n_max)
        throw UsageError("--n-min: must not exceed --n-max");

    const bool csv_allowed =
        inv.command == Command::bound_table ||
        (inv.command == Command::graphon_check && inv.graphon_kind == GraphonCheckKind::relation);
    if (inv.output == OutputFormat::csv && !csv_allowed)
        throw UsageError("--output: csv is only available for bound-table and "
                         "graphon-check relation");
    return inv;
}

int execute(const Invocation& inv, std::ostream& out, std::ostream& err) {
    switch (inv.command) {
    case Command::verify_ng: return exec_verify_ng(inv, out, err);
    case Command::verify_qspread: return exec_verify_qspread(inv, out, err);
    case Command::bound_table: return exec_bound_table(inv, out, err);
    case Command::search_local: return exec_search_local(inv, out, err);
    case Command::graphon_check:
        switch (inv.graphon_kind) {
        case GraphonCheckKind::theorem34: return exec_graphon_theorem34(inv, out, err);
        case GraphonCheckKind::relation: return exec_graphon_relation(inv, out, err);
        case GraphonCheckKind::cutnorm: return exec_graphon_cutnorm(inv, out, err);
        }
        return 1;
    case Command::diag: return exec_diag(inv, out, err);
    }
    return 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Invocation inv;
    try {
        inv = parse_invocation(args);
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    try {
        return execute(inv, out, err);
    } catch (const numeric_failure& e) {
        err << "numeric failure: " << e.what() << "\n";
        return 1;
    } catch (const invalid_parameter& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const size_limit_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace ngspread::cli
