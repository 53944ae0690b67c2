// Command-line driver: generators, separator and minor computations, sweeps
// and the verification suite. Exit status: 0 ok, 1 usage or input error,
// 2 a check failed.

#include "sepminor/bounds.hpp"
#include "sepminor/experiment.hpp"
#include "sepminor/generators.hpp"
#include "sepminor/intmath.hpp"
#include "sepminor/minors.hpp"
#include "sepminor/separators.hpp"
#include "sepminor/treewidth.hpp"
#include "sepminor/verify.hpp"
#include "sepminor/witness.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace sepminor;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::uint64_t seed = 42;
    std::string format = "json";
    std::string out;
    int budget = kDefaultExactBudget;
};

void add_common(CLI::App* cmd, Common& c, bool with_budget = false) {
    cmd->add_option("--seed", c.seed, "master seed");
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", c.out, "output path (default stdout)");
    if (with_budget) cmd->add_option("--budget", c.budget, "vertex limit for exact searches");
}

/// Writes to --out when given, else stdout.
void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw UsageError("cannot write " + c.out);
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

/// "a..b", "a..b:step" or a comma list.
std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        int step = 1;
        std::string hi = text.substr(dots + 2);
        if (const auto colon = hi.find(':'); colon != std::string::npos) {
            step = std::stoi(hi.substr(colon + 1));
            hi = hi.substr(0, colon);
        }
        if (step < 1) throw UsageError("size step must be positive");
        for (int v = std::stoi(text.substr(0, dots)); v <= std::stoi(hi); v += step) out.push_back(v);
        return out;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

json certificate_json(const Graph& g, const SeparatorCertificate& cert) {
    json j;
    j["separator"] = std::vector<Vertex>(cert.separator.members().begin(), cert.separator.members().end());
    j["n"] = cert.n;
    j["largest_component"] = cert.largest_component;
    j["bound_checked"] = revalidate(g, cert);
    return j;
}

struct FamilyArgs {
    std::string family = "path";
    int size = 1;
    int d = 2;
    std::string eps = "1/2";
    int degree = 3;

    void attach(CLI::App* cmd, bool size_required) {
        cmd->add_option("--family", family, "family kind")->required();
        auto* opt = cmd->add_option("--size", size, "family size parameter");
        if (size_required) opt->required();
        cmd->add_option("--d", d, "king-grid dimension");
        cmd->add_option("--eps", eps, "separator exponent, e.g. 1/2");
        cmd->add_option("--degree", degree, "random-regular degree");
    }
    FamilySpec spec(std::uint64_t seed) const {
        FamilySpec s;
        s.kind = parse_family_kind(family);
        s.size = size;
        s.d = d;
        s.eps = Rational::parse(eps);
        s.degree = degree;
        s.seed = seed;
        return s;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"separator / shallow-minor experiment toolkit"};
    app.require_subcommand(1);

    Common common;
    FamilyArgs fam;
    std::string fam_host_out;
    std::string graph_path, witness_path, method, alpha = "1/2", sizes_text, quantity, witness_out;
    int l = 1, h = 3, r = 1, samples = 64, restarts = 4;
    bool exact = false, quick = false, full_level = false, inject = false;

    auto* gen = app.add_subcommand("gen", "generate a family member as an edge list");
    fam.attach(gen, true);
    add_common(gen, common, true);

    auto* sep = app.add_subcommand("sep", "balanced separator with certificate");
    sep->add_option("graph", graph_path)->required();
    auto* sep_method = sep->add_option("--method", method, "exact | bfs-layer | recursive-bisection")
                           ->check(CLI::IsMember({"exact", "bfs-layer", "recursive-bisection"}));
    bool sep_exact = false, sep_heuristic = false;
    sep->add_flag("--exact", sep_exact, "same as --method exact")->excludes(sep_method);
    sep->add_flag("--heuristic", sep_heuristic, "same as --method bfs-layer")->excludes(sep_method);
    add_common(sep, common, true);

    auto* prs = app.add_subcommand("prs", "separator or clique shallow minor");
    prs->add_option("graph", graph_path)->required();
    std::int64_t prs_r = 0;
    std::string prs_eps;
    prs->set_help_flag("--help", "Print this help message and exit");
    auto* opt_l = prs->add_option("--l", l, "trade-off parameter");
    auto* opt_h = prs->add_option("--h", h, "clique size sought");
    auto* opt_r = prs->add_option("--r", prs_r, "derive l and h from depth r and --eps");
    prs->add_option("--eps", prs_eps, "separator exponent used with --r")->needs(opt_r);
    opt_r->excludes(opt_l)->excludes(opt_h);
    add_common(prs, common);

    auto* expand = app.add_subcommand("expand", "alpha-expansion check or sampled estimate");
    expand->add_option("graph", graph_path)->required();
    expand->add_option("--alpha", alpha);
    expand->add_flag("--exact", exact, "exhaustive check instead of sampling");
    expand->add_option("--samples", samples);
    add_common(expand, common, true);

    auto* nabla = app.add_subcommand("nabla", "greedy lower bound on the r-shallow minor density");
    std::string construction = "greedy";
    int slab_d = 2, clique_m = 0;
    std::string clique_eps = "1/2";
    nabla->add_option("graph", graph_path, "host edge list (greedy only)");
    nabla->add_option("--r", r)->required();
    nabla->add_option("--construction", construction, "greedy | slab | clique")
        ->check(CLI::IsMember({"greedy", "slab", "clique"}));
    nabla->add_option("--d", slab_d, "slab: even king-grid dimension");
    nabla->add_option("--m", clique_m, "clique: clique size (default floor(r^(1/eps - 1)))");
    nabla->add_option("--eps", clique_eps, "clique: separator exponent");
    nabla->add_option("--host-out", fam_host_out, "slab/clique: write the generated host edge list here");
    nabla->add_option("--restarts", restarts);
    nabla->add_option("--witness-out", witness_out, "write the witness JSON here");
    add_common(nabla, common);

    auto* vw = app.add_subcommand("verify-witness", "check a shallow-minor witness against its host");
    vw->add_option("graph", graph_path)->required();
    vw->add_option("witness", witness_path)->required();
    add_common(vw, common);

    auto* tw = app.add_subcommand("tw", "treewidth");
    tw->add_option("graph", graph_path)->required();
    auto* tw_method = tw->add_option("--method", method, "exact | minfill")->check(CLI::IsMember({"exact", "minfill"}));
    bool tw_exact = false, tw_upper = false;
    tw->add_flag("--exact", tw_exact, "exact dynamic programming")->excludes(tw_method);
    tw->add_flag("--upper", tw_upper, "min-fill upper bound")->excludes(tw_method);
    add_common(tw, common, true);

    std::string eps_text = "1/2";
    auto* bounds = app.add_subcommand("bounds", "proven exponent bounds for a separator exponent");
    bounds->add_option("--eps", eps_text)->required();
    add_common(bounds, common);

    auto* sweep = app.add_subcommand("sweep", "measure a quantity across a family");
    fam.attach(sweep, false);
    sweep->add_option("--sizes", sizes_text, "a..b[:step] or comma list")->required();
    sweep->add_option("--quantity", quantity)->required();
    sweep->add_option("--method", method)->required();
    add_common(sweep, common);

    auto* fit = app.add_subcommand("fit", "log-log exponent fit of a sweep CSV");
    fit->add_option("csv", graph_path)->required();
    add_common(fit, common);

    auto* verify = app.add_subcommand("verify", "run the self-check suite");
    verify->add_flag("--quick", quick);
    verify->add_flag("--full", full_level);
    verify->add_flag("--inject-fault", inject, "corrupt one witness to exercise failure reporting");
    add_common(verify, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) {
            const auto spec = fam.spec(common.seed);
            const auto g = generate(spec);
            json meta;
            meta["family"] = to_string(spec.kind);
            meta["params"] = spec.params();
            meta["n"] = g.graph.vertex_count();
            meta["m"] = g.graph.edge_count();
            meta["per_edge"] = g.per_edge;
            meta["base_vertices"] = g.base_vertices;
            meta["mapping"] = g.mapping;
            if (spec.kind == FamilyKind::SubdividedCubic || spec.kind == FamilyKind::RandomRegular)
                meta["seed"] = spec.seed;
            // expander candidates are checked exactly when small enough, never assumed
            const Graph* candidate = spec.kind == FamilyKind::SubdividedCubic ? &*g.base
                                     : spec.kind == FamilyKind::RandomRegular ? &g.graph
                                                                               : nullptr;
            if (candidate) {
                const Rational alpha(3, 20);
                if (candidate->vertex_count() <= common.budget)
                    meta["expansion"] = is_alpha_expander_exact(*candidate, alpha, common.budget).expander
                                            ? "verified 3/20-expander"
                                            : "not a 3/20-expander";
                else
                    meta["expansion"] = "unverified assumption (3/20-expander, too large for the exact check)";
            }
            emit(common, to_edge_list(g.graph));
            if (!common.out.empty()) std::ofstream(common.out + ".json") << meta.dump(2) << '\n';
            else std::cerr << meta.dump() << '\n';
            return kOk;
        }
        if (*sep) {
            const Graph g = read_edge_list_file(graph_path);
            if (sep_exact && sep_heuristic) throw UsageError("choose one of --exact and --heuristic");
            if (sep_exact) method = "exact";
            if (sep_heuristic) method = "bfs-layer";
            if (method.empty()) method = g.vertex_count() <= common.budget ? "exact" : "bfs-layer";
            const auto cert = method == "exact" ? min_balanced_separator_exact(g, common.budget)
                                                : separator_heuristic(g, method == "bfs-layer"
                                                                             ? SeparatorStrategy::BfsLayer
                                                                             : SeparatorStrategy::RecursiveBisection);
            auto j = certificate_json(g, cert);
            j["method"] = method;
            emit(common, j.dump(2) + "\n");
            return j["bound_checked"].get<bool>() ? kOk : kCheckFailed;
        }
        if (*prs) {
            const Graph g = read_edge_list_file(graph_path);
            if (prs_r > 0) {
                const auto params = prs_parameters(prs_r, Rational::parse(prs_eps.empty() ? "1/2" : prs_eps));
                if (!params.feasible) throw UsageError("r too small for this eps: derived h is 0");
                l = static_cast<int>(params.l);
                h = static_cast<int>(params.h);
            } else if (opt_l->count() == 0 || opt_h->count() == 0) {
                throw UsageError("prs needs --l and --h, or --r");
            }
            const auto outcome = prs_separator_or_minor(g, l, h);
            json j;
            j["n"] = outcome.n;
            j["l"] = outcome.l;
            j["h"] = outcome.h;
            j["depth"] = outcome.depth;
            j["separator_bound"] = outcome.separator_bound();
            if (outcome.is_separator()) {
                j["branch"] = "separator";
                j["certificate"] = certificate_json(g, outcome.separator());
            } else {
                j["branch"] = "minor";
                j["witness"] = witness_to_json(outcome.minor());
            }
            const bool ok = verify_prs_outcome(g, outcome);
            j["verified"] = ok;
            emit(common, j.dump(2) + "\n");
            return ok ? kOk : kCheckFailed;
        }
        if (*expand) {
            const Graph g = read_edge_list_file(graph_path);
            json j;
            if (exact) {
                const auto check = is_alpha_expander_exact(g, Rational::parse(alpha), common.budget);
                j["alpha"] = Rational::parse(alpha).str();
                j["expander"] = check.expander;
                if (check.violating)
                    j["violating"] = std::vector<Vertex>(check.violating->members().begin(), check.violating->members().end());
            } else {
                const auto est = expansion_upper_estimate(g, samples, common.seed);
                j["samples"] = samples;
                j["expansion_upper_estimate"] = est ? json(est->str()) : json(nullptr);
            }
            emit(common, j.dump(2) + "\n");
            return kOk;
        }
        if (*nabla) {
            Graph g;
            MinorWitness w;
            json j;
            j["construction"] = construction;
            if (construction == "greedy") {
                if (graph_path.empty()) throw UsageError("greedy search needs a host graph");
                g = read_edge_list_file(graph_path);
                w = nabla_lower_greedy(g, r, common.seed, restarts).witness;
            } else if (construction == "slab") {
                g = king_grid(2 * r, slab_d);
                w = slab_bipartite_witness(slab_d, r);
                j["host"] = "king-grid size=" + std::to_string(2 * r) + ";d=" + std::to_string(slab_d);
            } else {
                const Rational eps = Rational::parse(clique_eps);
                if (clique_m == 0)
                    clique_m = static_cast<int>(intmath::floor_power(static_cast<std::uint64_t>(r), Rational(1) / eps - Rational(1)));
                g = subdivide_eps(complete(clique_m), eps).graph;
                w = clique_witness_in_subdivided_clique(clique_m, eps, r);
                j["host"] = "subdivided-clique size=" + std::to_string(clique_m) + ";eps=" + eps.str();
            }
            if (!fam_host_out.empty()) write_edge_list_file(g, fam_host_out);
            const auto check = verify_minor_witness(g, w);
            j["r"] = r;
            j["lower"] = w.target.density().str();
            j["target_n"] = w.target.vertex_count();
            j["target_m"] = w.target.edge_count();
            j["witness_verified"] = check.ok;
            if (!witness_out.empty()) std::ofstream(witness_out) << witness_to_json(w).dump() << '\n';
            emit(common, j.dump(2) + "\n");
            return check.ok ? kOk : kCheckFailed;
        }
        if (*vw) {
            const Graph g = read_edge_list_file(graph_path);
            MinorWitness w;
            try {
                w = witness_from_json(json::parse(read_file(witness_path)));
            } catch (const json::exception& e) {
                throw UsageError(std::string("malformed witness: ") + e.what());
            }
            const auto check = verify_minor_witness(g, w);
            json j;
            j["ok"] = check.ok;
            if (!check.ok) {
                j["violation"] = check.violation;
                j["detail"] = check.detail;
            } else {
                j["depth"] = w.depth;
                j["density"] = w.target.density().str();
            }
            emit(common, j.dump(2) + "\n");
            return check.ok ? kOk : kCheckFailed;
        }
        if (*tw) {
            const Graph g = read_edge_list_file(graph_path);
            if (tw_exact && tw_upper) throw UsageError("choose one of --exact and --upper");
            if (tw_exact) method = "exact";
            if (tw_upper) method = "minfill";
            const int budget = tw->get_option("--budget")->count() ? common.budget : kTreewidthExactBudget;
            if (method.empty()) method = g.vertex_count() <= budget ? "exact" : "minfill";
            const auto res = method == "exact" ? treewidth_exact(g, budget) : treewidth_minfill(g);
            json j;
            j["value"] = res.value;
            j["method"] = to_string(res.method);
            emit(common, j.dump(2) + "\n");
            return kOk;
        }
        if (*bounds) {
            const auto t = bounds_table(Rational::parse(eps_text));
            if (common.format == "csv") {
                emit(common, "eps,b_lower,b_upper,B,notes\n" + t.eps.str() + "," + t.b_lower.str() + "," +
                                 t.b_upper.str() + "," + t.big_b.str() + ",\"" + t.notes + "\"\n");
            } else {
                json j;
                j["eps"] = t.eps.str();
                j["b_lower"] = t.b_lower.str();
                j["b_upper"] = t.b_upper.str();
                j["B"] = t.big_b.str();
                j["notes"] = t.notes;
                emit(common, j.dump(2) + "\n");
            }
            return kOk;
        }
        if (*sweep) {
            const auto spec = fam.spec(common.seed);
            const auto kind = parse_quantity(quantity);
            if (!method_valid(kind, method)) throw UsageError("method " + method + " is not valid for " + quantity);
            std::ofstream file;
            if (!common.out.empty()) {
                file.open(common.out);
                if (!file) throw UsageError("cannot write " + common.out);
            }
            std::ostream& out = common.out.empty() ? std::cout : file;
            const bool csv = common.format == "csv" || sweep->get_option("--format")->count() == 0;
            if (csv) out << kCsvHeader << '\n' << std::flush;
            bool failed = false;
            run_family(spec, parse_sizes(sizes_text), kind, method, common.seed, [&](const ExperimentRecord& rec) {
                failed |= !rec.ok();
                // one line per point, flushed so partial sweeps survive interruption
                if (csv) out << csv_row(rec) << std::endl;
                else out << record_to_json(rec).dump() << std::endl;
            });
            if (failed) std::cerr << "note: some sweep points recorded errors\n";
            return kOk;
        }
        if (*fit) {
            const auto records = parse_csv_records(read_file(graph_path));
            const auto f = fit_exponent(records);
            json j;
            j["exponent"] = f.exponent;
            j["coefficient"] = f.coefficient;
            j["r_squared"] = f.r_squared;
            j["x_min"] = f.x_min;
            j["x_max"] = f.x_max;
            j["points"] = f.points;
            j["envelope"] = f.envelope;
            j["note"] = "polylog factors are not separated from the power law";
            emit(common, j.dump(2) + "\n");
            return kOk;
        }
        if (*verify) {
            if (quick && full_level) throw UsageError("choose one of --quick and --full");
            VerifyOptions opt;
            opt.level = full_level ? VerifyLevel::Full : VerifyLevel::Quick;
            opt.seed = common.seed;
            opt.inject_fault = inject;
            const auto report = verify_suite(opt);
            emit(common, report.text());
            return report.failures() == 0 ? kOk : kCheckFailed;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
