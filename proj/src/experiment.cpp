#include "sepminor/experiment.hpp"

#include "sepminor/intmath.hpp"

#include "sepminor/minors.hpp"
#include "sepminor/random.hpp"
#include "sepminor/separators.hpp"
#include "sepminor/treewidth.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <sstream>

namespace sepminor {

std::string to_string(Quantity q) {
    switch (q) {
        case Quantity::SeparatorSize: return "separator-size";
        case Quantity::NablaLower: return "nabla-lower";
        case Quantity::NablaUpper: return "nabla-upper";
        case Quantity::Treewidth: return "treewidth";
    }
    return "separator-size";
}

Quantity parse_quantity(std::string_view name) {
    for (Quantity q : {Quantity::SeparatorSize, Quantity::NablaLower, Quantity::NablaUpper, Quantity::Treewidth})
        if (to_string(q) == name) return q;
    throw std::invalid_argument("unknown quantity '" + std::string(name) + "'");
}

bool method_valid(Quantity q, std::string_view method) {
    switch (q) {
        case Quantity::SeparatorSize: return method == "exact" || method == "bfs-layer" || method == "recursive-bisection";
        case Quantity::NablaLower: return method == "greedy" || method == "slab" || method == "clique";
        case Quantity::NablaUpper: return method == "bound";
        case Quantity::Treewidth: return method == "exact" || method == "minfill";
    }
    return false;
}

std::string to_string(Direction d) {
    switch (d) {
        case Direction::Exact: return "exact";
        case Direction::Upper: return "upper";
        case Direction::Lower: return "lower";
    }
    return "exact";
}

namespace {

Direction direction_of(Quantity q, std::string_view method) {
    switch (q) {
        case Quantity::SeparatorSize: return method == "exact" ? Direction::Exact : Direction::Upper;
        case Quantity::NablaLower: return Direction::Lower;
        case Quantity::NablaUpper: return Direction::Upper;
        case Quantity::Treewidth: return method == "exact" ? Direction::Exact : Direction::Upper;
    }
    return Direction::Exact;
}

/// Density upper bound for every r-shallow minor of the family member.
Rational nabla_upper_bound(const GeneratedGraph& gen, int r) {
    switch (gen.spec.kind) {
        case FamilyKind::KingGrid: {
            // min degree < bound on every subgraph of an r-shallow minor, so density < bound
            const auto bound = grid_minor_degree_bound(gen.spec.d, r);
            return Rational(static_cast<std::int64_t>(bound.value));
        }
        case FamilyKind::SubdividedCubic:
            if (auto two = nabla_upper_degenerate(r, gen.per_edge)) return *two;
            return Rational(subdivided_cubic_degree_bound(gen.base_vertices));
        case FamilyKind::SubdividedPlanarGrid:
        case FamilyKind::PlanarGrid:
        case FamilyKind::Path:
        case FamilyKind::Cycle: return Rational(3);
        default: break;
    }
    throw std::invalid_argument("no density upper bound known for family " + to_string(gen.spec.kind));
}

void measure(ExperimentRecord& rec, const FamilySpec& spec, int point, Quantity kind, const std::string& method) {
    switch (kind) {
        case Quantity::SeparatorSize:
        case Quantity::Treewidth: {
            FamilySpec sized = spec;
            sized.size = point;
            sized.seed = rec.seed;
            rec.family = sized;
            const auto gen = generate(sized);
            rec.n = gen.graph.vertex_count();
            rec.x = rec.n;
            if (kind == Quantity::SeparatorSize) {
                const SeparatorCertificate cert =
                    method == "exact" ? min_balanced_separator_exact(gen.graph)
                                      : separator_heuristic(gen.graph, method == "bfs-layer"
                                                                           ? SeparatorStrategy::BfsLayer
                                                                           : SeparatorStrategy::RecursiveBisection);
                rec.value = Rational(cert.size());
            } else {
                const auto tw = method == "exact" ? treewidth_exact(gen.graph) : treewidth_minfill(gen.graph);
                rec.value = Rational(tw.value);
            }
            return;
        }
        case Quantity::NablaLower: {
            const int r = point;
            rec.x = r;
            if (method == "slab") {
                FamilySpec host = spec;
                host.kind = FamilyKind::KingGrid;
                host.size = 2 * r;
                rec.family = host;
                const auto w = slab_bipartite_witness(spec.d, r);
                rec.n = king_grid(2 * r, spec.d).vertex_count();
                rec.value = w.target.density();
                return;
            }
            if (method == "clique") {
                // m = floor(r^(1/eps - 1))
                const Rational x = Rational(1) / spec.eps - Rational(1);
                const int m = static_cast<int>(intmath::floor_power(r, x));
                FamilySpec host = spec;
                host.kind = FamilyKind::SubdividedClique;
                host.size = m;
                rec.family = host;
                const auto w = clique_witness_in_subdivided_clique(m, spec.eps, r);
                rec.n = subdivide_eps(complete(m), spec.eps).graph.vertex_count();
                rec.value = w.target.density();
                return;
            }
            rec.family = spec;
            const auto gen = generate(spec);
            rec.n = gen.graph.vertex_count();
            rec.value = nabla_lower_greedy(gen.graph, r, rec.seed).lower;
            return;
        }
        case Quantity::NablaUpper: {
            const int r = point;
            rec.x = r;
            rec.family = spec;
            const auto gen = generate(spec);
            rec.n = gen.graph.vertex_count();
            rec.value = nabla_upper_bound(gen, r);
            return;
        }
    }
}

}  // namespace

bool same_measurement(const ExperimentRecord& a, const ExperimentRecord& b) {
    return a.family.kind == b.family.kind && a.family.params() == b.family.params() && a.n == b.n && a.x == b.x &&
           a.kind == b.kind && a.method == b.method && a.direction == b.direction && a.value == b.value &&
           a.seed == b.seed && a.error == b.error;
}

std::vector<ExperimentRecord> run_family(const FamilySpec& spec, const std::vector<int>& sizes, Quantity kind,
                                         const std::string& method, std::uint64_t seed,
                                         const std::function<void(const ExperimentRecord&)>& on_record) {
    if (!method_valid(kind, method))
        throw std::invalid_argument("method '" + method + "' is not valid for " + to_string(kind));
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] < sizes[i - 1]) throw std::invalid_argument("sweep sizes must be ascending");

    const bool nabla = kind == Quantity::NablaLower || kind == Quantity::NablaUpper;
    std::vector<ExperimentRecord> out;
    out.reserve(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        ExperimentRecord rec;
        rec.family = spec;
        rec.kind = kind;
        rec.method = method;
        rec.direction = direction_of(kind, method);
        rec.seed = nabla ? seed : derive_seed(seed, i);
        rec.x = sizes[i];
        const auto start = std::chrono::steady_clock::now();
        try {
            measure(rec, spec, sizes[i], kind, method);
        } catch (const std::exception& e) {
            rec.value.reset();
            rec.error = e.what();
            if (rec.error.empty()) rec.error = "error";
        }
        rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (on_record) on_record(rec);
        out.push_back(std::move(rec));
    }
    return out;
}

FitResult fit_exponent(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("fit: x and y lengths differ");
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0) || !(ys[i] > 0)) continue;
        lx.push_back(std::log(xs[i]));
        ly.push_back(std::log(ys[i]));
    }
    if (lx.size() < 3) throw std::invalid_argument("fit needs at least 3 points with positive x and value");
    const double k = static_cast<double>(lx.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) mx += lx[i], my += ly[i];
    mx /= k;
    my /= k;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    if (sxx <= 1e-300) throw std::invalid_argument("fit: all x values coincide");
    FitResult f;
    f.exponent = sxy / sxx;
    f.coefficient = std::exp(my - f.exponent * mx);
    double ss_res = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        const double e = ly[i] - (my + f.exponent * (lx[i] - mx));
        ss_res += e * e;
    }
    // constant data is fit perfectly by slope 0
    f.r_squared = syy <= 1e-300 ? 1.0 : std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    f.points = static_cast<int>(lx.size());
    f.x_min = std::exp(*std::min_element(lx.begin(), lx.end()));
    f.x_max = std::exp(*std::max_element(lx.begin(), lx.end()));
    f.envelope = "exact";
    return f;
}

FitResult fit_exponent(const std::vector<ExperimentRecord>& records) {
    std::vector<double> xs, ys;
    bool upper = false, lower = false;
    for (const auto& r : records) {
        if (!r.ok() || !(Rational(0) < *r.value)) continue;
        xs.push_back(static_cast<double>(r.x));
        ys.push_back(r.value->to_double());
        upper |= r.direction == Direction::Upper;
        lower |= r.direction == Direction::Lower;
    }
    FitResult f = fit_exponent(xs, ys);
    if (upper && lower) f.envelope = "mixed bounds";
    else if (upper) f.envelope = "upper envelope";
    else if (lower) f.envelope = "lower envelope";
    return f;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') fields.back() += '"', ++i;
            else if (c == '"') quoted = false;
            else fields.back() += c;
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    return fields;
}

FamilySpec parse_params(FamilyKind kind, const std::string& params) {
    FamilySpec spec;
    spec.kind = kind;
    std::istringstream in(params);
    std::string item;
    while (std::getline(in, item, ';')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad params entry '" + item + "'");
        const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "size") spec.size = std::stoi(val);
        else if (key == "d") spec.d = std::stoi(val);
        else if (key == "eps") spec.eps = Rational::parse(val);
        else if (key == "degree") spec.degree = std::stoi(val);
        else if (key == "seed") spec.seed = std::stoull(val);
        else throw std::invalid_argument("unknown params key '" + key + "'");
    }
    return spec;
}

}  // namespace

std::string csv_row(const ExperimentRecord& r) {
    std::ostringstream out;
    out << to_string(r.family.kind) << ',' << csv_field(r.family.params()) << ',' << r.x << ',' << to_string(r.kind)
        << ',' << r.method << ',';
    if (r.ok()) out << r.value->num() << ',' << r.value->den();
    else out << ',';
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.ms);
    out << ',' << r.seed << ',' << ms;
    return out.str();
}

nlohmann::json record_to_json(const ExperimentRecord& r) {
    nlohmann::json j;
    j["family"] = to_string(r.family.kind);
    j["params"] = r.family.params();
    j["n"] = r.n;
    j["n_or_r"] = r.x;
    j["kind"] = to_string(r.kind);
    j["method"] = r.method;
    j["direction"] = to_string(r.direction);
    if (r.ok()) j["value"] = r.value->str();
    else j["value"] = nullptr;
    j["seed"] = r.seed;
    j["ms"] = r.ms;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

std::vector<ExperimentRecord> parse_csv_records(std::string_view text) {
    std::vector<ExperimentRecord> out;
    std::size_t pos = 0;
    bool header = true;
    int line_no = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (header) {
            header = false;
            if (line == kCsvHeader) continue;
            throw std::invalid_argument("csv header does not match expected columns");
        }
        const auto f = split_csv_line(line);
        if (f.size() != 9) throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected 9 fields");
        ExperimentRecord r;
        r.family = parse_params(parse_family_kind(f[0]), f[1]);
        r.x = std::stoll(f[2]);
        r.kind = parse_quantity(f[3]);
        r.method = f[4];
        if (!method_valid(r.kind, r.method))
            throw std::invalid_argument("csv line " + std::to_string(line_no) + ": invalid method " + r.method);
        r.direction = direction_of(r.kind, r.method);
        if (!f[5].empty()) r.value = Rational(std::stoll(f[5]), std::stoll(f[6]));
        else r.error = "no value";
        r.seed = std::stoull(f[7]);
        r.ms = f[8].empty() ? 0 : std::stod(f[8]);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace sepminor
