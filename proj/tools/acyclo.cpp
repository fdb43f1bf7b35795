// Command-line front end over the acyclo C interface.

#include "acyclo/acyclo.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kInternal = 1, kUsage = 2, kBudget = 3, kDisagreement = 4 };

struct Failure {
    int code;
    std::string message;
};

void check(acyclo_status status) {
    switch (status) {
        case ACYCLO_OK:
            return;
        case ACYCLO_ERR_BUDGET:
            throw Failure{kBudget, acyclo_last_error()};
        case ACYCLO_ERR_PARSE:
        case ACYCLO_ERR_DOMAIN:
        case ACYCLO_ERR_ARGUMENT:
            throw Failure{kUsage, acyclo_last_error()};
        default:
            throw Failure{kInternal, acyclo_last_error()};
    }
}

// Takes ownership of a library string.
std::string take(char* s) {
    std::string out = s ? s : "";
    acyclo_string_free(s);
    return out;
}

template <typename T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using HypergraphPtr = std::unique_ptr<acyclo_hypergraph, Deleter<acyclo_hypergraph, acyclo_hypergraph_free>>;
using PolynomialPtr = std::unique_ptr<acyclo_polynomial, Deleter<acyclo_polynomial, acyclo_polynomial_free>>;
using CensusPtr = std::unique_ptr<acyclo_census, Deleter<acyclo_census, acyclo_census_free>>;
using FaceListPtr = std::unique_ptr<acyclo_face_list, Deleter<acyclo_face_list, acyclo_face_list_free>>;
using ReportPtr = std::unique_ptr<acyclo_report, Deleter<acyclo_report, acyclo_report_free>>;

struct RunConfig {
    std::string command;
    std::vector<int> complete;
    std::string input_path;
    std::string format = "json";
    std::uint64_t budget = ACYCLO_DEFAULT_BUDGET;
    std::string shard_text = "0/1";
    std::size_t shard_index = 0;
    std::size_t shard_total = 1;
    bool oracle = false;
    std::string orientation;
    std::uint64_t dilate = 1;
};

struct Context {
    RunConfig config;
    HypergraphPtr h;
    bool is_complete = false;
    Json oracle = Json::array();
    bool disagreement = false;
};

void parse_shard(RunConfig& c) {
    const auto slash = c.shard_text.find('/');
    try {
        if (slash == std::string::npos) throw std::invalid_argument("");
        std::size_t used = 0;
        const std::string left = c.shard_text.substr(0, slash), right = c.shard_text.substr(slash + 1);
        c.shard_index = std::stoul(left, &used);
        if (used != left.size()) throw std::invalid_argument("");
        c.shard_total = std::stoul(right, &used);
        if (used != right.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw Failure{kUsage, "--shard expects I/M, got '" + c.shard_text + "'"};
    }
    if (c.shard_total == 0 || c.shard_index >= c.shard_total)
        throw Failure{kUsage, "--shard needs 0 <= I < M, got '" + c.shard_text + "'"};
}

HypergraphPtr load_hypergraph(const RunConfig& c) {
    acyclo_hypergraph* h = nullptr;
    if (!c.complete.empty()) {
        check(acyclo_hypergraph_complete(c.complete[0], c.complete[1], &h));
    } else {
        std::ifstream in(c.input_path);
        if (!in) throw Failure{kUsage, "cannot read " + c.input_path};
        std::stringstream text;
        text << in.rdbuf();
        const acyclo_status s = acyclo_hypergraph_parse(text.str().c_str(), &h);
        if (s != ACYCLO_OK) throw Failure{kUsage, c.input_path + ": " + acyclo_last_error()};
    }
    return HypergraphPtr(h);
}

void add_report(Context& ctx, const std::string& quantity, const std::string& theorem, const std::string& oracle,
                bool agreement) {
    ctx.oracle.push_back(
        {{"quantity", quantity}, {"theorem_value", theorem}, {"oracle_value", oracle}, {"agreement", agreement}});
    if (!agreement) ctx.disagreement = true;
}

void add_skipped(Context& ctx, const std::string& quantity, const std::string& reason) {
    ctx.oracle.push_back({{"quantity", quantity}, {"skipped", reason}});
}

std::size_t edge_count(const Context& ctx) { return acyclo_hypergraph_edge_count(ctx.h.get()); }
int dim_d(const Context& ctx) { return acyclo_hypergraph_d(ctx.h.get()); }
int dim_n(const Context& ctx) { return acyclo_hypergraph_n(ctx.h.get()); }

std::size_t cycle_dim(const Context& ctx) {
    std::size_t out = 0;
    check(acyclo_cycle_space_dim(dim_n(ctx), dim_d(ctx), &out));
    return out;
}

void require_complete(const Context& ctx) {
    if (!ctx.is_complete) throw Failure{kUsage, ctx.config.command + " needs a complete hypergraph (--complete N D)"};
}

void require_unsharded(const Context& ctx, const char* why) {
    if (ctx.config.shard_total != 1) throw Failure{kUsage, ctx.config.command + ": " + why + " needs an unsharded run"};
}

// --- oracle helpers -------------------------------------------------------

void oracle_kirchhoff(Context& ctx, const std::string& volume) {
    if (dim_d(ctx) != 1) return add_skipped(ctx, "volume", "matrix-tree count needs d = 1");
    char* s = nullptr;
    check(acyclo_oracle_kirchhoff(ctx.h.get(), &s));
    const std::string trees = take(s);
    add_report(ctx, "volume", volume, trees, volume == trees);
}

void oracle_ehrhart(Context& ctx) {
    const std::size_t cap = acyclo_oracle_default_generator_cap();
    if (edge_count(ctx) > cap)
        return add_skipped(ctx, "ehrhart", "direct lattice count limited to " + std::to_string(cap) + " generators");
    acyclo_report* r = nullptr;
    check(acyclo_oracle_ehrhart_fit(ctx.h.get(), cap, &r));
    ReportPtr report(r);
    add_report(ctx, acyclo_report_quantity(r), acyclo_report_theorem_value(r), acyclo_report_oracle_value(r),
               acyclo_report_agreement(r) != 0);
}

void oracle_lattice_points(Context& ctx, std::uint64_t t, const std::string& theorem) {
    const std::size_t cap = acyclo_oracle_default_generator_cap();
    const std::string quantity = "lattice_points(t=" + std::to_string(t) + ")";
    if (edge_count(ctx) > cap)
        return add_skipped(ctx, quantity, "direct lattice count limited to " + std::to_string(cap) + " generators");
    char* s = nullptr;
    check(acyclo_oracle_lattice_points(ctx.h.get(), t, cap, &s));
    const std::string direct = take(s);
    add_report(ctx, quantity, theorem, direct, theorem == direct);
}

std::set<std::string> patterns_of(const acyclo_face_list* list, bool vertices_only) {
    std::set<std::string> out;
    for (std::size_t i = 0; i < acyclo_face_list_size(list); ++i) {
        std::size_t dim = 0;
        check(acyclo_face_dimension(list, i, &dim));
        if (vertices_only && dim != 0) continue;
        char* p = nullptr;
        check(acyclo_face_pattern(list, i, &p));
        out.insert(take(p));
    }
    return out;
}

void oracle_vertex_patterns(Context& ctx, const std::set<std::string>& theorem) {
    const std::size_t cap = acyclo_oracle_default_bruteforce_cap();
    if (edge_count(ctx) > cap)
        return add_skipped(ctx, "vertex_patterns", "exhaustive pattern scan limited to " + std::to_string(cap) + " edges");
    acyclo_face_list* raw = nullptr;
    check(acyclo_oracle_signpatterns(ctx.h.get(), cap, &raw));
    FaceListPtr brute(raw);
    const std::set<std::string> oracle = patterns_of(raw, false);
    add_report(ctx, "vertex_patterns", std::to_string(theorem.size()), std::to_string(oracle.size()), oracle == theorem);
}

// --- result builders ------------------------------------------------------

Json string_array(const std::vector<std::string>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(s);
    return out;
}

Json face_entry(const acyclo_face_list* list, std::size_t i, bool with_point, bool with_witness) {
    char* p = nullptr;
    check(acyclo_face_pattern(list, i, &p));
    std::size_t dim = 0;
    check(acyclo_face_dimension(list, i, &dim));
    Json out{{"pattern", take(p)}, {"dimension", dim}};
    if (with_point) {
        std::vector<std::string> coords;
        for (std::size_t k = 0; k < acyclo_face_point_length(list, i); ++k) {
            char* c = nullptr;
            check(acyclo_face_point_coordinate(list, i, k, &c));
            coords.push_back(take(c));
        }
        out["point"] = string_array(coords);
    }
    if (with_witness) {
        std::vector<std::string> w;
        for (std::size_t k = 0; k < acyclo_face_witness_length(list, i); ++k) {
            char* c = nullptr;
            check(acyclo_face_witness_entry(list, i, k, &c));
            w.push_back(take(c));
        }
        out["witness"] = string_array(w);
    }
    return out;
}

std::vector<std::string> polynomial_coefficients(const acyclo_polynomial* p) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < acyclo_polynomial_length(p); ++k) {
        char* c = nullptr;
        check(acyclo_polynomial_coefficient(p, k, &c));
        out.push_back(take(c));
    }
    return out;
}

Json census_json(const acyclo_census* c) {
    char *count = nullptr, *weighted = nullptr, *kalai = nullptr;
    check(acyclo_census_hypertree_count(c, &count));
    check(acyclo_census_weighted_volume(c, &weighted));
    check(acyclo_census_kalai_sum(c, &kalai));
    Json histogram = Json::array();
    for (std::size_t i = 0; i < acyclo_census_histogram_size(c); ++i) {
        char *order = nullptr, *n = nullptr;
        check(acyclo_census_histogram_entry(c, i, &order, &n));
        histogram.push_back({{"torsion", take(order)}, {"count", take(n)}});
    }
    return {{"hypertree_count", take(count)},
            {"weighted_volume", take(weighted)},
            {"kalai_sum", take(kalai)},
            {"torsion_histogram", histogram},
            {"consistent", acyclo_census_consistent(c) != 0}};
}

Json run_volume(Context& ctx) {
    char* s = nullptr;
    check(acyclo_volume(ctx.h.get(), ctx.config.budget, ctx.config.shard_index, ctx.config.shard_total, &s));
    const std::string volume = take(s);
    if (ctx.config.oracle) {
        oracle_kirchhoff(ctx, volume);
        oracle_ehrhart(ctx);
    }
    return {{"volume", volume}, {"cycle_space_dim", cycle_dim(ctx)}};
}

Json run_ehrhart(Context& ctx) {
    acyclo_polynomial* p = nullptr;
    check(acyclo_ehrhart(ctx.h.get(), ctx.config.budget, ctx.config.shard_index, ctx.config.shard_total, &p));
    PolynomialPtr poly(p);
    const auto coeffs = polynomial_coefficients(p);
    if (ctx.config.oracle) oracle_ehrhart(ctx);
    return {{"coefficients", string_array(coeffs)},
            {"degree", coeffs.empty() ? 0 : coeffs.size() - 1},
            {"cycle_space_dim", cycle_dim(ctx)}};
}

Json run_lattice_points(Context& ctx) {
    const std::uint64_t t = ctx.config.dilate;
    if (t == 0) throw Failure{kUsage, "--dilate must be positive"};
    acyclo_polynomial* p = nullptr;
    check(acyclo_ehrhart(ctx.h.get(), ctx.config.budget, ctx.config.shard_index, ctx.config.shard_total, &p));
    PolynomialPtr poly(p);
    char* s = nullptr;
    check(acyclo_polynomial_evaluate(p, t, &s));
    const std::string count = take(s);
    if (ctx.config.oracle) oracle_lattice_points(ctx, t, count);
    return {{"dilate", t}, {"lattice_points", count}};
}

Json run_kalai_census(Context& ctx) {
    acyclo_census* c = nullptr;
    check(acyclo_hypertree_census(ctx.h.get(), ctx.config.budget, ctx.config.shard_index, ctx.config.shard_total,
                                  &c));
    CensusPtr census(c);
    Json out = census_json(c);
    if (ctx.is_complete) {
        char* f = nullptr;
        check(acyclo_kalai_formula(dim_n(ctx), dim_d(ctx), &f));
        const std::string formula = take(f);
        out["kalai_formula"] = formula;
        if (ctx.config.shard_total == 1) {
            const bool match = out["kalai_sum"].get<std::string>() == formula;
            out["matches_formula"] = match;
            if (!match) ctx.disagreement = true;
        }
    }
    if (ctx.config.oracle) {
        oracle_kirchhoff(ctx, out["weighted_volume"].get<std::string>());
        oracle_ehrhart(ctx);
    }
    return out;
}

Json run_duality(Context& ctx) {
    require_complete(ctx);
    require_unsharded(ctx, "duality-check");
    const int n = dim_n(ctx), d = dim_d(ctx);
    char *a = nullptr, *b = nullptr;
    check(acyclo_duality_volumes(n, d, ctx.config.budget, &a, &b));
    const std::string va = take(a), vb = take(b);
    std::size_t amb = 0, dual_amb = 0;
    check(acyclo_cycle_space_dim(n, d, &amb));
    check(acyclo_cycle_space_dim(n, n - d - 2, &dual_amb));
    const bool equal = va == vb;
    if (!equal) ctx.disagreement = true;
    if (ctx.config.oracle) add_skipped(ctx, "duality", "no independent volume oracle beyond the census");
    return {{"n", n},
            {"d", d},
            {"dual_d", n - d - 2},
            {"volume", va},
            {"dual_volume", vb},
            {"equal", equal},
            {"ambient_dimension", amb},
            {"dual_ambient_dimension", dual_amb}};
}

Json run_vertices(Context& ctx) {
    acyclo_face_list* raw = nullptr;
    check(acyclo_vertices(ctx.h.get(), ctx.config.budget, ctx.config.shard_index, ctx.config.shard_total, &raw));
    FaceListPtr list(raw);
    Json vertices = Json::array();
    for (std::size_t i = 0; i < acyclo_face_list_size(raw); ++i) {
        Json v = face_entry(raw, i, true, false);
        v.erase("dimension");
        vertices.push_back(v);
    }
    if (ctx.config.oracle) oracle_vertex_patterns(ctx, patterns_of(raw, false));
    return {{"count", acyclo_face_list_size(raw)}, {"vertices", vertices}};
}

std::vector<std::size_t> f_vector(const acyclo_face_list* list, std::size_t top) {
    std::vector<std::size_t> f(top + 1, 0);
    for (std::size_t i = 0; i < acyclo_face_list_size(list); ++i) {
        std::size_t dim = 0;
        check(acyclo_face_dimension(list, i, &dim));
        if (dim < f.size()) ++f[dim];
    }
    return f;
}

Json run_faces(Context& ctx) {
    require_unsharded(ctx, "faces");
    acyclo_face_list* raw = nullptr;
    check(acyclo_face_lattice(ctx.h.get(), ctx.config.budget, &raw));
    FaceListPtr list(raw);
    const std::size_t top = acyclo_face_list_polytope_dimension(raw);
    Json faces = Json::array();
    for (std::size_t i = 0; i < acyclo_face_list_size(raw); ++i) faces.push_back(face_entry(raw, i, false, true));
    if (ctx.config.oracle) oracle_vertex_patterns(ctx, patterns_of(raw, true));
    return {{"polytope_dimension", top}, {"f_vector", f_vector(raw, top)}, {"faces", faces}};
}

Json run_facets(Context& ctx) {
    require_unsharded(ctx, "facets");
    acyclo_face_list* raw = nullptr;
    check(acyclo_facets(ctx.h.get(), ctx.config.budget, &raw));
    FaceListPtr list(raw);
    Json facets = Json::array();
    std::size_t induced = 0;
    for (std::size_t i = 0; i < acyclo_face_list_size(raw); ++i) {
        Json f = face_entry(raw, i, false, true);
        if (ctx.is_complete) {
            int flag = 0;
            check(acyclo_is_partition_induced(dim_n(ctx), dim_d(ctx), f["pattern"].get<std::string>().c_str(), &flag));
            f["partition_induced"] = flag != 0;
            induced += flag != 0;
        }
        facets.push_back(f);
    }
    Json out{{"count", acyclo_face_list_size(raw)}};
    if (ctx.is_complete) out["partition_induced_count"] = induced;
    out["facets"] = facets;
    if (ctx.config.oracle) {
        acyclo_face_list* lattice_raw = nullptr;
        check(acyclo_face_lattice(ctx.h.get(), ctx.config.budget, &lattice_raw));
        FaceListPtr lattice(lattice_raw);
        oracle_vertex_patterns(ctx, patterns_of(lattice_raw, true));
    }
    return out;
}

Json run_tournament(Context& ctx) {
    require_complete(ctx);
    const int n = dim_n(ctx), d = dim_d(ctx);
    if (!ctx.config.orientation.empty()) {
        int flag = 0;
        check(acyclo_is_acyclic_hypertournament(n, d, ctx.config.orientation.c_str(), &flag));
        return {{"orientation", ctx.config.orientation}, {"acyclic", flag != 0}};
    }
    require_unsharded(ctx, "exhaustive tournament-check");
    const std::size_t edges = edge_count(ctx);
    if (edges >= 63 || (std::uint64_t{1} << edges) > ctx.config.budget)
        throw Failure{kBudget, "tournament-check: 2^" + std::to_string(edges) + " orientations exceed the budget"};
    std::set<std::string> acyclic;
    std::string orientation(edges, '+');
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask) {
        for (std::size_t e = 0; e < edges; ++e) orientation[e] = (mask >> e & 1) ? '-' : '+';
        int flag = 0;
        check(acyclo_is_acyclic_hypertournament(n, d, orientation.c_str(), &flag));
        if (flag) acyclic.insert(orientation);
    }
    acyclo_face_list* raw = nullptr;
    check(acyclo_vertices(ctx.h.get(), ctx.config.budget, 0, 1, &raw));
    FaceListPtr vertices(raw);
    const std::set<std::string> vertex_patterns = patterns_of(raw, false);
    const bool bijection = vertex_patterns == acyclic;
    if (!bijection) ctx.disagreement = true;
    if (ctx.config.oracle) oracle_vertex_patterns(ctx, acyclic);
    return {{"tournaments", std::to_string(std::uint64_t{1} << edges)},
            {"acyclic", acyclic.size()},
            {"vertices", vertex_patterns.size()},
            {"bijection", bijection}};
}

Json run_oracle(Context& ctx) {
    require_unsharded(ctx, "oracle");
    ctx.config.oracle = true;
    char* s = nullptr;
    check(acyclo_volume(ctx.h.get(), ctx.config.budget, 0, 1, &s));
    const std::string volume = take(s);
    oracle_kirchhoff(ctx, volume);
    oracle_ehrhart(ctx);
    check(acyclo_lattice_point_count(ctx.h.get(), ctx.config.budget, 0, 1, &s));
    oracle_lattice_points(ctx, 1, take(s));
    if (edge_count(ctx) <= acyclo_oracle_default_bruteforce_cap()) {
        acyclo_face_list* raw = nullptr;
        check(acyclo_vertices(ctx.h.get(), ctx.config.budget, 0, 1, &raw));
        FaceListPtr list(raw);
        oracle_vertex_patterns(ctx, patterns_of(raw, false));
    } else {
        oracle_vertex_patterns(ctx, {});
    }
    std::size_t agreed = 0, checked = 0;
    for (const Json& r : ctx.oracle)
        if (r.contains("agreement")) {
            ++checked;
            agreed += r["agreement"].get<bool>();
        }
    return {{"checked", checked}, {"agreed", agreed}};
}

// --- output ---------------------------------------------------------------

bool scalar_array(const Json& j) {
    if (!j.is_array()) return false;
    for (const Json& x : j)
        if (x.is_structured()) return false;
    return true;
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    } else if (scalar_array(j)) {
        std::string joined;
        for (std::size_t i = 0; i < j.size(); ++i) joined += (i ? " " : "") + scalar_text(j[i]);
        rows.emplace_back(prefix, joined);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    } else {
        rows.emplace_back(prefix, scalar_text(j));
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

// Indented JSON, with arrays of scalars kept on one line.
void write_json(std::ostream& out, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) + 2, ' '), close(static_cast<std::size_t>(indent), ' ');
    if (j.is_object() && !j.empty()) {
        out << "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            out << pad << Json(it.key()).dump() << ": ";
            write_json(out, it.value(), indent + 2);
            out << (i + 1 < j.size() ? ",\n" : "\n");
        }
        out << close << "}";
    } else if (j.is_array() && !scalar_array(j)) {
        out << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out << pad;
            write_json(out, j[i], indent + 2);
            out << (i + 1 < j.size() ? ",\n" : "\n");
        }
        out << close << "]";
    } else if (j.is_array()) {
        out << "[";
        for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << j[i].dump();
        out << "]";
    } else {
        out << j.dump();
    }
}

void emit(const Json& report, const std::string& format) {
    if (format == "json") {
        write_json(std::cout, report, 0);
        std::cout << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    if (format == "csv") {
        std::cout << "quantity,value\n";
        for (const auto& [k, v] : rows) std::cout << csv_field(k) << "," << csv_field(v) << "\n";
    } else {
        for (const auto& [k, v] : rows) std::cout << k << ": " << v << "\n";
    }
}

Json input_echo(const Context& ctx) {
    char* s = nullptr;
    check(acyclo_hypergraph_to_json(ctx.h.get(), &s));
    Json doc = Json::parse(take(s));
    Json out{{"n", doc["n"]}, {"d", doc["d"]}, {"edge_count", doc["edges"].size()}, {"complete", ctx.is_complete}};
    out["edges"] = doc["edges"];
    return out;
}

int run(Context& ctx) {
    const RunConfig& c = ctx.config;
    ctx.h = load_hypergraph(c);
    ctx.is_complete = acyclo_hypergraph_is_complete(ctx.h.get()) != 0;
    if (c.oracle && c.shard_total != 1) throw Failure{kUsage, "--oracle needs an unsharded run"};

    Json result;
    if (c.command == "volume") result = run_volume(ctx);
    else if (c.command == "ehrhart") result = run_ehrhart(ctx);
    else if (c.command == "lattice-points") result = run_lattice_points(ctx);
    else if (c.command == "kalai-census") result = run_kalai_census(ctx);
    else if (c.command == "duality-check") result = run_duality(ctx);
    else if (c.command == "vertices") result = run_vertices(ctx);
    else if (c.command == "faces") result = run_faces(ctx);
    else if (c.command == "facets") result = run_facets(ctx);
    else if (c.command == "tournament-check") result = run_tournament(ctx);
    else if (c.command == "oracle") result = run_oracle(ctx);
    else throw Failure{kUsage, "unknown subcommand " + c.command};

    Json report{{"command", c.command}, {"input", input_echo(ctx)}};
    report["budget"] = std::to_string(c.budget);
    report["shard"] = {{"index", c.shard_index}, {"total", c.shard_total}};
    report["result"] = result;
    if (ctx.config.oracle) report["oracle"] = ctx.oracle;
    emit(report, c.format);
    if (ctx.disagreement) {
        std::cerr << "acyclo: theorem and oracle disagree\n";
        return kDisagreement;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on hypergraphic zonotopes and acyclohedra"};
    app.require_subcommand(1);
    RunConfig config;

    const std::vector<std::pair<std::string, std::string>> commands{
        {"volume", "Normalized volume of the zonotope"},
        {"ehrhart", "Ehrhart polynomial coefficients"},
        {"lattice-points", "Lattice points of the (dilated) zonotope"},
        {"kalai-census", "Torsion census over spanning hypertrees"},
        {"duality-check", "Volumes for d and n-d-2"},
        {"vertices", "Vertices with sign patterns and coordinates"},
        {"faces", "Full face lattice"},
        {"facets", "Facets, with partition-induced flags on complete inputs"},
        {"tournament-check", "Acyclicity of hypertournaments"},
        {"oracle", "Run every applicable brute-force cross-check"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        auto* complete = sub->add_option("--complete", config.complete, "Complete (d+1)-uniform hypergraph on N vertices")
                             ->expected(2)
                             ->type_name("N D");
        auto* input = sub->add_option("--input", config.input_path, "Hypergraph JSON document");
        complete->excludes(input);
        input->excludes(complete);
        sub->add_option("--format", config.format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "human"}))
            ->capture_default_str();
        sub->add_option("--budget", config.budget, "Enumeration budget")->capture_default_str();
        sub->add_option("--shard", config.shard_text, "Enumeration shard I/M")->capture_default_str();
        sub->add_flag("--oracle", config.oracle, "Cross-check against brute-force oracles");
        if (name == "tournament-check")
            sub->add_option("--orientation", config.orientation, "One '+' or '-' per edge; exhaustive when omitted");
        if (name == "lattice-points") sub->add_option("--dilate", config.dilate, "Dilation factor t")->capture_default_str();
        sub->callback([&config, name = name] { config.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "acyclo: " << e.what() << "\n";
        return kUsage;
    }

    Context ctx;
    ctx.config = config;
    try {
        if (config.complete.empty() == config.input_path.empty())
            throw Failure{kUsage, "give exactly one of --complete N D or --input PATH"};
        parse_shard(ctx.config);
        return run(ctx);
    } catch (const Failure& f) {
        std::cerr << "acyclo: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "acyclo: internal error: " << e.what() << "\n";
        return kInternal;
    }
}
