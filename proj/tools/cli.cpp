#include "cli.hpp"

#include <hyperlab/colouring.hpp>
#include <hyperlab/constructors.hpp>
#include <hyperlab/error.hpp>
#include <hyperlab/io.hpp>
#include <hyperlab/partition.hpp>
#include <hyperlab/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace hyperlab::cli {

namespace {

using nlohmann::ordered_json;

struct GlobalOptions {
    std::uint64_t seed = 7;
    std::optional<int> guard_vertices;
    std::string format = "table";
    std::string output;
};

std::set<int> parse_int_set(const std::string& text) {
    std::set<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(field, &used);
            if (used != field.size()) throw std::invalid_argument(field);
            out.insert(v);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad integer '" + field + "' in list '" + text + "'");
        }
    }
    return out;
}

SearchLimits resolve_limits(const GlobalOptions& g, std::ostream& err) {
    SearchLimits limits;
    if (const char* env = std::getenv("HYPERLAB_GUARD"); env && *env) {
        try {
            limits.max_vertices = std::stoi(env);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, std::string("HYPERLAB_GUARD is not an integer: ") + env);
        }
        err << "warning: HYPERLAB_GUARD sets the search guard to " << limits.max_vertices << " vertices\n";
    }
    if (g.guard_vertices) {
        limits.max_vertices = *g.guard_vertices;
        err << "warning: --guard-vertices sets the search guard to " << limits.max_vertices << " vertices\n";
    }
    return limits;
}

// Writes `text` to -o when given, otherwise to out.
void emit(const GlobalOptions& g, std::ostream& out, const std::string& text) {
    if (g.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(g.output, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::IoError, "cannot open '" + g.output + "' for writing");
    file << text;
}

void emit_document(const GlobalOptions& g, std::ostream& out, std::ostream& err, const Document& doc) {
    for (const auto& step : doc.graph.provenance())
        if (step.rfind("warning:", 0) == 0) err << step << '\n';
    if (g.output.empty()) {
        out << to_json_text(doc);
    } else {
        save(doc, g.output);
    }
}

std::string colours_text(const Colouring& c) {
    std::string out;
    for (std::size_t v = 0; v < c.size(); ++v) out += (v ? " " : "") + std::to_string(c.colours()[v]);
    return out;
}

std::string render_record(const GlobalOptions& g, const ordered_json& record,
                          const std::vector<std::pair<std::string, std::string>>& rows) {
    if (g.format == "json") return record.dump(2) + "\n";
    std::ostringstream out;
    if (g.format == "csv") {
        for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? "," : "") << rows[i].first;
        out << '\n';
        for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? "," : "") << '"' << rows[i].second << '"';
        out << '\n';
        return out.str();
    }
    std::size_t width = 0;
    for (const auto& [key, value] : rows) width = std::max(width, key.size());
    for (const auto& [key, value] : rows)
        out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
    return out.str();
}

std::vector<VerificationReport> run_verify(const std::string& id, std::uint64_t seed, std::optional<int> trials,
                                           int steps) {
    std::vector<VerificationReport> reports;
    const bool all = id == "all";
    bool matched = all;
    if (all || id == "lemma-3.1") {
        reports.push_back(verify_lemma_rectangular(12));
        matched = true;
    }
    if (all || id == "thm-3.2") {
        reports.push_back(verify_clique_theorem({3, 4}, 12, 12));
        matched = true;
    }
    if (all || id == "thm-3.5") {
        VerificationReport merged{"thm-3.5"};
        for (auto [t, r] : {std::pair{1, 4}, std::pair{2, 4}, std::pair{1, 5}}) {
            auto part = verify_sparse_construction(t, r);
            merged.instances += part.instances;
            merged.elapsed_seconds += part.elapsed_seconds;
            merged.failures.insert(merged.failures.end(), part.failures.begin(), part.failures.end());
        }
        reports.push_back(std::move(merged));
        matched = true;
    }
    if (all || id == "thm-2.1") {
        reports.push_back(verify_extension_preservation(trials.value_or(100), seed, PreservationMode::Classical));
        matched = true;
    }
    if (all || id == "thm-2.2") {
        reports.push_back(verify_extension_preservation(trials.value_or(100), seed, PreservationMode::Spectrum22));
        matched = true;
    }
    if (all || id == "prop-4.3") {
        reports.push_back(verify_clique_stability(trials.value_or(50), seed, steps));
        matched = true;
    }
    if (all || id == "oracle") {
        reports.push_back(verify_oracle_equivalence(trials.value_or(200), seed));
        matched = true;
    }
    if (!matched) throw CLI::ValidationError("verify", "unknown theorem id '" + id + "'");
    return reports;
}

std::string render_reports(const GlobalOptions& g, const std::vector<VerificationReport>& reports) {
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass();
    if (g.format == "json") {
        ordered_json doc{{"pass", pass}, {"reports", ordered_json::array()}};
        for (const auto& r : reports) doc["reports"].push_back(to_json(r));
        return doc.dump(2) + "\n";
    }
    if (g.format == "csv") {
        std::string out = csv_header() + "\n";
        for (const auto& r : reports) out += to_csv_row(r) + "\n";
        return out;
    }
    return to_table(reports);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Build r-uniform hypergraphs, compute chi, (alpha,beta)-spectra and clique numbers, "
                 "and check the extension and sigma-hypergraph results."};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--seed", g.seed, "Seed for randomized steps")->capture_default_str();
    app.add_option("--guard-vertices", g.guard_vertices, "Override the search size guard");
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"json", "table", "csv"}))
        ->capture_default_str();
    app.add_option("-o,--output", g.output, "Write the result to this file");
    app.fallthrough();

    // construct sigma
    auto* construct = app.add_subcommand("construct", "Build a hypergraph");
    construct->require_subcommand(1);
    construct->fallthrough();
    auto* sigma_cmd = construct->add_subcommand("sigma", "sigma-hypergraph H(n, r, q | sigma)");
    sigma_cmd->fallthrough();
    int n = 0, r = 0, q = 0;
    std::string sigma_text;
    sigma_cmd->add_option("--n", n, "Number of classes")->required();
    sigma_cmd->add_option("--r", r, "Uniformity")->required();
    sigma_cmd->add_option("--q", q, "Class size")->required();
    sigma_cmd->add_option("--sigma", sigma_text, "Partition of r, e.g. 3,1")->required();

    // extend
    auto* extend = app.add_subcommand("extend", "(p,q)-extension over one edge");
    extend->fallthrough();
    std::string in_path;
    std::size_t edge_index = 0;
    int p = 1, qext = 0;
    std::string t_set, p_set, q_set;
    extend->add_option("--in", in_path, "Input hypergraph JSON")->required();
    extend->add_option("--edge", edge_index, "Index of the base edge in canonical order")->required();
    extend->add_option("--p", p, "|W|")->required();
    extend->add_option("--qext", qext, "|U|")->capture_default_str();
    extend->add_option("--T", t_set, "Type 1 sizes, e.g. 1,2")->required();
    extend->add_option("--P", p_set, "Type 2 W sizes");
    extend->add_option("--Q", q_set, "Type 2 U sizes");

    // star
    auto* star = app.add_subcommand("star", "t-star extension, optionally repeated");
    star->fallthrough();
    int t = 1;
    std::optional<int> steps;
    std::string rule = "first";
    star->add_option("--in", in_path, "Input hypergraph JSON")->required();
    star->add_option("--edge", edge_index, "Base edge for a single step")->capture_default_str();
    star->add_option("--t", t, "Number of new vertices per step")->required();
    star->add_option("--steps", steps, "Repeat the extension this many times");
    star->add_option("--rule", rule, "Edge choice for repeated steps")
        ->check(CLI::IsMember({"first", "last", "random"}))
        ->capture_default_str();

    auto* chi = app.add_subcommand("chi", "Classical chromatic number");
    chi->fallthrough();
    chi->add_option("--in", in_path, "Input hypergraph JSON")->required();

    auto* spectrum = app.add_subcommand("spectrum", "(alpha,beta)-spectrum");
    spectrum->fallthrough();
    int alpha = 2, beta = 2;
    bool emit_witnesses = false;
    spectrum->add_option("--in", in_path, "Input hypergraph JSON")->required();
    spectrum->add_option("--alpha", alpha)->capture_default_str();
    spectrum->add_option("--beta", beta)->capture_default_str();
    spectrum->add_flag("--emit-witnesses", emit_witnesses, "Include one colouring per feasible k");

    auto* clique = app.add_subcommand("clique", "Clique number");
    clique->fallthrough();
    clique->add_option("--in", in_path, "Input hypergraph JSON")->required();

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->fallthrough();
    std::string verify_id;
    std::optional<int> trials;
    int verify_steps = 3;
    verify->add_option("id", verify_id, "lemma-3.1|thm-3.2|thm-3.5|thm-2.1|thm-2.2|prop-4.3|oracle|all")->required();
    verify->add_option("--trials", trials, "Random instances for the sampled suites");
    verify->add_option("--steps", verify_steps, "Star extension steps for prop-4.3")->capture_default_str();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const SearchLimits limits = resolve_limits(g, err);

        if (sigma_cmd->parsed()) {
            const auto built = build_sigma_hypergraph(n, r, q, parse_partition(sigma_text), limits);
            emit_document(g, out, err, make_document(built));
            return kOk;
        }
        if (extend->parsed()) {
            Document doc = load(in_path);
            ExtensionParams params;
            params.edge_index = edge_index;
            params.p = p;
            params.q_ext = qext;
            params.T = parse_int_set(t_set);
            params.P = parse_int_set(p_set);
            params.Q = parse_int_set(q_set);
            emit_document(g, out, err, Document{extend_pq(doc.graph, params), doc.classes});
            return kOk;
        }
        if (star->parsed()) {
            Document doc = load(in_path);
            Hypergraph result = steps ? iterate_star(doc.graph, t, *steps, parse_edge_rule(rule), g.seed)
                                      : star_extend(doc.graph, edge_index, t);
            emit_document(g, out, err, Document{std::move(result), doc.classes});
            return kOk;
        }
        if (chi->parsed()) {
            const Document doc = load(in_path);
            const auto res = chromatic_number(doc.graph, limits);
            ordered_json record{{"command", "chi"}, {"chi", res.chi}, {"witness", res.witness.colours()}};
            emit(g, out, render_record(g, record, {{"chi", std::to_string(res.chi)},
                                                   {"witness", colours_text(res.witness)}}));
            return kOk;
        }
        if (spectrum->parsed()) {
            const Document doc = load(in_path);
            const Spectrum s = ab_spectrum(doc.graph, alpha, beta, limits);
            ordered_json record{{"command", "spectrum"}, {"alpha", alpha},       {"beta", beta},
                                {"feasible", s.feasible}, {"gaps", s.gaps}, {"broken", s.broken()}};
            std::vector<std::pair<std::string, std::string>> rows{
                {"alpha", std::to_string(alpha)},
                {"beta", std::to_string(beta)},
                {"spectrum", ordered_json(s.feasible).dump()},
                {"gaps", ordered_json(s.gaps).dump()},
            };
            if (!s.feasible.empty()) {
                record["lower"] = s.feasible.front();
                record["upper"] = s.feasible.back();
            }
            if (emit_witnesses) {
                ordered_json w = ordered_json::object();
                for (const auto& [k, c] : s.witnesses) {
                    w[std::to_string(k)] = c.colours();
                    if (g.format == "table") rows.emplace_back("k=" + std::to_string(k), colours_text(c));
                }
                record["witnesses"] = std::move(w);
            }
            emit(g, out, render_record(g, record, rows));
            return kOk;
        }
        if (clique->parsed()) {
            const Document doc = load(in_path);
            const auto res = clique_number(doc.graph, limits);
            ordered_json record{{"command", "clique"}, {"omega", res.omega}, {"witness", res.witness.members()}};
            emit(g, out, render_record(g, record, {{"omega", std::to_string(res.omega)},
                                                   {"witness", ordered_json(res.witness.members()).dump()}}));
            return kOk;
        }
        if (verify->parsed()) {
            const auto reports = run_verify(verify_id, g.seed, trials, verify_steps);
            emit(g, out, render_reports(g, reports));
            for (const auto& rep : reports)
                if (!rep.pass()) return kVerificationFailed;
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::SizeGuardExceeded ? kSizeGuard : kUsage;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace hyperlab::cli
