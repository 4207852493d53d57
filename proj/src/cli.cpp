#include "edgereg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgereg/cache.hpp"
#include "edgereg/invariants.hpp"
#include "edgereg/io.hpp"
#include "edgereg/verifier.hpp"

namespace edgereg {

namespace {

using Json = nlohmann::ordered_json;

struct CommonFlags {
    std::string field = "Q";
    std::string method = "auto";
    bool json = false;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool no_cache = false;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--field", f.field, "Coefficient field: Q, GF2 or GF<p>")->capture_default_str();
    cmd->add_option("--method", f.method, "Betti engine: auto, hochster or lcm")
        ->check(CLI::IsMember({"auto", "hochster", "lcm"}))
        ->capture_default_str();
    cmd->add_flag("--json", f.json, "Machine-readable output");
    cmd->add_option("--seed", f.seed, "Random seed")->capture_default_str();
    cmd->add_option("--threads", f.threads, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
    cmd->add_flag("--no-cache", f.no_cache, "Bypass the result cache");
    cmd->add_option("--out", f.out_path, "Output file");
}

struct Input {
    std::string label;
    std::optional<Graph> graph;
    MonomialIdeal ideal;
};

Input load_input(const std::string& spec) {
    Input in;
    in.label = spec;
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) {
        const std::string text = read_file(spec);
        std::istringstream first(text);
        std::string word;
        // Skip comment-only lines when sniffing the format.
        std::string line;
        while (std::getline(first, line)) {
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            std::istringstream ls(line);
            if (ls >> word) break;
        }
        try {
            if (word == "ring") {
                in.ideal = parse_ideal(text);
            } else {
                in.graph = parse_graph(text);
                in.ideal = edge_ideal(*in.graph);
            }
        } catch (const ParseError& e) {
            throw ParseError(e.line(), e.column(), spec + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
        }
        return in;
    }
    const FamilySpec fs = parse_family_spec(spec);
    in.label = fs.to_string();
    in.graph = fs.build();
    in.ideal = edge_ideal(*in.graph);
    return in;
}

const Graph& require_graph(const Input& in, const char* command) {
    if (!in.graph) throw std::invalid_argument(std::string(command) + " needs a graph, got an ideal file");
    return *in.graph;
}

Json pairs(const std::vector<Edge>& edges) {
    Json a = Json::array();
    for (auto [u, v] : edges) a.push_back({u, v});
    return a;
}

BettiTable betti(const MonomialIdeal& a, const std::string& method, const EngineOptions& e, const CommonFlags& f) {
    const std::string m = method == "lcm" ? "lcm" : "hochster";
    std::optional<ResultCache> cache;
    if (!f.no_cache) cache.emplace(ResultCache::default_directory());
    if (cache)
        if (auto hit = cache->load(a, e.field, m)) return *hit;
    BettiTable t = m == "lcm" ? betti_table_lcm_lattice(a, e) : betti_table_hochster(a, e);
    if (cache) cache->store(a, e.field, m, t);
    return t;
}

void emit(const CommonFlags& f, std::ostream& out, const std::string& text) {
    if (f.out_path.empty())
        out << text;
    else
        write_file(f.out_path, text);
}

int cmd_reg(const std::string& spec, const CommonFlags& f, std::ostream& out) {
    const Input in = load_input(spec);
    EngineOptions e{Field::parse(f.field), f.threads};
    if (in.ideal.is_unit()) throw std::invalid_argument("the unit ideal has no regularity");
    Json j;
    j["input"] = in.label;
    j["field"] = e.field.name();
    int value = 0;
    std::string method;
    std::optional<ChordalityResult> chordal;
    std::optional<InducedMatchingResult> matching;
    if (f.method == "auto" && in.graph && (chordal = chordality(*in.graph))->chordal) {
        matching = induced_matching(*in.graph);
        value = matching->size;
        method = to_string(RegularityMethod::ChordalFastPath);
    } else {
        method = f.method == "lcm" ? "lcm" : "hochster";
        value = in.ideal.is_zero() ? 0 : betti(in.ideal, method, e, f).regularity();
    }
    j["method"] = method;
    j["reg_quotient"] = value;
    j["reg_ideal"] = in.ideal.is_zero() ? Json(nullptr) : Json(value + 1);
    if (matching) {
        j["witness"] = pairs(matching->witness.edges);
        j["elimination_order"] = chordal->elimination_order;
    }
    std::ostringstream text;
    if (f.json) {
        text << j.dump(2) << '\n';
    } else {
        text << "input: " << in.label << "\nreg(R/I) = " << value << '\n';
        if (in.ideal.is_zero())
            text << "reg(I) undefined (zero ideal)\n";
        else
            text << "reg(I) = " << value + 1 << '\n';
        text << "method: " << method << '\n';
        if (matching) {
            text << "induced matching:";
            for (auto [u, v] : matching->witness.edges) text << " {" << u << ',' << v << '}';
            text << "\nelimination order:";
            for (int v : chordal->elimination_order) text << ' ' << v;
            text << '\n';
        }
    }
    emit(f, out, text.str());
    return 0;
}

int cmd_im(const std::string& spec, const CommonFlags& f, std::ostream& out) {
    const Input in = load_input(spec);
    const InducedMatchingResult r = induced_matching(require_graph(in, "im"));
    std::ostringstream text;
    if (f.json) {
        Json j;
        j["input"] = in.label;
        j["im"] = r.size;
        j["witness"] = pairs(r.witness.edges);
        text << j.dump(2) << '\n';
    } else {
        text << "im = " << r.size << "\nwitness:";
        for (auto [u, v] : r.witness.edges) text << " {" << u << ',' << v << '}';
        text << '\n';
    }
    emit(f, out, text.str());
    return 0;
}

int cmd_chordal(const std::string& spec, const CommonFlags& f, std::ostream& out) {
    const Input in = load_input(spec);
    const ChordalityResult r = chordality(require_graph(in, "chordal"));
    std::ostringstream text;
    if (f.json) {
        Json j;
        j["input"] = in.label;
        j["chordal"] = r.chordal;
        if (r.chordal)
            j["elimination_order"] = r.elimination_order;
        else
            j["induced_cycle"] = r.induced_cycle;
        text << j.dump(2) << '\n';
    } else {
        text << (r.chordal ? "true" : "false") << '\n';
        text << (r.chordal ? "elimination order:" : "induced cycle:");
        for (int v : r.chordal ? r.elimination_order : r.induced_cycle) text << ' ' << v;
        text << '\n';
    }
    emit(f, out, text.str());
    return 0;
}

int cmd_power(const std::string& spec, int d, const CommonFlags& f, std::ostream& out) {
    const Input in = load_input(spec);
    const Graph g = power(require_graph(in, "power"), d);
    emit(f, out, format_graph(g));
    return 0;
}

int cmd_betti(const std::string& spec, const CommonFlags& f, std::ostream& out) {
    const Input in = load_input(spec);
    EngineOptions e{Field::parse(f.field), f.threads};
    const BettiTable t = betti(in.ideal, f.method, e, f);
    std::ostringstream text;
    if (f.json) {
        Json j;
        j["input"] = in.label;
        j["method"] = f.method == "lcm" ? "lcm" : "hochster";
        j["table"] = Json::parse(t.to_json());
        text << j.dump(2) << '\n';
    } else {
        text << t.to_text();
        text << "entries:";
        for (const auto& [ij, b] : t.entries()) text << " (" << ij.first << ',' << ij.second << ',' << b << ')';
        text << "\nreg(R/I) = " << t.regularity() << '\n';
    }
    emit(f, out, text.str());
    return 0;
}

int cmd_export(const std::string& spec, const CommonFlags& f, std::ostream& out) {
    const Input in = load_input(spec);
    emit(f, out, macaulay2_script(in.ideal, Field::parse(f.field), in.label));
    return 0;
}

struct VerifyFlags {
    std::string campaign;
    std::optional<int> n_min, n_max, d_min, d_max, trials, d, k, percent;
    std::optional<std::string> family, graph;
    double max_seconds = 0;
    std::size_t max_instances = 0;
    bool timing = false;
};

const std::vector<std::string>& campaign_names() {
    static const std::vector<std::string> names{"path-formula", "cycle-theorem", "forest-theorem", "im-monotone",
                                                "conjecture",   "critical",      "reduction",      "ideal-lemmas",
                                                "engine",       "sunflower"};
    return names;
}

int cmd_verify(const VerifyFlags& v, const CommonFlags& f, std::ostream& out, std::ostream& err) {
    CampaignOptions o;
    o.engine.field = Field::parse(f.field);
    o.workers = f.threads;
    o.max_seconds = v.max_seconds;
    o.max_instances = v.max_instances;
    VerificationReport r;
    const std::string& c = v.campaign;
    if (c == "path-formula") {
        PathFormulaParams p;
        p.n_max = v.n_max.value_or(p.n_max);
        p.d_max = v.d_max.value_or(p.d_max);
        r = verify_path_formula(p, o);
    } else if (c == "cycle-theorem") {
        CycleTheoremParams p;
        p.n_min = v.n_min.value_or(p.n_min);
        p.n_max = v.n_max.value_or(p.n_max);
        p.d_min = v.d_min.value_or(p.d_min);
        p.d_max = v.d_max.value_or(p.d_max);
        r = verify_cycle_theorem(p, o);
    } else if (c == "forest-theorem") {
        ForestParams p;
        p.trials = v.trials.value_or(p.trials);
        p.n_max = v.n_max.value_or(p.n_max);
        p.seed = f.seed;
        r = verify_forest_theorem(p, o);
    } else if (c == "im-monotone") {
        ImMonotoneParams p;
        p.trials = v.trials.value_or(p.trials);
        p.n_max = v.n_max.value_or(p.n_max);
        p.d_max = v.d_max.value_or(p.d_max);
        p.seed = f.seed;
        if (v.percent) p.percents = {*v.percent};
        r = verify_im_monotone(p, o);
    } else if (c == "conjecture") {
        if (v.graph) {
            const Input in = load_input(*v.graph);
            r = verify_conjecture(require_graph(in, "verify conjecture"), v.d_max.value_or(0), in.label, o);
        } else {
            ConjectureFamilyParams p;
            p.family = v.family.value_or(p.family);
            p.trials = v.trials.value_or(p.trials);
            p.n_min = v.n_min.value_or(p.n_min);
            p.n_max = v.n_max.value_or(p.n_max);
            p.d_max = v.d_max.value_or(p.d_max);
            p.percent = v.percent.value_or(p.percent);
            p.seed = f.seed;
            r = verify_conjecture_family(p, o);
        }
    } else if (c == "critical" || c == "reduction") {
        const int d = v.d.value_or(2), k = v.k.value_or(2);
        r = c == "critical" ? verify_critical_case(d, k, o) : verify_reduction_sequences(d, k, o);
    } else if (c == "ideal-lemmas") {
        IdealLemmaParams p;
        p.identity_trials = v.trials.value_or(p.identity_trials);
        p.seed = f.seed;
        r = verify_ideal_lemmas(p, o);
    } else if (c == "engine") {
        EngineConsistencyParams p;
        p.trials = v.trials.value_or(p.trials);
        p.seed = f.seed;
        r = verify_engine_consistency(p, o);
    } else if (c == "sunflower") {
        r = verify_sunflower_example(o);
    } else {
        err << "unknown campaign '" << c << "'; available:";
        for (const auto& n : campaign_names()) err << ' ' << n;
        err << '\n';
        return 2;
    }
    const std::string json = r.to_json(v.timing) + "\n";
    if (!f.out_path.empty()) write_file(f.out_path, json);
    out << (f.json ? json : r.to_table());
    return r.passed() ? 0 : 1;
}

}  // namespace

std::string macaulay2_script(const MonomialIdeal& a, const Field& field, const std::string& label) {
    std::ostringstream s;
    const int n = std::max(1, a.ground());
    s << "-- " << label << '\n';
    s << "-- " << a.generator_count() << " generators in " << a.ground() << " variables\n";
    s << "R = " << (field.is_rational() ? std::string("QQ") : "ZZ/" + std::to_string(field.characteristic()))
      << "[x_1..x_" << n << "];\n";
    if (a.is_zero()) {
        s << "I = monomialIdeal(0_R);\n";
    } else {
        s << "I = monomialIdeal(";
        bool first = true;
        for (VertexSet g : a.generators()) {
            s << (first ? "" : ", ");
            first = false;
            if (g.empty()) {
                s << "1_R";
                continue;
            }
            bool inner = true;
            for (int v : g) {
                s << (inner ? "" : "*") << "x_" << v;
                inner = false;
            }
        }
        s << ");\n";
    }
    s << "print(\"reg(R/I) = \" | toString regularity comodule I);\n";
    s << "print betti res comodule I;\n";
    return s.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app("Regularity of edge ideals of graph powers", "edgereg");
    app.require_subcommand(1);
    CommonFlags f;
    std::string spec;
    int power_d = 1;
    VerifyFlags v;

    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("spec", spec, "Family spec (e.g. cycle:9@2), graph file or ideal file")->required();
        add_common(cmd, f);
    };
    auto* reg = app.add_subcommand("reg", "reg(R/I) and reg(I)");
    add_spec(reg);
    auto* im = app.add_subcommand("im", "Induced matching number with witness");
    add_spec(im);
    auto* chordal = app.add_subcommand("chordal", "Chordality with certificate");
    add_spec(chordal);
    auto* pw = app.add_subcommand("power", "Write the graph file of G^d");
    add_spec(pw);
    pw->add_option("--d", power_d, "Power")->check(CLI::PositiveNumber)->capture_default_str();
    auto* bt = app.add_subcommand("betti", "Graded Betti table of R/I");
    add_spec(bt);
    auto* ex = app.add_subcommand("export-m2", "Write a Macaulay2 cross-check script");
    add_spec(ex);

    auto* ver = app.add_subcommand("verify", "Run a verification campaign");
    ver->add_option("campaign", v.campaign, "Campaign name")->required();
    add_common(ver, f);
    ver->add_option("--n-min", v.n_min);
    ver->add_option("--n-max", v.n_max);
    ver->add_option("--d-min", v.d_min);
    ver->add_option("--d-max", v.d_max);
    ver->add_option("--trials", v.trials);
    ver->add_option("--d", v.d);
    ver->add_option("--k", v.k);
    ver->add_option("--percent", v.percent);
    ver->add_option("--family", v.family);
    ver->add_option("--graph", v.graph, "Single graph for the conjecture campaign");
    ver->add_option("--max-seconds", v.max_seconds, "Wall-clock budget (0 = none)");
    ver->add_option("--max-instances", v.max_instances, "Instance budget (0 = none)");
    ver->add_flag("--timing", v.timing, "Include elapsed time in the JSON report");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (reg->parsed()) return cmd_reg(spec, f, out);
        if (im->parsed()) return cmd_im(spec, f, out);
        if (chordal->parsed()) return cmd_chordal(spec, f, out);
        if (pw->parsed()) return cmd_power(spec, power_d, f, out);
        if (bt->parsed()) return cmd_betti(spec, f, out);
        if (ex->parsed()) return cmd_export(spec, f, out);
        if (ver->parsed()) return cmd_verify(v, f, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const CapacityError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace edgereg
