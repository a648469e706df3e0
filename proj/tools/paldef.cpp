// paldef: palindromic defect and complexity analyzer for finite words and
// prefixes of generated infinite words.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "paldef/simple_path_graph.hpp"
#include "paldef/suite.hpp"
#include "paldef/verifier.hpp"

namespace {

struct SourceArgs {
    std::string builtin;
    std::string word;
    std::string config;
};

void add_source_options(CLI::App* cmd, SourceArgs& args) {
    auto* b = cmd->add_option("--builtin", args.builtin,
                              "builtin word: ab-omega, fibonacci, rote, ternary-oddity, thue-morse");
    auto* w = cmd->add_option("--word", args.word, "explicit finite word");
    auto* c = cmd->add_option("--config", args.config, "word-source config file (JSON)");
    b->excludes(w)->excludes(c);
    w->excludes(c);
}

paldef::WordSource make_source(const SourceArgs& args) {
    if (!args.builtin.empty()) return paldef::WordSource::builtin(args.builtin);
    if (!args.word.empty())
        return paldef::WordSource::explicit_word(paldef::Word::parse(args.word));
    if (!args.config.empty()) return paldef::WordSource::from_config_file(args.config);
    throw paldef::ConfigError("no word source given (use --builtin, --word, or --config)");
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw paldef::ConfigError("cannot write " + path);
    out << payload;
}

int run_analyze(const SourceArgs& src_args, long long L_opt, long long n_opt,
                const std::string& format, const std::string& out_path,
                const paldef::AnalysisOptions& base) {
    const paldef::WordSource source = make_source(src_args);

    paldef::AnalysisOptions options = base;
    if (L_opt >= 0) {
        options.L = static_cast<std::size_t>(L_opt);
    } else if (!src_args.word.empty()) {
        options.L = src_args.word.size();
    }
    if (n_opt >= 0) {
        options.n_max = static_cast<std::size_t>(n_opt);
    } else {
        options.n_max = std::min<std::size_t>(options.L > 0 ? options.L - 1 : 0, 100);
    }
    if (options.n_max + 1 > options.L)
        throw paldef::ConfigError("need n_max + 1 <= L");

    const paldef::Analysis a = paldef::analyze(source, options);
    if (format == "json") {
        write_output(out_path, paldef::analysis_to_json(a) + "\n");
    } else if (format == "csv") {
        const paldef::Word prefix = source.prefix(options.L);
        const paldef::FactorIndex fidx = paldef::FactorIndex::build(prefix, options.n_max);
        const paldef::PalIndex pidx = paldef::PalIndex::build(prefix);
        if (out_path.empty()) {
            std::ostringstream buf;
            buf << "# defect profile\n";
            pidx.write_defect_csv(buf);
            buf << "# series\n";
            paldef::write_series_csv(fidx, pidx, options.n_max, buf);
            buf << "# factors\n";
            fidx.write_complexity_csv(buf);
            std::cout << buf.str();
        } else {
            std::ofstream d(out_path + ".defect.csv", std::ios::binary);
            std::ofstream s(out_path + ".series.csv", std::ios::binary);
            std::ofstream f(out_path + ".factors.csv", std::ios::binary);
            if (!d || !s || !f) throw paldef::ConfigError("cannot write CSV files at " + out_path);
            pidx.write_defect_csv(d);
            paldef::write_series_csv(fidx, pidx, options.n_max, s);
            fidx.write_complexity_csv(f);
        }
    } else {
        throw paldef::ConfigError("analyze supports --format json|csv");
    }
    return 0;
}

int run_graph(const SourceArgs& src_args, long long L_opt, std::size_t n,
              long long margin_opt, const std::string& format, const std::string& out_path) {
    const paldef::WordSource source = make_source(src_args);
    std::size_t L = L_opt >= 0 ? static_cast<std::size_t>(L_opt)
                               : (!src_args.word.empty() ? src_args.word.size() : 10000);
    const paldef::Word prefix = source.prefix(L);
    if (prefix.size() < 2 || n + 1 > prefix.size() - 1)
        throw paldef::ConfigError("graph: need n + 2 <= L");
    const std::size_t n_max = std::min<std::size_t>(prefix.size() - 1, std::max<std::size_t>(n + 1, 32));
    const paldef::FactorIndex fidx = paldef::FactorIndex::build(prefix, n_max);
    std::optional<std::size_t> margin;
    if (margin_opt >= 0) margin = static_cast<std::size_t>(margin_opt);
    const paldef::SimplePathGraph g = paldef::SimplePathGraph::build(fidx, n, margin);
    if (format == "dot")
        write_output(out_path, paldef::to_dot(g));
    else if (format == "json")
        write_output(out_path, paldef::graph_to_json(g) + "\n");
    else
        throw paldef::ConfigError("graph supports --format dot|json");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"palindromic defect, complexity, and Brlek-Reutenauer equality checks"};
    app.require_subcommand(1);

    SourceArgs analyze_src, graph_src;
    long long analyze_L = -1, analyze_n = -1;
    std::string analyze_format = "json", analyze_out;
    paldef::AnalysisOptions analysis_options;
    long long reduce_M = -1;
    bool no_reduction = false;

    auto* analyze = app.add_subcommand("analyze", "full defect / T-series report for one prefix");
    add_source_options(analyze, analyze_src);
    analyze->add_option("-L,--length", analyze_L, "prefix length");
    analyze->add_option("-n,--n-max", analyze_n, "largest n of the T series");
    analyze->add_option("--threshold", analysis_options.divergence_threshold,
                        "divergence threshold for the verdict");
    analyze->add_option("--reduce-M", reduce_M, "force the reduction cover length M");
    analyze->add_flag("--no-reduction", no_reduction, "skip the periodic reduction");
    analyze->add_option("--format", analyze_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    analyze->add_option("--out", analyze_out, "output path (csv: stem for .defect/.series/.factors)");

    long long graph_L = -1, graph_margin = -1;
    std::size_t graph_n = 2;
    std::string graph_format = "dot", graph_out;
    auto* graph = app.add_subcommand("graph", "simple-path graph G_n with the zero test");
    add_source_options(graph, graph_src);
    graph->add_option("-L,--length", graph_L, "prefix length (default 10000 for generators)");
    graph->add_option("-n,--n", graph_n, "factor length n")->required();
    graph->add_option("--margin", graph_margin, "path length margin");
    graph->add_option("--format", graph_format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));
    graph->add_option("--out", graph_out, "output path");

    std::string only_tag;
    auto* suite = app.add_subcommand("suite", "run the built-in verification battery");
    suite->add_option("--only", only_tag,
                      "run a single scenario: oracle, ab-omega, rote, ternary, periodic, "
                      "graph, squares, reduction, divergence, oddity");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            analysis_options.run_reduction = !no_reduction;
            if (reduce_M >= 0) analysis_options.reduction_M = static_cast<std::size_t>(reduce_M);
            return run_analyze(analyze_src, analyze_L, analyze_n, analyze_format, analyze_out,
                               analysis_options);
        }
        if (graph->parsed())
            return run_graph(graph_src, graph_L, graph_n, graph_margin, graph_format, graph_out);
        if (suite->parsed()) {
            const auto rows = paldef::suite::run(only_tag);
            if (rows.empty()) {
                std::cerr << "unknown scenario tag: " << only_tag << "\n";
                return 2;
            }
            std::cout << paldef::suite::format_table(rows);
            for (const auto& row : rows)
                if (!row.pass) return 1;
            return 0;
        }
    } catch (const paldef::GenerationError& e) {
        std::cerr << "generation error: " << e.what() << "\n";
        return 3;
    } catch (const paldef::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
