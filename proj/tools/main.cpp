#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nsp/corpus.hpp"
#include "nsp/io.hpp"
#include "nsp/layer_dp.hpp"
#include "nsp/oracle.hpp"
#include "nsp/solver.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    long ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration_cast<std::chrono::milliseconds>(now - start).count();
    }
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

nsp::GraphDocument load_document(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    nsp::DocFormat fmt;
    if (format == "edgelist") {
        fmt = nsp::DocFormat::EdgeList;
    } else if (format == "doc") {
        fmt = nsp::DocFormat::Structured;
    } else {
        fmt = nsp::sniff_format(text);
    }
    return nsp::parse_graph(text, fmt);
}

std::optional<long> report_ms(const Timer& timer, bool quiet) {
    if (quiet) return std::nullopt;
    return timer.ms();
}

std::vector<int> parse_widths(const std::string& csv) {
    std::vector<int> widths;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) widths.push_back(std::stoi(item));
    return widths;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"induced non-shortest uv-path solver"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "auto";
    bool quiet = false;
    int k = 1;
    int h = 2;
    uint64_t seed = 1;
    int n = 8;
    double p = 0.3;
    std::string widths_csv;
    int trials = 200;
    int max_n = 6;
    int bench_max_n = 40;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "input file, '-' for stdin");
        cmd->add_option("--format", format, "edgelist|doc (default: sniff)")
            ->check(CLI::IsMember({"auto", "edgelist", "doc"}));
        cmd->add_flag("--quiet", quiet, "suppress TIME lines and progress chatter");
    };

    CLI::App* cmd_nsp = app.add_subcommand("nsp", "decide whether a uv-NSP exists");
    add_input(cmd_nsp);
    CLI::App* cmd_exact = app.add_subcommand("exact-length", "induced uv-path of length d(u,v)+k");
    add_input(cmd_exact);
    cmd_exact->add_option("--k", k, "length excess over d(u,v)")->check(CLI::Range(0, 5));
    CLI::App* cmd_forest = app.add_subcommand("forest", "h-narrow path-forest query");
    add_input(cmd_forest);
    cmd_forest->set_help_flag("--help", "print usage");  // frees -h for the bound
    cmd_forest->add_option("--h,-h", h, "narrowness bound")->check(CLI::Range(1, 6));
    CLI::App* cmd_straighten =
        app.add_subcommand("straighten", "contract to an all-straight graph or find an NSP");
    add_input(cmd_straighten);
    CLI::App* cmd_oracle = app.add_subcommand("oracle", "exhaustive reference verdict");
    add_input(cmd_oracle);

    CLI::App* cmd_gen = app.add_subcommand("gen", "seeded instance generators");
    cmd_gen->require_subcommand(1);
    CLI::App* cmd_gnp = cmd_gen->add_subcommand("gnp", "Erdos-Renyi G(n,p)");
    cmd_gnp->add_option("--n", n, "vertex count")->required();
    cmd_gnp->add_option("--p", p, "edge probability")->required();
    cmd_gnp->add_option("--seed", seed, "PRNG seed");
    cmd_gnp->add_option("--format", format, "edgelist|doc")
        ->check(CLI::IsMember({"auto", "edgelist", "doc"}));
    CLI::App* cmd_layered = cmd_gen->add_subcommand("layered", "random layered instance");
    cmd_layered->add_option("--widths", widths_csv, "layer widths, e.g. 1,2,2,1")->required();
    cmd_layered->add_option("--p", p, "inter-layer edge probability")->required();
    cmd_layered->add_option("--seed", seed, "PRNG seed");
    cmd_layered->add_option("--format", format, "edgelist|doc")
        ->check(CLI::IsMember({"auto", "edgelist", "doc"}));

    CLI::App* cmd_selftest = app.add_subcommand("selftest", "oracle equivalence suites");
    cmd_selftest->add_option("--max-n", max_n, "exhaustive sweep up to this vertex count")
        ->check(CLI::Range(2, 6));
    cmd_selftest->add_option("--trials", trials, "randomized instances per corpus");
    cmd_selftest->add_option("--seed", seed, "corpus seed");
    cmd_selftest->add_flag("--quiet", quiet, "suppress timing output");

    CLI::App* cmd_bench = app.add_subcommand("bench", "timed layered families");
    cmd_bench->add_option("--max-n", bench_max_n, "largest instance size");
    cmd_bench->add_option("--seed", seed, "instance seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_nsp->parsed()) {
            Timer timer;
            nsp::GraphDocument doc = load_document(input, format);
            nsp::Graph g = doc.to_graph();
            nsp::NspOutcome outcome = nsp::find_nsp(g, doc.u, doc.v);
            int dist = nsp::distances_from(g, doc.u)[doc.v];
            std::cout << nsp::format_report_nsp(dist, outcome, report_ms(timer, quiet));
            return outcome.has_nsp() ? kExitYes : kExitNo;
        }
        if (cmd_exact->parsed()) {
            Timer timer;
            nsp::GraphDocument doc = load_document(input, format);
            nsp::Graph g = doc.to_graph();
            auto path = nsp::exact_length_path(g, doc.u, doc.v, k);
            int dist = nsp::distances_from(g, doc.u)[doc.v];
            std::cout << nsp::format_report_exact(dist, path, report_ms(timer, quiet));
            return path ? kExitYes : kExitNo;
        }
        if (cmd_forest->parsed()) {
            Timer timer;
            nsp::GraphDocument doc = load_document(input, format);
            nsp::Graph g = doc.to_graph();
            if (doc.targets.empty()) {
                throw std::invalid_argument("forest: document lists no targets");
            }
            int root = doc.root.value_or(doc.u);
            nsp::Altitude alt = nsp::bfs_altitude(g, root);
            auto forest = nsp::find_path_forest(g, alt, doc.targets, h);
            std::cout << nsp::format_report_forest(forest, report_ms(timer, quiet));
            return forest ? kExitYes : kExitNo;
        }
        if (cmd_straighten->parsed()) {
            Timer timer;
            nsp::GraphDocument doc = load_document(input, format);
            nsp::Graph g = doc.to_graph();
            nsp::StraightenResult result = nsp::straighten(g, doc.u, doc.v);
            int dist = nsp::distances_from(g, doc.u)[doc.v];
            std::cout << nsp::format_report_straighten(result, dist, report_ms(timer, quiet));
            return std::holds_alternative<nsp::Path>(result) ? kExitYes : kExitNo;
        }
        if (cmd_oracle->parsed()) {
            Timer timer;
            nsp::GraphDocument doc = load_document(input, format);
            nsp::Graph g = doc.to_graph();
            std::vector<int> lengths = nsp::induced_length_set(g, doc.u, doc.v);
            bool yes = nsp::oracle_has_nsp(g, doc.u, doc.v);
            int dist = lengths.empty() ? nsp::kUnreachable : lengths.front();
            std::cout << nsp::format_report_oracle(dist, yes, lengths, report_ms(timer, quiet));
            return yes ? kExitYes : kExitNo;
        }
        if (cmd_gnp->parsed() || cmd_layered->parsed()) {
            nsp::GraphDocument doc = cmd_gnp->parsed()
                                         ? nsp::gen_gnp(n, p, seed)
                                         : nsp::gen_layered(parse_widths(widths_csv), p, seed);
            nsp::DocFormat fmt =
                format == "edgelist" ? nsp::DocFormat::EdgeList : nsp::DocFormat::Structured;
            std::cout << nsp::serialize(doc, fmt);
            return kExitYes;
        }
        if (cmd_selftest->parsed()) {
            bool all_ok = true;
            auto report = [&](const std::string& name, const nsp::CorpusStats& stats) {
                bool ok = stats.clean();
                all_ok = all_ok && ok;
                std::cout << "SELFTEST " << name << " " << (ok ? "pass" : "fail")
                          << " instances=" << stats.instances
                          << " verdict_mismatches=" << stats.verdict_mismatches
                          << " cert_failures=" << stats.cert_failures
                          << " straighten_failures=" << stats.straighten_failures << "\n";
                if (!ok && !stats.first_failure.empty()) {
                    std::cout << "SELFTEST " << name << " first-failure " << stats.first_failure
                              << "\n";
                }
            };
            for (int size = 2; size <= max_n; ++size) {
                report("exhaustive-n" + std::to_string(size),
                       nsp::exhaustive_nsp_sweep(size, false));
            }
            report("random-gnp", nsp::random_gnp_sweep(trials, seed, true));
            report("random-layered", nsp::random_layered_sweep(trials / 5 + 1, seed, true));
            return all_ok ? kExitYes : kExitNo;
        }
        if (cmd_bench->parsed()) {
            nsp::BenchStats stats = nsp::bench_sweep(bench_max_n, seed);
            std::cout << stats.lines;
            std::cout << "BENCH runs=" << stats.runs << " malformed=" << stats.malformed
                      << " seconds=" << static_cast<long>(stats.seconds * 1000) / 1000.0 << "\n";
            return stats.malformed == 0 ? kExitYes : kExitError;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
