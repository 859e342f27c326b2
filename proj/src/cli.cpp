#include "mcb/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcb/complex.hpp"
#include "mcb/error.hpp"
#include "mcb/fixtures.hpp"
#include "mcb/graph.hpp"
#include "mcb/mcb.hpp"
#include "mcb/mhb.hpp"
#include "mcb/oracle.hpp"
#include "mcb/tight.hpp"

namespace mcb::cli {

namespace {

using Json = nlohmann::ordered_json;
using Input = std::variant<Graph, SimplicialComplex>;

constexpr std::size_t kTextCycleCap = 50;

struct RunConfig {
    std::string input;
    std::string format = "text";
    std::string engine;
    std::string mcb_engine = "earliest";
    bool auto_close = false;
    std::uint64_t seed = 1;
    std::size_t graphs = 20;
    std::size_t complexes = 10;
    std::size_t max_n = 10;
    bool timing = false;
    std::string oracle_mode;
    std::string out_dir;
};

Input load_input(const std::string& path, bool auto_close) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::string text = buffer.str();

    std::istringstream lines(text);
    std::string line;
    std::string keyword;
    while (std::getline(lines, line)) {
        std::istringstream ss(line);
        if (ss >> keyword && !keyword.starts_with('#')) break;
        keyword.clear();
    }

    std::istringstream in(text);
    if (keyword == "graph") return parse_graph(in);
    if (keyword == "complex") return parse_complex(in, auto_close);
    throw ParseError(1, "unrecognized input: expected a 'graph' or 'complex' header");
}

Graph as_graph(const Input& input) {
    if (const auto* g = std::get_if<Graph>(&input)) return *g;
    return skeleton(std::get<SimplicialComplex>(input));
}

SimplicialComplex as_complex_input(const Input& input) {
    if (const auto* k = std::get_if<SimplicialComplex>(&input)) return *k;
    return as_complex(std::get<Graph>(input));
}

Json cycles_json(const std::vector<Cycle>& cycles) {
    Json arr = Json::array();
    for (const auto& c : cycles) {
        Json item;
        item["edges"] = c.edge_list();
        item["weight"] = c.weight;
        arr.push_back(std::move(item));
    }
    return arr;
}

void cycles_text(std::ostream& out, const std::vector<Cycle>& cycles) {
    const std::size_t shown = std::min(cycles.size(), kTextCycleCap);
    for (std::size_t i = 0; i < shown; ++i) {
        out << "  [" << i << "] weight " << cycles[i].weight << " edges";
        for (auto e : cycles[i].edge_list()) out << ' ' << e;
        out << '\n';
    }
    if (shown < cycles.size()) out << "  ... " << cycles.size() - shown << " more cycles not shown (use --format json)\n";
}

void emit_basis(std::ostream& out, const std::string& format, std::string_view engine, const char* rank_key,
                std::size_t rank_value, Weight total, const std::vector<Cycle>& cycles) {
    if (format == "json") {
        Json j;
        j["engine"] = engine;
        j[rank_key] = rank_value;
        j["total_weight"] = total;
        j["cycles"] = cycles_json(cycles);
        out << j.dump(2) << '\n';
        return;
    }
    out << "engine: " << engine << '\n' << rank_key << ": " << rank_value << '\n' << "total_weight: " << total << '\n';
    out << "cycles:\n";
    cycles_text(out, cycles);
}

int cmd_mcb(const RunConfig& cfg, std::ostream& out) {
    const auto g = as_graph(load_input(cfg.input, cfg.auto_close));
    const auto engine = parse_mcb_engine(cfg.engine.empty() ? "earliest" : cfg.engine);
    const auto report = minimum_cycle_basis(g, *engine);
    emit_basis(out, cfg.format, engine_name(report.engine), "nu", report.cycles.size(), report.total_weight, report.cycles);
    return kOk;
}

int cmd_mhb(const RunConfig& cfg, std::ostream& out) {
    const auto k = as_complex_input(load_input(cfg.input, cfg.auto_close));
    const auto engine = parse_mhb_engine(cfg.engine.empty() ? "tight" : cfg.engine);
    const auto report = minimum_homology_basis(k, *engine, *parse_mcb_engine(cfg.mcb_engine));
    emit_basis(out, cfg.format, engine_name(report.engine), "beta1", report.cycles.size(), report.total_weight,
               report.cycles);
    return kOk;
}

int cmd_tight(const RunConfig& cfg, std::ostream& out) {
    const auto g = as_graph(load_input(cfg.input, cfg.auto_close));
    const auto tight = enumerate_tight_cycles(g);
    if (cfg.format == "text") {
        out << "count: " << tight.size() << "\ntotal_length: " << tight.total_length << "\ncycles:\n";
        cycles_text(out, tight.cycles);
        return kOk;
    }
    Json j;
    j["count"] = tight.size();
    j["total_length"] = tight.total_length;
    j["cycles"] = cycles_json(tight.cycles);
    out << j.dump(2) << '\n';
    return kOk;
}

int cmd_betti(const RunConfig& cfg, std::ostream& out) {
    const auto k = as_complex_input(load_input(cfg.input, cfg.auto_close));
    const auto h = homology_profile(k);
    if (cfg.format == "json") {
        Json j;
        j["beta0"] = h.beta0;
        j["beta1"] = h.beta1;
        j["boundary_rank"] = h.boundary_rank;
        j["cycle_rank"] = h.cycle_rank;
        j["simplices"] = k.simplex_count();
        out << j.dump(2) << '\n';
    } else {
        out << "beta0=" << h.beta0 << " beta1=" << h.beta1 << '\n';
    }
    return kOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.oracle_mode == "fixtures") {
        if (cfg.out_dir.empty()) {
            err << "oracle fixtures: --out is required\n";
            return kInputError;
        }
        const auto all = fixtures::generate_fixtures(cfg.seed);
        fixtures::write_fixtures(cfg.out_dir, all);
        out << "wrote " << all.size() << " fixtures to " << cfg.out_dir << " (oracle version " << oracle::kVersion
            << ")\n";
        return kOk;
    }
    if (cfg.input.empty()) {
        err << "oracle " << cfg.oracle_mode << ": an input file is required\n";
        return kInputError;
    }
    const auto input = load_input(cfg.input, cfg.auto_close);
    if (cfg.oracle_mode == "mcb") {
        const auto r = oracle::brute_mcb(as_graph(input));
        emit_basis(out, cfg.format, "oracle", "nu", r.cycles.size(), r.total_weight, r.cycles);
    } else if (cfg.oracle_mode == "mhb") {
        const auto r = oracle::brute_mhb(as_complex_input(input));
        emit_basis(out, cfg.format, "oracle", "beta1", r.cycles.size(), r.total_weight, r.cycles);
    } else {
        const auto t = oracle::brute_tight_cycles(as_graph(input));
        Json j;
        j["count"] = t.size();
        j["total_length"] = t.total_length;
        j["cycles"] = cycles_json(t.cycles);
        out << j.dump(2) << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------

std::vector<Weight> weights_of(const std::vector<Cycle>& cycles) {
    std::vector<Weight> w;
    for (const auto& c : cycles) w.push_back(c.weight);
    std::sort(w.begin(), w.end());
    return w;
}

template <class F>
auto timed(F&& f, double& ms) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

struct BenchRow {
    std::string label;
    std::vector<std::string> names;
    std::vector<std::vector<Cycle>> bases;
    std::vector<Weight> totals;
    std::vector<double> ms;
};

void dump_bases(std::ostream& out, const BenchRow& row) {
    for (std::size_t i = 0; i < row.names.size(); ++i) {
        Json j;
        j["engine"] = row.names[i];
        j["total_weight"] = row.totals[i];
        j["cycles"] = cycles_json(row.bases[i]);
        out << j.dump() << '\n';
    }
}

// Returns true when every engine matched the first one on total and weight multiset.
bool print_row(std::ostream& out, const BenchRow& row, bool timing) {
    bool agree = true;
    for (std::size_t i = 1; i < row.names.size(); ++i)
        agree = agree && row.totals[i] == row.totals[0] && weights_of(row.bases[i]) == weights_of(row.bases[0]);
    out << row.label;
    for (std::size_t i = 0; i < row.names.size(); ++i) out << ' ' << row.names[i] << '=' << row.totals[i];
    if (timing) {
        out << " ms:";
        for (std::size_t i = 0; i < row.names.size(); ++i)
            out << ' ' << row.names[i] << '=' << std::fixed << std::setprecision(3) << row.ms[i];
        out.unsetf(std::ios::floatfield);
    }
    out << (agree ? " agree" : " DISAGREE") << '\n';
    if (!agree) dump_bases(out, row);
    return agree;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
    fixtures::Rng rng(cfg.seed);
    fixtures::RandomGraphSpec spec;
    spec.max_n = std::max<std::size_t>(cfg.max_n, 3);
    const oracle::OracleBudget budget;

    out << "# bench seed=" << cfg.seed << " graphs=" << cfg.graphs << " complexes=" << cfg.complexes
        << " max_n=" << spec.max_n << '\n';
    std::size_t disagreements = 0;

    for (std::size_t i = 0; i < cfg.graphs; ++i) {
        const auto g = fixtures::random_connected_graph(rng, spec);
        BenchRow row;
        row.label = "graph " + std::to_string(i) + " n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) +
                    " nu=" + std::to_string(cyclomatic_number(g));
        double tight_ms = 0;
        const auto tight = timed([&] { return enumerate_tight_cycles(g); }, tight_ms);
        for (auto engine : {McbEngine::earliest, McbEngine::depina, McbEngine::kavitha}) {
            double ms = 0;
            auto r = timed([&] { return minimum_cycle_basis(g, tight, engine); }, ms);
            row.names.emplace_back(engine_name(engine));
            row.totals.push_back(r.total_weight);
            row.bases.push_back(std::move(r.cycles));
            row.ms.push_back(ms + tight_ms);
        }
        if (cyclomatic_number(g) <= budget.max_cycle_rank) {
            double ms = 0;
            auto r = timed([&] { return oracle::brute_mcb(g, budget); }, ms);
            row.names.emplace_back("oracle");
            row.totals.push_back(r.total_weight);
            row.bases.push_back(std::move(r.cycles));
            row.ms.push_back(ms);
        }
        if (!print_row(out, row, cfg.timing)) ++disagreements;
    }

    const std::size_t complex_n = std::min<std::size_t>(spec.max_n, 8);
    for (std::size_t i = 0; i < cfg.complexes; ++i) {
        const auto k = fixtures::random_complex(rng, complex_n);
        const auto h = homology_profile(k);
        BenchRow row;
        row.label = "complex " + std::to_string(i) + " n=" + std::to_string(k.n()) + " m=" + std::to_string(k.m()) +
                    " t=" + std::to_string(k.triangle_count()) + " beta1=" + std::to_string(h.beta1);
        for (auto engine : {MhbEngine::tight, MhbEngine::via_mcb}) {
            double ms = 0;
            auto r = timed([&] { return minimum_homology_basis(k, engine); }, ms);
            row.names.emplace_back(engine_name(engine));
            row.totals.push_back(r.total_weight);
            row.bases.push_back(std::move(r.cycles));
            row.ms.push_back(ms);
        }
        if (h.cycle_rank <= budget.max_cycle_rank) {
            double ms = 0;
            auto r = timed([&] { return oracle::brute_mhb(k, budget); }, ms);
            row.names.emplace_back("oracle");
            row.totals.push_back(r.total_weight);
            row.bases.push_back(std::move(r.cycles));
            row.ms.push_back(ms);
        }
        if (!print_row(out, row, cfg.timing)) ++disagreements;
    }

    out << "summary: " << cfg.graphs + cfg.complexes << " instances, " << disagreements << " disagreements\n";
    return disagreements == 0 ? kOk : kInternalError;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum cycle bases and minimum 1-homology bases over Z2", "cyclebasis"};
    app.require_subcommand(1);
    RunConfig cfg;

    const std::vector<std::string> formats{"text", "json"};

    auto* mcb = app.add_subcommand("mcb", "Minimum cycle basis of a graph (or of a complex's 1-skeleton)");
    mcb->add_option("input", cfg.input, "graph or complex file")->required();
    mcb->add_option("--engine", cfg.engine, "earliest | depina | kavitha")
        ->check(CLI::IsMember({"earliest", "depina", "kavitha"}));
    mcb->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
    mcb->add_flag("--auto-close", cfg.auto_close, "add missing triangle edges with weight 1");

    auto* mhb = app.add_subcommand("mhb", "Minimum homology basis of a simplicial complex");
    mhb->add_option("input", cfg.input, "complex or graph file")->required();
    mhb->add_option("--engine", cfg.engine, "tight | via-mcb")->check(CLI::IsMember({"tight", "via-mcb"}));
    mhb->add_option("--mcb-engine", cfg.mcb_engine, "cycle basis engine used by via-mcb")
        ->check(CLI::IsMember({"earliest", "depina", "kavitha"}));
    mhb->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
    mhb->add_flag("--auto-close", cfg.auto_close, "add missing triangle edges with weight 1");

    auto* tight = app.add_subcommand("tight-cycles", "Sorted list of tight (isometric) cycles");
    tight->add_option("input", cfg.input, "graph or complex file")->required();
    tight->add_option("--format", cfg.format, "json (default) | text")->check(CLI::IsMember(formats));
    tight->add_flag("--auto-close", cfg.auto_close, "add missing triangle edges with weight 1");

    auto* betti = app.add_subcommand("betti", "Betti numbers beta0 and beta1");
    betti->add_option("input", cfg.input, "complex or graph file")->required();
    betti->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
    betti->add_flag("--auto-close", cfg.auto_close, "add missing triangle edges with weight 1");

    auto* bench = app.add_subcommand("bench", "Cross-check all engines on seeded random instances");
    bench->add_option("--seed", cfg.seed, "generator seed");
    bench->add_option("--graphs", cfg.graphs, "number of random graphs");
    bench->add_option("--complexes", cfg.complexes, "number of random complexes");
    bench->add_option("--max-n", cfg.max_n, "largest vertex count");
    bench->add_flag("--timing", cfg.timing, "append wall-clock times (output is then not reproducible)");

    auto* orc = app.add_subcommand("oracle", "Brute-force references and fixture regeneration");
    orc->group("");
    orc->add_option("mode", cfg.oracle_mode, "mcb | mhb | tight | fixtures")
        ->required()
        ->check(CLI::IsMember({"mcb", "mhb", "tight", "fixtures"}));
    orc->add_option("input", cfg.input, "input file (mcb, mhb, tight)");
    orc->add_option("--out", cfg.out_dir, "fixture directory (fixtures)");
    orc->add_option("--seed", cfg.seed, "generator seed (fixtures)");
    orc->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
    orc->add_flag("--auto-close", cfg.auto_close, "add missing triangle edges with weight 1");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (mcb->parsed()) return cmd_mcb(cfg, out);
        if (mhb->parsed()) return cmd_mhb(cfg, out);
        if (tight->parsed()) {
            if (tight->count("--format") == 0) cfg.format = "json";
            return cmd_tight(cfg, out);
        }
        if (betti->parsed()) return cmd_betti(cfg, out);
        if (bench->parsed()) return cmd_bench(cfg, out);
        if (orc->parsed()) return cmd_oracle(cfg, out, err);
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const ParseError& e) {
        err << cfg.input << ": " << e.what() << '\n';
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kInputError;
}

} // namespace mcb::cli
