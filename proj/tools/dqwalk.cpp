#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "dqwalk/dqwalk.hpp"

namespace {

using namespace dqwalk;

int usage_error(const std::string& message)
{
    std::cerr << "error: " << message << '\n';
    return 2;
}

WalkMode mode_from_name(const std::string& name)
{
    if (name == "classical")
        return WalkMode::classical;
    if (name == "reduced")
        return WalkMode::reduced;
    return WalkMode::quantum;
}

std::optional<std::size_t> threads_from_env()
{
    const char* text = std::getenv("DQWALK_THREADS");
    if (text == nullptr || *text == '\0')
        return std::nullopt;
    std::size_t value = 0;
    const char* end = text + std::strlen(text);
    auto [ptr, ec] = std::from_chars(text, end, value);
    if (ec != std::errc() || ptr != end)
        throw std::runtime_error("DQWALK_THREADS must be a non-negative integer");
    return value;
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    file << text;
    if (!file.good())
        throw std::runtime_error("failed writing " + path.string());
}

std::string distribution_filename(WalkMode mode, std::size_t n, std::size_t t,
                                  std::size_t loop_length,
                                  std::optional<PairingMode> pairing,
                                  std::optional<std::uint64_t> seed)
{
    std::string name = "dist_";
    name += to_string(mode);
    name += "_n" + std::to_string(n);
    name += "_t" + std::to_string(t);
    if (loop_length > 1)
        name += "_L" + std::to_string(loop_length);
    if (pairing && *pairing == PairingMode::random)
        name += "_random_seed" + std::to_string(seed.value_or(0));
    return name + ".csv";
}

struct RunOpts {
    std::string mode = "quantum";
    std::size_t n = 2;
    std::size_t t = 100;
    std::string pairing = "natural";
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t loop_length = 1;
    std::string out_dir = ".";
};

int cmd_run(const RunOpts& opts)
{
    const WalkMode mode = mode_from_name(opts.mode);
    const bool random = opts.pairing == "random";
    if (random && mode != WalkMode::quantum)
        return usage_error("--pairing random applies to --mode quantum only");
    if (random && !opts.seed_given)
        return usage_error("--pairing random requires --seed");
    if (opts.seed_given && !random)
        return usage_error("--seed requires --pairing random");
    if (opts.loop_length > 1 && mode != WalkMode::quantum)
        return usage_error("--loop-length above 1 applies to --mode quantum only");

    PositionDistribution dist;
    switch (mode) {
    case WalkMode::classical:
        dist = classical_distribution(opts.n, opts.t);
        break;
    case WalkMode::reduced:
        dist = position_distribution(evolve_reduced(opts.n, opts.t));
        break;
    case WalkMode::quantum: {
        WalkConfig config;
        config.n = opts.n;
        config.steps = opts.t;
        config.pairing = random ? PairingMode::random : PairingMode::natural;
        config.seed = opts.seed;
        config.loop_length = opts.loop_length;
        dist = position_distribution(evolve(config));
        break;
    }
    }

    const std::filesystem::path out_dir(opts.out_dir);
    std::filesystem::create_directories(out_dir);
    const std::optional<PairingMode> pairing =
        mode == WalkMode::quantum
            ? std::optional<PairingMode>(random ? PairingMode::random
                                                : PairingMode::natural)
            : std::nullopt;
    const std::optional<std::uint64_t> seed =
        random ? std::optional<std::uint64_t>(opts.seed) : std::nullopt;
    write_file(out_dir / distribution_filename(mode, opts.n, opts.t,
                                               opts.loop_length, pairing, seed),
               distribution_csv(dist));

    const Moments m = moments(dist);
    std::string line = "mode=";
    line += to_string(mode);
    line += " n=" + std::to_string(opts.n);
    line += " t=" + std::to_string(opts.t);
    if (opts.loop_length > 1)
        line += " L=" + std::to_string(opts.loop_length);
    if (pairing) {
        line += " pairing=";
        line += to_string(*pairing);
    }
    if (seed)
        line += " seed=" + std::to_string(*seed);
    line += " mean=" + format_double(m.mean);
    line += " variance=" + format_double(m.variance);
    if (mode != WalkMode::classical && opts.n >= 2 && opts.loop_length == 1) {
        const IntervalBound bound = interval_bounds(opts.n, opts.t);
        line += " interval_lo=" + format_double(bound.lo);
        line += " interval_hi=" + format_double(bound.hi);
        line += " tail_mass=" + format_double(tail_mass(dist, bound));
    }
    std::cout << line << '\n';
    return 0;
}

struct SweepOpts {
    std::vector<std::size_t> n_values = {2, 4, 8, 16, 32};
    std::size_t t = 100;
    std::vector<std::string> mode_names = {"classical", "quantum"};
    std::string pairing = "natural";
    std::vector<std::uint64_t> seeds;
    bool distributions = false;
    std::size_t threads = 0;
    bool threads_given = false;
    std::string out_dir = ".";
};

int cmd_sweep(const SweepOpts& opts)
{
    if (opts.n_values.empty())
        return usage_error("--n needs at least one coin dimension");
    if (opts.mode_names.empty())
        return usage_error("--modes needs at least one mode");
    const bool random = opts.pairing == "random";
    if (random && opts.seeds.empty())
        return usage_error("--pairing random requires --seeds");
    if (!opts.seeds.empty() && !random)
        return usage_error("--seeds requires --pairing random");

    SweepRequest request;
    request.n_values = opts.n_values;
    request.t = opts.t;
    for (const std::string& name : opts.mode_names)
        request.modes.push_back(mode_from_name(name));
    request.pairing = random ? PairingMode::random : PairingMode::natural;
    request.seeds = opts.seeds;
    request.keep_distributions = opts.distributions;
    if (opts.threads_given)
        request.threads = opts.threads;
    else
        request.threads = threads_from_env().value_or(0);

    const std::vector<SweepRecord> records = sweep(request);

    const std::filesystem::path out_dir(opts.out_dir);
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path summary = out_dir / "sweep.csv";
    write_file(summary, sweep_csv(records));
    if (opts.distributions)
        for (const SweepRecord& record : records)
            write_file(out_dir / distribution_filename(record.mode, record.n,
                                                       record.t, 1, record.pairing,
                                                       record.seed),
                       distribution_csv(*record.distribution));

    std::cout << "wrote " << summary.string() << " (" << records.size()
              << " records)\n";
    return 0;
}

int cmd_verify(const std::string& depth_name)
{
    const VerifyDepth depth =
        depth_name == "full" ? VerifyDepth::full : VerifyDepth::quick;
    const std::vector<CheckResult> results = run_verification(depth);
    std::size_t failed = 0;
    for (const CheckResult& r : results) {
        if (!r.passed)
            ++failed;
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name
                  << " measured=" << format_double(r.measured)
                  << " threshold=" << format_double(r.threshold);
        if (!r.detail.empty())
            std::cout << " (" << r.detail << ")";
        std::cout << '\n';
    }
    std::cout << (results.size() - failed) << "/" << results.size()
              << " checks passed\n";
    return failed == 0 ? 0 : 1;
}

int cmd_check(const std::string& input)
{
    std::string text;
    if (input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin),
                    std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(input, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot read " + input);
        text.assign(std::istreambuf_iterator<char>(file),
                    std::istreambuf_iterator<char>());
    }

    const DirectedGraph graph = parse_edge_list(text);
    std::cout << "vertices=" << graph.vertex_count
              << " edges=" << graph.edges.size() << '\n';
    const RealizabilityReport report = check_unitary_realizable(graph);
    for (const DegreeImbalance& v : report.violations)
        std::cout << "vertex " << v.vertex << ": in " << v.in_degree << " out "
                  << v.out_degree << '\n';
    std::cout << (report.realizable ? "realizable" : "not realizable") << '\n';
    return report.realizable ? 0 : 1;
}

struct GenOpts {
    std::size_t n = 2;
    std::size_t x_max = 10;
    std::size_t loop_length = 1;
};

int cmd_gen(const GenOpts& opts)
{
    const DirectedGraph graph =
        build_line_with_loops({opts.n, opts.x_max, opts.loop_length});
    std::cout << write_edge_list(graph);
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"directed quantum walk on the line with self-loops"};
    app.require_subcommand(1);

    RunOpts run_opts;
    CLI::App* run = app.add_subcommand("run", "simulate one walk, write P(x) as CSV");
    run->add_option("--mode", run_opts.mode, "quantum, classical, or reduced")
        ->check(CLI::IsMember({"quantum", "classical", "reduced"}));
    run->add_option("--n", run_opts.n, "coin dimension (forward edge + n-1 loops)")
        ->check(CLI::PositiveNumber);
    run->add_option("--t", run_opts.t, "number of steps");
    run->add_option("--pairing", run_opts.pairing, "edge pairing for the shift")
        ->check(CLI::IsMember({"natural", "random"}));
    CLI::Option* seed_opt = run->add_option("--seed", run_opts.seed,
                                            "seed for random pairing");
    run->add_option("--loop-length", run_opts.loop_length,
                    "discretize each loop into this many edges")
        ->check(CLI::PositiveNumber);
    run->add_option("--out", run_opts.out_dir, "output directory");

    SweepOpts sweep_opts;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "summarize walks over a list of coin dimensions");
    sweep_cmd->add_option("--n", sweep_opts.n_values, "coin dimensions")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--t", sweep_opts.t, "number of steps");
    sweep_cmd->add_option("--modes", sweep_opts.mode_names, "modes to include")
        ->delimiter(',')
        ->check(CLI::IsMember({"quantum", "classical", "reduced"}));
    sweep_cmd->add_option("--pairing", sweep_opts.pairing, "edge pairing for the shift")
        ->check(CLI::IsMember({"natural", "random"}));
    sweep_cmd->add_option("--seeds", sweep_opts.seeds,
                          "seeds for random pairing, one record each")
        ->delimiter(',');
    sweep_cmd->add_flag("--distributions", sweep_opts.distributions,
                        "also write one distribution file per record");
    CLI::Option* threads_opt = sweep_cmd->add_option(
        "--threads", sweep_opts.threads, "worker threads (0 = hardware)");
    sweep_cmd->add_option("--out", sweep_opts.out_dir, "output directory");

    std::string depth = "quick";
    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("--depth", depth, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));

    std::string check_input;
    CLI::App* check =
        app.add_subcommand("check", "test an edge list for unitary realizability");
    check->add_option("graph", check_input, "edge-list file, or - for stdin")
        ->required();

    GenOpts gen_opts;
    CLI::App* gen = app.add_subcommand("gen", "emit a line-with-loops edge list");
    gen->add_option("--n", gen_opts.n, "coin dimension")->check(CLI::PositiveNumber);
    gen->add_option("--x-max", gen_opts.x_max, "last line vertex");
    gen->add_option("--loop-length", gen_opts.loop_length, "edges per loop")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    run_opts.seed_given = seed_opt->count() > 0;
    sweep_opts.threads_given = threads_opt->count() > 0;

    try {
        if (run->parsed())
            return cmd_run(run_opts);
        if (sweep_cmd->parsed())
            return cmd_sweep(sweep_opts);
        if (verify->parsed())
            return cmd_verify(depth);
        if (check->parsed())
            return cmd_check(check_input);
        if (gen->parsed())
            return cmd_gen(gen_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
