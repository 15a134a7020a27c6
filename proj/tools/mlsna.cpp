#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlsna/benchmark.hpp"
#include "mlsna/community.hpp"
#include "mlsna/evaluation.hpp"
#include "mlsna/evolution.hpp"
#include "mlsna/graph.hpp"
#include "mlsna/io.hpp"
#include "mlsna/measures.hpp"
#include "mlsna/paths.hpp"
#include "mlsna/prediction.hpp"

namespace fs = std::filesystem;
using namespace mlsna;

namespace {

constexpr const char* kVersion = "0.1.0";

std::uint64_t resolve_seed(std::uint64_t cli_seed, bool seed_given) {
    if (seed_given) return cli_seed;
    if (const char* env = std::getenv("MLSNA_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// Deterministic worker pool: results land in caller-indexed slots.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

Msn single_layer_for(const Msn& msn, const std::string& layer_flag) {
    if (!layer_flag.empty()) return msn.layer_view(layer_flag);
    if (msn.layer_count() == 1) return msn;
    return msn.aggregate_layers();
}

Direction parse_direction(const std::string& s) {
    if (s == "total") return Direction::Total;
    if (s == "in") return Direction::In;
    if (s == "out") return Direction::Out;
    raise(Errc::BadInput, "unknown direction '" + s + "'");
}

NeighbourhoodMode parse_mode(const std::string& s) {
    if (s == "in") return NeighbourhoodMode::In;
    if (s == "out") return NeighbourhoodMode::Out;
    if (s == "inoutany") return NeighbourhoodMode::InOutAny;
    if (s == "inout") return NeighbourhoodMode::InOut;
    if (s == "any") return NeighbourhoodMode::Any;
    raise(Errc::BadInput, "unknown neighbourhood mode '" + s + "'");
}

// ---------------------------------------------------------------------

int run_measure(const std::string& input, bool undirected, const std::string& metric, int alpha,
                const std::string& mode, const std::string& direction, const std::string& layer,
                bool normalized, bool weighted, bool conventional, unsigned jobs,
                const std::string& output) {
    Msn msn = load_msn(read_edge_list(input, undirected));
    std::ostringstream out;
    const auto& nodes = msn.nodes();

    auto emit_per_node = [&](const std::function<double(const std::string&)>& f) {
        std::vector<double> vals(nodes.size());
        parallel_for(nodes.size(), jobs, [&](std::size_t i) { vals[i] = f(nodes[i]); });
        out << "node,value\n";
        for (std::size_t i = 0; i < nodes.size(); ++i) out << nodes[i] << ',' << fmt(vals[i]) << '\n';
    };
    auto emit_per_pair = [&](const std::function<double(const std::string&, const std::string&)>& f) {
        // all pairs adjacent on >= 1 layer, unordered
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& x : nodes)
            for (const auto& y : multi_neighbourhood(msn, x, 1, NeighbourhoodMode::Any))
                if (x < y) pairs.push_back({x, y});
        std::vector<double> vals(pairs.size());
        parallel_for(pairs.size(), jobs, [&](std::size_t i) { vals[i] = f(pairs[i].first, pairs[i].second); });
        out << "node,node2,value\n";
        for (std::size_t i = 0; i < pairs.size(); ++i)
            out << pairs[i].first << ',' << pairs[i].second << ',' << fmt(vals[i]) << '\n';
    };

    if (metric == "mn") {
        auto m = parse_mode(mode);
        emit_per_node([&](const std::string& x) {
            return static_cast<double>(multi_neighbourhood(msn, x, alpha, m).size());
        });
    } else if (metric == "clcc") {
        emit_per_node([&](const std::string& x) { return clcc(msn, x, alpha); });
    } else if (metric == "cdc") {
        auto d = parse_direction(direction);
        emit_per_node([&](const std::string& x) { return cdc(msn, x, alpha, d); });
    } else if (metric == "mdc1" || metric == "mdc2" || metric == "mdc3") {
        auto d = parse_direction(direction);
        const int version = metric[3] - '0';
        emit_per_node([&](const std::string& x) { return mdc(msn, x, version, d); });
    } else if (metric == "clecc") {
        emit_per_pair([&](const std::string& x, const std::string& y) { return clecc(msn, x, y, alpha); });
    } else if (metric == "ecc") {
        Msn net = single_layer_for(msn, layer);
        emit_per_pair([&](const std::string& x, const std::string& y) { return ecc(net, x, y); });
    } else if (metric == "dc") {
        Msn net = single_layer_for(msn, layer);
        auto d = parse_direction(direction);
        emit_per_node([&](const std::string& x) { return degree_centrality(net, x, d, normalized, weighted); });
    } else if (metric == "cc") {
        Msn net = single_layer_for(msn, layer);
        emit_per_node([&](const std::string& x) { return closeness(net, x, normalized); });
    } else if (metric == "bc") {
        Msn net = single_layer_for(msn, layer);
        auto all = betweenness_all(net, conventional);
        out << "node,value\n";
        for (const auto& x : nodes) out << x << ',' << fmt(all.at(x)) << '\n';
    } else if (metric == "sp") {
        Msn net = single_layer_for(msn, layer);
        auto all = social_position(net);
        out << "node,value\n";
        for (const auto& x : nodes) out << x << ',' << fmt(all.at(x)) << '\n';
    } else {
        raise(Errc::BadInput, "unknown metric '" + metric + "'");
    }

    if (output.empty()) std::cout << out.str();
    else atomic_write(output, out.str());
    return 0;
}

int run_paths(const std::string& input, bool undirected, bool no_invert, const std::string& source,
              int alpha, double beta, const std::string& algo, const std::string& output) {
    Msn msn = normalized_by_max(load_msn(read_edge_list(input, undirected)));
    PathResult res = algo == "mda" ? shortest_paths_mda(msn, source, alpha, !no_invert)
                                   : shortest_paths_dap(msn, source, alpha, beta, !no_invert);
    std::ostringstream out;
    out << "target,length,predecessor\n";
    for (const auto& [target, length] : res.lengths) {
        auto p = res.predecessors.find(target);
        out << target << ',' << fmt(length) << ',' << (p == res.predecessors.end() ? "" : p->second)
            << '\n';
    }
    if (output.empty()) std::cout << out.str();
    else atomic_write(output, out.str());
    return 0;
}

int run_community(const std::string& input, bool undirected, int alpha, const std::string& condition,
                  bool plus, const std::string& trace_file, const std::string& output) {
    Msn msn = load_msn(read_edge_list(input, undirected));
    auto cond = condition == "strong" ? CommunityCondition::Strong : CommunityCondition::Weak;
    auto [partition, trace] = clecc_method(msn, alpha, cond);
    if (plus) partition = clecc_plus(msn, partition);

    if (!trace_file.empty()) {
        nlohmann::json j;
        j["iterations"] = nlohmann::json::array();
        for (const auto& it : trace.iterations) {
            nlohmann::json ji;
            ji["value"] = it.value;
            ji["removed"] = nlohmann::json::array();
            for (const auto& [a, b] : it.removed) ji["removed"].push_back({a, b});
            j["iterations"].push_back(ji);
        }
        j["frozen"] = nlohmann::json::array();
        for (const auto& f : trace.frozen)
            j["frozen"].push_back({{"after_iteration", f.after_iteration}, {"members", f.group.members}});
        atomic_write(trace_file, j.dump(2) + "\n");
    }
    std::ostringstream out;
    out << "node,group_id\n";
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& g : partition.groups)
        for (const auto& v : g.members) rows.push_back({v, g.id});
    for (const auto& v : partition.unassigned) rows.push_back({v, "-1"});
    std::sort(rows.begin(), rows.end());
    for (const auto& [v, g] : rows) out << v << ',' << g << '\n';
    if (output.empty()) std::cout << out.str();
    else atomic_write(output, out.str());
    return 0;
}

int run_nmi(const std::string& file_a, const std::string& file_b, bool drop_unassigned) {
    auto a = read_groups_csv(file_a);
    auto b = read_groups_csv(file_b);
    const auto policy = drop_unassigned ? UnassignedPolicy::Drop : UnassignedPolicy::Singletons;
    std::cout << fmt(nmi(a, b, policy)) << "\n";
    return 0;
}

BenchmarkSpec spec_from_file(const std::string& file, double* out_ratio) {
    BenchmarkSpec spec;
    for (const auto& [key, value] : read_kv_file(file)) {
        if (key == "n") spec.n = std::stoi(value);
        else if (key == "layers") spec.layers = std::stoi(value);
        else if (key == "avg_degree") spec.avg_degree = std::stod(value);
        else if (key == "max_degree") spec.max_degree = std::stoi(value);
        else if (key == "tau1") spec.tau1 = std::stod(value);
        else if (key == "tau2") spec.tau2 = std::stod(value);
        else if (key == "mu") spec.mu = std::stod(value);
        else if (key == "cmin") spec.cmin = std::stoi(value);
        else if (key == "cmax") spec.cmax = std::stoi(value);
        else if (key == "layer_exponent") spec.layer_exponent = std::stod(value);
        else if (key == "degree_swap_prob") spec.degree_swap_prob = std::stod(value);
        else if (key == "membership_swap_prob") spec.membership_swap_prob = std::stod(value);
        else if (key == "out_ratio" && out_ratio) *out_ratio = std::stod(value);
        else if (key == "seed") continue; // seed comes from --seed / MLSNA_SEED
        else raise(Errc::BadInput, "unknown spec key '" + key + "'");
    }
    return spec;
}

int run_generate(const std::string& kind, const std::string& spec_file, std::uint64_t seed,
                 const std::string& out_dir) {
    fs::create_directories(out_dir);
    double out_ratio = 0.1;
    BenchmarkSpec spec = spec_file.empty() ? BenchmarkSpec{} : spec_from_file(spec_file, &out_ratio);

    GeneratedNetwork net;
    if (kind == "gn") net = generate_gn(out_ratio, seed);
    else if (kind == "lfr") net = generate_lfr_base(spec, seed);
    else if (kind == "mlfr") net = generate_mlfr(spec, seed);
    else raise(Errc::BadInput, "unknown benchmark kind '" + kind + "'");

    write_edge_list(fs::path(out_dir) / "network.tsv", net.msn);
    for (std::size_t l = 0; l < net.truth.layer_community.size(); ++l) {
        std::ostringstream out;
        out << "node,community\n";
        const auto& comm = net.truth.layer_community[l];
        for (std::size_t v = 0; v < comm.size(); ++v) out << v << ',' << comm[v] << '\n';
        atomic_write(fs::path(out_dir) / ("truth_layer_" + std::to_string(l + 1) + ".csv"), out.str());
    }
    if (net.dropped_stubs > 0)
        std::cerr << "note: " << net.dropped_stubs << " stubs could not be placed and were dropped\n";
    return 0;
}

// Frames from a directory: frame_<k>.tsv plus groups_<k>.csv, k = 0,1,...
std::pair<Dsn, std::vector<Partition>> load_frames_dir(const std::string& dir, bool undirected) {
    Dsn dsn;
    std::vector<Partition> partitions;
    for (int k = 0;; ++k) {
        fs::path edges = fs::path(dir) / ("frame_" + std::to_string(k) + ".tsv");
        fs::path groups = fs::path(dir) / ("groups_" + std::to_string(k) + ".csv");
        if (!fs::exists(edges)) break;
        dsn.frames.push_back(load_msn(read_edge_list(edges, undirected)));
        dsn.frame_starts.push_back(k);
        if (!fs::exists(groups)) raise(Errc::BadInput, "missing " + groups.string());
        partitions.push_back(read_groups_csv(groups));
    }
    if (dsn.frames.empty()) raise(Errc::EmptyLog, "no frame_<k>.tsv files in '" + dir + "'");
    dsn.window = 1;
    dsn.overlap = 0;
    return {dsn, partitions};
}

ImportanceSource parse_importance(const std::string& s) {
    if (s == "sp") return {ImportanceKind::SocialPosition, {}};
    if (s == "degree") return {ImportanceKind::Degree, {}};
    if (s == "none") return {ImportanceKind::None, {}};
    raise(Errc::BadInput, "unknown importance '" + s + "'");
}

int run_ged(const std::string& frames_dir, bool undirected, double alpha, double beta,
            const std::string& importance, double threshold, const std::string& output) {
    auto [dsn, partitions] = load_frames_dir(frames_dir, undirected);
    GedOptions opt;
    opt.alpha = alpha;
    opt.beta = beta;
    opt.importance = parse_importance(importance);
    opt.form_threshold = threshold;
    auto events = ged(dsn, partitions, opt);
    std::ostringstream out;
    out << "frame_i,group_i,frame_j,group_j,event,incl_fwd,incl_bwd\n";
    for (const auto& e : events)
        out << e.frame_i << ',' << e.group_i << ',' << e.frame_j << ',' << e.group_j << ','
            << to_string(e.kind) << ',' << fmt(e.incl_fwd) << ',' << fmt(e.incl_bwd) << '\n';
    if (output.empty()) std::cout << out.str();
    else atomic_write(output, out.str());
    return 0;
}

int run_sequences(const std::string& frames_dir, bool undirected, double alpha, double beta,
                  const std::string& importance, double threshold, int window,
                  const std::string& format, const std::string& output) {
    auto [dsn, partitions] = load_frames_dir(frames_dir, undirected);
    GedOptions opt;
    opt.alpha = alpha;
    opt.beta = beta;
    opt.importance = parse_importance(importance);
    opt.form_threshold = threshold;
    auto events = ged(dsn, partitions, opt);
    auto chains = evolution_chains(events, partitions);
    auto rows = extract_sequences(chains, partitions, window);
    std::ostringstream out;
    export_dataset(rows, format == "arff" ? DatasetFormat::ArffLike : DatasetFormat::Csv, out);
    if (output.empty()) std::cout << out.str();
    else atomic_write(output, out.str());
    return 0;
}

int run_score(const std::string& pred_file, const std::string& label_file) {
    auto preds = read_label_column(pred_file);
    auto labels = read_label_column(label_file);
    auto report = prf(preds, labels);
    std::cout << "class,precision,recall,f,support\n";
    for (const auto& [name, c] : report.classes)
        std::cout << name << ',' << fmt(c.precision) << ',' << fmt(c.recall) << ',' << fmt(c.f) << ','
                  << c.support << '\n';
    std::cout << "weighted_f," << fmt(report.weighted_f) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-layered social network analysis toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough(); // global --seed/--jobs may follow the subcommand

    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--jobs", jobs, "worker threads for batch evaluation");
    std::uint64_t seed = 0;
    bool seed_given = false;
    app.add_option("--seed", seed, "seed for stochastic subcommands (fallback: MLSNA_SEED)")
        ->each([&](const std::string&) { seed_given = true; });

    std::string input, output, layer, metric = "mn", mode = "any", direction = "total";
    bool undirected = false, normalized = true, weighted = false, conventional = false;
    int alpha = 1;
    double beta = 1.0;

    auto* m = app.add_subcommand("measure", "node and edge measures");
    m->add_option("--input", input)->required();
    m->add_flag("--undirected", undirected);
    m->add_option("--metric", metric, "mn|clcc|cdc|mdc1|mdc2|mdc3|clecc|ecc|dc|cc|bc|sp");
    m->add_option("--alpha", alpha);
    m->add_option("--mode", mode, "in|out|inoutany|inout|any");
    m->add_option("--direction", direction, "total|in|out");
    m->add_option("--layer", layer, "layer for single-layer metrics (default: aggregate)");
    m->add_flag("!--raw", normalized, "disable n-1 normalization");
    m->add_flag("--weighted", weighted);
    m->add_flag("--conventional", conventional, "usual (n-1)(n-2)/2 betweenness normalization");
    m->add_option("--output", output);

    std::string source, algo = "dap";
    bool no_invert = false;
    auto* p = app.add_subcommand("paths", "multi-layered shortest paths");
    p->add_option("--input", input)->required();
    p->add_flag("--undirected", undirected);
    p->add_option("--source", source)->required();
    p->add_option("--alpha", alpha);
    p->add_option("--beta", beta);
    p->add_option("--algo", algo, "dap|mda");
    p->add_flag("--no-invert", no_invert, "weights already encode distance");
    p->add_option("--output", output);

    std::string condition = "weak", trace_file;
    bool plus = false;
    auto* c = app.add_subcommand("community", "divisive group extraction");
    c->add_option("--input", input)->required();
    c->add_flag("--undirected", undirected);
    c->add_option("--alpha", alpha);
    c->add_option("--condition", condition, "weak|strong");
    c->add_flag("--plus", plus, "assign leftover nodes by neighbour majority");
    c->add_option("--trace", trace_file, "write a JSON extraction trace");
    c->add_option("--output", output);

    std::string nmi_a, nmi_b;
    bool drop_unassigned = false;
    auto* e = app.add_subcommand("nmi", "normalized mutual information of two partitions");
    e->add_option("file_a", nmi_a)->required();
    e->add_option("file_b", nmi_b)->required();
    e->add_flag("--drop-unassigned", drop_unassigned);

    std::string kind = "lfr", spec_file, out_dir = ".";
    auto* g = app.add_subcommand("generate", "synthetic benchmark networks");
    g->add_option("--kind", kind, "gn|lfr|mlfr");
    g->add_option("--spec", spec_file, "key=value parameter file");
    g->add_option("--out", out_dir)->required();

    std::string frames_dir, importance = "sp";
    double ged_alpha = 0.5, ged_beta = 0.5, threshold = 0.1;
    auto* d = app.add_subcommand("ged", "group evolution discovery");
    d->add_option("--frames", frames_dir, "directory with frame_<k>.tsv and groups_<k>.csv")->required();
    d->add_flag("--undirected", undirected);
    d->add_option("--alpha", ged_alpha);
    d->add_option("--beta", ged_beta);
    d->add_option("--importance", importance, "sp|degree|none");
    d->add_option("--threshold", threshold, "forming/dissolving cutoff");
    d->add_option("--output", output);

    int window = 4;
    std::string format = "csv";
    auto* q = app.add_subcommand("sequences", "evolution sequences for classification");
    q->add_option("--frames", frames_dir)->required();
    q->add_flag("--undirected", undirected);
    q->add_option("--alpha", ged_alpha);
    q->add_option("--beta", ged_beta);
    q->add_option("--importance", importance);
    q->add_option("--threshold", threshold);
    q->add_option("--window", window);
    q->add_option("--format", format, "csv|arff");
    q->add_option("--output", output);

    std::string pred_file, label_file;
    auto* s = app.add_subcommand("score", "precision/recall/F of predictions");
    s->add_option("--predictions", pred_file)->required();
    s->add_option("--labels", label_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (m->parsed())
            return run_measure(input, undirected, metric, alpha, mode, direction, layer, normalized,
                               weighted, conventional, jobs, output);
        if (p->parsed()) return run_paths(input, undirected, no_invert, source, alpha, beta, algo, output);
        if (c->parsed()) return run_community(input, undirected, alpha, condition, plus, trace_file, output);
        if (e->parsed()) return run_nmi(nmi_a, nmi_b, drop_unassigned);
        if (g->parsed()) return run_generate(kind, spec_file, resolve_seed(seed, seed_given), out_dir);
        if (d->parsed())
            return run_ged(frames_dir, undirected, ged_alpha, ged_beta, importance, threshold, output);
        if (q->parsed())
            return run_sequences(frames_dir, undirected, ged_alpha, ged_beta, importance, threshold,
                                 window, format, output);
        if (s->parsed()) return run_score(pred_file, label_file);
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 2;
    }
    return 1;
}
