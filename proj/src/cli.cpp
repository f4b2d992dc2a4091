#include "curvlab/cli.hpp"

#include "curvlab/acceptance.hpp"
#include "curvlab/cache.hpp"
#include "curvlab/registry.hpp"
#include "curvlab/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <random>

namespace curvlab {

void RunConfig::validate() const {
    if (radius < 0) throw DomainError("--radius must be nonnegative");
    if (mode != "sphere" && mode != "ball") throw DomainError("--mode must be sphere or ball");
    if (horizon < -1) throw DomainError("--horizon must be nonnegative");
    if (budget == 0) throw DomainError("--budget must be positive");
    if (format != "json" && format != "csv") throw DomainError("--format must be json or csv");
    if (tier != "fast" && tier != "full") throw DomainError("--tier must be fast or full");
    if (max_depth < 1) throw DomainError("--max-depth must be at least 1");
    if (cap == 0) throw DomainError("--cap must be positive");
    if (sample_radius < 1) throw DomainError("--sample-radius must be at least 1");
    if (criterion < 0 || criterion > kCriterionCount)
        throw DomainError("--criterion must be in 0.." + std::to_string(kCriterionCount));
}

namespace {

Mode mode_of(const RunConfig& cfg) { return cfg.mode == "ball" ? Mode::Ball : Mode::Sphere; }

/// Per-group state of one invocation: the parsed group plus table building
/// with the configured horizon, budget and cache.
template <GroupOracle G>
class Session {
public:
    using Element = typename G::Element;

    Session(const G& group, const RunConfig& cfg) : group_(group), cfg_(cfg) {}

    [[nodiscard]] const G& group() const { return group_; }

    [[nodiscard]] Element element(const std::string& text, const char* flag) const {
        if (text.empty()) throw DomainError(std::string(flag) + " is required");
        return group_.parse(text);
    }

    /// Exact length, by closed form when available and BFS otherwise.
    [[nodiscard]] int length_of(const Element& x) const {
        if (auto closed = group_.closed_length(x)) return *closed;
        const int cap = cfg_.horizon >= 0 ? cfg_.horizon : 1 << 20;
        return bfs_distance(group_, x, cap, cfg_.budget);
    }

    /// Table to the configured horizon, or to `needed` when none was given.
    [[nodiscard]] const MetricTable<G>& table(int needed) {
        const int h = cfg_.horizon >= 0 ? cfg_.horizon : std::max(needed, 0);
        table_.emplace(cached_bfs_metric(group_, h, cfg_.budget, cfg_.cache));
        return *table_;
    }

    /// Horizon covering conjugates or transport costs around an element of
    /// length `base` at radius r.
    [[nodiscard]] static int neighbourhood_horizon(int base, int r) {
        return has_total_closed_length<G> ? r : base + 2 * r;
    }

private:
    const G& group_;
    const RunConfig& cfg_;
    std::optional<MetricTable<G>> table_;
};

void require_json(const RunConfig& cfg, const char* command) {
    if (cfg.format != "json") throw DomainError(std::string(command) + " supports --format json only");
}

template <GroupOracle G>
void cmd_length(Session<G>& s, const RunConfig& cfg, std::ostream& out) {
    const auto g = s.element(cfg.element, "--element");
    const bool closed = s.group().closed_length(g).has_value();
    const int length = s.length_of(g);
    if (cfg.format == "csv") {
        out << "group,element,length,source\n"
            << s.group().id() << ',' << csv_field(s.group().format(g)) << ',' << length << ','
            << (closed ? "closed" : "bfs") << '\n';
        return;
    }
    Json j;
    j["group"] = s.group().id();
    j["element"] = s.group().format(g);
    j["length"] = length;
    j["source"] = closed ? "closed" : "bfs";
    out << j.dump(2) << '\n';
}

template <GroupOracle G>
void cmd_curvature(Session<G>& s, const RunConfig& cfg, std::ostream& out) {
    const auto g = s.element(cfg.element, "--element");
    const int r = std::max(cfg.radius, 1);
    const auto& table = s.table(Session<G>::neighbourhood_horizon(s.length_of(g), r));
    const Metric<G> metric(s.group(), &table);
    const auto report = kappa(metric, g, r, mode_of(cfg));
    if (cfg.format == "csv")
        write_csv(out, metric, report);
    else
        out << to_json(s.group(), report).dump(2) << '\n';
}

template <GroupOracle G>
Json deadend_row(const Metric<G>& metric, const typename G::Element& g, int max_depth) {
    return to_json(metric.group(), analyze_dead_end(metric, g, max_depth));
}

void write_deadend_csv_header(std::ostream& out) {
    out << "group,element,length,is_dead_end,depth,descent_depth,strict_depth,witness\n";
}

void write_deadend_csv_row(std::ostream& out, const Json& j) {
    auto opt = [](const Json& v) { return v.is_null() ? std::string() : std::to_string(v.get<int>()); };
    out << j["group"].get<std::string>() << ',' << csv_field(j["element"].get<std::string>()) << ','
        << j["length"].get<int>() << ',' << (j["is_dead_end"].get<bool>() ? "true" : "false") << ','
        << opt(j["depth"]) << ',' << opt(j["descent_depth"]) << ',' << j["strict_depth"].get<int>() << ','
        << csv_field(j["witness"].get<std::string>()) << '\n';
}

template <GroupOracle G>
void cmd_deadend(Session<G>& s, const RunConfig& cfg, std::ostream& out) {
    const auto g = s.element(cfg.element, "--element");
    const int base = s.length_of(g);
    const auto& table = s.table(has_total_closed_length<G> ? std::min(base, 8) : base);
    const Metric<G> metric(s.group(), &table);
    const auto j = deadend_row(metric, g, cfg.max_depth);
    if (cfg.format == "csv") {
        write_deadend_csv_header(out);
        write_deadend_csv_row(out, j);
    } else {
        out << j.dump(2) << '\n';
    }
}

/// One compact JSON object (or CSV row) per dead end of B_R, in layer and key order.
template <GroupOracle G>
void cmd_deadend_scan(Session<G>& s, const RunConfig& cfg, std::ostream& out) {
    const auto& table = s.table(cfg.radius);
    const Metric<G> metric(s.group(), &table);
    if (cfg.format == "csv") write_deadend_csv_header(out);
    for (int r = 1; r <= cfg.radius; ++r)
        for (const auto& entry : table.layer(r)) {
            if (!is_dead_end(metric, entry.element)) continue;
            const auto j = deadend_row(metric, entry.element, cfg.max_depth);
            if (cfg.format == "csv")
                write_deadend_csv_row(out, j);
            else
                out << j.dump() << '\n';
        }
}

template <GroupOracle G>
void cmd_backtracks(Session<G>& s, const RunConfig& cfg, std::ostream& out) {
    require_json(cfg, "backtracks");
    const auto g = s.element(cfg.element, "--element");
    const int base = s.length_of(g);
    std::optional<int> k;
    {
        const auto& probe = s.table(has_total_closed_length<G> ? 0 : base);
        const Metric<G> metric(s.group(), &probe);
        if (!is_dead_end(metric, g)) throw DomainError("backtrack elements are defined for dead ends only");
        k = depth(metric, g, cfg.max_depth).depth;
    }
    if (!k) throw OutOfHorizon("dead-end depth exceeds --max-depth " + std::to_string(cfg.max_depth), cfg.max_depth + 1);
    const auto& table = s.table(has_total_closed_length<G> ? *k - 1 : std::max(base, *k - 1));
    const Metric<G> metric(s.group(), &table);
    const auto found = backtrack_elements(metric, g, cfg.max_depth);
    Json j;
    j["group"] = s.group().id();
    j["element"] = s.group().format(g);
    j["length"] = base;
    j["depth"] = *k;
    j["count"] = found.size();
    Json rows = Json::array();
    for (const auto& w : found)
        rows.push_back(Json{{"element", s.group().format(w)}, {"length", metric.length(w)}});
    j["elements"] = std::move(rows);
    out << j.dump(2) << '\n';
}

template <GroupOracle G>
void cmd_transport(Session<G>& s, const RunConfig& cfg, std::ostream& out) {
    require_json(cfg, "transport");
    const auto y = s.element(cfg.element, "--element");
    const auto x = cfg.base.empty() ? s.group().identity() : s.group().parse(cfg.base);
    const auto delta = s.group().compose(s.group().invert(x), y);
    const int r = std::max(cfg.radius, 1);
    const int d = s.length_of(delta);
    const auto& table = s.table(Session<G>::neighbourhood_horizon(d, r));
    const Metric<G> metric(s.group(), &table);
    const MeasureSpec<G> spec{x, y, mode_of(cfg), r};
    const auto result = transport_distance(metric, spec, cfg.cap);
    auto j = to_json(s.group(), spec, result, d);
    if (d > 0) put_rational(j, "kappa", kappa(metric, delta, r, spec.support).kappa);
    out << j.dump(2) << '\n';
}

template <GroupOracle G>
void cmd_probe(Session<G>& s, const RunConfig& cfg, std::ostream& out) {
    require_json(cfg, "probe");
    const int r = std::max(cfg.radius, 1);
    const int R = cfg.sample_radius;
    const auto& table = s.table(has_total_closed_length<G> ? std::max(r, R) : R + 2 * r);
    const Metric<G> metric(s.group(), &table);
    std::vector<typename G::Element> sample;
    for (int l = 1; l <= R; ++l)
        for (const auto& entry : table.layer(l)) sample.push_back(entry.element);
    if (cfg.samples > 0 && cfg.samples < sample.size()) {
        std::mt19937_64 rng(cfg.seed);
        std::vector<typename G::Element> picked;
        std::sample(sample.begin(), sample.end(), std::back_inserter(picked), cfg.samples, rng);
        sample = std::move(picked);
    }
    out << to_json(s.group(), question_probe(metric, sample, r, cfg.cap)).dump(2) << '\n';
}

void cmd_density(const RunConfig& cfg, std::ostream& out) {
    if (cfg.group != "Heis") throw DomainError("density runs on --group Heis only");
    const auto report = heis_density_experiment(cfg.max_length, std::max(cfg.radius, 1), cfg.format == "csv");
    if (cfg.format == "csv")
        write_csv(out, report);
    else
        out << to_json(report).dump(2) << '\n';
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    AcceptanceOptions options;
    options.tier = parse_tier(cfg.tier);
    options.seed = cfg.seed;
    bool ok = true;
    auto report = [&](const CriterionResult& result) {
        ok &= result.passed;
        out << format_line(result) << std::endl;
    };
    if (cfg.criterion > 0)
        report(run_criterion(cfg.criterion, options));
    else
        run_acceptance(options, report);
    out << (ok ? "all criteria passed" : "some criteria FAILED") << '\n';
    return ok ? kExitOk : kExitVerifyFailed;
}

/// Dispatches a group-generic command on the runtime group id.
template <class Command>
void with_group(const RunConfig& cfg, Command&& command) {
    auto group = make_group(cfg.group);
    std::visit(
        [&](const auto& g) {
            using G = std::decay_t<decltype(g)>;
            Session<G> session(g, cfg);
            command(session);
        },
        group);
}

void add_common(CLI::App* sub, RunConfig& cfg, bool element) {
    sub->add_option("--group,-g", cfg.group, "group id: Z<n>, F<n>, S3, L2, W<n>, H2, Heis")
        ->capture_default_str();
    if (element)
        sub->add_option("--element,-e", cfg.element,
                        "element literal, e.g. \"d(3)*t^1\", \"(2,3)\", \"h(2,2)\", \"Heis(5,2,10)\", \"w: a t a\"");
    sub->add_option("--radius,-r", cfg.radius, "comparison radius r")->capture_default_str();
    sub->add_option("--mode", cfg.mode, "sphere or ball")
        ->check(CLI::IsMember({"sphere", "ball"}))
        ->capture_default_str();
    sub->add_option("--horizon", cfg.horizon, "BFS table horizon (default: smallest sufficient)");
    sub->add_option("--budget", cfg.budget, "maximum number of BFS elements")->capture_default_str();
    sub->add_option("--cache", cfg.cache, std::string("BFS cache directory (default: $") + kCacheEnv + ")");
    sub->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for sampled runs")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (const char* env = std::getenv(kCacheEnv)) cfg.cache = env;

    CLI::App app{"curvlab: comparison and transport curvature of group elements", "curvlab"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 success, 1 usage or computation error, 2 verify failure.");

    auto* length = app.add_subcommand("length", "word length of an element");
    add_common(length, cfg, true);
    length->footer("CSV columns: group, element, length, source (closed formula or bfs).");

    auto* curvature = app.add_subcommand("curvature", "comparison curvature kappa_r of an element");
    add_common(curvature, cfg, true);
    curvature->footer(
        "CSV columns: index (position in the comparison set), conjugator (w), conjugator_length (|w|), "
        "conjugate_length (|w^-1 g w|).");

    const char* deadend_columns =
        "CSV columns: group, element, length, is_dead_end, depth (shortest escape path), descent_depth "
        "(least drop below |g| needed to escape), strict_depth, witness (escape path).";
    auto* deadend = app.add_subcommand("deadend", "dead-end test, depth and strict depth");
    add_common(deadend, cfg, true);
    deadend->add_option("--max-depth", cfg.max_depth, "escape search bound")->capture_default_str();
    deadend->footer(deadend_columns);
    auto* scan = deadend->add_subcommand("scan", "stream every dead end of B_R (R = --radius), one object per line");
    add_common(scan, cfg, false);
    scan->add_option("--max-depth", cfg.max_depth, "escape search bound")->capture_default_str();
    scan->footer(deadend_columns);

    auto* backtracks = app.add_subcommand("backtracks", "backtrack elements of a dead end");
    add_common(backtracks, cfg, true);
    backtracks->add_option("--max-depth", cfg.max_depth, "escape search bound")->capture_default_str();

    auto* density = app.add_subcommand("density", "Heisenberg sector sign census");
    add_common(density, cfg, false);
    density->add_option("--max-length,-k", cfg.max_length, "ball parameter k")->capture_default_str();
    density->footer(
        "CSV columns: A, B, C, s (C mod A), case_t1..case_tr (X, Y, Z, XY or YZ boundary, 0 for s = 0), "
        "predicted (+, 0, -, mixed), kappa (p/q).");

    auto* transport = app.add_subcommand("transport", "optimal transport between the measures at x and y");
    add_common(transport, cfg, true);
    transport->add_option("--base,-x", cfg.base, "basepoint x (default identity); --element is y");
    transport->add_option("--cap", cfg.cap, "maximum number of optimal permutations listed")->capture_default_str();

    auto* probe = app.add_subcommand("probe", "is the identity plan optimal across a sample");
    add_common(probe, cfg, false);
    probe->add_option("--sample-radius", cfg.sample_radius, "sample the ball of this radius")->capture_default_str();
    probe->add_option("--samples", cfg.samples, "random sample size (0 = whole ball)")->capture_default_str();
    probe->add_option("--cap", cfg.cap, "maximum number of optimal permutations enumerated")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--tier", cfg.tier, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();
    verify->add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();
    verify->add_option("--criterion", cfg.criterion, "run a single criterion (1-9)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        cfg.validate();
        if (*verify) return cmd_verify(cfg, out);
        if (*density) {
            cmd_density(cfg, out);
        } else if (*scan) {
            with_group(cfg, [&](auto& s) { cmd_deadend_scan(s, cfg, out); });
        } else if (*deadend) {
            with_group(cfg, [&](auto& s) { cmd_deadend(s, cfg, out); });
        } else if (*length) {
            with_group(cfg, [&](auto& s) { cmd_length(s, cfg, out); });
        } else if (*curvature) {
            with_group(cfg, [&](auto& s) { cmd_curvature(s, cfg, out); });
        } else if (*backtracks) {
            with_group(cfg, [&](auto& s) { cmd_backtracks(s, cfg, out); });
        } else if (*transport) {
            with_group(cfg, [&](auto& s) { cmd_transport(s, cfg, out); });
        } else if (*probe) {
            with_group(cfg, [&](auto& s) { cmd_probe(s, cfg, out); });
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace curvlab
