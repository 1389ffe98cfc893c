// klpar: command-line front end for Kazhdan-Lusztig tables and identity suites.
//
// Exit status: 0 when every requested computation and check succeeded,
// 1 when a verification check failed, 2 on any error.

#include "CLI11.hpp"
#include "klpar/cli.hpp"

#include <iostream>

namespace {

using namespace klpar;
using namespace klpar::cli;

struct SystemOptions {
    std::string type;
    std::string cartan_file;
    std::optional<std::string> J;
    std::string a = "q";
    std::size_t wj_cap = kDefaultParabolicCap;

    void attach(CLI::App* app) {
        auto* t = app->add_option("--type", type, "Preset: An, Bn, Cn, Dn, G2, A1~, A2~");
        auto* f = app->add_option("--cartan-file", cartan_file, "JSON file {\"rank\": n, \"cartan\": [[...]]}");
        t->excludes(f);
        app->add_option("--J", J, "Parabolic generators, comma-separated (0-based)");
        app->add_option("--a", a, "Parabolic marker: q or -1");
        app->add_option("--wj-cap", wj_cap, "Element cap when enumerating W_J");
    }

    std::pair<std::string, GeneralizedCartanMatrix> system() const {
        if (!type.empty()) return {type, preset(type)};
        if (!cartan_file.empty()) return {cartan_file, load_gcm_file(cartan_file)};
        throw Error(Errc::ConfigurationInvalid, "one of --type or --cartan-file is required");
    }
    std::vector<int> subset(int rank) const { return J ? parse_index_list(*J, rank, "--J") : std::vector<int>{}; }
};

void warn_if_needed(const GeneralizedCartanMatrix& c) {
    if (!c.symmetrizable()) std::cerr << nonsymmetrizable_warning() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kazhdan-Lusztig polynomials and parabolic variants over Weyl groups of generalized Cartan matrices"};
    app.require_subcommand(1);

    SystemOptions sys_opts;

    auto* info = app.add_subcommand("info", "Summarize a Coxeter system");
    sys_opts.attach(info);

    auto* compute = app.add_subcommand("compute", "Emit a polynomial table");
    sys_opts.attach(compute);
    std::string variant = "P", format = "json";
    std::vector<std::string> pair;
    std::optional<std::string> below;
    std::optional<int> max_length;
    std::optional<std::string> cache_path;
    compute->add_option("--variant", variant, "P, Q, P-parabolic or Q-parabolic");
    auto* pair_opt = compute->add_option("--pair", pair, "Single pair: words Y W")->expected(2)->allow_extra_args(false);
    auto* below_opt = compute->add_option("--below", below, "All y <= W");
    auto* len_opt = compute->add_option("--max-length", max_length, "All pairs y <= w with l(w) <= L");
    pair_opt->excludes(below_opt)->excludes(len_opt);
    below_opt->excludes(len_opt);
    compute->add_option("--format", format, "json or csv");
    compute->add_option("--cache", cache_path, "Cache file to consult and extend");

    auto* verify = app.add_subcommand("verify", "Run an identity suite");
    sys_opts.attach(verify);
    std::string suite;
    std::optional<int> verify_length;
    verify->add_option("--suite", suite, "Suite name")->required();
    verify->add_option("--max-length", verify_length, "Restrict to l(w) <= L");

    auto* cache = app.add_subcommand("cache", "Validate a cache file and print its header");
    std::string cache_file;
    cache->add_option("--cache", cache_file, "Cache file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) {
            const auto [label, cartan] = sys_opts.system();
            warn_if_needed(cartan);
            std::cout << info_json(label, cartan, sys_opts.subset(cartan.rank()), sys_opts.wj_cap).dump(2) << "\n";
            return 0;
        }
        if (compute->parsed()) {
            JobConfig cfg;
            std::tie(cfg.system_label, cfg.cartan) = sys_opts.system();
            warn_if_needed(cfg.cartan);
            cfg.J = sys_opts.subset(cfg.cartan.rank());
            cfg.a = parse_marker(sys_opts.a);
            cfg.variant = parse_variant(variant);
            cfg.format = parse_format(format);
            cfg.cache_path = cache_path;
            cfg.wj_cap = sys_opts.wj_cap;
            if (!pair.empty())
                cfg.scope = Scope::pair(pair[0], pair[1]);
            else if (below)
                cfg.scope = Scope::below(*below);
            else if (max_length)
                cfg.scope = Scope::up_to(*max_length);
            std::cout << run_compute(cfg);
            return 0;
        }
        if (verify->parsed()) {
            if (!is_known_suite(suite)) throw Error(Errc::UnknownSuite, "unknown suite '" + suite + "'");
            const auto [label, cartan] = sys_opts.system();
            warn_if_needed(cartan);
            SuiteConfig cfg;
            cfg.system = build_system(cartan);
            cfg.label = label;
            if (sys_opts.J) cfg.J = sys_opts.subset(cartan.rank());
            if (verify->count("--a")) cfg.a = parse_marker(sys_opts.a);
            cfg.max_length = verify_length;
            cfg.wj_cap = sys_opts.wj_cap;
            const SuiteReport report = run_suite(suite, cfg);
            std::cout << report_to_json(report).dump(2) << "\n";
            return report.ok() ? 0 : 1;
        }
        if (cache->parsed()) {
            const Cache c = Cache::load(cache_file, std::nullopt);
            Json summary;
            summary["header"] = c.identity();
            summary["entries"] = c.size();
            std::cout << summary.dump(2) << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
