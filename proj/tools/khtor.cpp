// Command-line front end: torsion reports, integral cohomology tables and
// Jones-polynomial checks for bundled table entries or user PD files.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "khtor/complex.hpp"
#include "khtor/homology.hpp"
#include "khtor/pd.hpp"
#include "khtor/report.hpp"
#include "khtor/torsion.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunConfig {
    std::string name;
    std::string pd_file;
    std::string format = "text";
    std::string cache_dir;
    std::string expected_file;
    int threads = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw khtor::input_error("cannot read file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::pair<std::string, khtor::LinkDiagram> load_input(const RunConfig& cfg) {
    if (cfg.name.empty() == cfg.pd_file.empty())
        throw khtor::input_error("exactly one input source required: a table name or --pd <file>");
    if (!cfg.name.empty())
        return {cfg.name, khtor::orient_and_sign(khtor::builtin_table(cfg.name))};
    khtor::PDCode pd = khtor::parse_pd(read_file(cfg.pd_file));
    return {fs::path(cfg.pd_file).stem().string(), khtor::orient_and_sign(pd)};
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

khtor::TorsionReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    khtor::TorsionReport r;
    r.name = j.at("name").get<std::string>();
    for (const auto& row : j.at("rows")) {
        khtor::TorsionRow tr;
        tr.q = row.at("q").get<int>();
        for (const auto& c : row.at("contributions"))
            tr.contributions.push_back(khtor::rat_from_string(c.get<std::string>()));
        tr.torsion = khtor::rat_from_string(row.at("torsion").get<std::string>());
        r.rows.push_back(std::move(tr));
    }
    return r;
}

khtor::TorsionReport cached_torsion(const std::string& name, const std::string& pd_text,
                                    const std::string& cache_dir, const khtor::TorsionOptions& opts) {
    fs::path file;
    if (!cache_dir.empty()) {
        std::ostringstream key;
        key << name << '.' << std::hex << fnv1a64(pd_text) << ".json";
        file = fs::path(cache_dir) / key.str();
        if (fs::exists(file)) {
            try {
                khtor::TorsionReport r = report_from_json(read_file(file.string()));
                std::cerr << "cache hit: " << name << '\n';
                return r;
            } catch (const std::exception&) {
                std::cerr << "cache entry unreadable, recomputing: " << file << '\n';
            }
        }
    }
    khtor::TorsionReport r = khtor::link_torsion(khtor::orient_and_sign(khtor::parse_pd(pd_text)), opts);
    r.name = name;
    if (!cache_dir.empty()) {
        std::error_code ec;
        fs::create_directories(cache_dir, ec);
        std::ofstream out(file, std::ios::binary);
        if (out) out << khtor::render_torsion(r, khtor::Format::json);
    }
    return r;
}

int cmd_rtorsion(const RunConfig& cfg) {
    auto [name, diagram] = load_input(cfg);
    khtor::TorsionOptions opts;
    opts.threads = cfg.threads;
    khtor::TorsionReport r = khtor::link_torsion(diagram, opts);
    r.name = name;
    std::cout << khtor::render_torsion(r, khtor::parse_format(cfg.format));
    return 0;
}

int cmd_homology(const RunConfig& cfg) {
    auto [name, diagram] = load_input(cfg);
    khtor::IntegralCohomology h = khtor::integral_cohomology(khtor::build_complex(diagram));
    std::cout << khtor::render_homology(h, name, khtor::parse_format(cfg.format));
    return 0;
}

int cmd_jones(const RunConfig& cfg) {
    auto [name, diagram] = load_input(cfg);
    khtor::Laurent bracket = khtor::kauffman_bracket_jones(diagram);
    khtor::Laurent graded = khtor::khovanov_polynomial(khtor::build_complex(diagram)).at_t_minus_one();
    khtor::require(bracket == graded, "jones: state sum disagrees with graded cohomology");
    std::cout << khtor::render_jones(bracket, name, khtor::parse_format(cfg.format));
    return 0;
}

int cmd_corpus(const RunConfig& cfg) {
    std::string expected_text =
        cfg.expected_file.empty() ? khtor::bundled_expected_tsv() : read_file(cfg.expected_file);
    khtor::ExpectedTable expected = khtor::parse_expected_tsv(expected_text);

    std::map<std::string, std::string> pd_by_name;
    for (const auto& e : khtor::corpus_entries()) pd_by_name[e.name] = e.pd;

    khtor::TorsionOptions opts;
    opts.threads = cfg.threads;

    int mismatches = 0;
    for (const auto& [name, rows] : expected) {
        auto it = pd_by_name.find(name);
        if (it == pd_by_name.end()) throw khtor::input_error("corpus data missing entry '" + name + "'");
        khtor::TorsionReport r = cached_torsion(name, it->second, cfg.cache_dir, opts);

        std::string diff;
        if (r.rows.size() != rows.size())
            diff = "row count " + std::to_string(r.rows.size()) + " != " + std::to_string(rows.size());
        for (size_t i = 0; diff.empty() && i < rows.size(); ++i) {
            if (r.rows[i].q != rows[i].q)
                diff = "q " + std::to_string(r.rows[i].q) + " != " + std::to_string(rows[i].q);
            else if (r.rows[i].torsion != rows[i].torsion)
                diff = "torsion " + khtor::rat_to_string(r.rows[i].torsion) + " != " +
                       khtor::rat_to_string(rows[i].torsion) + " at q=" + std::to_string(rows[i].q);
        }
        if (diff.empty()) {
            std::cout << "ok       " << name << '\n';
        } else {
            std::cout << "MISMATCH " << name << ": " << diff << '\n';
            ++mismatches;
        }
    }
    std::cout << (expected.size() - mismatches) << "/" << expected.size() << " entries match\n";
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Khovanov cochain complexes and their Reidemeister torsion, exactly"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("KHTOR_CACHE_DIR")) cfg.cache_dir = env;

    auto add_common = [&](CLI::App* sub, bool with_input) {
        if (with_input) {
            sub->add_option("name", cfg.name, "bundled table entry name");
            sub->add_option("--pd", cfg.pd_file, "read the diagram from a PD file");
        }
        sub->add_option("--format", cfg.format, "text, json or csv (default text)");
        sub->add_option("--threads", cfg.threads, "cap on parallel subcomplex evaluation");
    };

    CLI::App* rt = app.add_subcommand("rtorsion", "Reidemeister torsion per polynomial degree");
    add_common(rt, true);
    CLI::App* hm = app.add_subcommand("homology", "integral cohomology per polynomial degree");
    add_common(hm, true);
    CLI::App* jn = app.add_subcommand("jones", "Jones polynomial via the state-sum cross-check");
    add_common(jn, true);
    CLI::App* cp = app.add_subcommand("corpus", "run every table entry against the expected torsion");
    add_common(cp, false);
    cp->add_option("--cache-dir", cfg.cache_dir, "cache computed reports, one file per entry");
    cp->add_option("--expected", cfg.expected_file, "override the bundled expected-values table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rt->parsed()) return cmd_rtorsion(cfg);
        if (hm->parsed()) return cmd_homology(cfg);
        if (jn->parsed()) return cmd_jones(cfg);
        if (cp->parsed()) return cmd_corpus(cfg);
    } catch (const khtor::input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const khtor::internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
