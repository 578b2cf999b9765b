#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polylog/checks.hpp"

using namespace polylog;
using nlohmann::json;

namespace {

constexpr int EXIT_BAD_ARGS = 2;
constexpr int EXIT_BAD_PATH = 3;
constexpr int EXIT_NO_CONVERGENCE = 4;

cplx parse_complex(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw error("empty complex literal");
    // forms: a, ai, a+bi, a-bi
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
    auto num = [](const std::string& t) -> double {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return std::stod(t);
    };
    if (s.back() == 'i' || s.back() == 'j') {
        std::string body = s.substr(0, s.size() - 1);
        if (split == std::string::npos) return {0.0, num(body)};
        return {std::stod(body.substr(0, split)), num(body.substr(split))};
    }
    if (split != std::string::npos && s.find('i') != std::string::npos)
        throw error("bad complex literal '" + s + "'");
    return {std::stod(s), 0.0};
}

Vec parse_point(const std::string& csv) {
    std::vector<cplx> vals;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(parse_complex(item));
    Vec v(static_cast<int>(vals.size()));
    for (size_t i = 0; i < vals.size(); ++i) v[static_cast<int>(i)] = vals[i];
    return v;
}

std::vector<int> parse_bounds(const std::string& csv) {
    std::vector<int> m;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) m.push_back(std::stoi(item));
    return m;
}

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

void load_config(const std::string& file, EvalConfig& cfg) {
    std::ifstream in(file);
    if (!in) throw error("cannot open config file " + file);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
            return s;
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "rel_tol") cfg.rel_tol = std::stod(val);
        else if (key == "abs_tol") cfg.abs_tol = std::stod(val);
        else if (key == "initial_steps_per_segment") cfg.initial_steps_per_segment = std::stoi(val);
        else if (key == "max_refinements") cfg.max_refinements = std::stoi(val);
        else if (key == "start_offset") cfg.start_offset = std::stod(val);
        else if (key == "start_power") cfg.start_power = std::stoi(val);
        else if (key == "end_trim") cfg.end_trim = std::stod(val);
        else if (key == "delta_min") cfg.delta_min = std::stod(val);
        else if (key == "singular_tol") cfg.singular_tol = std::stod(val);
        else throw error("unknown config key '" + key + "'");
    }
}

json result_json(const MonodromyResult& r, int n) {
    json j;
    j["schema_version"] = 1;
    j["component"] = r.component.label();
    j["observed"] = cplx_json(r.observed);
    j["predicted"] = cplx_json(r.predicted);
    j["abs_err"] = r.abs_err;
    j["certified"] = r.certified;
    json w = json::object();
    auto comps = all_components(n);
    for (size_t i = 0; i < comps.size(); ++i)
        if (r.winding[i] != 0) w[comps[i].label()] = r.winding[i];
    j["winding"] = w;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiple polylogarithm continuation toolkit"};
    app.require_subcommand(1);

    EvalConfig cfg;
    std::string config_file;
    app.add_option("--config", config_file, "key = value config file for evaluation settings");

    // --- eval ---
    auto* eval = app.add_subcommand("eval", "evaluate a function along a path");
    std::string eval_m, eval_x, eval_path;
    bool check_series = false;
    eval->add_option("--m", eval_m, "weights m_1,...,m_n")->required();
    eval->add_option("--x", eval_x, "target point, straight path from the origin");
    eval->add_option("--path", eval_path, "JSON path file (overrides --x)");
    eval->add_flag("--check-series", check_series, "report |value - series| inside the polydisk");
    eval->add_option("--rel-tol", cfg.rel_tol);
    eval->add_option("--abs-tol", cfg.abs_tol);

    // --- expand ---
    auto* expand = app.add_subcommand("expand", "print the word expansion");
    std::string expand_m;
    bool distributed = false, as_json = false;
    expand->add_option("--m", expand_m, "weights m_1,...,m_n")->required();
    expand->add_flag("--distributed", distributed, "fully distributed letters");
    expand->add_flag("--json", as_json, "JSON dump");

    // --- check ---
    auto* check = app.add_subcommand("check", "run a property suite");
    std::string suite, check_m = "1,1";
    std::uint64_t seed = 1;
    int trials = 20;
    check->add_option("suite", suite,
                      "shuffle|composition|inversion|reparam|homotopy|integrability|differential|oracle")
        ->required();
    check->add_option("--seed", seed);
    check->add_option("--trials", trials);
    check->add_option("--m", check_m, "bounds for the bounds-parameterized suites");

    // --- monodromy ---
    auto* mono = app.add_subcommand("monodromy", "branch-change checks");
    std::string mono_comp, mono_x, mono_bounds, mono_family;
    int mono_n = 2, mono_j = 0;
    mono->add_option("--n", mono_n, "depth")->required();
    mono->add_option("--component", mono_comp, "Z:j or D:j,k (1-based)");
    mono->add_option("--x", mono_x, "base point")->required();
    mono->add_option("--bounds", mono_bounds, "general weights for trivial checks");
    mono->add_option("--F", mono_family, "window-function family: qj0|q1j|qjn");
    mono->add_option("--j", mono_j, "1-based index for --F");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return EXIT_BAD_ARGS;
    }

    try {
        if (!config_file.empty()) load_config(config_file, cfg);

        if (*eval) {
            Bounds b(parse_bounds(eval_m));
            PathSpec path;
            if (!eval_path.empty()) {
                std::ifstream in(eval_path);
                if (!in) throw error("cannot open path file " + eval_path);
                std::ostringstream ss;
                ss << in.rdbuf();
                path = path_from_json(ss.str());
            } else if (!eval_x.empty()) {
                Vec x = parse_point(eval_x);
                path = line_path(Vec::Zero(x.size()), x, true);
            } else {
                throw error("eval needs --x or --path");
            }
            EvalStats stats;
            cplx value = continue_eval(b, path, cfg, &stats);
            json out;
            out["schema_version"] = 1;
            out["value"] = cplx_json(value);
            out["est_error"] = stats.est_error;
            out["words"] = build_integrand(b).words.size();
            out["steps"] = stats.steps;
            if (check_series) {
                cplx s = series_eval(b, path.end());
                out["oracle_agreement"] = std::abs(value - s);
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (*expand) {
            Bounds b(parse_bounds(expand_m));
            bool ones = std::all_of(b.m.begin(), b.m.end(), [](int m) { return m == 1; });
            if (as_json) {
                std::cout << to_json_string(canonicalized(build_integrand(b))) << "\n";
            } else if (ones && !distributed) {
                std::cout << render_grouped(b.depth());
            } else {
                std::cout << render(canonicalized(build_integrand(b)));
            }
            return 0;
        }

        if (*check) {
            SuiteResult r;
            if (suite == "shuffle") r = run_shuffle_suite(seed, trials, cfg);
            else if (suite == "composition") r = run_composition_suite(seed, trials, cfg);
            else if (suite == "inversion") r = run_inversion_suite(seed, trials, cfg);
            else if (suite == "reparam") r = run_reparam_suite(seed, trials, cfg);
            else if (suite == "homotopy") r = run_homotopy_suite(Bounds(parse_bounds(check_m)), seed, trials, cfg);
            else if (suite == "integrability") r = run_integrability_suite(Bounds(parse_bounds(check_m)), seed, trials);
            else if (suite == "differential") r = run_differential_suite(Bounds(parse_bounds(check_m)), seed, trials);
            else if (suite == "oracle") r = run_oracle_suite(Bounds(parse_bounds(check_m)), seed, trials, cfg);
            else throw error("unknown suite '" + suite + "'");
            json out;
            out["schema_version"] = 1;
            out["suite"] = r.name;
            out["pass"] = r.pass;
            out["max_residual"] = r.max_residual;
            out["tolerance"] = r.tolerance;
            out["cases"] = r.cases;
            if (!r.detail.empty()) out["detail"] = r.detail;
            std::cout << out.dump(2) << "\n";
            return r.pass ? 0 : 1;
        }

        if (*mono) {
            Vec x = parse_point(mono_x);
            if (x.size() != mono_n) throw error("point dimension does not match --n");
            MonodromyResult r;
            if (!mono_family.empty()) {
                FFamily fam;
                if (mono_family == "qj0") fam = FFamily::AroundCoordZero;
                else if (mono_family == "q1j") fam = FFamily::AroundLeadingProduct;
                else if (mono_family == "qjn") fam = FFamily::AroundTrailingProduct;
                else throw error("unknown family '" + mono_family + "'");
                int j0 = fam == FFamily::AroundTrailingProduct ? mono_j - 1 : mono_j - 1;
                r = check_F_relation(mono_n, fam, j0, x, cfg);
            } else {
                if (mono_comp.empty()) throw error("monodromy needs --component or --F");
                DivisorComponent comp = parse_component(mono_comp, mono_n);
                bool explicit_tail = comp.kind == DivisorComponent::Kind::ProductOne &&
                                     comp.k == mono_n - 1 && mono_bounds.empty();
                if (explicit_tail) {
                    r = check_explicit(mono_n, comp.j, x, cfg);
                } else if (!mono_bounds.empty()) {
                    r = check_trivial(build_integrand(Bounds(parse_bounds(mono_bounds))), comp, x,
                                      cfg);
                } else {
                    r = check_trivial(build_multilog_integrand(mono_n), comp, x, cfg);
                }
            }
            std::cout << result_json(r, mono_n).dump(2) << "\n";
            return 0;
        }
    } catch (const convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_NO_CONVERGENCE;
    } catch (const path_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_BAD_PATH;
    } catch (const singular_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_BAD_PATH;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_BAD_ARGS;
    }
    return 0;
}
