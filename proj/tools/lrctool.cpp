// Command line front end: analyze codes, export lattices, verify locality,
// build repair chains, evaluate bounds, plan repairs, run verification
// suites and search for bound achievers.
//
// Exit codes: 0 ok, 1 usage, 2 file parse error, 3 internal oracle mismatch,
// 4 validation/verification failure, 5 domain error, 6 unrepairable.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "lrc/lab.hpp"
#include "lrc/reports.hpp"

using nlohmann::json;

namespace {

enum ExitCode {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kOracleMismatch = 3,
    kValidation = 4,
    kDomain = 5,
    kUnrepairable = 6,
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lrc::gf2::ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

void emit(const json& j, const std::string& json_path) {
    std::string text = j.dump(2) + "\n";
    if (json_path.empty())
        std::cout << text;
    else
        write_file(json_path, text);
}

struct AnalyzeResult {
    json report;
    int exit = kOk;
};

AnalyzeResult analyze(const std::string& matrix_path) {
    AnalyzeResult out;
    lrc::BitMatrix g = lrc::BitMatrix::parse(read_file(matrix_path));
    lrc::Matroid m = lrc::Matroid::from_matrix(g);
    auto validation = lrc::gf2::validate_storage_code(g);

    out.report["n"] = g.cols();
    out.report["k"] = lrc::gf2::rank(g, g.column_set());
    out.report["validation"] = lrc::reports::to_json(validation);
    if (!validation.storage_code_ok()) {
        out.report["error"] = "not a non-degenerate storage code without replication";
        out.exit = kValidation;
        return out;
    }

    auto lat = lrc::enumerate_cyclic_flats(m);
    int d_brute = lrc::gf2::min_distance(g);
    int d_formula = lrc::distance_via_flats(m, lat);
    out.report["d"] = d_brute;
    out.report["d_enumeration"] = d_brute;
    out.report["d_flat_formula"] = d_formula;
    if (d_brute != d_formula) {
        out.report["error"] = "minimum distance oracles disagree";
        out.exit = kOracleMismatch;
        return out;
    }
    out.report["cyclic_flats"] = lat.flats.size();
    json atoms = json::array();
    for (int a : lat.atoms) atoms.push_back(lrc::gf2::mask_elements_1based(lat.flats[a]));
    out.report["atoms"] = atoms;
    auto [r_prime, cover] = lrc::discover_delta2_locality(m, lat);
    out.report["r_prime"] = r_prime;
    json cov = json::array();
    for (lrc::Mask a : cover) cov.push_back(lrc::gf2::mask_elements_1based(a));
    out.report["atom_cover"] = cov;
    return out;
}

int run_analyze(const std::string& matrix_path, const std::string& json_path) {
    AnalyzeResult res = analyze(matrix_path);
    emit(res.report, json_path);
    return res.exit;
}

int run_lattice(const std::string& matrix_path, const std::string& dot_path) {
    lrc::BitMatrix g = lrc::BitMatrix::parse(read_file(matrix_path));
    lrc::Matroid m = lrc::Matroid::from_matrix(g);
    auto lat = lrc::enumerate_cyclic_flats(m);
    std::string dot = lrc::to_dot(lat, m.ground());
    if (dot_path.empty())
        std::cout << dot;
    else
        write_file(dot_path, dot);
    std::cerr << "cyclic flats: " << lat.flats.size() << ", edges: " << lat.edges.size()
              << ", atoms: " << lat.atoms.size() << ", coatoms: " << lat.coatoms.size() << "\n";
    return kOk;
}

int run_locality(const std::string& matrix_path, const std::string& sets_path, int r, int delta,
                 const std::string& json_path) {
    lrc::BitMatrix g = lrc::BitMatrix::parse(read_file(matrix_path));
    lrc::Matroid m = lrc::Matroid::from_matrix(g);
    auto sets = lrc::parse_repair_sets(read_file(sets_path), g.cols());
    auto profile = lrc::verify_locality(m, sets, r, delta);
    emit(lrc::reports::to_json(profile), json_path);
    return profile.valid() ? kOk : kValidation;
}

int run_chain(const std::string& matrix_path, const std::string& sets_path, const std::string& policy,
              std::uint64_t seed, int delta, const std::string& json_path) {
    lrc::BitMatrix g = lrc::BitMatrix::parse(read_file(matrix_path));
    lrc::Matroid m = lrc::Matroid::from_matrix(g);
    auto sets = lrc::parse_repair_sets(read_file(sets_path), g.cols());
    lrc::PickPolicy pick = policy == "random" ? lrc::PickPolicy::Random : lrc::PickPolicy::First;
    if (pick == lrc::PickPolicy::Random) std::cerr << "picker seed: " << seed << "\n";
    auto chain = lrc::build_rps_chain(m, sets, pick, seed);
    int ell = 0;
    for (lrc::Mask z : sets) ell = std::max(ell, m.rank(z));
    auto lemmas = lrc::check_chain_lemmas(chain, ell, delta);
    json out = lrc::reports::to_json(chain);
    out["ell"] = ell;
    out["lemma_violations"] = lemmas.violations;
    emit(out, json_path);
    return lemmas.ok() ? kOk : kOracleMismatch;
}

int run_bounds(int n, int k, int r, int delta, const std::string& ell_s, const std::string& alpha_s,
               int d, bool do_sweep, const std::string& csv_path, const std::string& json_path) {
    if (do_sweep) {
        std::vector<int> rs;
        for (int r_v = 3; r_v <= 10; ++r_v) rs.push_back(r_v);
        auto rows = lrc::bounds::sweep(n, delta, rs, 2, n - 1);
        std::string csv = lrc::bounds::sweep_csv(rows);
        if (csv_path.empty())
            std::cout << csv;
        else
            write_file(csv_path, csv);
        return kOk;
    }
    if (k < 1) {
        std::cerr << "bounds: --k is required unless --sweep is given\n";
        return kUsage;
    }
    std::optional<int> ell;
    if (!ell_s.empty()) ell = std::stoi(ell_s);
    std::optional<lrc::bounds::Rational> alpha;
    if (!alpha_s.empty()) alpha = lrc::bounds::Rational::parse(alpha_s);
    std::optional<int> actual_d;
    if (d >= 0) actual_d = d;
    auto rep = lrc::bounds::evaluate_bounds(n, k, r, delta, ell, alpha, actual_d);
    if (!json_path.empty()) {
        emit(lrc::reports::to_json(rep), json_path);
        return kOk;
    }
    std::cout << "n=" << n << " k=" << k << " r=" << r << " delta=" << delta;
    if (ell) std::cout << " ell=" << *ell;
    if (alpha) std::cout << " alpha=" << alpha->text();
    std::cout << "\n";
    for (const auto& e : rep.entries) {
        std::cout << "  " << e.name << ": d <= " << e.value;
        if (!e.applicable) std::cout << "  [not applicable: " << e.note << "]";
        if (e.achieved && *e.achieved) std::cout << "  ACHIEVED";
        std::cout << "\n";
    }
    return kOk;
}

int run_sweep(int n, int delta, int r_lo, int r_hi, int k_lo, int k_hi, const std::string& csv_path) {
    std::vector<int> rs;
    for (int r = r_lo; r <= r_hi; ++r) rs.push_back(r);
    auto rows = lrc::bounds::sweep(n, delta, rs, k_lo, k_hi);
    std::string csv = lrc::bounds::sweep_csv(rows);
    if (csv_path.empty())
        std::cout << csv;
    else
        write_file(csv_path, csv);
    return kOk;
}

int run_cm(int n, int d, int r, int delta, const std::string& ell_s, int k, const std::string& estimator,
           const std::string& json_path) {
    lrc::bounds::KoptEstimator fn = lrc::bounds::kopt_plotkin;
    if (estimator == "singleton") fn = lrc::bounds::kopt_singleton;
    if (estimator == "griesmer") fn = lrc::bounds::kopt_griesmer;
    auto cm = lrc::bounds::bound_cm_delta(n, d, r, delta, fn);
    cm.estimator = estimator == "plotkin" ? "plotkin_shortening" : estimator;
    json out = lrc::reports::to_json(cm);
    if (!ell_s.empty() && k >= 1) {
        auto rep = lrc::bounds::compare_cm_vs_new(n, d, r, delta, std::stoi(ell_s), k);
        out["comparison"] = lrc::reports::to_json(rep);
    }
    emit(out, json_path);
    return kOk;
}

int run_repair(const std::string& matrix_path, const std::string& sets_path, const std::string& erase_s,
               int r, int delta, std::uint64_t codeword_seed, int trials, const std::string& json_path) {
    lrc::BitMatrix g = lrc::BitMatrix::parse(read_file(matrix_path));
    lrc::Matroid m = lrc::Matroid::from_matrix(g);
    auto sets = lrc::parse_repair_sets(read_file(sets_path), g.cols());
    auto profile = lrc::verify_locality(m, sets, r, delta);
    if (!profile.valid()) {
        emit(lrc::reports::to_json(profile), "");
        return kValidation;
    }
    lrc::Mask erased = lrc::gf2::parse_mask_1based(erase_s, g.cols());
    auto plan = lrc::plan_repair(g, profile, erased);

    // simulate on random codewords and confirm bit-exact reconstruction
    std::mt19937_64 rng(codeword_seed);
    long failures = 0;
    for (int t = 0; t < trials; ++t) {
        std::uint64_t msg = rng() & lrc::gf2::full_mask(g.rows());
        std::uint64_t word = g.encode(msg);
        if (lrc::apply_repair(plan, word, erased) != word) ++failures;
    }
    json out = lrc::reports::to_json(plan);
    out["erased"] = lrc::gf2::mask_elements_1based(erased);
    out["codeword_seed"] = codeword_seed;
    out["simulated_codewords"] = trials;
    out["reconstruction_failures"] = failures;
    emit(out, json_path);
    if (failures) return kOracleMismatch;
    std::cerr << "tier " << lrc::tier_name(plan.tier) << ", " << trials << " codewords reconstructed\n";
    return kOk;
}

int run_verify(const std::string& suite, const std::string& mode, int n, int k, long count,
               std::uint64_t seed, int r, int delta, long chains, const std::string& json_path) {
    lrc::lab::InstanceSpec spec;
    spec.mode = mode == "random" ? lrc::lab::InstanceSpec::Mode::Random : lrc::lab::InstanceSpec::Mode::Exhaustive;
    spec.max_n = n;
    spec.max_k = k;
    spec.count = count;
    spec.seed = seed;
    json out = json::array();
    bool ok = true;
    auto run_one = [&](const lrc::lab::SuiteReport& rep) {
        out.push_back(lrc::reports::to_json(rep));
        ok = ok && rep.ok();
        std::cerr << rep.suite << ": " << rep.instances << " instances, " << rep.failures.size()
                  << " failures, " << rep.elapsed_sec << "s\n";
    };
    if (suite == "structure" || suite == "all") run_one(lrc::lab::verify_structure_suite(spec));
    if (suite == "cover" || suite == "all") run_one(lrc::lab::verify_cover_relation_suite(spec, r, delta));
    if (suite == "chains" || suite == "all") run_one(lrc::lab::verify_chain_suite(count > 0 ? count : 100, chains, seed));
    for (auto& j : out) j["seed"] = seed;
    emit(out, json_path);
    return ok ? kOk : kValidation;
}

int run_search(int n, int k, int d, int r, int delta, long budget, std::uint64_t seed,
               const std::string& candidate_path, const std::string& json_path) {
    std::vector<lrc::BitMatrix> seeds;
    if (!candidate_path.empty()) seeds.push_back(lrc::BitMatrix::parse(read_file(candidate_path)));
    auto res = lrc::lab::search_achievers(n, k, d, r, delta, budget, seed, seeds);
    json out = lrc::reports::to_json(res);
    out["seed"] = seed;
    emit(out, json_path);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary LRC / cyclic-flat lattice toolkit"};
    app.require_subcommand(1);

    std::string matrix_path, sets_path, json_path, dot_path, csv_path, candidate_path;
    std::string policy = "first", erase_s, ell_s, alpha_s, suite = "structure", mode = "exhaustive";
    int n = 0, k = 0, r = 0, delta = 0, d = -1;
    int r_lo = 3, r_hi = 10, k_lo = 2, k_hi = 0;
    long count = 0, budget = 100000, chains = 10;
    int trials = 1000;
    std::uint64_t seed = 0, codeword_seed = 12345;
    bool do_sweep = false;

    auto* c_analyze = app.add_subcommand("analyze", "full analysis of a generator matrix");
    c_analyze->add_option("matrix", matrix_path)->required();
    c_analyze->add_option("--json", json_path);

    auto* c_lattice = app.add_subcommand("lattice", "export the cyclic-flat lattice as DOT");
    c_lattice->add_option("matrix", matrix_path)->required();
    c_lattice->add_option("--dot", dot_path);

    auto* c_locality = app.add_subcommand("locality", "verify declared (r,delta) repair sets");
    c_locality->add_option("matrix", matrix_path)->required();
    c_locality->add_option("--sets", sets_path)->required();
    c_locality->add_option("--r", r)->required();
    c_locality->add_option("--delta", delta)->required();
    c_locality->add_option("--json", json_path);

    auto* c_chain = app.add_subcommand("chain", "build a repair-set chain and check the step lemmas");
    c_chain->add_option("matrix", matrix_path)->required();
    c_chain->add_option("--sets", sets_path)->required();
    c_chain->add_option("--policy", policy)->check(CLI::IsMember({"first", "random"}));
    c_chain->add_option("--seed", seed);
    c_chain->add_option("--delta", delta)->default_val(3);
    c_chain->add_option("--json", json_path);

    auto* c_bounds = app.add_subcommand("bounds", "evaluate distance bounds");
    c_bounds->add_option("--n", n)->required();
    c_bounds->add_option("--k", k);
    c_bounds->add_option("--r", r);
    c_bounds->add_option("--delta", delta)->required();
    c_bounds->add_option("--ell", ell_s);
    c_bounds->add_option("--alpha", alpha_s);
    c_bounds->add_option("--d", d);
    c_bounds->add_flag("--sweep", do_sweep, "emit the r=3..10 comparison CSV instead");
    c_bounds->add_option("--csv", csv_path);
    c_bounds->add_option("--json", json_path);

    auto* c_sweep = app.add_subcommand("sweep", "bound comparison grid as CSV");
    c_sweep->add_option("--n", n)->required();
    c_sweep->add_option("--delta", delta)->required();
    c_sweep->add_option("--r-min", r_lo);
    c_sweep->add_option("--r-max", r_hi);
    c_sweep->add_option("--k-min", k_lo);
    c_sweep->add_option("--k-max", k_hi);
    c_sweep->add_option("--csv", csv_path);

    auto* c_cm = app.add_subcommand("cm", "dimension bound via k_opt estimation");
    c_cm->add_option("--n", n)->required();
    c_cm->add_option("--d", d)->required();
    c_cm->add_option("--r", r)->required();
    c_cm->add_option("--delta", delta)->required();
    c_cm->add_option("--ell", ell_s);
    c_cm->add_option("--k", k);
    std::string estimator = "plotkin";
    c_cm->add_option("--estimator", estimator)->check(CLI::IsMember({"plotkin", "singleton", "griesmer"}));
    c_cm->add_option("--json", json_path);

    auto* c_repair = app.add_subcommand("repair", "plan and simulate erasure repair");
    c_repair->add_option("matrix", matrix_path)->required();
    c_repair->add_option("--sets", sets_path)->required();
    c_repair->add_option("--erase", erase_s)->required();
    c_repair->add_option("--r", r)->required();
    c_repair->add_option("--delta", delta)->required();
    c_repair->add_option("--codeword-seed", codeword_seed);
    c_repair->add_option("--trials", trials);
    c_repair->add_option("--json", json_path);

    auto* c_verify = app.add_subcommand("verify", "run the structural verification suites");
    c_verify->add_option("--suite", suite)->check(CLI::IsMember({"structure", "cover", "chains", "all"}));
    c_verify->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "random"}));
    c_verify->add_option("--n", n)->required();
    c_verify->add_option("--k", k)->required();
    c_verify->add_option("--count", count);
    c_verify->add_option("--seed", seed);
    c_verify->add_option("--r", r);
    c_verify->add_option("--delta", delta);
    c_verify->add_option("--chains", chains);
    c_verify->add_option("--json", json_path);

    auto* c_search = app.add_subcommand("search", "search for bound-achieving codes");
    c_search->add_option("--n", n)->required();
    c_search->add_option("--k", k)->required();
    c_search->add_option("--d", d)->required();
    c_search->add_option("--r", r)->required();
    c_search->add_option("--delta", delta)->required();
    c_search->add_option("--budget", budget);
    c_search->add_option("--seed", seed);
    c_search->add_option("--candidate", candidate_path, "matrix file tried before random candidates");
    c_search->add_option("--json", json_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*c_analyze) return run_analyze(matrix_path, json_path);
        if (*c_lattice) return run_lattice(matrix_path, dot_path);
        if (*c_locality) return run_locality(matrix_path, sets_path, r, delta, json_path);
        if (*c_chain) return run_chain(matrix_path, sets_path, policy, seed, delta, json_path);
        if (*c_bounds) return run_bounds(n, k, r, delta, ell_s, alpha_s, d, do_sweep, csv_path, json_path);
        if (*c_sweep) return run_sweep(n, delta, r_lo, r_hi, k_lo, k_hi ? k_hi : n - 1, csv_path);
        if (*c_cm) return run_cm(n, d, r, delta, ell_s, k, estimator, json_path);
        if (*c_repair)
            return run_repair(matrix_path, sets_path, erase_s, r, delta, codeword_seed, trials, json_path);
        if (*c_verify) return run_verify(suite, mode, n, k, count, seed, r, delta, chains, json_path);
        if (*c_search) return run_search(n, k, d, r, delta, budget, seed, candidate_path, json_path);
    } catch (const lrc::gf2::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const lrc::UnrepairableError& e) {
        std::cerr << "unrepairable: " << e.what() << "\n";
        return kUnrepairable;
    } catch (const lrc::TrichotomyViolation& e) {
        std::cerr << "structural violation: " << e.what() << "\n";
        return kOracleMismatch;
    } catch (const lrc::CoLoopError& e) {
        std::cerr << "validation: " << e.what() << "\n";
        return kValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
