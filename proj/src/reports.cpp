#include "lrc/reports.hpp"

#include <json.hpp>

namespace lrc {
namespace reports {

using nlohmann::json;

namespace {

json mask_list(Mask m) { return json(gf2::mask_elements_1based(m)); }

}  // namespace

json to_json(const gf2::CodeValidation& v) {
    json pairs = json::array();
    for (auto [a, b] : v.replicated_pairs) pairs.push_back({a, b});
    return json{{"zero_column", v.zero_column},
                {"replicated_pairs", pairs},
                {"distance_ge_2", v.distance_ge_2},
                {"rows_dependent", v.rows_dependent},
                {"non_degenerate", v.non_degenerate()}};
}

json to_json(const LocalityProfile& p) {
    json sets = json::array();
    for (const auto& s : p.repair_sets)
        sets.push_back({{"elems", mask_list(s.elems)},
                        {"rank", s.rank},
                        {"nullity", s.nullity},
                        {"local_distance", s.local_distance}});
    json violations = json::array();
    for (const auto& v : p.violations) violations.push_back({{"set", v.set_index}, {"reason", v.reason}});
    json out{{"n", p.n},       {"k", p.k},           {"d", p.d},
             {"r", p.r},       {"delta", p.delta},   {"ell", p.ell},
             {"repair_sets", sets}, {"violations", violations}, {"valid", p.valid()}};
    out["coverage_gap"] = mask_list(p.coverage_gap);
    if (p.r_prime) {
        out["r_prime"] = *p.r_prime;
        json atoms = json::array();
        for (Mask a : p.atom_cover) atoms.push_back(mask_list(a));
        out["atom_cover"] = atoms;
    }
    return out;
}

json to_json(const RepairPlan& plan) {
    json eqs = json::array();
    for (const auto& e : plan.equations)
        eqs.push_back({{"symbol", e.symbol + 1}, {"xor_of", mask_list(e.xor_of)}});
    return json{{"tier", tier_name(plan.tier)}, {"equations", eqs}};
}

json to_json(const RepairChain& chain) {
    json steps = json::array();
    for (const auto& s : chain.steps)
        steps.push_back({{"y", mask_list(s.y)},
                         {"x", s.chosen_x + 1},
                         {"set", s.chosen_set},
                         {"delta_rank", s.delta_rank},
                         {"delta_nullity", s.delta_nullity},
                         {"coatom_hit", s.coatom_hit}});
    return json{{"steps", steps},
                {"m", chain.length()},
                {"alpha", {{"num", chain.alpha_num()}, {"den", chain.alpha_den()}}}};
}

json to_json(const bounds::BoundReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json j{{"name", e.name}, {"value", e.value}, {"applicable", e.applicable}};
        if (!e.note.empty()) j["note"] = e.note;
        if (e.achieved) j["achieved"] = *e.achieved;
        entries.push_back(j);
    }
    json out{{"n", rep.n}, {"k", rep.k}, {"r", rep.r}, {"delta", rep.delta}, {"bounds", entries}};
    if (rep.ell) out["ell"] = *rep.ell;
    if (rep.alpha) out["alpha"] = rep.alpha->text();
    if (rep.actual_d) out["d"] = *rep.actual_d;
    return out;
}

json to_json(const bounds::CmBound& cm) {
    json rows = json::array();
    for (const auto& r : cm.table)
        rows.push_back({{"t", r.t}, {"n_eff", r.n_eff}, {"kopt", r.kopt}, {"value", r.value}});
    return json{{"k_max", cm.k_max},
                {"best_t", cm.best_t},
                {"t_range", "t >= 0"},
                {"kopt_estimator", cm.estimator},
                {"per_t", rows}};
}

json to_json(const bounds::ComparisonReport& rep) {
    return json{{"lhs", rep.lhs},
                {"rhs_cm", rep.rhs_cm},
                {"rhs_singleton", rep.rhs_singleton},
                {"k_max", rep.k_max},
                {"cm_tighter", rep.cm_tighter},
                {"singleton_tighter", rep.singleton_tighter},
                {"equality_singleton", rep.equality_singleton}};
}

json to_json(const lab::SuiteReport& rep) {
    json fails = json::array();
    for (const auto& f : rep.failures)
        fails.push_back({{"instance", f.instance},
                         {"check", f.check},
                         {"detail", f.detail},
                         {"matrix", f.matrix_text},
                         {"subset", mask_list(f.subset)}});
    return json{{"suite", rep.suite},
                {"instances", rep.instances},
                {"excluded", rep.excluded},
                {"checks", rep.checks},
                {"failures", fails},
                {"elapsed", rep.elapsed_sec}};
}

json to_json(const lab::SearchResult& res) {
    json hits = json::array();
    for (const auto& a : res.achievers) {
        json sets = json::array();
        for (Mask z : a.repair_sets) sets.push_back(mask_list(z));
        hits.push_back({{"matrix", a.g.to_text()},
                        {"n", a.n},
                        {"k", a.k},
                        {"d", a.d},
                        {"r", a.r},
                        {"delta", a.delta},
                        {"ell", a.ell},
                        {"repair_sets", sets},
                        {"bound", a.bound}});
    }
    json out{{"achievers", hits},
             {"scanned", res.scanned},
             {"rejected_precheck", res.rejected_precheck},
             {"elapsed", res.elapsed_sec}};
    if (!res.note.empty()) out["note"] = res.note;
    return out;
}

}  // namespace reports
}  // namespace lrc
