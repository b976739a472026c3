#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sunflower/bounds.hpp"
#include "sunflower/gen.hpp"
#include "sunflower/io.hpp"
#include "sunflower/spread.hpp"
#include "sunflower/sunflower.hpp"
#include "sunflower/threshold.hpp"
#include "sunflower/vc.hpp"
#include "sunflower/verify.hpp"

namespace {

using nlohmann::json;
using namespace sunflower;

constexpr int kExitFound = 0;
constexpr int kExitAbsent = 1;
constexpr int kExitUsage = 2;

std::size_t env_limit(const char* name, std::size_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return static_cast<std::size_t>(std::strtoull(v, nullptr, 10));
}

struct CommonOpts {
    std::string input;
    std::string output;
    unsigned threads = 1;
    std::uint64_t seed = 0;
};

SetSystem load_input(const CommonOpts& opts) {
    if (!opts.input.empty()) return read_system_file(opts.input);
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return read_system_text(buf.str());
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output);
    if (!out) throw std::runtime_error("cannot write " + opts.output);
    out << text;
}

json labels_of(const SetSystem& h, const Bitset& mask) {
    json arr = json::array();
    for (int e : mask.elements()) arr.push_back(h.ground[static_cast<std::size_t>(e)]);
    return arr;
}

json sunflower_json(const SetSystem& h, const Sunflower& s) {
    json out;
    out["r"] = s.members.size();
    out["members"] = s.members;
    json sets = json::array();
    for (int m : s.members) sets.push_back(labels_of(h, h.members[static_cast<std::size_t>(m)]));
    out["member_sets"] = sets;
    out["kernel"] = labels_of(h, s.kernel);
    return out;
}

json witness_json(const SetSystem& h, const StructWitness& w) {
    json out;
    out["x"] = h.ground[static_cast<std::size_t>(w.x)];
    out["y"] = h.ground[static_cast<std::size_t>(w.y)];
    out["s_x"] = labels_of(h, h.members[static_cast<std::size_t>(w.s_x)]);
    out["s_y"] = labels_of(h, h.members[static_cast<std::size_t>(w.s_y)]);
    out["s_xy"] = labels_of(h, h.members[static_cast<std::size_t>(w.s_xy)]);
    return out;
}

json cover_json(const SetSystem& h, const CoverCertificate& c) {
    json out;
    json pieces = json::array();
    for (const Bitset& f : c.pieces.members) pieces.push_back(labels_of(h, f));
    out["pieces"] = pieces;
    out["weight"] = c.weight.to_string();
    return out;
}

// Reports are replayable: command, parameters, seed and input digest pin the
// run; timing_ms is the only field that varies between identical runs.
int emit_report(const CommonOpts& opts, const std::string& command, json parameters, json outcome,
                std::optional<std::string> digest, std::chrono::steady_clock::time_point started, int exit_code) {
    json rep;
    rep["command"] = command;
    rep["parameters"] = std::move(parameters);
    rep["seed"] = opts.seed;
    if (digest) rep["input_digest"] = *digest;
    rep["outcome"] = std::move(outcome);
    rep["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    emit(opts, rep.dump(2) + "\n");
    return exit_code;
}

ThresholdLimits threshold_limits(const CommonOpts& opts) {
    ThresholdLimits lim;
    lim.max_prob_n = env_limit("SUNFLOWER_PROB_N", lim.max_prob_n);
    lim.max_cover_members = env_limit("SUNFLOWER_COVER_H", lim.max_cover_members);
    lim.max_vc_n = env_limit("SUNFLOWER_VC_N", lim.max_vc_n);
    lim.threads = opts.threads;
    return lim;
}

Bitset parse_element_list(const SetSystem& h, const std::string& csv) {
    Bitset mask(h.n());
    if (csv.empty()) return mask;
    std::stringstream ss(csv);
    std::string label;
    while (std::getline(ss, label, ',')) {
        auto it = std::find(h.ground.begin(), h.ground.end(), label);
        if (it == h.ground.end()) throw std::invalid_argument("unknown ground label: " + label);
        mask.set(static_cast<std::size_t>(it - h.ground.begin()));
    }
    return mask;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sunflower, VC-dimension and threshold-dichotomy toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--input,-i", opts.input, "set-system file (text or .json); stdin if omitted");
    app.add_option("--output,-o", opts.output, "write the report here instead of stdout");
    app.add_option("--threads", opts.threads, "worker count for exact enumerations");
    app.add_option("--seed", opts.seed, "seed for randomized commands");

    // vc
    auto* cmd_vc = app.add_subcommand("vc", "exact VC-dimension with a shattered witness");

    // sunflower
    auto* cmd_sf = app.add_subcommand("sunflower", "sunflower search and extraction");
    cmd_sf->require_subcommand(1);
    int sf_r = 3;
    int sf_trials = 100;
    std::string sweep_sizes = "2:16:1";
    int sweep_instances = 20;
    std::size_t sweep_n = 12, sweep_ell = 3;
    auto* sf_find = cmd_sf->add_subcommand("find", "complete exact search");
    sf_find->add_option("--r", sf_r, "sunflower size")->required();
    auto* sf_er = cmd_sf->add_subcommand("er", "greedy Erdos–Rado extractor");
    sf_er->add_option("--r", sf_r, "sunflower size")->required();
    auto* sf_vc1 = cmd_sf->add_subcommand("vc1", "constructive extraction for VC <= 1 families");
    sf_vc1->add_option("--r", sf_r, "sunflower size")->required();
    auto* sf_wit = cmd_sf->add_subcommand("witness", "sunflower-or-witness recursion");
    sf_wit->add_option("--r", sf_r, "sunflower size")->required();
    auto* sf_part = cmd_sf->add_subcommand("partition", "random 2r-partition search for disjoint members");
    sf_part->add_option("--r", sf_r, "sunflower size")->required();
    sf_part->add_option("--trials", sf_trials, "number of random partitions");
    auto* sf_sweep = cmd_sf->add_subcommand("threshold-sweep", "CSV: family size vs. r-sunflower frequency");
    sf_sweep->add_option("--r", sf_r, "sunflower size")->required();
    sf_sweep->add_option("--sizes", sweep_sizes, "family sizes lo:hi[:step]");
    sf_sweep->add_option("--instances", sweep_instances, "random instances per size");
    sf_sweep->add_option("--n", sweep_n, "ground-set size");
    sf_sweep->add_option("--ell", sweep_ell, "member-size bound");

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "named constructions");
    std::uint64_t tree_r = 3, tree_ell = 2;
    auto* ct_tree = cmd_construct->add_subcommand("tree", "extremal (r-1)-ary tree path family");
    ct_tree->add_option("--r", tree_r, "sunflower size the construction defeats")->required();
    ct_tree->add_option("--ell", tree_ell, "tree depth")->required();
    std::string construct_format = "text";
    ct_tree->add_option("--format", construct_format, "text or json");

    // spread
    auto* cmd_spread = app.add_subcommand("spread", "W-decompositions and the counting expectation");
    cmd_spread->require_subcommand(1);
    std::string spread_w;
    std::size_t spread_t = 1;
    std::string spread_chooser = "lex";
    std::string spread_p = "1/2", spread_q = "1/4";
    auto* sp_dec = cmd_spread->add_subcommand("decompose", "small/large split for a fixed W");
    sp_dec->add_option("--w", spread_w, "comma-separated W labels");
    sp_dec->add_option("--t", spread_t, "size threshold")->required();
    sp_dec->add_option("--chooser", spread_chooser, "lex or random");
    auto* sp_exp = cmd_spread->add_subcommand("expectation", "exact E[sum of q^|F| over the large family]");
    sp_exp->add_option("--p", spread_p, "inclusion probability (rational)");
    sp_exp->add_option("--q", spread_q, "weight base (rational)");
    sp_exp->add_option("--t", spread_t, "size threshold")->required();
    sp_exp->add_option("--chooser", spread_chooser, "lex or random");

    // kk
    auto* cmd_kk = app.add_subcommand("kk", "threshold dichotomy checks");
    cmd_kk->require_subcommand(1);
    std::string kk_variant = "kk-bell", kk_q = "1/8", kk_eps = "1/2", kk_constant;
    std::string kk_qlist;
    auto* kk_check = cmd_kk->add_subcommand("check", "evaluate both branches exactly");
    kk_check->add_option("--variant", kk_variant, "kk-bell, vc or vc1");
    kk_check->add_option("--q", kk_q, "weight base (rational)")->required();
    kk_check->add_option("--epsilon", kk_eps, "epsilon in (0,1/2]")->required();
    kk_check->add_option("--constant", kk_constant, "constant for vc/vc1 (48 default for kk-bell)");
    auto* kk_sweep = cmd_kk->add_subcommand("sweep", "CSV over a list of q values");
    kk_sweep->add_option("--variant", kk_variant, "kk-bell, vc or vc1");
    kk_sweep->add_option("--q-list", kk_qlist, "comma-separated rationals")->required();
    kk_sweep->add_option("--epsilon", kk_eps, "epsilon in (0,1/2]")->required();
    kk_sweep->add_option("--constant", kk_constant, "constant for vc/vc1");

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "scalar bound functions");
    cmd_bounds->require_subcommand(1);
    std::string bounds_x = "1";
    std::uint64_t bounds_d = 1, bounds_ell = 1, bounds_r = 3;
    auto* b_logstar = cmd_bounds->add_subcommand("logstar", "smoothed iterated logarithm");
    b_logstar->add_option("--x", bounds_x, "argument (arbitrary precision)")->required();
    auto* b_lambda = cmd_bounds->add_subcommand("lambda", "lambda_d(ell)");
    b_lambda->add_option("--d", bounds_d)->required();
    b_lambda->add_option("--ell", bounds_ell)->required();
    auto* b_er = cmd_bounds->add_subcommand("er-bound", "(r-1)^ell * ell!");
    b_er->add_option("--r", bounds_r)->required();
    b_er->add_option("--ell", bounds_ell)->required();

    // gen
    auto* cmd_gen = app.add_subcommand("gen", "random family generators");
    std::string gen_kind = "uniform";
    std::size_t gen_n = 10, gen_ell = 3, gen_size = 5;
    std::string gen_format = "text";
    cmd_gen->add_option("--kind", gen_kind, "uniform, forest-path or rejection-vc1");
    cmd_gen->add_option("--n", gen_n, "ground-set size");
    cmd_gen->add_option("--ell", gen_ell, "member-size bound");
    cmd_gen->add_option("--size", gen_size, "family size");
    cmd_gen->add_option("--format", gen_format, "text or json");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a named invariant suite");
    std::string verify_suite;
    cmd_verify->add_option("--suite", verify_suite, "module suite name (or 'all')")->required();

    // Global options (--seed, --input, ...) remain usable after a subcommand.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        cmd->fallthrough();
        for (CLI::App* sub : cmd->get_subcommands({})) enable_fallthrough(sub);
    };
    for (CLI::App* sub : app.get_subcommands({})) enable_fallthrough(sub);

    CLI11_PARSE(app, argc, argv);
    auto started = std::chrono::steady_clock::now();

    try {
        if (cmd_vc->parsed()) {
            SetSystem h = load_input(opts);
            ShatterReport rep = vc_dimension(h, env_limit("SUNFLOWER_VC_N", 24));
            json outcome;
            outcome["dimension"] = rep.dimension;
            outcome["witness"] = labels_of(h, rep.witness);
            return emit_report(opts, "vc", json::object(), outcome, system_digest(h), started, kExitFound);
        }

        if (cmd_sf->parsed()) {
            if (sf_sweep->parsed()) {
                unsigned long long lo = 2, hi = 16, step = 1;
                std::sscanf(sweep_sizes.c_str(), "%llu:%llu:%llu", &lo, &hi, &step);
                if (step == 0) step = 1;
                std::ostringstream csv;
                csv << "family_size,instances,found,fraction\n";
                for (std::uint64_t size = lo; size <= hi; size += step) {
                    int found = 0;
                    for (int inst = 0; inst < sweep_instances; ++inst) {
                        GeneratorConfig cfg;
                        cfg.n = sweep_n;
                        cfg.ell = sweep_ell;
                        cfg.family_size = size;
                        cfg.seed = Rng::mix(opts.seed, size * 1000003 + static_cast<std::uint64_t>(inst));
                        SetSystem h = random_family(cfg);
                        if (find_sunflower_exact(h, sf_r)) ++found;
                    }
                    csv << size << ',' << sweep_instances << ',' << found << ','
                        << static_cast<double>(found) / sweep_instances << '\n';
                }
                emit(opts, csv.str());
                return kExitFound;
            }

            SetSystem h = load_input(opts);
            std::string digest = system_digest(h);
            json params;
            params["r"] = sf_r;

            if (sf_find->parsed() || sf_er->parsed() || sf_part->parsed()) {
                std::optional<Sunflower> s;
                std::string name;
                if (sf_find->parsed()) {
                    s = find_sunflower_exact(h, sf_r);
                    name = "sunflower find";
                } else if (sf_er->parsed()) {
                    s = extract_er(h, sf_r);
                    name = "sunflower er";
                } else {
                    params["trials"] = sf_trials;
                    s = disjoint_via_partition(h, sf_r, sf_trials, opts.seed);
                    name = "sunflower partition";
                }
                json outcome;
                outcome["found"] = s.has_value();
                if (s) outcome["sunflower"] = sunflower_json(h, *s);
                return emit_report(opts, name, params, outcome, digest, started, s ? kExitFound : kExitAbsent);
            }
            if (sf_vc1->parsed()) {
                Sunflower s = extract_vc1(h, sf_r);
                json outcome;
                outcome["found"] = true;
                outcome["sunflower"] = sunflower_json(h, s);
                return emit_report(opts, "sunflower vc1", params, outcome, digest, started, kExitFound);
            }
            if (sf_wit->parsed()) {
                WitnessOutcome oc = witness_or_sunflower(h, sf_r);
                json outcome;
                int code = kExitFound;
                if (auto* s = std::get_if<Sunflower>(&oc)) {
                    outcome["kind"] = "sunflower";
                    outcome["sunflower"] = sunflower_json(h, *s);
                } else if (auto* w = std::get_if<StructWitness>(&oc)) {
                    outcome["kind"] = "witness";
                    outcome["witness"] = witness_json(h, *w);
                } else {
                    outcome["kind"] = "inconclusive";
                    code = kExitAbsent;
                }
                return emit_report(opts, "sunflower witness", params, outcome, digest, started, code);
            }
        }

        if (cmd_construct->parsed()) {
            SetSystem h = tree_family(tree_r, tree_ell);
            emit(opts, construct_format == "json" ? write_system_json(h) : write_system_text(h));
            return kExitFound;
        }

        if (cmd_spread->parsed()) {
            SetSystem h = load_input(opts);
            std::string digest = system_digest(h);
            ChooserRule rule{spread_chooser == "random" ? ChooserKind::seeded_random : ChooserKind::lexicographic,
                             opts.seed};
            if (sp_dec->parsed()) {
                Bitset w = parse_element_list(h, spread_w);
                SpreadDecomposition dec = decompose(h, w, spread_t, rule);
                json params;
                params["w"] = labels_of(h, w);
                params["t"] = spread_t;
                params["chooser"] = spread_chooser;
                json outcome;
                json small = json::array(), large = json::array(), chosen = json::array();
                for (const Bitset& f : dec.small.members) small.push_back(labels_of(h, f));
                for (const Bitset& f : dec.large.members) large.push_back(labels_of(h, f));
                for (std::size_t i = 0; i < h.size(); ++i) {
                    json row;
                    row["member"] = labels_of(h, h.members[i]);
                    row["f"] = labels_of(h, dec.chosen[i]);
                    row["f_star"] = labels_of(h, dec.f_star[i]);
                    chosen.push_back(row);
                }
                outcome["small"] = small;
                outcome["large"] = large;
                outcome["choices"] = chosen;
                return emit_report(opts, "spread decompose", params, outcome, digest, started, kExitFound);
            }
            if (sp_exp->parsed()) {
                SpreadLimits lim;
                lim.max_exact_n = env_limit("SUNFLOWER_EXPECT_N", lim.max_exact_n);
                lim.threads = opts.threads;
                Rational p = Rational::parse(spread_p), q = Rational::parse(spread_q);
                Rational value = expectation_large_weight_exact(h, p, q, spread_t, rule, lim);
                json params;
                params["p"] = p.to_string();
                params["q"] = q.to_string();
                params["t"] = spread_t;
                params["chooser"] = spread_chooser;
                json outcome;
                outcome["expectation"] = value.to_string();
                outcome["expectation_approx"] = value.to_double();
                return emit_report(opts, "spread expectation", params, outcome, digest, started, kExitFound);
            }
        }

        if (cmd_kk->parsed()) {
            SetSystem h = load_input(opts);
            std::string digest = system_digest(h);
            KkVariant variant = KkVariant::kk_bell;
            if (kk_variant == "vc") variant = KkVariant::vc;
            else if (kk_variant == "vc1") variant = KkVariant::vc1;
            else if (kk_variant != "kk-bell") throw std::invalid_argument("unknown variant: " + kk_variant);
            std::optional<Rational> constant;
            if (!kk_constant.empty()) constant = Rational::parse(kk_constant);
            Rational eps = Rational::parse(kk_eps);
            ThresholdLimits lim = threshold_limits(opts);

            auto report_of = [&](const Rational& q) {
                return kk_dichotomy(h, q, eps, variant, constant ? &*constant : nullptr, lim);
            };

            if (kk_check->parsed()) {
                DichotomyReport rep = report_of(Rational::parse(kk_q));
                json params;
                params["variant"] = variant_name(variant);
                params["q"] = rep.q.to_string();
                params["epsilon"] = rep.epsilon.to_string();
                params["constant"] = rep.constant_used.to_string();
                json outcome;
                outcome["p_evaluated"] = rep.p_evaluated.to_string();
                outcome["p_note"] = "dyadic upper bound of the variant formula, capped at 1";
                outcome["min_cover_weight"] = rep.min_weight.to_string();
                outcome["prob_upset"] = rep.prob_upset.to_string();
                outcome["cover_threshold"] = rep.cover_threshold.to_string();
                outcome["branch1_holds"] = rep.branch1_holds;
                outcome["branch2_holds"] = rep.branch2_holds;
                outcome["best_cover"] = cover_json(h, rep.best_cover);
                if (variant == KkVariant::vc) outcome["vc_dimension"] = rep.vc_dim_used;
                bool holds = rep.branch1_holds || rep.branch2_holds;
                return emit_report(opts, "kk check", params, outcome, digest, started,
                                   holds ? kExitFound : kExitAbsent);
            }
            if (kk_sweep->parsed()) {
                std::ostringstream csv;
                csv << "q,p_evaluated,min_cover_weight,prob_upset,branch1,branch2\n";
                std::stringstream ss(kk_qlist);
                std::string tok;
                bool all_hold = true;
                while (std::getline(ss, tok, ',')) {
                    DichotomyReport rep = report_of(Rational::parse(tok));
                    all_hold = all_hold && (rep.branch1_holds || rep.branch2_holds);
                    csv << rep.q.to_string() << ',' << rep.p_evaluated.to_double() << ','
                        << rep.min_weight.to_double() << ',' << rep.prob_upset.to_double() << ','
                        << rep.branch1_holds << ',' << rep.branch2_holds << '\n';
                }
                emit(opts, csv.str());
                return all_hold ? kExitFound : kExitAbsent;
            }
        }

        if (cmd_bounds->parsed()) {
            if (b_logstar->parsed()) {
                std::cout << log_star_smoothed(BigUint::from_decimal(bounds_x)).to_string() << "\n";
                return kExitFound;
            }
            if (b_lambda->parsed()) {
                std::cout << lambda_d(bounds_d, bounds_ell).to_string() << "\n";
                return kExitFound;
            }
            if (b_er->parsed()) {
                std::cout << er_bound(bounds_r, bounds_ell).to_decimal() << "\n";
                return kExitFound;
            }
        }

        if (cmd_gen->parsed()) {
            GeneratorConfig cfg;
            cfg.n = gen_n;
            cfg.ell = gen_ell;
            cfg.family_size = gen_size;
            cfg.seed = opts.seed;
            if (gen_kind == "uniform") cfg.kind = FamilyKind::uniform_random;
            else if (gen_kind == "forest-path") cfg.kind = FamilyKind::forest_path;
            else if (gen_kind == "rejection-vc1") cfg.kind = FamilyKind::rejection_vc1;
            else throw std::invalid_argument("unknown generator kind: " + gen_kind);
            SetSystem h = random_family(cfg);
            emit(opts, gen_format == "json" ? write_system_json(h) : write_system_text(h));
            return kExitFound;
        }

        if (cmd_verify->parsed()) {
            std::vector<std::string> suites =
                verify_suite == "all" ? verify_suite_names() : std::vector<std::string>{verify_suite};
            bool all_pass = true;
            for (const std::string& suite : suites) {
                for (const PropertyResult& r : run_verify_suite(suite, opts.seed)) {
                    std::cout << (r.pass ? "[pass] " : "[FAIL] ") << suite << "/" << r.name;
                    if (!r.detail.empty()) std::cout << " — " << r.detail;
                    std::cout << "\n";
                    all_pass = all_pass && r.pass;
                }
            }
            return all_pass ? kExitFound : kExitAbsent;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::cerr << "error: no subcommand handled\n";
    return kExitUsage;
}
