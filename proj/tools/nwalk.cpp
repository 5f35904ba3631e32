// nwalk: enumeration, closed forms, simulation and feasibility checks for
// nondeterministic lattice walks.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nwalk/appendix.hpp"
#include "nwalk/automaton.hpp"
#include "nwalk/count.hpp"
#include "nwalk/dyck.hpp"
#include "nwalk/motzkin.hpp"
#include "nwalk/netfeas.hpp"
#include "nwalk/simulate.hpp"

namespace {

using namespace nwalk;

std::int64_t default_order() {
    if (const char* env = std::getenv("NWALK_ORDER")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad NWALK_ORDER value");
        }
    }
    return 64;
}

struct Output {
    std::string format = "text";
    std::string path;

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << "\n";
        } else {
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot open output file " + path);
            out << text;
        }
    }
};

void add_output_opts(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_flag_callback("--json", [&out] { out.format = "json"; },
                           "shorthand for --format json");
    cmd->add_flag_callback("--csv", [&out] { out.format = "csv"; },
                           "shorthand for --format csv");
    cmd->add_option("-o,--output", out.path, "write output to a file");
}

std::string counts_to_string(const std::vector<Rat>& counts, const Output& out) {
    std::ostringstream os;
    if (out.format == "json") {
        os << "[";
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (i) os << ", ";
            os << '"' << rat_to_string(counts[i]) << '"';
        }
        os << "]";
    } else if (out.format == "csv") {
        os << "n,count\n";
        for (std::size_t i = 0; i < counts.size(); ++i)
            os << i << "," << rat_to_string(counts[i]) << "\n";
    } else {
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (i) os << " ";
            os << rat_to_string(counts[i]);
        }
    }
    return os.str();
}

std::string series_to_string(const RationalSeries& s, const Output& out) {
    if (out.format == "json") return s.to_json();
    if (out.format == "csv") {
        std::ostringstream os;
        os << "exponent,coefficient\n";
        for (std::int64_t e = std::min<std::int64_t>(s.valuation(), 0); e < s.trunc(); ++e)
            os << e << "," << rat_to_string(s.coeff(e)) << "\n";
        return os.str();
    }
    return s.to_string();
}

WalkFamily family_from(const std::string& name) {
    if (name == "walk" || name == "walks") return WalkFamily::Walk;
    if (name == "bridge" || name == "bridges") return WalkFamily::Bridge;
    if (name == "meander" || name == "meanders") return WalkFamily::Meander;
    if (name == "excursion" || name == "excursions") return WalkFamily::Excursion;
    throw CLI::ValidationError("--class", "unknown class " + name);
}

// Walks come either semicolon-joined or as a JSON array of IntSet strings.
Walk parse_walk(const std::string& text) {
    Walk w;
    std::size_t first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '[') {
        nlohmann::json j = nlohmann::json::parse(text);
        for (auto& item : j) w.push_back(IntSet::parse(item.get<std::string>()));
        return w;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) w.push_back(IntSet::parse(item));
    return w;
}

DyckWeights dyck_weights_from(const std::string& weights) {
    if (weights.empty()) return {1, 1, 1};
    NStepSet s = NStepSet::parse("{-1};{1};{-1,1}", weights);
    DyckWeights w;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.step(i) == IntSet{-1}) w.p_m1 = s.weight(i);
        if (s.step(i) == IntSet{1}) w.p_p1 = s.weight(i);
        if (s.step(i) == IntSet{-1, 1}) w.p_m1p1 = s.weight(i);
    }
    return w;
}

int run_series(const std::string& family, const std::string& cls,
               const std::string& weights, const std::string& check,
               std::int64_t order, const Rat& x, const Rat& y, const Output& out) {
    if (family == "dyck") {
        DyckWeights w = dyck_weights_from(weights);
        RationalSeries s = RationalSeries::zero(order);
        if (!check.empty())
            throw CLI::ValidationError("--check", "only the motzkin family has checks");
        if (cls == "walk" || cls == "walks") {
            s = dyck_walk_gf(w, order).eval(x, y);
        } else if (cls == "bridge" || cls == "bridges") {
            if (!(w.p_m1 == 1 && w.p_p1 == 1 && w.p_m1p1 == 1))
                throw CLI::ValidationError(
                    "--class",
                    "the closed bridge form is unweighted; use `count` for weights");
            s = dyck_bridge_gf_unweighted(order);
        } else if (cls == "meander" || cls == "meanders") {
            s = dyck_meander_gf(w, x, y, order);
        } else if (cls == "excursion" || cls == "excursions") {
            s = dyck_meander_gf(w, 0, 1, order);
        } else if (cls == "d00") {
            s = dyck_meander_gf(w, 0, 0, order);
        } else {
            throw CLI::ValidationError("--class", "unknown dyck series " + cls);
        }
        out.emit(series_to_string(s, out));
        return 0;
    }
    if (family == "motzkin") {
        if (!check.empty()) {
            if (check != "closed-forms")
                throw CLI::ValidationError("--check", "unknown check " + check);
            ClosedFormReport rep = motzkin_closed_form_checks(std::max<std::int64_t>(order, 16));
            if (out.format == "json") {
                std::ostringstream os;
                os << "{\"meander_ok\": " << (rep.meander_ok ? "true" : "false")
                   << ", \"meander_first_mismatch\": " << rep.meander_first_mismatch
                   << ", \"quartic_ok\": " << (rep.quartic_ok ? "true" : "false")
                   << ", \"quartic_first_nonzero\": " << rep.quartic_first_nonzero
                   << "}";
                out.emit(os.str());
            } else {
                out.emit(rep.to_string());
            }
            return rep.meander_ok && rep.quartic_ok ? 0 : 2;
        }
        RationalSeries s = RationalSeries::zero(order);
        if (cls == "meander" || cls == "meanders") {
            s = motzkin_meander_closed_form(order);
        } else if (cls == "walk" || cls == "walks") {
            s = motzkin_walk_series(order).total_at_11;
        } else if (cls == "excursion" || cls == "excursions") {
            s = RationalSeries::poly(
                count_by_dp(NStepSet::motzkin_unweighted(), order - 1,
                            WalkFamily::Excursion),
                order);
        } else {
            throw CLI::ValidationError("--class", "unknown motzkin series " + cls);
        }
        out.emit(series_to_string(s, out));
        return 0;
    }
    throw CLI::ValidationError("--family", "unknown family " + family);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nondeterministic lattice walk toolkit"};
    app.require_subcommand(1);

    std::string steps_text, weights_text, class_name = "walk", mode = "full";
    std::string walk_text, family = "dyck", check, stat_name = "returns";
    std::string pattern = "all", topology_path, caps_path, path_nodes, kinds;
    std::int64_t n = 8, order = 0, length = 100, kmax = 64;
    std::uint64_t runs = 10000, seed = 0;
    bool conditioned = false;
    Rat x(1), y(1);
    std::string x_text = "1", y_text = "1";
    Output out;

    auto* count = app.add_subcommand("count", "exact weighted class counts by DP");
    count->add_option("--steps", steps_text, "semicolon-separated N-steps")->required();
    count->add_option("--weights", weights_text, "comma-separated rational weights");
    count->add_option("--class", class_name, "walk|bridge|meander|excursion");
    count->add_option("-n", n, "maximum length");
    count->add_option("--mode", mode, "full|type")->check(CLI::IsMember({"full", "type"}));
    add_output_opts(count, out);

    auto* series = app.add_subcommand("series", "closed-form generating function series");
    series->add_option("--family", family, "dyck|motzkin")->required();
    series->add_option("--class", class_name, "walk|bridge|meander|excursion|d00");
    series->add_option("--weights", weights_text, "dyck weights p_m1,p_p1,p_m1p1");
    series->add_option("--check", check, "motzkin: closed-forms");
    series->add_option("--order", order, "truncation order (default NWALK_ORDER or 64)");
    series->add_option("--x", x_text, "x specialization (rational)");
    series->add_option("--y", y_text, "y specialization (rational)");
    add_output_opts(series, out);

    auto* dyck_alias = app.add_subcommand("dyck", "alias of series --family dyck");
    dyck_alias->add_option("--class", class_name);
    dyck_alias->add_option("--weights", weights_text);
    dyck_alias->add_option("--order", order);
    dyck_alias->add_option("--x", x_text);
    dyck_alias->add_option("--y", y_text);
    add_output_opts(dyck_alias, out);

    auto* motzkin_alias = app.add_subcommand("motzkin", "alias of series --family motzkin");
    motzkin_alias->add_option("--class", class_name);
    motzkin_alias->add_option("--check", check);
    motzkin_alias->add_option("--order", order);
    add_output_opts(motzkin_alias, out);

    auto* classify = app.add_subcommand("classify", "classify one explicit N-walk");
    classify->add_option("--walk", walk_text, "semicolon-separated N-steps")->required();
    add_output_opts(classify, out);

    auto* simulate = app.add_subcommand("simulate", "seeded Monte Carlo estimates");
    simulate->add_option("--steps", steps_text)->required();
    simulate->add_option("--weights", weights_text, "probabilities, must sum to 1")
        ->required();
    simulate->add_option("-n", length, "walk length");
    simulate->add_option("--runs", runs);
    simulate->add_option("--seed", seed);
    simulate->add_option("--class", class_name, "bridge|meander|excursion");
    simulate->add_option("--stat", stat_name, "returns|max (histogram mode)");
    simulate->add_flag("--conditioned", conditioned, "condition on excursions");
    auto* hist_flag = simulate->add_flag("--histogram", "emit a statistic histogram");
    add_output_opts(simulate, out);

    auto* automaton = app.add_subcommand("automaton", "infer types and export the automaton");
    automaton->add_option("--steps", steps_text)->required();
    automaton->add_option("--weights", weights_text);
    automaton->add_option("--bridge-order", order, "also print the bridge series");
    add_output_opts(automaton, out);

    auto* asym = app.add_subcommand("asym", "evaluate printed asymptotic formulas");
    asym->add_option("--family", family, "dyck|motzkin")->required();
    asym->add_option("--class", class_name)->required();
    asym->add_option("-n", n, "length")->required();
    asym->add_option("--weights", weights_text,
                     "dyck probabilities: excursion-probability regimes");
    add_output_opts(asym, out);

    auto* feasible = app.add_subcommand("feasible", "encapsulation path feasibility");
    feasible->add_option("--topology", topology_path, "edge list file");
    feasible->add_option("--caps", caps_path, "capability label file");
    feasible->add_option("--path", path_nodes, "comma-separated node names");
    feasible->add_option("--kinds", kinds, "comma-separated capability kinds");
    add_output_opts(feasible, out);

    auto* oracle = app.add_subcommand("oracle-check",
                                      "compare DP counts against closed formulas");
    oracle->add_option("--pattern", pattern, "row id, OEIS tag, or 'all'");
    oracle->add_option("--n-max", n, "check lengths 0..n_max");
    add_output_opts(oracle, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors are exit 1
    }

    try {
        if (order == 0) order = default_order();
        x = parse_rat(x_text);
        y = parse_rat(y_text);

        if (count->parsed()) {
            NStepSet S = NStepSet::parse(steps_text, weights_text);
            StateMode m = mode == "type" ? StateMode::TypeCompressed : StateMode::FullSet;
            out.emit(counts_to_string(count_by_dp(S, n, family_from(class_name), m), out));
            return 0;
        }
        if (series->parsed())
            return run_series(family, class_name, weights_text, check, order, x, y, out);
        if (dyck_alias->parsed())
            return run_series("dyck", class_name, weights_text, "", order, x, y, out);
        if (motzkin_alias->parsed())
            return run_series("motzkin", class_name, "", check, order, x, y, out);

        if (classify->parsed()) {
            WalkClass c = classify_walk(parse_walk(walk_text));
            std::ostringstream os;
            if (out.format == "json")
                os << "{\"bridge\": " << (c.is_bridge ? "true" : "false")
                   << ", \"meander\": " << (c.is_meander ? "true" : "false")
                   << ", \"excursion\": " << (c.is_excursion ? "true" : "false") << "}";
            else
                os << "bridge=" << (c.is_bridge ? "true" : "false")
                   << " meander=" << (c.is_meander ? "true" : "false")
                   << " excursion=" << (c.is_excursion ? "true" : "false");
            out.emit(os.str());
            return 0;
        }

        if (simulate->parsed()) {
            SimConfig cfg{NStepSet::parse(steps_text, weights_text), length, runs, seed};
            if (hist_flag->count()) {
                SimStatistic st = stat_name == "max" ? SimStatistic::FinalMax
                                                     : SimStatistic::ReturnsToZero;
                Histogram h = statistic_histogram(cfg, st, conditioned);
                std::ostringstream os;
                if (out.format == "csv" || out.format == "text") {
                    os << h.to_csv();
                } else {
                    os << "{\"accepted\": " << h.accepted << ", \"total\": " << h.total
                       << ", \"bins\": {";
                    bool first = true;
                    for (auto& [k, c] : h.bins) {
                        if (!first) os << ", ";
                        first = false;
                        os << "\"" << k << "\": " << c;
                    }
                    os << "}}";
                }
                std::cerr << "accepted " << h.accepted << " of " << h.total << " runs\n";
                out.emit(os.str());
                return 0;
            }
            SimFamily fam = SimFamily::Excursion;
            if (class_name == "bridge") fam = SimFamily::Bridge;
            if (class_name == "meander") fam = SimFamily::Meander;
            Estimate e = estimate_class_probability(cfg, fam);
            std::ostringstream os;
            if (out.format == "json")
                os << "{\"estimate\": " << e.value << ", \"stderr\": " << e.stderr_
                   << ", \"hits\": " << e.hits << ", \"runs\": " << e.total << "}";
            else
                os << "estimate=" << e.value << " stderr=" << e.stderr_ << " hits="
                   << e.hits << " runs=" << e.total;
            out.emit(os.str());
            return 0;
        }

        if (automaton->parsed()) {
            NStepSet S = NStepSet::parse(steps_text, weights_text);
            InferResult inf = infer_types(S);
            if (!inf.ok) {
                std::ostringstream os;
                os << "type inference failed; unmatched reach sets:";
                for (auto& s : inf.unmatched) os << " " << s.to_string();
                std::cerr << os.str() << "\n";
                return 2;
            }
            TypeAutomaton aut = build_automaton(S, inf.types);
            std::ostringstream os;
            os << export_transition_system(aut);
            if (automaton->count("--bridge-order"))
                os << "bridge series: "
                   << bridge_series_from_automaton(aut, order).to_string() << "\n";
            out.emit(os.str());
            return 0;
        }

        if (asym->parsed()) {
            std::ostringstream os;
            if (family == "dyck" && !weights_text.empty()) {
                DyckWeights w = dyck_weights_from(weights_text);
                os << "regime " << dyck_excursion_regime(w) << ": P(excursion at length "
                   << n << ") ~ " << dyck_excursion_prob_asym(w, n);
            } else if (family == "dyck") {
                DyckClass c = DyckClass::Walk;
                if (class_name == "bridge") c = DyckClass::Bridge;
                if (class_name == "meander") c = DyckClass::Meander;
                if (class_name == "excursion") c = DyckClass::Excursion;
                os << dyck_asymptotic(c, n);
            } else {
                MotzkinClass c = MotzkinClass::Walk;
                if (class_name == "bridge") c = MotzkinClass::Bridge;
                if (class_name == "meander") c = MotzkinClass::Meander;
                if (class_name == "excursion") c = MotzkinClass::Excursion;
                os << motzkin_asymptotic(c, n);
            }
            out.emit(os.str());
            return 0;
        }

        if (feasible->parsed()) {
            NetworkPath p;
            if (!kinds.empty()) {
                std::stringstream in(kinds);
                std::string item;
                while (std::getline(in, item, ','))
                    p.capabilities.push_back(capability_from_string(item));
            } else {
                Topology t = Topology::from_files(topology_path, caps_path);
                std::vector<std::string> nodes;
                std::stringstream in(path_nodes);
                std::string item;
                while (std::getline(in, item, ',')) nodes.push_back(item);
                p = t.path(nodes);
            }
            bool ok = feasibility_check(p);
            out.emit(out.format == "json"
                         ? std::string("{\"feasible\": ") + (ok ? "true}" : "false}")
                         : std::string("feasible=") + (ok ? "true" : "false"));
            return 0;
        }

        if (oracle->parsed()) {
            auto results = oracle_check(pattern, n);
            std::ostringstream os;
            bool all_ok = true;
            if (out.format == "json") os << "[";
            for (std::size_t i = 0; i < results.size(); ++i) {
                const auto& r = results[i];
                all_ok = all_ok && r.pass;
                std::ostringstream counts;
                for (std::size_t n = 0; n < r.counts.size(); ++n) {
                    if (n) counts << (out.format == "json" ? ", " : " ");
                    if (out.format == "json") counts << '"';
                    counts << r.counts[n].get_str();
                    if (out.format == "json") counts << '"';
                }
                if (out.format == "json") {
                    if (i) os << ", ";
                    os << "{\"id\": \"" << r.id << "\", \"oeis\": \"" << r.oeis
                       << "\", \"formula\": " << (r.has_formula ? "true" : "false")
                       << ", \"pass\": " << (r.pass ? "true" : "false")
                       << ", \"counts\": [" << counts.str() << "]}";
                } else if (!r.has_formula) {
                    os << r.id << " (" << r.oeis << "): dp-only: " << counts.str()
                       << "\n";
                } else {
                    os << r.id << " (" << r.oeis << "): "
                       << (r.pass ? "pass" : "FAIL at n=" + std::to_string(r.first_mismatch))
                       << "\n";
                }
            }
            if (out.format == "json") os << "]";
            out.emit(os.str());
            return all_ok ? 0 : 2;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
