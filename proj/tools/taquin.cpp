// Command-line front end: family generators, the emptying engine, the
// property checkers, the fair-chart simulator and the census harness.
//
// Exit codes: 0 success / true verdict, 1 false verdict, 2 usage or input
// error, 3 internal invariant violation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "taquin/taquin.hpp"

using namespace taquin;

namespace {

struct GlobalOpts {
    std::string format = "text";  // text | json | csv
    int threads = 0;
    uint64_t seed = 0;
    std::string echo;  // config echo for report headers
};

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

nlohmann::json report_header(const GlobalOpts& g) {
    return {{"tool", "taquin"}, {"version", kVersion}, {"seed", g.seed}, {"config", g.echo}};
}

void emit_poset(const Poset& p, const std::string& out_path) {
    if (out_path.empty())
        std::cout << poset_to_json(p).dump(2) << "\n";
    else
        write_poset_file(out_path, p);
}

std::string bubble_name(int code) { return BubbleId{code}.name(); }

int cmd_gen(const GlobalOpts&, const std::string& shape_arg, const std::string& shifted_arg,
            const std::string& tree_arg, const std::string& delta_arg,
            const std::string& minuscule_arg, const std::string& out_path) {
    int given = !shape_arg.empty() + !shifted_arg.empty() + !tree_arg.empty() +
                !delta_arg.empty() + !minuscule_arg.empty();
    if (given != 1) {
        std::cerr << "gen: pick exactly one of --shape/--shifted/--tree/--delta/--minuscule\n";
        return 2;
    }
    Poset p;
    if (!shape_arg.empty()) p = shape(parse_int_list(shape_arg));
    if (!shifted_arg.empty()) p = shifted_shape(parse_int_list(shifted_arg));
    if (!tree_arg.empty()) p = rooted_tree(parse_int_list(tree_arg));
    if (!delta_arg.empty()) {
        auto bn = parse_int_list(delta_arg);
        if (bn.size() != 2) {
            std::cerr << "gen: --delta takes b,n\n";
            return 2;
        }
        p = delta(bn[0], bn[1]);
    }
    if (!minuscule_arg.empty()) p = minuscule(minuscule_arg);
    emit_poset(p, out_path);
    return 0;
}

int cmd_empty(const GlobalOpts& g, const std::string& poset_path, const std::string& bi_path,
              const std::string& order_arg) {
    Poset p = read_poset_file(poset_path);
    BiNumbering bn = read_binumbering_file(bi_path, p);
    Snapshot s;
    if (bn.test_form) {
        test_order ord = order_arg == "AB" ? test_order::AB : test_order::BA;
        s = test_empty(p, bn, ord);
    } else {
        s = empty(p, bn);
    }
    if (g.format == "json") {
        nlohmann::json j = report_header(g);
        auto trace = nlohmann::json::array();
        for (const auto& h : s.history)
            trace.push_back({{"bubble", bubble_name(h.bubble)},
                             {"from", h.from},
                             {"to", h.to},
                             {"label", h.label}});
        j["trace"] = trace;
        j["red"] = numbering_to_json(red_part(s));
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& h : s.history)
            std::cout << "swap " << bubble_name(h.bubble) << " " << h.from << " -> " << h.to
                      << " label R" << h.label << "\n";
        std::cout << "red " << numbering_to_json(red_part(s)).dump() << "\n";
    }
    return 0;
}

std::string numbering_to_string(const Numbering& nb) {
    std::string out = "{";
    bool first = true;
    for (int e = 0; e < (int)nb.rank.size(); ++e) {
        if (!nb.rank[e]) continue;
        if (!first) out += ", ";
        out += std::to_string(e) + ":R" + std::to_string(nb.rank[e]);
        first = false;
    }
    return out + "}";
}

void print_collision_block(const CollisionRecord& r) {
    std::cout << "collision " << r.m << ": w=" << r.site_w << " x=" << r.x << " y=" << r.y
              << " z=" << r.z << " sigma=R" << r.sigma << "\n";
    std::cout << "  fixer G" << r.m << " from " << r.v_start << ":";
    for (int e : r.fixer_path) std::cout << " " << e;
    std::cout << "\n  leader L" << r.m << ":";
    for (int e : r.leader_path) std::cout << " " << e;
    std::cout << "\n";
}

int cmd_check(const GlobalOpts& g, const std::string& poset_path, bool jdt_flag,
              const std::string& tier, bool dc_flag, bool sim_flag, bool strong_flag,
              bool trace_flag) {
    Poset p = read_poset_file(poset_path);
    if (dc_flag) {
        bool all = true;
        const char* names[3] = {"D1", "D2", "D3"};
        axiom which[3] = {axiom::D1, axiom::D2, axiom::D3};
        nlohmann::json jrep = report_header(g);
        for (int i = 0; i < 3; ++i) {
            Verdict v = check_axiom(p, which[i]);
            all = all && v.pass;
            if (g.format == "json") {
                auto ws = nlohmann::json::array();
                for (const auto& w : v.witnesses) ws.push_back({{"k", w.k}, {"what", w.what}});
                jrep[names[i]] = {{"pass", v.pass}, {"witnesses", ws}};
            } else {
                std::cout << names[i] << ": " << (v.pass ? "pass" : "FAIL") << "\n";
                for (const auto& w : v.witnesses)
                    std::cout << "  k=" << w.k << " " << w.what << "\n";
            }
        }
        if (g.format == "json") {
            jrep["dcomplete"] = all;
            std::cout << jrep.dump(2) << "\n";
        } else {
            std::cout << "dcomplete: " << (all ? "true" : "false") << "\n";
        }
        return all ? 0 : 1;
    }
    if (jdt_flag) {
        bool verdict;
        if (tier == "def") {
            verdict = is_jdt_definition(p);
            std::cout << "jdt (definition tier): " << (verdict ? "true" : "false") << "\n";
        } else if (tier == "challenge") {
            verdict = is_jdt_challenges(p);
            std::cout << "jdt (challenge tier): " << (verdict ? "true" : "false") << "\n";
        } else {
            auto bad = find_jdt_counterexample(p);
            verdict = !bad.has_value();
            std::cout << "jdt (crucial tier): " << (verdict ? "true" : "false") << "\n";
            if (bad)
                std::cout << "failing crucial challenge: pair (" << bad->x << "," << bad->y
                          << "), rho = " << numbering_to_string(bad->rho) << "\n";
        }
        return verdict ? 0 : 1;
    }
    if (sim_flag) {
        if (strong_flag) unique_max(p);
        SimContext ctx = make_sim_context(p);
        bool verdict = true;
        for (auto [x, y] : crucial_pairs(p)) {
            if (!verdict) break;
            ElemSet ixy = p.all() - ElemSet(p.up[x] | p.up[y]);
            for_each_numbering(p, ixy, [&](const Numbering& rho) {
                Challenge c{ixy, rho, x, y};
                auto got = solve_crucial_challenge(ctx, c, strong_flag);
                if (!got) {
                    verdict = false;
                    std::cout << "unsolved crucial challenge: pair (" << x << "," << y
                              << "), rho = " << numbering_to_string(rho) << "\n";
                    return false;
                }
                if (trace_flag) {
                    std::cout << "challenge pair (" << x << "," << y
                              << "), rho = " << numbering_to_string(rho) << ": solved m="
                              << got->m << (got->strong ? " strong" : "") << "\n";
                    for (const auto& r : got->trace) print_collision_block(r);
                }
                return true;
            });
        }
        std::cout << (strong_flag ? "strongly simultaneous: " : "simultaneous: ")
                  << (verdict ? "true" : "false") << "\n";
        return verdict ? 0 : 1;
    }
    std::cerr << "check: pick one of --jdt/--dcomplete/--simultaneous\n";
    return 2;
}

int cmd_fairchart(const GlobalOpts& g, const std::string& poset_path, const std::string& ext_path,
                  const std::string& filter_arg) {
    Poset p = read_poset_file(poset_path);
    std::ifstream in(ext_path);
    require(in.good(), errc::bad_input, "cannot read " + ext_path);
    nlohmann::json je;
    in >> je;
    std::vector<std::pair<int, int>> er;
    for (auto it = je.begin(); it != je.end(); ++it)
        er.emplace_back(std::stoi(it.key()), it.value().get<int>());
    Numbering ext = make_numbering(p, er);
    ElemSet f;
    for (int e : parse_int_list(filter_arg)) {
        require(e >= 0 && e < p.n, errc::bad_input, "filter element out of range");
        f.add(e);
    }
    auto fin = simulate_departure(p, ext, f);
    if (g.format == "json") {
        nlohmann::json j = report_header(g);
        j["before"] = numbering_to_json(ext);
        auto after = nlohmann::json::object();
        for (int e = 0; e < p.n; ++e)
            if (fin[e]) after[std::to_string(e)] = fin[e];
        j["after"] = after;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "before:";
        for (int e = 0; e < p.n; ++e) std::cout << " " << e << ":" << ext.rank[e];
        std::cout << "\nafter: ";
        for (int e = 0; e < p.n; ++e) {
            std::cout << " " << e << ":";
            if (fin[e])
                std::cout << fin[e];
            else
                std::cout << "-";
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_enumerate(const GlobalOpts& g, int n, const std::string& out_dir) {
    auto posets = enumerate_connected(n);
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        nlohmann::json index = report_header(g);
        auto entries = nlohmann::json::array();
        for (size_t i = 0; i < posets.size(); ++i) {
            CanonicalForm f = canonical_form(posets[i]);
            std::string name = "poset_" + std::to_string(n) + "_" + std::to_string(i) + ".json";
            write_poset_file(out_dir + "/" + name, posets[i]);
            entries.push_back({{"file", name}, {"id", f.id()}});
        }
        index["n"] = n;
        index["count"] = posets.size();
        index["posets"] = entries;
        std::ofstream out(out_dir + "/index.json");
        out << index.dump(2) << "\n";
    }
    std::cout << "connected classes n=" << n << ": " << posets.size() << "\n";
    return 0;
}

int cmd_survey(const GlobalOpts& g, int n, int from, const std::string& report_path) {
    std::vector<SurveyResult> results;
    for (int k = from; k <= n; ++k) results.push_back(survey(k, g.threads));

    if (!report_path.empty()) {
        std::ofstream csv(report_path);
        require(csv.good(), errc::bad_input, "cannot write " + report_path);
        csv << "# taquin " << kVersion << " seed=" << g.seed << " cmd=" << g.echo << "\n";
        csv << "canonical_id,n,connected,unique_max,jdt,dcomplete,d3complete,nonoverlapping,"
               "simultaneous,dual_jdt,doubly_jdt,neck_like,crucial_pairs,extensions\n";
        for (const auto& sr : results)
            for (const auto& r : sr.records)
                csv << r.id << "," << r.n << "," << r.connected << "," << r.unique_max << ","
                    << r.jdt << "," << r.dcomplete << "," << r.d3complete << ","
                    << r.nonoverlapping << "," << r.simultaneous << "," << r.dual_jdt << ","
                    << r.doubly_jdt << "," << r.neck_like << "," << r.crucial_pairs << ","
                    << r.extensions << "\n";
        nlohmann::json summary = report_header(g);
        auto agg = nlohmann::json::array();
        for (const auto& sr : results)
            agg.push_back({{"n", sr.aggregate.n},
                           {"total", sr.aggregate.total},
                           {"jdt", sr.aggregate.jdt},
                           {"dcomplete", sr.aggregate.dcomplete},
                           {"jdt_and_dcomplete", sr.aggregate.jdt_and_dcomplete},
                           {"jdt_not_dcomplete", sr.aggregate.jdt_not_dcomplete},
                           {"simultaneous", sr.aggregate.simultaneous},
                           {"nonoverlapping", sr.aggregate.nonoverlapping},
                           {"doubly_jdt", sr.aggregate.doubly_jdt},
                           {"doubly_jdt_not_dcomplete", sr.aggregate.doubly_jdt_not_dcomplete}});
        summary["levels"] = agg;
        std::ofstream js(report_path + ".summary.json");
        js << summary.dump(2) << "\n";
    }
    const auto& top = results.back().aggregate;
    std::cout << "jdt=" << top.jdt << " dcomplete_jdt=" << top.jdt_and_dcomplete
              << " total=" << top.total << "\n";
    return 0;
}

int cmd_conjecture(const GlobalOpts& g, int n, const std::string& report_path) {
    ConjectureReport rep = conjecture_scan(n, g.threads);
    nlohmann::json j = report_header(g);
    auto entries = nlohmann::json::array();
    for (const auto& e : rep.doubly_jdt)
        entries.push_back(
            {{"id", e.id}, {"n", e.n}, {"minuscule", e.minuscule_match}, {"family", e.family}});
    j["doubly_jdt"] = entries;
    j["outliers"] = rep.outliers.size();
    j["doubly_jdt_not_doubly_dcomplete"] = rep.doubly_jdt_not_doubly_dcomplete;
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << j.dump(2) << "\n";
    }
    if (g.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& e : rep.doubly_jdt)
            std::cout << "doubly-jdt " << e.id << " n=" << e.n << " -> "
                      << (e.minuscule_match ? e.family : "NO MATCH") << "\n";
        std::cout << "outliers=" << rep.outliers.size()
                  << " doubly_jdt_not_doubly_dcomplete=" << rep.doubly_jdt_not_doubly_dcomplete
                  << "\n";
    }
    return rep.outliers.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"jeu de taquin on finite posets: generators, checkers, census"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--threads", g.threads, "worker threads (0 = hardware)");
    app.add_option("--seed", g.seed, "seed recorded in report headers");

    auto* gen = app.add_subcommand("gen", "emit a family poset as JSON");
    std::string shape_arg, shifted_arg, tree_arg, delta_arg, minuscule_arg, out_path;
    gen->add_option("--shape", shape_arg, "partition, e.g. 3,3");
    gen->add_option("--shifted", shifted_arg, "strict partition, e.g. 4,2,1");
    gen->add_option("--tree", tree_arg, "parent list, -1 for the root");
    gen->add_option("--delta", delta_arg, "b,n");
    gen->add_option("--minuscule", minuscule_arg, "a(n,j) | d(n,n) | d(n,1) | e6_1 | e7_1");
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* emp = app.add_subcommand("empty", "run the emptying engine on a bi-numbering");
    std::string poset_path, bi_path, order_arg = "BA";
    emp->add_option("poset", poset_path, "poset JSON file")->required();
    emp->add_option("--bi", bi_path, "bi-numbering JSON file")->required();
    emp->add_option("--order", order_arg, "test emptying order: BA|AB")
        ->check(CLI::IsMember({"BA", "AB"}));

    auto* chk = app.add_subcommand("check", "verify jdt / d-complete / simultaneous");
    std::string chk_poset, tier = "crucial";
    bool jdt_flag = false, dc_flag = false, sim_flag = false, strong_flag = false,
         trace_flag = false;
    chk->add_option("poset", chk_poset, "poset JSON file")->required();
    chk->add_flag("--jdt", jdt_flag, "check the jdt property");
    chk->add_option("--tier", tier, "jdt tier: def|challenge|crucial")
        ->check(CLI::IsMember({"def", "challenge", "crucial"}));
    chk->add_flag("--dcomplete", dc_flag, "check axioms D1-D3");
    chk->add_flag("--simultaneous", sim_flag, "check the simultaneous property");
    chk->add_flag("--strong", strong_flag, "require strong simultaneity");
    chk->add_flag("--trace", trace_flag, "print collision/repair blocks");

    auto* fair = app.add_subcommand("fairchart", "simulate an upper-echelon departure");
    std::string fair_poset, ext_path, filter_arg;
    fair->add_option("poset", fair_poset, "poset JSON file")->required();
    fair->add_option("--ext", ext_path, "extension JSON file {elem: seniority}")->required();
    fair->add_option("--filter", filter_arg, "departed elements, e.g. 4,5")->required();

    auto* enu = app.add_subcommand("enumerate", "connected isomorphism classes");
    int enum_n = 0;
    std::string enum_out;
    enu->add_option("--n", enum_n, "element count")->required();
    enu->add_option("--out", enum_out, "directory for one JSON per class plus an index");

    auto* sur = app.add_subcommand("survey", "classify the census and aggregate");
    int survey_n = 0, survey_from = 0;
    std::string report_path;
    sur->add_option("--n", survey_n, "largest element count")->required();
    sur->add_option("--from", survey_from, "smallest element count (default --n)");
    sur->add_option("--report", report_path, "CSV output; a .summary.json lands beside it");

    auto* conj = app.add_subcommand("conjecture", "doubly-jdt posets vs the minuscule catalog");
    int conj_n = 0;
    std::string conj_report;
    conj->add_option("--n", conj_n, "largest element count")->required();
    conj->add_option("--report", conj_report, "JSON report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    {
        std::ostringstream echo;
        for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];
        g.echo = echo.str();
    }

    try {
        if (gen->parsed())
            return cmd_gen(g, shape_arg, shifted_arg, tree_arg, delta_arg, minuscule_arg,
                           out_path);
        if (emp->parsed()) return cmd_empty(g, poset_path, bi_path, order_arg);
        if (chk->parsed())
            return cmd_check(g, chk_poset, jdt_flag, tier, dc_flag, sim_flag, strong_flag,
                             trace_flag);
        if (fair->parsed()) return cmd_fairchart(g, fair_poset, ext_path, filter_arg);
        if (enu->parsed()) return cmd_enumerate(g, enum_n, enum_out);
        if (sur->parsed())
            return cmd_survey(g, survey_n, survey_from > 0 ? survey_from : survey_n, report_path);
        if (conj->parsed()) return cmd_conjecture(g, conj_n, conj_report);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind == errc::engine_invariant ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
