#include "invpoly/cli.hpp"

#include "invpoly/errors.hpp"
#include "invpoly/expansions.hpp"
#include "invpoly/graded.hpp"
#include "invpoly/poset.hpp"
#include "invpoly/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace invpoly::cli {

namespace {

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

const HSequence& need_h(const ProblemSpec& spec) {
    if (!spec.h) {
        throw ParseError("this command needs h (--h or \"h\" in the spec file)");
    }
    return *spec.h;
}

const PairSet& need_S(const ProblemSpec& spec) {
    if (!spec.S) {
        throw ParseError("this command needs S (--s or \"S\" in the spec file)");
    }
    return *spec.S;
}

int need_n(const ProblemSpec& spec) {
    if (!spec.n) {
        throw ParseError("this command needs n (--n or \"n\" in the spec file)");
    }
    if (*spec.n < 1) {
        throw ParseError("n must be positive");
    }
    return *spec.n;
}

void require_admissible(const HSequence& h, const PairSet& S) {
    if (!is_admissible(h, S)) {
        throw InadmissibleError("S is not h-admissible");
    }
}

Json count_json(std::uint64_t c) {
    return Json(c);
}

// --- human-readable rendering -------------------------------------------

std::string signed_term(const std::string& coeff, const std::string& body, bool first) {
    std::string c = coeff;
    std::string sign = first ? "" : " + ";
    if (!c.empty() && c[0] == '-') {
        sign = first ? "-" : " - ";
        c = c.substr(1);
    }
    if (body.empty()) {
        return sign + c;
    }
    return sign + (c == "1" ? "" : c + "*") + body;
}

std::string render(const QPoly& p, const std::string& var) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (int e = 0; e <= p.degree(); ++e) {
        if (p.coeff(e) == 0) {
            continue;
        }
        std::string body = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
        out += signed_term(p.coeff(e).get_str(), body, first);
        first = false;
    }
    return out;
}

std::string render(const BinomialPoly& p) {
    if (p.terms().empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        std::string shift = t.s == 0 ? "n" : (t.s > 0 ? "n-" + std::to_string(t.s) : "n+" + std::to_string(-t.s));
        std::string body = t.d == 0 ? "" : "C(" + shift + "," + std::to_string(t.d) + ")";
        out += signed_term(t.c.get_str(), body, first);
        first = false;
    }
    return out;
}

std::string render(const MonomialPoly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (int e = p.degree(); e >= 0; --e) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(e)];
        if (c == 0) {
            continue;
        }
        std::string cs = c.get_den() == 1 ? c.get_num().get_str() : "(" + c.get_str() + ")";
        if (cs.size() > 1 && cs[0] == '(' && cs[1] == '-') {
            cs = "-(" + cs.substr(2);
        }
        std::string body = e == 0 ? "" : (e == 1 ? "n" : "n^" + std::to_string(e));
        out += signed_term(cs, body, first);
        first = false;
    }
    return out;
}

std::string render(const PairSet& S) {
    std::string out = "{";
    bool first = true;
    for (const auto& p : S) {
        out += (first ? "" : ",") + std::string("(") + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
        first = false;
    }
    return out + "}";
}

std::string render(const IntSequence& s) {
    std::string out;
    for (std::size_t k = 0; k < s.values.size(); ++k) {
        out += (k ? ", " : "") + std::string("[") + std::to_string(s.origin + static_cast<int>(k)) + "]=" +
               s.values[k].get_str();
    }
    return out;
}

void print_human(std::string_view command, const Json& result, const ProblemSpec& spec, std::ostream& out) {
    if (command == "enumerate") {
        out << "I_h(S, " << result["n"] << ") has " << result["perms"].size() << " permutation(s)\n";
        for (const auto& p : result["perms"]) {
            out << "  " << permutation_from_json(p).str() << '\n';
        }
    } else if (command == "eval") {
        out << "S = " << render(*spec.S) << ", n = " << result["n"] << '\n';
        if (result["brute_force"].is_null()) {
            out << "  brute force : skipped (n above bound)\n";
        } else {
            out << "  brute force : " << result["brute_force"] << '\n';
        }
        for (const auto& e : result["expansions"]) {
            out << "  " << e["basis"].get<std::string>() << " expansion : " << e["value"].dump();
            if (e["below_floor"].get<bool>()) {
                out << "  (below validity floor " << e["validity_floor"] << "; not a count)";
            }
            out << '\n';
        }
    } else if (command == "expand") {
        const auto poly = binomial_poly_from_json(Json{{"terms", result["binomial_terms"]}});
        out << result["basis"].get<std::string>() << " expansion: " << render(poly) << '\n';
        out << "  monomial      : " << render(monomial_poly_from_json(result["monomial"])) << '\n';
        out << "  coefficients  : " << render(int_sequence_from_json(result["coeffs"])) << '\n';
        out << "  counts for n >= " << result["validity_floor"] << '\n';
    } else if (command == "graded") {
        out << "h(m) = " << result["hm"] << ", m = " << result["m"] << '\n';
        int k = result["origin"].get<int>();
        for (const auto& p : result["b_q"]) {
            out << "  b_" << k++ << "(q) = " << render(qpoly_from_json(p), "q") << '\n';
        }
        if (result.contains("value")) {
            out << "  I_h(S, " << result["n"] << "; q) = "
                << (result["value"].is_null() ? std::string("(n below h(m))") : render(qpoly_from_json(result["value"]), "q"))
                << '\n';
        }
        if (result.contains("oracle")) {
            out << "  brute force     = " << render(qpoly_from_json(result["oracle"]), "q") << '\n';
        }
    } else if (command == "poset") {
        out << "P_{h,S} on " << result["poset"]["n"] << " elements, covers:";
        for (const auto& c : result["poset"]["covers"]) {
            out << ' ' << c[0] << '<' << c[1];
        }
        out << "\n  linear extensions (" << result["extensions"].size() << "):";
        for (const auto& p : result["extensions"]) {
            out << ' ' << permutation_from_json(p).str();
        }
        out << "\n  heights of " << result["heights"]["v"] << ": " << result["heights"]["heights"].dump() << '\n';
        if (result.contains("d_S")) {
            out << "  d_S = " << result["d_S"] << ", degree = " << result["degree"] << '\n';
        }
    } else if (command == "admissible") {
        out << result["classes"].size() << " admissible set(s)\n";
        for (const auto& c : result["classes"]) {
            out << "  " << render(pairset_from_json(c["S"])) << " : " << c["count"] << '\n';
        }
    } else if (command == "poincare") {
        out << render(qpoly_from_json(result), "t") << '\n';
    } else if (command == "qbinom") {
        out << render(qpoly_from_json(result), "q") << '\n';
    } else {
        out << result.dump(2) << '\n';
    }
}

// --- verify ---------------------------------------------------------------

Json verify_json(const VerifyReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json row{{"check", c.name}, {"checked", c.checked}, {"failures", c.failures}};
        if (c.failures > 0) {
            row["first_failure"] = c.first_failure;
        }
        checks.push_back(row);
    }
    return Json{{"corpus", report.corpus_size}, {"checks", checks}, {"ok", report.ok()}};
}

Json random_poset_json(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(1, 7);
    std::uniform_real_distribution<double> density(0.0, 0.7);
    std::size_t failures = 0;
    for (int t = 0; t < count; ++t) {
        const Poset P = random_poset(size(rng), density(rng), rng);
        for (int v = 1; v <= P.size(); ++v) {
            const auto seq = height_sequence(P, v);
            failures += (is_log_concave(seq) && has_no_internal_zeros(seq)) ? 0 : 1;
        }
    }
    return Json{{"check", "random poset heights"}, {"checked", count}, {"failures", failures}};
}

}  // namespace

ProblemSpec problem_from_json(const Json& j) {
    if (!j.is_object()) {
        throw ParseError("problem spec must be a JSON object");
    }
    ProblemSpec spec;
    if (j.contains("h")) {
        spec.h = j["h"].is_number_integer() ? HSequence::tail(j["h"].get<int>()) : hsequence_from_json(j["h"]);
    }
    if (j.contains("S")) {
        spec.S = pairset_from_json(j["S"]);
    }
    if (j.contains("n")) {
        if (!j["n"].is_number_integer()) {
            throw ParseError("n must be an integer");
        }
        spec.n = j["n"].get<int>();
    }
    if (j.contains("options")) {
        if (!j["options"].is_object()) {
            throw ParseError("options must be an object");
        }
        spec.options = j["options"];
    }
    return spec;
}

HSequence parse_h_argument(std::string_view text) {
    const Json j = parse_json_text(text);
    if (j.is_number_integer()) {
        try {
            return HSequence::tail(j.get<int>());
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }
    return hsequence_from_json(j);
}

Settings load_settings(const std::optional<std::filesystem::path>& config_file) {
    Settings s;
    if (config_file) {
        const Json cfg = read_json_file(*config_file);
        if (!cfg.is_object()) {
            throw ParseError("config must be a JSON object");
        }
        if (cfg.contains("max_n")) s.limits.max_n = cfg["max_n"].get<int>();
        if (cfg.contains("jobs")) s.limits.jobs = cfg["jobs"].get<int>();
        if (cfg.contains("seed")) s.seed = cfg["seed"].get<std::uint64_t>();
    }
    const Limits env = Limits::from_environment();
    if (env.max_n != Limits{}.max_n) {
        s.limits.max_n = env.max_n;
    }
    return s;
}

Json command_json(std::string_view command, const ProblemSpec& spec, const Settings& settings) {
    const Limits& limits = settings.limits;
    if (command == "enumerate") {
        const auto& h = need_h(spec);
        const auto& S = need_S(spec);
        const int n = need_n(spec);
        Json perms = Json::array();
        for (const auto& pi : enumerate_Ih(h, S, n, limits)) {
            perms.push_back(pi);
        }
        return Json{{"S", S}, {"n", n}, {"perms", perms}};
    }
    if (command == "eval") {
        const auto& h = need_h(spec);
        const auto& S = need_S(spec);
        const int n = need_n(spec);
        require_admissible(h, S);
        Json out{{"S", S}, {"n", n}};
        std::optional<Integer> brute;
        if (n <= limits.max_n) {
            brute = Integer(static_cast<unsigned long>(enumerate_Ih(h, S, n, limits).size()));
            out["brute_force"] = integer_to_json(*brute);
        } else {
            out["brute_force"] = nullptr;
        }
        Json rows = Json::array();
        bool consistent = true;
        for (Basis basis : {Basis::fiber, Basis::b, Basis::a}) {
            const auto r = expand(h, S, basis);
            const Integer v = r.raw_eval(n);
            const bool below = n < r.validity_floor;
            if (!below && brute && *brute != v) {
                consistent = false;
            }
            rows.push_back(Json{{"basis", std::string(to_string(basis))},
                                {"value", integer_to_json(v)},
                                {"validity_floor", r.validity_floor},
                                {"below_floor", below}});
        }
        out["expansions"] = rows;
        out["consistent"] = consistent;
        return out;
    }
    if (command == "expand") {
        const auto& h = need_h(spec);
        const auto& S = need_S(spec);
        const std::string basis = spec.options.value("basis", std::string("b"));
        return Json(expand(h, S, parse_basis(basis)));
    }
    if (command == "graded") {
        const auto& h = need_h(spec);
        const auto& S = need_S(spec);
        const auto ge = b_q_coefficients(h, S);
        Json out(ge);
        if (spec.n) {
            const int n = need_n(spec);
            out["n"] = n;
            out["value"] = n >= ge.hm ? Json(graded_expansion_eval(ge, n)) : Json(nullptr);
            if (n <= limits.max_n) {
                out["oracle"] = graded_Ih_oracle(h, S, n, limits);
            }
        }
        return out;
    }
    if (command == "poset") {
        // An explicit poset in options replaces P_{h,S}.
        const bool explicit_poset = spec.options.contains("poset");
        const Poset P = explicit_poset ? poset_from_json(spec.options["poset"]) : build_poset(need_h(spec), need_S(spec));
        const int v = spec.options.value("v", P.size());
        Json ext = Json::array();
        for (const auto& phi : linear_extensions(P)) {
            ext.push_back(phi);
        }
        Json heights = Json::array();
        for (const auto& x : height_sequence(P, v).values) {
            heights.push_back(integer_to_json(x));
        }
        Json out{{"poset", P}, {"extensions", ext}, {"heights", Json{{"v", v}, {"heights", heights}}}};
        if (!explicit_poset) {
            out["d_S"] = d_S_of(*spec.h, *spec.S);
            out["degree"] = degree_of(*spec.h, *spec.S);
        }
        return out;
    }
    if (command == "qbinom") {
        const int n = need_n(spec);
        if (!spec.options.contains("k") || !spec.options["k"].is_number_integer()) {
            throw ParseError("qbinom needs an integer k");
        }
        return Json(q_binom(n, spec.options["k"].get<long>()));
    }
    if (command == "admissible") {
        const auto& h = need_h(spec);
        const int n = need_n(spec);
        Json classes = Json::array();
        for (const auto& [S, count] : enumerate_admissible(h, n, limits)) {
            classes.push_back(Json{{"S", S}, {"count", count_json(count)}});
        }
        return Json{{"classes", classes}};
    }
    if (command == "poincare") {
        return Json(poincare(need_h(spec), need_n(spec), limits));
    }
    throw ParseError("unknown command '" + std::string(command) + "'");
}

bool json_contains(const Json& expected, const Json& actual, std::string& where) {
    if (expected.is_object()) {
        if (!actual.is_object()) {
            where = "(expected object)";
            return false;
        }
        for (const auto& [key, value] : expected.items()) {
            if (!actual.contains(key)) {
                where = "/" + key + " (missing)";
                return false;
            }
            std::string inner;
            if (!json_contains(value, actual.at(key), inner)) {
                where = "/" + key + inner;
                return false;
            }
        }
        return true;
    }
    if (expected != actual) {
        where = ": expected " + expected.dump() + ", got " + actual.dump();
        return false;
    }
    return true;
}

std::vector<GoldenOutcome> replay_golden(const std::filesystem::path& dir, const Settings& settings) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<GoldenOutcome> outcomes;
    for (const auto& file : files) {
        const Json fixture = read_json_file(file);
        for (const auto& c : fixture.at("cases")) {
            GoldenOutcome o;
            o.name = fixture.value("name", file.stem().string()) + " / " + c.at("command").get<std::string>();
            try {
                const Json actual = command_json(c.at("command").get<std::string>(), problem_from_json(c.at("input")),
                                                 settings);
                o.pass = json_contains(c.at("expected"), actual, o.detail);
            } catch (const std::exception& e) {
                o.pass = false;
                o.detail = e.what();
            }
            outcomes.push_back(std::move(o));
        }
    }
    return outcomes;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Restricted inversion polynomials: exact expansions, oracles and verification sweeps", "invpoly"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);

    std::string h_text;
    std::string s_text;
    std::optional<int> n_value;
    std::string spec_file;
    std::string config_file;
    bool json_out = false;
    int jobs = 0;
    std::string basis = "b";
    int v_value = 0;
    std::string covers_text;
    int k_value = 0;
    int cap = 6;
    int n_max = 8;
    std::string golden_dir;
    int random_posets = 100;
    bool all_h = false;
    bool per_set = false;

    auto add_common = [&](CLI::App* sub, bool with_s, bool with_n) {
        sub->add_option("--h", h_text, "h as JSON {\"prefix\":[...],\"tail_offset\":t} or an integer t for h(i)=i+t");
        if (with_s) {
            sub->add_option("--s", s_text, "pair set as JSON [[i,j],...]");
        }
        if (with_n) {
            sub->add_option("--n", n_value, "permutation size");
        }
        sub->add_option("--spec", spec_file, "problem spec JSON file {\"h\",\"S\",\"n\",\"options\"}");
        sub->add_option("--config", config_file, "config JSON {\"max_n\",\"jobs\",\"seed\"}");
        sub->add_option("--jobs", jobs, "worker threads");
        sub->add_flag("--json", json_out, "machine-readable output");
    };

    auto* c_enum = app.add_subcommand("enumerate", "list I_h(S, n) by brute force");
    add_common(c_enum, true, true);
    auto* c_eval = app.add_subcommand("eval", "count I_h(S, n) by brute force and every expansion");
    add_common(c_eval, true, true);
    auto* c_expand = app.add_subcommand("expand", "binomial-basis expansion of I_h(S; n)");
    add_common(c_expand, true, false);
    c_expand->add_option("--basis", basis, "fiber, b or a")->check(CLI::IsMember({"fiber", "b", "a"}));
    auto* c_graded = app.add_subcommand("graded", "graded b-coefficients; with --n, the q-polynomial");
    add_common(c_graded, true, true);
    auto* c_poset = app.add_subcommand("poset", "P_{h,S}, its linear extensions and a height sequence");
    add_common(c_poset, true, false);
    c_poset->add_option("--v", v_value, "element for the height sequence (default h(m))");
    c_poset->add_option("--covers", covers_text, "explicit poset as JSON {\"n\":N,\"covers\":[[a,b],...]} (a < b)");
    auto* c_qbinom = app.add_subcommand("qbinom", "Gaussian binomial [n choose k]_q");
    add_common(c_qbinom, false, true);
    c_qbinom->add_option("--k", k_value, "lower index")->required();
    auto* c_adm = app.add_subcommand("admissible", "admissible sets of S_n with class sizes");
    add_common(c_adm, false, true);
    auto* c_poin = app.add_subcommand("poincare", "Hessenberg Poincare polynomial in t");
    add_common(c_poin, false, true);
    auto* c_verify = app.add_subcommand("verify", "run the invariant sweep, or replay golden fixtures");
    add_common(c_verify, false, false);
    c_verify->add_option("--cap", cap, "corpus j(S) cap and q-log-concavity h(m) cap");
    c_verify->add_option("--nmax", n_max, "largest n compared with brute force");
    c_verify->add_option("--golden", golden_dir, "directory of golden fixtures to replay");
    c_verify->add_option("--random-posets", random_posets, "seeded random posets for the height check");
    auto* c_conj = app.add_subcommand("verify-conjecture", "strong q-log-concavity of graded b-coefficients");
    add_common(c_conj, false, false);
    c_conj->add_option("--cap", cap, "check every admissible S with h(m(S)) <= cap");
    c_conj->add_flag("--all-h", all_h, "sweep every h, not just --h");
    c_conj->add_flag("--per-set", per_set, "include one row per checked set with timing");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kParseError;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();

    try {
        Settings settings = load_settings(config_file.empty() ? std::nullopt
                                                               : std::optional<std::filesystem::path>(config_file));
        if (jobs > 0) {
            settings.limits.jobs = jobs;
        }
        ProblemSpec spec;
        if (!spec_file.empty()) {
            spec = problem_from_json(read_json_file(spec_file));
        }
        if (!h_text.empty()) spec.h = parse_h_argument(h_text);
        if (!s_text.empty()) spec.S = pairset_from_json(parse_json_text(s_text));
        if (n_value) spec.n = n_value;
        if (command == "expand" && sub->count("--basis") > 0) spec.options["basis"] = basis;
        if (command == "poset" && sub->count("--v") > 0) spec.options["v"] = v_value;
        if (command == "poset" && !covers_text.empty()) spec.options["poset"] = parse_json_text(covers_text);
        if (command == "qbinom") spec.options["k"] = k_value;

        if (command == "verify") {
            if (!golden_dir.empty()) {
                const auto outcomes = replay_golden(golden_dir, settings);
                bool ok = !outcomes.empty();
                Json rows = Json::array();
                for (const auto& o : outcomes) {
                    ok = ok && o.pass;
                    rows.push_back(Json{{"case", o.name}, {"pass", o.pass}, {"detail", o.detail}});
                    if (!json_out) {
                        out << (o.pass ? "PASS " : "FAIL ") << o.name << (o.pass ? "" : "  " + o.detail) << '\n';
                    }
                }
                if (json_out) {
                    out << Json{{"golden", rows}, {"ok", ok}}.dump() << '\n';
                }
                return ok ? kOk : kVerificationFailed;
            }
            const VerifyReport report = verify_invariants(need_h(spec), VerifyOptions{cap, n_max, cap}, settings.limits);
            Json result = verify_json(report);
            const Json posets = random_poset_json(random_posets, settings.seed);
            result["checks"].push_back(posets);
            const bool ok = report.ok() && posets["failures"].get<std::size_t>() == 0;
            result["ok"] = ok;
            if (json_out) {
                out << result.dump() << '\n';
            } else {
                out << "corpus: " << report.corpus_size << " admissible set(s)\n";
                for (const auto& c : result["checks"]) {
                    out << (c["failures"].get<std::size_t>() == 0 ? "PASS " : "FAIL ") << c["check"].get<std::string>()
                        << " (" << c["checked"] << " checked, " << c["failures"] << " failed)";
                    if (c.contains("first_failure")) {
                        out << "  first: " << c["first_failure"].get<std::string>();
                    }
                    out << '\n';
                }
            }
            return ok ? kOk : kVerificationFailed;
        }

        if (command == "verify-conjecture") {
            std::vector<HSequence> family;
            if (all_h) {
                family = hessenberg_family(cap);
            } else {
                family.push_back(need_h(spec));
            }
            ConjectureReport merged;
            Json violations = Json::array();
            Json per_h = Json::array();
            for (const auto& h : family) {
                const auto report = verify_conjecture(h, cap, settings.limits);
                merged.checked += report.checked;
                merged.elapsed_ms += report.elapsed_ms;
                Json rj = conjecture_report_json(report, per_set);
                for (auto& v : rj["violations"]) {
                    v["h"] = h;
                    violations.push_back(v);
                }
                if (per_set) {
                    per_h.push_back(Json{{"h", h}, {"sets", rj["sets"]}});
                }
            }
            Json result{{"checked", merged.checked}, {"violations", violations}, {"elapsed_ms", merged.elapsed_ms}};
            if (all_h) {
                result["h_count"] = family.size();
            }
            if (per_set) {
                result["per_h"] = per_h;
            }
            if (json_out) {
                out << result.dump() << '\n';
            } else {
                out << "checked " << merged.checked << " admissible set(s)";
                if (all_h) {
                    out << " across " << family.size() << " h-sequence(s)";
                }
                out << " with h(m) <= " << cap << ": " << violations.size() << " violation(s), "
                    << static_cast<long>(merged.elapsed_ms) << " ms\n";
                for (const auto& v : violations) {
                    out << "  VIOLATION " << v.dump() << '\n';
                }
            }
            return violations.empty() ? kOk : kVerificationFailed;
        }

        const Json result = command_json(command, spec, settings);
        if (json_out) {
            out << result.dump() << '\n';
        } else {
            print_human(command, result, spec, out);
        }
        if (command == "eval" && !result["consistent"].get<bool>()) {
            return kVerificationFailed;
        }
        return kOk;
    } catch (const InadmissibleError& e) {
        err << "inadmissible: " << e.what() << '\n';
        return kInadmissible;
    } catch (const BoundExceededError& e) {
        err << "bound exceeded: " << e.what() << " (raise INVPOLY_MAX_N to allow it)\n";
        return kBoundExceeded;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kParseError;
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    }
}

}  // namespace invpoly::cli
