// Command-line front end: parses instance files, dispatches to the solver
// pipelines, and emits verified certificates as text or JSON.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpgame/brute_force.hpp"
#include "lpgame/dantzig.hpp"
#include "lpgame/io.hpp"
#include "lpgame/nonneg.hpp"
#include "lpgame/reduction.hpp"
#include "lpgame/simplex.hpp"

using json = nlohmann::json;

namespace {

using namespace lpgame;

struct Check {
    std::string name;
    bool pass;
};

/// Report rendered to stdout; every certificate re-verifies before emission.
struct Report {
    std::string outcome;
    std::vector<std::pair<std::string, std::string>> fields;  // scalar facts
    std::vector<std::pair<std::string, RVec>> vectors;
    std::vector<Check> checks;

    void field(std::string name, const Rat& v) { fields.emplace_back(std::move(name), to_string(v)); }
    void field(std::string name, std::string v) { fields.emplace_back(std::move(name), std::move(v)); }
    void vec(std::string name, RVec v) { vectors.emplace_back(std::move(name), std::move(v)); }

    void print(bool structured) const
    {
        if (structured) {
            json j;
            j["outcome"] = outcome;
            for (const auto& [k, v] : fields)
                j[k] = v;
            for (const auto& [k, v] : vectors) {
                json arr = json::array();
                for (const Rat& x : v)
                    arr.push_back(to_string(x));
                j[k] = arr;
            }
            json checklist = json::array();
            for (const auto& c : checks)
                checklist.push_back({{"name", c.name}, {"pass", c.pass}});
            j["checks"] = checklist;
            std::cout << j.dump(2) << "\n";
            return;
        }
        std::cout << "outcome: " << outcome << "\n";
        for (const auto& [k, v] : fields)
            std::cout << k << ": " << v << "\n";
        for (const auto& [k, v] : vectors) {
            std::cout << k << ":";
            for (const Rat& x : v)
                std::cout << " " << to_string(x);
            std::cout << "\n";
        }
        for (const auto& c : checks)
            std::cout << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << "\n";
    }
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

LPInstance load_lp(const std::string& path)
{
    InstanceFile inst = parse_instance(read_file(path));
    if (auto* lp = std::get_if<LPInstance>(&inst.payload))
        return std::move(*lp);
    throw std::runtime_error("expected an 'lp' instance in " + path);
}

void add_outcome_checks(Report& rep, const LPInstance& lp, const LPOutcome& out)
{
    const auto full = verify_outcome(lp, out);
    const auto failed = [&](const std::string& name) {
        for (const auto& v : full.violations)
            if (v.rfind(name, 0) == 0)
                return true;
        return false;
    };
    std::vector<std::string> names;
    if (std::holds_alternative<OptimalPair>(out))
        names = {"Ax <= b", "x >= 0", "A'y >= c", "y >= 0", "c'x = value", "b'y = value"};
    else if (std::holds_alternative<InfeasibilityCert>(out))
        names = {"A'z >= 0", "z >= 0", "b'z < 0"};
    else
        names = {"Aw <= 0", "w >= 0", "c'w > 0", "A*witness <= b", "witness >= 0"};
    for (const auto& n : names)
        rep.checks.push_back({n, !failed(n)});
}

int report_lp_outcome(const LPInstance& lp, const LPOutcome& out, Report& rep)
{
    rep.outcome = outcome_name(out);
    int code = exit_code::kSolved;
    if (const auto* opt = std::get_if<OptimalPair>(&out)) {
        rep.field("value", opt->value);
        rep.vec("x", opt->x);
        rep.vec("y", opt->y);
    } else if (const auto* inf = std::get_if<InfeasibilityCert>(&out)) {
        rep.vec("z", inf->z);
        const auto dual = cert_transfer_dual(out, lp);
        rep.field("dual_status", "unbounded if feasible (z is a dual ray)");
        code = exit_code::kInfeasible;
    } else {
        const auto& unb = std::get<UnboundednessCert>(out);
        rep.vec("w", unb.w);
        if (unb.feasible_witness)
            rep.vec("witness", *unb.feasible_witness);
        rep.field("dual_status", "infeasible (w is a Farkas certificate for D)");
        code = exit_code::kUnbounded;
    }
    add_outcome_checks(rep, lp, out);
    return code;
}

void add_maximin_checks(Report& rep, const Game& g, const GameSolution& sol)
{
    const auto full = verify_maximin(g, sol);
    rep.checks.push_back({"p'M >= value (row guarantee)", full.ok});
    rep.checks.push_back({"Mq <= value (column guarantee)", full.ok});
}

int run_solve_lp(const std::string& path, bool structured, bool brute)
{
    const LPInstance lp = load_lp(path);
    const LPOutcome out = brute ? brute_force_lp(lp) : solve_lp(lp);
    Report rep;
    const int code = report_lp_outcome(lp, out, rep);
    rep.print(structured);
    return code;
}

int run_solve_positive(const std::string& path, bool structured)
{
    const LPInstance lp = load_lp(path);
    const ScaledLP scaled = scale_lp(lp);
    const LPOutcome out = solve_positive_lp(lp);
    Report rep;
    const int code = report_lp_outcome(lp, out, rep);
    rep.field("game_value", degree_of_feasibility(scaled));
    rep.print(structured);
    return code;
}

int run_solve_nonneg(const std::string& path, bool structured, const std::string& engine)
{
    const LPInstance lp = load_lp(path);
    const Engine eng = engine == "dantzig" ? Engine::Dantzig : Engine::VonNeumann;
    const LPOutcome out = solve_nonneg_lp(lp, eng);
    Report rep;
    const int code = report_lp_outcome(lp, out, rep);
    rep.field("engine", engine);
    rep.print(structured);
    return code;
}

int run_solve_game(const std::string& path, bool structured, long fictitious_rounds)
{
    InstanceFile inst = parse_instance(read_file(path));
    const Game* g = std::get_if<Game>(&inst.payload);
    if (!g)
        throw std::runtime_error("expected a 'game' instance in " + path);

    const GameSolution sol = solve_game(*g);
    Report rep;
    rep.outcome = "solved";
    rep.field("value", sol.value);
    rep.vec("p", sol.p.probs);
    rep.vec("q", sol.q.probs);
    add_maximin_checks(rep, *g, sol);
    if (fictitious_rounds > 0) {
        const auto fp = solve_game_fictitious(*g, fictitious_rounds);
        rep.field("fictitious_lower", fp.lower);
        rep.field("fictitious_upper", fp.upper);
        rep.checks.push_back({"fictitious interval brackets exact value",
                              fp.lower <= sol.value && sol.value <= fp.upper});
    }
    rep.print(structured);
    return exit_code::kSolved;
}

int run_dantzig(const std::string& path, bool structured, bool classic)
{
    const LPInstance lp = load_lp(path);
    const DantzigGame game = dantzig_matrix(lp);
    const DantzigStrategy s = solve_dantzig_game(game);

    Report rep;
    rep.vec("p", s.p);
    rep.vec("q", s.q);
    rep.field("t", s.t);

    if (classic) {
        const auto res = extract_classic(lp, s);
        if (std::holds_alternative<Hole>(res)) {
            rep.outcome = "hole";
            rep.field("note", "t* = 0 and b'p* = c'q*: the classic reduction cannot decide");
            rep.print(structured);
            return exit_code::kHole;
        }
        const int code = report_lp_outcome(lp, std::get<LPOutcome>(res), rep);
        rep.print(structured);
        return code;
    }
    const LPOutcome out = extract_positive(lp, s);
    const int code = report_lp_outcome(lp, out, rep);
    rep.print(structured);
    return code;
}

int run_hide_and_seek(const std::string& path, bool structured)
{
    InstanceFile inst = parse_instance(read_file(path));
    const AssignmentInstance* a = std::get_if<AssignmentInstance>(&inst.payload);
    if (!a)
        throw std::runtime_error("expected an 'assignment' instance in " + path);

    const auto check = check_hide_and_seek_value(*a);
    const GameSolution sol = solve_game(Game(hide_and_seek(*a).M));
    Report rep;
    rep.outcome = "solved";
    rep.field("game_value", check.game_value);
    rep.field("max_matching_weight", check.max_matching_weight);
    rep.vec("p", sol.p.probs);
    rep.vec("q", sol.q.probs);
    rep.checks.push_back({"game value = 1 / max matching weight", check.reciprocal});
    rep.print(structured);
    return exit_code::kSolved;
}

int run_verify(const std::string& inst_path, const std::string& claim_path, bool structured)
{
    InstanceFile inst = parse_instance(read_file(inst_path));
    Report rep;

    if (const auto* lp = std::get_if<LPInstance>(&inst.payload)) {
        const ClaimFile claim = parse_claim(read_file(claim_path), lp->m(), lp->n());
        const auto* out = std::get_if<LPOutcome>(&claim.claim);
        if (!out)
            throw std::runtime_error("claim kind does not match the lp instance");
        const auto res = verify_outcome(*lp, *out);
        rep.outcome = res.ok ? "valid" : "invalid";
        rep.field("claimed", outcome_name(*out));
        add_outcome_checks(rep, *lp, *out);
        rep.print(structured);
        return res.ok ? exit_code::kSolved : exit_code::kInvalidClaim;
    }
    if (const auto* g = std::get_if<Game>(&inst.payload)) {
        const ClaimFile claim = parse_claim(read_file(claim_path), g->rows(), g->cols());
        const auto* sol = std::get_if<GameSolution>(&claim.claim);
        if (!sol)
            throw std::runtime_error("claim kind does not match the game instance");
        const auto res = verify_maximin(*g, *sol);
        rep.outcome = res.ok ? "valid" : "invalid";
        rep.field("claimed_value", sol->value);
        for (const auto& v : res.violations)
            rep.checks.push_back({v, false});
        if (res.ok)
            add_maximin_checks(rep, *g, *sol);
        rep.print(structured);
        return res.ok ? exit_code::kSolved : exit_code::kInvalidClaim;
    }
    throw std::runtime_error("verify supports lp and game instances");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact LP and zero-sum game solver with certificates"};
    app.require_subcommand(1);

    std::string instance, claim, engine = "vn", format = "text";
    bool classic = false, brute = false;
    long fictitious = 0;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("instance", instance, "instance file")->required();
        cmd->add_option("--format", format, "text|structured")
            ->check(CLI::IsMember({"text", "structured"}));
    };

    auto* c_lp = app.add_subcommand("solve-lp", "exact simplex on a general lp instance");
    add_common(c_lp);
    c_lp->add_flag("--brute-force", brute, "use the enumeration oracle instead of simplex");

    auto* c_pos = app.add_subcommand("solve-positive",
                                     "game reduction pipeline for b > 0, c > 0");
    add_common(c_pos);

    auto* c_nn = app.add_subcommand("solve-nonneg", "preprocessing pipeline for A >= 0");
    add_common(c_nn);
    c_nn->add_option("--engine", engine, "inner solver: vn|dantzig")
        ->check(CLI::IsMember({"vn", "dantzig"}));

    auto* c_game = app.add_subcommand("solve-game", "exact zero-sum game solve");
    add_common(c_game);
    c_game->add_option("--fictitious", fictitious,
                       "also run fictitious play for this many rounds");

    auto* c_dtz = app.add_subcommand("dantzig", "skew-symmetric game reduction");
    add_common(c_dtz);
    c_dtz->add_flag("--classic", classic, "use the classic extraction (may report a hole)");

    auto* c_has = app.add_subcommand("hide-and-seek", "assignment hide-and-seek game");
    add_common(c_has);

    auto* c_ver = app.add_subcommand("verify", "check a claimed outcome against an instance");
    add_common(c_ver);
    c_ver->add_option("claim", claim, "claimed outcome file")->required();

    CLI11_PARSE(app, argc, argv);
    const bool structured = format == "structured";

    try {
        if (c_lp->parsed())
            return run_solve_lp(instance, structured, brute);
        if (c_pos->parsed())
            return run_solve_positive(instance, structured);
        if (c_nn->parsed())
            return run_solve_nonneg(instance, structured, engine);
        if (c_game->parsed())
            return run_solve_game(instance, structured, fictitious);
        if (c_dtz->parsed())
            return run_dantzig(instance, structured, classic);
        if (c_has->parsed())
            return run_hide_and_seek(instance, structured);
        if (c_ver->parsed())
            return run_verify(instance, claim, structured);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return lpgame::exit_code::kInputError;
    }
    return lpgame::exit_code::kInputError;
}
