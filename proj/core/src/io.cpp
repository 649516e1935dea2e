#include "lpgame/io.hpp"

#include <sstream>

namespace lpgame {

namespace {

// Token stream that tracks line numbers for error reporting.
class Lexer {
public:
    explicit Lexer(const std::string& text)
    {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok)
                tokens_.emplace_back(tok, lineno);
        }
        last_line_ = lineno;
    }

    bool done() const { return pos_ >= tokens_.size(); }

    int line() const
    {
        return pos_ < tokens_.size() ? tokens_[pos_].second : last_line_;
    }

    std::string next(const char* what)
    {
        if (done())
            throw ParseError(last_line_, std::string("unexpected end of input, expected ") + what);
        return tokens_[pos_++].first;
    }

    Rat next_rat(const char* what)
    {
        const int at = line();
        const std::string tok = next(what);
        try {
            return parse_rat(tok);
        } catch (const std::exception& e) {
            throw ParseError(at, std::string(what) + ": " + e.what());
        }
    }

    int next_int(const char* what)
    {
        const int at = line();
        const std::string tok = next(what);
        try {
            size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError(at, std::string(what) + ": expected integer, got '" + tok + "'");
        }
    }

    RVec next_vec(int dim, const char* what)
    {
        RVec v(dim);
        for (int k = 0; k < dim; ++k)
            v[k] = next_rat(what);
        return v;
    }

    RMat next_mat(int rows, int cols, const char* what)
    {
        RMat M(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                M(i, j) = next_rat(what);
        return M;
    }

    void expect_done()
    {
        if (!done())
            throw ParseError(line(), "trailing tokens after instance data");
    }

private:
    std::vector<std::pair<std::string, int>> tokens_;
    size_t pos_ = 0;
    int last_line_ = 0;
};

int positive_dim(Lexer& lex, const char* what)
{
    const int at = lex.line();
    const int v = lex.next_int(what);
    if (v < 1)
        throw ParseError(at, std::string(what) + " must be positive");
    return v;
}

void append_vec(std::ostringstream& out, const RVec& v)
{
    for (size_t k = 0; k < v.size(); ++k)
        out << (k ? " " : "") << to_string(v[k]);
    out << "\n";
}

void append_mat(std::ostringstream& out, const RMat& M)
{
    for (int i = 0; i < M.rows; ++i) {
        for (int j = 0; j < M.cols; ++j)
            out << (j ? " " : "") << to_string(M(i, j));
        out << "\n";
    }
}

}  // namespace

InstanceFile parse_instance(const std::string& text)
{
    Lexer lex(text);
    const int kind_line = lex.line();
    const std::string kind = lex.next("instance kind");

    if (kind == "lp") {
        const int m = positive_dim(lex, "m");
        const int n = positive_dim(lex, "n");
        RMat A = lex.next_mat(m, n, "A entry");
        RVec b = lex.next_vec(m, "b entry");
        RVec c = lex.next_vec(n, "c entry");
        lex.expect_done();
        return InstanceFile{InstanceFile::Kind::Lp,
                            LPInstance(std::move(A), std::move(b), std::move(c))};
    }
    if (kind == "game") {
        const int m = positive_dim(lex, "m");
        const int n = positive_dim(lex, "n");
        RMat M = lex.next_mat(m, n, "M entry");
        lex.expect_done();
        return InstanceFile{InstanceFile::Kind::Game, Game(std::move(M))};
    }
    if (kind == "assignment") {
        const int n = positive_dim(lex, "n");
        const int at = lex.line();
        RMat mu = lex.next_mat(n, n, "mu entry");
        lex.expect_done();
        try {
            return InstanceFile{InstanceFile::Kind::Assignment,
                                AssignmentInstance(std::move(mu))};
        } catch (const std::invalid_argument& e) {
            throw ParseError(at, e.what());
        }
    }
    throw ParseError(kind_line, "unknown instance kind '" + kind + "'");
}

std::string serialize_instance(const InstanceFile& inst)
{
    std::ostringstream out;
    if (const auto* lp = std::get_if<LPInstance>(&inst.payload)) {
        out << "lp\n" << lp->m() << " " << lp->n() << "\n";
        append_mat(out, lp->A);
        append_vec(out, lp->b);
        append_vec(out, lp->c);
    } else if (const auto* g = std::get_if<Game>(&inst.payload)) {
        out << "game\n" << g->rows() << " " << g->cols() << "\n";
        append_mat(out, g->M);
    } else {
        const auto& a = std::get<AssignmentInstance>(inst.payload);
        out << "assignment\n" << a.n() << "\n";
        append_mat(out, a.mu);
    }
    return out.str();
}

ClaimFile parse_claim(const std::string& text, int m, int n)
{
    Lexer lex(text);
    const int kind_line = lex.line();
    const std::string kind = lex.next("claim kind");

    if (kind == "optimal") {
        RVec x = lex.next_vec(n, "x entry");
        RVec y = lex.next_vec(m, "y entry");
        Rat value = lex.next_rat("value");
        lex.expect_done();
        return ClaimFile{LPOutcome{OptimalPair{std::move(x), std::move(y), std::move(value)}}};
    }
    if (kind == "infeasible") {
        RVec z = lex.next_vec(m, "z entry");
        lex.expect_done();
        return ClaimFile{LPOutcome{InfeasibilityCert{std::move(z)}}};
    }
    if (kind == "unbounded") {
        RVec w = lex.next_vec(n, "w entry");
        std::optional<RVec> witness;
        if (!lex.done()) {
            const int at = lex.line();
            if (lex.next("witness keyword") != "witness")
                throw ParseError(at, "expected 'witness' or end of file");
            witness = lex.next_vec(n, "witness entry");
        }
        lex.expect_done();
        return ClaimFile{LPOutcome{UnboundednessCert{std::move(w), std::move(witness)}}};
    }
    if (kind == "solution") {
        Rat value = lex.next_rat("value");
        RVec p = lex.next_vec(m, "p entry");
        RVec q = lex.next_vec(n, "q entry");
        lex.expect_done();
        return ClaimFile{GameSolution{std::move(value), MixedStrategy{std::move(p)},
                                      MixedStrategy{std::move(q)}}};
    }
    throw ParseError(kind_line, "unknown claim kind '" + kind + "'");
}

std::string serialize_outcome(const LPOutcome& outcome)
{
    std::ostringstream out;
    if (const auto* opt = std::get_if<OptimalPair>(&outcome)) {
        out << "optimal\n";
        append_vec(out, opt->x);
        append_vec(out, opt->y);
        out << to_string(opt->value) << "\n";
    } else if (const auto* inf = std::get_if<InfeasibilityCert>(&outcome)) {
        out << "infeasible\n";
        append_vec(out, inf->z);
    } else {
        const auto& unb = std::get<UnboundednessCert>(outcome);
        out << "unbounded\n";
        append_vec(out, unb.w);
        if (unb.feasible_witness) {
            out << "witness\n";
            append_vec(out, *unb.feasible_witness);
        }
    }
    return out.str();
}

std::string serialize_game_solution(const GameSolution& sol)
{
    std::ostringstream out;
    out << "solution\n" << to_string(sol.value) << "\n";
    append_vec(out, sol.p.probs);
    append_vec(out, sol.q.probs);
    return out.str();
}

}  // namespace lpgame
