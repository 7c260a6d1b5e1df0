#include "bcn/network.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "bcn/stp.hpp"

namespace bcn {

bool eval(const Expr& expr, const std::vector<bool>& assignment) {
    switch (expr.kind) {
        case Expr::Kind::constant: return expr.value;
        case Expr::Kind::variable: return assignment[static_cast<size_t>(expr.var)];
        case Expr::Kind::negation: return !eval(*expr.lhs, assignment);
        case Expr::Kind::conjunction: return eval(*expr.lhs, assignment) && eval(*expr.rhs, assignment);
        case Expr::Kind::disjunction: return eval(*expr.lhs, assignment) || eval(*expr.rhs, assignment);
        case Expr::Kind::implication: return !eval(*expr.lhs, assignment) || eval(*expr.rhs, assignment);
        case Expr::Kind::equivalence: return eval(*expr.lhs, assignment) == eval(*expr.rhs, assignment);
    }
    throw std::logic_error("unreachable expression kind");
}

int state_index_from_bits(const std::vector<bool>& bits) {
    int index = 0;
    for (bool b : bits) index = (index << 1) | (b ? 0 : 1);
    return index;
}

std::vector<bool> bits_from_state_index(int index0, int num_bits) {
    std::vector<bool> bits(static_cast<size_t>(num_bits));
    for (int p = 0; p < num_bits; ++p) {
        bits[static_cast<size_t>(p)] = ((index0 >> (num_bits - 1 - p)) & 1) == 0;
    }
    return bits;
}

namespace {

// ---------------------------------------------------------------- lexing --

enum class Tok {
    ident,
    integer,
    prime,
    equals,
    bang,
    amp,
    pipe,
    arrow,
    iff,
    lparen,
    rparen,
    lbrace,
    rbrace,
    comma,
    colon,
    slash,
    newline,
    end,
};

struct Token {
    Tok kind = Tok::end;
    std::string text;
    long long value = 0;
    SourceLocation loc;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    size_t pos = 0;
    int line = 1;
    int col = 1;
    auto push = [&](Tok kind, std::string text, SourceLocation loc, long long value = 0) {
        out.push_back({kind, std::move(text), value, loc});
    };
    while (pos < src.size()) {
        char c = src[pos];
        SourceLocation loc{line, col};
        if (c == ' ' || c == '\t' || c == '\r') {
            ++pos;
            ++col;
            continue;
        }
        if (c == '#') {
            while (pos < src.size() && src[pos] != '\n') ++pos;
            continue;
        }
        if (c == '\n') {
            push(Tok::newline, "\n", loc);
            ++pos;
            ++line;
            col = 1;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
                ++pos;
            }
            std::string word(src.substr(start, pos - start));
            col += static_cast<int>(pos - start);
            push(Tok::ident, std::move(word), loc);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            std::string digits(src.substr(start, pos - start));
            col += static_cast<int>(pos - start);
            push(Tok::integer, digits, loc, std::stoll(digits));
            continue;
        }
        auto two = src.substr(pos, 2);
        auto three = src.substr(pos, 3);
        if (three == "<->") {
            push(Tok::iff, "<->", loc);
            pos += 3;
            col += 3;
            continue;
        }
        if (two == "->") {
            push(Tok::arrow, "->", loc);
            pos += 2;
            col += 2;
            continue;
        }
        Tok kind;
        switch (c) {
            case '\'': kind = Tok::prime; break;
            case '=': kind = Tok::equals; break;
            case '!': kind = Tok::bang; break;
            case '&': kind = Tok::amp; break;
            case '|': kind = Tok::pipe; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            case '{': kind = Tok::lbrace; break;
            case '}': kind = Tok::rbrace; break;
            case ',': kind = Tok::comma; break;
            case ':': kind = Tok::colon; break;
            case '/': kind = Tok::slash; break;
            default:
                throw ParseError("unexpected character '" + std::string(1, c) + "'", loc);
        }
        push(kind, std::string(1, c), loc);
        ++pos;
        ++col;
    }
    out.push_back({Tok::end, "", 0, {line, col}});
    return out;
}

// --------------------------------------------------------------- parsing --

class NetworkParser {
public:
    explicit NetworkParser(std::string_view text) : toks_(tokenize(text)) {}

    NetworkSource run() {
        skip_newlines();
        while (!at(Tok::end)) {
            statement();
            skip_newlines();
        }
        finish();
        return std::move(net_);
    }

private:
    const Token& cur() const { return toks_[i_]; }
    bool at(Tok k) const { return cur().kind == k; }

    Token expect(Tok k, const std::string& what) {
        if (!at(k)) throw ParseError("expected " + what + ", got '" + describe(cur()) + "'", cur().loc);
        return toks_[i_++];
    }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::end) return "end of file";
        if (t.kind == Tok::newline) return "end of line";
        return t.text;
    }

    void skip_newlines() {
        while (at(Tok::newline)) ++i_;
    }

    void end_of_statement() {
        if (at(Tok::end)) return;
        expect(Tok::newline, "end of line");
    }

    void statement() {
        const Token& head = cur();
        if (head.kind != Tok::ident) {
            throw ParseError("expected a declaration, rule, mode, or target", head.loc);
        }
        if (head.text == "states" || head.text == "inputs") {
            declaration(head.text == "states");
        } else if (head.text == "mode") {
            mode_header();
        } else if (head.text == "target") {
            target_statement();
        } else {
            rule_statement();
        }
    }

    void declaration(bool is_state) {
        Token head = toks_[i_++];
        if (rules_started_) {
            throw ParseError("variable declarations must precede rules", head.loc);
        }
        int count = 0;
        while (at(Tok::ident)) {
            Token name = toks_[i_++];
            if (var_ids_.contains(name.text)) {
                throw ParseError("duplicate declaration of '" + name.text + "'", name.loc);
            }
            auto& list = is_state ? net_.state_vars : net_.input_vars;
            list.push_back(name.text);
            declared_.push_back({name.text, is_state});
            ++count;
        }
        if (count == 0) throw ParseError("expected at least one variable name", cur().loc);
        end_of_statement();
    }

    // Variable ids: inputs first, then states, both in declaration order.
    // Assigned lazily once declarations are complete.
    void assign_ids() {
        if (!var_ids_.empty()) return;
        int id = 0;
        for (const auto& name : net_.input_vars) var_ids_[name] = id++;
        for (const auto& name : net_.state_vars) var_ids_[name] = id++;
    }

    void mode_header() {
        Token head = toks_[i_++];
        assign_ids();
        rules_started_ = true;
        if (!net_.rules.empty()) {
            throw ParseError("mode blocks cannot be mixed with plain rules", head.loc);
        }
        Token p = expect(Tok::ident, "'p'");
        if (p.text != "p") throw ParseError("expected 'p=<rational>' after 'mode'", p.loc);
        expect(Tok::equals, "'='");
        Token num = expect(Tok::integer, "probability numerator");
        Rational prob(num.value);
        if (at(Tok::slash)) {
            ++i_;
            Token den = expect(Tok::integer, "probability denominator");
            if (den.value == 0) throw ParseError("probability denominator is zero", den.loc);
            prob = Rational(num.value, den.value);
        }
        if (!(prob > Rational(0))) {
            throw ParseError("mode probability must be positive", num.loc);
        }
        expect(Tok::colon, "':'");
        end_of_statement();
        NetworkMode mode;
        mode.probability = prob;
        mode.rules.resize(net_.state_vars.size());
        net_.modes.push_back(std::move(mode));
        last_mode_loc_ = head.loc;
    }

    void rule_statement() {
        Token name = toks_[i_++];
        assign_ids();
        rules_started_ = true;
        expect(Tok::prime, "' (prime) after the state variable");
        expect(Tok::equals, "'='");
        auto it = var_ids_.find(name.text);
        if (it == var_ids_.end()) {
            throw ParseError("undeclared variable '" + name.text + "'", name.loc);
        }
        int state_pos = it->second - net_.num_inputs();
        if (state_pos < 0) {
            throw ParseError("'" + name.text + "' is an input and cannot have an update rule",
                             name.loc);
        }
        ExprPtr body = expression();
        end_of_statement();
        if (!net_.modes.empty()) {
            auto& slot = net_.modes.back().rules[static_cast<size_t>(state_pos)];
            if (slot) throw ParseError("duplicate rule for '" + name.text + "' in this mode", name.loc);
            slot = std::move(body);
        } else {
            if (net_.rules.empty()) net_.rules.resize(net_.state_vars.size());
            auto& slot = net_.rules[static_cast<size_t>(state_pos)];
            if (slot) throw ParseError("duplicate rule for '" + name.text + "'", name.loc);
            slot = std::move(body);
        }
    }

    void target_statement() {
        Token head = toks_[i_++];
        assign_ids();
        if (net_.target) throw ParseError("duplicate target", head.loc);
        expect(Tok::equals, "'='");
        TargetSpec spec;
        if (at(Tok::lbrace)) {
            ++i_;
            for (;;) {
                Token first = expect(Tok::integer, "state index");
                int lo = static_cast<int>(first.value);
                int hi = lo;
                if (at(Tok::colon)) {
                    ++i_;
                    Token second = expect(Tok::integer, "range end");
                    hi = static_cast<int>(second.value);
                    if (hi < lo) throw ParseError("descending range", second.loc);
                }
                if (lo < 1) throw ParseError("state indices are 1-based", first.loc);
                for (int v = lo; v <= hi; ++v) spec.explicit_members.push_back(v);
                if (at(Tok::comma)) {
                    ++i_;
                    continue;
                }
                break;
            }
            expect(Tok::rbrace, "'}'");
        } else {
            SourceLocation loc = cur().loc;
            spec.predicate = expression();
            if (uses_input(*spec.predicate)) {
                throw ParseError("target predicate may only use state variables", loc);
            }
        }
        end_of_statement();
        net_.target = std::move(spec);
    }

    bool uses_input(const Expr& e) const {
        if (e.kind == Expr::Kind::variable) return e.var < net_.num_inputs();
        if (e.lhs && uses_input(*e.lhs)) return true;
        return e.rhs && uses_input(*e.rhs);
    }

    // expr := equiv;  '<->' binds loosest, then '->' (right-assoc), '|', '&', '!'
    ExprPtr expression() { return equivalence(); }

    ExprPtr equivalence() {
        ExprPtr lhs = implication();
        while (at(Tok::iff)) {
            ++i_;
            ExprPtr rhs = implication();
            lhs = make_binary(Expr::Kind::equivalence, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ExprPtr implication() {
        ExprPtr lhs = disjunction();
        if (at(Tok::arrow)) {
            ++i_;
            ExprPtr rhs = implication();
            return make_binary(Expr::Kind::implication, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ExprPtr disjunction() {
        ExprPtr lhs = conjunction();
        while (at(Tok::pipe)) {
            ++i_;
            lhs = make_binary(Expr::Kind::disjunction, std::move(lhs), conjunction());
        }
        return lhs;
    }

    ExprPtr conjunction() {
        ExprPtr lhs = unary();
        while (at(Tok::amp)) {
            ++i_;
            lhs = make_binary(Expr::Kind::conjunction, std::move(lhs), unary());
        }
        return lhs;
    }

    ExprPtr unary() {
        if (at(Tok::bang)) {
            ++i_;
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::negation;
            node->lhs = unary();
            return node;
        }
        return atom();
    }

    ExprPtr atom() {
        if (at(Tok::integer)) {
            Token t = toks_[i_++];
            if (t.value != 0 && t.value != 1) {
                throw ParseError("constants must be 0 or 1", t.loc);
            }
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::constant;
            node->value = t.value == 1;
            return node;
        }
        if (at(Tok::lparen)) {
            ++i_;
            ExprPtr inner = expression();
            expect(Tok::rparen, "')'");
            return inner;
        }
        if (at(Tok::ident)) {
            Token t = toks_[i_++];
            auto it = var_ids_.find(t.text);
            if (it == var_ids_.end()) {
                throw ParseError("undeclared variable '" + t.text + "'", t.loc);
            }
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::variable;
            node->var = it->second;
            node->name = t.text;
            return node;
        }
        throw ParseError("expected a variable, constant, '!' or '('", cur().loc);
    }

    static ExprPtr make_binary(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs) {
        auto node = std::make_unique<Expr>();
        node->kind = kind;
        node->lhs = std::move(lhs);
        node->rhs = std::move(rhs);
        return node;
    }

    void finish() {
        SourceLocation eof = toks_.back().loc;
        if (net_.state_vars.empty()) {
            throw ParseError("network declares no state variables", eof);
        }
        auto check_rules = [&](const std::vector<ExprPtr>& rules, const std::string& ctx) {
            if (rules.empty()) {
                throw ParseError("no update rules given" + ctx, eof);
            }
            for (size_t i = 0; i < net_.state_vars.size(); ++i) {
                if (!rules[i]) {
                    throw ParseError("missing rule for '" + net_.state_vars[i] + "'" + ctx, eof);
                }
            }
        };
        if (net_.modes.empty()) {
            check_rules(net_.rules, "");
        } else {
            Rational sum = 0;
            for (size_t k = 0; k < net_.modes.size(); ++k) {
                check_rules(net_.modes[k].rules, " in mode " + std::to_string(k + 1));
                sum += net_.modes[k].probability;
            }
            if (sum != Rational(1)) {
                throw ParseError("mode probabilities sum to " + sum.str() + ", expected 1",
                                 last_mode_loc_);
            }
        }
    }

    std::vector<Token> toks_;
    size_t i_ = 0;
    NetworkSource net_;
    std::unordered_map<std::string, int> var_ids_;
    std::vector<std::pair<std::string, bool>> declared_;
    bool rules_started_ = false;
    SourceLocation last_mode_loc_;
};

// -------------------------------------------------------------- printing --

int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::equivalence: return 1;
        case Expr::Kind::implication: return 2;
        case Expr::Kind::disjunction: return 3;
        case Expr::Kind::conjunction: return 4;
        case Expr::Kind::negation: return 5;
        default: return 6;
    }
}

void print_expr(const Expr& e, int min_prec, std::string& out) {
    int prec = precedence(e);
    bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (e.kind) {
        case Expr::Kind::constant:
            out += e.value ? '1' : '0';
            break;
        case Expr::Kind::variable:
            out += e.name;
            break;
        case Expr::Kind::negation:
            out += '!';
            print_expr(*e.lhs, 5, out);
            break;
        case Expr::Kind::conjunction:
            print_expr(*e.lhs, 4, out);
            out += " & ";
            print_expr(*e.rhs, 5, out);
            break;
        case Expr::Kind::disjunction:
            print_expr(*e.lhs, 3, out);
            out += " | ";
            print_expr(*e.rhs, 4, out);
            break;
        case Expr::Kind::implication:
            print_expr(*e.lhs, 3, out);
            out += " -> ";
            print_expr(*e.rhs, 2, out);
            break;
        case Expr::Kind::equivalence:
            print_expr(*e.lhs, 1, out);
            out += " <-> ";
            print_expr(*e.rhs, 2, out);
            break;
    }
    if (parens) out += ')';
}

void print_rules(const NetworkSource& s, const std::vector<ExprPtr>& rules, std::string& out) {
    for (size_t i = 0; i < rules.size(); ++i) {
        out += s.state_vars[i];
        out += "' = ";
        print_expr(*rules[i], 0, out);
        out += '\n';
    }
}

}  // namespace

NetworkSource parse_network(std::string_view text) {
    return NetworkParser(text).run();
}

std::string to_canonical_text(const NetworkSource& s) {
    std::string out = "states";
    for (const auto& v : s.state_vars) {
        out += ' ';
        out += v;
    }
    out += '\n';
    if (!s.input_vars.empty()) {
        out += "inputs";
        for (const auto& v : s.input_vars) {
            out += ' ';
            out += v;
        }
        out += '\n';
    }
    if (s.modes.empty()) {
        print_rules(s, s.rules, out);
    } else {
        for (const auto& mode : s.modes) {
            out += "mode p=" + mode.probability.str() + ":\n";
            print_rules(s, mode.rules, out);
        }
    }
    if (s.target) {
        out += "target = ";
        if (s.target->predicate) {
            print_expr(*s.target->predicate, 0, out);
        } else {
            out += '{';
            for (size_t i = 0; i < s.target->explicit_members.size(); ++i) {
                if (i > 0) out += ", ";
                out += std::to_string(s.target->explicit_members[i]);
            }
            out += '}';
        }
        out += '\n';
    }
    return out;
}

// -------------------------------------------------------------- compiling --

LogicalMatrix compile_function(const Expr& expr, std::span<const int> var_ids) {
    int k = static_cast<int>(var_ids.size());
    if (k > 24) throw std::invalid_argument("refusing to enumerate more than 2^24 assignments");
    int max_id = -1;
    for (int id : var_ids) max_id = std::max(max_id, id);
    std::vector<bool> assignment(static_cast<size_t>(max_id + 1));
    long long cols = 1ll << k;
    std::vector<int> unit_rows(static_cast<size_t>(cols));
    for (long long j = 0; j < cols; ++j) {
        std::vector<bool> bits = bits_from_state_index(static_cast<int>(j), k);
        for (int p = 0; p < k; ++p) assignment[static_cast<size_t>(var_ids[p])] = bits[static_cast<size_t>(p)];
        unit_rows[static_cast<size_t>(j)] = eval(expr, assignment) ? 0 : 1;
    }
    return {2, std::move(unit_rows)};
}

namespace {

LogicalMatrix assemble_transition(const NetworkSource& source, const std::vector<ExprPtr>& rules) {
    int total = source.num_inputs() + source.num_states();
    std::vector<int> all_ids(static_cast<size_t>(total));
    for (int i = 0; i < total; ++i) all_ids[static_cast<size_t>(i)] = i;
    LogicalMatrix f = compile_function(*rules.front(), all_ids);
    for (size_t i = 1; i < rules.size(); ++i) {
        f = khatri_rao(f, compile_function(*rules[i], all_ids));
    }
    return f;
}

TargetSet resolve_target(const TargetSpec& spec, const NetworkSource& source, int N) {
    if (!spec.predicate) {
        return TargetSet::from_1based(N, spec.explicit_members);
    }
    int n = source.num_states();
    int m = source.num_inputs();
    std::vector<bool> assignment(static_cast<size_t>(m + n));
    std::vector<int> members;
    for (int i = 0; i < N; ++i) {
        std::vector<bool> bits = bits_from_state_index(i, n);
        for (int p = 0; p < n; ++p) assignment[static_cast<size_t>(m + p)] = bits[static_cast<size_t>(p)];
        if (eval(*spec.predicate, assignment)) members.push_back(i);
    }
    if (members.empty()) {
        throw std::invalid_argument("target predicate selects no states");
    }
    return TargetSet::from_0based(N, std::move(members));
}

}  // namespace

AssembledModel assemble(const NetworkSource& source) {
    int n = source.num_states();
    int m = source.num_inputs();
    if (n + m > 20) throw std::invalid_argument("network too large to assemble (n + m > 20)");
    int N = 1 << n;
    int M = 1 << m;
    AssembledModel out;
    if (!source.probabilistic()) {
        out.model = BcnModel::from_matrix(N, M, assemble_transition(source, source.rules));
    } else {
        PbcnModel model;
        model.bits_n = n;
        model.bits_m = m;
        model.N = N;
        model.M = M;
        for (const auto& mode : source.modes) {
            model.modes.push_back({assemble_transition(source, mode.rules), mode.probability});
        }
        model.validate();
        out.model = std::move(model);
    }
    if (source.target) out.target = resolve_target(*source.target, source, N);
    return out;
}

}  // namespace bcn
