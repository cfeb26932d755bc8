#include "fpsr/problem.hpp"

#include <cctype>
#include <set>

#include "fpsr/errors.hpp"

namespace fpsr {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// ---------------------------------------------------------------------------
// Equation expressions

class ExprParser {
public:
    ExprParser(std::string_view text, std::size_t n, int line, int column)
        : text_(text), n_(n), ny_(n + 1), line_(line), column_(column) {}

    MPoly parse() {
        skip_space();
        if (pos_ == text_.size()) fail(ParseErrorCode::syntax, "empty expression", "");
        MPoly e = expr();
        skip_space();
        if (pos_ != text_.size()) fail(ParseErrorCode::syntax, "unexpected input", peek_token());
        return e;
    }

private:
    [[noreturn]] void fail(ParseErrorCode code, const std::string& msg, const std::string& token) const {
        throw ParseError(code, msg, line_, column_ + static_cast<int>(tok_start_), token);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        tok_start_ = pos_;
    }

    std::string peek_token() const {
        if (pos_ >= text_.size()) return "";
        std::size_t end = pos_ + 1;
        if (is_ident_char(text_[pos_]) || text_[pos_] == '.')
            while (end < text_.size() && (is_ident_char(text_[end]) || text_[end] == '.')) ++end;
        return std::string(text_.substr(pos_, end - pos_));
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MPoly expr() {
        MPoly acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MPoly term() {
        MPoly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                skip_space();
                const auto at = pos_;
                MPoly d = unary();
                if (d.is_zero() || d.total_degree() != 0) {
                    tok_start_ = at;
                    fail(ParseErrorCode::syntax, "division only by a nonzero constant",
                         std::string(text_.substr(at, pos_ - at)));
                }
                acc = acc.scaled(d.terms().begin()->second.inverse());
            } else {
                return acc;
            }
        }
    }

    MPoly unary() {
        if (accept('-')) return unary().scaled(-1);
        if (accept('+')) return unary();
        return power();
    }

    MPoly power() {
        MPoly base = primary();
        while (accept('^')) {
            skip_space();
            std::size_t end = pos_;
            while (end < text_.size() && is_digit(text_[end])) ++end;
            bool is_int = end > pos_ && (end == text_.size() || !(is_ident_char(text_[end]) || text_[end] == '.'));
            if (!is_int) {
                fail(ParseErrorCode::bad_exponent, "exponent must be a nonnegative integer literal",
                     pos_ < text_.size() ? peek_token() : "<end>");
            }
            std::string digits(text_.substr(pos_, end - pos_));
            if (digits.size() > 4) fail(ParseErrorCode::bad_exponent, "exponent too large", digits);
            pos_ = end;
            base = base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    MPoly primary() {
        skip_space();
        if (pos_ >= text_.size()) fail(ParseErrorCode::syntax, "unexpected end of expression", "");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly e = expr();
            if (!accept(')')) fail(ParseErrorCode::syntax, "expected ')'", peek_token());
            return e;
        }
        if (is_digit(c) || c == '.') {
            std::size_t end = pos_;
            while (end < text_.size() && (is_digit(text_[end]) || text_[end] == '.')) ++end;
            std::string lit(text_.substr(pos_, end - pos_));
            if (end < text_.size() && is_ident_start(text_[end]))
                fail(ParseErrorCode::syntax, "malformed number", peek_token());
            Rational v;
            try {
                v = Rational::parse(lit);
            } catch (const Error&) {
                fail(ParseErrorCode::syntax, "malformed number", lit);
            }
            pos_ = end;
            return MPoly::constant(ny_, v);
        }
        if (is_ident_start(c)) {
            std::size_t end = pos_;
            while (end < text_.size() && is_ident_char(text_[end])) ++end;
            std::string id(text_.substr(pos_, end - pos_));
            pos_ = end;
            if (id == "z") return MPoly::z_power(ny_, 1);
            if ((id[0] == 'u' || id[0] == 'y') && id.size() > 1 &&
                std::all_of(id.begin() + 1, id.end(), is_digit)) {
                if (id.size() > 6) fail(ParseErrorCode::order_mismatch, "derivative index too large", id);
                const auto i = std::stoul(id.substr(1));
                if (i > n_)
                    fail(ParseErrorCode::order_mismatch,
                         id + " exceeds the equation order " + std::to_string(n_), id);
                return MPoly::y(ny_, i);
            }
            fail(ParseErrorCode::unknown_identifier, "unknown identifier", id);
        }
        fail(ParseErrorCode::syntax, "unexpected character", std::string(1, c));
    }

    std::string_view text_;
    std::size_t n_;
    std::size_t ny_;
    int line_;
    int column_;
    std::size_t pos_ = 0;
    std::size_t tok_start_ = 0;
};

// ---------------------------------------------------------------------------
// key = value files

struct Token {
    enum class Kind { ident, equals, string, number, lbracket, rbracket, comma, end };
    Kind kind = Kind::end;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_blank();
        Token t;
        t.line = line_;
        t.column = col_;
        if (pos_ >= src_.size()) return t;
        const char c = src_[pos_];
        if (is_ident_start(c)) {
            t.kind = Token::Kind::ident;
            while (pos_ < src_.size() && is_ident_char(src_[pos_])) t.text += take();
        } else if (c == '"') {
            t.kind = Token::Kind::string;
            take();
            while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') t.text += take();
            if (pos_ >= src_.size() || src_[pos_] != '"')
                throw ParseError(ParseErrorCode::syntax, "unterminated string", t.line, t.column, "\"" + t.text);
            take();
        } else if (is_digit(c) || c == '-' || c == '+' || c == '.') {
            t.kind = Token::Kind::number;
            t.text += take();
            while (pos_ < src_.size() && (is_digit(src_[pos_]) || src_[pos_] == '.' || src_[pos_] == '/'))
                t.text += take();
        } else {
            switch (c) {
                case '=': t.kind = Token::Kind::equals; break;
                case '[': t.kind = Token::Kind::lbracket; break;
                case ']': t.kind = Token::Kind::rbracket; break;
                case ',': t.kind = Token::Kind::comma; break;
                default:
                    throw ParseError(ParseErrorCode::syntax, "unexpected character", line_, col_, std::string(1, c));
            }
            t.text = std::string(1, take());
        }
        return t;
    }

private:
    char take() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_blank() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

[[noreturn]] void fail_at(const Token& t, ParseErrorCode code, const std::string& msg) {
    throw ParseError(code, msg, t.line, t.column, t.kind == Token::Kind::end ? "<end of input>" : t.text);
}

Rational rational_value(const Token& t) {
    try {
        return Rational::parse(t.text);
    } catch (const Error&) {
        fail_at(t, ParseErrorCode::invalid_value, "not a rational number");
    }
}

std::size_t integer_value(const Token& t) {
    if (t.kind != Token::Kind::number || t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), is_digit) ||
        t.text.size() > 9)
        fail_at(t, ParseErrorCode::invalid_value, "expected a nonnegative integer");
    return std::stoul(t.text);
}

struct ListValue {
    std::vector<Token> items;
};

ListValue parse_list(Lexer& lex, bool allow_bare_numbers) {
    ListValue out;
    Token t = lex.next();
    if (t.kind == Token::Kind::rbracket) return out;
    for (;;) {
        if (t.kind != Token::Kind::string && !(allow_bare_numbers && t.kind == Token::Kind::number))
            fail_at(t, ParseErrorCode::syntax,
                    allow_bare_numbers ? "expected a quoted rational or a number" : "expected a quoted rational");
        out.items.push_back(t);
        t = lex.next();
        if (t.kind == Token::Kind::rbracket) return out;
        if (t.kind != Token::Kind::comma) fail_at(t, ParseErrorCode::syntax, "expected ',' or ']'");
        t = lex.next();
    }
}

std::vector<Rational> positive_list(const ListValue& list) {
    std::vector<Rational> out;
    for (const auto& t : list.items) {
        Rational v = rational_value(t);
        if (v.sign() <= 0) fail_at(t, ParseErrorCode::invalid_value, "polydisk radii must be positive");
        out.push_back(v);
    }
    if (out.empty()) throw ParseError(ParseErrorCode::invalid_value, "empty radius list", 1, 1, "");
    return out;
}

}  // namespace

MPoly parse_equation(std::string_view text, std::size_t n, int line, int column) {
    return ExprParser(text, n, line, column).parse();
}

const char* to_string(Mode m) {
    switch (m) {
        case Mode::full: return "full";
        case Mode::polygon_only: return "polygon-only";
        case Mode::solve_only: return "solve-only";
    }
    return "full";
}

PolydiskGrid ProblemFile::grid() const {
    PolydiskGrid g = PolydiskGrid::default_grid();
    if (grid_r) g.r = *grid_r;
    if (grid_rho) g.rho = *grid_rho;
    return g;
}

ProblemFile parse_problem(std::string_view text) {
    Lexer lex(text);
    ProblemFile pf;
    std::set<std::string> seen;
    std::optional<Token> equation_tok;
    std::optional<Token> order_tok;
    bool have_terms = false;
    bool have_prefix = false;

    for (Token key = lex.next(); key.kind != Token::Kind::end; key = lex.next()) {
        if (key.kind != Token::Kind::ident) fail_at(key, ParseErrorCode::syntax, "expected a key");
        std::string name = key.text;
        if (name == "equation") name = "F";
        if (name == "grid_r") name = "r";
        if (name == "grid_rho") name = "rho";
        if (!seen.insert(name).second) fail_at(key, ParseErrorCode::syntax, "duplicate key");
        Token eq = lex.next();
        if (eq.kind != Token::Kind::equals) fail_at(eq, ParseErrorCode::syntax, "expected '='");

        if (name == "order") {
            Token v = lex.next();
            pf.order = integer_value(v);
            order_tok = v;
        } else if (name == "terms") {
            pf.terms = integer_value(lex.next());
            have_terms = true;
        } else if (name == "F") {
            Token v = lex.next();
            if (v.kind != Token::Kind::string) fail_at(v, ParseErrorCode::syntax, "expected a quoted expression");
            pf.equation = v.text;
            equation_tok = v;
        } else if (name == "prefix" || name == "r" || name == "rho") {
            Token open = lex.next();
            if (open.kind != Token::Kind::lbracket) fail_at(open, ParseErrorCode::syntax, "expected '['");
            const bool is_prefix = name == "prefix";
            ListValue list = parse_list(lex, !is_prefix);
            if (is_prefix) {
                for (const auto& t : list.items) pf.prefix.push_back(rational_value(t));
                have_prefix = true;
            } else if (name == "r") {
                pf.grid_r = positive_list(list);
            } else {
                pf.grid_rho = positive_list(list);
            }
        } else if (name == "mode") {
            Token v = lex.next();
            if (v.kind != Token::Kind::string) fail_at(v, ParseErrorCode::syntax, "expected a quoted mode");
            if (v.text == "full") {
                pf.mode = Mode::full;
            } else if (v.text == "polygon-only") {
                pf.mode = Mode::polygon_only;
            } else if (v.text == "solve-only") {
                pf.mode = Mode::solve_only;
            } else {
                fail_at(v, ParseErrorCode::invalid_value, "mode must be full, polygon-only or solve-only");
            }
        } else {
            fail_at(key, ParseErrorCode::unknown_identifier, "unknown key");
        }
    }

    if (!order_tok) throw ParseError(ParseErrorCode::missing_key, "missing key 'order'", 1, 1, "");
    if (!equation_tok) throw ParseError(ParseErrorCode::missing_key, "missing key 'F'", 1, 1, "");
    // the expression starts one column after the opening quote
    pf.F = parse_equation(pf.equation, pf.order, equation_tok->line, equation_tok->column + 1);
    if (pf.F.is_zero()) fail_at(*equation_tok, ParseErrorCode::invalid_value, "F is identically zero");
    if (!have_prefix) throw ParseError(ParseErrorCode::missing_key, "missing key 'prefix'", 1, 1, "");
    if (pf.prefix.empty()) throw ParseError(ParseErrorCode::invalid_value, "prefix must not be empty", 1, 1, "");
    if (!have_terms) pf.terms = 50;
    return pf;
}

PolydiskGrid parse_grid(std::string_view text) {
    PolydiskGrid g = PolydiskGrid::default_grid();
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view part = text.substr(start, end - start);
        if (!part.empty()) {
            auto eq = part.find('=');
            if (eq == std::string_view::npos)
                throw ParseError(ParseErrorCode::syntax, "grid entries look like r=1,2", 1, static_cast<int>(start) + 1,
                                 std::string(part));
            std::string key(part.substr(0, eq));
            std::vector<Rational> values;
            std::string_view rest = part.substr(eq + 1);
            std::size_t s = 0;
            while (s <= rest.size()) {
                std::size_t e = rest.find(',', s);
                if (e == std::string_view::npos) e = rest.size();
                Rational v;
                try {
                    v = Rational::parse(rest.substr(s, e - s));
                } catch (const Error&) {
                    throw ParseError(ParseErrorCode::invalid_value, "not a rational number", 1,
                                     static_cast<int>(start + eq + 1 + s) + 1, std::string(rest.substr(s, e - s)));
                }
                if (v.sign() <= 0)
                    throw ParseError(ParseErrorCode::invalid_value, "polydisk radii must be positive", 1,
                                     static_cast<int>(start + eq + 1 + s) + 1, v.str());
                values.push_back(v);
                s = e + 1;
            }
            if (key == "r") {
                g.r = std::move(values);
            } else if (key == "rho") {
                g.rho = std::move(values);
            } else {
                throw ParseError(ParseErrorCode::unknown_identifier, "unknown grid key", 1, static_cast<int>(start) + 1, key);
            }
        }
        start = end + 1;
    }
    return g;
}

}  // namespace fpsr
