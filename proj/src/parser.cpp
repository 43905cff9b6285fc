#include "cmc/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cmc {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column) {}

namespace {

struct Token {
    enum Kind { Ident, Number, Symbol, End } kind;
    std::string text;
    int line, column;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        skip_space();
        tok_.line = line_;
        tok_.column = col_;
        if (pos_ >= src_.size()) {
            tok_.kind = Token::End;
            tok_.text.clear();
            return;
        }
        char c = src_[pos_];
        std::size_t start = pos_;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                bump();
            tok_.kind = Token::Ident;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) bump();
            tok_.kind = Token::Number;
        } else {
            bump();
            tok_.kind = Token::Symbol;
        }
        tok_.text = src_.substr(start, pos_ - start);
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else if (c == '#' || (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/')) {
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
            } else {
                break;
            }
        }
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_{Token::End, "", 1, 1};
};

class Parser {
  public:
    Parser(const std::string& src, std::optional<Field> override) : lex_(src), override_(std::move(override)) {}

    [[noreturn]] void fail(const std::string& what, const Token& at) { throw ParseError(what, at.line, at.column); }

    bool accept(const std::string& sym) {
        if (lex_.peek().kind != Token::End && lex_.peek().text == sym) {
            lex_.next();
            return true;
        }
        return false;
    }

    Token expect(const std::string& sym) {
        if (lex_.peek().text != sym || lex_.peek().kind == Token::End)
            fail("expected '" + sym + "'", lex_.peek());
        return lex_.next();
    }

    Token expect_kind(Token::Kind k, const std::string& what) {
        if (lex_.peek().kind != k) fail("expected " + what, lex_.peek());
        return lex_.next();
    }

    long expect_int() {
        Token t = expect_kind(Token::Number, "integer");
        try {
            return std::stol(t.text);
        } catch (const std::exception&) {
            fail("integer out of range", t);
        }
    }

    // expression grammar
    Polynomial expr(const RingPtr& R) {
        Polynomial acc = term(R);
        while (true) {
            if (accept("+"))
                acc += term(R);
            else if (accept("-"))
                acc -= term(R);
            else
                return acc;
        }
    }

    Polynomial term(const RingPtr& R) {
        Polynomial acc = unary(R);
        while (true) {
            if (accept("*")) {
                acc *= unary(R);
            } else if (lex_.peek().text == "/" && lex_.peek().kind == Token::Symbol) {
                Token at = lex_.next();
                Polynomial d = unary(R);
                if (!d.is_constant() || d.is_zero()) fail("division is only allowed by nonzero constants", at);
                acc = acc.scaled(R->field().inv(d.leading_coeff()));
            } else {
                return acc;
            }
        }
    }

    Polynomial unary(const RingPtr& R) {
        if (accept("-")) return -unary(R);
        if (accept("+")) return unary(R);
        return power(R);
    }

    Polynomial power(const RingPtr& R) {
        Polynomial base = atom(R);
        if (accept("^")) {
            long e = expect_int();
            if (e < 0) fail("negative exponent", lex_.peek());
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial atom(const RingPtr& R) {
        const Token& t = lex_.peek();
        if (t.kind == Token::Number) {
            Token n = lex_.next();
            return Polynomial::constant(R, R->field().from_string(n.text));
        }
        if (t.kind == Token::Ident) {
            Token id = lex_.next();
            auto idx = R->index_of(id.text);
            if (!idx) fail("unknown variable '" + id.text + "'", id);
            return Polynomial::variable(R, *idx);
        }
        if (accept("(")) {
            Polynomial p = expr(R);
            expect(")");
            return p;
        }
        fail("expected a polynomial", t);
    }

    std::vector<Polynomial> poly_list(const RingPtr& R) {
        std::vector<Polynomial> out{expr(R)};
        while (accept(",")) out.push_back(expr(R));
        return out;
    }

    std::vector<std::string> ident_list() {
        std::vector<std::string> out{expect_kind(Token::Ident, "identifier").text};
        while (accept(",")) out.push_back(expect_kind(Token::Ident, "identifier").text);
        return out;
    }

    Field field_spec() {
        Token t = expect_kind(Token::Ident, "field (F[0] or F[p])");
        std::string digits;
        if (t.text == "QQ" || t.text == "Q") return Field::rationals();
        if (t.text == "F") {
            expect("[");
            digits = expect_kind(Token::Number, "characteristic").text;
            expect("]");
        } else if (t.text.size() > 1 && t.text[0] == 'F' &&
                   t.text.find_first_not_of("0123456789", 1) == std::string::npos) {
            digits = t.text.substr(1);
        } else {
            fail("unknown field '" + t.text + "'", t);
        }
        try {
            return parse_field(digits);
        } catch (const FieldError& e) {
            fail(e.what(), t);
        }
    }

    Document document() {
        Document doc;
        std::size_t unnamed = 0;
        MonomialOrder order;
        Field field;
        std::vector<std::string> vars;
        auto need_ring = [&](const Token& at) {
            if (!doc.ring) fail("declare the ring first", at);
        };
        while (lex_.peek().kind != Token::End) {
            Token kw = expect_kind(Token::Ident, "statement keyword");
            if (kw.text == "ring") {
                field = field_spec();
                if (override_) field = *override_;
                Token v = lex_.peek();
                if (expect_kind(Token::Ident, "'vars'").text != "vars") fail("expected 'vars'", v);
                vars = ident_list();
                try {
                    doc.ring = Ring::make(field, vars, order);
                } catch (const std::exception& e) {
                    fail(e.what(), kw);
                }
            } else if (kw.text == "order") {
                Token o = expect_kind(Token::Ident, "order name");
                if (o.text == "lex")
                    order = MonomialOrder::lex();
                else if (o.text == "degrevlex")
                    order = MonomialOrder::degrevlex();
                else
                    fail("unknown order '" + o.text + "'", o);
                if (doc.ring) doc.ring = doc.ring->with_order(order);
            } else if (kw.text == "ideal") {
                need_ring(kw);
                std::string name;
                if (lex_.peek().kind == Token::Ident && !doc.ring->index_of(lex_.peek().text)) {
                    name = lex_.next().text;
                    expect("=");
                } else {
                    static const char* defaults[] = {"I", "J", "K"};
                    name = unnamed < 3 ? defaults[unnamed] : "I" + std::to_string(unnamed);
                    ++unnamed;
                }
                doc.ideals.insert_or_assign(name, poly_list(doc.ring));
            } else if (kw.text == "matrix") {
                need_ring(kw);
                std::string name = expect_kind(Token::Ident, "matrix name").text;
                expect("[");
                long r = expect_int();
                expect(",");
                long c = expect_int();
                expect("]");
                Token eq = expect("=");
                auto entries = poly_list(doc.ring);
                if (r <= 0 || c <= 0 || entries.size() != static_cast<std::size_t>(r * c))
                    fail("matrix " + name + " needs " + std::to_string(r * c) + " entries, got " +
                             std::to_string(entries.size()),
                         eq);
                doc.matrices.insert_or_assign(name, PolyMatrix(doc.ring, static_cast<std::size_t>(r),
                                                               static_cast<std::size_t>(c), std::move(entries)));
            } else if (kw.text == "poly") {
                need_ring(kw);
                std::string name = expect_kind(Token::Ident, "polynomial name").text;
                expect("=");
                doc.polys.insert_or_assign(name, expr(doc.ring));
            } else if (kw.text == "set") {
                std::string name = expect_kind(Token::Ident, "list name").text;
                expect("=");
                doc.lists[name] = ident_list();
            } else {
                doc.ints[kw.text] = expect_int();
            }
            expect(";");
        }
        if (!doc.ring) throw ParseError("missing ring declaration", 1, 1);
        return doc;
    }

    Polynomial single(const RingPtr& R) {
        Polynomial p = expr(R);
        if (lex_.peek().kind != Token::End) fail("unexpected '" + lex_.peek().text + "'", lex_.peek());
        return p;
    }

  private:
    Lexer lex_;
    std::optional<Field> override_;
};

} // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    Parser p(text, std::nullopt);
    return p.single(ring);
}

const std::vector<Polynomial>& Document::ideal(const std::string& name) const {
    auto it = ideals.find(name);
    if (it == ideals.end()) throw std::invalid_argument("input declares no ideal '" + name + "'");
    return it->second;
}

const PolyMatrix& Document::matrix(const std::string& name) const {
    auto it = matrices.find(name);
    if (it == matrices.end()) throw std::invalid_argument("input declares no matrix '" + name + "'");
    return it->second;
}

std::optional<long> Document::integer(const std::string& key) const {
    auto it = ints.find(key);
    if (it == ints.end()) return std::nullopt;
    return it->second;
}

Document parse_document(const std::string& text, const std::optional<Field>& field_override) {
    Parser p(text, field_override);
    return p.document();
}

Document parse_file(const std::string& path, const std::optional<Field>& field_override) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str(), field_override);
}

} // namespace cmc
