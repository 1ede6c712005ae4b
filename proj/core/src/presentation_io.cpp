#include "gsb/presentation_io.hpp"

#include <cctype>

namespace gsb {

ParseError::ParseError(std::string message, std::size_t line, std::size_t column)
    : std::runtime_error(line ? message + " (line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ")"
                              : message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    enum Kind { Ident, Integer, Plus, Minus, Star, Caret, Slash, LParen, RParen, End } kind;
    std::string text;
    std::size_t line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
        std::size_t line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::End, "", line, col};
        char ch = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                s += text_[pos_];
                advance();
            }
            return {Token::Ident, s, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string s;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                s += text_[pos_];
                advance();
            }
            return {Token::Integer, s, line, col};
        }
        advance();
        switch (ch) {
            case '+': return {Token::Plus, "+", line, col};
            case '-': return {Token::Minus, "-", line, col};
            case '*': return {Token::Star, "*", line, col};
            case '^': return {Token::Caret, "^", line, col};
            case '/': return {Token::Slash, "/", line, col};
            case '(': return {Token::LParen, "(", line, col};
            case ')': return {Token::RParen, ")", line, col};
        }
        throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

class ExprParser {
public:
    ExprParser(const std::string& text, const Context& ctx)
        : lexer_(text), ctx_(ctx), cur_(lexer_.next()) {}

    Poly parse() {
        Poly p = expr();
        expect(Token::End, "end of expression");
        return p;
    }

private:
    Poly expr() {
        bool neg = false;
        if (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            neg = cur_.kind == Token::Minus;
            bump();
        }
        Poly acc = term();
        if (neg) acc = -acc;
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            bool minus = cur_.kind == Token::Minus;
            bump();
            Poly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (cur_.kind == Token::Star) {
            bump();
            acc = acc * factor();
        }
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (cur_.kind == Token::Caret) {
            bump();
            Token t = expect(Token::Integer, "nonnegative integer exponent");
            unsigned long e = std::stoul(t.text);
            Poly acc = Poly::monomial(ctx_, Word::one());
            for (unsigned long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Poly atom() {
        if (cur_.kind == Token::Ident) {
            auto idx = ctx_.alphabet->index_of(cur_.text);
            if (!idx)
                throw ParseError("unknown identifier '" + cur_.text + "'", cur_.line, cur_.col);
            bump();
            return Poly::monomial(ctx_, Word::single(*idx));
        }
        if (cur_.kind == Token::Integer) {
            Int num(cur_.text);
            Token first = cur_;
            bump();
            if (cur_.kind == Token::Slash) {
                bump();
                Token d = expect(Token::Integer, "denominator");
                Int den(d.text);
                if (den == 0) throw ParseError("zero denominator", d.line, d.col);
                return Poly(ctx_, Word::one(), ctx_.field.normalize(Scalar(num, den)));
            }
            (void)first;
            return Poly(ctx_, Word::one(), ctx_.field.normalize(Scalar(num)));
        }
        if (cur_.kind == Token::LParen) {
            bump();
            Poly p = expr();
            expect(Token::RParen, "')'");
            return p;
        }
        throw ParseError("expected identifier, number, or '('", cur_.line, cur_.col);
    }

    Token expect(Token::Kind k, const std::string& what) {
        if (cur_.kind != k) throw ParseError("expected " + what, cur_.line, cur_.col);
        Token t = cur_;
        bump();
        return t;
    }

    void bump() { cur_ = lexer_.next(); }

    Lexer lexer_;
    const Context& ctx_;
    Token cur_;
};

std::string word_expr(const Word& w, const Alphabet& a) {
    std::string s;
    std::size_t i = 0;
    while (i < w.length()) {
        std::size_t j = i;
        while (j < w.length() && w.at(j) == w.at(i)) ++j;
        if (!s.empty()) s += "*";
        s += a.letter(w.at(i)).name;
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

}  // namespace

Poly parse_poly_expr(const std::string& text, const Context& ctx) {
    return ExprParser(text, ctx).parse();
}

std::string print_poly_expr(const Poly& p) {
    if (p.is_zero()) return "0";
    const Alphabet& a = *p.context().alphabet;
    std::string s;
    for (const auto& [w, c] : p.terms()) {
        std::string cs = Field::to_string(c);
        bool neg = cs[0] == '-';
        if (neg) cs = cs.substr(1);
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (w.is_one()) {
            s += cs;
        } else if (cs == "1") {
            s += word_expr(w, a);
        } else {
            s += cs + "*" + word_expr(w, a);
        }
    }
    return s;
}

namespace {

OrderSpec order_from_json(const Json& j, const AlphabetPtr& alphabet, bool series) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("precedence"))
        throw ParseError("order spec needs 'kind' and 'precedence'");
    std::string kind = j.at("kind").get<std::string>();
    std::vector<std::size_t> prec;
    for (const auto& name : j.at("precedence")) {
        auto idx = alphabet->index_of(name.get<std::string>());
        if (!idx) throw ParseError("unknown generator '" + name.get<std::string>() + "' in precedence");
        prec.push_back(*idx);
    }
    if (kind == "deg-lex") return OrderSpec::deg_lex(alphabet, std::move(prec));
    if (kind == "theta-lex") {
        std::vector<unsigned> weights;
        for (std::size_t i = 0; i < alphabet->size(); ++i)
            weights.push_back(alphabet->letter(i).weight);
        return OrderSpec::theta_lex(alphabet, std::move(prec), std::move(weights));
    }
    if (kind == "lex") {
        if (series)
            throw ParseError("order kind 'lex' rejected: series computations require an "
                             "admissible N-order (every bounded-above set finite), and pure "
                             "lex is neither admissible nor an N-order");
        throw ParseError("order kind 'lex' is not admissible and cannot drive rewriting");
    }
    throw ParseError("unsupported order kind '" + kind + "': only deg-lex and theta-lex are "
                     "admissible N-orders here; series computations require an N-order "
                     "(every bounded-above set finite)");
}

}  // namespace

Json order_to_json(const OrderSpec& order) {
    Json j;
    j["kind"] = to_string(order.kind());
    Json prec = Json::array();
    for (std::size_t i : order.precedence()) prec.push_back(order.alphabet()->letter(i).name);
    j["precedence"] = prec;
    return j;
}

PresentationFile parse_presentation(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("presentation file must be a JSON object");

    Field field = Field::rationals();
    if (j.contains("field")) {
        const Json& f = j.at("field");
        if (f.is_string() && f.get<std::string>() == "rational")
            field = Field::rationals();
        else if (f.is_object() && f.contains("prime"))
            field = Field::prime(f.at("prime").get<std::uint64_t>());
        else
            throw ParseError("field must be \"rational\" or {\"prime\": p}");
    }

    if (!j.contains("generators") || !j.at("generators").is_array())
        throw ParseError("missing 'generators' array");
    std::vector<Letter> letters;
    for (const auto& g : j.at("generators")) {
        if (!g.is_object() || !g.contains("name"))
            throw ParseError("each generator needs a 'name'");
        Letter l;
        l.name = g.at("name").get<std::string>();
        l.weight = g.value("weight", 1u);
        letters.push_back(std::move(l));
    }
    Context ctx{std::make_shared<Alphabet>(std::move(letters)), std::move(field)};

    if (!j.contains("orders") || !j.at("orders").is_object() ||
        !j.at("orders").contains("classical") || !j.at("orders").contains("series"))
        throw ParseError("missing 'orders' with 'classical' and 'series'");
    OrderSpec omax = order_from_json(j.at("orders").at("classical"), ctx.alphabet, false);
    OrderSpec omin = order_from_json(j.at("orders").at("series"), ctx.alphabet, true);

    std::vector<Poly> rels;
    if (j.contains("relations")) {
        for (const auto& r : j.at("relations")) {
            Poly p = parse_poly_expr(r.get<std::string>(), ctx);
            if (p.is_zero()) throw ParseError("relation '" + r.get<std::string>() + "' is zero");
            if (p.augmentation() != 0)
                throw ParseError("relation '" + r.get<std::string>() +
                                 "' has a nonzero constant term");
            rels.push_back(std::move(p));
        }
    }

    Json meta = j.value("meta", Json::object());
    std::string name = meta.is_object() ? meta.value("name", std::string{}) : std::string{};
    return PresentationFile{
        Presentation(std::move(ctx), std::move(rels), std::move(omax), std::move(omin), name),
        std::move(meta)};
}

std::string print_presentation(const PresentationFile& f) {
    const Presentation& p = f.presentation;
    Json j;
    if (p.ctx.field.is_rational())
        j["field"] = "rational";
    else
        j["field"] = Json{{"prime", p.ctx.field.characteristic()}};
    Json gens = Json::array();
    for (std::size_t i = 0; i < p.ctx.alphabet->size(); ++i) {
        const Letter& l = p.ctx.alphabet->letter(i);
        gens.push_back(Json{{"name", l.name}, {"weight", l.weight}});
    }
    j["generators"] = gens;
    Json rels = Json::array();
    for (const auto& r : p.relations) rels.push_back(print_poly_expr(r));
    j["relations"] = rels;
    j["orders"] = Json{{"classical", order_to_json(p.order_max)},
                       {"series", order_to_json(p.order_min)}};
    j["meta"] = f.meta;
    return j.dump(2) + "\n";
}

}  // namespace gsb
