#include "hopfforge/parser.hpp"

#include <cctype>

namespace hopfforge {

namespace {

class Parser {
  public:
    Parser(const std::string& text, const ExprEnv& env) : s_(text), env_(env) {}

    NcPoly parse() {
        NcPoly r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("parse error at position " + std::to_string(pos_) + ": " + msg + " in \"" +
                    s_ + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    NcPoly expr() {
        NcPoly acc = term();
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    NcPoly term() {
        bool negate = false;
        while (eat('-')) negate = !negate;
        NcPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return negate ? -acc : acc;
    }

    NcPoly factor() {
        NcPoly base = atom();
        if (eat('^')) {
            long e = integer();
            if (e < 0) fail("negative exponent");
            base = base.pow(e);
        }
        return base;
    }

    long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    NcPoly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NcPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return NcPoly::scalar(env_.F, env_.F->from_int(integer()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (auto it = env_.scalars.find(name); it != env_.scalars.end())
                return NcPoly::scalar(env_.F, it->second);
            if (env_.gens) {
                for (int i = 0; i < env_.gens->arity(); ++i)
                    if (env_.gens->names[i] == name) return NcPoly::generator(env_.F, i);
            }
            fail("unknown identifier '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    const ExprEnv& env_;
    size_t pos_ = 0;
};

// Splits on the top-level tensor separator "(#)".
std::vector<std::string> split_tensor(const std::string& text) {
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 0; i + 2 < text.size(); ++i) {
        if (text[i] == '(' && text[i + 1] == '#' && text[i + 2] == ')') {
            parts.push_back(text.substr(start, i - start));
            start = i + 3;
            i += 2;
        }
    }
    parts.push_back(text.substr(start));
    return parts;
}

}  // namespace

NcPoly parse_expr(const std::string& text, const ExprEnv& env) {
    return Parser(text, env).parse();
}

TensorPoly parse_tensor_expr(const std::string& text, const ExprEnv& env, int rank) {
    // Split into top-level +/- terms first, then each term on "(#)".
    TensorPoly out(env.F, rank);
    size_t depth = 0;
    std::vector<std::string> parts;
    std::vector<bool> signs;
    std::string cur;
    bool cur_neg = false;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '+' || c == '-') && !cur.empty() &&
            cur.find_first_not_of(" \t") != std::string::npos) {
            parts.push_back(cur);
            signs.push_back(cur_neg);
            cur.clear();
            cur_neg = (c == '-');
            continue;
        }
        if (depth == 0 && (c == '+' || c == '-') &&
            cur.find_first_not_of(" \t") == std::string::npos) {
            if (c == '-') cur_neg = !cur_neg;
            continue;
        }
        cur += c;
    }
    if (cur.find_first_not_of(" \t") != std::string::npos) {
        parts.push_back(cur);
        signs.push_back(cur_neg);
    }
    for (size_t t = 0; t < parts.size(); ++t) {
        auto factors = split_tensor(parts[t]);
        if (static_cast<int>(factors.size()) != rank)
            throw Error("tensor expression term has " + std::to_string(factors.size()) +
                        " factors, expected " + std::to_string(rank) + ": " + parts[t]);
        std::vector<NcPoly> polys;
        polys.reserve(factors.size());
        for (auto& f : factors) polys.push_back(parse_expr(f, env));
        TensorPoly term = TensorPoly::tensor(polys);
        out += signs[t] ? term.scaled(env.F->neg(env.F->one())) : term;
    }
    return out;
}

Fq parse_scalar(const std::string& text, const ExprEnv& env) {
    ExprEnv scalar_env{env.F, nullptr, env.scalars};
    NcPoly p = parse_expr(text, scalar_env);
    if (p.is_zero()) return env.F->zero();
    if (p.term_count() != 1 || !p.terms().begin()->first.empty())
        throw Error("expected scalar expression: " + text);
    return p.terms().begin()->second;
}

}  // namespace hopfforge
