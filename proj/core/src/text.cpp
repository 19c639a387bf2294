#include "hbn/text.hpp"

#include <cctype>
#include <vector>

#include "hbn/errors.hpp"

namespace hbn {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t pos = 0)
        : text_(text), pos_(pos) {}

    Num parse() {
        Num result = term();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("trailing input after term", pos_);
        return result;
    }

    Num parse_prefix(std::size_t& pos) {
        Num result = term();
        pos = pos_;
        return result;
    }

private:
    Num term() {
        skip_ws();
        char c = peek("term");
        if (c == 'e') {
            ++pos_;
            return Num{};
        }
        if (c != 'v' && c != 'w')
            throw ParseError("expected 'e', 'v' or 'w'", pos_);
        Kind kind = c == 'v' ? Kind::v : Kind::w;
        ++pos_;
        expect('(');
        Num counter = term();
        expect(',');
        expect('[');
        std::vector<Num> rest;
        skip_ws();
        if (peek("']' or term") != ']') {
            rest.push_back(term());
            skip_ws();
            while (peek("',' or ']'") == ',') {
                ++pos_;
                rest.push_back(term());
                skip_ws();
            }
        }
        expect(']');
        expect(')');
        return Num::node(kind, std::move(counter), std::move(rest));
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek(const char* what) const {
        if (pos_ >= text_.size())
            throw ParseError(std::string("unexpected end of input, expected ") +
                                 what,
                             pos_);
        return text_[pos_];
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void render(const Num& x, std::string& out) {
    if (x.is_zero()) {
        out += 'e';
        return;
    }
    out += x.is_odd() ? 'v' : 'w';
    out += '(';
    render(x.counter(), out);
    out += ",[";
    bool first = true;
    for (const Num* p = &x.tail(); p->is_positive(); p = &p->tail()) {
        if (!first) out += ',';
        first = false;
        render(p->counter(), out);
    }
    out += "])";
}

}  // namespace

Num parse_tree(std::string_view text) { return Parser(text).parse(); }

Num parse_tree_at(std::string_view text, std::size_t& pos) {
    return Parser(text, pos).parse_prefix(pos);
}

std::string render_tree(const Num& x) {
    std::string out;
    render(x, out);
    return out;
}

}  // namespace hbn
