#include "hbn/eval.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "hbn/arith.hpp"
#include "hbn/complexity.hpp"
#include "hbn/core.hpp"
#include "hbn/errors.hpp"
#include "hbn/mul.hpp"
#include "hbn/text.hpp"
#include "internal.hpp"

namespace hbn {

namespace {

const Num& as_num(const Value& v, std::size_t pos) {
    if (const Num* n = std::get_if<Num>(&v)) return *n;
    throw ParseError("comparison result used as a number", pos);
}

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Value parse() {
        Value v = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("trailing input after expression", pos_);
        return v;
    }

private:
    Value expr() {
        std::size_t at = pos_;
        Value acc = term();
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size()) return acc;
            char c = text_[pos_];
            if (c != '+' && c != '-') return acc;
            ++pos_;
            std::size_t rhs_at = pos_;
            Value rhs = term();
            if (c == '+')
                acc = add(as_num(acc, at), as_num(rhs, rhs_at));
            else
                acc = sub(as_num(acc, at), as_num(rhs, rhs_at));
        }
    }

    Value term() {
        std::size_t at = pos_;
        Value acc = atom();
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != '*') return acc;
            ++pos_;
            std::size_t rhs_at = pos_;
            Value rhs = atom();
            acc = mul(as_num(acc, at), as_num(rhs, rhs_at));
        }
    }

    Value atom() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of expression", pos_);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return literal();
        if (c == '(') {
            ++pos_;
            Value v = expr();
            expect(')');
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::string name = ident();
            skip_ws();
            bool is_call = pos_ < text_.size() && text_[pos_] == '(';
            if (name == "e" && !is_call) return Num{};
            if ((name == "v" || name == "w" || name == "e")) {
                // tree literal; re-parse from its first character
                pos_ = start;
                return parse_tree_at(text_, pos_);
            }
            if (!is_call)
                throw ParseError("unknown name '" + name + "'", start);
            return call(name, start);
        }
        throw ParseError("unexpected character in expression", pos_);
    }

    Value call(const std::string& name, std::size_t at) {
        expect('(');
        std::vector<Value> args;
        args.push_back(expr());
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] == ',') {
            ++pos_;
            args.push_back(expr());
            skip_ws();
        }
        expect(')');
        auto arg = [&](std::size_t i) -> const Num& {
            return as_num(args[i], at);
        };
        auto arity = [&](std::size_t n) {
            if (args.size() != n)
                throw ParseError("function '" + name + "' expects " +
                                     std::to_string(n) + " argument(s)",
                                 at);
        };
        if (name == "succ") { arity(1); return succ(arg(0)); }
        if (name == "pred") { arity(1); return pred(arg(0)); }
        if (name == "pow2") { arity(1); return exp2(arg(0)); }
        if (name == "shl") { arity(2); return left_shift(arg(0), arg(1)); }
        if (name == "double") { arity(1); return twice(arg(0)); }
        if (name == "half") { arity(1); return half(arg(0)); }
        if (name == "bitsize") { arity(1); return bitsize(arg(0)); }
        if (name == "tsize") { arity(1); return tsize(arg(0)); }
        if (name == "ilog2") { arity(1); return ilog2(arg(0)); }
        if (name == "best") { arity(1); return best_case(arg(0)); }
        if (name == "worst") { arity(1); return worst_case(arg(0)); }
        if (name == "cmp") { arity(2); return cmp(arg(0), arg(1)); }
        throw ParseError("unknown function '" + name + "'", at);
    }

    Value literal() {
        std::string digits;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        return from_natural(Natural(digits));
    }

    std::string ident() {
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
            name += text_[pos_++];
        return name;
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
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

std::string ordering_symbol(Ordering o) {
    switch (o) {
        case Ordering::lt: return "<";
        case Ordering::eq: return "=";
        case Ordering::gt: return ">";
    }
    return "?";
}

// Decimal when narrow enough to be readable, tree syntax otherwise.
std::string stat_field(const Num& x) {
    try {
        return to_natural(x, 256).str();
    } catch (const ResourceError&) {
        return render_tree(x);
    }
}

}  // namespace

Value eval_expression(std::string_view expr) {
    return ExprParser(expr).parse();
}

std::string format_value(const Value& v, Format f, const FormatOptions& opt) {
    if (const Ordering* o = std::get_if<Ordering>(&v))
        return ordering_symbol(*o);
    const Num& x = std::get<Num>(v);
    switch (f) {
        case Format::tree:
            return render_tree(x);
        case Format::decimal: {
            Num bits = bitsize(x);
            if (cmp(bits, from_natural(Natural(opt.decimal_bit_budget))) ==
                Ordering::gt)
                throw ResourceError(
                    "decimal output refused: bitsize " +
                    detail::describe(bits) + " exceeds the budget of " +
                    std::to_string(opt.decimal_bit_budget) + " bits");
            return to_natural(x, opt.decimal_bit_budget).str();
        }
        case Format::stats: {
            std::ostringstream out;
            out << "bitsize: " << stat_field(bitsize(x)) << "\n";
            out << "tsize: " << stat_field(tsize(x)) << "\n";
            out << "parity: "
                << (x.is_zero() ? "zero" : x.is_odd() ? "odd" : "even")
                << "\n";
            out << "blocks: " << stat_field(block_count(x)) << "\n";
            Num leading = x.is_zero() ? Num{} : succ(x.counter());
            out << "leading block length: " << stat_field(leading);
            return out.str();
        }
    }
    throw Error("format_value: unreachable");
}

}  // namespace hbn
