#include "ffgeom/parse.hpp"

#include <cctype>

namespace ffgeom {

namespace {

class Parser {
public:
    Parser(const FieldSpec& field, std::string_view text) : f_(field), s_(text) {}

    RatFunc run() {
        RatFunc v = sum();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError(pos_, "end of input");
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc sum() {
        RatFunc v = prod();
        for (;;) {
            if (accept('+'))
                v = v + prod();
            else if (accept('-'))
                v = v - prod();
            else
                return v;
        }
    }

    RatFunc prod() {
        RatFunc v = atom();
        for (;;) {
            if (accept('*')) {
                v = v * atom();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                RatFunc d = atom();
                if (d.is_zero()) {
                    (void)at;
                    throw ZeroDenominator();
                }
                v = v / d;
            } else {
                return v;
            }
        }
    }

    RatFunc atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError(pos_, "coefficient, 'x' or '('");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            RatFunc v = RatFunc::constant(f_.p(), integer() % f_.p());
            // coeff '*'? mono  (implicit product, e.g. "2x^3")
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == 'x') v = v * mono();
            return v;
        }
        if (c == 'x') return mono();
        if (c == '(') {
            ++pos_;
            RatFunc v = sum();
            if (!accept(')')) throw ParseError(pos_, "')'");
            return v;
        }
        throw ParseError(pos_, "coefficient, 'x' or '('");
    }

    RatFunc mono() {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != 'x') throw ParseError(pos_, "'x'");
        ++pos_;
        int e = 1;
        if (accept('^')) e = static_cast<int>(integer());
        return RatFunc(Poly::x_power(f_.p(), e));
    }

    std::uint64_t integer() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError(pos_, "integer");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            if (v > (1ull << 40)) throw ParseError(pos_, "smaller integer");
            ++pos_;
        }
        return v;
    }

    const FieldSpec& f_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string term_str(std::uint32_t c, int e) {
    std::string s;
    if (e == 0) return std::to_string(c);
    if (c != 1) s = std::to_string(c);
    s += 'x';
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

bool single_term(const Poly& f) {
    std::size_t n = 0;
    for (auto c : f.coeffs())
        if (c != 0) ++n;
    return n <= 1;
}

}  // namespace

RatFunc parse_ratfunc(const FieldSpec& field, std::string_view text) {
    return Parser(field, text).run();
}

std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int e = f.degree_nonzero(); e >= 0; --e) {
        const std::uint32_t c = f.coeff(e);
        if (c == 0) continue;
        if (!s.empty()) s += '+';
        s += term_str(c, e);
    }
    return s;
}

std::string format_ratfunc(const RatFunc& f) {
    if (f.is_zero()) return "0";
    if (f.is_polynomial()) return format_poly(f.num());
    auto wrap = [](const Poly& g) {
        std::string s = format_poly(g);
        return single_term(g) ? s : "(" + s + ")";
    };
    return wrap(f.num()) + "/" + wrap(f.den());
}

std::string format_tail(const LaurentTail& t) {
    if (t.is_zero()) return "0";
    std::string s;
    for (int j = 1; j <= t.denom(); ++j) {
        const std::uint32_t c = t.coeff(j);
        if (c == 0) continue;
        if (!s.empty()) s += '+';
        s += std::to_string(c) + "/x";
        if (j != 1) s += "^" + std::to_string(j);
    }
    return s;
}

}  // namespace ffgeom
