#include <cctype>

#include "arcstab/errors.hpp"
#include "arcstab/laurent_series.hpp"

namespace arcstab {

namespace {

// Recursive-descent parser for series literals:
//   series := ['+'|'-'] term (('+'|'-') term)*
//   term   := 'O' '(' 'z' '^' int ')' | factor ('*' factor)*
//   factor := int ['/' int] | 'i' | 'z' ['^' exponent] | '(' series ')'
class SeriesParser {
public:
    explicit SeriesParser(std::string_view text) : text_(text) {}

    LaurentSeries parse_all()
    {
        LaurentSeries s = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        std::size_t end = pos_;
        while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) && end - pos_ < 12) {
            ++end;
        }
        std::string token(text_.substr(pos_, end - pos_));
        if (token.empty()) {
            token = "<end of input>";
        }
        throw ParseError("series literal: " + what, 1, pos_ + 1, token);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c)
    {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    mpz_class parse_natural()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a number");
        }
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    std::int64_t parse_exponent()
    {
        bool paren = accept('(');
        bool negative = false;
        if (accept('-')) {
            negative = true;
        } else {
            accept('+');
        }
        const std::size_t start = pos_;
        mpz_class n = parse_natural();
        if (!n.fits_slong_p()) {
            pos_ = start;
            fail("exponent out of range");
        }
        if (paren) {
            expect(')');
        }
        const auto v = static_cast<std::int64_t>(n.get_si());
        return negative ? -v : v;
    }

    LaurentSeries parse_sum()
    {
        LaurentSeries acc;
        bool negative = false;
        if (accept('-')) {
            negative = true;
        } else {
            accept('+');
        }
        LaurentSeries t = parse_term();
        acc += negative ? -t : t;
        while (true) {
            if (accept('+')) {
                acc += parse_term();
            } else if (accept('-')) {
                acc -= parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    LaurentSeries parse_term()
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == 'O') {
            ++pos_;
            expect('(');
            skip_ws();
            if (!accept('z')) {
                fail("expected 'z' in O(z^n)");
            }
            std::int64_t n = 1;
            if (accept('^')) {
                n = parse_exponent();
            }
            expect(')');
            return LaurentSeries::big_o(n);
        }
        LaurentSeries t = parse_factor();
        while (accept('*')) {
            t *= parse_factor();
        }
        return t;
    }

    LaurentSeries parse_factor()
    {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("expected a factor");
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = parse_natural();
            mpz_class den = 1;
            if (accept('/')) {
                const std::size_t at = pos_;
                den = parse_natural();
                if (den == 0) {
                    pos_ = at;
                    fail("zero denominator");
                }
            }
            Rational q(num, den);
            q.canonicalize();
            return LaurentSeries::constant(GaussianRational(q));
        }
        if (c == 'i') {
            ++pos_;
            return LaurentSeries::constant(GaussianRational::i());
        }
        if (c == 'z') {
            ++pos_;
            std::int64_t e = 1;
            if (accept('^')) {
                e = parse_exponent();
            }
            return LaurentSeries::monomial(GaussianRational(1), e);
        }
        if (c == '(') {
            ++pos_;
            LaurentSeries inner = parse_sum();
            expect(')');
            return inner;
        }
        fail("unexpected character");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

LaurentSeries parse_series(std::string_view text)
{
    return SeriesParser(text).parse_all();
}

GaussianRational parse_gaussian_rational(std::string_view text)
{
    const LaurentSeries s = parse_series(text);
    if (s.is_exact_zero()) {
        return {};
    }
    if (!s.is_exact() || s.lead() != 0 || s.coeffs().size() != 1) {
        throw ParseError("expected a Gaussian rational constant", 1, 1, std::string(text));
    }
    return s.coeffs()[0];
}

} // namespace arcstab
