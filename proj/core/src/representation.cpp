#include "arcstab/representation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "arcstab/errors.hpp"

namespace arcstab {

struct RepExpr::Node {
    Kind kind;
    std::size_t param = 0;
    std::optional<std::size_t> ambient;
    std::optional<RepExpr> a;
    std::optional<RepExpr> b;
};

namespace {

std::optional<std::size_t> merge_ambient(const std::optional<std::size_t>& x, const std::optional<std::size_t>& y)
{
    if (x && y && *x != *y) {
        throw DimensionMismatch("representations over GL(" + std::to_string(*x) + ") and GL(" +
                                std::to_string(*y) + ") cannot be combined");
    }
    return x ? x : y;
}

std::size_t mul_capped(std::size_t a, std::size_t b, std::size_t cap)
{
    if (a != 0 && b > cap / a) {
        throw DimensionOverflow("representation dimension exceeds the cap " + std::to_string(cap));
    }
    const std::size_t r = a * b;
    if (r > cap) {
        throw DimensionOverflow("representation dimension exceeds the cap " + std::to_string(cap));
    }
    return r;
}

bool plain_name(const std::string& s)
{
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
            return false;
        }
    }
    return !s.empty();
}

std::string wrap(const std::string& s)
{
    return plain_name(s) ? s : "(" + s + ")";
}

} // namespace

RepExpr RepExpr::std_rep(std::size_t m)
{
    if (m == 0) {
        throw InvalidArgument("std(m) needs m >= 1");
    }
    return RepExpr(std::make_shared<const Node>(Node{Kind::standard, m, m, {}, {}}));
}

RepExpr RepExpr::triv()
{
    return RepExpr(std::make_shared<const Node>(Node{Kind::trivial, 0, std::nullopt, {}, {}}));
}

RepExpr RepExpr::mat(std::size_t m)
{
    if (m == 0) {
        throw InvalidArgument("mat(m) needs m >= 1");
    }
    return RepExpr(std::make_shared<const Node>(Node{Kind::matrix, m, m, {}, {}}));
}

RepExpr RepExpr::sym(std::size_t k, const RepExpr& child)
{
    return RepExpr(std::make_shared<const Node>(Node{Kind::sym, k, child.ambient(), child, {}}));
}

RepExpr RepExpr::dual(const RepExpr& child)
{
    return RepExpr(std::make_shared<const Node>(Node{Kind::dual, 0, child.ambient(), child, {}}));
}

RepExpr RepExpr::tensor(const RepExpr& left, const RepExpr& right)
{
    auto amb = merge_ambient(left.ambient(), right.ambient());
    return RepExpr(std::make_shared<const Node>(Node{Kind::tensor, 0, amb, left, right}));
}

RepExpr RepExpr::direct_sum(const RepExpr& left, const RepExpr& right)
{
    auto amb = merge_ambient(left.ambient(), right.ambient());
    return RepExpr(std::make_shared<const Node>(Node{Kind::direct_sum, 0, amb, left, right}));
}

RepExpr::Kind RepExpr::kind() const
{
    return node_->kind;
}

std::optional<std::size_t> RepExpr::ambient() const
{
    return node_->ambient;
}

std::size_t RepExpr::parameter() const
{
    return node_->param;
}

const RepExpr& RepExpr::child() const
{
    if (!node_->a) {
        throw InvalidArgument("representation node has no operand");
    }
    return *node_->a;
}

const RepExpr& RepExpr::right() const
{
    if (!node_->b) {
        throw InvalidArgument("representation node has no right operand");
    }
    return *node_->b;
}

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    // Multiplicative formula; every prefix product is itself a binomial.
    __extension__ using Wide = unsigned __int128;
    Wide r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) {
            throw DimensionOverflow("representation dimension exceeds the cap " + std::to_string(cap));
        }
    }
    return static_cast<std::size_t>(r);
}

std::size_t RepExpr::dim(std::size_t cap) const
{
    std::size_t d = 0;
    switch (kind()) {
    case Kind::standard:
        d = parameter();
        break;
    case Kind::trivial:
        d = 1;
        break;
    case Kind::matrix:
        d = mul_capped(parameter(), parameter(), cap);
        break;
    case Kind::sym: {
        const std::size_t n = child().dim(cap);
        d = n == 0 ? (parameter() == 0 ? 1 : 0) : binomial_capped(n + parameter() - 1, parameter(), cap);
        break;
    }
    case Kind::dual:
        d = child().dim(cap);
        break;
    case Kind::tensor:
        d = mul_capped(left().dim(cap), right().dim(cap), cap);
        break;
    case Kind::direct_sum:
        d = left().dim(cap) + right().dim(cap);
        break;
    }
    if (d > cap) {
        throw DimensionOverflow("representation dimension " + std::to_string(d) + " exceeds the cap " +
                                std::to_string(cap));
    }
    return d;
}

std::vector<std::vector<std::uint32_t>> sym_exponents(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::uint32_t>> out;
    if (n == 0) {
        if (k == 0) {
            out.emplace_back();
        }
        return out;
    }
    std::vector<std::uint32_t> cur(n, 0);
    // Recursive fill: position p takes values from the remaining degree down.
    auto rec = [&](auto&& self, std::size_t p, std::uint32_t remaining) -> void {
        if (p + 1 == n) {
            cur[p] = remaining;
            out.push_back(cur);
            return;
        }
        for (std::uint32_t v = remaining + 1; v-- > 0;) {
            cur[p] = v;
            self(self, p + 1, remaining - v);
        }
    };
    rec(rec, 0, static_cast<std::uint32_t>(k));
    return out;
}

std::size_t sym_index(const std::vector<std::uint32_t>& exponents)
{
    const std::size_t n = exponents.size();
    std::size_t r = std::accumulate(exponents.begin(), exponents.end(), std::size_t{0});
    std::size_t idx = 0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        const std::size_t vars = n - p - 1;
        for (std::size_t v = exponents[p] + 1; v <= r; ++v) {
            idx += binomial_capped(r - v + vars - 1, vars - 1, std::numeric_limits<std::size_t>::max());
        }
        r -= exponents[p];
    }
    return idx;
}

std::vector<std::string> RepExpr::basis_names() const
{
    std::vector<std::string> out;
    switch (kind()) {
    case Kind::standard:
        for (std::size_t i = 1; i <= parameter(); ++i) {
            out.push_back("e" + std::to_string(i));
        }
        break;
    case Kind::trivial:
        out.emplace_back("1");
        break;
    case Kind::matrix:
        for (std::size_t i = 1; i <= parameter(); ++i) {
            for (std::size_t j = 1; j <= parameter(); ++j) {
                out.push_back("E" + std::to_string(i) + "_" + std::to_string(j));
            }
        }
        break;
    case Kind::sym: {
        const auto names = child().basis_names();
        for (const auto& alpha : sym_exponents(names.size(), parameter())) {
            std::string s;
            for (std::size_t i = 0; i < alpha.size(); ++i) {
                if (alpha[i] == 0) {
                    continue;
                }
                if (!s.empty()) {
                    s += "*";
                }
                s += wrap(names[i]);
                if (alpha[i] > 1) {
                    s += "^" + std::to_string(alpha[i]);
                }
            }
            out.push_back(s.empty() ? "1" : s);
        }
        break;
    }
    case Kind::dual:
        for (const auto& n : child().basis_names()) {
            out.push_back("dual(" + n + ")");
        }
        break;
    case Kind::tensor: {
        const auto l = left().basis_names();
        const auto r = right().basis_names();
        for (const auto& a : l) {
            for (const auto& b : r) {
                out.push_back(wrap(a) + "|" + wrap(b));
            }
        }
        break;
    }
    case Kind::direct_sum:
        for (const auto& a : left().basis_names()) {
            out.push_back("L:" + a);
        }
        for (const auto& b : right().basis_names()) {
            out.push_back("R:" + b);
        }
        break;
    }
    return out;
}

std::size_t RepExpr::basis_index(std::string_view name) const
{
    const std::size_t d = dim();
    if (!name.empty() && name.front() == '#') {
        std::size_t idx = 0;
        const std::string digits(name.substr(1));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw InvalidArgument("malformed basis index key '" + std::string(name) + "'");
        }
        idx = std::stoul(digits);
        if (idx >= d) {
            throw InvalidArgument("basis index " + digits + " out of range for dimension " + std::to_string(d));
        }
        return idx;
    }
    std::string key;
    for (char c : name) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            key += c;
        }
    }
    const auto names = basis_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == key) {
            return i;
        }
    }
    throw InvalidArgument("unknown basis vector '" + std::string(name) + "' in " + to_string());
}

std::string RepExpr::to_string() const
{
    switch (kind()) {
    case Kind::standard:
        return "std(" + std::to_string(parameter()) + ")";
    case Kind::trivial:
        return "triv";
    case Kind::matrix:
        return "mat(" + std::to_string(parameter()) + ")";
    case Kind::sym:
        return "sym(" + std::to_string(parameter()) + "," + child().to_string() + ")";
    case Kind::dual:
        return "dual(" + child().to_string() + ")";
    case Kind::tensor: {
        auto side = [](const RepExpr& r, bool is_right) {
            const bool paren = r.kind() == Kind::direct_sum || (is_right && r.kind() == Kind::tensor);
            return paren ? "(" + r.to_string() + ")" : r.to_string();
        };
        return side(left(), false) + " (x) " + side(right(), true);
    }
    case Kind::direct_sum: {
        const std::string r = right().kind() == Kind::direct_sum ? "(" + right().to_string() + ")" : right().to_string();
        return left().to_string() + " (+) " + r;
    }
    }
    return {};
}

bool operator==(const RepExpr& a, const RepExpr& b)
{
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.kind() != b.kind() || a.parameter() != b.parameter() || a.ambient() != b.ambient()) {
        return false;
    }
    if (a.node_->a.has_value() != b.node_->a.has_value() || a.node_->b.has_value() != b.node_->b.has_value()) {
        return false;
    }
    if (a.node_->a && !(*a.node_->a == *b.node_->a)) {
        return false;
    }
    return !a.node_->b || *a.node_->b == *b.node_->b;
}

namespace {

class RepParser {
public:
    explicit RepParser(std::string_view text) : text_(text) {}

    RepExpr parse_all()
    {
        RepExpr r = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return r;
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
        throw ParseError("representation: " + what, 1, pos_ + 1, token);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(std::string_view tok)
    {
        skip_ws();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok)
    {
        if (!accept(tok)) {
            fail("expected '" + std::string(tok) + "'");
        }
    }

    std::size_t parse_natural()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_ || pos_ - start > 9) {
            pos_ = start;
            fail("expected a small natural number");
        }
        return std::stoul(std::string(text_.substr(start, pos_ - start)));
    }

    template <class F>
    RepExpr located(F&& build, std::size_t at)
    {
        try {
            return build();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            pos_ = at;
            fail(e.what());
        }
    }

    RepExpr parse_sum()
    {
        RepExpr acc = parse_product();
        while (true) {
            const std::size_t at = pos_;
            if (!accept("(+)")) {
                break;
            }
            RepExpr rhs = parse_product();
            acc = located([&] { return RepExpr::direct_sum(acc, rhs); }, at);
        }
        return acc;
    }

    RepExpr parse_product()
    {
        RepExpr acc = parse_factor();
        while (true) {
            const std::size_t at = pos_;
            if (!accept("(x)")) {
                break;
            }
            RepExpr rhs = parse_factor();
            acc = located([&] { return RepExpr::tensor(acc, rhs); }, at);
        }
        return acc;
    }

    RepExpr parse_factor()
    {
        skip_ws();
        const std::size_t at = pos_;
        if (accept("std")) {
            expect("(");
            const std::size_t m = parse_natural();
            expect(")");
            return located([&] { return RepExpr::std_rep(m); }, at);
        }
        if (accept("triv")) {
            return RepExpr::triv();
        }
        if (accept("mat")) {
            expect("(");
            const std::size_t m = parse_natural();
            expect(")");
            return located([&] { return RepExpr::mat(m); }, at);
        }
        if (accept("sym")) {
            expect("(");
            const std::size_t k = parse_natural();
            expect(",");
            RepExpr child = parse_sum();
            expect(")");
            return RepExpr::sym(k, child);
        }
        if (accept("dual")) {
            expect("(");
            RepExpr child = parse_sum();
            expect(")");
            return RepExpr::dual(child);
        }
        if (accept("(")) {
            RepExpr inner = parse_sum();
            expect(")");
            return inner;
        }
        fail("expected a representation");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

RepExpr parse_rep(std::string_view text)
{
    return RepParser(text).parse_all();
}

} // namespace arcstab
