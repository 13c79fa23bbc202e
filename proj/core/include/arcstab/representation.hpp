#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arcstab {

/// Default cap on the dimension of any representation built by the library.
inline constexpr std::size_t kDefaultDimensionCap = 1'000'000;

/// Symbolic representation of GL(m): a tree over the constructors
/// std(m), triv, mat(m), sym(k, R), dual(R), R (x) S and R (+) S.
///
/// Canonical bases:
///  - std(m): e1, ..., em
///  - triv: the single vector "1"
///  - mat(m): E1_1, E1_2, ..., Em_m (row-major)
///  - sym(k, R): monomials of degree k in the basis of R, exponent vectors in
///    descending lexicographic order (e1^2, e1*e2, e2^2 for sym(2, std(2)))
///  - R (x) S: pairs in row-major order
///  - R (+) S: the basis of R followed by the basis of S
///  - dual(R): the dual basis, in the order of R
class RepExpr {
public:
    enum class Kind { standard, trivial, matrix, sym, dual, tensor, direct_sum };

    static RepExpr std_rep(std::size_t m);
    static RepExpr triv();
    static RepExpr mat(std::size_t m);
    static RepExpr sym(std::size_t k, const RepExpr& child);
    static RepExpr dual(const RepExpr& child);
    /// Throws DimensionMismatch if the ambient dimensions differ.
    static RepExpr tensor(const RepExpr& left, const RepExpr& right);
    static RepExpr direct_sum(const RepExpr& left, const RepExpr& right);

    Kind kind() const;
    /// Ambient group dimension m; nullopt for a tree built only from triv.
    std::optional<std::size_t> ambient() const;
    /// m for std/mat, k for sym.
    std::size_t parameter() const;
    /// Child of sym/dual, left operand of tensor/direct sum.
    const RepExpr& child() const;
    const RepExpr& left() const { return child(); }
    const RepExpr& right() const;

    /// Dimension of the induced space. Throws DimensionOverflow above `cap`.
    std::size_t dim(std::size_t cap = kDefaultDimensionCap) const;

    /// Names of the canonical basis vectors, in order.
    std::vector<std::string> basis_names() const;

    /// Index of a basis vector given its name or an index key "#i" (0-based).
    /// Throws InvalidArgument for an unknown name.
    std::size_t basis_index(std::string_view name) const;

    /// Canonical text in the representation grammar.
    std::string to_string() const;

    friend bool operator==(const RepExpr& a, const RepExpr& b);

private:
    struct Node;
    explicit RepExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Exponent vectors of degree-k monomials in n variables, in descending
/// lexicographic order. This is the basis order of sym(k, R) with dim R = n.
std::vector<std::vector<std::uint32_t>> sym_exponents(std::size_t n, std::size_t k);

/// Index of an exponent vector within sym_exponents(n, k).
std::size_t sym_index(const std::vector<std::uint32_t>& exponents);

/// Binomial coefficient, throwing DimensionOverflow above `cap`.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap);

/// Parse the representation grammar:
///   expr   := summand ('(+)' summand)*
///   summand:= factor ('(x)' factor)*
///   factor := 'std(' m ')' | 'triv' | 'mat(' m ')' | 'sym(' k ',' expr ')'
///           | 'dual(' expr ')' | '(' expr ')'
/// Throws ParseError with a 1-based column.
RepExpr parse_rep(std::string_view text);

} // namespace arcstab
