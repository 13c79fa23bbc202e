#include "arcstab/rep_vector.hpp"

#include "arcstab/errors.hpp"
#include "arcstab/laurent_series.hpp"

namespace arcstab {

RepVector::RepVector(RepExpr rep, Coords coords) : rep_(std::move(rep)), dim_(rep_.dim())
{
    for (auto& [idx, c] : coords) {
        if (idx >= dim_) {
            throw DimensionMismatch("coordinate index " + std::to_string(idx) + " out of range for " +
                                    rep_.to_string());
        }
        if (!c.is_zero()) {
            coords_.emplace(idx, std::move(c));
        }
    }
}

RepVector RepVector::basis(const RepExpr& rep, std::size_t index)
{
    return RepVector(rep, {{index, GaussianRational(1)}});
}

RepVector RepVector::from_named(const RepExpr& rep, const std::vector<std::pair<std::string, std::string>>& entries)
{
    Coords c;
    for (const auto& [name, literal] : entries) {
        c[rep.basis_index(name)] += parse_gaussian_rational(literal);
    }
    return RepVector(rep, std::move(c));
}

std::vector<GaussianRational> RepVector::dense() const
{
    std::vector<GaussianRational> out(dim_);
    for (const auto& [i, c] : coords_) {
        out[i] = c;
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> RepVector::named() const
{
    const auto names = rep_.basis_names();
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [i, c] : coords_) {
        out.emplace_back(names[i], c.to_string());
    }
    return out;
}

RepVector tensor(const RepVector& v, const RepVector& w)
{
    const RepExpr rep = RepExpr::tensor(v.rep(), w.rep());
    const std::size_t dw = w.dim();
    RepVector::Coords c;
    for (const auto& [i, a] : v.coords()) {
        for (const auto& [j, b] : w.coords()) {
            c.emplace(i * dw + j, a * b);
        }
    }
    return RepVector(rep, std::move(c));
}

RepVector tensor_power(const RepVector& v, std::size_t k, std::size_t cap)
{
    if (k == 0) {
        throw InvalidArgument("tensor power needs k >= 1");
    }
    RepVector out = v;
    for (std::size_t i = 1; i < k; ++i) {
        RepExpr::tensor(out.rep(), v.rep()).dim(cap);
        out = tensor(out, v);
    }
    return out;
}

RepVector identity_element(std::size_t m)
{
    RepVector::Coords c;
    for (std::size_t i = 0; i < m; ++i) {
        c.emplace(i * m + i, GaussianRational(1));
    }
    return RepVector(RepExpr::mat(m), std::move(c));
}

RepVector transform(const RepVector& v, const std::vector<GaussianRational>& c)
{
    const std::size_t n = v.dim();
    if (c.size() != n * n) {
        throw DimensionMismatch("change of coordinates has the wrong size");
    }
    RepVector::Coords out;
    for (std::size_t i = 0; i < n; ++i) {
        GaussianRational acc;
        for (const auto& [j, x] : v.coords()) {
            acc += c[i * n + j] * x;
        }
        if (!acc.is_zero()) {
            out.emplace(i, std::move(acc));
        }
    }
    return RepVector(v.rep(), std::move(out));
}

} // namespace arcstab
