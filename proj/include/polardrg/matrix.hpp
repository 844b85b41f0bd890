#pragma once

#include "polardrg/field.hpp"

#include <span>
#include <vector>

namespace polardrg {

/// Dense row-major matrix of field element indices.
struct MatrixGF {
    int rows = 0;
    int cols = 0;
    std::vector<Elem> entries;

    MatrixGF() = default;
    MatrixGF(int r, int c)
        : rows(r)
        , cols(c)
        , entries(static_cast<std::size_t>(r) * c, 0)
    {
    }

    static MatrixGF identity(int n);

    Elem& operator()(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    Elem operator()(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

    std::span<Elem> row(int r) { return {entries.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)}; }
    std::span<const Elem> row(int r) const
    {
        return {entries.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)};
    }

    friend bool operator==(const MatrixGF&, const MatrixGF&) = default;
};

/// Entrywise x -> x^q followed by transpose.
MatrixGF dagger(const MatrixGF& m, const Field& f);
MatrixGF multiply(const MatrixGF& a, const MatrixGF& b, const Field& f);
MatrixGF stack(const MatrixGF& top, const MatrixGF& bottom);

/// Reduced row-echelon form in place; zero rows are removed. Returns the rank.
int rref(MatrixGF& m, const Field& f);
int rank(MatrixGF m, const Field& f);

/// Right kernel {y : a y = 0} as RREF basis rows.
MatrixGF null_space(const MatrixGF& a, const Field& f);

} // namespace polardrg
