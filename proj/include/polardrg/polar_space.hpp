#pragma once

#include "polardrg/field.hpp"
#include "polardrg/matrix.hpp"

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace polardrg {

/// A subspace of GF(q^2)^n held by its reduced row-echelon basis.
/// Equality of the basis matrices is equality of subspaces.
class Subspace {
public:
    Subspace() = default;

    /// Row span of `rows` (any generating set).
    static Subspace span(MatrixGF rows, const Field& f);
    static Subspace zero(int n);
    static Subspace full(int n);

    int ambient_n() const noexcept { return basis_.cols; }
    int rank() const noexcept { return basis_.rows; }
    /// Projective dimension, rank - 1.
    int dimension() const noexcept { return basis_.rows - 1; }
    const MatrixGF& basis() const noexcept { return basis_; }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

private:
    MatrixGF basis_;
};

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const noexcept;
};

/// The Hermitian polar space H(n-1, q^2) of the form x^dagger G y.
class HermitianSpace {
public:
    HermitianSpace(int n, FieldPtr field);
    /// Throws InvalidParams unless gram is Hermitian and invertible.
    HermitianSpace(int n, FieldPtr field, MatrixGF gram);

    int n() const noexcept { return n_; }
    int q() const noexcept { return field_->q(); }
    /// Vector rank of the generators, floor(n/2).
    int d_rank() const noexcept { return n_ / 2; }
    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    const MatrixGF& gram() const noexcept { return gram_; }
    bool identity_gram() const noexcept { return identity_gram_; }

private:
    int n_;
    FieldPtr field_;
    MatrixGF gram_;
    bool identity_gram_ = true;
};

Elem hermitian_inner(std::span<const Elem> x, std::span<const Elem> y, const HermitianSpace& space);
Subspace perp(const Subspace& u, const HermitianSpace& space);
bool is_totally_isotropic(const Subspace& u, const HermitianSpace& space);

/// U ⊆ W or W ⊆ U.
bool incident(const Subspace& u, const Subspace& w, const Field& f);
bool contains(const Subspace& big, const Subspace& small, const Field& f);
/// Vector rank of U ∩ W.
int intersection_rank(const Subspace& u, const Subspace& w, const Field& f);

/// All totally isotropic subspaces of rank rank(U)+1 containing the
/// totally isotropic subspace U, sorted.
std::vector<Subspace> isotropic_extensions(const Subspace& u, const HermitianSpace& space);

/// Every rank-r subspace of `s`, sorted.
std::vector<Subspace> subspaces_of(const Subspace& s, int r, const Field& f);

/// All totally isotropic subspaces of vector rank `rank_t`, sorted by basis.
/// rank_t == space.d_rank() gives the generators.
std::vector<Subspace> enumerate_isotropic(const HermitianSpace& space, int rank_t, int workers = 1);

/// One stratum up: all t.i. subspaces of rank r+1 from the full list of rank r.
std::vector<Subspace> extend_stratum(const HermitianSpace& space, std::span<const Subspace> lower, int workers = 1);

/// The enumerated geometry of one space, strata computed on demand.
/// Strata are indexed by vector rank 0..d_rank.
class PolarGeometry {
public:
    explicit PolarGeometry(HermitianSpace space, int workers = 1);

    const HermitianSpace& space() const noexcept { return space_; }
    int d_rank() const noexcept { return space_.d_rank(); }

    const std::vector<Subspace>& stratum(int rank);
    const std::vector<Subspace>& generators() { return stratum(d_rank()); }
    bool has_stratum(int rank) const;
    /// Installs a stratum loaded from elsewhere (cache). No validation.
    void set_stratum(int rank, std::vector<Subspace> subspaces);

    /// Position of s in its stratum.
    std::optional<std::size_t> index_of(const Subspace& s);

    /// For each subspace of the given rank, the sorted generator indices through it.
    const std::vector<std::vector<std::size_t>>& generators_through(int rank);

private:
    HermitianSpace space_;
    int workers_;
    std::vector<std::optional<std::vector<Subspace>>> strata_;
    std::vector<std::optional<std::unordered_map<Subspace, std::size_t, SubspaceHash>>> index_;
    std::vector<std::optional<std::vector<std::vector<std::size_t>>>> through_;
};

} // namespace polardrg
