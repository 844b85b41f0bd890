#include "polardrg/polar_space.hpp"

#include "polardrg/error.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <unordered_set>

namespace polardrg {

Subspace Subspace::span(MatrixGF rows, const Field& f)
{
    rref(rows, f);
    Subspace s;
    s.basis_ = std::move(rows);
    return s;
}

Subspace Subspace::zero(int n)
{
    Subspace s;
    s.basis_ = MatrixGF(0, n);
    return s;
}

Subspace Subspace::full(int n)
{
    Subspace s;
    s.basis_ = MatrixGF::identity(n);
    return s;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b)
{
    if (auto c = a.basis_.cols <=> b.basis_.cols; c != 0)
        return c;
    if (auto c = a.basis_.rows <=> b.basis_.rows; c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.basis_.entries.begin(), a.basis_.entries.end(),
                                                  b.basis_.entries.begin(), b.basis_.entries.end());
}

std::size_t SubspaceHash::operator()(const Subspace& s) const noexcept
{
    // FNV-1a over the canonical entries.
    std::uint64_t h = 14695981039346656037ULL ^ static_cast<std::uint64_t>(s.rank());
    for (Elem e : s.basis().entries) {
        h ^= e;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

HermitianSpace::HermitianSpace(int n, FieldPtr field)
    : n_(n)
    , field_(std::move(field))
    , gram_(MatrixGF::identity(n))
{
    if (n < 1)
        throw Error(ErrorCode::InvalidParams, "ambient dimension must be positive");
}

HermitianSpace::HermitianSpace(int n, FieldPtr field, MatrixGF gram)
    : n_(n)
    , field_(std::move(field))
    , gram_(std::move(gram))
{
    if (n < 1)
        throw Error(ErrorCode::InvalidParams, "ambient dimension must be positive");
    if (gram_.rows != n || gram_.cols != n)
        throw Error(ErrorCode::DimensionMismatch, "Gram matrix must be n x n");
    if (dagger(gram_, *field_) != gram_)
        throw Error(ErrorCode::InvalidParams, "Gram matrix is not Hermitian");
    if (rank(gram_, *field_) != n)
        throw Error(ErrorCode::InvalidParams, "Gram matrix is singular");
    identity_gram_ = gram_ == MatrixGF::identity(n);
}

Elem hermitian_inner(std::span<const Elem> x, std::span<const Elem> y, const HermitianSpace& space)
{
    const int n = space.n();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw Error(ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
    const Field& f = space.field();
    Elem acc = 0;
    if (space.identity_gram()) {
        for (int i = 0; i < n; ++i)
            if (x[i] != 0 && y[i] != 0)
                acc = f.add(acc, f.mul(f.conj(x[i]), y[i]));
        return acc;
    }
    const MatrixGF& g = space.gram();
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0)
            continue;
        Elem row = 0;
        for (int j = 0; j < n; ++j)
            row = f.add(row, f.mul(g(i, j), y[j]));
        acc = f.add(acc, f.mul(f.conj(x[i]), row));
    }
    return acc;
}

Subspace perp(const Subspace& u, const HermitianSpace& space)
{
    if (u.ambient_n() != space.n())
        throw Error(ErrorCode::DimensionMismatch, "subspace lives in a different ambient space");
    const Field& f = space.field();
    // y ∈ U^perp iff conj(x)^T G y = 0 for each basis row x.
    MatrixGF lhs(u.rank(), space.n());
    for (int r = 0; r < u.rank(); ++r) {
        for (int j = 0; j < space.n(); ++j) {
            Elem acc = 0;
            for (int i = 0; i < space.n(); ++i)
                acc = f.add(acc, f.mul(f.conj(u.basis()(r, i)), space.gram()(i, j)));
            lhs(r, j) = acc;
        }
    }
    return Subspace::span(null_space(lhs, f), f);
}

bool is_totally_isotropic(const Subspace& u, const HermitianSpace& space)
{
    if (u.ambient_n() != space.n())
        throw Error(ErrorCode::DimensionMismatch, "subspace lives in a different ambient space");
    for (int i = 0; i < u.rank(); ++i)
        for (int j = i; j < u.rank(); ++j)
            if (hermitian_inner(u.basis().row(i), u.basis().row(j), space) != 0)
                return false;
    return true;
}

bool contains(const Subspace& big, const Subspace& small, const Field& f)
{
    if (big.ambient_n() != small.ambient_n())
        throw Error(ErrorCode::DimensionMismatch, "subspaces of different ambient spaces");
    if (small.rank() > big.rank())
        return false;
    return rank(stack(big.basis(), small.basis()), f) == big.rank();
}

bool incident(const Subspace& u, const Subspace& w, const Field& f)
{
    if (u.ambient_n() != w.ambient_n())
        throw Error(ErrorCode::DimensionMismatch, "subspaces of different ambient spaces");
    return rank(stack(u.basis(), w.basis()), f) == std::max(u.rank(), w.rank());
}

int intersection_rank(const Subspace& u, const Subspace& w, const Field& f)
{
    if (u.ambient_n() != w.ambient_n())
        throw Error(ErrorCode::DimensionMismatch, "subspaces of different ambient spaces");
    return u.rank() + w.rank() - rank(stack(u.basis(), w.basis()), f);
}

namespace {

/// Calls fn(v) for a representative v of every point of the row space of
/// `basis` (coefficient vectors with leading entry 1).
template <typename Fn>
void for_each_point(const MatrixGF& basis, const Field& f, Fn&& fn)
{
    const int m = basis.rows;
    const int n = basis.cols;
    const int s = f.size();
    std::vector<Elem> coeff(m, 0);
    std::vector<Elem> v(n, 0);
    for (int lead = 0; lead < m; ++lead) {
        std::fill(coeff.begin(), coeff.end(), 0);
        coeff[lead] = 1;
        for (;;) {
            std::fill(v.begin(), v.end(), 0);
            for (int i = lead; i < m; ++i) {
                if (coeff[i] == 0)
                    continue;
                for (int j = 0; j < n; ++j)
                    v[j] = f.add(v[j], f.mul(coeff[i], basis(i, j)));
            }
            fn(std::span<const Elem>(v));
            int pos = m - 1;
            while (pos > lead && coeff[pos] == s - 1) {
                coeff[pos] = 0;
                --pos;
            }
            if (pos == lead)
                break;
            ++coeff[pos];
        }
    }
}

} // namespace

std::vector<Subspace> isotropic_extensions(const Subspace& u, const HermitianSpace& space)
{
    const Field& f = space.field();
    const Subspace up = perp(u, space);

    // Complement of U inside U^perp; U + <w> is t.i. exactly when w is isotropic.
    MatrixGF acc = u.basis();
    MatrixGF complement(0, space.n());
    int current = u.rank();
    for (int r = 0; r < up.rank(); ++r) {
        MatrixGF row(1, space.n());
        std::copy(up.basis().row(r).begin(), up.basis().row(r).end(), row.entries.begin());
        MatrixGF trial = stack(acc, row);
        if (rank(trial, f) > current) {
            acc = std::move(trial);
            complement = stack(complement, row);
            ++current;
        }
    }

    std::vector<Subspace> out;
    for_each_point(complement, f, [&](std::span<const Elem> w) {
        if (hermitian_inner(w, w, space) != 0)
            return;
        MatrixGF rows = u.basis();
        rows.entries.insert(rows.entries.end(), w.begin(), w.end());
        ++rows.rows;
        out.push_back(Subspace::span(std::move(rows), f));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> subspaces_of(const Subspace& s, int r, const Field& f)
{
    const int m = s.rank();
    if (r < 0 || r > m)
        throw Error(ErrorCode::RankOutOfRange, "requested rank exceeds subspace rank");
    std::vector<Subspace> out;
    if (r == 0) {
        out.push_back(Subspace::zero(s.ambient_n()));
        return out;
    }
    const int fs = f.size();

    // Walk all r x m RREF coefficient matrices: choose pivots, then free entries.
    std::vector<int> pivots(r);
    for (int i = 0; i < r; ++i)
        pivots[i] = i;
    for (;;) {
        std::vector<std::pair<int, int>> free_slots;
        for (int i = 0; i < r; ++i)
            for (int c = pivots[i] + 1; c < m; ++c)
                if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                    free_slots.emplace_back(i, c);
        std::vector<Elem> vals(free_slots.size(), 0);
        for (;;) {
            MatrixGF coeff(r, m);
            for (int i = 0; i < r; ++i)
                coeff(i, pivots[i]) = 1;
            for (std::size_t k = 0; k < free_slots.size(); ++k)
                coeff(free_slots[k].first, free_slots[k].second) = vals[k];
            out.push_back(Subspace::span(multiply(coeff, s.basis(), f), f));

            std::size_t k = 0;
            while (k < vals.size() && vals[k] == fs - 1)
                vals[k++] = 0;
            if (k == vals.size())
                break;
            ++vals[k];
        }

        int i = r - 1;
        while (i >= 0 && pivots[i] == m - r + i)
            --i;
        if (i < 0)
            break;
        ++pivots[i];
        for (int j = i + 1; j < r; ++j)
            pivots[j] = pivots[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> extend_stratum(const HermitianSpace& space, std::span<const Subspace> lower, int workers)
{
    workers = std::max(1, workers);
    std::vector<std::unordered_set<Subspace, SubspaceHash>> partial(workers);
    auto run = [&](int w) {
        for (std::size_t i = w; i < lower.size(); i += workers)
            for (auto& ext : isotropic_extensions(lower[i], space))
                partial[w].insert(std::move(ext));
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
    }
    for (int w = 1; w < workers; ++w)
        partial[0].merge(partial[w]);
    std::vector<Subspace> out(partial[0].begin(), partial[0].end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subspace> enumerate_isotropic(const HermitianSpace& space, int rank_t, int workers)
{
    if (rank_t < 0 || rank_t > space.d_rank())
        throw Error(ErrorCode::RankOutOfRange,
                    "rank " + std::to_string(rank_t) + " outside [0, " + std::to_string(space.d_rank()) + "]");
    std::vector<Subspace> level{Subspace::zero(space.n())};
    for (int r = 0; r < rank_t; ++r)
        level = extend_stratum(space, level, workers);
    return level;
}

PolarGeometry::PolarGeometry(HermitianSpace space, int workers)
    : space_(std::move(space))
    , workers_(workers)
    , strata_(space_.d_rank() + 1)
    , index_(space_.d_rank() + 1)
    , through_(space_.d_rank() + 1)
{
}

bool PolarGeometry::has_stratum(int rank) const
{
    return rank >= 0 && rank <= d_rank() && strata_[rank].has_value();
}

void PolarGeometry::set_stratum(int rank, std::vector<Subspace> subspaces)
{
    if (rank < 0 || rank > d_rank())
        throw Error(ErrorCode::RankOutOfRange, "stratum rank out of range");
    strata_[rank] = std::move(subspaces);
    index_[rank].reset();
    through_[rank].reset();
}

const std::vector<Subspace>& PolarGeometry::stratum(int rank)
{
    if (rank < 0 || rank > d_rank())
        throw Error(ErrorCode::RankOutOfRange,
                    "rank " + std::to_string(rank) + " outside [0, " + std::to_string(d_rank()) + "]");
    if (!strata_[rank]) {
        if (rank == 0)
            strata_[0] = std::vector<Subspace>{Subspace::zero(space_.n())};
        else
            strata_[rank] = extend_stratum(space_, stratum(rank - 1), workers_);
    }
    return *strata_[rank];
}

std::optional<std::size_t> PolarGeometry::index_of(const Subspace& s)
{
    const int r = s.rank();
    if (r > d_rank() || s.ambient_n() != space_.n())
        return std::nullopt;
    if (!index_[r]) {
        const auto& list = stratum(r);
        auto& map = index_[r].emplace();
        map.reserve(list.size());
        for (std::size_t i = 0; i < list.size(); ++i)
            map.emplace(list[i], i);
    }
    auto it = index_[r]->find(s);
    if (it == index_[r]->end())
        return std::nullopt;
    return it->second;
}

const std::vector<std::vector<std::size_t>>& PolarGeometry::generators_through(int rank)
{
    if (rank < 0 || rank > d_rank())
        throw Error(ErrorCode::RankOutOfRange, "rank out of range");
    if (!through_[rank]) {
        const auto& units = stratum(rank);
        const auto& gens = generators();
        std::vector<std::vector<std::size_t>> lists(units.size());
        for (std::size_t g = 0; g < gens.size(); ++g)
            for (const auto& sub : subspaces_of(gens[g], rank, space_.field()))
                lists[*index_of(sub)].push_back(g);
        through_[rank] = std::move(lists);
    }
    return *through_[rank];
}

} // namespace polardrg
