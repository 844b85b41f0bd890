#include "polardrg/field.hpp"

#include "polardrg/error.hpp"

#include <algorithm>
#include <string>

namespace polardrg {

std::optional<PrimePower> prime_power(std::int64_t q)
{
    if (q < 2)
        return std::nullopt;
    std::int64_t p = 0;
    for (std::int64_t r = 2; r * r <= q; ++r) {
        if (q % r == 0) {
            p = r;
            break;
        }
    }
    if (p == 0)
        return PrimePower{static_cast<int>(q), 1};
    int e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1)
        return std::nullopt;
    return PrimePower{static_cast<int>(p), e};
}

namespace poly {

namespace {

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int inverse_mod(int a, int p)
{
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1)
            return x;
    return 0;
}

} // namespace

Poly mod(Poly a, const Poly& m, int p)
{
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    const int lead_inv = inverse_mod(m.back(), p);
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        const int factor = a.back() * lead_inv % p;
        for (int i = 0; i <= dm; ++i)
            a[shift + i] = ((a[shift + i] - factor * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly mul(const Poly& a, const Poly& b, int p)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

bool is_irreducible(const Poly& f, int p)
{
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1)
        return false;
    // Any factorization has a monic factor of degree <= deg/2.
    for (int dg = 1; dg <= deg / 2; ++dg) {
        std::int64_t count = 1;
        for (int i = 0; i < dg; ++i)
            count *= p;
        for (std::int64_t code = 0; code < count; ++code) {
            Poly g(dg + 1, 0);
            std::int64_t c = code;
            for (int i = 0; i < dg; ++i) {
                g[i] = static_cast<int>(c % p);
                c /= p;
            }
            g[dg] = 1;
            if (mod(f, g, p).empty())
                return false;
        }
    }
    return true;
}

Poly smallest_irreducible(int degree, int p)
{
    std::int64_t count = 1;
    for (int i = 0; i < degree; ++i)
        count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
        Poly f(degree + 1, 0);
        std::int64_t c = code;
        for (int i = 0; i < degree; ++i) {
            f[i] = static_cast<int>(c % p);
            c /= p;
        }
        f[degree] = 1;
        if (is_irreducible(f, p))
            return f;
    }
    throw Error(ErrorCode::InvalidParams, "no irreducible polynomial found");
}

} // namespace poly

namespace {

poly::Poly to_poly(int index, int p, int e)
{
    poly::Poly a(e, 0);
    for (int i = 0; i < e; ++i) {
        a[i] = index % p;
        index /= p;
    }
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    return a;
}

int to_index(const poly::Poly& a, int p)
{
    int index = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        index = index * p + *it;
    return index;
}

} // namespace

Elem Field::pow(Elem a, std::uint64_t k) const
{
    if (k == 0)
        return 1;
    if (a == 0)
        return 0;
    const std::uint64_t order = static_cast<std::uint64_t>(spec_.size - 1);
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (k % order)) % order];
}

FieldPtr make_field(std::int64_t q, int max_q)
{
    const auto pp = prime_power(q);
    if (!pp)
        throw Error(ErrorCode::NotAPrimePower, std::to_string(q) + " is not a prime power");
    if (q > max_q)
        throw Error(ErrorCode::TooLarge, "q = " + std::to_string(q) + " exceeds bound " + std::to_string(max_q));

    auto f = std::shared_ptr<Field>(new Field());
    const int p = pp->p;
    const int e = 2 * pp->e;
    const int size = static_cast<int>(q * q);
    f->q_ = static_cast<int>(q);
    f->spec_ = FieldSpec{p, e, size, poly::smallest_irreducible(e, p)};
    const auto& m = f->spec_.modulus;

    // Multiplicative structure through a primitive element.
    auto mulmod = [&](int a, int b) {
        return to_index(poly::mod(poly::mul(to_poly(a, p, e), to_poly(b, p, e), p), m, p), p);
    };
    const int order = size - 1;
    // size >= 4, so 0 and 1 are never primitive.
    for (int g = 2; g < size; ++g) {
        int x = g;
        int k = 1;
        while (x != 1) {
            x = mulmod(x, g);
            ++k;
        }
        if (k == order) {
            f->primitive_ = static_cast<Elem>(g);
            break;
        }
    }
    f->exp_.assign(order, 0);
    f->log_.assign(size, 0);
    {
        int x = 1;
        for (int k = 0; k < order; ++k) {
            f->exp_[k] = static_cast<Elem>(x);
            f->log_[x] = static_cast<Elem>(k);
            x = mulmod(x, f->primitive_);
        }
    }

    auto& t = f->tables_;
    const auto n2 = static_cast<std::size_t>(size) * size;
    t.add.assign(n2, 0);
    t.mul.assign(n2, 0);
    t.neg.assign(size, 0);
    t.inv.assign(size, 0);
    t.frobenius_q.assign(size, 0);

    std::vector<std::vector<int>> digits(size, std::vector<int>(e, 0));
    for (int a = 0; a < size; ++a) {
        int x = a;
        for (int i = 0; i < e; ++i) {
            digits[a][i] = x % p;
            x /= p;
        }
    }
    std::vector<int> place(e, 1);
    for (int i = 1; i < e; ++i)
        place[i] = place[i - 1] * p;

    for (int a = 0; a < size; ++a) {
        int n = 0;
        for (int i = 0; i < e; ++i)
            n += ((p - digits[a][i]) % p) * place[i];
        t.neg[a] = static_cast<Elem>(n);
        for (int b = 0; b < size; ++b) {
            int s = 0;
            for (int i = 0; i < e; ++i)
                s += ((digits[a][i] + digits[b][i]) % p) * place[i];
            t.add[static_cast<std::size_t>(a) * size + b] = static_cast<Elem>(s);
        }
    }
    for (int a = 1; a < size; ++a) {
        const int la = f->log_[a];
        t.inv[a] = f->exp_[(order - la) % order];
        t.frobenius_q[a] = f->exp_[static_cast<std::int64_t>(la) * q % order];
        for (int b = 1; b < size; ++b)
            t.mul[static_cast<std::size_t>(a) * size + b] = f->exp_[(la + f->log_[b]) % order];
    }

    f->subfield_pos_.assign(size, -1);
    for (int a = 0; a < size; ++a) {
        if (t.frobenius_q[a] == a) {
            f->subfield_pos_[a] = static_cast<int>(f->subfield_.size());
            f->subfield_.push_back(static_cast<Elem>(a));
        }
    }
    return f;
}

} // namespace polardrg
