#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace polardrg {

/// Element of a finite field, identified by the base-p reading of its
/// polynomial coefficient vector. 0 is zero and 1 is one.
using Elem = std::uint16_t;

struct PrimePower {
    int p = 0;
    int e = 0;
};

/// Trial factorization. Returns nullopt unless q = p^e with p prime and e >= 1.
std::optional<PrimePower> prime_power(std::int64_t q);

struct FieldSpec {
    int p = 0;
    int e = 0;    // extension degree over GF(p)
    int size = 0; // p^e
    std::vector<int> modulus; // monic, low-to-high, modulus.size() == e + 1
};

struct FieldTables {
    std::vector<Elem> add;         // size*size
    std::vector<Elem> mul;         // size*size
    std::vector<Elem> neg;         // size
    std::vector<Elem> inv;         // size, inv[0] = 0
    std::vector<Elem> frobenius_q; // size, x -> x^q
};

/// GF(q^2) with its subfield GF(q) and the involution x -> x^q.
///
/// Immutable after construction; share it through FieldPtr.
class Field {
public:
    static constexpr int default_max_q = 64;

    int q() const noexcept { return q_; }
    int p() const noexcept { return spec_.p; }
    int size() const noexcept { return spec_.size; }
    const FieldSpec& spec() const noexcept { return spec_; }
    const FieldTables& tables() const noexcept { return tables_; }

    Elem add(Elem a, Elem b) const { return tables_.add[idx(a, b)]; }
    Elem sub(Elem a, Elem b) const { return tables_.add[idx(a, tables_.neg[b])]; }
    Elem neg(Elem a) const { return tables_.neg[a]; }
    Elem mul(Elem a, Elem b) const { return tables_.mul[idx(a, b)]; }
    Elem inv(Elem a) const { return tables_.inv[a]; }
    Elem conj(Elem a) const { return tables_.frobenius_q[a]; }
    Elem pow(Elem a, std::uint64_t k) const;

    /// A generator of the multiplicative group (smallest index).
    Elem primitive() const noexcept { return primitive_; }

    /// Frobenius-fixed elements (the subfield GF(q)) in increasing index order.
    std::span<const Elem> subfield() const noexcept { return subfield_; }
    /// Position of x inside subfield(), or -1 when x is not in GF(q).
    int subfield_position(Elem x) const { return subfield_pos_[x]; }
    bool in_subfield(Elem x) const { return subfield_pos_[x] >= 0; }

private:
    friend std::shared_ptr<const Field> make_field(std::int64_t q, int max_q);
    Field() = default;

    std::size_t idx(Elem a, Elem b) const
    {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(spec_.size) + b;
    }

    int q_ = 0;
    FieldSpec spec_;
    FieldTables tables_;
    Elem primitive_ = 0;
    std::vector<Elem> log_;
    std::vector<Elem> exp_;
    std::vector<Elem> subfield_;
    std::vector<int> subfield_pos_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds GF(q^2) for a prime power q <= max_q. The modulus is the
/// lexicographically smallest monic irreducible of degree 2e, so element
/// indices are reproducible.
FieldPtr make_field(std::int64_t q, int max_q = Field::default_max_q);

/// Conjugation x -> x^q.
inline Elem conjugate(const Field& f, Elem x) { return f.conj(x); }

namespace poly {

/// Dense polynomials over GF(p), coefficients low-to-high, no trailing zeros.
using Poly = std::vector<int>;

Poly mod(Poly a, const Poly& m, int p);
Poly mul(const Poly& a, const Poly& b, int p);
bool is_irreducible(const Poly& f, int p);
/// The lexicographically smallest monic irreducible polynomial of the given degree.
Poly smallest_irreducible(int degree, int p);

} // namespace poly

} // namespace polardrg
