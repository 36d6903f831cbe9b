#pragma once

// Exact coefficient fields: the rationals (GMP big rationals), prime fields
// F_p with p < 2^31, and extensions F_q = F_p[z]/(m(z)) with deg m <= 8.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include <punctured/error.hpp>

namespace punctured {

namespace detail {
struct FieldData;
}

class FieldValue;

class Field
{
public:
    enum class Kind { Rational, Prime, Extension };

    static constexpr std::uint64_t max_prime = (1ULL << 31);
    static constexpr int max_extension_degree = 8;

    // Defaults to the rationals.
    Field();

    static Field rationals();
    // Throws InvalidField unless p is a prime below 2^31.
    static Field prime(std::uint64_t p);
    // `modulus` is monic, coefficients low degree first; irreducibility over
    // F_p is checked here.
    static Field extension(std::uint64_t p, std::vector<std::uint64_t> modulus);

    Kind kind() const noexcept;
    bool is_rational() const noexcept { return kind() == Kind::Rational; }
    bool is_finite() const noexcept { return kind() != Kind::Rational; }
    std::uint64_t characteristic() const noexcept;
    // Degree over the prime field (1 for Q and F_p).
    int degree() const noexcept;
    const std::vector<std::uint64_t> &modulus() const noexcept;
    Field prime_subfield() const;
    // Number of elements; zero for Q.
    mpz_class order() const;

    FieldValue zero() const;
    FieldValue one() const;
    FieldValue from_int(long long n) const;
    FieldValue from_mpz(const mpz_class &n) const;
    // For finite fields, p must not divide the denominator.
    FieldValue from_rational(const mpq_class &q) const;
    // Extension element from its coefficient vector in the z-basis.
    FieldValue from_coefficients(std::vector<std::uint64_t> coeffs) const;
    // The class of z in an extension field.
    FieldValue generator() const;
    // All elements of a finite field with at most `limit` elements.
    std::vector<FieldValue> elements(std::uint64_t limit = 1u << 16) const;

    // "q", "fp:<p>" or "fq:<p>:<m(z)>".
    std::string descriptor() const;

    bool operator==(const Field &other) const noexcept;

private:
    explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

    std::shared_ptr<const detail::FieldData> data_;

    friend class FieldValue;
};

class FieldValue
{
public:
    // Zero of Q.
    FieldValue();

    const Field &field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    FieldValue operator-() const;
    FieldValue &operator+=(const FieldValue &b);
    FieldValue &operator-=(const FieldValue &b);
    FieldValue &operator*=(const FieldValue &b);
    FieldValue &operator/=(const FieldValue &b);
    FieldValue inverse() const;
    FieldValue pow(long long e) const;
    // x -> x^p; identity on Q and F_p.
    FieldValue frobenius() const;

    bool operator==(const FieldValue &b) const;

    // Payload accessors; each throws if the value lives in another kind of field.
    const mpq_class &rational() const;
    std::uint64_t residue() const;
    const std::vector<std::uint64_t> &coefficients() const;

    // Canonical text: "a/b" (or "a"), "a mod p", or a polynomial in z.
    std::string to_string() const;
    // Bare form used inside series and polynomial text: "3/2", "4", "(z + 1)".
    std::string coefficient_string() const;
    // Total order used only for deterministic tie-breaking.
    std::strong_ordering canonical_compare(const FieldValue &b) const;

private:
    using Payload = std::variant<mpq_class, std::uint64_t, std::vector<std::uint64_t>>;

    FieldValue(Field field, Payload payload) : field_(std::move(field)), payload_(std::move(payload)) {}

    void require_same(const FieldValue &b) const;

    Field field_;
    Payload payload_;

    friend class Field;
};

inline FieldValue operator+(FieldValue a, const FieldValue &b) { return a += b; }
inline FieldValue operator-(FieldValue a, const FieldValue &b) { return a -= b; }
inline FieldValue operator*(FieldValue a, const FieldValue &b) { return a *= b; }
inline FieldValue operator/(FieldValue a, const FieldValue &b) { return a /= b; }

enum class ArithOp { Add, Sub, Mul, Div };
FieldValue arith(const FieldValue &a, const FieldValue &b, ArithOp op);

// Norm and trace of an extension element down to F_p, computed as the
// determinant and trace of the multiplication-by-a matrix on the z-basis.
FieldValue norm_to_base(const FieldValue &a);
FieldValue trace_to_base(const FieldValue &a);

// Lifts an F_p element into an extension field with the same characteristic.
FieldValue embed_prime(const FieldValue &a, const Field &extension);

} // namespace punctured
