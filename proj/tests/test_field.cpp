#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <punctured/field.hpp>
#include <punctured/upoly.hpp>

#include "oracles.hpp"

using namespace punctured;

namespace {

Field f4() { return Field::extension(2, {1, 1, 1}); }

std::vector<Field> sample_fields()
{
    return {Field::rationals(), Field::prime(5), Field::prime(101), f4(), Field::extension(3, {2, 2, 0, 1}),
            Field::extension(2, {1, 1, 0, 0, 1}), Field::extension(7, {1, 0, 1})};
}

} // namespace

TEST_CASE("rational, prime and extension arithmetic")
{
    const Field Q = Field::rationals();
    CHECK((Q.from_rational(mpq_class(1, 2)) + Q.from_rational(mpq_class(1, 3))).to_string() == "5/6");
    const Field F5 = Field::prime(5);
    CHECK((F5.from_int(3) * F5.from_int(4)).to_string() == "2 mod 5");
    const Field F4 = f4();
    const FieldValue z = F4.generator();
    CHECK(z * z == z + F4.one());
    CHECK((z * z).to_string() == "z + 1");
    CHECK(arith(Q.from_int(7), Q.from_int(2), ArithOp::Div).rational() == mpq_class(7, 2));
}

TEST_CASE("rational payloads stay normalized")
{
    const Field Q = Field::rationals();
    const FieldValue a = Q.from_rational(mpq_class(6, -4));
    CHECK(a.rational().get_num() == -3);
    CHECK(a.rational().get_den() == 2);
    CHECK(Q.from_rational(mpq_class(0, 5)).to_string() == "0");
}

TEST_CASE("descriptor and argument errors")
{
    const Field F5 = Field::prime(5), F7 = Field::prime(7);
    auto kind_of = [](auto &&fn) {
        try {
            fn();
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    CHECK(kind_of([&] { (void)(F5.one() + F7.one()); }) == ErrorKind::DescriptorMismatch);
    CHECK(kind_of([&] { (void)(F5.one() / F5.zero()); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([&] { (void)norm_to_base(F5.one()); }) == ErrorKind::NotAnExtensionField);
    CHECK(kind_of([&] { (void)trace_to_base(Field::rationals().one()); }) == ErrorKind::NotAnExtensionField);
    CHECK(kind_of([] { (void)Field::prime(15); }) == ErrorKind::InvalidField);
    CHECK(kind_of([] { (void)Field::prime(1ULL << 31); }) == ErrorKind::InvalidField);
    CHECK(kind_of([] { (void)Field::extension(2, {1, 0, 1}); }) == ErrorKind::InvalidField);
    CHECK(kind_of([] { (void)Field::extension(2, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1}); }) == ErrorKind::InvalidField);
}

TEST_CASE("norm and trace on small fields")
{
    const Field F4 = f4();
    const FieldValue z = F4.generator();
    CHECK(norm_to_base(z).residue() == 1);
    CHECK(trace_to_base(z).residue() == 1);
    CHECK(norm_to_base(F4.zero()).is_zero());
    CHECK(trace_to_base(F4.zero()).is_zero());

    const Field F27 = Field::extension(3, {2, 2, 0, 1});
    const FieldValue c = F27.from_int(2);
    CHECK(norm_to_base(c).residue() == 2); // 2^3 = 8 = 2 mod 3
    CHECK(trace_to_base(F27.one()).residue() == 0);
    const Field F49 = Field::extension(7, {1, 0, 1});
    CHECK(trace_to_base(F49.one()).residue() == 2);
}

TEST_CASE("norm and trace agree with Frobenius conjugates on every element")
{
    for (const Field &F : {f4(), Field::extension(2, {1, 1, 0, 1}), Field::extension(3, {2, 2, 0, 1}),
                           Field::extension(2, {1, 1, 0, 0, 1}), Field::extension(2, {1, 0, 1, 0, 0, 1}),
                           Field::extension(2, {1, 1, 0, 0, 0, 0, 1}), Field::extension(7, {1, 0, 1})}) {
        CAPTURE(F.descriptor());
        REQUIRE(F.order() <= 64);
        const Field Fp = F.prime_subfield();
        for (const auto &a : F.elements()) {
            CHECK(embed_prime(norm_to_base(a), F) == oracle::norm_by_conjugates(a));
            CHECK(embed_prime(trace_to_base(a), F) == oracle::trace_by_conjugates(a));
            CHECK(norm_to_base(a).field() == Fp);
        }
    }
}

TEST_CASE("norm multiplicative, trace additive and linear")
{
    std::mt19937_64 rng(11);
    for (const Field &F : {Field::extension(3, {2, 2, 0, 1}), Field::extension(101, {2, 0, 1}),
                           Field::extension(2, {1, 1, 0, 1, 1, 0, 0, 0, 1})}) {
        const Field Fp = F.prime_subfield();
        for (int trial = 0; trial < 200; ++trial) {
            const FieldValue a = oracle::random_value(F, rng), b = oracle::random_value(F, rng);
            const FieldValue c = oracle::random_value(Fp, rng);
            CHECK(norm_to_base(a * b) == norm_to_base(a) * norm_to_base(b));
            CHECK(trace_to_base(a + b) == trace_to_base(a) + trace_to_base(b));
            CHECK(trace_to_base(embed_prime(c, F) * a) == c * trace_to_base(a));
        }
    }
}

TEST_CASE("field axioms on random triples")
{
    std::mt19937_64 rng(7);
    for (const Field &F : sample_fields()) {
        CAPTURE(F.descriptor());
        for (int trial = 0; trial < 150; ++trial) {
            const FieldValue a = oracle::random_value(F, rng), b = oracle::random_value(F, rng),
                             c = oracle::random_value(F, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a - a == F.zero());
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == F.one());
                CHECK(a / a == F.one());
            }
        }
    }
}

TEST_CASE("frobenius is a ring map of order d")
{
    std::mt19937_64 rng(3);
    const Field F = Field::extension(3, {2, 2, 0, 1});
    for (int trial = 0; trial < 50; ++trial) {
        const FieldValue a = oracle::random_value(F, rng), b = oracle::random_value(F, rng);
        CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
        CHECK(a.frobenius().frobenius().frobenius() == a);
    }
}

TEST_CASE("text forms")
{
    CHECK(Field::rationals().from_rational(mpq_class(-3, 4)).to_string() == "-3/4");
    CHECK(Field::prime(7).from_int(-1).to_string() == "6 mod 7");
    CHECK(f4().generator().to_string() == "z");
    CHECK(f4().descriptor() == "fq:2:z^2+z+1");
    CHECK(Field::prime(7).descriptor() == "fp:7");
}

TEST_CASE("univariate factorisation over F_p recombines")
{
    std::mt19937_64 rng(5);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 13ULL}) {
        const Field F = Field::prime(p);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<FieldValue> c;
            const int deg = 1 + static_cast<int>(rng() % 9);
            for (int i = 0; i < deg; ++i) c.push_back(oracle::random_value(F, rng));
            c.push_back(F.one());
            const UPoly a(F, c);
            const Factorization fac = factor(a);
            UPoly prod = UPoly::constant(fac.unit);
            for (const auto &f : fac.factors) {
                CHECK(f.poly.lead().is_one());
                CHECK(gcd(f.poly, f.poly.derivative()).degree() == 0);
                for (int i = 0; i < f.multiplicity; ++i) prod *= f.poly;
            }
            CHECK(prod == a);
        }
    }
}

TEST_CASE("rational roots over Q")
{
    const Field Q = Field::rationals();
    // (2t - 1)(t + 3)^2 (t^2 + 1)
    UPoly a = UPoly(Q, {Q.from_int(-1), Q.from_int(2)}) * UPoly::linear(Q.from_int(-3)) * UPoly::linear(Q.from_int(-3)) *
              UPoly(Q, {Q.one(), Q.zero(), Q.one()});
    auto r = roots(a);
    REQUIRE(r.size() == 2);
    const Factorization f = factor(a);
    CHECK_FALSE(f.fully_split);
    CHECK(f.factors.back().poly.degree() == 2);
}
