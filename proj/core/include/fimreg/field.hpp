#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace fimreg {

using Rational = boost::multiprecision::cpp_rational;

/* Parse "a" or "a/b" (decimal, optional leading -) into an exact rational. */
Rational parse_rational(const std::string& s);
/* Canonical form: "a" when the denominator is 1, else "a/b" in lowest terms. */
std::string rational_str(const Rational& q);

/*
 * Choice of coefficient field, as it appears in files and on the command
 * line: a prime field "p=<prime>" or the rationals "rationals".
 */
struct FieldConfig {
    enum class Kind { PrimeField, Rationals };
    Kind kind = Kind::PrimeField;
    std::uint32_t p = 101;

    static FieldConfig parse(const std::string& text);
    /* FIMREG_FIELD overrides the fallback when set. */
    static FieldConfig from_env_or(const FieldConfig& fallback);

    std::string str() const;        // "p=101" | "rationals"
    std::string kind_name() const;  // "prime-field" | "rationals"
    bool operator==(const FieldConfig& o) const { return kind == o.kind && (kind == Kind::Rationals || p == o.p); }
};

/*
 * F_p with a runtime prime p < 2^31.  Elements are reduced representatives
 * in [0, p).  axpy_chunk() is how many unreduced products a 64-bit
 * accumulator can absorb before a reduction is required; matrix kernels use
 * it to delay the modulo out of their inner loops.
 */
class PrimeField {
public:
    using Elem = std::uint32_t;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }
    std::uint64_t axpy_chunk() const { return chunk_; }

    Elem zero() const { return 0; }
    Elem one() const { return p_ == 1 ? 0 : 1; }
    bool is_zero(Elem x) const { return x == 0; }
    bool eq(Elem x, Elem y) const { return x == y; }

    Elem add(Elem x, Elem y) const {
        std::uint32_t s = x + y;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem x, Elem y) const { return x >= y ? x - y : x + p_ - y; }
    Elem neg(Elem x) const { return x == 0 ? 0 : p_ - x; }
    Elem mul(Elem x, Elem y) const {
        return static_cast<Elem>(static_cast<std::uint64_t>(x) * y % p_);
    }
    Elem inv(Elem x) const;
    Elem reduce64(std::uint64_t v) const { return static_cast<Elem>(v % p_); }

    Elem from_int(std::int64_t v) const;
    Elem from_rational(const Rational& q) const;
    std::string to_string(Elem x) const { return std::to_string(x); }

    FieldConfig config() const;

private:
    std::uint32_t p_;
    std::uint64_t chunk_;
};

/* The rationals with exact bigint arithmetic. */
class RationalField {
public:
    using Elem = Rational;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    bool is_zero(const Elem& x) const { return x == 0; }
    bool eq(const Elem& x, const Elem& y) const { return x == y; }

    Elem add(const Elem& x, const Elem& y) const { return x + y; }
    Elem sub(const Elem& x, const Elem& y) const { return x - y; }
    Elem neg(const Elem& x) const { return -x; }
    Elem mul(const Elem& x, const Elem& y) const { return x * y; }
    Elem inv(const Elem& x) const;

    Elem from_int(std::int64_t v) const { return Rational(v); }
    Elem from_rational(const Rational& q) const { return q; }
    std::string to_string(const Elem& x) const { return rational_str(x); }

    FieldConfig config() const;
};

}  // namespace fimreg
