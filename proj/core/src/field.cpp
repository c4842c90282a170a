#include "fimreg/field.hpp"

#include <cstdlib>

#include "fimreg/errors.hpp"

namespace fimreg {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw InputError("empty coefficient string");
    auto check_decimal = [&](const std::string& part, bool allow_sign) {
        if (part.empty()) throw InputError("malformed coefficient '" + s + "'");
        size_t start = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) start = 1;
        if (start == part.size()) throw InputError("malformed coefficient '" + s + "'");
        for (size_t i = start; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                throw InputError("malformed coefficient '" + s + "'");
            }
        }
    };
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            check_decimal(s, true);
            return Rational(boost::multiprecision::cpp_int(s));
        }
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        check_decimal(num, true);
        check_decimal(den, false);
        boost::multiprecision::cpp_int d(den);
        if (d == 0) throw InputError("zero denominator in coefficient '" + s + "'");
        return Rational(boost::multiprecision::cpp_int(num), d);
    } catch (const std::runtime_error&) {
        throw InputError("malformed coefficient '" + s + "'");
    }
}

std::string rational_str(const Rational& q) {
    if (boost::multiprecision::denominator(q) == 1) {
        return boost::multiprecision::numerator(q).str();
    }
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

FieldConfig FieldConfig::parse(const std::string& text) {
    if (text == "rationals") {
        FieldConfig cfg;
        cfg.kind = Kind::Rationals;
        return cfg;
    }
    if (text.rfind("p=", 0) == 0) {
        const std::string num = text.substr(2);
        if (num.empty()) throw InputError("field spec 'p=' missing the prime");
        std::uint64_t v = 0;
        for (char ch : num) {
            if (ch < '0' || ch > '9') throw InputError("field spec '" + text + "' is not a number");
            v = v * 10 + static_cast<std::uint64_t>(ch - '0');
            if (v > (1ull << 31)) throw InputError("prime in '" + text + "' too large (need p < 2^31)");
        }
        FieldConfig cfg;
        cfg.kind = Kind::PrimeField;
        cfg.p = static_cast<std::uint32_t>(v);
        PrimeField check(cfg.p);  // validates primality
        return cfg;
    }
    throw InputError("unknown field spec '" + text + "' (expected 'p=<prime>' or 'rationals')");
}

FieldConfig FieldConfig::from_env_or(const FieldConfig& fallback) {
    const char* env = std::getenv("FIMREG_FIELD");
    if (env == nullptr || *env == '\0') return fallback;
    return parse(env);
}

std::string FieldConfig::str() const {
    return kind == Kind::Rationals ? "rationals" : "p=" + std::to_string(p);
}

std::string FieldConfig::kind_name() const {
    return kind == Kind::Rationals ? "rationals" : "prime-field";
}

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31)) throw InputError("prime field characteristic must be < 2^31");
    if (!is_prime_u32(p)) {
        throw InputError(std::to_string(p) + " is not prime");
    }
    const std::uint64_t sq = static_cast<std::uint64_t>(p - 1) * (p - 1);
    chunk_ = sq == 0 ? ~0ull : ~0ull / sq;
}

PrimeField::Elem PrimeField::inv(Elem x) const {
    if (x == 0) throw InputError("division by zero in F_" + std::to_string(p_));
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = x;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    // r == gcd(x, p) == 1 since p is prime and 0 < x < p
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::from_rational(const Rational& q) const {
    using boost::multiprecision::cpp_int;
    const cpp_int num = boost::multiprecision::numerator(q);
    const cpp_int den = boost::multiprecision::denominator(q);
    const cpp_int pp(p_);
    const cpp_int dmod = den % pp;
    if (dmod == 0) {
        throw InputError("coefficient " + rational_str(q) + " has denominator divisible by " +
                         std::to_string(p_));
    }
    cpp_int nmod = num % pp;
    if (nmod < 0) nmod += pp;
    const Elem n = static_cast<Elem>(nmod);
    const Elem d = static_cast<Elem>(dmod);
    return mul(n, inv(d));
}

FieldConfig PrimeField::config() const {
    FieldConfig cfg;
    cfg.kind = FieldConfig::Kind::PrimeField;
    cfg.p = p_;
    return cfg;
}

RationalField::Elem RationalField::inv(const Elem& x) const {
    if (x == 0) throw InputError("division by zero over the rationals");
    return Rational(1) / x;
}

FieldConfig RationalField::config() const {
    FieldConfig cfg;
    cfg.kind = FieldConfig::Kind::Rationals;
    return cfg;
}

}  // namespace fimreg
