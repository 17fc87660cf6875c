#pragma once

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "gtrel/error.hpp"

namespace gtrel {

// Exact rational backed by mpq_class, always kept canonical.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I v) : q_(static_cast<long>(v)) {}

    Rational(const mpz_class& v) : q_(v) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0)
            throw Error(ErrorCode::ParseError, "zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static Rational parse(std::string_view text) {
        std::string s(text);
        auto first = s.find_first_not_of(" \t");
        auto last = s.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw Error(ErrorCode::ParseError, "empty rational");
        s = s.substr(first, last - first + 1);
        auto slash = s.find('/');
        auto is_int = [](const std::string& t) {
            std::size_t k = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
            if (k >= t.size())
                return false;
            for (; k < t.size(); ++k)
                if (t[k] < '0' || t[k] > '9')
                    return false;
            return true;
        };
        auto to_mpz = [](std::string t) {
            if (!t.empty() && t[0] == '+')
                t.erase(0, 1);
            return mpz_class(t, 10);
        };
        if (slash == std::string::npos) {
            if (!is_int(s))
                throw Error(ErrorCode::ParseError, "not a rational: '" + s + "'");
            return Rational(to_mpz(s));
        }
        std::string a = s.substr(0, slash), b = s.substr(slash + 1);
        if (!is_int(a) || !is_int(b) || b[0] == '-')
            throw Error(ErrorCode::ParseError, "not a rational: '" + s + "'");
        mpz_class den = to_mpz(b);
        if (den == 0)
            throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
        return Rational(to_mpz(a), den);
    }

    std::string str() const { return q_.get_str(); }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    // Integer value; throws unless integral and within long range.
    long to_long() const {
        if (!is_integer() || !q_.get_num().fits_slong_p())
            throw Error(ErrorCode::ValidationError, "expected a machine integer, got " + str());
        return q_.get_num().get_si();
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw Error(ErrorCode::CriticalDenominator, "division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

struct IntegralityClass {
    bool in_z = false;
    mpz_class value = 0;  // meaningful only when in_z
};

inline IntegralityClass classify_integer(const Rational& r) {
    if (r.is_integer())
        return {true, r.num()};
    return {false, 0};
}

enum class DiffClass { ZGeq0, ZGt0, Z, NotZ };

inline bool in_class(const Rational& d, DiffClass cls) {
    switch (cls) {
    case DiffClass::ZGeq0: return d.is_integer() && d.sign() >= 0;
    case DiffClass::ZGt0: return d.is_integer() && d.sign() > 0;
    case DiffClass::Z: return d.is_integer();
    case DiffClass::NotZ: return !d.is_integer();
    }
    return false;
}

inline bool diff_in(const Rational& a, const Rational& b, DiffClass cls) { return in_class(a - b, cls); }

inline bool in_z_leq0(const Rational& d) { return d.is_integer() && d.sign() <= 0; }
inline bool in_z_gt0(const Rational& d) { return in_class(d, DiffClass::ZGt0); }
inline bool in_z_lt0(const Rational& d) { return d.is_integer() && d.sign() < 0; }

// Exact square root when r is the square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.sign() < 0)
        return std::nullopt;
    mpz_class n = r.num(), d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rational(sn, sd);
}

} // namespace gtrel
