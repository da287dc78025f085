#include "hcohom/scalar.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "hcohom/errors.hpp"

namespace hcohom {
namespace {

using i128 = __int128;

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    // operands are never INT64_MIN in practice; promote to be safe
    return static_cast<std::int64_t>(gcd128(a, b));
}

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::uint64_t words[2] = {static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(u >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
    if (neg) z = -z;
    return z;
}

bool fits64(const mpz_class& z) { return z.fits_slong_p(); }

}  // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    assign_wide(num, den);
}

Rational::Rational(const mpq_class& value) {
    mpq_class v = value;
    v.canonicalize();
    assign_big(std::move(v));
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

void Rational::assign_wide(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    if (num >= kMin64 && num <= kMax64 && den <= kMax64) {
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
        big_.reset();
        return;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    assign_big(std::move(q));
}

void Rational::assign_big(mpq_class value) {
    const mpz_class& n = value.get_num();
    const mpz_class& d = value.get_den();
    if (fits64(n) && fits64(d)) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(value));
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw InputError("empty rational literal");
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num_txt = trim(text.substr(0, slash));
    std::string_view den_txt = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
    if (!valid_int(num_txt) || !valid_int(den_txt))
        throw InputError("malformed rational literal '" + std::string(text) + "'");
    std::string ntxt(num_txt.front() == '+' ? num_txt.substr(1) : num_txt);
    std::string dtxt(den_txt.front() == '+' ? den_txt.substr(1) : den_txt);
    mpz_class n(ntxt, 10);
    mpz_class d(dtxt, 10);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.assign_big(-*big_);
    } else {
        r.assign_wide(-static_cast<i128>(num_), den_);
    }
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rational r;
    if (big_) {
        mpq_class q = 1 / *big_;
        r.assign_big(std::move(q));
    } else {
        r.assign_wide(den_, num_);
    }
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t out;
            if (!__builtin_add_overflow(num_, rhs.num_, &out)) {
                num_ = out;
                return *this;
            }
        }
        if (den_ == rhs.den_) {
            assign_wide(static_cast<i128>(num_) + rhs.num_, den_);
            return *this;
        }
        assign_wide(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
                    static_cast<i128>(den_) * rhs.den_);
        return *this;
    }
    assign_big(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t out;
            if (!__builtin_sub_overflow(num_, rhs.num_, &out)) {
                num_ = out;
                return *this;
            }
        }
        assign_wide(static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_,
                    static_cast<i128>(den_) * rhs.den_);
        return *this;
    }
    assign_big(to_mpq() - rhs.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (num_ == 0 || rhs.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t out;
            if (!__builtin_mul_overflow(num_, rhs.num_, &out)) {
                num_ = out;
                return *this;
            }
        }
        // cross-cancel keeps intermediates small
        std::int64_t g1 = gcd64(num_, rhs.den_);
        std::int64_t g2 = gcd64(rhs.num_, den_);
        i128 n = static_cast<i128>(num_ / g1) * (rhs.num_ / g2);
        i128 d = static_cast<i128>(den_ / g2) * (rhs.den_ / g1);
        assign_wide(n, d);
        return *this;
    }
    assign_big(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    return *this *= rhs.inverse();
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a big value never equals a small one
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 l = static_cast<i128>(a.num_) * b.den_;
        i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (im_.is_zero()) return Scalar(re_.inverse());
    Rational norm = re_ * re_ + im_ * im_;
    Rational inv = norm.inverse();
    return {re_ * inv, -(im_ * inv)};
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    re_ += rhs.re_;
    if (!rhs.im_.is_zero()) im_ += rhs.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    re_ -= rhs.re_;
    if (!rhs.im_.is_zero()) im_ -= rhs.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (im_.is_zero() && rhs.im_.is_zero()) {
        re_ *= rhs.re_;
        return *this;
    }
    Rational re = re_ * rhs.re_ - im_ * rhs.im_;
    Rational im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string Scalar::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string out = re_.is_zero() ? "" : re_.to_string();
    std::string im = im_.to_string();
    if (!out.empty() && im.front() != '-') out += "+";
    return out + im + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hcohom
