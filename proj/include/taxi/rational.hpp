#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace taxi {

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator; every coordinate, slope and radius in the library is a Rat.
class Rat {
public:
    Rat() = default;
    Rat(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
    Rat(long num, long den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    explicit Rat(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Parses "p", "p/q" or a finite decimal ("-0.35") exactly. A leading
    /// U+2212 minus sign is accepted as well.
    static Rat parse(std::string_view text);

    [[nodiscard]] const mpq_class& raw() const { return value_; }
    [[nodiscard]] mpz_class num() const { return value_.get_num(); }
    [[nodiscard]] mpz_class den() const { return value_.get_den(); }

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    /// "p/q", or "p" for integers.
    [[nodiscard]] std::string str() const { return value_.get_str(); }

    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.value_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

inline Rat Rat::parse(std::string_view text) {
    std::string s(text);
    // U+2212 MINUS SIGN is three bytes in UTF-8.
    if (s.rfind("\xE2\x88\x92", 0) == 0) s = "-" + s.substr(3);
    if (s.empty()) throw std::invalid_argument("empty number");

    auto digits_only = [](std::string_view d) {
        if (d.empty()) return false;
        for (char c : d)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto bad = [&] { return std::invalid_argument("malformed number '" + std::string(text) + "'"); };

    bool negative = false;
    std::string_view body(s);
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    mpq_class out;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto n = body.substr(0, slash);
        auto d = body.substr(slash + 1);
        if (!digits_only(n) || !digits_only(d)) throw bad();
        const mpz_class den{std::string(d), 10};
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        out = mpq_class(mpz_class(std::string(n), 10), den);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty()) throw bad();
        if ((!whole.empty() && !digits_only(whole)) || (!frac.empty() && !digits_only(frac))) throw bad();
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10);
        mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac), 10);
        out = mpq_class(w * scale + f, scale);
    } else {
        if (!digits_only(body)) throw bad();
        out = mpq_class(mpz_class(std::string(body), 10));
    }
    out.canonicalize();
    if (negative) out = -out;
    return Rat(out);
}

}  // namespace taxi
