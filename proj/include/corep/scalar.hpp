#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

#include "corep/errors.hpp"

namespace corep {

/// Arbitrary-precision rational number. All arithmetic is exact; values are
/// kept in canonical form (gcd(num, den) = 1, den > 0).
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw Error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    static std::optional<Rational> parse(std::string_view text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Rational inverse() const {
        if (is_zero()) throw Error("division by zero");
        return Rational(mpq_class(1) / v_);
    }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    const mpq_class& value() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }

  private:
    mpq_class v_;
};

inline std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    auto digits = [](std::string_view s) {
        if (!s.empty() && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (!digits(num) || !digits(den)) return std::nullopt;
    mpz_class n(std::string(num)), d(std::string(den));
    if (d == 0) return std::nullopt;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

/// Element of the prime field F_p. The modulus is a session-wide parameter,
/// fixed once before any arithmetic; values are residues in [0, p).
class Fp {
  public:
    Fp() : v_(0) {}
    Fp(int n) : v_(reduce_signed(n)) {}
    Fp(long n) : v_(reduce_signed(n)) {}

    /// Fixes the session modulus. p must be an odd prime.
    static void set_modulus(std::uint64_t p) {
        if (p <= 2 || p > (1ull << 31)) throw Error("modulus must be an odd prime below 2^31");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw Error("modulus " + std::to_string(p) + " is not prime");
        modulus_ = p;
    }
    static std::uint64_t modulus() {
        if (modulus_ == 0) throw Error("F_p modulus not set");
        return modulus_;
    }

    static std::optional<Fp> parse(std::string_view text);

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp inverse() const {
        if (v_ == 0) throw Error("division by zero");
        return pow(*this, modulus() - 2);
    }

    std::string str() const { return std::to_string(v_); }

    std::uint64_t residue() const { return v_; }

    Fp operator-() const { return from_residue(v_ == 0 ? 0 : modulus() - v_); }
    Fp& operator+=(const Fp& o) {
        v_ += o.v_;
        if (v_ >= modulus()) v_ -= modulus();
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + modulus() - o.v_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        v_ = (v_ * o.v_) % modulus();
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

    friend Fp abs(const Fp& a) { return a; }

  private:
    static inline std::uint64_t modulus_ = 0;

    static Fp from_residue(std::uint64_t r) {
        Fp x;
        x.v_ = r;
        return x;
    }
    static std::uint64_t reduce_signed(long long n) {
        const auto p = static_cast<long long>(modulus());
        long long r = n % p;
        if (r < 0) r += p;
        return static_cast<std::uint64_t>(r);
    }
    static Fp pow(Fp base, std::uint64_t e) {
        Fp acc(1);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::uint64_t v_;
};

inline std::optional<Fp> Fp::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string_view body = text;
    bool neg = false;
    if (body.front() == '-') {
        neg = true;
        body.remove_prefix(1);
    }
    if (body.empty()) return std::nullopt;
    long long acc = 0;
    for (char c : body) {
        if (c < '0' || c > '9') return std::nullopt;
        acc = (acc * 10 + (c - '0')) % static_cast<long long>(modulus());
    }
    Fp r(static_cast<long>(acc));
    return neg ? -r : r;
}

template <class K>
std::optional<K> parse_scalar(std::string_view text) {
    return K::parse(text);
}

template <class K>
std::string scalar_str(const K& k) {
    return k.str();
}

} // namespace corep

namespace Eigen {

template <>
struct NumTraits<corep::Rational> : GenericNumTraits<corep::Rational> {
    using Real = corep::Rational;
    using NonInteger = corep::Rational;
    using Nested = corep::Rational;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 40,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<corep::Fp> : GenericNumTraits<corep::Fp> {
    using Real = corep::Fp;
    using NonInteger = corep::Fp;
    using Nested = corep::Fp;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 4,
        MulCost = 8,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen
