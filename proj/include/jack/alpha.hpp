#pragma once

// Exact arithmetic in Q[alpha] and Q(alpha).
//
// AlphaPoly keeps its coefficients in ascending powers with no trailing zero,
// so the zero polynomial is the empty vector. AlphaRat keeps num/den coprime
// with a monic denominator, which makes equal values bit-identical.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "jack/partition.hpp"

namespace jack {

using Integer = mpz_class;
using Rational = mpq_class;

class AlphaPoly {
public:
    AlphaPoly() = default;
    AlphaPoly(const Rational& c);  // NOLINT: constants convert implicitly
    AlphaPoly(long c) : AlphaPoly(Rational(c)) {}
    explicit AlphaPoly(std::vector<Rational> ascending);

    static AlphaPoly alpha();
    static AlphaPoly linear(const Rational& c0, const Rational& c1);  // c0 + c1*alpha

    const std::vector<Rational>& coeffs() const { return c_; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(int i) const;
    const Rational& leading() const { return c_.back(); }

    Rational evaluate(const Rational& a) const;
    AlphaPoly monic() const;
    bool has_integer_coeffs() const;
    bool has_nonnegative_integer_coeffs() const;

    AlphaPoly& operator+=(const AlphaPoly& o);
    AlphaPoly& operator-=(const AlphaPoly& o);
    AlphaPoly& operator*=(const AlphaPoly& o);
    AlphaPoly& operator*=(const Rational& k);

    friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
    friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
    friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
    friend AlphaPoly operator*(AlphaPoly a, const Rational& k) { return a *= k; }
    friend AlphaPoly operator-(AlphaPoly a);
    friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) { return a.c_ == b.c_; }

    // Euclidean division; throws DivisionByZero when b is zero.
    static std::pair<AlphaPoly, AlphaPoly> divmod(const AlphaPoly& a, const AlphaPoly& b);
    // Exact quotient; throws InternalError if the division leaves a remainder.
    static AlphaPoly exact_div(const AlphaPoly& a, const AlphaPoly& b);
    // Monic gcd; gcd(0, 0) = 0.
    static AlphaPoly gcd(const AlphaPoly& a, const AlphaPoly& b);

private:
    void trim();
    std::vector<Rational> c_;
};

class AlphaRat {
public:
    AlphaRat() : den_(1) {}
    AlphaRat(const AlphaPoly& p) : num_(p), den_(1) {}  // NOLINT
    AlphaRat(const Rational& c) : num_(c), den_(1) {}   // NOLINT
    AlphaRat(long c) : num_(c), den_(1) {}              // NOLINT
    // Throws DivisionByZero if den is zero.
    AlphaRat(AlphaPoly num, AlphaPoly den);

    const AlphaPoly& num() const { return num_; }
    const AlphaPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    AlphaRat& operator+=(const AlphaRat& o);
    AlphaRat& operator-=(const AlphaRat& o);
    AlphaRat& operator*=(const AlphaRat& o);
    AlphaRat& operator/=(const AlphaRat& o);

    friend AlphaRat operator+(AlphaRat a, const AlphaRat& b) { return a += b; }
    friend AlphaRat operator-(AlphaRat a, const AlphaRat& b) { return a -= b; }
    friend AlphaRat operator*(AlphaRat a, const AlphaRat& b) { return a *= b; }
    friend AlphaRat operator/(AlphaRat a, const AlphaRat& b) { return a /= b; }
    friend AlphaRat operator-(AlphaRat a);
    friend bool operator==(const AlphaRat& a, const AlphaRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize();
    AlphaPoly num_;
    AlphaPoly den_;
};

// Lattice point (x, y) -> alpha*x - y.
AlphaPoly bracket(BoxCoord b);

// Throws EvaluationAtPole if the denominator vanishes at a.
Rational evaluate_at(const AlphaRat& f, const Rational& a);

// p = constant * prod [x_i, y_i]^mult with primitive lattice points, x_i >= 1
// and gcd(x_i, |y_i|) = 1.
struct LinearFactorization {
    Rational constant;
    std::map<BoxCoord, int> factors;

    AlphaPoly expand() const;
    friend bool operator==(const LinearFactorization&, const LinearFactorization&) = default;
};

// Splits p into brackets [x, y] with |x|, |y| <= search_bound, or returns
// nullopt when some factor is not of that form. The zero polynomial has no
// factorization.
std::optional<LinearFactorization> factor_linear(const AlphaPoly& p, int search_bound = 64);

enum class Notation { ascii, unicode };

// "1+3alpha+2alpha^2" (ascending powers).
std::string to_string(const AlphaPoly& p, Notation notation = Notation::ascii);
std::string to_string(const AlphaRat& f, Notation notation = Notation::ascii);
// "2^9*3^2*alpha^6*(1+alpha)^4*...", constants split into prime powers.
std::string to_string(const LinearFactorization& f, Notation notation = Notation::ascii);

std::ostream& operator<<(std::ostream& os, const AlphaPoly& p);
std::ostream& operator<<(std::ostream& os, const AlphaRat& f);

}  // namespace jack
