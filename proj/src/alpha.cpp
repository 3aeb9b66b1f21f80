#include "jack/alpha.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "jack/error.hpp"

namespace jack {

// ---------------------------------------------------------------- AlphaPoly

AlphaPoly::AlphaPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

AlphaPoly::AlphaPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

AlphaPoly AlphaPoly::alpha() { return linear(0, 1); }

AlphaPoly AlphaPoly::linear(const Rational& c0, const Rational& c1) {
    return AlphaPoly(std::vector<Rational>{c0, c1});
}

void AlphaPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational AlphaPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

Rational AlphaPoly::evaluate(const Rational& a) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it;
    return acc;
}

AlphaPoly AlphaPoly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    AlphaPoly out = *this;
    Rational inv = 1 / leading();
    for (auto& q : out.c_) q *= inv;
    return out;
}

bool AlphaPoly::has_integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

bool AlphaPoly::has_nonnegative_integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rational& q) { return q.get_den() == 1 && q >= 0; });
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    AlphaPoly out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    out.trim();
    return out;
}

AlphaPoly& AlphaPoly::operator*=(const AlphaPoly& o) { return *this = *this * o; }

AlphaPoly& AlphaPoly::operator*=(const Rational& k) {
    if (k == 0) {
        c_.clear();
        return *this;
    }
    for (auto& q : c_) q *= k;
    return *this;
}

AlphaPoly operator-(AlphaPoly a) {
    for (auto& q : a.c_) q = -q;
    return a;
}

std::pair<AlphaPoly, AlphaPoly> AlphaPoly::divmod(const AlphaPoly& a, const AlphaPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {AlphaPoly{}, a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Rational inv_lead = 1 / b.leading();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        Rational q = rem[static_cast<std::size_t>(i)] * inv_lead;
        if (q == 0) continue;
        quot[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.c_[static_cast<std::size_t>(j)];
    }
    AlphaPoly qp, rp;
    qp.c_ = std::move(quot);
    qp.trim();
    rem.resize(static_cast<std::size_t>(db));
    rp.c_ = std::move(rem);
    rp.trim();
    return {std::move(qp), std::move(rp)};
}

AlphaPoly AlphaPoly::exact_div(const AlphaPoly& a, const AlphaPoly& b) {
    if (b.is_constant()) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        return a * (1 / b.c_[0]);
    }
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalError("inexact polynomial division");
    return q;
}

AlphaPoly AlphaPoly::gcd(const AlphaPoly& a, const AlphaPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return AlphaPoly(1);
    AlphaPoly x = a.monic(), y = b.monic();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        AlphaPoly r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

// ----------------------------------------------------------------- AlphaRat

AlphaRat::AlphaRat(AlphaPoly num, AlphaPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void AlphaRat::normalize() {
    if (num_.is_zero()) {
        den_ = AlphaPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        AlphaPoly g = AlphaPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = AlphaPoly::exact_div(num_, g);
            den_ = AlphaPoly::exact_div(den_, g);
        }
    }
    if (den_.leading() != 1) {
        Rational inv = 1 / den_.leading();
        num_ *= inv;
        den_ *= inv;
    }
}

AlphaRat& AlphaRat::operator+=(const AlphaRat& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    // Henrici: only the common part of the denominators can cancel.
    AlphaPoly g = AlphaPoly::gcd(den_, o.den_);
    AlphaPoly d1 = AlphaPoly::exact_div(den_, g);
    AlphaPoly d2 = AlphaPoly::exact_div(o.den_, g);
    num_ = num_ * d2 + o.num_ * d1;
    den_ = den_ * d2;
    normalize();
    return *this;
}

AlphaRat& AlphaRat::operator-=(const AlphaRat& o) { return *this += -o; }

AlphaRat& AlphaRat::operator*=(const AlphaRat& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = AlphaRat{};
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    AlphaPoly g1 = AlphaPoly::gcd(num_, o.den_);
    AlphaPoly g2 = AlphaPoly::gcd(o.num_, den_);
    num_ = AlphaPoly::exact_div(num_, g1) * AlphaPoly::exact_div(o.num_, g2);
    den_ = AlphaPoly::exact_div(den_, g2) * AlphaPoly::exact_div(o.den_, g1);
    if (den_.leading() != 1) {
        Rational inv = 1 / den_.leading();
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

AlphaRat& AlphaRat::operator/=(const AlphaRat& o) {
    if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
    return *this *= AlphaRat(o.den_, o.num_);
}

AlphaRat operator-(AlphaRat a) {
    a.num_ = -a.num_;
    return a;
}

AlphaPoly bracket(BoxCoord b) { return AlphaPoly::linear(-b.y, b.x); }

Rational evaluate_at(const AlphaRat& f, const Rational& a) {
    Rational d = f.den().evaluate(a);
    if (d == 0) throw EvaluationAtPole("rational function has a pole at alpha = " + a.get_str());
    return f.num().evaluate(a) / d;
}

// ------------------------------------------------------------ factorization

AlphaPoly LinearFactorization::expand() const {
    AlphaPoly out(constant);
    for (const auto& [pt, mult] : factors)
        for (int i = 0; i < mult; ++i) out *= bracket(pt);
    return out;
}

namespace {

// sum a_i y^i x^(d-i): zero iff y/x is a root.
Integer homogeneous_value(const std::vector<Integer>& a, long x, long y) {
    Integer acc = a.back();
    Integer xp = 1;
    for (std::size_t i = a.size() - 1; i-- > 0;) {
        xp *= x;
        acc = acc * y + a[i] * xp;
    }
    return acc;
}

}  // namespace

std::optional<LinearFactorization> factor_linear(const AlphaPoly& p, int search_bound) {
    if (p.is_zero()) return std::nullopt;
    LinearFactorization out;
    const auto& c = p.coeffs();
    std::size_t low = 0;
    while (c[low] == 0) ++low;
    if (low > 0) out.factors[{1, 0}] = static_cast<int>(low);

    Integer denom_lcm = 1;
    for (std::size_t i = low; i < c.size(); ++i) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c[i].get_den_mpz_t());
    std::vector<Integer> a;
    for (std::size_t i = low; i < c.size(); ++i) a.push_back(Integer(c[i].get_num() * (denom_lcm / c[i].get_den())));
    Integer content = 0;
    for (auto& v : a) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    for (auto& v : a) v /= content;

    Rational lead_product = 1;
    while (a.size() > 1) {
        bool found = false;
        const Integer lead = a.back();
        const Integer c0 = a.front();
        for (long x = 1; x <= search_bound && !found; ++x) {
            if (mpz_divisible_ui_p(lead.get_mpz_t(), static_cast<unsigned long>(x)) == 0) continue;
            for (long ya = 1; ya <= search_bound && !found; ++ya) {
                if (mpz_divisible_ui_p(c0.get_mpz_t(), static_cast<unsigned long>(ya)) == 0) continue;
                if (std::gcd(x, ya) != 1) continue;
                for (long y : {ya, -ya}) {
                    if (homogeneous_value(a, x, y) != 0) continue;
                    // a = (x*alpha - y) * q
                    std::vector<Integer> q(a.size() - 1);
                    Integer carry = 0;
                    for (std::size_t j = a.size() - 1; j >= 1; --j) {
                        q[j - 1] = (a[j] + y * carry) / x;
                        carry = q[j - 1];
                    }
                    a = std::move(q);
                    ++out.factors[{static_cast<int>(x), static_cast<int>(y)}];
                    lead_product *= x;
                    found = true;
                    break;
                }
            }
        }
        if (!found) return std::nullopt;
    }
    out.constant = p.leading() / lead_product;
    return out;
}

// ---------------------------------------------------------------- rendering

namespace {

std::string superscript(long k) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s = std::to_string(k), out;
    for (char ch : s) out += ch == '-' ? std::string("⁻") : std::string(digits[ch - '0']);
    return out;
}

std::string power(const std::string& base, long k, Notation notation) {
    if (k == 1) return base;
    if (notation == Notation::unicode) return base + superscript(k);
    return base + "^" + std::to_string(k);
}

std::string alpha_symbol(Notation notation) { return notation == Notation::unicode ? "α" : "alpha"; }

}  // namespace

std::string to_string(const AlphaPoly& p, Notation notation) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Rational mag = abs(c[i]);
        bool neg = c[i] < 0;
        if (!out.empty()) out += neg ? (notation == Notation::unicode ? "−" : "-") : "+";
        else if (neg) out += notation == Notation::unicode ? "−" : "-";
        std::string coef;
        if (i == 0 || mag != 1) {
            coef = mag.get_str();
            if (i > 0 && mag.get_den() != 1) coef = "(" + coef + ")";
        }
        if (i == 0) out += coef;
        else out += coef + power(alpha_symbol(notation), static_cast<long>(i), notation);
    }
    return out;
}

std::string to_string(const AlphaRat& f, Notation notation) {
    if (f.is_polynomial()) return to_string(f.num(), notation);
    auto wrap = [&](const AlphaPoly& p) {
        std::string s = to_string(p, notation);
        return p.degree() >= 1 && p.coeffs().size() > 1 ? "(" + s + ")" : s;
    };
    int nonzero = 0;
    for (auto& q : f.num().coeffs()) nonzero += q != 0;
    std::string num = nonzero > 1 ? "(" + to_string(f.num(), notation) + ")" : to_string(f.num(), notation);
    return num + "/" + wrap(f.den());
}

std::string to_string(const LinearFactorization& f, Notation notation) {
    const std::string times = notation == Notation::unicode ? "·" : "*";
    std::vector<std::string> parts;
    Rational k = f.constant;
    std::string sign;
    if (k < 0) {
        sign = notation == Notation::unicode ? "−" : "-";
        k = -k;
    }
    if (k.get_den() == 1) {
        Integer n = k.get_num();
        for (long pr = 2; pr < 1000 && n > 1; ++pr) {
            long e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(pr)) != 0) {
                n /= pr;
                ++e;
            }
            if (e > 0) parts.push_back(power(std::to_string(pr), e, notation));
        }
        if (n > 1) parts.push_back(n.get_str());
    } else {
        parts.push_back(k.get_str());
    }
    // Within each x, alpha itself first, then (1+alpha), (2+alpha), ...
    std::vector<std::pair<BoxCoord, int>> ordered(f.factors.begin(), f.factors.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.first.x != b.first.x) return a.first.x < b.first.x;
        return a.first.y > b.first.y;
    });
    for (const auto& [pt, mult] : ordered) {
        std::string base = pt == BoxCoord{1, 0} ? alpha_symbol(notation)
                                                : "(" + to_string(bracket(pt), notation) + ")";
        parts.push_back(power(base, mult, notation));
    }
    if (parts.empty()) return sign + "1";
    std::string out = sign;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += times;
        out += parts[i];
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const AlphaPoly& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const AlphaRat& f) { return os << to_string(f); }

}  // namespace jack
