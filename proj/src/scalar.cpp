#include <colorhom/scalar.hpp>

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace colorhom {

namespace {

// Dense polynomials over Q, coefficient index = power, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Euclidean division a = q*b + r, deg r < deg b. b must be nonzero.
void divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
    if (b.empty()) throw std::runtime_error("polynomial division by zero");
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);  // removes the cancelled leading term, so the loop makes progress
    }
    trim(q);
    r = std::move(a);
}

Poly poly_mod(const Poly& a, const Poly& m) {
    Poly q, r;
    divmod(a, m, q, r);
    return r;
}

// Extended Euclid: returns g (a constant for coprime inputs) and s with
// s*a + t*m = g; t is not needed by callers.
void ext_gcd(Poly a, Poly m, Poly& g, Poly& s) {
    Poly r0 = std::move(a), r1 = std::move(m);
    Poly s0 = {Rational(1)}, s1 = {};
    while (!r1.empty()) {
        Poly q, r;
        divmod(r0, r1, q, r);
        Poly s2 = s0;
        // s2 = s0 - q*s1
        Poly qs = mul(q, s1);
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    g = std::move(r0);
    s = std::move(s0);
}

Poly x_pow_minus_one(std::int64_t n) {
    Poly p(static_cast<std::size_t>(n) + 1, Rational(0));
    p[0] = Rational(-1);
    p.back() = Rational(1);
    return p;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(std::int64_t n) {
    if (n < 1) throw std::runtime_error("cyclotomic_polynomial: order must be >= 1");
    static std::map<std::int64_t, Poly> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up so the
    // recursion never re-enters the lock.
    for (std::int64_t m = 1; m <= n; ++m) {
        if (n % m != 0 || cache.count(m)) continue;
        Poly num = x_pow_minus_one(m);
        for (std::int64_t d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            Poly q, r;
            divmod(num, cache.at(d), q, r);
            if (!r.empty()) throw std::runtime_error("cyclotomic_polynomial: non-exact division");
            num = std::move(q);
        }
        cache.emplace(m, std::move(num));
    }
    return cache.at(n);
}

std::int64_t euler_phi(std::int64_t n) {
    return static_cast<std::int64_t>(cyclotomic_polynomial(n).size()) - 1;
}

Scalar::Scalar() : root_order_(1), coeffs_(1, Rational(0)) {}

Scalar::Scalar(const Rational& value, std::int64_t root_order)
    : root_order_(root_order), coeffs_(static_cast<std::size_t>(euler_phi(root_order)), Rational(0)) {
    coeffs_[0] = value;
}

Scalar Scalar::zero(std::int64_t root_order) { return Scalar(Rational(0), root_order); }
Scalar Scalar::one(std::int64_t root_order) { return Scalar(Rational(1), root_order); }
Scalar Scalar::of_int(std::int64_t value, std::int64_t root_order) {
    return Scalar(Rational(value), root_order);
}

Scalar Scalar::root_of_unity(std::int64_t root_order, std::int64_t k) {
    k %= root_order;
    if (k < 0) k += root_order;
    Poly p(static_cast<std::size_t>(k) + 1, Rational(0));
    p.back() = Rational(1);
    Poly r = poly_mod(p, cyclotomic_polynomial(root_order));
    Scalar s = Scalar::zero(root_order);
    for (std::size_t i = 0; i < r.size(); ++i) s.coeffs_[i] = r[i];
    return s;
}

bool Scalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

void Scalar::require_same_order(const Scalar& rhs) const {
    if (root_order_ != rhs.root_order_) {
        std::ostringstream os;
        os << "scalar root order mismatch: " << root_order_ << " vs " << rhs.root_order_;
        throw std::runtime_error(os.str());
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_order(rhs);
    Poly a(coeffs_.begin(), coeffs_.end());
    Poly b(rhs.coeffs_.begin(), rhs.coeffs_.end());
    trim(a);
    trim(b);
    Poly r = poly_mod(mul(a, b), cyclotomic_polynomial(root_order_));
    for (auto& c : coeffs_) c = 0;
    for (std::size_t i = 0; i < r.size(); ++i) coeffs_[i] = r[i];
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::runtime_error("scalar inverse of zero");
    Poly a(coeffs_.begin(), coeffs_.end());
    trim(a);
    Poly g, s;
    ext_gcd(a, cyclotomic_polynomial(root_order_), g, s);
    // Phi_N is irreducible over Q, so the gcd with a nonzero residue is a
    // nonzero constant.
    if (g.size() != 1) throw std::runtime_error("scalar inverse: non-constant gcd");
    Scalar r = Scalar::zero(root_order_);
    Poly sr = poly_mod(s, cyclotomic_polynomial(root_order_));
    for (std::size_t i = 0; i < sr.size(); ++i) r.coeffs_[i] = sr[i] / g[0];
    return r;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_order(rhs);
    return *this *= rhs.inverse();
}

bool Scalar::operator==(const Scalar& rhs) const {
    return root_order_ == rhs.root_order_ && coeffs_ == rhs.coeffs_;
}

Scalar Scalar::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this;
    Scalar acc = Scalar::one(root_order_);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string Scalar::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << rat_to_string(mag);
        } else {
            if (mag != 1) os << rat_to_string(mag) << "*";
            os << "w";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

namespace {

struct LiteralParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit LiteralParser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "bad scalar literal at column " << pos + 1 << ": " << what << " in \"" << text << "\"";
        throw std::runtime_error(os.str());
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Int integer() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return Int(text.substr(start, pos - start));
    }

    Rational coefficient() {
        Int num = integer();
        skip_ws();
        if (eat('/')) {
            skip_ws();
            Int den = integer();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    // coefficient, power of w, or coefficient*w^k
    void term(bool negative, Scalar& acc, std::int64_t root_order) {
        Rational coeff(1);
        bool have_coeff = false;
        std::int64_t power = 0;
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = coefficient();
            have_coeff = true;
            skip_ws();
            if (eat('*')) {
                skip_ws();
                if (!eat('w')) fail("expected w after *");
                power = 1;
            }
        } else if (pos < text.size() && text[pos] == 'w') {
            ++pos;
            power = 1;
        } else {
            fail("expected coefficient or w");
        }
        if (power == 1) {
            if (eat('^')) {
                skip_ws();
                Int e = integer();
                if (e > 1000000) fail("exponent too large");
                power = e.convert_to<std::int64_t>();
            }
        } else if (have_coeff && pos < text.size() && text[pos] == 'w') {
            fail("missing * before w");
        }
        Scalar t = Scalar(negative ? Rational(-coeff) : coeff, root_order);
        if (power != 0) t *= Scalar::root_of_unity(root_order, power);
        acc += t;
    }
};

}  // namespace

Scalar Scalar::parse(const std::string& text, std::int64_t root_order) {
    LiteralParser p(text);
    Scalar acc = Scalar::zero(root_order);
    p.skip_ws();
    if (p.pos == text.size()) p.fail("empty literal");
    bool negative = p.eat('-');
    p.term(negative, acc, root_order);
    p.skip_ws();
    while (p.pos < text.size()) {
        bool neg;
        if (p.eat('+')) neg = false;
        else if (p.eat('-')) neg = true;
        else p.fail("expected + or -");
        p.term(neg, acc, root_order);
        p.skip_ws();
    }
    return acc;
}

}  // namespace colorhom
