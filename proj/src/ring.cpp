#include "rclean/ring.hpp"

#include <cctype>
#include <charconv>
#include <utility>

namespace rclean {

namespace {

bool is_prime(const mpz_class& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

mpz_class pow_ui(const mpz_class& base, unsigned e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

mpz_class mod_floor(const mpz_class& v, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool divisible(const mpz_class& v, const mpz_class& p) { return mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t()) != 0; }

[[noreturn]] void spec_error(std::string_view spec, const std::string& why) {
    throw AlgebraError(ErrorKind::InvalidRingSpec, "'" + std::string(spec) + "': " + why);
}

unsigned parse_small(std::string_view text, std::string_view spec) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) spec_error(spec, "expected a positive integer, got '" + std::string(text) + "'");
    return v;
}

mpz_class parse_big(std::string_view text, std::string_view spec) {
    if (text.empty()) spec_error(spec, "missing integer");
    for (char ch : text)
        if (!std::isdigit(static_cast<unsigned char>(ch))) spec_error(spec, "expected digits, got '" + std::string(text) + "'");
    return mpz_class(std::string(text));
}

}  // namespace

Ring::Ring(Key, Family family, mpz_class p, unsigned exponent, RingPtr base, unsigned order)
    : family_(family), p_(std::move(p)), exponent_(exponent), base_(std::move(base)), order_(order) {
    if (family_ == Family::Zmod || family_ == Family::Padic) modulus_ = pow_ui(p_, exponent_);
}

RingPtr Ring::zmod(const mpz_class& modulus) {
    if (modulus < 2) throw AlgebraError(ErrorKind::InvalidRingSpec, "Zmod modulus must be a prime power >= 2");
    const auto bits = static_cast<unsigned>(mpz_sizeinbase(modulus.get_mpz_t(), 2));
    for (unsigned k = bits; k >= 1; --k) {
        mpz_class root;
        if (mpz_root(root.get_mpz_t(), modulus.get_mpz_t(), k) != 0 && is_prime(root))
            return std::make_shared<const Ring>(Key{}, Family::Zmod, root, k, nullptr, 0);
    }
    throw AlgebraError(ErrorKind::InvalidRingSpec, "Zmod modulus " + modulus.get_str() + " is not a prime power");
}

RingPtr Ring::zmod(unsigned long p, unsigned k) {
    if (!is_prime(mpz_class(p))) throw AlgebraError(ErrorKind::InvalidRingSpec, std::to_string(p) + " is not prime");
    if (k < 1) throw AlgebraError(ErrorKind::InvalidRingSpec, "Zmod exponent must be >= 1");
    return std::make_shared<const Ring>(Key{}, Family::Zmod, mpz_class(p), k, nullptr, 0);
}

RingPtr Ring::zloc(unsigned long p) {
    if (!is_prime(mpz_class(p))) throw AlgebraError(ErrorKind::InvalidRingSpec, std::to_string(p) + " is not prime");
    return std::make_shared<const Ring>(Key{}, Family::Zloc, mpz_class(p), 0, nullptr, 0);
}

RingPtr Ring::padic(unsigned long p, unsigned prec) {
    if (!is_prime(mpz_class(p))) throw AlgebraError(ErrorKind::InvalidRingSpec, std::to_string(p) + " is not prime");
    if (prec < 1) throw AlgebraError(ErrorKind::InvalidRingSpec, "Padic precision must be >= 1");
    return std::make_shared<const Ring>(Key{}, Family::Padic, mpz_class(p), prec, nullptr, 0);
}

RingPtr Ring::series(RingPtr base, unsigned order) {
    if (!base) throw AlgebraError(ErrorKind::InvalidRingSpec, "Series needs a base ring");
    if (order < 1) throw AlgebraError(ErrorKind::InvalidRingSpec, "Series order must be >= 1");
    mpz_class p = base->prime();
    return std::make_shared<const Ring>(Key{}, Family::Series, std::move(p), 0, std::move(base), order);
}

RingPtr Ring::parse(std::string_view spec) {
    auto trimmed = spec;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);

    if (trimmed.starts_with("Series(")) {
        if (!trimmed.ends_with(")")) spec_error(spec, "missing ')'");
        auto inner = trimmed.substr(7, trimmed.size() - 8);
        // The order follows the last top-level ';'.
        int depth = 0;
        std::size_t split = std::string_view::npos;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            else if (inner[i] == ')') --depth;
            else if (inner[i] == ';' && depth == 0) split = i;
        }
        if (split == std::string_view::npos) spec_error(spec, "expected Series(<spec>;<order>)");
        auto base = parse(inner.substr(0, split));
        return series(std::move(base), parse_small(inner.substr(split + 1), spec));
    }

    auto colon = trimmed.find(':');
    if (colon == std::string_view::npos) spec_error(spec, "unknown ring family");
    auto family = trimmed.substr(0, colon);
    auto rest = trimmed.substr(colon + 1);
    if (family == "Zmod") return zmod(parse_big(rest, spec));
    if (family == "Zloc") return zloc(parse_small(rest, spec));
    if (family == "Padic") {
        auto second = rest.find(':');
        if (second == std::string_view::npos) spec_error(spec, "expected Padic:<p>:<prec>");
        return padic(parse_small(rest.substr(0, second), spec), parse_small(rest.substr(second + 1), spec));
    }
    spec_error(spec, "unknown ring family '" + std::string(family) + "'");
}

unsigned Ring::series_depth() const noexcept { return family_ == Family::Series ? 1 + base_->series_depth() : 0; }

const Ring& Ring::scalar_base() const noexcept { return family_ == Family::Series ? base_->scalar_base() : *this; }

std::string Ring::to_string() const {
    switch (family_) {
        case Family::Zmod: return "Zmod:" + modulus_.get_str();
        case Family::Zloc: return "Zloc:" + p_.get_str();
        case Family::Padic: return "Padic:" + p_.get_str() + ":" + std::to_string(exponent_);
        case Family::Series: return "Series(" + base_->to_string() + ";" + std::to_string(order_) + ")";
    }
    return {};
}

bool operator==(const Ring& lhs, const Ring& rhs) {
    if (&lhs == &rhs) return true;
    if (lhs.family_ != rhs.family_ || lhs.p_ != rhs.p_ || lhs.exponent_ != rhs.exponent_ || lhs.order_ != rhs.order_) return false;
    if (lhs.family_ == Family::Series) return *lhs.base_ == *rhs.base_;
    return true;
}

bool same_ring(const RingPtr& lhs, const RingPtr& rhs) { return lhs == rhs || *lhs == *rhs; }

namespace {

void require_same_ring(const Elem& a, const Elem& b) {
    if (same_ring(a.ring(), b.ring())) return;
    const Ring& ra = *a.ring();
    const Ring& rb = *b.ring();
    if (ra.family() == Family::Padic && rb.family() == Family::Padic && ra.prime() == rb.prime())
        throw AlgebraError(ErrorKind::PrecisionMismatch, ra.to_string() + " vs " + rb.to_string());
    throw AlgebraError(ErrorKind::RingMismatch, ra.to_string() + " vs " + rb.to_string());
}

}  // namespace

Elem::Elem(RingPtr ring, std::variant<mpz_class, mpq_class, Coeffs> rep) : ring_(std::move(ring)), rep_(std::move(rep)) {}

Elem Elem::integer(RingPtr ring, const mpz_class& value) {
    switch (ring->family()) {
        case Family::Zmod:
        case Family::Padic: {
            auto r = mod_floor(value, ring->modulus());
            return Elem(std::move(ring), std::move(r));
        }
        case Family::Zloc: return Elem(std::move(ring), mpq_class(value));
        case Family::Series: {
            Coeffs coeffs;
            coeffs.reserve(ring->order());
            coeffs.push_back(integer(ring->base(), value));
            for (unsigned i = 1; i < ring->order(); ++i) coeffs.push_back(zero(ring->base()));
            return Elem(std::move(ring), std::move(coeffs));
        }
    }
    throw AlgebraError(ErrorKind::Internal, "unknown ring family");
}

Elem Elem::fraction(RingPtr ring, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw AlgebraError(ErrorKind::ParseError, "zero denominator");
    if (ring->scalar_base().family() != Family::Zloc)
        throw AlgebraError(ErrorKind::ParseError, "fractions are only valid in Zloc, not " + ring->to_string());
    if (divisible(den, ring->prime()))
        throw AlgebraError(ErrorKind::DenominatorNotUnit, "denominator " + den.get_str() + " is divisible by " + ring->prime().get_str());
    if (ring->family() == Family::Series) {
        Coeffs coeffs;
        coeffs.push_back(fraction(ring->base(), num, den));
        return series(std::move(ring), std::move(coeffs));
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Elem(std::move(ring), std::move(q));
}

Elem Elem::series(RingPtr ring, Coeffs coeffs) {
    if (ring->family() != Family::Series) throw AlgebraError(ErrorKind::RingMismatch, "coefficient vector given for " + ring->to_string());
    for (const auto& c : coeffs)
        if (!same_ring(c.ring(), ring->base()))
            throw AlgebraError(ErrorKind::RingMismatch, "coefficient in " + c.ring()->to_string() + ", expected " + ring->base()->to_string());
    coeffs.resize(ring->order(), zero(ring->base()));
    return Elem(std::move(ring), std::move(coeffs));
}

const mpz_class& Elem::residue() const {
    if (auto* r = std::get_if<mpz_class>(&rep_)) return *r;
    throw AlgebraError(ErrorKind::RingMismatch, "residue() on " + ring_->to_string());
}

const mpq_class& Elem::fraction() const {
    if (auto* q = std::get_if<mpq_class>(&rep_)) return *q;
    throw AlgebraError(ErrorKind::RingMismatch, "fraction() on " + ring_->to_string());
}

const Elem::Coeffs& Elem::coeffs() const {
    if (auto* c = std::get_if<Coeffs>(&rep_)) return *c;
    throw AlgebraError(ErrorKind::RingMismatch, "coeffs() on " + ring_->to_string());
}

bool Elem::is_zero() const {
    switch (ring_->family()) {
        case Family::Zmod:
        case Family::Padic: return residue() == 0;
        case Family::Zloc: return fraction() == 0;
        case Family::Series:
            for (const auto& c : coeffs())
                if (!c.is_zero()) return false;
            return true;
    }
    return false;
}

bool operator==(const Elem& lhs, const Elem& rhs) { return same_ring(lhs.ring_, rhs.ring_) && lhs.rep_ == rhs.rep_; }

Elem arith(ArithOp op, const Elem& a, const Elem& b) {
    if (op != ArithOp::Neg) require_same_ring(a, b);
    const RingPtr& ring = a.ring();
    switch (ring->family()) {
        case Family::Zmod:
        case Family::Padic: {
            mpz_class r;
            switch (op) {
                case ArithOp::Add: r = a.residue() + b.residue(); break;
                case ArithOp::Sub: r = a.residue() - b.residue(); break;
                case ArithOp::Mul: r = a.residue() * b.residue(); break;
                case ArithOp::Neg: r = -a.residue(); break;
            }
            return Elem::integer(ring, r);
        }
        case Family::Zloc: {
            mpq_class r;
            switch (op) {
                case ArithOp::Add: r = a.fraction() + b.fraction(); break;
                case ArithOp::Sub: r = a.fraction() - b.fraction(); break;
                case ArithOp::Mul: r = a.fraction() * b.fraction(); break;
                case ArithOp::Neg: r = -a.fraction(); break;
            }
            return Elem::fraction(ring, r.get_num(), r.get_den());
        }
        case Family::Series: {
            const auto& x = a.coeffs();
            const auto m = x.size();
            Elem::Coeffs out;
            out.reserve(m);
            if (op == ArithOp::Neg) {
                for (const auto& c : x) out.push_back(-c);
            } else if (op == ArithOp::Mul) {
                const auto& y = b.coeffs();
                for (std::size_t k = 0; k < m; ++k) {
                    Elem acc = x[0] * y[k];
                    for (std::size_t i = 1; i <= k; ++i) acc = acc + x[i] * y[k - i];
                    out.push_back(std::move(acc));
                }
            } else {
                const auto& y = b.coeffs();
                for (std::size_t i = 0; i < m; ++i) out.push_back(op == ArithOp::Add ? x[i] + y[i] : x[i] - y[i]);
            }
            return Elem::series(ring, std::move(out));
        }
    }
    throw AlgebraError(ErrorKind::Internal, "unknown ring family");
}

Elem operator+(const Elem& a, const Elem& b) { return arith(ArithOp::Add, a, b); }
Elem operator-(const Elem& a, const Elem& b) { return arith(ArithOp::Sub, a, b); }
Elem operator*(const Elem& a, const Elem& b) { return arith(ArithOp::Mul, a, b); }
Elem operator-(const Elem& a) { return arith(ArithOp::Neg, a, a); }

bool is_unit(const Elem& a) {
    const Ring& ring = *a.ring();
    switch (ring.family()) {
        case Family::Zmod:
        case Family::Padic: {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.residue().get_mpz_t(), ring.modulus().get_mpz_t());
            return g == 1;
        }
        case Family::Zloc: return !divisible(a.fraction().get_num(), ring.prime());
        case Family::Series: return is_unit(a.coeffs().front());
    }
    return false;
}

bool is_in_radical(const Elem& a) {
    const Ring& ring = *a.ring();
    switch (ring.family()) {
        case Family::Zmod:
        case Family::Padic: return divisible(a.residue(), ring.prime());
        case Family::Zloc: return divisible(a.fraction().get_num(), ring.prime());
        case Family::Series: return is_in_radical(a.coeffs().front());
    }
    return false;
}

Elem try_invert(const Elem& a) {
    if (!is_unit(a)) throw AlgebraError(ErrorKind::NotAUnit, to_string(a) + " in " + a.ring()->to_string());
    const RingPtr& ring = a.ring();
    switch (ring->family()) {
        case Family::Zmod:
        case Family::Padic: {
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), a.residue().get_mpz_t(), ring->modulus().get_mpz_t());
            return Elem::integer(ring, inv);
        }
        case Family::Zloc: {
            const auto& q = a.fraction();
            return Elem::fraction(ring, q.get_den(), q.get_num());
        }
        case Family::Series: {
            const auto& c = a.coeffs();
            const Elem c0_inv = try_invert(c[0]);
            Elem::Coeffs b{c0_inv};
            for (std::size_t k = 1; k < c.size(); ++k) {
                Elem acc = c[1] * b[k - 1];
                for (std::size_t i = 2; i <= k; ++i) acc = acc + c[i] * b[k - i];
                b.push_back(-(c0_inv * acc));
            }
            return Elem::series(ring, std::move(b));
        }
    }
    throw AlgebraError(ErrorKind::Internal, "unknown ring family");
}

namespace {

class LiteralParser {
public:
    explicit LiteralParser(std::string_view text) : text_(text) {}

    Elem parse_all(const RingPtr& ring) {
        Elem e = literal(ring);
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw AlgebraError(ErrorKind::ParseError, why + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char ch) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == ch;
    }

    mpz_class digits() {
        const auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    Elem literal(const RingPtr& ring) {
        if (peek('[')) {
            if (ring->family() != Family::Series) fail("series literal in non-series ring " + ring->to_string());
            ++pos_;
            Elem::Coeffs coeffs;
            coeffs.push_back(literal(ring->base()));
            while (peek(',')) {
                ++pos_;
                coeffs.push_back(literal(ring->base()));
            }
            if (!peek(']')) fail("expected ']'");
            ++pos_;
            return Elem::series(ring, std::move(coeffs));
        }
        skip_space();
        bool negative = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        mpz_class num = digits();
        if (negative) num = -num;
        if (peek('/')) {
            ++pos_;
            skip_space();
            const auto den_pos = pos_;
            mpz_class den = digits();
            if (den == 0) {
                pos_ = den_pos;
                fail("zero denominator");
            }
            if (ring->scalar_base().family() != Family::Zloc) fail("fraction literal outside Zloc");
            return Elem::fraction(ring, num, den);
        }
        return Elem::integer(ring, num);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Elem parse_elem(std::string_view text, const RingPtr& ring) { return LiteralParser(text).parse_all(ring); }

std::string to_string(const Elem& a) {
    switch (a.ring()->family()) {
        case Family::Zmod:
        case Family::Padic: return a.residue().get_str();
        case Family::Zloc: return a.fraction().get_str();
        case Family::Series: {
            std::string out = "[";
            bool first = true;
            for (const auto& c : a.coeffs()) {
                if (!first) out += ',';
                out += to_string(c);
                first = false;
            }
            return out + "]";
        }
    }
    return {};
}

}  // namespace rclean
