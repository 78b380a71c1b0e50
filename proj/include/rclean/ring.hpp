#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rclean/error.hpp"

namespace rclean {

enum class Family { Zmod, Zloc, Padic, Series };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A concrete commutative local ring.
///
///   Zmod    Z/p^k
///   Zloc    Z localized at the prime ideal (p)
///   Padic   p-adic integers carried modulo p^prec
///   Series  R[[x]]/(x^m) over another ring from this list
///
/// Rings are immutable and shared by every element that lives in them.
/// Two rings are equal when their descriptions are equal; pointer identity
/// is only a fast path.
class Ring {
    struct Key {};

public:
    static RingPtr zmod(const mpz_class& modulus);
    static RingPtr zmod(unsigned long p, unsigned k);
    static RingPtr zloc(unsigned long p);
    static RingPtr padic(unsigned long p, unsigned prec);
    static RingPtr series(RingPtr base, unsigned order);

    /// Parses `Zmod:<m>`, `Zloc:<p>`, `Padic:<p>:<prec>` or `Series(<spec>;<m>)`.
    static RingPtr parse(std::string_view spec);

    Ring(Key, Family family, mpz_class p, unsigned exponent, RingPtr base, unsigned order);

    Family family() const noexcept { return family_; }
    /// Residue characteristic. For Series this is the prime of the scalar base.
    const mpz_class& prime() const noexcept { return p_; }
    /// k for Zmod, prec for Padic, 0 otherwise.
    unsigned exponent() const noexcept { return exponent_; }
    /// p^k or p^prec; 0 for Zloc and Series.
    const mpz_class& modulus() const noexcept { return modulus_; }
    const RingPtr& base() const noexcept { return base_; }
    unsigned order() const noexcept { return order_; }

    bool is_residue_ring() const noexcept { return family_ == Family::Zmod || family_ == Family::Padic; }
    bool two_is_unit() const { return p_ != 2; }
    /// Number of nested Series layers above the scalar base.
    unsigned series_depth() const noexcept;
    const Ring& scalar_base() const noexcept;

    std::string to_string() const;

    friend bool operator==(const Ring& lhs, const Ring& rhs);

private:
    Family family_;
    mpz_class p_;
    unsigned exponent_;
    mpz_class modulus_;
    RingPtr base_;
    unsigned order_;
};

bool same_ring(const RingPtr& lhs, const RingPtr& rhs);

/// One element of a Ring in canonical form: residue in [0, modulus) for
/// Zmod/Padic, a reduced fraction with p-free denominator for Zloc, and
/// exactly order() base coefficients for Series.
class Elem {
public:
    using Coeffs = std::vector<Elem>;

    static Elem integer(RingPtr ring, const mpz_class& value);
    static Elem integer(RingPtr ring, long value) { return integer(std::move(ring), mpz_class(value)); }
    /// Zloc only, or a Series whose scalar base is Zloc (embedded as a constant).
    static Elem fraction(RingPtr ring, const mpz_class& num, const mpz_class& den);
    /// Series only; shorter vectors are zero-padded, longer ones truncated.
    static Elem series(RingPtr ring, Coeffs coeffs);

    static Elem zero(RingPtr ring) { return integer(std::move(ring), 0L); }
    static Elem one(RingPtr ring) { return integer(std::move(ring), 1L); }

    const RingPtr& ring() const noexcept { return ring_; }
    const mpz_class& residue() const;
    const mpq_class& fraction() const;
    const Coeffs& coeffs() const;

    bool is_zero() const;

    friend bool operator==(const Elem& lhs, const Elem& rhs);

private:
    Elem(RingPtr ring, std::variant<mpz_class, mpq_class, Coeffs> rep);

    RingPtr ring_;
    std::variant<mpz_class, mpq_class, Coeffs> rep_;
};

enum class ArithOp { Add, Sub, Mul, Neg };

/// Neg ignores `b`.
Elem arith(ArithOp op, const Elem& a, const Elem& b);

Elem operator+(const Elem& a, const Elem& b);
Elem operator-(const Elem& a, const Elem& b);
Elem operator*(const Elem& a, const Elem& b);
Elem operator-(const Elem& a);

bool is_unit(const Elem& a);
bool is_in_radical(const Elem& a);
Elem try_invert(const Elem& a);

/// Element literal: integer, `n/d` (Zloc), `[c0,c1,...]` (Series).
Elem parse_elem(std::string_view text, const RingPtr& ring);
std::string to_string(const Elem& a);

}  // namespace rclean
