#include "rclean/quadratic.hpp"

#include <random>

#include "rclean/sampling.hpp"
#include "rclean/series.hpp"

namespace rclean {

namespace {

// Newton iteration x <- x - f(x)/f'(x) inside a residue ring. Each step
// doubles the p-adic precision of a simple root, so ceil(log2 k) + 1 steps
// reach the full modulus.
Elem newton_lift(const MonicQuadratic& q, Elem x) {
    const unsigned k = x.ring()->exponent();
    unsigned steps = 2;
    for (unsigned reach = 1; reach < k; reach *= 2) ++steps;
    for (unsigned i = 0; i < steps; ++i) {
        const Elem f = q.evaluate(x);
        if (f.is_zero()) return x;
        x = x - f * try_invert(q.derivative(x));
    }
    if (!q.evaluate(x).is_zero()) throw AlgebraError(ErrorKind::Internal, "Newton iteration did not converge");
    return x;
}

bool perfect_square(const mpz_class& n, mpz_class& root) {
    if (n < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& d) {
    mpz_class num_root, den_root;
    if (!perfect_square(d.get_num(), num_root) || !perfect_square(d.get_den(), den_root)) return std::nullopt;
    mpq_class r(num_root, den_root);
    r.canonicalize();
    return r;
}

bool in_localization(const mpq_class& q, const mpz_class& p) { return mpz_divisible_p(q.get_den().get_mpz_t(), p.get_mpz_t()) == 0; }

RootPair solve_zloc(const MonicQuadratic& q) {
    const RingPtr& ring = q.mu.ring();
    const mpq_class& mu = q.mu.fraction();
    const mpq_class& lam = q.lam.fraction();
    const auto s = rational_sqrt(mu * mu - 4 * lam);
    if (!s) throw AlgebraError(ErrorKind::NotSolvable, "discriminant is not a rational square");
    for (const mpq_class& candidate : {mpq_class((-mu + *s) / 2), mpq_class((-mu - *s) / 2)}) {
        if (!in_localization(candidate, ring->prime())) continue;
        Elem alpha = Elem::fraction(ring, candidate.get_num(), candidate.get_den());
        if (is_in_radical(alpha)) return {alpha, -q.mu - alpha};
    }
    throw AlgebraError(ErrorKind::NotSolvable, "no root in the maximal ideal of " + ring->to_string());
}

mpz_class tonelli_shanks(const mpz_class& n, const mpz_class& p) {
    mpz_class q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    mpz_class z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;

    auto powm = [&](const mpz_class& b, const mpz_class& e) {
        mpz_class r;
        mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    mpz_class c = powm(z, q);
    mpz_class r = powm(n, (q + 1) / 2);
    mpz_class t = powm(n, q);
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        mpz_class t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        mpz_class b = c;
        for (unsigned long j = 0; j + 1 < m - i; ++j) b = b * b % p;
        r = r * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return r;
}

// Square root in Z/p^k (p odd) of an arbitrary residue.
Elem residue_sqrt(const Elem& d) {
    const Ring& ring = *d.ring();
    const mpz_class& p = ring.prime();
    if (d.is_zero()) return d;

    mpz_class u = d.residue();
    unsigned e = 0;
    while (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t()) != 0) {
        u /= p;
        ++e;
    }
    if (e % 2 != 0) throw AlgebraError(ErrorKind::NotASquare, to_string(d) + " has odd valuation");
    const mpz_class u_mod_p = u % p;
    if (mpz_legendre(u_mod_p.get_mpz_t(), p.get_mpz_t()) != 1)
        throw AlgebraError(ErrorKind::NotASquare, to_string(d) + " is not a square mod " + p.get_str());

    mpz_class r = tonelli_shanks(u_mod_p, p);
    if (p - r < r) r = p - r;

    // Lift s^2 = u in Z/p^(k-e), then scale by p^(e/2).
    const auto reduced = Ring::zmod(p.get_ui(), ring.exponent() - e);
    const MonicQuadratic t2_minus_u{Elem::zero(reduced), -Elem::integer(reduced, u)};
    const Elem s = newton_lift(t2_minus_u, Elem::integer(reduced, r));
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), p.get_mpz_t(), e / 2);
    Elem root = Elem::integer(d.ring(), scale * s.residue());
    if (!(root * root == d)) throw AlgebraError(ErrorKind::Internal, "square root check failed");
    return root;
}

void check_root_pair(const MonicQuadratic& q, const RootPair& roots) {
    const bool ok = q.evaluate(roots.alpha).is_zero() && roots.alpha + roots.beta == -q.mu && roots.alpha * roots.beta == q.lam &&
                    is_in_radical(roots.alpha) && is_unit(roots.beta);
    if (!ok) throw AlgebraError(ErrorKind::Internal, "root pair failed verification");
}

}  // namespace

RootPair solve_split_quadratic(const MonicQuadratic& q) {
    if (!same_ring(q.mu.ring(), q.lam.ring())) throw AlgebraError(ErrorKind::RingMismatch, "quadratic coefficients from different rings");
    if (!is_unit(q.mu)) throw AlgebraError(ErrorKind::PreconditionViolated, "mu = " + to_string(q.mu) + " is not a unit");
    if (!is_in_radical(q.lam)) throw AlgebraError(ErrorKind::PreconditionViolated, "lambda = " + to_string(q.lam) + " is not radical");

    const RingPtr& ring = q.mu.ring();
    RootPair roots = [&]() -> RootPair {
        switch (ring->family()) {
            case Family::Zmod:
            case Family::Padic: {
                Elem alpha = newton_lift(q, Elem::zero(ring));
                return {alpha, -q.mu - alpha};
            }
            case Family::Zloc: return solve_zloc(q);
            case Family::Series: {
                const MonicQuadratic constant{q.mu.coeffs().front(), q.lam.coeffs().front()};
                const RootPair base = solve_split_quadratic(constant);
                Elem alpha = lift_root_recurrence(q.mu, q.lam, base.alpha);
                return {alpha, -q.mu - alpha};
            }
        }
        throw AlgebraError(ErrorKind::Internal, "unknown ring family");
    }();
    check_root_pair(q, roots);
    return roots;
}

Elem solve_x2_plus_x(const Elem& c) {
    if (!is_in_radical(c)) throw AlgebraError(ErrorKind::PreconditionViolated, "c = " + to_string(c) + " is not radical");
    // x^2 + x - c = 0 splits as x(x + 1) mod J.
    return solve_split_quadratic({Elem::one(c.ring()), -c}).alpha;
}

Elem discriminant_sqrt(const Elem& d) {
    const RingPtr& ring = d.ring();
    if (!ring->two_is_unit()) throw AlgebraError(ErrorKind::CharTwo, "2 is not a unit in " + ring->to_string());
    switch (ring->family()) {
        case Family::Zmod:
        case Family::Padic: return residue_sqrt(d);
        case Family::Zloc: {
            const auto s = rational_sqrt(d.fraction());
            if (!s) throw AlgebraError(ErrorKind::NotASquare, to_string(d) + " is not a rational square");
            return Elem::fraction(ring, s->get_num(), s->get_den());
        }
        case Family::Series: {
            if (d.is_zero()) return d;
            if (!is_unit(d)) throw AlgebraError(ErrorKind::PreconditionViolated, "square roots of non-unit series are not supported");
            const Elem s0 = discriminant_sqrt(d.coeffs().front());
            Elem root = lift_simple_root(Elem::zero(ring), -d, s0);
            if (!(root * root == d)) throw AlgebraError(ErrorKind::Internal, "square root check failed");
            return root;
        }
    }
    throw AlgebraError(ErrorKind::Internal, "unknown ring family");
}

std::vector<Elem> roots_by_enumeration(const MonicQuadratic& q) {
    const RingPtr& ring = q.mu.ring();
    if (ring->family() != Family::Zmod) throw AlgebraError(ErrorKind::PreconditionViolated, "enumeration needs a Zmod ring");
    if (ring->modulus() > (1L << 20)) throw AlgebraError(ErrorKind::BudgetExceeded, "ring too large to enumerate");
    std::vector<Elem> roots;
    const long n = ring->modulus().get_si();
    for (long x = 0; x < n; ++x) {
        Elem t = Elem::integer(ring, x);
        if (q.evaluate(t).is_zero()) roots.push_back(std::move(t));
    }
    return roots;
}

std::string to_string(SolvabilityStatus status) {
    switch (status) {
        case SolvabilityStatus::Holds: return "Holds";
        case SolvabilityStatus::HoldsOnSample: return "HoldsOnSample";
        case SolvabilityStatus::Counterexample: return "Counterexample";
    }
    return {};
}

namespace {

SolvabilityVerdict counterexample(std::size_t checked, std::string why, Elem lam, Elem mu) {
    return {SolvabilityStatus::Counterexample, checked, std::move(why), std::move(lam), std::move(mu)};
}

SolvabilityVerdict exhaustive_zmod(const RingPtr& ring, std::size_t budget) {
    const long n = ring->modulus().get_si();
    const long p = ring->prime().get_si();
    const auto pairs = static_cast<std::size_t>(n / p) * static_cast<std::size_t>(n - n / p);
    if (pairs > budget)
        throw AlgebraError(ErrorKind::BudgetExceeded, std::to_string(pairs) + " (lambda, mu) pairs exceed budget " + std::to_string(budget));
    std::size_t checked = 0;
    for (long lam = 0; lam < n; lam += p) {
        for (long mu = 1; mu < n; ++mu) {
            if (mu % p == 0) continue;
            const MonicQuadratic q{Elem::integer(ring, mu), Elem::integer(ring, lam)};
            ++checked;
            if (roots_by_enumeration(q).empty())
                return counterexample(checked, "no root found by enumeration", q.lam, q.mu);
        }
    }
    return {SolvabilityStatus::Holds, checked, "exhaustive over all (lambda, mu) in J x U", {}, {}};
}

// Pairs (lambda, mu) = (p*a, m) with integer a, m and p not dividing m, in
// order of height max(|a|, |m|); within a height a runs 0, 1, -1, 2, -2, ...
// and m runs 1, -1, 2, -2, ...
SolvabilityVerdict sampled_zloc(const RingPtr& ring, std::size_t budget) {
    const long p = ring->prime().get_si();
    auto signed_seq = [](long i) { return i % 2 == 1 ? (i + 1) / 2 : -(i / 2); };  // 1 -> 1, 2 -> -1, ...
    std::size_t checked = 0;
    for (long h = 1; checked < budget; ++h) {
        for (long ai = 0; ai <= 2 * h && checked < budget; ++ai) {
            const long a = ai == 0 ? 0 : signed_seq(ai);
            for (long mi = 1; mi <= 2 * h && checked < budget; ++mi) {
                const long m = signed_seq(mi);
                if (std::max(std::labs(a), std::labs(m)) != h || m % p == 0) continue;
                const MonicQuadratic q{Elem::integer(ring, m), Elem::integer(ring, p * a)};
                ++checked;
                try {
                    solve_split_quadratic(q);
                } catch (const AlgebraError& e) {
                    if (e.kind() != ErrorKind::NotSolvable) throw;
                    return counterexample(checked, "discriminant mu^2 - 4 lambda is not a rational square", q.lam, q.mu);
                }
            }
        }
    }
    return {SolvabilityStatus::HoldsOnSample, checked, "no counterexample among the smallest-height pairs", {}, {}};
}

SolvabilityVerdict sampled_series(const RingPtr& ring, std::size_t budget) {
    std::mt19937_64 rng(0x5eed5e7u);
    for (std::size_t i = 0; i < budget; ++i) {
        const MonicQuadratic q{random_unit(ring, rng), random_radical(ring, rng)};
        try {
            solve_split_quadratic(q);
        } catch (const AlgebraError& e) {
            if (e.kind() != ErrorKind::NotSolvable) throw;
            return counterexample(i + 1, "base quadratic has no root", q.lam, q.mu);
        }
    }
    return {SolvabilityStatus::HoldsOnSample, budget, "pseudo-random pairs, each root lifted and verified", {}, {}};
}

}  // namespace

SolvabilityVerdict solvable_for_all(const RingPtr& ring, std::size_t budget) {
    switch (ring->family()) {
        case Family::Zmod: return exhaustive_zmod(ring, budget);
        case Family::Padic:
            return {SolvabilityStatus::Holds, 0, "Hensel: t(t + mu) has the simple root 0 mod p for every mu in U, lambda in J", {}, {}};
        case Family::Zloc: return sampled_zloc(ring, budget);
        case Family::Series: return sampled_series(ring, budget);
    }
    throw AlgebraError(ErrorKind::Internal, "unknown ring family");
}

}  // namespace rclean
