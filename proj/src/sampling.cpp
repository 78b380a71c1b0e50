#include "rclean/sampling.hpp"

namespace rclean {

namespace {

mpz_class uniform_below(const mpz_class& bound, std::mt19937_64& rng) {
    const auto words = mpz_sizeinbase(bound.get_mpz_t(), 2) / 64 + 2;
    mpz_class acc = 0;
    for (std::size_t i = 0; i < words; ++i) {
        acc <<= 64;
        acc += mpz_class(static_cast<unsigned long>(rng()));
    }
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(), bound.get_mpz_t());
    return r;
}

}  // namespace

Elem random_elem(const RingPtr& ring, std::mt19937_64& rng) {
    switch (ring->family()) {
        case Family::Zmod:
        case Family::Padic: return Elem::integer(ring, uniform_below(ring->modulus(), rng));
        case Family::Zloc: {
            std::uniform_int_distribution<long> num(-60, 60);
            std::uniform_int_distribution<long> den(1, 24);
            long d = den(rng);
            while (mpz_class(d) % ring->prime() == 0) d = den(rng);
            return Elem::fraction(ring, mpz_class(num(rng)), mpz_class(d));
        }
        case Family::Series: {
            Elem::Coeffs coeffs;
            for (unsigned i = 0; i < ring->order(); ++i) coeffs.push_back(random_elem(ring->base(), rng));
            return Elem::series(ring, std::move(coeffs));
        }
    }
    throw AlgebraError(ErrorKind::Internal, "unknown ring family");
}

Elem random_unit(const RingPtr& ring, std::mt19937_64& rng) {
    Elem x = random_elem(ring, rng);
    // 1 + J(R) consists of units.
    return is_unit(x) ? x : x + Elem::one(ring);
}

Elem random_radical(const RingPtr& ring, std::mt19937_64& rng) {
    if (ring->family() == Family::Series) {
        Elem::Coeffs coeffs{random_radical(ring->base(), rng)};
        for (unsigned i = 1; i < ring->order(); ++i) coeffs.push_back(random_elem(ring->base(), rng));
        return Elem::series(ring, std::move(coeffs));
    }
    return Elem::integer(ring, ring->prime()) * random_elem(ring, rng);
}

}  // namespace rclean
