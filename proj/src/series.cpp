#include "rclean/series.hpp"

namespace rclean {

namespace {

void require_series(const RingPtr& ring) {
    if (ring->family() != Family::Series) throw AlgebraError(ErrorKind::RingMismatch, ring->to_string() + " is not a series ring");
}

}  // namespace

Mat2 evaluate_at_zero(const Mat2& a) {
    require_series(a.ring());
    return {a.a.coeffs().front(), a.b.coeffs().front(), a.c.coeffs().front(), a.d.coeffs().front()};
}

SeriesMembership series_membership(const Mat2& a) {
    const Mat2 at_zero = evaluate_at_zero(a);
    return {is_gl2(at_zero), is_in_radical_m2(at_zero)};
}

Elem truncate_series(const Elem& s, unsigned order) {
    require_series(s.ring());
    if (order > s.ring()->order()) throw AlgebraError(ErrorKind::PreconditionViolated, "cannot truncate to a higher order");
    const auto& c = s.coeffs();
    return Elem::series(Ring::series(s.ring()->base(), order), Elem::Coeffs(c.begin(), c.begin() + order));
}

Mat2 truncate_series(const Mat2& a, unsigned order) {
    return {truncate_series(a.a, order), truncate_series(a.b, order), truncate_series(a.c, order), truncate_series(a.d, order)};
}

Elem lift_simple_root(const Elem& mu, const Elem& lam, const Elem& b0) {
    require_series(mu.ring());
    if (!same_ring(mu.ring(), lam.ring()) || !same_ring(mu.ring()->base(), b0.ring()))
        throw AlgebraError(ErrorKind::RingMismatch, "lift operands from different rings");
    const auto& m = mu.coeffs();
    const auto& l = lam.coeffs();
    if (!(b0 * b0 + m[0] * b0 + l[0]).is_zero())
        throw AlgebraError(ErrorKind::PreconditionViolated, to_string(b0) + " is not a root of the constant-term quadratic");
    const Elem slope = b0 + b0 + m[0];
    if (!is_unit(slope)) throw AlgebraError(ErrorKind::NotSimpleRoot, "2*b0 + mu_0 = " + to_string(slope) + " is not a unit");
    const Elem slope_inv = try_invert(slope);

    Elem::Coeffs b{b0};
    for (std::size_t k = 1; k < m.size(); ++k) {
        Elem rhs = -l[k];
        for (std::size_t i = 1; i <= k; ++i) rhs = rhs - m[i] * b[k - i];
        for (std::size_t i = 1; i < k; ++i) rhs = rhs - b[i] * b[k - i];
        b.push_back(slope_inv * rhs);
    }
    Elem y = Elem::series(mu.ring(), std::move(b));
    if (!(y * y + mu * y + lam).is_zero()) throw AlgebraError(ErrorKind::Internal, "lifted root leaves a nonzero residual");
    return y;
}

Elem lift_root_recurrence(const Elem& mu, const Elem& lam, const Elem& b0) {
    if (!is_in_radical(b0)) throw AlgebraError(ErrorKind::PreconditionViolated, "seed root " + to_string(b0) + " is not radical");
    return lift_simple_root(mu, lam, b0);
}

Classification classify_series_matrix(const Mat2& a) {
    const Classification base = classify_rad_clean(evaluate_at_zero(a));
    const SeriesMembership membership = series_membership(a);

    Classification out;
    out.kind = base.kind;
    out.method = base.method;
    out.reason = base.reason;
    out.strongly_rad_clean = base.strongly_rad_clean;
    out.strongly_clean = base.strongly_clean;

    switch (base.kind) {
        case MatrixCase::Invertible:
            if (!membership.gl2) throw AlgebraError(ErrorKind::Internal, "invertibility did not transfer from A(0)");
            out.witness = invertible_witness(a);
            break;
        case MatrixCase::Radical:
            if (!membership.radical) throw AlgebraError(ErrorKind::Internal, "radical membership did not transfer from A(0)");
            out.witness = radical_witness(a);
            break;
        case MatrixCase::SplitSpectral: {
            const CharData cd = char_data(a);
            Elem alpha = lift_root_recurrence(cd.chi.mu, cd.chi.lam, base.roots->alpha);
            Elem beta = -cd.chi.mu - alpha;
            RootPair roots{std::move(alpha), std::move(beta)};
            out.witness = construct_witness(a, roots);
            out.roots = std::move(roots);
            break;
        }
        case MatrixCase::NotRadClean: break;
    }
    return out;
}

}  // namespace rclean
