#include "rclean/classify.hpp"

namespace rclean {

std::string to_string(MatrixCase kind) {
    switch (kind) {
        case MatrixCase::Invertible: return "Invertible";
        case MatrixCase::Radical: return "Radical";
        case MatrixCase::SplitSpectral: return "SplitSpectral";
        case MatrixCase::NotRadClean: return "NotRadClean";
    }
    return {};
}

std::string to_string(Method method) {
    switch (method) {
        case Method::CharRoots: return "char-roots";
        case Method::NormalizedQuadratic: return "normalized-quadratic";
        case Method::DiscriminantQuadratic: return "discriminant-quadratic";
        case Method::SquareDiscriminant: return "square-discriminant";
    }
    return {};
}

std::string to_string(NormalCase kind) {
    switch (kind) {
        case NormalCase::I: return "I";
        case NormalCase::II: return "II";
        case NormalCase::III: return "III";
        case NormalCase::IV: return "IV";
    }
    return {};
}

std::vector<std::string> verify_witness(const Mat2& a, const Mat2& e, const Mat2& u) {
    auto fail = [](const std::string& what) -> void { throw AlgebraError(ErrorKind::WitnessVerificationFailed, what); };
    std::vector<std::string> done;
    if (!(e * e == e)) fail("E^2 != E");
    done.emplace_back("E^2=E");
    if (!(a == e + u)) fail("A != E + U");
    done.emplace_back("A=E+U");
    if (!(e * a == a * e)) fail("EA != AE");
    done.emplace_back("EA=AE");
    if (!is_gl2(u)) fail("U not invertible");
    done.emplace_back("U in GL2");
    // J(eSe) = eJ(S)e and J(M_2(R)) = M_2(J(R)).
    if (!is_in_radical_m2(e * a * e)) fail("EAE not radical");
    done.emplace_back("EAE in M2(J)");
    return done;
}

Witness construct_witness(const Mat2& a, const RootPair& roots) {
    const auto& [alpha, beta] = roots;
    const CharData cd = char_data(a);
    if (!is_in_radical(alpha) || !is_unit(beta) || !(alpha + beta == cd.trace) || !(alpha * beta == cd.det))
        throw AlgebraError(ErrorKind::WitnessVerificationFailed, "roots do not factor chi(A) as (t - alpha)(t - beta) with alpha in J, beta in U");
    const Mat2 e = try_invert(beta - alpha) * (beta * Mat2::identity(a.ring()) - a);
    Mat2 u = a - e;
    auto verified = verify_witness(a, e, u);
    return {e, std::move(u), std::move(verified)};
}

Witness invertible_witness(const Mat2& a) {
    Mat2 e = Mat2::zero(a.ring());
    auto verified = verify_witness(a, e, a);
    return {std::move(e), a, std::move(verified)};
}

Witness radical_witness(const Mat2& a) {
    Mat2 e = Mat2::identity(a.ring());
    Mat2 u = a - e;
    auto verified = verify_witness(a, e, u);
    return {std::move(e), std::move(u), std::move(verified)};
}

namespace {

bool strongly_clean_given(const Mat2& a, bool rad_clean) { return rad_clean || is_gl2(Mat2::identity(a.ring()) - a); }

}  // namespace

Classification classify_rad_clean(const Mat2& a) {
    Classification out;
    out.method = Method::CharRoots;
    if (is_gl2(a)) {
        out.kind = MatrixCase::Invertible;
        out.witness = invertible_witness(a);
    } else if (is_in_radical_m2(a)) {
        out.kind = MatrixCase::Radical;
        out.witness = radical_witness(a);
    } else {
        const CharData cd = char_data(a);
        // A non-invertible, non-radical rad-clean matrix is similar to
        // diag(alpha, beta) with alpha in J, beta in U, so its trace is a unit.
        if (!is_unit(cd.trace)) {
            out.kind = MatrixCase::NotRadClean;
            out.reason = kReasonTraceNotUnit;
        } else {
            try {
                RootPair roots = solve_split_quadratic(cd.chi);
                out.kind = MatrixCase::SplitSpectral;
                out.witness = construct_witness(a, roots);
                out.roots = std::move(roots);
            } catch (const AlgebraError& e) {
                if (e.kind() != ErrorKind::NotSolvable) throw;
                out.kind = MatrixCase::NotRadClean;
                out.reason = kReasonNoSplit;
            }
        }
    }
    out.strongly_rad_clean = out.kind != MatrixCase::NotRadClean;
    out.strongly_clean = strongly_clean_given(a, out.strongly_rad_clean);
    return out;
}

bool classify_strongly_clean(const Mat2& a) { return strongly_clean_given(a, classify_rad_clean(a).strongly_rad_clean); }

bool rad_clean_alternative(const Mat2& a, CriterionPath path) {
    const RingPtr& ring = a.ring();
    if (path == CriterionPath::SquareDiscriminant && !ring->two_is_unit())
        throw AlgebraError(ErrorKind::CharTwo, "square-discriminant criterion needs 2 to be a unit in " + ring->to_string());
    if (is_gl2(a) || is_in_radical_m2(a)) return true;

    const Elem tr = trace(a);
    const Elem dt = det(a);
    if (!is_unit(tr)) return false;
    // Not invertible, so det is radical already; the explicit test mirrors the criterion.
    if (!is_in_radical(dt)) return false;

    const Elem four = Elem::integer(ring, 4);
    try {
        switch (path) {
            case CriterionPath::NormalizedQuadratic: {
                const Elem tr_inv = try_invert(tr);
                const Elem root = solve_x2_plus_x(-(dt * tr_inv * tr_inv));
                return is_in_radical(root);
            }
            case CriterionPath::DiscriminantQuadratic: {
                const Elem disc = tr * tr - four * dt;
                solve_x2_plus_x(dt * try_invert(disc));
                return true;
            }
            case CriterionPath::SquareDiscriminant: {
                discriminant_sqrt(tr * tr - four * dt);
                return true;
            }
        }
    } catch (const AlgebraError& e) {
        if (e.kind() != ErrorKind::NotSolvable && e.kind() != ErrorKind::NotASquare) throw;
        return false;
    }
    return false;
}

namespace {

// Case I conjugation: diag(c, 1) B12(-a/c) A B12(a/c) diag(1/c, 1).
Mat2 case_one_transform(const Mat2& a) {
    const Elem c_inv = try_invert(a.c);
    return diag(a.c, Elem::one(a.ring())) * elementary_b12(-(a.a * c_inv));
}

}  // namespace

Normalization normalize_invertible_trace(const Mat2& a) {
    const RingPtr& ring = a.ring();
    if (!is_unit(trace(a))) throw AlgebraError(ErrorKind::PreconditionViolated, "trace " + to_string(trace(a)) + " is not a unit");

    auto finish = [&](Mat2 p, NormalCase kind) {
        Mat2 n = conjugate(p, a);
        return Normalization{std::move(p), std::move(n), kind};
    };
    if (is_unit(a.c)) return finish(case_one_transform(a), NormalCase::I);
    if (is_unit(a.b)) {
        const Mat2 s = swap_matrix(ring);
        return finish(case_one_transform(s * a * s) * s, NormalCase::II);
    }
    if (is_unit(a.a - a.d)) {
        const Mat2 shear = elementary_b21(-Elem::one(ring));
        return finish(case_one_transform(conjugate(shear, a)) * shear, NormalCase::III);
    }
    if (is_unit(a.a) && is_unit(a.d)) {
        Mat2 p = elementary_b21(-(a.c * try_invert(a.a)));
        Mat2 n = p * a;
        return {std::move(p), std::move(n), NormalCase::IV};
    }
    // All entries radical would force a radical trace.
    throw AlgebraError(ErrorKind::Internal, "unit trace with all entries radical");
}

TraceVerdict trace_property_check(const RingPtr& ring, std::size_t budget) {
    TraceVerdict out{solvable_for_all(ring, budget), std::nullopt};
    if (out.solvability.status == SolvabilityStatus::Counterexample) {
        const Elem& lam = *out.solvability.lambda;
        const Elem& mu = *out.solvability.mu;
        out.counterexample_matrix = Mat2{Elem::zero(ring), -lam, Elem::one(ring), -mu};
    }
    return out;
}

}  // namespace rclean
