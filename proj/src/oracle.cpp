#include "rclean/oracle.hpp"

#include <exception>

#include "rclean/classify.hpp"

namespace rclean::oracle {

std::string to_string(Predicate which) {
    switch (which) {
        case Predicate::Clean: return "clean";
        case Predicate::RadClean: return "rad-clean";
        case Predicate::JClean: return "j-clean";
        case Predicate::Quasipolar: return "quasipolar";
    }
    return {};
}

MatrixSpace::MatrixSpace(const RingPtr& ring, Limits limits) : ring_(ring) {
    if (ring->family() != Family::Zmod)
        throw AlgebraError(ErrorKind::PreconditionViolated, "brute force needs a Zmod ring, got " + ring->to_string());
    if (ring->modulus() > limits.max_modulus)
        throw AlgebraError(ErrorKind::BudgetExceeded,
                           ring->to_string() + " exceeds the enumeration guard p^k <= " + std::to_string(limits.max_modulus));
    n_ = static_cast<unsigned>(ring->modulus().get_ui());
    p_ = static_cast<unsigned>(ring->prime().get_ui());
}

MatrixSpace::Small MatrixSpace::decode(Code code) const noexcept {
    Small m{};
    for (int i = 3; i >= 0; --i) {
        m[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(code % n_);
        code /= n_;
    }
    return m;
}

MatrixSpace::Code MatrixSpace::encode(const Small& m) const noexcept {
    Code code = 0;
    for (auto v : m) code = code * n_ + v;
    return code;
}

MatrixSpace::Small MatrixSpace::mul(const Small& x, const Small& y) const noexcept {
    auto r = [this](unsigned v) { return static_cast<std::uint8_t>(v % n_); };
    return {r(x[0] * y[0] + x[1] * y[2]), r(x[0] * y[1] + x[1] * y[3]), r(x[2] * y[0] + x[3] * y[2]), r(x[2] * y[1] + x[3] * y[3])};
}

MatrixSpace::Small MatrixSpace::add(const Small& x, const Small& y) const noexcept {
    Small m{};
    for (std::size_t i = 0; i < 4; ++i) m[i] = static_cast<std::uint8_t>((x[i] + y[i]) % n_);
    return m;
}

MatrixSpace::Small MatrixSpace::sub(const Small& x, const Small& y) const noexcept {
    Small m{};
    for (std::size_t i = 0; i < 4; ++i) m[i] = static_cast<std::uint8_t>((x[i] + n_ - y[i]) % n_);
    return m;
}

bool MatrixSpace::gl2(const Small& m) const noexcept {
    const unsigned det = (m[0] * m[3] + n_ * n_ - (m[1] * m[2]) % (n_ * n_)) % n_;
    return det % p_ != 0;
}

bool MatrixSpace::radical(const Small& m) const noexcept {
    return m[0] % p_ == 0 && m[1] % p_ == 0 && m[2] % p_ == 0 && m[3] % p_ == 0;
}

Mat2 MatrixSpace::to_mat2(const Small& m) const { return Mat2::from_ints(ring_, m[0], m[1], m[2], m[3]); }

MatrixSpace::Small MatrixSpace::from_mat2(const Mat2& m) const {
    if (!same_ring(m.ring(), ring_)) throw AlgebraError(ErrorKind::RingMismatch, m.ring()->to_string() + " vs " + ring_->to_string());
    auto v = [](const Elem& e) { return static_cast<std::uint8_t>(e.residue().get_ui()); };
    return {v(m.a), v(m.b), v(m.c), v(m.d)};
}

namespace {

std::vector<MatrixSpace::Small> idempotents_of(const MatrixSpace& space) {
    std::vector<MatrixSpace::Small> out;
    for (MatrixSpace::Code code = 0; code < space.size(); ++code) {
        const auto e = space.decode(code);
        if (space.mul(e, e) == e) out.push_back(e);
    }
    return out;
}

constexpr MatrixSpace::Small kIdentity{1, 0, 0, 1};

}  // namespace

std::vector<Mat2> enumerate_idempotents(const RingPtr& ring, Limits limits) {
    const MatrixSpace space(ring, limits);
    std::vector<Mat2> out;
    for (const auto& e : idempotents_of(space)) out.push_back(space.to_mat2(e));
    return out;
}

BruteForce::BruteForce(const RingPtr& ring, Limits limits)
    : space_(ring, limits), idempotents_(idempotents_of(space_)), qnil_(space_.size(), -1) {}

bool BruteForce::compute_quasinilpotent(const MatrixSpace::Small& q) const {
    for (MatrixSpace::Code code = 0; code < space_.size(); ++code) {
        const auto x = space_.decode(code);
        const auto qx = space_.mul(q, x);
        if (qx == space_.mul(x, q) && !space_.gl2(space_.add(kIdentity, qx))) return false;
    }
    return true;
}

bool BruteForce::quasinilpotent(const MatrixSpace::Small& q) {
    auto& slot = qnil_[space_.encode(q)];
    if (slot < 0) slot = compute_quasinilpotent(q) ? 1 : 0;
    return slot == 1;
}

void BruteForce::precompute_quasinilpotents(Execution exec) {
    const auto total = static_cast<long>(space_.size());
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long code = 0; code < total; ++code)
            qnil_[static_cast<std::size_t>(code)] = compute_quasinilpotent(space_.decode(static_cast<MatrixSpace::Code>(code))) ? 1 : 0;
    } else {
        for (long code = 0; code < total; ++code)
            qnil_[static_cast<std::size_t>(code)] = compute_quasinilpotent(space_.decode(static_cast<MatrixSpace::Code>(code))) ? 1 : 0;
    }
}

bool BruteForce::holds(const MatrixSpace::Small& a, Predicate which) {
    for (const auto& e : idempotents_) {
        if (space_.mul(e, a) != space_.mul(a, e)) continue;
        switch (which) {
            case Predicate::Clean:
                if (space_.gl2(space_.sub(a, e))) return true;
                break;
            case Predicate::RadClean:
                if (space_.gl2(space_.sub(a, e)) && space_.radical(space_.mul(space_.mul(e, a), e))) return true;
                break;
            case Predicate::JClean:
                if (space_.radical(space_.sub(a, e))) return true;
                break;
            case Predicate::Quasipolar:
                if (space_.gl2(space_.add(a, e)) && quasinilpotent(space_.mul(a, e))) return true;
                break;
        }
    }
    return false;
}

bool brute_predicate(const Mat2& a, Predicate which, Limits limits) {
    BruteForce brute(a.ring(), limits);
    return brute.holds(a, which);
}

Checks Checks::only(Predicate which) {
    return {which == Predicate::Clean, which == Predicate::RadClean, which == Predicate::JClean, which == Predicate::Quasipolar};
}

namespace {

struct Row {
    bool clean = false, rad_clean = false, j_clean = false, quasipolar = false;
    bool cf_rad = false, cf_clean = false, alt_normalized = false, alt_discriminant = false, alt_square = false;
    bool unit_trace = false;
    bool witness_ok = false;
};

Row evaluate(BruteForce& brute, const Checks& checks, bool compare_square, MatrixSpace::Code code) {
    const auto& space = brute.space();
    const auto small = space.decode(code);
    const Mat2 a = space.to_mat2(small);

    Row row;
    if (checks.clean) row.clean = brute.holds(small, Predicate::Clean);
    if (checks.rad_clean) row.rad_clean = brute.holds(small, Predicate::RadClean);
    if (checks.j_clean) row.j_clean = brute.holds(small, Predicate::JClean);
    if (checks.quasipolar) row.quasipolar = brute.holds(small, Predicate::Quasipolar);

    const Classification cls = classify_rad_clean(a);
    row.cf_rad = cls.strongly_rad_clean;
    row.cf_clean = classify_strongly_clean(a);
    row.alt_normalized = rad_clean_alternative(a, CriterionPath::NormalizedQuadratic);
    row.alt_discriminant = rad_clean_alternative(a, CriterionPath::DiscriminantQuadratic);
    if (compare_square) row.alt_square = rad_clean_alternative(a, CriterionPath::SquareDiscriminant);
    row.unit_trace = is_unit(trace(a));
    if (cls.strongly_rad_clean && cls.witness) {
        try {
            verify_witness(a, cls.witness->idempotent, cls.witness->unit);
            row.witness_ok = true;
        } catch (const AlgebraError&) {
            row.witness_ok = false;
        }
    }
    return row;
}

}  // namespace

OracleReport exhaustive_cross_check(const RingPtr& ring, Checks checks, Execution exec, Limits limits) {
    BruteForce brute(ring, limits);
    const MatrixSpace& space = brute.space();
    if (checks.quasipolar) brute.precompute_quasinilpotents(exec);
    const bool compare_square = ring->two_is_unit();

    const auto total = static_cast<long>(space.size());
    std::vector<Row> rows(space.size());
    if (exec == Execution::Parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 32)
        for (long code = 0; code < total; ++code) {
            try {
                rows[static_cast<std::size_t>(code)] = evaluate(brute, checks, compare_square, static_cast<MatrixSpace::Code>(code));
            } catch (...) {
#pragma omp critical(rclean_oracle_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    } else {
        for (long code = 0; code < total; ++code)
            rows[static_cast<std::size_t>(code)] = evaluate(brute, checks, compare_square, static_cast<MatrixSpace::Code>(code));
    }

    OracleReport report;
    report.ring = ring->to_string();
    report.total_matrices = space.size();
    report.idempotents = brute.idempotents().size();
    report.square_discriminant_compared = compare_square;
    Tallies& t = report.tallies;
    if (checks.clean) t.clean = 0;
    if (checks.rad_clean) t.rad_clean = 0;
    if (checks.j_clean) t.j_clean = 0;
    if (checks.quasipolar) t.quasipolar = 0;

    for (std::size_t code = 0; code < rows.size(); ++code) {
        const Row& r = rows[code];
        const std::string name = to_string(space.to_mat2(space.decode(static_cast<MatrixSpace::Code>(code))));
        auto mismatch = [&](const char* check, bool closed_form, bool brute_verdict) {
            if (closed_form != brute_verdict) report.mismatches.push_back({name, check, closed_form, brute_verdict});
        };
        auto implies = [&](bool lhs, bool rhs, const char* label) {
            if (lhs && !rhs) report.implication_violations.push_back({name, label});
        };

        if (r.cf_rad) ++t.closed_form_rad_clean;
        if (r.cf_clean) ++t.closed_form_clean;
        if (r.unit_trace) {
            ++t.unit_trace;
            if (r.cf_rad) ++t.unit_trace_rad_clean;
        }
        if (r.cf_rad) {
            if (r.witness_ok) ++report.witnesses_verified;
            else mismatch("witness", true, false);
        }

        if (checks.rad_clean) {
            if (r.rad_clean) ++*t.rad_clean;
            mismatch("rad-clean/char-roots", r.cf_rad, r.rad_clean);
            mismatch("rad-clean/normalized-quadratic", r.alt_normalized, r.rad_clean);
            mismatch("rad-clean/discriminant-quadratic", r.alt_discriminant, r.rad_clean);
            if (compare_square) mismatch("rad-clean/square-discriminant", r.alt_square, r.rad_clean);
        } else {
            // Without the brute-force verdict the closed-form routes still have to agree.
            mismatch("normalized-quadratic/char-roots", r.alt_normalized, r.cf_rad);
            mismatch("discriminant-quadratic/char-roots", r.alt_discriminant, r.cf_rad);
            if (compare_square) mismatch("square-discriminant/char-roots", r.alt_square, r.cf_rad);
        }
        if (checks.clean) {
            if (r.clean) ++*t.clean;
            mismatch("clean/strongly-clean", r.cf_clean, r.clean);
        }
        if (checks.j_clean && r.j_clean) ++*t.j_clean;
        if (checks.quasipolar && r.quasipolar) ++*t.quasipolar;

        // Brute verdicts where computed, closed-form otherwise.
        const bool rad = checks.rad_clean ? r.rad_clean : r.cf_rad;
        const bool clean = checks.clean ? r.clean : r.cf_clean;
        if (checks.j_clean) implies(r.j_clean, rad, "j-clean => rad-clean");
        implies(rad, clean, "rad-clean => clean");
        if (checks.quasipolar) implies(rad, r.quasipolar, "rad-clean => quasipolar");
    }
    return report;
}

CornerCheck corner_radical_check(const RingPtr& ring, Limits limits) {
    BruteForce brute(ring, limits);
    const MatrixSpace& space = brute.space();
    CornerCheck out;
    for (const auto& e : brute.idempotents()) {
        ++out.corners;
        std::vector<bool> seen(space.size(), false);
        std::vector<MatrixSpace::Small> corner;
        for (MatrixSpace::Code code = 0; code < space.size(); ++code) {
            const auto exe = space.mul(space.mul(e, space.decode(code)), e);
            const auto idx = space.encode(exe);
            if (!seen[idx]) {
                seen[idx] = true;
                corner.push_back(exe);
            }
        }
        // Units of the corner ring, whose identity is e.
        std::vector<bool> corner_unit(space.size(), false);
        for (const auto& v : corner)
            for (const auto& w : corner)
                if (space.mul(v, w) == e && space.mul(w, v) == e) {
                    corner_unit[space.encode(v)] = true;
                    break;
                }
        for (const auto& y : corner) {
            bool quasi_regular = true;
            for (const auto& z : corner)
                if (!corner_unit[space.encode(space.sub(e, space.mul(y, z)))]) {
                    quasi_regular = false;
                    break;
                }
            ++out.elements;
            if (quasi_regular != space.radical(y)) ++out.disagreements;
        }
    }
    return out;
}

}  // namespace rclean::oracle
