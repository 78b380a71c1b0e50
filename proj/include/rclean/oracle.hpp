#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rclean/mat2.hpp"

namespace rclean::oracle {

// Definitional brute force over M_2(Z/p^k). Matrices are packed as base-n
// digits (a, b, c, d) so every matrix has a dense index in [0, n^4); the
// sweep kernels come in a serial reference form and an OpenMP form that
// must produce identical reports.

enum class Predicate { Clean, RadClean, JClean, Quasipolar };

std::string to_string(Predicate which);

enum class Execution { Serial, Parallel };

struct Limits {
    /// Largest modulus p^k accepted; the quasipolar check is O(n^8).
    unsigned max_modulus = 9;
};

class MatrixSpace {
public:
    using Code = std::uint32_t;
    using Small = std::array<std::uint8_t, 4>;

    explicit MatrixSpace(const RingPtr& ring, Limits limits = {});

    const RingPtr& ring() const noexcept { return ring_; }
    unsigned modulus() const noexcept { return n_; }
    unsigned prime() const noexcept { return p_; }
    Code size() const noexcept { return n_ * n_ * n_ * n_; }

    Small decode(Code code) const noexcept;
    Code encode(const Small& m) const noexcept;
    Small mul(const Small& x, const Small& y) const noexcept;
    Small add(const Small& x, const Small& y) const noexcept;
    Small sub(const Small& x, const Small& y) const noexcept;
    bool gl2(const Small& m) const noexcept;
    bool radical(const Small& m) const noexcept;

    Mat2 to_mat2(const Small& m) const;
    Small from_mat2(const Mat2& m) const;

private:
    RingPtr ring_;
    unsigned n_;
    unsigned p_;
};

/// All E with E^2 = E, in increasing index order.
std::vector<Mat2> enumerate_idempotents(const RingPtr& ring, Limits limits = {});

class BruteForce {
public:
    explicit BruteForce(const RingPtr& ring, Limits limits = {});

    const MatrixSpace& space() const noexcept { return space_; }
    const std::vector<MatrixSpace::Small>& idempotents() const noexcept { return idempotents_; }

    bool holds(const MatrixSpace::Small& a, Predicate which);
    bool holds(const Mat2& a, Predicate which) { return holds(space_.from_mat2(a), which); }

    /// Q such that I + QX is invertible for every X commuting with Q.
    bool quasinilpotent(const MatrixSpace::Small& q);

    /// Fills the quasinilpotence table for every matrix up front. Required
    /// before calling holds(..., Quasipolar) from several threads.
    void precompute_quasinilpotents(Execution exec);

private:
    bool compute_quasinilpotent(const MatrixSpace::Small& q) const;

    MatrixSpace space_;
    std::vector<MatrixSpace::Small> idempotents_;
    std::vector<std::int8_t> qnil_;  // -1 unknown
};

bool brute_predicate(const Mat2& a, Predicate which, Limits limits = {});

struct Checks {
    bool clean = true;
    bool rad_clean = true;
    bool j_clean = true;
    bool quasipolar = true;

    static Checks all() { return {}; }
    static Checks only(Predicate which);
};

struct Mismatch {
    std::string matrix;
    std::string check;
    bool closed_form;
    bool brute;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct ImplicationViolation {
    std::string matrix;
    std::string implication;

    friend bool operator==(const ImplicationViolation&, const ImplicationViolation&) = default;
};

struct Tallies {
    std::optional<std::size_t> clean;
    std::optional<std::size_t> rad_clean;
    std::optional<std::size_t> j_clean;
    std::optional<std::size_t> quasipolar;
    std::size_t closed_form_rad_clean = 0;
    std::size_t closed_form_clean = 0;
    std::size_t unit_trace = 0;
    std::size_t unit_trace_rad_clean = 0;

    friend bool operator==(const Tallies&, const Tallies&) = default;
};

struct OracleReport {
    std::string ring;
    std::size_t total_matrices = 0;
    std::size_t idempotents = 0;
    Tallies tallies;
    std::size_t witnesses_verified = 0;
    bool square_discriminant_compared = false;
    std::vector<Mismatch> mismatches;
    std::vector<ImplicationViolation> implication_violations;

    bool clean_run() const noexcept { return mismatches.empty() && implication_violations.empty(); }

    friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

/// Sweeps all of M_2(Z/p^k), comparing brute-force definitions with every
/// closed-form route and checking j-clean => rad-clean => clean and
/// rad-clean => quasipolar. Every closed-form witness is re-verified.
OracleReport exhaustive_cross_check(const RingPtr& ring, Checks checks = {}, Execution exec = Execution::Parallel, Limits limits = {});

struct CornerCheck {
    std::size_t corners = 0;
    std::size_t elements = 0;
    std::size_t disagreements = 0;
};

/// For every idempotent E, compares J(E M_2 E), computed from quasi-regularity
/// inside the corner ring, with the entrywise test on E X E.
CornerCheck corner_radical_check(const RingPtr& ring, Limits limits = {});

}  // namespace rclean::oracle
