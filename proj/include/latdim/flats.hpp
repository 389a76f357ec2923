// Exact certificates for intersections of maximal flats with reflection
// fixed-sets, in two models:
//
//   SL model:  points of the symmetric space are positive quadratic forms up
//   to positive scale; a flat is the set of forms diagonal in a fixed basis
//   v_1..v_n; the fixed set of a reflection with eigenspace splitting
//   R^n = V + L is the set of forms making L orthogonal to V.  Meeting the
//   fixed set is an exact linear feasibility problem in the diagonal
//   coefficients.
//
//   SO model:  points are p-dimensional subspaces negative definite for a
//   fixed signature-(p,q) form; a flat is given by p pairwise orthogonal
//   signature-(1,1) planes P_i (plus an orthogonal remainder); the flat
//   meets the fixed set of the reflection fixing the hyperplane V iff every
//   P_i meets V in a direction where the form is negative.
//
// Both constructions ("build_*") realize a flat meeting the first target
// and missing all others, with every verdict re-verified exactly.

#pragma once

#include "latdim/errors.hpp"
#include "latdim/quadform.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace latdim {

/// Degenerate input configuration (coincident targets, vectors inside the
/// reflection hyperplane, ...); the message names the offending data.
struct DegenerateInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Search cap reached (scaling exponent or shrinking steps exhausted)
/// without a verified certificate.  Never reports a wrong certificate.
struct SearchCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FixMode { SL_REFLECTION, SO_REFLECTION };

struct FixedSetSpec {
    FixMode mode;
    std::vector<Vec> V; // basis of the codimension-1 eigenspace, n-1 vectors
    Vec u;              // spans the complementary line L

    std::size_t dim() const { return u.size(); }
};

/// SL mode: V has rank n-1, u not in span(V).
/// SO mode: additionally form(u, w) = 0 for all w in V and form(u) != 0.
void validate_fixed_set(const FixedSetSpec& fix, const QuadForm* form = nullptr);

struct FlatSpec {
    FixMode mode;
    std::vector<Vec> basis;                 // SL: v_1..v_n
    std::vector<std::array<Vec, 2>> planes; // SO: spanning pairs of P_1..P_p
    std::vector<Vec> rest;                  // SO: basis of the remainder

    std::size_t dim() const {
        return mode == FixMode::SL_REFLECTION
                   ? (basis.empty() ? 0 : basis[0].size())
                   : (planes.empty() ? 0 : planes[0][0].size());
    }
};

/// SL: basis linearly independent.  SO: planes 2-dimensional, pairwise
/// orthogonal for the form, each of signature (1,1), remainder orthogonal
/// to all planes, everything jointly spanning.
void validate_flat(const FlatSpec& flat, const QuadForm* form = nullptr);

enum class CertVerdict { SINGLE_POINT, EMPTY, CONTAINED, DEGENERATE };
enum class ObstructionTag { NONE, CONE_OBSTRUCTION, SIGN_INFEASIBLE, POSITIVE_DEFINITE_RESTRICTION };

std::string verdict_name(CertVerdict v);
std::string obstruction_name(ObstructionTag o);

struct IntersectionCertificate {
    CertVerdict verdict = CertVerdict::EMPTY;
    ObstructionTag obstruction = ObstructionTag::NONE;
    // SL witness: the diagonal coefficients of the meeting form in the
    // flat's basis, positive and normalized to max = 1.
    std::vector<Rat> witness_diag;
    // SO witness: one form-negative vector per plane inside the hyperplane.
    std::vector<Vec> witness_vectors;
    // Strictness margins of the verified inequalities (positivity of the
    // diagonal witness / negativity of the plane restrictions).
    std::vector<Rat> margins;
    // -1 empty, +1 nonempty, 0 undetermined (SL degenerate case).
    int nonempty = 0;
    std::string note;
};

/// Exact solve for the diagonal forms orthogonalizing the reflection
/// splitting: SINGLE_POINT with strictly positive witness, EMPTY, CONTAINED
/// (every form in the flat works), or DEGENERATE (solution space of
/// dimension >= 2; flagged, not decided).
IntersectionCertificate flat_meets_fixedset_sl(const FlatSpec& flat, const FixedSetSpec& fix);

/// Spherical cone test: with all of u, v_1..v_n strictly on one side of the
/// hyperplane V (signs are flipped per vector as needed), writes
/// u = sum c_i (eps_i v_i) and reports true (obstructed: no scalar product
/// makes u orthogonal to V with the v_i mutually orthogonal) iff some
/// c_i <= 0.  Throws DegenerateInputError if u or some v_i lies in V, or if
/// the v_i are dependent.
bool cone_obstruction(const Vec& u, const std::vector<Vec>& V, const std::vector<Vec>& basis);

/// Per-plane negativity test for the SO model; see file comment.
IntersectionCertificate flat_meets_fixedset_so(const FlatSpec& flat, const FixedSetSpec& fix,
                                               const QuadForm& form);

/// Re-run all checks of a certificate from scratch against its inputs;
/// returns false on any discrepancy.  Used by tests and demo output.
bool verify_certificate_sl(const FlatSpec& flat, const FixedSetSpec& fix,
                           const IntersectionCertificate& cert);
bool verify_certificate_so(const FlatSpec& flat, const FixedSetSpec& fix, const QuadForm& form,
                           const IntersectionCertificate& cert);

struct SlSeparationResult {
    FlatSpec flat;
    Rat lambda;                 // final scaling parameter
    Rat delta;                  // verified perturbation radius (max-norm)
    std::vector<IntersectionCertificate> certificates; // one per target
};

struct SlBuildOptions {
    int max_lambda_log2 = 64;  // scaling cap 2^64
    int max_delta_halvings = 128;
    std::uint64_t seed = 0;    // deterministic basis selection
};

/// Builds a flat whose certificate pattern is (SINGLE_POINT, EMPTY, ...,
/// EMPTY) against the given reflection targets (target 1 is hit).  The
/// returned delta is verified by interval arithmetic: every entrywise
/// rational perturbation of the basis with max-norm <= delta preserves all
/// verdicts.
SlSeparationResult build_separating_basis_sl(const std::vector<FixedSetSpec>& targets,
                                             const SlBuildOptions& opts = {});

struct SoSeparationResult {
    FlatSpec flat;
    std::vector<IntersectionCertificate> certificates;
};

/// Builds a signature-(1,1) plane decomposition whose flat meets the first
/// target (nonempty certificate) and misses all others.  Requires p >= 2 and
/// a positive-definite complement line on target 1; throws
/// UnsupportedInstanceError when no rational isotropic vector is available.
SoSeparationResult build_separating_decomposition_so(const std::vector<FixedSetSpec>& targets,
                                                     const QuadForm& form);

/// Interval re-verification of the SL certificates under entrywise basis
/// perturbations of max-norm <= delta.  True when every verdict is certain
/// over the whole perturbation box.
bool verify_sl_certificates_robust(const FlatSpec& flat, const std::vector<FixedSetSpec>& targets,
                                   const Rat& delta);

} // namespace latdim
