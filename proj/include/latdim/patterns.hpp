// Multiplicity patterns of non-central finite-order elements, their
// centralizer shapes, and the dimension of the fixed-point set in the
// symmetric space.
//
// A pattern stores only multiplicity data of the eigen-decomposition, never
// eigenvalue values: every dimension formula downstream depends on the
// multiplicities alone.  Shapes of the data per family:
//
//   SL_C            classes {m_1,...,m_r},  sum m_i = n, r >= 1
//   SO_C, SL_R      classes {d_1,...,d_r} of conjugate non-real pairs, plus
//                   s,t = multiplicities of +1,-1:  2*sum d_i + s + t = n
//   Sp_C, SL_H,
//   Sp_R, SO_star   classes {d_1,...,d_r} plus s,t:  sum d_i + s + t = n
//   SU_pq           signature splits {(p_i,q_i)}:  sum p_i = p, sum q_i = q
//   Sp_pq           splits {(p_i,q_i)} plus (p_s,q_s),(p_t,q_t) for +1,-1:
//                   sum p_i + p_s + p_t = p  (same for q)
//   SO_pq           like Sp_pq but non-real classes counted twice:
//                   2*sum p_i + p_s + p_t = p  (same for q)
//
// Canonical form: class lists sorted descending, zero classes absent.  For
// SL_R additionally the +-1 data is normalized to t >= s: an element and its
// negative act identically on the symmetric space and swap the roles of the
// two real eigenspaces, so one representative per such pair is kept.

#pragma once

#include "latdim/groups.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latdim {

/// Thrown by fixed_set_dim on a central pattern: the fixed set is all of S,
/// so no proper dimension applies.
struct CentralPatternError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EigenPattern {
    Family family;
    std::vector<long> classes;                    // m_i or d_i, descending
    long s = 0, t = 0;                            // +1 / -1 multiplicities
    std::vector<std::pair<long, long>> splits;    // (p_i,q_i), descending
    std::pair<long, long> split_s{0, 0};          // (p_s,q_s)
    std::pair<long, long> split_t{0, 0};          // (p_t,q_t)

    /// Sort class data descending, drop zero classes, apply the SL_R
    /// sign-flip normalization.  Idempotent.
    void canonicalize();

    bool operator==(const EigenPattern& o) const;
    bool operator<(const EigenPattern& o) const; // canonical total order

    std::string display() const;
};

/// Checks the family sum constraints and non-negativity; throws
/// std::invalid_argument on violation or family mismatch.
void validate_pattern(const GroupSpec& g, const EigenPattern& pat);

/// True for the patterns of central elements (identity-like or minus-identity
/// -like); such patterns are representable but rejected by fixed_set_dim.
bool is_central_pattern(const GroupSpec& g, const EigenPattern& pat);

struct EnumOptions {
    /// With parity enforcement the enumeration keeps only patterns realizable
    /// by determinant-one elements of the compact group (SO_C: t even; SL_R:
    /// s or t even; SO_pq: p_t + q_t even).  Off by default so that maxima
    /// match the classical upper-bound formulas.
    bool parity_strict = false;
};

/// Streaming enumeration of canonical non-central patterns, each exactly once.
class PatternStream {
public:
    PatternStream(const GroupSpec& g, EnumOptions opts = {});
    std::optional<EigenPattern> next();

private:
    std::vector<EigenPattern> buffer_; // materialized lazily per (s,t) cell
    std::size_t pos_ = 0;
    GroupSpec group_;
    EnumOptions opts_;
    // generator state
    long cell_ = 0, cell_count_ = 0;
    bool done_ = false;
    void refill();
};

/// All canonical non-central patterns (materialized).
std::vector<EigenPattern> enumerate_patterns(const GroupSpec& g, EnumOptions opts = {});

/// Count of the above without materializing more than one at a time.
std::uint64_t count_patterns(const GroupSpec& g, EnumOptions opts = {});

// ---------------------------------------------------------------------------
// Centralizer shapes

enum class FactorKind {
    U,        // compact unitary U(a)
    O,        // compact orthogonal O(a)
    Sp,       // compact symplectic Sp(a)
    GL_R,     // GL(a,R)
    GL_C,     // GL(a,C)
    GL_H,     // GL(a,H)
    U_pq,     // U(a,b)
    SU_pq,    // SU(a,b)
    O_pq,     // O(a,b)
    Sp_pq,    // Sp(a,b)
    Sp_2nR,   // Sp(2a,R)
    SO_star,  // SO*(2a)
};

struct Factor {
    FactorKind kind;
    long a = 0, b = 0;
    bool operator==(const Factor& o) const { return kind == o.kind && a == o.a && b == o.b; }
};

struct CentralizerShape {
    std::vector<Factor> factors;
    bool det_constrained = false; // wrapped in S( ... )

    std::string display() const; // e.g. "S(GL(3,R)xGL(1,R))"
    bool operator==(const CentralizerShape& o) const {
        return factors == o.factors && det_constrained == o.det_constrained;
    }
};

/// Conjugacy-class description of the centralizer of an element with the
/// given pattern.  Valid for central patterns too (the shape is then the
/// whole group).
CentralizerShape centralizer_shape(const GroupSpec& g, const EigenPattern& pat);

/// Dimension of the fixed-point set S^A in the ambient symmetric space.
/// Throws CentralPatternError when the pattern is central.
long fixed_set_dim(const GroupSpec& g, const EigenPattern& pat);

} // namespace latdim
