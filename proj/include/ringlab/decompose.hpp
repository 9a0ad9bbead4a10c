#pragma once

/**
 * @file decompose.hpp
 * @brief Element decompositions: idempotent/tripotent lifting modulo
 *        nilpotents, the central 2/3/5 splitting, quintic witnesses, and the
 *        sum decompositions, each paired with a brute-force oracle.
 */

#include "ringlab/ring.hpp"

namespace ringlab {

enum class DecompKind {
    two_tripotents,
    four_idempotents,
    three_idempotents,
    two_idempotents,
    one_idempotent,
    two_2idempotents,
    one_2idempotent,
    square_2idempotent,       // target a^2, one 2-idempotent part
    fourth_power_idempotent,  // target a^4, one idempotent part
    quintic_witness,          // target a, one part e with e^5 = 5e^3 - 4e
};

enum class Scope { in_za, commuting, unrestricted };

const char* to_string(DecompKind kind);
const char* to_string(Scope scope);
std::optional<DecompKind> parse_kind(const std::string& text);
std::optional<Scope> parse_scope(const std::string& text);

/// Scope each kind carries when none is requested.
Scope default_scope(DecompKind kind);
unsigned part_arity(DecompKind kind);

/// a, a^2 or a^4 depending on the kind.
u32 decomposition_target(const Ring& ring, DecompKind kind, u32 source);

/**
 * A validated decomposition witness. The public factory re-derives every
 * invariant (summation identity, part identities, nilpotence, scope
 * constraints) and throws ValidationError otherwise, so an instance is
 * evidence in itself.
 */
class Decomposition {
public:
    static Decomposition make(const Ring& ring, DecompKind kind, Scope scope, u32 source,
                              std::vector<u32> parts, u32 nilpotent_part,
                              const std::vector<bool>* za_hint = nullptr);

    DecompKind kind() const noexcept { return kind_; }
    Scope scope() const noexcept { return scope_; }
    u32 source() const noexcept { return source_; }
    u32 target() const noexcept { return target_; }
    const std::vector<u32>& parts() const noexcept { return parts_; }
    u32 nilpotent_part() const noexcept { return nilpotent_part_; }

private:
    Decomposition() = default;
    DecompKind kind_{};
    Scope scope_{};
    u32 source_ = 0;
    u32 target_ = 0;
    std::vector<u32> parts_;
    u32 nilpotent_part_ = 0;
};

/// Re-checks the invariants of an already-built witness; throws ValidationError.
void validate_decomposition(const Ring& ring, DecompKind kind, Scope scope, u32 source,
                            const std::vector<u32>& parts, u32 nilpotent_part,
                            const std::vector<bool>* za_hint = nullptr);

/// e^5 - 5e^3 + 4e (nilpotent for every element exactly in Zhou nil-clean rings).
u32 zhou_polynomial(const Ring& ring, u32 a);
bool satisfies_quintic_identity(const Ring& ring, u32 e);
/// Ring-wide polynomial criterion: zhou_polynomial nilpotent for every element.
bool zhou_criterion(const Ring& ring);

struct LiftResult {
    u32 element;
    unsigned iterations;  // updates applied before the iterate became idempotent
};

/// Newton-style lift e <- 3e^2 - 2e^3 from b (with b - b^2 nilpotent) to an
/// idempotent e in Z[b] with e - b nilpotent. The defect exponent doubles per
/// step, so stabilization takes at most ceil(log2(index)) + 1 updates.
u32 lift_idempotent(const Ring& ring, u32 b);
LiftResult lift_idempotent_traced(const Ring& ring, u32 b);

/// Tripotent t in Z[a] with a - t nilpotent, for a - a^3 nilpotent and 2 a unit:
/// t = lift((a^2+a)/2) - lift((a^2-a)/2).
u32 lift_tripotent(const Ring& ring, u32 a);

struct CrtIdempotents {
    u32 eps2 = 0;
    u32 eps3 = 0;
    u32 eps5 = 0;
    unsigned n = 0;  // least exponent with (30*1)^n = 0
};

/// Orthogonal central idempotents splitting R into its 2-, 3- and 5-components
/// when 30 is nilpotent: eps2 + eps3 + eps5 = 1, eps_p * p^n = 0.
CrtIdempotents crt_split_235(const Ring& ring);

/// Theorem-2.2(3) witness: e in Z[a] with e^5 = 5e^3 - 4e exactly and a - e
/// nilpotent, built by splitting off the 2/3/5 components and lifting per
/// component (idempotent / tripotent / the x = 3a + a^2 + a^4 construction).
Decomposition quintic_witness(const Ring& ring, u32 a);

/// Constructive path only; nullopt when no constructive route exists or a
/// lift precondition fails.
std::optional<Decomposition> decompose_constructive(const Ring& ring, u32 a, DecompKind kind,
                                                    Scope scope);

/// Constructive path with brute-force fallback.
std::optional<Decomposition> decompose(const Ring& ring, u32 a, DecompKind kind, Scope scope);

/// Exhaustive oracle: first witness in lexicographic part order, or nullopt.
std::optional<Decomposition> brute_force_decompose(const Ring& ring, u32 a, DecompKind kind,
                                                   Scope scope);

/// Oracle variant demanding a zero nilpotent part (exact sums).
std::optional<Decomposition> brute_force_decompose_exact(const Ring& ring, u32 a,
                                                         DecompKind kind, Scope scope);

}  // namespace ringlab
