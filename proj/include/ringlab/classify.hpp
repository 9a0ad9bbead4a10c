#pragma once

/**
 * @file classify.hpp
 * @brief Element predicates and ring-level structural sets.
 */

#include "ringlab/ring.hpp"

namespace ringlab {

struct ClassReport {
    bool nilpotent = false;
    std::optional<u32> nilpotency_index;  // least k with a^k = 0
    bool idempotent = false;
    bool tripotent = false;
    bool two_idempotent = false;          // a^2 = a^4
    bool unit = false;
    bool unipotent = false;               // a - 1 nilpotent
    std::optional<u32> inverse;
};

enum class ElementClass { nilpotents, units, idempotents, tripotents, two_idempotents };

ClassReport classify_element(const Ring& ring, u32 a);

/// Exact class members, ascending, by full carrier scan.
std::vector<u32> enumerate_class(const Ring& ring, ElementClass which);
std::vector<bool> class_mask(const Ring& ring, ElementClass which);

/// { x : 1 - r*x has a left inverse for every r }.
std::vector<u32> jacobson_radical(const Ring& ring);

struct LocalReport {
    bool local = false;
    std::size_t radical_size = 0;
    std::size_t residue_size = 0;          // |R / J(R)|
    bool residue_field = false;            // residue ring commutative (division is automatic)
    bool residue_field_in_235 = false;     // residue is a field of size 2, 3 or 5
};
LocalReport is_local(const Ring& ring);

struct RingIdentities {
    bool reduced = false;
    bool x5_equals_x = false;
    bool quintic_identity = false;  // x^5 = 5x^3 - 4x for every x
    bool commutative = false;
    u32 bounded_index = 0;          // max nilpotency index over N(R)
};
RingIdentities ring_identities(const Ring& ring);

// Shared element-level helpers.
bool is_nilpotent(const Ring& ring, u32 a);
std::optional<u32> nilpotency_index(const Ring& ring, u32 a);
std::optional<u32> inverse_of(const Ring& ring, u32 a);  // two-sided inverse by scan
bool is_unit_by_powers(const Ring& ring, u32 a);         // u^k = 1 for some k (finite rings)
bool is_unit(const Ring& ring, u32 a);                   // scan on small rings, powers above

}  // namespace ringlab
