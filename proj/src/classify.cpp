#include "ringlab/classify.hpp"

#include <algorithm>

namespace ringlab {

namespace {

// Above this size, bulk unit detection switches from the O(n^2) inverse scan
// to power iteration (u is a unit iff u^k = 1 for some k; exact in finite rings).
constexpr std::size_t kUnitScanMax = 2048;

// Walks a, a^2, a^3, ... until `target` or until the power sequence provably
// cycles without it. Cycle detection keeps one checkpoint at power-of-two
// distances, so memory is O(1) and the walk stops within tail + 2*cycle steps.
bool power_reaches(const Ring& ring, u32 a, u32 target) {
    if (a == target) return true;
    u32 x = a;
    u32 checkpoint = a;
    std::size_t window = 1;
    std::size_t since_checkpoint = 0;
    for (std::size_t step = 1; step <= ring.size(); ++step) {
        x = ring.mul(x, a);
        if (x == target) return true;
        if (x == checkpoint) return false;
        if (++since_checkpoint == window) {
            checkpoint = x;
            window *= 2;
            since_checkpoint = 0;
        }
    }
    return false;
}

}  // namespace

bool is_nilpotent(const Ring& ring, u32 a) { return power_reaches(ring, a, ring.zero()); }

std::optional<u32> nilpotency_index(const Ring& ring, u32 a) {
    if (!is_nilpotent(ring, a)) return std::nullopt;
    u32 x = a;
    u32 k = 1;
    while (x != ring.zero()) {
        x = ring.mul(x, a);
        ++k;
    }
    return k;
}

std::optional<u32> inverse_of(const Ring& ring, u32 a) {
    for (u32 b = 0; b < ring.size(); ++b)
        if (ring.mul(a, b) == ring.one() && ring.mul(b, a) == ring.one()) return b;
    return std::nullopt;
}

bool is_unit_by_powers(const Ring& ring, u32 a) { return power_reaches(ring, a, ring.one()); }

bool is_unit(const Ring& ring, u32 a) {
    if (ring.size() <= kUnitScanMax) return inverse_of(ring, a).has_value();
    return is_unit_by_powers(ring, a);
}

ClassReport classify_element(const Ring& ring, u32 a) {
    ring.require_index(a);
    ClassReport r;
    r.nilpotency_index = nilpotency_index(ring, a);
    r.nilpotent = r.nilpotency_index.has_value();
    u32 a2 = ring.mul(a, a);
    u32 a4 = ring.mul(a2, a2);
    r.idempotent = (a2 == a);
    r.tripotent = (ring.mul(a2, a) == a);
    r.two_idempotent = (a4 == a2);
    r.inverse = inverse_of(ring, a);
    r.unit = r.inverse.has_value();
    r.unipotent = is_nilpotent(ring, ring.sub(a, ring.one()));
    return r;
}

std::vector<u32> enumerate_class(const Ring& ring, ElementClass which) {
    std::vector<u32> out;
    for (u32 a = 0; a < ring.size(); ++a) {
        bool in = false;
        switch (which) {
            case ElementClass::nilpotents: in = is_nilpotent(ring, a); break;
            case ElementClass::units: in = is_unit(ring, a); break;
            case ElementClass::idempotents: in = (ring.mul(a, a) == a); break;
            case ElementClass::tripotents: in = (ring.pow(a, 3) == a); break;
            case ElementClass::two_idempotents: {
                u32 a2 = ring.mul(a, a);
                in = (ring.mul(a2, a2) == a2);
                break;
            }
        }
        if (in) out.push_back(a);
    }
    return out;
}

std::vector<bool> class_mask(const Ring& ring, ElementClass which) {
    std::vector<bool> mask(ring.size(), false);
    for (u32 a : enumerate_class(ring, which)) mask[a] = true;
    return mask;
}

std::vector<u32> jacobson_radical(const Ring& ring) {
    const std::size_t n = ring.size();
    std::vector<u32> out;
    for (u32 x = 0; x < n; ++x) {
        bool in = true;
        for (u32 r = 0; in && r < n; ++r) {
            u32 t = ring.sub(ring.one(), ring.mul(r, x));
            bool left_invertible = false;
            for (u32 y = 0; y < n; ++y)
                if (ring.mul(y, t) == ring.one()) {
                    left_invertible = true;
                    break;
                }
            in = left_invertible;
        }
        if (in) out.push_back(x);
    }
    return out;
}

LocalReport is_local(const Ring& ring) {
    LocalReport rep;
    auto jac = jacobson_radical(ring);
    rep.radical_size = jac.size();
    std::vector<bool> in_jac(ring.size(), false);
    for (u32 x : jac) in_jac[x] = true;

    std::vector<u32> nonunits;
    for (u32 x = 0; x < ring.size(); ++x)
        if (!is_unit(ring, x)) nonunits.push_back(x);

    // Zero ring: no nonunits, J = {0}; treat as local with trivial residue.
    rep.local = (nonunits == jac) || (ring.size() == 1 && nonunits.empty());
    rep.residue_size = ring.size() / jac.size();
    if (rep.local) {
        bool commutative_residue = true;
        for (u32 x = 0; commutative_residue && x < ring.size(); ++x)
            for (u32 y = 0; y < ring.size(); ++y)
                if (!in_jac[ring.sub(ring.mul(x, y), ring.mul(y, x))]) {
                    commutative_residue = false;
                    break;
                }
        rep.residue_field = commutative_residue;
        rep.residue_field_in_235 =
            commutative_residue &&
            (rep.residue_size == 2 || rep.residue_size == 3 || rep.residue_size == 5);
    }
    return rep;
}

RingIdentities ring_identities(const Ring& ring) {
    RingIdentities ids;
    ids.reduced = true;
    ids.x5_equals_x = true;
    ids.quintic_identity = true;
    ids.commutative = true;
    ids.bounded_index = 0;
    for (u32 x = 0; x < ring.size(); ++x) {
        auto idx = nilpotency_index(ring, x);
        if (idx) {
            if (x != ring.zero()) ids.reduced = false;
            ids.bounded_index = std::max(ids.bounded_index, *idx);
        }
        u32 x3 = ring.pow(x, 3);
        u32 x5 = ring.pow(x, 5);
        if (x5 != x) ids.x5_equals_x = false;
        if (x5 != ring.sub(ring.scale(5, x3), ring.scale(4, x))) ids.quintic_identity = false;
    }
    for (u32 x = 0; ids.commutative && x < ring.size(); ++x)
        for (u32 y = x + 1; y < ring.size(); ++y)
            if (!ring.commutes(x, y)) {
                ids.commutative = false;
                break;
            }
    return ids;
}

}  // namespace ringlab
