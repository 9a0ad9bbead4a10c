#include "ringlab/decompose.hpp"

#include <algorithm>
#include <array>

#include "ringlab/classify.hpp"

namespace ringlab {

namespace {

struct KindInfo {
    DecompKind kind;
    const char* name;
    unsigned arity;
    Scope deflt;
};

constexpr KindInfo kKinds[] = {
    {DecompKind::two_tripotents, "two_tripotents", 2, Scope::commuting},
    {DecompKind::four_idempotents, "four_idempotents", 4, Scope::in_za},
    {DecompKind::three_idempotents, "three_idempotents", 3, Scope::commuting},
    {DecompKind::two_idempotents, "two_idempotents", 2, Scope::commuting},
    {DecompKind::one_idempotent, "one_idempotent", 1, Scope::commuting},
    {DecompKind::two_2idempotents, "two_2idempotents", 2, Scope::in_za},
    {DecompKind::one_2idempotent, "one_2idempotent", 1, Scope::commuting},
    {DecompKind::square_2idempotent, "square_2idempotent", 1, Scope::in_za},
    {DecompKind::fourth_power_idempotent, "fourth_power_idempotent", 1, Scope::commuting},
    {DecompKind::quintic_witness, "quintic_witness", 1, Scope::in_za},
};

const KindInfo& info(DecompKind kind) {
    for (const auto& k : kKinds)
        if (k.kind == kind) return k;
    throw UsageError("unknown decomposition kind");
}

bool part_identity_ok(const Ring& ring, DecompKind kind, u32 x) {
    switch (kind) {
        case DecompKind::two_tripotents:
            return ring.pow(x, 3) == x;
        case DecompKind::four_idempotents:
        case DecompKind::three_idempotents:
        case DecompKind::two_idempotents:
        case DecompKind::one_idempotent:
        case DecompKind::fourth_power_idempotent:
            return ring.mul(x, x) == x;
        case DecompKind::two_2idempotents:
        case DecompKind::one_2idempotent:
        case DecompKind::square_2idempotent: {
            u32 x2 = ring.mul(x, x);
            return ring.mul(x2, x2) == x2;
        }
        case DecompKind::quintic_witness:
            return satisfies_quintic_identity(ring, x);
    }
    throw UsageError("unknown decomposition kind");
}

}  // namespace

const char* to_string(DecompKind kind) { return info(kind).name; }

const char* to_string(Scope scope) {
    switch (scope) {
        case Scope::in_za: return "in_za";
        case Scope::commuting: return "commuting";
        case Scope::unrestricted: return "unrestricted";
    }
    return "?";
}

std::optional<DecompKind> parse_kind(const std::string& text) {
    for (const auto& k : kKinds)
        if (text == k.name) return k.kind;
    return std::nullopt;
}

std::optional<Scope> parse_scope(const std::string& text) {
    if (text == "in_za") return Scope::in_za;
    if (text == "commuting") return Scope::commuting;
    if (text == "unrestricted") return Scope::unrestricted;
    return std::nullopt;
}

Scope default_scope(DecompKind kind) { return info(kind).deflt; }
unsigned part_arity(DecompKind kind) { return info(kind).arity; }

u32 decomposition_target(const Ring& ring, DecompKind kind, u32 source) {
    switch (kind) {
        case DecompKind::square_2idempotent: return ring.mul(source, source);
        case DecompKind::fourth_power_idempotent: return ring.pow(source, 4);
        default: return source;
    }
}

void validate_decomposition(const Ring& ring, DecompKind kind, Scope scope, u32 source,
                            const std::vector<u32>& parts, u32 nilpotent_part,
                            const std::vector<bool>* za_hint) {
    ring.require_index(source);
    ring.require_index(nilpotent_part);
    for (u32 p : parts) ring.require_index(p);
    if (parts.size() != part_arity(kind)) throw ValidationError("wrong number of parts");

    const u32 target = decomposition_target(ring, kind, source);
    u32 sum = nilpotent_part;
    for (u32 p : parts) sum = ring.add(sum, p);
    if (sum != target) throw ValidationError("parts and nilpotent do not sum to the target");

    for (u32 p : parts)
        if (!part_identity_ok(ring, kind, p)) throw ValidationError("part identity fails");
    if (!is_nilpotent(ring, nilpotent_part))
        throw ValidationError("nilpotent part is not nilpotent");

    if (scope == Scope::in_za) {
        std::vector<bool> local;
        const std::vector<bool>* za = za_hint;
        if (za == nullptr) {
            local.assign(ring.size(), false);
            for (u32 x : subring_closure(ring, source)) local[x] = true;
            za = &local;
        }
        for (u32 p : parts)
            if (!(*za)[p]) throw ValidationError("part lies outside Z[a]");
        if (!(*za)[nilpotent_part]) throw ValidationError("nilpotent part lies outside Z[a]");
    }
    if (scope == Scope::in_za || scope == Scope::commuting) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (!ring.commutes(parts[i], target) || !ring.commutes(parts[i], nilpotent_part))
                throw ValidationError("scope requires commuting parts");
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                if (!ring.commutes(parts[i], parts[j]))
                    throw ValidationError("scope requires commuting parts");
        }
        if (!ring.commutes(nilpotent_part, target))
            throw ValidationError("scope requires commuting parts");
    }
}

Decomposition Decomposition::make(const Ring& ring, DecompKind kind, Scope scope, u32 source,
                                  std::vector<u32> parts, u32 nilpotent_part,
                                  const std::vector<bool>* za_hint) {
    validate_decomposition(ring, kind, scope, source, parts, nilpotent_part, za_hint);
    Decomposition d;
    d.kind_ = kind;
    d.scope_ = scope;
    d.source_ = source;
    d.target_ = decomposition_target(ring, kind, source);
    d.parts_ = std::move(parts);
    d.nilpotent_part_ = nilpotent_part;
    return d;
}

u32 zhou_polynomial(const Ring& ring, u32 a) {
    u32 a3 = ring.pow(a, 3);
    u32 a5 = ring.mul(ring.mul(a3, a), a);
    return ring.sub(ring.add(a5, ring.scale(4, a)), ring.scale(5, a3));
}

bool satisfies_quintic_identity(const Ring& ring, u32 e) {
    return zhou_polynomial(ring, e) == ring.zero();
}

bool zhou_criterion(const Ring& ring) {
    for (u32 a = 0; a < ring.size(); ++a)
        if (!is_nilpotent(ring, zhou_polynomial(ring, a))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Lifts

LiftResult lift_idempotent_traced(const Ring& ring, u32 b) {
    ring.require_index(b);
    if (!is_nilpotent(ring, ring.sub(b, ring.mul(b, b))))
        throw LiftError("b - b^2 is not nilpotent");
    u32 e = b;
    unsigned iters = 0;
    for (;;) {
        u32 e2 = ring.mul(e, e);
        if (e2 == e) return {e, iters};
        if (iters > 64) throw LiftError("idempotent lift failed to stabilize");
        u32 e3 = ring.mul(e2, e);
        e = ring.sub(ring.scale(3, e2), ring.scale(2, e3));
        ++iters;
    }
}

u32 lift_idempotent(const Ring& ring, u32 b) { return lift_idempotent_traced(ring, b).element; }

u32 lift_tripotent(const Ring& ring, u32 a) {
    ring.require_index(a);
    auto inv2 = inverse_of(ring, ring.int_image(2));
    if (!inv2) throw PreconditionError("2 is not a unit in " + ring.expr_text());
    if (!is_nilpotent(ring, ring.sub(a, ring.pow(a, 3))))
        throw LiftError("a - a^3 is not nilpotent");
    u32 a2 = ring.mul(a, a);
    u32 t = ring.sub(lift_idempotent(ring, ring.mul(ring.add(a2, a), *inv2)),
                     lift_idempotent(ring, ring.mul(ring.sub(a2, a), *inv2)));
    if (ring.pow(t, 3) != t) throw LiftError("tripotent lift failed");
    return t;
}

// ---------------------------------------------------------------------------
// CRT 2/3/5 splitting

namespace {

i64 egcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    i64 x1, y1;
    i64 g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

u64 crt_coefficient(u64 m, u64 prime_part) {
    if (prime_part == 1) return 0;
    u64 rest = m / prime_part;
    i64 x, y;
    i64 g = egcd(static_cast<i64>(rest % prime_part), static_cast<i64>(prime_part), x, y);
    if (g != 1) throw PreconditionError("characteristic factors are not coprime");
    i64 inv = ((x % static_cast<i64>(prime_part)) + static_cast<i64>(prime_part)) %
              static_cast<i64>(prime_part);
    return (rest % m) * static_cast<u64>(inv) % m;
}

}  // namespace

CrtIdempotents crt_split_235(const Ring& ring) {
    const u32 thirty = ring.int_image(30);
    unsigned n = 0;
    {
        u32 x = ring.one();
        for (std::size_t k = 1; k <= ring.size(); ++k) {
            x = ring.mul(x, thirty);
            if (x == ring.zero()) {
                n = static_cast<unsigned>(k);
                break;
            }
        }
    }
    if (n == 0) throw PreconditionError("30 is not nilpotent in " + ring.expr_text());

    // Characteristic m (additive order of 1) divides 30^n, so m = 2^a 3^b 5^c.
    u64 m = 1;
    for (u32 s = ring.one(); s != ring.zero(); s = ring.add(s, ring.one())) ++m;
    if (ring.one() == ring.zero()) m = 1;

    u64 parts[3] = {1, 1, 1};
    u64 rest = m;
    const u64 primes[3] = {2, 3, 5};
    for (int i = 0; i < 3; ++i)
        while (rest % primes[i] == 0) {
            parts[i] *= primes[i];
            rest /= primes[i];
        }
    if (rest != 1) throw PreconditionError("characteristic has a prime factor other than 2,3,5");

    CrtIdempotents out;
    out.n = n;
    u32 eps[3];
    for (int i = 0; i < 3; ++i) {
        u64 c = crt_coefficient(m, parts[i]);
        // Exactly idempotent already (m * 1 = 0); the lift is a fixed point.
        eps[i] = lift_idempotent(ring, ring.int_image(static_cast<i64>(c)));
    }
    out.eps2 = eps[0];
    out.eps3 = eps[1];
    out.eps5 = eps[2];
    return out;
}

// ---------------------------------------------------------------------------
// Constructive decompositions

namespace {

struct Split235 {
    CrtIdempotents eps;
    std::shared_ptr<const CornerRing> c2, c3, c5, c35;
    u32 eps35 = 0;
};

std::shared_ptr<const CornerRing> corner_at(const RingPtr& self, u32 eps) {
    return std::static_pointer_cast<const CornerRing>(make_corner(self, eps));
}

Split235 split_235(const Ring& ring) {
    Split235 s;
    s.eps = crt_split_235(ring);
    RingPtr self = ring.shared_from_this();
    s.c2 = corner_at(self, s.eps.eps2);
    s.c3 = corner_at(self, s.eps.eps3);
    s.c5 = corner_at(self, s.eps.eps5);
    s.eps35 = ring.add(s.eps.eps3, s.eps.eps5);
    s.c35 = corner_at(self, s.eps35);
    return s;
}

u32 into_corner(const CornerRing& corner, const Ring& ring, u32 eps, u32 a) {
    u32 x = ring.mul(ring.mul(eps, a), eps);
    auto i = corner.from_base(x);
    if (!i) throw LiftError("component image escaped its corner");
    return *i;
}

struct Lemma21 {
    u32 e, f, g, h, alpha, w;
};

// The Lemma 2.1 construction inside a component where 5 is nilpotent:
// x = 3a + a^2 + a^4, y = 3a - a^2 - a^4, four halved squares lifted to
// idempotents, alpha = e - f + g - h satisfies alpha^5 = 5 alpha^3 - 4 alpha
// exactly and a - alpha is nilpotent.
Lemma21 lemma21_construct(const Ring& comp, u32 a) {
    u32 a2 = comp.mul(a, a);
    u32 a4 = comp.mul(a2, a2);
    u32 x = comp.add(comp.scale(3, a), comp.add(a2, a4));
    u32 y = comp.sub(comp.scale(3, a), comp.add(a2, a4));
    auto inv2 = inverse_of(comp, comp.int_image(2));
    if (!inv2) throw PreconditionError("2 is not a unit in the 5-component");
    u32 x2 = comp.mul(x, x);
    u32 y2 = comp.mul(y, y);
    Lemma21 L;
    L.e = lift_idempotent(comp, comp.mul(comp.add(x2, x), *inv2));
    L.f = lift_idempotent(comp, comp.mul(comp.sub(x2, x), *inv2));
    L.g = lift_idempotent(comp, comp.mul(comp.add(y2, y), *inv2));
    L.h = lift_idempotent(comp, comp.mul(comp.sub(y2, y), *inv2));
    L.alpha = comp.sub(comp.add(L.e, L.g), comp.add(L.f, L.h));
    L.w = comp.sub(a, L.alpha);
    if (!is_nilpotent(comp, L.w)) throw LiftError("Lemma 2.1 remainder is not nilpotent");
    return L;
}

Decomposition constructive_four_idempotents(const Ring& ring, u32 a, Scope scope) {
    auto sp = split_235(ring);
    const CornerRing& c2 = *sp.c2;
    const CornerRing& c3 = *sp.c3;
    const CornerRing& c5 = *sp.c5;

    // 2-component is strongly nil-clean: a = e + w.
    u32 a2c = into_corner(c2, ring, sp.eps.eps2, a);
    u32 e2 = lift_idempotent(c2, a2c);
    std::array<u32, 4> p2{e2, c2.zero(), c2.zero(), c2.zero()};
    u32 w2 = c2.sub(a2c, e2);

    // 3-component: tripotent t = u - v with orthogonal idempotent halves;
    // -v = 2v modulo nilpotents because 3 is nilpotent here, so a = u + v + v + w.
    u32 a3c = into_corner(c3, ring, sp.eps.eps3, a);
    u32 t3 = lift_tripotent(c3, a3c);
    auto inv2_3 = inverse_of(c3, c3.int_image(2));
    if (!inv2_3) throw PreconditionError("2 is not a unit in the 3-component");
    u32 t3sq = c3.mul(t3, t3);
    u32 u3 = c3.mul(c3.add(t3sq, t3), *inv2_3);
    u32 v3 = c3.mul(c3.sub(t3sq, t3), *inv2_3);
    std::array<u32, 4> p3{u3, v3, v3, c3.zero()};
    u32 w3 = c3.sub(a3c, c3.add(u3, c3.add(v3, v3)));
    if (!is_nilpotent(c3, w3)) throw LiftError("3-component remainder is not nilpotent");

    // 5-component: Lemma 2.1 machinery applied to 2 - c, then
    // c = (1-e) + f + (1-g) + h - w.
    u32 a5c = into_corner(c5, ring, sp.eps.eps5, a);
    auto L = lemma21_construct(c5, c5.sub(c5.int_image(2), a5c));
    std::array<u32, 4> p5{c5.sub(c5.one(), L.e), L.f, c5.sub(c5.one(), L.g), L.h};
    u32 w5 = c5.neg(L.w);

    std::vector<u32> parts(4);
    for (int i = 0; i < 4; ++i)
        parts[i] = ring.add(c2.to_base(p2[i]),
                            ring.add(c3.to_base(p3[i]), c5.to_base(p5[i])));
    u32 w = ring.add(c2.to_base(w2), ring.add(c3.to_base(w3), c5.to_base(w5)));
    return Decomposition::make(ring, DecompKind::four_idempotents, scope, a, std::move(parts), w);
}

Decomposition constructive_two_tripotents(const Ring& ring, u32 a, Scope scope) {
    // Decompose 2 - a into four idempotents, then s = (1-e)-f, t = (1-h)-g.
    u32 two_minus_a = ring.sub(ring.int_image(2), a);
    auto d4 = constructive_four_idempotents(ring, two_minus_a, Scope::in_za);
    const auto& p = d4.parts();
    u32 s = ring.sub(ring.sub(ring.one(), p[0]), p[1]);
    u32 t = ring.sub(ring.sub(ring.one(), p[3]), p[2]);
    u32 w = ring.neg(d4.nilpotent_part());
    return Decomposition::make(ring, DecompKind::two_tripotents, scope, a, {s, t}, w);
}

Decomposition constructive_2idempotent(const Ring& ring, u32 a, Scope scope, bool square) {
    auto sp = split_235(ring);
    const CornerRing& c2 = *sp.c2;
    const CornerRing& s35 = *sp.c35;
    u32 a2c = into_corner(c2, ring, sp.eps.eps2, a);
    u32 aSc = into_corner(s35, ring, sp.eps35, a);
    u32 e2 = lift_idempotent(c2, square ? c2.mul(a2c, a2c) : a2c);
    u32 eS = lift_tripotent(s35, square ? s35.mul(aSc, aSc) : aSc);
    u32 e = ring.add(c2.to_base(e2), s35.to_base(eS));
    u32 target = square ? ring.mul(a, a) : a;
    u32 w = ring.sub(target, e);
    return Decomposition::make(
        ring, square ? DecompKind::square_2idempotent : DecompKind::one_2idempotent, scope, a,
        {e}, w);
}

}  // namespace

Decomposition quintic_witness(const Ring& ring, u32 a) {
    ring.require_index(a);
    if (!zhou_criterion(ring))
        throw NotApplicableError(ring.expr_text() + " fails the Zhou criterion");
    auto sp = split_235(ring);
    u32 e2 = lift_idempotent(*sp.c2, into_corner(*sp.c2, ring, sp.eps.eps2, a));
    u32 e3 = lift_tripotent(*sp.c3, into_corner(*sp.c3, ring, sp.eps.eps3, a));
    auto L = lemma21_construct(*sp.c5, into_corner(*sp.c5, ring, sp.eps.eps5, a));
    u32 e = ring.add(sp.c2->to_base(e2),
                     ring.add(sp.c3->to_base(e3), sp.c5->to_base(L.alpha)));
    return Decomposition::make(ring, DecompKind::quintic_witness, Scope::in_za, a, {e},
                               ring.sub(a, e));
}

std::optional<Decomposition> decompose_constructive(const Ring& ring, u32 a, DecompKind kind,
                                                    Scope scope) {
    ring.require_index(a);
    try {
        switch (kind) {
            case DecompKind::one_idempotent: {
                u32 e = lift_idempotent(ring, a);
                return Decomposition::make(ring, kind, scope, a, {e}, ring.sub(a, e));
            }
            case DecompKind::four_idempotents:
                return constructive_four_idempotents(ring, a, scope);
            case DecompKind::two_tripotents:
                return constructive_two_tripotents(ring, a, scope);
            case DecompKind::one_2idempotent:
                return constructive_2idempotent(ring, a, scope, /*square=*/false);
            case DecompKind::square_2idempotent:
                return constructive_2idempotent(ring, a, scope, /*square=*/true);
            case DecompKind::quintic_witness: {
                auto d = quintic_witness(ring, a);
                if (scope == Scope::in_za) return d;
                return Decomposition::make(ring, kind, scope, a, d.parts(), d.nilpotent_part());
            }
            default:
                return std::nullopt;
        }
    } catch (const RingError&) {
        return std::nullopt;  // constructive failure: caller falls back to the oracle
    }
}

// ---------------------------------------------------------------------------
// Brute-force oracle

namespace {

std::optional<Decomposition> brute_search(const Ring& ring, u32 a, DecompKind kind, Scope scope,
                                          bool exact_sum) {
    ring.require_index(a);
    const u32 target = decomposition_target(ring, kind, a);

    std::vector<u32> pool;
    for (u32 x = 0; x < ring.size(); ++x)
        if (part_identity_ok(ring, kind, x)) pool.push_back(x);

    std::optional<std::vector<bool>> za;
    if (scope == Scope::in_za) {
        za.emplace(ring.size(), false);
        for (u32 x : subring_closure(ring, a)) (*za)[x] = true;
        std::erase_if(pool, [&](u32 x) { return !(*za)[x]; });
    } else if (scope == Scope::commuting) {
        std::erase_if(pool, [&](u32 x) { return !ring.commutes(x, target); });
    }

    std::vector<bool> wmask(ring.size(), false);
    if (exact_sum) {
        wmask[ring.zero()] = true;
    } else {
        for (u32 x = 0; x < ring.size(); ++x)
            if (is_nilpotent(ring, x)) wmask[x] = true;
    }

    const unsigned arity = part_arity(kind);
    std::vector<u32> chosen(arity);
    std::optional<Decomposition> found;

    auto rec = [&](auto&& self, unsigned depth, u32 partial) -> bool {
        if (depth == arity) {
            u32 w = ring.sub(target, partial);
            if (!wmask[w]) return false;
            if (za && !(*za)[w]) return false;
            found = Decomposition::make(ring, kind, scope, a, chosen, w,
                                        za ? &*za : nullptr);
            return true;
        }
        for (u32 cand : pool) {
            if (scope == Scope::commuting) {
                bool ok = true;
                for (unsigned i = 0; i < depth; ++i)
                    if (!ring.commutes(cand, chosen[i])) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
            }
            chosen[depth] = cand;
            if (self(self, depth + 1, ring.add(partial, cand))) return true;
        }
        return false;
    };
    rec(rec, 0, ring.zero());
    return found;
}

}  // namespace

std::optional<Decomposition> brute_force_decompose(const Ring& ring, u32 a, DecompKind kind,
                                                   Scope scope) {
    return brute_search(ring, a, kind, scope, /*exact_sum=*/false);
}

std::optional<Decomposition> brute_force_decompose_exact(const Ring& ring, u32 a, DecompKind kind,
                                                         Scope scope) {
    return brute_search(ring, a, kind, scope, /*exact_sum=*/true);
}

std::optional<Decomposition> decompose(const Ring& ring, u32 a, DecompKind kind, Scope scope) {
    if (auto d = decompose_constructive(ring, a, kind, scope)) return d;
    return brute_force_decompose(ring, a, kind, scope);
}

}  // namespace ringlab
