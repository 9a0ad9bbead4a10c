#include "ringlab/ring.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace ringlab {

namespace {

constexpr std::size_t kMemoMaxSize = 1024;
constexpr u32 kUnset = 0xFFFFFFFFu;

// b^e with saturation above cap; returns cap+1 on overflow past cap.
std::size_t checked_pow(std::size_t b, unsigned e, std::size_t cap) {
    std::size_t acc = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (b != 0 && acc > cap / b) return cap + 1;
        acc *= b;
        if (acc > cap) return cap + 1;
    }
    return acc;
}

u32 find_in_sorted(const std::vector<u32>& v, u32 x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) throw UsageError("element not in carrier");
    return static_cast<u32>(it - v.begin());
}

std::optional<u32> try_find_in_sorted(const std::vector<u32>& v, u32 x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) return std::nullopt;
    return static_cast<u32>(it - v.begin());
}

}  // namespace

struct Ring::Memo {
    std::unique_ptr<std::atomic<u32>[]> add_cells;
    std::unique_ptr<std::atomic<u32>[]> mul_cells;
    std::unique_ptr<std::atomic<u32>[]> neg_cells;
};

Ring::Ring(Kind kind, std::size_t size, std::string expr_text, bool memoize_hint)
    : kind_(kind),
      size_(size),
      memo_enabled_(memoize_hint && size >= 2 && size <= kMemoMaxSize),
      expr_text_(std::move(expr_text)) {
    if (size == 0) throw PreconditionError("ring carrier cannot be empty");
    if (size > 0xFFFFFFFFull) throw SizeLimitError("carrier does not fit 32-bit element indices");
}

Ring::~Ring() = default;

void Ring::set_identities(u32 zero, u32 one) {
    zero_ = zero;
    one_ = one;
}

Ring::Memo& Ring::memo() const {
    std::call_once(memo_once_, [this] {
        auto m = std::make_unique<Memo>();
        const std::size_t n2 = size_ * size_;
        m->add_cells.reset(new std::atomic<u32>[n2]);
        m->mul_cells.reset(new std::atomic<u32>[n2]);
        m->neg_cells.reset(new std::atomic<u32>[size_]);
        for (std::size_t i = 0; i < n2; ++i) {
            m->add_cells[i].store(kUnset, std::memory_order_relaxed);
            m->mul_cells[i].store(kUnset, std::memory_order_relaxed);
        }
        for (std::size_t i = 0; i < size_; ++i)
            m->neg_cells[i].store(kUnset, std::memory_order_relaxed);
        memo_store_ = std::move(m);
    });
    return *memo_store_;
}

u32 Ring::add(u32 a, u32 b) const {
    if (!memo_enabled_) return add_impl(a, b);
    auto& cell = memo().add_cells[static_cast<std::size_t>(a) * size_ + b];
    u32 v = cell.load(std::memory_order_relaxed);
    if (v == kUnset) {
        v = add_impl(a, b);
        cell.store(v, std::memory_order_relaxed);
    }
    return v;
}

u32 Ring::mul(u32 a, u32 b) const {
    if (!memo_enabled_) return mul_impl(a, b);
    auto& cell = memo().mul_cells[static_cast<std::size_t>(a) * size_ + b];
    u32 v = cell.load(std::memory_order_relaxed);
    if (v == kUnset) {
        v = mul_impl(a, b);
        cell.store(v, std::memory_order_relaxed);
    }
    return v;
}

u32 Ring::neg(u32 a) const {
    if (!memo_enabled_) return neg_impl(a);
    auto& cell = memo().neg_cells[a];
    u32 v = cell.load(std::memory_order_relaxed);
    if (v == kUnset) {
        v = neg_impl(a);
        cell.store(v, std::memory_order_relaxed);
    }
    return v;
}

u32 Ring::pow(u32 a, u64 k) const {
    u32 acc = one_;
    u32 base = a;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return acc;
}

u32 Ring::scale(i64 m, u32 a) const {
    bool negate = m < 0;
    u64 k = negate ? static_cast<u64>(-(m + 1)) + 1 : static_cast<u64>(m);
    u32 acc = zero_;
    u32 base = a;
    while (k > 0) {
        if (k & 1) acc = add(acc, base);
        k >>= 1;
        if (k) base = add(base, base);
    }
    return negate ? neg(acc) : acc;
}

bool Ring::is_central(u32 a) const {
    for (u32 r = 0; r < size_; ++r)
        if (mul(a, r) != mul(r, a)) return false;
    return true;
}

Elem Ring::elem(u32 index) const {
    require_index(index);
    return Elem{this, index};
}

void Ring::require_index(u32 index) const {
    if (index >= size_) throw UsageError("element index out of range for " + expr_text_);
}

Elem add(const Elem& a, const Elem& b) {
    if (a.ring == nullptr || a.ring != b.ring) throw UsageError("elements belong to different rings");
    return Elem{a.ring, a.ring->add(a.index, b.index)};
}

Elem mul(const Elem& a, const Elem& b) {
    if (a.ring == nullptr || a.ring != b.ring) throw UsageError("elements belong to different rings");
    return Elem{a.ring, a.ring->mul(a.index, b.index)};
}

Elem neg(const Elem& a) {
    if (a.ring == nullptr) throw UsageError("element has no owning ring");
    return Elem{a.ring, a.ring->neg(a.index)};
}

bool eq(const Elem& a, const Elem& b) noexcept { return a == b; }

// ---------------------------------------------------------------------------
// Z/nZ

ZmodRing::ZmodRing(u64 n)
    : Ring(Kind::zmod, static_cast<std::size_t>(n), "Z" + std::to_string(n),
           /*memoize_hint=*/false),
      n_(n) {
    set_identities(0, n == 1 ? 0 : 1);
}

u32 ZmodRing::add_impl(u32 a, u32 b) const {
    u64 s = static_cast<u64>(a) + b;
    return static_cast<u32>(s >= n_ ? s - n_ : s);
}

u32 ZmodRing::mul_impl(u32 a, u32 b) const {
    return static_cast<u32>((static_cast<u64>(a) * b) % n_);
}

u32 ZmodRing::neg_impl(u32 a) const { return a == 0 ? 0 : static_cast<u32>(n_ - a); }

std::string ZmodRing::elem_literal(u32 a) const { return std::to_string(a); }

RingPtr make_zmod(u64 n, std::size_t cap) {
    if (n < 1) throw PreconditionError("zmod modulus must be positive");
    if (n > cap) throw SizeLimitError("Z" + std::to_string(n) + " exceeds carrier cap");
    return RingPtr(new ZmodRing(n));
}

// ---------------------------------------------------------------------------
// Finite products

ProductRing::ProductRing(std::vector<RingPtr> factors)
    : Ring(Kind::product,
           [&] {
               std::size_t s = 1;
               for (const auto& f : factors) s *= f->size();
               return s;
           }(),
           [&] {
               std::string t = "prod(";
               for (std::size_t i = 0; i < factors.size(); ++i) {
                   if (i) t += ',';
                   t += factors[i]->expr_text();
               }
               return t + ")";
           }(),
           /*memoize_hint=*/true),
      factors_(std::move(factors)) {
    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;)
        strides_[i - 1] = strides_[i] * factors_[i]->size();
    std::vector<u32> ones;
    ones.reserve(factors_.size());
    for (const auto& f : factors_) ones.push_back(f->one());
    set_identities(0, encode(ones.data()));
}

void ProductRing::decode(u32 x, u32* out) const {
    u64 rest = x;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        out[i] = static_cast<u32>(rest / strides_[i]);
        rest %= strides_[i];
    }
}

u32 ProductRing::encode(const u32* comps) const {
    u64 acc = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) acc += comps[i] * strides_[i];
    return static_cast<u32>(acc);
}

u32 ProductRing::component(u32 x, std::size_t i) const {
    require_index(x);
    if (i >= factors_.size()) throw UsageError("product component out of range");
    return static_cast<u32>((x / strides_[i]) % factors_[i]->size());
}

u32 ProductRing::from_components(const std::vector<u32>& comps) const {
    if (comps.size() != factors_.size()) throw UsageError("component count mismatch");
    for (std::size_t i = 0; i < comps.size(); ++i) factors_[i]->require_index(comps[i]);
    return encode(comps.data());
}

u32 ProductRing::add_impl(u32 a, u32 b) const {
    u32 xa[64], xb[64];
    const std::size_t m = factors_.size();
    if (m > 64) throw SizeLimitError("too many product factors");
    decode(a, xa);
    decode(b, xb);
    for (std::size_t i = 0; i < m; ++i) xa[i] = factors_[i]->add(xa[i], xb[i]);
    return encode(xa);
}

u32 ProductRing::mul_impl(u32 a, u32 b) const {
    u32 xa[64], xb[64];
    const std::size_t m = factors_.size();
    if (m > 64) throw SizeLimitError("too many product factors");
    decode(a, xa);
    decode(b, xb);
    for (std::size_t i = 0; i < m; ++i) xa[i] = factors_[i]->mul(xa[i], xb[i]);
    return encode(xa);
}

u32 ProductRing::neg_impl(u32 a) const {
    u32 xa[64];
    decode(a, xa);
    for (std::size_t i = 0; i < factors_.size(); ++i) xa[i] = factors_[i]->neg(xa[i]);
    return encode(xa);
}

std::string ProductRing::elem_literal(u32 a) const {
    std::string out = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ',';
        out += factors_[i]->elem_literal(component(a, i));
    }
    return out + ")";
}

RingPtr make_product(std::vector<RingPtr> factors, std::size_t cap) {
    if (factors.empty()) throw PreconditionError("product needs at least one factor");
    if (factors.size() > 64) throw SizeLimitError("too many product factors");
    std::size_t s = 1;
    for (const auto& f : factors) {
        if (!f) throw UsageError("null factor");
        if (f->size() != 0 && s > cap / f->size()) throw SizeLimitError("product exceeds carrier cap");
        s *= f->size();
    }
    if (s > cap) throw SizeLimitError("product exceeds carrier cap");
    return RingPtr(new ProductRing(std::move(factors)));
}

// ---------------------------------------------------------------------------
// Matrix rings

MatrixRingBase::MatrixRingBase(Kind kind, unsigned k, RingPtr base, bool upper_only,
                               std::string expr_text, std::size_t size)
    : Ring(kind, size, std::move(expr_text), /*memoize_hint=*/true),
      k_(k),
      base_(std::move(base)),
      upper_only_(upper_only) {
    pos_.assign(static_cast<std::size_t>(k_) * k_, -1);
    unsigned slot = 0;
    for (unsigned r = 0; r < k_; ++r)
        for (unsigned c = 0; c < k_; ++c)
            if (!upper_only_ || c >= r) pos_[r * k_ + c] = static_cast<int>(slot++);
    count_ = slot;
    u32 ents[kMaxEntries];
    for (unsigned i = 0; i < count_; ++i) ents[i] = base_->zero();
    for (unsigned r = 0; r < k_; ++r) ents[pos_[r * k_ + r]] = base_->one();
    set_identities(0, encode(ents));
}

void MatrixRingBase::decode(u32 x, u32* ents) const {
    const u64 radix = base_->size();
    u64 rest = x;
    for (unsigned i = count_; i-- > 0;) {
        ents[i] = static_cast<u32>(rest % radix);
        rest /= radix;
    }
}

u32 MatrixRingBase::encode(const u32* ents) const {
    const u64 radix = base_->size();
    u64 acc = 0;
    for (unsigned i = 0; i < count_; ++i) acc = acc * radix + ents[i];
    return static_cast<u32>(acc);
}

u32 MatrixRingBase::entry(u32 x, unsigned r, unsigned c) const {
    require_index(x);
    if (r >= k_ || c >= k_) throw UsageError("matrix position out of range");
    int p = pos(r, c);
    if (p < 0) return base_->zero();
    u32 ents[kMaxEntries];
    decode(x, ents);
    return ents[p];
}

u32 MatrixRingBase::from_entries(const std::vector<std::vector<u32>>& rows) const {
    if (rows.size() != k_) throw UsageError("matrix literal row count mismatch");
    u32 ents[kMaxEntries];
    for (unsigned r = 0; r < k_; ++r) {
        if (rows[r].size() != k_) throw UsageError("matrix literal column count mismatch");
        for (unsigned c = 0; c < k_; ++c) {
            base_->require_index(rows[r][c]);
            int p = pos(r, c);
            if (p < 0) {
                if (rows[r][c] != base_->zero())
                    throw UsageError("below-diagonal entry of a triangular matrix must be zero");
            } else {
                ents[p] = rows[r][c];
            }
        }
    }
    return encode(ents);
}

u32 MatrixRingBase::add_impl(u32 a, u32 b) const {
    u32 xa[kMaxEntries], xb[kMaxEntries];
    decode(a, xa);
    decode(b, xb);
    for (unsigned i = 0; i < count_; ++i) xa[i] = base_->add(xa[i], xb[i]);
    return encode(xa);
}

u32 MatrixRingBase::mul_impl(u32 a, u32 b) const {
    u32 xa[kMaxEntries], xb[kMaxEntries], xc[kMaxEntries];
    decode(a, xa);
    decode(b, xb);
    for (unsigned r = 0; r < k_; ++r) {
        for (unsigned c = 0; c < k_; ++c) {
            int p = pos(r, c);
            if (p < 0) continue;
            u32 acc = base_->zero();
            const unsigned mlo = upper_only_ ? r : 0;
            const unsigned mhi = upper_only_ ? c + 1 : k_;
            for (unsigned m = mlo; m < mhi; ++m) {
                int pa = pos(r, m), pb = pos(m, c);
                if (pa < 0 || pb < 0) continue;
                acc = base_->add(acc, base_->mul(xa[pa], xb[pb]));
            }
            xc[p] = acc;
        }
    }
    return encode(xc);
}

u32 MatrixRingBase::neg_impl(u32 a) const {
    u32 xa[kMaxEntries];
    decode(a, xa);
    for (unsigned i = 0; i < count_; ++i) xa[i] = base_->neg(xa[i]);
    return encode(xa);
}

std::string MatrixRingBase::elem_literal(u32 a) const {
    u32 ents[kMaxEntries];
    decode(a, ents);
    std::string out = "[";
    for (unsigned r = 0; r < k_; ++r) {
        if (r) out += ',';
        out += '[';
        for (unsigned c = 0; c < k_; ++c) {
            if (c) out += ',';
            int p = pos(r, c);
            out += base_->elem_literal(p < 0 ? base_->zero() : ents[p]);
        }
        out += ']';
    }
    return out + "]";
}

MatrixRing::MatrixRing(unsigned k, RingPtr base, std::size_t size)
    : MatrixRingBase(Kind::matrix, k, base, /*upper_only=*/false,
                     "M" + std::to_string(k) + "(" + base->expr_text() + ")", size) {}

TriangularRing::TriangularRing(unsigned k, RingPtr base, std::size_t size)
    : MatrixRingBase(Kind::triangular, k, base, /*upper_only=*/true,
                     "T" + std::to_string(k) + "(" + base->expr_text() + ")", size) {}

RingPtr make_matrix_ring(unsigned k, RingPtr base, std::size_t cap) {
    if (k < 1) throw PreconditionError("matrix dimension must be positive");
    if (!base) throw UsageError("null base ring");
    if (k * k > 64) throw SizeLimitError("matrix dimension too large");
    std::size_t s = checked_pow(base->size(), k * k, cap);
    if (s > cap) throw SizeLimitError(base->expr_text() + "^" + std::to_string(k * k) +
                                      " exceeds carrier cap");
    return RingPtr(new MatrixRing(k, std::move(base), s));
}

RingPtr make_triangular_ring(unsigned k, RingPtr base, std::size_t cap) {
    if (k < 1) throw PreconditionError("matrix dimension must be positive");
    if (!base) throw UsageError("null base ring");
    unsigned ents = k * (k + 1) / 2;
    if (ents > 64) throw SizeLimitError("matrix dimension too large");
    std::size_t s = checked_pow(base->size(), ents, cap);
    if (s > cap) throw SizeLimitError(base->expr_text() + "^" + std::to_string(ents) +
                                      " exceeds carrier cap");
    return RingPtr(new TriangularRing(k, std::move(base), s));
}

// ---------------------------------------------------------------------------
// Corner eRe

CornerRing::CornerRing(RingPtr base, u32 e, std::vector<u32> carrier)
    : Ring(Kind::corner, carrier.size(),
           "corner(" + base->expr_text() + "," + base->elem_literal(e) + ")",
           /*memoize_hint=*/true),
      base_(std::move(base)),
      e_(e),
      carrier_(std::move(carrier)) {
    set_identities(find_in_sorted(carrier_, base_->zero()), find_in_sorted(carrier_, e_));
}

u32 CornerRing::to_base(u32 a) const {
    require_index(a);
    return carrier_[a];
}

std::optional<u32> CornerRing::from_base(u32 base_index) const {
    return try_find_in_sorted(carrier_, base_index);
}

u32 CornerRing::add_impl(u32 a, u32 b) const {
    return find_in_sorted(carrier_, base_->add(carrier_[a], carrier_[b]));
}

u32 CornerRing::mul_impl(u32 a, u32 b) const {
    return find_in_sorted(carrier_, base_->mul(carrier_[a], carrier_[b]));
}

u32 CornerRing::neg_impl(u32 a) const {
    return find_in_sorted(carrier_, base_->neg(carrier_[a]));
}

std::string CornerRing::elem_literal(u32 a) const {
    require_index(a);
    return base_->elem_literal(carrier_[a]);
}

RingPtr make_corner(RingPtr base, u32 idempotent) {
    if (!base) throw UsageError("null base ring");
    base->require_index(idempotent);
    if (base->mul(idempotent, idempotent) != idempotent)
        throw PreconditionError("corner seed is not idempotent");
    std::vector<u32> carrier;
    std::vector<bool> seen(base->size(), false);
    for (u32 r = 0; r < base->size(); ++r) {
        u32 x = base->mul(base->mul(idempotent, r), idempotent);
        if (!seen[x]) {
            seen[x] = true;
            carrier.push_back(x);
        }
    }
    std::sort(carrier.begin(), carrier.end());
    return RingPtr(new CornerRing(std::move(base), idempotent, std::move(carrier)));
}

// ---------------------------------------------------------------------------
// Central quotients

QuotientRing::QuotientRing(RingPtr base, std::vector<u32> gens, QuotientData data)
    : Ring(Kind::quotient, data.carrier.size(),
           [&] {
               std::string t = "quot(" + base->expr_text();
               for (u32 g : gens) t += "," + base->elem_literal(g);
               return t + ")";
           }(),
           /*memoize_hint=*/true),
      base_(std::move(base)),
      gens_(std::move(gens)),
      ideal_(std::move(data.ideal)),
      rep_of_(std::move(data.rep_of)),
      carrier_(std::move(data.carrier)) {
    set_identities(find_in_sorted(carrier_, rep_of_[base_->zero()]),
                   find_in_sorted(carrier_, rep_of_[base_->one()]));
}

u32 QuotientRing::project(u32 base_index) const {
    base_->require_index(base_index);
    return find_in_sorted(carrier_, rep_of_[base_index]);
}

u32 QuotientRing::representative(u32 a) const {
    require_index(a);
    return carrier_[a];
}

u32 QuotientRing::add_impl(u32 a, u32 b) const {
    return find_in_sorted(carrier_, rep_of_[base_->add(carrier_[a], carrier_[b])]);
}

u32 QuotientRing::mul_impl(u32 a, u32 b) const {
    return find_in_sorted(carrier_, rep_of_[base_->mul(carrier_[a], carrier_[b])]);
}

u32 QuotientRing::neg_impl(u32 a) const {
    return find_in_sorted(carrier_, rep_of_[base_->neg(carrier_[a])]);
}

std::string QuotientRing::elem_literal(u32 a) const {
    require_index(a);
    return base_->elem_literal(carrier_[a]);
}

RingPtr make_quotient_central(RingPtr base, std::vector<u32> central_gens) {
    if (!base) throw UsageError("null base ring");
    for (u32 g : central_gens) {
        base->require_index(g);
        if (!base->is_central(g))
            throw PreconditionError("quotient generator " + base->elem_literal(g) +
                                    " is not central");
    }
    const std::size_t n = base->size();

    // Two-sided ideal: for central generators this is the additive span of
    // { r*g : r in R, g in gens }.
    std::vector<u32> pool;
    {
        std::vector<bool> seen(n, false);
        for (u32 g : central_gens)
            for (u32 r = 0; r < n; ++r) {
                u32 x = base->mul(r, g);
                if (!seen[x]) {
                    seen[x] = true;
                    pool.push_back(x);
                }
            }
    }
    std::vector<bool> in_ideal(n, false);
    std::vector<u32> ideal;
    std::deque<u32> frontier;
    in_ideal[base->zero()] = true;
    ideal.push_back(base->zero());
    frontier.push_back(base->zero());
    while (!frontier.empty()) {
        u32 x = frontier.front();
        frontier.pop_front();
        for (u32 p : pool) {
            u32 y = base->add(x, p);
            if (!in_ideal[y]) {
                in_ideal[y] = true;
                ideal.push_back(y);
                frontier.push_back(y);
            }
        }
    }
    std::sort(ideal.begin(), ideal.end());

    QuotientRing::QuotientData data;
    data.ideal = ideal;
    data.rep_of.assign(n, 0);
    std::vector<bool> is_rep(n, false);
    for (u32 x = 0; x < n; ++x) {
        u32 rep = x;
        for (u32 i : ideal) rep = std::min(rep, base->add(x, i));
        data.rep_of[x] = rep;
        if (!is_rep[rep]) {
            is_rep[rep] = true;
            data.carrier.push_back(rep);
        }
    }
    std::sort(data.carrier.begin(), data.carrier.end());
    return RingPtr(new QuotientRing(std::move(base), std::move(central_gens), std::move(data)));
}

// ---------------------------------------------------------------------------
// Generated subrings

GeneratedSubring::GeneratedSubring(RingPtr base, u32 gen, std::vector<u32> carrier)
    : Ring(Kind::subring, carrier.size(),
           "gen(" + base->expr_text() + "," + base->elem_literal(gen) + ")",
           /*memoize_hint=*/true),
      base_(std::move(base)),
      gen_(gen),
      carrier_(std::move(carrier)) {
    set_identities(find_in_sorted(carrier_, base_->zero()),
                   find_in_sorted(carrier_, base_->one()));
}

bool GeneratedSubring::contains_base(u32 base_index) const {
    return try_find_in_sorted(carrier_, base_index).has_value();
}

u32 GeneratedSubring::to_base(u32 a) const {
    require_index(a);
    return carrier_[a];
}

std::optional<u32> GeneratedSubring::from_base(u32 base_index) const {
    return try_find_in_sorted(carrier_, base_index);
}

u32 GeneratedSubring::add_impl(u32 a, u32 b) const {
    return find_in_sorted(carrier_, base_->add(carrier_[a], carrier_[b]));
}

u32 GeneratedSubring::mul_impl(u32 a, u32 b) const {
    return find_in_sorted(carrier_, base_->mul(carrier_[a], carrier_[b]));
}

u32 GeneratedSubring::neg_impl(u32 a) const {
    return find_in_sorted(carrier_, base_->neg(carrier_[a]));
}

std::string GeneratedSubring::elem_literal(u32 a) const {
    require_index(a);
    return base_->elem_literal(carrier_[a]);
}

std::vector<u32> subring_closure(const Ring& ring, u32 a) {
    ring.require_index(a);
    std::vector<bool> in(ring.size(), false);
    std::vector<u32> members;
    std::vector<u32> work;
    auto push = [&](u32 x) {
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
            work.push_back(x);
        }
    };
    push(ring.zero());
    push(ring.one());
    push(a);
    while (!work.empty()) {
        u32 x = work.back();
        work.pop_back();
        push(ring.neg(x));
        // members grows during the loop; new entries pair with x when they pop.
        for (std::size_t i = 0; i < members.size(); ++i) {
            u32 y = members[i];
            push(ring.add(x, y));
            push(ring.mul(x, y));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

RingPtr subring_generated(RingPtr base, u32 generator) {
    if (!base) throw UsageError("null base ring");
    auto carrier = subring_closure(*base, generator);
    return RingPtr(new GeneratedSubring(std::move(base), generator, std::move(carrier)));
}

}  // namespace ringlab
