#pragma once

/**
 * @file ring.hpp
 * @brief Finite unital rings with enumerated carriers and exact arithmetic.
 *
 * A ring is presented by a canonical enumeration of its carrier; elements are
 * indices into that enumeration. Constructors compose: Z/n, finite products,
 * full and upper-triangular matrix rings, corners eRe, quotients by centrally
 * generated ideals, and the subring Z[a] generated by a single element.
 */

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlab {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Default bound on carrier size for all constructors.
inline constexpr std::size_t kDefaultCarrierCap = 65536;

class RingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction would exceed the carrier cap.
class SizeLimitError : public RingError { public: using RingError::RingError; };
/// A stated precondition fails (non-idempotent corner seed, non-central generator, ...).
class PreconditionError : public RingError { public: using RingError::RingError; };
/// An idempotent/tripotent lift cannot proceed.
class LiftError : public RingError { public: using RingError::RingError; };
/// The ambient criterion an operation needs does not hold.
class NotApplicableError : public RingError { public: using RingError::RingError; };
/// Caller misuse: mismatched rings, out-of-range indices, unknown selectors.
class UsageError : public RingError { public: using RingError::RingError; };
/// A decomposition violating its defining identities.
class ValidationError : public RingError { public: using RingError::RingError; };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Element handle; meaningful only together with its owning ring.
/// Two handles are equal iff they name the same index of the same ring object.
struct Elem {
    const Ring* ring = nullptr;
    u32 index = 0;
    friend bool operator==(const Elem&, const Elem&) = default;
};

/**
 * Immutable finite unital ring. Index 0 is always the zero element.
 *
 * Operation tables are filled lazily and memoized for small rings; the fill is
 * idempotent (pure op, relaxed atomics), so concurrent readers are safe.
 * Instances must be owned by shared_ptr; always construct via the make_*
 * factories below.
 */
class Ring : public std::enable_shared_from_this<Ring> {
public:
    enum class Kind { zmod, product, matrix, triangular, corner, quotient, subring };

    virtual ~Ring();
    Ring(const Ring&) = delete;
    Ring& operator=(const Ring&) = delete;

    Kind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return size_; }
    u32 zero() const noexcept { return zero_; }
    u32 one() const noexcept { return one_; }

    u32 add(u32 a, u32 b) const;
    u32 mul(u32 a, u32 b) const;
    u32 neg(u32 a) const;
    u32 sub(u32 a, u32 b) const { return add(a, neg(b)); }
    u32 pow(u32 a, u64 k) const;

    /// m*a computed by repeated (doubling) addition; negative m via negation.
    u32 scale(i64 m, u32 a) const;
    /// Image of the integer m under Z -> R, i.e. m*1.
    u32 int_image(i64 m) const { return scale(m, one_); }

    bool commutes(u32 a, u32 b) const { return mul(a, b) == mul(b, a); }
    bool is_central(u32 a) const;

    Elem elem(u32 index) const;
    void require_index(u32 index) const;

    /// Canonical element literal in the CLI grammar ("5", "(1,2)", "[[1,0],[0,1]]").
    virtual std::string elem_literal(u32 a) const = 0;
    /// Canonical constructor expression, e.g. "T2(Z4)".
    const std::string& expr_text() const noexcept { return expr_text_; }

protected:
    Ring(Kind kind, std::size_t size, std::string expr_text, bool memoize_hint);
    void set_identities(u32 zero, u32 one);

    virtual u32 add_impl(u32, u32) const = 0;
    virtual u32 mul_impl(u32, u32) const = 0;
    virtual u32 neg_impl(u32) const = 0;

private:
    struct Memo;
    Memo& memo() const;

    Kind kind_;
    std::size_t size_;
    u32 zero_ = 0;
    u32 one_ = 0;
    bool memo_enabled_ = false;
    std::string expr_text_;
    mutable std::unique_ptr<Memo> memo_store_;
    mutable std::once_flag memo_once_;
};

// Checked element-level arithmetic; throws UsageError on ring mismatch.
Elem add(const Elem& a, const Elem& b);
Elem mul(const Elem& a, const Elem& b);
Elem neg(const Elem& a);
bool eq(const Elem& a, const Elem& b) noexcept;

class ZmodRing final : public Ring {
public:
    u64 modulus() const noexcept { return n_; }
    std::string elem_literal(u32 a) const override;

private:
    friend RingPtr make_zmod(u64, std::size_t);
    explicit ZmodRing(u64 n);
    u32 add_impl(u32 a, u32 b) const override;
    u32 mul_impl(u32 a, u32 b) const override;
    u32 neg_impl(u32 a) const override;
    u64 n_;
};

class ProductRing final : public Ring {
public:
    const std::vector<RingPtr>& factors() const noexcept { return factors_; }
    u32 component(u32 x, std::size_t i) const;
    u32 from_components(const std::vector<u32>& comps) const;
    std::string elem_literal(u32 a) const override;

private:
    friend RingPtr make_product(std::vector<RingPtr>, std::size_t);
    explicit ProductRing(std::vector<RingPtr> factors);
    u32 add_impl(u32, u32) const override;
    u32 mul_impl(u32, u32) const override;
    u32 neg_impl(u32) const override;
    void decode(u32 x, u32* out) const;
    u32 encode(const u32* comps) const;
    std::vector<RingPtr> factors_;
    std::vector<u64> strides_;  // strides_[i] = product of sizes of factors after i
};

/// Shared machinery for full and upper-triangular matrix rings: entries are
/// base-ring indices packed in mixed radix |B|, first listed position most
/// significant, positions in row-major order.
class MatrixRingBase : public Ring {
public:
    unsigned dim() const noexcept { return k_; }
    const RingPtr& base() const noexcept { return base_; }
    /// Entry at (r, c); positions absent from the shape read as base zero.
    u32 entry(u32 x, unsigned r, unsigned c) const;
    u32 from_entries(const std::vector<std::vector<u32>>& rows) const;
    std::string elem_literal(u32 a) const override;

protected:
    MatrixRingBase(Kind kind, unsigned k, RingPtr base, bool upper_only,
                   std::string expr_text, std::size_t size);
    u32 add_impl(u32, u32) const override;
    u32 mul_impl(u32, u32) const override;
    u32 neg_impl(u32) const override;

    static constexpr unsigned kMaxEntries = 64;
    void decode(u32 x, u32* ents) const;
    u32 encode(const u32* ents) const;
    int pos(unsigned r, unsigned c) const { return pos_[r * k_ + c]; }

    unsigned k_;
    RingPtr base_;
    bool upper_only_;
    unsigned count_;            // number of stored entries
    std::vector<int> pos_;      // (r,c) -> entry slot, -1 if outside the shape
};

class MatrixRing final : public MatrixRingBase {
private:
    friend RingPtr make_matrix_ring(unsigned, RingPtr, std::size_t);
    MatrixRing(unsigned k, RingPtr base, std::size_t size);
};

class TriangularRing final : public MatrixRingBase {
private:
    friend RingPtr make_triangular_ring(unsigned, RingPtr, std::size_t);
    TriangularRing(unsigned k, RingPtr base, std::size_t size);
};

/// Corner ring eRe for an idempotent e; carrier members are base elements.
class CornerRing final : public Ring {
public:
    const RingPtr& base() const noexcept { return base_; }
    u32 corner_idempotent() const noexcept { return e_; }
    u32 to_base(u32 a) const;
    std::optional<u32> from_base(u32 base_index) const;
    std::string elem_literal(u32 a) const override;

private:
    friend RingPtr make_corner(RingPtr, u32);
    CornerRing(RingPtr base, u32 e, std::vector<u32> carrier);
    u32 add_impl(u32, u32) const override;
    u32 mul_impl(u32, u32) const override;
    u32 neg_impl(u32) const override;
    RingPtr base_;
    u32 e_;
    std::vector<u32> carrier_;  // sorted base indices
};

/// Quotient by the two-sided ideal generated by central elements; the carrier
/// is the set of canonical (minimal-index) coset representatives.
class QuotientRing final : public Ring {
public:
    const RingPtr& base() const noexcept { return base_; }
    const std::vector<u32>& ideal() const noexcept { return ideal_; }
    /// Natural projection R -> R/I.
    u32 project(u32 base_index) const;
    u32 representative(u32 a) const;
    std::string elem_literal(u32 a) const override;

private:
    friend RingPtr make_quotient_central(RingPtr, std::vector<u32>);
    struct QuotientData {
        std::vector<u32> ideal;
        std::vector<u32> rep_of;
        std::vector<u32> carrier;
    };
    QuotientRing(RingPtr base, std::vector<u32> gens, QuotientData data);
    u32 add_impl(u32, u32) const override;
    u32 mul_impl(u32, u32) const override;
    u32 neg_impl(u32) const override;
    RingPtr base_;
    std::vector<u32> gens_;
    std::vector<u32> ideal_;    // sorted
    std::vector<u32> rep_of_;   // base index -> canonical representative
    std::vector<u32> carrier_;  // sorted representatives
};

/// Z[a]: smallest subring of the base containing 0, 1 and a. Commutative.
class GeneratedSubring final : public Ring {
public:
    const RingPtr& base() const noexcept { return base_; }
    u32 generator() const noexcept { return gen_; }
    bool contains_base(u32 base_index) const;
    u32 to_base(u32 a) const;
    std::optional<u32> from_base(u32 base_index) const;
    std::string elem_literal(u32 a) const override;

private:
    friend RingPtr subring_generated(RingPtr, u32);
    GeneratedSubring(RingPtr base, u32 gen, std::vector<u32> carrier);
    u32 add_impl(u32, u32) const override;
    u32 mul_impl(u32, u32) const override;
    u32 neg_impl(u32) const override;
    RingPtr base_;
    u32 gen_;
    std::vector<u32> carrier_;  // sorted base indices
};

RingPtr make_zmod(u64 n, std::size_t cap = kDefaultCarrierCap);
RingPtr make_product(std::vector<RingPtr> factors, std::size_t cap = kDefaultCarrierCap);
RingPtr make_matrix_ring(unsigned k, RingPtr base, std::size_t cap = kDefaultCarrierCap);
RingPtr make_triangular_ring(unsigned k, RingPtr base, std::size_t cap = kDefaultCarrierCap);
RingPtr make_corner(RingPtr base, u32 idempotent);
RingPtr make_quotient_central(RingPtr base, std::vector<u32> central_gens);
RingPtr subring_generated(RingPtr base, u32 generator);

/// Sorted member set of the smallest subring of `ring` containing 0, 1 and a.
std::vector<u32> subring_closure(const Ring& ring, u32 a);

}  // namespace ringlab
