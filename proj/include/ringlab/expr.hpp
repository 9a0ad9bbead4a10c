#pragma once

/**
 * @file expr.hpp
 * @brief Ring-description grammar: parser, printer, builder.
 *
 *   expr := "Z" int | "prod(" expr ("," expr)+ ")" | "M" int "(" expr ")"
 *         | "T" int "(" expr ")" | "corner(" expr "," elem ")"
 *         | "quot(" expr "," elem ")" | "gen(" expr "," elem ")"
 *   elem := int | "[" row ("," row)* "]" | "(" elem ("," elem)* ")"
 *   row  := "[" elem ("," elem)* "]"
 *
 * Whitespace-insensitive. Integer element literals mean int_image.
 */

#include <cstddef>

#include "ringlab/ring.hpp"

namespace ringlab {

class ParseError : public RingError {
public:
    ParseError(const std::string& message, std::size_t offset)
        : RingError(message + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

struct ElemLit {
    enum class Kind { integer, matrix, tuple };
    Kind kind = Kind::integer;
    i64 value = 0;                            // integer
    std::vector<std::vector<ElemLit>> rows;   // matrix
    std::vector<ElemLit> items;               // tuple
    bool operator==(const ElemLit&) const = default;
};

struct RingExpr {
    enum class Node { zmod, product, matrix, triangular, corner, quotient, subring };
    Node node = Node::zmod;
    u64 n = 0;                       // zmod modulus or matrix dimension
    std::vector<RingExpr> children;  // base ring(s)
    std::optional<ElemLit> literal;  // corner/quot/gen argument
    bool operator==(const RingExpr&) const = default;
};

inline constexpr unsigned kMaxExprDepth = 32;
inline constexpr std::size_t kMaxProductArity = 16;

RingExpr parse_ring_expr(const std::string& text);
std::string print_ring_expr(const RingExpr& expr);

ElemLit parse_elem_literal(const std::string& text);
std::string print_elem_literal(const ElemLit& lit);

/// Recursively constructs the ring (and resolves embedded element literals).
RingPtr build_ring(const RingExpr& expr, std::size_t cap = kDefaultCarrierCap);

/// Resolves a literal against a ring: integers via int_image, matrices and
/// tuples entrywise; corner/quotient/subring literals resolve against the base
/// and are mapped in. Throws UsageError on a type mismatch.
u32 resolve_elem_literal(const ElemLit& lit, const Ring& ring);

}  // namespace ringlab
