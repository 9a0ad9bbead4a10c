#include "ringlab/expr.hpp"

#include <cctype>

namespace ringlab {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    RingExpr parse_expr_all() {
        RingExpr e = parse_expr(0);
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
        return e;
    }

    ElemLit parse_elem_all() {
        ElemLit l = parse_elem();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
        return l;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        return text_[pos_];
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    bool try_consume(char c) {
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool lookahead_word(const char* w) {
        skip_ws();
        std::size_t i = 0;
        while (w[i] != '\0') {
            if (pos_ + i >= text_.size() || text_[pos_ + i] != w[i]) return false;
            ++i;
        }
        return true;
    }

    void consume_word(const char* w) {
        skip_ws();
        std::size_t i = 0;
        while (w[i] != '\0') {
            if (pos_ >= text_.size() || text_[pos_] != w[i])
                throw ParseError(std::string("expected '") + w + "'", pos_);
            ++pos_;
            ++i;
        }
    }

    u64 parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected an integer", pos_);
        u64 v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<u64>(text_[pos_] - '0');
            if (v > (1ull << 62)) throw ParseError("integer too large", pos_);
            ++pos_;
        }
        return v;
    }

    i64 parse_int() {
        skip_ws();
        bool negative = try_consume('-');
        u64 v = parse_uint();
        return negative ? -static_cast<i64>(v) : static_cast<i64>(v);
    }

    RingExpr parse_expr(unsigned depth) {
        if (depth > kMaxExprDepth) throw ParseError("expression nested too deeply", pos_);
        char c = peek();
        RingExpr e;
        if (c == 'Z') {
            ++pos_;
            e.node = RingExpr::Node::zmod;
            e.n = parse_uint();
            return e;
        }
        if (c == 'M' || c == 'T') {
            ++pos_;
            e.node = (c == 'M') ? RingExpr::Node::matrix : RingExpr::Node::triangular;
            e.n = parse_uint();
            expect('(');
            e.children.push_back(parse_expr(depth + 1));
            expect(')');
            return e;
        }
        if (lookahead_word("prod")) {
            consume_word("prod");
            expect('(');
            e.node = RingExpr::Node::product;
            e.children.push_back(parse_expr(depth + 1));
            expect(',');
            e.children.push_back(parse_expr(depth + 1));
            while (peek() == ',') {
                ++pos_;
                if (e.children.size() >= kMaxProductArity)
                    throw ParseError("too many product factors", pos_);
                e.children.push_back(parse_expr(depth + 1));
            }
            expect(')');
            return e;
        }
        const char* word = nullptr;
        RingExpr::Node node{};
        if (lookahead_word("corner")) {
            word = "corner";
            node = RingExpr::Node::corner;
        } else if (lookahead_word("quot")) {
            word = "quot";
            node = RingExpr::Node::quotient;
        } else if (lookahead_word("gen")) {
            word = "gen";
            node = RingExpr::Node::subring;
        }
        if (word != nullptr) {
            consume_word(word);
            expect('(');
            e.node = node;
            e.children.push_back(parse_expr(depth + 1));
            expect(',');
            e.literal = parse_elem();
            expect(')');
            return e;
        }
        throw ParseError("expected a ring expression", pos_);
    }

    ElemLit parse_elem() {
        char c = peek();
        ElemLit l;
        if (c == '[') {
            ++pos_;
            l.kind = ElemLit::Kind::matrix;
            l.rows.push_back(parse_row());
            while (peek() == ',') {
                ++pos_;
                l.rows.push_back(parse_row());
            }
            expect(']');
            return l;
        }
        if (c == '(') {
            ++pos_;
            l.kind = ElemLit::Kind::tuple;
            l.items.push_back(parse_elem());
            while (peek() == ',') {
                ++pos_;
                l.items.push_back(parse_elem());
            }
            expect(')');
            return l;
        }
        l.kind = ElemLit::Kind::integer;
        l.value = parse_int();
        return l;
    }

    std::vector<ElemLit> parse_row() {
        expect('[');
        std::vector<ElemLit> row;
        row.push_back(parse_elem());
        while (peek() == ',') {
            ++pos_;
            row.push_back(parse_elem());
        }
        expect(']');
        return row;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

RingExpr parse_ring_expr(const std::string& text) { return Parser(text).parse_expr_all(); }

ElemLit parse_elem_literal(const std::string& text) { return Parser(text).parse_elem_all(); }

std::string print_elem_literal(const ElemLit& lit) {
    switch (lit.kind) {
        case ElemLit::Kind::integer:
            return std::to_string(lit.value);
        case ElemLit::Kind::matrix: {
            std::string out = "[";
            for (std::size_t r = 0; r < lit.rows.size(); ++r) {
                if (r) out += ',';
                out += '[';
                for (std::size_t c = 0; c < lit.rows[r].size(); ++c) {
                    if (c) out += ',';
                    out += print_elem_literal(lit.rows[r][c]);
                }
                out += ']';
            }
            return out + "]";
        }
        case ElemLit::Kind::tuple: {
            std::string out = "(";
            for (std::size_t i = 0; i < lit.items.size(); ++i) {
                if (i) out += ',';
                out += print_elem_literal(lit.items[i]);
            }
            return out + ")";
        }
    }
    throw UsageError("unknown literal kind");
}

std::string print_ring_expr(const RingExpr& expr) {
    switch (expr.node) {
        case RingExpr::Node::zmod:
            return "Z" + std::to_string(expr.n);
        case RingExpr::Node::matrix:
            return "M" + std::to_string(expr.n) + "(" + print_ring_expr(expr.children[0]) + ")";
        case RingExpr::Node::triangular:
            return "T" + std::to_string(expr.n) + "(" + print_ring_expr(expr.children[0]) + ")";
        case RingExpr::Node::product: {
            std::string out = "prod(";
            for (std::size_t i = 0; i < expr.children.size(); ++i) {
                if (i) out += ',';
                out += print_ring_expr(expr.children[i]);
            }
            return out + ")";
        }
        case RingExpr::Node::corner:
            return "corner(" + print_ring_expr(expr.children[0]) + "," +
                   print_elem_literal(*expr.literal) + ")";
        case RingExpr::Node::quotient:
            return "quot(" + print_ring_expr(expr.children[0]) + "," +
                   print_elem_literal(*expr.literal) + ")";
        case RingExpr::Node::subring:
            return "gen(" + print_ring_expr(expr.children[0]) + "," +
                   print_elem_literal(*expr.literal) + ")";
    }
    throw UsageError("unknown expression node");
}

u32 resolve_elem_literal(const ElemLit& lit, const Ring& ring) {
    if (lit.kind == ElemLit::Kind::integer) return ring.int_image(lit.value);

    switch (ring.kind()) {
        case Ring::Kind::matrix:
        case Ring::Kind::triangular: {
            if (lit.kind != ElemLit::Kind::matrix)
                throw UsageError("matrix ring elements need a matrix literal");
            const auto& mr = static_cast<const MatrixRingBase&>(ring);
            if (lit.rows.size() != mr.dim())
                throw UsageError("matrix literal has the wrong number of rows");
            std::vector<std::vector<u32>> rows;
            for (const auto& r : lit.rows) {
                std::vector<u32> row;
                for (const auto& cell : r) row.push_back(resolve_elem_literal(cell, *mr.base()));
                rows.push_back(std::move(row));
            }
            return mr.from_entries(rows);
        }
        case Ring::Kind::product: {
            if (lit.kind != ElemLit::Kind::tuple)
                throw UsageError("product ring elements need a tuple literal");
            const auto& pr = static_cast<const ProductRing&>(ring);
            if (lit.items.size() != pr.factors().size())
                throw UsageError("tuple literal has the wrong number of components");
            std::vector<u32> comps;
            for (std::size_t i = 0; i < lit.items.size(); ++i)
                comps.push_back(resolve_elem_literal(lit.items[i], *pr.factors()[i]));
            return pr.from_components(comps);
        }
        case Ring::Kind::corner: {
            const auto& cr = static_cast<const CornerRing&>(ring);
            u32 b = resolve_elem_literal(lit, *cr.base());
            auto i = cr.from_base(b);
            if (!i) throw UsageError("literal does not lie in the corner ring");
            return *i;
        }
        case Ring::Kind::quotient: {
            const auto& qr = static_cast<const QuotientRing&>(ring);
            return qr.project(resolve_elem_literal(lit, *qr.base()));
        }
        case Ring::Kind::subring: {
            const auto& sr = static_cast<const GeneratedSubring&>(ring);
            u32 b = resolve_elem_literal(lit, *sr.base());
            auto i = sr.from_base(b);
            if (!i) throw UsageError("literal does not lie in the generated subring");
            return *i;
        }
        case Ring::Kind::zmod:
            throw UsageError("Zn elements are integer literals");
    }
    throw UsageError("unknown ring kind");
}

RingPtr build_ring(const RingExpr& expr, std::size_t cap) {
    switch (expr.node) {
        case RingExpr::Node::zmod:
            return make_zmod(expr.n, cap);
        case RingExpr::Node::matrix:
            return make_matrix_ring(static_cast<unsigned>(expr.n), build_ring(expr.children[0], cap),
                                    cap);
        case RingExpr::Node::triangular:
            return make_triangular_ring(static_cast<unsigned>(expr.n),
                                        build_ring(expr.children[0], cap), cap);
        case RingExpr::Node::product: {
            std::vector<RingPtr> factors;
            for (const auto& c : expr.children) factors.push_back(build_ring(c, cap));
            return make_product(std::move(factors), cap);
        }
        case RingExpr::Node::corner: {
            RingPtr base = build_ring(expr.children[0], cap);
            return make_corner(base, resolve_elem_literal(*expr.literal, *base));
        }
        case RingExpr::Node::quotient: {
            RingPtr base = build_ring(expr.children[0], cap);
            return make_quotient_central(base, {resolve_elem_literal(*expr.literal, *base)});
        }
        case RingExpr::Node::subring: {
            RingPtr base = build_ring(expr.children[0], cap);
            return subring_generated(base, resolve_elem_literal(*expr.literal, *base));
        }
    }
    throw UsageError("unknown expression node");
}

}  // namespace ringlab
