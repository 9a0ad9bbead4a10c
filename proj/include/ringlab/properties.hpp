#pragma once

/**
 * @file properties.hpp
 * @brief Ring-level property deciders and the theorem-verification harness.
 */

#include "ringlab/classify.hpp"
#include "ringlab/decompose.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

enum class RingProperty {
    zhou_nil_clean,
    strongly_nil_clean,
    strongly_2_nil_clean,
    kosan,
    exchange,
    clean,
    units_square_unipotent,
    matrix_tripotent_sum,  // Theorem-3.7 check; meaningful for matrix rings only
};

const char* to_string(RingProperty p);
std::optional<RingProperty> parse_property(const std::string& text);

struct Counterexample {
    u32 element = 0;
    std::string condition;
};

struct PropertyVerdict {
    RingProperty property{};
    bool holds = false;
    std::optional<Counterexample> counterexample;  // present whenever holds is false
    // element -> witness decomposition, ascending by element (on request).
    std::optional<std::vector<std::pair<u32, Decomposition>>> witnesses;
};

PropertyVerdict check_property(const Ring& ring, RingProperty property,
                               bool want_witnesses = false);

/// Re-runs the single-element condition a counterexample cites.
bool counterexample_violates(const Ring& ring, RingProperty property, u32 element);

/// n has no prime factor other than 2, 3, 5 (trial division; no ring machinery).
bool zn_kosan_numbertheory(u64 n);

/// Exhaustive check that every matrix is tripotent + tripotent + nilpotent
/// (unrestricted). Pre: ring built by make_matrix_ring.
PropertyVerdict matrix_tripotent_sum_check(const Ring& ring);

/// Elements f of the ring with f^5 = f and a - f nilpotent (Example 2.4 audit).
std::vector<u32> fifth_power_fixed_witnesses(const Ring& ring, u32 a);

struct TheoremRingDetail {
    std::string ring;
    bool agree = true;
    std::string note;
};

struct TheoremRow {
    std::string id;
    std::string statement;
    bool pass = true;
    std::vector<TheoremRingDetail> rings;
};

/// Per-ring summary used by the verify report.
struct RingSummary {
    RingPtr ring;
    bool zhou = false, snc = false, s2nc = false, kosan = false, exchange = false,
         clean = false, usu = false;
    RingIdentities identities;
    LocalReport local;
    std::size_t radical_size = 0;
    bool radical_nil = false;
    bool thirty_nilpotent = false;
};

struct TheoremReport {
    std::vector<RingSummary> rings;
    std::vector<TheoremRow> rows;
    std::vector<u32> exam24_witnesses;  // scan of Z/25, element 2
    bool all_pass = true;
};

/// Evaluates both sides of every in-scope theorem on the corpus.
TheoremReport theorem_suite(const std::vector<RingPtr>& corpus);

std::vector<RingPtr> default_corpus();

}  // namespace ringlab
