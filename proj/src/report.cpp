#include "ringlab/report.hpp"

namespace ringlab {

namespace {

Json class_report_json(const Ring& ring, u32 a) {
    ClassReport c = classify_element(ring, a);
    Json j;
    j["elem"] = ring.elem_literal(a);
    j["nilpotent"] = c.nilpotent;
    if (c.nilpotency_index) j["nilpotency_index"] = *c.nilpotency_index;
    j["idempotent"] = c.idempotent;
    j["tripotent"] = c.tripotent;
    j["two_idempotent"] = c.two_idempotent;
    j["unit"] = c.unit;
    j["unipotent"] = c.unipotent;
    if (c.inverse) j["inverse"] = ring.elem_literal(*c.inverse);
    return j;
}

Json property_flags_json(const Ring& ring) {
    Json j;
    for (RingProperty p :
         {RingProperty::zhou_nil_clean, RingProperty::strongly_nil_clean,
          RingProperty::strongly_2_nil_clean, RingProperty::kosan, RingProperty::exchange,
          RingProperty::clean, RingProperty::units_square_unipotent})
        j[to_string(p)] = check_property(ring, p).holds;
    return j;
}

}  // namespace

Json decomposition_json(const Ring& ring, const Decomposition& d) {
    Json j;
    j["kind"] = to_string(d.kind());
    j["scope"] = to_string(d.scope());
    j["source"] = ring.elem_literal(d.source());
    j["target"] = ring.elem_literal(d.target());
    Json parts = Json::array();
    for (u32 p : d.parts()) parts.push_back(ring.elem_literal(p));
    j["parts"] = parts;
    j["nilpotent"] = ring.elem_literal(d.nilpotent_part());
    return j;
}

Json classify_report(const Ring& ring, std::optional<u32> element) {
    Json j;
    j["schema"] = "1";
    j["command"] = "classify";
    j["ring"] = ring.expr_text();
    j["size"] = ring.size();
    Json rows = Json::array();
    if (element) {
        rows.push_back(class_report_json(ring, *element));
    } else {
        for (u32 a = 0; a < ring.size(); ++a) rows.push_back(class_report_json(ring, a));
    }
    j["elements"] = rows;
    return j;
}

Json check_report(const Ring& ring, RingProperty property, bool want_witnesses) {
    PropertyVerdict v = check_property(ring, property, want_witnesses);
    Json j;
    j["schema"] = "1";
    j["command"] = "check";
    j["ring"] = ring.expr_text();
    j["property"] = to_string(property);
    j["holds"] = v.holds;
    if (v.counterexample) {
        Json ce;
        ce["element"] = ring.elem_literal(v.counterexample->element);
        ce["condition"] = v.counterexample->condition;
        j["counterexample"] = ce;
    }
    if (v.witnesses) {
        Json ws = Json::array();
        for (const auto& [a, d] : *v.witnesses) {
            Json w;
            w["elem"] = ring.elem_literal(a);
            w["decomposition"] = decomposition_json(ring, d);
            ws.push_back(w);
        }
        j["witnesses"] = ws;
    }
    return j;
}

Json decompose_report(const Ring& ring, u32 element, DecompKind kind, Scope scope) {
    Json j;
    j["schema"] = "1";
    j["command"] = "decompose";
    j["ring"] = ring.expr_text();
    j["elem"] = ring.elem_literal(element);
    j["kind"] = to_string(kind);
    j["scope"] = to_string(scope);
    auto d = decompose(ring, element, kind, scope);
    j["found"] = d.has_value();
    if (d) j["decomposition"] = decomposition_json(ring, *d);
    return j;
}

Json verify_report(const std::vector<RingPtr>& corpus) {
    TheoremReport rep = theorem_suite(corpus);
    Json j;
    j["schema"] = "1";
    j["command"] = "verify";
    Json names = Json::array();
    for (const auto& r : corpus) names.push_back(r->expr_text());
    j["corpus"] = names;

    Json rings = Json::array();
    for (const auto& s : rep.rings) {
        Json rj;
        rj["ring"] = s.ring->expr_text();
        rj["size"] = s.ring->size();
        Json props;
        props["zhou_nil_clean"] = s.zhou;
        props["strongly_nil_clean"] = s.snc;
        props["strongly_2_nil_clean"] = s.s2nc;
        props["kosan"] = s.kosan;
        props["exchange"] = s.exchange;
        props["clean"] = s.clean;
        props["units_square_unipotent"] = s.usu;
        rj["properties"] = props;
        rj["reduced"] = s.identities.reduced;
        rj["x5_equals_x"] = s.identities.x5_equals_x;
        rj["quintic_identity"] = s.identities.quintic_identity;
        rj["commutative"] = s.identities.commutative;
        rj["bounded_index"] = s.identities.bounded_index;
        rj["local"] = s.local.local;
        rj["residue_size"] = s.local.residue_size;
        rj["jacobson_radical_size"] = s.radical_size;
        rj["jacobson_radical_nil"] = s.radical_nil;
        rj["thirty_nilpotent"] = s.thirty_nilpotent;
        rings.push_back(rj);
    }
    j["rings"] = rings;

    Json rows = Json::array();
    for (const auto& row : rep.rows) {
        Json rj;
        rj["id"] = row.id;
        rj["statement"] = row.statement;
        rj["pass"] = row.pass;
        Json per = Json::array();
        for (const auto& d : row.rings) {
            Json dj;
            dj["ring"] = d.ring;
            dj["agree"] = d.agree;
            if (!d.note.empty()) dj["note"] = d.note;
            per.push_back(dj);
        }
        rj["rings"] = per;
        rows.push_back(rj);
    }
    j["theorems"] = rows;

    {
        auto z25 = make_zmod(25);
        Json audit;
        audit["ring"] = "Z25";
        audit["element"] = "2";
        audit["question"] = "f with f^5 = f and 2 - f nilpotent";
        Json ws = Json::array();
        for (u32 f : rep.exam24_witnesses) {
            Json w;
            w["f"] = z25->elem_literal(f);
            w["nilpotent"] = z25->elem_literal(z25->sub(2, f));
            ws.push_back(w);
        }
        audit["witnesses"] = ws;
        audit["claimed_nonexistence_holds"] = rep.exam24_witnesses.empty();
        j["exam_2_4_audit"] = audit;
    }

    j["pass"] = rep.all_pass;
    return j;
}

Json atlas_report(u64 lo, u64 hi, std::size_t cap) {
    if (lo < 1 || hi < lo) throw UsageError("atlas range must satisfy 1 <= lo <= hi");
    if (hi > 100000) throw UsageError("atlas range is capped at 100000");
    Json j;
    j["schema"] = "1";
    j["command"] = "atlas";
    j["lo"] = lo;
    j["hi"] = hi;
    Json rows = Json::array();
    for (u64 n = lo; n <= hi; ++n) {
        Json row;
        row["n"] = n;
        row["zn_kosan_numbertheory"] = zn_kosan_numbertheory(n);
        if (n <= cap) {
            auto ring = make_zmod(n, cap);
            row["ring"] = property_flags_json(*ring);
        } else {
            row["ring"] = "skipped";
        }
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

std::string render_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace ringlab
