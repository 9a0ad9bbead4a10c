#include "ringlab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ringlab/expr.hpp"
#include "ringlab/report.hpp"

namespace ringlab {

namespace {

struct Options {
    std::string subcommand;
    std::string expr_text;
    std::string property;
    std::string kind;
    std::string scope;
    std::string elem_text;
    std::string range_text;
    std::string corpus_path;
    std::string out_path;
    std::size_t cap = kDefaultCarrierCap;
    bool strict = false;
    bool witnesses = false;
    bool json = true;
};

void emit(const Options& opt, const std::string& bytes, std::ostream& out) {
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path, std::ios::binary);
        if (!f) throw UsageError("cannot open output file " + opt.out_path);
        f << bytes;
    } else {
        out << bytes;
    }
}

int emit_error(const Options& opt, std::ostream& out, const std::string& kind,
               const std::string& message, int code, std::optional<std::size_t> offset) {
    Json j;
    j["schema"] = "1";
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    if (offset) j["error"]["offset"] = *offset;
    try {
        emit(opt, render_report(j), out);
    } catch (const RingError&) {
        out << render_report(j);
    }
    return code;
}

std::vector<RingPtr> load_corpus(const Options& opt) {
    if (opt.corpus_path.empty()) return default_corpus();
    std::ifstream f(opt.corpus_path);
    if (!f) throw UsageError("cannot open corpus file " + opt.corpus_path);
    std::vector<RingPtr> corpus;
    std::string line;
    while (std::getline(f, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        corpus.push_back(build_ring(parse_ring_expr(line), opt.cap));
    }
    if (corpus.empty()) throw UsageError("corpus file lists no rings");
    return corpus;
}

std::pair<u64, u64> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("range must look like <lo>..<hi>");
    std::size_t pos1 = 0, pos2 = 0;
    u64 lo = std::stoull(text.substr(0, dots), &pos1);
    u64 hi = std::stoull(text.substr(dots + 2), &pos2);
    if (pos1 != dots || pos2 != text.size() - dots - 2)
        throw UsageError("range must look like <lo>..<hi>");
    return {lo, hi};
}

int run_parsed(const Options& opt, std::ostream& out) {
    if (opt.subcommand == "classify") {
        RingPtr ring = build_ring(parse_ring_expr(opt.expr_text), opt.cap);
        std::optional<u32> elem;
        if (!opt.elem_text.empty())
            elem = resolve_elem_literal(parse_elem_literal(opt.elem_text), *ring);
        emit(opt, render_report(classify_report(*ring, elem)), out);
        return 0;
    }
    if (opt.subcommand == "check") {
        auto property = parse_property(opt.property);
        if (!property) throw UsageError("unknown property " + opt.property);
        RingPtr ring = build_ring(parse_ring_expr(opt.expr_text), opt.cap);
        Json j = check_report(*ring, *property, opt.witnesses);
        emit(opt, render_report(j), out);
        return (opt.strict && !j["holds"].get<bool>()) ? 1 : 0;
    }
    if (opt.subcommand == "decompose") {
        auto kind = parse_kind(opt.kind);
        if (!kind) throw UsageError("unknown decomposition kind " + opt.kind);
        Scope scope = default_scope(*kind);
        if (!opt.scope.empty()) {
            auto s = parse_scope(opt.scope);
            if (!s) throw UsageError("unknown scope " + opt.scope);
            scope = *s;
        }
        RingPtr ring = build_ring(parse_ring_expr(opt.expr_text), opt.cap);
        u32 elem = resolve_elem_literal(parse_elem_literal(opt.elem_text), *ring);
        emit(opt, render_report(decompose_report(*ring, elem, *kind, scope)), out);
        return 0;
    }
    if (opt.subcommand == "verify") {
        emit(opt, render_report(verify_report(load_corpus(opt))), out);
        return 0;
    }
    if (opt.subcommand == "atlas") {
        auto [lo, hi] = parse_range(opt.range_text);
        emit(opt, render_report(atlas_report(lo, hi, opt.cap)), out);
        return 0;
    }
    throw UsageError("unknown subcommand");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"ringlab - finite ring computational algebra"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--cap", opt.cap, "carrier cap override");
        sub->add_option("--out", opt.out_path, "write the report to a file");
        sub->add_flag("--json", opt.json, "JSON output (default)");
    };

    auto* classify = app.add_subcommand("classify", "per-element predicate report");
    classify->add_option("expr", opt.expr_text, "ring expression")->required();
    classify->add_option("--elem", opt.elem_text, "single element literal");
    add_common(classify);

    auto* check = app.add_subcommand("check", "ring-level property verdict");
    check->add_option("property", opt.property, "property name")->required();
    check->add_option("expr", opt.expr_text, "ring expression")->required();
    check->add_flag("--strict", opt.strict, "exit 1 when the property fails");
    check->add_flag("--witnesses", opt.witnesses, "include per-element witnesses");
    add_common(check);

    auto* decomp = app.add_subcommand("decompose", "element decomposition witness");
    decomp->add_option("kind", opt.kind, "decomposition kind")->required();
    decomp->add_option("expr", opt.expr_text, "ring expression")->required();
    decomp->add_option("elem", opt.elem_text, "element literal")->required();
    decomp->add_option("--scope", opt.scope, "in_za|commuting|unrestricted");
    add_common(decomp);

    auto* verify = app.add_subcommand("verify", "theorem suite over a corpus");
    verify->add_option("--corpus", opt.corpus_path, "corpus file (one expression per line)");
    add_common(verify);

    auto* atlas = app.add_subcommand("atlas", "sweep Zn over a range");
    atlas->add_option("range", opt.range_text, "<lo>..<hi>")->required();
    add_common(atlas);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        return emit_error(opt, out, "usage", e.what(), 2, std::nullopt);
    }
    opt.subcommand = app.get_subcommands().front()->get_name();

    try {
        return run_parsed(opt, out);
    } catch (const SizeLimitError& e) {
        return emit_error(opt, out, "cap", e.what(), 3, std::nullopt);
    } catch (const ParseError& e) {
        return emit_error(opt, out, "parse", e.what(), 2, e.offset());
    } catch (const RingError& e) {
        return emit_error(opt, out, "usage", e.what(), 2, std::nullopt);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ringlab
