#include "subpair/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subpair/functor.hpp"
#include "subpair/homs.hpp"

namespace subpair {
namespace {

using ordered_json = nlohmann::ordered_json;

RingSpec parse_ring(const nlohmann::json& j) {
    require(j.is_object(), "ring: expected an object");
    require(j.contains("kind") && j.at("kind").is_string(),
            "ring.kind: expected \"zmod\" or \"truncpoly\"");
    require(j.contains("p") && j.at("p").is_number_integer(),
            "ring.p: expected an integer");
    require(j.contains("n") && j.at("n").is_number_integer(),
            "ring.n: expected an integer");
    std::string kind = j.at("kind").get<std::string>();
    i64 p = j.at("p").get<i64>();
    int n = int(j.at("n").get<i64>());
    if (kind == "zmod") return RingSpec::zmod(p, n);
    if (kind == "truncpoly") return RingSpec::truncpoly(p, n);
    throw input_error("ring.kind: expected \"zmod\" or \"truncpoly\", got \"" + kind + "\"");
}

i64 parse_zmod_coord(const RingSpec& R, const nlohmann::json& j, const std::string& where) {
    if (j.is_number_integer()) return R.from_int(j.get<i64>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        require(!s.empty(), where + ": empty coordinate string");
        i64 acc = 0;
        for (char c : s) {
            require('0' <= c && c <= '9', where + ": coordinate strings are decimal digits only");
            acc = (acc * 10 + (c - '0')) % R.cardinality();
        }
        return acc;
    }
    throw input_error(where + ": expected an integer or a decimal string");
}

i64 parse_truncpoly_coord(const RingSpec& R, const nlohmann::json& j, const std::string& where) {
    require(j.is_array(), where + ": expected a little-endian digit array");
    i64 code = 0;
    int i = 0;
    for (const auto& d : j) {
        std::string at = where + "[" + std::to_string(i) + "]";
        require(d.is_number_integer(), at + ": expected an integer digit");
        i64 v = d.get<i64>();
        require(0 <= v && v < R.p(), at + ": digit out of range [0, p)");
        if (i < R.n()) code += v * R.pow_p(i);
        ++i;
    }
    return code;
}

std::string show_vec(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

ordered_json ring_json(const RingSpec& R) {
    ordered_json j;
    j["kind"] = R.kind() == RingKind::zmod ? "zmod" : "truncpoly";
    j["p"] = R.p();
    j["n"] = R.n();
    j["show"] = R.show_ring();
    return j;
}

ordered_json coord_json(const RingSpec& R, i64 c, int part) {
    if (R.kind() == RingKind::zmod) return c;
    std::vector<i64> d = R.digits(c);
    d.resize(size_t(part));
    return d;
}

ordered_json gens_json(const Submodule& A) {
    const LambdaModule& M = A.module();
    ordered_json arr = ordered_json::array();
    std::vector<LambdaModule::Elem> gens = A.gens();
    for (const auto& g : gens) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < M.rank(); ++j) row.push_back(coord_json(M.ring(), g[j], M.part(j)));
        arr.push_back(row);
    }
    return arr;
}

std::string gens_text(const Submodule& A) {
    const LambdaModule& M = A.module();
    std::vector<LambdaModule::Elem> gens = A.gens();
    if (gens.empty()) return "(none)";
    std::string s;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) s += "; ";
        s += M.show_elem(gens[i]);
    }
    return s;
}

ordered_json report_json(const DecompReport& r) {
    ordered_json arr = ordered_json::array();
    for (const auto& [label, count] : r.labels) {
        ordered_json e;
        e["label"] = label.show();
        e["count"] = count;
        e["B"] = label.partition_parts();
        e["A_length"] = label.sub_length();
        e["height_sequence"] = label.expected_height_seq();
        arr.push_back(e);
    }
    return arr;
}

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

bool within_cardinality_cap(const LambdaModule& B, i64 cap) {
    i64 card = 1;
    for (int l : B.parts())
        for (int e = 0; e < l; ++e) {
            if (card > cap / B.ring().p()) return false;
            card *= B.ring().p();
        }
    return true;
}

RingSpec ring_from_flags(const std::string& kind, i64 p, int n) {
    if (kind == "truncpoly") return RingSpec::truncpoly(p, n);
    return RingSpec::zmod(p, n);
}

int cmd_classify(const std::string& path, bool want_witness, bool want_check,
                 bool as_json, std::ostream& out) {
    Pair x = document_pair(load_pair_document(path));
    DecompReport r = classify_s2(x);
    bool ok = true;

    ordered_json j;
    j["command"] = "classify";
    j["ring"] = ring_json(x.ring());
    j["B"] = x.B().parts();
    j["A"] = gens_json(x.A());
    j["A_length"] = x.A().length();
    j["report"] = r.show();
    j["summands"] = report_json(r);
    j["total"] = r.total();

    std::string witness_line, oracle_line;
    if (want_witness || want_check) {
        IsoWitness w = iso_witness(x, r);
        bool two_sided = compose(w.inverse, w.iso) == identity_morphism(x) &&
                         compose(w.iso, w.inverse) == identity_morphism(w.canonical);
        bool preserves = true;
        std::vector<LambdaModule::Elem> ags = x.A().gens();
        for (const auto& g : ags) preserves = preserves && w.canonical.A().contains(w.iso.apply(g));
        std::vector<LambdaModule::Elem> cgs = w.canonical.A().gens();
        for (const auto& g : cgs) preserves = preserves && x.A().contains(w.inverse.apply(g));
        ok = ok && two_sided && preserves;
        ordered_json wj;
        wj["canonical_B"] = w.canonical.B().parts();
        wj["canonical_A"] = gens_json(w.canonical.A());
        wj["to_canonical"] = w.iso.matrix();
        wj["from_canonical"] = w.inverse.matrix();
        wj["two_sided"] = two_sided;
        wj["preserves_submodule"] = preserves;
        j["witness"] = wj;
        witness_line = (two_sided && preserves) ? "verified" : "FAILED";
    }
    if (want_check) {
        i64 cap = cardinality_cap_from_env(4096);
        if (within_cardinality_cap(x.B(), cap)) {
            std::vector<Pair> summands;
            for (const auto& [label, count] : r.labels)
                for (int i = 0; i < count; ++i) summands.push_back(realize_label(x.ring(), label));
            bool agrees = is_isomorphic_bruteforce(x, direct_sum(summands).pair);
            ok = ok && agrees;
            j["oracle"] = ordered_json{{"checked", true}, {"agrees", agrees}};
            oracle_line = agrees ? "agrees" : "DISAGREES";
        } else {
            j["oracle"] = ordered_json{{"checked", false},
                                       {"reason", "module cardinality above the cap"}};
            oracle_line = "skipped (module cardinality above the cap)";
        }
    }
    j["status"] = ok ? "pass" : "fail";

    if (as_json) {
        emit_json(out, j);
    } else {
        out << "ring: " << x.ring().show_ring() << "\n";
        out << "B: " << show_vec(x.B().parts()) << "\n";
        out << "A: length " << x.A().length() << ", generators " << gens_text(x.A()) << "\n";
        out << "report: " << r.show() << "\n";
        if (!witness_line.empty()) out << "witness: " << witness_line << "\n";
        if (!oracle_line.empty()) out << "oracle: " << oracle_line << "\n";
        out << "status: " << (ok ? "pass" : "fail") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_indecomposables(const RingSpec& R, bool as_json, std::ostream& out) {
    std::vector<PairLabel> labels = all_pair_labels(R.n());
    ordered_json j;
    j["command"] = "indecomposables";
    j["ring"] = ring_json(R);
    j["count"] = labels.size();
    ordered_json arr = ordered_json::array();
    for (const auto& label : labels) {
        Pair x = realize_label(R, label);
        DecompReport expect;
        expect.add(label);
        ensure(classify_s2(x) == expect, "an indecomposable label must classify to itself");
        ordered_json e;
        e["label"] = label.show();
        e["B"] = label.partition_parts();
        e["A_length"] = label.sub_length();
        e["height_sequence"] = label.expected_height_seq();
        e["A"] = gens_json(x.A());
        arr.push_back(e);
    }
    j["labels"] = arr;

    if (as_json) {
        emit_json(out, j);
    } else {
        out << "ring: " << R.show_ring() << "\n";
        out << "count: " << labels.size() << "\n";
        for (const auto& label : labels) {
            Pair x = realize_label(R, label);
            out << label.show() << "  B=" << show_vec(label.partition_parts())
                << "  A: " << gens_text(x.A())
                << "  heights=" << show_vec(label.expected_height_seq()) << "\n";
        }
    }
    return 0;
}

int cmd_hom(const std::string& fx, const std::string& fy, bool as_json, std::ostream& out) {
    PairDocument dx = load_pair_document(fx);
    PairDocument dy = load_pair_document(fy);
    require(dx.ring == dy.ring, "hom endpoints must live over the same ring");
    Pair x = document_pair(dx);
    Pair y = document_pair(dy);

    HomStructure h = hom_basis(x, y);
    Submodule nsub = ideal_N_subgroup(x, y);
    int qdim = quotient_dim_mod_N(x, y);
    int rdim = hom_dim(apply_F(x), apply_F(y));
    bool socle_contained = x.A().contains(socle(x.B())) && y.A().contains(socle(y.B()));
    bool equal = qdim == rdim;

    ordered_json j;
    j["command"] = "hom";
    j["ring"] = ring_json(x.ring());
    j["source"] = ordered_json{{"B", x.B().parts()}, {"A_length", x.A().length()}};
    j["target"] = ordered_json{{"B", y.B().parts()}, {"A_length", y.A().length()}};
    j["hom_length"] = h.length;
    j["cyclic_orders"] = h.cyclic_orders;
    j["ideal_length"] = nsub.length();
    j["quotient_dim"] = qdim;
    j["rep_hom_dim"] = rdim;
    j["socle_contained"] = socle_contained;
    j["dims_equal"] = equal;
    bool same = x == y;
    if (same) j["contains_identity"] = h.group.contains(cells_of_morphism(identity_morphism(x)));
    j["status"] = equal ? "pass" : "fail";

    if (as_json) {
        emit_json(out, j);
    } else {
        out << "ring: " << x.ring().show_ring() << "\n";
        out << "source: B=" << show_vec(x.B().parts()) << ", A length " << x.A().length() << "\n";
        out << "target: B=" << show_vec(y.B().parts()) << ", A length " << y.A().length() << "\n";
        out << "hom length: " << h.length << "\n";
        out << "cyclic orders: " << show_vec(h.cyclic_orders) << "\n";
        out << "ideal length: " << nsub.length() << "\n";
        out << "quotient dim: " << qdim << "\n";
        out << "rep hom dim: " << rdim << "\n";
        out << "socle contained: " << (socle_contained ? "yes" : "no") << "\n";
        if (same)
            out << "contains identity: "
                << (h.group.contains(cells_of_morphism(identity_morphism(x))) ? "yes" : "no") << "\n";
        out << "status: " << (equal ? "pass" : "fail") << "\n";
    }
    return equal ? 0 : 1;
}

int cmd_census(const RingSpec& R, CensusOptions opt, bool as_json, std::ostream& out) {
    opt.max_cardinality = cardinality_cap_from_env(4096);
    Census c = verify_census(R, opt);
    int indecomposable = 0;
    for (const auto& e : c.classes)
        if (e.report.total() == 1) ++indecomposable;

    ordered_json j;
    j["command"] = "census";
    j["ring"] = ring_json(R);
    j["options"] = ordered_json{{"m", opt.m},
                                {"max_parts", opt.max_parts},
                                {"max_part", opt.max_part},
                                {"max_length", opt.max_length},
                                {"cardinality_cap", opt.max_cardinality}};
    j["total_submodules"] = c.total_submodules;
    j["class_count"] = c.classes.size();
    j["indecomposable_classes"] = indecomposable;
    ordered_json classes = ordered_json::array();
    for (const auto& e : c.classes)
        classes.push_back(ordered_json{{"B", e.parts},
                                       {"A_length", e.rep.length()},
                                       {"orbit_size", e.orbit_size},
                                       {"report", e.report.show()}});
    j["classes"] = classes;
    j["failures"] = c.failures;
    j["notes"] = c.notes;
    j["status"] = c.failures == 0 ? "pass" : "fail";

    if (as_json) {
        emit_json(out, j);
    } else {
        out << "ring: " << R.show_ring() << "\n";
        out << "options: m=" << opt.m << ", max parts=" << opt.max_parts
            << ", max part=" << opt.max_part << ", max length=" << opt.max_length
            << ", cardinality cap=" << opt.max_cardinality << "\n";
        out << "total submodules: " << c.total_submodules << "\n";
        out << "orbit classes: " << c.classes.size() << "\n";
        out << "indecomposable classes: " << indecomposable << "\n";
        for (const auto& e : c.classes)
            out << "B=" << show_vec(e.parts) << "  |orbit|=" << e.orbit_size
                << "  A length " << e.rep.length() << "  report: " << e.report.show() << "\n";
        for (const auto& note : c.notes) out << "note: " << note << "\n";
        out << "failures: " << c.failures << "\n";
        out << "status: " << (c.failures == 0 ? "pass" : "fail") << "\n";
    }
    return c.failures == 0 ? 0 : 1;
}

int cmd_compare_rings(i64 p, int n, bool p_set, bool n_set, const std::string& file,
                      bool as_json, std::ostream& out) {
    std::vector<Pair> items;
    std::vector<std::string> names;
    i64 effective_p = p;
    int effective_n = n;
    if (!file.empty()) {
        PairDocument d = load_pair_document(file);
        require(d.ring.kind() == RingKind::zmod, "compare-rings expects a pair over Z/p^n");
        if (p_set) require(d.ring.p() == p, "--p disagrees with the document ring");
        if (n_set) require(d.ring.n() == n, "--n disagrees with the document ring");
        effective_p = d.ring.p();
        effective_n = d.ring.n();
        items.push_back(document_pair(d));
        names.push_back("document");
    } else {
        require(n_set, "compare-rings needs --n or a pair document");
        RingSpec Rz = RingSpec::zmod(p, n);
        std::vector<PairLabel> labels = all_pair_labels(n);
        for (const auto& label : labels) {
            items.push_back(realize_label(Rz, label));
            names.push_back(label.show());
        }
    }

    bool ok = true;
    ordered_json rows = ordered_json::array();
    std::vector<std::string> lines;
    for (size_t i = 0; i < items.size(); ++i) {
        const Pair& xz = items[i];
        Pair xt = mirror_to_truncpoly(xz);
        DecompReport rz = classify_s2(xz);
        DecompReport rt = classify_s2(xt);
        bool match = rz == rt;
        ok = ok && match;
        rows.push_back(ordered_json{{"item", names[i]},
                                    {"B", xz.B().parts()},
                                    {"zmod", rz.show()},
                                    {"truncpoly", rt.show()},
                                    {"match", match}});
        lines.push_back(names[i] + "  B=" + show_vec(xz.B().parts()) + "  zmod: " + rz.show() +
                        "  truncpoly: " + rt.show() + (match ? "" : "  MISMATCH"));
    }

    ordered_json j;
    j["command"] = "compare-rings";
    j["p"] = effective_p;
    j["n"] = effective_n;
    j["compared"] = rows.size();
    j["items"] = rows;
    j["status"] = ok ? "pass" : "fail";

    if (as_json) {
        emit_json(out, j);
    } else {
        out << "rings: Z/" << effective_p << "^" << effective_n << " vs F" << effective_p
            << "[T]/(T^" << effective_n << ")\n";
        for (const auto& line : lines) out << line << "\n";
        out << "compared: " << items.size() << "\n";
        out << "status: " << (ok ? "pass" : "fail") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

PairDocument parse_pair_document(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
    require(j.is_object(), "document: expected a JSON object");
    require(j.contains("ring"), "document: ring is required");
    RingSpec R = parse_ring(j.at("ring"));

    require(j.contains("B") && j.at("B").is_array(), "document: B must be a partition array");
    std::vector<int> parts;
    {
        int i = 0;
        for (const auto& e : j.at("B")) {
            std::string at = "B[" + std::to_string(i) + "]";
            require(e.is_number_integer(), at + ": expected an integer part");
            i64 v = e.get<i64>();
            require(1 <= v && v <= R.n(), at + ": part out of range [1, n]");
            parts.push_back(int(v));
            ++i;
        }
    }
    require(!parts.empty(), "B: at least one part is required");
    for (size_t i = 1; i < parts.size(); ++i)
        require(parts[i - 1] >= parts[i], "B: parts must be weakly decreasing");

    PairDocument doc{R, parts, {}, 2};
    if (j.contains("m")) {
        require(j.at("m").is_number_integer(), "m: expected an integer");
        i64 m = j.at("m").get<i64>();
        require(0 <= m && m <= 2, "m: expected 0, 1 or 2");
        doc.m = int(m);
    }
    if (j.contains("A")) {
        require(j.at("A").is_array(), "A: expected an array of generators");
        int gi = 0;
        for (const auto& gen : j.at("A")) {
            std::string gw = "A[" + std::to_string(gi) + "]";
            require(gen.is_array(), gw + ": expected a coordinate array");
            require(int(gen.size()) == int(parts.size()), gw + ": expected one coordinate per part");
            std::vector<i64> row;
            int ci = 0;
            for (const auto& coord : gen) {
                std::string cw = gw + "[" + std::to_string(ci) + "]";
                row.push_back(R.kind() == RingKind::zmod ? parse_zmod_coord(R, coord, cw)
                                                         : parse_truncpoly_coord(R, coord, cw));
                ++ci;
            }
            doc.agens.push_back(row);
            ++gi;
        }
    }
    return doc;
}

PairDocument load_pair_document(const std::string& path) {
    std::ifstream in(path);
    require(bool(in), "cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pair_document(buf.str());
}

Pair document_pair(const PairDocument& doc) {
    LambdaModule B(doc.ring, doc.parts);
    std::vector<LambdaModule::Elem> gens;
    for (const auto& g : doc.agens) gens.push_back(B.reduce(g));
    Submodule A = Submodule::span(B, gens);
    require(scalar_image(A, doc.m).is_zero(),
            "p^m A = 0 fails for the given generators (m = " + std::to_string(doc.m) + ")");
    return Pair(B, A, 2);
}

Pair mirror_to_truncpoly(const Pair& x) {
    require(x.ring().kind() == RingKind::zmod, "ring mirroring starts from a zmod pair");
    RingSpec T = RingSpec::truncpoly(x.ring().p(), x.ring().n());
    LambdaModule B(T, x.B().parts());
    std::vector<LambdaModule::Elem> gens;
    std::vector<LambdaModule::Elem> src = x.A().gens();
    for (const auto& g : src) gens.push_back(B.reduce(g));
    return Pair(B, Submodule::span(B, gens), 2);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"classifier for submodule pairs over local uniserial rings", "subpair"};
    app.require_subcommand(1);
    std::string format = "text";
    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* c_classify =
        app.add_subcommand("classify", "decompose a pair document into indecomposables");
    std::string classify_file;
    bool opt_witness = false;
    bool opt_check = false;
    c_classify->add_option("file", classify_file, "pair document (JSON)")->required();
    c_classify->add_flag("--witness", opt_witness,
                         "construct and verify an explicit isomorphism to the canonical form");
    c_classify->add_flag("--check", opt_check,
                         "cross-check the report against the brute-force oracle");
    add_format(c_classify);

    auto* c_ind =
        app.add_subcommand("indecomposables", "list the indecomposable pairs for a ring length");
    i64 ind_p = 2;
    int ind_n = 1;
    std::string ind_ring = "zmod";
    c_ind->add_option("--p", ind_p, "prime");
    c_ind->add_option("--n", ind_n, "ring length")->required();
    c_ind->add_option("--ring", ind_ring, "zmod or truncpoly")
        ->check(CLI::IsMember({"zmod", "truncpoly"}));
    add_format(c_ind);

    auto* c_hom =
        app.add_subcommand("hom", "Hom group between two pairs and its quotient mod the ideal");
    std::string hom_x;
    std::string hom_y;
    c_hom->add_option("source", hom_x, "source pair document")->required();
    c_hom->add_option("target", hom_y, "target pair document")->required();
    add_format(c_hom);

    auto* c_census = app.add_subcommand(
        "census", "verify the classification against all submodules of bounded shapes");
    i64 cen_p = 2;
    int cen_n = 2;
    CensusOptions cen_opt;
    std::string cen_ring = "zmod";
    c_census->add_option("--p", cen_p, "prime");
    c_census->add_option("--n", cen_n, "ring length")->required();
    c_census->add_option("--m", cen_opt.m, "torsion bound for the submodules")
        ->check(CLI::Range(0, 2));
    c_census->add_option("--max-parts", cen_opt.max_parts, "largest number of parts");
    c_census->add_option("--max-part", cen_opt.max_part, "largest part (0: the ring length)");
    c_census->add_option("--max-length", cen_opt.max_length,
                         "largest total length (0: no extra bound)");
    c_census->add_option("--ring", cen_ring, "zmod or truncpoly")
        ->check(CLI::IsMember({"zmod", "truncpoly"}));
    add_format(c_census);

    auto* c_cmp = app.add_subcommand(
        "compare-rings", "classify over Z/p^n and F_p[T]/(T^n) and compare the reports");
    i64 cmp_p = 2;
    int cmp_n = 0;
    std::string cmp_file;
    c_cmp->add_option("--p", cmp_p, "prime");
    c_cmp->add_option("--n", cmp_n, "ring length");
    c_cmp->add_option("file", cmp_file,
                      "zmod pair document; without it every label at length n is compared");
    add_format(c_cmp);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("subpair");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    bool as_json = format == "json";
    try {
        if (*c_classify) return cmd_classify(classify_file, opt_witness, opt_check, as_json, out);
        if (*c_ind) return cmd_indecomposables(ring_from_flags(ind_ring, ind_p, ind_n), as_json, out);
        if (*c_hom) return cmd_hom(hom_x, hom_y, as_json, out);
        if (*c_census) return cmd_census(ring_from_flags(cen_ring, cen_p, cen_n), cen_opt, as_json, out);
        if (*c_cmp)
            return cmd_compare_rings(cmp_p, cmp_n, c_cmp->count("--p") > 0, c_cmp->count("--n") > 0,
                                     cmp_file, as_json, out);
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace subpair
