#include "telescoped/cli/cli.hpp"

#include "telescoped/error.hpp"
#include "telescoped/exactalg/io.hpp"
#include "telescoped/simplicial/cohomology.hpp"
#include "telescoped/simplicial/io.hpp"
#include "telescoped/telescope/io.hpp"
#include "telescoped/torsionfree/io.hpp"
#include "telescoped/towers/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace telescoped::cli {

using jsonio::json;

DegreeRange parse_range(const std::string& text)
{
    auto number = [&](std::size_t& pos) {
        const std::size_t start = pos;
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 100000) throw ParseError("degree out of range in \"" + text + "\"", start);
            ++pos;
        }
        if (pos == start) throw ParseError("expected a degree in \"" + text + "\"", start);
        return static_cast<int>(v);
    };
    std::size_t pos = 0;
    DegreeRange r;
    r.lo = number(pos);
    r.hi = r.lo;
    if (pos < text.size()) {
        if (text.compare(pos, 2, "..") != 0) throw ParseError("expected \"..\" in \"" + text + "\"", pos);
        pos += 2;
        r.hi = number(pos);
    }
    if (pos != text.size()) throw ParseError("trailing characters in \"" + text + "\"", pos);
    if (r.hi < r.lo) throw ParseError("empty degree range \"" + text + "\"", 0);
    return r;
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

constexpr const char* version = "1.0.0";

struct Options {
    std::string coeff = "Z";
    std::string range;
    std::optional<std::size_t> probe_depth;
    bool json_out = false;
    bool strict = false;
};

struct Outcome {
    json results;
    std::vector<std::string> citations;
    bool undetermined = false;
};

class Context {
public:
    Context() = default;

    json load(const std::string& path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError(path + ": cannot read file");
        std::ostringstream text;
        text << in.rdbuf();
        std::ostringstream digest;
        digest << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(text.str());
        inputs_.push_back(json{{"path", path}, {"fnv1a64", digest.str()}});
        return jsonio::parse_text(text.str(), path);
    }

    TelescopeSpec telescope(const std::string& path)
    {
        const json j = load(path);
        return telescope_from_json(j, path + "#", std::filesystem::path(path).parent_path().string());
    }

    const json& inputs() const { return inputs_; }

private:
    json inputs_ = json::array();
};

std::size_t probe_depth(const Options& o)
{
    if (o.probe_depth) return *o.probe_depth;
    if (const char* env = std::getenv("TELESCOPED_PROBE_DEPTH")) {
        const std::string s(env);
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6)
            throw ParseError("TELESCOPED_PROBE_DEPTH must be a positive integer, got \"" + s + "\"");
        const auto v = std::stoul(s);
        if (v == 0) throw ParseError("TELESCOPED_PROBE_DEPTH must be a positive integer, got \"" + s + "\"");
        return v;
    }
    return default_probe_depth;
}

bool undetermined(const Lim1Descriptor& d) { return d.status.status == Lim1Status::Undetermined; }
bool undetermined(const MilnorReport& m) { return !m.weak || undetermined(m.asymptotic); }

// ---- verbs ----

Outcome do_cohomology(Context& ctx, const Options& o, const std::string& file, const std::string& sub_file)
{
    const SimplicialComplex k = complex_from_json(ctx.load(file), file + "#");
    std::optional<SimplicialPair> pair;
    if (!sub_file.empty()) pair.emplace(k, complex_from_json(ctx.load(sub_file), sub_file + "#"));
    const CoefficientGroup g = CoefficientGroup::parse(o.coeff);
    const DegreeRange r = o.range.empty() ? DegreeRange{0, std::max(0, k.dimension())} : parse_range(o.range);
    Outcome out;
    json groups = json::array();
    for (int q = r.lo; q <= r.hi; ++q) {
        const FgAbGroup h = pair ? cohomology(*pair, q, g) : cohomology(k, q, g);
        groups.push_back(json{{"degree", q}, {"group", to_json(h)}});
    }
    out.results = json{{"complex", json{{"vertices", k.vertices().size()},
                                        {"facets", k.facets().size()},
                                        {"dimension", k.dimension()},
                                        {"euler_characteristic", k.euler_characteristic()}}},
                       {"relative", pair.has_value()},
                       {"coefficients", g.to_string()},
                       {"groups", groups}};
    out.citations = {pair ? "relative simplicial cochain complex" : "simplicial cochain complex",
                     "Smith normal form"};
    return out;
}

Outcome do_les(Context& ctx, const Options& o, const std::string& file, const std::string& sub_file)
{
    const SimplicialComplex k = complex_from_json(ctx.load(file), file + "#");
    const SimplicialComplex l = complex_from_json(ctx.load(sub_file), sub_file + "#");
    const SimplicialPair pair(k, l);
    const CoefficientGroup g = CoefficientGroup::parse(o.coeff);
    const int top = o.range.empty() ? std::max(0, k.dimension()) : parse_range(o.range).hi;
    const LongExactSequence les = les_of_pair(pair, g, top);
    json nodes = json::array();
    for (std::size_t i = 0; i < les.nodes.size(); ++i) {
        json n{{"label", les.nodes[i].label}, {"degree", les.nodes[i].degree}, {"group", to_json(les.nodes[i].group)}};
        n["exact_here"] = i < les.exact_at.size() ? json(static_cast<bool>(les.exact_at[i])) : json(nullptr);
        n["map_to_next"] = i < les.maps.size() ? jsonio::from_matrix(les.maps[i].matrix()) : json(nullptr);
        nodes.push_back(std::move(n));
    }
    Outcome out;
    out.results = json{{"coefficients", g.to_string()}, {"max_degree", top}, {"exact", les.exact()}, {"nodes", nodes}};
    out.citations = {"long exact sequence of a pair", "snake lemma"};
    return out;
}

Outcome do_tower(Context& ctx, const Options& o, const std::string& op, const std::string& file,
                 const std::string& cocycle_file)
{
    const TowerOptions topts{probe_depth(o)};
    auto tower = std::make_shared<const AbTower>(tower_from_json(ctx.load(file), file + "#"));
    Outcome out;
    if (op == "lim") {
        out.results = json{{"lim", to_json(lim(*tower))}};
        out.citations = {"inverse limit of a tower"};
    } else if (op == "lim1") {
        const Lim1Descriptor d = lim1_descriptor(*tower, topts);
        out.undetermined = undetermined(d);
        out.results = json{{"lim1", to_json(d)}};
        out.citations = {"lim^1 and the Mittag-Leffler condition"};
    } else if (op == "ml") {
        const MittagLefflerCertificate c = mittag_leffler(*tower, topts);
        out.undetermined = c.status == Lim1Status::Undetermined;
        out.results = json{{"mittag_leffler", to_json(c)}};
        out.citations = {"Mittag-Leffler condition"};
    } else {
        if (cocycle_file.empty())
            throw PreconditionError("coboundary needs a cocycle file", "usage: tower coboundary TOWER COCYCLE");
        const ElementSequence seq = sequence_from_json(ctx.load(cocycle_file), cocycle_file + "#");
        const CoboundaryVerdict v = is_coboundary(TowerCocycle(tower, seq), topts);
        out.undetermined = v.verdict == Verdict::Undetermined;
        out.results = json{{"coboundary", to_json(v)}};
        out.citations = {"lim^1 as the orbit space of the cocycle action"};
    }
    return out;
}

Outcome do_ext(Context& ctx, const Options& o, const std::string& file)
{
    const HomogeneousGroup g = homogeneous_from_json(ctx.load(file), file + "#");
    const ExtDescriptor e = ext_to_Z(g, nullptr, TowerOptions{probe_depth(o)});
    Outcome out;
    out.undetermined = undetermined(e.lim1);
    out.results = json{{"ext", to_json(e)}};
    out.citations = {"Ext(Lambda, Z) as lim^1 of the dual tower",
                     "smooth classification of Ext iff Lambda is free"};
    return out;
}

Outcome do_hom(Context& ctx, const Options&, const std::string& file)
{
    const HomogeneousGroup g = homogeneous_from_json(ctx.load(file), file + "#");
    Outcome out;
    out.results = json{{"source", to_json(g)}, {"hom", to_json(hom_to_Z(g))}};
    out.citations = {"Hom(Lambda, Z) as lim of the dual tower"};
    return out;
}

Outcome do_classify(Context& ctx, const Options& o, const std::string& a, const std::string& b)
{
    const TelescopeSpec ta = ctx.telescope(a), tb = ctx.telescope(b);
    const ClassificationVerdict v = classify(ta, tb, TowerOptions{probe_depth(o)});
    Outcome out;
    out.undetermined = v.verdict == Equivalence::Undetermined;
    out.results = json{{"a", ta.to_string()}, {"b", tb.to_string()}, {"classification", to_json(v)}};
    out.citations = {"homotopy classification of sphere telescopes by colimit type",
                     "=*-equivalence of type sequences"};
    return out;
}

Outcome do_telescope(Context& ctx, const Options& o, const std::string& file, std::optional<int> hopf,
                     std::optional<std::size_t> truncate)
{
    const TelescopeSpec tel = ctx.telescope(file);
    const CoefficientGroup g = CoefficientGroup::parse(o.coeff);
    const TowerOptions topts{probe_depth(o)};
    const DegreeRange r = o.range.empty() ? DegreeRange{0, tel.dimension() + 1} : parse_range(o.range);
    Outcome out;
    json milnors = json::array();
    for (int q = r.lo; q <= r.hi; ++q) {
        const MilnorReport m = milnor(tel, q, g, topts);
        out.undetermined = out.undetermined || undetermined(m);
        milnors.push_back(to_json(m));
    }
    out.results = json{{"telescope", tel.to_string()}, {"coefficients", g.to_string()}, {"milnor", milnors}};
    out.citations = {"Milnor exact sequence", "cohomology of mapping telescopes"};
    if (hopf) {
        const HopfReport h = hopf_bracket(tel, *hopf, topts);
        out.undetermined = out.undetermined || undetermined(h.bracket);
        out.results["hopf"] = to_json(h);
        out.citations.push_back("Hopf's theorem");
    }
    if (truncate) {
        const TelescopeComplex t = truncated_telescope(tel, *truncate);
        json groups = json::array();
        for (int q = r.lo; q <= r.hi; ++q)
            groups.push_back(json{{"degree", q},
                                  {"truncation", to_json(cohomology(t.complex, q, g))},
                                  {"last_stage", to_json(cohomology(tel.stage(*truncate), q, g))}});
        out.results["truncation"] = json{{"stages", *truncate}, {"groups", groups}};
        out.citations.push_back("mapping telescope retracts onto its last stage");
    }
    return out;
}

Outcome do_borsuk_eilenberg(const Options& o, const std::string& prime)
{
    const BigInt p = jsonio::to_bigint(json(prime), "--prime");
    const BorsukEilenbergReport r = borsuk_eilenberg(p, TowerOptions{probe_depth(o)});
    Outcome out;
    out.undetermined = undetermined(r.milnor_q2) || r.all_ones.verdict == Verdict::Undetermined;
    out.results = to_json(r);
    out.citations = {"Borsuk-Eilenberg classification via Ext(Z[1/p], Z)", "Milnor exact sequence",
                     "smooth classification of Ext iff Lambda is free"};
    return out;
}

// ---- human rendering, read back from the JSON results ----

std::string group_text(const json& g) { return g.at("text").get<std::string>(); }

std::string lim1_text(const json& d)
{
    const json& s = d.at("status");
    std::string t = s.at("status").get<std::string>();
    if (t == "NonZero")
        t += " (images descend from stage " + s.at("stabilization_index").dump() + ", index " +
             s.at("step_index").dump() + ")";
    else if (t == "Undetermined")
        t += " (probe depth " + s.at("depth").dump() + ")";
    return t;
}

void render_milnor(std::ostream& os, const json& m)
{
    os << "  " << m.at("total").get<std::string>() << "\n";
    os << "    asymptotic part: " << lim1_text(m.at("asymptotic")) << "\n";
    os << "    weak part: " << (m.at("weak").is_null() ? "undetermined" : group_text(m.at("weak").at("group")))
       << "\n";
    if (!m.at("closed_form").is_null()) {
        const json& c = m.at("closed_form");
        os << "    closed form: Lambda = " << c.at("lambda").at("text").get<std::string>() << ", Hom(Lambda,Z) = "
           << group_text(c.at("hom")) << " in degree " << c.at("hom_degree") << ", Ext(Lambda,Z) "
           << (c.at("ext").at("is_trivial").get<bool>() ? "= 0" : "!= 0") << " in degree " << c.at("ext_degree")
           << ", routes agree: " << (c.at("agrees").get<bool>() ? "yes" : "no") << "\n";
    }
}

void render_ext(std::ostream& os, const json& e)
{
    os << "  Ext(" << e.at("source").at("text").get<std::string>() << ", Z): "
       << (e.at("is_trivial").get<bool>() ? "0" : "nonzero") << "\n";
    os << "    lim^1 of the dual tower: " << lim1_text(e.at("lim1")) << "\n";
    os << "    smooth classification: " << (e.at("is_smooth_classification").get<bool>() ? "yes" : "no") << "\n";
    os << "    essentially hyperfinite: " << (e.at("is_essentially_hyperfinite").get<bool>() ? "yes" : "no") << "\n";
}

void render_coboundary(std::ostream& os, const json& v)
{
    os << "  coboundary: " << v.at("verdict").get<std::string>() << "\n";
    if (!v.at("value").is_null()) os << "    obstruction value: " << v.at("value").get<std::string>() << "\n";
    if (!v.at("witness").is_null()) os << "    witness: " << v.at("witness").dump() << "\n";
    os << "    certificate: " << v.at("certificate").get<std::string>() << "\n";
}

void render(std::ostream& os, const std::string& verb, const json& report)
{
    const json& r = report.at("results");
    os << "telescoped " << verb << "\n";
    for (const auto& in : report.at("inputs"))
        os << "input " << in.at("path").get<std::string>() << " fnv1a64:" << in.at("fnv1a64").get<std::string>()
           << "\n";
    if (verb == "cohomology") {
        const std::string rel = r.at("relative").get<bool>() ? "(K,L" : "(K";
        for (const auto& g : r.at("groups"))
            os << "  H^" << g.at("degree").get<int>() << rel << "; " << r.at("coefficients").get<std::string>()
               << ") = " << group_text(g.at("group")) << "\n";
    } else if (verb == "les") {
        for (const auto& n : r.at("nodes")) {
            os << "  " << n.at("label").get<std::string>() << " = " << group_text(n.at("group"));
            if (!n.at("exact_here").is_null()) os << (n.at("exact_here").get<bool>() ? "   exact" : "   NOT exact");
            os << "\n";
        }
        os << "  sequence exact: " << (r.at("exact").get<bool>() ? "yes" : "no") << "\n";
    } else if (verb == "tower") {
        if (r.contains("lim")) {
            const json& l = r.at("lim");
            os << "  lim = " << group_text(l.at("group")) << " (tail from stage " << l.at("stage")
               << ", period index " << l.at("certificate").at("period_index") << ")\n";
        }
        if (r.contains("lim1")) os << "  lim^1: " << lim1_text(r.at("lim1")) << "\n";
        if (r.contains("mittag_leffler")) {
            const json& c = r.at("mittag_leffler");
            os << "  Mittag-Leffler: " << (c.at("status") == "Zero" ? "holds" : c.at("status") == "NonZero" ? "fails" : "undetermined")
               << " (" << c.at("detail").get<std::string>() << ")\n";
        }
        if (r.contains("coboundary")) render_coboundary(os, r.at("coboundary"));
    } else if (verb == "ext") {
        render_ext(os, r.at("ext"));
    } else if (verb == "hom") {
        os << "  Hom(" << r.at("source").at("text").get<std::string>() << ", Z) = " << group_text(r.at("hom")) << "\n";
    } else if (verb == "classify") {
        const json& c = r.at("classification");
        os << "  " << r.at("a").get<std::string>() << " vs " << r.at("b").get<std::string>() << ": "
           << c.at("verdict").get<std::string>() << "\n";
        os << "    reason: " << c.at("reason").get<std::string>() << "\n";
        if (!c.at("evidence").is_null()) {
            const json& e = c.at("evidence");
            os << "    types: " << e.at("type_a").dump() << " vs " << e.at("type_b").dump() << "\n";
            os << "    Hom(Lambda,Z): " << group_text(e.at("hom_a")) << " vs " << group_text(e.at("hom_b")) << "\n";
            os << "    Ext(Lambda,Z) trivial: " << e.at("ext_trivial_a") << " vs " << e.at("ext_trivial_b") << "\n";
        }
    } else if (verb == "telescope") {
        os << "  " << r.at("telescope").get<std::string>() << ", coefficients " << r.at("coefficients").get<std::string>()
           << "\n";
        for (const auto& m : r.at("milnor")) render_milnor(os, m);
        if (r.contains("hopf")) {
            const json& h = r.at("hopf");
            os << "  Hopf bracket (d = " << h.at("d") << "): " << h.at("description").get<std::string>() << "\n";
            const json& v = h.at("vanishing_checked");
            if (v.at("from").get<int>() <= v.at("to").get<int>())
                os << "    vanishing certified for degrees " << v.at("from") << ".." << v.at("to") << "\n";
            else
                os << "    no degrees above d+1 to certify\n";
        }
        if (r.contains("truncation")) {
            const json& t = r.at("truncation");
            for (const auto& g : t.at("groups"))
                os << "  H^" << g.at("degree").get<int>() << "(truncation to " << t.at("stages")
                   << " stages) = " << group_text(g.at("truncation")) << ", H^" << g.at("degree").get<int>()
                   << "(X_N) = " << group_text(g.at("last_stage")) << "\n";
        }
    } else if (verb == "borsuk-eilenberg") {
        os << "  p = " << r.at("p") << ", model " << r.at("model").dump() << "\n";
        render_milnor(os, r.at("milnor_q2"));
        render_ext(os, r.at("ext"));
        os << "  all classes phantom: " << (r.at("phantom_only").get<bool>() ? "yes" : "no") << "\n";
        os << "  not smooth: " << (r.at("not_smooth").get<bool>() ? "yes" : "no") << "\n";
        os << "  essentially hyperfinite: " << (r.at("essentially_hyperfinite").get<bool>() ? "yes" : "no") << "\n";
        os << "  all-ones cocycle on (Z, x p):\n";
        render_coboundary(os, r.at("all_ones_cocycle"));
    }
    os << "citations:";
    for (const auto& c : report.at("citations")) os << " [" << c.get<std::string>() << "]";
    os << "\n";
    if (report.at("undetermined").get<bool>()) os << "note: some results are Undetermined\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact cohomology, lim/lim^1 and telescope classification", "telescoped"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version);
    Options o;
    auto common = [&](CLI::App* sub, bool coeff, bool range) {
        if (coeff) sub->add_option("--coeff", o.coeff, "coefficients: Z, Zmod:6, Z+Zmod:2");
        if (range) sub->add_option("--range", o.range, "degree range a..b");
        sub->add_option("--probe-depth", o.probe_depth, "tower probe depth (overrides TELESCOPED_PROBE_DEPTH)")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--json", o.json_out, "emit one JSON document");
        sub->add_flag("--strict", o.strict, "exit 4 when a result is Undetermined");
    };

    std::string file, file2, op, prime;
    std::optional<int> hopf;
    std::optional<std::size_t> truncate;

    auto* coh = app.add_subcommand("cohomology", "H^q of a complex or a pair");
    coh->add_option("complex", file, "complex JSON")->required();
    coh->add_option("--sub", file2, "subcomplex JSON for relative cohomology");
    common(coh, true, true);

    auto* les = app.add_subcommand("les", "long exact sequence of a pair");
    les->add_option("complex", file, "complex JSON")->required();
    les->add_option("sub", file2, "subcomplex JSON")->required();
    common(les, true, true);

    auto* tower = app.add_subcommand("tower", "lim, lim^1, Mittag-Leffler, coboundary test");
    tower->add_option("op", op, "lim | lim1 | ml | coboundary")
        ->required()
        ->check(CLI::IsMember({"lim", "lim1", "ml", "coboundary"}));
    tower->add_option("tower", file, "tower JSON")->required();
    tower->add_option("cocycle", file2, "cocycle JSON (coboundary only)");
    common(tower, false, false);

    auto* ext = app.add_subcommand("ext", "Ext(Lambda, Z) of a homogeneous torsion-free group");
    ext->add_option("group", file, "group JSON")->required();
    common(ext, false, false);

    auto* hom = app.add_subcommand("hom", "Hom(Lambda, Z) of a homogeneous torsion-free group");
    hom->add_option("group", file, "group JSON")->required();
    common(hom, false, false);

    auto* cls = app.add_subcommand("classify", "homotopy classification of two telescopes");
    cls->add_option("a", file, "telescope JSON")->required();
    cls->add_option("b", file2, "telescope JSON")->required();
    common(cls, false, false);

    auto* tel = app.add_subcommand("telescope", "Milnor decomposition of a telescope");
    tel->add_option("telescope", file, "telescope JSON")->required();
    tel->add_option("--hopf", hopf, "also report [hocolim, S^{d+1}] for this d");
    tel->add_option("--truncate", truncate, "compare with the truncated telescope on N stages (simplicial)");
    common(tel, true, true);

    auto* be = app.add_subcommand("borsuk-eilenberg", "report for the p-adic solenoid complement");
    be->add_option("--prime", prime, "p >= 2")->required();
    common(be, false, false);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForVersion&) {
        out << version << "\n";
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "telescoped: usage error: " << e.what() << "\n";
        return exit_parse;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();
    Context ctx;
    try {
        Outcome res;
        if (verb == "cohomology") res = do_cohomology(ctx, o, file, file2);
        else if (verb == "les") res = do_les(ctx, o, file, file2);
        else if (verb == "tower") res = do_tower(ctx, o, op, file, file2);
        else if (verb == "ext") res = do_ext(ctx, o, file);
        else if (verb == "hom") res = do_hom(ctx, o, file);
        else if (verb == "classify") res = do_classify(ctx, o, file, file2);
        else if (verb == "telescope") res = do_telescope(ctx, o, file, hopf, truncate);
        else res = do_borsuk_eilenberg(o, prime);

        json options{{"coeff", o.coeff}, {"range", o.range.empty() ? json(nullptr) : json(o.range)},
                     {"probe_depth", probe_depth(o)}, {"strict", o.strict}};
        if (verb == "tower") options["op"] = op;
        json report{{"tool", "telescoped"},          {"version", version},
                    {"verb", verb},                  {"inputs", ctx.inputs()},
                    {"options", options},            {"results", res.results},
                    {"citations", res.citations},    {"undetermined", res.undetermined}};
        if (o.json_out)
            out << report.dump(2) << "\n";
        else
            render(out, verb, report);
        return o.strict && res.undetermined ? exit_undetermined : exit_ok;
    } catch (const ParseError& e) {
        err << "telescoped: parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const PreconditionError& e) {
        err << "telescoped: precondition violated [" << e.invariant() << "]: " << e.what() << "\n";
        return exit_precondition;
    } catch (const std::exception& e) {
        err << "telescoped: error: " << e.what() << "\n";
        return exit_failure;
    }
}

}  // namespace telescoped::cli
