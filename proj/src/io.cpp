#include "mfb/io.hpp"
#include "mfb/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace mfb {

// --------------------------------------------------------------- expressions

namespace {

struct Parser {
    std::string text;
    std::size_t pos = 0;
    std::map<std::string, BivarPoly> vars;

    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw SchemaError(msg + " at position " + std::to_string(pos) + " in \"" + text + "\"");
    }

    BivarPoly expr() {
        BivarPoly acc = term();
        while (true) {
            skip();
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }
    BivarPoly term() {
        BivarPoly acc = factor();
        while (true) {
            skip();
            if (eat('*'))
                acc = acc * factor();
            else
                break;
        }
        return acc;
    }
    BivarPoly factor() {
        BivarPoly base = atom();
        skip();
        if (eat('^')) {
            long e = integer();
            if (e < 0) fail("negative exponent");
            BivarPoly acc = BivarPoly::constant(NFElem(1));
            for (long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }
    long integer() {
        skip();
        bool neg = eat('-');
        skip();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer");
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        if (pos < text.size() && (text[pos] == '.' || text[pos] == 'e' || text[pos] == 'E'))
            fail("floating-point literals are not accepted");
        return neg ? -v : v;
    }
    BivarPoly atom() {
        skip();
        if (eat('(')) {
            BivarPoly inner = expr();
            if (!eat(')')) fail("missing )");
            return inner;
        }
        if (eat('-')) return -factor(); // unary minus binds looser than ^
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            long num = integer();
            if (eat('/')) {
                long den = integer();
                if (den == 0) fail("division by zero");
                return BivarPoly::constant(NFElem(Rat(num) / Rat(den)));
            }
            return BivarPoly::constant(NFElem(Rat(num)));
        }
        if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) ||
                                  text[pos] == '_')) {
            std::string name;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                         text[pos] == '_')) {
                name += text[pos];
                ++pos;
            }
            auto it = vars.find(name);
            if (it == vars.end()) fail("unknown symbol '" + name + "'");
            return it->second;
        }
        fail("unexpected character");
    }
};

BivarPoly parse_with(const std::string& text, std::map<std::string, BivarPoly> vars) {
    Parser p;
    p.text = text;
    p.vars = std::move(vars);
    BivarPoly out = p.expr();
    p.skip();
    if (p.pos != p.text.size()) p.fail("trailing input");
    return out;
}

} // namespace

QPoly parse_minimal_polynomial(const std::string& text, const std::string& var) {
    BivarPoly b = parse_with(text, {{var, BivarPoly::variable_s()}});
    std::vector<Rat> coeffs;
    for (auto& [k, c] : b.terms()) {
        if (k.second != 0) throw SchemaError("minimal polynomial must be univariate");
        if (!c.is_rational()) throw SchemaError("minimal polynomial must have rational entries");
        if (static_cast<long>(coeffs.size()) <= k.first) coeffs.resize(k.first + 1);
        coeffs[static_cast<std::size_t>(k.first)] = c.rational_value();
    }
    return QPoly(std::move(coeffs));
}

BivarPoly parse_curve(const std::string& text, const FieldPtr& field) {
    std::map<std::string, BivarPoly> vars{{"s", BivarPoly::variable_s()},
                                          {"t", BivarPoly::variable_t()}};
    if (!field->is_rationals())
        vars[field->generator_name()] = BivarPoly::constant(field->generator());
    return parse_with(text, vars);
}

Series parse_series_literal(const std::string& text, const FieldPtr& field) {
    // parameter is written "t" in branch literals
    std::map<std::string, BivarPoly> vars{{"t", BivarPoly::variable_s()}};
    if (!field->is_rationals())
        vars[field->generator_name()] = BivarPoly::constant(field->generator());
    BivarPoly b = parse_with(text, vars);
    std::vector<std::pair<long, NFElem>> terms;
    for (auto& [k, c] : b.terms()) {
        if (k.second != 0) throw SchemaError("branch literal must use only the parameter");
        terms.emplace_back(k.first, c);
    }
    return Series(std::move(terms));
}

// ------------------------------------------------------------------- JSON

nlohmann::ordered_json plumbing_to_json(const PlumbingGraph& g) {
    PlumbingGraph c = g;
    c.canonicalize_edges();
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < c.size(); ++v) {
        nlohmann::ordered_json jv;
        jv["id"] = v;
        jv["euler"] = c.vertices[v].euler;
        if (!c.vertices[v].origin.empty()) jv["origin"] = c.vertices[v].origin;
        if (c.vertices[v].alpha) jv["alpha"] = *c.vertices[v].alpha;
        j["vertices"].push_back(std::move(jv));
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (auto& e : c.edges) {
        nlohmann::ordered_json je;
        je["a"] = e.a;
        je["b"] = e.b;
        je["sign"] = e.sign;
        j["edges"].push_back(std::move(je));
    }
    return j;
}

PlumbingGraph plumbing_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw SchemaError("graph json: missing vertices array");
    std::vector<std::pair<long, nlohmann::json>> verts;
    for (auto& jv : j["vertices"]) {
        if (!jv.contains("id") || !jv.contains("euler") || !jv["id"].is_number_integer() ||
            !jv["euler"].is_number_integer())
            throw SchemaError("graph json: vertex needs integer id and euler");
        verts.emplace_back(jv["id"].get<long>(), jv);
    }
    std::sort(verts.begin(), verts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::map<long, int> index;
    PlumbingGraph g;
    for (auto& [id, jv] : verts) {
        if (index.count(id)) throw SchemaError("graph json: duplicate vertex id");
        index[id] = static_cast<int>(g.size());
        PlumbingGraph::Vertex v;
        v.euler = jv["euler"].get<long>();
        if (jv.contains("origin")) v.origin = jv["origin"].get<std::string>();
        if (jv.contains("alpha")) v.alpha = jv["alpha"].get<long>();
        g.vertices.push_back(std::move(v));
    }
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw SchemaError("graph json: edges must be an array");
        for (auto& je : j["edges"]) {
            if (!je.contains("a") || !je.contains("b"))
                throw SchemaError("graph json: edge needs endpoints a, b");
            long a = je["a"].get<long>(), b = je["b"].get<long>();
            if (!index.count(a) || !index.count(b))
                throw SchemaError("graph json: edge endpoint not a vertex id");
            int sign = je.contains("sign") ? je["sign"].get<int>() : 1;
            if (sign != 1 && sign != -1) throw SchemaError("graph json: sign must be +-1");
            g.add_edge(index[a], index[b], sign);
        }
    }
    g.canonicalize_edges();
    g.validate();
    return g;
}

std::string canonical_graph_text(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::string plumbing_to_dot(const PlumbingGraph& g) {
    std::ostringstream os;
    os << "graph plumbing {\n  node [shape=circle];\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
        os << "  v" << v << " [label=\"e=" << g.vertices[v].euler << "\"";
        if (!g.vertices[v].origin.empty()) os << " tooltip=\"" << g.vertices[v].origin << "\"";
        os << "];\n";
    }
    PlumbingGraph c = g;
    c.canonicalize_edges();
    for (auto& e : c.edges) {
        os << "  v" << e.a << " -- v" << e.b;
        if (e.sign < 0) os << " [style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

nlohmann::ordered_json resolution_to_json(const ResolutionGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        nlohmann::ordered_json jv;
        jv["id"] = v;
        jv["euler"] = g.euler[v];
        j["vertices"].push_back(std::move(jv));
    }
    j["edges"] = nlohmann::ordered_json::array();
    std::vector<std::pair<int, int>> edges = g.edges;
    std::sort(edges.begin(), edges.end());
    for (auto& [a, b] : edges) j["edges"].push_back({a, b});
    j["arrowheads"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < g.arrowheads.size(); ++k) {
        nlohmann::ordered_json ja;
        ja["id"] = g.arrowheads[k].branch + 1;
        ja["attach"] = g.arrowheads[k].attach;
        if (k < g.multiplicities.size()) {
            ja["m"] = nlohmann::ordered_json::array();
            for (auto& m : g.multiplicities[k]) ja["m"].push_back(to_long(m));
        }
        j["arrowheads"].push_back(std::move(ja));
    }
    return j;
}

std::string resolution_to_dot(const ResolutionGraph& g) {
    std::ostringstream os;
    os << "graph resolution {\n  node [shape=circle];\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        os << "  v" << v << " [label=\"e=" << g.euler[v] << "\"];\n";
    for (auto& ah : g.arrowheads)
        os << "  a" << (ah.branch + 1) << " [shape=rarrow, label=\"D" << (ah.branch + 1)
           << "\"];\n";
    std::vector<std::pair<int, int>> edges = g.edges;
    std::sort(edges.begin(), edges.end());
    for (auto& [a, b] : edges) os << "  v" << a << " -- v" << b << ";\n";
    for (auto& ah : g.arrowheads) os << "  v" << ah.attach << " -- a" << (ah.branch + 1) << ";\n";
    os << "}\n";
    return os.str();
}

// ------------------------------------------------------------------ input

namespace {

FieldPtr field_from_json(const nlohmann::json& j) {
    if (j.is_null()) return NumberField::rationals();
    if (!j.is_object() || !j.contains("generator") || !j.contains("minpoly"))
        throw SchemaError("field needs generator and minpoly");
    std::string gen = j["generator"].get<std::string>();
    if (gen == "s" || gen == "t" || gen == "x")
        throw SchemaError("field generator must not shadow s, t or x");
    QPoly mp = parse_minimal_polynomial(j["minpoly"].get<std::string>());
    if (mp.degree() == 1) return NumberField::rationals();
    try {
        return NumberField::create(gen, mp);
    } catch (UnsupportedDegree&) {
        throw;
    } catch (Error& e) {
        throw SchemaError(e.what());
    }
}

} // namespace

InputSpec parse_input(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("mode")) throw SchemaError("input needs a mode");
    std::string mode = j["mode"].get<std::string>();
    InputSpec in;
    if (mode == "sigma10") {
        in.mode = InputSpec::Mode::sigma10;
        in.field = field_from_json(j.contains("field") ? j["field"] : nlohmann::json());
        if (!j.contains("d") || !j["d"].is_string())
            throw SchemaError("sigma10 input needs the curve expression d");
        in.d = parse_curve(j["d"].get<std::string>(), in.field);
        if (j.contains("branches")) {
            if (!j["branches"].is_array()) throw SchemaError("branches must be an array");
            for (auto& jb : j["branches"]) {
                if (!jb.contains("s") || !jb.contains("t"))
                    throw SchemaError("branch literal needs s and t expressions");
                in.literal_branches.emplace_back(
                    parse_series_literal(jb["s"].get<std::string>(), in.field),
                    parse_series_literal(jb["t"].get<std::string>(), in.field));
            }
        }
        return in;
    }
    if (mode == "combinatorial") {
        in.mode = InputSpec::Mode::combinatorial;
        if (!j.contains("vertices") || !j.contains("arrowheads") || !j.contains("pairs"))
            throw SchemaError("combinatorial input needs vertices, arrowheads and pairs");
        std::map<long, int> index;
        for (auto& jv : j["vertices"]) {
            if (!jv.contains("id") || !jv.contains("euler"))
                throw SchemaError("vertex needs id and euler");
            long id = jv["id"].get<long>();
            if (index.count(id)) throw SchemaError("duplicate vertex id");
            index[id] = static_cast<int>(in.graph.euler.size());
            in.graph.euler.push_back(jv["euler"].get<long>());
        }
        if (j.contains("edges"))
            for (auto& je : j["edges"]) {
                if (!je.is_array() || je.size() != 2) throw SchemaError("edge must be [a, b]");
                long a = je[0].get<long>(), b = je[1].get<long>();
                if (!index.count(a) || !index.count(b))
                    throw SchemaError("edge endpoint not a vertex id");
                int x = index[a], y = index[b];
                if (x > y) std::swap(x, y);
                in.graph.edges.emplace_back(x, y);
            }
        int next_branch = 0;
        for (auto& ja : j["arrowheads"]) {
            if (!ja.contains("id") || !ja.contains("attach"))
                throw SchemaError("arrowhead needs id and attach");
            long id = ja["id"].get<long>();
            if (id != next_branch + 1)
                throw SchemaError("arrowhead ids must be 1..l in order");
            ++next_branch;
            long attach = ja["attach"].get<long>();
            if (!index.count(attach)) throw SchemaError("arrowhead attach not a vertex id");
            in.graph.arrowheads.push_back({static_cast<int>(id) - 1, index[attach]});
            if (ja.contains("m_at_attach"))
                in.m_at_attach.push_back(ja["m_at_attach"].get<long>());
            else
                in.m_at_attach.push_back(std::nullopt);
        }
        for (auto& jp : j["pairs"]) {
            PairData p;
            if (!jp.contains("i") || !jp.contains("sigma_i"))
                throw SchemaError("pair needs i and sigma_i");
            p.i = jp["i"].get<int>();
            p.sigma_i = jp["sigma_i"].get<int>();
            if (jp.contains("vi")) p.vi = jp["vi"].get<long>();
            if (jp.contains("lambda")) {
                if (!jp["lambda"].is_array()) throw SchemaError("lambda must be an array");
                for (auto& l : jp["lambda"]) p.lambda.push_back(l.get<long>());
            }
            if (jp.contains("v")) p.v = jp["v"].get<long>();
            if (jp.contains("alpha")) p.alpha_override = jp["alpha"].get<long>();
            in.pairs.pairs.push_back(std::move(p));
        }
        try {
            in.graph.validate();
            in.pairs.validate(in.graph.arrowheads.size());
        } catch (Error& e) {
            throw SchemaError(e.what());
        }
        return in;
    }
    throw SchemaError("mode must be sigma10 or combinatorial");
}

InputSpec load_input_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw SchemaError("cannot open input file " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (std::exception& e) {
        throw SchemaError(std::string("json parse error: ") + e.what());
    }
    return parse_input(j);
}

// ---------------------------------------------------------------- drivers

namespace {

std::string field_name(const FieldPtr& f) {
    if (f->is_rationals()) return "Q";
    std::ostringstream os;
    os << "Q(" << f->generator_name() << ")";
    return os.str();
}

std::string sigma10_report(const Sigma10Result& res, const Sigma10Germ& germ) {
    std::ostringstream os;
    os << "mode: sigma10\n";
    os << "d = " << germ.d.str() << "  over " << field_name(germ.field) << "\n";
    os << "image equation: f = " << image_equation(germ) << "\n";
    os << "working field: " << field_name(res.field) << "\n";
    os << "branches: " << res.branches.branches.size() << "\n";
    os << "sigma:";
    for (std::size_t i = 0; i < res.sigma.size(); ++i)
        os << " " << (i + 1) << "->" << (res.sigma[i] + 1);
    os << "\n";
    for (std::size_t i = 0; i < res.lambdas.size(); ++i)
        os << "lambda_" << (i + 1) << " = " << res.lambdas[i] << "\n";
    for (std::size_t k = 0; k < res.graph.arrowheads.size(); ++k) {
        auto& ah = res.graph.arrowheads[k];
        os << "m_" << (ah.branch + 1) << "(v(" << (ah.branch + 1)
           << ")) = " << res.graph.multiplicities[k][static_cast<std::size_t>(ah.attach)].get_str()
           << "\n";
    }
    for (auto& p : res.pairing_data.pairs) {
        os << "pair {" << p.i;
        if (p.sigma_i != p.i) os << "," << p.sigma_i;
        os << "}: vi = " << vertical_index(p) << ", alpha = " << alpha(p, res.graph) << "\n";
    }
    os << "crosscaps C(Phi) = " << res.crosscaps << "\n";
    os << "sum identity: lhs = " << res.identity.lhs << ", rhs = " << res.identity.rhs << "  "
       << (res.identity.holds ? "OK" : "FAIL") << "\n";
    os << "H1(boundary) = " << h1(res.boundary.graph).str() << "\n";
    os << "boundary graph: " << res.boundary.graph.size() << " vertices, "
       << res.boundary.graph.edges.size() << " edges\n";
    return os.str();
}

std::string combinatorial_report(const ResolutionGraph& g, const PairingData& pd,
                                 const BoundaryGraph& bg) {
    std::ostringstream os;
    os << "mode: combinatorial\n";
    os << "resolution graph: " << g.vertex_count() << " vertices, " << g.arrowheads.size()
       << " arrowheads\n";
    for (std::size_t k = 0; k < g.arrowheads.size(); ++k) {
        auto& ah = g.arrowheads[k];
        os << "m_" << (ah.branch + 1) << "(v(" << (ah.branch + 1)
           << ")) = " << g.multiplicities[k][static_cast<std::size_t>(ah.attach)].get_str() << "\n";
    }
    for (auto& p : pd.pairs) {
        os << "pair {" << p.i;
        if (p.sigma_i != p.i) os << "," << p.sigma_i;
        os << "}: ";
        if (p.alpha_override)
            os << "alpha = " << *p.alpha_override << " (given)";
        else
            os << "vi = " << vertical_index(p) << ", alpha = " << alpha(p, g);
        os << "\n";
    }
    os << "H1(boundary) = " << h1(bg.graph).str() << "\n";
    os << "boundary graph: " << bg.graph.size() << " vertices, " << bg.graph.edges.size()
       << " edges\n";
    return os.str();
}

BranchSet literal_branch_set(const InputSpec& in) {
    BranchSet bs;
    bs.field = in.field;
    bs.provenance = "user-supplied parametrizations";
    for (auto& [s, t] : in.literal_branches)
        bs.branches.push_back(Branch::exact(in.field, s, t));
    return bs;
}

} // namespace

ComputeOutput run_compute(const InputSpec& in) {
    ComputeOutput out;
    if (in.mode == InputSpec::Mode::sigma10) {
        Sigma10Germ germ = Sigma10Germ::create(in.d, in.field);
        Sigma10Result res = in.literal_branches.empty()
                                ? compute_boundary(germ)
                                : compute_boundary_with_branches(germ, literal_branch_set(in));
        out.graph = res.graph;
        out.boundary = res.boundary;
        out.report = sigma10_report(res, germ);
        return out;
    }
    ResolutionGraph g = in.graph;
    try {
        compute_multiplicities(g);
        for (std::size_t k = 0; k < in.m_at_attach.size(); ++k) {
            if (!in.m_at_attach[k]) continue;
            Int got = g.multiplicities[k][static_cast<std::size_t>(g.arrowheads[k].attach)];
            if (got != *in.m_at_attach[k])
                throw Error("supplied m_at_attach for arrowhead " + std::to_string(k + 1) +
                            " is " + std::to_string(*in.m_at_attach[k]) + " but Eq-solve gives " +
                            got.get_str());
        }
        out.boundary = build_boundary_graph(g, in.pairs);
    } catch (StageError&) {
        throw;
    } catch (Error& e) {
        throw StageError("boundary", e.what());
    }
    out.graph = g;
    out.report = combinatorial_report(g, in.pairs, out.boundary);
    return out;
}

ResolutionGraph run_resolve(const InputSpec& in) {
    if (in.mode == InputSpec::Mode::combinatorial) {
        ResolutionGraph g = in.graph;
        try {
            compute_multiplicities(g);
        } catch (Error& e) {
            throw StageError("multiplicities", e.what());
        }
        return g;
    }
    try {
        Sigma10Germ germ = Sigma10Germ::create(in.d, in.field);
        BranchSet bs;
        if (in.literal_branches.empty()) {
            auto ex = expand(germ.d, germ.field, 24);
            bs = std::move(ex.branches);
        } else {
            bs = literal_branch_set(in);
        }
        return resolve(bs);
    } catch (StageError&) {
        throw;
    } catch (Error& e) {
        throw StageError("resolve", e.what());
    }
}

} // namespace mfb
