// Command-line front end: argument parsing, dispatch into the library, and
// text/JSON/SVG serialization. Exit codes: 0 success, 1 domain error,
// 2 usage or input-syntax error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <epschar/core.hpp>
#include <epschar/degree2.hpp>
#include <epschar/krfrob.hpp>
#include <epschar/paths.hpp>
#include <epschar/snake.hpp>
#include <epschar/svg.hpp>
#include <epschar/tensor.hpp>
#include <epschar/textio.hpp>

using json = nlohmann::ordered_json;
using namespace epschar;

namespace {

struct GlobalOpts {
    int n = 0;
    int ell = 0;
    std::string mode = "eps";
    std::string format = "text";
    std::string out;

    LatticeConfig config() const {
        return LatticeConfig(n, ell, mode == "generic" ? Mode::GenericQ : Mode::RootOfUnity);
    }
};

// Coefficients print as JSON numbers when they fit a 64-bit integer and as
// decimal strings beyond that, so documents stay lossless.
json coeff_json(const Coeff& c) {
    static const Coeff lo = std::numeric_limits<long long>::min();
    static const Coeff hi = std::numeric_limits<long long>::max();
    if (c >= lo && c <= hi) return json(c.convert_to<long long>());
    return json(c.str());
}

json monomial_json(const Monomial& m) {
    json arr = json::array();
    for (const auto& [key, e] : m.factors()) arr.push_back({key.node, key.spectral, e});
    return arr;
}

json config_json(const GlobalOpts& g) {
    return {{"n", g.n}, {"ell", g.ell}, {"mode", g.mode == "generic" ? "generic" : "eps"}};
}

json character_document(const Character& c, const GlobalOpts& g) {
    json terms = json::array();
    Coeff dimension = 0;
    long long dominant = 0;
    for (const auto& [m, coeff] : c.terms()) {
        terms.push_back({{"monomial", monomial_json(m)}, {"coeff", coeff_json(coeff)}});
        dimension += coeff;
        if (is_dominant(m)) ++dominant;
    }
    json doc;
    doc["config"] = config_json(g);
    doc["terms"] = std::move(terms);
    doc["summary"] = {{"term_count", c.term_count()},
                      {"dimension", coeff_json(dimension)},
                      {"dominant_terms", dominant}};
    return doc;
}

void write_out(const std::string& content, const GlobalOpts& g) {
    if (g.out.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw domain_error("cannot open output file " + g.out);
    f << content;
}

void emit_character(const Character& c, const GlobalOpts& g) {
    if (g.format == "json")
        write_out(character_document(c, g).dump(2) + "\n", g);
    else
        write_out(format_character(c), g);
}

void emit_json_or_text(const json& doc, const std::string& text, const GlobalOpts& g) {
    if (g.format == "json")
        write_out(doc.dump(2) + "\n", g);
    else
        write_out(text, g);
}

// Factor lists for the irreducibility screen: "(i,xi)" pairs joined by
// commas, whitespace ignored, byte offsets reported on malformed input.
std::vector<FundamentalFactor> parse_factor_list(std::string_view text) {
    std::vector<FundamentalFactor> out;
    size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw parse_error(std::string("expected '") + c + "'", pos);
        ++pos;
    };
    auto parse_int = [&]() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw parse_error("expected an integer", start);
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    skip_ws();
    if (pos == text.size()) throw parse_error("empty factor list", pos);
    while (true) {
        expect('(');
        int i = parse_int();
        expect(',');
        int xi = parse_int();
        expect(')');
        out.push_back({i, xi});
        skip_ws();
        if (pos == text.size()) break;
        expect(',');
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    CLI::App app{"Exact character computations on the spectral lattice"};
    app.require_subcommand(1);
    app.add_option("--n", g.n, "rank (number of nodes)")->required();
    app.add_option("--ell", g.ell, "half-period of the spectral lattice")->required();
    app.add_option("--mode", g.mode, "eps (root of unity) or generic")
        ->check(CLI::IsMember({"eps", "generic"}))
        ->capture_default_str();
    app.add_option("--format", g.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--out", g.out, "write output to this file instead of stdout");

    int i = 0, k = 0, j = 0, v = 0, z = 0;
    std::string monomial_text, factors_text;

    CLI::App* fundamental = app.add_subcommand("fundamental", "character of one variable");
    fundamental->add_option("--i", i, "node")->required();
    fundamental->add_option("--k", k, "spectral index")->required();

    CLI::App* degree2 = app.add_subcommand("degree2", "character of a degree-two monomial");
    degree2->add_option("--i", i, "first node")->required();
    degree2->add_option("--k", k, "first spectral index")->required();
    degree2->add_option("--j", j, "second node")->required();
    degree2->add_option("--v", v, "second spectral index")->required();

    CLI::App* kr = app.add_subcommand("kr", "character of a same-node spectral run");
    kr->add_option("--i", i, "node")->required();
    kr->add_option("--k", k, "starting spectral index")->required();
    kr->add_option("--z", z, "run length")->required();

    CLI::App* chr = app.add_subcommand("char", "character of a dominant monomial");
    chr->add_option("--monomial", monomial_text, "dominant monomial text")->required();

    CLI::App* snk = app.add_subcommand("snakify", "spread a monomial into a snake");
    snk->add_option("--monomial", monomial_text, "dominant monomial text")->required();

    CLI::App* trans = app.add_subcommand("translations", "translation targets of a pair");
    trans->add_option("--i", i, "first node")->required();
    trans->add_option("--k", k, "first spectral index")->required();
    trans->add_option("--j", j, "second node")->required();
    trans->add_option("--v", v, "second spectral index")->required();

    CLI::App* paths = app.add_subcommand("paths", "enumerate the path family of a variable");
    paths->add_option("--i", i, "node")->required();
    paths->add_option("--k", k, "spectral index")->required();

    CLI::App* irr = app.add_subcommand("irreducible", "tensor irreducibility screen");
    irr->add_option("--factors", factors_text, "list like \"(3,0),(6,7)\"")->required();

    CLI::App* dec = app.add_subcommand("decompose", "split off full spectral orbits");
    dec->add_option("--monomial", monomial_text, "dominant monomial text")->required();

    CLI::App* render = app.add_subcommand("render", "SVG picture of a path family");
    render->add_option("--i", i, "node")->required();
    render->add_option("--k", k, "spectral index")->required();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        LatticeConfig cfg = g.config();

        if (fundamental->parsed()) {
            emit_character(fundamental_eps_character(i, k, cfg), g);
        } else if (degree2->parsed()) {
            emit_character(degree2_char(i, k, j, v, cfg), g);
        } else if (kr->parsed()) {
            emit_character(kr_char_general(i, k, z, cfg), g);
        } else if (chr->parsed()) {
            emit_character(full_char(parse_monomial(monomial_text, cfg), cfg), g);
        } else if (snk->parsed()) {
            SnakifyResult r = snakify(parse_monomial(monomial_text, cfg), cfg);
            SnakeClass cls = classify(r.snake, cfg);
            json points = json::array();
            std::string text = "snake:";
            for (const SnakePoint& p : r.snake.points) {
                points.push_back({p.i, p.k});
                text += " (" + std::to_string(p.i) + "," + std::to_string(p.k) + ")";
            }
            text += "\nreduced: " + format_monomial(r.reduced) + "\n";
            json doc;
            doc["config"] = config_json(g);
            doc["points"] = std::move(points);
            doc["reduced"] = format_monomial(r.reduced);
            doc["class"] = {{"snake", cls.is_snake},
                            {"minimal", cls.is_minimal},
                            {"prime", cls.is_prime}};
            emit_json_or_text(doc, text, g);
        } else if (trans->parsed()) {
            NormalizedPair np = normalize_small_values(i, k, j, v, cfg);
            std::vector<TranslationTarget> targets = translation_targets(np, cfg);
            json list = json::array();
            std::string text;
            for (const TranslationTarget& tt : targets) {
                Monomial m = target_monomial(tt, cfg);
                list.push_back(
                    {{"t", tt.t}, {"kprime", tt.kprime}, {"monomial", format_monomial(m)}});
                text += "t" + std::to_string(tt.t) + ": k'=" + std::to_string(tt.kprime) +
                        " -> " + format_monomial(m) + "\n";
            }
            if (targets.empty()) text = "no targets\n";
            json doc;
            doc["config"] = config_json(g);
            doc["normalized"] = {{"i", np.i},
                                 {"k", np.k},
                                 {"j", np.j},
                                 {"vbar", np.vbar},
                                 {"swapped", np.swapped}};
            doc["targets"] = std::move(list);
            emit_json_or_text(doc, text, g);
        } else if (paths->parsed()) {
            std::vector<Path> family = enumerate_paths(i, k, cfg);
            json list = json::array();
            std::string text = "count: " + std::to_string(family.size()) + "\n";
            for (const Path& p : family) {
                list.push_back(p.ys);
                std::string line;
                for (int y : p.ys) {
                    if (!line.empty()) line += " ";
                    line += std::to_string(y);
                }
                text += line + "\n";
            }
            json doc;
            doc["config"] = config_json(g);
            doc["i"] = i;
            doc["k"] = k;
            doc["count"] = family.size();
            doc["paths"] = std::move(list);
            emit_json_or_text(doc, text, g);
        } else if (irr->parsed()) {
            std::vector<FundamentalFactor> fs = parse_factor_list(factors_text);
            TupleIrreducibility r = tuple_irreducibility_necessary(fs, cfg);
            std::string verdict =
                fs.size() == 2 ? (r.pairwise_ok ? "irreducible" : "reducible") : r.label();
            json flist = json::array();
            for (const FundamentalFactor& f : fs) flist.push_back({f.i, f.xi});
            json doc;
            doc["config"] = config_json(g);
            doc["factors"] = std::move(flist);
            doc["verdict"] = verdict;
            emit_json_or_text(doc, verdict + "\n", g);
        } else if (dec->parsed()) {
            auto [rest, bold] = acyclic_factor(parse_monomial(monomial_text, cfg), cfg);
            json orbits = json::array();
            std::string text;
            for (int node = 1; node <= cfg.n; ++node) {
                if (bold.mult[node] == 0) continue;
                orbits.push_back({{"node", node},
                                  {"mult", bold.mult[node]},
                                  {"parity", bold.parity[node]}});
                text += "node " + std::to_string(node) + ": orbits=" +
                        std::to_string(bold.mult[node]) + " parity=" +
                        std::to_string(bold.parity[node]) + "\n";
            }
            if (orbits.empty()) text = "no full orbits\n";
            text += "rest: " + format_monomial(rest) + "\n";
            json doc;
            doc["config"] = config_json(g);
            doc["orbits"] = std::move(orbits);
            doc["expansion"] = format_monomial(bold.expansion(cfg));
            doc["rest"] = format_monomial(rest);
            emit_json_or_text(doc, text, g);
        } else if (render->parsed()) {
            write_out(render_svg(enumerate_paths(i, k, cfg), cfg), g);
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
