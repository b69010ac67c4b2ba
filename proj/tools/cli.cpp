#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "linlayout/bounds.hpp"
#include "linlayout/constructions.hpp"
#include "linlayout/exact.hpp"
#include "linlayout/graph.hpp"
#include "linlayout/hex_lemma.hpp"
#include "linlayout/layout.hpp"
#include "linlayout/refuter.hpp"
#include "linlayout/svg.hpp"
#include "linlayout/text_io.hpp"

namespace linlayout::cli {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return in;
}

Graph load_graph(const std::string& path) {
    auto in = open_input(path);
    try {
        return read_graph(in);
    } catch (const ParseError& e) {
        throw IoError(path + ": " + e.what());
    }
}

LinearLayout load_layout(const std::string& path) {
    auto in = open_input(path);
    try {
        return read_layout(in);
    } catch (const ParseError& e) {
        throw IoError(path + ": " + e.what());
    }
}

// Empty path or "-" means the standard output stream.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    file << content;
    if (!file) throw IoError("cannot write '" + path + "'");
}

LayoutKind parse_kind(const std::string& text) {
    if (text == "stack") return LayoutKind::stack;
    if (text == "queue") return LayoutKind::queue;
    throw CLI::ValidationError("--kind", "expected 'stack' or 'queue', got '" + text + "'");
}

std::string pages_phrase(LayoutKind kind, int pages) {
    return std::to_string(pages) + ' ' + to_string(kind) + (pages == 1 ? "" : "s");
}

std::string edge_text(const Edge& e) { return std::to_string(e.u) + '-' + std::to_string(e.v); }

struct Options {
    std::string output;
    std::string graph;
    std::string layout;
    std::string colouring;
    std::string trace;
    std::string kind = "stack";
    std::string op;
    std::string g1, l1, g2, l2;
    std::vector<std::string> inputs;
    int n = 0;
    int s = 0;
    int pages = 2;
    std::size_t b = 0;
    std::size_t k = 1;
    std::size_t max_vertices = ExactOptions{}.max_vertices;
    std::uint64_t budget = SearchOptions{}.budget;
    std::uint64_t seed = default_search_seed;
    double max_bits = default_max_parameter_bits;
    bool certificate = false;
};

int cmd_verify(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.graph);
    const LinearLayout layout = load_layout(o.layout);
    require_matches(g, layout);
    const auto violations = verify_layout(g, layout);
    if (violations.empty()) {
        out << "valid, " << pages_phrase(layout.kind(), layout.page_count()) << '\n';
        return 0;
    }
    out << "invalid, " << violations.size() << " violation" << (violations.size() == 1 ? "" : "s") << '\n';
    for (const auto& v : violations) out << describe(v) << '\n';
    return 1;
}

int cmd_hexpath(const Options& o, std::ostream& out) {
    auto in = open_input(o.colouring);
    int n = 0;
    Colouring colouring;
    try {
        colouring = read_colouring(in, n);
    } catch (const ParseError& e) {
        throw IoError(o.colouring + ": " + e.what());
    }
    const GridPath path = find_monochromatic_path(n, colouring);
    out << to_string(path.colour) << " path, " << path.vertices.size() << " vertices:";
    for (Vertex v : path.vertices) out << ' ' << v;
    out << '\n';
    return 0;
}

int cmd_refute(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.graph);
    const LinearLayout layout = load_layout(o.layout);
    const RefutationOutcome outcome = refute(g, layout, o.s);
    if (!o.trace.empty()) {
        std::ostringstream trace;
        write_trace(trace, outcome);
        emit(o.trace, trace.str(), out);
    }
    const RefutationReport& r = outcome.report;
    if (outcome.certificate) {
        const ViolationCertificate& c = *outcome.certificate;
        out << "certificate (" << outcome.certificate_stage << "): " << edge_text(c.first) << " and "
            << edge_text(c.second) << " cross on page " << c.page << '\n';
        return 1;
    }
    out << "report: b=" << r.leaves << " n=" << r.n << " s=" << r.s << " a=" << r.a << " c=" << r.c
        << " d=" << r.d << " path=" << to_string(r.path_colour) << '/' << r.path_length
        << " family=" << r.family_size << " guarantee=" << r.guarantee << '\n';
    return 0;
}

int cmd_exact(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.graph);
    const LayoutKind kind = parse_kind(o.kind);
    const ExactResult result = exact_page_number(g, kind, ExactOptions{o.max_vertices});
    out << to_string(kind) << " number " << result.count << " (orders examined " << result.stats.orders_examined
        << ")\n";
    if (!o.output.empty()) emit(o.output, layout_to_string(result.witness), out);
    return 0;
}

int cmd_params(const Options& o, std::ostream& out) {
    const RequiredParameters p = required_parameters(o.s, o.max_bits);
    out << "s=" << p.s << '\n' << "n=" << p.n << '\n';
    out << "b=" << p.b_formula() << '\n';
    if (p.b) {
        out << "b=" << to_decimal(*p.b) << '\n';
        out << "a>=" << to_decimal(*p.a_bound) << '\n';
        out << "c>=" << to_decimal(*p.c_bound) << '\n';
    } else {
        char estimate[64];
        std::snprintf(estimate, sizeof estimate, "%.6g", p.b_log2);
        out << "b not materialized (about " << estimate << " bits; raise --max-bits)\n";
    }
    out << "d>=" << to_decimal(p.d_bound) << '\n';
    out << "family=" << to_decimal(p.family_size) << '\n';
    return 0;
}

int cmd_render(const Options& o, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(o.graph);
    const LinearLayout layout = load_layout(o.layout);
    require_matches(g, layout);
    const auto violation = first_violation(g, layout);
    if (violation && !o.certificate) {
        err << "layout is invalid: " << describe(*violation) << " (use --certificate to highlight it)\n";
        return 1;
    }
    emit(o.output, render_svg(g, layout, violation), out);
    return 0;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(o.graph);
    SearchOptions options;
    options.budget = o.budget;
    options.seed = o.seed;
    const LayoutKind kind = parse_kind(o.kind);
    const SearchResult result = search_layout(g, kind, o.pages, options);
    if (!result.layout) {
        err << "no " << pages_phrase(kind, o.pages) << " layout found within " << result.evaluations
            << " evaluations\n";
        return 1;
    }
    emit(o.output, layout_to_string(*result.layout), out);
    return 0;
}

int cmd_product_layout(const Options& o, std::ostream& out) {
    const Graph g1 = load_graph(o.g1);
    const Graph g2 = load_graph(o.g2);
    const LinearLayout l1 = load_layout(o.l1);
    const LinearLayout l2 = load_layout(o.l2);
    const LayoutKind kind = parse_kind(o.kind);
    const LinearLayout result = kind == LayoutKind::queue ? product_queue_layout(g1, l1, g2, l2)
                                                          : product_stack_layout(g1, l1, g2, l2);
    emit(o.output, layout_to_string(result), out);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stack and queue layouts of graph products", "linlayout"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto output = [&](CLI::App* cmd, bool required = false) {
        auto* opt = cmd->add_option("-o,--output", o.output, "output file (default: standard output)");
        if (required) opt->required();
    };
    auto graph_in = [&](CLI::App* cmd) { cmd->add_option("--graph", o.graph, "graph file")->required(); };
    auto layout_in = [&](CLI::App* cmd) { cmd->add_option("--layout", o.layout, "layout file")->required(); };
    auto emit_graph = [&](std::function<Graph()> make) {
        return [&, make] {
            emit(o.output, graph_to_string(make()), out);
            return 0;
        };
    };
    auto emit_layout = [&](std::function<LinearLayout()> make) {
        return [&, make] {
            emit(o.output, layout_to_string(make()), out);
            return 0;
        };
    };

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->require_subcommand(1);
    {
        auto* c = gen->add_subcommand("hexgrid", "triangulated n x n grid H_n");
        c->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
        output(c);
        c->callback([&] { action = emit_graph([&] { return make_hex_grid(o.n); }); });

        c = gen->add_subcommand("star", "star with b leaves");
        c->add_option("--b", o.b)->required();
        output(c);
        c->callback([&] { action = emit_graph([&] { return make_star(o.b); }); });

        for (const char* name : {"path", "cycle", "complete"}) {
            c = gen->add_subcommand(name, std::string(name) + " on n vertices");
            c->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
            output(c);
            const std::string which = name;
            c->callback([&, which] {
                action = emit_graph([&, which] {
                    const auto n = static_cast<std::size_t>(o.n);
                    if (which == "path") return make_path(n);
                    if (which == "cycle") return make_cycle(n);
                    return make_complete(n);
                });
            });
        }

        c = gen->add_subcommand("subdivide", "subdivide every edge k times");
        graph_in(c);
        c->add_option("--k", o.k)->required();
        output(c);
        c->callback([&] { action = emit_graph([&] { return subdivide(load_graph(o.graph), o.k); }); });
    }

    // product
    {
        auto* c = app.add_subcommand("product", "cartesian or strong product of two graph files");
        c->add_option("--op", o.op)->required()->check(CLI::IsMember({"cartesian", "strong"}));
        c->add_option("inputs", o.inputs, "two graph files")->required()->expected(2);
        output(c);
        c->callback([&] {
            action = emit_graph([&] {
                const Graph a = load_graph(o.inputs[0]);
                const Graph b = load_graph(o.inputs[1]);
                return o.op == "cartesian" ? cartesian_product(a, b) : strong_product(a, b);
            });
        });
    }

    // layout
    auto* layout = app.add_subcommand("layout", "construct or search for a layout");
    layout->require_subcommand(1);
    {
        auto* c = layout->add_subcommand("hexqueue", "strict 3-queue layout of H_n");
        c->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
        output(c);
        c->callback([&] { action = emit_layout([&] { return hexgrid_strict_queue_layout(o.n); }); });

        c = layout->add_subcommand("starqueue", "1-queue layout of the star with b leaves");
        c->add_option("--b", o.b)->required();
        output(c);
        c->callback([&] { action = emit_layout([&] { return star_queue_layout(o.b); }); });

        c = layout->add_subcommand("fourqueue", "4-queue layout of S_b [] H_n");
        c->add_option("--b", o.b)->required();
        c->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
        output(c);
        c->callback([&] {
            action = emit_layout([&] {
                return product_queue_layout(make_star(o.b), star_queue_layout(o.b), make_hex_grid(o.n),
                                            hexgrid_strict_queue_layout(o.n));
            });
        });

        c = layout->add_subcommand("product", "product layout from factor layouts");
        c->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"stack", "queue"}));
        c->add_option("--g1", o.g1, "first factor graph")->required();
        c->add_option("--l1", o.l1, "first factor layout")->required();
        c->add_option("--g2", o.g2, "second factor graph")->required();
        c->add_option("--l2", o.l2, "second factor layout (strict queue or dispersable stack)")->required();
        output(c);
        c->callback([&] { action = [&] { return cmd_product_layout(o, out); }; });

        c = layout->add_subcommand("search", "randomized search for a layout");
        graph_in(c);
        c->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"stack", "queue"}));
        c->add_option("--pages", o.pages)->required()->check(CLI::PositiveNumber);
        c->add_option("--budget", o.budget, "evaluated orders")->capture_default_str();
        c->add_option("--seed", o.seed)->capture_default_str();
        output(c);
        c->callback([&] { action = [&] { return cmd_search(o, out, err); }; });
    }

    {
        auto* c = app.add_subcommand("verify", "check a layout against a graph");
        graph_in(c);
        layout_in(c);
        c->callback([&] { action = [&] { return cmd_verify(o, out); }; });

        c = app.add_subcommand("hexpath", "monochromatic crossing path of an H_n colouring");
        c->add_option("--colouring", o.colouring, "colouring file")->required();
        c->callback([&] { action = [&] { return cmd_hexpath(o, out); }; });

        c = app.add_subcommand("refute", "run the stack-number lower bound pipeline");
        graph_in(c);
        layout_in(c);
        c->add_option("--s", o.s)->required()->check(CLI::PositiveNumber);
        c->add_option("--trace", o.trace, "trace output file");
        c->callback([&] { action = [&] { return cmd_refute(o, out); }; });

        c = app.add_subcommand("exact", "exact stack or queue number of a small graph");
        graph_in(c);
        c->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"stack", "queue"}));
        c->add_option("--max-vertices", o.max_vertices)->capture_default_str();
        output(c);
        c->callback([&] { action = [&] { return cmd_exact(o, out); }; });

        c = app.add_subcommand("params", "parameters of the lower bound for s stacks");
        c->add_option("--s", o.s)->required()->check(CLI::PositiveNumber);
        c->add_option("--max-bits", o.max_bits, "largest b materialized exactly")->capture_default_str();
        c->callback([&] { action = [&] { return cmd_params(o, out); }; });

        c = app.add_subcommand("render", "SVG arc diagram of a layout");
        graph_in(c);
        layout_in(c);
        c->add_flag("--certificate", o.certificate, "highlight the first violating pair");
        output(c);
        c->callback([&] { action = [&] { return cmd_render(o, out, err); }; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // Help requests exit 0; every other parse failure is a usage error.
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace linlayout::cli
