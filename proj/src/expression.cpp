#include "amoeba/expression.hpp"

#include <cctype>
#include <functional>
#include <optional>

#include "amoeba/constructions.hpp"
#include "amoeba/errors.hpp"

namespace amoeba {

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;
    std::vector<std::string>* warnings;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message + " at position " + std::to_string(pos));
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string identifier() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        if (start == pos) fail("expected a name");
        return text.substr(start, pos - start);
    }

    int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected an integer");
        return std::stoi(text.substr(start, pos - start));
    }

    std::vector<int> integer_set() {
        expect('{');
        std::vector<int> values;
        if (!eat('}')) {
            values.push_back(integer());
            while (eat(',')) values.push_back(integer());
            expect('}');
        }
        return values;
    }

    void warn(const std::string& message) {
        if (warnings) warnings->push_back(message);
    }

    RootedGraph rooted_expr() {
        skip_ws();
        size_t mark = pos;
        std::string name = identifier();
        if (name == "rooted") {
            expect('(');
            Graph g = expr();
            expect(',');
            int root = integer();
            expect(')');
            if (root < 1 || root > g.order()) fail("root out of range");
            return RootedGraph(std::move(g), root - 1);
        }
        if (name == "fib" || name == "fib_tree" || name == "fibonacci_tree") {
            expect('(');
            int i = integer();
            expect(')');
            return fibonacci_tree(i);
        }
        pos = mark;
        fail("expected rooted(...) or fib_tree(...)");
    }

    Graph call(const std::string& name) {
        auto unary_int = [&]() {
            expect('(');
            int v = integer();
            expect(')');
            return v;
        };
        if (name == "path") return path(unary_int());
        if (name == "cycle") return cycle(unary_int());
        if (name == "tadpole") return tadpole(unary_int());
        if (name == "star") return star(unary_int());
        if (name == "complete") return complete(unary_int());
        if (name == "edgeless" || name == "empty") return edgeless(unary_int());
        if (name == "h" || name == "h_graph") return h_graph(unary_int());
        if (name == "g" || name == "g_graph") return g_graph(unary_int());
        if (name == "star_forest") return star_forest(unary_int());
        if (name == "fib" || name == "fib_tree" || name == "fibonacci_tree") {
            return fibonacci_tree(unary_int()).graph;
        }
        if (name == "c5_plus") {
            expect('(');
            expect(')');
            return c5_plus();
        }
        if (name == "complete_minus_matching") {
            expect('(');
            int n = integer();
            expect(',');
            int t = integer();
            expect(')');
            Graph g = complete_minus_matching(n, t);
            bool usual = (t == 1 && n >= 4) || (t >= 2 && n >= 2 * t + 1);
            if (!usual) {
                warn("complete_minus_matching(" + std::to_string(n) + ", " + std::to_string(t) +
                     ") is outside the usual ranges (t=1, n>=4 or t>=2, n>=2t+1)");
            }
            return g;
        }
        if (name == "union") {
            expect('(');
            Graph g = expr();
            expect(',');
            Graph result = disjoint_union(g, expr());
            while (eat(',')) result = disjoint_union(result, expr());
            expect(')');
            return result;
        }
        if (name == "complement") {
            expect('(');
            Graph g = expr();
            expect(')');
            return complement(g);
        }
        if (name == "copy") {
            expect('(');
            Graph g = expr();
            expect(')');
            return g;
        }
        if (name == "add_isolates") {
            expect('(');
            Graph g = expr();
            expect(',');
            int t = integer();
            expect(')');
            return add_isolates(g, t);
        }
        if (name == "plus_edge" || name == "minus_edge") {
            expect('(');
            Graph g = expr();
            expect(',');
            int u = integer();
            expect(',');
            int v = integer();
            expect(')');
            if (u < 1 || v < 1 || u > g.order() || v > g.order()) fail("edge endpoint out of range");
            return name == "plus_edge" ? g.with_edge_added(u - 1, v - 1)
                                       : g.with_edge_removed(u - 1, v - 1);
        }
        if (name == "expand") {
            expect('(');
            Graph g = expr();
            expect(',');
            std::vector<int> glue = integer_set();
            expect(',');
            RootedGraph h = rooted_expr();
            expect(')');
            for (int& p : glue) {
                if (p < 1 || p > g.order()) fail("glue point out of range");
                --p;
            }
            return expand(g, std::move(glue), h).graph;
        }
        if (name == "embed_component") {
            expect('(');
            Graph g = expr();
            expect(')');
            return embed_as_component(g);
        }
        fail("unknown construction '" + name + "'");
    }

    Graph expr() {
        std::string name = identifier();
        try {
            return call(name);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string(e.what()) + " in '" + name + "'");
        }
    }

    Graph parse() {
        Graph g = expr();
        skip_ws();
        if (pos != text.size()) fail("trailing input");
        return g;
    }
};

}  // namespace

Graph parse_construction(const std::string& text, std::vector<std::string>* warnings) {
    Parser parser{text, 0, warnings};
    return parser.parse();
}

std::string construction_grammar() {
    return R"ebnf(expr       = primitive | combinator ;
primitive  = "path(" int ")" | "cycle(" int ")" | "tadpole(" int ")"
           | "star(" int ")" | "complete(" int ")" | "edgeless(" int ")"
           | "complete_minus_matching(" int "," int ")" | "c5_plus()"
           | "h(" int ")" | "g(" int ")" | "fib(" int ")"
           | "star_forest(" int ")" ;
combinator = "union(" expr { "," expr } ")" | "complement(" expr ")"
           | "copy(" expr ")" | "add_isolates(" expr "," int ")"
           | "plus_edge(" expr "," int "," int ")"
           | "minus_edge(" expr "," int "," int ")"
           | "expand(" expr "," set "," rooted ")"
           | "embed_component(" expr ")" ;
rooted     = "rooted(" expr "," int ")" | "fib(" int ")" ;
set        = "{" [ int { "," int } ] "}" ;
)ebnf";
}

}  // namespace amoeba
